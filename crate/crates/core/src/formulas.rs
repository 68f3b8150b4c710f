//! Closed-form clique and edge counts, evaluated exactly.

use crate::error::{Error, Result};
use num_rational::Ratio;

/// Exact rational used for the edge bounds.
pub type Rational = Ratio<i128>;

/// Binomial coefficient, zero when `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> u128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut r: u128 = 1;
    for i in 0..b {
        r = r * (a - i) / (i + 1);
    }
    r
}

fn domain(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfDomain(what()))
    }
}

/// `floor((k-1)/2)`.
pub fn ell(k: i64) -> Result<i64> {
    domain(k >= 5, || format!("k={k} must be at least 5"))?;
    Ok((k - 1) / 2)
}

/// Number of `s`-cliques of `H(n,k,a)`.
pub fn h_s(n: i64, k: i64, a: i64, s: i64) -> Result<u128> {
    domain(n >= k && k >= 2 * a && a >= 1 && s >= 2, || {
        format!("h_s needs n >= k >= 2a >= 2 and s >= 2, got n={n} k={k} a={a} s={s}")
    })?;
    Ok(binom(k - a, s) + (n - k + a) as u128 * binom(a, s - 1))
}

/// The count `f_s(n,k,r)` bounding the cliques around a family member.
pub fn f_s(n: i64, k: i64, r: i64, s: i64) -> Result<u128> {
    domain(n >= k && k >= 9 && s >= 2, || {
        format!("f_s needs n >= k >= 9 and s >= 2, got n={n} k={k} s={s}")
    })?;
    let l = ell(k)?;
    domain(1 <= r && r <= l - 2, || {
        format!("f_s needs 1 <= r <= {}, got r={r}", l - 2)
    })?;
    let c = l - r + 1;
    Ok(binom(k - l, s) + binom(l + 1, s) - binom(c, s) + (n - k + l - r) as u128 * binom(c, s - 1))
}

/// The count `g_s(n,k,3)` with its parity term.
pub fn g_s(n: i64, k: i64, s: i64) -> Result<u128> {
    domain(k >= 10 && k % 2 == 0 && n >= k && s >= 2, || {
        format!("g_s needs even k >= 10, n >= k, s >= 2, got n={n} k={k} s={s}")
    })?;
    let l = ell(k)?;
    let i = ((n - k + 3) % 2) as u128;
    Ok(2 * binom(l + 1, s) - binom(3, s) + ((n - k + 3) / 2) as u128 * (binom(5, s) - binom(3, s)) + i * binom(4, s))
}

/// `max{h_s(n,k,a1), h_s(n,k,a2)}`.
pub fn bound_pair_max(n: i64, k: i64, a1: i64, a2: i64, s: i64) -> Result<u128> {
    Ok(h_s(n, k, a1, s)?.max(h_s(n, k, a2, s)?))
}

/// Edge bound for graphs whose longest `a`-`b` path has at most `r` vertices.
pub fn fan_bound(r: i64, n: i64) -> Result<Rational> {
    domain(r >= 4 && n >= 2, || {
        format!("fan_bound needs r >= 4 and n >= 2, got r={r} n={n}")
    })?;
    let (r, n) = (r as i128, n as i128);
    Ok(Rational::new((r - 3) * (n - 2), 2) + Rational::from_integer(2 * n - 3))
}

/// Edge bound `(k-1)(n-1)/2` for graphs with no cycle of length `k` or more.
pub fn eg_bound(k: i64, n: i64) -> Result<Rational> {
    domain(k >= 3 && n >= 1, || {
        format!("eg_bound needs k >= 3 and n >= 1, got k={k} n={n}")
    })?;
    Ok(Rational::new((k as i128 - 1) * (n as i128 - 1), 2))
}

/// Quotient and remainder with `n - 2 = x(r-3) + t`, `0 <= t <= r-4`.
pub fn conjecture_split(n: i64, r: i64) -> Result<(i64, i64)> {
    domain(r >= 4 && n >= 2, || {
        format!("conjecture split needs r >= 4 and n >= 2, got r={r} n={n}")
    })?;
    Ok(((n - 2) / (r - 3), (n - 2) % (r - 3)))
}

/// Clique-count threshold `x C(r-1,s) + C(t+2,s)`.
pub fn conjecture_bound(n: i64, r: i64, s: i64) -> Result<u128> {
    domain(s >= 2, || format!("conjecture_bound needs s >= 2, got s={s}"))?;
    let (x, t) = conjecture_split(n, r)?;
    Ok(x as u128 * binom(r - 1, s) + binom(t + 2, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_edges() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(5, 0), 1);
        assert_eq!(binom(3, 4), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell(9).unwrap(), 4);
        assert_eq!(ell(10).unwrap(), 4);
        assert_eq!(ell(5).unwrap(), 2);
        assert!(matches!(ell(4), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn h_values() {
        for n in 9..40 {
            assert_eq!(h_s(n, 9, 3, 2).unwrap(), (3 * n - 3) as u128);
        }
        assert_eq!(h_s(15, 9, 3, 2).unwrap(), 42);
        assert_eq!(h_s(12, 9, 3, 3).unwrap(), 38);
        assert_eq!(h_s(9, 9, 3, 7).unwrap(), 0);
        assert!(h_s(8, 9, 3, 2).is_err());
        assert!(h_s(9, 9, 5, 2).is_err());
        // k = 10 gives 3n, not 3n - 3.
        assert_eq!(h_s(20, 10, 3, 2).unwrap(), 60);
    }

    #[test]
    fn f_values() {
        assert_eq!(f_s(12, 9, 2, 2).unwrap(), 32);
        assert_eq!(h_s(12, 9, 3, 2).unwrap(), 33);
        assert_eq!(f_s(9, 9, 2, 5).unwrap(), binom(5, 5) + binom(5, 5) - binom(3, 5));
        assert!(f_s(12, 9, 3, 2).is_err());
        assert!(f_s(12, 8, 1, 2).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(g_s(13, 10, 2).unwrap(), 2 * 10 - 3 + 3 * 7);
        assert_eq!(g_s(14, 10, 2).unwrap(), 2 * 10 - 3 + 3 * 7 + 6);
        assert_eq!(g_s(13, 10, 2).unwrap(), 38);
        assert_eq!(g_s(14, 10, 2).unwrap(), 44);
        assert!(g_s(13, 11, 2).is_err());
        for n in 10..=30 {
            for s in 2..=3 {
                assert!(g_s(n, 10, s).unwrap() <= h_s(n, 10, 4, s).unwrap(), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn pair_max() {
        assert_eq!(h_s(20, 9, 2, 2).unwrap(), 47);
        assert_eq!(bound_pair_max(20, 9, 3, 2, 2).unwrap(), 57);
        assert_eq!(bound_pair_max(20, 9, 3, 3, 2).unwrap(), h_s(20, 9, 3, 2).unwrap());
        assert_eq!(bound_pair_max(9, 9, 3, 2, 2).unwrap(), 25);
    }

    #[test]
    fn edge_bounds() {
        assert_eq!(fan_bound(6, 10).unwrap(), Rational::from_integer(29));
        assert_eq!(fan_bound(5, 3).unwrap(), Rational::from_integer(4));
        assert_eq!(fan_bound(4, 3).unwrap(), Rational::new(7, 2));
        assert!(matches!(fan_bound(3, 10), Err(Error::OutOfDomain(_))));
        assert_eq!(eg_bound(5, 11).unwrap(), Rational::from_integer(20));
        assert_eq!(eg_bound(4, 4).unwrap(), Rational::new(9, 2));
        assert_eq!(conjecture_split(10, 6).unwrap(), (2, 2));
        assert_eq!(conjecture_bound(10, 6, 2).unwrap(), 26);
    }
}
