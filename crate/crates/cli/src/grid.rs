//! Integer lists written as `3`, `3..9` (inclusive) or `2,4..6`.

use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct List(pub Vec<usize>);

impl FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if let Some((a, b)) = part.split_once("..") {
                let a = num(a)?;
                let b = num(b.strip_prefix('=').unwrap_or(b))?;
                if a > b {
                    return Err(format!("empty range {part}"));
                }
                out.extend(a..=b);
            } else {
                out.push(num(part)?);
            }
        }
        Ok(List(out))
    }
}

fn num(s: &str) -> Result<usize, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not a non-negative integer: {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_lists() {
        assert_eq!("9..15".parse::<List>().unwrap().0, (9..=15).collect::<Vec<_>>());
        assert_eq!("2,4..6".parse::<List>().unwrap().0, vec![2, 4, 5, 6]);
        assert_eq!("3..=4".parse::<List>().unwrap().0, vec![3, 4]);
        assert_eq!("7".parse::<List>().unwrap().0, vec![7]);
        assert!("5..3".parse::<List>().is_err());
        assert!("".parse::<List>().is_err());
        assert!("x".parse::<List>().is_err());
    }
}
