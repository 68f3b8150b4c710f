//! The forbidden family `K_{k,alpha}`.

use super::build_f_ell;
use super::members::{build_special, enumerate_family, SpecialTag};
use crate::algorithms::{contains_subgraph, Embedding};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFamilySpec {
    pub k: usize,
    pub alpha: usize,
    /// Largest member order generated by the general item; `None` means `k+1`.
    pub m_max: Option<usize>,
}

impl KFamilySpec {
    pub fn new(k: usize, alpha: usize) -> Self {
        KFamilySpec { k, alpha, m_max: None }
    }

    pub fn ell(&self) -> usize {
        (self.k - 1) / 2
    }

    fn validate(&self) -> Result<()> {
        if self.k < 5 {
            return Err(Error::InvalidParameters(format!("k={} must be at least 5", self.k)));
        }
        let l = self.ell();
        if self.alpha > 0 && self.alpha + 2 > l {
            return Err(Error::InvalidParameters(format!(
                "alpha={} must lie in 0..={} for k={}",
                self.alpha,
                l.saturating_sub(2),
                self.k
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFamilyMember {
    /// Item letter `a`..`e` that first produced the member.
    pub item: char,
    /// Human-readable name, e.g. `F(10,10,1)` or `F5(10,10,2)`.
    pub name: String,
    pub canonical: String,
    pub graph: Graph,
}

impl KFamilyMember {
    pub fn id(&self) -> String {
        format!("({}) {} {}", self.item, self.name, self.canonical)
    }
}

/// All members with at most `m_max` vertices (the `F4` item is always kept),
/// ordered by order then canonical form. Empty for `alpha = 0`.
pub fn enumerate_k_family(spec: &KFamilySpec) -> Result<Vec<KFamilyMember>> {
    spec.validate()?;
    if spec.alpha == 0 {
        return Ok(Vec::new());
    }
    let (k, alpha, l) = (spec.k, spec.alpha, spec.ell());
    let m_max = spec.m_max.unwrap_or(k + 1).max(k);
    let even = k % 2 == 0;
    let mut raw: Vec<(char, String, Graph)> = Vec::new();

    let mut rs: Vec<usize> = (1..=alpha).collect();
    rs.push(l - 1);
    if even {
        rs.push(l);
    }
    rs.dedup();
    for m in k..=m_max {
        for &r in &rs {
            for (_, g) in enumerate_family(m, k, r)? {
                raw.push(('a', format!("F({m},{k},{r})"), g));
            }
        }
    }
    if even && k >= 10 && l - alpha <= 3 {
        raw.push((
            'b',
            format!("F0({k},{k},{})", l - 2),
            build_special(SpecialTag::F0, k, k, l - 2)?.1,
        ));
        raw.push((
            'b',
            format!("F4({},{k},{})", k + 1, l - 2),
            build_special(SpecialTag::F4, k + 1, k, l - 2)?.1,
        ));
    }
    if even && alpha + 1 + 2 <= l {
        let r = alpha + 1;
        for m in k..=m_max {
            for (d, g) in enumerate_family(m, k, r)? {
                if d.special == Some(SpecialTag::F2) {
                    raw.push(('c', format!("F2({m},{k},{r})"), g));
                }
            }
        }
    }
    if even && alpha == 1 && 2 < l {
        for m in k..=m_max {
            for (d, g) in enumerate_family(m, k, 2)? {
                if d.special == Some(SpecialTag::F5) {
                    raw.push(('d', format!("F5({m},{k},2)"), g));
                }
            }
        }
    }
    if even {
        raw.push(('e', format!("F({l})"), build_f_ell(l)?));
    }

    let mut seen = HashSet::new();
    let mut out: Vec<KFamilyMember> = Vec::new();
    for (item, name, graph) in raw {
        let canonical = canonical_form(&graph);
        if seen.insert(canonical.clone()) {
            out.push(KFamilyMember {
                item,
                name,
                canonical,
                graph,
            });
        }
    }
    out.sort_by(|x, y| (x.graph.n(), &x.canonical).cmp(&(y.graph.n(), &y.canonical)));
    Ok(out)
}

/// The first member (in [`enumerate_k_family`] order) contained in `g` as a
/// subgraph, with an embedding.
pub fn contains_k_family_member(g: &Graph, spec: &KFamilySpec) -> Result<Option<(KFamilyMember, Embedding)>> {
    let members = enumerate_k_family(spec)?;
    Ok(find_member(g, &members))
}

pub(crate) fn find_member(g: &Graph, members: &[KFamilyMember]) -> Option<(KFamilyMember, Embedding)> {
    members
        .iter()
        .filter(|m| m.graph.n() <= g.n())
        .find_map(|m| contains_subgraph(g, &m.graph).map(|e| (m.clone(), e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::circumference_len;

    #[test]
    fn alpha_zero_is_empty() {
        assert!(enumerate_k_family(&KFamilySpec::new(9, 0)).unwrap().is_empty());
        assert!(enumerate_k_family(&KFamilySpec::new(10, 3)).is_err());
    }

    #[test]
    fn k10_alpha1() {
        let spec = KFamilySpec {
            k: 10,
            alpha: 1,
            m_max: Some(11),
        };
        let fam = enumerate_k_family(&spec).unwrap();
        let f5 = build_special(SpecialTag::F5, 10, 10, 2).unwrap().1;
        let f4 = build_f_ell(4).unwrap();
        let canon: HashSet<String> = fam.iter().map(|m| m.canonical.clone()).collect();
        assert!(canon.contains(&canonical_form(&f5)));
        assert!(canon.contains(&canonical_form(&f4)));
        assert!(fam.iter().all(|m| circumference_len(&m.graph) < 10));
        let hit = contains_k_family_member(&f5, &spec).unwrap();
        assert!(hit.is_some());
    }
}
