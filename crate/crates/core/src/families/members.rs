//! Members of `F(m,k,r)` built from explicit layouts.
//!
//! A layout fixes the sizes of `A` and `B`, the shape of the paths covering
//! `C ∪ D` (as symbol strings over `C` and `D`), any attachments of `D`
//! vertices into `A`, and for the `|A| = r+1` variant the single non-neighbor
//! of each `A` vertex inside `A ∪ C`. Candidates are realized, filtered with
//! [`validate_member`], and deduplicated by canonical form.

use super::validate::validate_member;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};
use crate::par;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for FamilyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyType::I => "I",
            FamilyType::II => "II",
            FamilyType::III => "III",
            FamilyType::IV => "IV",
        };
        f.write_str(s)
    }
}

/// Named members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpecialTag {
    F0,
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl fmt::Display for SpecialTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SpecialTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "F0" | "f0" => SpecialTag::F0,
            "F1" | "f1" => SpecialTag::F1,
            "F2" | "f2" => SpecialTag::F2,
            "F3" | "f3" => SpecialTag::F3,
            "F4" | "f4" => SpecialTag::F4,
            "F5" | "f5" => SpecialTag::F5,
            _ => return Err(Error::Parse(format!("unknown special tag {s:?}"))),
        })
    }
}

/// Where each part sits in a realized member, plus the layout it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub ftype: FamilyType,
    pub m: usize,
    pub k: usize,
    pub r: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    /// Non-adjacent pairs inside `A ∪ C` (only for `|A| = r+1`).
    pub a_missing: Vec<(usize, usize)>,
    /// Edges inside `D`.
    pub d_edges: Vec<(usize, usize)>,
    /// Edges from `D` into `A`.
    pub attachments: Vec<(usize, usize)>,
    /// The paths covering `C ∪ D`; for Type IV the cycle on `C`.
    pub cd_paths: Vec<Vec<usize>>,
    /// Symbol pattern of `cd_paths`, paths separated by `|`.
    pub cd_layout: String,
    pub special: Option<SpecialTag>,
    pub labels: BTreeMap<String, usize>,
}

impl FamilyDescriptor {
    pub fn ell(&self) -> usize {
        (self.k - 1) / 2
    }

    pub fn order(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len() + self.d.len()
    }

    /// Lengths of the maximal runs of `D` vertices along the paths.
    pub fn d_segments(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in &self.cd_paths {
            let mut run = 0;
            for v in p {
                if self.d.contains(v) {
                    run += 1;
                } else if run > 0 {
                    out.push(run);
                    run = 0;
                }
            }
            if run > 0 {
                out.push(run);
            }
        }
        out
    }

    /// The graph this descriptor describes.
    pub fn realize(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        let clique = |vs: &[usize], edges: &mut Vec<(usize, usize)>| {
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    edges.push((u, v));
                }
            }
        };
        let missing: HashSet<(usize, usize)> = self.a_missing.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        match self.ftype {
            FamilyType::IV => {
                clique(&self.a, &mut edges);
                clique(&self.b, &mut edges);
                let cyc = &self.cd_paths[0];
                for i in 0..cyc.len() {
                    edges.push((cyc[i], cyc[(i + 1) % cyc.len()]));
                }
                let (w, w1, w2) = (self.labels["w"], self.labels["w1"], self.labels["w2"]);
                for &a in &self.a {
                    edges.push((a, w1));
                    edges.push((a, w));
                }
                for &b in &self.b {
                    edges.push((b, w2));
                    edges.push((b, w));
                }
            }
            _ => {
                let mut a_side: Vec<usize> = self.a.clone();
                a_side.extend(&self.c);
                let mut a_edges = Vec::new();
                clique(&a_side, &mut a_edges);
                edges.extend(a_edges.into_iter().filter(|&(u, v)| {
                    let both_c = self.c.contains(&u) && self.c.contains(&v);
                    !both_c && !missing.contains(&(u.min(v), u.max(v)))
                }));
                clique(&self.b, &mut edges);
                for &b in &self.b {
                    for &c in &self.c {
                        edges.push((b, c));
                    }
                }
                for p in &self.cd_paths {
                    for w in p.windows(2) {
                        edges.push((w[0], w[1]));
                    }
                }
                edges.extend(&self.attachments);
            }
        }
        Graph::from_edges(self.order(), &edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Miss {
    A(usize),
    C(usize),
}

/// Symbolic layout before vertex ids are assigned.
struct Layout {
    ftype: FamilyType,
    k: usize,
    r: usize,
    a_size: usize,
    b_size: usize,
    paths: Vec<String>,
    /// `(path, position, A index, label of the D vertex, label of the A vertex)`.
    attach: Vec<(usize, usize, usize, &'static str, &'static str)>,
    /// Per `A` vertex, its single non-neighbor in `A ∪ C` when `|A| = r+1`.
    misses: Vec<Miss>,
    /// Type IV: number of cycle vertices strictly between `w2` and `w`.
    w_gap: Option<usize>,
    special: Option<SpecialTag>,
}

impl Layout {
    fn new(ftype: FamilyType, k: usize, r: usize, a_size: usize, paths: Vec<String>) -> Self {
        Layout {
            ftype,
            k,
            r,
            a_size,
            b_size: r,
            paths,
            attach: Vec::new(),
            misses: Vec::new(),
            w_gap: None,
            special: None,
        }
    }

    fn descriptor(&self) -> FamilyDescriptor {
        let nc: usize = self.paths.iter().map(|p| p.matches('C').count()).sum();
        let nd: usize = self.paths.iter().map(|p| p.matches('D').count()).sum();
        let a: Vec<usize> = (0..self.a_size).collect();
        let b: Vec<usize> = (self.a_size..self.a_size + self.b_size).collect();
        let c0 = self.a_size + self.b_size;
        let c: Vec<usize> = (c0..c0 + nc).collect();
        let d: Vec<usize> = (c0 + nc..c0 + nc + nd).collect();
        let (mut ci, mut di) = (0, 0);
        let mut cd_paths = Vec::new();
        for p in &self.paths {
            let mut vs = Vec::new();
            for ch in p.chars() {
                if ch == 'C' {
                    vs.push(c[ci]);
                    ci += 1;
                } else {
                    vs.push(d[di]);
                    di += 1;
                }
            }
            cd_paths.push(vs);
        }
        let mut d_edges = Vec::new();
        for p in &cd_paths {
            for w in p.windows(2) {
                if d.contains(&w[0]) && d.contains(&w[1]) {
                    d_edges.push((w[0].min(w[1]), w[0].max(w[1])));
                }
            }
        }
        let mut labels = BTreeMap::new();
        let mut attachments = Vec::new();
        for &(pi, pos, ai, dl, al) in &self.attach {
            let dv = cd_paths[pi][pos];
            attachments.push((a[ai], dv));
            labels.insert(dl.to_string(), dv);
            labels.insert(al.to_string(), a[ai]);
        }
        let mut a_missing = Vec::new();
        for (i, miss) in self.misses.iter().enumerate() {
            match *miss {
                Miss::A(j) if i < j => a_missing.push((a[i], a[j])),
                Miss::A(_) => {}
                Miss::C(x) => a_missing.push((a[i], c[x])),
            }
        }
        let mut desc = FamilyDescriptor {
            ftype: self.ftype,
            m: self.a_size + self.b_size + nc + nd,
            k: self.k,
            r: self.r,
            a,
            b,
            c,
            d,
            a_missing,
            d_edges,
            attachments,
            cd_paths,
            cd_layout: self.paths.join("|"),
            special: self.special,
            labels,
        };
        if let Some(p) = self.w_gap {
            let cyc = &desc.cd_paths[0];
            let (w1, w2, w) = (cyc[0], cyc[1], cyc[2 + p]);
            desc.labels.insert("w1".into(), w1);
            desc.labels.insert("w2".into(), w2);
            desc.labels.insert("w".into(), w);
        }
        add_path_labels(&mut desc);
        desc
    }
}

/// Labels read off the realized paths: `v, v1, v2` for F0, `y2` for F2,
/// `z2, z2'` for F3 and `u1` for F5.
fn add_path_labels(desc: &mut FamilyDescriptor) {
    match desc.special {
        Some(SpecialTag::F0) => {
            let p = &desc.cd_paths[0];
            for i in 1..p.len() - 1 {
                let is_d = |v: usize| desc.d.contains(&v);
                if is_d(p[i]) && !is_d(p[i - 1]) && !is_d(p[i + 1]) {
                    desc.labels.insert("v".into(), p[i]);
                    desc.labels.insert("v1".into(), p[i - 1]);
                    desc.labels.insert("v2".into(), p[i + 1]);
                    break;
                }
            }
        }
        Some(SpecialTag::F2) => {
            desc.labels.insert("y2".into(), desc.cd_paths[0][1]);
        }
        Some(SpecialTag::F3) => {
            let p = &desc.cd_paths[0];
            desc.labels.insert("z2".into(), p[1]);
            desc.labels.insert("z2'".into(), p[p.len() - 2]);
        }
        Some(SpecialTag::F5) => {
            if let Some(&(u, v)) = desc
                .a_missing
                .iter()
                .find(|(u, v)| desc.a.contains(u) && desc.a.contains(v))
            {
                if let Some(&center) = desc.a.iter().find(|&&x| x != u && x != v) {
                    desc.labels.insert("u1".into(), center);
                }
            }
        }
        _ => {}
    }
}

/// `C D C D .. C` with `c` copies of `C`; `doubled` gaps get `DD`.
fn alternating(c: usize, doubled: &[usize]) -> String {
    let mut s = String::from("C");
    for gap in 0..c.saturating_sub(1) {
        s.push_str(if doubled.contains(&gap) { "DD" } else { "D" });
        s.push('C');
    }
    s
}

fn c_path_with_run(d: usize) -> String {
    format!("C{}C", "D".repeat(d))
}

/// Every way for each of `size` vertices to miss exactly one vertex of
/// `A ∪ C`: a matching inside `A`, the rest each missing one of `c` vertices.
fn miss_assignments(size: usize, c: usize) -> Vec<Vec<Miss>> {
    fn matchings(rest: &mut Vec<usize>, cur: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        let Some(pos) = rest.iter().position(|&v| cur[v].is_none()) else {
            out.push(cur.clone());
            return;
        };
        let v = rest.remove(pos);
        // v left unmatched within A
        cur[v] = Some(usize::MAX);
        matchings(rest, cur, out);
        cur[v] = None;
        for idx in 0..rest.len() {
            let u = rest[idx];
            if cur[u].is_none() {
                cur[v] = Some(u);
                cur[u] = Some(v);
                matchings(rest, cur, out);
                cur[u] = None;
                cur[v] = None;
            }
        }
        rest.insert(pos, v);
    }
    let mut ms = Vec::new();
    matchings(&mut (0..size).collect(), &mut vec![None; size], &mut ms);
    let mut out = Vec::new();
    for mat in ms {
        let free: Vec<usize> = (0..size).filter(|&v| mat[v] == Some(usize::MAX)).collect();
        let total = c.pow(free.len() as u32);
        for code in 0..total {
            let mut x = code;
            let mut misses: Vec<Miss> = mat
                .iter()
                .map(|o| match o {
                    Some(u) if *u != usize::MAX => Miss::A(*u),
                    _ => Miss::C(0),
                })
                .collect();
            for &v in &free {
                misses[v] = Miss::C(x % c);
                x /= c;
            }
            out.push(misses);
        }
    }
    out
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        if !crate::algorithms::next_combination(&mut idx, n) {
            return out;
        }
    }
}

fn gate(m: usize, k: usize, r: usize) -> Result<usize> {
    if k < 5 || m < k {
        return Err(Error::OutOfDomain(format!(
            "F(m,k,r) needs m >= k >= 5, got m={m} k={k}"
        )));
    }
    let l = (k - 1) / 2;
    if r < 1 || r > l {
        return Err(Error::OutOfDomain(format!("F(m,k,r) needs 1 <= r <= {l}, got r={r}")));
    }
    if m > crate::graph::MAX_VERTICES {
        return Err(Error::CapacityExceeded(format!("m={m} exceeds 64")));
    }
    Ok(l)
}

/// All candidate layouts of order `m`, before validation.
fn candidates(m: usize, k: usize, r: usize) -> Result<Vec<Layout>> {
    let l = gate(m, k, r)?;
    let mut out = Vec::new();
    let odd = k % 2 == 1;
    if r == l {
        if !odd && m >= 2 * (l - 1) + 5 {
            out.extend(type_iv(m, k));
        }
        return Ok(out);
    }
    let c = l - r + 1;
    if odd {
        out.extend(type_i(m, k, r, c));
    } else {
        out.extend(type_ii(m, k, r, c));
        out.extend(type_iii(m, k, r, c));
    }
    Ok(out)
}

fn type_i(m: usize, k: usize, r: usize, c: usize) -> Vec<Layout> {
    let path = if c >= 3 {
        alternating(c, &[])
    } else {
        match m.checked_sub(2 * r + 2) {
            Some(d) if d >= 1 => c_path_with_run(d),
            _ => return Vec::new(),
        }
    };
    let lay = Layout::new(FamilyType::I, k, r, r, vec![path]);
    if lay.a_size + lay.b_size + c + lay.paths[0].matches('D').count() == m {
        vec![lay]
    } else {
        Vec::new()
    }
}

fn type_ii(m: usize, k: usize, r: usize, c: usize) -> Vec<Layout> {
    let l = (k - 1) / 2;
    let mut out = Vec::new();
    for a_size in [r, r + 1] {
        let mut paths = Vec::new();
        if c >= 3 {
            let doubled_counts: &[usize] = if a_size == r + 1 {
                &[0]
            } else if r + 2 == l {
                &[1, 2]
            } else {
                &[1]
            };
            for &e in doubled_counts {
                for gaps in choose(c - 1, e) {
                    paths.push((alternating(c, &gaps), e));
                }
            }
        } else if let Some(d) = m.checked_sub(a_size + r + 2).filter(|&d| d >= 1) {
            paths.push((c_path_with_run(d), 0));
        }
        for (path, e) in paths {
            if a_size + r + path.len() != m {
                continue;
            }
            let special = if a_size == r && r + 2 == l && c == 3 {
                match e {
                    1 => Some(SpecialTag::F0),
                    2 => Some(SpecialTag::F4),
                    _ => None,
                }
            } else {
                None
            };
            if a_size == r {
                let mut lay = Layout::new(FamilyType::II, k, r, a_size, vec![path]);
                lay.special = special;
                out.push(lay);
            } else {
                for misses in miss_assignments(a_size, c) {
                    let mut lay = Layout::new(FamilyType::II, k, r, a_size, vec![path.clone()]);
                    let in_a = misses.iter().filter(|x| matches!(x, Miss::A(_))).count();
                    if r == 2 && a_size == 3 && in_a == 2 {
                        lay.special = Some(SpecialTag::F5);
                    }
                    lay.misses = misses;
                    out.push(lay);
                }
            }
        }
    }
    out
}

fn type_iii(m: usize, k: usize, r: usize, c: usize) -> Vec<Layout> {
    let mut out = Vec::new();
    // F1: C-path plus an isolated D vertex seeing two A vertices.
    if r >= 2 {
        let main = if c >= 3 {
            Some(alternating(c, &[]))
        } else {
            m.checked_sub(2 * r + 3).filter(|&d| d >= 1).map(c_path_with_run)
        };
        if let Some(main) = main {
            let mut lay = Layout::new(FamilyType::III, k, r, r, vec![main, "D".into()]);
            lay.attach = vec![(1, 0, 0, "x", "x1"), (1, 0, 1, "x", "x2")];
            lay.special = Some(SpecialTag::F1);
            out.push(lay);
        }
    }
    // F2: a path ending in a D vertex that sees one A vertex.
    let main = if c >= 3 {
        Some(format!("D{}", alternating(c, &[])))
    } else {
        m.checked_sub(2 * r + 3)
            .filter(|&d| d >= 1)
            .map(|d| format!("D{}", c_path_with_run(d)))
    };
    if let Some(main) = main {
        let mut lay = Layout::new(FamilyType::III, k, r, r, vec![main]);
        lay.attach = vec![(0, 0, 0, "y", "y1")];
        lay.special = Some(SpecialTag::F2);
        out.push(lay);
    }
    // F3: a D-ended path through j C vertices and a C-path on the rest.
    if r >= 2 {
        for j in 1..c {
            let zpath = format!("D{}D", alternating(j, &[]));
            let cpath = alternating(c - j, &[]);
            let end = zpath.len() - 1;
            let mut lay = Layout::new(FamilyType::III, k, r, r, vec![zpath, cpath]);
            lay.attach = vec![(0, 0, 0, "z", "z1"), (0, end, 1, "z'", "z1'")];
            lay.special = Some(SpecialTag::F3);
            out.push(lay);
        }
    }
    out.retain(|lay| lay.a_size + lay.b_size + lay.paths.iter().map(String::len).sum::<usize>() == m);
    out
}

fn type_iv(m: usize, k: usize) -> Vec<Layout> {
    let l = (k - 1) / 2;
    let cs = m - 2 * (l - 1);
    (1..=cs - 4)
        .map(|p| {
            let mut lay = Layout::new(FamilyType::IV, k, l, l - 1, vec!["C".repeat(cs)]);
            lay.b_size = l - 1;
            lay.w_gap = Some(p);
            lay
        })
        .collect()
}

fn realize_layout(lay: &Layout) -> Result<(FamilyDescriptor, Graph)> {
    let desc = lay.descriptor();
    let g = desc.realize()?;
    Ok((desc, g))
}

fn all_layouts(m: usize, k: usize, r: usize) -> Result<Vec<Layout>> {
    candidates(m, k, r)
}

/// One representative per isomorphism class of `F(m,k,r)`, sorted by
/// canonical form. Each returned graph passes [`validate_member`].
pub fn enumerate_family(m: usize, k: usize, r: usize) -> Result<Vec<(FamilyDescriptor, Graph)>> {
    let layouts = all_layouts(m, k, r)?;
    let realized: Vec<(FamilyDescriptor, Graph)> = layouts.iter().map(realize_layout).collect::<Result<_>>()?;
    let checked = par::map(&realized, |(d, g)| {
        validate_member(g, d).is_valid().then(|| canonical_form(g))
    });
    let mut seen = HashSet::new();
    let mut out: Vec<(String, FamilyDescriptor, Graph)> = Vec::new();
    for ((d, g), canon) in realized.into_iter().zip(checked) {
        if let Some(canon) = canon {
            if seen.insert(canon.clone()) {
                out.push((canon, d, g));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out.into_iter().map(|(_, d, g)| (d, g)).collect())
}

/// Every valid labeled layout of `F(m,k,r)`, isomorphic copies included, in
/// generation order. Useful when a check depends on the vertex labels.
pub fn enumerate_family_layouts(m: usize, k: usize, r: usize) -> Result<Vec<(FamilyDescriptor, Graph)>> {
    let layouts = all_layouts(m, k, r)?;
    let realized: Vec<(FamilyDescriptor, Graph)> = layouts.iter().map(realize_layout).collect::<Result<_>>()?;
    let keep = par::map(&realized, |(d, g)| validate_member(g, d).is_valid());
    Ok(realized
        .into_iter()
        .zip(keep)
        .filter_map(|(x, ok)| ok.then_some(x))
        .collect())
}

fn tag_gate(tag: SpecialTag, m: usize, k: usize, r: usize) -> Result<()> {
    let l = (k - 1) / 2;
    let even = k.is_multiple_of(2) && k >= 6;
    let ok = match tag {
        SpecialTag::F0 => even && r + 2 == l && m == k,
        SpecialTag::F4 => even && r + 2 == l && m == k + 1,
        SpecialTag::F5 => even && r == 2 && r < l && m == k,
        SpecialTag::F1 | SpecialTag::F3 => even && (2..l).contains(&r),
        SpecialTag::F2 => even && (1..l).contains(&r),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::TagMismatch(format!(
            "{tag} is not defined for m={m} k={k} r={r}"
        )))
    }
}

/// The named member `tag` of `F(m,k,r)` with its labeled vertices. When the
/// tag names several graphs the first in canonical order is returned.
pub fn build_special(tag: SpecialTag, m: usize, k: usize, r: usize) -> Result<(FamilyDescriptor, Graph)> {
    tag_gate(tag, m, k, r)?;
    let layouts = all_layouts(m, k, r)?;
    let mut found: Vec<(String, FamilyDescriptor, Graph)> = Vec::new();
    for lay in layouts.iter().filter(|l| l.special == Some(tag)) {
        let (d, g) = realize_layout(lay)?;
        if validate_member(&g, &d).is_valid() {
            found.push((canonical_form(&g), d, g));
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    found
        .into_iter()
        .next()
        .map(|(_, d, g)| (d, g))
        .ok_or_else(|| Error::TagMismatch(format!("no valid {tag} member at m={m} k={k} r={r}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::circumference_len;

    #[test]
    fn miss_counts() {
        // Two A vertices, two C vertices: matched pair, or each misses a C vertex.
        assert_eq!(miss_assignments(2, 2).len(), 1 + 4);
        assert_eq!(miss_assignments(3, 1).len(), 1 + 3);
    }

    #[test]
    fn f0_and_f4_shapes() {
        let (d, g) = build_special(SpecialTag::F0, 12, 12, 3).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!((d.a.len(), d.b.len(), d.c.len(), d.d.len()), (3, 3, 3, 3));
        assert!(d.labels.contains_key("v"));
        let (d, g) = build_special(SpecialTag::F4, 13, 12, 3).unwrap();
        assert_eq!(g.n(), 13);
        assert_eq!(d.d_edges.len(), 2);
        assert!(circumference_len(&g) < 12);
    }

    #[test]
    fn tag_mismatch() {
        assert!(matches!(
            build_special(SpecialTag::F5, 12, 12, 3),
            Err(Error::TagMismatch(_))
        ));
        assert!(matches!(
            build_special(SpecialTag::F0, 11, 11, 2),
            Err(Error::TagMismatch(_))
        ));
    }

    #[test]
    fn beyond_k_is_empty_for_small_r() {
        assert!(enumerate_family(12, 10, 1).unwrap().is_empty());
        assert!(enumerate_family(14, 12, 2).unwrap().is_empty());
        assert_eq!(enumerate_family(13, 12, 3).unwrap().len(), 1);
    }
}
