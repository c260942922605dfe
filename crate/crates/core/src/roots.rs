//! ADE root lattices, root enumeration, decomposition of root sublattices
//! into irreducible components, the Kodaira dictionary, affine-diagram data
//! and local height-correction terms.

use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::mat::{self, rat, short_vectors, IMat, Int, Rat};
use num::{Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// An irreducible ADE root-lattice type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootType {
    pub family: char,
    pub rank: usize,
}

impl RootType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ok = match family {
            'A' => rank >= 1,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            _ => false,
        };
        if ok {
            Ok(RootType { family, rank })
        } else {
            Err(Error::BadRootType(family, rank))
        }
    }

    /// Number of roots: n(n+1), 2n(n-1), 72/126/240.
    pub fn root_count(&self) -> usize {
        match self.family {
            'A' => self.rank * (self.rank + 1),
            'D' => 2 * self.rank * (self.rank - 1),
            _ => match self.rank {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    /// |determinant| of the Cartan matrix.
    pub fn disc_order(&self) -> u64 {
        match self.family {
            'A' => self.rank as u64 + 1,
            'D' => 4,
            _ => match self.rank {
                6 => 3,
                7 => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Sort key: E before D before A, descending rank within a family,
/// matching the usual table layout.
pub fn root_sort_key(t: &RootType) -> (u8, i64) {
    let fam = match t.family {
        'E' => 0,
        'D' => 1,
        _ => 2,
    };
    (fam, -(t.rank as i64))
}

/// A Kodaira fiber type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaType {
    /// I_n, n >= 1
    I(usize),
    /// I_n*, n >= 0
    IStar(usize),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl KodairaType {
    /// Number of irreducible components of the fiber.
    pub fn components(&self) -> usize {
        match self {
            KodairaType::I(n) => *n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IIStar => 9,
            KodairaType::IIIStar => 8,
            KodairaType::IVStar => 7,
        }
    }

    pub fn parse(tag: &str) -> Result<Self> {
        let t = tag.trim();
        let star = t.ends_with('*');
        let core = t.trim_end_matches('*');
        match (core, star) {
            ("II", false) => Ok(KodairaType::II),
            ("III", false) => Ok(KodairaType::III),
            ("IV", false) => Ok(KodairaType::IV),
            ("II", true) => Ok(KodairaType::IIStar),
            ("III", true) => Ok(KodairaType::IIIStar),
            ("IV", true) => Ok(KodairaType::IVStar),
            _ => {
                let num = core.strip_prefix('I').ok_or_else(|| Error::BadKodairaTag(tag.into()))?;
                let n: usize = num.parse().map_err(|_| Error::BadKodairaTag(tag.into()))?;
                if star {
                    Ok(KodairaType::IStar(n))
                } else if n >= 1 {
                    Ok(KodairaType::I(n))
                } else {
                    Err(Error::BadKodairaTag(tag.into()))
                }
            }
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IIStar => write!(f, "II*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IVStar => write!(f, "IV*"),
        }
    }
}

/// Extended Dynkin diagram of a reducible Kodaira fiber, NS convention
/// (-2 diagonal), with the component multiplicities.
#[derive(Debug, Clone)]
pub struct AffineDiagram {
    pub kodaira: KodairaType,
    pub gram: IMat,
    pub marks: Vec<u64>,
}

/// Positive-definite Cartan Gram matrix.
///
/// Node ordering: A_n chain `0..n`; D_n chain `0..n-2` with node `n-1`
/// attached to node `n-3`; E_n chain `0..n-2` with node `n-1` attached to
/// node `2`.
pub fn cartan_gram(t: RootType) -> IntLattice {
    let n = t.rank;
    let mut g = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        g[i][i] = mat::int(2);
    }
    let mut link = |i: usize, j: usize| {
        g[i][j] = mat::int(-1);
        g[j][i] = mat::int(-1);
    };
    match t.family {
        'A' => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        'D' => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        _ => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(2, n - 1);
        }
    }
    IntLattice { gram: g, label: Some(t.to_string()) }
}

/// All norm-2 vectors of a positive definite lattice (both signs).
pub fn enumerate_roots(l: &IntLattice) -> Result<Vec<Vec<Int>>> {
    if l.rank() == 0 {
        return Ok(vec![]);
    }
    let (p, n) = mat::signature(&l.gram);
    if n != 0 || p != l.rank() {
        return Err(Error::NotPositiveDefinite);
    }
    let half = short_vectors(&l.gram, 2);
    let mut out = Vec::with_capacity(half.len() * 2);
    for v in half {
        out.push(v.iter().map(|x| -x.clone()).collect());
        out.push(v);
    }
    Ok(out)
}

/// Decompose the root sublattice of a positive definite lattice into
/// irreducible ADE components.
pub fn ade_decompose(l: &IntLattice) -> Result<Vec<RootType>> {
    let roots = enumerate_roots(l)?;
    Ok(decompose_root_set(&roots, &l.gram))
}

/// ADE decomposition of an explicit root set (all of them, both signs),
/// with respect to the given Gram matrix.
pub fn decompose_root_set(roots: &[Vec<Int>], gram: &IMat) -> Vec<RootType> {
    if roots.is_empty() {
        return vec![];
    }
    let n = roots[0].len();
    // deterministic generic functional: weights N^i with N beyond any coordinate
    let bound: Int = roots
        .iter()
        .flat_map(|v| v.iter())
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Int::zero);
    let base = bound * 2 + 3;
    let phi = |v: &[Int]| -> Int {
        let mut s = Int::zero();
        for x in v {
            s = s * &base + x;
        }
        s
    };
    let pos: Vec<&Vec<Int>> = roots.iter().filter(|v| phi(v).is_positive()).collect();
    let posset: BTreeSet<&[Int]> = pos.iter().map(|v| v.as_slice()).collect();
    let mut simple: Vec<&Vec<Int>> = Vec::new();
    'outer: for v in &pos {
        for a in &pos {
            if a == v {
                continue;
            }
            let diff: Vec<Int> = v.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
            if diff.iter().any(|x| !x.is_zero()) && posset.contains(diff.as_slice()) {
                continue 'outer;
            }
        }
        simple.push(v);
    }
    let m = simple.len();
    let dot = |a: &[Int], b: &[Int]| -> Int {
        let mut s = Int::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                s += &a[i] * &gram[i][j] * &b[j];
            }
        }
        s
    };
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            if !dot(simple[i], simple[j]).is_zero() {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    // connected components -> classify by arm lengths
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..m {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        out.push(classify_component(&comp, &adj));
    }
    out.sort_by_key(root_sort_key);
    out
}

fn classify_component(comp: &[usize], adj: &[Vec<bool>]) -> RootType {
    let deg = |u: usize| comp.iter().filter(|&&v| adj[u][v]).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&u| deg(u) == 3).collect();
    let sz = comp.len();
    // root sublattices of definite lattices always decompose into ADE graphs;
    // anything else is an internal error
    assert!(branch.len() <= 1, "non-ADE component in root decomposition");
    if branch.is_empty() {
        assert!(comp.iter().all(|&u| deg(u) <= 2), "cycle in root decomposition");
        return RootType::new('A', sz).expect("valid A rank");
    }
    let b = branch[0];
    let mut arms: Vec<usize> = Vec::new();
    for &s in comp.iter().filter(|&&v| adj[b][v]) {
        let mut len = 1;
        let (mut prev, mut cur) = (b, s);
        loop {
            let next = comp
                .iter()
                .copied()
                .find(|&w| adj[cur][w] && w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    assert_eq!(arms.len(), 3, "branch node degree mismatch");
    if arms[0] == 1 && arms[1] == 1 {
        RootType::new('D', sz).expect("valid D rank")
    } else {
        assert_eq!(arms[0], 1, "non-ADE arm profile");
        RootType::new('E', sz).expect("valid E rank")
    }
}

/// Kodaira fiber types lattice-equivalent to a given root type.
pub fn kodaira_candidates(t: RootType) -> Vec<KodairaType> {
    match (t.family, t.rank) {
        ('A', 1) => vec![KodairaType::I(2), KodairaType::III],
        ('A', 2) => vec![KodairaType::I(3), KodairaType::IV],
        ('A', n) => vec![KodairaType::I(n + 1)],
        ('D', n) => vec![KodairaType::IStar(n - 4)],
        ('E', 6) => vec![KodairaType::IVStar],
        ('E', 7) => vec![KodairaType::IIIStar],
        _ => vec![KodairaType::IIStar],
    }
}

/// Extended Dynkin diagram plus multiplicities for a reducible fiber type.
///
/// Node orderings: `I_n` is the n-cycle `0..n`; `I_n*` lists the four simple
/// tips as nodes 0, 1 (first fork) and last-2, last-1 order `[tip, tip,
/// chain.., tip, tip]`; `II*/III*/IV*` follow the chain-plus-branch layout of
/// the corresponding `cartan_gram` with the extending node appended last.
pub fn affine_data(k: KodairaType) -> Result<AffineDiagram> {
    let pairs: Vec<(usize, usize, i64)>;
    let marks: Vec<u64>;
    match k {
        KodairaType::I(n) if n >= 2 => {
            let mut p = Vec::new();
            for i in 0..n {
                let j = (i + 1) % n;
                // I2 is两 components meeting twice; larger n a simple cycle
                if n == 2 {
                    if i == 0 {
                        p.push((0, 1, 2));
                    }
                } else {
                    p.push((i, j, 1));
                }
            }
            pairs = p;
            marks = vec![1; n];
        }
        KodairaType::III => {
            pairs = vec![(0, 1, 2)];
            marks = vec![1, 1];
        }
        KodairaType::IV => {
            pairs = vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)];
            marks = vec![1, 1, 1];
        }
        KodairaType::IStar(n) => {
            // D_{4+n} affine: tips 0,1 on chain node 2; chain 2..2+n+1; tips at end
            let chain = n + 1; // number of multiplicity-2 nodes
            let total = n + 5;
            let mut p = vec![(0, 2, 1), (1, 2, 1)];
            for i in 0..chain - 1 {
                p.push((2 + i, 3 + i, 1));
            }
            p.push((total - 2, 2 + chain - 1, 1));
            p.push((total - 1, 2 + chain - 1, 1));
            pairs = p;
            let mut m = vec![1, 1];
            m.extend(std::iter::repeat(2).take(chain));
            m.extend([1, 1]);
            marks = m;
        }
        KodairaType::IVStar => {
            // E6 affine: center 0; three arms of length 2
            pairs = vec![(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (0, 5, 1), (5, 6, 1)];
            marks = vec![3, 2, 1, 2, 1, 2, 1];
        }
        KodairaType::IIIStar => {
            // E7 affine: chain of 7 with branch at node 3
            pairs = vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (3, 7, 1)];
            marks = vec![1, 2, 3, 4, 3, 2, 1, 2];
        }
        KodairaType::IIStar => {
            // E8 affine: chain of 8 with branch at node 5, extending node last
            pairs = vec![
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (6, 7, 1),
                (5, 8, 1),
            ];
            marks = vec![1, 2, 3, 4, 5, 6, 4, 3, 2];
        }
        _ => return Err(Error::IrreducibleKodaira(k.to_string())),
    }
    let n = marks.len();
    let mut gram = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        gram[i][i] = mat::int(-2);
    }
    for (a, b, v) in pairs {
        gram[a][b] = mat::int(v);
        gram[b][a] = mat::int(v);
    }
    // the fiber class is isotropic and orthogonal to every component
    for i in 0..n {
        let s: Int = (0..n).map(|j| &gram[i][j] * mat::int(marks[j] as i64)).sum();
        assert!(s.is_zero(), "affine marks are not in the kernel");
    }
    Ok(AffineDiagram { kodaira: k, gram, marks })
}

/// Standard local height correction for a section meeting the fiber of type
/// `k` in a given simple component. Index semantics: 0 is the identity
/// component (met by the zero section); for `I_n` the index is the cyclic
/// distance; for `I_n*` index 1 is the near tip and 2, 3 the far tips; for
/// `III*`, `IV*`, `III`, `IV` indices enumerate the non-identity simple
/// components.
pub fn contribution(k: KodairaType, component_index: usize) -> Result<Rat> {
    if component_index == 0 {
        return Ok(Rat::zero());
    }
    let bad = || Error::BadComponentIndex(component_index, k.to_string());
    match k {
        KodairaType::I(n) => {
            let i = component_index;
            if i >= n {
                return Err(bad());
            }
            Ok(rat((i * (n - i)) as i64, n as i64))
        }
        KodairaType::IStar(n) => match component_index {
            1 => Ok(rat(1, 1)),
            2 | 3 => Ok(rat(1, 1) + rat(n as i64, 4)),
            _ => Err(bad()),
        },
        KodairaType::IIIStar => {
            if component_index == 1 {
                Ok(rat(3, 2))
            } else {
                Err(bad())
            }
        }
        KodairaType::IVStar => {
            if component_index <= 2 {
                Ok(rat(4, 3))
            } else {
                Err(bad())
            }
        }
        KodairaType::III => {
            if component_index == 1 {
                Ok(rat(1, 2))
            } else {
                Err(bad())
            }
        }
        KodairaType::IV => {
            if component_index <= 2 {
                Ok(rat(2, 3))
            } else {
                Err(bad())
            }
        }
        KodairaType::II | KodairaType::IIStar => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{determinant, lattice_from_gram};
    use crate::mat::from_i64;

    #[test]
    fn cartan_grams() {
        assert_eq!(cartan_gram(RootType::new('A', 1).unwrap()).gram, from_i64(&[vec![2]]));
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        assert_eq!(determinant(&a8), mat::int(9));
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        assert_eq!(determinant(&e8), mat::int(1));
        assert!(RootType::new('D', 3).is_err());
        assert!(RootType::new('E', 9).is_err());
    }

    #[test]
    fn root_enumeration_counts() {
        for t in [
            RootType::new('A', 8).unwrap(),
            RootType::new('D', 6).unwrap(),
            RootType::new('E', 6).unwrap(),
            RootType::new('E', 7).unwrap(),
            RootType::new('E', 8).unwrap(),
        ] {
            let l = cartan_gram(t);
            assert_eq!(enumerate_roots(&l).unwrap().len(), t.root_count(), "{t}");
        }
        let four = lattice_from_gram(from_i64(&[vec![4]])).unwrap();
        assert!(enumerate_roots(&four).unwrap().is_empty());
        let u = lattice_from_gram(from_i64(&[vec![0, 1], vec![1, 0]])).unwrap();
        assert!(enumerate_roots(&u).is_err());
    }

    #[test]
    fn decompose_round_trip() {
        for t in [
            RootType::new('A', 5).unwrap(),
            RootType::new('D', 7).unwrap(),
            RootType::new('E', 6).unwrap(),
            RootType::new('E', 7).unwrap(),
            RootType::new('E', 8).unwrap(),
        ] {
            let l = cartan_gram(t);
            assert_eq!(ade_decompose(&l).unwrap(), vec![t]);
        }
        let empty = lattice_from_gram(vec![]).unwrap();
        assert!(ade_decompose(&empty).unwrap().is_empty());
    }

    #[test]
    fn kodaira_dictionary() {
        assert_eq!(
            kodaira_candidates(RootType::new('A', 8).unwrap()),
            vec![KodairaType::I(9)]
        );
        assert_eq!(
            kodaira_candidates(RootType::new('A', 1).unwrap()),
            vec![KodairaType::I(2), KodairaType::III]
        );
        assert_eq!(
            kodaira_candidates(RootType::new('D', 12).unwrap()),
            vec![KodairaType::IStar(8)]
        );
    }

    #[test]
    fn affine_diagrams() {
        let ii = affine_data(KodairaType::IIStar).unwrap();
        assert_eq!(ii.marks, vec![1, 2, 3, 4, 5, 6, 4, 3, 2]);
        let i5 = affine_data(KodairaType::I(5)).unwrap();
        assert_eq!(i5.marks, vec![1; 5]);
        let i4s = affine_data(KodairaType::IStar(4)).unwrap();
        assert_eq!(i4s.marks, vec![1, 1, 2, 2, 2, 2, 2, 1, 1]);
        assert!(affine_data(KodairaType::I(1)).is_err());
        assert!(affine_data(KodairaType::II).is_err());
    }

    #[test]
    fn contributions() {
        assert_eq!(contribution(KodairaType::I(16), 8).unwrap(), rat(4, 1));
        assert_eq!(contribution(KodairaType::I(16), 5).unwrap(), rat(55, 16));
        assert_eq!(contribution(KodairaType::I(16), 0).unwrap(), Rat::zero());
        assert_eq!(contribution(KodairaType::IStar(8), 2).unwrap(), rat(3, 1));
        assert_eq!(contribution(KodairaType::IStar(2), 3).unwrap(), rat(3, 2));
        assert_eq!(contribution(KodairaType::IIIStar, 1).unwrap(), rat(3, 2));
        assert!(contribution(KodairaType::IIStar, 1).is_err());
        assert!(contribution(KodairaType::I(4), 4).is_err());
    }
}
