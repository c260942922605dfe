//! Exact integral-lattice arithmetic: Gram matrices, Smith normal form,
//! discriminant groups and forms, orthogonal complements, saturations,
//! finite quotients.
//!
//! Sign convention: root lattices are stored positive definite; the
//! Néron–Severi side negates. Discriminant q-values are reduced to `[0, 2)`
//! and both signs of every form are exposed.

use crate::error::{Error, Result};
use crate::mat::{
    self, det_bareiss, hnf_transform, left_kernel, mat_mul, row_basis, row_saturation,
    snf_transform, solve_left, to_rational, transpose, IMat, Int, Rat,
};
use num::{One, Signed, Zero};

/// A finitely generated nondegenerate integral lattice given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    pub gram: IMat,
    pub label: Option<String>,
}

impl IntLattice {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[i][i] % 2).is_zero())
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }
}

/// A sublattice of an ambient lattice, given by basis rows in ambient coordinates.
#[derive(Debug, Clone)]
pub struct Sublattice {
    pub ambient: IntLattice,
    pub basis: IMat,
}

impl Sublattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn induced_gram(&self) -> IMat {
        let g = mat_mul(&mat_mul(&self.basis, &self.ambient.gram), &transpose(&self.basis));
        g
    }

    pub fn induced_lattice(&self) -> Result<IntLattice> {
        lattice_from_gram(self.induced_gram())
    }
}

/// Discriminant group `L*/L` with generator lifts and q-values.
#[derive(Debug, Clone)]
pub struct DiscGroup {
    pub invariant_factors: Vec<Int>,
    /// generator lifts as rational rows in lattice coordinates
    pub generator_lifts: Vec<Vec<Rat>>,
    /// q-value per generator, reduced mod 2 into [0, 2)
    pub q_values: Vec<Rat>,
}

impl DiscGroup {
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// A finite abelian group by its invariant-factor chain (empty = trivial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: vec![] }
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.invariant_factors.iter().map(|d| format!("Z/{d}Z")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Build a lattice from a symmetric nondegenerate Gram matrix.
pub fn lattice_from_gram(gram: IMat) -> Result<IntLattice> {
    let n = gram.len();
    for (i, row) in gram.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSymmetric(i, row.len().min(n)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if gram[i][j] != gram[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    if n > 0 {
        let k = left_kernel(&gram);
        if !k.is_empty() {
            return Err(Error::Degenerate(k[0].iter().map(|x| x.to_string()).collect()));
        }
    }
    Ok(IntLattice { gram, label: None })
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &IntLattice, b: &IntLattice) -> IntLattice {
    let (n, m) = (a.rank(), b.rank());
    let mut g = vec![vec![Int::zero(); n + m]; n + m];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = a.gram[i][j].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            g[n + i][n + j] = b.gram[i][j].clone();
        }
    }
    IntLattice { gram: g, label: None }
}

/// Multiply the form by a nonzero integer.
pub fn rescale(l: &IntLattice, n: i64) -> Result<IntLattice> {
    if n == 0 {
        return Err(Error::ZeroScale);
    }
    let s = mat::int(n);
    let gram = l.gram.iter().map(|r| r.iter().map(|x| x * &s).collect()).collect();
    Ok(IntLattice { gram, label: None })
}

/// Exact signed determinant of the Gram matrix.
pub fn determinant(l: &IntLattice) -> Int {
    det_bareiss(&l.gram)
}

/// Inertia (p, n) of the rational quadratic form.
pub fn signature(l: &IntLattice) -> (usize, usize) {
    mat::signature(&l.gram)
}

/// Discriminant group via Smith normal form of the Gram matrix.
///
/// With `u g v = d`, the rows `u_i / d_i` (for `d_i > 1`) lie in the dual
/// lattice and generate `L*/L` with orders `d_i`.
pub fn discriminant_group(l: &IntLattice) -> DiscGroup {
    let (d, u, _v) = snf_transform(&l.gram);
    let n = l.rank();
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    let mut qs = Vec::new();
    for i in 0..n {
        let di = d[i][i].clone();
        if di <= Int::one() {
            continue;
        }
        let lift: Vec<Rat> = u[i]
            .iter()
            .map(|x| Rat::new(x.clone(), di.clone()))
            .collect();
        let q = q_value(&l.gram, &lift);
        factors.push(di);
        lifts.push(lift);
        qs.push(q);
    }
    DiscGroup { invariant_factors: factors, generator_lifts: lifts, q_values: qs }
}

fn q_value(gram: &IMat, v: &[Rat]) -> Rat {
    let n = gram.len();
    let mut s = Rat::zero();
    for i in 0..n {
        if v[i].is_zero() {
            continue;
        }
        for j in 0..n {
            s += &v[i] * &v[j] * Rat::from_integer(gram[i][j].clone());
        }
    }
    reduce_mod2(s)
}

fn reduce_mod2(q: Rat) -> Rat {
    let two = Rat::from_integer(Int::from(2));
    let f = (&q / &two).floor();
    q - f * two
}

/// Discriminant form of an even lattice: (order, q mod 2) pairs, q in [0, 2).
/// `negate` flips the sign convention before reduction.
pub fn discriminant_form(l: &IntLattice, negate: bool) -> Result<Vec<(Int, Rat)>> {
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let g = discriminant_group(l);
    Ok(g
        .invariant_factors
        .iter()
        .zip(&g.q_values)
        .map(|(d, q)| {
            let qq = if negate { reduce_mod2(-q.clone()) } else { q.clone() };
            (d.clone(), qq)
        })
        .collect())
}

/// Invariants (a, delta) of a 2-elementary lattice.
pub fn two_elementary_invariants(l: &IntLattice) -> Result<(usize, u8)> {
    let g = discriminant_group(l);
    let two = Int::from(2);
    if g.invariant_factors.iter().any(|d| *d != two) {
        let fs = g
            .invariant_factors
            .iter()
            .map(|d| u64::try_from(d).unwrap_or(0))
            .collect();
        return Err(Error::NotTwoElementary(fs));
    }
    let delta = if g.q_values.iter().all(|q| q.is_integer()) { 0 } else { 1 };
    Ok((g.invariant_factors.len(), delta))
}

/// Full-rank sublattice of `l` spanned by the given rows (must be independent).
pub fn sublattice(l: &IntLattice, basis: IMat) -> Result<Sublattice> {
    let rb = row_basis(&basis);
    if rb.len() != basis.len() {
        return Err(Error::DependentBasis);
    }
    Ok(Sublattice { ambient: l.clone(), basis })
}

/// Orthogonal complement of `s` inside its ambient lattice: the saturated
/// integer kernel of `v -> v * gram * basis_i`.
pub fn orthogonal_complement(s: &Sublattice) -> Sublattice {
    let gm = mat_mul(&s.ambient.gram, &transpose(&s.basis));
    let k = left_kernel(&gm);
    Sublattice { ambient: s.ambient.clone(), basis: k }
}

/// Primitive closure of `s` in its ambient lattice.
pub fn saturation(s: &Sublattice) -> Sublattice {
    let sat = row_saturation(&s.basis, s.ambient.rank());
    Sublattice { ambient: s.ambient.clone(), basis: sat }
}

/// Invariant factors of `big/small` for sublattices with the same rational span.
pub fn quotient_group(big: &Sublattice, small: &Sublattice) -> Result<FiniteAbelianGroup> {
    if big.rank() != small.rank() {
        return Err(Error::RankMismatch(big.rank(), small.rank()));
    }
    // express each small basis row in big's basis (rational, must be integral)
    let bigq = to_rational(&row_basis(&big.basis));
    let mut change = Vec::new();
    for row in &small.basis {
        let rhs: Vec<Rat> = row.iter().map(|x| Rat::from_integer(x.clone())).collect();
        // solve x * bigq = rhs; bigq is k x n with k <= n, use the pivot columns
        let x = solve_in_span(&bigq, &rhs).ok_or(Error::RankMismatch(big.rank(), small.rank()))?;
        let xi: Vec<Int> = x
            .iter()
            .map(|r| {
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err(Error::RankMismatch(big.rank(), small.rank()))
                }
            })
            .collect::<Result<_>>()?;
        change.push(xi);
    }
    let (d, _, _) = snf_transform(&change);
    let mut inv = Vec::new();
    for i in 0..d.len().min(d.first().map(|r| r.len()).unwrap_or(0)) {
        let di = d[i][i].abs();
        if di > Int::one() {
            inv.push(u64::try_from(&di).expect("invariant factor fits u64"));
        }
    }
    Ok(FiniteAbelianGroup { invariant_factors: inv })
}

/// Solve `x * a = b` where `a` (k x n rows) has full row rank k <= n.
pub fn solve_in_span(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let k = a.len();
    if k == 0 {
        return if b.iter().all(Zero::is_zero) { Some(vec![]) } else { None };
    }
    let n = a[0].len();
    // find k pivot columns making a square invertible block
    let mut cols = Vec::new();
    let mut work: Vec<Vec<Rat>> = a.to_vec();
    let mut row = 0;
    for c in 0..n {
        if row == k {
            break;
        }
        if let Some(p) = (row..k).find(|&r| !work[r][c].is_zero()) {
            work.swap(row, p);
            let d = work[row][c].clone();
            for r in 0..k {
                if r == row || work[r][c].is_zero() {
                    continue;
                }
                let f = &work[r][c] / &d;
                for j in 0..n {
                    let t = &f * &work[row][j];
                    work[r][j] -= t;
                }
            }
            cols.push(c);
            row += 1;
        }
    }
    if row < k {
        return None;
    }
    let sq: Vec<Vec<Rat>> = a.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    let rhs: Vec<Rat> = cols.iter().map(|&c| b[c].clone()).collect();
    let x = solve_left(&sq, &rhs)?;
    // verify on all coordinates
    for j in 0..n {
        let mut s = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            s += xi * &a[i][j];
        }
        if s != b[j] {
            return None;
        }
    }
    Some(x)
}

/// `(h, u)` with `u` unimodular such that `u * a = h` (re-export for callers).
pub fn hnf(a: &IMat) -> (IMat, IMat) {
    hnf_transform(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::from_i64;
    use crate::roots::{cartan_gram, RootType};

    fn lat(rows: &[Vec<i64>]) -> IntLattice {
        lattice_from_gram(from_i64(rows)).unwrap()
    }

    #[test]
    fn constructors_and_parity() {
        let l = lat(&[vec![2]]);
        assert!(l.is_even());
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        assert!(u.is_even());
        assert_eq!(determinant(&u), mat::int(-1));
        let odd = lat(&[vec![2, 1], vec![1, 1]]);
        assert!(!odd.is_even());
        // degenerate and asymmetric rejected
        assert!(lattice_from_gram(from_i64(&[vec![1, 2], vec![2, 4]])).is_err());
        assert!(lattice_from_gram(from_i64(&[vec![1, 2], vec![3, 4]])).is_err());
    }

    #[test]
    fn direct_sums_and_rescale() {
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        let s = direct_sum(&direct_sum(&u, &e8), &e8);
        assert_eq!(s.rank(), 18);
        assert_eq!(determinant(&s).abs(), Int::one());
        let u2 = rescale(&u, 2).unwrap();
        assert_eq!(u2.gram, from_i64(&[vec![0, 2], vec![2, 0]]));
        let l = lat(&[vec![2]]);
        assert_eq!(rescale(&l, 1).unwrap().gram, l.gram);
        assert_eq!(rescale(&l, -1).unwrap().gram, from_i64(&[vec![-2]]));
        assert!(rescale(&l, 0).is_err());
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        assert_eq!(determinant(&direct_sum(&a8, &a8)), mat::int(81));
    }

    #[test]
    fn determinants_and_signatures() {
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        assert_eq!(determinant(&a8), mat::int(9));
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        assert_eq!(determinant(&e8), Int::one());
        let d8 = cartan_gram(RootType::new('D', 8).unwrap());
        assert_eq!(determinant(&d8), mat::int(4));
        assert_eq!(signature(&e8), (8, 0));
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(signature(&u), (1, 1));
    }

    #[test]
    fn discriminant_groups() {
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        let g = discriminant_group(&a8);
        assert_eq!(g.invariant_factors, vec![mat::int(9)]);
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        assert!(discriminant_group(&e8).is_trivial());
        let d8 = cartan_gram(RootType::new('D', 8).unwrap());
        assert_eq!(discriminant_group(&d8).invariant_factors, vec![mat::int(2), mat::int(2)]);
    }

    #[test]
    fn discriminant_forms() {
        // negative-definite A8 carries q = -8/9 = 10/9 mod 2; opposite is 8/9
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        let neg = rescale(&a8, -1).unwrap();
        let f = discriminant_form(&neg, false).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].1, mat::rat(10, 9));
        let f_op = discriminant_form(&neg, true).unwrap();
        assert_eq!(f_op[0].1, mat::rat(8, 9));
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        assert!(discriminant_form(&u, false).unwrap().is_empty());
        // dual-basis oracle on positive-definite D8: two order-2 generators,
        // q-values integral (the group {0, s, v, c} has q = 0, 2, 1, 2 mod 2)
        let d8 = cartan_gram(RootType::new('D', 8).unwrap());
        let fd = discriminant_form(&d8, false).unwrap();
        assert_eq!(fd.len(), 2);
        assert!(fd.iter().all(|(d, q)| *d == mat::int(2) && q.is_integer()));
    }

    #[test]
    fn two_elementary() {
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        let uni = direct_sum(&direct_sum(&u, &e8), &e8);
        assert_eq!(two_elementary_invariants(&uni).unwrap(), (0, 0));
        let u2 = rescale(&u, 2).unwrap();
        assert_eq!(two_elementary_invariants(&u2).unwrap(), (2, 0));
        let a8 = cartan_gram(RootType::new('A', 8).unwrap());
        assert!(two_elementary_invariants(&a8).is_err());
    }

    #[test]
    fn complement_saturation_quotient() {
        let l = lat(&[vec![2, 0], vec![0, 2]]);
        let s = sublattice(&l, from_i64(&[vec![1, 1]])).unwrap();
        let c = orthogonal_complement(&s);
        assert_eq!(c.induced_gram(), from_i64(&[vec![4]]));
        // E8 inside E8 has rank-0 complement
        let e8 = cartan_gram(RootType::new('E', 8).unwrap());
        let all = sublattice(&e8, mat::identity(8)).unwrap();
        assert_eq!(orthogonal_complement(&all).rank(), 0);
        // index-2 saturation
        let one = lat(&[vec![2]]);
        let s2 = sublattice(&one, from_i64(&[vec![2]])).unwrap();
        let sat = saturation(&s2);
        assert_eq!(sat.basis, from_i64(&[vec![1]]));
        let q = quotient_group(&sat, &s2).unwrap();
        assert_eq!(q.invariant_factors, vec![2]);
        // primitive sublattice saturates to itself; quotient trivial
        let s3 = sublattice(&l, from_i64(&[vec![1, 0]])).unwrap();
        assert_eq!(saturation(&s3).basis, s3.basis);
        assert!(quotient_group(&saturation(&s3), &s3).unwrap().is_trivial());
    }
}
