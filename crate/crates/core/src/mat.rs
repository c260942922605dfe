//! Exact integer/rational matrix kernels: HNF, SNF, kernels, determinants,
//! signatures, Gram-side LLL reduction and short-vector enumeration.
//!
//! Everything here works on `Vec<Vec<BigInt>>` rows; no floating point.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IMat = Vec<Vec<Int>>;
pub type RMat = Vec<Vec<Rat>>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> IMat {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let (n, k) = (a.len(), b.len());
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        debug_assert_eq!(a[i].len(), k);
        for (t, bt) in b.iter().enumerate() {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let p = &a[i][t] * &bt[j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn rmat_mul(a: &RMat, b: &RMat) -> RMat {
    let (n, k) = (a.len(), b.len());
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let p = &a[i][t] * &b[t][j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn to_rational(a: &IMat) -> RMat {
    a.iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect()
}

pub fn is_symmetric(a: &IMat) -> bool {
    let n = a.len();
    a.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i]))
}

/// Row-style Hermite normal form: returns `(h, u)` with `u * a = h`,
/// `u` unimodular, pivots positive, entries above pivots reduced, zero rows last.
pub fn hnf_transform(a: &IMat) -> (IMat, IMat) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut h: IMat = a.to_vec();
    let mut u = identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let piv = match (row..m).find(|&r| !h[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        h.swap(row, piv);
        u.swap(row, piv);
        for r in row + 1..m {
            while !h[r][col].is_zero() {
                let q = h[row][col].div_floor(&h[r][col]);
                if !q.is_zero() {
                    for j in 0..n {
                        let s = &q * &h[r][j];
                        h[row][j] -= s;
                    }
                    for j in 0..m {
                        let s = &q * &u[r][j];
                        u[row][j] -= s;
                    }
                }
                h.swap(row, r);
                u.swap(row, r);
            }
        }
        if h[row][col].is_negative() {
            for j in 0..n {
                h[row][j] = -h[row][j].clone();
            }
            for j in 0..m {
                u[row][j] = -u[row][j].clone();
            }
        }
        for r in 0..row {
            let q = h[r][col].div_floor(&h[row][col]);
            if !q.is_zero() {
                for j in 0..n {
                    let s = &q * &h[row][j];
                    h[r][j] -= s;
                }
                for j in 0..m {
                    let s = &q * &u[row][j];
                    u[r][j] -= s;
                }
            }
        }
        row += 1;
    }
    (h, u)
}

/// Basis of `{x : x * a = 0}` over the integers (saturated by construction).
pub fn left_kernel(a: &IMat) -> IMat {
    let (h, u) = hnf_transform(a);
    h.iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
        .map(|(_, ur)| ur)
        .collect()
}

/// Nonzero rows of the row HNF: a canonical basis of the row span.
pub fn row_basis(a: &IMat) -> IMat {
    let (h, _) = hnf_transform(a);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Saturation of the row span of `s` inside `Z^n` (double-complement trick).
pub fn row_saturation(s: &IMat, n: usize) -> IMat {
    let comp = left_kernel(&transpose(s));
    if comp.is_empty() {
        return identity(n);
    }
    left_kernel(&transpose(&comp))
}

/// Smith normal form with transforms: returns `(d, u, v)` with `u * a * v = d`,
/// `d` diagonal with nonnegative entries in divisibility order.
pub fn snf_transform(a: &IMat) -> (IMat, IMat, IMat) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut d: IMat = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);

    fn add_row(d: &mut IMat, u: &mut IMat, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..d[dst].len() {
            let s = q * &d[src][j];
            d[dst][j] -= s;
        }
        for j in 0..u[dst].len() {
            let s = q * &u[src][j];
            u[dst][j] -= s;
        }
    }
    fn add_col(d: &mut IMat, v: &mut IMat, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in d.iter_mut() {
            let s = q * &r[src];
            r[dst] -= s;
        }
        for r in v.iter_mut() {
            let s = q * &r[src];
            r[dst] -= s;
        }
    }

    let mut t = 0;
    while t < m.min(n) {
        // locate minimal nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let (bi, bj) = match best {
            Some(b) => b,
            None => break,
        };
        d.swap(t, bi);
        u.swap(t, bi);
        if t != bj {
            for r in d.iter_mut() {
                r.swap(t, bj);
            }
            for r in v.iter_mut() {
                r.swap(t, bj);
            }
        }
        let mut dirty = false;
        for i in t + 1..m {
            if !d[i][t].is_zero() {
                let q = d[i][t].div_floor(&d[t][t]);
                add_row(&mut d, &mut u, i, t, &q);
                if !d[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in t + 1..n {
            if !d[t][j].is_zero() {
                let q = d[t][j].div_floor(&d[t][t]);
                add_col(&mut d, &mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // divisibility sweep
        let mut again = false;
        'outer: for i in t + 1..m {
            for j in t + 1..n {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    let minus_one = -Int::one();
                    add_row(&mut d, &mut u, t, i, &minus_one);
                    again = true;
                    break 'outer;
                }
            }
        }
        if again {
            continue;
        }
        if d[t][t].is_negative() {
            for j in 0..n {
                d[t][j] = -d[t][j].clone();
            }
            for j in 0..m {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }
    (d, u, v)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(a: &IMat) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    let mut m: IMat = a.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Inertia (p, n) of a nondegenerate symmetric integer matrix, by exact
/// symmetric Gaussian reduction over the rationals.
pub fn signature(a: &IMat) -> (usize, usize) {
    let n = a.len();
    let mut m = to_rational(a);
    let mut pos = 0;
    let mut neg = 0;
    let mut used = vec![false; n];
    for _ in 0..n {
        // pick an unused index with nonzero diagonal, manufacturing one if needed
        let mut piv = (0..n).find(|&i| !used[i] && !m[i][i].is_zero());
        if piv.is_none() {
            // all remaining diagonals zero: find off-diagonal entry and mix
            let mut found = None;
            'search: for i in 0..n {
                if used[i] {
                    continue;
                }
                for j in 0..n {
                    if !used[j] && i != j && !m[i][j].is_zero() {
                        found = Some((i, j));
                        break 'search;
                    }
                }
            }
            match found {
                Some((i, j)) => {
                    // row/col i += row/col j makes m[i][i] = 2*m[i][j] != 0
                    for k in 0..n {
                        let t = m[j][k].clone();
                        m[i][k] += t;
                    }
                    for k in 0..n {
                        let t = m[k][j].clone();
                        m[k][i] += t;
                    }
                    piv = Some(i);
                }
                None => break,
            }
        }
        let p = piv.unwrap();
        used[p] = true;
        if m[p][p].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let d = m[p][p].clone();
        for i in 0..n {
            if used[i] || m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &d;
            for j in 0..n {
                let t = &f * &m[p][j];
                m[i][j] -= t;
            }
            for j in 0..n {
                let t = &f * &m[j][p];
                m[j][i] -= t;
            }
        }
    }
    (pos, neg)
}

/// Solve `x * a = b` for rational `x`, with `a` square invertible.
pub fn solve_left(a: &RMat, b: &[Rat]) -> Option<Vec<Rat>> {
    // transpose to a^T x^T = b^T and run Gaussian elimination
    let n = a.len();
    let mut m: RMat = transpose(a);
    let mut rhs = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        perm.swap(col, piv);
        let d = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &d;
            for j in col..n {
                let t = &f * &m[col][j];
                m[r][j] -= t;
            }
            let t = &f * &rhs[col];
            rhs[r] -= t;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for i in 0..n {
        x[i] = &rhs[i] / &m[i][i];
    }
    Some(x)
}

/// Gram-only LLL (delta = 3/4): returns `(g', t)` with `g' = t g t^T`.
pub fn gram_lll(g: &IMat) -> (IMat, IMat) {
    let n = g.len();
    if n <= 1 {
        return (g.to_vec(), identity(n));
    }
    let mut t = identity(n);
    let mut gr = to_rational(g);

    let recompute = |gr: &RMat| -> (RMat, Vec<Rat>) {
        let mut mu = vec![vec![Rat::zero(); n]; n];
        let mut b2 = vec![Rat::zero(); n];
        for i in 0..n {
            for j in 0..i {
                let mut s = gr[i][j].clone();
                for k in 0..j {
                    let t = &mu[j][k] * &mu[i][k] * &b2[k];
                    s -= t;
                }
                mu[i][j] = if b2[j].is_zero() { Rat::zero() } else { &s / &b2[j] };
            }
            let mut s = gr[i][i].clone();
            for k in 0..i {
                let t = &mu[i][k] * &mu[i][k] * &b2[k];
                s -= t;
            }
            b2[i] = s;
        }
        (mu, b2)
    };

    let half = rat(1, 2);
    let delta = rat(3, 4);
    let (mut mu, mut b2) = recompute(&gr);
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 100_000 {
            break; // fall back to the current (still correct) basis
        }
        let mut changed = false;
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = (&mu[k][j] + &half).floor().to_integer();
                for c in 0..n {
                    let s = &q * &t[j][c];
                    t[k][c] -= s;
                }
                for c in 0..n {
                    let s = Rat::from_integer(q.clone()) * &gr[j][c];
                    gr[k][c] -= s;
                }
                for r in 0..n {
                    let s = Rat::from_integer(q.clone()) * &gr[r][j];
                    gr[r][k] -= s;
                }
                changed = true;
            }
        }
        if changed {
            let r = recompute(&gr);
            mu = r.0;
            b2 = r.1;
        }
        let lhs = b2[k].clone();
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b2[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            t.swap(k, k - 1);
            gr.swap(k, k - 1);
            for r in gr.iter_mut() {
                r.swap(k, k - 1);
            }
            let r = recompute(&gr);
            mu = r.0;
            b2 = r.1;
            k = k.max(2) - 1;
        }
    }
    let gi: IMat = gr
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer()).collect())
        .collect();
    (gi, t)
}

/// All integer vectors `x` (one per antipodal pair, first nonzero entry > 0)
/// with `x g x^T == target`, for positive-definite `g`. Exact arithmetic.
pub fn short_vectors(g: &IMat, target: i64) -> Vec<Vec<Int>> {
    let n = g.len();
    if n == 0 {
        return vec![];
    }
    let (gred, t) = gram_lll(g);
    // rational Cholesky: q[i][i] = d_i, q[k][i] = mu_{k,i} for k > i
    let mut q = to_rational(&gred);
    for i in 0..n {
        for j in 0..i {
            let s = &q[j][j] * &q[i][j] * &q[i][j];
            q[i][i] = &q[i][i] - &s;
        }
        assert!(q[i][i].is_positive(), "short_vectors: matrix not positive definite");
        for k in i + 1..n {
            for j in 0..i {
                let s = &q[j][j] * &q[k][j] * &q[i][j];
                q[k][i] = &q[k][i] - &s;
            }
            q[k][i] = &q[k][i] / &q[i][i];
        }
    }
    let tgt = Rat::from_integer(int(target));
    let mut x = vec![Int::zero(); n];
    let mut found: Vec<Vec<Int>> = Vec::new();

    fn rec(
        i: isize,
        rem: Rat,
        n: usize,
        q: &RMat,
        x: &mut Vec<Int>,
        found: &mut Vec<Vec<Int>>,
    ) {
        if i < 0 {
            if rem.is_zero() && x.iter().any(|v| !v.is_zero()) {
                found.push(x.clone());
            }
            return;
        }
        let iu = i as usize;
        let mut c = Rat::zero();
        for k in iu + 1..n {
            c += &q[k][iu] * Rat::from_integer(x[k].clone());
        }
        let d = q[iu][iu].clone();
        // walk outward from -c in both directions while d*(xi+c)^2 <= rem
        let center = (-&c).floor().to_integer();
        let mut xi = center.clone();
        loop {
            let v = Rat::from_integer(xi.clone()) + &c;
            let contrib = &d * &v * &v;
            if contrib > rem {
                break;
            }
            x[iu] = xi.clone();
            rec(i - 1, &rem - &contrib, n, q, x, found);
            xi -= 1;
        }
        let mut xi = center + 1;
        loop {
            let v = Rat::from_integer(xi.clone()) + &c;
            let contrib = &d * &v * &v;
            if contrib > rem {
                break;
            }
            x[iu] = xi.clone();
            rec(i - 1, &rem - &contrib, n, q, x, found);
            xi += 1;
        }
        x[iu] = Int::zero();
    }
    rec(n as isize - 1, tgt, n, &q, &mut x, &mut found);

    // map through t back to original coordinates, canonical sign, dedup antipodes
    let mut out: Vec<Vec<Int>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for w in found {
        let mut orig = vec![Int::zero(); n];
        for (i, wi) in w.iter().enumerate() {
            if wi.is_zero() {
                continue;
            }
            for j in 0..n {
                let s = wi * &t[i][j];
                orig[j] += s;
            }
        }
        let flip = orig.iter().find(|v| !v.is_zero()).map(|v| v.is_negative()).unwrap_or(false);
        if flip {
            for v in orig.iter_mut() {
                *v = -v.clone();
            }
        }
        if seen.insert(orig.clone()) {
            out.push(orig);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_roundtrip() {
        let a = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (h, u) = hnf_transform(&a);
        assert_eq!(mat_mul(&u, &a), h);
        assert_eq!(det_bareiss(&u).abs(), Int::one());
    }

    #[test]
    fn snf_example() {
        let a = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (d, u, v) = snf_transform(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), d);
        let diag: Vec<i64> = (0..3).map(|i| i64::try_from(&d[i][i]).unwrap()).collect();
        assert_eq!(diag, vec![2, 6, 12]);
    }

    #[test]
    fn kernel_and_saturation() {
        let a = from_i64(&[vec![1, 2], vec![2, 4]]);
        let k = left_kernel(&a);
        assert_eq!(k.len(), 1);
        // span(2e1) saturates to span(e1)
        let s = from_i64(&[vec![2, 0]]);
        let sat = row_saturation(&s, 2);
        assert_eq!(sat, from_i64(&[vec![1, 0]]));
    }

    #[test]
    fn signature_u_and_e8ish() {
        let u = from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(signature(&u), (1, 1));
        let a2 = from_i64(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(signature(&a2), (2, 0));
    }

    #[test]
    fn short_vectors_a2() {
        let a2 = from_i64(&[vec![2, -1], vec![-1, 2]]);
        let roots = short_vectors(&a2, 2);
        assert_eq!(roots.len(), 3); // 6 roots, 3 antipodal pairs
    }
}
