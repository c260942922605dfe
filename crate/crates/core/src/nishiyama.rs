//! Classification of elliptic fibrations by primitive embeddings of a root
//! lattice into the Niemeier catalog: embedding search, frames, torsion.

use crate::error::{Error, Result};
use crate::lattice::{
    quotient_group, saturation, sublattice, FiniteAbelianGroup, IntLattice,
};
use crate::mat::{self, left_kernel, mat_mul, row_basis, row_saturation, transpose, IMat, Int};
use crate::niemeier::{catalog, component_roots, realize, NiemeierSpec, RealizedNiemeier};
use crate::roots::{cartan_gram, decompose_root_set, kodaira_candidates, root_sort_key, KodairaType, RootType};
use num::{Signed, Zero};
use rayon::prelude::*;

/// A primitive embedding of `t0` into one component of a Niemeier lattice,
/// stored as root images in the realized lattice's coordinates.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    pub t0: RootType,
    pub target: String,
    pub component_index: usize,
    pub root_images: IMat,
}

/// The orthogonal complement data of one embedding.
#[derive(Debug, Clone)]
pub struct Frame {
    pub gram: IMat,
    pub root_part: Vec<RootType>,
    pub fibers: Vec<Vec<KodairaType>>,
    pub mw_rank: usize,
    pub mw_torsion: FiniteAbelianGroup,
    pub det: Int,
}

/// One classification row.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub index: usize,
    pub niemeier: String,
    pub embedding: String,
    pub frame: Frame,
}

/// All (catalog entry, component) pairs admitting a primitive embedding of
/// `t0`, per the embedding lemmas for A8, D8 and E8: A8 embeds primitively
/// in `A_m` (m >= 8) and `D_n` (n >= 9); D8 only in `D_n` (n >= 8); E8 only
/// in E8. One pair per isomorphic component type.
pub fn admissible_targets(t0: RootType) -> Result<Vec<(NiemeierSpec, usize)>> {
    let ok: fn(&RootType) -> bool = match (t0.family, t0.rank) {
        ('A', 8) => |c| (c.family == 'A' && c.rank >= 8) || (c.family == 'D' && c.rank >= 9),
        ('D', 8) => |c| c.family == 'D' && c.rank >= 8,
        ('E', 8) => |c| c.family == 'E' && c.rank == 8,
        _ => return Err(Error::UnsupportedT0(t0.to_string())),
    };
    let mut out = Vec::new();
    for spec in catalog() {
        if spec.is_rootless() {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, c) in spec.components.iter().enumerate() {
            if ok(c) && seen.insert((c.family, c.rank)) {
                out.push((spec.clone(), i));
            }
        }
    }
    Ok(out)
}

fn dot(gram: &IMat, a: &[Int], b: &[Int]) -> Int {
    let n = a.len();
    let mut s = Int::zero();
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if b[j].is_zero() {
                continue;
            }
            s += &a[i] * &gram[i][j] * &b[j];
        }
    }
    s
}

/// Backtracking search for root tuples realizing the Cartan matrix of `t0`
/// among the component's roots. The first root is pinned (the Weyl group of
/// an irreducible component acts transitively on its roots), and up to
/// `max_solutions` embeddings with distinct images are returned.
fn embeddings_in_component(
    r: &RealizedNiemeier,
    spec: &NiemeierSpec,
    comp: usize,
    t0: RootType,
    max_solutions: usize,
) -> Vec<IMat> {
    let roots = component_roots(r, spec, comp);
    let cartan = cartan_gram(t0).gram;
    let k = t0.rank;
    let gram = &r.lattice.gram;
    // cache gram * root for fast pairwise dots
    let groots: Vec<Vec<Int>> = roots
        .iter()
        .map(|v| {
            (0..24)
                .map(|i| {
                    let mut s = Int::zero();
                    for j in 0..24 {
                        if !v[j].is_zero() {
                            s += &gram[i][j] * &v[j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let pair = |a: usize, b: usize| -> Int {
        let mut s = Int::zero();
        for i in 0..24 {
            if !roots[a][i].is_zero() {
                s += &roots[a][i] * &groots[b][i];
            }
        }
        s
    };
    let mut sols: Vec<Vec<usize>> = Vec::new();
    let mut chosen = vec![0usize];
    fn rec(
        step: usize,
        k: usize,
        nroots: usize,
        cartan: &IMat,
        pair: &dyn Fn(usize, usize) -> Int,
        chosen: &mut Vec<usize>,
        sols: &mut Vec<Vec<usize>>,
        max: usize,
        budget: &mut usize,
    ) {
        if sols.len() >= max || *budget == 0 {
            return;
        }
        if step == k {
            sols.push(chosen.clone());
            return;
        }
        for cand in 0..nroots {
            if *budget == 0 {
                return;
            }
            *budget -= 1;
            let ok = (0..step).all(|j| pair(cand, chosen[j]) == cartan[step][j]);
            if ok {
                chosen.push(cand);
                rec(step + 1, k, nroots, cartan, pair, chosen, sols, max, budget);
                chosen.pop();
                if sols.len() >= max {
                    return;
                }
            }
        }
    }
    let mut budget = 2_000_000usize;
    rec(1, k, roots.len(), &cartan, &pair, &mut chosen, &mut sols, max_solutions, &mut budget);
    sols.into_iter()
        .map(|idx| idx.into_iter().map(|i| roots[i].clone()).collect())
        .collect()
}

fn is_primitive(image: &IMat) -> bool {
    let sat = row_saturation(image, 24);
    row_basis(image) == row_basis(&sat)
}

/// Find one primitive embedding; diagnostic if inequivalent complement
/// invariants show up among the first few primitive embeddings found.
pub fn find_embedding(
    spec: &NiemeierSpec,
    component_index: usize,
    t0: RootType,
) -> Result<EmbeddingSpec> {
    let r = realize(spec)?;
    let sols = embeddings_in_component(&r, spec, component_index, t0, 4);
    let mut first: Option<IMat> = None;
    let mut invariants: Vec<String> = Vec::new();
    for image in sols {
        if !is_primitive(&image) {
            continue;
        }
        let f = frame_of(&r, &image)?;
        let key = format!(
            "{}|{:?}|{:?}",
            f.det,
            f.root_part.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            f.mw_torsion.invariant_factors
        );
        if first.is_none() {
            first = Some(image);
        }
        if !invariants.contains(&key) {
            invariants.push(key);
        }
    }
    let image = first.ok_or_else(|| Error::NoEmbedding(spec.name.clone(), component_index))?;
    assert!(
        invariants.len() <= 1,
        "uniqueness violation: embeddings of {t0} in {} component {component_index} \
         yield non-isometric complements: {invariants:?}",
        spec.name
    );
    Ok(EmbeddingSpec {
        t0,
        target: spec.name.clone(),
        component_index,
        root_images: image,
    })
}

fn frame_of(r: &RealizedNiemeier, image: &IMat) -> Result<Frame> {
    let gm = mat_mul(&r.lattice.gram, &transpose(image));
    let w = left_kernel(&gm);
    let amb = IntLattice { gram: r.lattice.gram.clone(), label: None };
    let sub = sublattice(&amb, w.clone())?;
    let gram_w = sub.induced_gram();
    let det = mat::det_bareiss(&gram_w);
    let roots = crate::mat::short_vectors(&gram_w, 2);
    let mut allroots: IMat = Vec::with_capacity(roots.len() * 2);
    for v in &roots {
        allroots.push(v.iter().map(|x| -x.clone()).collect());
        allroots.push(v.clone());
    }
    let root_part = decompose_root_set(&allroots, &gram_w);
    let fibers = root_part.iter().map(|t| kodaira_candidates(*t)).collect();
    let rank_w = w.len();
    let (mw_rank, mw_torsion) = if roots.is_empty() {
        (rank_w, FiniteAbelianGroup::trivial())
    } else {
        let span = row_basis(&roots);
        let frame_lat = IntLattice { gram: gram_w.clone(), label: None };
        let span_sub = sublattice(&frame_lat, span.clone())?;
        let sat = saturation(&span_sub);
        let tors = quotient_group(&sat, &span_sub)?;
        (rank_w - span.len(), tors)
    };
    Ok(Frame { gram: gram_w, root_part, fibers, mw_rank, mw_torsion, det })
}

/// Frame (orthogonal complement data) of an embedding.
pub fn frame(e: &EmbeddingSpec) -> Result<Frame> {
    let spec = catalog()
        .into_iter()
        .find(|s| s.name == e.target)
        .ok_or_else(|| Error::Config(format!("unknown catalog entry {}", e.target)))?;
    let r = realize(&spec)?;
    frame_of(&r, &e.root_images)
}

/// Classification table for `t0` in catalog order; embeddings over admissible
/// targets run in parallel.
pub fn classify(t0: RootType) -> Result<Vec<TableRow>> {
    let targets = admissible_targets(t0)?;
    let rows: Result<Vec<(String, String, Frame)>> = targets
        .par_iter()
        .map(|(spec, ci)| {
            let e = find_embedding(spec, *ci, t0)?;
            let f = frame(&e)?;
            let emb = format!("{} in {}", t0, spec.components[*ci]);
            Ok((spec.name.clone(), emb, f))
        })
        .collect();
    Ok(rows?
        .into_iter()
        .enumerate()
        .map(|(i, (niemeier, embedding, frame))| TableRow {
            index: i + 1,
            niemeier,
            embedding,
            frame,
        })
        .collect())
}

/// Canonical rendering of a root multiset, e.g. "E7^2+A1^2".
pub fn render_root_multiset(parts: &[RootType]) -> String {
    if parts.is_empty() {
        return "-".to_string();
    }
    let mut sorted = parts.to_vec();
    sorted.sort_by_key(root_sort_key);
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let mult = j - i;
        if mult == 1 {
            out.push(sorted[i].to_string());
        } else {
            out.push(format!("{}^{}", sorted[i], mult));
        }
        i = j;
    }
    out.join("+")
}

/// Canonical rendering of the fiber column, with Kodaira ambiguity kept as
/// a candidate list, e.g. "2III*+2(I2|III)".
pub fn render_fibers(parts: &[RootType]) -> String {
    let mut sorted = parts.to_vec();
    sorted.sort_by_key(root_sort_key);
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let mult = j - i;
        let cands = kodaira_candidates(sorted[i]);
        let cell = if cands.len() == 1 {
            cands[0].to_string()
        } else {
            format!(
                "({})",
                cands.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("|")
            )
        };
        if mult == 1 {
            out.push(cell);
        } else {
            out.push(format!("{mult}{cell}"));
        }
        i = j;
    }
    out.join("+")
}

/// MW column: torsion plus free rank, e.g. "Z/2Z+Z", "Z^2", "Z/3Z", "0".
pub fn render_mw(frame: &Frame) -> String {
    let mut parts: Vec<String> = frame
        .mw_torsion
        .invariant_factors
        .iter()
        .map(|d| format!("Z/{d}Z"))
        .collect();
    match frame.mw_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_counts() {
        let a8 = RootType::new('A', 8).unwrap();
        assert_eq!(admissible_targets(a8).unwrap().len(), 12);
        let d8 = RootType::new('D', 8).unwrap();
        assert_eq!(admissible_targets(d8).unwrap().len(), 6);
        let e8 = RootType::new('E', 8).unwrap();
        assert_eq!(admissible_targets(e8).unwrap().len(), 2);
        assert!(admissible_targets(RootType::new('A', 7).unwrap()).is_err());
    }

    #[test]
    fn classify_e8_matches_table() {
        let rows = classify(RootType::new('E', 8).unwrap()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].niemeier, "E8^3");
        assert_eq!(render_root_multiset(&rows[0].frame.root_part), "E8^2");
        assert_eq!(render_mw(&rows[0].frame), "0");
        assert_eq!(rows[1].niemeier, "E8+D16");
        assert_eq!(render_root_multiset(&rows[1].frame.root_part), "D16");
        assert_eq!(render_mw(&rows[1].frame), "Z/2Z");
        for r in &rows {
            assert_eq!(r.frame.det.clone().abs(), mat::int(1));
        }
    }
}
