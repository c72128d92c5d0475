//! Named example complexes and generators for test corpora.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{for_each_permutation, FaceSet, SimplicialComplex};
use crate::error::{Error, Result};

/// Two disjoint points on `[2]`.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_generators(2, [[1u32], [2]]).expect("valid")
}

/// The boundary of the square with vertices `1, 2, 3, 4` in cyclic order.
pub fn square() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, [[1u32, 2], [2, 3], [3, 4], [1, 4]]).expect("valid")
}

/// The six-vertex real projective plane, labeled so that its missing faces
/// are `123 124 135 146 156 236 245 256 345 346`.
pub fn rp2_6() -> SimplicialComplex {
    let facets = [
        [4u32, 5, 6],
        [3, 5, 6],
        [2, 4, 6],
        [2, 3, 5],
        [2, 3, 4],
        [1, 4, 5],
        [1, 3, 6],
        [1, 3, 4],
        [1, 2, 6],
        [1, 2, 5],
    ];
    SimplicialComplex::from_facets(6, facets).expect("valid")
}

/// The seven-vertex complex whose missing faces are those of [`rp2_6`]
/// with vertex 7 added.
pub fn rp2_cone_7() -> SimplicialComplex {
    rp2_6().cone_extension()
}

/// `sk^{k−2} Δ^{m−1}`: all subsets of `[m]` of size below `k`.
pub fn skeleton_of_simplex(m: usize, k: usize) -> Result<SimplicialComplex> {
    if k < 1 || k > m + 1 {
        return Err(Error::domain(format!(
            "need 1 ≤ k ≤ m + 1 (m = {m}, k = {k})"
        )));
    }
    SimplicialComplex::simplex(m).skeleton(k as i64 - 2)
}

/// Looks up a named example.
pub fn named(name: &str) -> Option<SimplicialComplex> {
    match name {
        "two-points" => Some(two_points()),
        "square" => Some(square()),
        "rp2" => Some(rp2_6()),
        "rp2-cone" => Some(rp2_cone_7()),
        _ => None,
    }
}

pub const NAMED_EXAMPLES: &[&str] = &["two-points", "square", "rp2", "rp2-cone"];

/// Bitset over subset masks of `[m]`, `m ≤ 6`.
fn downset_bits(k: &SimplicialComplex) -> u64 {
    k.faces().iter().fold(0u64, |acc, f| acc | 1 << f.to_mask())
}

fn from_downset_bits(m: usize, bits: u64) -> SimplicialComplex {
    let faces = (0..1u64 << m)
        .filter(|s| bits >> s & 1 == 1)
        .map(FaceSet::from_mask);
    SimplicialComplex::from_generators(m, faces).expect("labels within range")
}

fn permute_mask(mask: u64, perm: &[u32]) -> u64 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        out |= 1 << perm[b];
        rest &= rest - 1;
    }
    out
}

/// Smallest downset bitset over all relabelings.
fn canonical_bits(m: usize, bits: u64) -> u64 {
    let subsets: Vec<u64> = (0..1u64 << m).filter(|s| bits >> s & 1 == 1).collect();
    let mut perm: Vec<u32> = (0..m as u32).collect();
    let mut best = u64::MAX;
    for_each_permutation(&mut perm, &mut |p| {
        let img = subsets
            .iter()
            .fold(0u64, |acc, &s| acc | 1 << permute_mask(s, p));
        best = best.min(img);
    });
    best
}

/// Every complex on `[m]` (containing `∅`) up to relabeling, in a fixed order.
/// Ghost vertices are skipped unless `allow_ghosts`. Limited to `m ≤ 5`.
pub fn exhaustive(m: usize, allow_ghosts: bool) -> Result<Vec<SimplicialComplex>> {
    if m > 5 {
        return Err(Error::domain(format!(
            "exhaustive enumeration is limited to m ≤ 5 (got {m})"
        )));
    }
    let mut order: Vec<u64> = (1..1u64 << m).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let mut found: BTreeSet<u64> = BTreeSet::new();
    fn walk(
        m: usize,
        order: &[u64],
        i: usize,
        bits: u64,
        allow_ghosts: bool,
        found: &mut BTreeSet<u64>,
    ) {
        if i == order.len() {
            let full_vertices = (0..m).all(|v| bits >> (1u64 << v) & 1 == 1);
            if allow_ghosts || full_vertices {
                found.insert(canonical_bits(m, bits));
            }
            return;
        }
        let s = order[i];
        walk(m, order, i + 1, bits, allow_ghosts, found);
        let mut rest = s;
        let closed = loop {
            if rest == 0 {
                break true;
            }
            let b = rest & rest.wrapping_neg();
            if bits >> (s & !b) & 1 == 0 {
                break false;
            }
            rest &= rest - 1;
        };
        if closed {
            walk(m, order, i + 1, bits | 1 << s, allow_ghosts, found);
        }
    }
    walk(m, &order, 0, 1, allow_ghosts, &mut found);
    Ok(found.into_iter().map(|b| from_downset_bits(m, b)).collect())
}

/// Canonical representative of `k` up to relabeling (`m ≤ 6`).
pub fn canonical_form(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.m() > 6 {
        return Err(Error::domain("canonical forms are limited to m ≤ 6"));
    }
    Ok(from_downset_bits(
        k.m(),
        canonical_bits(k.m(), downset_bits(k)),
    ))
}

/// A random complex on `[m]` without ghost vertices: `facets` random subsets
/// with each vertex kept with probability `density`, plus all vertices.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    m: usize,
    facets: usize,
    density: f64,
) -> SimplicialComplex {
    let mut gens: Vec<FaceSet> = (1..=m as u32).map(|v| FaceSet::new([v])).collect();
    for _ in 0..facets {
        gens.push(FaceSet::new(
            (1..=m as u32).filter(|_| rng.random_bool(density)),
        ));
    }
    SimplicialComplex::from_generators(m, gens).expect("labels within range")
}

/// A random complex on `[m]` whose missing faces pairwise intersect and have
/// at least two elements (so there are no ghost vertices).
pub fn random_common_vertex_complex<R: Rng>(
    rng: &mut R,
    m: usize,
    max_missing: usize,
) -> SimplicialComplex {
    assert!(m >= 2, "need at least two vertices");
    let mut missing: Vec<FaceSet> = Vec::new();
    let target = rng.random_range(1..=max_missing.max(1));
    let mut attempts = 0;
    while missing.len() < target && attempts < 200 {
        attempts += 1;
        let size = rng.random_range(2..=m);
        let mut vs: Vec<u32> = (1..=m as u32).collect();
        vs.shuffle(rng);
        let cand = FaceSet::new(vs[..size].iter().copied());
        let fits = missing
            .iter()
            .all(|f| !f.is_disjoint(&cand) && !f.is_subset(&cand) && !cand.is_subset(f));
        if fits {
            missing.push(cand);
        }
    }
    SimplicialComplex::from_missing_faces(m, missing).expect("antichain of valid sets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{reduced_homology, AbelianGroup};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rp2_is_a_projective_plane() {
        let k = rp2_6();
        assert_eq!(k.f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(reduced_homology(&k).get(1), AbelianGroup::new(0, [2]));
        let mf: Vec<String> = k.missing_faces().iter().map(|f| f.to_string()).collect();
        assert_eq!(
            mf,
            [
                "{1,2,3}", "{1,2,4}", "{1,3,5}", "{1,4,6}", "{1,5,6}", "{2,3,6}", "{2,4,5}",
                "{2,5,6}", "{3,4,5}", "{3,4,6}"
            ]
        );
        assert!(k.common_vertex_predicate());
    }

    #[test]
    fn cone_adds_apex_to_missing_faces() {
        let k = rp2_cone_7();
        assert_eq!(k.m(), 7);
        assert!(k
            .missing_faces()
            .iter()
            .all(|f| f.len() == 4 && f.contains(7)));
        assert_eq!(k.dim(), Some(5));
        assert_eq!(k.neighbourliness(), 2);
    }

    #[test]
    fn exhaustive_counts() {
        // complexes up to isomorphism without ghost vertices on 1..4 vertices
        let counts: Vec<usize> = (1..=4)
            .map(|m| exhaustive(m, false).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 20]);
        assert!(exhaustive(6, false).is_err());
    }

    #[test]
    fn random_common_vertex_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let k = random_common_vertex_complex(&mut rng, 6, 4);
            assert!(k.common_vertex_predicate());
            assert!(!k.has_ghost_vertices());
        }
    }
}
