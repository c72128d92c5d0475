//! Oracles shared by the integration tests. Everything here is written
//! independently of the library's own algebra.
#![allow(dead_code)]

use std::collections::BTreeMap;

use arrcoh::algebra::{AbelianGroup, ChainComplex, GradedAbelianGroup, IntegerMatrix};
use arrcoh::complex::{FaceSet, SimplicialComplex};
use arrcoh::corpus;
use arrcoh::lattice::{Ambient, GeneratorSet};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Builds a graded group from `(degree, rank, torsion)` triples.
pub fn graded(parts: &[(i64, usize, &[u64])]) -> GradedAbelianGroup {
    let mut h = GradedAbelianGroup::new();
    for &(q, r, t) in parts {
        h.add(q, &AbelianGroup::new(r, t.iter().copied()));
    }
    h
}

pub fn to_rows(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<BigInt>], p: u64) -> usize {
    let p_big = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = ((x % &p_big) + &p_big) % &p_big;
                    v.to_u64().expect("reduced")
                })
                .collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: u64| -> u64 {
        // Fermat, p prime
        let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let scale = inv(a[rank][c]);
        for x in a[rank].iter_mut() {
            *x = *x * scale % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..a.len() {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].abs();
        rank += 1;
    }
    rank
}

/// `dim H_k(C; F_p)` for every degree.
pub fn betti_mod_p(c: &ChainComplex, p: u64) -> BTreeMap<i64, usize> {
    let rank_of = |k: i64| rank_mod_p(&to_rows(&c.boundary(k).to_integer_matrix()), p);
    (c.min_degree()..=c.max_degree())
        .map(|k| (k, c.rank(k) - rank_of(k) - rank_of(k + 1)))
        .collect()
}

/// `dim H_k(C; Q)` for every degree.
pub fn betti_rational(c: &ChainComplex) -> BTreeMap<i64, usize> {
    let rank_of = |k: i64| rational_rank(&to_rows(&c.boundary(k).to_integer_matrix()));
    (c.min_degree()..=c.max_degree())
        .map(|k| (k, c.rank(k) - rank_of(k) - rank_of(k + 1)))
        .collect()
}

/// All subsets of `[m]` as masks that are faces, checked against the facet list.
fn is_face_mask(k: &SimplicialComplex, s: u64) -> bool {
    k.facets().iter().any(|f| {
        let fm: u64 = f.iter().fold(0, |acc, v| acc | 1 << (v - 1));
        s & fm == s
    })
}

fn mask_to_face(s: u64) -> FaceSet {
    FaceSet::new((0..64u32).filter(|b| s >> b & 1 == 1).map(|b| b + 1))
}

/// Minimal non-faces by brute force over all subsets.
pub fn brute_missing_faces(k: &SimplicialComplex) -> Vec<FaceSet> {
    let m = k.m();
    let mut out: Vec<FaceSet> = (0..1u64 << m)
        .filter(|&s| {
            !is_face_mask(k, s) && (0..m).all(|b| s >> b & 1 == 0 || is_face_mask(k, s & !(1 << b)))
        })
        .map(mask_to_face)
        .collect();
    out.sort();
    out
}

/// Faces of the Alexander dual by brute force: subsets whose complement is
/// a non-face.
pub fn brute_dual_faces(k: &SimplicialComplex) -> Vec<FaceSet> {
    let m = k.m();
    let full = (1u64 << m) - 1;
    let mut out: Vec<FaceSet> = (0..1u64 << m)
        .filter(|&s| !is_face_mask(k, full & !s))
        .map(mask_to_face)
        .collect();
    out.sort();
    out
}

/// The corpus for the suspension and Golod criteria: every complex on at
/// most five vertices with pairwise intersecting missing faces, up to
/// relabeling, plus `random` random ones on six vertices.
pub fn common_vertex_corpus(random: usize, seed: u64) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (1..=5)
        .flat_map(|m| corpus::exhaustive(m, false).expect("m ≤ 5"))
        .filter(|k| k.common_vertex_predicate())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..random).map(|_| corpus::random_common_vertex_complex(&mut rng, 6, 5)));
    out
}

pub const AMBIENTS: [Ambient; 2] = [Ambient::Real, Ambient::Complex];
pub const MISSING: GeneratorSet = GeneratorSet::MissingFaces;
