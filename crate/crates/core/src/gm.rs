//! Cohomology of arrangement complements.
//!
//! The general route is the Goresky–MacPherson sum over the intersection
//! lattice: `H^q(M) = ⊕_u H_{N − d(u) − q}(Δ[⊥,u], Δ(⊥,u] ∪ Δ[⊥,u))`. For
//! `u > ⊥` the relative group equals `H̃_{k−2}(Δ(⊥,u))`, which is what the
//! default route computes; the relative chains are available as a check.
//!
//! For diagonal arrangements whose missing faces pairwise intersect there are
//! two closed forms, one over links in the Alexander dual and one over full
//! subcomplexes. Coordinate arrangements additionally have the
//! full-subcomplex sum over all subsets (including `∅`).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    homology, reduced_cohomology, reduced_homology, AbelianGroup, ChainComplex, GradedAbelianGroup,
};
use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::lattice::{
    coordinate_lattice, diagonal_lattice, Ambient, ArrangementKind, GeneratorSet,
    IntersectionLattice,
};

/// How each stratum's relative group is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumMethod {
    /// Reduced homology of the open interval, shifted by two.
    #[default]
    OpenInterval,
    /// Relative chains of the closed interval modulo its boundary.
    RelativePair,
}

/// One nonzero summand of the Goresky–MacPherson sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GmTerm {
    pub stratum: usize,
    pub label: String,
    pub codim: usize,
    pub degree: i64,
    pub group: AbelianGroup,
}

/// Homology of `(Δ[⊥,u], Δ(⊥,u] ∪ Δ[⊥,u))` in every degree.
pub fn stratum_pair_homology(
    l: &IntersectionLattice,
    u: usize,
    method: StratumMethod,
) -> Result<GradedAbelianGroup> {
    if u >= l.len() {
        return Err(Error::domain(format!(
            "stratum index {u} is not in the lattice"
        )));
    }
    if u == l.bottom() {
        let mut h = GradedAbelianGroup::new();
        h.set(0, AbelianGroup::free(1));
        return Ok(h);
    }
    let interval = l.interval(l.bottom(), u);
    match method {
        StratumMethod::OpenInterval => {
            let open: Vec<usize> = interval
                .into_iter()
                .filter(|&w| w != l.bottom() && w != u)
                .collect();
            let cells = l.chains(&open, true).into_iter().map(to_cell);
            Ok(homology(&ChainComplex::from_cells(cells)?).shifted(2))
        }
        StratumMethod::RelativePair => {
            let cells = l
                .chains(&interval, false)
                .into_iter()
                .filter(|c| c.first() == Some(&l.bottom()) && c.last() == Some(&u))
                .map(to_cell);
            Ok(homology(&ChainComplex::from_cells(cells)?))
        }
    }
}

fn to_cell(chain: Vec<usize>) -> Vec<u32> {
    chain.into_iter().map(|s| s as u32).collect()
}

/// The nonzero summands of the Goresky–MacPherson sum in degrees `0..=max_q`,
/// in stratum order.
pub fn gm_terms(l: &IntersectionLattice, max_q: i64, method: StratumMethod) -> Result<Vec<GmTerm>> {
    let per_stratum: Vec<Result<Vec<GmTerm>>> = (0..l.len())
        .into_par_iter()
        .map(|u| {
            let codim = l.codim(u);
            let h = stratum_pair_homology(l, u, method)?;
            Ok(h.iter()
                .map(|(k, g)| GmTerm {
                    stratum: u,
                    label: l.stratum(u).to_string(),
                    codim,
                    degree: codim as i64 - k,
                    group: g.clone(),
                })
                .filter(|t| (0..=max_q).contains(&t.degree))
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for terms in per_stratum {
        out.extend(terms?);
    }
    Ok(out)
}

/// `H^*(M)` of the arrangement described by `l`, up to degree `max_q`.
pub fn gm_cohomology(
    l: &IntersectionLattice,
    max_q: i64,
    method: StratumMethod,
) -> Result<GradedAbelianGroup> {
    let mut h = GradedAbelianGroup::new();
    for t in gm_terms(l, max_q, method)? {
        if t.degree < 0 {
            return Err(Error::integrity(format!(
                "stratum {} contributes in negative degree",
                t.label
            )));
        }
        h.add(t.degree, &t.group);
    }
    if l.kind() == ArrangementKind::Diagonal && l.ambient() == Ambient::Complex {
        check_vanishing(&h, l.ambient_dimension())?;
    }
    Ok(h)
}

/// Complex diagonal complements have no cohomology above degree `N − 2`.
fn check_vanishing(h: &GradedAbelianGroup, n: usize) -> Result<()> {
    match h.max_degree() {
        Some(q) if q > n as i64 - 2 => Err(Error::integrity(format!(
            "nonzero cohomology in degree {q} exceeds the bound {}",
            n as i64 - 2
        ))),
        _ => Ok(()),
    }
}

/// `H^*(D(K))` (or its real analogue) via the Goresky–MacPherson sum.
pub fn diagonal_cohomology(
    k: &SimplicialComplex,
    ambient: Ambient,
    max_q: Option<i64>,
    generators: GeneratorSet,
    method: StratumMethod,
) -> Result<GradedAbelianGroup> {
    let l = diagonal_lattice(k, ambient, generators)?;
    gm_cohomology(&l, max_q.unwrap_or(l.ambient_dimension() as i64), method)
}

/// `H^*(U(K))` (or `U_R(K)`) via the Goresky–MacPherson sum.
pub fn coordinate_cohomology(
    k: &SimplicialComplex,
    ambient: Ambient,
    max_q: Option<i64>,
    generators: GeneratorSet,
    method: StratumMethod,
) -> Result<GradedAbelianGroup> {
    let l = coordinate_lattice(k, ambient, generators)?;
    gm_cohomology(&l, max_q.unwrap_or(l.ambient_dimension() as i64), method)
}

fn require_common_vertex(k: &SimplicialComplex) -> Result<()> {
    if k.is_void() {
        return Err(Error::domain(
            "the void complex does not determine an arrangement",
        ));
    }
    if k.has_ghost_vertices() {
        return Err(Error::domain(
            "diagonal arrangements need a complex without ghost vertices",
        ));
    }
    if !k.common_vertex_predicate() {
        return Err(Error::domain("missing faces are not pairwise intersecting"));
    }
    Ok(())
}

/// Diagonal complement cohomology from links in the Alexander dual: each
/// face `Î` of `K̂`, with `I = [m] \ Î`, contributes
/// `H̃_{c(|I|−1) − 2 − q}(link Î)` to degree `q`. The empty face is included.
pub fn diagonal_cohomology_via_links(
    k: &SimplicialComplex,
    ambient: Ambient,
    max_q: Option<i64>,
) -> Result<GradedAbelianGroup> {
    require_common_vertex(k)?;
    let m = k.m();
    let c = ambient.c() as i64;
    let max_q = max_q.unwrap_or((c as usize * m) as i64);
    let dual = k.alexander_dual();
    let faces = dual.faces();
    let parts: Vec<Result<Vec<(i64, AbelianGroup)>>> = faces
        .par_iter()
        .map(|face| {
            let size = (m - face.len()) as i64;
            let link = dual.link(face)?;
            Ok(reduced_homology(&link.complex)
                .iter()
                .map(|(j, g)| (c * (size - 1) - 2 - j, g.clone()))
                .collect())
        })
        .collect();
    let mut h = GradedAbelianGroup::new();
    h.set(0, AbelianGroup::free(1));
    for part in parts {
        for (q, g) in part? {
            if (0..=max_q).contains(&q) {
                h.add(q, &g);
            }
        }
    }
    Ok(h)
}

/// Diagonal complement cohomology from full subcomplexes: each nonempty
/// `I ⊆ [m]` contributes `H̃^j(K_I)` to degree `j + (c − 1)(|I| − 1)`.
pub fn diagonal_cohomology_via_subcomplexes(
    k: &SimplicialComplex,
    ambient: Ambient,
    max_q: Option<i64>,
) -> Result<GradedAbelianGroup> {
    require_common_vertex(k)?;
    let m = k.m();
    let c = ambient.c() as i64;
    let max_q = max_q.unwrap_or((c as usize * m) as i64);
    let mut h = GradedAbelianGroup::new();
    h.set(0, AbelianGroup::free(1));
    for (size, q, g) in full_subcomplex_sum(k)? {
        if size == 0 {
            continue;
        }
        let q = q + (c - 1) * (size as i64 - 1);
        if (0..=max_q).contains(&q) {
            h.add(q, &g);
        }
    }
    Ok(h)
}

/// Coordinate complement cohomology from full subcomplexes: each
/// `J ⊆ [m]` (including `∅`) contributes `H̃^j(K_J)` to degree
/// `j + (c − 1)|J| + 1`.
pub fn coordinate_cohomology_via_subcomplexes(
    k: &SimplicialComplex,
    ambient: Ambient,
    max_q: Option<i64>,
) -> Result<GradedAbelianGroup> {
    if k.is_void() {
        return Err(Error::domain(
            "the void complex does not determine an arrangement",
        ));
    }
    let c = ambient.c() as i64;
    let max_q = max_q.unwrap_or((c as usize * k.m()) as i64);
    let mut h = GradedAbelianGroup::new();
    for (size, j, g) in full_subcomplex_sum(k)? {
        let q = j + (c - 1) * size as i64 + 1;
        if (0..=max_q).contains(&q) {
            h.add(q, &g);
        }
    }
    Ok(h)
}

/// `(|I|, j, H̃^j(K_I))` for every subset `I` that is not a face (faces
/// give simplices, which are acyclic) plus `I = ∅`.
fn full_subcomplex_sum(k: &SimplicialComplex) -> Result<Vec<(usize, i64, AbelianGroup)>> {
    let subsets: Vec<FaceSet> = std::iter::once(FaceSet::empty())
        .chain(k.non_faces()?)
        .collect();
    let parts: Vec<Result<Vec<(usize, i64, AbelianGroup)>>> = subsets
        .par_iter()
        .map(|i| {
            let sub = k.full_subcomplex(i)?;
            Ok(reduced_cohomology(&sub.complex)
                .iter()
                .map(|(j, g)| (i.len(), j, g.clone()))
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}
