//! Intersection lattices of diagonal and coordinate arrangements.
//!
//! Strata are ordered by reverse inclusion of subspaces, so `⊥` is the whole
//! ambient space and `join(u, v)` is the intersection `u ∩ v`. Ranks are real
//! dimensions. Strata are stored in a linear extension of the order
//! (increasing codimension, then canonical form), so every chain of the
//! poset is increasing in index; order-complex simplices inherit their
//! orientation from that.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};

/// Real (`R^m`) or complex (`C^m`) ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Real,
    Complex,
}

impl Ambient {
    /// Real dimension of one coordinate: 1 or 2.
    pub fn c(self) -> usize {
        match self {
            Ambient::Real => 1,
            Ambient::Complex => 2,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Real => "real",
            Ambient::Complex => "complex",
        })
    }
}

/// Which index sets generate the arrangement. Both give the same union of
/// subspaces (every non-face contains a missing face), but the lattices
/// differ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSet {
    /// One subspace per missing face.
    #[default]
    MissingFaces,
    /// One subspace per non-face.
    NonFaces,
}

/// `{z : z_i = z_j for i, j in the same block}`; `⊥` has no blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalStratum {
    blocks: Vec<FaceSet>,
}

impl DiagonalStratum {
    pub fn bottom() -> Self {
        DiagonalStratum { blocks: Vec::new() }
    }

    /// Canonicalizes: overlapping blocks are merged, singletons dropped,
    /// blocks sorted by minimum.
    pub fn new(blocks: impl IntoIterator<Item = FaceSet>) -> Self {
        let mut merged: Vec<FaceSet> = Vec::new();
        for b in blocks {
            let mut acc = b;
            let mut i = 0;
            while i < merged.len() {
                if merged[i].is_disjoint(&acc) {
                    i += 1;
                } else {
                    acc = acc.union(&merged.swap_remove(i));
                    i = 0;
                }
            }
            merged.push(acc);
        }
        merged.retain(|b| b.len() >= 2);
        merged.sort();
        DiagonalStratum { blocks: merged }
    }

    pub fn blocks(&self) -> &[FaceSet] {
        &self.blocks
    }

    /// `u ≤ v` iff `v ⊆ u` as subspaces iff each block of `u` lies in a block of `v`.
    pub fn le(&self, other: &DiagonalStratum) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.is_subset(c)))
    }

    pub fn join(&self, other: &DiagonalStratum) -> DiagonalStratum {
        DiagonalStratum::new(self.blocks.iter().chain(&other.blocks).cloned())
    }

    /// Real dimension `c · (m − Σ(|B| − 1))`.
    pub fn dimension(&self, m: usize, ambient: Ambient) -> usize {
        let lost: usize = self.blocks.iter().map(|b| b.len() - 1).sum();
        ambient.c() * (m - lost)
    }
}

impl fmt::Display for DiagonalStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "⊥");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                format!(
                    "D{}",
                    b.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", parts.join("∩"))
    }
}

/// `{z : z_i = 0 for i ∈ zero_set}`; `⊥` has an empty zero set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoordinateStratum {
    zero_set: FaceSet,
}

impl CoordinateStratum {
    pub fn new(zero_set: FaceSet) -> Self {
        CoordinateStratum { zero_set }
    }

    pub fn zero_set(&self) -> &FaceSet {
        &self.zero_set
    }

    pub fn dimension(&self, m: usize, ambient: Ambient) -> usize {
        ambient.c() * (m - self.zero_set.len())
    }
}

impl fmt::Display for CoordinateStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero_set.is_empty() {
            return write!(f, "⊥");
        }
        let s: Vec<String> = self.zero_set.iter().map(|v| v.to_string()).collect();
        write!(f, "C{}", s.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    Diagonal(DiagonalStratum),
    Coordinate(CoordinateStratum),
}

impl Stratum {
    pub fn le(&self, other: &Stratum) -> bool {
        match (self, other) {
            (Stratum::Diagonal(a), Stratum::Diagonal(b)) => a.le(b),
            (Stratum::Coordinate(a), Stratum::Coordinate(b)) => a.zero_set.is_subset(&b.zero_set),
            _ => false,
        }
    }

    fn join(&self, other: &Stratum) -> Stratum {
        match (self, other) {
            (Stratum::Diagonal(a), Stratum::Diagonal(b)) => Stratum::Diagonal(a.join(b)),
            (Stratum::Coordinate(a), Stratum::Coordinate(b)) => {
                Stratum::Coordinate(CoordinateStratum::new(a.zero_set.union(&b.zero_set)))
            }
            _ => unreachable!("strata of one lattice have the same kind"),
        }
    }

    pub fn dimension(&self, m: usize, ambient: Ambient) -> usize {
        match self {
            Stratum::Diagonal(s) => s.dimension(m, ambient),
            Stratum::Coordinate(s) => s.dimension(m, ambient),
        }
    }

    pub fn as_diagonal(&self) -> Option<&DiagonalStratum> {
        match self {
            Stratum::Diagonal(s) => Some(s),
            Stratum::Coordinate(_) => None,
        }
    }

    pub fn as_coordinate(&self) -> Option<&CoordinateStratum> {
        match self {
            Stratum::Coordinate(s) => Some(s),
            Stratum::Diagonal(_) => None,
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Diagonal(s) => s.fmt(f),
            Stratum::Coordinate(s) => s.fmt(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrangementKind {
    Diagonal,
    Coordinate,
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrangementKind::Diagonal => "diagonal",
            ArrangementKind::Coordinate => "coordinate",
        })
    }
}

/// Row-per-element bitsets.
#[derive(Clone, Debug)]
struct Relation {
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Relation {
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }
}

/// The intersection lattice of an arrangement, with `⊥` at index 0.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    m: usize,
    ambient: Ambient,
    kind: ArrangementKind,
    generator_set: GeneratorSet,
    strata: Vec<Stratum>,
    dims: Vec<usize>,
    index: HashMap<Stratum, usize>,
    /// `le.get(i, j)` iff `strata[i] ≤ strata[j]`.
    le: Relation,
    generators: Vec<usize>,
}

impl IntersectionLattice {
    fn close(
        m: usize,
        ambient: Ambient,
        kind: ArrangementKind,
        generator_set: GeneratorSet,
        bottom: Stratum,
        generators: Vec<Stratum>,
    ) -> Self {
        // breadth-first closure under joins with generators
        let mut seen: HashMap<Stratum, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(bottom.clone(), ());
        queue.push_back(bottom);
        while let Some(s) = queue.pop_front() {
            for g in &generators {
                let t = s.join(g);
                if !seen.contains_key(&t) {
                    seen.insert(t.clone(), ());
                    queue.push_back(t);
                }
            }
        }
        let mut strata: Vec<Stratum> = seen.into_keys().collect();
        strata.sort_by_cached_key(|s| (std::cmp::Reverse(s.dimension(m, ambient)), s.clone()));
        let dims: Vec<usize> = strata.iter().map(|s| s.dimension(m, ambient)).collect();
        let index: HashMap<Stratum, usize> = strata
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let n = strata.len();
        let mut le = Relation::new(n);
        for i in 0..n {
            le.set(i, i);
            for j in i + 1..n {
                if dims[j] < dims[i] && strata[i].le(&strata[j]) {
                    le.set(i, j);
                }
            }
        }
        let mut gens: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        gens.sort_unstable();
        gens.dedup();
        IntersectionLattice {
            m,
            ambient,
            kind,
            generator_set,
            strata,
            dims,
            index,
            le,
            generators: gens,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn generator_set(&self) -> GeneratorSet {
        self.generator_set
    }

    /// Real dimension `N` of the ambient space.
    pub fn ambient_dimension(&self) -> usize {
        self.ambient.c() * self.m
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &Stratum {
        &self.strata[i]
    }

    /// Indices of the generating subspaces.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, s: &Stratum) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Real dimension of stratum `i`.
    pub fn d(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Real codimension `N − d(i)`.
    pub fn codim(&self, i: usize) -> usize {
        self.ambient_dimension() - self.dims[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le.get(i, j)
    }

    /// `join(i, j)`: the intersection of the two subspaces.
    pub fn join(&self, i: usize, j: usize) -> usize {
        if self.le(i, j) {
            return j;
        }
        if self.le(j, i) {
            return i;
        }
        let s = self.strata[i].join(&self.strata[j]);
        self.index[&s]
    }

    /// Elements `w` with `lo ≤ w ≤ hi`, in index order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        if !self.le(lo, hi) {
            return Vec::new();
        }
        (lo..=hi)
            .filter(|&w| self.le(lo, w) && self.le(w, hi))
            .collect()
    }

    /// Elements covering `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (i + 1..self.len()).filter(|&j| self.le(i, j)).collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&w| w != j && self.le(w, j)))
            .collect()
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_covers(i).into_iter().map(move |j| (i, j)))
            .collect()
    }

    /// `d(u) + d(v) − d(join(u, v)) = N`, i.e. `u + v` spans the ambient space.
    pub fn codimension_condition(&self, u: usize, v: usize) -> bool {
        self.dims[u] + self.dims[v] == self.dims[self.join(u, v)] + self.ambient_dimension()
    }

    /// All strict chains (as increasing index lists) inside `elements`, which
    /// must be sorted. The empty chain is included when `with_empty`.
    pub fn chains(&self, elements: &[usize], with_empty: bool) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if with_empty {
            out.push(Vec::new());
        }
        let mut stack: Vec<usize> = Vec::new();
        fn extend(
            l: &IntersectionLattice,
            elements: &[usize],
            from: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            for k in from..elements.len() {
                let e = elements[k];
                if stack.last().is_none_or(|&top| l.lt(top, e)) {
                    stack.push(e);
                    out.push(stack.clone());
                    extend(l, elements, k + 1, stack, out);
                    stack.pop();
                }
            }
        }
        extend(self, elements, 0, &mut stack, &mut out);
        out
    }

    /// Serializable description: strata with blocks or zero sets, ranks and
    /// Hasse edges.
    pub fn dump(&self) -> LatticeDump {
        let strata = self
            .strata
            .iter()
            .enumerate()
            .map(|(i, s)| StratumDump {
                index: i,
                label: s.to_string(),
                blocks: s.as_diagonal().map(|d| d.blocks().to_vec()),
                zero_set: s.as_coordinate().map(|c| c.zero_set().clone()),
                d: self.dims[i],
                generator: self.generators.binary_search(&i).is_ok(),
            })
            .collect();
        LatticeDump {
            arrangement: self.kind,
            ambient: self.ambient,
            generators: self.generator_set,
            m: self.m,
            ambient_dimension: self.ambient_dimension(),
            strata,
            hasse_edges: self.hasse_edges(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumDump {
    pub index: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<FaceSet>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_set: Option<FaceSet>,
    pub d: usize,
    pub generator: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeDump {
    pub arrangement: ArrangementKind,
    pub ambient: Ambient,
    pub generators: GeneratorSet,
    pub m: usize,
    pub ambient_dimension: usize,
    pub strata: Vec<StratumDump>,
    pub hasse_edges: Vec<(usize, usize)>,
}

fn generating_sets(k: &SimplicialComplex, generators: GeneratorSet) -> Result<Vec<FaceSet>> {
    match generators {
        GeneratorSet::MissingFaces => Ok(k.missing_faces()),
        GeneratorSet::NonFaces => k.non_faces(),
    }
}

/// Lattice of `DA(K)`, generated by `D_I` for `I` in the chosen generator set.
pub fn diagonal_lattice(
    k: &SimplicialComplex,
    ambient: Ambient,
    generators: GeneratorSet,
) -> Result<IntersectionLattice> {
    if k.is_void() {
        return Err(Error::domain(
            "the void complex does not determine an arrangement",
        ));
    }
    if k.has_ghost_vertices() {
        return Err(Error::domain(format!(
            "diagonal arrangements need a complex without ghost vertices (ghosts: {})",
            k.ghost_vertices()
        )));
    }
    let gens = generating_sets(k, generators)?
        .into_iter()
        .map(|i| Stratum::Diagonal(DiagonalStratum::new([i])))
        .collect();
    Ok(IntersectionLattice::close(
        k.m(),
        ambient,
        ArrangementKind::Diagonal,
        generators,
        Stratum::Diagonal(DiagonalStratum::bottom()),
        gens,
    ))
}

/// Lattice of `CA(K)`, generated by `C_I` for `I` in the chosen generator set.
pub fn coordinate_lattice(
    k: &SimplicialComplex,
    ambient: Ambient,
    generators: GeneratorSet,
) -> Result<IntersectionLattice> {
    if k.is_void() {
        return Err(Error::domain(
            "the void complex does not determine an arrangement",
        ));
    }
    let gens = generating_sets(k, generators)?
        .into_iter()
        .map(|i| Stratum::Coordinate(CoordinateStratum::new(i)))
        .collect();
    Ok(IntersectionLattice::close(
        k.m(),
        ambient,
        ArrangementKind::Coordinate,
        generators,
        Stratum::Coordinate(CoordinateStratum::new(FaceSet::empty())),
        gens,
    ))
}

/// The three order complexes attached to an interval `[⊥, u]`, on a common
/// vertex set: vertex `i + 1` stands for stratum `labels[i]`.
#[derive(Clone, Debug)]
pub struct IntervalComplexes {
    /// `Δ[⊥, u]`.
    pub closed: SimplicialComplex,
    /// `Δ(⊥, u] ∪ Δ[⊥, u)`; `{∅}` when `u = ⊥`.
    pub boundary_union: SimplicialComplex,
    /// `Δ(⊥, u)`; `{∅}` when the open interval is empty or `u = ⊥`.
    pub open: SimplicialComplex,
    pub labels: Vec<usize>,
}

/// Order complexes of `[⊥, u]`, `(⊥, u] ∪ [⊥, u)` and `(⊥, u)`.
pub fn interval_order_complex(l: &IntersectionLattice, u: usize) -> Result<IntervalComplexes> {
    if u >= l.len() {
        return Err(Error::domain(format!(
            "stratum index {u} is not in the lattice (size {})",
            l.len()
        )));
    }
    let labels = l.interval(0, u);
    let pos: HashMap<usize, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i as u32 + 1))
        .collect();
    let n = labels.len();
    let to_face = |chain: &[usize]| FaceSet::new(chain.iter().map(|s| pos[s]));
    let chains = l.chains(&labels, false);
    let closed = SimplicialComplex::from_generators(n, chains.iter().map(|c| to_face(c)))?;
    let boundary = SimplicialComplex::from_generators(
        n,
        chains
            .iter()
            .filter(|c| u == 0 || !(c.contains(&0) && c.contains(&u)))
            .filter(|_| u != 0)
            .map(|c| to_face(c)),
    )?;
    let open = SimplicialComplex::from_generators(
        n,
        chains
            .iter()
            .filter(|c| !c.contains(&0) && !c.contains(&u))
            .map(|c| to_face(c)),
    )?;
    Ok(IntervalComplexes {
        closed,
        boundary_union: boundary,
        open,
        labels,
    })
}

/// A stratum `D_I` matched with the face `[m] \ I` of the Alexander dual.
#[derive(Clone, Debug, Serialize)]
pub struct DualMatch {
    pub stratum: usize,
    pub subset: FaceSet,
    pub dual_face: FaceSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualIsomorphism {
    pub holds: bool,
    pub strata: usize,
    pub non_faces: usize,
    pub mapping: Vec<DualMatch>,
}

/// Checks that the lattice of `{D_I : I ∉ K}` is isomorphic to the faces of
/// the Alexander dual ordered by reverse inclusion, via `D_I ↦ [m] \ I`
/// (with `⊥ ↦ [m]`).
pub fn lattice_isomorphic_to_dual(k: &SimplicialComplex) -> Result<DualIsomorphism> {
    if !k.common_vertex_predicate() {
        return Err(Error::domain("missing faces are not pairwise intersecting"));
    }
    let l = diagonal_lattice(k, Ambient::Complex, GeneratorSet::NonFaces)?;
    let dual = k.alexander_dual();
    let m = k.m();
    let non_faces = k.non_faces()?.len();
    let mut mapping = Vec::with_capacity(l.len());
    let mut holds = l.len() == non_faces + 1;
    for (i, s) in l.strata().iter().enumerate() {
        let blocks = s.as_diagonal().expect("diagonal lattice").blocks();
        let subset = match blocks {
            [] => FaceSet::empty(),
            [b] => b.clone(),
            _ => {
                holds = false;
                continue;
            }
        };
        let dual_face = subset.complement(m);
        if !dual.is_face(&dual_face) && i != 0 {
            holds = false;
        }
        mapping.push(DualMatch {
            stratum: i,
            subset,
            dual_face,
        });
    }
    // order: D_I ≤ D_J iff I ⊆ J iff dual faces reverse-included
    for a in &mapping {
        for b in &mapping {
            let lattice_le = l.le(a.stratum, b.stratum);
            let face_le = b.dual_face.is_subset(&a.dual_face);
            if lattice_le != face_le {
                holds = false;
            }
        }
    }
    Ok(DualIsomorphism {
        holds,
        strata: l.len(),
        non_faces,
        mapping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1u32, 2], [2, 3], [3, 4], [1, 4]]).unwrap()
    }

    #[test]
    fn square_diagonal_lattice() {
        let l = diagonal_lattice(&square(), Ambient::Complex, GeneratorSet::MissingFaces).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.d(0), 8);
        let labels: Vec<String> = l.strata().iter().map(ToString::to_string).collect();
        assert_eq!(labels, vec!["⊥", "D1,3", "D2,4", "D1,3∩D2,4"]);
        assert_eq!(l.d(3), 4);
        assert_eq!(l.join(1, 2), 3);
        assert!(l.codimension_condition(1, 2));
        assert_eq!(l.hasse_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn square_coordinate_lattice() {
        let l =
            coordinate_lattice(&square(), Ambient::Complex, GeneratorSet::MissingFaces).unwrap();
        let labels: Vec<String> = l.strata().iter().map(ToString::to_string).collect();
        assert_eq!(labels, vec!["⊥", "C1,3", "C2,4", "C1,2,3,4"]);
        assert_eq!(l.d(3), 0);
    }

    #[test]
    fn simplex_has_trivial_lattice() {
        let l = diagonal_lattice(
            &SimplicialComplex::simplex(3),
            Ambient::Real,
            GeneratorSet::MissingFaces,
        )
        .unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.d(0), 3);
    }

    #[test]
    fn ghost_vertices_are_rejected() {
        let k = SimplicialComplex::from_generators(3, [[1u32, 2]]).unwrap();
        assert!(matches!(
            diagonal_lattice(&k, Ambient::Complex, GeneratorSet::MissingFaces),
            Err(Error::Domain(_))
        ));
        assert!(coordinate_lattice(&k, Ambient::Complex, GeneratorSet::MissingFaces).is_ok());
    }

    #[test]
    fn atom_interval() {
        let l = diagonal_lattice(&square(), Ambient::Complex, GeneratorSet::MissingFaces).unwrap();
        let iv = interval_order_complex(&l, 1).unwrap();
        assert_eq!(iv.labels, vec![0, 1]);
        assert_eq!(iv.closed.facets(), &[FaceSet::from([1, 2])]);
        assert_eq!(iv.open, SimplicialComplex::empty(2));
        let top = interval_order_complex(&l, 3).unwrap();
        assert_eq!(top.closed.facets().len(), 2);
        assert_eq!(top.open.facets().len(), 2);
        assert!(interval_order_complex(&l, 9).is_err());
    }

    #[test]
    fn chains_are_strict() {
        let l = diagonal_lattice(&square(), Ambient::Complex, GeneratorSet::MissingFaces).unwrap();
        let all: Vec<usize> = (0..l.len()).collect();
        let chains = l.chains(&all, true);
        // ∅, 4 singletons, 5 pairs (1,2 incomparable), 2 triples
        assert_eq!(chains.len(), 12);
    }
}
