//! Abstract simplicial complexes on `[m] = {1, …, m}`.
//!
//! A complex is stored by its facets (the inclusion-maximal faces). Faces are
//! enumerated on demand from the facets, so most operations never touch the
//! full `2^m` power set. Operations that genuinely range over all subsets of
//! `[m]` (non-faces, full-subcomplex sums) refuse to run for `m > 25`.
//!
//! Two degenerate complexes deserve a mention. The complex `{∅}` is valid and
//! has reduced homology `Z` in degree `-1`. The *void* complex has no faces at
//! all; it only arises as the Alexander dual of a full simplex.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subsets of `[m]` beyond this size are not enumerated exhaustively.
pub const MAX_ENUMERATION_VERTICES: usize = 25;

/// A finite set of vertex labels, kept sorted and duplicate free.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceSet(Vec<u32>);

impl FaceSet {
    pub fn empty() -> Self {
        FaceSet(Vec::new())
    }

    /// Builds a set from arbitrary labels; duplicates are merged.
    pub fn new<I: IntoIterator<Item = u32>>(labels: I) -> Self {
        let mut v: Vec<u32> = labels.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FaceSet(v)
    }

    /// Builds a set and checks that every label lies in `1..=m`.
    pub fn within<I: IntoIterator<Item = u32>>(labels: I, m: usize) -> Result<Self> {
        let set = FaceSet::new(labels);
        if let Some(&bad) = set.0.iter().find(|&&v| v == 0 || v as usize > m) {
            return Err(Error::domain(format!("vertex {bad} is outside 1..={m}")));
        }
        Ok(set)
    }

    /// `{1, …, n}`.
    pub fn range(n: usize) -> Self {
        FaceSet((1..=n as u32).collect())
    }

    /// Set with bit `i` of `mask` standing for vertex `i + 1`.
    pub fn from_mask(mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros();
            v.push(bit + 1);
            rest &= rest - 1;
        }
        FaceSet(v)
    }

    /// Inverse of [`FaceSet::from_mask`]; labels above 64 are not representable.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| {
            debug_assert!((1..=64).contains(&v));
            acc | (1u64 << (v - 1))
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &FaceSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        FaceSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &FaceSet) -> FaceSet {
        FaceSet(self.iter().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: u32) -> FaceSet {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        FaceSet(out)
    }

    pub fn without(&self, v: u32) -> FaceSet {
        FaceSet(self.iter().filter(|&w| w != v).collect())
    }

    /// Complement inside `[m]`.
    pub fn complement(&self, m: usize) -> FaceSet {
        FaceSet((1..=m as u32).filter(|v| !self.contains(*v)).collect())
    }

    /// Adds `offset` to every label.
    pub fn shifted(&self, offset: u32) -> FaceSet {
        FaceSet(self.0.iter().map(|v| v + offset).collect())
    }

    /// Every subset of this set with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<FaceSet> {
        let n = self.len();
        if k > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(FaceSet(idx.iter().map(|&i| self.0[i]).collect()));
            // rightmost position that can still advance
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<u32> for FaceSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        FaceSet::new(iter)
    }
}

impl From<&[u32]> for FaceSet {
    fn from(v: &[u32]) -> Self {
        FaceSet::new(v.iter().copied())
    }
}

impl<const N: usize> From<[u32; N]> for FaceSet {
    fn from(v: [u32; N]) -> Self {
        FaceSet::new(v)
    }
}

/// A complex together with the original label of each of its vertices:
/// vertex `i + 1` of `complex` was called `labels[i]` in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    pub labels: Vec<u32>,
}

/// A complex whose vertices stand for faces of another complex, as produced
/// by barycentric subdivision: vertex `i + 1` is `faces[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub faces: Vec<FaceSet>,
}

/// An abstract simplicial complex on the vertex set `[m]`, stored by facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    /// Sorted antichain. Empty only for the void complex.
    facets: Vec<FaceSet>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[m={}; ", self.m)?;
        if self.is_void() {
            write!(f, "void")?;
        }
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{facet:?}")?;
        }
        write!(f, "]")
    }
}

fn maximal_antichain(mut sets: Vec<FaceSet>) -> Vec<FaceSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<FaceSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `generators`: all their subsets. Generators
    /// that are contained in others are absorbed; an empty generator list
    /// yields `{∅}`.
    pub fn from_generators<I, F>(m: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<FaceSet>,
    {
        let mut sets = Vec::new();
        for g in generators {
            let g: FaceSet = g.into();
            if let Some(bad) = g.iter().find(|&v| v == 0 || v as usize > m) {
                return Err(Error::domain(format!("vertex {bad} is outside 1..={m}")));
            }
            sets.push(g);
        }
        if sets.is_empty() {
            sets.push(FaceSet::empty());
        }
        Ok(SimplicialComplex {
            m,
            facets: maximal_antichain(sets),
        })
    }

    /// Like [`SimplicialComplex::from_generators`], but rejects lists that are
    /// not antichains: every listed set must really be a facet.
    pub fn from_facets<I, F>(m: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<FaceSet>,
    {
        let listed: Vec<FaceSet> = facets.into_iter().map(Into::into).collect();
        let k = SimplicialComplex::from_generators(m, listed.iter().cloned())?;
        let distinct: BTreeSet<&FaceSet> = listed.iter().collect();
        if distinct.len() != listed.len() {
            return Err(Error::malformed("facet list contains duplicates"));
        }
        if let Some(f) = listed.iter().find(|f| !k.facets.contains(f)) {
            if !(f.is_empty() && listed.len() == 1) {
                return Err(Error::malformed(format!(
                    "{f:?} is listed as a facet but lies inside another facet"
                )));
            }
        }
        Ok(k)
    }

    /// The maximal complex on `[m]` whose minimal non-faces are exactly
    /// `missing`. The list must be an antichain of nonempty sets.
    pub fn from_missing_faces<I, F>(m: usize, missing: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<FaceSet>,
    {
        let mut mf: Vec<FaceSet> = Vec::new();
        for f in missing {
            let f: FaceSet = f.into();
            if f.is_empty() {
                return Err(Error::malformed("the empty set cannot be a missing face"));
            }
            if let Some(bad) = f.iter().find(|&v| v == 0 || v as usize > m) {
                return Err(Error::malformed(format!("vertex {bad} is outside 1..={m}")));
            }
            mf.push(f);
        }
        for (i, a) in mf.iter().enumerate() {
            for (j, b) in mf.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::malformed(format!(
                        "missing faces are not minimal: {a:?} ⊆ {b:?}"
                    )));
                }
            }
        }
        check_enumerable(m)?;
        let masks: Vec<u64> = mf.iter().map(FaceSet::to_mask).collect();
        let is_face = |s: u64| masks.iter().all(|&f| f & s != f);
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut facets = Vec::new();
        for s in 0..=full {
            if !is_face(s) {
                continue;
            }
            let maximal = (0..m).all(|v| s & (1 << v) != 0 || !is_face(s | (1 << v)));
            if maximal {
                facets.push(FaceSet::from_mask(s));
            }
        }
        Ok(SimplicialComplex {
            m,
            facets: maximal_antichain(facets),
        })
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![FaceSet::range(m)],
        }
    }

    /// The complex `{∅}` on `[m]`: every vertex is a ghost vertex.
    pub fn empty(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![FaceSet::empty()],
        }
    }

    /// The complex with no faces at all, not even `∅`.
    pub fn void(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: Vec::new(),
        }
    }

    /// Boundary of the simplex on `[m]`.
    pub fn simplex_boundary(m: usize) -> Self {
        let full = FaceSet::range(m);
        SimplicialComplex::from_generators(m, full.subsets_of_size(m.saturating_sub(1)))
            .expect("labels in range")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn is_face(&self, s: &FaceSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    pub fn vertices(&self) -> FaceSet {
        FaceSet::new(self.facets.iter().flat_map(|f| f.iter()))
    }

    pub fn ghost_vertices(&self) -> FaceSet {
        self.vertices().complement(self.m)
    }

    pub fn has_ghost_vertices(&self) -> bool {
        self.vertices().len() < self.m
    }

    /// All faces of cardinality `size`, sorted.
    pub fn faces_of_size(&self, size: usize) -> Vec<FaceSet> {
        let mut seen: HashSet<FaceSet> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets_of_size(size) {
                seen.insert(s);
            }
        }
        let mut out: Vec<FaceSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// All faces (including `∅` unless the complex is void), grouped by
    /// cardinality and sorted within each group.
    pub fn faces(&self) -> Vec<FaceSet> {
        let top = self.facets.iter().map(FaceSet::len).max();
        match top {
            None => Vec::new(),
            Some(top) => (0..=top).flat_map(|s| self.faces_of_size(s)).collect(),
        }
    }

    /// Number of faces of each cardinality `0, 1, …, dim + 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.facets.iter().map(FaceSet::len).max().unwrap_or(0);
        if self.is_void() {
            return Vec::new();
        }
        (0..=top).map(|s| self.faces_of_size(s).len()).collect()
    }

    /// Reduced Euler characteristic `Σ (-1)^dim` over all faces including `∅`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(size, &n)| if size % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// The minimal non-faces `MF(K)`, sorted.
    pub fn missing_faces(&self) -> Vec<FaceSet> {
        if self.is_void() {
            return vec![FaceSet::empty()];
        }
        let mut out: BTreeSet<FaceSet> = BTreeSet::new();
        for face in self.faces() {
            for v in 1..=self.m as u32 {
                if face.contains(v) {
                    continue;
                }
                let cand = face.with(v);
                if self.is_face(&cand) || out.contains(&cand) {
                    continue;
                }
                if cand.iter().all(|w| self.is_face(&cand.without(w))) {
                    out.insert(cand);
                }
            }
        }
        out.into_iter().collect()
    }

    /// True iff any two missing faces share a vertex.
    pub fn common_vertex_predicate(&self) -> bool {
        let mf = self.missing_faces();
        mf.iter()
            .enumerate()
            .all(|(i, a)| mf[i + 1..].iter().all(|b| !a.is_disjoint(b)))
    }

    /// Every subset of `[m]` that is not a face, sorted by size then lexicographically.
    pub fn non_faces(&self) -> Result<Vec<FaceSet>> {
        check_enumerable(self.m)?;
        let facet_masks: Vec<u64> = self.facets.iter().map(FaceSet::to_mask).collect();
        let mut out: Vec<FaceSet> = (0..1u64 << self.m)
            .filter(|s| !facet_masks.iter().any(|f| s & f == *s))
            .map(FaceSet::from_mask)
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `link_K(I)` on the vertex set `[m] \ I`, relabeled to `1..=m-|I|`.
    pub fn link(&self, face: &FaceSet) -> Result<Relabeled> {
        if !self.is_face(face) {
            return Err(Error::domain(format!(
                "{face:?} is not a face of the complex"
            )));
        }
        let rest = face.complement(self.m);
        let generators: Vec<FaceSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face))
            .collect();
        Ok(relabel_onto(&rest, generators))
    }

    /// The full subcomplex `K_J = {I ∈ K : I ⊆ J}`, relabeled to `1..=|J|`.
    pub fn full_subcomplex(&self, subset: &FaceSet) -> Result<Relabeled> {
        if let Some(bad) = subset.iter().find(|&v| v == 0 || v as usize > self.m) {
            return Err(Error::domain(format!(
                "vertex {bad} is outside 1..={}",
                self.m
            )));
        }
        if self.is_void() {
            return Ok(Relabeled {
                complex: SimplicialComplex::void(subset.len()),
                labels: subset.as_slice().to_vec(),
            });
        }
        let generators: Vec<FaceSet> = self.facets.iter().map(|f| f.intersection(subset)).collect();
        Ok(relabel_onto(subset, generators))
    }

    /// The Alexander dual `K̂ = {I ⊆ [m] : [m] \ I ∉ K}`. Its facets are the
    /// complements of the missing faces of `K`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets: Vec<FaceSet> = self
            .missing_faces()
            .iter()
            .map(|f| f.complement(self.m))
            .collect();
        if facets.is_empty() {
            return SimplicialComplex::void(self.m);
        }
        SimplicialComplex {
            m: self.m,
            facets: maximal_antichain(facets),
        }
    }

    /// The join on `m₁ + m₂` vertices; vertices of `other` are shifted by `m₁`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let m = self.m + other.m;
        if self.is_void() || other.is_void() {
            return SimplicialComplex::void(m);
        }
        let offset = self.m as u32;
        let facets = self
            .facets
            .iter()
            .flat_map(|a| {
                other
                    .facets
                    .iter()
                    .map(move |b| a.union(&b.shifted(offset)))
            })
            .collect();
        SimplicialComplex {
            m,
            facets: maximal_antichain(facets),
        }
    }

    /// Simplicial suspension: the join with two isolated points.
    pub fn suspension(&self) -> SimplicialComplex {
        let s0 = SimplicialComplex::from_generators(2, [[1u32], [2u32]]).expect("valid");
        self.join(&s0)
    }

    /// All faces of dimension at most `d` (cardinality at most `d + 1`).
    pub fn skeleton(&self, d: i64) -> Result<SimplicialComplex> {
        if d < -1 {
            return Err(Error::domain(format!("skeleton dimension {d} is below -1")));
        }
        if self.is_void() {
            return Ok(self.clone());
        }
        let size = (d + 1) as usize;
        let mut generators = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                generators.push(f.clone());
            } else {
                generators.extend(f.subsets_of_size(size));
            }
        }
        SimplicialComplex::from_generators(self.m, generators)
    }

    /// The complex on `[m + 1]` made of the full simplex on `[m]` together
    /// with the cone over `K` with apex `m + 1`.
    pub fn cone_extension(&self) -> SimplicialComplex {
        let apex = self.m as u32 + 1;
        let mut generators = vec![FaceSet::range(self.m)];
        generators.extend(self.facets.iter().map(|f| f.with(apex)));
        SimplicialComplex {
            m: self.m + 1,
            facets: maximal_antichain(generators),
        }
    }

    /// The barycentric subdivision. Vertices are the nonempty faces (ordered by
    /// size, then lexicographically), faces are chains under inclusion.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let faces: Vec<FaceSet> = self.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let index: HashMap<&FaceSet, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i as u32 + 1))
            .collect();
        let mut chains: Vec<FaceSet> = Vec::new();
        for facet in &self.facets {
            if facet.is_empty() {
                continue;
            }
            // maximal flags of a facet correspond to orderings of its vertices
            let mut order: Vec<u32> = facet.as_slice().to_vec();
            for_each_permutation(&mut order, &mut |perm| {
                let mut chain = Vec::with_capacity(perm.len());
                let mut acc = FaceSet::empty();
                for &v in perm {
                    acc = acc.with(v);
                    chain.push(index[&acc]);
                }
                chains.push(FaceSet::new(chain));
            });
        }
        let complex = if chains.is_empty() {
            if self.is_void() {
                SimplicialComplex::void(0)
            } else {
                SimplicialComplex::empty(0)
            }
        } else {
            SimplicialComplex {
                m: faces.len(),
                facets: maximal_antichain(chains),
            }
        };
        Subdivision { complex, faces }
    }

    /// True iff every face of `self` is a face of `other` and both live on the
    /// same vertex set.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.facets.iter().all(|f| other.is_face(f))
    }

    /// Largest `j` such that every `(j + 1)`-subset of `[m]` is a face.
    pub fn neighbourliness(&self) -> i64 {
        match self.missing_faces().iter().map(FaceSet::len).min() {
            Some(s) => s as i64 - 2,
            None => self.m as i64 - 1,
        }
    }

    /// The same complex with vertex `v` renamed `perm[v - 1]`.
    pub fn permuted(&self, perm: &[u32]) -> SimplicialComplex {
        debug_assert_eq!(perm.len(), self.m);
        let facets = self
            .facets
            .iter()
            .map(|f| FaceSet::new(f.iter().map(|v| perm[v as usize - 1])))
            .collect();
        SimplicialComplex {
            m: self.m,
            facets: maximal_antichain(facets),
        }
    }
}

/// A combinatorial model of `|X| \ |Y|`: the full subcomplex of the
/// barycentric subdivision `X'` on the faces of `X` that are not faces of `Y`.
pub fn complement_model(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<Subdivision> {
    if x.m != y.m {
        return Err(Error::domain(format!(
            "complexes live on different vertex sets ({} vs {})",
            x.m, y.m
        )));
    }
    if !y.is_subcomplex_of(x) {
        return Err(Error::domain(
            "the second complex is not a subcomplex of the first",
        ));
    }
    let sub = x.barycentric_subdivision();
    let keep: Vec<u32> = sub
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| !y.is_face(f))
        .map(|(i, _)| i as u32 + 1)
        .collect();
    let restricted = sub.complex.full_subcomplex(&FaceSet::new(keep))?;
    let faces = restricted
        .labels
        .iter()
        .map(|&l| sub.faces[l as usize - 1].clone())
        .collect();
    Ok(Subdivision {
        complex: restricted.complex,
        faces,
    })
}

fn check_enumerable(m: usize) -> Result<()> {
    if m > MAX_ENUMERATION_VERTICES {
        return Err(Error::domain(format!(
            "exhaustive subset enumeration is limited to m ≤ {MAX_ENUMERATION_VERTICES} (got {m})"
        )));
    }
    Ok(())
}

/// Renames the labels of `target` to `1..=|target|` (order preserving) and
/// builds the complex generated by `generators ⊆ target`.
fn relabel_onto(target: &FaceSet, generators: Vec<FaceSet>) -> Relabeled {
    let labels = target.as_slice().to_vec();
    let position: HashMap<u32, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    let facets: Vec<FaceSet> = generators
        .into_iter()
        .map(|g| FaceSet::new(g.iter().map(|v| position[&v])))
        .collect();
    let facets = if facets.is_empty() {
        vec![FaceSet::empty()]
    } else {
        facets
    };
    Relabeled {
        complex: SimplicialComplex {
            m: labels.len(),
            facets: maximal_antichain(facets),
        },
        labels,
    }
}

/// Heap's algorithm.
pub(crate) fn for_each_permutation<T: Copy>(items: &mut [T], f: &mut impl FnMut(&[T])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
