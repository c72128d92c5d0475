//! Products in the cohomology of complex arrangement complements.
//!
//! A summand of the Goresky–MacPherson sum is `H_k` of the relative chains of
//! `[⊥, u]` (chains from `⊥` to `u`). Two classes on `u` and `v` multiply to
//! zero unless `d(u) + d(v) − d(join(u, v)) = N`; in that case their product
//! is the image of the simplicial cross product under the vertex map
//! `(z, w) ↦ join(z, w)`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    homology, homology_basis, AbelianGroup, ChainComplex, ClassCoordinates, HomologyBasis,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::lattice::{
    coordinate_lattice, diagonal_lattice, Ambient, ArrangementKind, GeneratorSet,
    IntersectionLattice,
};

/// A formal integer combination of oriented simplices, each simplex an
/// ordered vertex list. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<V: Ord> {
    terms: BTreeMap<Vec<V>, BigInt>,
}

impl<V: Ord + Clone> Default for Chain<V> {
    fn default() -> Self {
        Chain {
            terms: BTreeMap::new(),
        }
    }
}

impl<V: Ord + Clone> Chain<V> {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn simplex(vertices: Vec<V>) -> Self {
        let mut c = Chain::zero();
        c.add_term(vertices, BigInt::one());
        c
    }

    pub fn add_term(&mut self, simplex: Vec<V>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(simplex) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[V], &BigInt)> {
        self.terms.iter().map(|(s, c)| (s.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Chain<V>) -> Chain<V> {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigInt) -> Chain<V> {
        let mut out = Chain::zero();
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c * k);
        }
        out
    }

    /// `∂⟨v₀…v_n⟩ = Σ (−1)^i ⟨v₀…v̂ᵢ…v_n⟩`; vertices are dropped from
    /// simplices of dimension at least 1 only.
    pub fn boundary(&self) -> Chain<V> {
        let mut out = Chain::zero();
        for (s, c) in &self.terms {
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let coeff = if i % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, coeff);
            }
        }
        out
    }
}

/// Sign of the shuffle given by a lattice path: `(−1)` to the number of
/// (vertical step, later horizontal step) pairs.
fn path_sign(steps: &[bool]) -> bool {
    let mut vertical_seen = 0usize;
    let mut inversions = 0usize;
    for &horizontal in steps {
        if horizontal {
            inversions += vertical_seen;
        } else {
            vertical_seen += 1;
        }
    }
    inversions.is_multiple_of(2)
}

/// All monotone staircase paths with `k` horizontal and `l` vertical steps,
/// as step lists (`true` = horizontal), in lexicographic order.
fn staircase_paths(k: usize, l: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + l);
    fn go(h: usize, v: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if h == 0 && v == 0 {
            out.push(cur.clone());
            return;
        }
        if h > 0 {
            cur.push(true);
            go(h - 1, v, cur, out);
            cur.pop();
        }
        if v > 0 {
            cur.push(false);
            go(h, v - 1, cur, out);
            cur.pop();
        }
    }
    go(k, l, &mut cur, &mut out);
    out
}

/// Simplicial cross product into the product of the two vertex sets.
///
/// `⟨u₀…u_k⟩ × ⟨v₀…v_l⟩` is the signed sum over staircase paths from
/// `(0, 0)` to `(k, l)` of the simplices `⟨(u_{i_r}, v_{j_r})⟩`. The sign is
/// the Eilenberg–Zilber shuffle sign; it is `+1` whenever `k = 0` or `l = 0`.
/// Terms of different dimension are handled independently.
pub fn cross_product<V: Ord + Clone, W: Ord + Clone>(s: &Chain<V>, t: &Chain<W>) -> Chain<(V, W)> {
    let mut out = Chain::zero();
    let mut paths_cache: HashMap<(usize, usize), Vec<Vec<bool>>> = HashMap::new();
    for (a, ca) in s.terms() {
        for (b, cb) in t.terms() {
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let (k, l) = (a.len() - 1, b.len() - 1);
            let paths = paths_cache
                .entry((k, l))
                .or_insert_with(|| staircase_paths(k, l));
            for path in paths.iter() {
                let (mut i, mut j) = (0usize, 0usize);
                let mut simplex = Vec::with_capacity(k + l + 1);
                simplex.push((a[0].clone(), b[0].clone()));
                for &h in path {
                    if h {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    simplex.push((a[i].clone(), b[j].clone()));
                }
                let coeff = ca * cb;
                out.add_term(simplex, if path_sign(path) { coeff } else { -coeff });
            }
        }
    }
    out
}

/// A chain in the order complex of a lattice interval `[⊥, home]`: vertices
/// are stratum indices, each simplex a strictly increasing chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub home: usize,
    pub degree: usize,
    pub chain: Chain<usize>,
}

impl LabeledChain {
    /// Checks that every simplex is a strict chain in `[⊥, home]` of the
    /// stated dimension.
    pub fn validate(&self, l: &IntersectionLattice) -> Result<()> {
        for (s, _) in self.chain.terms() {
            if s.len() != self.degree + 1 {
                return Err(Error::domain(format!(
                    "simplex {s:?} does not have dimension {}",
                    self.degree
                )));
            }
            let inside = s.iter().all(|&w| w < l.len() && l.le(w, self.home));
            let strict = s.windows(2).all(|p| l.lt(p[0], p[1]));
            if !inside || !strict {
                return Err(Error::domain(format!(
                    "{s:?} is not a chain in [⊥, {}]",
                    self.home
                )));
            }
        }
        Ok(())
    }
}

/// `d(u) + d(v) − d(join(u, v)) = N`.
pub fn codimension_condition(l: &IntersectionLattice, u: usize, v: usize) -> bool {
    l.codimension_condition(u, v)
}

/// Relative chains of `[⊥, u]` with homology bases computed on demand.
#[derive(Clone, Debug)]
pub struct StratumChains {
    pub stratum: usize,
    pub complex: ChainComplex,
    bases: BTreeMap<i64, HomologyBasis>,
}

impl StratumChains {
    pub fn new(l: &IntersectionLattice, u: usize) -> Result<Self> {
        if u >= l.len() {
            return Err(Error::domain(format!(
                "stratum index {u} is not in the lattice"
            )));
        }
        let interval = l.interval(l.bottom(), u);
        let cells = l
            .chains(&interval, false)
            .into_iter()
            .filter(|c| c.first() == Some(&l.bottom()) && c.last() == Some(&u))
            .map(|c| c.into_iter().map(|s| s as u32).collect::<Vec<u32>>());
        let complex = ChainComplex::from_cells(cells)?;
        let mut bases = BTreeMap::new();
        for (k, g) in homology(&complex).iter() {
            if !g.is_zero() {
                bases.insert(k, homology_basis(&complex, k));
            }
        }
        Ok(StratumChains {
            stratum: u,
            complex,
            bases,
        })
    }

    /// Degrees with nonzero homology.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn basis(&self, k: i64) -> Option<&HomologyBasis> {
        self.bases.get(&k)
    }

    pub fn group(&self, k: i64) -> AbelianGroup {
        self.bases
            .get(&k)
            .map(|b| b.group().clone())
            .unwrap_or_default()
    }

    /// Coefficient vector of `c` over the relative basis in its degree.
    /// Simplices missing an endpoint vanish in the quotient.
    pub fn coefficients(&self, c: &LabeledChain) -> Result<Vec<BigInt>> {
        if c.home != self.stratum {
            return Err(Error::domain(format!(
                "chain lives on stratum {}, not {}",
                c.home, self.stratum
            )));
        }
        let k = c.degree as i64;
        let mut v = vec![BigInt::zero(); self.complex.rank(k)];
        for (s, coeff) in c.chain.terms() {
            let cell: Vec<u32> = s.iter().map(|&w| w as u32).collect();
            match self.complex.cell_index(k, &cell) {
                Some(i) => v[i] += coeff,
                None => {
                    let relative_cell = s.first() == Some(&0) && s.last() == Some(&self.stratum);
                    if relative_cell {
                        return Err(Error::domain(format!(
                            "{s:?} is not a chain of the interval"
                        )));
                    }
                }
            }
        }
        Ok(v)
    }

    pub fn class_of(&self, c: &LabeledChain) -> Result<ClassCoordinates> {
        let k = c.degree as i64;
        let v = self.coefficients(c)?;
        match self.bases.get(&k) {
            Some(b) => b.class_of(&v),
            None => {
                // zero group: still insist on a relative cycle
                let bd = self.complex.boundary(k).mul_vec(&v);
                if bd.iter().any(|x| !x.is_zero()) {
                    return Err(Error::domain(format!(
                        "chain in degree {k} is not a relative cycle"
                    )));
                }
                Ok(ClassCoordinates {
                    free: Vec::new(),
                    torsion: Vec::new(),
                })
            }
        }
    }

    /// Representative cycle of generator `i` (torsion generators first).
    pub fn generator(&self, k: i64, i: usize) -> Option<LabeledChain> {
        let b = self.bases.get(&k)?;
        let z = b.generators().get(i)?;
        let mut chain = Chain::zero();
        for (cell, coeff) in self.complex.cells(k).iter().zip(z) {
            chain.add_term(cell.iter().map(|&w| w as usize).collect(), coeff.clone());
        }
        Some(LabeledChain {
            home: self.stratum,
            degree: k as usize,
            chain,
        })
    }
}

/// Result of multiplying two classes.
#[derive(Clone, Debug, Serialize)]
pub struct ProductOutcome {
    pub left: usize,
    pub right: usize,
    pub codimension_condition: bool,
    /// `join(left, right)`.
    pub target: usize,
    /// Homological degree of the product in the target pair.
    pub degree: usize,
    pub target_group: AbelianGroup,
    pub class: Option<ClassCoordinates>,
    /// Simplices that became degenerate under the join map.
    pub degenerate_dropped: usize,
    #[serde(skip)]
    pub chain: Option<LabeledChain>,
}

impl ProductOutcome {
    pub fn is_zero(&self) -> bool {
        self.class.as_ref().is_none_or(ClassCoordinates::is_zero)
    }
}

/// Pushes a chain of pairs through `(z, w) ↦ join(z, w)`, dropping simplices
/// with a repeated vertex. Returns the image and the number dropped.
pub fn join_map(l: &IntersectionLattice, c: &Chain<(usize, usize)>) -> (Chain<usize>, usize) {
    let mut out = Chain::zero();
    let mut dropped = 0;
    for (s, coeff) in c.terms() {
        let image: Vec<usize> = s.iter().map(|&(z, w)| l.join(z, w)).collect();
        if image.windows(2).any(|p| p[0] == p[1]) {
            dropped += 1;
            continue;
        }
        out.add_term(image, coeff.clone());
    }
    if dropped > 0 {
        log::warn!("join map dropped {dropped} degenerate simplices");
    }
    (out, dropped)
}

/// Product of the classes of `a` (on `[⊥, u]`) and `b` (on `[⊥, v]`),
/// expressed in the homology basis of `[⊥, join(u, v)]`. The target chains
/// are built when not supplied.
pub fn class_product(
    l: &IntersectionLattice,
    a: &LabeledChain,
    b: &LabeledChain,
    target: Option<&StratumChains>,
) -> Result<ProductOutcome> {
    if l.ambient() != Ambient::Complex {
        return Err(Error::Unsupported(
            "products are only defined for complex arrangements".into(),
        ));
    }
    a.validate(l)?;
    b.validate(l)?;
    let (u, v) = (a.home, b.home);
    let w = l.join(u, v);
    let degree = a.degree + b.degree;
    let owned;
    let target = match target {
        Some(t) if t.stratum == w => t,
        Some(t) => {
            return Err(Error::domain(format!(
                "target chains are for stratum {}, expected {w}",
                t.stratum
            )))
        }
        None => {
            owned = StratumChains::new(l, w)?;
            &owned
        }
    };
    let target_group = target.group(degree as i64);
    if !l.codimension_condition(u, v) {
        return Ok(ProductOutcome {
            left: u,
            right: v,
            codimension_condition: false,
            target: w,
            degree,
            target_group,
            class: None,
            degenerate_dropped: 0,
            chain: None,
        });
    }
    // both factors must be relative cycles
    for (x, home) in [(a, u), (b, v)] {
        let sc = StratumChains::new(l, home)?;
        sc.class_of(x)?;
    }
    let cross = cross_product(&a.chain, &b.chain);
    let (image, dropped) = join_map(l, &cross);
    let chain = LabeledChain {
        home: w,
        degree,
        chain: image,
    };
    let class = target.class_of(&chain).map_err(|e| match e {
        Error::Domain(msg) => Error::integrity(format!("product is not a relative cycle: {msg}")),
        other => other,
    })?;
    Ok(ProductOutcome {
        left: u,
        right: v,
        codimension_condition: true,
        target: w,
        degree,
        target_group,
        class: Some(class),
        degenerate_dropped: dropped,
        chain: Some(chain),
    })
}

/// One generator of positive-degree cohomology.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GeneratorRef {
    pub stratum: usize,
    pub label: String,
    /// Cohomological degree.
    pub degree: i64,
    /// Homological degree in the stratum's relative chains.
    pub chain_degree: i64,
    pub index: usize,
    /// Order of the generator, `0` for infinite order.
    pub order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductEntry {
    pub left: GeneratorRef,
    pub right: GeneratorRef,
    pub target_stratum: usize,
    pub target_label: String,
    pub degree: i64,
    pub class: ClassCoordinates,
    pub nonzero: bool,
    pub degenerate_dropped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductTable {
    pub arrangement: ArrangementKind,
    pub generators: Vec<GeneratorRef>,
    /// Generator pairs on strata satisfying the codimension condition; all
    /// other products vanish.
    pub entries: Vec<ProductEntry>,
    pub pairs_total: usize,
    pub pairs_codimension: usize,
    pub nonzero_count: usize,
    /// Distinct `(p, q, p + q)` with a nonzero product `H^p ⊗ H^q → H^{p+q}`.
    pub nonzero_blocks: Vec<(i64, i64, i64)>,
    pub all_zero: bool,
    pub degenerate_dropped: usize,
}

/// Products of all pairs of positive-degree generators.
pub fn product_table(
    k: &SimplicialComplex,
    arrangement: ArrangementKind,
    ambient: Ambient,
    generators: GeneratorSet,
) -> Result<ProductTable> {
    if ambient != Ambient::Complex {
        return Err(Error::Unsupported(
            "products are only computed for complex arrangements".into(),
        ));
    }
    let l = match arrangement {
        ArrangementKind::Diagonal => diagonal_lattice(k, ambient, generators)?,
        ArrangementKind::Coordinate => coordinate_lattice(k, ambient, generators)?,
    };
    product_table_for_lattice(&l)
}

pub fn product_table_for_lattice(l: &IntersectionLattice) -> Result<ProductTable> {
    let strata: Vec<usize> = (1..l.len()).collect();
    let chains: Vec<StratumChains> = strata
        .par_iter()
        .map(|&u| StratumChains::new(l, u))
        .collect::<Result<Vec<_>>>()?;
    let mut gens: Vec<GeneratorRef> = Vec::new();
    for sc in &chains {
        for kdeg in sc.degrees() {
            let b = sc.basis(kdeg).expect("listed degree");
            let g = b.group();
            let orders = g
                .torsion()
                .iter()
                .map(ToString::to_string)
                .chain(std::iter::repeat_n("0".to_string(), g.rank()));
            for (index, order) in orders.enumerate() {
                gens.push(GeneratorRef {
                    stratum: sc.stratum,
                    label: l.stratum(sc.stratum).to_string(),
                    degree: l.codim(sc.stratum) as i64 - kdeg,
                    chain_degree: kdeg,
                    index,
                    order,
                });
            }
        }
    }
    let by_stratum: HashMap<usize, &StratumChains> =
        chains.iter().map(|c| (c.stratum, c)).collect();
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i].stratum != gens[j].stratum {
                pairs.push((i, j));
            }
        }
    }
    let pairs_total = pairs.len();
    let codim_pairs: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(i, j)| l.codimension_condition(gens[i].stratum, gens[j].stratum))
        .collect();
    let entries: Vec<ProductEntry> = codim_pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&gens[i], &gens[j]);
            let a = by_stratum[&g.stratum]
                .generator(g.chain_degree, g.index)
                .expect("generator exists");
            let b = by_stratum[&h.stratum]
                .generator(h.chain_degree, h.index)
                .expect("generator exists");
            let w = l.join(g.stratum, h.stratum);
            let out = class_product(l, &a, &b, Some(by_stratum[&w]))?;
            let class = out.class.clone().expect("codimension condition holds");
            Ok(ProductEntry {
                left: g.clone(),
                right: h.clone(),
                target_stratum: w,
                target_label: l.stratum(w).to_string(),
                degree: g.degree + h.degree,
                nonzero: !class.is_zero(),
                class,
                degenerate_dropped: out.degenerate_dropped,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let nonzero_count = entries.iter().filter(|e| e.nonzero).count();
    let blocks: BTreeSet<(i64, i64, i64)> = entries
        .iter()
        .filter(|e| e.nonzero)
        .map(|e| {
            let (p, q) = (
                e.left.degree.min(e.right.degree),
                e.left.degree.max(e.right.degree),
            );
            (p, q, p + q)
        })
        .collect();
    Ok(ProductTable {
        arrangement: l.kind(),
        pairs_total,
        pairs_codimension: codim_pairs.len(),
        nonzero_count,
        all_zero: nonzero_count == 0,
        nonzero_blocks: blocks.into_iter().collect(),
        degenerate_dropped: entries.iter().map(|e| e.degenerate_dropped).sum(),
        generators: gens,
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GolodReport {
    pub common_vertex: bool,
    pub coordinate_products_all_zero: bool,
    /// Complexes whose missing faces pairwise intersect are Golod; only
    /// ordinary products are computed here.
    pub golod_certified_by_common_vertex: bool,
    pub nonzero_blocks: Vec<(i64, i64, i64)>,
}

/// Ordinary products in `H^*(U(K))` and the common-vertex criterion.
pub fn golod_product_check(k: &SimplicialComplex) -> Result<GolodReport> {
    let table = product_table(
        k,
        ArrangementKind::Coordinate,
        Ambient::Complex,
        GeneratorSet::MissingFaces,
    )?;
    let common_vertex = k.common_vertex_predicate();
    Ok(GolodReport {
        common_vertex,
        coordinate_products_all_zero: table.all_zero,
        golod_certified_by_common_vertex: common_vertex,
        nonzero_blocks: table.nonzero_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FaceSet;
    use crate::corpus;
    use crate::lattice::{DiagonalStratum, Stratum};

    #[test]
    fn staircase_signs() {
        let s = Chain::simplex(vec!['a', 'b']);
        let t = Chain::simplex(vec![0, 1, 2]);
        let p = cross_product(&s, &t);
        let signs: Vec<(Vec<(char, i32)>, i64)> = p
            .terms()
            .map(|(s, c)| (s.to_vec(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(signs.len(), 3);
        let find = |v: &[(char, i32)]| signs.iter().find(|(s, _)| s == v).unwrap().1;
        assert_eq!(find(&[('a', 0), ('b', 0), ('b', 1), ('b', 2)]), 1);
        assert_eq!(find(&[('a', 0), ('a', 1), ('b', 1), ('b', 2)]), -1);
        assert_eq!(find(&[('a', 0), ('a', 1), ('a', 2), ('b', 2)]), 1);
    }

    #[test]
    fn leibniz_on_small_simplices() {
        let s = Chain::simplex(vec![0, 1, 2]);
        let t = Chain::simplex(vec![5, 6]);
        let lhs = cross_product(&s, &t).boundary();
        let rhs = cross_product(&s.boundary(), &t)
            .plus(&cross_product(&s, &t.boundary()).scaled(&BigInt::from(1)));
        // k = 2, so the sign on the second term is +
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_coordinate_product_is_nonzero() {
        let r = golod_product_check(&corpus::square()).unwrap();
        assert!(!r.common_vertex);
        assert!(!r.coordinate_products_all_zero);
        assert_eq!(r.nonzero_blocks, vec![(3, 3, 6)]);
    }

    #[test]
    fn rp2_products() {
        let k = corpus::rp2_6();
        let t = product_table(
            &k,
            ArrangementKind::Diagonal,
            Ambient::Complex,
            GeneratorSet::MissingFaces,
        )
        .unwrap();
        assert_eq!(t.nonzero_blocks, vec![(3, 4, 7)]);
        assert_eq!(t.degenerate_dropped, 0);
        let l = diagonal_lattice(&k, Ambient::Complex, GeneratorSet::MissingFaces).unwrap();
        let idx = |s: &[u32]| {
            l.index_of(&Stratum::Diagonal(DiagonalStratum::new([FaceSet::from(s)])))
                .unwrap()
        };
        let i = idx(&[1, 2, 3]);
        let j = idx(&[3, 4, 5, 6]);
        assert!(codimension_condition(&l, i, j));
        assert!(!codimension_condition(&l, i, idx(&[2, 3, 4, 5])));
        assert!(codimension_condition(&l, 0, j));
    }

    #[test]
    fn real_products_are_unsupported() {
        assert!(matches!(
            product_table(
                &corpus::square(),
                ArrangementKind::Coordinate,
                Ambient::Real,
                GeneratorSet::MissingFaces
            ),
            Err(Error::Unsupported(_))
        ));
    }
}
