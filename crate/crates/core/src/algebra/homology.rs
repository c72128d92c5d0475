//! Finitely generated abelian groups and integral (co)homology.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::chain::ChainComplex;
use super::matrix::{bigint_json, IntegerMatrix};
use super::snf::{smith_normal_form, sparse_invariant_factors};

/// `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` with `1 < t₁ | t₂ | … | t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Any list of torsion orders; it is brought into invariant-factor form.
    /// Orders `0` are not allowed, orders `±1` are dropped.
    pub fn new<T: Into<BigInt>>(rank: usize, torsion: impl IntoIterator<Item = T>) -> Self {
        let mut t: Vec<BigInt> = torsion.into_iter().map(|x| x.into().abs()).collect();
        assert!(t.iter().all(|x| !x.is_zero()), "torsion order 0");
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let g = t[i].gcd(&t[j]);
                let l = t[i].lcm(&t[j]);
                t[i] = g;
                t[j] = l;
            }
        }
        t.retain(|x| !x.is_one());
        AbelianGroup { rank, torsion: t }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// Number of cyclic summands of the torsion part whose order `p` divides.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|t| (*t % &p).is_zero()).count()
    }
}

impl fmt::Display for AbelianGroup {
    /// `0`, `Z`, `Z^3 ⊕ Z_2^2 ⊕ Z_4`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let n = self.torsion[i..].iter().take_while(|x| *x == t).count();
            parts.push(if n == 1 {
                format!("Z_{t}")
            } else {
                format!("Z_{t}^{n}")
            });
            i += n;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// A group in each integer degree; zero groups are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedAbelianGroup {
    groups: BTreeMap<i64, AbelianGroup>,
}

impl GradedAbelianGroup {
    pub fn new() -> Self {
        GradedAbelianGroup::default()
    }

    pub fn get(&self, degree: i64) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i64) -> usize {
        self.groups.get(&degree).map_or(0, AbelianGroup::rank)
    }

    /// Replaces the group in `degree` by its direct sum with `g`.
    pub fn add(&mut self, degree: i64, g: &AbelianGroup) {
        if g.is_zero() {
            return;
        }
        let sum = self.get(degree).direct_sum(g);
        self.groups.insert(degree, sum);
    }

    pub fn set(&mut self, degree: i64, g: AbelianGroup) {
        if g.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, g);
        }
    }

    /// Nonzero degrees with their groups, in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &AbelianGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.groups.keys().next_back().copied()
    }

    /// Degree `q` of the result is degree `q - by` of `self`.
    pub fn shifted(&self, by: i64) -> GradedAbelianGroup {
        GradedAbelianGroup {
            groups: self
                .groups
                .iter()
                .map(|(d, g)| (d + by, g.clone()))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &GradedAbelianGroup) -> GradedAbelianGroup {
        let mut out = self.clone();
        for (d, g) in other.iter() {
            out.add(d, g);
        }
        out
    }

    /// Keeps only degrees `≤ max`.
    pub fn truncated(&self, max: i64) -> GradedAbelianGroup {
        GradedAbelianGroup {
            groups: self
                .groups
                .range(..=max)
                .map(|(&d, g)| (d, g.clone()))
                .collect(),
        }
    }

    /// Reduced version: one copy of `Z` removed in degree 0. Fails if degree
    /// 0 has no free part.
    pub fn reduced(&self) -> Result<GradedAbelianGroup> {
        let h0 = self.get(0);
        if h0.rank == 0 {
            return Err(Error::domain("no free summand in degree 0 to reduce"));
        }
        let mut out = self.clone();
        out.set(
            0,
            AbelianGroup {
                rank: h0.rank - 1,
                torsion: h0.torsion,
            },
        );
        Ok(out)
    }

    /// The inverse of [`GradedAbelianGroup::reduced`].
    pub fn unreduced(&self) -> GradedAbelianGroup {
        let mut out = self.clone();
        out.add(0, &AbelianGroup::free(1));
        out
    }

    /// One line per nonzero degree, `H^q = …`.
    pub fn render(&self, symbol: &str) -> String {
        if self.groups.is_empty() {
            return format!("{symbol}^* = 0");
        }
        self.groups
            .iter()
            .map(|(d, g)| format!("{symbol}^{d} = {g}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Value> = self.torsion.iter().map(bigint_json).collect();
        let mut s = serializer.serialize_struct("AbelianGroup", 3)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("torsion", &torsion)?;
        s.serialize_field("rendered", &self.to_string())?;
        s.end()
    }
}

impl Serialize for GradedAbelianGroup {
    /// A list of `{degree, rank, torsion, rendered}` for the nonzero degrees.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            degree: i64,
            rank: usize,
            torsion: Vec<serde_json::Value>,
            rendered: String,
        }
        let entries: Vec<Entry> = self
            .groups
            .iter()
            .map(|(&degree, g)| Entry {
                degree,
                rank: g.rank,
                torsion: g.torsion.iter().map(bigint_json).collect(),
                rendered: g.to_string(),
            })
            .collect();
        entries.serialize(serializer)
    }
}

/// Integral homology of a chain complex.
pub fn homology(c: &ChainComplex) -> GradedAbelianGroup {
    let lo = c.min_degree();
    let hi = c.max_degree();
    if hi < lo {
        return GradedAbelianGroup::new();
    }
    // invariant factors of ∂_k for k = lo..=hi+1 (∂_lo and ∂_{hi+1} are zero)
    let factors: Vec<Vec<BigInt>> = (lo..=hi)
        .into_par_iter()
        .map(|k| match c.boundary_ref(k) {
            Some(b) if k > lo => sparse_invariant_factors(b),
            _ => Vec::new(),
        })
        .collect();
    let mut out = GradedAbelianGroup::new();
    for k in lo..=hi {
        let i = (k - lo) as usize;
        let rank_out = factors[i].len();
        let incoming: &[BigInt] = factors.get(i + 1).map_or(&[], Vec::as_slice);
        let rank = c.rank(k) - rank_out - incoming.len();
        out.set(k, AbelianGroup::new(rank, incoming.iter().cloned()));
    }
    out
}

/// Cohomology from homology by universal coefficients:
/// `H^q = free(H_q) ⊕ torsion(H_{q-1})`.
pub fn cohomology_from_homology(h: &GradedAbelianGroup) -> GradedAbelianGroup {
    let mut out = GradedAbelianGroup::new();
    for (d, g) in h.iter() {
        out.add(d, &AbelianGroup::free(g.rank));
        out.add(d + 1, &AbelianGroup::new(0, g.torsion.iter().cloned()));
    }
    out
}

/// Reduced simplicial homology; `{∅}` has `Z` in degree `-1`, the void
/// complex has nothing.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedAbelianGroup {
    if k.is_void() {
        return GradedAbelianGroup::new();
    }
    homology(&ChainComplex::simplicial(k, true).expect("simplicial chains satisfy ∂∂ = 0"))
}

pub fn reduced_cohomology(k: &SimplicialComplex) -> GradedAbelianGroup {
    cohomology_from_homology(&reduced_homology(k))
}

/// Unreduced simplicial homology.
pub fn simplicial_homology(k: &SimplicialComplex) -> GradedAbelianGroup {
    if k.is_void() {
        return GradedAbelianGroup::new();
    }
    homology(&ChainComplex::simplicial(k, false).expect("simplicial chains satisfy ∂∂ = 0"))
}

/// `H_*(x, a)`.
pub fn pair_homology(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<GradedAbelianGroup> {
    Ok(homology(&ChainComplex::relative(x, a)?))
}

/// Coordinates of homology classes in one degree.
///
/// `H_k ≅ Z^r ⊕ Z/t₁ ⊕ …`; a class is given by `r` integers followed by one
/// residue per torsion summand.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    degree: i64,
    group: AbelianGroup,
    /// Cycles representing the torsion generators, then the free ones.
    generators: Vec<Vec<BigInt>>,
    /// Rows map a cycle to its coordinate along each generator.
    projection: IntegerMatrix,
    boundary: IntegerMatrix,
}

/// A homology class in the coordinates of a [`HomologyBasis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassCoordinates {
    pub free: Vec<BigInt>,
    /// Residues in `0..t_i`.
    pub torsion: Vec<BigInt>,
}

impl ClassCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

/// `free (a, b) torsion (c)`, omitting empty parts; `0` for the zero class.
impl fmt::Display for ClassCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut parts = Vec::new();
        if !self.free.is_empty() {
            parts.push(format!("free ({})", join(&self.free)));
        }
        if !self.torsion.is_empty() {
            parts.push(format!("torsion ({})", join(&self.torsion)));
        }
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for ClassCoordinates {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let f: Vec<serde_json::Value> = self.free.iter().map(bigint_json).collect();
        let t: Vec<serde_json::Value> = self.torsion.iter().map(bigint_json).collect();
        let mut s = serializer.serialize_struct("ClassCoordinates", 2)?;
        s.serialize_field("free", &f)?;
        s.serialize_field("torsion", &t)?;
        s.end()
    }
}

impl HomologyBasis {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Representative cycles: torsion generators (in the order of
    /// `group().torsion()`) followed by free generators.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn free_generator(&self, i: usize) -> &[BigInt] {
        &self.generators[self.group.torsion.len() + i]
    }

    pub fn torsion_generator(&self, i: usize) -> &[BigInt] {
        &self.generators[i]
    }

    /// The class of a cycle. Fails with a domain error if `z` is not a cycle.
    pub fn class_of(&self, z: &[BigInt]) -> Result<ClassCoordinates> {
        if z.len() != self.projection.cols() {
            return Err(Error::domain(format!(
                "chain has {} coordinates, expected {}",
                z.len(),
                self.projection.cols()
            )));
        }
        if self.boundary.mul_vec(z).iter().any(|x| !x.is_zero()) {
            return Err(Error::domain(format!(
                "chain in degree {} is not a cycle",
                self.degree
            )));
        }
        let w = self.projection.mul_vec(z);
        let nt = self.group.torsion.len();
        let torsion = w[..nt]
            .iter()
            .zip(&self.group.torsion)
            .map(|(x, t)| x.mod_floor(t))
            .collect();
        Ok(ClassCoordinates {
            free: w[nt..].to_vec(),
            torsion,
        })
    }
}

/// Explicit generators and class coordinates of `H_degree(c)`.
pub fn homology_basis(c: &ChainComplex, degree: i64) -> HomologyBasis {
    let n = c.rank(degree);
    let boundary = c.boundary(degree).to_integer_matrix();
    // kernel of ∂_k: columns r.. of V, coordinates via rows r.. of V⁻¹
    let s = smith_normal_form(&boundary);
    let r = s.rank;
    let kernel = s.v.cols_from(r);
    let kernel_coords = s.v_inv.rows_from(r);
    // image of ∂_{k+1} inside the kernel, in kernel coordinates
    let incoming = kernel_coords.mul(&c.boundary(degree + 1).to_integer_matrix());
    let t = smith_normal_form(&incoming);
    let dim = n - r;
    let mut generators = Vec::new();
    let mut keep_rows = Vec::new();
    let mut torsion = Vec::new();
    let mut free = 0;
    let unit = |i: usize| -> Vec<BigInt> { (0..dim).map(|j| t.u_inv.get(j, i).clone()).collect() };
    for i in 0..dim {
        let order = if i < t.rank {
            Some(t.d.get(i, i).clone())
        } else {
            None
        };
        match order {
            Some(o) if o.is_one() => continue,
            Some(o) => torsion.push(o),
            None => free += 1,
        }
        keep_rows.push(i);
        generators.push(kernel.mul_vec(&unit(i)));
    }
    let full = t.u.mul(&kernel_coords);
    let mut projection = IntegerMatrix::zeros(keep_rows.len(), n);
    for (a, &i) in keep_rows.iter().enumerate() {
        for j in 0..n {
            projection.set(a, j, full.get(i, j).clone());
        }
    }
    let group = AbelianGroup {
        rank: free,
        torsion,
    };
    debug_assert!(group.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    HomologyBasis {
        degree,
        group,
        generators,
        projection,
        boundary,
    }
}
