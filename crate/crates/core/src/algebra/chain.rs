//! Free chain complexes with an explicit basis of ordered cells.
//!
//! A cell is a sequence of vertex ids `[v₀, …, v_n]` sitting in degree `n`.
//! Its boundary is `Σ (-1)^i [v₀, …, v̂ᵢ, …, v_n]`, where faces that are not
//! basis cells in degree `n - 1` are dropped. Dropping faces is exactly the
//! quotient by a subcomplex, so relative chain complexes come for free: list
//! the cells of `X` that are not in `A`.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::matrix::SparseMatrix;

/// A cell: an ordered list of vertex ids, of dimension `len - 1`.
pub type Cell = Vec<u32>;

#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_degree: i64,
    /// `cells[i]` is the basis of `C_{min_degree + i}`.
    cells: Vec<Vec<Cell>>,
    index: Vec<HashMap<Cell, usize>>,
    /// `boundaries[i]` is `∂ : C_{min_degree + i} → C_{min_degree + i - 1}`.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Builds the complex spanned by `cells`, grouping them by dimension.
    /// Fails with an integrity error if `∂∂ ≠ 0`, which happens when the cell
    /// list is not closed in the way a quotient needs.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut by_len: std::collections::BTreeMap<usize, Vec<Cell>> = Default::default();
        for c in cells {
            by_len.entry(c.len()).or_default().push(c);
        }
        let Some((&lo, _)) = by_len.first_key_value() else {
            return Ok(ChainComplex {
                min_degree: 0,
                cells: Vec::new(),
                index: Vec::new(),
                boundaries: Vec::new(),
            });
        };
        let hi = *by_len.last_key_value().expect("nonempty").0;
        let mut grouped: Vec<Vec<Cell>> = (lo..=hi)
            .map(|len| by_len.remove(&len).unwrap_or_default())
            .collect();
        for g in &mut grouped {
            g.sort();
            g.dedup();
        }
        let index: Vec<HashMap<Cell, usize>> = grouped
            .iter()
            .map(|g| g.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(grouped.len());
        for (k, group) in grouped.iter().enumerate() {
            if k == 0 {
                boundaries.push(SparseMatrix::zeros(0, group.len()));
                continue;
            }
            let below = &index[k - 1];
            let columns = group
                .iter()
                .map(|cell| {
                    let mut col = Vec::with_capacity(cell.len());
                    let mut face = Vec::with_capacity(cell.len().saturating_sub(1));
                    for drop in 0..cell.len() {
                        face.clear();
                        face.extend(
                            cell.iter()
                                .enumerate()
                                .filter(|&(i, _)| i != drop)
                                .map(|(_, &v)| v),
                        );
                        if let Some(&row) = below.get(&face) {
                            col.push((row, if drop % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    col
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(grouped[k - 1].len(), columns));
        }
        let complex = ChainComplex {
            min_degree: lo as i64 - 1,
            cells: grouped,
            index,
            boundaries,
        };
        complex.check_square_zero()?;
        Ok(complex)
    }

    /// Simplicial chains of `k`, with `∅` in degree `-1` when `augmented`.
    pub fn simplicial(k: &SimplicialComplex, augmented: bool) -> Result<Self> {
        let cells = k
            .faces()
            .into_iter()
            .filter(|f| augmented || !f.is_empty())
            .map(|f| f.as_slice().to_vec());
        ChainComplex::from_cells(cells)
    }

    /// Relative simplicial chains `C(x) / C(a)`; `a` must be a subcomplex.
    pub fn relative(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<Self> {
        if !a.is_subcomplex_of(x) && !a.is_void() {
            return Err(Error::domain("relative chains need a subcomplex"));
        }
        let cells = x
            .faces()
            .into_iter()
            .filter(|f| !f.is_empty() && !a.is_face(f))
            .map(|f| f.as_slice().to_vec());
        ChainComplex::from_cells(cells)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Largest degree carrying a cell; `min_degree - 1` when there are none.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.cells.len() as i64 - 1
    }

    fn slot(&self, degree: i64) -> Option<usize> {
        let i = degree - self.min_degree;
        (0..self.cells.len() as i64)
            .contains(&i)
            .then_some(i as usize)
    }

    /// Rank of `C_degree`.
    pub fn rank(&self, degree: i64) -> usize {
        self.slot(degree).map_or(0, |i| self.cells[i].len())
    }

    pub fn cells(&self, degree: i64) -> &[Cell] {
        self.slot(degree).map_or(&[], |i| &self.cells[i])
    }

    pub fn cell_index(&self, degree: i64, cell: &[u32]) -> Option<usize> {
        self.slot(degree)
            .and_then(|i| self.index[i].get(cell).copied())
    }

    /// `∂ : C_degree → C_{degree - 1}`, a zero matrix of the right shape
    /// outside the stored range.
    pub fn boundary(&self, degree: i64) -> SparseMatrix {
        match self.slot(degree) {
            Some(i) => self.boundaries[i].clone(),
            None => SparseMatrix::zeros(self.rank(degree - 1), self.rank(degree)),
        }
    }

    pub(crate) fn boundary_ref(&self, degree: i64) -> Option<&SparseMatrix> {
        self.slot(degree).map(|i| &self.boundaries[i])
    }

    /// Euler characteristic `Σ (-1)^k rank C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.min_degree..=self.max_degree())
            .map(|d| {
                if d.rem_euclid(2) == 0 {
                    self.rank(d) as i64
                } else {
                    -(self.rank(d) as i64)
                }
            })
            .sum()
    }

    fn check_square_zero(&self) -> Result<()> {
        for i in 1..self.boundaries.len() {
            let lower = &self.boundaries[i - 1];
            let upper = &self.boundaries[i];
            if lower.rows() == 0 || upper.cols() == 0 {
                continue;
            }
            match lower.checked_mul(upper) {
                Some(p) if p.is_zero() => {}
                _ => {
                    return Err(Error::integrity(format!(
                        "boundary squares to a nonzero map in degree {}",
                        self.min_degree + i as i64
                    )))
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_boundary_chains() {
        let k = SimplicialComplex::simplex_boundary(3);
        let c = ChainComplex::simplicial(&k, true).unwrap();
        assert_eq!(c.min_degree(), -1);
        assert_eq!(c.max_degree(), 1);
        assert_eq!((c.rank(-1), c.rank(0), c.rank(1)), (1, 3, 3));
        assert_eq!(c.euler_characteristic(), -1);
        let d1 = c.boundary(1).to_integer_matrix();
        let col = c.cell_index(1, &[1, 2]).unwrap();
        assert_eq!(d1.get(c.cell_index(0, &[1]).unwrap(), col), &(-1).into());
        assert_eq!(d1.get(c.cell_index(0, &[2]).unwrap(), col), &1.into());
    }

    #[test]
    fn quotient_that_is_not_a_subcomplex_is_rejected() {
        // dropping the middle vertex only keeps a face not closed under ∂
        let cells = vec![vec![1, 2, 3], vec![1, 3], vec![1]];
        assert!(matches!(
            ChainComplex::from_cells(cells),
            Err(Error::Integrity(_))
        ));
    }

    #[test]
    fn empty_complex() {
        let c = ChainComplex::from_cells(Vec::<Cell>::new()).unwrap();
        assert_eq!(c.rank(0), 0);
        assert_eq!(c.max_degree(), -1);
    }
}
