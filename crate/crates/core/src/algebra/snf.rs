//! Smith normal form over the integers.
//!
//! `D = U · A · V` with `U`, `V` unimodular and `D` diagonal, its nonzero
//! entries positive and each dividing the next. The elimination always pivots
//! on an entry of minimal absolute value, which keeps coefficients small on the
//! sparse `±1` boundary matrices this crate feeds it.
//!
//! Elimination runs on machine words first and restarts with big integers if
//! any intermediate value overflows, so results are always exact.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::{Dense, IntegerMatrix, SparseMatrix};
use super::scalar::{Overflow, Scalar};

/// Result of [`smith_normal_form`]. The inverses of both transforms are kept
/// because change of basis in homology needs them.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

impl SmithNormalForm {
    /// The nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub(crate) struct Elimination<T> {
    pub a: Dense<T>,
    pub rank: usize,
    pub u: Option<Dense<T>>,
    pub u_inv: Option<Dense<T>>,
    pub v: Option<Dense<T>>,
    pub v_inv: Option<Dense<T>>,
}

impl<T: Scalar> Elimination<T> {
    fn new(a: Dense<T>, transforms: bool) -> Self {
        let (r, c) = (a.rows, a.cols);
        let mk = |n| transforms.then(|| Dense::identity(n));
        Elimination {
            a,
            rank: 0,
            u: mk(r),
            u_inv: mk(r),
            v: mk(c),
            v_inv: mk(c),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    /// `row[target] += q · row[src]`
    fn row_axpy(&mut self, target: usize, src: usize, q: &T, from: usize) -> Result<(), Overflow> {
        self.a.row_axpy(target, src, q, from)?;
        if let Some(u) = &mut self.u {
            u.row_axpy(target, src, q, 0)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_axpy(src, target, &q.checked_neg()?, 0)?;
        }
        Ok(())
    }

    /// `col[target] += q · col[src]`
    fn col_axpy(&mut self, target: usize, src: usize, q: &T, from: usize) -> Result<(), Overflow> {
        self.a.col_axpy(target, src, q, from)?;
        if let Some(v) = &mut self.v {
            v.col_axpy(target, src, q, 0)?;
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_axpy(src, target, &q.checked_neg()?, 0)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        self.a.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i)?;
        }
        Ok(())
    }

    /// Nonzero entry of minimal absolute value in the block `[t.., t..]`.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.at(i, j);
                if x.is_nil() {
                    continue;
                }
                if x.is_unit() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if !x.abs_lt(self.a.at(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) -> Result<(), Overflow> {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let pivot = self.a.at(t, t).clone();
                for i in t + 1..rows {
                    let x = self.a.at(i, t);
                    if !x.is_nil() {
                        let q = x.div_nearest(&pivot).checked_neg()?;
                        self.row_axpy(i, t, &q, t)?;
                    }
                }
                for j in t + 1..cols {
                    let x = self.a.at(t, j);
                    if !x.is_nil() {
                        let q = x.div_nearest(&pivot).checked_neg()?;
                        self.col_axpy(j, t, &q, t)?;
                    }
                }
                // leftovers are strictly smaller than the pivot: promote the smallest
                let mut smallest: Option<(usize, usize)> = None;
                let candidates = (t + 1..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                for (i, j) in candidates {
                    let x = self.a.at(i, j);
                    if x.is_nil() {
                        continue;
                    }
                    match smallest {
                        Some((si, sj)) if !x.abs_lt(self.a.at(si, sj)) => {}
                        _ => smallest = Some((i, j)),
                    }
                }
                if let Some((i, j)) = smallest {
                    if j == t {
                        self.swap_rows(t, i);
                    } else {
                        self.swap_cols(t, j);
                    }
                    continue;
                }
                if pivot.is_unit() {
                    break;
                }
                // divisibility: pull in a row holding an entry the pivot does not divide
                let offender =
                    (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(self.a.at(i, j))));
                match offender {
                    Some(i) => self.row_axpy(t, i, &T::unity(), t)?,
                    None => break,
                }
            }
            if self.a.at(t, t).is_neg() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        self.rank = t;
        Ok(())
    }
}

pub(crate) fn eliminate<T: Scalar>(
    a: Dense<T>,
    transforms: bool,
) -> Result<Elimination<T>, Overflow> {
    let mut e = Elimination::new(a, transforms);
    e.run()?;
    Ok(e)
}

/// Runs elimination on machine words when the input fits, falling back to
/// big integers on overflow.
fn eliminate_exact(a: &IntegerMatrix, transforms: bool) -> Elimination<BigInt> {
    if let Some(small) = a.to_dense::<i64>() {
        if let Ok(e) = eliminate(small, transforms) {
            return Elimination {
                a: widen(&e.a),
                rank: e.rank,
                u: e.u.as_ref().map(widen),
                u_inv: e.u_inv.as_ref().map(widen),
                v: e.v.as_ref().map(widen),
                v_inv: e.v_inv.as_ref().map(widen),
            };
        }
        log::debug!("snf: 64-bit elimination overflowed, retrying with big integers");
    }
    let big = a.to_dense::<BigInt>().expect("big integers always convert");
    eliminate(big, transforms).expect("big-integer elimination cannot overflow")
}

fn widen(d: &Dense<i64>) -> Dense<BigInt> {
    Dense {
        rows: d.rows,
        cols: d.cols,
        data: d.data.iter().map(|&x| BigInt::from(x)).collect(),
    }
}

/// Smith normal form with both transforms and their inverses.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithNormalForm {
    let e = eliminate_exact(a, true);
    SmithNormalForm {
        d: IntegerMatrix::from_dense(&e.a),
        u: IntegerMatrix::from_dense(e.u.as_ref().expect("requested")),
        v: IntegerMatrix::from_dense(e.v.as_ref().expect("requested")),
        u_inv: IntegerMatrix::from_dense(e.u_inv.as_ref().expect("requested")),
        v_inv: IntegerMatrix::from_dense(e.v_inv.as_ref().expect("requested")),
        rank: e.rank,
    }
}

/// Only the invariant factors (no transforms), which is much cheaper.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let e = eliminate_exact(a, false);
    (0..e.rank).map(|i| e.a.at(i, i).clone()).collect()
}

/// Invariant factors of a matrix given in machine words.
pub(crate) fn invariant_factors_i64(a: Dense<i64>) -> Vec<BigInt> {
    match eliminate(a.clone(), false) {
        Ok(e) => (0..e.rank).map(|i| BigInt::from(*e.a.at(i, i))).collect(),
        Err(Overflow) => {
            let big = widen(&a);
            let e = eliminate(big, false).expect("big-integer elimination cannot overflow");
            (0..e.rank).map(|i| e.a.at(i, i).clone()).collect()
        }
    }
}

/// Invariant factors of a sparse matrix.
///
/// Unit pivots are eliminated in sparse form first; boundary matrices of
/// simplicial complexes are mostly cleared this way. Whatever is left is
/// handed to the dense engine.
pub fn sparse_invariant_factors(a: &SparseMatrix) -> Vec<BigInt> {
    match sparse_unit_elimination(a) {
        Some((units, rest)) => {
            let mut out = vec![BigInt::one(); units];
            out.extend(invariant_factors_i64(rest));
            out
        }
        None => {
            log::debug!("snf: sparse elimination overflowed, using dense big integers");
            invariant_factors(&a.to_integer_matrix())
        }
    }
}

/// Eliminates unit pivots; returns their count and the remaining block, or
/// `None` on overflow.
fn sparse_unit_elimination(a: &SparseMatrix) -> Option<(usize, Dense<i64>)> {
    let mut cols: Vec<BTreeMap<usize, i64>> = (0..a.cols())
        .map(|j| a.column(j).iter().copied().collect())
        .collect();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); a.rows()];
    for (j, c) in cols.iter().enumerate() {
        for &i in c.keys() {
            row_cols[i].insert(j);
        }
    }
    let mut col_alive = vec![true; a.cols()];
    let mut row_alive = vec![true; a.rows()];
    let mut units = 0;
    let mut progress = true;
    while progress {
        progress = false;
        let mut order: Vec<usize> = (0..cols.len()).filter(|&j| col_alive[j]).collect();
        order.sort_by_key(|&j| cols[j].len());
        for p in order {
            if !col_alive[p] {
                continue;
            }
            let Some(r) = cols[p]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .map(|(&i, _)| i)
                .min_by_key(|&i| row_cols[i].len())
            else {
                continue;
            };
            let pv = cols[p][&r];
            let pivot_col = std::mem::take(&mut cols[p]);
            let others: Vec<usize> = row_cols[r].iter().copied().filter(|&j| j != p).collect();
            for j in others {
                // col_j -= (a_rj / a_rp) col_p, which clears row r in column j
                let q = cols[j][&r].checked_mul(pv)?;
                for (&i, &v) in &pivot_col {
                    let e = cols[j].entry(i).or_insert(0);
                    *e = e.checked_sub(q.checked_mul(v)?)?;
                    if *e == 0 {
                        cols[j].remove(&i);
                        row_cols[i].remove(&j);
                    } else {
                        row_cols[i].insert(j);
                    }
                }
            }
            for &i in pivot_col.keys() {
                row_cols[i].remove(&p);
            }
            col_alive[p] = false;
            row_alive[r] = false;
            units += 1;
            progress = true;
        }
    }
    let rows: Vec<usize> = (0..a.rows()).filter(|&i| row_alive[i]).collect();
    let live: Vec<usize> = (0..a.cols())
        .filter(|&j| col_alive[j] && !cols[j].is_empty())
        .collect();
    let row_pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut rest = Dense::zeros(rows.len(), live.len());
    for (k, &j) in live.iter().enumerate() {
        for (i, &v) in &cols[j] {
            rest.data[row_pos[i] * live.len() + k] = v;
        }
    }
    Some((units, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn check(a: &IntegerMatrix) -> SmithNormalForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "U·A·V ≠ D");
        assert_eq!(s.u.mul(&s.u_inv), IntegerMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntegerMatrix::identity(a.cols()));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{:?} does not divide", w);
        }
        s
    }

    #[test]
    fn zero_matrix() {
        let a = IntegerMatrix::zeros(3, 2);
        let s = check(&a);
        assert_eq!(s.rank, 0);
        assert_eq!(s.u, IntegerMatrix::identity(3));
        assert_eq!(s.v, IntegerMatrix::identity(2));
    }

    #[test]
    fn two_by_two() {
        let a = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check(&a);
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn circle_boundary() {
        // ∂₁ of the triangle boundary: edges 12, 13, 23 over vertices 1, 2, 3
        let a = IntegerMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn divisibility_needs_repair() {
        let a = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2;
        let a = IntegerMatrix::from_rows(&[vec![big, big - 1], vec![big - 3, big]]);
        let s = check(&a);
        assert_eq!(s.rank, 2);
        let det: BigInt = s.invariant_factors().iter().product();
        assert_eq!(det, a.determinant().magnitude().clone().into());
    }

    #[test]
    fn sparse_path_agrees_with_dense() {
        let a = SparseMatrix::from_columns(
            4,
            vec![
                vec![(0, 1), (1, -1)],
                vec![(1, 2), (2, 2)],
                vec![(2, 3), (3, 6)],
                vec![(0, 1), (3, 4)],
                vec![],
            ],
        );
        let dense = invariant_factors(&a.to_integer_matrix());
        assert_eq!(sparse_invariant_factors(&a), dense);
    }
}
