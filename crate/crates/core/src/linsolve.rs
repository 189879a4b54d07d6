//! Exact linear solving by Gaussian elimination over a field.
//!
//! Works over rationals or rational functions. Overdetermined consistent
//! systems return the unique solution of the row-reduced subsystem after
//! verifying every residual row; inconsistency reports the first failing row.

use crate::ratfun::RatFun;
use crate::rational::Rat;
use num_traits::Zero;

/// Field operations needed for elimination.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFun::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RatFun::div(self, o)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<F> {
    /// Unique solution; all rows (including redundant ones) verified.
    Unique(Vec<F>),
    /// Rank-deficient but consistent; one solution with free vars set to zero.
    Underdetermined { solution: Vec<F>, rank: usize },
    /// First row index at which the system is inconsistent.
    Inconsistent { row: usize },
}

/// Row-reduce `a x = b` exactly. `a` is row-major, rows may exceed columns.
pub fn linear_solve<F: Field>(a: &[Vec<F>], b: &[F]) -> SolveOutcome<F> {
    let nrows = a.len();
    assert_eq!(nrows, b.len(), "row/rhs mismatch");
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<F>> = a.to_vec();
    let mut rhs: Vec<F> = b.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row_origin: Vec<usize> = (0..nrows).collect();

    let mut r = 0;
    for c in 0..ncols {
        // find pivot
        let mut pr = None;
        for i in r..nrows {
            if !m[i][c].is_zero() {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        m.swap(r, pr);
        rhs.swap(r, pr);
        row_origin.swap(r, pr);
        let pv = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = m[r][j].div(&pv);
        }
        rhs[r] = rhs[r].div(&pv);
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&t);
                }
                let t = rhs[r].mul(&f);
                rhs[i] = rhs[i].sub(&t);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let rank = pivot_cols.len();
    // residual rows must have zero rhs
    for i in rank..nrows {
        if !rhs[i].is_zero() {
            return SolveOutcome::Inconsistent { row: row_origin[i] };
        }
    }
    let mut x = vec![F::zero(); ncols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = rhs[k].clone();
    }
    if rank == ncols {
        SolveOutcome::Unique(x)
    } else {
        SolveOutcome::Underdetermined { solution: x, rank }
    }
}

/// Elimination with a rational matrix and polynomial right-hand side
/// (used by series fitting, where unknowns are polynomials in m).
pub fn linear_solve_poly_rhs(
    a: &[Vec<Rat>],
    b: &[crate::mpoly::MPoly],
) -> SolveOutcome<crate::mpoly::MPoly> {
    use crate::mpoly::MPoly;
    let nrows = a.len();
    assert_eq!(nrows, b.len());
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<MPoly> = b.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row_origin: Vec<usize> = (0..nrows).collect();
    let mut r = 0;
    for c in 0..ncols {
        let mut pr = None;
        for i in r..nrows {
            if !Zero::is_zero(&m[i][c]) {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        m.swap(r, pr);
        rhs.swap(r, pr);
        row_origin.swap(r, pr);
        let pv = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = &m[r][j] / &pv;
        }
        rhs[r] = rhs[r].scale(&pv.recip());
        for i in 0..nrows {
            if i != r && !Zero::is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
                let t = rhs[r].scale(&f);
                rhs[i] = rhs[i].sub(&t);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let rank = pivot_cols.len();
    for i in rank..nrows {
        if !rhs[i].is_zero() {
            return SolveOutcome::Inconsistent { row: row_origin[i] };
        }
    }
    let mut x = vec![crate::mpoly::MPoly::zero(); ncols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = rhs[k].clone();
    }
    if rank == ncols {
        SolveOutcome::Unique(x)
    } else {
        SolveOutcome::Underdetermined { solution: x, rank }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    #[test]
    fn identity_system() {
        let a = vec![vec![rat_i(1), rat_i(0)], vec![rat_i(0), rat_i(1)]];
        let b = vec![rat_i(5), rat(7, 2)];
        assert_eq!(
            linear_solve(&a, &b),
            SolveOutcome::Unique(vec![rat_i(5), rat(7, 2)])
        );
    }

    #[test]
    fn inconsistent_reports_first_bad_row() {
        // x = 1, x = 2
        let a = vec![vec![rat_i(1)], vec![rat_i(1)]];
        let b = vec![rat_i(1), rat_i(2)];
        assert_eq!(linear_solve(&a, &b), SolveOutcome::Inconsistent { row: 1 });
    }

    #[test]
    fn vandermonde_interpolation() {
        // nodes 0,1,2; values of m^2 at those nodes -> coefficients (0,0,1)
        let a: Vec<Vec<Rat>> = (0..3)
            .map(|x: i64| (0..3).map(|e| rat_i(x.pow(e as u32))).collect())
            .collect();
        let b = vec![rat_i(0), rat_i(1), rat_i(4)];
        assert_eq!(
            linear_solve(&a, &b),
            SolveOutcome::Unique(vec![rat_i(0), rat_i(0), rat_i(1)])
        );
    }

    #[test]
    fn overdetermined_consistent() {
        // x + y = 3, x - y = 1, 2x = 4
        let a = vec![
            vec![rat_i(1), rat_i(1)],
            vec![rat_i(1), rat_i(-1)],
            vec![rat_i(2), rat_i(0)],
        ];
        let b = vec![rat_i(3), rat_i(1), rat_i(4)];
        assert_eq!(
            linear_solve(&a, &b),
            SolveOutcome::Unique(vec![rat_i(2), rat_i(1)])
        );
    }
}
