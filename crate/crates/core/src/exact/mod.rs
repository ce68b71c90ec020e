//! Exact rational scalars and the determinant machinery every geometric
//! predicate in this crate reduces to.
//!
//! All quantities are arbitrary-precision rationals stored in lowest terms
//! with a positive denominator; comparisons and signs are exact. The default
//! determinant backend is fraction-free (Bareiss) elimination over the
//! numerators after clearing row denominators, which keeps intermediate
//! entry growth polynomial. Laplace expansion along a column set is kept as
//! an independent route to the same value and is used as a test oracle, not
//! as the default backend.

mod matrix;

pub use matrix::Matrix;

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. `num_rational` keeps the invariants
/// this crate relies on: lowest terms, positive denominator, exact ordering.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix size {0} exceeds the configured limit {1}")]
    SizeLimit(usize, usize),
    #[error("entry count {got} does not match {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        got: usize,
    },
    #[error("column indices must be strictly increasing and in range")]
    BadColumns,
    #[error("input lengths do not match")]
    LengthMismatch,
    #[error("need at least {0} values")]
    TooShort(usize),
    #[error("exponents must be non-negative and strictly increasing")]
    BadExponents,
    #[error("values must be strictly increasing")]
    NotIncreasing,
    #[error("values must be strictly positive")]
    NotPositive,
    #[error("block sizes must be at least 2 with odd total")]
    BadBlockSizes,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d == 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the "p/q" wire format ("q" omitted when 1). Rejects q == 0.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders the "p/q" wire format; the denominator is omitted when it is 1.
/// This is exactly `BigRational`'s `Display`, kept as a named function so
/// the format is pinned in one place.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Row denominators are cleared first so the elimination runs over integers;
/// every division in the Bareiss recurrence is exact.
pub fn det(m: &Matrix) -> Result<Rational, ExactError> {
    if m.rows() != m.cols() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    // Scale each row to integers, remembering the total scale factor.
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            lcm = num_integer::lcm(lcm, m.get(i, j).denom().clone());
        }
        let row: Vec<BigInt> = (0..n)
            .map(|j| {
                let e = m.get(i, j);
                e.numer() * (&lcm / e.denom())
            })
            .collect();
        scale *= &lcm;
        a.push(row);
    }
    let d = det_int(a);
    Ok(Rational::new(d, scale))
}

fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut neg = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    neg = !neg;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by the Bareiss identity
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Determinant by Laplace expansion along the given (0-based, strictly
/// increasing) column indices: the signed sum of det(S)·det(S̄) over all row
/// subsets of the same size. Independent route to the same value as [`det`].
pub fn laplace_expansion(m: &Matrix, columns: &[usize]) -> Result<Rational, ExactError> {
    if m.rows() != m.cols() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let k = columns.len();
    if k == 0 || k >= n {
        return Err(ExactError::BadColumns);
    }
    for w in columns.windows(2) {
        if w[0] >= w[1] {
            return Err(ExactError::BadColumns);
        }
    }
    if columns[k - 1] >= n {
        return Err(ExactError::BadColumns);
    }
    let col_sum: usize = columns.iter().sum();
    let comp_cols: Vec<usize> = (0..n).filter(|c| !columns.contains(c)).collect();
    let mut total = Rational::zero();
    for rows in crate::combo::k_subsets(n, k) {
        let row_sum: usize = rows.iter().sum();
        let comp_rows: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();
        let s = det(&m.submatrix(&rows, columns))?;
        let sbar = det(&m.submatrix(&comp_rows, &comp_cols))?;
        let term = s * sbar;
        if (row_sum + col_sum) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Vandermonde determinant of x, via the product formula
/// `prod_{i<j} (x_j - x_i)`. Strictly positive for strictly increasing x.
pub fn vandermonde(x: &[Rational]) -> Result<Rational, ExactError> {
    if x.len() < 2 {
        return Err(ExactError::TooShort(2));
    }
    let mut p = Rational::one();
    for j in 1..x.len() {
        for i in 0..j {
            p *= &x[j] - &x[i];
        }
    }
    Ok(p)
}

/// The n×n power matrix whose determinant is [`vandermonde`] (row i holds
/// the i-th powers). Kept for cross-route tests.
pub fn vandermonde_matrix(x: &[Rational]) -> Matrix {
    let n = x.len();
    Matrix::from_fn(n, n, |i, j| pow(&x[j], i as u32))
}

/// Generalized Vandermonde determinant: det of the matrix with entries
/// `x_j ^ mu_i` for a strictly increasing non-negative exponent vector mu.
/// Strictly positive for strictly increasing positive x.
pub fn generalized_vandermonde(x: &[Rational], mu: &[usize]) -> Result<Rational, ExactError> {
    if x.len() != mu.len() {
        return Err(ExactError::LengthMismatch);
    }
    if x.is_empty() {
        return Err(ExactError::TooShort(1));
    }
    for w in mu.windows(2) {
        if w[0] >= w[1] {
            return Err(ExactError::BadExponents);
        }
    }
    for v in x {
        if !v.is_positive() {
            return Err(ExactError::NotPositive);
        }
    }
    let n = x.len();
    let m = Matrix::from_fn(n, n, |i, j| pow(&x[j], mu[i] as u32));
    det(&m)
}

/// x^e by repeated multiplication; exponents here are tiny.
pub fn pow(x: &Rational, e: u32) -> Rational {
    let mut r = Rational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

fn check_block_inputs(x: &[Rational], y: &[Rational]) -> Result<(), ExactError> {
    let (k, l) = (x.len(), y.len());
    if k < 2 || l < 2 || (k + l) % 2 == 0 {
        return Err(ExactError::BadBlockSizes);
    }
    for s in [x, y] {
        for v in s {
            if !v.is_positive() {
                return Err(ExactError::NotPositive);
            }
        }
        for w in s.windows(2) {
            if w[0] >= w[1] {
                return Err(ExactError::NotIncreasing);
            }
        }
    }
    Ok(())
}

/// The structured (k+l)×(k+l) two-block power matrix with the x-block scaled
/// by tau:
///
/// ```text
///   1 .. 1      | 0 .. 0
///   x_i tau     | 0 .. 0
///   0 .. 0      | 1 .. 1
///   0 .. 0      | y_j
///   x_i^p tau^p | y_j^p     for p = 2 .. k + l - 3
/// ```
///
/// Requires k, l >= 2 with k + l odd, 0 < x_1 < … < x_k,
/// 0 < y_1 < … < y_l, tau > 0. Its determinant is strictly positive for all
/// sufficiently small tau > 0 (see [`positive_tau_for_mixed_moment`]), and
/// for k = 2 or l = 2 it equals `tau^(k(k-1)/2) · VD(x) · VD(y)` for every
/// tau > 0.
pub fn mixed_moment_matrix(
    x: &[Rational],
    y: &[Rational],
    tau: &Rational,
) -> Result<Matrix, ExactError> {
    check_block_inputs(x, y)?;
    if !tau.is_positive() {
        return Err(ExactError::NotPositive);
    }
    let (k, l) = (x.len(), y.len());
    let n = k + l;
    let m = n - 3;
    let zero = Rational::zero();
    let one = Rational::one();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let xside = |f: &dyn Fn(usize) -> Rational, g: &dyn Fn(usize) -> Rational| -> Vec<Rational> {
        (0..k).map(f).chain((0..l).map(g)).collect()
    };
    rows.push(xside(&|_| one.clone(), &|_| zero.clone()));
    rows.push(xside(&|i| &x[i] * tau, &|_| zero.clone()));
    rows.push(xside(&|_| zero.clone(), &|_| one.clone()));
    rows.push(xside(&|_| zero.clone(), &|j| y[j].clone()));
    for p in 2..=m {
        let tp = pow(tau, p as u32);
        rows.push(xside(&|i| pow(&x[i], p as u32) * &tp, &|j| {
            pow(&y[j], p as u32)
        }));
    }
    Matrix::from_rows(rows)
}

/// The coefficient of the lowest tau-power, `tau^(k(k-1)/2)`, in the
/// determinant of [`mixed_moment_matrix`] as a polynomial in tau:
/// `VD(x) · GVD(y; (0, 1, k, k+1, …, k+l-3))`. Strictly positive for valid
/// inputs, which is what forces the determinant positive for small tau.
pub fn mixed_moment_leading_coeff(x: &[Rational], y: &[Rational]) -> Result<Rational, ExactError> {
    check_block_inputs(x, y)?;
    let (k, l) = (x.len(), y.len());
    let mut mu: Vec<usize> = Vec::with_capacity(l);
    mu.push(0);
    mu.push(1);
    for p in k..=(k + l - 3) {
        mu.push(p);
    }
    let vd = vandermonde(x)?;
    let gvd = generalized_vandermonde(y, &mu)?;
    Ok(vd * gvd)
}

/// Successive halving from 1 until the [`mixed_moment_matrix`] determinant
/// is strictly positive. Termination is guaranteed because the determinant's
/// lowest-order coefficient in tau is strictly positive. Returns the found
/// tau; positivity is certified at that exact value only.
pub fn positive_tau_for_mixed_moment(
    x: &[Rational],
    y: &[Rational],
) -> Result<Rational, ExactError> {
    check_block_inputs(x, y)?;
    let mut tau = Rational::one();
    loop {
        let d = det(&mixed_moment_matrix(x, y, &tau)?)?;
        if d.is_positive() {
            return Ok(tau);
        }
        tau /= rat_int(2);
    }
}
