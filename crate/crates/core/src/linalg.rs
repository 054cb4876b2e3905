//! Exact integer matrices, integer polynomials and rational kernels.
//!
//! Everything here works over `BigInt`; rational numbers only appear
//! transiently during back substitution and are cleared before returning.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().map(|&x| x.into()));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    /// Rows as decimal strings; the JSON-safe form for entries beyond 64 bits.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(BigInt::to_string).collect())
            .collect()
    }

    /// Frobenius norm as a float; an upper bound for the operator 2-norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|x| {
                let f = x.to_f64().unwrap_or(f64::INFINITY);
                f * f
            })
            .sum::<f64>()
            .sqrt()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;

    fn neg(mut self) -> IntMatrix {
        for x in &mut self.data {
            *x = -std::mem::take(x);
        }
        self
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).to_vec()))
            .finish()
    }
}

/// Characteristic polynomial `det(xI - m)` by Faddeev-LeVerrier, low-to-high.
///
/// Every division in the recursion is exact for integer matrices; this is
/// asserted rather than assumed.
pub fn characteristic_polynomial(m: &IntMatrix) -> Vec<BigInt> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // acc = M_k, with M_0 = 0 and M_k = m * M_{k-1} + c_{n-k+1} I
    let mut acc = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &acc;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let am = m * &next;
        let (q, r) = (-am.trace()).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division was not exact");
        coeffs[n - k] = q;
        acc = next;
    }
    coeffs
}

/// Evaluates a low-to-high integer polynomial.
pub fn poly_eval(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn poly_eval_f64(coeffs: &[BigInt], x: f64) -> f64 {
    coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Formal derivative of a low-to-high polynomial.
pub fn poly_derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact division by a monic polynomial; `None` when the remainder is nonzero.
pub fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let num = trim(num.to_vec());
    let den = trim(den.to_vec());
    assert!(
        den.last().is_some_and(One::is_one),
        "divisor must be monic"
    );
    if num.len() < den.len() {
        return num.is_empty().then(Vec::new);
    }
    let dd = den.len() - 1;
    let mut rem = num;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &lead * d;
        }
        quot[k] = lead;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// Cyclotomic polynomial Φ_k, low-to-high, via `x^k - 1 = ∏_{d | k} Φ_d`.
pub fn cyclotomic(k: usize) -> Vec<BigInt> {
    assert!(k >= 1);
    let mut p = vec![BigInt::zero(); k + 1];
    p[0] = -BigInt::one();
    p[k] = BigInt::one();
    for d in (1..k).filter(|&d| k.is_multiple_of(d)) {
        p = poly_div_monic(&p, &cyclotomic(d)).expect("cyclotomic divisor");
    }
    p
}

/// Divides out cyclotomic factors from a monic polynomial of degree `n`.
///
/// Returns the multiset of indices `k` with `Φ_k` dividing the input when the
/// polynomial is a product of cyclotomic polynomials, `None` otherwise.
/// Since `φ(k) ≥ sqrt(k/2)`, only `k ≤ 2n²` can contribute.
pub fn cyclotomic_factorization(coeffs: &[BigInt]) -> Option<Vec<usize>> {
    let mut rest = trim(coeffs.to_vec());
    let n = rest.len().saturating_sub(1);
    let mut factors = Vec::new();
    for k in 1..=(2 * n * n).max(1) {
        if rest.len() <= 1 {
            break;
        }
        let phi = cyclotomic(k);
        if phi.len() > rest.len() {
            continue;
        }
        while let Some(q) = poly_div_monic(&rest, &phi) {
            factors.push(k);
            rest = q;
            if rest.len() <= 1 {
                break;
            }
        }
    }
    (rest.len() == 1 && rest[0].is_one()).then_some(factors)
}

/// Divides a vector by the gcd of its entries and makes the first nonzero
/// entry positive. The zero vector is returned unchanged.
pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let sign = if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let g = g * sign;
    v.into_iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector, returning a primitive integer
/// vector on the same line.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints = v
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    primitive(ints)
}

/// Row echelon form by Bareiss fraction-free elimination.
///
/// Returns the reduced rows and their pivot columns. All intermediate entries
/// are minors of the input, so every division is exact.
pub fn bareiss_echelon(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(k, p);
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let num = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                row[j] = num / &prev;
            }
        }
        prev = m[k][col].clone();
        pivots.push(col);
        k += 1;
    }
    m.truncate(k);
    (m, pivots)
}

/// Basis of the right kernel `{x : m x = 0}` over ℚ, one primitive integer
/// vector per free column.
///
/// The basis is the one read off the reduced row echelon form, so it is
/// canonical for a fixed column order.
pub fn integer_kernel(m: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let (ech, pivots) = bareiss_echelon(m.to_vec(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in ech.iter().zip(&pivots).rev() {
                let s: BigRational = (p + 1..cols)
                    .filter(|&j| !row[j].is_zero())
                    .map(|j| &x[j] * BigRational::from_integer(row[j].clone()))
                    .sum();
                x[p] = -s / BigRational::from_integer(row[p].clone());
            }
            clear_denominators(&x)
        })
        .collect()
}

/// Rank over ℚ.
pub fn rank(m: &[Vec<BigInt>], cols: usize) -> usize {
    bareiss_echelon(m.to_vec(), cols).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_charpoly() {
        let p = characteristic_polynomial(&IntMatrix::identity(2));
        assert_eq!(p, ints(&[1, -2, 1]));
    }

    #[test]
    fn charpoly_of_empty_matrix_is_one() {
        assert_eq!(characteristic_polynomial(&IntMatrix::zeros(0, 0)), ints(&[1]));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_factorization_detects_non_cyclotomic() {
        // (x - 1)^2
        assert_eq!(cyclotomic_factorization(&ints(&[1, -2, 1])), Some(vec![1, 1]));
        // x^3 - 5x^2 - 5x + 1 = (x + 1)(x^2 - 6x + 1)
        assert_eq!(cyclotomic_factorization(&ints(&[1, -5, -5, 1])), None);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6])];
        let k = integer_kernel(&m, 3);
        assert_eq!(k, vec![ints(&[-2, 1, 0]), ints(&[-3, 0, 1])]
            .into_iter()
            .map(primitive)
            .collect::<Vec<_>>());
        for v in &k {
            for row in &m {
                let s: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])];
        assert!(integer_kernel(&m, 2).is_empty());
        assert_eq!(rank(&m, 2), 2);
    }

    #[test]
    fn monic_division() {
        let p = poly_mul(&ints(&[1, 1]), &ints(&[1, -6, 1]));
        assert_eq!(p, ints(&[1, -5, -5, 1]));
        assert_eq!(poly_div_monic(&p, &ints(&[1, 1])), Some(ints(&[1, -6, 1])));
        assert_eq!(poly_div_monic(&p, &ints(&[-1, 1])), None);
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        assert_eq!(primitive(ints(&[0, -4, 6])), ints(&[0, 2, -3]));
        assert_eq!(primitive(ints(&[0, 0])), ints(&[0, 0]));
    }
}
