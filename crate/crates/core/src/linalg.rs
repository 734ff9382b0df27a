//! Exact linear algebra over `Q` and over prime fields `F_p`.
//!
//! Rational ranks and leading minors use fraction-free (Bareiss) elimination
//! on integer matrices; the span bookkeeping of the closure and center
//! computations uses a sparse, fully reduced echelon basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default probing prime.
pub const DEFAULT_PRIME: u64 = 1_000_000_007;

/// The three primes used for rank certificates, default first.
pub const PROBE_PRIMES: [u64; 3] = [1_000_000_007, 998_244_353, 1_000_000_009];

/// Sparse rational vector: coordinate index to nonzero value.
pub type SparseVector = BTreeMap<usize, BigRational>;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(x.into()));
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Each row scaled by the lcm of its denominators; row scaling by positive
    /// integers preserves rank and the signs of leading principal minors.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }

    fn to_big_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|r| r.iter().map(|&x| x.into()).collect())
            .collect()
    }
}

/// Fully reduced row echelon basis of a subspace of `Q^len`.
///
/// Rows are keyed by pivot column, so pivots iterate in increasing order; each
/// pivot entry is 1 and every pivot column is zero in all other rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EchelonBasis {
    len: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: BTreeMap::new(),
        }
    }

    /// Ambient length.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVector> + '_ {
        self.rows.values()
    }

    fn check_len(&self, v: &SparseVector) -> Result<()> {
        match v.keys().next_back() {
            Some(&last) if last >= self.len => Err(Error::LengthMismatch {
                expected: self.len,
                got: last + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector> {
        self.check_len(v)?;
        let mut v: SparseVector = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        let hits: Vec<usize> = v
            .keys()
            .copied()
            .filter(|k| self.rows.contains_key(k))
            .collect();
        for p in hits {
            // Other rows vanish at pivot columns, so no new pivot entries appear.
            let Some(c) = v.remove(&p) else { continue };
            for (&j, x) in self.rows[&p].iter().skip(1) {
                axpy_entry(&mut v, j, &(-(&c * x)));
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_empty())
    }

    /// Reduces `v` against the basis and inserts the normalized remainder if it
    /// is nonzero. Returns whether the span grew.
    pub fn sift(&mut self, v: &SparseVector) -> Result<bool> {
        let rem = self.reduce(v)?;
        let Some((&pivot, lead)) = rem.iter().next() else {
            return Ok(false);
        };
        let inv = lead.recip();
        let row: SparseVector = rem.iter().map(|(k, c)| (*k, c * &inv)).collect();
        for other in self.rows.values_mut() {
            if let Some(c) = other.remove(&pivot) {
                for (&j, x) in row.iter().skip(1) {
                    axpy_entry(other, j, &(-(&c * x)));
                }
            }
        }
        self.rows.insert(pivot, row);
        Ok(true)
    }

    /// Dense convenience wrapper around [`EchelonBasis::sift`].
    pub fn sift_dense(&mut self, v: &[BigRational]) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: v.len(),
            });
        }
        self.sift(&dense_to_sparse(v))
    }
}

fn axpy_entry(v: &mut SparseVector, j: usize, delta: &BigRational) {
    use std::collections::btree_map::Entry;
    match v.entry(j) {
        Entry::Vacant(e) => {
            if !delta.is_zero() {
                e.insert(delta.clone());
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += delta;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn dense_to_sparse(v: &[BigRational]) -> SparseVector {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Rank of an integer matrix by fraction-free elimination with row pivoting.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let x = pivot * &row[j] - &f * &pivot_row[j];
                row[j] = x / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

pub fn rank(m: &RationalMatrix) -> usize {
    bareiss_rank(m.to_integer_rows(), m.cols)
}

/// `cols - rank(m)` by exact elimination.
pub fn kernel_dimension(m: &RationalMatrix) -> usize {
    m.cols - rank(m)
}

/// Basis of the right null space, one vector per free column, by
/// Gauss-Jordan elimination over `Q`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| m.data[i * cols..(i + 1) * cols].to_vec())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Arithmetic modulo a prime below `2^32`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub(crate) fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub(crate) fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(self, a: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Rank of a dense row-major matrix with entries already reduced mod p.
    /// The buffer is destroyed.
    ///
    /// Left-looking: rows are taken in blocks small enough to stay in cache,
    /// each block is reduced against every pivot found so far, and the
    /// survivors inside the block become new pivots.
    pub(crate) fn rank_in_place(self, data: &mut [u32], rows: usize, cols: usize) -> usize {
        if cols == 0 {
            return 0;
        }
        let block = (BLOCK_BYTES / (4 * cols)).clamp(1, rows.max(1));
        // (first nonzero column, row offset into `data`, inverse of the lead)
        let mut pivots: Vec<(usize, usize, u64)> = Vec::new();
        for start in (0..rows).step_by(block) {
            let end = (start + block).min(rows);
            let (done, rest) = data.split_at_mut(start * cols);
            let batch = &mut rest[..(end - start) * cols];
            for &(c, off, inv) in &pivots {
                let pivot_row = &done[off + c..off + cols];
                for row in batch.chunks_exact_mut(cols) {
                    self.eliminate(&mut row[c..], pivot_row, inv);
                }
            }
            let first_new = pivots.len();
            for i in 0..end - start {
                let (before, this) = batch.split_at_mut(i * cols);
                let row = &mut this[..cols];
                for &(c, off, inv) in &pivots[first_new..] {
                    let off = off - start * cols;
                    self.eliminate(&mut row[c..], &before[off + c..off + cols], inv);
                }
                if let Some(c) = row.iter().position(|&v| v != 0) {
                    pivots.push((c, (start + i) * cols, self.inv(row[c] as u64)));
                }
            }
            if pivots.len() == cols {
                break;
            }
        }
        pivots.len()
    }

    /// `row -= (row[0] / pivot[0]) * pivot`, given `inv = 1 / pivot[0]`.
    #[inline]
    fn eliminate(self, row: &mut [u32], pivot: &[u32], inv: u64) {
        let lead = row[0];
        if lead == 0 {
            return;
        }
        let p = self.p;
        let w = p - self.mul(lead as u64, inv);
        let w_shoup = (w << 32) / p;
        axpy_shoup(row, pivot, w, w_shoup, p);
    }
}

/// Working-set target for one block of rows in [`PrimeField::rank_in_place`].
const BLOCK_BYTES: usize = 512 * 1024;

/// `x += w * y (mod p)` for `x, y < p < 2^32`. Every product fits in 64 bits;
/// the conditional subtractions use `min` on wrapped values so the loop has
/// no data-dependent branches.
#[inline(never)]
fn axpy_shoup(x: &mut [u32], y: &[u32], w: u64, w_shoup: u64, p: u64) {
    for (x, &y) in x.iter_mut().zip(y) {
        let y = y as u64;
        let q = y.wrapping_mul(w_shoup) >> 32;
        let t = y.wrapping_mul(w).wrapping_sub(q.wrapping_mul(p));
        let t = t.min(t.wrapping_sub(p));
        let s = (*x as u64).wrapping_add(t);
        *x = s.min(s.wrapping_sub(p)) as u32;
    }
}

/// Kernel dimension of `m` over `F_p`. Since rank mod p never exceeds the
/// rational rank, this is an upper bound for [`kernel_dimension`].
pub fn kernel_dimension_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    let field = PrimeField::new(p)?;
    let mut data: Vec<u32> = m.data.iter().map(|&x| field.reduce_i64(x) as u32).collect();
    Ok(m.cols - field.rank_in_place(&mut data, m.rows, m.cols))
}

/// Leading principal minors `Δ_1, ..., Δ_k` of an integer matrix, stopping
/// after the first zero minor (later pivots are then undefined).
fn leading_minors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let n = a.len();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        // After k Bareiss steps without pivoting, a[k][k] is Δ_{k+1}.
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let f = row[k].clone();
            for j in k + 1..n {
                let x = &pivot * &row[j] - &f * &pivot_row[j];
                row[j] = x / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot;
    }
    minors
}

fn negative_definite_by_minors(rows: Vec<Vec<BigInt>>) -> bool {
    let n = rows.len();
    let minors = leading_minors(rows);
    minors.len() == n
        && minors.iter().enumerate().all(|(i, d)| {
            // sign of (-1)^(i+1) Δ_{i+1} must be positive
            if i % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}

/// Leading principal minors of a square rational matrix, up to and including
/// the first zero.
pub fn leading_principal_minors(m: &RationalMatrix) -> Result<Vec<BigRational>> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    // Undo the row scaling: Δ_k(original) = Δ_k(scaled) / Π_{i<k} scale_i.
    let mut scales = Vec::with_capacity(m.rows);
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = &m.data[i * m.cols..(i + 1) * m.cols];
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let r = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            scales.push(l);
            r
        })
        .collect();
    let mut acc = BigInt::one();
    Ok(leading_minors(rows)
        .into_iter()
        .zip(scales)
        .map(|(d, s)| {
            acc *= s;
            BigRational::new(d, acc.clone())
        })
        .collect())
}

/// True iff `(-1)^k Δ_k > 0` for every leading principal minor.
pub fn is_negative_definite(m: &RationalMatrix) -> Result<bool> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(negative_definite_by_minors(m.to_integer_rows()))
}

/// Integer-matrix variant of [`is_negative_definite`]. Diagonal input is
/// decided from the diagonal entries, whose prefix products are the minors.
pub fn is_negative_definite_int(m: &IntMatrix) -> Result<bool> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.is_diagonal() {
        return Ok(m.diagonal().iter().all(|&d| d < 0));
    }
    Ok(negative_definite_by_minors(m.to_big_rows()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn sv(entries: &[(usize, i64)]) -> SparseVector {
        entries.iter().map(|&(i, x)| (i, q(x))).collect()
    }

    /// Plain Gauss-Jordan over `Q` counting free columns.
    fn nullity_oracle(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            r += 1;
        }
        cols - r
    }

    #[test]
    fn sift_examples() {
        let mut b = EchelonBasis::new(3);
        assert!(b.sift(&sv(&[(0, 1)])).unwrap());
        assert_eq!(b.rank(), 1);
        assert!(!b.sift(&sv(&[(0, 3)])).unwrap());
        assert!(b.sift(&sv(&[(0, 1), (1, 1)])).unwrap());
        assert_eq!(b.rank(), 2);
        assert!(b.vectors().any(|v| *v == sv(&[(1, 1)])));
    }

    #[test]
    fn sift_keeps_reduced_form() {
        let mut b = EchelonBasis::new(4);
        b.sift(&sv(&[(1, 2), (3, 4)])).unwrap();
        b.sift(&sv(&[(0, 1), (1, 1)])).unwrap();
        b.sift(&sv(&[(2, 5), (3, -1)])).unwrap();
        let pivots: Vec<_> = b.pivots().collect();
        assert_eq!(pivots, vec![0, 1, 2]);
        for (p, v) in b.rows.iter() {
            assert!(v[p].is_one());
            for (other, w) in b.rows.iter() {
                if other != p {
                    assert!(!w.contains_key(p));
                }
            }
        }
    }

    #[test]
    fn sift_rejects_wrong_length() {
        let mut b = EchelonBasis::new(2);
        assert!(b.sift(&sv(&[(2, 1)])).is_err());
        assert!(b.sift_dense(&[q(1)]).is_err());
    }

    #[test]
    fn kernel_dimension_examples() {
        assert_eq!(kernel_dimension(&RationalMatrix::identity(3)), 0);
        assert_eq!(kernel_dimension(&RationalMatrix::zeros(3, 3)), 3);
        assert_eq!(
            kernel_dimension(&RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]])),
            1
        );
    }

    #[test]
    fn kernel_dimension_mod_p_examples() {
        let id = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(kernel_dimension_mod_p(&id, 7).unwrap(), 0);
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(kernel_dimension_mod_p(&two, 2).unwrap(), 1);
        assert_eq!(kernel_dimension(&two.to_rational()), 0);
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(kernel_dimension_mod_p(&m, DEFAULT_PRIME).unwrap(), 1);
        assert_eq!(
            kernel_dimension_mod_p(&m, 9).unwrap_err(),
            Error::NotPrime(9)
        );
    }

    #[test]
    fn kernel_basis_vectors_are_in_the_kernel() {
        let m = RationalMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            for i in 0..2 {
                let dot: BigRational = (0..3).map(|j| m.get(i, j) * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn primality() {
        for p in PROBE_PRIMES {
            assert!(is_prime(p));
        }
        assert!(!is_prime(1));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(2) && is_prime(3) && !is_prime(561));
    }

    #[test]
    fn negative_definite_examples() {
        let minus_id = IntMatrix::from_rows(&[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        assert!(is_negative_definite(&minus_id.to_rational()).unwrap());
        assert!(is_negative_definite_int(&minus_id).unwrap());
        let semi = RationalMatrix::from_i64_rows(&[vec![-1, 0], vec![0, 0]]);
        assert!(!is_negative_definite(&semi).unwrap());
        let a2 = RationalMatrix::from_i64_rows(&[vec![-2, 1], vec![1, -2]]);
        assert!(is_negative_definite(&a2).unwrap());
        assert_eq!(leading_principal_minors(&a2).unwrap(), vec![q(-2), q(3)]);
        let indefinite = RationalMatrix::from_i64_rows(&[vec![-1, 2], vec![2, -1]]);
        assert!(!is_negative_definite(&indefinite).unwrap());
        let asym = RationalMatrix::from_i64_rows(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(
            is_negative_definite(&asym).unwrap_err(),
            Error::NotSymmetric
        );
    }

    #[test]
    fn minors_handle_rational_entries() {
        let mut m = RationalMatrix::from_i64_rows(&[vec![-1, 0], vec![0, -1]]);
        m.set(0, 0, BigRational::new((-1).into(), 3.into()));
        m.set(0, 1, BigRational::new(1.into(), 2.into()));
        m.set(1, 0, BigRational::new(1.into(), 2.into()));
        // Δ1 = -1/3, Δ2 = 1/3 - 1/4 = 1/12
        let minors = leading_principal_minors(&m).unwrap();
        assert_eq!(
            minors,
            vec![
                BigRational::new((-1).into(), 3.into()),
                BigRational::new(1.into(), 12.into())
            ]
        );
        assert!(is_negative_definite(&m).unwrap());
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 300, rng_seed: proptest::test_runner::RngSeed::Fixed(0), ..ProptestConfig::default() })]

        #[test]
        fn kernel_dimension_matches_oracle(rows in arb_matrix()) {
            let m = RationalMatrix::from_i64_rows(&rows);
            prop_assert_eq!(kernel_dimension(&m), nullity_oracle(&rows));
        }

        #[test]
        fn mod_p_kernel_bounds_rational_kernel(rows in arb_matrix(), pi in 0usize..5) {
            let p = [2u64, 3, 5, 7, DEFAULT_PRIME][pi];
            let m = IntMatrix::from_rows(&rows);
            prop_assert!(kernel_dimension_mod_p(&m, p).unwrap() >= kernel_dimension(&m.to_rational()));
        }

        #[test]
        fn resifting_basis_vectors_is_rejected(rows in arb_matrix()) {
            let cols = rows[0].len();
            let mut b = EchelonBasis::new(cols);
            for r in &rows {
                b.sift(&sv(&r.iter().copied().enumerate().collect::<Vec<_>>())).unwrap();
            }
            prop_assert_eq!(b.rank(), cols - nullity_oracle(&rows));
            let vs: Vec<SparseVector> = b.vectors().cloned().collect();
            for v in vs {
                prop_assert!(!b.sift(&v).unwrap());
            }
        }
    }
}
