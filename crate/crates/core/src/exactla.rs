//! Exact integer linear algebra and univariate integer polynomials.
//!
//! Elimination is fraction-free throughout: dense matrices use Bareiss'
//! algorithm, and the incremental sparse [`SpanBasis`] clears one pivot at a
//! time by integer cross-multiplication followed by content removal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
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
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Appends `v` as an extra column.
    pub fn with_column(&self, v: &[BigInt]) -> Result<IntMatrix> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut m = Self::zeros(self.rows, self.cols + 1);
        for (i, x) in v.iter().enumerate() {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            m.set(i, self.cols, x.clone());
        }
        Ok(m)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn entry_sum(&self) -> BigInt {
        self.data.iter().sum()
    }

    /// Runs Bareiss elimination in place and returns the rank and the sign
    /// of the row permutation used.
    fn bareiss(&mut self) -> (usize, bool) {
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut negated = false;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, rank * cols + j);
                }
                negated = !negated;
            }
            let pivot = self.get(rank, c).clone();
            for i in rank + 1..rows {
                let lead = self.get(i, c).clone();
                for j in c + 1..cols {
                    let v = (&pivot * self.get(i, j) - &lead * self.get(rank, j)) / &prev;
                    self.set(i, j, v);
                }
                self.set(i, c, BigInt::zero());
            }
            prev = pivot;
            rank += 1;
        }
        (rank, negated)
    }

    /// Rank over the rationals.
    pub fn rank_exact(&self) -> usize {
        self.clone().bareiss().0
    }

    /// Determinant of a square matrix (`None` if not square).
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(BigInt::one());
        }
        let mut m = self.clone();
        let (rank, negated) = m.bareiss();
        if rank < self.rows {
            return Some(BigInt::zero());
        }
        let det = m.get(self.rows - 1, self.cols - 1).clone();
        Some(if negated { -det } else { det })
    }

    /// Rank over `Z/pZ` for a prime `p < 2^32`.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().unwrap())
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            let inv = pow_mod(a[rank * cols + c], p - 2, p);
            for i in rank + 1..rows {
                let f = a[i * cols + c] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f * a[rank * cols + j] % p;
                    a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn rank_exact(m: &IntMatrix) -> usize {
    m.rank_exact()
}

/// True iff `v` is a rational linear combination of the columns of `m`.
pub fn in_span(v: &[BigInt], m: &IntMatrix) -> Result<bool> {
    let augmented = m.with_column(v)?;
    Ok(augmented.rank_exact() == m.rank_exact())
}

/// Sparse integer vector: strictly increasing indices, no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(Vec<(usize, BigInt)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (i, x) in entries {
            *map.entry(i).or_default() += x;
        }
        SparseVec(map.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, BigInt::one())])
    }

    pub fn indicator(indices: &[usize]) -> Self {
        Self::from_entries(indices.iter().map(|&i| (i, BigInt::one())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.0
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.0
            .binary_search_by_key(&i, |(j, _)| *j)
            .map_or_else(|_| BigInt::zero(), |k| self.0[k].1.clone())
    }

    pub fn lead(&self) -> Option<(usize, &BigInt)> {
        self.0.first().map(|(i, x)| (*i, x))
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); len];
        for (i, x) in &self.0 {
            v[*i] = x.clone();
        }
        v
    }

    /// `a * self - b * other`.
    fn cross(&self, a: &BigInt, other: &SparseVec, b: &BigInt) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j == other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0);
            let take_right = i == self.0.len() || (j < other.0.len() && other.0[j].0 < self.0[i].0);
            let (idx, val) = if take_left {
                let r = (self.0[i].0, a * &self.0[i].1);
                i += 1;
                r
            } else if take_right {
                let r = (other.0[j].0, -(b * &other.0[j].1));
                j += 1;
                r
            } else {
                let r = (self.0[i].0, a * &self.0[i].1 - b * &other.0[j].1);
                i += 1;
                j += 1;
                r
            };
            if !val.is_zero() {
                out.push((idx, val));
            }
        }
        SparseVec(out)
    }

    /// Divides out the content and makes the leading entry positive.
    fn make_primitive(&mut self) {
        let Some(first) = self.0.first() else { return };
        let mut g = first.1.abs();
        for (_, x) in &self.0[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if first.1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, x) in &mut self.0 {
                *x /= &g;
            }
        }
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `Q^n`,
/// stored with integer entries.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        v.make_primitive();
        while let Some((lead, coef)) = v.lead() {
            let Some(row) = self.rows.get(&lead) else {
                break;
            };
            let pivot = &row.0[0].1;
            let coef = coef.clone();
            v = v.cross(pivot, row, &coef);
            v.make_primitive();
        }
        v
    }

    /// Adds `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.lead() {
            Some((lead, _)) => {
                self.rows.insert(lead, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Rank of the span of sparse vectors.
pub fn sparse_rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Integer polynomial in `t`, coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        IntPoly(c)
    }

    /// Coefficients of degree `< n` only.
    pub fn truncate(&self, n: usize) -> IntPoly {
        IntPoly::new(self.0.iter().take(n).cloned().collect())
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content; the leading coefficient is made positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^k * self mod d` with
    /// `k = deg self - deg d + 1`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lc) - &d.scale(&lr).shift(rd - dd);
        }
        r
    }

    /// Exact division; `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.0.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &d.scale(&quot).shift(rd - dd);
            q[rd - dd] = quot;
        }
        Some(IntPoly::new(q))
    }

    /// Greatest common divisor over `Z[t]`, with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `det(I - tM)` together with `1^T adj(I - tM) 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolvent {
    pub det: IntPoly,
    pub adj_sum: IntPoly,
}

/// Computes [`Resolvent`] with the Faddeev–LeVerrier recurrence, which stays
/// inside the integers: with `B_0 = I`, `a_i = -tr(M B_{i-1}) / i` and
/// `B_i = M B_{i-1} + a_i I`, one has `det(I - tM) = 1 + sum a_i t^i` and
/// `adj(I - tM) = sum B_i t^i`.
pub fn polymat_resolvent(m: &IntMatrix) -> Result<Resolvent> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let k = m.rows();
    let mut det = vec![BigInt::one()];
    let mut adj = Vec::with_capacity(k);
    let mut b = IntMatrix::identity(k);
    for i in 1..=k {
        adj.push(b.entry_sum());
        let mb = m.mul(&b)?;
        let (a, rem) = (-mb.trace()).div_rem(&BigInt::from(i));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        b = mb;
        for j in 0..k {
            let d = b.get(j, j) + &a;
            b.set(j, j, d);
        }
        det.push(a);
    }
    debug_assert!(b.data.iter().all(Zero::is_zero));
    Ok(Resolvent {
        det: IntPoly::new(det),
        adj_sum: IntPoly::new(adj),
    })
}
