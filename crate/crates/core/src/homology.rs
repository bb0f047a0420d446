//! Exact rational linear algebra and graded Betti numbers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cube::GradedChainComplex;
use crate::error::{Error, Result};

/// Sparse matrix over the rationals, stored by rows with sorted columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, BigRational)>>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|k| (k, k, BigRational::one())))
    }

    /// Entries at repeated positions are summed; zeros are dropped.
    ///
    /// Panics if an index is out of bounds.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigRational)>,
    ) -> Self {
        let mut by_row: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            *by_row[r].entry(c).or_insert_with(BigRational::zero) += v;
        }
        let data = by_row
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseRationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.data[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn row(&self, r: usize) -> &[(usize, BigRational)] {
        &self.data[r]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// `self * rhs`. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.data[*k] {
                        *acc.entry(*c).or_insert_with(BigRational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseRationalMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

/// Exact rank by fraction-free elimination on integer rows.
///
/// Each row is cleared of denominators and reduced against pivot rows with
/// `row <- p * row - r * pivot`, then divided by its content. Elimination
/// runs on `i64` with overflow checks and restarts on big integers when a
/// coefficient leaves that range.
pub fn rank_exact(m: &SparseRationalMatrix) -> usize {
    let rows: Vec<Vec<(usize, BigInt)>> = m
        .data
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| integer_row(r))
        .collect();
    let small: Option<Vec<Vec<(usize, i64)>>> = rows
        .iter()
        .map(|r| r.iter().map(|(c, v)| v.to_i64().map(|v| (*c, v))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(rank) = eliminate(small) {
            return rank;
        }
    }
    eliminate(rows).expect("big integers never overflow")
}

fn integer_row(row: &[(usize, BigRational)]) -> Vec<(usize, BigInt)> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}

trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Coeff for i64 {
    fn zero() -> i64 {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &i64) -> i64 {
        self / by
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Coeff for BigInt {
    fn zero() -> BigInt {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &BigInt) -> BigInt {
        self / by
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

fn reduce_content<T: Coeff>(row: &mut [(usize, T)]) {
    if row.iter().any(|(_, v)| v.is_unit()) {
        return;
    }
    let mut g = row[0].1.clone();
    for (_, v) in &row[1..] {
        g = g.gcd(v);
        if g.is_unit() {
            return;
        }
    }
    for (_, v) in row.iter_mut() {
        *v = v.div_exact(&g);
    }
}

/// `p_lead * row - r_lead * pivot`, both sparse and sorted; `None` on overflow.
fn combine<T: Coeff>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let (r_lead, p_lead) = (&row[0].1, &pivot[0].1);
    let zero = T::zero();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (1, 1);
    while i < row.len() || k < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let ck = pivot.get(k).map_or(usize::MAX, |e| e.0);
        let (col, x, y) = if ci < ck {
            i += 1;
            (ci, &row[i - 1].1, &zero)
        } else if ck < ci {
            k += 1;
            (ck, &zero, &pivot[k - 1].1)
        } else {
            i += 1;
            k += 1;
            (ci, &row[i - 1].1, &pivot[k - 1].1)
        };
        let v = T::mul_sub(p_lead, x, r_lead, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn eliminate<T: Coeff>(mut rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    rows.sort_by_key(Vec::len);
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        loop {
            if row.is_empty() {
                break;
            }
            let lead = row[0].0;
            match pivots.get(&lead) {
                Some(p) => {
                    row = combine(&row, p)?;
                    if !row.is_empty() {
                        reduce_content(&mut row);
                    }
                }
                None => {
                    reduce_content(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Dimensions indexed by `(i, j)`; only nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims(BTreeMap<(i32, i32), usize>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: i32, j: i32) -> usize {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: i32, j: i32, dim: usize) {
        if dim > 0 {
            *self.0.entry((i, j)).or_insert(0) += dim;
        }
    }

    /// Nonzero `((i, j), dim)` entries, ordered by `i` then `j`.
    pub fn iter(&self) -> impl Iterator<Item = ((i32, i32), usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Entrywise sum (direct sum of the graded spaces).
    pub fn direct_sum(&self, other: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for ((i, j), d) in other.iter() {
            out.add(i, j, d);
        }
        out
    }

    /// Convolution over `(i, j)` (tensor product of the graded spaces).
    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        let mut out = GradedDims::new();
        for ((i1, j1), d1) in self.iter() {
            for ((i2, j2), d2) in other.iter() {
                out.add(i1 + i2, j1 + j2, d1 * d2);
            }
        }
        out
    }

    /// `(i, j) -> (-i, -j)`.
    pub fn negated(&self) -> GradedDims {
        self.iter().map(|((i, j), d)| ((-i, -j), d)).collect()
    }

    pub fn i_range(&self) -> Option<(i32, i32)> {
        let min = self.0.keys().map(|k| k.0).min()?;
        let max = self.0.keys().map(|k| k.0).max()?;
        Some((min, max))
    }

    pub fn j_range(&self) -> Option<(i32, i32)> {
        let min = self.0.keys().map(|k| k.1).min()?;
        let max = self.0.keys().map(|k| k.1).max()?;
        Some((min, max))
    }
}

impl FromIterator<((i32, i32), usize)> for GradedDims {
    fn from_iter<I: IntoIterator<Item = ((i32, i32), usize)>>(iter: I) -> Self {
        let mut out = GradedDims::new();
        for ((i, j), d) in iter {
            out.add(i, j, d);
        }
        out
    }
}

/// `dim H^{i,j} = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j}` for every grading.
pub fn homology_dims(c: &GradedChainComplex) -> Result<GradedDims> {
    for ((i, j), d) in c.differentials() {
        let (src, tgt) = (c.generators(i, j).len(), c.generators(i + 1, j).len());
        if d.cols() != src || d.rows() != tgt {
            return Err(Error::CorruptComplex(format!(
                "differential at ({i}, {j}) is {}x{}, expected {tgt}x{src}",
                d.rows(),
                d.cols()
            )));
        }
    }
    let ranks: HashMap<(i32, i32), usize> = c
        .differentials()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, d)| (k, rank_exact(d)))
        .collect();
    let rank = |i: i32, j: i32| ranks.get(&(i, j)).copied().unwrap_or(0);
    let mut out = GradedDims::new();
    for (i, j) in c.gradings() {
        let dim = c.generators(i, j).len();
        let used = rank(i, j) + rank(i - 1, j);
        if used > dim {
            return Err(Error::CorruptComplex(format!(
                "ranks around ({i}, {j}) exceed the chain group dimension"
            )));
        }
        out.add(i, j, dim - used);
    }
    Ok(out)
}

/// Two-variable Poincare polynomial `sum dim * t^i q^j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PoincarePolynomial(BTreeMap<(i32, i32), usize>);

impl PoincarePolynomial {
    /// Terms ordered by decreasing `i`, then decreasing `j`.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), usize)> + '_ {
        self.0.iter().rev().map(|(&k, &v)| (k, v))
    }
}

pub fn poincare_polynomial(g: &GradedDims) -> PoincarePolynomial {
    PoincarePolynomial(g.0.clone())
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((i, j), d)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if d != 1 || (i == 0 && j == 0) {
                write!(f, "{d}")?;
            }
            crate::poly::write_monomial(f, "t", i)?;
            crate::poly::write_monomial(f, "q", j)?;
        }
        Ok(())
    }
}
