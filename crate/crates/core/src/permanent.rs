//! Exact permanents.
//!
//! [`permanent_ryser`] is the fast path: Ryser's inclusion–exclusion formula
//! over column subsets visited in Gray-code order, so each step updates the
//! row sums by a single column. Terms are accumulated in `i128` and spill into
//! a `BigInt` on overflow. [`permanent_naive`] sums over permutations directly
//! and is the oracle the fast path is tested against.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::matrix::Matrix;

pub type ExactInt = BigInt;

/// Largest dimension [`permanent_naive`] accepts.
pub const NAIVE_MAX_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermanentError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("malformed decomposition: {0}")]
    Decomposition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermanentConfig {
    pub max_dim: usize,
    /// Dimension from which the subset range is split across threads.
    pub parallel_from: usize,
    pub chunks: usize,
}

impl Default for PermanentConfig {
    fn default() -> Self {
        Self { max_dim: 30, parallel_from: 20, chunks: 64 }
    }
}

/// Exact sum of `i128` terms that never overflows.
#[derive(Default)]
struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    fn add(&mut self, x: i128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    fn add_big(&mut self, x: BigInt) {
        self.big += x;
    }

    fn finish(self) -> BigInt {
        self.big + self.small
    }
}

fn check_square<T>(m: &Matrix<T>, cap: usize) -> Result<usize, PermanentError>
where
    T: Copy + Default,
{
    if !m.is_square() {
        return Err(PermanentError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() > cap {
        return Err(PermanentError::DimensionCap { dim: m.rows(), cap });
    }
    Ok(m.rows())
}

/// Column-major copy widened to `i128`, so row sums cannot overflow.
fn columns<T: Copy + Default + Into<i64>>(m: &Matrix<T>) -> Vec<Vec<i128>> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| i128::from(m.get(i, j).into())).collect()).collect()
}

fn signed_product(row_sums: &[i128], negative: bool, acc: &mut Accumulator) {
    let mut p: i128 = 1;
    for (i, &s) in row_sums.iter().enumerate() {
        if s == 0 {
            return;
        }
        match p.checked_mul(s) {
            Some(q) => p = q,
            None => {
                let mut big = BigInt::from(p);
                for &t in &row_sums[i..] {
                    big *= t;
                }
                acc.add_big(if negative { -big } else { big });
                return;
            }
        }
    }
    acc.add(if negative { -p } else { p });
}

/// Ryser terms for Gray-code indices `lo..hi`.
fn ryser_range(cols: &[Vec<i128>], lo: u64, hi: u64) -> BigInt {
    let n = cols.len();
    let mut acc = Accumulator::default();
    if lo >= hi {
        return BigInt::zero();
    }
    let gray = |k: u64| k ^ (k >> 1);
    let start = gray(lo);
    let mut sums = vec![0i128; n];
    for (j, col) in cols.iter().enumerate() {
        if start >> j & 1 == 1 {
            for (s, &x) in sums.iter_mut().zip(col) {
                *s += x;
            }
        }
    }
    let mut size = start.count_ones() as usize;
    signed_product(&sums, (n - size) % 2 == 1, &mut acc);
    for k in lo + 1..hi {
        let j = k.trailing_zeros() as usize;
        if gray(k) >> j & 1 == 1 {
            for (s, &x) in sums.iter_mut().zip(&cols[j]) {
                *s += x;
            }
            size += 1;
        } else {
            for (s, &x) in sums.iter_mut().zip(&cols[j]) {
                *s -= x;
            }
            size -= 1;
        }
        signed_product(&sums, (n - size) % 2 == 1, &mut acc);
    }
    acc.finish()
}

fn chunk_bounds(total: u64, chunks: usize) -> Vec<(u64, u64)> {
    let chunks = (chunks.max(1) as u64).min(total.max(1));
    (0..chunks).map(|c| (total * c / chunks, total * (c + 1) / chunks)).collect()
}

pub fn permanent_ryser<T>(m: &Matrix<T>) -> Result<ExactInt, PermanentError>
where
    T: Copy + Default + Into<i64> + Send + Sync,
{
    permanent_ryser_with(m, &PermanentConfig::default())
}

/// Ryser with an explicit configuration. Above `parallel_from` the `2^n`
/// subset range is split into contiguous chunks evaluated on the rayon pool;
/// the exact integer sum does not depend on the split.
pub fn permanent_ryser_with<T>(m: &Matrix<T>, cfg: &PermanentConfig) -> Result<ExactInt, PermanentError>
where
    T: Copy + Default + Into<i64> + Send + Sync,
{
    let n = check_square(m, cfg.max_dim)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let cols = columns(m);
    let total = 1u64 << n;
    if n < cfg.parallel_from {
        return Ok(ryser_range(&cols, 0, total));
    }
    let parts: Vec<BigInt> =
        chunk_bounds(total, cfg.chunks).into_par_iter().map(|(lo, hi)| ryser_range(&cols, lo, hi)).collect();
    Ok(parts.into_iter().sum())
}

/// Sequential Ryser evaluated as `chunks` independent contiguous pieces.
pub fn permanent_ryser_chunked<T>(m: &Matrix<T>, chunks: usize) -> Result<ExactInt, PermanentError>
where
    T: Copy + Default + Into<i64>,
{
    let n = check_square(m, PermanentConfig::default().max_dim)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let cols = columns(m);
    Ok(chunk_bounds(1u64 << n, chunks).into_iter().map(|(lo, hi)| ryser_range(&cols, lo, hi)).sum())
}

/// Direct sum over all permutations; dimension at most [`NAIVE_MAX_DIM`].
pub fn permanent_naive<T>(m: &Matrix<T>) -> Result<ExactInt, PermanentError>
where
    T: Copy + Default + Into<i64>,
{
    let n = check_square(m, NAIVE_MAX_DIM)?;
    let a: Vec<Vec<i64>> = (0..n).map(|i| m.row(i).iter().map(|&x| x.into()).collect()).collect();
    let mut acc = Accumulator::default();
    let mut used = vec![false; n];
    naive_rec(&a, 0, &mut used, Factor::Small(1), &mut acc);
    Ok(acc.finish())
}

enum Factor {
    Small(i128),
    Big(BigInt),
}

impl Factor {
    fn times(&self, x: i64) -> Factor {
        match self {
            Factor::Small(p) => match p.checked_mul(i128::from(x)) {
                Some(q) => Factor::Small(q),
                None => Factor::Big(BigInt::from(*p) * x),
            },
            Factor::Big(b) => Factor::Big(b * x),
        }
    }
}

fn naive_rec(a: &[Vec<i64>], row: usize, used: &mut [bool], prod: Factor, acc: &mut Accumulator) {
    if row == a.len() {
        match prod {
            Factor::Small(p) => acc.add(p),
            Factor::Big(b) => acc.add_big(b),
        }
        return;
    }
    for col in 0..a.len() {
        if used[col] || a[row][col] == 0 {
            continue;
        }
        used[col] = true;
        naive_rec(a, row + 1, used, prod.times(a[row][col]), acc);
        used[col] = false;
    }
}

/// One column of a matrix written as `Σ coefficient · vector`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnDecomposition {
    pub column: usize,
    pub terms: Vec<(i64, Vec<i64>)>,
}

/// Expands the permanent by multilinearity in the decomposed columns:
/// `per(M) = Σ (Π coefficients) · per(M with those columns substituted)`.
pub fn permanent_expand_multilinear<T>(
    m: &Matrix<T>,
    decomposition: &[ColumnDecomposition],
) -> Result<ExactInt, PermanentError>
where
    T: Copy + Default + Into<i64>,
{
    let n = check_square(m, PermanentConfig::default().max_dim)?;
    let base: Matrix<i64> = m.map(Into::into);
    let mut seen = vec![false; n];
    for d in decomposition {
        if d.column >= n || std::mem::replace(&mut seen[d.column], true) {
            return Err(PermanentError::Decomposition(format!("column {} invalid or repeated", d.column)));
        }
        if d.terms.is_empty() {
            return Err(PermanentError::Decomposition(format!("column {} has no terms", d.column)));
        }
        let mut sum = vec![0i128; n];
        for (coef, vec) in &d.terms {
            if vec.len() != n {
                return Err(PermanentError::Decomposition(format!(
                    "term for column {} has length {}, expected {n}",
                    d.column,
                    vec.len()
                )));
            }
            for (s, &x) in sum.iter_mut().zip(vec) {
                *s += i128::from(*coef) * i128::from(x);
            }
        }
        let actual: Vec<i128> = base.column(d.column).into_iter().map(i128::from).collect();
        if sum != actual {
            return Err(PermanentError::Decomposition(format!(
                "terms for column {} do not sum to the column",
                d.column
            )));
        }
    }
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; decomposition.len()];
    loop {
        let mut mat = base.clone();
        let mut coef = BigInt::one();
        for (d, &c) in decomposition.iter().zip(&choice) {
            let (a, vec) = &d.terms[c];
            coef *= *a;
            for (i, &x) in vec.iter().enumerate() {
                mat.set(i, d.column, x);
            }
        }
        if !coef.is_zero() {
            total += coef * permanent_ryser(&mat)?;
        }
        // Odometer over term choices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(total);
            }
            choice[pos] += 1;
            if choice[pos] < decomposition[pos].terms.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// True when some column occurs at least `k + 1` times and is supported on at
/// most `k` rows. Those copies then cannot all be matched to distinct rows,
/// so the permanent is zero.
pub fn zero_block_shortcut<T>(m: &Matrix<T>, k: usize) -> bool
where
    T: Copy + Default + Into<i64>,
{
    column_groups(m).into_iter().any(|(support, count)| support <= k && count > k)
}

/// True when any group of identical columns outnumbers its support.
pub fn forced_zero<T>(m: &Matrix<T>) -> bool
where
    T: Copy + Default + Into<i64>,
{
    column_groups(m).into_iter().any(|(support, count)| count > support)
}

/// `(support size, multiplicity)` for each distinct column.
fn column_groups<T>(m: &Matrix<T>) -> Vec<(usize, usize)>
where
    T: Copy + Default + Into<i64>,
{
    let mut groups: HashMap<Vec<i64>, usize> = HashMap::new();
    for j in 0..m.cols() {
        let col: Vec<i64> = m.column(j).into_iter().map(Into::into).collect();
        *groups.entry(col).or_default() += 1;
    }
    groups.into_iter().map(|(col, count)| (col.iter().filter(|&&x| x != 0).count(), count)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_orientation, complete};
    use crate::index::IndexFunction;
    use crate::matrix::{build_total_matrix, select_columns};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows)
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(permanent_ryser(&m(vec![vec![0]])).unwrap(), BigInt::from(0));
        assert_eq!(permanent_ryser(&m(vec![vec![1, 2], vec![3, 4]])).unwrap(), BigInt::from(10));
        assert_eq!(permanent_naive(&m(vec![vec![1, 2], vec![3, 4]])).unwrap(), BigInt::from(10));
        assert_eq!(permanent_ryser(&Matrix::<i64>::zeros(0, 0)).unwrap(), BigInt::from(1));
        assert_eq!(permanent_naive(&Matrix::<i64>::zeros(0, 0)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn identity_and_all_ones() {
        let id = m((0..3).map(|i| (0..3).map(|j| i64::from(i == j)).collect()).collect());
        assert_eq!(permanent_naive(&id).unwrap(), BigInt::from(1));
        let mut fact = 1i64;
        for n in 1..=7 {
            fact *= n as i64;
            let ones = m(vec![vec![1; n]; n]);
            assert_eq!(permanent_naive(&ones).unwrap(), BigInt::from(fact));
            assert_eq!(permanent_ryser(&ones).unwrap(), BigInt::from(fact));
        }
    }

    #[test]
    fn triangle_edge_columns_vanish() {
        let g = complete(3);
        let a = build_total_matrix(&g, &canonical_orientation(&g));
        let sel = select_columns(&a, &IndexFunction::constant(&g, 0, 1));
        assert_eq!(permanent_naive(&sel.matrix).unwrap(), BigInt::from(0));
        assert_eq!(permanent_ryser(&sel.matrix).unwrap(), BigInt::from(0));
    }

    #[test]
    fn caps_and_shape_errors() {
        assert_eq!(
            permanent_naive(&Matrix::<i64>::zeros(11, 11)),
            Err(PermanentError::DimensionCap { dim: 11, cap: 10 })
        );
        assert_eq!(
            permanent_ryser(&Matrix::<i64>::zeros(31, 31)),
            Err(PermanentError::DimensionCap { dim: 31, cap: 30 })
        );
        assert_eq!(permanent_ryser(&Matrix::<i64>::zeros(2, 3)), Err(PermanentError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn large_entries_escalate_exactly() {
        let big = 1i64 << 40;
        let a = m(vec![vec![big; 4]; 4]);
        // 4! * big^4 = 24 * 2^160
        let expected = BigInt::from(24) * (BigInt::from(1) << 160);
        assert_eq!(permanent_ryser(&a).unwrap(), expected);
        assert_eq!(permanent_naive(&a).unwrap(), expected);
    }

    #[test]
    fn chunked_and_parallel_match_sequential() {
        let a = m((0..9).map(|i| (0..9).map(|j| ((i * 7 + j * 3) % 5) as i64 - 2).collect()).collect());
        let seq = permanent_ryser(&a).unwrap();
        for chunks in [1, 2, 3, 7, 64, 1000] {
            assert_eq!(permanent_ryser_chunked(&a, chunks).unwrap(), seq);
        }
        let cfg = PermanentConfig { parallel_from: 1, chunks: 13, ..Default::default() };
        assert_eq!(permanent_ryser_with(&a, &cfg).unwrap(), seq);
        assert_eq!(permanent_naive(&a).unwrap(), seq);
    }

    #[test]
    fn multilinear_identity_decomposition() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let d = ColumnDecomposition { column: 0, terms: vec![(1, vec![1, 3])] };
        assert_eq!(permanent_expand_multilinear(&a, &[d]).unwrap(), BigInt::from(10));
    }

    #[test]
    fn multilinear_k2_edge_column() {
        // A(e) = A(u) + A(v) on K2: [0] = [-1] + [1].
        let a = m(vec![vec![0]]);
        let d = ColumnDecomposition { column: 0, terms: vec![(1, vec![-1]), (1, vec![1])] };
        assert_eq!(permanent_expand_multilinear(&a, &[d]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn multilinear_rejects_bad_decomposition() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let wrong = ColumnDecomposition { column: 1, terms: vec![(1, vec![1, 1])] };
        assert!(matches!(permanent_expand_multilinear(&a, &[wrong]), Err(PermanentError::Decomposition(_))));
        let short = ColumnDecomposition { column: 1, terms: vec![(1, vec![2])] };
        assert!(permanent_expand_multilinear(&a, &[short]).is_err());
        let d = ColumnDecomposition { column: 0, terms: vec![(1, vec![1, 3])] };
        assert!(permanent_expand_multilinear(&a, &[d.clone(), d]).is_err());
    }

    #[test]
    fn zero_block_examples() {
        let two_copies = m(vec![vec![1, 1], vec![0, 0]]);
        assert!(zero_block_shortcut(&two_copies, 1));
        assert_eq!(permanent_ryser(&two_copies).unwrap(), BigInt::from(0));

        // k + 1 copies of a column supported on k rows.
        let k = 3;
        let mut rows = vec![vec![0i64; k + 1]; k + 1];
        for row in rows.iter_mut().take(k) {
            row.iter_mut().for_each(|x| *x = 1);
        }
        let square = m(rows);
        assert!(zero_block_shortcut(&square, k));
        assert!(forced_zero(&square));
        assert_eq!(permanent_ryser(&square).unwrap(), BigInt::from(0));

        let generic = m(vec![vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
        assert!(!zero_block_shortcut(&generic, 1));
        assert!(!forced_zero(&generic));
    }
}
