//! Exact linear algebra.
//!
//! Two engines live here:
//!
//! * a sparse, fraction-free column reduction over the integers used for the
//!   large sparse matrices (simplicial boundary maps, Hilbert-function
//!   multiplication maps). It runs on `i64` with checked arithmetic and reruns
//!   on `BigInt` if any intermediate overflows, so results are always exact;
//! * small dense routines over `BigRational` / `BigInt` (rank, kernel, solve,
//!   determinant, Smith normal form) for matrices with a handful of rows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A sparse integer vector: `(row, value)` pairs sorted by row, no zeros.
pub type SparseVec = Vec<(u32, i64)>;

trait ElimScalar: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, g: &Self) -> Self;
}

impl ElimScalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let v = (*a as i128) * (*x as i128) - (*b as i128) * (*y as i128);
        i64::try_from(v).ok().filter(|v| *v != i64::MIN)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

impl ElimScalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

struct Overflow;

/// `a*x - b*y` on sorted sparse vectors.
fn combine<T: ElimScalar>(
    a: &T,
    x: &[(u32, T)],
    b: &T,
    y: &[(u32, T)],
) -> Result<Vec<(u32, T)>, Overflow> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = match (x.get(i), y.get(j)) {
            (Some((rx, vx)), Some((ry, vy))) if rx == ry => {
                i += 1;
                j += 1;
                (*rx, T::mul_sub(a, vx, b, vy).ok_or(Overflow)?)
            }
            (Some((rx, vx)), Some((ry, _))) if rx < ry => {
                i += 1;
                (*rx, T::mul_sub(a, vx, &zero, &zero).ok_or(Overflow)?)
            }
            (Some((rx, vx)), None) => {
                i += 1;
                (*rx, T::mul_sub(a, vx, &zero, &zero).ok_or(Overflow)?)
            }
            (_, Some((ry, vy))) => {
                j += 1;
                (*ry, T::mul_sub(&zero, &zero, b, vy).ok_or(Overflow)?)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_nil() {
            out.push((row, v));
        }
    }
    Ok(out)
}

fn make_primitive<T: ElimScalar>(v: &mut [(u32, T)]) {
    if v.iter().any(|(_, x)| x.is_unit()) {
        return;
    }
    let mut g = T::from_i64(0);
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_unit() {
            return;
        }
    }
    if !g.is_nil() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

/// Column reduction state: reduced columns keyed by their lowest (largest-row) pivot.
struct Reducer<T> {
    pivots: HashMap<u32, Vec<(u32, T)>>,
}

impl<T: ElimScalar> Reducer<T> {
    fn new() -> Self {
        Reducer { pivots: HashMap::new() }
    }

    /// Reduce `col` against the stored pivots. Returns the pivot row if the
    /// column survives (and stores it), `None` if it reduces to zero.
    fn push(&mut self, mut col: Vec<(u32, T)>) -> Result<Option<u32>, Overflow> {
        loop {
            let Some((low, lv)) = col.last().cloned() else {
                return Ok(None);
            };
            match self.pivots.get(&low) {
                None => {
                    make_primitive(&mut col);
                    self.pivots.insert(low, col);
                    return Ok(Some(low));
                }
                Some(other) => {
                    let ov = &other.last().expect("stored pivots are nonempty").1;
                    col = combine(ov, &col, &lv, other)?;
                    make_primitive(&mut col);
                }
            }
        }
    }
}

fn rank_generic<T: ElimScalar>(columns: &[SparseVec]) -> Result<usize, Overflow> {
    let mut red = Reducer::<T>::new();
    let mut rank = 0;
    for c in columns {
        let col: Vec<(u32, T)> = c.iter().map(|(r, v)| (*r, T::from_i64(*v))).collect();
        if red.push(col)?.is_some() {
            rank += 1;
        }
    }
    Ok(rank)
}

/// Exact rank over ℚ of the matrix whose columns are the given sparse vectors.
pub fn sparse_rank(columns: &[SparseVec]) -> usize {
    match rank_generic::<i64>(columns) {
        Ok(r) => r,
        Err(Overflow) => rank_generic::<BigInt>(columns)
            .unwrap_or_else(|_| unreachable!("big integer arithmetic does not overflow")),
    }
}

fn ranks_with_pivots_generic<T: ElimScalar>(
    columns: &[SparseVec],
    skip: &[bool],
) -> Result<(usize, Vec<u32>), Overflow> {
    let mut red = Reducer::<T>::new();
    let mut pivots = Vec::new();
    for (c, s) in columns.iter().zip(skip) {
        if *s {
            continue;
        }
        let col: Vec<(u32, T)> = c.iter().map(|(r, v)| (*r, T::from_i64(*v))).collect();
        if let Some(p) = red.push(col)? {
            pivots.push(p);
        }
    }
    Ok((pivots.len(), pivots))
}

/// Rank of a column set together with the pivot rows of the surviving columns,
/// skipping columns flagged in `skip` (known to reduce to zero).
pub fn sparse_rank_with_pivots(columns: &[SparseVec], skip: &[bool]) -> (usize, Vec<u32>) {
    match ranks_with_pivots_generic::<i64>(columns, skip) {
        Ok(r) => r,
        Err(Overflow) => ranks_with_pivots_generic::<BigInt>(columns, skip)
            .unwrap_or_else(|_| unreachable!("big integer arithmetic does not overflow")),
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<BigRational>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel `{x : m·x = 0}`.
pub fn kernel(m: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// All solutions of `m·x = rhs` when the columns of `m` are independent:
/// `Some(x)` for the unique solution, `None` if inconsistent.
///
/// Panics if the columns are dependent.
pub fn solve_full_column_rank(m: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    assert_eq!(pivots.len(), cols, "coefficient matrix must have full column rank");
    Some((0..cols).map(|i| aug[i][cols].clone()).collect())
}

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Invariant factors (the nonzero diagonal of the Smith normal form) of an
/// integer matrix, in divisibility order.
pub fn smith_invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let v = &a[i][j] - &q * &a[t][j];
                    a[i][j] = v;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let v = &a[i][j] - &q * &a[i][t];
                    a[i][j] = v;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // pivot must divide the remaining block
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
        if let Some((i, _)) = bad {
            for j in t..cols {
                let v = &a[t][j] + &a[i][j];
                a[t][j] = v;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}
