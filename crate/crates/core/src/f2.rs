//! Bit-packed exact linear algebra over the two-element field.
//!
//! Vectors pack 64 coordinates per machine word; addition is coordinatewise
//! XOR. Matrices are dense row lists. The convention, fixed repo-wide, is
//! that vectors are column vectors and matrices act on the left: `m.mul_vec(x)`
//! computes `m·x`, where `x.len() == m.cols` and the result has length
//! `m.rows`. Row `i` of a matrix holds the coefficients of output
//! coordinate `i`.

use std::fmt;

/// A vector over GF(2), packed 64 coordinates per `u64` word.
///
/// Trailing bits beyond `len` are kept zero, so `Eq`/`Ord`/`Hash` on the word
/// data are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Unit vector with a single 1 at `bit`.
    pub fn unit(len: usize, bit: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(bit, true);
        v
    }

    /// Builds a vector from a 0/1 string, for tests and fixtures.
    pub fn from_bits(bits: &str) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => panic!("invalid bit character {c:?}"),
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        if value {
            self.words[i / 64] |= 1u64 << (i % 64);
        } else {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Addition in GF(2).
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Index of the first set bit, if any.
    pub fn leading_one(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterator over indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let base = w * 64;
            std::iter::successors(
                if word == 0 { None } else { Some(word) },
                |&rest| {
                    let next = rest & (rest - 1);
                    if next == 0 {
                        None
                    } else {
                        Some(next)
                    }
                },
            )
            .map(move |rest| base + rest.trailing_zeros() as usize)
        })
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2), stored as a list of packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        F2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix from 0/1 strings, for tests and fixtures.
    pub fn from_bit_rows(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| F2Vector::from_bits(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.data[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut F2Vector {
        &mut self.data[i]
    }

    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.push(row);
        self.rows += 1;
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    /// Matrix–vector product `m·x`.
    ///
    /// Panics if `x.len() != self.cols`; dimension mismatches are contract
    /// violations and are never silently padded.
    pub fn mul_vec(&self, x: &F2Vector) -> F2Vector {
        assert_eq!(x.len(), self.cols, "mul_vec: dimension mismatch");
        let mut out = F2Vector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            out.set(i, row.dot(x));
        }
        out
    }

    /// Matrix product `self·other`, composing left actions.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.data[i].iter_ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].iter_ones() {
                out.set(j, i, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).0
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix({}x{})", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form over GF(2).
///
/// Returns `(rank, pivots, reduced)`. The reduced matrix has the same row
/// space as the input, pivot columns are strictly increasing, each pivot
/// column has a single 1, and zero rows are moved to the bottom.
pub fn rref(m: &F2Matrix) -> (usize, Vec<usize>, F2Matrix) {
    let mut reduced = m.clone();
    let pivots = row_reduce_in_place(&mut reduced);
    (pivots.len(), pivots, reduced)
}

/// In-place row reduction; returns the pivot columns.
fn row_reduce_in_place(m: &mut F2Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols {
        let Some(pivot_row) = (next_row..m.rows).find(|&r| m.get(r, col)) else {
            continue;
        };
        m.data.swap(next_row, pivot_row);
        let pivot = m.data[next_row].clone();
        for (r, row) in m.data.iter_mut().enumerate() {
            if r != next_row && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == m.rows {
            break;
        }
    }
    pivots
}

/// A row reduction that remembers its row operations, so many systems
/// `m·x = b` can be solved against the same matrix.
pub struct Solver {
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    reduced: F2Matrix,
    /// Row-operation record: `reduced = transform · m`.
    transform: F2Matrix,
}

impl Solver {
    pub fn new(m: &F2Matrix) -> Self {
        // Row-reduce [m | I] so the identity block records the operations.
        let mut aug = F2Matrix::zeros(m.rows, m.cols + m.rows);
        for i in 0..m.rows {
            for j in m.row(i).iter_ones() {
                aug.set(i, j, true);
            }
            aug.set(i, m.cols + i, true);
        }

        // Reduce using only the first `m.cols` columns for pivots.
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot_row) = (next_row..m.rows).find(|&r| aug.get(r, col)) else {
                continue;
            };
            aug.data.swap(next_row, pivot_row);
            let pivot = aug.data[next_row].clone();
            for (r, row) in aug.data.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }

        let mut reduced = F2Matrix::zeros(m.rows, m.cols);
        let mut transform = F2Matrix::zeros(m.rows, m.rows);
        for i in 0..m.rows {
            for j in aug.data[i].iter_ones() {
                if j < m.cols {
                    reduced.set(i, j, true);
                } else {
                    transform.set(i, j - m.cols, true);
                }
            }
        }

        Solver {
            cols: m.cols,
            rank: pivots.len(),
            pivots,
            reduced,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Solves `m·x = b`; returns the particular solution with all free
    /// variables zero, or `None` when `b` is outside the image.
    ///
    /// Panics if `b.len()` differs from the row count of `m`.
    pub fn solve(&self, b: &F2Vector) -> Option<F2Vector> {
        assert_eq!(b.len(), self.transform.rows(), "solve: dimension mismatch");
        let c = self.transform.mul_vec(b);
        for r in self.rank..c.len() {
            if c.get(r) {
                return None;
            }
        }
        let mut x = F2Vector::zeros(self.cols);
        for (r, &col) in self.pivots.iter().enumerate() {
            if c.get(r) {
                x.set(col, true);
            }
        }
        Some(x)
    }

    /// Basis of `{x : m·x = 0}` as matrix rows, one per free column.
    pub fn kernel_basis(&self) -> F2Matrix {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.cols - self.rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = F2Vector::unit(self.cols, free);
            for (r, &col) in self.pivots.iter().enumerate() {
                if self.reduced.get(r, free) {
                    v.set(col, true);
                }
            }
            rows.push(v);
        }
        F2Matrix::from_rows(self.cols, rows)
    }
}

/// Basis of the right kernel `{x : m·x = 0}`, returned as matrix rows.
///
/// The row count is always `cols − rank`.
pub fn kernel_basis(m: &F2Matrix) -> F2Matrix {
    Solver::new(m).kernel_basis()
}

/// Solves `m·x = b`, or returns `None` when `b` is outside the image.
pub fn solve(m: &F2Matrix, b: &F2Vector) -> Option<F2Vector> {
    Solver::new(m).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let m = F2Matrix::identity(3);
        let (rank, pivots, reduced) = rref(&m);
        assert_eq!(rank, 3);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(reduced, m);
    }

    #[test]
    fn rref_zero() {
        let m = F2Matrix::zeros(2, 5);
        let (rank, pivots, reduced) = rref(&m);
        assert_eq!(rank, 0);
        assert!(pivots.is_empty());
        assert!(reduced.is_zero());
    }

    #[test]
    fn rref_dependent_rows() {
        // Third row is the XOR of the first two.
        let m = F2Matrix::from_bit_rows(&["110", "011", "101"]);
        let (rank, pivots, _) = rref(&m);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_identity_is_empty() {
        for n in 1..5 {
            let k = kernel_basis(&F2Matrix::identity(n));
            assert_eq!(k.rows(), 0);
        }
    }

    #[test]
    fn kernel_zero_is_standard_basis() {
        let k = kernel_basis(&F2Matrix::zeros(3, 4));
        assert_eq!(k.rows(), 4);
        for i in 0..4 {
            assert_eq!(k.row(i), &F2Vector::unit(4, i));
        }
    }

    #[test]
    fn kernel_single_row() {
        // Oracle: enumerate all 8 vectors of length 3 against the row 111.
        let m = F2Matrix::from_bit_rows(&["111"]);
        let k = kernel_basis(&m);
        assert_eq!(k.rows(), 2);
        let mut expected = Vec::new();
        for bits in 0u8..8 {
            let v = F2Vector::from_bits(&format!("{bits:03b}"));
            if m.mul_vec(&v).is_zero() {
                expected.push(v);
            }
        }
        // Every kernel row must be one of the enumerated solutions with even
        // overlap against 111, and the two rows must be independent.
        for i in 0..2 {
            assert!(expected.contains(k.row(i)));
            assert_eq!(k.row(i).count_ones() % 2, 0);
        }
        assert_ne!(k.row(0), k.row(1));
    }

    #[test]
    fn solve_identity() {
        let m = F2Matrix::identity(4);
        let b = F2Vector::from_bits("1011");
        assert_eq!(solve(&m, &b), Some(b));
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs() {
        let m = F2Matrix::zeros(2, 3);
        let b = F2Vector::from_bits("10");
        assert_eq!(solve(&m, &b), None);
    }

    #[test]
    fn solve_two_by_two() {
        // Oracle: all 4 candidate vectors for rows {11, 01}, b = 10.
        let m = F2Matrix::from_bit_rows(&["11", "01"]);
        let b = F2Vector::from_bits("10");
        let x = solve(&m, &b).unwrap();
        assert_eq!(x, F2Vector::from_bits("11"));
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn solve_rejects_dimension_mismatch() {
        let m = F2Matrix::zeros(2, 3);
        solve(&m, &F2Vector::zeros(3));
    }

    #[test]
    fn transpose_involution() {
        let m = F2Matrix::from_bit_rows(&["1101", "0110", "1010"]);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn mul_against_mul_vec() {
        let a = F2Matrix::from_bit_rows(&["110", "011"]);
        let b = F2Matrix::from_bit_rows(&["10", "11", "01"]);
        let ab = a.mul(&b);
        for j in 0..2 {
            let x = F2Vector::unit(2, j);
            assert_eq!(ab.mul_vec(&x), a.mul_vec(&b.mul_vec(&x)));
        }
    }

    fn arbitrary_matrix() -> impl Strategy<Value = F2Matrix> {
        (1usize..8, 1usize..10).prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows)
                .prop_map(move |bits| {
                    let data = bits
                        .into_iter()
                        .map(|row| {
                            let mut v = F2Vector::zeros(cols);
                            for (i, b) in row.into_iter().enumerate() {
                                v.set(i, b);
                            }
                            v
                        })
                        .collect();
                    F2Matrix::from_rows(cols, data)
                })
        })
    }

    proptest! {
        #[test]
        fn kernel_rows_annihilated(m in arbitrary_matrix()) {
            let k = kernel_basis(&m);
            for i in 0..k.rows() {
                prop_assert!(m.mul_vec(k.row(i)).is_zero());
            }
        }

        #[test]
        fn rank_nullity(m in arbitrary_matrix()) {
            let (rank, _, _) = rref(&m);
            let k = kernel_basis(&m);
            prop_assert_eq!(rank + k.rows(), m.cols());
        }

        #[test]
        fn rref_idempotent(m in arbitrary_matrix()) {
            let (_, _, reduced) = rref(&m);
            let (_, _, twice) = rref(&reduced);
            prop_assert_eq!(reduced, twice);
        }

        #[test]
        fn solve_respects_equation(m in arbitrary_matrix(), seed in any::<u64>()) {
            // Pick b in the image so a solution exists.
            let mut x = F2Vector::zeros(m.cols());
            for i in 0..m.cols() {
                x.set(i, (seed >> (i % 64)) & 1 == 1);
            }
            let b = m.mul_vec(&x);
            let solved = solve(&m, &b).expect("b is in the image");
            prop_assert_eq!(m.mul_vec(&solved), b);
        }

        #[test]
        fn solver_matches_free_functions(m in arbitrary_matrix()) {
            let solver = Solver::new(&m);
            let (rank, pivots, _) = rref(&m);
            prop_assert_eq!(solver.rank(), rank);
            prop_assert_eq!(solver.pivots(), &pivots[..]);
        }
    }
}
