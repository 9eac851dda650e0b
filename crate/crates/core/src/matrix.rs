//! The total-weighting matrix `A_G`, its edge part `B_G`, and column multisets.
//!
//! Rows are edges in canonical order; columns are all vertices followed by all
//! edges. For an edge `e` oriented `u → v` the row is `+1` on `v` and on every
//! other edge at `v`, `-1` on `u` and on every other edge at `u`, and `0`
//! elsewhere (in particular on `e` itself).

use std::fmt::Write as _;

use crate::graph::{Element, Graph, Orientation};
use crate::index::IndexFunction;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy + Default> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::default(); rows * cols] }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a `rows × columns.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn map<U: Copy + Default>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// Keeps the listed columns, in the listed order (repeats allowed).
    pub fn select(&self, columns: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, columns.len());
        for i in 0..self.rows {
            for (k, &j) in columns.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }
}

impl<T: Copy + Default + std::fmt::Display> Matrix<T> {
    /// CSV with a header line naming the columns.
    pub fn to_csv(&self, header: &[String]) -> String {
        assert_eq!(header.len(), self.cols, "header width");
        let mut out = header.join(",");
        out.push('\n');
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}

/// `A_G` for a fixed orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalMatrix {
    n: usize,
    m: usize,
    entries: Matrix<i8>,
    orientation: Orientation,
}

impl TotalMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &Matrix<i8> {
        &self.entries
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn column_index(&self, z: Element) -> usize {
        match z {
            Element::Vertex(v) => v,
            Element::Edge(e) => self.n + e,
        }
    }

    pub fn entry(&self, row: usize, z: Element) -> i8 {
        self.entries.get(row, self.column_index(z))
    }

    pub fn column(&self, z: Element) -> Vec<i8> {
        self.entries.column(self.column_index(z))
    }

    pub fn header(&self) -> Vec<String> {
        (0..self.n).map(|v| format!("v{v}")).chain((0..self.m).map(|e| format!("e{e}"))).collect()
    }

    pub fn to_csv(&self) -> String {
        self.entries.to_csv(&self.header())
    }

    /// `B_G`: the edge columns only.
    pub fn edge_part(&self) -> Matrix<i8> {
        let cols: Vec<usize> = (self.n..self.n + self.m).collect();
        self.entries.select(&cols)
    }
}

pub fn build_total_matrix(g: &Graph, o: &Orientation) -> TotalMatrix {
    assert_eq!(o.len(), g.m(), "orientation does not match graph");
    let (n, m) = (g.n(), g.m());
    let mut entries = Matrix::zeros(m, n + m);
    for e in 0..m {
        let (u, v) = o.arc(e);
        entries.set(e, v, 1);
        entries.set(e, u, -1);
        for &(_, f) in g.incident(v) {
            if f != e {
                entries.set(e, n + f, 1);
            }
        }
        for &(_, f) in g.incident(u) {
            if f != e {
                entries.set(e, n + f, -1);
            }
        }
    }
    TotalMatrix { n, m, entries, orientation: o.clone() }
}

/// `B_G` as an `m × m` matrix.
pub fn build_b(g: &Graph, o: &Orientation) -> Matrix<i8> {
    build_total_matrix(g, o).edge_part()
}

/// `A_G(η)`: column `z` repeated `η(z)` times, in canonical z-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMultiset {
    pub matrix: Matrix<i8>,
    /// Which element each column copies.
    pub columns: Vec<Element>,
}

impl ColumnMultiset {
    pub fn is_square(&self) -> bool {
        self.matrix.is_square()
    }
}

pub fn select_columns(a: &TotalMatrix, eta: &IndexFunction) -> ColumnMultiset {
    assert_eq!((eta.n(), eta.m()), (a.n, a.m), "index function does not match matrix");
    let mut columns = Vec::new();
    let mut indices = Vec::new();
    for (z, k) in eta.iter() {
        for _ in 0..k {
            columns.push(z);
            indices.push(a.column_index(z));
        }
    }
    ColumnMultiset { matrix: a.entries.select(&indices), columns }
}
