//! Truncated shifted staircase tableaux, the diagonal poset they linearize,
//! and a poset of bounded strict partitions.
//!
//! The shape with parameter p has a first row of length p and then rows of
//! lengths p, p-1, ..., 1 starting one column later each; it is the shifted
//! staircase with p + 1 rows, truncated by one corner cell. Its cells
//! correspond to the diagonals of the (p+3)-gon, cell (r, c) to the diagonal
//! [r-1, c+1], and this matches the componentwise order on diagonals, so
//! standard fillings are the linear extensions recorded by the erased
//! diagonals of monotone flip paths.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{check_polygon_size, Diagonal};

/// The truncated shifted staircase shape with first-row length p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncShiftedShape {
    p: usize,
}

impl TruncShiftedShape {
    pub fn new(p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::SizeTooSmall { n: p, min: 1 });
        }
        Ok(Self { p })
    }

    /// The shape whose cells are the diagonals of the n-gon.
    pub fn for_polygon(n: usize) -> Result<Self> {
        check_polygon_size(n)?;
        Self::new(n - 3)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// The polygon size this shape belongs to.
    pub fn polygon(&self) -> usize {
        self.p + 3
    }

    pub fn row_count(&self) -> usize {
        self.p + 1
    }

    pub fn cell_count(&self) -> usize {
        self.p + self.p * (self.p + 1) / 2
    }

    /// Per row, the first occupied column and the length, with rows and
    /// columns counted from 1.
    pub fn row_spans(&self) -> Vec<(usize, usize)> {
        let mut spans = Vec::with_capacity(self.p + 1);
        spans.push((1, self.p));
        for r in 2..=self.p + 1 {
            spans.push((r, self.p + 2 - r));
        }
        spans
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        if row == 0 || row > self.p + 1 {
            return false;
        }
        let (start, len) = if row == 1 { (1, self.p) } else { (row, self.p + 2 - row) };
        col >= start && col < start + len
    }

    /// The diagonal [row - 1, col + 1] attached to a cell of the shape.
    pub fn diagonal_of_cell(&self, row: usize, col: usize) -> Option<Diagonal> {
        if !self.contains(row, col) {
            return None;
        }
        Some(Diagonal::new(self.polygon(), row - 1, col + 1).expect("cells map to diagonals"))
    }

    pub fn cell_of_diagonal(&self, diagonal: Diagonal) -> Option<(usize, usize)> {
        let row = diagonal.a() + 1;
        let col = diagonal.b().checked_sub(1)?;
        self.contains(row, col).then_some((row, col))
    }

    fn row_shape(&self) -> RowShape {
        RowShape { rows: self.row_spans() }
    }

    /// The number of standard fillings, by dynamic programming over row
    /// profiles.
    pub fn count_standard(&self) -> BigUint {
        self.row_shape().count_standard()
    }

    /// All standard fillings, sorted by their rows.
    pub fn enumerate_standard(&self) -> Vec<ShiftedTableau> {
        self.row_shape()
            .enumerate_standard()
            .into_iter()
            .map(|rows| ShiftedTableau { shape: *self, rows })
            .collect()
    }
}

/// Rows of cells given by start column and length; shared by the truncated
/// shape and the full staircase used as a cross-check.
struct RowShape {
    rows: Vec<(usize, usize)>,
}

impl RowShape {
    #[cfg(test)]
    fn staircase(m: usize) -> RowShape {
        RowShape { rows: (1..=m).map(|r| (r, m + 1 - r)).collect() }
    }

    fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }

    /// Rows whose next free cell can take the next entry: the cell directly
    /// above, when the shape has one, must already be filled.
    fn addable_rows(&self, profile: &[u8]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| {
                let (start, len) = self.rows[r];
                let filled = profile[r] as usize;
                if filled >= len {
                    return false;
                }
                let col = start + filled;
                if r == 0 {
                    return true;
                }
                let (above_start, above_len) = self.rows[r - 1];
                if col < above_start || col >= above_start + above_len {
                    return true;
                }
                profile[r - 1] as usize > col - above_start
            })
            .collect()
    }

    fn count_standard(&self) -> BigUint {
        fn completions(
            shape: &RowShape,
            profile: &mut Vec<u8>,
            remaining: usize,
            memo: &mut HashMap<Vec<u8>, BigUint>,
        ) -> BigUint {
            if remaining == 0 {
                return BigUint::from(1u8);
            }
            if let Some(hit) = memo.get(profile.as_slice()) {
                return hit.clone();
            }
            let mut total = BigUint::from(0u8);
            for r in shape.addable_rows(profile) {
                profile[r] += 1;
                total += completions(shape, profile, remaining - 1, memo);
                profile[r] -= 1;
            }
            memo.insert(profile.clone(), total.clone());
            total
        }
        let mut profile = vec![0u8; self.rows.len()];
        let cells = self.cell_count();
        completions(self, &mut profile, cells, &mut HashMap::new())
    }

    fn enumerate_standard(&self) -> Vec<Vec<Vec<usize>>> {
        fn fill(
            shape: &RowShape,
            rows: &mut Vec<Vec<usize>>,
            profile: &mut Vec<u8>,
            entry: usize,
            cells: usize,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if entry > cells {
                out.push(rows.clone());
                return;
            }
            for r in shape.addable_rows(profile) {
                profile[r] += 1;
                rows[r].push(entry);
                fill(shape, rows, profile, entry + 1, cells, out);
                rows[r].pop();
                profile[r] -= 1;
            }
        }
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.rows.len()];
        let mut profile = vec![0u8; self.rows.len()];
        let cells = self.cell_count();
        let mut out = Vec::new();
        fill(self, &mut rows, &mut profile, 1, cells, &mut out);
        out.sort();
        out
    }
}

/// A standard filling of the truncated shifted staircase: entries 1..cells,
/// increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    shape: TruncShiftedShape,
    rows: Vec<Vec<usize>>,
}

impl ShiftedTableau {
    pub fn new(shape: TruncShiftedShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let spans = shape.row_spans();
        if rows.len() != spans.len() {
            return Err(Error::ShapeMismatch {
                p: shape.p,
                got: rows.len(),
                n: shape.polygon(),
            });
        }
        for (row, (_, len)) in rows.iter().zip(&spans) {
            if row.len() != *len {
                return Err(Error::ShapeMismatch {
                    p: shape.p,
                    got: row.len(),
                    n: shape.polygon(),
                });
            }
        }
        let cells = shape.cell_count();
        let mut seen = vec![false; cells + 1];
        for &entry in rows.iter().flatten() {
            if entry == 0 || entry > cells || seen[entry] {
                return Err(Error::NotStandard(format!(
                    "entries must be 1..{cells} without repeats"
                )));
            }
            seen[entry] = true;
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotStandard("rows must increase".into()));
            }
        }
        for r in 1..rows.len() {
            let (start, len) = spans[r];
            let (above_start, above_len) = spans[r - 1];
            for k in 0..len {
                let col = start + k;
                if col >= above_start && col < above_start + above_len {
                    let above = rows[r - 1][col - above_start];
                    if above >= rows[r][k] {
                        return Err(Error::NotStandard(format!(
                            "column {col} must increase downward"
                        )));
                    }
                }
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> TruncShiftedShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn polygon(&self) -> usize {
        self.shape.polygon()
    }

    /// The cell of each entry, indexed by entry - 1, as (row, column).
    fn entry_cells(&self) -> Vec<(usize, usize)> {
        let spans = self.shape.row_spans();
        let mut cells = vec![(0, 0); self.shape.cell_count()];
        for (r, row) in self.rows.iter().enumerate() {
            let start = spans[r].0;
            for (k, &entry) in row.iter().enumerate() {
                cells[entry - 1] = (r + 1, start + k);
            }
        }
        cells
    }

    /// The row word and column word: the row and column of each entry in
    /// order.
    pub fn row_col_words(&self) -> (Vec<usize>, Vec<usize>) {
        let cells = self.entry_cells();
        (cells.iter().map(|c| c.0).collect(), cells.iter().map(|c| c.1).collect())
    }

    /// The diagonals of the cells of 1, 2, 3, ... in order; for a standard
    /// filling this is a linear extension of the diagonal poset.
    pub fn diagonal_sequence(&self) -> Vec<Diagonal> {
        self.entry_cells()
            .into_iter()
            .map(|(r, c)| self.shape.diagonal_of_cell(r, c).expect("entries sit in the shape"))
            .collect()
    }

    /// Rebuild a tableau from the diagonal sequence of a monotone flip path:
    /// the k-th diagonal receives entry k.
    pub fn from_diagonal_sequence(sequence: &[Diagonal]) -> Result<Self> {
        let count = sequence.len();
        let n = polygon_for_diagonal_count(count).ok_or_else(|| {
            Error::InvalidGeodesicRecord(format!("{count} is not a diagonal count n(n-3)/2"))
        })?;
        let shape = TruncShiftedShape::for_polygon(n)?;
        let spans = shape.row_spans();
        let mut rows: Vec<Vec<usize>> = spans.iter().map(|(_, len)| vec![0; *len]).collect();
        for (index, &diagonal) in sequence.iter().enumerate() {
            let (r, c) = shape.cell_of_diagonal(diagonal).ok_or_else(|| {
                Error::InvalidGeodesicRecord(format!(
                    "{diagonal} is not a diagonal of the {n}-gon"
                ))
            })?;
            let slot = &mut rows[r - 1][c - spans[r - 1].0];
            if *slot != 0 {
                return Err(Error::InvalidGeodesicRecord(format!("{diagonal} appears twice")));
            }
            *slot = index + 1;
        }
        Self::new(shape, rows)
    }
}

impl Serialize for ShiftedTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ShiftedTableau", 2)?;
        s.serialize_field("p", &self.shape.p)?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

fn polygon_for_diagonal_count(count: usize) -> Option<usize> {
    let discriminant = 9 + 8 * count;
    let mut root = 0usize;
    while (root + 1) * (root + 1) <= discriminant {
        root += 1;
    }
    if root * root != discriminant || (3 + root) % 2 != 0 {
        return None;
    }
    let n = (3 + root) / 2;
    (n >= 5).then_some(n)
}

/// The diagonals of the n-gon under the componentwise order on endpoint
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPoset {
    n: usize,
    elements: Vec<Diagonal>,
}

impl DiagonalPoset {
    pub fn new(n: usize) -> Result<Self> {
        check_polygon_size(n)?;
        let mut elements = Vec::with_capacity(n * (n - 3) / 2);
        for a in 0..n {
            for b in a + 2..n {
                if let Ok(d) = Diagonal::new(n, a, b) {
                    elements.push(d);
                }
            }
        }
        Ok(Self { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Diagonal] {
        &self.elements
    }

    /// The componentwise order: both endpoints weakly below.
    pub fn leq(&self, a: Diagonal, b: Diagonal) -> bool {
        a.a() <= b.a() && a.b() <= b.b()
    }

    /// True when the sequence lists every diagonal once, never placing an
    /// element after one above it.
    pub fn is_linear_extension(&self, sequence: &[Diagonal]) -> bool {
        if sequence.len() != self.elements.len() {
            return false;
        }
        let mut remaining: Vec<Diagonal> = self.elements.clone();
        for d in sequence {
            match remaining.iter().position(|r| r == d) {
                Some(k) => {
                    remaining.remove(k);
                }
                None => return false,
            }
        }
        for i in 0..sequence.len() {
            for j in i + 1..sequence.len() {
                if sequence[i] != sequence[j] && self.leq(sequence[j], sequence[i]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Strict partitions with parts at most n, together with the partitions
/// whose first two parts both equal n and are otherwise strict, ordered by
/// diagram inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPoset {
    n: usize,
    elements: Vec<Vec<usize>>,
    covers_up: Vec<Vec<usize>>,
}

impl PartitionPoset {
    pub fn lambda(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::SizeTooSmall { n, min: 1 });
        }
        if n > 10 {
            return Err(Error::SizeTooLarge { n, max: 10, what: "partition poset construction" });
        }
        let mut elements: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..1 << n {
            let parts: Vec<usize> = (1..=n).rev().filter(|k| mask >> (k - 1) & 1 == 1).collect();
            elements.push(parts);
        }
        for mask in 0u64..1 << (n - 1) {
            let mut parts = vec![n, n];
            parts.extend((1..n).rev().filter(|k| mask >> (k - 1) & 1 == 1));
            elements.push(parts);
        }
        elements.sort_by_key(|p| (p.iter().sum::<usize>(), p.clone()));
        let count = elements.len();
        let sums: Vec<usize> = elements.iter().map(|p| p.iter().sum()).collect();
        // covers from raw inclusion; proper inclusion forces a strictly larger
        // sum, so intermediates only need checking in the open sum range
        let mut covers_up = vec![Vec::new(); count];
        for i in 0..count {
            for j in 0..count {
                if sums[j] <= sums[i] || !included(&elements[i], &elements[j]) {
                    continue;
                }
                let skipped = (0..count).any(|k| {
                    sums[k] > sums[i]
                        && sums[k] < sums[j]
                        && included(&elements[i], &elements[k])
                        && included(&elements[k], &elements[j])
                });
                if !skipped {
                    covers_up[i].push(j);
                }
            }
        }
        Ok(Self { n, elements, covers_up })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        included(&self.elements[lower], &self.elements[upper])
    }

    /// Cover relations as (lower, upper) index pairs.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (i, ups) in self.covers_up.iter().enumerate() {
            for &j in ups {
                pairs.push((i, j));
            }
        }
        pairs
    }

    /// Index of the unique minimal element, the empty partition.
    pub fn minimum(&self) -> usize {
        self.elements.iter().position(|p| p.is_empty()).expect("the empty partition is present")
    }

    /// Index of the unique maximal element (n, n, n-1, ..., 1).
    pub fn maximum(&self) -> usize {
        let mut top = vec![self.n, self.n];
        top.extend((1..self.n).rev());
        self.elements.iter().position(|p| *p == top).expect("the full diagram is present")
    }

    /// Number of maximal chains from bottom to top, walking cover relations.
    pub fn count_maximal_chains(&self) -> BigUint {
        let mut ways = vec![BigUint::from(0u8); self.elements.len()];
        ways[self.minimum()] = BigUint::from(1u8);
        // elements are sorted by size, so covers always point forward
        for i in 0..self.elements.len() {
            let here = ways[i].clone();
            if here == BigUint::from(0u8) {
                continue;
            }
            for &j in &self.covers_up[i] {
                ways[j] += &here;
            }
        }
        ways[self.maximum()].clone()
    }
}

fn included(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::from(1u8), |acc, x| acc * x)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let mut result = BigUint::from(1u8);
    for i in 0..k.min(n - k) {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

/// The number of standard fillings of the shifted staircase with first row
/// m: M! times the product of i! / (2i + 1)! for i below m, with
/// M = m(m+1)/2.
pub fn shifted_staircase_syt_count(m: usize) -> BigUint {
    let cells = m * (m + 1) / 2;
    let mut numerator = factorial(cells);
    let mut denominator = BigUint::from(1u8);
    for i in 0..m {
        numerator *= factorial(i);
        denominator *= factorial(2 * i + 1);
    }
    debug_assert_eq!(&numerator % &denominator, BigUint::from(0u8));
    numerator / denominator
}

/// Closed form for the number of geodesics between a triangulation of the
/// n-gon and its reversal, defined for n at least 6.
pub fn geodesic_count_formula(n: usize) -> Result<BigUint> {
    if n < 6 {
        return Err(Error::SizeTooSmall { n, min: 6 });
    }
    let total = n * (n - 3) / 2;
    let numerator = shifted_staircase_syt_count(n - 6)
        * binomial(total, 4 * n - 15)
        * BigUint::from(8u8)
        * BigUint::from((2 * n - 9) as u64);
    let denominator = BigUint::from((n - 3) as u64);
    debug_assert_eq!(&numerator % &denominator, BigUint::from(0u8));
    Ok(numerator / denominator)
}
