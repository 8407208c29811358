//! Fillings of (skew) composition diagrams.
//!
//! Row 1 is the bottom row; `rows[0]` holds it. Within a row, entries are
//! stored left to right and occupy columns `inner_r + 1 ..= outer_r`.
//! A cell is in the first column of the outer shape only when its row has no
//! inner cells; those are the only cells subject to a column condition.

mod hook;
mod path;

pub use hook::{enumerate_hook, HookTableau, Letter};
pub use path::{paths_between, PosetPath, StripKind};

use std::fmt;

use crate::compositions::{Composition, SubsetOfPrefix};
use crate::error::{Error, Result};

/// Descent sets are subsets of `{1, …, n−1}`.
pub type DescentSet = SubsetOfPrefix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableauKind {
    /// Strictly increasing first column, weakly increasing rows.
    Immaculate,
    /// Weakly increasing first column, strictly increasing rows.
    RowStrict,
}

/// The diagram `outer / inner`, with `inner` empty for straight shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    outer: Composition,
    inner: Composition,
}

impl Shape {
    pub fn straight(outer: Composition) -> Self {
        Shape {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn skew(outer: Composition, inner: Composition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        Ok(Shape { outer, inner })
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of cells of row `r` (0-based).
    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// Whether row `r` (0-based) still has its first-column cell.
    pub fn has_first_column_cell(&self, r: usize) -> bool {
        self.inner.part(r) == 0
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// A filling of a shape by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<u32>>,
}

impl fmt::Display for Tableau {
    /// Top row first, inner cells as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (0..self.rows.len()).rev() {
            let mut cells: Vec<String> = vec![".".into(); self.shape.inner.part(r)];
            cells.extend(self.rows[r].iter().map(|v| v.to_string()));
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Tableau {
    pub fn new(shape: Shape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidTableau(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::InvalidTableau(format!(
                    "row {} should hold {} entries",
                    r + 1,
                    shape.row_len(r)
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Composition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(Shape::straight(outer), rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_immaculate(&self) -> bool {
        self.is_valid(TableauKind::Immaculate)
    }

    pub fn is_row_strict(&self) -> bool {
        self.is_valid(TableauKind::RowStrict)
    }

    pub fn is_valid(&self, kind: TableauKind) -> bool {
        let rows_ok = self.rows.iter().all(|row| {
            row.windows(2).all(|w| match kind {
                TableauKind::Immaculate => w[0] <= w[1],
                TableauKind::RowStrict => w[0] < w[1],
            })
        });
        let column: Vec<u32> = (0..self.rows.len())
            .filter(|&r| self.shape.has_first_column_cell(r))
            .map(|r| self.rows[r][0])
            .collect();
        let column_ok = column.windows(2).all(|w| match kind {
            TableauKind::Immaculate => w[0] < w[1],
            TableauKind::RowStrict => w[0] <= w[1],
        });
        rows_ok && column_ok
    }

    /// Entries 1..n each used once.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Cell coordinates `(row, index within row)` in reading order.
    fn reading_positions(&self, kind: TableauKind) -> Vec<(usize, usize)> {
        let mut pos = Vec::with_capacity(self.size());
        match kind {
            TableauKind::Immaculate => {
                for r in (0..self.rows.len()).rev() {
                    pos.extend((0..self.rows[r].len()).map(|i| (r, i)));
                }
            }
            TableauKind::RowStrict => {
                for r in 0..self.rows.len() {
                    pos.extend((0..self.rows[r].len()).rev().map(|i| (r, i)));
                }
            }
        }
        pos
    }

    /// Immaculate: left to right from the top row down. Row-strict: right to
    /// left from the bottom row up.
    pub fn reading_word(&self, kind: TableauKind) -> Vec<u32> {
        self.reading_positions(kind)
            .into_iter()
            .map(|(r, i)| self.rows[r][i])
            .collect()
    }

    pub fn standardize(&self, kind: TableauKind) -> Result<Tableau> {
        if !self.is_valid(kind) {
            return Err(Error::InvalidTableau(format!(
                "not a valid {kind:?} tableau"
            )));
        }
        let mut pos = self.reading_positions(kind);
        // stable: equal values keep reading order
        pos.sort_by_key(|&(r, i)| self.rows[r][i]);
        let mut rows = self.rows.clone();
        for (label, (r, i)) in pos.into_iter().enumerate() {
            rows[r][i] = label as u32 + 1;
        }
        Ok(Tableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// Row (0-based) of each label 1..n; index 0 unused.
    pub(crate) fn rows_of_labels(&self) -> Result<Vec<usize>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut row_of = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        Ok(row_of)
    }

    /// Immaculate: `i` with `i+1` strictly above `i`. Row-strict: `i` with
    /// `i+1` weakly below `i`.
    pub fn descents(&self, kind: TableauKind) -> Result<DescentSet> {
        let row_of = self.rows_of_labels()?;
        let n = self.size();
        let elements = (1..n)
            .filter(|&i| match kind {
                TableauKind::Immaculate => row_of[i + 1] > row_of[i],
                TableauKind::RowStrict => row_of[i + 1] <= row_of[i],
            })
            .collect();
        Ok(SubsetOfPrefix { n, elements })
    }

    /// Multiplicity of each value `1..=max entry`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }
}

/// Backtracking filler shared by semistandard enumeration and content counts.
struct Filler<'a> {
    shape: &'a Shape,
    kind: TableauKind,
    max_entry: u32,
    budget: Option<Vec<usize>>,
    rows: Vec<Vec<u32>>,
}

impl Filler<'_> {
    fn lower_bound(&self, r: usize) -> u32 {
        let row = &self.rows[r];
        if let Some(&left) = row.last() {
            return match self.kind {
                TableauKind::Immaculate => left,
                TableauKind::RowStrict => left + 1,
            };
        }
        if self.shape.has_first_column_cell(r) && r > 0 && self.shape.has_first_column_cell(r - 1) {
            let below = self.rows[r - 1][0];
            return match self.kind {
                TableauKind::Immaculate => below + 1,
                TableauKind::RowStrict => below,
            };
        }
        1
    }

    fn run(&mut self, r: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if r == self.shape.num_rows() {
            visit(&self.rows);
            return;
        }
        if self.rows[r].len() == self.shape.row_len(r) {
            self.run(r + 1, visit);
            return;
        }
        for v in self.lower_bound(r)..=self.max_entry {
            if let Some(b) = &mut self.budget {
                if b[v as usize - 1] == 0 {
                    continue;
                }
                b[v as usize - 1] -= 1;
            }
            self.rows[r].push(v);
            self.run(r, visit);
            self.rows[r].pop();
            if let Some(b) = &mut self.budget {
                b[v as usize - 1] += 1;
            }
        }
    }
}

/// All tableaux of `shape` of the given kind with entries in `1..=max_entry`,
/// ordered by filling rows bottom to top, cells left to right, values ascending.
pub fn enumerate(shape: &Shape, kind: TableauKind, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut filler = Filler {
        shape,
        kind,
        max_entry,
        budget: None,
        rows: vec![Vec::new(); shape.num_rows()],
    };
    filler.run(0, &mut |rows| {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Number of tableaux of `shape` and kind whose content is exactly `content`
/// (value `i` used `content[i-1]` times).
pub fn count_with_content(shape: &Shape, kind: TableauKind, content: &[usize]) -> usize {
    if content.iter().sum::<usize>() != shape.size() {
        return 0;
    }
    let mut count = 0;
    let mut filler = Filler {
        shape,
        kind,
        max_entry: content.len() as u32,
        budget: Some(content.to_vec()),
        rows: vec![Vec::new(); shape.num_rows()],
    };
    filler.run(0, &mut |_| count += 1);
    count
}

/// Standard (skew) immaculate tableaux: labels `1..n` once each, rows strictly
/// increasing, surviving first-column cells increasing upward.
pub fn enumerate_standard(shape: &Shape) -> Vec<Tableau> {
    fn rec(shape: &Shape, next: u32, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.num_rows() {
            if rows[r].len() == shape.row_len(r) {
                continue;
            }
            if rows[r].is_empty()
                && shape.has_first_column_cell(r)
                && r > 0
                && shape.has_first_column_cell(r - 1)
                && rows[r - 1].is_empty()
            {
                continue;
            }
            rows[r].push(next);
            rec(shape, next + 1, n, rows, out);
            rows[r].pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    rec(shape, 1, shape.size() as u32, &mut rows, &mut out);
    out
}
