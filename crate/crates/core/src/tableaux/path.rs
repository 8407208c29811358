use crate::compositions::{Composition, SubsetOfPrefix};
use crate::error::{Error, Result};

use super::{DescentSet, Shape, Tableau};

/// A chain in the immaculate poset: starting at `start`, step `i` removes the
/// rightmost cell of row `labels[i]` (1-based). A row may only empty out when
/// it is the top row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosetPath {
    start: Composition,
    labels: Vec<usize>,
    end: Composition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    /// Labels weakly increase.
    Horizontal,
    /// Labels strictly decrease.
    Vertical,
    /// Paths of length 0 or 1 satisfy both conditions.
    Both,
    Neither,
}

fn remove_cell(shape: &mut Vec<usize>, m: usize) -> Result<()> {
    if m == 0 || m > shape.len() {
        return Err(Error::InvalidPath(format!("no row {m} in {shape:?}")));
    }
    if shape[m - 1] == 1 {
        if m != shape.len() {
            return Err(Error::InvalidPath(format!(
                "emptying row {m} of {shape:?} leaves a gap"
            )));
        }
        shape.pop();
    } else {
        shape[m - 1] -= 1;
    }
    Ok(())
}

impl PosetPath {
    pub fn new(start: Composition, labels: Vec<usize>) -> Result<Self> {
        let mut shape = start.parts().to_vec();
        for &m in &labels {
            remove_cell(&mut shape, m)?;
        }
        Ok(PosetPath {
            start,
            labels,
            end: Composition::new(shape)?,
        })
    }

    pub fn start(&self) -> &Composition {
        &self.start
    }

    pub fn end(&self) -> &Composition {
        &self.end
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The standard skew tableau of shape `start / end`: step `i` labels the
    /// rightmost unlabelled cell of its row with `k − i + 1`.
    pub fn to_tableau(&self) -> Tableau {
        let shape = Shape {
            outer: self.start.clone(),
            inner: self.end.clone(),
        };
        let mut rows: Vec<Vec<u32>> = (0..shape.num_rows())
            .map(|r| vec![0; shape.row_len(r)])
            .collect();
        let mut filled = vec![0usize; rows.len()];
        let k = self.labels.len();
        for (i, &m) in self.labels.iter().enumerate() {
            let row = &mut rows[m - 1];
            let idx = row.len() - 1 - filled[m - 1];
            row[idx] = (k - i) as u32;
            filled[m - 1] += 1;
        }
        Tableau { shape, rows }
    }

    /// Inverse of [`PosetPath::to_tableau`].
    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        let row_of = t.rows_of_labels()?;
        let labels = (1..=t.size()).rev().map(|v| row_of[v] + 1).collect();
        let path = PosetPath::new(t.shape().outer().clone(), labels)?;
        if path.end != *t.shape().inner() {
            return Err(Error::InvalidPath(
                "tableau does not correspond to a poset path".into(),
            ));
        }
        Ok(path)
    }

    /// `(D(P), A(P))` with `D = {k−i : m_i > m_{i+1}}` and `A` its complement.
    pub fn descents(&self) -> (DescentSet, DescentSet) {
        let k = self.labels.len();
        let mut d = Vec::new();
        let mut a = Vec::new();
        for i in 1..k {
            if self.labels[i - 1] > self.labels[i] {
                d.push(k - i);
            } else {
                a.push(k - i);
            }
        }
        d.sort_unstable();
        a.sort_unstable();
        (
            SubsetOfPrefix { n: k, elements: d },
            SubsetOfPrefix { n: k, elements: a },
        )
    }

    pub fn strip_kind(&self) -> StripKind {
        let horizontal = self.labels.windows(2).all(|w| w[0] <= w[1]);
        let vertical = self.labels.windows(2).all(|w| w[0] > w[1]);
        match (horizontal, vertical) {
            (true, true) => StripKind::Both,
            (true, false) => StripKind::Horizontal,
            (false, true) => StripKind::Vertical,
            (false, false) => StripKind::Neither,
        }
    }
}

/// All poset paths from `outer` down to `inner`, in lexicographic label order.
pub fn paths_between(outer: &Composition, inner: &Composition) -> Vec<PosetPath> {
    fn rec(
        cur: &mut Vec<usize>,
        inner: &Composition,
        labels: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == inner.len() && cur.iter().zip(inner.parts()).all(|(a, b)| a == b) {
            out.push(labels.clone());
            return;
        }
        for m in 1..=cur.len() {
            if cur[m - 1] <= inner.part(m - 1) || (cur[m - 1] == 1 && m != cur.len()) {
                continue;
            }
            let mut next = cur.clone();
            remove_cell(&mut next, m).expect("checked above");
            labels.push(m);
            rec(&mut next, inner, labels, out);
            labels.pop();
        }
    }
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(
        &mut outer.parts().to_vec(),
        inner,
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter()
        .map(|labels| PosetPath {
            start: outer.clone(),
            labels,
            end: inner.clone(),
        })
        .collect()
}
