//! Compositions, their subset encoding, and the orders used to index every
//! basis in the crate.
//!
//! Lists of compositions are always returned in lexicographically decreasing
//! order so that matrices and dumps are deterministic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand for building a composition from a literal; panics on a zero part.
#[macro_export]
macro_rules! comp {
    () => { $crate::compositions::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::compositions::Composition::new(vec![$($p),+]).expect("composition parts must be positive")
    };
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    /// The one-part composition `(n)`, or the empty composition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Composition::empty()
        } else {
            Composition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Partial sums `{α₁, α₁+α₂, …, α₁+⋯+α_{k−1}}` as a subset of `{1..n−1}`.
    pub fn to_set(&self) -> SubsetOfPrefix {
        let mut acc = 0;
        let mut elements = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            elements.push(acc);
        }
        SubsetOfPrefix {
            n: self.size(),
            elements,
        }
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.reverse();
        Composition(parts)
    }

    pub fn complement(&self) -> Composition {
        self.to_set().complement().to_composition()
    }

    pub fn transpose(&self) -> Composition {
        self.reverse().complement()
    }

    /// True iff grouping consecutive parts of `self` yields `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let fine = self.to_set();
        coarser.to_set().elements.iter().all(|e| fine.contains(*e))
    }

    /// Every β with β ≼ self, including self.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        let base = self.to_set();
        let free: Vec<usize> = (1..n).filter(|i| !base.contains(*i)).collect();
        let mut out = subsets_of(&free)
            .into_iter()
            .map(|extra| {
                let mut el = base.elements.clone();
                el.extend(extra);
                el.sort_unstable();
                SubsetOfPrefix { n, elements: el }.to_composition()
            })
            .collect::<Vec<_>>();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Every γ with self ≼ γ, including self.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let base = self.to_set();
        let mut out = subsets_of(&base.elements)
            .into_iter()
            .map(|el| SubsetOfPrefix { n, elements: el }.to_composition())
            .collect::<Vec<_>>();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Lexicographic comparison; only defined between compositions of the same size.
    pub fn lex_compare(&self, other: &Composition) -> Result<Ordering> {
        if self.size() != other.size() {
            return Err(Error::DegreeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.0.cmp(&other.0))
    }

    /// `self ⊂_s beta`: β is obtained by adding `s` cells, growing rows
    /// componentwise and adding at most one new row.
    pub fn subset_s(&self, beta: &Composition, s: usize) -> bool {
        beta.size() == self.size() + s
            && beta.len() <= self.len() + 1
            && self.len() <= beta.len()
            && self.0.iter().zip(&beta.0).all(|(a, b)| a <= b)
    }

    /// True iff `inner ⊆ self` componentwise (and `ℓ(inner) ≤ ℓ(self)`).
    pub fn contains(&self, inner: &Composition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `β ⊙ γ`: concatenation with the last part of β merged into the first of γ.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// All ways to cut `self` after `i` cells: `(β, γ)` with `β·γ = α` when
    /// `i` falls between parts and `β ⊙ γ = α` when it falls inside a part.
    pub fn split_at_size(&self, i: usize) -> (Composition, Composition, bool) {
        assert!(i <= self.size());
        let mut left = Vec::new();
        let mut acc = 0;
        for (idx, &p) in self.0.iter().enumerate() {
            if acc == i {
                return (Composition(left), Composition(self.0[idx..].to_vec()), true);
            }
            if acc + p > i {
                left.push(i - acc);
                let mut right = vec![acc + p - i];
                right.extend_from_slice(&self.0[idx + 1..]);
                return (Composition(left), Composition(right), false);
            }
            left.push(p);
            acc += p;
        }
        (Composition(left), Composition::empty(), true)
    }

    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition(parts))
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// A subset of `{1, …, n−1}`, the other half of the composition/set bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetOfPrefix {
    pub n: usize,
    pub elements: Vec<usize>,
}

impl SubsetOfPrefix {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&e| e == 0 || e >= n) {
            return Err(Error::InvalidComposition(format!(
                "{elements:?} is not a subset of {{1..{}}}",
                n.saturating_sub(1)
            )));
        }
        Ok(SubsetOfPrefix { n, elements })
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn complement(&self) -> SubsetOfPrefix {
        SubsetOfPrefix {
            n: self.n,
            elements: (1..self.n).filter(|i| !self.contains(*i)).collect(),
        }
    }

    /// `(s₁, s₂−s₁, …, n−s_j)`; the empty composition when `n = 0`.
    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(self.elements.len() + 1);
        let mut prev = 0;
        for &e in &self.elements {
            parts.push(e - prev);
            prev = e;
        }
        parts.push(self.n - prev);
        Composition(parts)
    }
}

fn subsets_of(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..(1u64 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// All compositions of `n` in lexicographically decreasing order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = (0u64..(1u64 << (n - 1)))
        .map(|mask| {
            let elements = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            SubsetOfPrefix { n, elements }.to_composition()
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All compositions `γ` with `inner ⊆ γ ⊆ outer` componentwise, rows aligned
/// from the bottom. Lexicographically decreasing.
pub fn interval(inner: &Composition, outer: &Composition) -> Vec<Composition> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for len in inner.len()..=outer.len() {
        let mut cur = Vec::with_capacity(len);
        fill_interval(inner, outer, len, &mut cur, &mut out);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_interval(
    inner: &Composition,
    outer: &Composition,
    len: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    let i = cur.len();
    if i == len {
        out.push(Composition(cur.clone()));
        return;
    }
    for p in inner.part(i).max(1)..=outer.part(i) {
        cur.push(p);
        fill_interval(inner, outer, len, cur, out);
        cur.pop();
    }
}

/// A weakly decreasing composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Composition);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0 .0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let c = Composition::new(parts)?;
        if !c.is_partition() {
            return Err(Error::InvalidComposition(format!(
                "{c} is not weakly decreasing"
            )));
        }
        Ok(Partition(c))
    }

    pub fn empty() -> Self {
        Partition(Composition::empty())
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.part(i)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts().iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(Composition(parts))
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        self.0.contains(&inner.0)
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(Composition(cur.clone())));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions contained in `outer` (including the empty one).
pub fn partitions_inside(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(Composition(cur.clone())));
        let i = cur.len();
        let cap = outer.part(i).min(cur.last().copied().unwrap_or(usize::MAX));
        for p in 1..=cap {
            cur.push(p);
            rec(outer, cur, out);
            cur.pop();
        }
    }
    rec(outer, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_small() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(compositions_of(1), vec![comp![1]]);
        assert_eq!(
            compositions_of(3),
            vec![comp![3], comp![2, 1], comp![1, 2], comp![1, 1, 1]]
        );
        for n in 1..=10 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn set_and_comp_examples() {
        let s = comp![3, 1, 4, 2, 5, 1].to_set();
        assert_eq!(s.n, 16);
        assert_eq!(s.elements, vec![3, 4, 8, 10, 15]);
        let s = SubsetOfPrefix::new(16, vec![2, 3, 5, 9, 10, 14]).unwrap();
        assert_eq!(s.to_composition(), comp![2, 1, 2, 4, 1, 4, 2]);
        assert!(comp![5].to_set().elements.is_empty());
        assert_eq!(comp![1, 1, 1].to_set().elements, vec![1, 2]);
        assert!(SubsetOfPrefix::new(4, vec![4]).is_err());
    }

    #[test]
    fn set_comp_round_trip() {
        for n in 0..=8 {
            for a in compositions_of(n) {
                assert_eq!(a.to_set().to_composition(), a);
            }
        }
    }

    #[test]
    fn involutions() {
        assert_eq!(comp![3, 1, 2, 4].transpose(), comp![1, 1, 1, 2, 3, 1, 1]);
        assert_eq!(comp![4].complement(), Composition::ones(4));
        assert_eq!(Composition::ones(5).transpose(), comp![5]);
        for n in 0..=8 {
            for a in compositions_of(n) {
                assert_eq!(a.reverse().reverse(), a);
                assert_eq!(a.complement().complement(), a);
                assert_eq!(a.transpose().transpose(), a);
                assert_eq!(a.transpose(), a.reverse().complement());
                assert_eq!(a.transpose(), a.complement().reverse());
            }
        }
    }

    #[test]
    fn refinement_order() {
        assert!(comp![1, 2, 1, 1, 3, 2].refines(&comp![3, 2, 5]));
        assert!(comp![2, 1].refines(&comp![2, 1]));
        assert!(!comp![1, 2].refines(&comp![2, 1]));
        assert_eq!(comp![3].refinements().len(), 4);
        for n in 1..=6 {
            let all = compositions_of(n);
            for a in &all {
                let refs = a.refinements();
                let coars = a.coarsenings();
                for b in &all {
                    let sa = a.to_set();
                    let sb = b.to_set();
                    let subset = sa.elements.iter().all(|e| sb.contains(*e));
                    assert_eq!(b.refines(a), subset);
                    assert_eq!(refs.contains(b), b.refines(a));
                    assert_eq!(coars.contains(b), a.refines(b));
                }
                assert_eq!(refs.len(), 1 << (n - a.len()));
                assert_eq!(coars.len(), 1 << (a.len() - 1));
            }
        }
    }

    #[test]
    fn lex() {
        assert_eq!(
            comp![2, 1].lex_compare(&comp![1, 2]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(comp![3].lex_compare(&comp![3]).unwrap(), Ordering::Equal);
        assert!(comp![3].lex_compare(&comp![2]).is_err());
        assert_eq!(compositions_of(4).iter().max().unwrap(), &comp![4]);
    }

    #[test]
    fn subset_s_enumeration() {
        let alpha = comp![1, 2];
        let found: Vec<_> = compositions_of(4)
            .into_iter()
            .filter(|b| alpha.subset_s(b, 1))
            .collect();
        assert_eq!(found, vec![comp![2, 2], comp![1, 3], comp![1, 2, 1]]);
        assert!(alpha.subset_s(&alpha, 0));
        assert!(!comp![2].subset_s(&comp![2, 1, 1], 2));
    }

    #[test]
    fn containment() {
        assert!(comp![3, 2, 3].contains(&comp![1, 1, 2]));
        assert!(comp![2, 2].contains(&comp![2, 2]));
        assert!(!comp![1, 5].contains(&comp![2]));
        assert!(!comp![2].contains(&comp![1, 1]));
    }

    #[test]
    fn concatenations() {
        assert_eq!(comp![2, 1].concat(&comp![1, 2]), comp![2, 1, 1, 2]);
        assert_eq!(
            comp![2, 1].near_concat(&comp![1, 2]).unwrap(),
            comp![2, 2, 2]
        );
        assert_eq!(
            comp![2].near_concat(&Composition::empty()),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn unique_splitting() {
        for n in 1..=7 {
            let all: Vec<Composition> = (0..=n).flat_map(compositions_of).collect();
            for a in compositions_of(n) {
                for i in 1..n {
                    let mut count = 0;
                    for b in all.iter().filter(|b| b.size() == i) {
                        for g in all.iter().filter(|g| g.size() == n - i) {
                            if b.concat(g) == a {
                                count += 1;
                            }
                            if b.near_concat(g).ok().as_ref() == Some(&a) {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(count, 1, "{a} at {i}");
                    let (b, g, cut) = a.split_at_size(i);
                    if cut {
                        assert_eq!(b.concat(&g), a);
                    } else {
                        assert_eq!(b.near_concat(&g).unwrap(), a);
                    }
                    assert_eq!(cut, a.to_set().contains(i));
                }
            }
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(
            comp![3, 1, 4, 2, 5, 1].sort_to_partition().parts(),
            &[5, 4, 3, 2, 1, 1]
        );
        assert_eq!(
            Partition::new(vec![2, 2]).unwrap().conjugate().parts(),
            &[2, 2]
        );
        assert_eq!(
            Partition::new(vec![3, 1]).unwrap().conjugate().parts(),
            &[2, 1, 1]
        );
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(
            partitions_inside(&Partition::new(vec![2, 1]).unwrap()).len(),
            5
        );
    }

    #[test]
    fn intervals() {
        let g = interval(&comp![1], &comp![2, 1]);
        assert_eq!(g, vec![comp![2, 1], comp![2], comp![1, 1], comp![1]]);
        assert_eq!(
            interval(&Composition::empty(), &comp![1]),
            vec![comp![1], Composition::empty()]
        );
        assert!(interval(&comp![2], &comp![1, 1]).is_empty());
    }

    #[test]
    fn json_shape() {
        let c = comp![3, 1, 4];
        assert_eq!(serde_json::to_string(&c).unwrap(), "[3,1,4]");
        let back: Composition = serde_json::from_str("[3,1,4]").unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Composition>("[3,0]").is_err());
    }
}
