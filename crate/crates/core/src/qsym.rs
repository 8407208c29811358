//! Homogeneous quasisymmetric functions in the monomial, fundamental, dual
//! immaculate and row-strict dual immaculate bases.
//!
//! Every conversion pivots through the monomial basis, except the two
//! fundamental expansions of the immaculate families, which are read directly
//! off standard tableaux. Going from `M` to the dual immaculate basis solves
//! the lex-unitriangular system `K`; going to the row-strict dual immaculate
//! basis conjugates that solve by `ψ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sparse::{accumulate, add_scaled, apply_linear, write_terms, Terms};
use crate::tableaux::{count_with_content, enumerate_standard, Shape, TableauKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QBasis {
    /// Monomial quasisymmetric functions.
    M,
    /// Fundamental quasisymmetric functions.
    F,
    /// Dual immaculate functions.
    DI,
    /// Row-strict dual immaculate functions.
    RSDI,
}

impl std::str::FromStr for QBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(QBasis::M),
            "F" => Ok(QBasis::F),
            "DI" | "DIstar" => Ok(QBasis::DI),
            "RSDI" | "RSDIstar" => Ok(QBasis::RSDI),
            _ => Err(Error::Parse(format!("unknown QSym basis {s:?}"))),
        }
    }
}

impl fmt::Display for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QBasis::M => "M",
            QBasis::F => "F",
            QBasis::DI => "DI",
            QBasis::RSDI => "RSDI",
        };
        f.write_str(s)
    }
}

/// A homogeneous element of `QSym_n` written in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymElem {
    basis: QBasis,
    degree: usize,
    terms: Terms,
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.basis.to_string(), &self.terms)
    }
}

fn check_degree(terms: &Terms, degree: usize) -> Result<()> {
    match terms.keys().find(|k| k.size() != degree) {
        Some(k) => Err(Error::DegreeMismatch {
            left: degree,
            right: k.size(),
        }),
        None => Ok(()),
    }
}

impl QSymElem {
    pub fn new<I>(basis: QBasis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, BigInt)>,
    {
        let mut map = Terms::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        check_degree(&map, degree)?;
        Ok(QSymElem {
            basis,
            degree,
            terms: map,
        })
    }

    pub fn basis_element(basis: QBasis, index: Composition) -> Self {
        let degree = index.size();
        let mut terms = Terms::new();
        terms.insert(index, BigInt::one());
        QSymElem {
            basis,
            degree,
            terms,
        }
    }

    pub fn zero(basis: QBasis, degree: usize) -> Self {
        QSymElem {
            basis,
            degree,
            terms: Terms::new(),
        }
    }

    /// The unit `F_∅ = M_∅ = 1`.
    pub fn one() -> Self {
        QSymElem::basis_element(QBasis::F, Composition::empty())
    }

    pub fn basis(&self) -> QBasis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coeff(&self, index: &Composition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum in the basis of `self`. A zero operand is compatible with any degree.
    pub fn add(&self, other: &QSymElem) -> Result<QSymElem> {
        let other = other.convert(self.basis);
        if self.is_zero() {
            return Ok(other);
        }
        if !other.is_zero() && other.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &other.terms, &BigInt::one());
        Ok(QSymElem {
            basis: self.basis,
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &QSymElem) -> Result<QSymElem> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> QSymElem {
        let mut terms = Terms::new();
        add_scaled(&mut terms, &self.terms, c);
        QSymElem {
            basis: self.basis,
            degree: self.degree,
            terms,
        }
    }

    /// Equality as quasisymmetric functions, regardless of basis.
    pub fn same_function(&self, other: &QSymElem) -> bool {
        let a = self.convert(QBasis::M);
        let b = other.convert(QBasis::M);
        a.terms == b.terms && (a.is_zero() || a.degree == b.degree)
    }

    pub fn convert(&self, target: QBasis) -> QSymElem {
        if self.basis == target {
            return self.clone();
        }
        let n = self.degree;
        let terms = match (self.basis, target) {
            (QBasis::DI, QBasis::F) => apply_matrix_rows(&self.terms, &matrix(MatrixName::L, n)),
            (QBasis::RSDI, QBasis::F) => {
                apply_matrix_rows(&self.terms, &matrix(MatrixName::LStar, n))
            }
            _ => {
                let m = self.to_monomial();
                from_monomial(&m, n, target)
            }
        };
        QSymElem {
            basis: target,
            degree: n,
            terms,
        }
    }

    fn to_monomial(&self) -> Terms {
        let n = self.degree;
        match self.basis {
            QBasis::M => self.terms.clone(),
            QBasis::F => apply_linear(&self.terms, |a| {
                a.refinements()
                    .into_iter()
                    .map(|b| (b, BigInt::one()))
                    .collect()
            }),
            QBasis::DI => apply_matrix_rows(&self.terms, &matrix(MatrixName::K, n)),
            QBasis::RSDI => apply_matrix_rows(&self.terms, &matrix(MatrixName::KStar, n)),
        }
    }

    /// `ψ(F_α) = F_{α^c}`; swaps the two immaculate families index-wise.
    pub fn psi(&self) -> QSymElem {
        match self.basis {
            QBasis::F => self.reindex(QBasis::F, Composition::complement),
            QBasis::DI => self.reindex(QBasis::RSDI, Composition::clone),
            QBasis::RSDI => self.reindex(QBasis::DI, Composition::clone),
            QBasis::M => self.convert(QBasis::F).psi().convert(QBasis::M),
        }
    }

    /// `ρ(F_α) = F_{rev α}`, computed through `F` in every other basis.
    pub fn rho(&self) -> QSymElem {
        match self.basis {
            QBasis::F => self.reindex(QBasis::F, Composition::reverse),
            QBasis::M => self.reindex(QBasis::M, Composition::reverse),
            other => self.convert(QBasis::F).rho().convert(other),
        }
    }

    /// `ω = ρ ∘ ψ`, so `ω(F_α) = F_{α^t}`.
    pub fn omega(&self) -> QSymElem {
        match self.basis {
            QBasis::F => self.reindex(QBasis::F, Composition::transpose),
            _ => self.psi().rho(),
        }
    }

    fn reindex(&self, basis: QBasis, f: impl Fn(&Composition) -> Composition) -> QSymElem {
        let terms = self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect();
        QSymElem {
            basis,
            degree: self.degree,
            terms,
        }
    }

    /// Product, returned in the monomial basis.
    pub fn mul(&self, other: &QSymElem) -> QSymElem {
        let a = self.convert(QBasis::M);
        let b = other.convert(QBasis::M);
        let mut terms = Terms::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let c = ca * cb;
                for (k, m) in quasi_shuffle(ka.parts(), kb.parts()) {
                    accumulate(
                        &mut terms,
                        Composition::new(k).expect("positive parts"),
                        &c * m,
                    );
                }
            }
        }
        QSymElem {
            basis: QBasis::M,
            degree: self.degree + other.degree,
            terms,
        }
    }

    /// `ΔF_α = Σ F_β ⊗ F_γ` over `β·γ = α` and `β ⊙ γ = α`, in the F⊗F basis.
    pub fn coproduct(&self) -> TensorElem {
        let f = self.convert(QBasis::F);
        let mut out = TensorElem::zero(QBasis::F, QBasis::F);
        for (a, c) in &f.terms {
            for i in 0..=a.size() {
                let (b, g, _) = a.split_at_size(i);
                accumulate(&mut out.terms, (b, g), c.clone());
            }
        }
        out
    }

    /// Substitutes `M_α ↦ Σ_{i_1<⋯<i_k≤m} x_{i_1}^{α_1}⋯x_{i_k}^{α_k}`.
    pub fn realize(&self, m: usize) -> Poly {
        let mono = self.convert(QBasis::M);
        let mut out = Poly::zero(m);
        for (a, c) in &mono.terms {
            for_each_increasing(a.len(), m, &mut |idx| {
                let mut exps = vec![0u32; m];
                for (&i, &p) in idx.iter().zip(a.parts()) {
                    exps[i] = p as u32;
                }
                out.add_term(exps, c.clone());
            });
        }
        out
    }
}

/// Calls `f` with every strictly increasing `k`-tuple of 0-based indices below `m`.
pub(crate) fn for_each_increasing(k: usize, m: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, m: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(k, m, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(k, m, 0, &mut Vec::with_capacity(k), f);
}

/// Overlapping shuffles of two part sequences with multiplicities.
fn quasi_shuffle(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, BigInt> {
    let mut memo = HashMap::new();
    quasi_shuffle_rec(a, b, &mut memo)
}

fn quasi_shuffle_rec(
    a: &[usize],
    b: &[usize],
    memo: &mut HashMap<(usize, usize), BTreeMap<Vec<usize>, BigInt>>,
) -> BTreeMap<Vec<usize>, BigInt> {
    if a.is_empty() || b.is_empty() {
        let mut out = BTreeMap::new();
        out.insert(
            if a.is_empty() { b.to_vec() } else { a.to_vec() },
            BigInt::one(),
        );
        return out;
    }
    // suffixes are identified by their lengths
    let key = (a.len(), b.len());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    for (head, rest_a, rest_b) in [
        (a[0], &a[1..], b),
        (b[0], a, &b[1..]),
        (a[0] + b[0], &a[1..], &b[1..]),
    ] {
        for (tail, c) in quasi_shuffle_rec(rest_a, rest_b, memo) {
            let mut w = Vec::with_capacity(tail.len() + 1);
            w.push(head);
            w.extend(tail);
            accumulate(&mut out, w, c);
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Conversion out of the monomial basis.
fn from_monomial(m: &Terms, n: usize, target: QBasis) -> Terms {
    match target {
        QBasis::M => m.clone(),
        QBasis::F => apply_linear(m, |a| {
            a.refinements()
                .into_iter()
                .map(|b| {
                    let sign = if (b.len() - a.len()) % 2 == 0 { 1 } else { -1 };
                    (b, BigInt::from(sign))
                })
                .collect()
        }),
        QBasis::DI => solve_unitriangular(m, &matrix(MatrixName::K, n)),
        QBasis::RSDI => {
            // x = Σ c_α ℛ𝔖*_α  ⇔  ψ(x) = Σ c_α 𝔖*_α
            let x = QSymElem {
                basis: QBasis::M,
                degree: n,
                terms: m.clone(),
            };
            let psi_m = x.psi().to_monomial();
            solve_unitriangular(&psi_m, &matrix(MatrixName::K, n))
        }
    }
}

/// `Σ_α x_α · Σ_β A[α][β] e_β`.
fn apply_matrix_rows(x: &Terms, a: &BasisMatrix) -> Terms {
    let mut out = Terms::new();
    for (alpha, c) in x {
        let i = a.position(alpha);
        for (j, v) in a.entries[i].iter().enumerate() {
            if !v.is_zero() {
                accumulate(&mut out, a.index[j].clone(), c * v);
            }
        }
    }
    out
}

/// Finds `c` with `Σ_α c_α A[α][·] = x`, for `A` with unit diagonal vanishing
/// above it in lexicographic order.
fn solve_unitriangular(x: &Terms, a: &BasisMatrix) -> Terms {
    let n = a.index.len();
    let mut residual: Vec<BigInt> = a
        .index
        .iter()
        .map(|k| x.get(k).cloned().unwrap_or_default())
        .collect();
    let mut out = Terms::new();
    // index is lex-decreasing, so the largest composition comes first
    for i in 0..n {
        debug_assert!(a.entries[i][i].is_one());
        let c = residual[i].clone();
        if c.is_zero() {
            continue;
        }
        for j in i..n {
            if !a.entries[i][j].is_zero() {
                residual[j] -= &c * &a.entries[i][j];
            }
        }
        out.insert(a.index[i].clone(), c);
    }
    out
}

/// Names of the transition matrices between the immaculate families and `M`/`F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixName {
    /// Immaculate tableaux of shape α and content β.
    K,
    /// Row-strict immaculate tableaux of shape α and content β.
    KStar,
    /// Standard immaculate tableaux of shape α with dual immaculate descent composition β.
    L,
    /// Standard immaculate tableaux of shape α with row-strict descent composition β.
    LStar,
}

impl std::str::FromStr for MatrixName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(MatrixName::K),
            "Kstar" | "KStar" | "K*" => Ok(MatrixName::KStar),
            "L" => Ok(MatrixName::L),
            "Lstar" | "LStar" | "L*" => Ok(MatrixName::LStar),
            _ => Err(Error::Parse(format!("unknown matrix {s:?}"))),
        }
    }
}

/// Dense matrix indexed by compositions of `n` in lexicographically
/// decreasing order on both axes; `entries[i][j]` is the `(index[i], index[j])` entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMatrix {
    pub name: MatrixName,
    pub n: usize,
    pub index: Vec<Composition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl BasisMatrix {
    pub fn position(&self, c: &Composition) -> usize {
        // lex-decreasing order
        self.index
            .binary_search_by(|probe| c.cmp(probe))
            .expect("composition of the matrix degree")
    }

    pub fn get(&self, row: &Composition, col: &Composition) -> BigInt {
        self.entries[self.position(row)][self.position(col)].clone()
    }

    fn compute(name: MatrixName, n: usize) -> BasisMatrix {
        let index = compositions_of(n);
        let entries = match name {
            MatrixName::K | MatrixName::KStar => {
                let kind = if name == MatrixName::K {
                    TableauKind::Immaculate
                } else {
                    TableauKind::RowStrict
                };
                index
                    .iter()
                    .map(|a| {
                        let shape = Shape::straight(a.clone());
                        index
                            .iter()
                            .map(|b| BigInt::from(count_with_content(&shape, kind, b.parts())))
                            .collect()
                    })
                    .collect()
            }
            MatrixName::L | MatrixName::LStar => {
                let kind = if name == MatrixName::L {
                    TableauKind::Immaculate
                } else {
                    TableauKind::RowStrict
                };
                index
                    .iter()
                    .map(|a| {
                        let mut row = vec![BigInt::zero(); index.len()];
                        for s in enumerate_standard(&Shape::straight(a.clone())) {
                            let d = s.descents(kind).expect("standard").to_composition();
                            let j = index
                                .binary_search_by(|probe| d.cmp(probe))
                                .expect("composition of n");
                            row[j] += 1;
                        }
                        row
                    })
                    .collect()
            }
        };
        BasisMatrix {
            name,
            n,
            index,
            entries,
        }
    }
}

type MatrixCache = Mutex<HashMap<(MatrixName, usize), Arc<BasisMatrix>>>;

/// The matrix `name` in degree `n`, computed once and shared.
pub fn matrix(name: MatrixName, n: usize) -> Arc<BasisMatrix> {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("matrix cache poisoned").get(&(name, n)) {
        return Arc::clone(hit);
    }
    // computed outside the lock; concurrent first fills produce identical values
    let fresh = Arc::new(BasisMatrix::compute(name, n));
    let mut guard = cache.lock().expect("matrix cache poisoned");
    Arc::clone(guard.entry((name, n)).or_insert(fresh))
}

/// Homogeneous element of `QSym ⊗ QSym` with a basis tag on each leg.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElem {
    pub left: QBasis,
    pub right: QBasis,
    pub terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl TensorElem {
    pub fn zero(left: QBasis, right: QBasis) -> Self {
        TensorElem {
            left,
            right,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, l: Composition, r: Composition, c: BigInt) {
        accumulate(&mut self.terms, (l, r), c);
    }

    /// Adds `a ⊗ b`, converting each factor to this element's leg bases.
    pub fn add_product(&mut self, a: &QSymElem, b: &QSymElem) {
        let a = a.convert(self.left);
        let b = b.convert(self.right);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                self.add_term(ka.clone(), kb.clone(), ca * cb);
            }
        }
    }

    /// Rewrites both legs in the given bases.
    pub fn convert(&self, left: QBasis, right: QBasis) -> TensorElem {
        let mut out = TensorElem::zero(left, right);
        for ((a, b), c) in &self.terms {
            let la = QSymElem::basis_element(self.left, a.clone()).convert(left);
            let rb = QSymElem::basis_element(self.right, b.clone()).convert(right);
            for (ka, ca) in &la.terms {
                for (kb, cb) in &rb.terms {
                    out.add_term(ka.clone(), kb.clone(), c * ca * cb);
                }
            }
        }
        out
    }

    /// `(ε ⊗ id)`: the right legs of terms whose left leg has degree 0.
    pub fn left_counit(&self) -> Terms {
        self.terms
            .iter()
            .filter(|((a, _), _)| a.is_empty())
            .map(|((_, b), c)| (b.clone(), c.clone()))
            .collect()
    }

    /// `(id ⊗ ε)`.
    pub fn right_counit(&self) -> Terms {
        self.terms
            .iter()
            .filter(|((_, b), _)| b.is_empty())
            .map(|((a, _), c)| (a.clone(), c.clone()))
            .collect()
    }
}
