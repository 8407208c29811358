//! Skew dual immaculate functions, the immaculate coproduct, and the
//! two-alphabet hook functions.

use num_bigint::BigInt;
use num_traits::One;

use crate::compositions::{compositions_of, interval, partitions_inside, Composition, Partition};
use crate::error::{Error, Result};
use crate::nsym::{pair, NBasis, NSymElem};
use crate::perm::signed_permutations;
use crate::poly::{BiPoly, Poly};
use crate::qsym::{QBasis, QSymElem, TensorElem};
use crate::symfun::{schur_jt, sigma_action, SBasis, SymElem};
use crate::tableaux::{
    enumerate, enumerate_hook, enumerate_standard, paths_between, Shape, TableauKind,
};

/// The three constructions of a skew function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewRoute {
    /// Coefficients `⟨𝔖_β h_γ, 𝔖*_α⟩` (or the row-strict analogue).
    Pairing,
    /// Descent sets of poset paths from `α` down to `β`.
    Paths,
    /// Descent sets of standard skew tableaux.
    Tableaux,
}

impl std::str::FromStr for SkewRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairing" => Ok(SkewRoute::Pairing),
            "paths" => Ok(SkewRoute::Paths),
            "tableaux" => Ok(SkewRoute::Tableaux),
            _ => Err(Error::Parse(format!("unknown skew route {s:?}"))),
        }
    }
}

fn check_contained(alpha: &Composition, beta: &Composition) -> Result<()> {
    if alpha.contains(beta) {
        Ok(())
    } else {
        Err(Error::NotContained {
            outer: alpha.parts().to_vec(),
            inner: beta.parts().to_vec(),
        })
    }
}

/// `Σ_γ ⟨𝔖_β h_γ, 𝔖*_α⟩ M_γ` for `Immaculate`, `Σ_γ ⟨ℛ𝔖_β h_γ, ℛ𝔖*_α⟩ M_γ`
/// for `RowStrict`.
pub fn skew_pairing(
    alpha: &Composition,
    beta: &Composition,
    kind: TableauKind,
) -> Result<QSymElem> {
    check_contained(alpha, beta)?;
    let (nb, qb) = match kind {
        TableauKind::Immaculate => (NBasis::IMM, QBasis::DI),
        TableauKind::RowStrict => (NBasis::RSIMM, QBasis::RSDI),
    };
    let straight = NSymElem::basis_element(nb, beta.clone()).convert(NBasis::H);
    let dual = QSymElem::basis_element(qb, alpha.clone());
    let d = alpha.size() - beta.size();
    let terms = compositions_of(d).into_iter().map(|gamma| {
        let c = pair(
            &straight.mul(&NSymElem::basis_element(NBasis::H, gamma.clone())),
            &dual,
        );
        (gamma, c)
    });
    QSymElem::new(QBasis::M, d, terms)
}

/// The skew function in the `F` basis, by the chosen route.
pub fn skew_f_expansion(
    alpha: &Composition,
    beta: &Composition,
    kind: TableauKind,
    route: SkewRoute,
) -> Result<QSymElem> {
    check_contained(alpha, beta)?;
    let d = alpha.size() - beta.size();
    let terms: Vec<(Composition, BigInt)> = match route {
        SkewRoute::Pairing => return Ok(skew_pairing(alpha, beta, kind)?.convert(QBasis::F)),
        SkewRoute::Tableaux => enumerate_standard(&Shape::skew(alpha.clone(), beta.clone())?)
            .iter()
            .map(|t| {
                (
                    t.descents(kind).expect("standard").to_composition(),
                    BigInt::one(),
                )
            })
            .collect(),
        SkewRoute::Paths => paths_between(alpha, beta)
            .iter()
            .map(|p| {
                let (down, up) = p.descents();
                let set = if kind == TableauKind::Immaculate {
                    down
                } else {
                    up
                };
                (set.to_composition(), BigInt::one())
            })
            .collect(),
    };
    QSymElem::new(QBasis::F, d, terms)
}

/// `Σ_T x^T` over skew tableaux of shape `α/β` with entries at most `m`.
pub fn skew_generating_function(
    alpha: &Composition,
    beta: &Composition,
    kind: TableauKind,
    m: usize,
) -> Result<Poly> {
    let shape = Shape::skew(alpha.clone(), beta.clone())?;
    let mut p = Poly::zero(m);
    for t in enumerate(&shape, kind, m as u32) {
        p.add_word(
            t.rows().iter().flatten().map(|&v| v as usize),
            BigInt::one(),
        );
    }
    Ok(p)
}

/// `Σ_{γ⊆α} 𝔖*_γ ⊗ 𝔖*_{α/γ}` (or the row-strict analogue), with the skew leg
/// in the `F` basis.
pub fn coproduct_immaculate(alpha: &Composition, kind: TableauKind) -> TensorElem {
    let left = match kind {
        TableauKind::Immaculate => QBasis::DI,
        TableauKind::RowStrict => QBasis::RSDI,
    };
    let mut out = TensorElem::zero(left, QBasis::F);
    for gamma in interval(&Composition::empty(), alpha) {
        let skew = skew_f_expansion(alpha, &gamma, kind, SkewRoute::Tableaux)
            .expect("interval is contained");
        for (k, c) in skew.terms() {
            out.add_term(gamma.clone(), k.clone(), c.clone());
        }
    }
    out
}

/// Letters of `1 < ⋯ < ℓ < 1' < ⋯ < k'` as indices `0..ℓ+k`; index `a ≥ ℓ` is primed.
fn weak_words(
    n: usize,
    letters: usize,
    allow: &dyn Fn(usize, usize) -> bool,
    f: &mut dyn FnMut(&[usize]),
) {
    fn rec(
        n: usize,
        letters: usize,
        allow: &dyn Fn(usize, usize) -> bool,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == n {
            f(cur);
            return;
        }
        let start = cur.last().copied().unwrap_or(0);
        for a in start..letters {
            if let Some(&prev) = cur.last() {
                if prev == a && !allow(cur.len(), a) {
                    continue;
                }
            }
            cur.push(a);
            rec(n, letters, allow, cur, f);
            cur.pop();
        }
    }
    rec(n, letters, allow, &mut Vec::with_capacity(n), f);
}

/// `Q̃_α(X, Y)` from its definition: weakly increasing words in which an
/// unprimed letter repeats at position `i` only if `i ∉ set(α)` and a primed
/// letter only if `i ∈ set(α)`.
pub fn super_fundamental(alpha: &Composition, l: usize, k: usize) -> BiPoly {
    let set = alpha.to_set();
    let mut out = BiPoly::zero(l, k);
    let allow = |i: usize, a: usize| (a >= l) == set.contains(i);
    weak_words(alpha.size(), l + k, &allow, &mut |w| {
        let mut x = vec![0u32; l];
        let mut y = vec![0u32; k];
        for &a in w {
            if a < l {
                x[a] += 1;
            } else {
                y[a - l] += 1;
            }
        }
        out.add_term(&x, &y, BigInt::one());
    });
    out
}

/// `Σ_{i=0}^n F_β(X) F_{γ^c}(Y)` over the splits of `α` at size `i`:
/// `β·γ = α` when `i ∈ set(α)` or `i ∈ {0, n}`, `β ⊙ γ = α` otherwise.
pub fn super_fundamental_by_splits(alpha: &Composition, l: usize, k: usize) -> BiPoly {
    let mut out = BiPoly::zero(l, k);
    for i in 0..=alpha.size() {
        let (beta, gamma, _) = alpha.split_at_size(i);
        let px = QSymElem::basis_element(QBasis::F, beta).realize(l);
        let qy = QSymElem::basis_element(QBasis::F, gamma.complement()).realize(k);
        out = out.add(&BiPoly::from_product(&px, &qy));
    }
    out
}

/// `H𝔖*_α(X, Y) = Σ_T z^T` over hook immaculate tableaux.
pub fn hook_di(alpha: &Composition, l: usize, k: usize) -> BiPoly {
    let mut out = BiPoly::zero(l, k);
    for t in enumerate_hook(alpha, l as u32, k as u32) {
        let (x, y) = t.content(l, k);
        out.add_term(&x, &y, BigInt::one());
    }
    out
}

/// `Σ_{γ⊆α} 𝔖*_γ(X) ℛ𝔖*_{α/γ}(Y)`.
pub fn hook_di_factorized(alpha: &Composition, l: usize, k: usize) -> BiPoly {
    let mut out = BiPoly::zero(l, k);
    for gamma in interval(&Composition::empty(), alpha) {
        let px = QSymElem::basis_element(QBasis::DI, gamma.clone()).realize(l);
        let qy = skew_generating_function(alpha, &gamma, TableauKind::RowStrict, k)
            .expect("interval is contained");
        out = out.add(&BiPoly::from_product(&px, &qy));
    }
    out
}

/// `Σ_S Q̃_{comp(Des(S))}(X, Y)` over standard immaculate tableaux of shape `α`.
pub fn hook_fund_expansion(alpha: &Composition, l: usize, k: usize) -> BiPoly {
    let mut out = BiPoly::zero(l, k);
    for s in enumerate_standard(&Shape::straight(alpha.clone())) {
        let d = s
            .descents(TableauKind::Immaculate)
            .expect("standard")
            .to_composition();
        out = out.add(&super_fundamental(&d, l, k));
    }
    out
}

/// `Hs_λ(X, Y) = Σ_{μ⊆λ} s_μ(X) s_{λ'/μ'}(Y)`.
pub fn hook_schur(lambda: &Partition, l: usize, k: usize) -> BiPoly {
    let conj = lambda.conjugate();
    let mut out = BiPoly::zero(l, k);
    for mu in partitions_inside(lambda) {
        let px = SymElem::basis_element(SBasis::S, mu.clone())
            .to_qsym()
            .realize(l);
        let qy = schur_jt(&conj, &mu.conjugate())
            .expect("contained")
            .to_qsym()
            .realize(k);
        out = out.add(&BiPoly::from_product(&px, &qy));
    }
    out
}

/// `Σ_τ sgn(τ) H𝔖*_{τ(λ)}(X, Y)`, dropping null `τ(λ)`.
pub fn hook_schur_expansion(lambda: &Partition, l: usize, k: usize) -> BiPoly {
    let mut out = BiPoly::zero(l, k);
    for (tau, sign) in signed_permutations(lambda.len()) {
        if let Some(alpha) = sigma_action(lambda, &tau) {
            out = out.add(&hook_di(&alpha, l, k).scale(&BigInt::from(sign)));
        }
    }
    out
}
