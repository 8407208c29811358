//! Homogeneous noncommutative symmetric functions in the elementary, complete
//! homogeneous, ribbon, immaculate and row-strict immaculate bases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::perm::signed_permutations;
use crate::qsym::{matrix, MatrixName, QBasis, QSymElem};
use crate::sparse::{accumulate, add_scaled, apply_linear, write_terms, Terms};
use crate::symfun::{SBasis, SymElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NBasis {
    E,
    H,
    /// Ribbon functions.
    R,
    /// Immaculate functions.
    IMM,
    /// Row-strict immaculate functions.
    RSIMM,
}

impl std::str::FromStr for NBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(NBasis::E),
            "H" | "h" => Ok(NBasis::H),
            "R" | "r" => Ok(NBasis::R),
            "IMM" | "S" => Ok(NBasis::IMM),
            "RSIMM" | "RS" => Ok(NBasis::RSIMM),
            _ => Err(Error::Parse(format!("unknown NSym basis {s:?}"))),
        }
    }
}

impl fmt::Display for NBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NBasis::E => "E",
            NBasis::H => "H",
            NBasis::R => "R",
            NBasis::IMM => "IMM",
            NBasis::RSIMM => "RSIMM",
        };
        f.write_str(s)
    }
}

/// A homogeneous element of `NSym_n` written in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSymElem {
    basis: NBasis,
    degree: usize,
    terms: Terms,
}

impl fmt::Display for NSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            NBasis::E => "e",
            NBasis::H => "h",
            NBasis::R => "r",
            NBasis::IMM => "S",
            NBasis::RSIMM => "RS",
        };
        write_terms(f, name, &self.terms)
    }
}

impl NSymElem {
    pub fn new<I>(basis: NBasis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, BigInt)>,
    {
        let mut map = Terms::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        if let Some(k) = map.keys().find(|k| k.size() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: k.size(),
            });
        }
        Ok(NSymElem {
            basis,
            degree,
            terms: map,
        })
    }

    pub fn basis_element(basis: NBasis, index: Composition) -> Self {
        let degree = index.size();
        let mut terms = Terms::new();
        terms.insert(index, BigInt::one());
        NSymElem {
            basis,
            degree,
            terms,
        }
    }

    pub fn zero(basis: NBasis, degree: usize) -> Self {
        NSymElem {
            basis,
            degree,
            terms: Terms::new(),
        }
    }

    pub fn one() -> Self {
        NSymElem::basis_element(NBasis::H, Composition::empty())
    }

    /// `h_n`, with `h_0 = 1` and `h_n = 0` for negative `n`.
    pub fn h(n: i64) -> Self {
        NSymElem::single(NBasis::H, n)
    }

    /// `e_n`, with `e_0 = 1` and `e_n = 0` for negative `n`.
    pub fn e(n: i64) -> Self {
        NSymElem::single(NBasis::E, n)
    }

    fn single(basis: NBasis, n: i64) -> Self {
        match n {
            n if n < 0 => NSymElem::zero(basis, 0),
            0 => NSymElem::basis_element(basis, Composition::empty()),
            n => NSymElem::basis_element(basis, Composition::row(n as usize)),
        }
    }

    pub fn basis(&self) -> NBasis {
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
    pub fn add(&self, other: &NSymElem) -> Result<NSymElem> {
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
        Ok(NSymElem {
            basis: self.basis,
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &NSymElem) -> Result<NSymElem> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> NSymElem {
        let mut terms = Terms::new();
        add_scaled(&mut terms, &self.terms, c);
        NSymElem {
            basis: self.basis,
            degree: self.degree,
            terms,
        }
    }

    /// Equality as noncommutative symmetric functions, regardless of basis.
    pub fn same_function(&self, other: &NSymElem) -> bool {
        let a = self.to_h();
        let b = other.to_h();
        a == b && (a.is_empty() || self.degree == other.degree)
    }

    fn to_h(&self) -> Terms {
        match self.basis {
            NBasis::H => self.terms.clone(),
            NBasis::E => swap_eh(&self.terms),
            NBasis::R => apply_linear(&self.terms, |a| {
                a.coarsenings()
                    .into_iter()
                    .map(|b| (b.clone(), signed(a.len() - b.len())))
                    .collect()
            }),
            NBasis::IMM => apply_linear(&self.terms, jacobi_trudi),
            NBasis::RSIMM => swap_eh(&apply_linear(&self.terms, jacobi_trudi)),
        }
    }

    pub fn convert(&self, target: NBasis) -> NSymElem {
        if self.basis == target {
            return self.clone();
        }
        let n = self.degree;
        let h = self.to_h();
        let terms = match target {
            NBasis::H => h,
            NBasis::E => swap_eh(&h),
            NBasis::R => apply_linear(&h, |a| {
                a.coarsenings()
                    .into_iter()
                    .map(|b| (b, BigInt::one()))
                    .collect()
            }),
            NBasis::IMM => expand_by_k(&h, n),
            NBasis::RSIMM => expand_by_k(&swap_eh(&h), n),
        };
        NSymElem {
            basis: target,
            degree: n,
            terms,
        }
    }

    /// Product; concatenation on `H` (or `E`) words.
    pub fn mul(&self, other: &NSymElem) -> NSymElem {
        let basis = if self.basis == NBasis::E && other.basis == NBasis::E {
            NBasis::E
        } else {
            NBasis::H
        };
        let a = self.convert(basis);
        let b = other.convert(basis);
        let mut terms = Terms::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                accumulate(&mut terms, ka.concat(kb), ca * cb);
            }
        }
        NSymElem {
            basis,
            degree: self.degree + other.degree,
            terms,
        }
    }

    /// Automorphism with `ψ(h_α) = e_α` and `ψ(𝔖_α) = ℛ𝔖_α`.
    pub fn psi(&self) -> NSymElem {
        match self.basis {
            NBasis::H => self.reindex(NBasis::E, Composition::clone),
            NBasis::E => self.reindex(NBasis::H, Composition::clone),
            NBasis::R => self.reindex(NBasis::R, Composition::complement),
            NBasis::IMM => self.reindex(NBasis::RSIMM, Composition::clone),
            NBasis::RSIMM => self.reindex(NBasis::IMM, Composition::clone),
        }
    }

    /// Anti-automorphism with `ρ(h_α) = h_{rev α}`.
    pub fn rho(&self) -> NSymElem {
        match self.basis {
            NBasis::H | NBasis::E | NBasis::R => self.reindex(self.basis, Composition::reverse),
            other => self.convert(NBasis::H).rho().convert(other),
        }
    }

    /// `ω = ρ ∘ ψ`, so `ω(h_α) = e_{rev α}`.
    pub fn omega(&self) -> NSymElem {
        self.psi().rho()
    }

    fn reindex(&self, basis: NBasis, f: impl Fn(&Composition) -> Composition) -> NSymElem {
        let terms = self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect();
        NSymElem {
            basis,
            degree: self.degree,
            terms,
        }
    }

    /// The forgetful map to `Sym`: `h_α ↦ h_{sorted α}`, and likewise for `e`.
    pub fn chi(&self) -> SymElem {
        let (basis, src) = match self.basis {
            NBasis::E => (SBasis::Ec, self.terms.clone()),
            _ => (SBasis::Hc, self.to_h()),
        };
        SymElem::from_compositions(basis, self.degree, src)
    }
}

fn signed(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

/// `h_α = Σ_{β≼α} (−1)^{|α|−ℓ(β)} e_β`; the same map sends `e` to `h`.
fn swap_eh(terms: &Terms) -> Terms {
    apply_linear(terms, |a| {
        a.refinements()
            .into_iter()
            .map(|b| (b.clone(), signed(a.size() - b.len())))
            .collect()
    })
}

/// `Σ_σ sgn(σ) h_{(α_1+σ_1−1, …, α_m+σ_m−m)}` with zero entries dropped and
/// negative entries killing the term.
fn jacobi_trudi(alpha: &Composition) -> Terms {
    let m = alpha.len();
    let mut out = Terms::new();
    'perm: for (sigma, sign) in signed_permutations(m) {
        let mut parts = Vec::with_capacity(m);
        for (i, &s) in sigma.iter().enumerate() {
            let v = alpha.part(i) as i64 + s as i64 - i as i64;
            if v < 0 {
                continue 'perm;
            }
            if v > 0 {
                parts.push(v as usize);
            }
        }
        accumulate(
            &mut out,
            Composition::new(parts).expect("positive parts"),
            BigInt::from(sign),
        );
    }
    out
}

/// Coefficient of `𝔖_α` in `Σ_β x_β h_β` is `Σ_β x_β K_{α,β}`.
fn expand_by_k(x: &Terms, n: usize) -> Terms {
    let k = matrix(MatrixName::K, n);
    let mut out = Terms::new();
    for (beta, c) in x {
        let j = k.position(beta);
        for (i, row) in k.entries.iter().enumerate() {
            if !row[j].is_zero() {
                accumulate(&mut out, k.index[i].clone(), c * &row[j]);
            }
        }
    }
    out
}

/// `⟨g, f⟩` with `⟨h_α, M_β⟩ = δ_{αβ}`; zero across different degrees.
pub fn pair(g: &NSymElem, f: &QSymElem) -> BigInt {
    if g.degree != f.degree() {
        return BigInt::zero();
    }
    let h = g.to_h();
    let m = f.convert(QBasis::M);
    h.iter().map(|(k, c)| c * m.coeff(k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::compositions::compositions_of;
    use crate::qsym::matrix;

    fn el(basis: NBasis, terms: &[(Composition, i64)]) -> NSymElem {
        let degree = terms.first().map(|(k, _)| k.size()).unwrap_or(0);
        NSymElem::new(
            basis,
            degree,
            terms.iter().map(|(k, c)| (k.clone(), BigInt::from(*c))),
        )
        .unwrap()
    }

    fn b(basis: NBasis, a: Composition) -> NSymElem {
        NSymElem::basis_element(basis, a)
    }

    #[test]
    fn products() {
        assert_eq!(
            b(NBasis::H, comp![2]).mul(&b(NBasis::H, comp![1, 1])),
            b(NBasis::H, comp![2, 1, 1])
        );
        let x = b(NBasis::H, comp![1])
            .mul(&b(NBasis::H, comp![2]))
            .mul(&b(NBasis::H, comp![3]));
        let y = b(NBasis::H, comp![1]).mul(&b(NBasis::H, comp![2]).mul(&b(NBasis::H, comp![3])));
        assert_eq!(x, y);
        let r = b(NBasis::R, comp![1]);
        assert_eq!(
            r.mul(&r).convert(NBasis::R),
            el(NBasis::R, &[(comp![1, 1], 1), (comp![2], 1)])
        );
    }

    #[test]
    fn small_conversions() {
        assert_eq!(
            b(NBasis::H, comp![2]).convert(NBasis::E),
            el(NBasis::E, &[(comp![1, 1], 1), (comp![2], -1)])
        );
        assert_eq!(
            b(NBasis::R, comp![1, 1]).convert(NBasis::H),
            el(NBasis::H, &[(comp![1, 1], 1), (comp![2], -1)])
        );
        assert_eq!(
            b(NBasis::IMM, comp![2, 2]).convert(NBasis::H),
            el(NBasis::H, &[(comp![2, 2], 1), (comp![3, 1], -1)])
        );
    }

    #[test]
    fn round_trips() {
        let bases = [NBasis::E, NBasis::H, NBasis::R, NBasis::IMM, NBasis::RSIMM];
        for n in 0..=6 {
            for a in compositions_of(n) {
                for &x in &bases {
                    let e = b(x, a.clone());
                    for &y in &bases {
                        assert_eq!(e.convert(y).convert(x), e, "{x} -> {y} at {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn pairings() {
        let h21 = b(NBasis::H, comp![2, 1]);
        assert_eq!(
            pair(&h21, &QSymElem::basis_element(QBasis::M, comp![2, 1])),
            BigInt::one()
        );
        assert_eq!(
            pair(&h21, &QSymElem::basis_element(QBasis::M, comp![1, 2])),
            BigInt::zero()
        );
        assert_eq!(
            pair(&h21, &QSymElem::basis_element(QBasis::M, comp![1])),
            BigInt::zero()
        );
        for n in 0..=5 {
            for a in compositions_of(n) {
                for c in compositions_of(n) {
                    let delta = BigInt::from((a == c) as i32);
                    assert_eq!(
                        pair(
                            &b(NBasis::R, a.clone()),
                            &QSymElem::basis_element(QBasis::F, c.clone())
                        ),
                        delta
                    );
                    assert_eq!(
                        pair(
                            &b(NBasis::IMM, a.clone()),
                            &QSymElem::basis_element(QBasis::DI, c.clone())
                        ),
                        delta
                    );
                    assert_eq!(
                        pair(
                            &b(NBasis::RSIMM, a.clone()),
                            &QSymElem::basis_element(QBasis::RSDI, c.clone())
                        ),
                        delta
                    );
                }
            }
        }
    }

    #[test]
    fn involutions() {
        assert_eq!(b(NBasis::H, comp![2, 1]).psi(), b(NBasis::E, comp![2, 1]));
        assert_eq!(b(NBasis::H, comp![2, 1]).rho(), b(NBasis::H, comp![1, 2]));
        assert_eq!(b(NBasis::H, comp![2, 1]).omega(), b(NBasis::E, comp![1, 2]));
        for n in 0..=5 {
            for a in compositions_of(n) {
                let imm = b(NBasis::IMM, a.clone());
                assert!(imm.psi().same_function(&imm.convert(NBasis::H).psi()));
                assert!(imm.rho().rho().same_function(&imm));
                assert!(imm.omega().same_function(&imm.convert(NBasis::R).omega()));
            }
        }
    }

    #[test]
    fn psi_on_ribbons_matches_h_route() {
        for n in 0..=5 {
            for a in compositions_of(n) {
                let r = b(NBasis::R, a.clone());
                assert!(r.psi().same_function(&r.convert(NBasis::H).psi()));
                assert!(r.rho().same_function(&r.convert(NBasis::H).rho()));
            }
        }
    }

    #[test]
    fn pairing_is_psi_invariant() {
        for n in 0..=5 {
            for a in compositions_of(n) {
                for c in compositions_of(n) {
                    let g = b(NBasis::H, a.clone())
                        .add(&b(NBasis::R, c.clone()).scale(&BigInt::from(3)))
                        .unwrap();
                    let f = QSymElem::basis_element(QBasis::F, c.clone())
                        .add(&QSymElem::basis_element(QBasis::M, a.clone()))
                        .unwrap();
                    assert_eq!(pair(&g.psi(), &f.psi()), pair(&g, &f));
                }
            }
        }
    }

    #[test]
    fn forgetful_map() {
        let chi = b(NBasis::H, comp![1, 3]).chi();
        assert_eq!(chi.basis(), SBasis::Hc);
        assert_eq!(
            chi.terms()
                .keys()
                .map(|p| p.parts().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![3, 1]]
        );
        let chi = b(NBasis::E, comp![2, 1, 2]).chi();
        assert_eq!(chi.basis(), SBasis::Ec);
        assert_eq!(
            chi.terms()
                .keys()
                .map(|p| p.parts().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![2, 2, 1]]
        );
        for n in 0..=5 {
            for a in compositions_of(n) {
                let h = b(NBasis::H, a.clone());
                assert!(h.psi().chi().same_function(&h.chi().omega()));
            }
        }
    }

    #[test]
    fn column_and_row_immaculates() {
        for n in 1..=7 {
            assert!(b(NBasis::IMM, Composition::ones(n)).same_function(&NSymElem::e(n as i64)));
            assert!(b(NBasis::RSIMM, Composition::ones(n)).same_function(&NSymElem::h(n as i64)));
        }
    }

    #[test]
    fn h_and_e_expansions_into_immaculates() {
        for n in 1..=5 {
            let k = matrix(MatrixName::K, n);
            let ks = matrix(MatrixName::KStar, n);
            for beta in compositions_of(n) {
                let h = b(NBasis::H, beta.clone());
                let e = b(NBasis::E, beta.clone());
                let via_k = NSymElem::new(
                    NBasis::IMM,
                    n,
                    k.index.iter().map(|a| (a.clone(), k.get(a, &beta))),
                )
                .unwrap();
                let via_k_rs = NSymElem::new(
                    NBasis::RSIMM,
                    n,
                    k.index.iter().map(|a| (a.clone(), k.get(a, &beta))),
                )
                .unwrap();
                let via_ks = NSymElem::new(
                    NBasis::RSIMM,
                    n,
                    ks.index.iter().map(|a| (a.clone(), ks.get(a, &beta))),
                )
                .unwrap();
                assert!(h.same_function(&via_k));
                assert!(e.same_function(&via_k_rs));
                assert!(h.same_function(&via_ks));
            }
        }
    }
}
