//! Commutative symmetric functions indexed by partitions: complete and
//! elementary monomials, Schur functions via Jacobi-Trudi, and the embedding
//! into `QSym`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::compositions::{compositions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::nsym::{NBasis, NSymElem};
use crate::perm::signed_permutations;
use crate::qsym::{QBasis, QSymElem};
use crate::sparse::{accumulate, write_terms, Terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SBasis {
    /// Commutative complete homogeneous `h_λ`.
    Hc,
    /// Commutative elementary `e_λ`.
    Ec,
    /// Schur functions `s_λ`.
    S,
}

impl std::str::FromStr for SBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Hc" | "h" => Ok(SBasis::Hc),
            "Ec" | "e" => Ok(SBasis::Ec),
            "S" | "s" => Ok(SBasis::S),
            _ => Err(Error::Parse(format!("unknown Sym basis {s:?}"))),
        }
    }
}

impl fmt::Display for SBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SBasis::Hc => "Hc",
            SBasis::Ec => "Ec",
            SBasis::S => "S",
        };
        f.write_str(s)
    }
}

/// A homogeneous symmetric function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymElem {
    basis: SBasis,
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            SBasis::Hc => "h",
            SBasis::Ec => "e",
            SBasis::S => "s",
        };
        write_terms(f, name, &self.terms)
    }
}

impl SymElem {
    pub fn new<I>(basis: SBasis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            if k.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: k.size(),
                });
            }
            accumulate(&mut map, k, c);
        }
        Ok(SymElem {
            basis,
            degree,
            terms: map,
        })
    }

    /// Sorts each composition index into a partition.
    pub fn from_compositions(basis: SBasis, degree: usize, terms: Terms) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k.sort_to_partition(), c);
        }
        SymElem {
            basis,
            degree,
            terms: map,
        }
    }

    pub fn basis_element(basis: SBasis, index: Partition) -> Self {
        let degree = index.size();
        let mut terms = BTreeMap::new();
        terms.insert(index, BigInt::one());
        SymElem {
            basis,
            degree,
            terms,
        }
    }

    pub fn basis(&self) -> SBasis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> SymElem {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            accumulate(&mut terms, k.clone(), v * c);
        }
        SymElem {
            basis: self.basis,
            degree: self.degree,
            terms,
        }
    }

    /// Sum, expressed in `Hc` unless both operands share a basis.
    pub fn add(&self, other: &SymElem) -> Result<SymElem> {
        let (a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_hc(), other.to_hc())
        };
        if !a.is_zero() && !b.is_zero() && a.degree != b.degree {
            return Err(Error::DegreeMismatch {
                left: a.degree,
                right: b.degree,
            });
        }
        let degree = if a.is_zero() { b.degree } else { a.degree };
        let mut terms = a.terms;
        for (k, c) in b.terms {
            accumulate(&mut terms, k, c);
        }
        Ok(SymElem {
            basis: a.basis,
            degree,
            terms,
        })
    }

    /// Rewrites in the commutative `h` basis.
    pub fn to_hc(&self) -> SymElem {
        let mut out = SymElem {
            basis: SBasis::Hc,
            degree: self.degree,
            terms: BTreeMap::new(),
        };
        for (lambda, c) in &self.terms {
            let image = match self.basis {
                SBasis::Hc => SymElem::basis_element(SBasis::Hc, lambda.clone()),
                SBasis::Ec => NSymElem::basis_element(NBasis::E, lambda.as_composition().clone())
                    .convert(NBasis::H)
                    .chi(),
                SBasis::S => {
                    schur_jt(lambda, &Partition::empty()).expect("empty partition is contained")
                }
            };
            for (k, v) in image.terms {
                accumulate(&mut out.terms, k, c * v);
            }
        }
        out
    }

    pub fn same_function(&self, other: &SymElem) -> bool {
        let a = self.to_hc();
        let b = other.to_hc();
        a.terms == b.terms && (a.is_zero() || a.degree == b.degree)
    }

    /// `ω(h_λ) = e_λ`, `ω(s_λ) = s_{λ'}`.
    pub fn omega(&self) -> SymElem {
        let (basis, f): (SBasis, fn(&Partition) -> Partition) = match self.basis {
            SBasis::Hc => (SBasis::Ec, Partition::clone),
            SBasis::Ec => (SBasis::Hc, Partition::clone),
            SBasis::S => (SBasis::S, Partition::conjugate),
        };
        let terms = self.terms.iter().map(|(k, c)| (f(k), c.clone())).collect();
        SymElem {
            basis,
            degree: self.degree,
            terms,
        }
    }

    /// The image in `QSym`, in the monomial basis.
    pub fn to_qsym(&self) -> QSymElem {
        let src = if self.basis == SBasis::S {
            self.to_hc()
        } else {
            self.clone()
        };
        let mut out = QSymElem::zero(QBasis::M, self.degree);
        for (lambda, c) in &src.terms {
            let mut prod = QSymElem::one();
            for &p in lambda.parts() {
                let factor = match src.basis {
                    SBasis::Ec => QSymElem::basis_element(QBasis::M, Composition::ones(p)),
                    _ => QSymElem::new(
                        QBasis::M,
                        p,
                        compositions_of(p).into_iter().map(|b| (b, BigInt::one())),
                    )
                    .expect("homogeneous"),
                };
                prod = prod.mul(&factor);
            }
            out = out.add(&prod.scale(c)).expect("homogeneous");
        }
        out
    }
}

/// `det(h_{λ_i − ν_j − i + j})` for any nonnegative integer vector `ν` of
/// length at most `ℓ(λ)`.
fn jacobi_trudi_det(lambda: &Partition, nu: &[usize]) -> SymElem {
    let m = lambda.len();
    let mut terms: BTreeMap<Partition, BigInt> = BTreeMap::new();
    'perm: for (sigma, sign) in signed_permutations(m) {
        let mut parts = Vec::with_capacity(m);
        for (i, &j) in sigma.iter().enumerate() {
            let v = lambda.part(i) as i64 - nu.get(j).copied().unwrap_or(0) as i64 - i as i64
                + j as i64;
            if v < 0 {
                continue 'perm;
            }
            if v > 0 {
                parts.push(v as usize);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        accumulate(
            &mut terms,
            Partition::new(parts).expect("sorted"),
            BigInt::from(sign),
        );
    }
    let degree = lambda.size() - nu.iter().sum::<usize>();
    SymElem {
        basis: SBasis::Hc,
        degree,
        terms,
    }
}

/// `s_{λ/μ} = det(h_{λ_i − μ_j − i + j})`, in the `Hc` basis.
pub fn schur_jt(lambda: &Partition, mu: &Partition) -> Result<SymElem> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            outer: lambda.parts().to_vec(),
            inner: mu.parts().to_vec(),
        });
    }
    Ok(jacobi_trudi_det(lambda, mu.parts()))
}

/// `s_{λ/α} = det(h_{λ_i − α_j − i + j})` for a composition `α ⊆ λ`.
pub fn schur_of_composition(lambda: &Partition, alpha: &Composition) -> Result<SymElem> {
    if !lambda.as_composition().contains(alpha) {
        return Err(Error::NotContained {
            outer: lambda.parts().to_vec(),
            inner: alpha.parts().to_vec(),
        });
    }
    Ok(jacobi_trudi_det(lambda, alpha.parts()))
}

/// `σ(λ) = (λ_{σ_1} + 1 − σ_1, …, λ_{σ_k} + k − σ_k)` with `σ` given by its
/// 0-based images; `None` when some entry is not positive.
pub fn sigma_action(lambda: &Partition, sigma: &[usize]) -> Option<Composition> {
    let parts: Option<Vec<usize>> = sigma
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let v = lambda.part(s) as i64 + i as i64 - s as i64;
            (v > 0).then_some(v as usize)
        })
        .collect();
    Composition::new(parts?).ok()
}

/// `Σ_σ sgn(σ) x_{σ(λ)}` over `σ ∈ S_{ℓ(λ)}`, with null `σ(λ)` dropped.
pub fn signed_sigma_sum(lambda: &Partition) -> Vec<(Composition, i32)> {
    signed_permutations(lambda.len())
        .into_iter()
        .filter_map(|(sigma, sign)| sigma_action(lambda, &sigma).map(|c| (c, sign)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::compositions::partitions_of;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn hc(terms: &[(&[usize], i64)]) -> SymElem {
        let degree = terms[0].0.iter().sum();
        SymElem::new(
            SBasis::Hc,
            degree,
            terms.iter().map(|(p, c)| (part(p), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(
            schur_jt(&part(&[2, 1]), &Partition::empty()).unwrap(),
            hc(&[(&[2, 1], 1), (&[3], -1)])
        );
        assert_eq!(
            schur_jt(&part(&[1, 1]), &Partition::empty()).unwrap(),
            hc(&[(&[1, 1], 1), (&[2], -1)])
        );
        assert_eq!(
            schur_jt(&part(&[2, 2]), &part(&[1])).unwrap(),
            hc(&[(&[2, 1], 1), (&[3], -1)])
        );
        assert!(schur_jt(&part(&[2]), &part(&[1, 1])).is_err());
    }

    #[test]
    fn composition_determinants() {
        assert!(schur_of_composition(&part(&[3, 3]), &comp![1, 2])
            .unwrap()
            .is_zero());
        assert_eq!(
            schur_of_composition(&part(&[2, 2]), &comp![1, 1]).unwrap(),
            schur_jt(&part(&[2, 2]), &part(&[1, 1])).unwrap()
        );
        let lambda = part(&[4, 3]);
        let alpha = comp![1, 3];
        let mu = sigma_action(&part(&[2, 2]), &[1, 0]).unwrap();
        assert_eq!(mu, alpha);
        let s = schur_of_composition(&lambda, &alpha).unwrap();
        assert!(s.same_function(
            &schur_jt(&lambda, &part(&[2, 2]))
                .unwrap()
                .scale(&BigInt::from(-1))
        ));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_action(&part(&[2, 2]), &[1, 0]), Some(comp![1, 3]));
        assert_eq!(sigma_action(&part(&[3, 1]), &[0, 1]), Some(comp![3, 1]));
        assert_eq!(sigma_action(&part(&[3, 1]), &[1, 0]), None);
    }

    #[test]
    fn embedding_examples() {
        let h2 = SymElem::basis_element(SBasis::Hc, part(&[2]));
        let want = QSymElem::new(
            QBasis::M,
            2,
            [(comp![2], BigInt::one()), (comp![1, 1], BigInt::one())],
        )
        .unwrap();
        assert_eq!(h2.to_qsym(), want);
        let e2 = SymElem::basis_element(SBasis::Ec, part(&[2]));
        assert_eq!(
            e2.to_qsym(),
            QSymElem::basis_element(QBasis::M, comp![1, 1])
        );
        let s11 = SymElem::basis_element(SBasis::S, part(&[1, 1]));
        assert_eq!(
            s11.to_qsym(),
            QSymElem::basis_element(QBasis::M, comp![1, 1])
        );
    }

    #[test]
    fn omega_matches_qsym_omega() {
        for n in 0..=5 {
            for lambda in partitions_of(n) {
                for basis in [SBasis::Hc, SBasis::Ec, SBasis::S] {
                    let x = SymElem::basis_element(basis, lambda.clone());
                    assert!(
                        x.omega().to_qsym().same_function(&x.to_qsym().omega()),
                        "{basis} {lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_is_the_dual_immaculate_alternant() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let s = SymElem::basis_element(SBasis::S, lambda.clone()).to_qsym();
                let mut di = QSymElem::zero(QBasis::DI, n);
                let mut rs = QSymElem::zero(QBasis::RSDI, n);
                for (c, sign) in signed_sigma_sum(&lambda) {
                    di = di
                        .add(
                            &QSymElem::basis_element(QBasis::DI, c.clone())
                                .scale(&BigInt::from(sign)),
                        )
                        .unwrap();
                    rs = rs
                        .add(&QSymElem::basis_element(QBasis::RSDI, c).scale(&BigInt::from(sign)))
                        .unwrap();
                }
                assert!(s.same_function(&di));
                let s_conj = SymElem::basis_element(SBasis::S, lambda.conjugate()).to_qsym();
                assert!(s_conj.same_function(&rs));
            }
        }
    }
}
