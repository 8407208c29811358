//! Adjoint operators and the noncommutative Bernstein creation operators.

use num_bigint::BigInt;

use crate::compositions::{compositions_of, Composition};
use crate::nsym::{pair, NBasis, NSymElem};
use crate::qsym::{QBasis, QSymElem};

/// `f^⊥(g) = Σ_β ⟨g, f·M_β⟩ h_β`, the adjoint of multiplication by `f`.
pub fn perp(f: &QSymElem, g: &NSymElem) -> NSymElem {
    if f.is_zero() || g.is_zero() || f.degree() > g.degree() {
        return NSymElem::zero(NBasis::H, g.degree().saturating_sub(f.degree()));
    }
    let d = g.degree() - f.degree();
    let terms = compositions_of(d).into_iter().map(|beta| {
        let c = pair(g, &f.mul(&QSymElem::basis_element(QBasis::M, beta.clone())));
        (beta, c)
    });
    NSymElem::new(NBasis::H, d, terms).expect("homogeneous")
}

fn fundamental(c: Composition) -> QSymElem {
    QSymElem::basis_element(QBasis::F, c)
}

fn sign(i: usize) -> BigInt {
    BigInt::from(if i.is_multiple_of(2) { 1 } else { -1 })
}

fn output_degree(m: i64, g: &NSymElem) -> Option<usize> {
    usize::try_from(m + g.degree() as i64).ok()
}

/// `Σ_i (−1)^i h_{m+i} F_{(1^i)}^⊥(g)`, truncated at `i = deg g`.
pub fn bernstein(m: i64, g: &NSymElem) -> NSymElem {
    let Some(d) = output_degree(m, g) else {
        return NSymElem::zero(NBasis::H, 0);
    };
    let mut out = NSymElem::zero(NBasis::H, d);
    for i in 0..=g.degree() {
        let term = NSymElem::h(m + i as i64).mul(&perp(&fundamental(Composition::ones(i)), g));
        out = out.add(&term.scale(&sign(i))).expect("homogeneous");
    }
    out
}

/// `Σ_i (−1)^i e_{m+i} F_{(i)}^⊥(g)`, truncated at `i = deg g`.
pub fn bernstein_rs(m: i64, g: &NSymElem) -> NSymElem {
    let Some(d) = output_degree(m, g) else {
        return NSymElem::zero(NBasis::E, 0);
    };
    let mut out = NSymElem::zero(NBasis::E, d);
    for i in 0..=g.degree() {
        let term = NSymElem::e(m + i as i64).mul(&perp(&fundamental(Composition::row(i)), g));
        out = out.add(&term.scale(&sign(i))).expect("homogeneous");
    }
    out
}

/// `𝔅_{α_1} ⋯ 𝔅_{α_m}(1)`, in the `H` basis.
pub fn immaculate(alpha: &[i64]) -> NSymElem {
    alpha
        .iter()
        .rev()
        .fold(NSymElem::one(), |g, &a| bernstein(a, &g))
        .convert(NBasis::H)
}

/// `𝔅^{rs}_{α_1} ⋯ 𝔅^{rs}_{α_m}(1)`, in the `E` basis.
pub fn rs_immaculate(alpha: &[i64]) -> NSymElem {
    alpha
        .iter()
        .rev()
        .fold(NSymElem::one(), |g, &a| bernstein_rs(a, &g))
        .convert(NBasis::E)
}

/// `Σ_i 𝔅_{m+i} F_{(i)}^⊥(g)`, which equals `h_m · g`.
pub fn left_mult_h_via_ops(m: i64, g: &NSymElem) -> NSymElem {
    let mut out = NSymElem::zero(NBasis::H, output_degree(m, g).unwrap_or(0));
    for i in 0..=g.degree() {
        let inner = perp(&fundamental(Composition::row(i)), g);
        out = out
            .add(&bernstein(m + i as i64, &inner))
            .expect("homogeneous");
    }
    out
}

/// `Σ_i 𝔅^{rs}_{m+i} F_{(1^i)}^⊥(g)`, which equals `e_m · g`.
pub fn left_mult_e_via_ops(m: i64, g: &NSymElem) -> NSymElem {
    let mut out = NSymElem::zero(NBasis::E, output_degree(m, g).unwrap_or(0));
    for i in 0..=g.degree() {
        let inner = perp(&fundamental(Composition::ones(i)), g);
        out = out
            .add(&bernstein_rs(m + i as i64, &inner))
            .expect("homogeneous");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use num_traits::One;

    fn h(a: Composition) -> NSymElem {
        NSymElem::basis_element(NBasis::H, a)
    }

    fn e(a: Composition) -> NSymElem {
        NSymElem::basis_element(NBasis::E, a)
    }

    fn hsum(terms: &[(Composition, i64)]) -> NSymElem {
        let d = terms[0].0.size();
        NSymElem::new(
            NBasis::H,
            d,
            terms.iter().map(|(k, c)| (k.clone(), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn perp_examples() {
        assert_eq!(perp(&fundamental(comp![1]), &h(comp![3])), h(comp![2]));
        assert!(perp(&fundamental(comp![2]), &e(comp![1])).is_zero());
        assert!(perp(&fundamental(comp![1, 1]), &h(comp![4])).is_zero());
        assert!(perp(&QSymElem::one(), &h(comp![2, 1])).same_function(&h(comp![2, 1])));
    }

    #[test]
    fn bernstein_examples() {
        for m in 1..=4 {
            assert_eq!(bernstein(m, &NSymElem::one()), NSymElem::h(m));
            assert!(bernstein_rs(m, &NSymElem::one()).same_function(&NSymElem::e(m)));
        }
        for a in 1..=3 {
            for b in 1..=3 {
                let (au, bu) = (a as usize, b as usize);
                let mut want = vec![(Composition::new(vec![au, bu]).unwrap(), 1)];
                let second = if bu > 1 {
                    vec![au + 1, bu - 1]
                } else {
                    vec![au + 1]
                };
                want.push((Composition::new(second).unwrap(), -1));
                assert!(bernstein(a, &NSymElem::h(b)).same_function(&hsum(&want)));
                let want_e = NSymElem::new(
                    NBasis::E,
                    au + bu,
                    want.iter().map(|(k, c)| (k.clone(), BigInt::from(*c))),
                )
                .unwrap();
                assert!(bernstein_rs(a, &NSymElem::e(b)).same_function(&want_e));
            }
        }
        assert!(bernstein(1, &NSymElem::h(2))
            .same_function(&hsum(&[(comp![1, 2], 1), (comp![2, 1], -1)])));
    }

    #[test]
    fn creation_examples() {
        assert!(immaculate(&[1, 2]).same_function(&hsum(&[(comp![1, 2], 1), (comp![2, 1], -1)])));
        assert_eq!(immaculate(&[2]), h(comp![2]));
        for n in 1..=5 {
            assert!(rs_immaculate(&vec![1; n]).same_function(&NSymElem::h(n as i64)));
        }
        assert!(immaculate(&[]).same_function(&NSymElem::one()));
        assert!(immaculate(&[-3]).is_zero());
    }

    #[test]
    fn left_multiplication_small() {
        assert!(left_mult_h_via_ops(1, &NSymElem::one()).same_function(&h(comp![1])));
        assert!(left_mult_h_via_ops(2, &h(comp![1])).same_function(&h(comp![2, 1])));
        assert!(left_mult_e_via_ops(2, &e(comp![1])).same_function(&e(comp![2, 1])));
    }

    #[test]
    fn perp_is_adjoint() {
        for n in 1..=4 {
            for a in compositions_of(n) {
                for k in 0..=n {
                    for f in compositions_of(k) {
                        let f = fundamental(f);
                        let g = h(a.clone());
                        let p = perp(&f, &g);
                        for b in compositions_of(n - k) {
                            let mb = QSymElem::basis_element(QBasis::M, b.clone());
                            assert_eq!(pair(&p, &mb), pair(&g, &f.mul(&mb)));
                        }
                    }
                }
            }
        }
        assert_eq!(pair(&NSymElem::one(), &QSymElem::one()), BigInt::one());
    }
}
