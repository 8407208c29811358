//! JSON encodings. Coefficients are decimal strings; terms are listed in
//! increasing lexicographic order of their indices.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::compositions::{Composition, Partition};
use crate::nsym::{NBasis, NSymElem};
use crate::qsym::{BasisMatrix, MatrixName, QBasis, QSymElem, TensorElem};
use crate::symfun::{SBasis, SymElem};
use crate::tableaux::{HookTableau, Letter, Shape, Tableau};

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    space: String,
    basis: String,
    degree: usize,
    terms: Vec<TermJson>,
}

fn parse_coeff<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.parse()
        .map_err(|_| E::custom(format!("bad coefficient {s:?}")))
}

fn element_json<'a, K: 'a + Clone + Into<Vec<usize>>>(
    space: &str,
    basis: String,
    degree: usize,
    terms: impl Iterator<Item = (&'a K, &'a BigInt)>,
) -> ElementJson {
    ElementJson {
        space: space.into(),
        basis,
        degree,
        terms: terms
            .map(|(k, c)| TermJson {
                index: k.clone().into(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn expect_space<E: serde::de::Error>(raw: &ElementJson, space: &str) -> Result<(), E> {
    if raw.space == space {
        Ok(())
    } else {
        Err(E::custom(format!(
            "expected space {space:?}, found {:?}",
            raw.space
        )))
    }
}

fn composition_terms<E: serde::de::Error>(
    raw: ElementJson,
) -> Result<Vec<(Composition, BigInt)>, E> {
    raw.terms
        .into_iter()
        .map(|t| {
            Ok((
                Composition::new(t.index).map_err(E::custom)?,
                parse_coeff(&t.coeff)?,
            ))
        })
        .collect()
}

impl Serialize for QSymElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        element_json(
            "QSym",
            self.basis().to_string(),
            self.degree(),
            self.terms().iter(),
        )
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        expect_space(&raw, "QSym")?;
        let basis: QBasis = raw.basis.parse().map_err(D::Error::custom)?;
        let degree = raw.degree;
        QSymElem::new(basis, degree, composition_terms::<D::Error>(raw)?).map_err(D::Error::custom)
    }
}

impl Serialize for NSymElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        element_json(
            "NSym",
            self.basis().to_string(),
            self.degree(),
            self.terms().iter(),
        )
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NSymElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        expect_space(&raw, "NSym")?;
        let basis: NBasis = raw.basis.parse().map_err(D::Error::custom)?;
        let degree = raw.degree;
        NSymElem::new(basis, degree, composition_terms::<D::Error>(raw)?).map_err(D::Error::custom)
    }
}

impl Serialize for SymElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        element_json(
            "Sym",
            self.basis().to_string(),
            self.degree(),
            self.terms().iter(),
        )
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        expect_space(&raw, "Sym")?;
        let basis: SBasis = raw.basis.parse().map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                Ok((
                    Partition::new(t.index).map_err(D::Error::custom)?,
                    parse_coeff(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        SymElem::new(basis, raw.degree, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    left: Vec<usize>,
    right: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    left: QBasis,
    right: QBasis,
    terms: Vec<TensorTermJson>,
}

impl Serialize for TensorElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TensorJson {
            left: self.left,
            right: self.right,
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| TensorTermJson {
                    left: a.clone().into(),
                    right: b.clone().into(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = TensorJson::deserialize(d)?;
        let mut out = TensorElem::zero(raw.left, raw.right);
        for t in raw.terms {
            let a = Composition::new(t.left).map_err(D::Error::custom)?;
            let b = Composition::new(t.right).map_err(D::Error::custom)?;
            out.add_term(a, b, parse_coeff(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    name: MatrixName,
    n: usize,
    index: &'a [Composition],
    entries: Vec<Vec<String>>,
}

impl Serialize for BasisMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            name: self.name,
            n: self.n,
            index: &self.index,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Composition,
    inner: Composition,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson {
            outer: self.shape().outer().clone(),
            inner: self.shape().inner().clone(),
            rows: self.rows().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let shape = Shape::skew(raw.outer, raw.inner).map_err(D::Error::custom)?;
        Tableau::new(shape, raw.rows).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HookJson {
    shape: Composition,
    rows: Vec<Vec<String>>,
}

impl Serialize for HookTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HookJson {
            shape: self.shape().clone(),
            rows: self
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HookTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = HookJson::deserialize(d)?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Letter>().map_err(D::Error::custom))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Letter>>, D::Error>>()?;
        let t = HookTableau::new(rows).map_err(D::Error::custom)?;
        if *t.shape() != raw.shape {
            return Err(D::Error::custom("rows do not match the stated shape"));
        }
        Ok(t)
    }
}
