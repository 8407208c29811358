//! Exact sparse polynomials in a fixed, finite number of commuting variables,
//! and the two-alphabet variant used for hook functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Sparse polynomial in `x_1, …, x_nvars` with big-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.terms.insert(vec![0; nvars], BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        crate::sparse::accumulate(&mut self.terms, exps, c);
    }

    /// Adds the monomial `∏ x_{i}` over the (1-based) variable indices in `word`.
    pub fn add_word(&mut self, word: impl IntoIterator<Item = usize>, c: BigInt) {
        let mut exps = vec![0u32; self.nvars];
        for v in word {
            exps[v - 1] += 1;
        }
        self.add_term(exps, c);
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Writes `c·∏ name_v^p`, leaving out unit coefficients and exponents.
fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    vars: &[(&str, &[u32])],
) -> fmt::Result {
    let factors: Vec<String> = vars
        .iter()
        .flat_map(|(name, exps)| {
            exps.iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(move |(v, &p)| match p {
                    1 => format!("{name}{}", v + 1),
                    _ => format!("{name}{}^{p}", v + 1),
                })
        })
        .collect();
    let negative = c.sign() == Sign::Minus;
    let magnitude = c.magnitude();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if factors.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{}", factors.join("*"))
    } else {
        write!(f, "{magnitude}*{}", factors.join("*"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            write_monomial(f, i == 0, c, &[("x", e)])?;
        }
        Ok(())
    }
}

/// Polynomial in two ordered alphabets `X = x_1..x_l` and `Y = y_1..y_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    l: usize,
    k: usize,
    poly: Poly,
}

impl BiPoly {
    pub fn zero(l: usize, k: usize) -> Self {
        BiPoly {
            l,
            k,
            poly: Poly::zero(l + k),
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add_term(&mut self, x: &[u32], y: &[u32], c: BigInt) {
        assert_eq!((x.len(), y.len()), (self.l, self.k));
        let mut e = x.to_vec();
        e.extend_from_slice(y);
        self.poly.add_term(e, c);
    }

    pub fn coeff(&self, x: &[u32], y: &[u32]) -> BigInt {
        let mut e = x.to_vec();
        e.extend_from_slice(y);
        self.poly.coeff(&e)
    }

    /// Iterates `(x-exponents, y-exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &BigInt)> + '_ {
        self.poly
            .terms
            .iter()
            .map(move |(e, c)| (&e[..self.l], &e[self.l..], c))
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        assert_eq!((self.l, self.k), (other.l, other.k));
        BiPoly {
            l: self.l,
            k: self.k,
            poly: self.poly.add(&other.poly),
        }
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        BiPoly {
            l: self.l,
            k: self.k,
            poly: self.poly.scale(c),
        }
    }

    /// `p(X)·q(Y)` for `p` in `l` variables and `q` in `k` variables.
    pub fn from_product(px: &Poly, qy: &Poly) -> BiPoly {
        let (l, k) = (px.nvars(), qy.nvars());
        let mut out = BiPoly::zero(l, k);
        for (ex, cx) in px.terms() {
            for (ey, cy) in qy.terms() {
                out.add_term(ex, ey, cx * cy);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, y, c)) in self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .enumerate()
        {
            write_monomial(f, i == 0, c, &[("x", x), ("y", y)])?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exps: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut out = Poly::zero(raw.nvars);
        for t in raw.terms {
            if t.exps.len() != raw.nvars {
                return Err(D::Error::custom(
                    "exponent vector length does not match variable count",
                ));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(t.exps, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct BiTermJson {
    x: Vec<u32>,
    y: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BiPolyJson {
    l: usize,
    k: usize,
    terms: Vec<BiTermJson>,
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BiPolyJson {
            l: self.l,
            k: self.k,
            terms: self
                .terms()
                .map(|(x, y, c)| BiTermJson {
                    x: x.to_vec(),
                    y: y.to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BiPolyJson::deserialize(d)?;
        let mut out = BiPoly::zero(raw.l, raw.k);
        for t in raw.terms {
            if t.x.len() != raw.l || t.y.len() != raw.k {
                return Err(D::Error::custom(
                    "exponent vector length does not match alphabet size",
                ));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(&t.x, &t.y, c);
        }
        Ok(out)
    }
}
