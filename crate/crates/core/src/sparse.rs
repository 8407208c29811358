use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::compositions::Composition;

/// Composition-indexed integer coefficients with no stored zeros.
pub type Terms = BTreeMap<Composition, BigInt>;

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `Σ_key coeff(key) · image(key)` for a linear map given on basis elements.
pub(crate) fn apply_linear<F>(terms: &Terms, mut image: F) -> Terms
where
    F: FnMut(&Composition) -> Terms,
{
    let mut out = Terms::new();
    for (k, c) in terms {
        for (k2, c2) in image(k) {
            accumulate(&mut out, k2, c * c2);
        }
    }
    out
}

pub(crate) fn add_scaled(out: &mut Terms, other: &Terms, scale: &BigInt) {
    for (k, c) in other {
        accumulate(out, k.clone(), c * scale);
    }
}

pub(crate) fn write_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    name: &str,
    terms: &BTreeMap<K, BigInt>,
) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (k, c)) in terms.iter().rev().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        if c.is_one() {
            write!(f, "{name}{k}")?;
        } else {
            write!(f, "{c}*{name}{k}")?;
        }
    }
    Ok(())
}
