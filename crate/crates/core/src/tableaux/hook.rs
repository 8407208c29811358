use std::fmt;
use std::str::FromStr;

use crate::compositions::Composition;
use crate::error::{Error, Result};

use super::{Shape, Tableau};

/// A letter of the two-alphabet order `1 < 2 < … < ℓ < 1' < 2' < … < k'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    // field order gives the derived ordering: all unprimed before all primed
    primed: bool,
    value: u32,
}

impl Letter {
    pub fn unprimed(value: u32) -> Self {
        Letter {
            primed: false,
            value,
        }
    }

    pub fn primed(value: u32) -> Self {
        Letter {
            primed: true,
            value,
        }
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn value(&self) -> u32 {
        self.value
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let value: u32 = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad hook entry {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse("hook entries are positive".into()));
        }
        Ok(Letter { primed, value })
    }
}

/// `next` may follow `prev` along a row: weak among unprimed, strict among primed.
fn row_step_ok(prev: Letter, next: Letter) -> bool {
    if prev.primed && next.primed {
        prev < next
    } else {
        prev <= next
    }
}

/// `next` may sit above `prev` in the first column: strict among unprimed,
/// weak among primed.
fn column_step_ok(prev: Letter, next: Letter) -> bool {
    if !prev.primed && !next.primed {
        prev < next
    } else {
        prev <= next
    }
}

/// A semistandard hook immaculate tableau of straight shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookTableau {
    shape: Composition,
    rows: Vec<Vec<Letter>>,
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl HookTableau {
    /// Builds and validates a hook tableau from bottom-to-top rows.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        let t = HookTableau { shape, rows };
        if !t.is_valid() {
            return Err(Error::InvalidTableau(
                "not a hook immaculate tableau".into(),
            ));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn is_valid(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.windows(2).all(|w| row_step_ok(w[0], w[1])))
            && self
                .rows
                .windows(2)
                .all(|w| column_step_ok(w[0][0], w[1][0]))
    }

    /// Replace unprimed letters in immaculate reading order (top row first,
    /// left to right), then primed letters in row-strict reading order
    /// (bottom row first, right to left), numbering past the unprimed ones.
    pub fn standardize(&self) -> Tableau {
        let mut unprimed = Vec::new();
        for r in (0..self.rows.len()).rev() {
            for (i, l) in self.rows[r].iter().enumerate() {
                if !l.primed {
                    unprimed.push((r, i));
                }
            }
        }
        let mut primed = Vec::new();
        for r in 0..self.rows.len() {
            for (i, l) in self.rows[r].iter().enumerate().rev() {
                if l.primed {
                    primed.push((r, i));
                }
            }
        }
        unprimed.sort_by_key(|&(r, i)| self.rows[r][i]);
        primed.sort_by_key(|&(r, i)| self.rows[r][i]);
        let mut rows: Vec<Vec<u32>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (label, (r, i)) in unprimed.into_iter().chain(primed).enumerate() {
            rows[r][i] = label as u32 + 1;
        }
        Tableau {
            shape: Shape::straight(self.shape.clone()),
            rows,
        }
    }

    /// Exponents of `x_1..x_l` and `y_1..y_k` in the content monomial.
    pub fn content(&self, l: usize, k: usize) -> (Vec<u32>, Vec<u32>) {
        let mut x = vec![0; l];
        let mut y = vec![0; k];
        for letter in self.rows.iter().flatten() {
            let v = letter.value as usize - 1;
            if letter.primed {
                y[v] += 1;
            } else {
                x[v] += 1;
            }
        }
        (x, y)
    }

    /// Splits into the unprimed immaculate tableau of shape `γ` and the primed
    /// skew row-strict tableau of shape `α/γ` (primes dropped).
    pub fn split(&self) -> (Tableau, Tableau) {
        let gamma: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|l| !l.primed).count())
            .take_while(|&c| c > 0)
            .collect();
        let gamma = Composition::new(gamma).expect("positive by construction");
        let lower = self.rows[..gamma.len()]
            .iter()
            .map(|r| r.iter().filter(|l| !l.primed).map(|l| l.value).collect())
            .collect();
        let upper = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|l| l.primed).map(|l| l.value).collect())
            .collect();
        let s = Tableau {
            shape: Shape::straight(gamma.clone()),
            rows: lower,
        };
        let u = Tableau {
            shape: Shape {
                outer: self.shape.clone(),
                inner: gamma,
            },
            rows: upper,
        };
        (s, u)
    }
}

/// All hook immaculate tableaux of shape `alpha` over `{1..l} ∪ {1'..k'}`,
/// filled bottom row first, left to right, letters ascending.
pub fn enumerate_hook(alpha: &Composition, l: u32, k: u32) -> Vec<HookTableau> {
    let alphabet: Vec<Letter> = (1..=l)
        .map(Letter::unprimed)
        .chain((1..=k).map(Letter::primed))
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); alpha.len()];
    fn rec(
        alpha: &Composition,
        alphabet: &[Letter],
        r: usize,
        rows: &mut Vec<Vec<Letter>>,
        out: &mut Vec<HookTableau>,
    ) {
        if r == alpha.len() {
            out.push(HookTableau {
                shape: alpha.clone(),
                rows: rows.clone(),
            });
            return;
        }
        if rows[r].len() == alpha.part(r) {
            rec(alpha, alphabet, r + 1, rows, out);
            return;
        }
        for &letter in alphabet {
            let ok = match rows[r].last() {
                Some(&prev) => row_step_ok(prev, letter),
                None => r == 0 || column_step_ok(rows[r - 1][0], letter),
            };
            if !ok {
                continue;
            }
            rows[r].push(letter);
            rec(alpha, alphabet, r, rows, out);
            rows[r].pop();
        }
    }
    rec(alpha, &alphabet, 0, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::compositions::compositions_of;
    use crate::tableaux::TableauKind;

    fn parse_rows(rows: &[&[&str]]) -> Vec<Vec<Letter>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
            .collect()
    }

    fn sample_hook() -> HookTableau {
        HookTableau::new(parse_rows(&[
            &["1", "1", "3"],
            &["2"],
            &["3", "1'"],
            &["1'", "3'", "4'", "5'"],
            &["1'", "2'", "4'"],
        ]))
        .unwrap()
    }

    #[test]
    fn sample_content_and_standardization() {
        let t = sample_hook();
        assert_eq!(t.shape(), &comp![3, 1, 2, 4, 3]);
        let (x, y) = t.content(3, 5);
        assert_eq!(x, vec![2, 1, 2]);
        assert_eq!(y, vec![3, 1, 1, 2, 1]);
        let s = t.standardize();
        assert_eq!(
            s.rows(),
            &[
                vec![1, 2, 5],
                vec![3],
                vec![4, 6],
                vec![7, 10, 11, 13],
                vec![8, 9, 12]
            ]
        );
        assert!(s.is_standard() && s.is_immaculate());
        assert_eq!(
            s.descents(TableauKind::Immaculate).unwrap().elements,
            vec![2, 3, 5, 6, 7, 11]
        );
    }

    #[test]
    fn small_enumeration() {
        let all = enumerate_hook(&comp![1, 1], 1, 1);
        let rows: Vec<_> = all.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                parse_rows(&[&["1"], &["1'"]]),
                parse_rows(&[&["1'"], &["1'"]])
            ]
        );
    }

    #[test]
    fn standardization_is_standard_immaculate() {
        for n in 1..=4 {
            for a in compositions_of(n) {
                for t in enumerate_hook(&a, 2, 2) {
                    let s = t.standardize();
                    assert!(s.is_standard() && s.is_immaculate(), "{t}");
                }
            }
        }
    }

    #[test]
    fn letters_parse_and_order() {
        assert!("0".parse::<Letter>().is_err());
        assert!("x'".parse::<Letter>().is_err());
        assert!(Letter::unprimed(9) < Letter::primed(1));
        assert_eq!(Letter::primed(3).to_string(), "3'");
    }

    #[test]
    fn invalid_hook_rejected() {
        assert!(HookTableau::new(parse_rows(&[&["1"], &["1"]])).is_err());
        assert!(HookTableau::new(parse_rows(&[&["1'", "1'"]])).is_err());
        assert!(HookTableau::new(parse_rows(&[&["1'"], &["1"]])).is_err());
    }
}
