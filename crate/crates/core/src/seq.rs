//! Signed sequences: the shared data model for permutations with bars.
//!
//! A sequence is either *classical* (values `1..=n`) or in *gamma* form
//! (values `0..=n`). In gamma form an unbarred `i` stands for the ordered
//! pair `(i, -i-1)` and a barred `i` for `(-i-1, i)`; see
//! [`SignedSeq::gamma_pair_entries`].

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Ground-set convention of a [`SignedSeq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Values `1..=n`.
    Classical,
    /// Values `0..=n`.
    Gamma,
}

/// One entry of a signed sequence.
///
/// The derived ordering is by value, then unbarred before barred, which is
/// the enumeration order used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub value: u32,
    pub barred: bool,
}

impl Element {
    pub const fn new(value: u32, barred: bool) -> Self {
        Element { value, barred }
    }

    pub const fn plain(value: u32) -> Self {
        Element::new(value, false)
    }

    pub const fn bar(value: u32) -> Self {
        Element::new(value, true)
    }

    /// Same value with the bar flipped.
    pub const fn conjugate(self) -> Self {
        Element::new(self.value, !self.barred)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let (digits, barred) = match tok.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (tok, false),
        };
        digits
            .parse::<u32>()
            .map(|value| Element::new(value, barred))
            .map_err(|_| Error::Parse(format!("bad element {tok:?}")))
    }
}

/// An ordered signed arrangement in which every value of the ground set
/// occurs exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSeq {
    entries: Vec<Element>,
    mode: Mode,
}

impl SignedSeq {
    /// Validates that `entries` use each ground value exactly once.
    pub fn new(entries: Vec<Element>, mode: Mode) -> Result<Self> {
        let len = entries.len();
        let lo = match mode {
            Mode::Classical => 1,
            Mode::Gamma => {
                if len == 0 {
                    return invalid("a gamma-form sequence contains at least the value 0");
                }
                0
            }
        };
        let mut seen = vec![false; len];
        for e in &entries {
            let idx = e.value.checked_sub(lo).map(|i| i as usize);
            match idx {
                Some(i) if i < len && !seen[i] => seen[i] = true,
                _ => {
                    return invalid(format!(
                        "value {} repeated or outside the ground set of a length-{len} {mode:?} sequence",
                        e.value
                    ))
                }
            }
        }
        Ok(SignedSeq { entries, mode })
    }

    /// Skips validation; callers guarantee the permutation invariant.
    pub(crate) fn from_parts_unchecked(entries: Vec<Element>, mode: Mode) -> Self {
        debug_assert!(SignedSeq::new(entries.clone(), mode).is_ok());
        SignedSeq { entries, mode }
    }

    /// The empty classical sequence on `[0]`.
    pub fn empty() -> Self {
        SignedSeq {
            entries: Vec::new(),
            mode: Mode::Classical,
        }
    }

    /// Parses whitespace-separated tokens, a trailing `'` marking a bar:
    /// `"1' 3 2' 4"`.
    pub fn parse(text: &str, mode: Mode) -> Result<Self> {
        let entries = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Element>>>()?;
        SignedSeq::new(entries, mode)
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Element> {
        self.entries
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The `n` of the ground set `[n]` or `{0..n}`.
    pub fn ground(&self) -> usize {
        match self.mode {
            Mode::Classical => self.entries.len(),
            Mode::Gamma => self.entries.len() - 1,
        }
    }

    /// Number of barred entries.
    pub fn bar_count(&self) -> usize {
        bar_count(&self.entries)
    }

    /// Position of the entry with the given value, barred or not.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.entries.iter().position(|e| e.value == value)
    }

    /// Left and right entries of the ordered pairs this gamma-form sequence
    /// stands for: unbarred `i` is `(i, -i-1)`, barred `i` is `(-i-1, i)`.
    pub fn gamma_pair_entries(&self) -> Result<Vec<(i64, i64)>> {
        if self.mode != Mode::Gamma {
            return invalid("pair entries are only defined in gamma form");
        }
        Ok(self
            .entries
            .iter()
            .map(|e| {
                let (pos, neg) = (i64::from(e.value), -i64::from(e.value) - 1);
                if e.barred {
                    (neg, pos)
                } else {
                    (pos, neg)
                }
            })
            .collect())
    }
}

pub(crate) fn bar_count(entries: &[Element]) -> usize {
    entries.iter().filter(|e| e.barred).count()
}

impl fmt::Display for SignedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let s = SignedSeq::parse("1' 3 2' 4", Mode::Classical).unwrap();
        assert_eq!(s.ground(), 4);
        assert_eq!(s.bar_count(), 2);
        assert_eq!(s.to_string(), "1' 3 2' 4");
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignedSeq::parse("1 1", Mode::Classical).is_err());
        assert!(SignedSeq::parse("0 1", Mode::Classical).is_err());
        assert!(SignedSeq::parse("1 3", Mode::Classical).is_err());
        assert!(SignedSeq::parse("1 2", Mode::Gamma).is_err());
        assert!(SignedSeq::parse("", Mode::Gamma).is_err());
        assert!(SignedSeq::parse("1x", Mode::Classical).is_err());
    }

    #[test]
    fn gamma_ground_and_pairs() {
        let s = SignedSeq::parse("0 2' 1'", Mode::Gamma).unwrap();
        assert_eq!(s.ground(), 2);
        assert_eq!(s.bar_count(), 2);
        assert_eq!(
            s.gamma_pair_entries().unwrap(),
            vec![(0, -1), (-3, 2), (-2, 1)]
        );
    }

    #[test]
    fn element_order_is_value_then_bar() {
        let mut v = vec![
            Element::bar(2),
            Element::plain(2),
            Element::bar(1),
            Element::plain(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Element::plain(1),
                Element::bar(1),
                Element::plain(2),
                Element::bar(2)
            ]
        );
    }
}
