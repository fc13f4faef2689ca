//! Unimodality of coefficient rows and the two injections behind
//! `q_{n,0} <= q_{n,1}` and `q_{n,1} <= q_{n,2}`.

use num_bigint::BigInt;

use crate::enumerate::{classify, SeqClass};
use crate::error::{invalid, Result};
use crate::recur::QTable;
use crate::seq::{Element, Mode, SignedSeq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodalVerdict {
    pub unimodal: bool,
    /// Smallest index attaining the maximum, when unimodal.
    pub mode_index: Option<usize>,
    /// First adjacent pair `(j, j+1)` that rises after a fall.
    pub first_violation: Option<(usize, usize)>,
}

pub fn is_unimodal<T: Ord>(seq: &[T]) -> Result<UnimodalVerdict> {
    if seq.is_empty() {
        return invalid("unimodality of an empty sequence is undefined");
    }
    let mut falling = false;
    for (j, w) in seq.windows(2).enumerate() {
        if w[0] > w[1] {
            falling = true;
        } else if falling && w[0] < w[1] {
            return Ok(UnimodalVerdict {
                unimodal: false,
                mode_index: None,
                first_violation: Some((j, j + 1)),
            });
        }
    }
    let max = seq.iter().max().expect("nonempty");
    let mode = seq.iter().position(|x| x == max);
    Ok(UnimodalVerdict {
        unimodal: true,
        mode_index: mode,
        first_violation: None,
    })
}

/// `P(n, m) = q_{n,m} - q_{n,m-1}`.
pub fn delta_p(n: usize, m: i64) -> BigInt {
    QTable::build(n).delta_p(n, m)
}

fn set_bar(entries: &mut [Element], value: u32, barred: bool) {
    let e = entries
        .iter_mut()
        .find(|e| e.value == value)
        .expect("value present in ground set");
    e.barred = barred;
}

fn followed_by(entries: &[Element], a: Element, b: Element) -> bool {
    entries.windows(2).any(|w| w[0] == a && w[1] == b)
}

/// Bars the entry `n` of an unsigned relative derangement on `[n]`.
pub fn inj_zero_to_one(s: &SignedSeq) -> Result<SignedSeq> {
    if s.mode() != Mode::Classical || s.is_empty() || !classify(s, SeqClass::RelativeDerangement)? {
        return invalid(format!(
            "{s} is not a nonempty unsigned relative derangement"
        ));
    }
    let mut entries = s.entries().to_vec();
    set_bar(&mut entries, s.len() as u32, true);
    Ok(SignedSeq::from_parts_unchecked(entries, Mode::Classical))
}

/// Which branch of the one-bar to two-bar map fired, keyed by the value of
/// the single bar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OneToTwoCase {
    /// Bar below `n - 1`.
    BelowSecond,
    /// Bar on `n - 1`.
    Second,
    /// Bar on `n`.
    Top,
}

/// One-bar SRD on `[n]`, `n >= 4`, to a two-bar SRD:
///
/// * bar below `n-1`: bar `n`;
/// * bar on `n-1`: bar `n`, unless `(n-1)'` is followed by `n`, then bar 1;
/// * bar on `n`: if `n-1` is followed by `n'`, bar 1; otherwise unbar `n`
///   and bar `n-1` and 1.
pub fn inj_one_to_two_case(s: &SignedSeq) -> Result<(OneToTwoCase, SignedSeq)> {
    let n = s.len() as u32;
    if s.mode() != Mode::Classical || n < 4 {
        return invalid("the one-to-two bar injection needs a classical sequence with n >= 4");
    }
    if s.bar_count() != 1 || !classify(s, SeqClass::SrdClassical)? {
        return invalid(format!("{s} is not an SRD with exactly one bar"));
    }
    let mut e = s.entries().to_vec();
    let top_bar = e.iter().find(|x| x.barred).expect("one bar").value;
    let case = if top_bar < n - 1 {
        set_bar(&mut e, n, true);
        OneToTwoCase::BelowSecond
    } else if top_bar == n - 1 {
        if followed_by(&e, Element::bar(n - 1), Element::plain(n)) {
            set_bar(&mut e, 1, true);
        } else {
            set_bar(&mut e, n, true);
        }
        OneToTwoCase::Second
    } else {
        if followed_by(&e, Element::plain(n - 1), Element::bar(n)) {
            set_bar(&mut e, 1, true);
        } else {
            set_bar(&mut e, n, false);
            set_bar(&mut e, n - 1, true);
            set_bar(&mut e, 1, true);
        }
        OneToTwoCase::Top
    };
    Ok((case, SignedSeq::from_parts_unchecked(e, Mode::Classical)))
}

pub fn inj_one_to_two(s: &SignedSeq) -> Result<SignedSeq> {
    inj_one_to_two_case(s).map(|(_, out)| out)
}
