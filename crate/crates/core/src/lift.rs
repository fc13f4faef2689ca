//! Structural maps on signed sequences: lifting an entry into a violating
//! block, removing the maximum, and conjugate-reverse.

use std::collections::HashSet;

use crate::enumerate::{self, classify, SeqClass};
use crate::error::{invalid, Result};
use crate::poly::IntPoly;
use crate::seq::{Element, Mode, SignedSeq};

/// `i + 1` keeping the bar: `i' + 1 = (i+1)'`.
pub fn bar_add_one(e: Element) -> Element {
    Element::new(e.value + 1, e.barred)
}

fn require_classical_srd(s: &SignedSeq) -> Result<()> {
    if s.mode() != Mode::Classical || !classify(s, SeqClass::SrdClassical)? {
        return invalid(format!(
            "{s} is not a classical signed relative derangement"
        ));
    }
    Ok(())
}

/// Lifts position `pos`: every value above `s[pos]` moves up by one and
/// `s[pos]` becomes the block `s[pos], s[pos] + 1`.
fn lift_at(s: &SignedSeq, pos: usize) -> SignedSeq {
    let pivot = s.entries()[pos];
    let mut out = Vec::with_capacity(s.len() + 1);
    for (i, &e) in s.entries().iter().enumerate() {
        if i == pos {
            out.push(pivot);
            out.push(bar_add_one(pivot));
        } else if e.value > pivot.value {
            out.push(bar_add_one(e));
        } else {
            out.push(e);
        }
    }
    SignedSeq::from_parts_unchecked(out, Mode::Classical)
}

/// The lifted sequences of an SRD on `[n]`, indexed by the lifted position.
/// All `n` images lie on `[n+1]` and carry exactly one forbidden adjacency.
pub fn s_up(s: &SignedSeq) -> Result<Vec<SignedSeq>> {
    require_classical_srd(s)?;
    Ok((0..s.len()).map(|pos| lift_at(s, pos)).collect())
}

/// [`s_up`] as a set.
pub fn s_up_set(s: &SignedSeq) -> Result<HashSet<SignedSeq>> {
    Ok(s_up(s)?.into_iter().collect())
}

/// Removes the entry of value `n` (barred or not) from a classical
/// sequence on `[n]`.
pub fn drop_max(s: &SignedSeq) -> Result<SignedSeq> {
    if s.mode() != Mode::Classical || s.is_empty() {
        return invalid("drop_max needs a nonempty classical sequence");
    }
    let n = s.len() as u32;
    let entries = s
        .entries()
        .iter()
        .copied()
        .filter(|e| e.value != n)
        .collect();
    Ok(SignedSeq::from_parts_unchecked(entries, Mode::Classical))
}

/// Where the maximum-removal of an SRD lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DropMaxOutcome {
    Srd,
    Tilde,
    Neither,
}

pub fn drop_max_outcome(s: &SignedSeq) -> Result<DropMaxOutcome> {
    let d = drop_max(s)?;
    let srd = classify(&d, SeqClass::SrdClassical)?;
    let tilde = classify(&d, SeqClass::TildeOneViolation)?;
    Ok(match (srd, tilde) {
        (true, false) => DropMaxOutcome::Srd,
        (false, true) => DropMaxOutcome::Tilde,
        _ => DropMaxOutcome::Neither,
    })
}

/// Bar polynomial of the lifted images compared with
/// `b t^(b+1) + (n - b) t^b`.
pub fn lemma_s_check(s: &SignedSeq) -> Result<bool> {
    let images = s_up(s)?;
    let lhs: IntPoly = images
        .iter()
        .map(|x| IntPoly::monomial(1, x.bar_count()))
        .sum();
    let b = s.bar_count();
    let n = s.len();
    let rhs = &IntPoly::monomial(b as i64, b + 1) + &IntPoly::monomial((n - b) as i64, b);
    Ok(lhs == rhs)
}

/// Outcome of comparing the lifted images of all SRDs on `[n-1]` with the
/// one-violation class on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildePartition {
    pub n: usize,
    /// Total number of images, counted with multiplicity.
    pub image_count: usize,
    pub tilde_count: usize,
    /// No image repeats, within one lift or across lifts.
    pub disjoint: bool,
    /// The distinct images are exactly the one-violation class.
    pub covers: bool,
}

impl TildePartition {
    pub fn holds(&self) -> bool {
        self.disjoint && self.covers
    }
}

pub fn tilde_partition(n: usize) -> Result<TildePartition> {
    if !(2..=7).contains(&n) {
        return invalid(format!(
            "tilde partition check supports 2 <= n <= 7, got {n}"
        ));
    }
    let mut seen = HashSet::new();
    let mut image_count = 0;
    let mut disjoint = true;
    for pi in enumerate::collect_class(n - 1, SeqClass::SrdClassical) {
        for img in s_up(&pi)? {
            image_count += 1;
            disjoint &= seen.insert(img);
        }
    }
    let tilde = enumerate::collect_class(n, SeqClass::TildeOneViolation);
    let covers = tilde.len() == seen.len() && tilde.iter().all(|x| seen.contains(x));
    Ok(TildePartition {
        n,
        image_count,
        tilde_count: tilde.len(),
        disjoint,
        covers,
    })
}

pub fn tilde_partition_check(n: usize) -> Result<bool> {
    Ok(tilde_partition(n)?.holds())
}

/// Reverses a gamma-form sequence and flips every bar.
pub fn conj_reverse(s: &SignedSeq) -> Result<SignedSeq> {
    if s.mode() != Mode::Gamma {
        return invalid("conjugate-reverse is only closed on gamma-form SRDs");
    }
    let entries = s.entries().iter().rev().map(|e| e.conjugate()).collect();
    Ok(SignedSeq::from_parts_unchecked(entries, Mode::Gamma))
}
