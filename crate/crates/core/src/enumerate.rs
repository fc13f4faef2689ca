//! Brute-force oracle over signed arrangements.
//!
//! Two generators live here. [`gen_signed_seqs`] streams every signed
//! arrangement with no filtering at all. The class walkers ([`fold_class`]
//! and everything built on it) run a depth-first search that rejects a
//! prefix as soon as it can no longer belong to the requested class; the
//! search is split by the first free entry so partitions can run on a rayon
//! pool. Both produce sequences in the same lexicographic order: by value,
//! unbarred before barred, position by position.
//!
//! The oracle never consults the recursions in [`crate::recur`].

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::poly::IntPoly;
use crate::seq::{self, Element, Mode, SignedSeq};

/// Every sequence class the oracle can count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqClass {
    /// Unsigned permutation with no fixed point.
    Derangement,
    /// Unsigned permutation where no `i` is immediately followed by `i+1`.
    RelativeDerangement,
    /// Signed permutation with no unbarred fixed point.
    SignedDerangement,
    /// No `i, i+1` and no `i', (i+1)'` adjacency.
    SrdClassical,
    /// Gamma reading: no `i, i+1` and no `(i+1)', i'` adjacency.
    SrdGamma,
    /// Exactly one forbidden adjacency under the classical reading.
    TildeOneViolation,
    /// Classical SRD whose first entry is not an unbarred 1.
    SrdClassicalFirstNotOne,
}

impl SeqClass {
    pub const ALL: [SeqClass; 7] = [
        SeqClass::Derangement,
        SeqClass::RelativeDerangement,
        SeqClass::SignedDerangement,
        SeqClass::SrdClassical,
        SeqClass::SrdGamma,
        SeqClass::TildeOneViolation,
        SeqClass::SrdClassicalFirstNotOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeqClass::Derangement => "derangement",
            SeqClass::RelativeDerangement => "relative_derangement",
            SeqClass::SignedDerangement => "signed_derangement",
            SeqClass::SrdClassical => "srd_classical",
            SeqClass::SrdGamma => "srd_gamma",
            SeqClass::TildeOneViolation => "tilde_one_violation",
            SeqClass::SrdClassicalFirstNotOne => "srd_classical_first_not_one",
        }
    }

    /// Mode in which the walkers enumerate this class.
    pub fn native_mode(self) -> Mode {
        match self {
            SeqClass::SrdGamma => Mode::Gamma,
            _ => Mode::Classical,
        }
    }

    /// Whether [`classify`] accepts sequences of `mode` for this class.
    /// Adjacency-only classes read either mode; positional ones need `[n]`.
    pub fn accepts_mode(self, mode: Mode) -> bool {
        match self {
            SeqClass::SrdClassical | SeqClass::TildeOneViolation => true,
            SeqClass::SrdGamma => mode == Mode::Gamma,
            _ => mode == Mode::Classical,
        }
    }

    fn allows_bars(self) -> bool {
        !matches!(self, SeqClass::Derangement | SeqClass::RelativeDerangement)
    }

    fn reading(self) -> Option<Reading> {
        match self {
            SeqClass::Derangement | SeqClass::SignedDerangement => None,
            SeqClass::SrdGamma => Some(Reading::Gamma),
            _ => Some(Reading::Classical),
        }
    }

    fn required_violations(self) -> u8 {
        match self {
            SeqClass::TildeOneViolation => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SeqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "tilde" {
            return Ok(SeqClass::TildeOneViolation);
        }
        SeqClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence class {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reading {
    Classical,
    Gamma,
}

/// `a` immediately followed by `b` is forbidden in a classical SRD.
pub fn classical_forbidden(a: Element, b: Element) -> bool {
    a.barred == b.barred && b.value == a.value + 1
}

/// `a` immediately followed by `b` is forbidden in a gamma-form SRD.
pub fn gamma_forbidden(a: Element, b: Element) -> bool {
    match (a.barred, b.barred) {
        (false, false) => b.value == a.value + 1,
        (true, true) => a.value == b.value + 1,
        _ => false,
    }
}

impl Reading {
    fn forbidden(self, a: Element, b: Element) -> bool {
        match self {
            Reading::Classical => classical_forbidden(a, b),
            Reading::Gamma => gamma_forbidden(a, b),
        }
    }
}

/// Number of barred entries.
pub fn bar_count(s: &SignedSeq) -> usize {
    s.bar_count()
}

/// Number of adjacent pairs forbidden under the classical reading.
pub fn classical_violations(entries: &[Element]) -> usize {
    entries
        .windows(2)
        .filter(|w| classical_forbidden(w[0], w[1]))
        .count()
}

/// Membership test on a complete sequence. This is deliberately written
/// over whole sequences, independent of the pruning walkers.
pub fn classify(s: &SignedSeq, class: SeqClass) -> Result<bool> {
    if !class.accepts_mode(s.mode()) {
        return invalid(format!(
            "class {class} is not defined on {:?} sequences",
            s.mode()
        ));
    }
    let e = s.entries();
    let unsigned = s.bar_count() == 0;
    let no_fixed_plain = || {
        e.iter()
            .enumerate()
            .all(|(i, x)| x.barred || x.value as usize != i + 1)
    };
    Ok(match class {
        SeqClass::Derangement => unsigned && no_fixed_plain(),
        SeqClass::RelativeDerangement => unsigned && classical_violations(e) == 0,
        SeqClass::SignedDerangement => no_fixed_plain(),
        SeqClass::SrdClassical => classical_violations(e) == 0,
        SeqClass::SrdGamma => !e.windows(2).any(|w| gamma_forbidden(w[0], w[1])),
        SeqClass::TildeOneViolation => classical_violations(e) == 1,
        SeqClass::SrdClassicalFirstNotOne => {
            classical_violations(e) == 0 && e.first() != Some(&Element::plain(1))
        }
    })
}

/// Streams all `2^n n!` signed arrangements of `[n]` (classical) or of
/// `{0..n}` with an unbarred 0 in front (gamma), in lexicographic order.
pub fn gen_signed_seqs(n: usize, mode: Mode) -> SignedSeqs {
    SignedSeqs {
        n,
        mode,
        keys: Vec::new(),
        used: vec![false; n + 1],
        started: false,
        done: false,
    }
}

/// Iterator returned by [`gen_signed_seqs`].
///
/// Each free position holds a key `2(v-1) + bar`; advancing finds the
/// rightmost position that can take a larger unused key and refills the
/// suffix with the smallest unused values.
#[derive(Debug, Clone)]
pub struct SignedSeqs {
    n: usize,
    mode: Mode,
    keys: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl SignedSeqs {
    fn value_of(key: usize) -> usize {
        key / 2 + 1
    }

    fn fill_from(&mut self, pos: usize) {
        self.keys.truncate(pos);
        for v in 1..=self.n {
            if !self.used[v] {
                self.used[v] = true;
                self.keys.push(2 * (v - 1));
            }
        }
    }

    fn current(&self) -> SignedSeq {
        let head = match self.mode {
            Mode::Classical => None,
            Mode::Gamma => Some(Element::plain(0)),
        };
        let entries = head
            .into_iter()
            .chain(
                self.keys
                    .iter()
                    .map(|&k| Element::new(Self::value_of(k) as u32, k % 2 == 1)),
            )
            .collect();
        SignedSeq::from_parts_unchecked(entries, self.mode)
    }

    fn advance(&mut self) -> bool {
        for pos in (0..self.keys.len()).rev() {
            let old = self.keys[pos];
            self.used[Self::value_of(old)] = false;
            for k in old + 1..2 * self.n {
                let v = Self::value_of(k);
                if !self.used[v] {
                    self.used[v] = true;
                    self.keys[pos] = k;
                    self.fill_from(pos + 1);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for SignedSeqs {
    type Item = SignedSeq;

    fn next(&mut self) -> Option<SignedSeq> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// How the class walkers split their work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Partitions by first free entry on the rayon pool. Without the
    /// `parallel` feature this runs sequentially.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

struct Walker<'f, F> {
    n: usize,
    class: SeqClass,
    reading: Option<Reading>,
    budget: u8,
    fold: &'f F,
}

impl<F> Walker<'_, F> {
    /// Violation count after appending `e`, or `None` if the prefix dies.
    fn admits(&self, entries: &[Element], e: Element, violations: u8) -> Option<u8> {
        let pos = entries.len();
        let positional_ok = match self.class {
            SeqClass::Derangement | SeqClass::SignedDerangement => {
                e.barred || e.value as usize != pos + 1
            }
            SeqClass::SrdClassicalFirstNotOne => pos != 0 || e != Element::plain(1),
            _ => true,
        };
        if !positional_ok {
            return None;
        }
        let mut v = violations;
        if let (Some(r), Some(&prev)) = (self.reading, entries.last()) {
            if r.forbidden(prev, e) {
                v += 1;
            }
        }
        (v <= self.budget).then_some(v)
    }

    fn candidates(&self) -> impl Iterator<Item = Element> + '_ {
        let bars: &[bool] = if self.class.allows_bars() {
            &[false, true]
        } else {
            &[false]
        };
        (1..=self.n as u32).flat_map(move |v| bars.iter().map(move |&b| Element::new(v, b)))
    }

    fn descend<T>(&self, entries: &mut Vec<Element>, used: &mut [bool], violations: u8, acc: T) -> T
    where
        F: Fn(T, &[Element]) -> T,
    {
        if used.iter().skip(1).all(|&u| u) {
            return if violations == self.class.required_violations() {
                (self.fold)(acc, entries)
            } else {
                acc
            };
        }
        let mut acc = acc;
        for e in self.candidates() {
            if used[e.value as usize] {
                continue;
            }
            if let Some(v) = self.admits(entries, e, violations) {
                used[e.value as usize] = true;
                entries.push(e);
                acc = self.descend(entries, used, v, acc);
                entries.pop();
                used[e.value as usize] = false;
            }
        }
        acc
    }

    fn prefix(&self) -> Vec<Element> {
        match self.class.native_mode() {
            Mode::Classical => Vec::new(),
            Mode::Gamma => vec![Element::plain(0)],
        }
    }

    /// Runs the subtree whose first free entry is `first` (or the whole
    /// tree when `first` is `None`, used for `n = 0`).
    fn run_partition<T>(&self, first: Option<Element>, acc: T) -> T
    where
        F: Fn(T, &[Element]) -> T,
    {
        let mut entries = self.prefix();
        let mut used = vec![false; self.n + 1];
        let Some(e) = first else {
            return self.descend(&mut entries, &mut used, 0, acc);
        };
        match self.admits(&entries, e, 0) {
            Some(v) => {
                used[e.value as usize] = true;
                entries.push(e);
                self.descend(&mut entries, &mut used, v, acc)
            }
            None => acc,
        }
    }
}

/// Folds over every sequence of `class` on ground `n`, in lexicographic
/// order. The slice handed to `fold` includes the leading 0 in gamma mode.
///
/// `reduce` must be associative; partitions are combined left to right, so
/// order-sensitive folds (collecting into a `Vec`) give the same result
/// under both strategies.
pub fn fold_class<T, I, F, R>(
    n: usize,
    class: SeqClass,
    strategy: Strategy,
    identity: I,
    fold: F,
    reduce: R,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &[Element]) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let walker = Walker {
        n,
        class,
        reading: class.reading(),
        budget: class.required_violations(),
        fold: &fold,
    };
    if n == 0 {
        return walker.run_partition(None, identity());
    }
    let firsts: Vec<Element> = walker.candidates().collect();
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            firsts
                .into_par_iter()
                .map(|e| walker.run_partition(Some(e), identity()))
                .reduce(&identity, &reduce)
        }
        _ => firsts
            .into_iter()
            .map(|e| walker.run_partition(Some(e), identity()))
            .fold(identity(), &reduce),
    }
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Bar-count histogram of `class`, index = number of bars.
pub fn bar_histogram(n: usize, class: SeqClass, strategy: Strategy) -> Vec<u64> {
    fold_class(
        n,
        class,
        strategy,
        || vec![0u64; n + 2],
        |mut acc, e| {
            acc[seq::bar_count(e)] += 1;
            acc
        },
        add_counts,
    )
}

/// `sum t^(bars)` over the sequences of `class` on ground `n`. For
/// [`SeqClass::SrdClassical`] this is `Q_n^B(t)` counted directly.
pub fn brute_poly(n: usize, class: SeqClass) -> IntPoly {
    brute_poly_with(n, class, Strategy::default())
}

pub fn brute_poly_with(n: usize, class: SeqClass, strategy: Strategy) -> IntPoly {
    IntPoly::from_counts(&bar_histogram(n, class, strategy))
}

pub fn count_class(n: usize, class: SeqClass) -> u64 {
    bar_histogram(n, class, Strategy::default()).iter().sum()
}

/// All members of `class` on ground `n`, in lexicographic order.
pub fn collect_class(n: usize, class: SeqClass) -> Vec<SignedSeq> {
    let mode = class.native_mode();
    fold_class(
        n,
        class,
        Strategy::default(),
        Vec::new,
        |mut acc, e| {
            acc.push(SignedSeq::from_parts_unchecked(e.to_vec(), mode));
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

/// Counts of gamma-form SRDs starting with an unbarred 0, split by the last
/// entry: `fhat` counts those ending in an unbarred `n` (type 2), `f` the
/// rest (type 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FCounts {
    pub f: u64,
    pub fhat: u64,
}

pub fn brute_f(n: usize) -> Result<FCounts> {
    brute_f_with(n, Strategy::default())
}

pub fn brute_f_with(n: usize, strategy: Strategy) -> Result<FCounts> {
    if n == 0 {
        return invalid("type-1/2 SRD counts need n >= 1");
    }
    let last = Element::plain(n as u32);
    let (f, fhat) = fold_class(
        n,
        SeqClass::SrdGamma,
        strategy,
        || (0u64, 0u64),
        |(f, fhat), e| {
            if e.last() == Some(&last) {
                (f, fhat + 1)
            } else {
                (f + 1, fhat)
            }
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    Ok(FCounts { f, fhat })
}
