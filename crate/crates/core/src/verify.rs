//! Verification suites: every identity is evaluated on recursion values up
//! to one bound and against the brute-force oracle up to another. A
//! failing identity is reported with its first counterexample, never raised.

#![allow(clippy::needless_range_loop)]

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{self, classify, FCounts, SeqClass, Strategy};
use crate::error::{invalid, Error, Result};
use crate::lift::{self, DropMaxOutcome};
use crate::poly::IntPoly;
use crate::recur::{self, QTable, QbTable, QbarTable};
use crate::seq::{Element, Mode, SignedSeq};
use crate::series::{self, TruncSeries};
use crate::stats;
use crate::unimodal::{self, OneToTwoCase};
use crate::Rational;

/// Largest ground size the oracle is asked to enumerate.
pub const ORACLE_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    /// Inclusive range of `n` checked.
    pub n_range: (usize, usize),
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.n_range;
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} n={lo}..{hi}", self.id)?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

struct Check {
    id: String,
    range: (usize, usize),
    counterexample: Option<String>,
}

impl Check {
    fn new(id: &str, lo: usize, hi: usize) -> Self {
        Check {
            id: id.to_owned(),
            range: (lo, hi),
            counterexample: None,
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(detail());
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, at: impl fmt::Display, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.expect(ok, || format!("{at}: {lhs} != {rhs}"));
    }

    fn done(self) -> IdentityReport {
        IdentityReport {
            id: self.id,
            n_range: self.range,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Lemmas,
    Injections,
    Series,
    Stats,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "identities" => Suite::Identities,
            "lemmas" => Suite::Lemmas,
            "injections" => Suite::Injections,
            "series" => Suite::Series,
            "stats" => Suite::Stats,
            "all" => Suite::All,
            _ => return invalid(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max_rec: usize,
    pub n_max_oracle: usize,
    pub series_order: usize,
    /// Adds 1 to the constant term of `Q_3^B` before the series check;
    /// exercises the failure path.
    pub corrupt_q3: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max_rec: 30,
            n_max_oracle: 6,
            series_order: 20,
            corrupt_q3: false,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    if cfg.n_max_oracle > ORACLE_MAX {
        return invalid(format!("n_max_oracle must be at most {ORACLE_MAX}"));
    }
    let mut out = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Identities) {
        out.extend(verify_identities(cfg.n_max_rec, cfg.n_max_oracle)?);
    }
    if want(Suite::Lemmas) {
        out.extend(verify_lemmas(cfg.n_max_oracle)?);
    }
    if want(Suite::Injections) {
        out.extend(verify_injections(cfg.n_max_rec, cfg.n_max_oracle)?);
    }
    if want(Suite::Series) {
        let mut f = series::build_series(cfg.series_order.max(3));
        if cfg.corrupt_q3 {
            f.coeffs_mut()[3] = f.coeff(3) + &IntPoly::one();
        }
        out.extend(verify_series_of(&f));
    }
    if want(Suite::Stats) {
        out.extend(verify_stats(cfg.n_max_rec));
    }
    Ok(out)
}

/// Oracle counts for one ground size.
struct OracleRow {
    srd: IntPoly,
    first_not_one: IntPoly,
    derangements: BigInt,
    relative: BigInt,
    signed_derangements: BigInt,
    f: Option<FCounts>,
}

fn oracle_rows(k: usize) -> Vec<OracleRow> {
    (0..=k)
        .map(|n| OracleRow {
            srd: enumerate::brute_poly(n, SeqClass::SrdClassical),
            first_not_one: enumerate::brute_poly(n, SeqClass::SrdClassicalFirstNotOne),
            derangements: enumerate::count_class(n, SeqClass::Derangement).into(),
            relative: enumerate::count_class(n, SeqClass::RelativeDerangement).into(),
            signed_derangements: enumerate::count_class(n, SeqClass::SignedDerangement).into(),
            f: enumerate::brute_f(n).ok(),
        })
        .collect()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Signed derangements by inclusion-exclusion over fixed points:
/// `sum_k (-1)^k C(n,k) 2^(n-k) (n-k)!`.
fn signed_derangements_closed_form(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        let rest = n - k;
        let fact: BigInt = (1..=rest).map(BigInt::from).product();
        let term = &binom * (BigInt::one() << rest) * fact;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    total
}

/// Right side of the seven-term coefficient recursion evaluated on
/// arbitrary rows.
fn coefficient_rhs(rows: &[IntPoly], n: usize, m: i64) -> BigInt {
    let q = |x: usize, y: i64| {
        if y < 0 {
            BigInt::zero()
        } else {
            rows[x].coeff(y as usize)
        }
    };
    let ni = n as i64;
    big(ni - 1) * q(n - 1, m - 1)
        + big(ni - 1) * q(n - 1, m)
        + big(m - 2) * q(n - 2, m - 2)
        + big(3 * ni - 5) * q(n - 2, m - 1)
        + big(ni - m - 2) * q(n - 2, m)
        + big(2 * m - 4) * q(n - 3, m - 2)
        + big(2 * ni - 2 * m - 4) * q(n - 3, m - 1)
}

/// Recursion-level checks up to `n_max_rec`, oracle-level up to
/// `n_max_oracle`.
pub fn verify_identities(n_max_rec: usize, n_max_oracle: usize) -> Result<Vec<IdentityReport>> {
    if n_max_oracle > ORACLE_MAX {
        return invalid(format!("n_max_oracle must be at most {ORACLE_MAX}"));
    }
    let (nr, k) = (n_max_rec.max(3), n_max_oracle);
    let d = recur::d_seq(nr);
    let q = recur::q_seq(nr);
    let qb = recur::qb_seq(nr);
    let db = recur::db_seq(nr);
    let f = recur::f_seq(nr);
    let polys = QbTable::build(nr);
    let totals = polys.totals();
    let qtab = QTable::build(nr);
    let qbar = QbarTable::build(nr.max(k));
    let oracle = oracle_rows(k);
    let mut reports = Vec::new();

    // D_n
    let mut c = Check::new("derangements:rec", 1, nr);
    for n in 1..=nr {
        let sign = if n % 2 == 0 { big(1) } else { big(-1) };
        c.expect_eq(
            format!("n={n} D_n vs nD_(n-1)+(-1)^n"),
            d[n].clone(),
            big(n as i64) * &d[n - 1] + sign,
        );
    }
    reports.push(c.done());
    let mut c = Check::new("derangements:oracle", 1, k);
    for n in 1..=k {
        c.expect_eq(
            format!("n={n}"),
            d[n].clone(),
            oracle[n].derangements.clone(),
        );
    }
    reports.push(c.done());

    // Q_n = D_n + D_{n-1}
    let mut c = Check::new("relative-vs-derangements:rec", 2, nr);
    for n in 2..=nr {
        c.expect_eq(format!("n={n}"), q[n].clone(), &d[n] + &d[n - 1]);
    }
    reports.push(c.done());
    let mut c = Check::new("relative-vs-derangements:oracle", 2, k);
    for n in 2..=k {
        let rhs = &oracle[n].derangements + &oracle[n - 1].derangements;
        c.expect_eq(format!("n={n}"), oracle[n].relative.clone(), rhs);
    }
    reports.push(c.done());

    // Q_n^B = D_n^B + D_{n-1}^B
    let mut c = Check::new("signed-relative-vs-signed-derangements:rec", 2, nr);
    for n in 2..=nr {
        c.expect_eq(format!("n={n}"), totals[n].clone(), &db[n] + &db[n - 1]);
    }
    reports.push(c.done());
    let mut c = Check::new("signed-relative-vs-signed-derangements:oracle", 2, k);
    for n in 2..=k {
        let rhs = &oracle[n].signed_derangements + &oracle[n - 1].signed_derangements;
        c.expect_eq(format!("n={n}"), oracle[n].srd.eval_i64(1), rhs);
    }
    reports.push(c.done());

    // Q_n recursion
    let mut c = Check::new("relative-recursion:rec", 1, nr);
    for n in 1..=nr {
        c.expect_eq(
            format!("n={n} Q_n vs q_(n,0)"),
            q[n].clone(),
            qtab.get(n, 0),
        );
    }
    reports.push(c.done());
    let mut c = Check::new("relative-recursion:oracle", 1, k);
    for n in 1..=k {
        c.expect_eq(
            format!("n={n} Q_n vs oracle"),
            q[n].clone(),
            oracle[n].relative.clone(),
        );
        if n >= 3 {
            let o = |x: usize| oracle[x].relative.clone();
            let rhs = big(n as i64 - 1) * o(n - 1) + big(n as i64 - 2) * o(n - 2);
            c.expect_eq(format!("n={n} recursion on oracle counts"), o(n), rhs);
        }
    }
    reports.push(c.done());

    // Q_n^B recursion
    let mut c = Check::new("signed-relative-recursion:rec", 1, nr);
    for n in 1..=nr {
        c.expect_eq(
            format!("n={n} Q_n^B vs Q_n^B(1)"),
            qb[n].clone(),
            totals[n].clone(),
        );
    }
    reports.push(c.done());
    let mut c = Check::new("signed-relative-recursion:oracle", 3, k);
    for n in 3..=k {
        let o = |x: usize| oracle[x].srd.eval_i64(1);
        let rhs = big(2 * n as i64 - 1) * o(n - 1) + big(2 * n as i64 - 4) * o(n - 2);
        c.expect_eq(format!("n={n}"), o(n), rhs);
    }
    reports.push(c.done());

    // coefficient recursion
    let mut c = Check::new("coefficient-recursion:rec", 0, nr);
    for n in 0..=nr {
        for m in 0..=n {
            c.expect_eq(
                format!("n={n} m={m}"),
                qtab.get(n, m as i64),
                polys.get(n).coeff(m),
            );
        }
    }
    reports.push(c.done());
    let mut c = Check::new("coefficient-recursion:oracle", 3, k);
    let oracle_polys: Vec<IntPoly> = oracle.iter().map(|r| r.srd.clone()).collect();
    // The recursion is anchored at Q_0^B = 0, not the oracle's empty count.
    let mut anchored = oracle_polys.clone();
    anchored[0] = IntPoly::zero();
    for n in 3..=k {
        for m in 0..=n as i64 {
            c.expect_eq(
                format!("n={n} m={m}"),
                oracle_polys[n].coeff(m as usize),
                coefficient_rhs(&anchored, n, m),
            );
        }
    }
    reports.push(c.done());

    // Q_n^B = (f_n + f_{n-1}) + (f_{n-1} + f_{n-2})
    let mut c = Check::new("signed-relative-vs-f:rec", 3, nr);
    for n in 3..=nr {
        c.expect_eq(
            format!("n={n}"),
            totals[n].clone(),
            &f[n] + big(2) * &f[n - 1] + &f[n - 2],
        );
    }
    reports.push(c.done());
    let mut c = Check::new("signed-relative-vs-f:oracle", 3, k);
    for n in 3..=k {
        let fo = |x: usize| big(oracle[x].f.map_or(0, |c| c.f as i64));
        c.expect_eq(
            format!("n={n}"),
            oracle[n].srd.eval_i64(1),
            fo(n) + big(2) * fo(n - 1) + fo(n - 2),
        );
    }
    reports.push(c.done());

    // f_n four-term recursion
    let mut c = Check::new("f-recursion:rec", 3, nr);
    for n in 3..=nr {
        let ff = |x: usize| &f[x] + &f[x - 1];
        let rhs = big(2 * n as i64 - 1) * ff(n - 1) + big(2 * n as i64 - 2) * ff(n - 2);
        c.expect_eq(format!("n={n} F_n = f_n + f_(n-1)"), ff(n), rhs);
    }
    reports.push(c.done());
    let mut c = Check::new("f-recursion:oracle", 1, k);
    for n in 1..=k {
        let fo = |x: usize| big(oracle[x].f.map_or(0, |c| c.f as i64));
        c.expect_eq(format!("n={n} f_n vs oracle"), f[n].clone(), fo(n));
        if n >= 4 {
            let ni = n as i64;
            let rhs = big(2 * ni - 2) * fo(n - 1)
                + big(4 * ni - 3) * fo(n - 2)
                + big(2 * ni - 2) * fo(n - 3);
            c.expect_eq(format!("n={n} recursion on oracle counts"), fo(n), rhs);
        }
    }
    reports.push(c.done());

    // D_n^B
    let mut c = Check::new("signed-derangements:rec", 0, nr);
    for n in 0..=nr {
        c.expect_eq(
            format!("n={n} vs inclusion-exclusion"),
            db[n].clone(),
            signed_derangements_closed_form(n),
        );
    }
    reports.push(c.done());
    let mut c = Check::new("signed-derangements:oracle", 1, k);
    for n in 1..=k {
        c.expect_eq(
            format!("n={n}"),
            db[n].clone(),
            oracle[n].signed_derangements.clone(),
        );
    }
    reports.push(c.done());

    // D_n^B = f_n + f_{n-1}
    let mut c = Check::new("signed-derangements-vs-f:rec", 2, nr);
    for n in 2..=nr {
        c.expect_eq(format!("n={n}"), db[n].clone(), &f[n] + &f[n - 1]);
    }
    reports.push(c.done());
    let mut c = Check::new("signed-derangements-vs-f:oracle", 2, k);
    for n in 2..=k {
        let fo = |x: usize| big(oracle[x].f.map_or(0, |c| c.f as i64));
        c.expect_eq(
            format!("n={n}"),
            oracle[n].signed_derangements.clone(),
            fo(n) + fo(n - 1),
        );
    }
    reports.push(c.done());

    // q_{n,m} = qbar_{n,m} + qbar_{n-1,m}
    let mut c = Check::new("reduce-q-vs-qbar:rec", 1, nr);
    for n in 1..=nr {
        for m in 0..=n as i64 {
            c.expect_eq(
                format!("n={n} m={m}"),
                qtab.get(n, m),
                qbar.get(n, m) + qbar.get(n - 1, m),
            );
        }
    }
    reports.push(c.done());
    let mut c = Check::new("reduce-q-vs-qbar:oracle", 1, k);
    for n in 1..=k {
        let rhs = &oracle[n].first_not_one + &oracle[n - 1].first_not_one;
        c.expect_eq(format!("n={n}"), oracle[n].srd.clone(), rhs);
    }
    reports.push(c.done());

    // fhat_n = f_{n-1}
    let mut c = Check::new("fhat-equals-previous-f:oracle", 2, k);
    for n in 2..=k {
        let (cur, prev) = (
            oracle[n].f.expect("n >= 1"),
            oracle[n - 1].f.expect("n >= 1"),
        );
        c.expect_eq(format!("n={n}"), cur.fhat, prev.f);
    }
    reports.push(c.done());

    // polynomial recursion vs direct count
    let mut c = Check::new("poly-recursion-vs-oracle", 1, k);
    for n in 1..=k {
        c.expect_eq(
            format!("n={n}"),
            polys.get(n).clone(),
            oracle[n].srd.clone(),
        );
    }
    reports.push(c.done());

    // reflected qbar recursion vs direct count
    let mut c = Check::new("qbar-recursion-vs-oracle", 0, k);
    for n in 0..=k {
        for m in 0..=n {
            c.expect_eq(
                format!("n={n} m={m}"),
                qbar.get(n, m as i64),
                oracle[n].first_not_one.coeff(m),
            );
        }
    }
    reports.push(c.done());

    Ok(reports)
}

/// All gamma-form sequences on `{0..n}`, 0 anywhere and possibly barred.
fn all_gamma_sequences(n: usize) -> impl Iterator<Item = SignedSeq> {
    enumerate::gen_signed_seqs(n + 1, Mode::Classical).map(|s| {
        let entries = s
            .entries()
            .iter()
            .map(|e| Element::new(e.value - 1, e.barred))
            .collect();
        SignedSeq::new(entries, Mode::Gamma).expect("relabelled permutation")
    })
}

pub fn verify_lemmas(n_max_oracle: usize) -> Result<Vec<IdentityReport>> {
    if n_max_oracle > ORACLE_MAX {
        return invalid(format!("n_max_oracle must be at most {ORACLE_MAX}"));
    }
    let k = n_max_oracle;
    let k7 = k.min(7);
    let mut reports = Vec::new();

    let mut c = Check::new("drop-max-dichotomy", 1, k);
    for n in 1..=k {
        let bad: Option<String> = enumerate::fold_class(
            n,
            SeqClass::SrdClassical,
            Strategy::default(),
            || None,
            |acc: Option<String>, e| {
                if acc.is_some() {
                    return acc;
                }
                let s = SignedSeq::new(e.to_vec(), Mode::Classical).expect("walker output");
                match lift::drop_max_outcome(&s) {
                    Ok(DropMaxOutcome::Srd | DropMaxOutcome::Tilde) => None,
                    _ => Some(s.to_string()),
                }
            },
            |a, b| a.or(b),
        );
        c.expect(bad.is_none(), || {
            format!("n={n} {}", bad.unwrap_or_default())
        });
    }
    reports.push(c.done());

    let mut c = Check::new("lift-bar-polynomial", 1, k7);
    let mut sizes = Check::new("lift-images-distinct-and-tilde", 1, k7);
    for n in 1..=k7 {
        for s in enumerate::collect_class(n, SeqClass::SrdClassical) {
            c.expect(lift::lemma_s_check(&s)?, || format!("n={n} {s}"));
            let images = lift::s_up(&s)?;
            let distinct: HashSet<&SignedSeq> = images.iter().collect();
            let all_tilde = images
                .iter()
                .all(|x| classify(x, SeqClass::TildeOneViolation).unwrap_or(false));
            sizes.expect(
                images.len() == n && distinct.len() == n && all_tilde,
                || format!("n={n} {s}"),
            );
        }
    }
    reports.push(c.done());
    reports.push(sizes.done());

    let mut c = Check::new("lift-partitions-tilde", 2, k7);
    let totals = QbTable::build(k7.max(1)).totals();
    for n in 2..=k7 {
        let p = lift::tilde_partition(n)?;
        c.expect(p.holds(), || {
            format!("n={n} disjoint={} covers={}", p.disjoint, p.covers)
        });
        let expected = BigInt::from(n - 1) * &totals[n - 1];
        c.expect_eq(
            format!("n={n} |tilde|"),
            BigInt::from(p.tilde_count),
            expected,
        );
    }
    reports.push(c.done());

    let k6 = k.min(6);
    let mut c = Check::new("conj-reverse-involution-and-closure", 0, k6);
    for n in 0..=k6 {
        for s in all_gamma_sequences(n) {
            let r = lift::conj_reverse(&s)?;
            c.expect(lift::conj_reverse(&r)? == s, || {
                format!("n={n} {s} not an involution")
            });
            c.expect(r.bar_count() == n + 1 - s.bar_count(), || {
                format!("n={n} {s} bar count")
            });
            if classify(&s, SeqClass::SrdGamma)? {
                c.expect(classify(&r, SeqClass::SrdGamma)?, || {
                    format!("n={n} {s} -> {r}")
                });
            }
        }
    }
    reports.push(c.done());

    let mut c = Check::new("gamma-vs-classical-reading", 1, k7);
    for n in 1..=k7 {
        let mut classical = vec![0u64; n + 2];
        let mut gamma = vec![0u64; n + 2];
        for s in enumerate::gen_signed_seqs(n, Mode::Gamma) {
            let b = s.bar_count();
            if classify(&s, SeqClass::SrdClassical)? {
                classical[b] += 1;
            }
            if classify(&s, SeqClass::SrdGamma)? {
                gamma[b] += 1;
            }
        }
        let (pc, pg) = (
            IntPoly::from_counts(&classical),
            IntPoly::from_counts(&gamma),
        );
        c.expect_eq(format!("n={n} classical vs gamma"), pc.clone(), pg);
        let first_not_one = enumerate::brute_poly(n, SeqClass::SrdClassicalFirstNotOne);
        c.expect_eq(format!("n={n} vs first entry not 1"), pc, first_not_one);
    }
    reports.push(c.done());

    Ok(reports)
}

pub fn verify_injections(n_max_rec: usize, n_max_oracle: usize) -> Result<Vec<IdentityReport>> {
    if n_max_oracle > ORACLE_MAX {
        return invalid(format!("n_max_oracle must be at most {ORACLE_MAX}"));
    }
    let (nr, k) = (n_max_rec, n_max_oracle);
    let qtab = QTable::build(nr.max(2));
    let mut reports = Vec::new();

    let mut c = Check::new("self-reciprocity", 0, nr);
    for n in 0..=nr {
        for m in 0..=n as i64 {
            c.expect_eq(
                format!("n={n} m={m}"),
                qtab.get(n, m),
                qtab.get(n, n as i64 - m),
            );
        }
    }
    reports.push(c.done());

    let mut c = Check::new("unimodal-rows", 1, nr);
    for n in 1..=nr {
        let v = unimodal::is_unimodal(qtab.row(n))?;
        let mode_ok = v
            .mode_index
            .is_some_and(|m| m == n / 2 || m == n.div_ceil(2));
        c.expect(v.unimodal && mode_ok, || format!("n={n} {v:?}"));
    }
    reports.push(c.done());

    let mut c = Check::new("delta-p-nonnegative", 1, nr);
    for n in 1..=nr {
        for m in 0..=(n / 2) as i64 {
            let p = qtab.delta_p(n, m);
            c.expect(!p.is_negative(), || format!("n={n} m={m} P={p}"));
        }
    }
    reports.push(c.done());

    let mut c = Check::new("injection-zero-to-one-bar", 1, k);
    for n in 1..=k {
        let mut seen = HashSet::new();
        for s in enumerate::collect_class(n, SeqClass::RelativeDerangement) {
            let out = unimodal::inj_zero_to_one(&s)?;
            let lands = out.bar_count() == 1 && classify(&out, SeqClass::SrdClassical)?;
            c.expect(lands, || format!("n={n} {s} -> {out} not a one-bar SRD"));
            let fresh = seen.insert(out.clone());
            c.expect(fresh, || format!("n={n} {s} -> {out} collides"));
        }
    }
    reports.push(c.done());

    let mut c = Check::new("injection-one-to-two-bars", 4, k);
    for n in 4..=k {
        let one_bar: Vec<SignedSeq> = enumerate::fold_class(
            n,
            SeqClass::SrdClassical,
            Strategy::default(),
            Vec::new,
            |mut acc, e| {
                if crate::seq::bar_count(e) == 1 {
                    acc.push(SignedSeq::new(e.to_vec(), Mode::Classical).expect("walker output"));
                }
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        let mut images: HashMap<SignedSeq, (OneToTwoCase, SignedSeq)> = HashMap::new();
        for s in one_bar {
            let (case, out) = unimodal::inj_one_to_two_case(&s)?;
            let lands = out.bar_count() == 2 && classify(&out, SeqClass::SrdClassical)?;
            c.expect(lands, || format!("n={n} {s} -> {out} not a two-bar SRD"));
            if let Some((prev_case, prev)) = images.insert(out.clone(), (case, s.clone())) {
                let kind = if prev_case == case {
                    "within case"
                } else {
                    "across cases"
                };
                c.expect(false, || {
                    format!("n={n} {prev} and {s} both map to {out} ({kind})")
                });
            }
        }
    }
    reports.push(c.done());

    Ok(reports)
}

/// Derivative at `at` of the unique polynomial of degree `< samples.len()`
/// through `(i, samples[i])`, by differentiating the Lagrange basis.
fn interpolated_derivative(samples: &[BigInt], at: i64) -> Rational {
    let nodes: Vec<i64> = (0..samples.len() as i64).collect();
    let mut total = Rational::zero();
    for (j, y) in samples.iter().enumerate() {
        let xj = nodes[j];
        let denom: BigInt = nodes
            .iter()
            .filter(|&&x| x != xj)
            .map(|&x| big(xj - x))
            .product();
        // d/dx prod_{i != j} (x - x_i) at `at`
        let mut deriv = BigInt::zero();
        for i in 0..nodes.len() {
            if i == j {
                continue;
            }
            let rest: BigInt = nodes
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j && l != i)
                .map(|(_, &xl)| big(at - xl))
                .product();
            deriv += rest;
        }
        total += Rational::new(y * deriv, denom);
    }
    total
}

/// Functional-equation residuals and derivative checks for a given series.
pub fn verify_series_of(f: &TruncSeries) -> Vec<IdentityReport> {
    let order = f.order();
    let mut reports = Vec::new();

    let mut c = Check::new("series-functional-equation", 1, order);
    for (i, r) in series::residual_of(f).iter().enumerate() {
        c.expect(r.is_zero(), || format!("residual at x^{} = {r}", i + 1));
    }
    reports.push(c.done());

    let mut c = Check::new("series-derivatives-vs-interpolation", 0, order);
    let (fx, ft) = (f.d_dx(), f.d_dt());
    let t_degree = f
        .coeffs()
        .iter()
        .map(|p| p.degree().max(0) as usize)
        .max()
        .unwrap_or(0);
    for p in 0..=2i64 {
        for q in 0..=2i64 {
            // d/dx at (x, t) = (p, q)
            let along_x: Vec<BigInt> = (0..=order as i64).map(|x| f.eval(x, q)).collect();
            let want = interpolated_derivative(&along_x, p);
            c.expect_eq(
                format!("F_x({p},{q})"),
                Rational::from_integer(fx.eval(p, q)),
                want,
            );
            // d/dt at (x, t) = (p, q)
            let along_t: Vec<BigInt> = (0..=t_degree as i64).map(|t| f.eval(p, t)).collect();
            let want = interpolated_derivative(&along_t, q);
            c.expect_eq(
                format!("F_t({p},{q})"),
                Rational::from_integer(ft.eval(p, q)),
                want,
            );
        }
    }
    reports.push(c.done());
    reports
}

pub fn verify_series(order: usize) -> Vec<IdentityReport> {
    verify_series_of(&series::build_series(order))
}

pub fn verify_stats(n_max_rec: usize) -> Vec<IdentityReport> {
    let nr = n_max_rec.max(2);
    let mut reports = Vec::new();
    let polys = QbTable::build(nr);

    let mut c = Check::new("expectation-half-n", 1, nr);
    for n in 1..=nr {
        let p = polys.get(n);
        let ratio = Rational::new(p.derivative().eval_i64(1), p.eval_i64(1));
        c.expect_eq(
            format!("n={n}"),
            ratio,
            Rational::new(big(n as i64), big(2)),
        );
    }
    reports.push(c.done());

    let mut c = Check::new("variance-recursion-vs-direct", 1, nr);
    for r in stats::moments(nr) {
        let direct = stats::variance_direct(r.n).expect("n >= 1");
        c.expect_eq(format!("n={}", r.n), r.variance, direct);
    }
    reports.push(c.done());

    let mut c = Check::new("variance-spot-values", 1, 2);
    let v = |n| stats::variance(n).expect("n >= 1");
    c.expect_eq("n=1", v(1), Rational::new(big(1), big(4)));
    c.expect_eq("n=2", v(2), Rational::new(big(1), big(3)));
    reports.push(c.done());

    reports
}
