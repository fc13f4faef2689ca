//! Acceptance suite. Each test prints one PASS/FAIL line and then asserts.
//!
//! Run with `cargo test -p srd-core --test acceptance -- --nocapture` to
//! see the verdict lines.

use std::time::{Duration, Instant};

use srd_core::enumerate::{self, SeqClass};
use srd_core::recur::{self, QTable, QbTable, QbarTable};
use srd_core::series::{self, TruncSeries};
use srd_core::verify::{self, IdentityReport};
use srd_core::{lift, stats, BigInt, IntPoly, Rational};

fn verdict(id: u32, label: &str, ok: bool, elapsed: Duration, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("{tag} criterion {id}: {label} ({:.2?}){detail}", elapsed);
}

fn failures(reports: &[IdentityReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("\n    {r}"))
        .collect()
}

fn golden() -> Vec<Vec<i64>> {
    vec![
        vec![1, 1],
        vec![1, 4, 1],
        vec![3, 14, 14, 3],
        vec![11, 64, 112, 64, 11],
        vec![53, 362, 866, 866, 362, 53],
        vec![309, 2428, 7252, 10300, 7252, 2428, 309],
        vec![2119, 18806, 66854, 121838, 121838, 66854, 18806, 2119],
        vec![
            16687, 165016, 677656, 1497880, 1937368, 1497880, 677656, 165016, 16687,
        ],
        vec![
            148329, 1616786, 7513658, 19444106, 30752450, 30752450, 19444106, 7513658, 1616786,
            148329,
        ],
    ]
}

/// Every signed permutation of [n] as `(value, barred)` pairs, by brute
/// force over permutations and sign masks.
fn naive_signed_perms(n: usize) -> Vec<Vec<(u32, bool)>> {
    fn perms(items: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            perms(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut ps = Vec::new();
    perms(&mut (1..=n as u32).collect(), 0, &mut ps);
    let mut out = Vec::new();
    for p in ps {
        for mask in 0u32..(1 << n) {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &v)| (v, mask >> i & 1 == 1))
                    .collect(),
            );
        }
    }
    out
}

fn naive_is_srd(s: &[(u32, bool)]) -> bool {
    s.windows(2)
        .all(|w| !(w[1].0 == w[0].0 + 1 && w[0].1 == w[1].1))
}

/// Bar polynomial of naive SRDs, optionally excluding those starting with
/// an unbarred 1.
fn naive_bar_poly(n: usize, first_not_one: bool) -> IntPoly {
    let mut counts = vec![0u64; n + 1];
    for s in naive_signed_perms(n) {
        if naive_is_srd(&s) && !(first_not_one && s.first() == Some(&(1, false))) {
            counts[s.iter().filter(|e| e.1).count()] += 1;
        }
    }
    IntPoly::from_counts(&counts)
}

#[test]
fn criterion_1_golden_polynomials() {
    let start = Instant::now();
    let table = QbTable::build(9);
    let mut bad = String::new();
    for (i, row) in golden().iter().enumerate() {
        let n = i + 1;
        if table.get(n) != &IntPoly::from_i64s(row) {
            bad += &format!("\n    n={n}: got {}", table.get(n));
        }
    }
    let q = QTable::build(9);
    let spot = q.get(8, 4) == BigInt::from(1937368) && q.get(9, 0) == BigInt::from(148329);
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && spot && elapsed < Duration::from_secs(1);
    verdict(1, "golden polynomials n=1..9", ok, elapsed, &bad);
    assert!(ok);
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut bad = String::new();
    // The library oracle is itself checked against naive enumeration.
    for n in 1..=6 {
        if enumerate::brute_poly(n, SeqClass::SrdClassical) != naive_bar_poly(n, false) {
            bad += &format!("\n    n={n}: pruned oracle disagrees with naive enumeration");
        }
    }
    for n in 1..=8 {
        let brute = enumerate::brute_poly(n, SeqClass::SrdClassical);
        let rec = recur::poly_q_b(n);
        if brute != rec {
            bad += &format!("\n    n={n}: oracle {brute} vs recursion {rec}");
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed <= Duration::from_secs(120);
    verdict(2, "oracle equals recursion n=1..8", ok, elapsed, &bad);
    assert!(ok);
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let reports = verify::verify_identities(30, 8).unwrap();
    let mut bad = failures(&reports);
    // Known small values, independent of every recursion.
    let f: Vec<BigInt> = recur::f_seq(5).into_iter().collect();
    if f != [0, 1, 4, 25, 208, 2121].map(BigInt::from) {
        bad += "\n    f_0..f_5 mismatch";
    }
    if recur::db_seq(3) != [1, 1, 5, 29].map(BigInt::from) {
        bad += "\n    D^B_0..D^B_3 mismatch";
    }
    for n in 2..=7 {
        let (cur, prev) = (
            enumerate::brute_f(n).unwrap(),
            enumerate::brute_f(n - 1).unwrap(),
        );
        if cur.fhat != prev.f {
            bad += &format!("\n    n={n}: fhat {} vs f_(n-1) {}", cur.fhat, prev.f);
        }
    }
    let ok = bad.is_empty();
    verdict(
        3,
        "identity suite (rec n<=30, oracle n<=8)",
        ok,
        start.elapsed(),
        &bad,
    );
    assert!(ok);
}

#[test]
fn criterion_4_lemma_suite() {
    let start = Instant::now();
    let reports = verify::verify_lemmas(8).unwrap();
    let mut bad = failures(&reports);
    let p = lift::tilde_partition(4).unwrap();
    if p.tilde_count != 102 {
        bad += &format!("\n    |tilde_4| = {} (expected 102)", p.tilde_count);
    }
    let ok = bad.is_empty();
    verdict(4, "lemma suite (n<=8 / n<=7)", ok, start.elapsed(), &bad);
    assert!(ok);
}

#[test]
fn criterion_5_qbar_recursion() {
    let start = Instant::now();
    let table = QbarTable::build(8);
    let mut bad = String::new();
    for n in 0..=8 {
        let oracle = if n <= 6 {
            naive_bar_poly(n, true)
        } else {
            enumerate::brute_poly(n, SeqClass::SrdClassicalFirstNotOne)
        };
        for m in 0..=n {
            let got = table.get(n, m as i64);
            if got != oracle.coeff(m) {
                bad += &format!(
                    "\n    n={n} m={m}: recursion {got} vs oracle {}",
                    oracle.coeff(m)
                );
            }
        }
    }
    let ok = bad.is_empty();
    verdict(
        5,
        "qbar recursion vs oracle n<=8",
        ok,
        start.elapsed(),
        &bad,
    );
    assert!(ok);
}

#[test]
fn criterion_6_statistics() {
    let start = Instant::now();
    let mut bad = failures(&verify::verify_stats(30));
    let polys = QbTable::build(30);
    for r in stats::moments(30) {
        // Moments straight from the coefficient list.
        let p = polys.get(r.n);
        let total = Rational::from_integer(p.eval_i64(1));
        let mut s1 = Rational::from_integer(BigInt::from(0));
        let mut s2 = s1.clone();
        for (m, c) in p.coeffs().iter().enumerate() {
            let w = Rational::from_integer(c.clone());
            let mm = Rational::from_integer(BigInt::from(m));
            s1 += &mm * &w;
            s2 += &mm * &mm * &w;
        }
        let mean = &s1 / &total;
        let var = &s2 / &total - &mean * &mean;
        if mean != r.expectation || mean != Rational::new(BigInt::from(r.n), BigInt::from(2)) {
            bad += &format!("\n    n={}: mean {mean} vs {}", r.n, r.expectation);
        }
        if var != r.variance {
            bad += &format!("\n    n={}: variance {var} vs {}", r.n, r.variance);
        }
    }
    let quarter = Rational::new(BigInt::from(1), BigInt::from(4));
    let third = Rational::new(BigInt::from(1), BigInt::from(3));
    if stats::variance(1).unwrap() != quarter || stats::variance(2).unwrap() != third {
        bad += "\n    spot variances differ";
    }
    let ok = bad.is_empty();
    verdict(
        6,
        "expectation and variance n<=30",
        ok,
        start.elapsed(),
        &bad,
    );
    assert!(ok);
}

#[test]
fn criterion_7_unimodality_and_injections() {
    let start = Instant::now();
    let reports = verify::verify_injections(30, 8).unwrap();
    let mut bad = failures(&reports);
    let q = QTable::build(30);
    for n in 1..=30 {
        let row = q.row(n);
        let peak = row.iter().max().unwrap();
        let first = row.iter().position(|x| x == peak).unwrap();
        let last = row.iter().rposition(|x| x == peak).unwrap();
        let rising = row[..=first].windows(2).all(|w| w[0] <= w[1]);
        let falling = row[last..].windows(2).all(|w| w[0] >= w[1]);
        let flat = row[first..=last].iter().all(|x| x == peak);
        let mirrored = row.iter().eq(row.iter().rev());
        if !(rising && falling && flat && mirrored) {
            bad += &format!("\n    n={n}: row not symmetric unimodal");
        }
    }
    let ok = bad.is_empty();
    verdict(
        7,
        "symmetry, unimodality, injections",
        ok,
        start.elapsed(),
        &bad,
    );
    assert!(ok);
}

/// `p'(x0)` for a polynomial of degree `< samples.len()`, from forward
/// differences at `x0` via `p'(x0) = sum_k (-1)^(k+1) Delta^k p(x0) / k`.
fn newton_derivative(mut values: Vec<BigInt>) -> Rational {
    let mut total = Rational::from_integer(BigInt::from(0));
    for k in 1..values.len() {
        let next: Vec<BigInt> = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        values = next;
        let term = Rational::new(values[0].clone(), BigInt::from(k));
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `F(x, t)` by direct summation of its coefficients.
fn eval_series(f: &TruncSeries, x: i64, t: i64) -> BigInt {
    let (x, t) = (BigInt::from(x), BigInt::from(t));
    let mut acc = BigInt::from(0);
    let mut xp = BigInt::from(1);
    for p in f.coeffs() {
        acc += p.eval(&t) * &xp;
        xp *= &x;
    }
    acc
}

#[test]
fn criterion_8_series() {
    let start = Instant::now();
    let order = 20;
    let mut bad = String::new();
    for (i, r) in series::functional_identity_residual(order)
        .iter()
        .enumerate()
    {
        if !r.is_zero() {
            bad += &format!("\n    residual at x^{} = {r}", i + 1);
        }
    }
    let f = series::build_series(order);
    let (fx, ft) = (f.d_dx(), f.d_dt());
    let t_deg = order;
    for x0 in 0..=2i64 {
        for t0 in 0..=2i64 {
            let along_x = (0..=order as i64)
                .map(|d| eval_series(&f, x0 + d, t0))
                .collect();
            let want_x = newton_derivative(along_x);
            let got_x = Rational::from_integer(eval_series(&fx, x0, t0));
            if got_x != want_x {
                bad += &format!("\n    F_x({x0},{t0}): {got_x} vs {want_x}");
            }
            let along_t = (0..=t_deg as i64)
                .map(|d| eval_series(&f, x0, t0 + d))
                .collect();
            let want_t = newton_derivative(along_t);
            let got_t = Rational::from_integer(eval_series(&ft, x0, t0));
            if got_t != want_t {
                bad += &format!("\n    F_t({x0},{t0}): {got_t} vs {want_t}");
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(5);
    verdict(
        8,
        "functional equation and derivatives, order 20",
        ok,
        elapsed,
        &bad,
    );
    assert!(ok);
}
