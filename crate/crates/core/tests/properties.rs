use proptest::prelude::*;

use srd_core::enumerate::{classify, SeqClass};
use srd_core::lift::{self, DropMaxOutcome};
use srd_core::recur::QTable;
use srd_core::unimodal::{self, is_unimodal};
use srd_core::{BigInt, Element, IntPoly, Mode, SignedSeq};

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|c| IntPoly::from_i64s(&c))
}

/// Signed arrangement of `first..first+len` in random order with random bars.
fn signed(first: u32, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Element>> {
    len.prop_flat_map(move |n| {
        let values: Vec<u32> = (first..first + n as u32).collect();
        (
            Just(values).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
    })
    .prop_map(|(vals, bars)| {
        vals.into_iter()
            .zip(bars)
            .map(|(v, b)| Element::new(v, b))
            .collect()
    })
}

fn classical(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SignedSeq> {
    signed(1, len).prop_map(|e| SignedSeq::new(e, Mode::Classical).unwrap())
}

fn gamma(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SignedSeq> {
    signed(0, len).prop_map(|e| SignedSeq::new(e, Mode::Gamma).unwrap())
}

fn srd(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SignedSeq> {
    classical(len).prop_filter("classical SRD", |s| {
        classify(s, SeqClass::SrdClassical).unwrap()
    })
}

proptest! {
    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly(), t in -5i64..5) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).eval_i64(t), a.eval_i64(t) * b.eval_i64(t));
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn display_parse_round_trip(s in classical(0..=8)) {
        let back = SignedSeq::parse(&s.to_string(), Mode::Classical).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn conj_reverse_is_an_involution(s in gamma(1..=9)) {
        let r = lift::conj_reverse(&s).unwrap();
        prop_assert_eq!(r.bar_count(), s.len() - s.bar_count());
        prop_assert_eq!(lift::conj_reverse(&r).unwrap(), s.clone());
        prop_assert_eq!(
            classify(&r, SeqClass::SrdGamma).unwrap(),
            classify(&s, SeqClass::SrdGamma).unwrap()
        );
    }

    #[test]
    fn drop_max_dichotomy(s in srd(1..=7)) {
        let outcome = lift::drop_max_outcome(&s).unwrap();
        prop_assert!(matches!(outcome, DropMaxOutcome::Srd | DropMaxOutcome::Tilde));
    }

    #[test]
    fn lift_images_are_tilde(s in srd(1..=6)) {
        let images = lift::s_up(&s).unwrap();
        prop_assert_eq!(images.len(), s.len());
        prop_assert_eq!(lift::s_up_set(&s).unwrap().len(), s.len());
        for x in &images {
            prop_assert!(classify(x, SeqClass::TildeOneViolation).unwrap());
        }
        prop_assert!(lift::lemma_s_check(&s).unwrap());
    }

    #[test]
    fn zero_to_one_bar_lands_in_srds(s in classical(1..=8).prop_map(|s| {
        let plain = s.entries().iter().map(|e| Element::plain(e.value)).collect();
        SignedSeq::new(plain, Mode::Classical).unwrap()
    }).prop_filter("relative derangement", |s| classify(s, SeqClass::RelativeDerangement).unwrap())) {
        let out = unimodal::inj_zero_to_one(&s).unwrap();
        prop_assert_eq!(out.bar_count(), 1);
        prop_assert!(classify(&out, SeqClass::SrdClassical).unwrap());
    }

    #[test]
    fn one_to_two_bars_lands_in_srds(s in srd(4..=8).prop_filter("one bar", |s| s.bar_count() == 1)) {
        let out = unimodal::inj_one_to_two(&s).unwrap();
        prop_assert_eq!(out.bar_count(), 2);
        prop_assert!(classify(&out, SeqClass::SrdClassical).unwrap());
    }

    #[test]
    fn rows_are_palindromes(n in 0usize..60, m in 0i64..60) {
        let q = QTable::build(n);
        let m = m % (n as i64 + 1);
        prop_assert_eq!(q.get(n, m), q.get(n, n as i64 - m));
        prop_assert_eq!(q.get(n, n as i64 + 1), BigInt::from(0));
    }

    #[test]
    fn mountain_shapes_are_unimodal(
        up in prop::collection::vec(0u32..5, 0..6),
        down in prop::collection::vec(0u32..5, 0..6),
        base in 0u32..10,
    ) {
        let mut seq = vec![base];
        for d in &up { seq.push(seq.last().unwrap() + d); }
        let peak = seq.len() - 1;
        for d in &down { seq.push(seq.last().unwrap().saturating_sub(*d)); }
        let v = is_unimodal(&seq).unwrap();
        prop_assert!(v.unimodal);
        let top = *seq.iter().max().unwrap();
        prop_assert_eq!(seq[v.mode_index.unwrap()], top);
        prop_assert!(v.mode_index.unwrap() <= peak);
    }

    #[test]
    fn valleys_are_not_unimodal(a in 1u32..10, dip in 1u32..10, b in 1u32..10) {
        let v = is_unimodal(&[a + dip, a, a + b]).unwrap();
        prop_assert!(!v.unimodal);
        prop_assert_eq!(v.first_violation, Some((1, 2)));
    }
}
