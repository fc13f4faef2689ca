//! Exact mean and variance of the bar count of a uniformly random SRD.
//!
//! Two routes are kept apart. The recursive route runs the three-term
//! recursion for `F_n = Q_n''(1) / Q_n(1)` using only totals `Q_k^B(1)`;
//! the direct route reads moments off the coefficient table.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::recur::QbTable;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentRecord {
    pub n: usize,
    pub expectation: Rational,
    pub variance: Rational,
    pub f_n: Rational,
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn ratio(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return invalid("moments are defined for n >= 1");
    }
    Ok(())
}

/// `E[b] = n/2`.
pub fn expectation(n: usize) -> Result<Rational> {
    require_positive(n)?;
    Ok(rat(n as i64, 2))
}

/// `sum m q_{n,m} / sum q_{n,m}` from the coefficients of `Q_n^B`.
pub fn expectation_from_table(n: usize) -> Result<Rational> {
    require_positive(n)?;
    let p = QbTable::build(n).get(n).clone();
    Ok(ratio(p.derivative().eval_i64(1), p.eval_i64(1)))
}

/// `F_n = Q_n''(1) / Q_n(1)` straight from the polynomial.
pub fn f_moment_direct(n: usize) -> Result<Rational> {
    require_positive(n)?;
    let p = QbTable::build(n).get(n).clone();
    Ok(ratio(
        p.derivative().derivative().eval_i64(1),
        p.eval_i64(1),
    ))
}

/// `F_0..F_N` by the recursion. `F_1, F_2, F_3` are seeded from the
/// polynomials; `F_0` is a placeholder (`Q_0 = 0` kills its term).
pub fn f_moments_recursive(n_max: usize) -> Vec<Rational> {
    let table = QbTable::build(n_max.max(3));
    let totals = table.totals();
    let mut f: Vec<Rational> = vec![Rational::zero()];
    for n in 1..=3 {
        let p = table.get(n);
        f.push(ratio(
            p.derivative().derivative().eval_i64(1),
            p.eval_i64(1),
        ));
    }
    for n in 4..=n_max {
        let k = n as i64;
        let q_n = &totals[n];
        let term = |poly_part: i64, weight: i64, back: usize| {
            (rat(poly_part, 1) + rat(weight, 1) * &f[n - back])
                * ratio(totals[n - back].clone(), q_n.clone())
        };
        let next = term((k - 1) * (k - 1), 2 * k - 2, 1)
            + term((3 * k - 2) * (k - 2), 4 * k - 3, 2)
            + term((2 * k - 2) * (k - 3), 2 * k - 2, 3);
        f.push(next);
    }
    f.truncate(n_max + 1);
    f
}

/// `Var[b] = F_n + (2n - n^2)/4` with `F_n` from the recursion.
pub fn variance(n: usize) -> Result<Rational> {
    require_positive(n)?;
    let f = f_moments_recursive(n).swap_remove(n);
    Ok(f + variance_shift(n))
}

fn variance_shift(n: usize) -> Rational {
    let k = n as i64;
    rat(2 * k - k * k, 4)
}

/// Second central moment `sum (m - n/2)^2 q_{n,m} / sum q_{n,m}`.
pub fn variance_direct(n: usize) -> Result<Rational> {
    require_positive(n)?;
    let p = QbTable::build(n).get(n).clone();
    let mean = rat(n as i64, 2);
    let total = p.eval_i64(1);
    let weighted: Rational = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            let d = rat(m as i64, 1) - &mean;
            &d * &d * Rational::from_integer(c.clone())
        })
        .fold(Rational::zero(), |a, b| a + b);
    Ok(weighted / Rational::from_integer(total))
}

/// Records for `1..=n_max` from the recursive route.
pub fn moments(n_max: usize) -> Vec<MomentRecord> {
    let f = f_moments_recursive(n_max);
    (1..=n_max)
        .map(|n| MomentRecord {
            n,
            expectation: rat(n as i64, 2),
            variance: &f[n] + variance_shift(n),
            f_n: f[n].clone(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expectation_examples() {
        assert_eq!(expectation(2).unwrap(), rat(1, 1));
        assert_eq!(expectation(1).unwrap(), rat(1, 2));
        assert_eq!(expectation(9).unwrap(), rat(9, 2));
        assert_eq!(expectation_from_table(2).unwrap(), rat(1, 1));
        assert_eq!(expectation_from_table(1).unwrap(), rat(1, 2));
        assert!(expectation(0).is_err());
    }

    #[test]
    fn variance_examples() {
        assert_eq!(variance(2).unwrap(), rat(1, 3));
        assert_eq!(variance(1).unwrap(), rat(1, 4));
        assert_eq!(variance(3).unwrap(), rat(41, 68));
        assert_eq!(variance(4).unwrap(), variance_direct(4).unwrap());
    }

    #[test]
    fn f_seeds() {
        let f = f_moments_recursive(3);
        assert_eq!(f[1], rat(0, 1));
        assert_eq!(f[2], rat(1, 3));
        // Q_3'' = 18t + 28, Q_3(1) = 34.
        assert_eq!(f[3], rat(46, 34));
    }

    #[test]
    fn f_four_by_hand() {
        // Q_4'' = 132t^2 + 384t + 224 at t = 1 is 740; Q_4(1) = 262.
        assert_eq!(f_moments_recursive(4)[4], rat(740, 262));
        assert_eq!(f_moment_direct(4).unwrap(), rat(740, 262));
    }

    #[test]
    fn records_satisfy_invariant() {
        for r in moments(12) {
            assert_eq!(r.variance, &r.f_n + variance_shift(r.n));
            assert_eq!(r.expectation, rat(r.n as i64, 2));
        }
    }
}
