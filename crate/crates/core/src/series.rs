//! Truncated generating function `F(x, t) = sum_n Q_n^B(t) x^n` and the
//! cleared-denominator functional equation it satisfies:
//!
//! ```text
//! F = [(t+1)x^2 + (3t+1)x^3 + 2t x^4] F_x
//!   + [(t^3-t)x^2 + (2t^3-2t^2)x^3] F_t
//!   + t x^2 F + (t+1)x + 2t x^2
//! ```
//!
//! The `x^n` coefficient of the right side only involves `Q_{n-1}`,
//! `Q_{n-2}` and `Q_{n-3}`, so truncating at order `N` keeps every
//! coefficient up to `x^N` exact.

use num_bigint::BigInt;

use crate::poly::IntPoly;
use crate::recur::QbTable;

/// Power series in `x` truncated after `x^order`, with polynomial
/// coefficients in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

impl TruncSeries {
    /// Pads or cuts `coeffs` to `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        TruncSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::new(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [IntPoly] {
        &mut self.coeffs
    }

    /// `dF/dx`; the top coefficient becomes unknown and is dropped to zero,
    /// so the result is exact only through `x^(order-1)`.
    pub fn d_dx(&self) -> TruncSeries {
        let coeffs = (1..=self.order)
            .map(|n| self.coeffs[n].scale_i64(n as i64))
            .collect();
        TruncSeries::new(self.order, coeffs)
    }

    /// `dF/dt`, coefficientwise.
    pub fn d_dt(&self) -> TruncSeries {
        TruncSeries::new(
            self.order,
            self.coeffs.iter().map(IntPoly::derivative).collect(),
        )
    }

    /// Multiplies by `p(t) x^k` and truncates.
    pub fn mul_monomial(&self, p: &IntPoly, k: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order);
        for n in 0..(self.order + 1).saturating_sub(k) {
            out.coeffs[n + k] = p * &self.coeffs[n];
        }
        out
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &TruncSeries,
        f: impl Fn(&IntPoly, &IntPoly) -> IntPoly,
    ) -> TruncSeries {
        assert_eq!(self.order, other.order, "series orders differ");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        TruncSeries::new(self.order, coeffs)
    }

    /// `F(x, t0)` as a polynomial in `x`, coefficients low degree first.
    pub fn eval_t(&self, t0: i64) -> Vec<BigInt> {
        let t0 = BigInt::from(t0);
        self.coeffs.iter().map(|p| p.eval(&t0)).collect()
    }

    /// Exact value at an integer point.
    pub fn eval(&self, x0: i64, t0: i64) -> BigInt {
        let x0 = BigInt::from(x0);
        self.eval_t(t0)
            .iter()
            .rev()
            .fold(BigInt::default(), |acc, c| acc * &x0 + c)
    }
}

/// `F(x, t)` truncated after `x^order`: `coeffs[n] = Q_n^B(t)`, `coeffs[0] = 0`.
pub fn build_series(order: usize) -> TruncSeries {
    TruncSeries::new(order, QbTable::build(order).polys().to_vec())
}

/// Right-hand side of the functional equation, exact through `x^order`.
pub fn functional_rhs(f: &TruncSeries) -> TruncSeries {
    let order = f.order();
    let p = IntPoly::from_i64s;
    let fx = f.d_dx();
    let ft = f.d_dt();
    let explicit = TruncSeries::new(order, vec![IntPoly::zero(), p(&[1, 1]), p(&[0, 2])]);
    [
        fx.mul_monomial(&p(&[1, 1]), 2),
        fx.mul_monomial(&p(&[1, 3]), 3),
        fx.mul_monomial(&p(&[0, 2]), 4),
        ft.mul_monomial(&p(&[0, -1, 0, 1]), 2),
        ft.mul_monomial(&p(&[0, 0, -2, 2]), 3),
        f.mul_monomial(&p(&[0, 1]), 2),
        explicit,
    ]
    .iter()
    .fold(TruncSeries::zero(order), |acc, s| acc.add(s))
}

/// `[x^n] (F - RHS)` for `n = 1..=order` of an arbitrary series.
pub fn residual_of(f: &TruncSeries) -> Vec<IntPoly> {
    f.sub(&functional_rhs(f)).coeffs[1..].to_vec()
}

/// Residuals of the functional equation for the recursion-built series;
/// entry `n - 1` is the coefficient of `x^n`.
pub fn functional_identity_residual(order: usize) -> Vec<IntPoly> {
    residual_of(&build_series(order))
}
