//! Recursion-based values: the polynomials `Q_n^B(t)`, their coefficient
//! triangle `q_{n,m}`, the reduced triangle `q̄_{n,m}` and the scalar
//! sequences `D_n`, `Q_n`, `Q_n^B`, `D_n^B`, `f_n`.
//!
//! Tables are built once up to a bound and then only read.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::{self, SeqClass};
use crate::poly::IntPoly;

/// `Q_0^B .. Q_N^B` from the five-term polynomial recursion, anchored at
/// `Q_0^B = 0`, `Q_1^B = 1 + t`, `Q_2^B = t^2 + 4t + 1`.
#[derive(Debug, Clone)]
pub struct QbTable {
    polys: Vec<IntPoly>,
}

impl QbTable {
    pub fn build(n_max: usize) -> Self {
        let mut polys = vec![
            IntPoly::zero(),
            IntPoly::from_i64s(&[1, 1]),
            IntPoly::from_i64s(&[1, 4, 1]),
        ];
        let t_plus_1 = IntPoly::from_i64s(&[1, 1]);
        let t3_minus_t = IntPoly::from_i64s(&[0, -1, 0, 1]);
        let two_t2_t_minus_1 = IntPoly::from_i64s(&[0, 0, -2, 2]);
        for n in 3..=n_max {
            let k = n as i64;
            let (q1, q2, q3) = (&polys[n - 1], &polys[n - 2], &polys[n - 3]);
            let next = [
                (&t_plus_1 * q1).scale_i64(k - 1),
                &IntPoly::from_i64s(&[k - 2, 3 * k - 5]) * q2,
                &t3_minus_t * &q2.derivative(),
                q3.shift(1).scale_i64(2 * k - 6),
                &two_t2_t_minus_1 * &q3.derivative(),
            ]
            .into_iter()
            .sum();
            polys.push(next);
        }
        polys.truncate(n_max + 1);
        QbTable { polys }
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, n: usize) -> &IntPoly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// `Q_n^B(1)` for every stored `n`.
    pub fn totals(&self) -> Vec<BigInt> {
        self.polys.iter().map(|p| p.eval_i64(1)).collect()
    }
}

/// `Q_n^B(t)` by the polynomial recursion.
pub fn poly_q_b(n: usize) -> IntPoly {
    QbTable::build(n).polys.swap_remove(n)
}

/// The triangle `q_{n,m}` from the seven-term coefficient recursion.
/// Row 0 is empty, matching `Q_0^B = 0`.
#[derive(Debug, Clone)]
pub struct QTable {
    rows: Vec<Vec<BigInt>>,
}

impl QTable {
    pub fn build(n_max: usize) -> Self {
        let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        let mut table = QTable {
            rows: vec![Vec::new(), ints(&[1, 1]), ints(&[1, 4, 1])],
        };
        for n in 3..=n_max {
            let row = (0..=n as i64)
                .map(|m| table.next_coeff(n as i64, m))
                .collect();
            table.rows.push(row);
        }
        table.rows.truncate(n_max + 1);
        table
    }

    fn next_coeff(&self, n: i64, m: i64) -> BigInt {
        let terms: [(i64, i64, i64); 7] = [
            (n - 1, n - 1, m - 1),
            (n - 1, n - 1, m),
            (m - 2, n - 2, m - 2),
            (3 * n - 5, n - 2, m - 1),
            (n - m - 2, n - 2, m),
            (2 * m - 4, n - 3, m - 2),
            (2 * n - 2 * m - 4, n - 3, m - 1),
        ];
        terms
            .iter()
            .map(|&(c, x, y)| BigInt::from(c) * self.get(x as usize, y))
            .sum()
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `q_{n,m}`, zero when `m < 0`, `m > n`, or row `n` is empty.
    pub fn get(&self, n: usize, m: i64) -> BigInt {
        usize::try_from(m)
            .ok()
            .and_then(|m| self.rows.get(n)?.get(m).cloned())
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `q_{n,m} - q_{n,m-1}`.
    pub fn delta_p(&self, n: usize, m: i64) -> BigInt {
        self.get(n, m) - self.get(n, m - 1)
    }
}

/// `q_{n,m}` by the coefficient recursion.
pub fn coeff_q(n: usize, m: i64) -> BigInt {
    QTable::build(n).get(n, m)
}

fn linear_sequence(
    n_max: usize,
    seeds: &[i64],
    step: impl Fn(i64, &[BigInt]) -> BigInt,
) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = seeds.iter().map(|&s| BigInt::from(s)).collect();
    for n in seeds.len()..=n_max {
        let next = step(n as i64, &out);
        out.push(next);
    }
    out.truncate(n_max + 1);
    out
}

fn at(v: &[BigInt], n: i64, back: i64) -> &BigInt {
    &v[(n - back) as usize]
}

/// `D_0..D_N`: `D_n = (n-1)(D_{n-1} + D_{n-2})`, `D_0 = 1`, `D_1 = 0`.
pub fn d_seq(n_max: usize) -> Vec<BigInt> {
    linear_sequence(n_max, &[1, 0, 1], |n, v| {
        (n - 1) * (at(v, n, 1) + at(v, n, 2))
    })
}

/// `Q_0..Q_N`: `Q_n = (n-1)Q_{n-1} + (n-2)Q_{n-2}`, `Q_1 = Q_2 = 1`.
/// `Q_0 = 0` follows `Q_0^B(0)`.
pub fn q_seq(n_max: usize) -> Vec<BigInt> {
    linear_sequence(n_max, &[0, 1, 1], |n, v| {
        (n - 1) * at(v, n, 1) + (n - 2) * at(v, n, 2)
    })
}

/// `Q_0^B..Q_N^B`: `Q_n^B = (2n-1)Q_{n-1}^B + (2n-4)Q_{n-2}^B`.
pub fn qb_seq(n_max: usize) -> Vec<BigInt> {
    linear_sequence(n_max, &[0, 2, 6], |n, v| {
        (2 * n - 1) * at(v, n, 1) + (2 * n - 4) * at(v, n, 2)
    })
}

/// `D_0^B..D_N^B`: `D_n^B = (2n-1)D_{n-1}^B + (2n-2)D_{n-2}^B`.
pub fn db_seq(n_max: usize) -> Vec<BigInt> {
    linear_sequence(n_max, &[1, 1, 5], |n, v| {
        (2 * n - 1) * at(v, n, 1) + (2 * n - 2) * at(v, n, 2)
    })
}

/// `f_0..f_N`: `f_n = (2n-2)f_{n-1} + (4n-3)f_{n-2} + (2n-2)f_{n-3}` for
/// `n >= 4`, from `f_1 = 1, f_2 = 4, f_3 = 25` and `f_0 = 0`.
pub fn f_seq(n_max: usize) -> Vec<BigInt> {
    linear_sequence(n_max, &[0, 1, 4, 25], |n, v| {
        (2 * n - 2) * at(v, n, 1) + (4 * n - 3) * at(v, n, 2) + (2 * n - 2) * at(v, n, 3)
    })
}

pub fn count_d(n: usize) -> BigInt {
    d_seq(n).swap_remove(n)
}

pub fn count_q(n: usize) -> BigInt {
    q_seq(n).swap_remove(n)
}

pub fn count_qb(n: usize) -> BigInt {
    qb_seq(n).swap_remove(n)
}

pub fn count_db(n: usize) -> BigInt {
    db_seq(n).swap_remove(n)
}

pub fn count_f(n: usize) -> BigInt {
    f_seq(n).swap_remove(n)
}

/// The reduced triangle `q̄_{n,m}`: SRDs with `m` bars whose first entry is
/// not an unbarred 1. Rows 0..=2 are seeds; later rows use the six-term
/// reflected recursion.
#[derive(Debug, Clone)]
pub struct QbarTable {
    rows: Vec<Vec<BigInt>>,
}

/// Seed rows 0..=2 counted by the oracle, with row 0 = `[1]` for the empty
/// sequence.
pub fn qbar_seeds_from_oracle() -> [Vec<BigInt>; 3] {
    let row = |n: usize| {
        let p = enumerate::brute_poly(n, SeqClass::SrdClassicalFirstNotOne);
        (0..=n).map(|m| p.coeff(m)).collect::<Vec<_>>()
    };
    [vec![BigInt::one()], row(1), row(2)]
}

impl QbarTable {
    pub fn build(n_max: usize) -> Self {
        QbarTable::build_with_seeds(n_max, qbar_seeds_from_oracle())
    }

    pub fn build_with_seeds(n_max: usize, seeds: [Vec<BigInt>; 3]) -> Self {
        let mut table = QbarTable { rows: seeds.into() };
        for n in 3..=n_max {
            let row = (0..=n as i64)
                .map(|m| table.next_coeff(n as i64, m))
                .collect();
            table.rows.push(row);
        }
        table.rows.truncate(n_max + 1);
        table
    }

    fn next_coeff(&self, n: i64, m: i64) -> BigInt {
        let terms: [(i64, i64, i64); 6] = [
            (n - 1, n - 1, m),
            (n - m - 1, n - 2, m),
            (m - 1, n - 2, m - 1),
            (n, n - 1, n - m),
            (m - 1, n - 2, n - m),
            (n - m - 1, n - 2, n - m - 1),
        ];
        terms
            .iter()
            .map(|&(c, x, y)| BigInt::from(c) * self.get(x as usize, y))
            .sum()
    }

    /// `q̄_{x,y}`, zero when `y < 0` or `y > x`.
    pub fn get(&self, n: usize, m: i64) -> BigInt {
        usize::try_from(m)
            .ok()
            .and_then(|m| self.rows.get(n)?.get(m).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }
}

/// `q̄_{n,m}` by the reflected recursion with oracle seeds.
pub fn qbar(n: usize, m: i64) -> BigInt {
    QbarTable::build(n.max(2)).get(n, m)
}
