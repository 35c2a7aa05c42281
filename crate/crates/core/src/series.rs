//! Truncated power series with exact rational coefficients, and the fixed
//! points `P_d`, `Q_d` counting 213-avoiding d-Fishburn permutations.

use alloc::{vec, vec::Vec};
use core::ops::{Add, Mul, Neg, Sub};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `c_0 + c_1 x + … + c_N x^N`, all arithmetic taken modulo `x^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(BigRational::one(), order)
    }

    /// `c x^k`, which is zero when `k > order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs<I: IntoIterator<Item = BigRational>>(coeffs: I, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        TruncSeries::from_coeffs(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = TruncSeries::zero(self.order());
        for i in 0..n.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TruncSeries::one(self.order()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncSeries { coeffs: out })
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        let n = self.coeffs.len();
        let mut out = TruncSeries::zero(self.order());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// Right-hand side of the equation for `P_d`:
/// `1 + xP² + q x² P²` when `d = 0`, `1 + xP² + q x^{d+1} P^d` otherwise.
pub fn p_equation_rhs(d: usize, q: &BigRational, p: &TruncSeries) -> TruncSeries {
    let order = p.order();
    let sq = p * p;
    let tail = if d == 0 {
        sq.shift(2)
    } else {
        p.pow(d as u32).shift(d + 1)
    };
    &(&TruncSeries::one(order) + &sq.shift(1)) + &tail.scale(q)
}

/// `P - rhs(P)`, zero exactly at the fixed point.
pub fn p_residual(d: usize, q: &BigRational, p: &TruncSeries) -> TruncSeries {
    p - &p_equation_rhs(d, q, p)
}

/// The fixed point `P_d(q, x)` to order `order`. Every term of the right-hand
/// side past the constant carries a factor `x`, so each pass from `P = 1`
/// fixes at least one more coefficient.
pub fn solve_p(d: usize, q: &BigRational, order: usize) -> TruncSeries {
    let mut p = TruncSeries::one(order);
    for _ in 0..=order {
        p = p_equation_rhs(d, q, &p);
    }
    assert!(
        p_residual(d, q, &p).is_zero(),
        "fixed point did not converge"
    );
    p
}

/// `Q_0 = 1/(1 - xP_0)` and `Q_d = 1/(1 - x/(1 - xP_d))` for `d >= 1`.
pub fn series_q(d: usize, q: &BigRational, order: usize) -> TruncSeries {
    let p = solve_p(d, q, order);
    let one = TruncSeries::one(order);
    let inner = (&one - &p.shift(1)).recip().expect("constant term is 1");
    if d == 0 {
        inner
    } else {
        (&one - &inner.shift(1))
            .recip()
            .expect("constant term is 1")
    }
}

/// Coefficients of `Q_d(-1, x)`, the counts of 213-avoiding d-Fishburn
/// permutations of length `0..=order`.
pub fn fishburn_213_counts(d: usize, order: usize) -> Vec<BigInt> {
    let q = -BigRational::one();
    series_q(d, &q, order)
        .to_integers()
        .expect("integral coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{count_ddu_factor, dyck_paths};

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn arithmetic() {
        let a = TruncSeries::from_ints(&[1, -1], 5);
        let inv = a.recip().unwrap();
        assert_eq!(ints(&inv), [1, 1, 1, 1, 1, 1]);
        assert!((&(&a * &inv) - &TruncSeries::one(5)).is_zero());
        assert_eq!(ints(&a.pow(2)), [1, -2, 1, 0, 0, 0]);
        assert_eq!(ints(&a.shift(5)), [0, 0, 0, 0, 0, 1]);
        assert_eq!(ints(&-&a), [-1, 1, 0, 0, 0, 0]);
        assert_eq!(TruncSeries::zero(3).recip(), Err(Error::NotInvertible));
        let half = TruncSeries::constant(rat(2), 2).recip().unwrap();
        assert_eq!(half.to_integers(), None);
    }

    #[test]
    fn catalan_at_q_zero() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for d in 0..=4 {
            assert_eq!(ints(&solve_p(d, &rat(0), 6)), catalan);
        }
        let brute: Vec<i64> = (0..=6).map(|n| dyck_paths(n).len() as i64).collect();
        assert_eq!(brute, catalan);
    }

    #[test]
    fn q0_closed_form() {
        let order = 12;
        let denominator = TruncSeries::from_ints(&[1, -2], order).recip().unwrap();
        let closed = &TruncSeries::from_ints(&[1, -1], order) * &denominator;
        assert_eq!(series_q(0, &rat(-1), order), closed);
        assert_eq!(
            ints(&series_q(0, &rat(-1), 8)),
            [1, 1, 2, 4, 8, 16, 32, 64, 128]
        );
    }

    /// `Q²·disc - (2(1 - x) - Q·lin)²`, zero when `Q = 2(1 - x)/(lin + √disc)`.
    fn closed_form_residual(q: &TruncSeries, disc: &[i64], lin: &[i64]) -> TruncSeries {
        let order = q.order();
        let disc = TruncSeries::from_ints(disc, order);
        let lin = TruncSeries::from_ints(lin, order);
        let two_one_minus_x = TruncSeries::from_ints(&[2, -2], order);
        let rhs = &two_one_minus_x - &(q * &lin);
        &(&(q * q) * &disc) - &(&rhs * &rhs)
    }

    #[test]
    fn q1_q2_closed_forms() {
        let q1 = series_q(1, &rat(-1), 14);
        assert!(closed_form_residual(&q1, &[1, -4, 2, 0, 1], &[1, -2, 1]).is_zero());
        let q2 = series_q(2, &rat(-1), 14);
        assert!(closed_form_residual(&q2, &[1, -4, 0, 4], &[1, -2, 2]).is_zero());
        assert!(!closed_form_residual(&q1, &[1, -4, 0, 4], &[1, -2, 2]).is_zero());
    }

    #[test]
    fn factor_distribution() {
        for d in 0..=3 {
            for qv in [-1i64, 0, 1, 2] {
                let series = series_q(d, &rat(qv - 1), 8);
                for n in 0..=8 {
                    let brute: i64 = dyck_paths(n)
                        .iter()
                        .map(|r| qv.pow(count_ddu_factor(r, d) as u32))
                        .sum();
                    assert_eq!(series.coeff(n), &rat(brute), "d={d} q={qv} n={n}");
                }
            }
        }
    }

    #[test]
    fn converges_to_catalan() {
        let catalan: Vec<i64> = (0..=10).map(|n| dyck_paths(n).len() as i64).collect();
        for d in 0..=10 {
            let counts: Vec<i64> = fishburn_213_counts(d, 10)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect();
            for n in 0..=10 {
                if d + 2 >= n {
                    assert_eq!(counts[n], catalan[n], "d={d} n={n}");
                } else {
                    assert!(counts[n] < catalan[n], "d={d} n={n}");
                }
            }
        }
    }
}
