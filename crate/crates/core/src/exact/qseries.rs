use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::polyq::PolyQ;
use super::ratfunq::RatFunQ;
use crate::error::{Error, Result};

/// Power series in q with integer coefficients, truncated after q^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { order, coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        coeffs.truncate(order + 1);
        QSeries { order, coeffs }
    }

    /// Truncation of an ordinary polynomial. Negative exponents are an error.
    pub fn from_poly(p: &PolyQ, order: usize) -> Result<Self> {
        if !p.is_zero() && p.low_exp() < 0 {
            return Err(Error::Domain("negative power of q in a power series".into()));
        }
        let mut s = QSeries::zero(order);
        for (e, c) in p.terms() {
            if (e as usize) <= order {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    /// Expansion of a rational function whose denominator has constant term
    /// +-1 (after reduction) and whose numerator has no negative powers.
    pub fn from_ratfun(f: &RatFunQ, order: usize) -> Result<Self> {
        let n = QSeries::from_poly(f.num(), order)?;
        let d = QSeries::from_poly(f.den(), order)?;
        Ok(&n * &d.inverse()?)
    }

    /// `1/(1 - q^k)` for k >= 1.
    pub fn inv_one_minus_q_pow(k: usize, order: usize) -> Self {
        assert!(k >= 1);
        let mut s = QSeries::zero(order);
        let mut i = 0;
        while i <= order {
            s.coeffs[i] = BigInt::one();
            i += k;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        QSeries::from_coeffs(order, self.coeffs.clone())
    }

    /// Multiply by q^k, k >= 0.
    pub fn shift(&self, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        QSeries::from_coeffs(self.order, v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplicative inverse; requires constant term +-1 so the result stays
    /// integral.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::Domain("series inverse needs a unit constant term".into()));
        }
        let mut inv = QSeries::zero(self.order);
        for k in 0..=self.order {
            let mut acc = if k == 0 { BigInt::one() } else { BigInt::zero() };
            for j in 1..=k {
                acc -= &self.coeffs[j] * &inv.coeffs[k - j];
            }
            let (qq, r) = acc.div_rem(c0);
            debug_assert!(r.is_zero());
            inv.coeffs[k] = qq;
        }
        Ok(inv)
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, o: &QSeries) -> QSeries {
        let order = self.order.min(o.order);
        QSeries::from_coeffs(order, (0..=order).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, o: &QSeries) -> QSeries {
        let order = self.order.min(o.order);
        QSeries::from_coeffs(order, (0..=order).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect())
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, o: &QSeries) -> QSeries {
        let order = self.order.min(o.order);
        let mut v = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                v[i + j] += &self.coeffs[i] * &o.coeffs[j];
            }
        }
        QSeries { order, coeffs: v }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::polyq::q_pochhammer;

    #[test]
    fn inverse_of_pochhammer() {
        let p = QSeries::from_poly(&q_pochhammer(1, 3), 10).unwrap();
        let inv = p.inverse().unwrap();
        let want = &(&QSeries::inv_one_minus_q_pow(1, 10) * &QSeries::inv_one_minus_q_pow(2, 10))
            * &QSeries::inv_one_minus_q_pow(3, 10);
        assert_eq!(inv, want);
        assert_eq!(&p * &inv, QSeries::one(10));
    }
}
