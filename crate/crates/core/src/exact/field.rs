use num_traits::{One, Zero};

use super::polyq::pow_rational;
use super::rational::Rational;
use super::ratfunq::RatFunQ;

/// Minimal exact field interface, so that q-series terms can be evaluated
/// either at a rational point or symbolically in Q(q).
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `None` when dividing by zero.
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn powi(&self, k: i64) -> Option<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn powi(&self, k: i64) -> Option<Self> {
        if k < 0 && Zero::is_zero(self) {
            None
        } else {
            Some(pow_rational(self, k))
        }
    }
}

impl Field for RatFunQ {
    fn zero() -> Self {
        RatFunQ::zero()
    }
    fn one() -> Self {
        RatFunQ::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunQ::from_rational(r)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn is_zero(&self) -> bool {
        RatFunQ::is_zero(self)
    }
    fn powi(&self, k: i64) -> Option<Self> {
        RatFunQ::powi(self, k)
    }
}
