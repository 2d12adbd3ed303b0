use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::polyq::{forward_owned, PolyQ};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Rational function of `q` with integer coefficients, kept fully reduced
/// (univariate gcd), denominator an ordinary polynomial with nonzero constant
/// term and positive leading coefficient.
#[derive(Clone, Debug, Eq, Hash)]
pub struct RatFunQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunQ {
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: PolyQ, den: PolyQ) -> Self {
        if num.is_zero() {
            return RatFunQ { num, den: PolyQ::one() };
        }
        let g = PolyQ::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        let c = if den.leading().is_negative() { -c } else { c };
        num = num.div_scalar(&c).unwrap();
        den = den.div_scalar(&c).unwrap();
        let s = den.low_exp();
        RatFunQ { num: num.shift(-s), den: den.shift(-s) }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        Self::reduce(p, PolyQ::one())
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::reduce(PolyQ::constant(r.numer().clone()), PolyQ::constant(r.denom().clone()))
    }

    pub fn zero() -> Self {
        RatFunQ { num: PolyQ::zero(), den: PolyQ::one() }
    }

    pub fn one() -> Self {
        RatFunQ { num: PolyQ::one(), den: PolyQ::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(PolyQ::q_pow(1))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self * &r)
    }

    pub fn powi(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Some(Self::reduce(base.num.pow(k), base.den.pow(k)))
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q)? / d)
    }

    /// Limit as q -> 1: strip common factors of (q - 1) from both sides, then
    /// substitute. A pole at 1 is an error.
    pub fn limit_at_one(&self) -> Result<Rational> {
        let (mut n, mut d) = (self.num.clone(), self.den.clone());
        loop {
            let dn = d.eval_at_one();
            if !dn.is_zero() {
                return Ok(Rational::new(n.eval_at_one(), dn));
            }
            match n.div_q_minus_one() {
                Some(nn) if !n.is_zero() => {
                    n = nn;
                    d = d.div_q_minus_one().expect("vanishes at 1");
                }
                _ => return Err(Error::Domain("pole at q = 1".into())),
            }
        }
    }
}

impl PartialEq for RatFunQ {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl<'a> Add<&'a RatFunQ> for &'a RatFunQ {
    type Output = RatFunQ;
    fn add(self, o: &RatFunQ) -> RatFunQ {
        if self.den == o.den {
            return RatFunQ::reduce(&self.num + &o.num, self.den.clone());
        }
        RatFunQ::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFunQ> for &'a RatFunQ {
    type Output = RatFunQ;
    fn sub(self, o: &RatFunQ) -> RatFunQ {
        self + &(-o)
    }
}

impl Neg for &RatFunQ {
    type Output = RatFunQ;
    fn neg(self) -> RatFunQ {
        RatFunQ { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatFunQ> for &'a RatFunQ {
    type Output = RatFunQ;
    fn mul(self, o: &RatFunQ) -> RatFunQ {
        RatFunQ::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

forward_owned!(RatFunQ, Add, add);
forward_owned!(RatFunQ, Sub, sub);
forward_owned!(RatFunQ, Mul, mul);

impl fmt::Display for RatFunQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyQ::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<PolyQ> for RatFunQ {
    fn from(p: PolyQ) -> Self {
        RatFunQ::from_poly(p)
    }
}

impl From<BigInt> for RatFunQ {
    fn from(c: BigInt) -> Self {
        RatFunQ::from_poly(PolyQ::constant(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::polyq::q_pochhammer;
    use crate::exact::rational::rat;

    #[test]
    fn reduces_common_factors() {
        let f = RatFunQ::new(q_pochhammer(1, 3), q_pochhammer(1, 2).shift(2)).unwrap();
        assert_eq!(f.num(), &PolyQ::one_minus_q_pow(3).shift(-2));
        assert_eq!(f.den(), &PolyQ::one());
        let g = RatFunQ::new(PolyQ::one_minus_q_pow(1), PolyQ::one_minus_q_pow(2)).unwrap();
        assert_eq!(g.limit_at_one().unwrap(), rat(1, 2));
        assert_eq!(g.eval(&rat(1, 3)).unwrap(), rat(3, 4));
    }

    #[test]
    fn arithmetic() {
        let a = RatFunQ::new(PolyQ::one(), PolyQ::one_minus_q_pow(1)).unwrap();
        let b = RatFunQ::new(PolyQ::q_pow(1), PolyQ::one_minus_q_pow(1)).unwrap();
        assert_eq!(&a - &b, RatFunQ::one());
        assert_eq!((&a * &b).powi(-1).unwrap() * (&a * &b), RatFunQ::one());
    }
}
