use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_all, Rational};

/// Laurent polynomial in `q` with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^(low + i)`. Zero coefficients at both
/// ends are trimmed, and the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ::default()
    }

    pub fn one() -> Self {
        PolyQ::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        PolyQ::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        PolyQ::from_coeffs(exp, vec![c])
    }

    pub fn q_pow(exp: i64) -> Self {
        PolyQ::monomial(BigInt::one(), exp)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: i64) -> Self {
        &PolyQ::one() - &PolyQ::q_pow(k)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyQ { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn high_exp(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn trailing(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        PolyQ { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PolyQ::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division of every coefficient by `c`; `None` if some coefficient
    /// is not divisible.
    pub fn div_scalar(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (qq, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(qq);
        }
        Some(PolyQ::from_coeffs(self.low, out))
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        gcd_all(self.coeffs.iter())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PolyQ::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k` for k >= 1.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let mut out = PolyQ::zero();
        for (e, c) in self.terms() {
            out = &out + &PolyQ::monomial(c.clone(), e * k);
        }
        out
    }

    /// Value at a rational point. Returns `None` for `q = 0` when negative
    /// exponents are present.
    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if q.is_zero() {
            if self.low < 0 {
                return None;
            }
            return Some(Rational::from_integer(self.coeff(0)));
        }
        // Horner on the coefficient vector, then the offset power.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Rational::from_integer(c.clone());
        }
        Some(acc * pow_rational(q, self.low))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by `q - 1`, or `None` if `q = 1` is not a root.
    pub fn div_q_minus_one(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(PolyQ::zero());
        }
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // Synthetic division at 1 from the top coefficient down.
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            out[i - 1] = carry.clone();
        }
        Some(PolyQ::from_coeffs(self.low, out))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in Z[q, 1/q].
    pub fn div_exact(&self, d: &PolyQ) -> Option<PolyQ> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(PolyQ::zero());
        }
        let (n, m) = (self.coeffs.len(), d.coeffs.len());
        if n < m {
            return None;
        }
        let dl = d.coeffs.last().unwrap();
        let mut r = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let top = &r[i + m - 1];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(dl);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            quo[i] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(PolyQ::from_coeffs(self.low - d.low, quo))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c).expect("content divides")
    }

    /// Greatest common divisor in Z[q, 1/q], normalized to be an ordinary
    /// polynomial with nonzero constant term, primitive, and with positive
    /// leading coefficient. Monomial factors are units here and are dropped.
    pub fn gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
        if a.is_zero() {
            return b.primitive().shift(-b.low);
        }
        if b.is_zero() {
            return a.primitive().shift(-a.low);
        }
        let mut x = a.primitive().coeffs;
        let mut y = b.primitive().coeffs;
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = pseudo_rem(&x, &y);
            x = y;
            y = PolyQ::from_coeffs(0, r).primitive_plain();
        }
        PolyQ::from_coeffs(0, x).primitive()
    }

    fn primitive_plain(&self) -> Vec<BigInt> {
        let p = self.primitive();
        let mut v = vec![BigInt::zero(); p.low.max(0) as usize];
        v.extend(p.coeffs);
        v
    }

    /// Cyclotomic polynomial Phi_k(q).
    pub fn cyclotomic(k: u64) -> PolyQ {
        assert!(k >= 1);
        PolyQ::cyclotomics_up_to(k).pop().unwrap()
    }

    /// `[Phi_1, ..., Phi_n]`.
    pub fn cyclotomics_up_to(n: u64) -> Vec<PolyQ> {
        let mut out: Vec<PolyQ> = Vec::with_capacity(n as usize);
        for k in 1..=n {
            let mut p = &PolyQ::q_pow(k as i64) - &PolyQ::one();
            for d in 1..k {
                if k % d == 0 {
                    p = p.div_exact(&out[d as usize - 1]).expect("cyclotomic divides");
                }
            }
            out.push(p);
        }
        out
    }
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let m = b.len();
    let lb = b.last().unwrap().clone();
    loop {
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() < m {
            return r;
        }
        let lr = r.last().unwrap().clone();
        let off = r.len() - m;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[off + j] -= &lr * bc;
        }
        let g = gcd_all(r.iter());
        if !g.is_zero() && !g.is_one() {
            for c in r.iter_mut() {
                *c /= &g;
            }
        }
    }
}

pub(crate) fn pow_rational(q: &Rational, k: i64) -> Rational {
    if k >= 0 {
        num_traits::pow(q.clone(), k as usize)
    } else {
        num_traits::pow(q.recip(), (-k) as usize)
    }
}

/// `(q^m; q)_n = prod_{i<n} (1 - q^(m+i))`.
pub fn q_pochhammer(m: i64, n: u32) -> PolyQ {
    let mut acc = PolyQ::one();
    for i in 0..n as i64 {
        acc = &acc * &PolyQ::one_minus_q_pow(m + i);
    }
    acc
}

/// Gaussian binomial coefficient [n choose k]_q as a polynomial.
pub fn q_binomial(n: u32, k: u32) -> PolyQ {
    if k > n {
        return PolyQ::zero();
    }
    q_pochhammer(1, n)
        .div_exact(&(&q_pochhammer(1, k) * &q_pochhammer(1, n - k)))
        .expect("q-binomial is a polynomial")
}

impl<'a> Add<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_exp().max(o.high_exp());
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(self.low - low) as usize + i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            v[(o.low - low) as usize + i] += c;
        }
        PolyQ::from_coeffs(low, v)
    }
}

impl<'a> Sub<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        self + &(-o)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(self.low + o.low, v)
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(PolyQ, Add, add);
forward_owned!(PolyQ, Sub, sub);
forward_owned!(PolyQ, Mul, mul);
pub(crate) use forward_owned;

pub(crate) fn fmt_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    vars: &[(&str, i64)],
) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let vars: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if vars.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{}", vars.join("*"))
    } else {
        write!(f, "{a}*{}", vars.join("*"))
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            fmt_monomial(f, k == 0, c, &[("q", e)])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn q_pochhammer_examples() {
        assert_eq!(q_pochhammer(1, 2), PolyQ::from_i64s(0, &[1, -1, -1, 1]));
        assert_eq!(q_pochhammer(1, 0), PolyQ::one());
        assert!(q_pochhammer(0, 1).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = &q_pochhammer(1, 3) * &PolyQ::from_i64s(0, &[2, 5]);
        let b = &q_pochhammer(1, 2) * &PolyQ::from_i64s(0, &[7, 0, 1]);
        assert_eq!(PolyQ::gcd(&a, &b), q_pochhammer(1, 2).primitive());
        assert_eq!(a.div_exact(&q_pochhammer(1, 3)).unwrap(), PolyQ::from_i64s(0, &[2, 5]));
        assert!(a.div_exact(&PolyQ::from_i64s(0, &[7, 0, 1])).is_none());
        assert_eq!(
            PolyQ::one_minus_q_pow(5).div_q_minus_one().unwrap(),
            PolyQ::from_i64s(0, &[-1, -1, -1, -1, -1])
        );
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(PolyQ::cyclotomic(1), PolyQ::from_i64s(0, &[-1, 1]));
        assert_eq!(PolyQ::cyclotomic(6), PolyQ::from_i64s(0, &[1, -1, 1]));
        assert_eq!(PolyQ::cyclotomic(4), PolyQ::from_i64s(0, &[1, 0, 1]));
    }

    #[test]
    fn laurent_eval() {
        let p = PolyQ::from_i64s(-2, &[1, 0, 3]);
        assert_eq!(p.eval(&rat(1, 2)).unwrap(), rat(4, 1) + rat(3, 1));
        assert!(p.eval(&rat(0, 1)).is_none());
    }

    #[test]
    fn gaussian_binomial() {
        assert_eq!(q_binomial(4, 2), PolyQ::from_i64s(0, &[1, 1, 2, 1, 1]));
    }
}
