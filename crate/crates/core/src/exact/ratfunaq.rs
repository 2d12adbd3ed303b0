use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::polyq::{fmt_monomial, forward_owned, PolyQ};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Polynomial in `a` whose coefficients are Laurent polynomials in `q`.
/// `parts[i]` is the coefficient of `a^i`; trailing zero parts are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyAQ {
    parts: Vec<PolyQ>,
}

impl PolyAQ {
    pub fn zero() -> Self {
        PolyAQ::default()
    }

    pub fn one() -> Self {
        PolyAQ::from_q(PolyQ::one())
    }

    pub fn from_q(p: PolyQ) -> Self {
        PolyAQ::from_parts(vec![p])
    }

    pub fn from_parts(parts: Vec<PolyQ>) -> Self {
        let mut p = PolyAQ { parts };
        while p.parts.last().is_some_and(|x| x.is_zero()) {
            p.parts.pop();
        }
        p
    }

    /// `c * a^i * q^j`.
    pub fn monomial(c: BigInt, i: usize, j: i64) -> Self {
        let mut parts = vec![PolyQ::zero(); i + 1];
        parts[i] = PolyQ::monomial(c, j);
        PolyAQ::from_parts(parts)
    }

    /// `1 - a q^k`.
    pub fn one_minus_a_q_pow(k: i64) -> Self {
        PolyAQ::from_parts(vec![PolyQ::one(), PolyQ::monomial(-BigInt::one(), k)])
    }

    pub fn parts(&self) -> &[PolyQ] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn a_degree(&self) -> usize {
        self.parts.len().saturating_sub(1)
    }

    fn min_a(&self) -> usize {
        self.parts.iter().position(|p| !p.is_zero()).unwrap_or(0)
    }

    fn min_q(&self) -> i64 {
        self.parts.iter().filter(|p| !p.is_zero()).map(|p| p.low_exp()).min().unwrap_or(0)
    }

    pub fn max_q(&self) -> i64 {
        self.parts.iter().filter(|p| !p.is_zero()).map(|p| p.high_exp()).max().unwrap_or(0)
    }

    pub fn shift_q(&self, k: i64) -> Self {
        PolyAQ { parts: self.parts.iter().map(|p| p.shift(k)).collect() }
    }

    fn drop_a(&self, k: usize) -> Self {
        PolyAQ::from_parts(self.parts[k..].to_vec())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PolyAQ::from_parts(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    fn div_scalar(&self, c: &BigInt) -> Self {
        PolyAQ::from_parts(self.parts.iter().map(|p| p.div_scalar(c).expect("content")).collect())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for p in &self.parts {
            g = g.gcd(&p.content());
        }
        g
    }

    /// Nonzero terms as (a-exponent, q-exponent, coefficient).
    pub fn terms(&self) -> Vec<(usize, i64, BigInt)> {
        let mut v = Vec::new();
        for (i, p) in self.parts.iter().enumerate() {
            for (j, c) in p.terms() {
                v.push((i, j, c.clone()));
            }
        }
        v
    }

    /// Terms in display order: ascending total degree, then ascending
    /// a-exponent.
    pub fn sorted_terms(&self) -> Vec<(usize, i64, BigInt)> {
        let mut t = self.terms();
        t.sort_by(|x, y| monomial_order((x.0, x.1), (y.0, y.1)));
        t
    }

    /// Coefficient of the largest monomial in the display order.
    pub fn leading_coeff(&self) -> BigInt {
        self.sorted_terms().pop().map(|t| t.2).unwrap_or_default()
    }

    pub fn eval(&self, a: &Rational, q: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for p in self.parts.iter().rev() {
            acc = acc * a + p.eval(q)?;
        }
        Some(acc)
    }

    fn vanishes_at_q_one(&self) -> bool {
        self.parts.iter().all(|p| p.eval_at_one().is_zero())
    }

    fn div_q_minus_one(&self) -> Self {
        PolyAQ::from_parts(
            self.parts.iter().map(|p| p.div_q_minus_one().expect("vanishes at q=1")).collect(),
        )
    }

    fn at_q_one(&self) -> PolyAQ {
        PolyAQ::from_parts(self.parts.iter().map(|p| PolyQ::constant(p.eval_at_one())).collect())
    }

    /// Exact quotient by a polynomial in `q` alone.
    pub fn div_exact_q(&self, d: &PolyQ) -> Option<Self> {
        let mut out = Vec::with_capacity(self.parts.len());
        for p in &self.parts {
            out.push(p.div_exact(d)?);
        }
        Some(PolyAQ::from_parts(out))
    }

    /// Exact quotient `self / d` in Z[a, q, 1/q], or `None`.
    pub fn div_exact(&self, d: &PolyAQ) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(PolyAQ::zero());
        }
        if d.parts.len() == 1 {
            return self.div_exact_q(&d.parts[0]);
        }
        let m = d.a_degree();
        let lead = d.parts.last().unwrap();
        let mut r = self.parts.clone();
        if r.len() < d.parts.len() {
            return None;
        }
        let mut quo = vec![PolyQ::zero(); r.len() - m];
        for i in (0..quo.len()).rev() {
            let top = &r[i + m];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, dp) in d.parts.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dp);
            }
            quo[i] = c;
        }
        if r.iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(PolyAQ::from_parts(quo))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PolyAQ::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(i, j, c)| json!([i, j, c.to_string()]))
                .collect(),
        )
    }
}

fn monomial_order(x: (usize, i64), y: (usize, i64)) -> Ordering {
    (x.0 as i64 + x.1, x.0).cmp(&(y.0 as i64 + y.1, y.0))
}

impl<'a> Add<&'a PolyAQ> for &'a PolyAQ {
    type Output = PolyAQ;
    fn add(self, o: &PolyAQ) -> PolyAQ {
        let n = self.parts.len().max(o.parts.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            match (self.parts.get(i), o.parts.get(i)) {
                (Some(x), Some(y)) => v.push(x + y),
                (Some(x), None) => v.push(x.clone()),
                (None, Some(y)) => v.push(y.clone()),
                (None, None) => unreachable!(),
            }
        }
        PolyAQ::from_parts(v)
    }
}

impl<'a> Sub<&'a PolyAQ> for &'a PolyAQ {
    type Output = PolyAQ;
    fn sub(self, o: &PolyAQ) -> PolyAQ {
        self + &(-o)
    }
}

impl Neg for &PolyAQ {
    type Output = PolyAQ;
    fn neg(self) -> PolyAQ {
        PolyAQ { parts: self.parts.iter().map(|p| -p).collect() }
    }
}

impl<'a> Mul<&'a PolyAQ> for &'a PolyAQ {
    type Output = PolyAQ;
    fn mul(self, o: &PolyAQ) -> PolyAQ {
        if self.is_zero() || o.is_zero() {
            return PolyAQ::zero();
        }
        let mut v = vec![PolyQ::zero(); self.parts.len() + o.parts.len() - 1];
        for (i, x) in self.parts.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.parts.iter().enumerate() {
                v[i + j] = &v[i + j] + &(x * y);
            }
        }
        PolyAQ::from_parts(v)
    }
}

forward_owned!(PolyAQ, Add, add);
forward_owned!(PolyAQ, Sub, sub);
forward_owned!(PolyAQ, Mul, mul);

impl fmt::Display for PolyAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in self.sorted_terms().iter().enumerate() {
            fmt_monomial(f, k == 0, c, &[("a", *i as i64), ("q", *j)])?;
        }
        Ok(())
    }
}

/// Rational function in `a` and `q` with integer coefficients.
///
/// Stored as an ordinary polynomial pair: common monomials and common integer
/// content are removed, negative powers of `q` are moved to the other side,
/// and the denominator's leading coefficient (display order) is positive.
/// Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunAQ {
    num: PolyAQ,
    den: PolyAQ,
}

impl RatFunAQ {
    pub fn new(num: PolyAQ, den: PolyAQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision("rational function with zero denominator".into()));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: PolyAQ, den: PolyAQ) -> Self {
        if num.is_zero() {
            return RatFunAQ { num, den: PolyAQ::one() };
        }
        let ma = num.min_a().min(den.min_a());
        let (num, den) = (num.drop_a(ma), den.drop_a(ma));
        let mq = num.min_q().min(den.min_q());
        let (num, den) = (num.shift_q(-mq), den.shift_q(-mq));
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        RatFunAQ { num: num.div_scalar(&c), den: den.div_scalar(&c) }
    }

    pub fn from_poly(p: PolyAQ) -> Self {
        Self::normalize(p, PolyAQ::one())
    }

    pub fn from_q(p: PolyQ) -> Self {
        Self::from_poly(PolyAQ::from_q(p))
    }

    pub fn from_ratfun_q(num: PolyQ, den: PolyQ) -> Result<Self> {
        Self::new(PolyAQ::from_q(num), PolyAQ::from_q(den))
    }

    pub fn zero() -> Self {
        RatFunAQ { num: PolyAQ::zero(), den: PolyAQ::one() }
    }

    pub fn one() -> Self {
        RatFunAQ { num: PolyAQ::one(), den: PolyAQ::one() }
    }

    pub fn constant(r: &Rational) -> Self {
        Self::normalize(
            PolyAQ::from_q(PolyQ::constant(r.numer().clone())),
            PolyAQ::from_q(PolyQ::constant(r.denom().clone())),
        )
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_q(PolyQ::q_pow(k))
    }

    pub fn num(&self) -> &PolyAQ {
        &self.num
    }

    pub fn den(&self) -> &PolyAQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalize(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        Some(Self::normalize(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn eval(&self, a: &Rational, q: &Rational) -> Option<Rational> {
        let d = self.den.eval(a, q)?;
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(a, q)? / d)
        }
    }

    /// Specialize `q = 1` after cancelling matched factors of `(1 - q)`.
    /// The result is a rational function of `a` alone.
    pub fn at_q_one(&self) -> Result<RatFunAQ> {
        let (mut n, mut d) = (self.num.clone(), self.den.clone());
        while d.vanishes_at_q_one() {
            if n.is_zero() || !n.vanishes_at_q_one() {
                return Err(Error::Domain("pole at q = 1".into()));
            }
            n = n.div_q_minus_one();
            d = d.div_q_minus_one();
        }
        Ok(Self::normalize(n.at_q_one(), d.at_q_one()))
    }

    /// Leading coefficients in `a` of numerator and denominator, with the
    /// difference of their `a`-degrees. As `a -> infinity` the function
    /// behaves like `a^diff * lead_num / lead_den`.
    pub fn a_leading(&self) -> (i64, PolyQ, PolyQ) {
        let ln = self.num.parts.last().cloned().unwrap_or_default();
        let ld = self.den.parts.last().cloned().unwrap_or_default();
        (self.num.a_degree() as i64 - self.den.a_degree() as i64, ln, ld)
    }

    /// Display form: common cyclotomic factors in `q`, common factors
    /// `1 - a q^k`, and a shared cofactor (if one side divides the other
    /// after stripping those) are cancelled.
    pub fn reduced(&self) -> RatFunAQ {
        if self.is_zero() {
            return RatFunAQ::zero();
        }
        let bound = self.num.max_q().max(self.den.max_q()).max(1) as u64;
        let (mut fnum, mut cn) = strip_basis(&self.num, bound);
        let (mut fden, mut cd) = strip_basis(&self.den, bound);
        for (f, m) in fnum.iter_mut() {
            if let Some((_, md)) = fden.iter_mut().find(|(g, _)| g == f) {
                let k = (*m).min(*md);
                *m -= k;
                *md -= k;
            }
        }
        if let Some(x) = cn.div_exact(&cd) {
            cn = x;
            cd = PolyAQ::one();
        } else if let Some(x) = cd.div_exact(&cn) {
            cd = x;
            cn = PolyAQ::one();
        }
        let build = |c: PolyAQ, fs: &[(Factor, u32)]| {
            fs.iter().fold(c, |acc, (f, m)| &acc * &f.poly().pow(*m))
        };
        Self::normalize(build(cn, &fnum), build(cd, &fden))
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

/// Largest cyclotomic index tried when building display forms.
const CYCLOTOMIC_LIMIT: u64 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    Cyclotomic(u64, PolyQ),
    OneMinusAQ(i64),
}

impl Factor {
    fn poly(&self) -> PolyAQ {
        match self {
            Factor::Cyclotomic(_, p) => PolyAQ::from_q(p.clone()),
            Factor::OneMinusAQ(k) => PolyAQ::one_minus_a_q_pow(*k),
        }
    }
}

fn strip_basis(p: &PolyAQ, bound: u64) -> (Vec<(Factor, u32)>, PolyAQ) {
    let mut rest = p.clone();
    let mut out = Vec::new();
    let mut basis: Vec<Factor> = PolyQ::cyclotomics_up_to(bound.min(CYCLOTOMIC_LIMIT))
        .into_iter()
        .enumerate()
        .map(|(i, c)| Factor::Cyclotomic(i as u64 + 1, c))
        .collect();
    basis.extend((0..=bound as i64).map(Factor::OneMinusAQ));
    for f in basis {
        let fp = f.poly();
        let mut m = 0;
        while let Some(x) = rest.div_exact(&fp) {
            rest = x;
            m += 1;
        }
        if m > 0 {
            out.push((f, m));
        }
    }
    (out, rest)
}

impl PartialEq for RatFunAQ {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFunAQ {}

impl<'a> Add<&'a RatFunAQ> for &'a RatFunAQ {
    type Output = RatFunAQ;
    fn add(self, o: &RatFunAQ) -> RatFunAQ {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // Denominators that agree up to a power of q share a cheap common
        // multiple.
        let (k1, k2) = (self.den.min_q(), o.den.min_q());
        if self.den.shift_q(-k1) == o.den.shift_q(-k2) {
            let k = k1.max(k2);
            let n = &self.num.shift_q(k - k1) + &o.num.shift_q(k - k2);
            return RatFunAQ::normalize(n, self.den.shift_q(k - k1));
        }
        RatFunAQ::normalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFunAQ> for &'a RatFunAQ {
    type Output = RatFunAQ;
    fn sub(self, o: &RatFunAQ) -> RatFunAQ {
        self + &(-o)
    }
}

impl Neg for &RatFunAQ {
    type Output = RatFunAQ;
    fn neg(self) -> RatFunAQ {
        RatFunAQ { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatFunAQ> for &'a RatFunAQ {
    type Output = RatFunAQ;
    fn mul(self, o: &RatFunAQ) -> RatFunAQ {
        RatFunAQ::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

forward_owned!(RatFunAQ, Add, add);
forward_owned!(RatFunAQ, Sub, sub);
forward_owned!(RatFunAQ, Mul, mul);

impl fmt::Display for RatFunAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &PolyAQ| if p.terms().len() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn f(n: PolyAQ, d: PolyAQ) -> RatFunAQ {
        RatFunAQ::new(n, d).unwrap()
    }

    #[test]
    fn normalization_folds_negative_powers() {
        let w = f(PolyAQ::one_minus_a_q_pow(3), &PolyAQ::one_minus_a_q_pow(1) * &PolyAQ::from_q(PolyQ::q_pow(1)));
        let same = f(PolyAQ::one_minus_a_q_pow(3).shift_q(-1), PolyAQ::one_minus_a_q_pow(1));
        assert_eq!(w, same);
        assert!(same.den().terms().iter().all(|t| t.1 >= 0));
        assert!(same.num().terms().iter().all(|t| t.1 >= 0));
    }

    #[test]
    fn reduction_cancels_shared_cofactor() {
        let p = PolyAQ::from_parts(vec![PolyQ::from_i64s(0, &[1, 1, 1]), PolyQ::monomial(BigInt::from(-1), 7)]);
        let n = &(&p * &PolyAQ::from_q(PolyQ::one_minus_q_pow(4))) * &PolyAQ::one_minus_a_q_pow(5);
        let d = &(&p * &PolyAQ::from_q(PolyQ::one_minus_q_pow(3))) * &PolyAQ::one_minus_a_q_pow(4);
        let r = f(n, d).reduced();
        let want = f(
            &PolyAQ::from_q(PolyQ::one_minus_q_pow(4)) * &PolyAQ::one_minus_a_q_pow(5),
            &PolyAQ::from_q(PolyQ::one_minus_q_pow(3)) * &PolyAQ::one_minus_a_q_pow(4),
        );
        assert_eq!(r, want);
        // (1+q+q^2)(1 - a q^4) is what is left downstairs once the shared
        // cofactor and the common (1 - q) are gone.
        assert_eq!(r.den().max_q(), 6);
        assert_eq!(r.num().max_q(), 8);
    }

    #[test]
    fn q_one_specialization() {
        let x = f(
            &PolyAQ::from_q(PolyQ::one_minus_q_pow(4)) * &PolyAQ::one_minus_a_q_pow(5),
            &PolyAQ::from_q(PolyQ::one_minus_q_pow(3)) * &PolyAQ::one_minus_a_q_pow(4),
        );
        assert_eq!(x.at_q_one().unwrap(), RatFunAQ::constant(&rat(4, 3)));
        assert_eq!(x.eval(&rat(2, 1), &rat(1, 2)).unwrap(), x.num().eval(&rat(2, 1), &rat(1, 2)).unwrap() / x.den().eval(&rat(2, 1), &rat(1, 2)).unwrap());
    }
}
