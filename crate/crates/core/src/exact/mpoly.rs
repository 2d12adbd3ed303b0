use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::polyq::{forward_owned, PolyQ};
use super::rational::{int, Rational};
use super::ratfunq::RatFunQ;

/// Polynomial in x_1..x_n with rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        MPoly::monomial(nvars, c, vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rational::one())
    }

    pub fn monomial(nvars: usize, c: Rational, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    /// The variable x_{i+1} (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(nvars, Rational::one(), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Evaluate at a point with one coordinate per variable.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                t *= num_traits::pow(xi.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

forward_owned!(MPoly, Add, add);
forward_owned!(MPoly, Sub, sub);
forward_owned!(MPoly, Mul, mul);

/// Partial exponent sums s_m = e_1 + ... + e_m + m for a monomial padded to
/// `n` variables. Integrating x^e over 0 <= x_1 <= ... <= x_n <= 1 gives
/// prod 1/s_m; the q-integral gives prod (1-q)/(1-q^{s_m}).
pub fn simplex_steps(exps: &[u32], n: usize) -> Vec<u64> {
    assert!(exps.len() <= n, "polynomial has more variables than the simplex");
    let mut acc = 0u64;
    (0..n)
        .map(|m| {
            acc += exps.get(m).copied().unwrap_or(0) as u64 + 1;
            acc
        })
        .collect()
}

/// Exact integral of `p` over the ordered simplex 0 <= x_1 <= ... <= x_n <= 1.
pub fn simplex_integrate(p: &MPoly, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        for s in simplex_steps(e, n) {
            t /= int(s as i64);
        }
        acc += t;
    }
    acc
}

/// Iterated Jackson q-integral of `p` over the same simplex, as an exact
/// rational function of q.
pub fn q_simplex_integrate(p: &MPoly, n: usize) -> RatFunQ {
    let mut acc = RatFunQ::zero();
    for (e, c) in p.terms() {
        let mut num = PolyQ::constant(c.numer().clone());
        let mut den = PolyQ::constant(c.denom().clone());
        for s in simplex_steps(e, n) {
            num = &num * &PolyQ::one_minus_q_pow(1);
            den = &den * &PolyQ::one_minus_q_pow(s as i64);
        }
        acc = &acc + &RatFunQ::new(num, den).expect("nonzero denominator");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn simplex_examples() {
        assert_eq!(simplex_integrate(&MPoly::one(2), 2), rat(1, 2));
        let x1 = MPoly::var(2, 0);
        let x2 = MPoly::var(2, 1);
        let p = &(&x2 * &x2) - &(&x1 * &x1);
        assert_eq!(simplex_integrate(&p, 2), rat(1, 6));
        assert_eq!(simplex_integrate(&MPoly::var(1, 0), 1), rat(1, 2));
    }

    #[test]
    fn q_simplex_examples() {
        let want = RatFunQ::new(PolyQ::one_minus_q_pow(1), PolyQ::one_minus_q_pow(2)).unwrap();
        assert_eq!(q_simplex_integrate(&MPoly::var(1, 0), 1), want);
        assert_eq!(q_simplex_integrate(&MPoly::one(1), 1), RatFunQ::one());
        assert_eq!(q_simplex_integrate(&MPoly::one(2), 2), want);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MPoly::var(1, 0);
        assert!((&x - &x).is_zero());
    }
}
