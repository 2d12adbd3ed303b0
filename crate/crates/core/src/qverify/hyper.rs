
use crate::error::{Error, Result};
use crate::exact::{int, Field, Rational};

/// Terminating series Σ_{j<terms} prefactor · z^j · ∏(a)_j / ∏(b)_j.
/// Include 1 among the lower parameters for the usual 1/j!.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSpec {
    pub numer: Vec<Rational>,
    pub denom: Vec<Rational>,
    pub terms: usize,
    pub prefactor: Rational,
    pub z: Rational,
}

impl HyperSpec {
    pub fn new(numer: Vec<Rational>, denom: Vec<Rational>, terms: usize) -> Self {
        HyperSpec { numer, denom, terms, prefactor: int(1), z: int(1) }
    }

    pub fn with_prefactor(mut self, c: Rational) -> Self {
        self.prefactor = c;
        self
    }
}

pub fn hyper_sum(spec: &HyperSpec) -> Result<Rational> {
    let mut sum = int(0);
    let mut term = spec.prefactor.clone();
    for j in 0..spec.terms {
        if j > 0 {
            let k = Rational::from_integer((j as i64 - 1).into());
            for b in &spec.denom {
                let f = b + &k;
                if num_traits::Zero::is_zero(&f) {
                    return Err(Error::Domain(format!("lower parameter {b} hits zero at term {j}")));
                }
                term /= f;
            }
            for a in &spec.numer {
                term *= a + &k;
            }
            term *= &spec.z;
        }
        sum += &term;
    }
    Ok(sum)
}

/// c · q^e, the shape of every parameter fed to the basic series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMono {
    pub coef: Rational,
    pub exp: i64,
}

impl QMono {
    pub fn new(coef: Rational, exp: i64) -> Self {
        QMono { coef, exp }
    }

    pub fn pow(exp: i64) -> Self {
        QMono::new(int(1), exp)
    }

    pub fn eval<F: Field>(&self, q: &F) -> F {
        F::from_rational(&self.coef).mul(&q.powi(self.exp).expect("q is nonzero"))
    }
}

/// (x; p)_n.
pub fn qpoch<F: Field>(x: &F, p: &F, n: usize) -> F {
    let mut acc = F::one();
    let mut xp = x.clone();
    for _ in 0..n {
        acc = acc.mul(&F::one().sub(&xp));
        xp = xp.mul(p);
    }
    acc
}

/// Σ_{k ≤ terms} z^k ∏(x; p)_k / ∏(y; p)_k, with an optional very-well-poised
/// factor (1 - w p^{2k}) / (1 - w) standing for (p√w, -p√w; p)_k / (√w, -√w; p)_k.
/// The lower list must contain p itself for the (p; p)_k.
pub fn basic_sum<F: Field>(
    numer: &[F],
    denom: &[F],
    p: &F,
    z: &F,
    terms: usize,
    well_poised: Option<&F>,
) -> Result<F> {
    let zero_den = || Error::Domain("vanishing lower parameter in a basic series".into());
    let mut sum = F::zero();
    let mut num = F::one();
    let mut den = F::one();
    let mut pk = F::one();
    for k in 0..=terms {
        if k > 0 {
            for x in numer {
                num = num.mul(&F::one().sub(&x.mul(&pk)));
            }
            for y in denom {
                den = den.mul(&F::one().sub(&y.mul(&pk)));
            }
            num = num.mul(z);
            pk = pk.mul(p);
        }
        if den.is_zero() {
            return Err(zero_den());
        }
        let mut t = num.div(&den).ok_or_else(zero_den)?;
        if let Some(w) = well_poised {
            let f = F::one().sub(&w.mul(&pk.mul(&pk)));
            t = t.mul(&f).div(&F::one().sub(w)).ok_or_else(zero_den)?;
        }
        sum = sum.add(&t);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn trivial_sums() {
        assert_eq!(hyper_sum(&HyperSpec::new(vec![], vec![], 0)).unwrap(), int(0));
        let s = HyperSpec::new(vec![int(3)], vec![int(1)], 1).with_prefactor(rat(2, 7));
        assert_eq!(hyper_sum(&s).unwrap(), rat(2, 7));
        let s = HyperSpec::new(vec![int(-2)], vec![int(1)], 3);
        assert_eq!(hyper_sum(&s).unwrap(), int(0)); // (1-1)^2
        let bad = HyperSpec::new(vec![int(1)], vec![int(-1)], 3);
        assert!(hyper_sum(&bad).is_err());
    }

    #[test]
    fn q_binomial_theorem_terminating() {
        // Σ_k (q^{-n}; q)_k / (q; q)_k · (x q^n)^k = (x; q)_n
        let q = rat(2, 5);
        let x = rat(3, 7);
        let n = 4;
        let qn = QMono::pow(-n).eval(&q);
        let z = &x * QMono::pow(n).eval(&q);
        let s = basic_sum(&[qn], &[q.clone()], &q, &z, n as usize, None).unwrap();
        assert_eq!(s, qpoch(&x, &q, n as usize));
    }
}
