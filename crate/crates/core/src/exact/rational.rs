use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Rising factorial x(x+1)...(x+n-1).
pub fn pochhammer(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..n {
        if t.is_zero() {
            return Rational::zero();
        }
        acc *= &t;
        t += Rational::one();
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The integer value of `r`, if it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Formats as "num/den", or just "num" when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses "p", "p/q", or "-p/q".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in it {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g.abs()
}
