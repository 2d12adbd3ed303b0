//! Down-degree expectations E(X) and E(Y), the CDE test, closed forms for the
//! known families, and exhaustive scans against the converse conjectures.

mod scan;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::exact::{int, rat, Rational};
use crate::interval::{chain_weights, enumerate_interval, interval_sums};
use crate::shapes::{add_parts, balanced_slope, classify, staircase, validate, Diagram, Kind, Partition, StrictPartition};
use crate::tableaux::{
    count_sbt_shifted, count_sbt_straight, count_syt_straight, count_syt_thrall, enumerate_sbt, enumerate_syt,
    SbtMethod,
};

pub use scan::{scan, scan_with, ScanRecord, CSV_HEADER};

/// How E(Y) is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YMethod {
    /// SBT count from the closed product formulas.
    Formula,
    /// Maximal-chain counts through every element of the interval.
    Chains,
    /// SBT and SYT counts by enumeration.
    Sbt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectations {
    pub e_x: Rational,
    pub e_y: Rational,
    pub cde: bool,
}

/// E(X): average down-degree over [∅, λ].
pub fn expect_x(lam: &[u32], kind: Kind) -> Result<Rational> {
    let (r, s) = interval_sums(lam, kind)?;
    Ok(Rational::new(s, r))
}

/// E(Y): average down-degree when each element is weighted by the number of
/// maximal chains through it.
pub fn expect_y(lam: &[u32], kind: Kind, method: YMethod) -> Result<Rational> {
    validate(lam, kind)?;
    if lam.is_empty() {
        return Ok(Rational::zero());
    }
    let n1 = BigInt::from(lam.iter().sum::<u32>() + 1);
    Ok(match method {
        YMethod::Formula => {
            let (plus, base) = match kind {
                Kind::Straight => {
                    let p = Partition::new(lam.to_vec())?;
                    (count_sbt_straight(&p), count_syt_straight(&p))
                }
                Kind::Shifted => {
                    let p = StrictPartition::new(lam.to_vec())?;
                    (count_sbt_shifted(&p, SbtMethod::Product)?, count_syt_thrall(&p))
                }
            };
            Rational::new(plus, n1 * base)
        }
        YMethod::Chains => {
            let idx = enumerate_interval(lam, kind)?;
            let w = chain_weights(&idx);
            let mut num = BigInt::zero();
            for i in 0..idx.len() {
                num += &w.c_down[i] * &w.c_up[i] * idx.down_degree(i);
            }
            Rational::new(num, n1 * &w.c_down[idx.top()])
        }
        YMethod::Sbt => {
            let d = Diagram::of(lam, kind)?;
            Rational::new(enumerate_sbt(&d).total, n1 * enumerate_syt(&d))
        }
    })
}

/// Both expectations (E(Y) by formula) and whether they coincide.
pub fn is_cde(lam: &[u32], kind: Kind) -> Result<Expectations> {
    let e_x = expect_x(lam, kind)?;
    let e_y = expect_y(lam, kind, YMethod::Formula)?;
    let cde = e_x == e_y;
    Ok(Expectations { e_x, e_y, cde })
}

/// Which known family a closed form came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Straight balanced shape of slope m: λ₁/(1 + 1/m).
    Balanced { slope: Rational },
    /// δ_d + δ_e(a^a): (d + a(e-1))/4.
    DeltaSum { a: u32, d: u32, e: u32 },
    /// δ_{n+1} + ν, ν balanced k×k: (n+1+k)/4.
    BalancedShifted1 { n: u32, k: u32 },
    /// δ_{n+1} + (n-1-k)^n + ν: n/2.
    BalancedShifted2 { n: u32, k: u32 },
    /// (N, N-2, ..., N-2n+2): |λ|/(N+1).
    Trapezoid { big_n: u32, n: u32 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Balanced { slope } => write!(f, "balanced(slope={slope})"),
            Provenance::DeltaSum { a, d, e } => write!(f, "delta-sum(a={a},d={d},e={e})"),
            Provenance::BalancedShifted1 { n, k } => write!(f, "balanced-shifted-1(n={n},k={k})"),
            Provenance::BalancedShifted2 { n, k } => write!(f, "balanced-shifted-2(n={n},k={k})"),
            Provenance::Trapezoid { big_n, n } => write!(f, "trapezoid(N={big_n},n={n})"),
        }
    }
}

fn sub_parts(x: &[u32], y: &[u32]) -> Option<Vec<u32>> {
    let mut v = Vec::with_capacity(x.len());
    for (i, &p) in x.iter().enumerate() {
        v.push(p.checked_sub(y.get(i).copied().unwrap_or(0))?);
    }
    while v.last() == Some(&0) {
        v.pop();
    }
    Some(v)
}

fn is_square_balanced(nu: &[u32]) -> bool {
    nu.is_empty() || (nu[0] as usize == nu.len() && balanced_slope(nu).is_some())
}

fn delta_sum_params(lam: &[u32]) -> Option<(u32, u32, u32)> {
    let d = lam.len() as u32 + 1;
    let nu = sub_parts(lam, staircase(d).parts())?;
    if nu.is_empty() {
        return (d > 1).then_some((1, d, 1));
    }
    let top = nu[0];
    (1..=top).filter(|a| top % a == 0).find_map(|a| {
        let e = top / a + 1;
        let mut want = Vec::new();
        for r in (1..e).rev() {
            want.extend(std::iter::repeat_n(a * r, a as usize));
        }
        (want == nu && d > a * (e - 1) + 1).then_some((a, d, e))
    })
}

/// The value E(X) = E(Y) predicted by a proven closed form, when λ belongs to
/// one of the known families.
pub fn closed_form(lam: &[u32], kind: Kind) -> Result<Option<(Rational, Provenance)>> {
    let c = classify(lam, kind)?;
    if lam.is_empty() {
        return Ok(None);
    }
    let w = lam[0] as i64;
    let size: u32 = lam.iter().sum();
    Ok(match kind {
        Kind::Straight => c.slope.map(|m| {
            let v = int(w) / (int(1) + m.recip());
            (v, Provenance::Balanced { slope: m })
        }),
        Kind::Shifted => {
            if let Some((a, d, e)) = delta_sum_params(lam) {
                return Ok(Some((rat((d + a * (e - 1)) as i64, 4), Provenance::DeltaSum { a, d, e })));
            }
            let n = lam.len() as u32;
            let rest = sub_parts(lam, staircase(n + 1).parts());
            if let Some(nu) = rest.as_deref().filter(|nu| is_square_balanced(nu) && (nu.len() as u32) < n) {
                let k = nu.len() as u32;
                return Ok(Some((rat((n + 1 + k) as i64, 4), Provenance::BalancedShifted1 { n, k })));
            }
            for k in 0..n {
                let base = add_parts(staircase(n + 1).parts(), &vec![n - 1 - k; n as usize]);
                if let Some(nu) = sub_parts(lam, &base).filter(|nu| nu.len() as u32 == k && is_square_balanced(nu)) {
                    debug_assert_eq!(nu.len() as u32, k);
                    return Ok(Some((rat(n as i64, 2), Provenance::BalancedShifted2 { n, k })));
                }
            }
            if c.trapezoidal {
                let v = rat(size as i64, w + 1);
                return Ok(Some((v, Provenance::Trapezoid { big_n: lam[0], n })));
            }
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expectation_examples() {
        assert_eq!(expect_x(&[2, 2], Kind::Straight).unwrap(), rat(1, 1));
        assert_eq!(expect_x(&[4, 2], Kind::Shifted).unwrap(), rat(6, 5));
        assert_eq!(expect_x(&[3, 1], Kind::Shifted).unwrap(), rat(1, 1));
        for m in [YMethod::Formula, YMethod::Chains, YMethod::Sbt] {
            assert_eq!(expect_y(&[2, 1], Kind::Straight, m).unwrap(), rat(1, 1));
            assert_eq!(expect_y(&[4, 2], Kind::Shifted, m).unwrap(), rat(6, 5));
            assert_eq!(expect_y(&[2, 1], Kind::Shifted, m).unwrap(), rat(3, 4));
        }
    }

    #[test]
    fn cde_examples() {
        assert!(!is_cde(&[4, 3, 1], Kind::Shifted).unwrap().cde);
        let e = is_cde(&[3, 1], Kind::Shifted).unwrap();
        assert!(e.cde && e.e_x == rat(1, 1));
        let e = is_cde(&[2, 2], Kind::Straight).unwrap();
        assert!(e.cde && e.e_y == rat(1, 1));
    }

    #[test]
    fn closed_form_examples() {
        let (v, p) = closed_form(&[3, 1], Kind::Shifted).unwrap().unwrap();
        assert_eq!((v, p), (rat(1, 1), Provenance::DeltaSum { a: 1, d: 3, e: 2 }));
        let (v, p) = closed_form(&[4, 2], Kind::Shifted).unwrap().unwrap();
        assert_eq!((v, p), (rat(6, 5), Provenance::Trapezoid { big_n: 4, n: 2 }));
        assert_eq!(closed_form(&[2, 1], Kind::Shifted).unwrap().unwrap().0, rat(3, 4));
        assert_eq!(closed_form(&[4, 3, 1], Kind::Shifted).unwrap(), None);
        assert_eq!(closed_form(&[3, 3], Kind::Straight).unwrap().unwrap().0, rat(6, 5));
        let (_, p) = closed_form(&[14, 13, 10, 9, 6, 5, 2, 1], Kind::Shifted).unwrap().unwrap();
        assert_eq!(p, Provenance::DeltaSum { a: 2, d: 9, e: 4 });
    }
}
