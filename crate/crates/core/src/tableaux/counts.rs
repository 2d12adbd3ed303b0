use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{as_integer, factorial, int, Rational};
use crate::shapes::{ne_corners, Kind, Partition, StrictPartition};

/// Closed-form method for shifted SBT counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbtMethod {
    /// The product over rows with a sum over northeast corners.
    Product,
    /// Weighted sum of SYT counts of the shapes λ ∪ {NE corner}.
    NeSum,
}

/// `parts` with one cell added at the end of row `row` (1-based); `row` may be
/// one past the last row.
pub fn with_cell(parts: &[u32], row: usize) -> Vec<u32> {
    let mut v = parts.to_vec();
    if row > v.len() {
        v.push(1);
    } else {
        v[row - 1] += 1;
    }
    v
}

fn expect_integer(r: Rational, what: &str) -> BigInt {
    as_integer(&r).unwrap_or_else(|| panic!("{what} evaluated to non-integer {r}"))
}

/// Hook-length formula |λ|! / ∏ h(u) with h = λ_i + λ'_j - i - j + 1.
pub fn count_syt_straight(p: &Partition) -> BigInt {
    let conj = p.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            let h = row as usize - j + conj.parts()[j] as usize - i - 1;
            hooks *= h;
        }
    }
    let f = factorial(p.size() as u64);
    debug_assert!((&f % &hooks).is_zero());
    f / hooks
}

/// |λ|!/∏λ_i! · ∏_{i<j} (λ_i - λ_j)/(λ_i + λ_j).
pub fn count_syt_thrall(p: &StrictPartition) -> BigInt {
    let l = p.parts();
    let mut r = Rational::from_integer(factorial(p.size() as u64));
    for &x in l {
        r /= Rational::from_integer(factorial(x as u64));
    }
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            r *= Rational::new((l[i] - l[j]).into(), (l[i] + l[j]).into());
        }
    }
    expect_integer(r, "shifted hook formula")
}

/// SYT count of a straight or shifted shape by its product formula.
pub fn count_syt_formula(parts: &[u32], kind: Kind) -> Result<BigInt> {
    Ok(match kind {
        Kind::Straight => count_syt_straight(&Partition::new(parts.to_vec())?),
        Kind::Shifted => count_syt_thrall(&StrictPartition::new(parts.to_vec())?),
    })
}

/// Σ_{k: λ_k < λ_{k-1}} λ_k f^{λ ∪ (k, λ_k+1)}, λ_0 = ∞. Row n+1 has weight 0.
pub fn count_sbt_straight(p: &Partition) -> BigInt {
    let mut total = BigInt::zero();
    for k in 1..=p.len() {
        if p.part(k) < p.part(k - 1) {
            let q = Partition::new(with_cell(p.parts(), k)).expect("adding an inner corner");
            total += count_syt_straight(&q) * p.part(k);
        }
    }
    total
}

/// The same count as one product, with the row factors written through the
/// contents c_i = λ_i - i:
/// Σ_k λ_k (|λ|+1)! / ((λ_k+n-k+1) ∏(λ_i+n-i)!) ∏_{i<j}(λ_i-λ_j-i+j)
///     ∏_{i≠k} (c_k - c_i + 1)/(c_k - c_i).
pub fn count_sbt_straight_product(p: &Partition) -> BigInt {
    let n = p.len();
    let l: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
    let c = p.contents();
    let mut base = Rational::from_integer(factorial(p.size() as u64 + 1));
    for (i, &li) in l.iter().enumerate() {
        base /= Rational::from_integer(factorial((li + n as i64 - i as i64 - 1) as u64));
        for (j, &lj) in l.iter().enumerate().skip(i + 1) {
            base *= int(li - lj + j as i64 - i as i64);
        }
    }
    let mut total = Rational::zero();
    for k in 1..=n {
        if p.part(k) >= p.part(k - 1) {
            continue;
        }
        let lk = l[k - 1];
        let mut t = &base * int(lk) / int(lk + n as i64 - k as i64 + 1);
        for i in (1..=n).filter(|&i| i != k) {
            let d = c[k - 1] - c[i - 1];
            t *= Rational::new((d + 1).into(), d.into());
        }
        total += t;
    }
    expect_integer(total, "straight SBT product")
}

/// Shifted SBT count by either closed form.
pub fn count_sbt_shifted(p: &StrictPartition, method: SbtMethod) -> Result<BigInt> {
    if p.is_empty() {
        return Err(Error::Domain("the empty shape has no SBT".into()));
    }
    let n = p.len() as i64;
    let l: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
    let size = p.size() as i64;
    Ok(match method {
        SbtMethod::Product => {
            let mut pre = Rational::from_integer(factorial(size as u64 + 1)) / int(2);
            for (i, &li) in l.iter().enumerate() {
                pre /= Rational::from_integer(factorial(li as u64));
                for &lj in &l[i + 1..] {
                    pre *= Rational::new((li - lj).into(), (li + lj).into());
                }
            }
            let mut s = int(n);
            for k in 1..=p.len() {
                if k > 1 && p.part(k) + 2 > p.part(k - 1) {
                    continue;
                }
                let lk = l[k - 1];
                let mut t = Rational::new((lk - 2 * n + 2 * k as i64 - 1).into(), (lk + 1).into());
                for (i, &li) in l.iter().enumerate() {
                    if i + 1 != k {
                        t *= Rational::new((lk + li).into(), (lk - li).into());
                        t *= Rational::new((lk - li + 1).into(), (lk + li + 1).into());
                    }
                }
                s += t;
            }
            expect_integer(pre * s, "shifted SBT product")
        }
        SbtMethod::NeSum => {
            let g = count_syt_thrall(p);
            let mut r = Rational::from_integer(g * (n * (size + 1))) / int(2);
            for x in ne_corners(p) {
                let i = x.row as usize;
                let q = StrictPartition::new(with_cell(p.parts(), i)).expect("adding a NE corner");
                let w = 2 * x.col as i64 - 2 * n - 1 - l[i - 1];
                r += Rational::from_integer(count_syt_thrall(&q) * w) / int(2);
            }
            expect_integer(r, "shifted SBT corner sum")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn syt_formulas() {
        assert_eq!(count_syt_straight(&p(&[4, 3, 1])), 70.into());
        assert_eq!(count_syt_thrall(&sp(&[4, 3, 1])), 12.into());
        assert_eq!(count_syt_thrall(&sp(&[2, 1])), 1.into());
        assert_eq!(count_syt_straight(&p(&[])), 1.into());
        assert_eq!(count_syt_thrall(&sp(&[])), 1.into());
    }

    #[test]
    fn sbt_formulas() {
        assert_eq!(count_sbt_straight(&p(&[2, 1])), 8.into());
        assert_eq!(count_sbt_straight(&p(&[2])), 2.into());
        assert_eq!(count_sbt_straight(&p(&[1])), 1.into());
        assert_eq!(count_sbt_straight_product(&p(&[2, 1])), 8.into());
        for m in [SbtMethod::Product, SbtMethod::NeSum] {
            assert_eq!(count_sbt_shifted(&sp(&[2]), m).unwrap(), 2.into());
            // 6/5 = g(+1) / (7 g) with g = 2.
            assert_eq!(count_sbt_shifted(&sp(&[4, 2]), m).unwrap(), 42.into());
            assert_eq!(count_sbt_shifted(&sp(&[3, 1]), m).unwrap(), 10.into());
        }
    }
}
