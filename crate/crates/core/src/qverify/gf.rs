use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Check;
use crate::error::{Error, Result};
use crate::exact::{big, factorial, int, q_simplex_integrate, simplex_integrate, MPoly, PolyQ, QSeries, RatFunQ, Rational};
use crate::shapes::{Diagram, StrictPartition};
use crate::tableaux::enumerate_syt;

/// ā_μ(x) = (-1)^{n choose 2} det(x_j^{μ_i}) in n variables, μ padded with zeros.
pub fn alternant(mu: &[u32], n: usize) -> MPoly {
    assert!(mu.len() <= n, "more parts than variables");
    let mut e = mu.to_vec();
    e.resize(n, 0);
    let mut out = MPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, true, &mut |p, even| {
        // term ∏_i x_{p(i)}^{μ_i}
        let mut exps = vec![0u32; n];
        for (i, &j) in p.iter().enumerate() {
            exps[j] += e[i];
        }
        let sign = if even == (n * n.saturating_sub(1) / 2 % 2 == 0) { 1 } else { -1 };
        out = &out + &MPoly::monomial(n, int(sign), exps);
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, even: bool, f: &mut impl FnMut(&[usize], bool)) {
    if k == p.len() {
        f(p, even);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, even == (i == k), f);
        p.swap(k, i);
    }
}

fn lambda_minus_ones(lam: &StrictPartition) -> Vec<u32> {
    lam.parts().iter().map(|&x| x - 1).collect()
}

fn nonempty(lam: &StrictPartition) -> Result<()> {
    if lam.is_empty() {
        return Err(Error::Domain("needs a nonempty strict partition".into()));
    }
    Ok(())
}

/// Σ q^{|T|} over semistandard fillings (entries ≥ 0) of the shifted diagram
/// of λ with |T| ≤ order; with `diag`, only those whose diagonal read
/// bottom-up is the given partition.
pub fn ssyt_series(lam: &StrictPartition, diag: Option<&[u32]>, order: usize) -> Result<QSeries> {
    let n = lam.len();
    let fixed: Option<Vec<u32>> = match diag {
        None => None,
        Some(nu) => {
            if nu.len() > n {
                return Err(Error::Domain(format!("diagonal partition has more than {n} parts")));
            }
            let mut v = nu.to_vec();
            v.resize(n, 0);
            v.reverse(); // T(i,i) = ν_{n+1-i}
            Some(v)
        }
    };
    let rows: Vec<usize> = lam.parts().iter().map(|&x| x as usize).collect();
    // row i (0-based) holds columns i..i+λ_i-1
    let mut t: Vec<Vec<u32>> = rows.iter().map(|&l| vec![0; l]).collect();
    let mut counts = vec![BigInt::zero(); order + 1];
    fill(&rows, &fixed, &mut t, 0, 0, 0, order, &mut counts);
    Ok(QSeries::from_coeffs(order, counts))
}

#[allow(clippy::too_many_arguments)]
fn fill(
    rows: &[usize],
    fixed: &Option<Vec<u32>>,
    t: &mut Vec<Vec<u32>>,
    i: usize,
    k: usize,
    sum: usize,
    order: usize,
    counts: &mut [BigInt],
) {
    if i == rows.len() {
        counts[sum] += 1;
        return;
    }
    if k == rows[i] {
        fill(rows, fixed, t, i + 1, 0, sum, order, counts);
        return;
    }
    // cell (i, i+k); the cell above is (i-1, i+k) = offset k+1 in row i-1
    let mut lo = if k > 0 { t[i][k - 1] } else { 0 };
    if i > 0 {
        lo = lo.max(t[i - 1][k + 1] + 1);
    }
    let left_in_row = (rows[i] - k) as u32;
    let budget = (order - sum) as u32;
    let (from, to) = match (k, fixed) {
        (0, Some(f)) => (f[i], f[i]),
        _ => (lo, budget / left_in_row),
    };
    for v in from.max(lo)..=to {
        if v * left_in_row > budget {
            break;
        }
        t[i][k] = v;
        fill(rows, fixed, t, i, k + 1, sum + v as usize, order, counts);
    }
}

fn inv_qpoch_series(m: u32, order: usize) -> QSeries {
    (1..=m as usize).fold(QSeries::one(order), |acc, k| &acc * &QSeries::inv_one_minus_q_pow(k, order))
}

/// 1 / ∏_j (q;q)_{λ_j - 1}.
fn hook_denominator(lam: &StrictPartition, order: usize) -> QSeries {
    lam.parts().iter().fold(QSeries::one(order), |acc, &l| &acc * &inv_qpoch_series(l - 1, order))
}

fn at_q_powers(f: &MPoly, nu: &[u32]) -> PolyQ {
    let mut p = PolyQ::zero();
    for (e, c) in f.terms() {
        let deg: u64 = e.iter().zip(nu).map(|(&a, &b)| a as u64 * b as u64).sum();
        p = &p + &PolyQ::monomial(c.numer().clone(), deg as i64);
    }
    p
}

fn series_str(s: &QSeries) -> String {
    s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn shape_params(lam: &StrictPartition, extra: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut m: BTreeMap<String, String> = extra.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    m.insert("shape".into(), lam.to_string());
    m
}

fn series_check(name: &str, params: BTreeMap<String, String>, l: &QSeries, r: &QSeries) -> Check {
    Check { name: name.into(), params, lhs: series_str(l), rhs: series_str(r), equal: l == r }
}

/// Fillings with a fixed diagonal against q^{|ν|} ā_{λ-(1^n)}(q^ν) / ∏(q;q)_{λ_j-1},
/// both truncated after q^order.
pub fn check_gf_alternant(lam: &StrictPartition, nu: &[u32], order: usize) -> Result<Check> {
    nonempty(lam)?;
    let n = lam.len();
    let lhs = ssyt_series(lam, Some(nu), order)?;
    let mut v = nu.to_vec();
    v.resize(n, 0);
    let a = at_q_powers(&alternant(&lambda_minus_ones(lam), n), &v);
    let size: usize = nu.iter().map(|&x| x as usize).sum();
    let rhs = (&QSeries::from_poly(&a, order)? * &hook_denominator(lam, order)).shift(size);
    let nu_s = nu.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(series_check("alternant", shape_params(lam, &[("nu", nu_s), ("D", order.to_string())]), &lhs, &rhs))
}

/// Σ_{ν ∈ Par_n} q^{|ν|} f(q^ν) against (1-q)^{-n} times the q-integral of f
/// over the ordered simplex, for f = ā_{λ-(1^n)}.
pub fn check_lemma_gf(lam: &StrictPartition, order: usize) -> Result<Check> {
    nonempty(lam)?;
    let n = lam.len();
    let f = alternant(&lambda_minus_ones(lam), n);
    let mut lhs = QSeries::zero(order);
    for_each_partition_bounded(n, order as u32, &mut |nu| {
        let size: usize = nu.iter().map(|&x| x as usize).sum();
        let p = at_q_powers(&f, nu);
        lhs = &lhs + &QSeries::from_poly(&p, order).expect("nonnegative exponents").shift(size);
    });
    let rhs = QSeries::from_ratfun(&integral_over_one_minus_q(&f, n), order)?;
    Ok(series_check("lemma-gf", shape_params(lam, &[("D", order.to_string())]), &lhs, &rhs))
}

/// (1-q)^{-n} ∫ f d_q x.
fn integral_over_one_minus_q(f: &MPoly, n: usize) -> RatFunQ {
    let scale = RatFunQ::new(PolyQ::one(), PolyQ::one_minus_q_pow(1).pow(n as u32)).expect("nonzero");
    &q_simplex_integrate(f, n) * &scale
}

/// Partitions with at most n parts and size at most `max`, as length-n vectors.
fn for_each_partition_bounded(n: usize, max: u32, f: &mut impl FnMut(&[u32])) {
    fn go(v: &mut Vec<u32>, n: usize, cap: u32, left: u32, f: &mut impl FnMut(&[u32])) {
        if v.len() == n {
            f(v);
            return;
        }
        for x in 0..=cap.min(left) {
            v.push(x);
            go(v, n, x, left - x, f);
            v.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, max, max, f);
}

/// All fillings against (1-q)^{-n} ∫ ā d_q x / ∏(q;q)_{λ_j-1}.
pub fn check_ssyt_series(lam: &StrictPartition, order: usize) -> Result<Check> {
    nonempty(lam)?;
    let n = lam.len();
    let lhs = ssyt_series(lam, None, order)?;
    let f = alternant(&lambda_minus_ones(lam), n);
    let rhs = &QSeries::from_ratfun(&integral_over_one_minus_q(&f, n), order)? * &hook_denominator(lam, order);
    Ok(series_check("ssyt-series", shape_params(lam, &[("D", order.to_string())]), &lhs, &rhs))
}

fn prefactor(lam: &StrictPartition, top: u64) -> Rational {
    let den: BigInt = lam.parts().iter().map(|&l| factorial(l as u64 - 1)).product();
    Rational::new(factorial(top), den)
}

fn rational_check(name: &str, params: BTreeMap<String, String>, l: &Rational, r: &Rational) -> Check {
    Check {
        name: name.into(),
        params,
        lhs: crate::exact::fmt_rational(l),
        rhs: crate::exact::fmt_rational(r),
        equal: l == r,
    }
}

/// The integral formulas for g^λ and for extended diagrams, and the q → 1
/// limit of the closed filling series. With `i`, only that extension.
pub fn check_integral_formulas(lam: &StrictPartition, i: Option<u32>) -> Result<Vec<Check>> {
    nonempty(lam)?;
    let n = lam.len();
    let size = lam.size() as u64;
    let f = alternant(&lambda_minus_ones(lam), n);
    let g = big(&enumerate_syt(&Diagram::shifted(lam)));
    let mut out = Vec::new();

    let rhs = prefactor(lam, size) * simplex_integrate(&f, n);
    out.push(rational_check("SSYT_int", shape_params(lam, &[]), &g, &rhs));

    let range: Vec<u32> = match i {
        Some(i) => {
            if i < 1 || i as usize > n {
                return Err(Error::Domain(format!("need 1 <= i <= {n}")));
            }
            vec![i]
        }
        None => (1..=n as u32).collect(),
    };
    for i in range {
        let iu = i as usize;
        let upper = if iu == n { MPoly::one(n) } else { MPoly::var(n, iu) };
        let diff = &upper - &MPoly::var(n, iu - 1);
        let rhs = prefactor(lam, size + 1) * simplex_integrate(&(&diff * &f), n);
        let lhs = big(&enumerate_syt(&Diagram::extended(lam, n as u32 - i + 1)?));
        out.push(rational_check("SSYT_int2", shape_params(lam, &[("i", i.to_string())]), &lhs, &rhs));
    }

    // (q;q)_{|λ|} · (1-q)^{-n} ∫ ā d_q x / ∏(q;q)_{λ_j-1}  at q = 1
    let mut num = PolyQ::one();
    for k in 1..=size as i64 {
        num = &num * &PolyQ::one_minus_q_pow(k);
    }
    let mut den = PolyQ::one();
    for &l in lam.parts() {
        for k in 1..l as i64 {
            den = &den * &PolyQ::one_minus_q_pow(k);
        }
    }
    let closed = &integral_over_one_minus_q(&f, n) * &RatFunQ::new(num, den)?;
    let lim = closed.limit_at_one()?;
    out.push(rational_check("SYT_SSYT", shape_params(lam, &[]), &g, &lim));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn alternant_small() {
        let a = alternant(&[2, 0], 2);
        let x1 = MPoly::var(2, 0);
        let x2 = MPoly::var(2, 1);
        assert_eq!(a, &(&x2 * &x2) - &(&x1 * &x1));
        assert_eq!(simplex_integrate(&a, 2), rat(1, 6));
        // equal exponents give a zero determinant
        assert!(alternant(&[1, 1], 2).is_zero());
    }

    #[test]
    fn spec_examples() {
        assert!(check_gf_alternant(&sp(&[2, 1]), &[1, 0], 6).unwrap().equal);
        let c = check_gf_alternant(&sp(&[2]), &[0], 4).unwrap();
        assert!(c.equal && c.lhs == "1,1,1,1,1");
        let c = check_gf_alternant(&sp(&[3, 1]), &[1, 1], 8).unwrap();
        assert!(c.equal && c.lhs.split(',').all(|x| x == "0"));
        let checks = check_integral_formulas(&sp(&[3, 1]), None).unwrap();
        assert!(checks.iter().all(|c| c.equal));
        assert_eq!(checks[0].lhs, "2");
        assert_eq!(check_integral_formulas(&sp(&[2]), None).unwrap()[0].rhs, "1");
    }

    #[test]
    fn series_checks() {
        for v in [&[1][..], &[3, 1], &[4, 2, 1], &[5, 3]] {
            let lam = sp(v);
            assert!(check_lemma_gf(&lam, 12).unwrap().equal, "{v:?}");
            assert!(check_ssyt_series(&lam, 12).unwrap().equal, "{v:?}");
        }
    }
}
