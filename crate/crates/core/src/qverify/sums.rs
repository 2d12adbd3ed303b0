use num_traits::{One, Zero};

use super::hyper::{hyper_sum, HyperSpec};
use super::{get, get_int, require, Check, Params};
use crate::error::{Error, Result};
use crate::exact::{big, binomial, factorial, int, pochhammer, rat, Rational};

pub const SUMS: &[&str] = &[
    "identitytoshow1",
    "identitytoshow2",
    "composition-sum",
    "li",
    "mainidentity",
    "7f6",
    "7f6-sum",
    "border-sum",
    "border-series",
];

fn fact(n: i64) -> Rational {
    big(&factorial(n as u64))
}

fn poch(x: &Rational, n: i64) -> Rational {
    pochhammer(x, n as u32)
}

fn half() -> Rational {
    rat(1, 2)
}

pub fn check_sum_identity(name: &str, p: &Params) -> Result<Check> {
    match name {
        "identitytoshow1" => {
            let (a, d, e) = ade(p)?;
            let lhs = int(2).pow(4 * e as i32 - 4);
            Ok(Check::rational(name, p, &lhs, &delta_sum_series(a, d, e)))
        }
        "identitytoshow2" => {
            let (a, d, e) = ade(p)?;
            Ok(Check::rational(name, p, &delta_sum_series(a, d, e), &delta_sum_dougall_form(a, d, e)?))
        }
        "composition-sum" => {
            let (n, comp) = composition_params(p)?;
            let rhs: Rational = composition_terms(n, &comp)?.iter().sum();
            Ok(Check::rational(name, p, &Rational::one(), &rhs))
        }
        "li" => Ok(Check::rational(name, p, &Rational::one(), &li_sum(p)?)),
        "mainidentity" => {
            let (m, n) = mn(p)?;
            Ok(Check::rational(name, p, &rat(n, 2 * (m + 2 * n + 1)), &trapezoid_series(m, n)))
        }
        "7f6" => {
            let (m, n) = mn(p)?;
            let rhs = seven_f_six_prefactor(m, n) * hyper_sum(&seven_f_six(m, n))?;
            Ok(Check::rational(name, p, &trapezoid_series(m, n), &rhs))
        }
        "7f6-sum" => {
            let (m, n) = mn(p)?;
            let closed = fact(n - 1) * fact(n) * fact(m + n).pow(2) * fact(2 * m + 4 * n - 1)
                / (fact(2 * n - 1) * fact(m + 2 * n - 1).pow(2) * fact(2 * m + 2 * n + 1));
            Ok(Check::rational(name, p, &hyper_sum(&seven_f_six(m, n))?, &closed))
        }
        "border-sum" => {
            let (big_n, n) = nn(p)?;
            let b = |x: i64, y: i64| big(&binomial(x, y));
            let lhs = rat(n * (big_n - n + 1), big_n + 1) * b(big_n + 1, n);
            let mut rhs = b(big_n, n - 1) + int(big_n) * b(big_n - 1, n - 1);
            for i in 0..n {
                rhs -= rat(1, i + 1) * b(2 * i, i) * b(big_n - 1 - 2 * i, n - 1 - i);
            }
            Ok(Check::rational(name, p, &lhs, &rhs))
        }
        "border-series" => {
            let (big_n, n) = nn(p)?;
            let spec = HyperSpec::new(
                vec![half(), int(1), int(n - big_n), int(1 - n)],
                vec![int(1), int(2), rat(1 - big_n, 2), rat(2 - big_n, 2)],
                n as usize,
            );
            Ok(Check::rational(name, p, &rat(big_n, big_n - n + 1), &hyper_sum(&spec)?))
        }
        _ => Err(Error::Unsupported(format!("unknown identity '{name}'"))),
    }
}

fn ade(p: &Params) -> Result<(i64, i64, i64)> {
    let (a, d, e) = (get_int(p, "a")?, get_int(p, "d")?, get_int(p, "e")?);
    require(a >= 1 && e >= 1 && d > a * (e - 1) + 1, "need a, e >= 1 and d > a(e-1)+1")?;
    Ok((a, d, e))
}

fn mn(p: &Params) -> Result<(i64, i64)> {
    let (m, n) = (get_int(p, "m")?, get_int(p, "n")?);
    require(m >= 0 && n >= 1, "need m >= 0 and n >= 1")?;
    Ok((m, n))
}

fn nn(p: &Params) -> Result<(i64, i64)> {
    let (big_n, n) = (get_int(p, "N")?, get_int(p, "n")?);
    require(1 <= n && n <= big_n && big_n - 2 * n + 2 >= 1, "need 1 <= n <= N and N-2n+2 >= 1")?;
    Ok((big_n, n))
}

/// Σ_j (2j)!/(j!)² (2e-2-2j)!/((e-j-1)!)² · ((2d-1)/a+1-2j)_{2e-2} / ((2d-1)/(2a)+1-j)_{e-1}²
///   · (2d-1+2a(e-1-2j)) / (2d-1-2ja).
fn delta_sum_series(a: i64, d: i64, e: i64) -> Rational {
    let mut s = Rational::zero();
    for j in 0..e {
        let x = rat(2 * d - 1, a) + int(1 - 2 * j);
        let y = rat(2 * d - 1, 2 * a) + int(1 - j);
        s += fact(2 * j) / fact(j).pow(2) * fact(2 * e - 2 - 2 * j) / fact(e - j - 1).pow(2) * poch(&x, 2 * e - 2)
            / poch(&y, e - 1).pow(2)
            * rat(2 * d - 1 + 2 * a * (e - 1 - 2 * j), 2 * d - 1 - 2 * j * a);
    }
    s
}

/// The same sum as a prefactor times a very-well-poised 5F4.
fn delta_sum_dougall_form(a: i64, d: i64, e: i64) -> Result<Rational> {
    let c = rat(1 - 2 * d, 2 * a);
    let big_a = &c + int(1 - e);
    // (2e-2)!/((e-1)!)², without a factor 1/2: at e = 1 both sides are 1.
    let pre = fact(2 * e - 2) / fact(e - 1).pow(2) * poch(&(rat(2 * d - 1, a) + int(1)), 2 * e - 2)
        / poch(&(rat(2 * d - 1, 2 * a) + int(1)), e - 1).pow(2)
        * rat(1 - 2 * d + 2 * a * (1 - e), 1 - 2 * d);
    let spec = HyperSpec::new(
        vec![big_a.clone(), &big_a / int(2) + int(1), half(), int(1 - e), &c + half()],
        vec![int(1), &big_a / int(2), &big_a + half(), &c + int(1), rat(3, 2) - int(e)],
        e as usize,
    );
    Ok(pre * hyper_sum(&spec)?)
}

fn composition_params(p: &Params) -> Result<(i64, Vec<i64>)> {
    let n = get_int(p, "n")?;
    let mut comp = Vec::new();
    while p.contains_key(&format!("a{}", comp.len() + 1)) {
        let a = get_int(p, &format!("a{}", comp.len() + 1))?;
        require(a >= 1, "composition parts must be positive")?;
        comp.push(a);
    }
    let k: i64 = comp.iter().sum();
    require(k < n, "need k = a1+...+al < n")?;
    Ok((n, comp))
}

/// Terms i = 0..ℓ of the sum for λ = δ_{n+1} + ν, ν balanced with block
/// sizes a_1..a_ℓ.
pub fn composition_terms(n: i64, a: &[i64]) -> Result<Vec<Rational>> {
    let l = a.len();
    let at = |i: usize| int(a[i - 1]); // 1-based
    let mut out = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let r: i64 = a[..i].iter().sum::<i64>() + 1;
        let base = int(n) + half() - int(r);
        let mut t = Rational::one();
        // a_i, a_i + a_{i-1}, ..., down to a_1
        let mut acc = Rational::zero();
        for s in (1..=i).rev() {
            t *= (&acc + at(s) / int(2)) / (&acc + at(s));
            acc += at(s);
        }
        // a_{i+1}, a_{i+1} + a_{i+2}, ..., up to a_ℓ
        let mut acc = Rational::zero();
        for s in i + 1..=l {
            t *= (&acc + at(s) / int(2)) / (&acc + at(s));
            acc += at(s);
        }
        let tail: Rational = (i + 1..=l).map(at).sum();
        if base.is_zero() {
            return Err(Error::Domain("n + 1/2 - r vanishes".into()));
        }
        t *= (&base + &tail) / &base;
        // n+1/2-r_i + a_ℓ + ... + a_{s+1} + a_s/2, s = ℓ..1
        let mut acc = base.clone();
        for s in (1..=l).rev() {
            t *= (&acc + at(s) / int(2)) / (&acc + at(s));
            acc += at(s);
        }
        out.push(t);
    }
    Ok(out)
}

/// Σ_i ∏_j (b_i - c_j)(u - b_i - c_j) / ∏_{j≠i} (b_i - b_j)(u - b_i - b_j),
/// read from keys b0..bℓ, c0..c_{ℓ-1}, u.
pub fn li_sum(p: &Params) -> Result<Rational> {
    let mut b = Vec::new();
    while let Some(v) = p.get(&format!("b{}", b.len())) {
        b.push(v.clone());
    }
    require(!b.is_empty(), "need b0..bl")?;
    let c: Vec<Rational> = (0..b.len() - 1).map(|j| get(p, &format!("c{j}"))).collect::<Result<_>>()?;
    let u = get(p, "u")?;
    Ok(li_terms(&b, &c, &u)?.iter().sum())
}

pub fn li_terms(b: &[Rational], c: &[Rational], u: &Rational) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(b.len());
    for (i, bi) in b.iter().enumerate() {
        let mut num = Rational::one();
        for cj in c {
            num *= (bi - cj) * (u - bi - cj);
        }
        let mut den = Rational::one();
        for (j, bj) in b.iter().enumerate() {
            if j != i {
                den *= (bi - bj) * (u - bi - bj);
            }
        }
        if den.is_zero() {
            return Err(Error::Domain("b's must be distinct with u ≠ b_i + b_j".into()));
        }
        out.push(num / den);
    }
    Ok(out)
}

/// The sum for trapezoids (m+2n, m+2n-2, ..., m+2).
fn trapezoid_series(m: i64, n: i64) -> Rational {
    let mut s = Rational::zero();
    for i in 0..n {
        s += fact(2 * i) / fact(i).pow(2) * fact(2 * n - 2 * i - 1) / fact(n - i - 1).pow(2)
            * fact(m + 2 * n - i).pow(2)
            / fact(m + n - i).pow(2)
            * fact(2 * m + 2 * n - 2 * i + 1)
            / fact(2 * m + 4 * n - 2 * i + 1)
            * rat(2 * m + 4 * n - 4 * i + 1, (m + 2 * n - 2 * i) * (m + 2 * n - 2 * i + 1));
    }
    s
}

fn seven_f_six_prefactor(m: i64, n: i64) -> Rational {
    fact(2 * n - 1) * fact(m + 2 * n).pow(2) * fact(2 * m + 2 * n + 1)
        / (fact(n - 1).pow(2) * fact(m + n).pow(2) * fact(2 * m + 4 * n) * int((m + 2 * n) * (m + 2 * n + 1)))
}

fn seven_f_six(m: i64, n: i64) -> HyperSpec {
    let mh = rat(-m, 2) - int(n); // -m/2 - n
    HyperSpec::new(
        vec![
            int(-m - 2 * n) - half(),
            &mh + rat(3, 4),
            half(),
            int(-m - n),
            &mh - half(),
            mh.clone(),
            int(1 - n),
        ],
        vec![int(1), &mh - rat(1, 4), int(-m - 2 * n), half() - int(n), &mh + int(1), &mh + half(), int(-m - n) - half()],
        n as usize,
    )
}


#[cfg(test)]
mod tests {
    use super::super::parse_params;
    use super::*;

    fn run(name: &str, s: &str) -> Check {
        check_sum_identity(name, &parse_params(s).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let c = run("identitytoshow1", "a=1,d=3,e=1");
        assert!(c.equal && c.lhs == "1");
        let c = run("mainidentity", "m=0,n=1");
        assert!(c.equal && c.lhs == "1/6" && c.rhs == "1/6");
        let c = run("border-series", "N=3,n=2");
        assert!(c.equal && c.lhs == "3/2");
        assert!(check_sum_identity("identitytoshow1", &parse_params("a=1,d=2,e=2").unwrap()).is_err());
        assert!(check_sum_identity("border-series", &parse_params("N=3,n=3").unwrap()).is_err());
    }

    #[test]
    fn small_grids() {
        for (a, d, e) in [(1, 3, 2), (2, 6, 3), (3, 9, 3), (1, 7, 4)] {
            let s = format!("a={a},d={d},e={e}");
            assert!(run("identitytoshow1", &s).equal, "{s}");
            assert!(run("identitytoshow2", &s).equal, "{s}");
        }
        for (m, n) in [(0, 2), (3, 3), (1, 4)] {
            let s = format!("m={m},n={n}");
            for name in ["mainidentity", "7f6", "7f6-sum"] {
                assert!(run(name, &s).equal, "{name} {s}");
            }
        }
        for (big_n, n) in [(5, 3), (8, 2), (12, 6)] {
            let s = format!("N={big_n},n={n}");
            assert!(run("border-sum", &s).equal && run("border-series", &s).equal, "{s}");
        }
    }

    #[test]
    fn composition_sum_matches_interpolation_termwise() {
        for (n, comp) in [(3, vec![1, 1]), (8, vec![3, 1, 2]), (5, vec![2]), (1, vec![])] {
            let t = composition_terms(n, &comp).unwrap();
            assert_eq!(t.iter().sum::<Rational>(), Rational::one());
            let b: Vec<Rational> = (0..=comp.len()).map(|i| int(comp[..i].iter().sum())).collect();
            let c: Vec<Rational> = (0..comp.len()).map(|j| &b[j] + rat(comp[j], 2)).collect();
            let u = int(comp.iter().sum::<i64>() + n) - half();
            assert_eq!(t, li_terms(&b, &c, &u).unwrap(), "n={n} {comp:?}");
        }
        assert!(run("composition-sum", "n=5,a1=2,a2=1").equal);
        assert!(check_sum_identity("composition-sum", &parse_params("n=3,a1=2,a2=1").unwrap()).is_err());
    }
}
