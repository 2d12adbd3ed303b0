use num_traits::{One, Zero};

use super::hyper::{basic_sum, hyper_sum, qpoch, HyperSpec, QMono};
use super::{get, get_int, get_or, params_of, require, Check, Params};
use crate::error::{Error, Result};
use crate::exact::{int, pochhammer, rat, RatFunQ, Rational};

pub const CLASSICAL: &[&str] = &["dougall", "bailey", "watson", "phi43", "phi87"];

pub fn check_classical(name: &str, p: &Params) -> Result<Check> {
    match name {
        "dougall" => dougall(p),
        "bailey" => bailey(p),
        "watson" | "phi43" | "phi87" => {
            let n = get_int(p, "n")?;
            require(n >= 0, "need n >= 0")?;
            let (l, r) = match name {
                "watson" => watson(p, n)?,
                "phi43" => phi43(p, n)?,
                _ => phi87(p, n)?,
            };
            Ok(Check::new(name, p, l.to_string(), r.to_string(), l == r))
        }
        _ => Err(Error::Unsupported(format!("unknown identity '{name}'"))),
    }
}

fn nonneg_n(p: &Params) -> Result<i64> {
    let n = get_int(p, "n")?;
    require(n >= 0, "terminating only: need n >= 0")?;
    Ok(n)
}

fn ratio(num: Rational, den: Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::Domain("closed form has a vanishing denominator".into()));
    }
    Ok(num / den)
}

/// Terminating 5F4 with the fourth upper parameter -n.
fn dougall(p: &Params) -> Result<Check> {
    let (a, b, c) = (get(p, "a")?, get(p, "b")?, get(p, "c")?);
    let n = nonneg_n(p)?;
    let one = Rational::one();
    let spec = HyperSpec::new(
        vec![a.clone(), &one + &a / int(2), b.clone(), c.clone(), int(-n)],
        vec![one.clone(), &a / int(2), &one + &a - &b, &one + &a - &c, &one + &a + int(n)],
        n as usize + 1,
    );
    let k = n as u32;
    let rhs = ratio(
        pochhammer(&(&one + &a), k) * pochhammer(&(&one + &a - &b - &c), k),
        pochhammer(&(&one + &a - &b), k) * pochhammer(&(&one + &a - &c), k),
    )?;
    Ok(Check::rational("dougall", p, &hyper_sum(&spec)?, &rhs))
}

fn bailey(p: &Params) -> Result<Check> {
    let (a, b) = (get(p, "a")?, get(p, "b")?);
    let n = nonneg_n(p)?;
    let one = Rational::one();
    let spec = HyperSpec::new(
        vec![&a / int(2), (&a + &one) / int(2), &b + int(n), int(-n)],
        vec![one.clone(), &b / int(2), (&b + &one) / int(2), &a + &one],
        n as usize + 1,
    );
    let k = n as u32;
    let rhs = ratio(pochhammer(&(&b - &a), k), pochhammer(&b, k))?;
    Ok(Check::rational("bailey", p, &hyper_sum(&spec)?, &rhs))
}

/// Parameter `key` as coef · q^exp from keys "key" (exponent) and "key_coef".
fn mono(p: &Params, key: &str) -> Result<RatFunQ> {
    let e = get_int(p, key)?;
    let c = get_or(p, &format!("{key}_coef"), Rational::one());
    require(!c.is_zero(), format!("{key}_coef must be nonzero"))?;
    Ok(QMono::new(c, e).eval(&RatFunQ::q()))
}

fn qp(k: i64) -> RatFunQ {
    QMono::pow(k).eval(&RatFunQ::q())
}

fn div(a: &RatFunQ, b: &RatFunQ) -> Result<RatFunQ> {
    a.checked_div(b).ok_or_else(|| Error::Domain("vanishing factor".into()))
}

fn neg(x: &RatFunQ) -> RatFunQ {
    &RatFunQ::zero() - x
}

/// The terminating very-well-poised 8φ7 against the 4φ3 it transforms into.
fn watson(p: &Params, n: i64) -> Result<(RatFunQ, RatFunQ)> {
    let (a, b, c, d, e) = (mono(p, "a")?, mono(p, "b")?, mono(p, "c")?, mono(p, "d")?, mono(p, "e")?);
    let q = RatFunQ::q();
    let aq = &a * &q;
    let nn = n as usize;
    let z = div(&(&(&a * &a) * &qp(n + 2)), &(&(&b * &c) * &(&d * &e)))?;
    let lhs = basic_sum(
        &[a.clone(), b.clone(), c.clone(), d.clone(), e.clone(), qp(-n)],
        &[q.clone(), div(&aq, &b)?, div(&aq, &c)?, div(&aq, &d)?, div(&aq, &e)?, &a * &qp(n + 1)],
        &q,
        &z,
        nn,
        Some(&a),
    )?;
    let de = &d * &e;
    let pre = div(
        &(&qpoch(&aq, &q, nn) * &qpoch(&div(&aq, &de)?, &q, nn)),
        &(&qpoch(&div(&aq, &d)?, &q, nn) * &qpoch(&div(&aq, &e)?, &q, nn)),
    )?;
    let inner = basic_sum(
        &[div(&aq, &(&b * &c))?, d.clone(), e.clone(), qp(-n)],
        &[q.clone(), div(&aq, &b)?, div(&aq, &c)?, div(&(&de * &qp(-n)), &a)?],
        &q,
        &q,
        nn,
        None,
    )?;
    Ok((lhs, &pre * &inner))
}

/// 4φ3 in base q² with upper q^{-2n}, c², a, aq.
fn phi43(p: &Params, n: i64) -> Result<(RatFunQ, RatFunQ)> {
    let (a, c) = (mono(p, "a")?, mono(p, "c")?);
    let q = RatFunQ::q();
    let q2 = qp(2);
    let nn = n as usize;
    let lhs = basic_sum(
        &[qp(-2 * n), &c * &c, a.clone(), &a * &q],
        &[q2.clone(), &(&a * &a) * &q2, &c * &qp(-n), &c * &qp(1 - n)],
        &q2,
        &q2,
        nn,
        None,
    )?;
    let rhs = div(
        &(&qpoch(&neg(&q), &q, nn) * &qpoch(&div(&(&q * &a), &c)?, &q, nn)),
        &(&qpoch(&neg(&(&a * &q)), &q, nn) * &qpoch(&div(&q, &c)?, &q, nn)),
    )?;
    Ok((lhs, rhs))
}

/// The 8φ7 summation obtained from the previous two.
fn phi87(p: &Params, n: i64) -> Result<(RatFunQ, RatFunQ)> {
    let (a, d) = (mono(p, "a")?, mono(p, "d")?);
    let q = RatFunQ::q();
    let q2 = qp(2);
    let nn = n as usize;
    let d2 = &d * &d;
    let lhs = basic_sum(
        &[a.clone(), div(&a, &d2)?, div(&(&(&a * &a) * &qp(2 + 2 * n)), &d2)?, d.clone(), &d * &q, qp(-2 * n)],
        &[
            q2.clone(),
            &d2 * &q2,
            div(&(&d2 * &qp(-2 * n)), &a)?,
            div(&(&a * &q2), &d)?,
            div(&(&a * &q), &d)?,
            &a * &qp(2 * n + 2),
        ],
        &q2,
        &div(&(&d2 * &q), &a)?,
        nn,
        Some(&a),
    )?;
    let rhs = div(
        &(&(&qpoch(&neg(&q), &q, nn) * &qpoch(&div(&(&a * &q), &d2)?, &q, nn)) * &qpoch(&(&a * &q2), &q2, nn)),
        &(&(&qpoch(&neg(&(&d * &q)), &q, nn) * &qpoch(&div(&(&a * &q), &d)?, &q, nn))
            * &qpoch(&div(&(&a * &q2), &d2)?, &q2, nn)),
    )?;
    Ok((lhs, rhs))
}

pub(super) fn grid() -> Vec<(&'static str, Params)> {
    let mut g = Vec::new();
    for a in [rat(1, 3), rat(5, 2), rat(-7, 3)] {
        for (b, c) in [(rat(1, 2), rat(2, 5)), (rat(-3, 4), rat(8, 3))] {
            for n in 0..=4 {
                g.push(("dougall", params_of(&[("a", a.clone()), ("b", b.clone()), ("c", c.clone()), ("n", int(n))])));
            }
        }
    }
    for (a, b) in [(int(1), rat(1, 3)), (rat(3, 2), rat(-5, 7)), (rat(-2, 3), int(4))] {
        for n in 0..=5 {
            g.push(("bailey", params_of(&[("a", a.clone()), ("b", b.clone()), ("n", int(n))])));
        }
    }
    for n in 0..=3 {
        g.push((
            "watson",
            params_of(&[
                ("a", int(2)),
                ("a_coef", rat(3, 5)),
                ("b", int(1)),
                ("b_coef", rat(2, 3)),
                ("c", int(-1)),
                ("c_coef", rat(5, 4)),
                ("d", int(3)),
                ("d_coef", rat(7, 3)),
                ("e", int(0)),
                ("e_coef", rat(1, 9)),
                ("n", int(n)),
            ]),
        ));
        g.push(("phi43", params_of(&[("a", int(2)), ("a_coef", rat(3, 5)), ("c", int(1)), ("c_coef", rat(2, 3)), ("n", int(n))])));
        g.push(("phi87", params_of(&[("a", int(2)), ("a_coef", rat(3, 5)), ("d", int(1)), ("d_coef", rat(2, 3)), ("n", int(n))])));
    }
    // Pure powers of q: larger n runs into vanishing lower parameters.
    for n in 0..=1 {
        g.push(("phi43", params_of(&[("a", int(-3)), ("c", int(2)), ("n", int(n))])));
        g.push(("phi87", params_of(&[("a", int(-7)), ("d", int(-4)), ("n", int(n))])));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::super::parse_params;
    use super::*;

    fn run(name: &str, s: &str) -> Check {
        check_classical(name, &parse_params(s).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let c = run("dougall", "a=1/3,b=1/2,c=2/5,n=0");
        assert!(c.equal && c.lhs == "1");
        let c = run("bailey", "a=1,b=-2,n=1");
        assert!(c.equal && c.lhs == "3/2");
        assert!(run("phi87", "a=-7,d=-4,n=1").equal);
    }

    #[test]
    fn q_identities_small() {
        assert!(run("watson", "a=2,a_coef=3/5,b=1,b_coef=2/3,c=-1,c_coef=5/4,d=3,d_coef=7/3,e=0,e_coef=1/9,n=2").equal);
        assert!(run("phi43", "a=2,a_coef=3/5,c=1,c_coef=2/3,n=2").equal);
        assert!(run("phi87", "a=2,a_coef=3/5,d=1,d_coef=2/3,n=2").equal);
        assert!(check_classical("dougall", &parse_params("a=1,b=1,c=1,n=-1").unwrap()).is_err());
    }
}
