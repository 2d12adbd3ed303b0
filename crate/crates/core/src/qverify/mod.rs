//! Exact checks of the summation identities and generating-function
//! generating-function statements used by the closed forms, at concrete parameters.

mod classical;
mod gf;
mod hyper;
mod lemmas;
mod sums;

use std::collections::BTreeMap;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{as_integer, fmt_rational, parse_rational, Rational};

pub use classical::{check_classical, CLASSICAL};
pub use gf::{
    alternant, check_gf_alternant, check_integral_formulas, check_lemma_gf, check_ssyt_series,
    ssyt_series,
};
pub use lemmas::check_sum_lemmas;
pub use hyper::{basic_sum, hyper_sum, qpoch, HyperSpec, QMono};
pub use sums::{check_sum_identity, li_sum, composition_terms, SUMS};

pub type Params = BTreeMap<String, Rational>;

/// Both sides of one identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Check {
    pub fn new(name: &str, params: &Params, lhs: String, rhs: String, equal: bool) -> Self {
        Check {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.clone(), fmt_rational(v))).collect(),
            lhs,
            rhs,
            equal,
        }
    }

    pub fn rational(name: &str, params: &Params, lhs: &Rational, rhs: &Rational) -> Self {
        Check::new(name, params, fmt_rational(lhs), fmt_rational(rhs), lhs == rhs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
        })
    }
}

/// Parses "m=0,n=1" (rational values allowed, e.g. "a=-1/2").
pub fn parse_params(s: &str) -> Result<Params> {
    let mut out = Params::new();
    let mut pos = 0;
    for item in s.split(',') {
        let t = item.trim();
        if !t.is_empty() {
            let (k, v) = t.split_once('=').ok_or_else(|| Error::Parse {
                pos,
                msg: format!("expected name=value, got '{t}'"),
            })?;
            let r = parse_rational(v.trim()).ok_or_else(|| Error::Parse {
                pos: pos + k.len() + 1,
                msg: format!("bad number '{}'", v.trim()),
            })?;
            out.insert(k.trim().to_string(), r);
        }
        pos += item.len() + 1;
    }
    Ok(out)
}

pub(crate) fn get(p: &Params, key: &str) -> Result<Rational> {
    p.get(key).cloned().ok_or_else(|| Error::Domain(format!("missing parameter '{key}'")))
}

pub(crate) fn get_or(p: &Params, key: &str, default: Rational) -> Rational {
    p.get(key).cloned().unwrap_or(default)
}

pub(crate) fn get_int(p: &Params, key: &str) -> Result<i64> {
    let r = get(p, key)?;
    as_integer(&r)
        .and_then(|b| i64::try_from(b).ok())
        .ok_or_else(|| Error::Domain(format!("parameter '{key}' must be an integer, got {}", fmt_rational(&r))))
}

pub(crate) fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.into()))
    }
}

/// Every identity name accepted by [`check_identity`].
pub fn identity_names() -> Vec<&'static str> {
    SUMS.iter().chain(CLASSICAL.iter()).copied().collect()
}

/// Dispatches to the closed-form or the classical identities by name.
pub fn check_identity(name: &str, params: &Params) -> Result<Check> {
    if SUMS.contains(&name) {
        check_sum_identity(name, params)
    } else if CLASSICAL.contains(&name) {
        check_classical(name, params)
    } else {
        Err(Error::Unsupported(format!(
            "unknown identity '{name}' (known: {})",
            identity_names().join(", ")
        )))
    }
}

fn params_of(pairs: &[(&str, Rational)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn li_grid(seed: u64, per_len: usize) -> Vec<Params> {
    let mut g = ChaCha8Rng::seed_from_u64(seed);
    let mut rational = || Rational::new(g.random_range(-20i64..=20).into(), g.random_range(1i64..=9).into());
    let mut out = Vec::new();
    for l in 0..=5usize {
        let mut made = 0;
        while made < per_len {
            let mut p = Params::new();
            for i in 0..=l {
                p.insert(format!("b{i}"), rational());
            }
            for j in 0..l {
                p.insert(format!("c{j}"), rational());
            }
            p.insert("u".into(), rational());
            if sums::li_sum(&p).is_ok() {
                out.push(p);
                made += 1;
            }
        }
    }
    out
}

/// The parameter grids of the identity suite, in a fixed order.
pub fn invariant_grid() -> Vec<(&'static str, Params)> {
    let mut g: Vec<(&'static str, Params)> = Vec::new();
    for a in 1..=3 {
        for e in 1..=4 {
            for d in a * (e - 1) + 2..=10 {
                let p = params_of(&[("a", int(a)), ("d", int(d)), ("e", int(e))]);
                g.push(("identitytoshow1", p.clone()));
                g.push(("identitytoshow2", p));
            }
        }
    }
    for m in 0..=6 {
        for n in 1..=6 {
            let p = params_of(&[("m", int(m)), ("n", int(n))]);
            g.push(("mainidentity", p.clone()));
            g.push(("7f6", p.clone()));
            g.push(("7f6-sum", p));
        }
    }
    for p in li_grid(0x5eed, 8) {
        g.push(("li", p));
    }
    for comp in compositions_up_to(3, 3) {
        let k: i64 = comp.iter().sum();
        for n in (k + 1).max(1)..=8 {
            let mut p = params_of(&[("n", int(n))]);
            for (i, a) in comp.iter().enumerate() {
                p.insert(format!("a{}", i + 1), int(*a));
            }
            g.push(("composition-sum", p));
        }
    }
    for big_n in 1..=12 {
        for n in 1..=big_n {
            if big_n - 2 * n + 2 >= 1 {
                let p = params_of(&[("N", int(big_n)), ("n", int(n))]);
                g.push(("border-sum", p.clone()));
                g.push(("border-series", p));
            }
        }
    }
    g.extend(classical::grid());
    g
}

/// All compositions with at most `max_len` parts, each part in 1..=max_part.
fn compositions_up_to(max_len: usize, max_part: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for c in &frontier {
            for a in 1..=max_part {
                let mut c2: Vec<i64> = c.clone();
                c2.push(a);
                next.push(c2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Runs a grid in parallel; results come back in grid order.
pub fn run_grid(grid: &[(&'static str, Params)]) -> Vec<Result<Check>> {
    grid.par_iter().map(|(name, p)| check_identity(name, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = parse_params("m=0, n=1,a=-1/2").unwrap();
        assert_eq!(p["a"], Rational::new((-1).into(), 2.into()));
        assert_eq!(get_int(&p, "n").unwrap(), 1);
        assert!(get_int(&p, "a").is_err());
        assert!(matches!(parse_params("m=0,n"), Err(Error::Parse { pos: 4, .. })));
        assert!(check_identity("nope", &p).is_err());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions_up_to(3, 3).len(), 1 + 3 + 9 + 27);
    }
}
