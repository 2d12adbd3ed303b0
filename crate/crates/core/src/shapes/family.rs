use super::{Kind, Partition};
use crate::error::{Error, Result};
use crate::shapes::balanced_slope;

/// Shape families with closed-form expectations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// δ_d + δ_e(a^a), shifted; needs d > a(e-1) + 1.
    DeltaSum { a: u32, d: u32, e: u32 },
    /// (N, N-2, ..., N-2n+2), shifted; needs N - 2n + 2 >= 1.
    Trapezoid { big_n: u32, n: u32 },
    /// δ_{n+1} + ν with ν balanced of height = width = k < n, shifted.
    BalancedShifted1 { n: u32, nu: Vec<u32> },
    /// δ_{n+1} + (n-1-k)^n + ν, same ν, shifted.
    BalancedShifted2 { n: u32, nu: Vec<u32> },
    /// δ_d(b^a): each staircase cell becomes an a-by-b block (a rows), straight.
    RectStaircase { d: u32, a: u32, b: u32 },
    /// (w^h): h rows of length w, straight.
    Rectangle { w: u32, h: u32 },
}

/// δ_m = (m-1, m-2, ..., 1).
pub fn staircase(m: u32) -> Partition {
    Partition((1..m).rev().collect())
}

/// Componentwise sum, padding the shorter sequence with zeros.
pub fn add_parts(x: &[u32], y: &[u32]) -> Vec<u32> {
    (0..x.len().max(y.len()))
        .map(|i| x.get(i).copied().unwrap_or(0) + y.get(i).copied().unwrap_or(0))
        .collect()
}

fn rect_staircase(d: u32, a: u32, b: u32) -> Vec<u32> {
    let mut v = Vec::new();
    for r in (1..d).rev() {
        v.extend(std::iter::repeat_n(b * r, a as usize));
    }
    v
}

fn square_balanced(nu: &[u32], n: u32) -> Result<u32> {
    let k = nu.len() as u32;
    if nu.is_empty() {
        return Ok(0);
    }
    if nu[0] != k || balanced_slope(nu).is_none() {
        return Err(Error::Domain(format!("ν = {nu:?} must be balanced with equal height and width")));
    }
    if k >= n {
        return Err(Error::Domain(format!("need k < n, got k = {k}, n = {n}")));
    }
    Ok(k)
}

pub fn make_family(f: &Family) -> Result<(Vec<u32>, Kind)> {
    let (parts, kind) = match *f {
        Family::DeltaSum { a, d, e } => {
            if a == 0 || e == 0 || d <= a * (e - 1) + 1 {
                return Err(Error::Domain(format!("delta-sum needs d > a(e-1)+1 (a={a}, d={d}, e={e})")));
            }
            (add_parts(staircase(d).parts(), &rect_staircase(e, a, a)), Kind::Shifted)
        }
        Family::Trapezoid { big_n, n } => {
            if n == 0 || big_n + 2 < 2 * n + 1 {
                return Err(Error::Domain(format!("trapezoid needs N - 2n + 2 >= 1 (N={big_n}, n={n})")));
            }
            ((0..n).map(|i| big_n - 2 * i).collect(), Kind::Shifted)
        }
        Family::BalancedShifted1 { n, ref nu } => {
            square_balanced(nu, n)?;
            (add_parts(staircase(n + 1).parts(), nu), Kind::Shifted)
        }
        Family::BalancedShifted2 { n, ref nu } => {
            let k = square_balanced(nu, n)?;
            let base = add_parts(staircase(n + 1).parts(), &vec![n - 1 - k; n as usize]);
            (add_parts(&base, nu), Kind::Shifted)
        }
        Family::RectStaircase { d, a, b } => {
            if d < 2 || a == 0 || b == 0 {
                return Err(Error::Domain("rect-staircase needs d >= 2 and a, b >= 1".into()));
            }
            (rect_staircase(d, a, b), Kind::Straight)
        }
        Family::Rectangle { w, h } => {
            if w == 0 || h == 0 {
                return Err(Error::Domain("rectangle needs positive sides".into()));
            }
            (vec![w; h as usize], Kind::Straight)
        }
    };
    super::validate(&parts, kind)?;
    Ok((parts, kind))
}
