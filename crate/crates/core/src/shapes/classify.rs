
use super::geometry::inner_corners;
use super::{validate, Kind, Partition};
use crate::error::Result;
use crate::exact::{rat, Rational};

/// Shape classes that the converse conjectures refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    /// Straight: slope ℓ/w when balanced. Shifted: slope of the residual
    /// straight shape μ when μ is nonempty and balanced.
    pub slope: Option<Rational>,
    pub shifted_balanced: bool,
    pub trapezoidal: bool,
}

impl Classification {
    /// Whether the conjectures predict the CDE property for this shape.
    pub fn predicts_cde(&self) -> bool {
        match self.kind {
            Kind::Straight => self.slope.is_some(),
            Kind::Shifted => self.shifted_balanced || self.trapezoidal,
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            Kind::Straight => match &self.slope {
                Some(m) => format!("balanced(slope={m})"),
                None => "none".into(),
            },
            Kind::Shifted => match (self.shifted_balanced, self.trapezoidal) {
                (true, true) => "shifted-balanced+trapezoidal".into(),
                (true, false) => "shifted-balanced".into(),
                (false, true) => "trapezoidal".into(),
                (false, false) => "none".into(),
            },
        }
    }
}

/// Slope ℓ/w if every inner corner (i, j) satisfies ℓ(j-1) + w(i-1) = wℓ,
/// i.e. sits on the line from the end of the first row to the end of the
/// first column. `None` for non-balanced or empty shapes.
pub fn balanced_slope(parts: &[u32]) -> Option<Rational> {
    let p = Partition::new(parts.to_vec()).ok()?;
    if p.is_empty() {
        return None;
    }
    let (w, l) = (p.width() as i64, p.len() as i64);
    inner_corners(&p)
        .iter()
        .all(|c| l * (c.col as i64 - 1) + w * (c.row as i64 - 1) == w * l)
        .then(|| rat(l, w))
}

/// Residual μ = λ - δ_{n+1} when λ_n = 1, else λ - δ_n.
fn shifted_residual(parts: &[u32]) -> Vec<u32> {
    let n = parts.len() as u32;
    let last_one = parts.last() == Some(&1);
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let i = i as u32;
            let d = if last_one { n - i } else { n - 1 - i };
            p - d
        })
        .filter(|&p| p > 0)
        .collect()
}

pub fn classify(parts: &[u32], kind: Kind) -> Result<Classification> {
    validate(parts, kind)?;
    Ok(match kind {
        Kind::Straight => Classification {
            kind,
            slope: balanced_slope(parts),
            shifted_balanced: false,
            trapezoidal: false,
        },
        Kind::Shifted => {
            let mu = shifted_residual(parts);
            let slope = balanced_slope(&mu);
            let shifted_balanced = mu.is_empty() || slope == Some(rat(1, 1));
            let trapezoidal = !parts.is_empty() && parts.windows(2).all(|w| w[0] - w[1] == 2);
            Classification { kind, slope, shifted_balanced, trapezoidal }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions, staircase};

    #[test]
    fn examples() {
        let c = classify(&[2, 2], Kind::Straight).unwrap();
        assert_eq!(c.slope, Some(rat(1, 1)));
        let c = classify(&[3, 1], Kind::Shifted).unwrap();
        assert!(c.shifted_balanced && c.trapezoidal);
        let c = classify(&[4, 3, 1], Kind::Shifted).unwrap();
        assert!(!c.shifted_balanced && !c.trapezoidal);
        assert_eq!(c.slope, Some(rat(2, 1)));
        assert!(classify(&[2, 1], Kind::Shifted).unwrap().shifted_balanced);
    }

    #[test]
    fn rectangles_and_staircases() {
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                assert_eq!(balanced_slope(&vec![a; b as usize]), Some(rat(b as i64, a as i64)));
            }
            assert_eq!(balanced_slope(staircase(a + 1).parts()), Some(rat(1, 1)));
        }
    }

    #[test]
    fn conjugation_inverts_slope() {
        for n in 1..=12 {
            for p in partitions(n) {
                let s = balanced_slope(p.parts());
                let t = balanced_slope(p.conjugate().parts());
                assert_eq!(s.map(|m| m.recip()), t, "{p}");
            }
        }
    }
}
