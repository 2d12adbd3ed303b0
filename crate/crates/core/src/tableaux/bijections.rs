use std::collections::HashSet;

use num_bigint::BigInt;

use super::{enumerate_syt, for_each_sbt, for_each_syt, uncrowd_diag, uncrowd_left, uncrowd_right, Tableau};
use crate::error::Result;
use crate::shapes::{ne_corners, Cell, Diagram, DiagramKind, StrictPartition};

/// Which uncrowding map a check exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uncrowd {
    /// Column k ≥ n onto column k+1 or a new northeast cell.
    Right,
    /// Column k ≤ n, off the diagonal, onto column k-1.
    Left,
    /// λ ∪ {(i+1, i)} onto the diagonal cells (i, i) and (i+1, i+1).
    Diag,
}

impl Uncrowd {
    pub fn name(self) -> &'static str {
        match self {
            Uncrowd::Right => "k2",
            Uncrowd::Left => "k1",
            Uncrowd::Diag => "diag",
        }
    }
}

/// One map at one parameter: the domain is mapped injectively into the
/// target, and the domain has exactly as many elements as the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCheck {
    pub map: Uncrowd,
    pub param: u32,
    pub domain: usize,
    pub distinct_images: usize,
    pub images_in_target: bool,
    pub target: BigInt,
}

impl BijectionCheck {
    pub fn ok(&self) -> bool {
        self.images_in_target && self.distinct_images == self.domain && BigInt::from(self.domain) == self.target
    }
}

fn sbts_where(d: &Diagram, keep: impl Fn(Cell) -> bool) -> Vec<Tableau> {
    let mut v = Vec::new();
    for_each_sbt(d, |t| {
        if keep(t.double_cell().expect("SBT")) {
            v.push(t.clone());
        }
    });
    v
}

fn run(
    map: Uncrowd,
    param: u32,
    domain: &[Tableau],
    f: impl Fn(&Tableau) -> Result<Tableau>,
    in_target: impl Fn(&Tableau) -> bool,
    target: BigInt,
) -> Result<BijectionCheck> {
    let mut seen = HashSet::new();
    let mut inside = true;
    for t in domain {
        let u = f(t)?;
        inside &= in_target(&u);
        seen.insert(u);
    }
    Ok(BijectionCheck { map, param, domain: domain.len(), distinct_images: seen.len(), images_in_target: inside, target })
}

/// Checks the three uncrowding maps on every admissible parameter for λ.
pub fn check_uncrowding(lam: &StrictPartition) -> Result<Vec<BijectionCheck>> {
    let n = lam.len() as u32;
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = Diagram::shifted(lam);
    let mut out = Vec::new();
    let count_col = |k: u32| sbts_where(&d, |x| x.col == k).len();

    for k in n..=lam.width() {
        let dom = sbts_where(&d, |x| x.col == k);
        let h = d.cells().iter().filter(|c| c.col == k + 1).count() as u32;
        let y = Cell::new(h + 1, k + 1);
        let grown = ne_corners(lam).contains(&y);
        let mut target = BigInt::from(count_col(k + 1));
        if grown {
            let mut parts = lam.parts().to_vec();
            parts[h as usize] += 1;
            target += enumerate_syt(&Diagram::shifted(&StrictPartition::new(parts)?));
        }
        let check = |u: &Tableau| {
            if u.diagram() == &d {
                u.is_sbt() && u.double_cell().map(|c| c.col) == Some(k + 1)
            } else {
                grown && u.is_syt() && u.diagram().cells().contains(&y) && u.diagram().size() == d.size() + 1
            }
        };
        out.push(run(Uncrowd::Right, k, &dom, uncrowd_right, check, target)?);
    }

    for k in 2..=n {
        let dom = sbts_where(&d, |x| x.col == k && x.row != k);
        let target = BigInt::from(count_col(k - 1));
        let check = |u: &Tableau| u.diagram() == &d && u.double_cell().map(|c| c.col) == Some(k - 1);
        out.push(run(Uncrowd::Left, k, &dom, uncrowd_left, check, target)?);
    }

    for i in 1..n {
        let ext = Diagram::extended(lam, i + 1)?;
        let mut dom = Vec::new();
        for_each_syt(&ext, |t| dom.push(t.clone()));
        let on_diag = |c: Cell| c.row == c.col && (c.row == i || c.row == i + 1);
        let target = BigInt::from(sbts_where(&d, on_diag).len());
        let check = |u: &Tableau| {
            u.diagram().kind() == DiagramKind::Shifted && u.double_cell().is_some_and(on_diag)
        };
        out.push(run(Uncrowd::Diag, i, &dom, uncrowd_diag, check, target)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_maps_biject_on_small_shapes() {
        for v in [&[1][..], &[2, 1], &[4, 2, 1], &[5, 3, 2], &[6, 3]] {
            let lam = StrictPartition::new(v.to_vec()).unwrap();
            let checks = check_uncrowding(&lam).unwrap();
            assert!(checks.iter().all(|c| c.ok()), "{v:?}: {checks:?}");
        }
        let lam = StrictPartition::new(vec![4, 2, 1]).unwrap();
        let checks = check_uncrowding(&lam).unwrap();
        assert_eq!(checks.iter().filter(|c| c.map == Uncrowd::Right).count(), 2);
        assert_eq!(checks.iter().filter(|c| c.map == Uncrowd::Left).count(), 2);
        assert_eq!(checks.iter().filter(|c| c.map == Uncrowd::Diag).count(), 2);
    }
}
