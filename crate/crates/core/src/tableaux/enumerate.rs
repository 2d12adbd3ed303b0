use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::counts::{count_syt_thrall, with_cell};
use super::Tableau;
use crate::error::{Error, Result};
use crate::shapes::{ne_corners, Cell, Diagram, StrictPartition};

/// Cells of a diagram as a poset on bit positions: a cell must come after its
/// left and upper neighbours.
#[derive(Clone, Debug)]
pub struct CellPoset {
    cells: Vec<Cell>,
    pred: Vec<u64>,
    succ: Vec<u64>,
}

impl CellPoset {
    pub fn new(d: &Diagram) -> Self {
        let cells = d.cells();
        assert!(cells.len() <= 64, "diagram too large for bitmask enumeration");
        let idx: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mask = |v: Vec<Cell>| v.iter().fold(0u64, |m, c| m | 1 << idx[c]);
        let pred = cells.iter().map(|&c| mask(d.predecessors(c))).collect();
        let succ = cells.iter().map(|&c| mask(d.successors(c))).collect();
        CellPoset { cells, pred, succ }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn full(&self) -> u64 {
        if self.cells.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.cells.len()) - 1
        }
    }

    /// Cells that can be added to the ideal `m`.
    pub fn addable(&self, m: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.cells.len()).filter(move |&i| m >> i & 1 == 0 && self.pred[i] & !m == 0)
    }

    /// Maximal cells of the ideal `m`.
    pub fn removable(&self, m: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.cells.len()).filter(move |&i| m >> i & 1 == 1 && self.succ[i] & m == 0)
    }

    /// All order ideals, by size and then by mask.
    pub fn ideals(&self) -> Vec<u64> {
        let mut layers = vec![vec![0u64]];
        for _ in 0..self.cells.len() {
            let mut next: Vec<u64> =
                layers.last().unwrap().iter().flat_map(|&m| self.addable(m).map(move |i| m | 1 << i)).collect();
            next.sort_unstable();
            next.dedup();
            layers.push(next);
        }
        layers.concat()
    }

    /// For every ideal: number of ways to build it from nothing, and number of
    /// ways to extend it to the full diagram.
    pub fn chain_counts(&self) -> (Vec<u64>, HashMap<u64, BigInt>, HashMap<u64, BigInt>) {
        let ideals = self.ideals();
        let mut down: HashMap<u64, BigInt> = HashMap::with_capacity(ideals.len());
        for &m in &ideals {
            let v = if m == 0 { BigInt::one() } else { self.removable(m).map(|i| &down[&(m & !(1 << i))]).sum() };
            down.insert(m, v);
        }
        let mut up: HashMap<u64, BigInt> = HashMap::with_capacity(ideals.len());
        for &m in ideals.iter().rev() {
            let v = if m == self.full() { BigInt::one() } else { self.addable(m).map(|i| &up[&(m | 1 << i)]).sum() };
            up.insert(m, v);
        }
        (ideals, down, up)
    }
}

/// Number of standard fillings of any diagram (linear extensions of its cell
/// poset).
pub fn enumerate_syt(d: &Diagram) -> BigInt {
    let p = CellPoset::new(d);
    let mut memo = HashMap::new();
    count_from(&p, 0, &mut memo)
}

fn count_from(p: &CellPoset, m: u64, memo: &mut HashMap<u64, BigInt>) -> BigInt {
    if m == p.full() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&m) {
        return v.clone();
    }
    let v = p.addable(m).collect::<Vec<_>>().into_iter().map(|i| count_from(p, m | 1 << i, memo)).sum();
    memo.insert(m, v);
    memo[&m].clone()
}

/// Visits every SYT of `d`.
pub fn for_each_syt(d: &Diagram, mut f: impl FnMut(&Tableau)) {
    let p = CellPoset::new(d);
    let mut vals = vec![Vec::new(); p.len()];
    walk(&p, d, 0, 1, false, false, &mut vals, &mut f);
}

/// Visits every SBT of `d`.
pub fn for_each_sbt(d: &Diagram, mut f: impl FnMut(&Tableau)) {
    let p = CellPoset::new(d);
    let mut vals = vec![Vec::new(); p.len()];
    walk(&p, d, 0, 1, true, false, &mut vals, &mut f);
}

/// Places the value `t`: either in a new addable cell, or (once, when
/// `double` is set) as the second entry of a maximal cell already filled.
#[allow(clippy::too_many_arguments)]
fn walk(
    p: &CellPoset,
    d: &Diagram,
    m: u64,
    t: u32,
    double: bool,
    used: bool,
    vals: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&Tableau),
) {
    if m == p.full() && used == double {
        let entries = p.cells.iter().copied().zip(vals.iter().cloned()).collect();
        f(&Tableau::from_parts_unchecked(d.clone(), entries));
        return;
    }
    for i in p.addable(m).collect::<Vec<_>>() {
        vals[i].push(t);
        walk(p, d, m | 1 << i, t + 1, double, used, vals, f);
        vals[i].pop();
    }
    if double && !used {
        for i in p.removable(m).collect::<Vec<_>>() {
            vals[i].push(t);
            walk(p, d, m, t + 1, double, true, vals, f);
            vals[i].pop();
        }
    }
}

/// SBT counts split by the position of the double cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SbtRefinement {
    pub total: BigInt,
    /// Count for each double-cell position (empty when computed by formula).
    pub by_cell: BTreeMap<Cell, BigInt>,
    /// Count with the double cell in column k.
    pub by_column: BTreeMap<u32, BigInt>,
    /// Count with the double cell at (i, i).
    pub diagonal: BTreeMap<u32, BigInt>,
}

/// Counts SBT of a straight or shifted diagram by double cell. The second
/// entry b of the double cell x is placed when the cells holding 1..b-1 form
/// an ideal in which x is maximal, so the count for x is the sum over such
/// ideals of (ways to fill the ideal) × (ways to fill the rest).
pub fn enumerate_sbt(d: &Diagram) -> SbtRefinement {
    let p = CellPoset::new(d);
    let (ideals, down, up) = p.chain_counts();
    let mut per = vec![BigInt::zero(); p.len()];
    for m in ideals {
        let w = &down[&m] * &up[&m];
        for i in p.removable(m) {
            per[i] += &w;
        }
    }
    let mut r = SbtRefinement::default();
    for (c, v) in p.cells.iter().zip(per) {
        *r.by_column.entry(c.col).or_default() += &v;
        if c.row == c.col {
            r.diagonal.insert(c.row, v.clone());
        }
        r.total += &v;
        r.by_cell.insert(*c, v);
    }
    r
}

/// Shifted refinement from SYT counts alone: columns right of the staircase
/// from sums over northeast corners, diagonal cells from the extended
/// diagrams, and the remaining columns as prefix sums of the diagonal.
pub fn sbt_refined_shifted(lam: &StrictPartition) -> Result<SbtRefinement> {
    if lam.is_empty() {
        return Err(Error::Domain("the empty shape has no SBT".into()));
    }
    let n = lam.len() as u32;
    let ne: Vec<(Cell, BigInt)> = ne_corners(lam)
        .into_iter()
        .map(|x| {
            let q = StrictPartition::new(with_cell(lam.parts(), x.row as usize)).expect("NE corner");
            (x, count_syt_thrall(&q))
        })
        .collect();
    let mut r = SbtRefinement::default();
    let mut prev = BigInt::zero();
    for i in 1..=n {
        // g_{i,i} = g^{λ ∪ (i, i-1)} - g_{i-1,i-1}, starting from g^{λ ∪ (1,0)}.
        let ext = enumerate_syt(&Diagram::extended(lam, i)?);
        let v = ext - &prev;
        r.diagonal.insert(i, v.clone());
        prev = v;
    }
    let mut acc = BigInt::zero();
    for k in 1..=n {
        acc += &r.diagonal[&k];
        r.by_column.insert(k, acc.clone());
    }
    for k in n + 1..=lam.width() {
        let v: BigInt = ne.iter().filter(|(x, _)| x.col > k).map(|(_, g)| g).sum();
        r.by_column.insert(k, v);
    }
    r.total = r.by_column.values().sum();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn sd(v: &[u32]) -> Diagram {
        Diagram::shifted(&StrictPartition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&sd(&[3, 1])), 2.into());
        assert_eq!(enumerate_syt(&Diagram::straight(&Partition::new(vec![1]).unwrap())), 1.into());
        assert_eq!(enumerate_syt(&Diagram::straight(&Partition::new(vec![4, 3, 1]).unwrap())), 70.into());
        let mut n = 0;
        for_each_syt(&sd(&[4, 3, 1]), |t| {
            assert!(t.is_syt());
            n += 1;
        });
        assert_eq!(n, 12);
    }

    #[test]
    fn sbt_counts() {
        let d = Diagram::straight(&Partition::new(vec![2, 1]).unwrap());
        let r = enumerate_sbt(&d);
        assert_eq!(r.total, 8.into());
        assert_eq!(r.by_cell[&Cell::new(1, 1)], 2.into());
        assert_eq!(enumerate_sbt(&sd(&[2])).total, 2.into());
        assert_eq!(enumerate_sbt(&Diagram::straight(&Partition::new(vec![1]).unwrap())).total, 1.into());
        let mut seen = Vec::new();
        for_each_sbt(&sd(&[2]), |t| seen.push(t.sets()));
        assert_eq!(seen, vec![vec![vec![1], vec![2, 3]], vec![vec![1, 2], vec![3]]]);
    }

    #[test]
    fn refinement_from_formulas() {
        let lam = StrictPartition::new(vec![2]).unwrap();
        let r = sbt_refined_shifted(&lam).unwrap();
        assert_eq!(r.by_column[&1], 1.into());
        assert_eq!(r.by_column[&2], 1.into());
        for v in [vec![4, 2], vec![3, 1], vec![5, 3, 2], vec![6, 4, 1]] {
            let lam = StrictPartition::new(v).unwrap();
            let e = enumerate_sbt(&Diagram::shifted(&lam));
            let f = sbt_refined_shifted(&lam).unwrap();
            assert_eq!(e.by_column, f.by_column);
            assert_eq!(e.diagonal, f.diagonal);
            assert_eq!(e.total, f.total);
        }
        let lam = StrictPartition::new(vec![3, 1]).unwrap();
        assert_eq!(enumerate_sbt(&Diagram::shifted(&lam)).diagonal[&1], enumerate_syt(&Diagram::extended(&lam, 1).unwrap()));
    }
}
