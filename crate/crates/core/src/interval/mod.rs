//! Lower intervals [∅, λ] of Young's lattice and the shifted Young's lattice.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, Rational};
use crate::shapes::{border, contract, validate, Cell, Diagram, Kind, StrictPartition};

/// All shapes below λ with their covering relations.
#[derive(Clone, Debug)]
pub struct IntervalIndex {
    kind: Kind,
    elements: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
}

/// Maximal-chain counts through each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWeights {
    /// Saturated chains from ∅ up to the element.
    pub c_down: Vec<BigInt>,
    /// Saturated chains from the element up to λ.
    pub c_up: Vec<BigInt>,
}

/// Calls `f` on every shape μ ⊆ λ of the given kind (parts only, no zeros).
pub fn for_each_subshape(lam: &[u32], kind: Kind, mut f: impl FnMut(&[u32])) {
    let mut cur = Vec::with_capacity(lam.len());
    sub_rec(lam, kind, &mut cur, &mut f);
}

fn sub_rec(lam: &[u32], kind: Kind, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    f(cur);
    let i = cur.len();
    if i == lam.len() {
        return;
    }
    let cap = match (kind, cur.last()) {
        (_, None) => lam[i],
        (Kind::Straight, Some(&p)) => lam[i].min(p),
        (Kind::Shifted, Some(&p)) => lam[i].min(p - 1),
    };
    for v in 1..=cap {
        cur.push(v);
        sub_rec(lam, kind, cur, f);
        cur.pop();
    }
}

/// Number of shapes covered by μ: straight, one per distinct part; shifted,
/// the last row plus every row that exceeds the next by at least 2.
pub fn down_degree(mu: &[u32], kind: Kind) -> u32 {
    if mu.is_empty() {
        return 0;
    }
    let gaps = mu.windows(2);
    match kind {
        Kind::Straight => 1 + gaps.filter(|w| w[0] > w[1]).count() as u32,
        Kind::Shifted => 1 + gaps.filter(|w| w[0] >= w[1] + 2).count() as u32,
    }
}

fn covered(mu: &[u32], kind: Kind) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..mu.len() {
        let next = mu.get(i + 1).copied().unwrap_or(0);
        let ok = match kind {
            Kind::Straight => mu[i] > next,
            Kind::Shifted => mu[i] >= next + 2 || i + 1 == mu.len(),
        };
        if ok {
            let mut v = mu.to_vec();
            v[i] -= 1;
            if v[i] == 0 {
                v.pop();
            }
            out.push(v);
        }
    }
    out
}

impl IntervalIndex {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements ordered by size, then lexicographically by parts.
    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn index_of(&self, mu: &[u32]) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn down_degree(&self, i: usize) -> usize {
        self.down[i].len()
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }
}

pub fn enumerate_interval(lam: &[u32], kind: Kind) -> Result<IntervalIndex> {
    validate(lam, kind)?;
    let mut elements = Vec::new();
    for_each_subshape(lam, kind, |m| elements.push(m.to_vec()));
    elements.sort_by(|a, b| (a.iter().sum::<u32>(), a).cmp(&(b.iter().sum::<u32>(), b)));
    let index: HashMap<Vec<u32>, usize> = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut down = vec![Vec::new(); elements.len()];
    let mut up = vec![Vec::new(); elements.len()];
    for (i, m) in elements.iter().enumerate() {
        for c in covered(m, kind) {
            let j = index[&c];
            down[i].push(j);
            up[j].push(i);
        }
    }
    Ok(IntervalIndex { kind, elements, index, down, up })
}

pub fn chain_weights(idx: &IntervalIndex) -> ChainWeights {
    let n = idx.len();
    let mut c_down = vec![BigInt::zero(); n];
    c_down[0] = BigInt::one();
    for i in 1..n {
        c_down[i] = idx.down[i].iter().map(|&j| &c_down[j]).sum();
    }
    let mut c_up = vec![BigInt::zero(); n];
    c_up[n - 1] = BigInt::one();
    for i in (0..n - 1).rev() {
        c_up[i] = idx.up[i].iter().map(|&j| &c_up[j]).sum();
    }
    ChainWeights { c_down, c_up }
}

/// (interval size, sum of down-degrees), enumerating the interval without
/// storing it.
pub fn interval_sums(lam: &[u32], kind: Kind) -> Result<(BigInt, BigInt)> {
    validate(lam, kind)?;
    let (mut r, mut s) = (0u128, 0u128);
    for_each_subshape(lam, kind, |m| {
        r += 1;
        s += down_degree(m, kind) as u128;
    });
    Ok((r.into(), s.into()))
}

/// R(λ) and R^{(+1)}(λ) for a strict partition.
pub fn r_counts(lam: &StrictPartition) -> (BigInt, BigInt) {
    interval_sums(lam.parts(), Kind::Shifted).expect("strict partition")
}

/// Σ_{x ∈ B(λ)} R(λ(x)).
pub fn r_plus_via_border(lam: &StrictPartition) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for x in border(lam) {
        total += r_counts(&contract(lam, x)?).0;
    }
    Ok(total)
}

/// For λ = (N, N-2, ..., N-2n+2): R = C(N+1, n), R^{(+1)} = |λ|/(N+1) · R,
/// and E(X) = |λ|/(N+1).
pub fn trapezoid_closed(big_n: u32, n: u32) -> Result<(BigInt, BigInt, Rational)> {
    if n == 0 || big_n + 2 < 2 * n + 1 {
        return Err(Error::Domain(format!("trapezoid needs n >= 1 and N - 2n + 2 >= 1 (N={big_n}, n={n})")));
    }
    let size = (n * big_n - n * (n - 1)) as i64;
    let r = binomial(big_n as i64 + 1, n as i64);
    let ex = Rational::new(size.into(), (big_n as i64 + 1).into());
    let rp = Rational::from_integer(r.clone()) * &ex;
    assert!(rp.is_integer(), "R^(+1) not an integer");
    Ok((r, rp.to_integer(), ex))
}

/// Number of antichains of each size in the cell poset of λ, where one cell
/// lies below another when it is weakly southeast of it.
pub fn antichain_counts(lam: &[u32], kind: Kind) -> Result<Vec<BigInt>> {
    let d = Diagram::of(lam, kind)?;
    let cells = d.cells();
    if cells.len() > 64 {
        return Err(Error::Unsupported("more than 64 cells".into()));
    }
    let comparable = |a: Cell, b: Cell| (a.row <= b.row && a.col <= b.col) || (a.row >= b.row && a.col >= b.col);
    let inc: Vec<u64> = cells
        .iter()
        .map(|&a| cells.iter().enumerate().filter(|&(_, &b)| !comparable(a, b)).fold(0u64, |m, (j, _)| m | 1 << j))
        .collect();
    let mut counts = vec![0u128; cells.len() + 1];
    fn rec(inc: &[u64], allowed: u64, start: usize, size: usize, counts: &mut [u128]) {
        counts[size] += 1;
        for i in start..inc.len() {
            if allowed >> i & 1 == 1 {
                rec(inc, allowed & inc[i], i + 1, size + 1, counts);
            }
        }
    }
    let all = if cells.len() == 64 { u64::MAX } else { (1u64 << cells.len()) - 1 };
    rec(&inc, all, 0, 0, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// Mean antichain size of the cell poset.
pub fn antichain_average(lam: &[u32], kind: Kind) -> Result<Rational> {
    let c = antichain_counts(lam, kind)?;
    let total: BigInt = c.iter().sum();
    let weighted: BigInt = c.iter().enumerate().map(|(k, v)| v * k).sum();
    Ok(Rational::new(weighted, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn interval_examples() {
        let i = enumerate_interval(&[4, 2], Kind::Shifted).unwrap();
        assert_eq!(i.len(), 10);
        let s = enumerate_interval(&[2, 1], Kind::Straight).unwrap();
        let dd: Vec<usize> = (0..s.len()).map(|k| s.down_degree(k)).collect();
        assert_eq!(dd, vec![0, 1, 1, 1, 2]);
        assert_eq!(enumerate_interval(&[1], Kind::Shifted).unwrap().len(), 2);
    }

    #[test]
    fn chain_examples() {
        let i = enumerate_interval(&[3, 1], Kind::Shifted).unwrap();
        let w = chain_weights(&i);
        let prod: Vec<BigInt> = w.c_down.iter().zip(&w.c_up).map(|(a, b)| a * b).collect();
        assert_eq!(prod, [2, 2, 2, 1, 1, 2].map(BigInt::from).to_vec());
        let s = enumerate_interval(&[2, 1], Kind::Straight).unwrap();
        assert_eq!(chain_weights(&s).c_down[s.top()], 2.into());
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_counts(&sp(&[4, 2])), (10.into(), 12.into()));
        assert_eq!(r_counts(&sp(&[1])), (2.into(), 1.into()));
        assert_eq!(r_counts(&sp(&[3, 1])), (6.into(), 6.into()));
        assert_eq!(r_plus_via_border(&sp(&[4, 2])).unwrap(), 12.into());
        assert_eq!(r_plus_via_border(&sp(&[1])).unwrap(), 1.into());
        assert_eq!(trapezoid_closed(4, 2).unwrap(), (10.into(), 12.into(), rat(6, 5)));
        assert_eq!(trapezoid_closed(1, 1).unwrap(), (2.into(), 1.into(), rat(1, 2)));
        assert_eq!(trapezoid_closed(3, 2).unwrap(), (6.into(), 6.into(), rat(1, 1)));
        assert!(trapezoid_closed(3, 3).is_err());
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(antichain_average(&[4, 2], Kind::Shifted).unwrap(), rat(6, 5));
        let c = antichain_counts(&[4, 2], Kind::Shifted).unwrap();
        assert_eq!(c, antichain_counts(&[3, 3], Kind::Straight).unwrap());
        assert_eq!(c, [1, 6, 3].map(BigInt::from).to_vec());
        assert_eq!(antichain_average(&[1], Kind::Shifted).unwrap(), rat(1, 2));
        assert_eq!(antichain_average(&[2, 2], Kind::Straight).unwrap(), rat(1, 1));
    }
}
