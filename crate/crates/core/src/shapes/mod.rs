//! Partitions, strict partitions, diagrams and their cells.

mod classify;
mod family;
mod geometry;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classify::{balanced_slope, classify, Classification};
pub use family::{add_parts, make_family, staircase, Family};
pub use geometry::{border, contract, inner_corners, ne_corners, shifted_addable};

/// Straight (Young) versus shifted diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Straight,
    Shifted,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Straight => "straight",
            Kind::Shifted => "shifted",
        })
    }
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

/// Strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts, then validates.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        Partition::new(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part i (1-based); zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            u32::MAX
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.width() as usize;
        Partition((1..=w as u32).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Contents c_i = λ_i - i for i = 1..len.
    pub fn contents(&self) -> Vec<i64> {
        self.0.iter().enumerate().map(|(i, &p)| p as i64 - (i as i64 + 1)).collect()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        StrictPartition::new(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part i (1-based); `u32::MAX` for i = 0 and zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            u32::MAX
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

fn join(parts: &[u32]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Comma-separated positive integers; the empty string is the empty shape.
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in s.split(',') {
        let lead = tok.len() - tok.trim_start().len();
        let t = tok.trim();
        match t.parse::<u32>() {
            Ok(v) if v > 0 => out.push(v),
            Ok(_) => return Err(Error::Parse { pos: pos + lead, msg: "parts must be positive".into() }),
            Err(_) => {
                return Err(Error::Parse { pos: pos + lead, msg: format!("expected a positive integer, found {t:?}") })
            }
        }
        pos += tok.len() + 1;
    }
    Ok(out)
}

/// A cell (row, column), both 1-based; column 0 only occurs as the extra cell
/// of an extended shifted diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    #[serde(rename = "r")]
    pub row: u32,
    #[serde(rename = "c")]
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramKind {
    Straight,
    Shifted,
    ExtendedShifted,
}

/// A straight, shifted, or extended shifted diagram. Cells precede their
/// right and lower neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    kind: DiagramKind,
    parts: Vec<u32>,
    extra: Option<Cell>,
}

impl Diagram {
    pub fn straight(p: &Partition) -> Self {
        Diagram { kind: DiagramKind::Straight, parts: p.0.clone(), extra: None }
    }

    pub fn shifted(p: &StrictPartition) -> Self {
        Diagram { kind: DiagramKind::Shifted, parts: p.0.clone(), extra: None }
    }

    /// Shifted diagram of `p` plus the cell (i, i-1), 1 <= i <= n.
    pub fn extended(p: &StrictPartition, i: u32) -> Result<Self> {
        if i < 1 || i as usize > p.len() {
            return Err(Error::Domain(format!("extra cell ({i},{}) needs 1 <= {i} <= {}", i as i64 - 1, p.len())));
        }
        Ok(Diagram { kind: DiagramKind::ExtendedShifted, parts: p.0.clone(), extra: Some(Cell::new(i, i - 1)) })
    }

    pub fn of(parts: &[u32], kind: Kind) -> Result<Self> {
        Ok(match kind {
            Kind::Straight => Diagram::straight(&Partition::new(parts.to_vec())?),
            Kind::Shifted => Diagram::shifted(&StrictPartition::new(parts.to_vec())?),
        })
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn extra(&self) -> Option<Cell> {
        self.extra
    }

    pub fn is_shifted(&self) -> bool {
        self.kind != DiagramKind::Straight
    }

    /// First column of row `r` in the base shape.
    fn row_start(&self, r: u32) -> u32 {
        if self.is_shifted() {
            r
        } else {
            1
        }
    }

    pub fn contains(&self, c: Cell) -> bool {
        if Some(c) == self.extra {
            return true;
        }
        if c.row == 0 || c.row as usize > self.parts.len() {
            return false;
        }
        let s = self.row_start(c.row);
        c.col >= s && c.col < s + self.parts[c.row as usize - 1]
    }

    /// All cells, row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            let r = i as u32 + 1;
            if let Some(x) = self.extra.filter(|x| x.row == r) {
                v.push(x);
            }
            let s = self.row_start(r);
            v.extend((s..s + p).map(|c| Cell::new(r, c)));
        }
        v
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum::<u32>() as usize + self.extra.is_some() as usize
    }

    /// Cells that must hold smaller entries than `c` (left and upper
    /// neighbours present in the diagram).
    pub fn predecessors(&self, c: Cell) -> Vec<Cell> {
        let mut v = Vec::with_capacity(2);
        if c.col > 0 && self.contains(Cell::new(c.row, c.col - 1)) {
            v.push(Cell::new(c.row, c.col - 1));
        }
        if c.row > 1 && self.contains(Cell::new(c.row - 1, c.col)) {
            v.push(Cell::new(c.row - 1, c.col));
        }
        v
    }

    /// Right and lower neighbours present in the diagram.
    pub fn successors(&self, c: Cell) -> Vec<Cell> {
        [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)]
            .into_iter()
            .filter(|&x| self.contains(x))
            .collect()
    }
}

/// All partitions of `n`, ascending lexicographic order of part vectors.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_parts(n, n, false, &mut cur, &mut out);
    out.sort();
    out.into_iter().map(Partition).collect()
}

/// All strict partitions of `n`, ascending lexicographic order.
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_parts(n, n, true, &mut cur, &mut out);
    out.sort();
    out.into_iter().map(StrictPartition).collect()
}

fn gen_parts(rem: u32, max: u32, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rem == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        cur.push(p);
        let next = if strict { p - 1 } else { p };
        gen_parts(rem - p, next, strict, cur, out);
        cur.pop();
    }
}

/// Shapes of a given size and kind as plain part vectors.
pub fn shapes_of_size(n: u32, kind: Kind) -> Vec<Vec<u32>> {
    match kind {
        Kind::Straight => partitions(n).into_iter().map(|p| p.0).collect(),
        Kind::Shifted => strict_partitions(n).into_iter().map(|p| p.0).collect(),
    }
}

pub fn validate(parts: &[u32], kind: Kind) -> Result<()> {
    match kind {
        Kind::Straight => Partition::new(parts.to_vec()).map(|_| ()),
        Kind::Shifted => StrictPartition::new(parts.to_vec()).map(|_| ()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_partitions() {
        let p: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let q: Vec<usize> = (0..=10).map(|n| strict_partitions(n).len()).collect();
        assert_eq!(q, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
    }

    #[test]
    fn parse_reports_position() {
        assert_eq!(parse_parts("8,6,5,3").unwrap(), vec![8, 6, 5, 3]);
        assert_eq!(parse_parts("").unwrap(), Vec::<u32>::new());
        match parse_parts("4,x,1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(StrictPartition::parse("2,2").is_err());
        assert!(Partition::parse("1,2").is_err());
    }

    #[test]
    fn diagram_cells() {
        let d = Diagram::extended(&StrictPartition::new(vec![4, 3, 1]).unwrap(), 3).unwrap();
        assert_eq!(d.size(), 9);
        assert!(d.contains(Cell::new(3, 2)));
        assert!(d.contains(Cell::new(3, 3)));
        assert!(!d.contains(Cell::new(3, 4)));
        assert_eq!(d.predecessors(Cell::new(3, 3)), vec![Cell::new(3, 2), Cell::new(2, 3)]);
        assert_eq!(d.predecessors(Cell::new(3, 2)), vec![Cell::new(2, 2)]);
        assert_eq!(Partition::new(vec![4, 3, 1]).unwrap().conjugate().parts(), &[3, 2, 2, 1]);
    }
}
