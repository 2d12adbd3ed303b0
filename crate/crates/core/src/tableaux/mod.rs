//! Standard and barely set-valued tableaux: counting formulas, enumeration,
//! double-cell refinements, and the uncrowding maps.

mod bijections;
mod counts;
mod enumerate;
mod uncrowd;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram};

pub use bijections::{check_uncrowding, BijectionCheck, Uncrowd};
pub use counts::{
    count_sbt_shifted, count_sbt_straight, count_sbt_straight_product, count_syt_formula, count_syt_straight,
    count_syt_thrall, with_cell, SbtMethod,
};
pub use enumerate::{
    enumerate_sbt, enumerate_syt, for_each_sbt, for_each_syt, sbt_refined_shifted, CellPoset, SbtRefinement,
};
pub use uncrowd::{uncrowd_diag, uncrowd_left, uncrowd_right};

/// A filling of a diagram by sets of positive integers. Only standard fillings
/// (SYT) and standard fillings with one doubleton (SBT) can be built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    diagram: Diagram,
    entries: BTreeMap<Cell, Vec<u32>>,
}

impl Tableau {
    /// Checks that every cell of `diagram` gets a sorted nonempty set of at
    /// most two entries, at most one doubleton, entries exactly 1..N, and
    /// strict increase along rows and columns.
    pub fn new(diagram: Diagram, entries: BTreeMap<Cell, Vec<u32>>) -> Result<Self> {
        let cells = diagram.cells();
        if entries.len() != cells.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::Domain("entries do not match the diagram's cells".into()));
        }
        let mut seen = Vec::new();
        let mut doubles = 0;
        for (c, e) in &entries {
            if e.is_empty() || e.len() > 2 || e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Domain(format!("bad entry set {e:?} at {c}")));
            }
            doubles += (e.len() == 2) as usize;
            seen.extend_from_slice(e);
        }
        if doubles > 1 {
            return Err(Error::Domain("more than one double cell".into()));
        }
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(i, &v)| v != i as u32 + 1) {
            return Err(Error::Domain("entries are not exactly 1..N".into()));
        }
        for c in &cells {
            let hi = *entries[c].last().unwrap();
            for s in diagram.successors(*c) {
                if entries[&s][0] <= hi {
                    return Err(Error::Domain(format!("not increasing from {c} to {s}")));
                }
            }
        }
        Ok(Tableau { diagram, entries })
    }

    /// Entries listed in the order of `diagram.cells()`.
    pub fn from_cells(diagram: Diagram, sets: Vec<Vec<u32>>) -> Result<Self> {
        let cells = diagram.cells();
        if cells.len() != sets.len() {
            return Err(Error::Domain(format!("{} cells but {} entry sets", cells.len(), sets.len())));
        }
        Tableau::new(diagram, cells.into_iter().zip(sets).collect())
    }

    pub(crate) fn from_parts_unchecked(diagram: Diagram, entries: BTreeMap<Cell, Vec<u32>>) -> Self {
        debug_assert!(Tableau::new(diagram.clone(), entries.clone()).is_ok());
        Tableau { diagram, entries }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn entries(&self) -> &BTreeMap<Cell, Vec<u32>> {
        &self.entries
    }

    pub fn get(&self, c: Cell) -> Option<&[u32]> {
        self.entries.get(&c).map(|v| v.as_slice())
    }

    pub fn double_cell(&self) -> Option<Cell> {
        self.entries.iter().find(|(_, e)| e.len() == 2).map(|(c, _)| *c)
    }

    pub fn is_syt(&self) -> bool {
        self.double_cell().is_none()
    }

    pub fn is_sbt(&self) -> bool {
        self.double_cell().is_some()
    }

    /// Entry sets in `diagram.cells()` order.
    pub fn sets(&self) -> Vec<Vec<u32>> {
        self.diagram.cells().iter().map(|c| self.entries[c].clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> =
            self.entries.iter().map(|(c, e)| json!({"r": c.row, "c": c.col, "e": e})).collect();
        json!({"shape": self.diagram.parts(), "kind": self.diagram.kind(), "cells": cells})
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, StrictPartition};

    #[test]
    fn validation() {
        let d = Diagram::straight(&Partition::new(vec![2, 1]).unwrap());
        assert!(Tableau::from_cells(d.clone(), vec![vec![1, 2], vec![3], vec![4]]).is_ok());
        assert!(Tableau::from_cells(d.clone(), vec![vec![1], vec![2], vec![2]]).is_err());
        assert!(Tableau::from_cells(d.clone(), vec![vec![2], vec![1], vec![3]]).is_err());
        assert!(Tableau::from_cells(d, vec![vec![1, 2], vec![3, 4], vec![5]]).is_err());
    }

    #[test]
    fn json_shape() {
        let d = Diagram::shifted(&StrictPartition::new(vec![2]).unwrap());
        let t = Tableau::from_cells(d, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(
            t.to_json().to_string(),
            r#"{"cells":[{"c":1,"e":[1,2],"r":1},{"c":2,"e":[3],"r":1}],"kind":"shifted","shape":[2]}"#
        );
    }
}
