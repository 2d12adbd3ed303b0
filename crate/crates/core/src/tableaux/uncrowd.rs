use std::collections::BTreeMap;

use super::counts::with_cell;
use super::Tableau;
use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, DiagramKind, StrictPartition};

fn shifted_double(t: &Tableau) -> Result<(Cell, u32, u32)> {
    if t.diagram().kind() != DiagramKind::Shifted {
        return Err(Error::Domain("expected a tableau of shifted shape".into()));
    }
    let x = t.double_cell().ok_or_else(|| Error::Domain("tableau has no double cell".into()))?;
    let e = &t.entries()[&x];
    Ok((x, e[0], e[1]))
}

fn column(t: &Tableau, k: u32) -> impl Iterator<Item = (Cell, u32)> + '_ {
    t.entries().iter().filter(move |(c, _)| c.col == k).map(|(c, e)| (*c, e[0]))
}

/// Double cell {a < b} in column k >= n: move b onto the smallest entry c > b
/// of column k+1. With no such c, b goes to a new cell at the bottom of
/// column k+1 and the result is an SYT of the larger shape.
pub fn uncrowd_right(t: &Tableau) -> Result<Tableau> {
    let (x, a, b) = shifted_double(t)?;
    let n = t.diagram().parts().len() as u32;
    let k = x.col;
    if k < n {
        return Err(Error::Domain(format!("double cell {x} is left of column {n}")));
    }
    let mut entries = t.entries().clone();
    entries.insert(x, vec![a]);
    let target = column(t, k + 1).filter(|&(_, v)| v > b).min_by_key(|&(_, v)| v);
    if let Some((y, c)) = target {
        entries.insert(y, vec![b, c]);
        return Tableau::new(t.diagram().clone(), entries);
    }
    let h = column(t, k + 1).count() as u32;
    let parts = with_cell(t.diagram().parts(), h as usize + 1);
    let lam = StrictPartition::new(parts)?;
    let d = Diagram::shifted(&lam);
    let y = Cell::new(h + 1, k + 1);
    if !d.contains(y) {
        return Err(Error::Domain(format!("{y} does not extend the shape")));
    }
    entries.insert(y, vec![b]);
    Tableau::new(d, entries)
}

/// Double cell {a < b} in column k <= n, off the diagonal: move a onto the
/// largest entry c < a of column k-1.
pub fn uncrowd_left(t: &Tableau) -> Result<Tableau> {
    let (x, a, b) = shifted_double(t)?;
    let n = t.diagram().parts().len() as u32;
    let k = x.col;
    if x.row == x.col {
        return Err(Error::Domain(format!("double cell {x} is on the diagonal")));
    }
    if k > n {
        return Err(Error::Domain(format!("double cell {x} is right of column {n}")));
    }
    let (y, c) = column(t, k - 1)
        .filter(|&(_, v)| v < a)
        .max_by_key(|&(_, v)| v)
        .ok_or_else(|| Error::Domain(format!("no entry below {a} in column {}", k - 1)))?;
    let mut entries = t.entries().clone();
    entries.insert(x, vec![b]);
    let mut pair = vec![a, c];
    pair.sort_unstable();
    entries.insert(y, pair);
    Tableau::new(t.diagram().clone(), entries)
}

/// SYT of λ ∪ {(i+1, i)} with a at (i+1, i) and b at (i, i+1): drop the extra
/// cell and put a into (i, i) when a < b, else into (i+1, i+1).
pub fn uncrowd_diag(t: &Tableau) -> Result<Tableau> {
    let d = t.diagram();
    let extra = match (d.kind(), d.extra()) {
        (DiagramKind::ExtendedShifted, Some(c)) if c.col >= 1 => c,
        _ => return Err(Error::Domain("expected an extended shifted diagram with extra cell (i+1, i), i >= 1".into())),
    };
    if !t.is_syt() {
        return Err(Error::Domain("expected a standard filling".into()));
    }
    let i = extra.col;
    let a = t.entries()[&extra][0];
    let b = t.entries()[&Cell::new(i, i + 1)][0];
    let mut entries: BTreeMap<Cell, Vec<u32>> = t.entries().clone();
    entries.remove(&extra);
    let y = if a < b { Cell::new(i, i) } else { Cell::new(i + 1, i + 1) };
    let e = entries.get_mut(&y).expect("diagonal cell present");
    e.push(a);
    e.sort_unstable();
    let base = Diagram::shifted(&StrictPartition::new(d.parts().to_vec())?);
    Tableau::new(base, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(v: &[u32]) -> Diagram {
        Diagram::shifted(&StrictPartition::new(v.to_vec()).unwrap())
    }

    fn rows(d: Diagram, rows: &[&[&[u32]]]) -> Tableau {
        Tableau::from_cells(d, rows.iter().flat_map(|r| r.iter().map(|e| e.to_vec())).collect()).unwrap()
    }

    #[test]
    fn right_moves_into_next_column() {
        let t = rows(sd(&[7, 5, 4, 2]), &[
            &[&[1], &[2], &[3], &[6], &[7], &[8], &[12]],
            &[&[4], &[5], &[9], &[11], &[17]],
            &[&[10], &[13], &[14, 16], &[18]],
            &[&[15], &[19]],
        ]);
        let want = rows(sd(&[7, 5, 4, 2]), &[
            &[&[1], &[2], &[3], &[6], &[7], &[8], &[12]],
            &[&[4], &[5], &[9], &[11], &[16, 17]],
            &[&[10], &[13], &[14], &[18]],
            &[&[15], &[19]],
        ]);
        assert_eq!(uncrowd_right(&t).unwrap(), want);
    }

    #[test]
    fn right_grows_the_shape() {
        let t = rows(sd(&[7, 5, 4, 2]), &[
            &[&[1], &[2], &[3], &[6], &[7], &[8], &[19]],
            &[&[4], &[5], &[9], &[11], &[14]],
            &[&[10], &[12], &[13], &[15]],
            &[&[16], &[17, 18]],
        ]);
        let want = rows(sd(&[7, 5, 4, 3]), &[
            &[&[1], &[2], &[3], &[6], &[7], &[8], &[19]],
            &[&[4], &[5], &[9], &[11], &[14]],
            &[&[10], &[12], &[13], &[15]],
            &[&[16], &[17], &[18]],
        ]);
        assert_eq!(uncrowd_right(&t).unwrap(), want);
        let s = rows(sd(&[2]), &[&[&[1, 2], &[3]]]);
        assert_eq!(uncrowd_right(&s).unwrap(), rows(sd(&[2]), &[&[&[1], &[2, 3]]]));
    }

    #[test]
    fn left_moves_into_previous_column() {
        let t = rows(sd(&[7, 5, 4, 2]), &[
            &[&[1], &[2], &[3], &[5], &[8], &[10], &[11]],
            &[&[4], &[6], &[9, 12], &[15], &[16]],
            &[&[7], &[13], &[17], &[19]],
            &[&[14], &[18]],
        ]);
        let want = rows(sd(&[7, 5, 4, 2]), &[
            &[&[1], &[2], &[3], &[5], &[8], &[10], &[11]],
            &[&[4], &[6], &[12], &[15], &[16]],
            &[&[7, 9], &[13], &[17], &[19]],
            &[&[14], &[18]],
        ]);
        assert_eq!(uncrowd_left(&t).unwrap(), want);
        let d = rows(sd(&[3, 1]), &[&[&[1], &[2], &[3]], &[&[4, 5]]]);
        assert!(uncrowd_left(&d).is_err());
    }

    #[test]
    fn diag_examples() {
        let lam = StrictPartition::new(vec![4, 3, 1]).unwrap();
        let ext = Diagram::extended(&lam, 3).unwrap();
        // cells of the extended diagram: row 1, then (3,2) before (3,3).
        let left = rows(ext.clone(), &[&[&[1], &[2], &[4], &[7]], &[&[3], &[6], &[9]], &[&[5], &[8]]]);
        let want = rows(sd(&[4, 3, 1]), &[&[&[1], &[2], &[4], &[7]], &[&[3, 5], &[6], &[9]], &[&[8]]]);
        assert_eq!(uncrowd_diag(&left).unwrap(), want);
        let right = rows(ext, &[&[&[1], &[2], &[4], &[7]], &[&[3], &[5], &[9]], &[&[6], &[8]]]);
        let want = rows(sd(&[4, 3, 1]), &[&[&[1], &[2], &[4], &[7]], &[&[3], &[5], &[9]], &[&[6, 8]]]);
        assert_eq!(uncrowd_diag(&right).unwrap(), want);
    }
}
