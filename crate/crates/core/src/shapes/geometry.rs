use super::{Cell, Diagram, Partition, StrictPartition};
use crate::error::{Error, Result};

/// Cells that can be added to `mu` to give another partition, by row.
pub fn inner_corners(mu: &Partition) -> Vec<Cell> {
    (1..=mu.len() + 1)
        .filter(|&k| mu.part(k) < mu.part(k - 1))
        .map(|k| Cell::new(k as u32, mu.part(k) + 1))
        .collect()
}

/// Addable cells (k, k + λ_k) with λ_k <= λ_{k-1} - 2 for 1 <= k <= n. The
/// cell (n+1, n+1) is never one of them.
pub fn ne_corners(lam: &StrictPartition) -> Vec<Cell> {
    (1..=lam.len())
        .filter(|&k| k == 1 || lam.part(k) + 2 <= lam.part(k - 1))
        .map(|k| Cell::new(k as u32, k as u32 + lam.part(k)))
        .collect()
}

/// Every cell that can be added to a shifted diagram: the northeast corners
/// plus (n+1, n+1) when λ_n >= 2 (or λ is empty).
pub fn shifted_addable(lam: &StrictPartition) -> Vec<Cell> {
    let n = lam.len();
    let mut v = ne_corners(lam);
    if n == 0 || lam.part(n) >= 2 {
        v.push(Cell::new(n as u32 + 1, n as u32 + 1));
    }
    v
}

/// Cells (i, j) of λ with (i+1, j+1) outside λ.
pub fn border(lam: &StrictPartition) -> Vec<Cell> {
    let d = Diagram::shifted(lam);
    d.cells().into_iter().filter(|c| !d.contains(Cell::new(c.row + 1, c.col + 1))).collect()
}

/// The shape λ(x) left after removing the region determined by the border
/// cell x (see `border`).
pub fn contract(lam: &StrictPartition, x: Cell) -> Result<StrictPartition> {
    if !border(lam).contains(&x) {
        return Err(Error::Domain(format!("{x} is not on the border of ({lam})")));
    }
    let n = lam.len() as u32;
    let (i, j) = (x.row, x.col);
    let mut parts = Vec::new();
    if i == n && j == n {
        parts.extend(lam.parts()[..n as usize - 1].iter().map(|p| p - 1));
    } else {
        parts.extend(lam.parts()[..i as usize - 1].iter().map(|p| p - 2));
        for t in i + 1..=n {
            let p = lam.part(t as usize);
            parts.push(if p + t - 1 == j { p - 1 } else { p });
        }
    }
    StrictPartition::from_padded(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn cells(v: &[(u32, u32)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn inner_corner_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(inner_corners(&p(&[2, 2])), cells(&[(1, 3), (3, 1)]));
        assert_eq!(inner_corners(&p(&[])), cells(&[(1, 1)]));
        assert_eq!(inner_corners(&p(&[2, 1])), cells(&[(1, 3), (2, 2), (3, 1)]));
    }

    #[test]
    fn ne_corner_examples() {
        assert_eq!(ne_corners(&sp(&[8, 6, 5, 3])), cells(&[(1, 9), (2, 8), (4, 7)]));
        assert_eq!(ne_corners(&sp(&[2])), cells(&[(1, 3)]));
        assert_eq!(ne_corners(&sp(&[4, 2])), cells(&[(1, 5), (2, 4)]));
    }

    #[test]
    fn border_and_contraction() {
        let l = sp(&[4, 2]);
        assert_eq!(border(&l), cells(&[(1, 3), (1, 4), (2, 2), (2, 3)]));
        assert_eq!(border(&sp(&[1])), cells(&[(1, 1)]));
        assert_eq!(contract(&l, Cell::new(2, 2)).unwrap(), sp(&[3]));
        assert_eq!(contract(&l, Cell::new(1, 3)).unwrap(), sp(&[1]));
        assert_eq!(contract(&l, Cell::new(1, 4)).unwrap(), sp(&[2]));
        assert_eq!(contract(&l, Cell::new(2, 3)).unwrap(), sp(&[2]));
        assert!(contract(&l, Cell::new(1, 1)).is_err());
    }
}
