use rayon::prelude::*;

use super::is_cde;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::shapes::{classify, shapes_of_size, Kind};

pub const CSV_HEADER: [&str; 9] =
    ["size", "shape", "ex_num", "ex_den", "ey_num", "ey_den", "cde", "classification", "conjecture_ok"];

/// One scanned shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub size: u32,
    pub parts: Vec<u32>,
    pub e_x: Rational,
    pub e_y: Rational,
    pub cde: bool,
    pub classification: String,
    /// The conjectured equivalence (CDE iff balanced, or balanced or
    /// trapezoidal for shifted shapes) holds for this shape.
    pub conjecture_ok: bool,
}

impl ScanRecord {
    pub fn shape(&self) -> String {
        self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    /// Fields in `CSV_HEADER` order.
    pub fn csv_fields(&self) -> [String; 9] {
        [
            self.size.to_string(),
            self.shape(),
            self.e_x.numer().to_string(),
            self.e_x.denom().to_string(),
            self.e_y.numer().to_string(),
            self.e_y.denom().to_string(),
            self.cde.to_string(),
            self.classification.clone(),
            self.conjecture_ok.to_string(),
        ]
    }
}

fn record(parts: Vec<u32>, kind: Kind) -> Result<ScanRecord> {
    let e = is_cde(&parts, kind)?;
    let c = classify(&parts, kind)?;
    Ok(ScanRecord {
        size: parts.iter().sum(),
        conjecture_ok: e.cde == c.predicts_cde(),
        classification: c.label(),
        cde: e.cde,
        e_x: e.e_x,
        e_y: e.e_y,
        parts,
    })
}

/// Scans every shape of size 1..=max_size in (size, lex) order, calling `emit`
/// per record in that order. `jobs = 0` uses rayon's default pool size; the
/// output never depends on `jobs`.
pub fn scan_with(max_size: u32, kind: Kind, jobs: usize, mut emit: impl FnMut(&ScanRecord)) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("cannot start worker pool: {e}")))?;
    for size in 1..=max_size {
        let shapes = shapes_of_size(size, kind);
        let recs: Vec<ScanRecord> =
            pool.install(|| shapes.into_par_iter().map(|p| record(p, kind)).collect::<Result<_>>())?;
        recs.iter().for_each(&mut emit);
    }
    Ok(())
}

pub fn scan(max_size: u32, kind: Kind, jobs: usize) -> Result<Vec<ScanRecord>> {
    let mut out = Vec::new();
    scan_with(max_size, kind, jobs, |r| out.push(r.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_scans() {
        let r = scan(1, Kind::Shifted, 1).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].cde && r[0].conjecture_ok);
        assert_eq!(r[0].classification, "shifted-balanced+trapezoidal");
        let a = scan(8, Kind::Shifted, 1).unwrap();
        let b = scan(8, Kind::Shifted, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.conjecture_ok));
        assert!(scan(8, Kind::Straight, 2).unwrap().iter().all(|r| r.conjecture_ok));
    }
}
