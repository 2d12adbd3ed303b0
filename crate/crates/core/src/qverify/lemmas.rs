use num_bigint::BigInt;
use num_traits::Zero;

use super::Check;
use crate::error::Result;
use crate::exact::{big, fmt_rational, rat, Rational};
use crate::shapes::{ne_corners, Diagram, StrictPartition};
use crate::tableaux::{enumerate_sbt, enumerate_syt, with_cell};

/// The two sum lemmas behind the northeast-corner formula for shifted SBT
/// counts, with every count obtained by enumeration.
pub fn check_sum_lemmas(lam: &StrictPartition) -> Result<Vec<Check>> {
    let n = lam.len();
    let d = Diagram::shifted(lam);
    let by_col = enumerate_sbt(&d).by_column;
    let g = enumerate_syt(&d);
    let ne: Vec<(u32, BigInt)> = ne_corners(lam)
        .into_iter()
        .map(|x| {
            let grown = StrictPartition::new(with_cell(lam.parts(), x.row as usize)).expect("northeast corner");
            (lam.part(x.row as usize), enumerate_syt(&Diagram::shifted(&grown)))
        })
        .collect();
    // g^{λ ∪ {(i+1, i)}} for i = 0..n-1
    let ext: Vec<BigInt> =
        (0..n as u32).map(|i| Diagram::extended(lam, i + 1).map(|e| enumerate_syt(&e))).collect::<Result<_>>()?;
    let weighted_ext: BigInt = ext.iter().enumerate().map(|(i, v)| v * BigInt::from(n - i)).sum();
    let ne_sum: BigInt = ne.iter().map(|(_, v)| v).sum();

    let lhs1: BigInt = (1..=n as u32).map(|k| by_col.get(&k).cloned().unwrap_or_else(BigInt::zero)).sum();
    let rhs1 = rat(1, 2) * big(&ne_sum) + rat(1, 2) * big(&weighted_ext);

    let rhs2 = BigInt::from(n) * BigInt::from(lam.size() + 1) * &g
        - ne.iter().map(|(l, v)| v * BigInt::from(*l)).sum::<BigInt>();

    let params = [("shape".to_string(), lam.to_string())].into_iter().collect();
    let mk = |name: &str, l: &Rational, r: &Rational| Check {
        name: name.into(),
        params: std::collections::BTreeMap::clone(&params),
        lhs: fmt_rational(l),
        rhs: fmt_rational(r),
        equal: l == r,
    };
    Ok(vec![mk("SSYT_sum1", &big(&lhs1), &rhs1), mk("SSYT_sum2", &big(&weighted_ext), &big(&rhs2))])
}
