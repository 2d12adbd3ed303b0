//! The a;q-weighted analogue of E(X) on [∅, λ] for straight shapes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{q_binomial, PolyAQ, PolyQ, RatFunAQ, RatFunQ};
use crate::interval::for_each_subshape;
use crate::shapes::{balanced_slope, Kind, Partition};

/// Width w = λ₁, length ℓ and d = gcd(w, ℓ) of a nonempty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AqParams {
    pub w: i64,
    pub l: i64,
    pub d: i64,
}

impl AqParams {
    pub fn new(lam: &Partition) -> Result<Self> {
        if lam.is_empty() {
            return Err(Error::Domain("a;q-weights need a nonempty shape".into()));
        }
        let (w, l) = (lam.width() as i64, lam.len() as i64);
        Ok(AqParams { w, l, d: w.gcd(&l) })
    }

    /// Shift (w+ℓ)/d of the cover weights.
    pub fn cover_shift(&self) -> i64 {
        (self.w + self.l) / self.d
    }

    /// Shift wℓ/d of the generating-function weights.
    pub fn gen_shift(&self) -> i64 {
        self.w * self.l / self.d
    }

    /// Argument (w(s-1) + ℓ(|x|-1))/d of the weight of deleting a cell in row
    /// s of a shape of size |x|.
    pub fn cover_arg(&self, s: u32, size: u32) -> i64 {
        let t = self.w * (s as i64 - 1) + self.l * (size as i64 - 1);
        assert_eq!(t % self.d, 0, "weight argument is not an integer");
        t / self.d
    }
}

/// W_{a q^shift; q}(n) = (1 - a q^{shift+1+2n}) / (1 - a q^{shift+1}) · q^{-n}.
pub fn aq_weight(n: i64, shift: i64) -> RatFunAQ {
    let mut h = BTreeMap::new();
    h.insert(n, BigInt::one());
    weight_sum(shift, &h)
}

/// Σ_n c_n W_{a q^shift; q}(n) over one common denominator.
pub fn weight_sum(shift: i64, counts: &BTreeMap<i64, BigInt>) -> RatFunAQ {
    let mut num = PolyAQ::zero();
    for (&n, c) in counts {
        num = &num + &PolyAQ::monomial(c.clone(), 0, -n);
        num = &num - &PolyAQ::monomial(c.clone(), 1, shift + 1 + n);
    }
    RatFunAQ::new(num, PolyAQ::one_minus_a_q_pow(shift + 1)).expect("nonzero denominator")
}

/// [n]_{a q^shift; q^base}
///   = (1 - q^{base n})(1 - a q^{shift + base n}) / ((1 - q^base)(1 - a q^{shift+base})) · q^{base(1-n)}.
pub fn aq_number_base(n: i64, shift: i64, base: i64) -> RatFunAQ {
    let b = base;
    let num = &PolyAQ::from_q(PolyQ::one_minus_q_pow(b * n)) * &PolyAQ::one_minus_a_q_pow(shift + b * n);
    let den = &PolyAQ::from_q(PolyQ::one_minus_q_pow(b)) * &PolyAQ::one_minus_a_q_pow(shift + b);
    let f = RatFunAQ::new(num, den).expect("nonzero denominator");
    &f * &RatFunAQ::q_pow(b * (1 - n))
}

/// [n]_{a q^shift; q}.
pub fn aq_number(n: i64, shift: i64) -> RatFunAQ {
    aq_number_base(n, shift, 1)
}

fn removable_rows(x: &[u32]) -> impl Iterator<Item = u32> + '_ {
    (0..x.len()).filter(move |&i| x[i] > x.get(i + 1).copied().unwrap_or(0)).map(|i| i as u32 + 1)
}

/// Weight of the cover y ⋖ x obtained by deleting the last cell of row s.
pub fn cover_weight(x: &Partition, s: u32, params: &AqParams) -> Result<RatFunAQ> {
    if !removable_rows(x.parts()).any(|r| r == s) {
        return Err(Error::Domain(format!("no removable cell in row {s} of ({x})")));
    }
    Ok(aq_weight(params.cover_arg(s, x.size()), params.cover_shift()))
}

/// Sum of the weights of all covers of x.
pub fn aq_down_degree(x: &Partition, params: &AqParams) -> RatFunAQ {
    let mut h = BTreeMap::new();
    for s in removable_rows(x.parts()) {
        *h.entry(params.cover_arg(s, x.size())).or_insert_with(BigInt::zero) += 1;
    }
    if h.is_empty() {
        return RatFunAQ::zero();
    }
    weight_sum(params.cover_shift(), &h)
}

/// Histograms of the weight arguments over [∅, λ]: cover weights (for the
/// numerator of the expectation) and element weights (for R(λ|a;q)).
pub fn weight_histograms(lam: &Partition) -> Result<(AqParams, BTreeMap<i64, BigInt>, BTreeMap<i64, BigInt>)> {
    let p = AqParams::new(lam)?;
    let mut covers: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut elems: BTreeMap<i64, BigInt> = BTreeMap::new();
    for_each_subshape(lam.parts(), Kind::Straight, |x| {
        let size: u32 = x.iter().sum();
        assert_eq!((p.l * size as i64) % p.d, 0);
        *elems.entry(p.l * size as i64 / p.d).or_default() += 1;
        for s in removable_rows(x) {
            *covers.entry(p.cover_arg(s, size)).or_default() += 1;
        }
    });
    Ok((p, covers, elems))
}

/// Σ_x aqddeg(x) over [∅, λ].
pub fn aq_down_sum(lam: &Partition) -> Result<RatFunAQ> {
    let (p, covers, _) = weight_histograms(lam)?;
    Ok(weight_sum(p.cover_shift(), &covers))
}

/// R(λ | a; q) = Σ_{x ⊆ λ} W_{a q^{wℓ/d}; q}(ℓ|x|/d).
pub fn aq_generating(lam: &Partition) -> Result<RatFunAQ> {
    let (p, _, elems) = weight_histograms(lam)?;
    Ok(weight_sum(p.gen_shift(), &elems))
}

/// E_{a;q}(X) = Σ_x aqddeg(x) / R(λ | a; q), in display (reduced) form.
pub fn aq_expect(lam: &Partition) -> Result<RatFunAQ> {
    let (p, covers, elems) = weight_histograms(lam)?;
    let num = weight_sum(p.cover_shift(), &covers);
    let den = weight_sum(p.gen_shift(), &elems);
    Ok(num.checked_div(&den).expect("R(λ|a;q) is nonzero").reduced())
}

/// The same expectation with each weight W(n) replaced by q^n (the a → ∞
/// limit of the weights), as a rational function of q.
pub fn q_expect(lam: &Partition) -> Result<RatFunQ> {
    let (_, covers, elems) = weight_histograms(lam)?;
    let series = |h: &BTreeMap<i64, BigInt>| {
        h.iter().fold(PolyQ::zero(), |acc, (&n, c)| &acc + &PolyQ::monomial(c.clone(), n))
    };
    RatFunQ::new(series(&covers), series(&elems))
}

/// [wℓ/d]_{a q^{(w+ℓ)/d}; q} / [(w+ℓ)/d]_{a q^{wℓ/d}; q}.
pub fn conjecture_product(w: i64, l: i64) -> RatFunAQ {
    let d = w.gcd(&l);
    let (m, s) = (w * l / d, (w + l) / d);
    aq_number(m, s).checked_div(&aq_number(s, m)).expect("nonzero").reduced()
}

/// [wℓ/d]_{a q; q^{(w+ℓ)/d}} / [(w+ℓ)/d]_{a q; q^{wℓ/d}}.
pub fn conjecture_product_rebased(w: i64, l: i64) -> RatFunAQ {
    let d = w.gcd(&l);
    let (m, s) = (w * l / d, (w + l) / d);
    aq_number_base(m, 1, s).checked_div(&aq_number_base(s, 1, m)).expect("nonzero").reduced()
}

/// R((w^ℓ) | a; q) = [w+ℓ choose ℓ]_{q^{ℓ/d}} (1 - a q^{1+wℓ(ℓ+1)/d}) / (1 - a q^{1+wℓ/d}) · q^{-wℓ²/d}.
pub fn rectangle_generating(w: i64, l: i64) -> RatFunAQ {
    let d = w.gcd(&l);
    let gb = q_binomial((w + l) as u32, l as u32).dilate(l / d);
    let num = &PolyAQ::from_q(gb) * &PolyAQ::one_minus_a_q_pow(1 + w * l * (l + 1) / d);
    let f = RatFunAQ::new(num, PolyAQ::one_minus_a_q_pow(1 + w * l / d)).expect("nonzero");
    &f * &RatFunAQ::q_pow(-w * l * l / d)
}

/// Result of comparing E_{a;q}(X) with the conjectured product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AqVerdict {
    pub balanced: bool,
    pub expect: RatFunAQ,
    pub product: RatFunAQ,
    pub equal: bool,
    /// Whether E_{a;q}(X) agrees with the value on the conjugate shape.
    pub conjugate_equal: bool,
}

/// Compares E_{a;q}(X) with the product formula. A mismatch is reported, not
/// raised.
pub fn verify_conjecture(lam: &Partition) -> Result<AqVerdict> {
    let p = AqParams::new(lam)?;
    let expect = aq_expect(lam)?;
    let product = conjecture_product(p.w, p.l);
    let conj = aq_expect(&lam.conjugate())?;
    Ok(AqVerdict {
        balanced: balanced_slope(lam.parts()).is_some(),
        equal: expect == product,
        conjugate_equal: expect == conj,
        expect,
        product,
    })
}
