use cde_core::aq::{aq_expect, q_expect, rectangle_generating, aq_generating};
use cde_core::cde::{closed_form, expect_x, expect_y, YMethod};
use cde_core::exact::{rat, PolyQ, RatFunAQ, RatFunQ, Rational};
use cde_core::interval::{
    antichain_average, chain_weights, down_degree, enumerate_interval, interval_sums, r_counts, r_plus_via_border,
};
use cde_core::qverify::{check_identity, check_integral_formulas, check_sum_lemmas, parse_params};
use cde_core::shapes::{Diagram, Kind, Partition, StrictPartition};
use cde_core::tableaux::{
    check_uncrowding, count_sbt_shifted, count_sbt_straight, count_sbt_straight_product, count_syt_straight,
    count_syt_thrall, enumerate_sbt, enumerate_syt, SbtMethod,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..=5).prop_filter_map("size bound", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<u32>() <= max_size).then(|| Partition::new(v).unwrap())
    })
}

fn strict(max_size: u32) -> impl Strategy<Value = StrictPartition> {
    prop::collection::btree_set(1u32..=8, 1..=4).prop_filter_map("size bound", move |s| {
        let v: Vec<u32> = s.into_iter().rev().collect();
        (v.iter().sum::<u32>() <= max_size).then(|| StrictPartition::new(v).unwrap())
    })
}

fn small_poly() -> impl Strategy<Value = PolyQ> {
    (prop::collection::vec(-4i64..=4, 1..=4), -2i64..=2).prop_map(|(c, low)| PolyQ::from_i64s(low, &c))
}

fn ratfun() -> impl Strategy<Value = RatFunQ> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFunQ::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfun_field_laws(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(q) = a.checked_div(&b) {
            prop_assert_eq!(&q * &b, a.clone());
        }
        let x = rat(2, 7);
        if let (Some(va), Some(vb), Some(vs)) = (a.eval(&x), b.eval(&x), (&a + &b).eval(&x)) {
            prop_assert_eq!(va + vb, vs);
        }
    }

    #[test]
    fn ratfun_aq_roundtrip(n in small_poly(), d in small_poly(), k in 1i64..5) {
        prop_assume!(!d.is_zero());
        let f = RatFunAQ::from_ratfun_q(n, d).unwrap();
        let g = &f * &RatFunAQ::new(
            cde_core::exact::PolyAQ::one_minus_a_q_pow(k),
            cde_core::exact::PolyAQ::one_minus_a_q_pow(k),
        ).unwrap();
        prop_assert_eq!(g.reduced(), f.reduced());
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(20)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn straight_counts_match_enumeration(p in partition(10)) {
        let d = Diagram::straight(&p);
        prop_assert_eq!(enumerate_syt(&d), count_syt_straight(&p));
        let sbt = enumerate_sbt(&d).total;
        prop_assert_eq!(&sbt, &count_sbt_straight(&p));
        prop_assert_eq!(&sbt, &count_sbt_straight_product(&p));
        prop_assert_eq!(&count_syt_straight(&p), &count_syt_straight(&p.conjugate()));
    }

    #[test]
    fn shifted_counts_match_enumeration(p in strict(12)) {
        let d = Diagram::shifted(&p);
        prop_assert_eq!(enumerate_syt(&d), count_syt_thrall(&p));
        let sbt = enumerate_sbt(&d).total;
        prop_assert_eq!(&sbt, &count_sbt_shifted(&p, SbtMethod::Product).unwrap());
        prop_assert_eq!(&sbt, &count_sbt_shifted(&p, SbtMethod::NeSum).unwrap());
    }

    #[test]
    fn chain_weight_identities(p in partition(9), kind_shifted in any::<bool>()) {
        let (parts, kind) = if kind_shifted {
            let mut v = p.parts().to_vec();
            v.dedup();
            (v, Kind::Shifted)
        } else {
            (p.parts().to_vec(), Kind::Straight)
        };
        let idx = enumerate_interval(&parts, kind).unwrap();
        let w = chain_weights(&idx);
        let chains = w.c_down[idx.top()].clone();
        let size: u32 = parts.iter().sum();
        let s1: BigInt = w.c_down.iter().zip(&w.c_up).map(|(a, b)| a * b).sum();
        prop_assert_eq!(s1, chains.clone() * BigInt::from(size + 1));
        let s2: BigInt = (0..idx.len())
            .map(|i| &w.c_down[i] * &w.c_up[i] * BigInt::from(idx.down_degree(i)))
            .sum();
        let d = Diagram::of(&parts, kind).unwrap();
        prop_assert_eq!(s2, enumerate_sbt(&d).total);
        prop_assert_eq!(chains, enumerate_syt(&d));
        let (r, rp) = interval_sums(&parts, kind).unwrap();
        prop_assert_eq!(r, BigInt::from(idx.len()));
        let direct: u32 = idx.elements().iter().map(|m| down_degree(m, kind)).sum();
        prop_assert_eq!(rp, BigInt::from(direct));
    }

    #[test]
    fn border_decomposition_and_antichains(p in strict(12)) {
        let (_, rp) = r_counts(&p);
        prop_assert_eq!(r_plus_via_border(&p).unwrap(), rp);
        prop_assert_eq!(
            antichain_average(p.parts(), Kind::Shifted).unwrap(),
            expect_x(p.parts(), Kind::Shifted).unwrap()
        );
    }

    #[test]
    fn expectation_methods_agree(p in strict(11)) {
        let f = expect_y(p.parts(), Kind::Shifted, YMethod::Formula).unwrap();
        prop_assert_eq!(&f, &expect_y(p.parts(), Kind::Shifted, YMethod::Chains).unwrap());
        prop_assert_eq!(&f, &expect_y(p.parts(), Kind::Shifted, YMethod::Sbt).unwrap());
        if let Some((v, _)) = closed_form(p.parts(), Kind::Shifted).unwrap() {
            prop_assert_eq!(&v, &f);
            prop_assert_eq!(&v, &expect_x(p.parts(), Kind::Shifted).unwrap());
        }
    }

    #[test]
    fn straight_closed_form_is_cde(p in partition(12)) {
        prop_assume!(!p.is_empty());
        if let Some((v, _)) = closed_form(p.parts(), Kind::Straight).unwrap() {
            prop_assert_eq!(&v, &expect_x(p.parts(), Kind::Straight).unwrap());
            prop_assert_eq!(&v, &expect_y(p.parts(), Kind::Straight, YMethod::Formula).unwrap());
        }
    }

    #[test]
    fn aq_specializations(p in partition(9)) {
        prop_assume!(!p.is_empty());
        let e = aq_expect(&p).unwrap();
        let x = expect_x(p.parts(), Kind::Straight).unwrap();
        prop_assert_eq!(e.at_q_one().unwrap(), RatFunAQ::constant(&x));
        let (deg, ln, ld) = e.a_leading();
        prop_assert_eq!(deg, 0);
        prop_assert_eq!(RatFunQ::new(ln, ld).unwrap(), q_expect(&p).unwrap());
    }

    #[test]
    fn rectangles_have_product_generating_function(w in 1i64..=4, l in 1i64..=4) {
        let p = Partition::new(vec![w as u32; l as usize]).unwrap();
        prop_assert_eq!(aq_generating(&p).unwrap(), rectangle_generating(w, l));
    }

    #[test]
    fn uncrowding_maps_are_bijections(p in strict(9)) {
        for c in check_uncrowding(&p).unwrap() {
            prop_assert!(c.ok(), "{:?}", c);
        }
        for c in check_sum_lemmas(&p).unwrap() {
            prop_assert!(c.equal, "{:?}", c);
        }
    }

    #[test]
    fn integral_formulas(p in strict(9)) {
        for c in check_integral_formulas(&p, None).unwrap() {
            prop_assert!(c.equal, "{:?}", c);
        }
    }

    #[test]
    fn delta_sum_identity(a in 1i64..=3, e in 1i64..=4, extra in 0i64..=6) {
        let d = a * (e - 1) + 2 + extra;
        let p = parse_params(&format!("a={a},d={d},e={e}")).unwrap();
        prop_assert!(check_identity("identitytoshow1", &p).unwrap().equal);
        prop_assert!(check_identity("identitytoshow2", &p).unwrap().equal);
    }

    #[test]
    fn interpolation_identity(b in prop::collection::btree_set(-30i64..30, 1..=5), c in prop::collection::vec(-30i64..30, 5), den in 1i64..7, u in -40i64..40) {
        let b: Vec<i64> = b.into_iter().collect();
        let mut s: Vec<String> = b.iter().enumerate().map(|(i, x)| format!("b{i}={x}/{den}")).collect();
        s.extend((0..b.len() - 1).map(|j| format!("c{j}={}/{den}", c[j])));
        s.push(format!("u={u}/{}", den + 1));
        let p = parse_params(&s.join(",")).unwrap();
        if let Ok(ch) = check_identity("li", &p) {
            prop_assert!(ch.equal);
        }
    }

    #[test]
    fn bailey_dougall_terminating(n in 0i64..=5, an in -9i64..9, bn in -9i64..9, cn in -9i64..9) {
        let (a, b, c) = (Rational::new(an.into(), 7.into()), Rational::new(bn.into(), 5.into()), Rational::new(cn.into(), 3.into()));
        let fmt = cde_core::exact::fmt_rational;
        let p = parse_params(&format!("a={},b={},c={},n={n}", fmt(&a), fmt(&b), fmt(&c))).unwrap();
        if let Ok(ch) = check_identity("dougall", &p) {
            prop_assert!(ch.equal);
        }
        if let Ok(ch) = check_identity("bailey", &p) {
            prop_assert!(ch.equal);
        }
    }
}
