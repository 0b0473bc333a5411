mod common;

use std::cmp::Ordering;
use std::sync::Arc;

use common::{level, inverse_rows_expanded, DOMAIN_LISTING};
use fllp::algebra::HedgeAlgebra;
use fllp::config::example_spec;
use fllp::default_space;
use fllp::domain::{Level, TruthDomain};
use fllp::inverse::InverseTable;
use proptest::prelude::*;

#[test]
fn domain_matches_listing() {
    let s = default_space();
    assert_eq!(s.domain().len(), 45);
    for (i, p) in DOMAIN_LISTING.iter().enumerate() {
        assert_eq!(level(&s, p), Level(i as u32), "{p}");
    }
}

#[test]
fn inverse_rows_reproduced() {
    let s = default_space();
    let rows = inverse_rows_expanded();
    assert_eq!(rows.len(), 29 + 4 * 4);
    let hedges = ["V", "M", "P", "L"].map(|h| s.algebra().find_hedge(h).unwrap());
    let mut mismatches = Vec::new();
    for (x, cols) in &rows {
        for (h, want) in hedges.iter().zip(cols) {
            let got = s.inverse().apply(Some(*h), level(&s, x));
            if got != level(&s, want) {
                mismatches.push(format!("{}⁻({x}) = {} but table has {want}", s.algebra().hedge(*h).name, s.domain().literal(got)));
            }
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

fn space(limit: usize) -> (Arc<TruthDomain>, InverseTable) {
    let alg = Arc::new(HedgeAlgebra::new(example_spec(limit)).unwrap());
    let d = Arc::new(TruthDomain::enumerate(alg));
    let t = InverseTable::build(d.clone());
    (d, t)
}

#[test]
fn order_is_the_comparison_order() {
    for l in 0..=3 {
        let (d, _) = space(l);
        let alg = d.algebra();
        for (i, x) in d.values().iter().enumerate() {
            for (j, y) in d.values().iter().enumerate() {
                assert_eq!(alg.compare(x, y).unwrap(), i.cmp(&j), "l={l} {i} {j}");
            }
        }
    }
}

#[test]
fn negation_reverses_the_order() {
    let (d, _) = space(2);
    let n = d.top().0;
    for l in d.levels() {
        assert_eq!(d.negate(l), Level(n - l.0));
    }
}

#[test]
fn inverse_conditions_hold_for_several_limits() {
    for l in 0..=3 {
        let (_, t) = space(l);
        t.validate().unwrap();
    }
}

proptest! {
    // A hedge moves a term up exactly when the resulting term has a positive sign.
    #[test]
    fn sign_gives_direction(hs in proptest::collection::vec(0usize..4, 0..4), h in 0usize..4, pos in any::<bool>()) {
        let (d, _) = space(4);
        let alg = d.algebra();
        let ids: Vec<_> = alg.hedge_ids().collect();
        let primary = if pos { "true" } else { "false" };
        let words: Vec<String> = hs.iter().map(|&i| alg.hedge(ids[i]).name.clone()).chain([primary.to_string()]).collect();
        let x = alg.parse_words(words.iter().map(String::as_str)).unwrap();
        let hx = alg.apply_hedge(ids[h], &x).unwrap();
        let sign = alg.sign(&hx).unwrap().as_i8();
        let expected = if sign > 0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(alg.compare(&hx, &x).unwrap(), expected);
    }
}
