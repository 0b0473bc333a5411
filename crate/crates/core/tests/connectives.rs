mod common;

use common::{residuum, t_norm};
use fllp::connectives::{Connective, Implication};
use fllp::domain::Level;
use proptest::prelude::*;

const N: u32 = 44;

fn c(imp: Implication, a: u32, b: u32) -> u32 {
    imp.t_norm(Level(a), Level(b), Level(N)).0
}

fn i(imp: Implication, h: u32, b: u32) -> u32 {
    imp.residuum(Level(h), Level(b), Level(N)).0
}

#[test]
fn against_the_table_definitions() {
    for imp in Implication::ALL {
        for a in 0..=N {
            for b in 0..=N {
                assert_eq!(c(imp, a, b), t_norm(imp, a, b, N));
                assert_eq!(i(imp, a, b), residuum(imp, a, b, N));
            }
        }
    }
}

#[test]
fn adjointness_on_all_triples() {
    for imp in Implication::ALL {
        for b in 0..=N {
            for r in 0..=N {
                for h in 0..=N {
                    assert_eq!(c(imp, b, r) <= h, r <= i(imp, h, b), "{imp} b={b} r={r} h={h}");
                }
                assert!(i(imp, c(imp, b, r), b) >= r);
            }
            for h in 0..=N {
                assert!(c(imp, b, i(imp, h, b)) <= h);
            }
        }
    }
}

#[test]
fn luka_examples() {
    assert_eq!(c(Implication::Lukasiewicz, 36, 41), 33);
    assert_eq!(c(Implication::Lukasiewicz, 10, 20), 0);
    assert_eq!(i(Implication::Lukasiewicz, 30, 35), 39);
    assert_eq!(i(Implication::Godel, 30, 35), 30);
}

proptest! {
    #[test]
    fn t_norms_are_commutative_associative_monotone(a in 0..=N, b in 0..=N, d in 0..=N, imp in prop_oneof![Just(Implication::Godel), Just(Implication::Lukasiewicz)]) {
        prop_assert_eq!(c(imp, a, b), c(imp, b, a));
        prop_assert_eq!(c(imp, c(imp, a, b), d), c(imp, a, c(imp, b, d)));
        prop_assert_eq!(c(imp, a, N), a);
        if a <= b {
            prop_assert!(c(imp, a, d) <= c(imp, b, d));
            prop_assert!(i(imp, a, d) <= i(imp, b, d));
            prop_assert!(i(imp, d, a) >= i(imp, d, b));
        }
    }

    #[test]
    fn folds_are_left_to_right(vals in proptest::collection::vec(0..=N, 1..6)) {
        let lv: Vec<Level> = vals.iter().map(|&v| Level(v)).collect();
        prop_assert_eq!(Connective::ConjG.fold(lv.clone(), Level(N)).0, *vals.iter().min().unwrap());
        prop_assert_eq!(Connective::Disj.fold(lv.clone(), Level(N)).0, *vals.iter().max().unwrap());
        let luka = vals[1..].iter().fold(vals[0], |a, &b| (a + b).saturating_sub(N));
        prop_assert_eq!(Connective::ConjL.fold(lv, Level(N)).0, luka);
    }
}
