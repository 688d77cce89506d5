mod common;

use common::arb;
use delaygames::automata::{Dpa, Lasso};
use proptest::prelude::*;

proptest! {
    #[test]
    fn complement_accepts_exactly_the_rest(a in arb::dpa(4), l in arb::lasso()) {
        let c = a.complement();
        prop_assert_ne!(a.accepts_lasso(&l).unwrap(), c.accepts_lasso(&l).unwrap());
    }

    #[test]
    fn lasso_rotation_and_doubling(a in arb::dpa(4), l in arb::lasso()) {
        let want = a.accepts_lasso(&l).unwrap();
        let (stem, cycle) = (l.stem().to_vec(), l.cycle().to_vec());
        let mut rotated_stem = stem.clone();
        rotated_stem.push(cycle[0]);
        let mut rotated = cycle[1..].to_vec();
        rotated.push(cycle[0]);
        let r = Lasso::new(rotated_stem, rotated).unwrap();
        prop_assert_eq!(a.accepts_lasso(&r).unwrap(), want);
        let doubled = Lasso::new(stem, [cycle.clone(), cycle].concat()).unwrap();
        prop_assert_eq!(a.accepts_lasso(&doubled).unwrap(), want);
    }

    #[test]
    fn text_format_round_trips_and_step_is_total(a in arb::dpa(4)) {
        let back = Dpa::parse(&a.to_text()).unwrap();
        prop_assert_eq!(&back, &a);
        for q in 0..back.state_count() {
            for x in back.input().letters() {
                for y in back.output().letters() {
                    prop_assert!(back.step(q, x, y).is_ok());
                }
            }
        }
    }

    #[test]
    fn settled_states_keep_their_winner(a in arb::dpa(4), l in arb::lasso()) {
        // a run entering a settled state is won by the settled player
        let q = a.run(a.initial(), l.stem()).unwrap();
        if let Some(p) = a.settled_winner(q) {
            let won_by_o = a.accepts_lasso(&l).unwrap();
            prop_assert_eq!(won_by_o, p == delaygames::Player::O);
        }
    }
}
