mod support;

use std::time::Instant;

use localstd_core::MonomialOrder;
use localstd_engines::Options;
use localstd_invariants::{milnor_global, milnor_local, tyurina_global, tyurina_local};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::macaulay::{default_bound, quotient_dimension};
use support::{jacobian, random_singular, tyurina_gens};

/// (arity, maximal degree) of each accepted instance.
const PLAN: [(usize, u32); 25] = [
    (2, 3), (2, 4), (2, 5), (2, 5), (2, 4), (2, 3), (2, 5), (2, 4), (2, 5), (2, 3),
    (2, 4), (2, 5), (2, 5), (2, 4), (2, 5),
    (3, 3), (3, 3), (3, 3), (3, 3), (3, 3), (3, 3), (3, 4), (3, 3), (3, 3), (3, 3),
];

#[test]
fn global_dimensions_match_macaulay_ranks() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let opts = Options::default();
    let mut checked = 0;
    for (k, &(arity, degree)) in PLAN.iter().enumerate() {
        let mut attempts = 0;
        loop {
            attempts += 1;
            assert!(attempts < 50, "no isolated instance found for slot {}", k);
            let f = random_singular(&mut rng, arity, degree, 3 + 2 * arity);
            if f.degree() < 2 {
                continue;
            }
            let j = jacobian(&f);
            let t = tyurina_gens(&f);
            let Some(mu) = quotient_dimension(&j, arity, default_bound(&j, arity)) else { continue };
            let Some(tau) = quotient_dimension(&t, arity, default_bound(&t, arity)) else { continue };
            let orders = if arity == 2 { vec![MonomialOrder::grevlex(), MonomialOrder::lex()] } else { vec![MonomialOrder::grevlex()] };
            for order in orders {
                let m = milnor_global(&f, &order, &opts).unwrap();
                let tg = tyurina_global(&f, &order, &opts).unwrap();
                assert_eq!(m.dimension, mu, "global Milnor of {:?}", f);
                assert_eq!(tg.dimension, tau, "global Tyurina of {:?}", f);
            }
            let ml = milnor_local(&f, &MonomialOrder::neg_grevlex(), &opts).unwrap().dimension;
            let tl = tyurina_local(&f, &MonomialOrder::neg_grevlex(), &opts).unwrap().dimension;
            assert!(tau <= mu && tl <= ml && ml <= mu && tl <= tau, "{:?}: {} {} {} {}", f, mu, tau, ml, tl);
            checked += 1;
            break;
        }
    }
    assert_eq!(checked, 25);
    assert!(start.elapsed().as_secs() < 60, "took {:?}", start.elapsed());
}
