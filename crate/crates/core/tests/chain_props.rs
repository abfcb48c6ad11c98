mod common;

use common::strategies::{chain, chain_of, coeff, digraph};
use pathhom_core::chains::{boundary, coefficient_matrix, join, split_allowed, Chain};
use pathhom_core::graph::Vertex;
use pathhom_core::linalg::{rank, ratio};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boundary_squared_is_zero(c in chain(1, 5)) {
        let dd = boundary(&boundary(&c));
        prop_assert!(dd.is_zero());
        prop_assert_eq!(dd.degree(), c.degree() - 2);
    }

    #[test]
    fn leibniz(g in chain(-1, 3), s in chain(-1, 3)) {
        let p = g.degree();
        let lhs = boundary(&join(&g, &s));
        let sign = if (p + 1) % 2 == 0 { ratio(1, 1) } else { ratio(-1, 1) };
        let rhs = join(&boundary(&g), &s).add(&join(&g, &boundary(&s)).scale(&sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn splitting_is_a_linear_projection(g in digraph(), a in chain(0, 4), c in coeff()) {
        let b_deg = a.degree();
        let (allowed, disallowed) = split_allowed(&a, &g);
        prop_assert_eq!(allowed.add(&disallowed), a.clone());
        prop_assert!(allowed.terms().all(|(p, _)| p.is_allowed_in(&g)));
        prop_assert!(disallowed.terms().all(|(p, _)| !p.is_allowed_in(&g)));
        let (again, none) = split_allowed(&allowed, &g);
        prop_assert_eq!(again, allowed.clone());
        prop_assert!(none.is_zero());

        let other = Chain::from_terms(b_deg, disallowed.terms().map(|(p, v)| (p.clone(), v * &c)));
        let (sa, sd) = split_allowed(&a.add(&other), &g);
        let (oa, od) = split_allowed(&other, &g);
        prop_assert_eq!(sa, allowed.add(&oa));
        prop_assert_eq!(sd, disallowed.add(&od));
    }

    #[test]
    fn join_with_independent_left_factors_is_injective(
        gammas in prop::collection::vec(chain_of(1), 1..4),
        q in 0i32..=1,
    ) {
        // keep an independent subfamily of the left factors
        let mut independent: Vec<Chain> = Vec::new();
        for g in gammas.into_iter().filter(|g| !g.is_zero()) {
            let mut trial = independent.clone();
            trial.push(g);
            if rank(&coefficient_matrix(&trial).1) == trial.len() {
                independent = trial;
            }
        }
        let taus: Vec<Chain> = all_sequences(q as usize + 1)
            .into_iter()
            .map(|vs| Chain::path(&vs))
            .collect();
        let products: Vec<Chain> = independent
            .iter()
            .flat_map(|g| taus.iter().map(move |t| join(g, t)))
            .collect();
        prop_assert_eq!(rank(&coefficient_matrix(&products).1), products.len());
    }
}

fn all_sequences(len: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s: Vec<Vertex>| {
                (0..3).map(move |v| {
                    let mut t = s.clone();
                    t.push(Vertex(v));
                    t
                })
            })
            .collect();
    }
    out
}
