use drg_cayley_core::autom::{automorphism_group, canonical_form, verify_automorphisms};
use drg_cayley_core::cayley::{cayley_graph, distance_sets, ConnectionSet};
use drg_cayley_core::cayleyness::is_cayley;
use drg_cayley_core::drg::{check_distance_regular, spectrum_numeric, DrgCheck};
use drg_cayley_core::graph::Graph;
use drg_cayley_core::groups::Group;
use drg_cayley_core::{graph6, Unlimited};
use proptest::prelude::*;

fn graph(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..10)
        .prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph(n, &b)))
}

/// Inverse-closed, identity-free subsets of `Z_n`.
fn arb_circulant() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..16).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n / 2).prop_map(move |pick| {
            let mut s = Vec::new();
            for (i, &p) in pick.iter().enumerate() {
                if p {
                    s.push(i + 1);
                    if n - (i + 1) != i + 1 {
                        s.push(n - (i + 1));
                    }
                }
            }
            (n, s)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in arb_graph()) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labelling(g in arb_graph(), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let a = canonical_form(&g, &Unlimited).unwrap();
        let b = canonical_form(&g.relabel(&perm), &Unlimited).unwrap();
        prop_assert_eq!(a.certificate, b.certificate);
        let aut = automorphism_group(&g, &Unlimited).unwrap();
        prop_assert!(verify_automorphisms(&g, &aut).is_ok());
    }

    #[test]
    fn circulants_are_cayley((n, s) in arb_circulant()) {
        let z = Group::cyclic(n).unwrap();
        let cs = ConnectionSet::new(&z, &s).unwrap();
        let g = cayley_graph(&z, &cs);
        prop_assert!(g.regular_degree() == Some(s.len()));
        if g.is_connected() {
            // very dense circulants may hit the stabilizer size guard, never "no"
            let v = is_cayley(&g, &Unlimited).unwrap();
            prop_assert!(v.is_yes() || v.to_string().starts_with("unknown (stabilizer"), "{}", v);
            let ds = distance_sets(&z, &cs).unwrap();
            let dist = g.bfs(0);
            for (i, layer) in ds.sets.iter().enumerate() {
                prop_assert!(layer.iter().all(|&v| dist[v] == i));
            }
        }
    }

    #[test]
    fn drg_spectrum_has_d_plus_1_values((n, s) in arb_circulant()) {
        let z = Group::cyclic(n).unwrap();
        let g = cayley_graph(&z, &ConnectionSet::new(&z, &s).unwrap());
        if !g.is_connected() {
            return Ok(());
        }
        if let DrgCheck::Regular(a) = check_distance_regular(&g).unwrap() {
            let spec = spectrum_numeric(&g).unwrap();
            prop_assert_eq!(spec.values.len(), a.diameter() + 1);
            prop_assert_eq!(a.order(), Some(n as u128));
        }
    }
}
