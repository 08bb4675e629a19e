mod common;

use std::collections::BTreeSet;

use gallery_core::building::{common_apartment, flag_building};
use gallery_core::connectivity::{distance_two_pairs, vertex_connectivity};
use gallery_core::lattice::{
    check_atom_injection, flats_lattice, lattice_chamber_graph, q_of_lattice, subspace_lattice,
    validate_geometric,
};
use gallery_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn apartments_are_convex_coxeter_complexes() {
    for (n, p) in [(3, 2), (3, 3), (4, 2)] {
        let b = flag_building(n, p, &Limits::default()).unwrap();
        let pairs = distance_two_pairs(b.graph());
        for &(c, d) in pairs.iter().step_by(11) {
            let a = common_apartment(&b, c, d).unwrap();
            assert_eq!(a.base(), c);
            assert!(a.contains(d));
            assert!(a.is_coxeter_complex(&b), "({n},{p}) apartment of {c},{d}");
            let set: BTreeSet<usize> = a.chambers().into_iter().collect();
            assert!(common::is_convex(b.graph(), &set), "({n},{p}) apartment of {c},{d} not convex");
            let moved = a.rebased(d).unwrap();
            assert_eq!(moved.base(), d);
            assert_eq!(moved.chambers(), a.chambers());
            assert!(moved.is_coxeter_complex(&b));
        }
    }
}

#[test]
fn subspace_lattice_and_building_agree() {
    // maximal chains of proper subspaces are complete flags
    for (n, p) in [(3, 2), (3, 3), (4, 2)] {
        let b = flag_building(n, p, &Limits::default()).unwrap();
        let l = subspace_lattice(n, p, &Limits::default()).unwrap();
        let chambers = lattice_chamber_graph(&l, &Limits::default()).unwrap();
        let g = &chambers.graph;
        assert_eq!(g.vertex_count(), b.chamber_count());
        assert_eq!(g.edge_count(), b.graph().edge_count());
        assert_eq!(g.regular_degree(), b.graph().regular_degree());
        let kl = vertex_connectivity(g).unwrap().kappa();
        let kb = vertex_connectivity(b.graph()).unwrap().kappa();
        assert_eq!(kl, kb);
        assert_eq!(kl, Some(q_of_lattice(&l).unwrap().q * (n - 1)));
    }
}

#[test]
fn flats_of_random_matrices_are_geometric() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let p = [2u32, 3][rng.gen_range(0..2)];
        let rows = rng.gen_range(2..=3);
        let cols = rng.gen_range(2..=6);
        let matrix: Vec<Vec<u32>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect()).collect();
        let l = flats_lattice(&matrix, p, &Limits::default()).unwrap();
        assert!(validate_geometric(l.poset()).is_geometric(), "{matrix:?}");
        assert!(check_atom_injection(&l).is_ok());
        if l.rank() >= 2 {
            assert!(q_of_lattice(&l).unwrap().rank_two_suffices(), "{matrix:?}");
        }
    }
}
