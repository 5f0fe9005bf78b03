use std::collections::BTreeMap;

use qgcount::oracle::enumerate_tables;
use qgcount::perm::SymmetricGroup;
use qgcount::{
    isomorphic_by_bijection, isomorphic_by_conjugation, CayleyTable, Permutation, Transversal,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn order4() -> Vec<CayleyTable> {
    enumerate_tables(4).unwrap().iter().collect()
}

fn stabilizer(n: usize) -> Vec<Permutation> {
    SymmetricGroup::new(n - 1).map(|s| s.extend_to(n)).collect()
}

#[test]
fn round_trip_order4_exhaustive() {
    for q in order4() {
        let t = q.to_transversal();
        assert_eq!(CayleyTable::from_transversal(&t), q);
        assert_eq!(CayleyTable::from_transversal(&t).to_transversal(), t);
    }
}

#[test]
fn round_trip_order5_sampled() {
    let space = enumerate_tables(5).unwrap();
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..10_000 {
        let q = space.table_at(rng.gen_range(0..space.len()));
        assert_eq!(CayleyTable::from_transversal(&q.to_transversal()), q);
    }
}

#[test]
fn non_canonical_representatives_give_valid_tables() {
    let space = enumerate_tables(5).unwrap();
    let group = stabilizer(5);
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..100 {
        let q = space.table_at(rng.gen_range(0..space.len()));
        let mut perms = q.to_transversal().perms().to_vec();
        for p in perms.iter_mut().take(4) {
            let h = group.choose(&mut rng).unwrap();
            *p = h.compose(p).unwrap();
        }
        let t = Transversal::new(perms).unwrap();
        let table = CayleyTable::from_transversal(&t);
        CayleyTable::validate(&table.rows()).unwrap();
    }
}

#[test]
fn both_tests_agree_on_all_order4_pairs() {
    let tables = order4();
    for a in &tables {
        for b in &tables {
            let bij = isomorphic_by_bijection(a, b);
            let conj = isomorphic_by_conjugation(a, b);
            assert_eq!(bij, conj, "{a:?} / {b:?}");
            if let Some(w) = bij {
                assert_eq!(&a.relabel(&w).unwrap(), b);
            }
        }
    }
}

#[test]
fn both_tests_agree_on_random_order5_pairs() {
    let space = enumerate_tables(5).unwrap();
    let group = stabilizer(5);
    let mut rng = StdRng::seed_from_u64(3);
    let mut positives = 0;
    for k in 0..1000 {
        let a = space.table_at(rng.gen_range(0..space.len()));
        let b = if k % 2 == 0 {
            a.relabel(group.choose(&mut rng).unwrap()).unwrap()
        } else {
            space.table_at(rng.gen_range(0..space.len()))
        };
        let bij = isomorphic_by_bijection(&a, &b);
        let conj = isomorphic_by_conjugation(&a, &b);
        assert_eq!(bij.is_some(), conj.is_some());
        for w in bij.iter().chain(conj.iter()) {
            assert_eq!(a.relabel(w).unwrap(), b);
            // the witness conjugates one canonical transversal onto the other
            assert_eq!(a.to_transversal().conjugate(w).unwrap(), b.to_transversal());
        }
        positives += bij.is_some() as usize;
    }
    assert!(positives >= 500);
}

#[test]
fn distinct_orbits_are_not_isomorphic() {
    let tables = order4();
    let mut reps: Vec<&CayleyTable> = Vec::new();
    for q in &tables {
        if reps.iter().all(|r| isomorphic_by_bijection(r, q).is_none()) {
            reps.push(q);
        }
    }
    assert_eq!(reps.len(), 44);
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert_eq!(isomorphic_by_bijection(a, b), None);
            assert_eq!(isomorphic_by_conjugation(a, b), None);
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_relation() {
    let tables = order4();
    let group = stabilizer(4);
    let mut rng = StdRng::seed_from_u64(4);
    for a in &tables {
        assert!(isomorphic_by_bijection(a, a).unwrap().is_identity());
        let s = group.choose(&mut rng).unwrap();
        let t = group.choose(&mut rng).unwrap();
        let b = a.relabel(s).unwrap();
        let c = b.relabel(t).unwrap();
        let ab = isomorphic_by_bijection(a, &b).unwrap();
        let ba = isomorphic_by_bijection(&b, a).unwrap();
        let bc = isomorphic_by_bijection(&b, &c).unwrap();
        // symmetric: the inverse witness works
        assert_eq!(b.relabel(&ab.inverse()).unwrap(), *a);
        assert_eq!(b.relabel(&ba).unwrap(), *a);
        // transitive: the composed witness works
        assert_eq!(a.relabel(&ab.compose(&bc).unwrap()).unwrap(), c);
    }
}

#[test]
fn conjugation_transports_structure() {
    let group = stabilizer(4);
    for q in order4() {
        let t = q.to_transversal();
        for s in &group {
            let moved = CayleyTable::from_transversal(&t.conjugate(s).unwrap());
            CayleyTable::validate(&moved.rows()).unwrap();
            assert_eq!(moved, q.relabel(s).unwrap());
            let w = isomorphic_by_conjugation(&q, &moved).unwrap();
            assert_eq!(q.relabel(&w).unwrap(), moved);
        }
    }
}

#[test]
fn orbit_sizes_from_relabeling_match_oracle_histogram() {
    let tables = order4();
    let group = stabilizer(4);
    let mut seen = std::collections::HashSet::new();
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for q in &tables {
        if seen.contains(q) {
            continue;
        }
        let orbit: std::collections::HashSet<CayleyTable> =
            group.iter().map(|s| q.relabel(s).unwrap()).collect();
        *hist.entry(orbit.len() as u64).or_default() += 1;
        seen.extend(orbit);
    }
    assert_eq!(hist, qgcount::orbit_count(4).unwrap().orbit_sizes);
}

#[test]
fn groups_of_order_four() {
    let groups: Vec<CayleyTable> = order4()
        .into_iter()
        .filter(|q| q.is_associative())
        .collect();
    let mut classes: Vec<&CayleyTable> = Vec::new();
    for g in &groups {
        if classes
            .iter()
            .all(|c| isomorphic_by_bijection(c, g).is_none())
        {
            classes.push(g);
        }
    }
    // Z/4 and the Klein group
    assert_eq!(classes.len(), 2);
}
