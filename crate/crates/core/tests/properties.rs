use std::sync::OnceLock;

use ordsemi::classes::{is_clifford, is_group_like, is_left_clifford, is_left_group_like};
use ordsemi::enumerate::enumerate_ordered_semigroups;
use ordsemi::extension::rees_factor;
use ordsemi::ideals::{all_ideals, is_ideal, kernel};
use ordsemi::relations::green_relations;
use ordsemi::theorems::{cond_ne7, exists_power};
use ordsemi::{OrderedSemigroup, Subset};
use proptest::prelude::*;

fn pool() -> &'static [Vec<OrderedSemigroup>] {
    static POOL: OnceLock<Vec<Vec<OrderedSemigroup>>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=4)
            .map(|n| enumerate_ordered_semigroups(n, true).unwrap().collect())
            .collect()
    })
}

fn instance() -> impl Strategy<Value = OrderedSemigroup> {
    (0usize..4, any::<prop::sample::Index>()).prop_map(|(order, idx)| {
        let bucket = &pool()[order];
        bucket[idx.index(bucket.len())].clone()
    })
}

fn with_subsets() -> impl Strategy<Value = (OrderedSemigroup, Subset, Subset)> {
    (instance(), any::<u64>(), any::<u64>()).prop_map(|(s, h, k)| {
        let n = s.len();
        let mask = (1u64 << n) - 1;
        (
            s,
            Subset::from_bits(n, h & mask),
            Subset::from_bits(n, k & mask),
        )
    })
}

fn permuted() -> impl Strategy<Value = (OrderedSemigroup, Vec<usize>)> {
    instance().prop_flat_map(|s| {
        let perm: Vec<usize> = (0..s.len()).collect();
        (Just(s), Just(perm).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn downset_is_a_closure((s, h, k) in with_subsets()) {
        let dh = s.downset(&h);
        prop_assert!(h.is_subset(&dh));
        prop_assert_eq!(s.downset(&dh), dh);
        if h.is_subset(&k) {
            prop_assert!(dh.is_subset(&s.downset(&k)));
        }
        prop_assert_eq!(s.downset(&h.union(&k)), dh.union(&s.downset(&k)));
    }

    #[test]
    fn powers_add(s in instance(), a in 0usize..4, j in 1u64..40, k in 1u64..40) {
        let a = a % s.len();
        prop_assert_eq!(s.power(a, j + k), s.mul(s.power(a, j), s.power(a, k)));
        let orbit = s.power_orbit(a);
        prop_assert_eq!(orbit.power(j), s.power(a, j));
    }

    #[test]
    fn canonical_form_ignores_labels((s, perm) in permuted()) {
        let t = s.relabel(&perm);
        prop_assert!(OrderedSemigroup::from_instance(&t.to_instance()).is_ok());
        prop_assert_eq!(t.canonical_form(), s.canonical_form());
    }

    #[test]
    fn green_relations_nest(s in instance()) {
        let g = green_relations(&s);
        prop_assert!(g.h.refines(&g.l) && g.h.refines(&g.r));
        prop_assert!(g.l.refines(&g.j) && g.r.refines(&g.j));
        prop_assert_eq!(g.h, g.l.intersection(&g.r));
    }

    #[test]
    fn ideals_intersect_to_ideals(s in instance()) {
        let ideals = all_ideals(&s);
        for a in &ideals {
            for b in &ideals {
                let c = a.intersection(b);
                if !c.is_empty() {
                    prop_assert_eq!(is_ideal(&s, &c), Ok(true));
                    prop_assert!(ideals.contains(&c));
                }
            }
        }
        if let Some(k) = kernel(&s) {
            prop_assert!(ideals.iter().all(|i| k.is_subset(i)));
        }
    }

    #[test]
    fn exists_power_matches_a_bounded_scan(s in instance(), a in 0usize..4, b in 0usize..4, target in 0usize..4) {
        let n = s.len();
        let (a, b, target) = (a % n, b % n, target % n);
        let test = |t: &[usize]| s.mul(t[0], t[1]) == target;
        let search = exists_power(&s, &[a, b], test);
        let bound = (n * n + n) as u64;
        let naive = (1..=bound).find(|&e| s.mul(s.power(a, e), s.power(b, e)) == target);
        prop_assert_eq!(search.exponent, naive);
        prop_assert_eq!(search.found, naive.is_some());
    }

    #[test]
    fn class_implications(s in instance()) {
        if is_group_like(&s) {
            prop_assert!(cond_ne7(&s));
            prop_assert!(is_left_group_like(&s));
        }
        if is_clifford(&s) {
            prop_assert!(is_left_clifford(&s));
        }
    }

    #[test]
    fn rees_quotients_validate(s in instance()) {
        for i in all_ideals(&s) {
            let q = rees_factor(&s, &i).unwrap();
            prop_assert_eq!(q.quotient.len(), s.len() - i.len() + 1);
            prop_assert!(OrderedSemigroup::from_instance(&q.quotient.to_instance()).is_ok());
        }
    }
}
