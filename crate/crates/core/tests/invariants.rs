//! Property tests: structure is invariant under relabeling, and ordinals
//! behave like ω·k + m.

use std::sync::OnceLock;

use loewy_core::enumeration::{enumerate_filtered, CorpusFilter, CorpusSpec};
use loewy_core::properties::{is_distributive, is_modular};
use loewy_core::{find_isomorphism, series, FiniteLattice, OrdinalIndex};
use proptest::prelude::*;
use proptest::sample::Index;

fn corpus() -> &'static [FiniteLattice] {
    static CORPUS: OnceLock<Vec<FiniteLattice>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_filtered(CorpusSpec::new(7, CorpusFilter::All)).unwrap().collect())
}

fn lattice_and_permutation() -> impl Strategy<Value = (FiniteLattice, Vec<usize>)> {
    any::<Index>().prop_flat_map(|i| {
        let l = i.get(corpus()).clone();
        let n = l.len();
        (Just(l), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn relabeling_preserves_structure((l, perm) in lattice_and_permutation()) {
        let p = l.permuted(&perm);
        prop_assert_eq!(is_modular(&p), is_modular(&l));
        prop_assert_eq!(is_distributive(&p), is_distributive(&l));
        prop_assert_eq!(series::radical_length(&p), series::radical_length(&l));
        prop_assert_eq!(series::socle_length(&p), series::socle_length(&l));
        prop_assert_eq!(series::radical(&p), perm[series::radical(&l)]);
        prop_assert_eq!(series::socle(&p), perm[series::socle(&l)]);
        prop_assert!(find_isomorphism(&l, &p).is_some());
    }

    #[test]
    fn lattice_identities((l, _) in lattice_and_permutation(), a in any::<Index>(), b in any::<Index>(), c in any::<Index>()) {
        let n = l.len();
        let (x, y, z) = (a.index(n), b.index(n), c.index(n));
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
        prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
        let r = series::radical(&l);
        prop_assert!(l.coatoms().iter().all(|&m| l.leq(r, m)));
    }

    #[test]
    fn ordinal_successor_is_next(k in 0u64..10, m in 0u64..1000) {
        let o = OrdinalIndex::new(k, m);
        prop_assert!(o < o.successor());
        prop_assert!(o.successor() < o.next_limit());
        prop_assert!(o.next_limit().is_limit());
    }
}
