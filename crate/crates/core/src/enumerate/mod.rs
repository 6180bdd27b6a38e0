//! Exhaustive generation of labeled ordered semigroups of small order.
//!
//! Cayley tables are produced by row-major backtracking with an
//! associativity check on every triple as soon as all four of its cells
//! are known; partial orders by extending the order matrix cell by cell
//! and rejecting any assignment that breaks antisymmetry or
//! transitivity among decided cells. Ordered semigroups are the
//! compatible pairs of the two streams, tables outermost.

mod census;
mod posets;
mod tables;

use std::collections::HashSet;

use thiserror::Error;

pub use census::{
    census, run_sweep, Anomaly, Census, FlagCounts, Sweep, SweepBatch, SweepCheckpoint, SweepError,
    SweepOptions, SweepOutcome, TheoremTally,
};
pub use posets::enumerate_posets;
pub use tables::{enumerate_semigroups, EnumerationCursor, SemigroupTables};

use crate::semigroup::{is_compatible, CanonicalForm, OrderedSemigroup};

/// Largest order the exhaustive enumerators accept.
pub const MAX_ORDER: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {0} exceeds the exhaustive enumeration cap of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("order must be at least 1")]
    ZeroOrder,
}

pub(crate) fn check_order(n: usize) -> Result<(), EnumerationError> {
    match n {
        0 => Err(EnumerationError::ZeroOrder),
        n if n > MAX_ORDER => Err(EnumerationError::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

/// Stream of all ordered semigroups of order `n`, tables outermost and
/// posets innermost, each in lexicographic order.
pub struct OrderedSemigroups {
    n: usize,
    tables: SemigroupTables,
    posets: Vec<Vec<bool>>,
    current: Option<Vec<u8>>,
    next_poset: usize,
    seen: Option<HashSet<CanonicalForm>>,
}

impl Iterator for OrderedSemigroups {
    type Item = OrderedSemigroup;

    fn next(&mut self) -> Option<OrderedSemigroup> {
        loop {
            if self.current.is_none() || self.next_poset == self.posets.len() {
                self.current = Some(self.tables.next()?);
                self.next_poset = 0;
            }
            let table = self.current.as_ref().unwrap();
            let leq = &self.posets[self.next_poset];
            self.next_poset += 1;
            if !is_compatible(self.n, table, leq) {
                continue;
            }
            let s = OrderedSemigroup::from_flat_unchecked(self.n, table.clone(), leq.clone());
            if let Some(seen) = &mut self.seen {
                if !seen.insert(s.canonical_form()) {
                    continue;
                }
            }
            return Some(s);
        }
    }
}

/// Every ordered semigroup on `0..n`; with `dedup`, only the first
/// member of each isomorphism class.
pub fn enumerate_ordered_semigroups(
    n: usize,
    dedup: bool,
) -> Result<OrderedSemigroups, EnumerationError> {
    Ok(OrderedSemigroups {
        n,
        tables: enumerate_semigroups(n)?,
        posets: enumerate_posets(n)?,
        current: None,
        next_poset: 0,
        seen: dedup.then(HashSet::new),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn order_cap() {
        assert_eq!(
            enumerate_semigroups(6).err(),
            Some(EnumerationError::OrderTooLarge(6))
        );
        assert_eq!(enumerate_posets(0).err(), Some(EnumerationError::ZeroOrder));
        assert!(enumerate_ordered_semigroups(9, false).is_err());
    }

    #[test]
    fn order_one() {
        let all: Vec<_> = enumerate_ordered_semigroups(1, false).unwrap().collect();
        assert_eq!(all, vec![fixtures::t1()]);
    }

    #[test]
    fn fixtures_appear_at_order_two() {
        let all: Vec<_> = enumerate_ordered_semigroups(2, false).unwrap().collect();
        for s in [
            fixtures::lz2(),
            fixtures::ch2(),
            fixtures::z2g(),
            fixtures::zs2(),
        ] {
            assert!(all.contains(&s), "{s:?} missing");
        }
    }

    #[test]
    fn order_two_matches_naive_sweep() {
        let mut naive = Vec::new();
        for code in 0..16usize {
            let table: Vec<Vec<usize>> = (0..2)
                .map(|i| (0..2).map(|j| code >> (2 * i + j) & 1).collect())
                .collect();
            for pattern in 0..4usize {
                let leq = vec![vec![true, pattern & 1 == 1], vec![pattern & 2 == 2, true]];
                if let Ok(s) = OrderedSemigroup::validate(2, &table, &leq) {
                    naive.push(s);
                }
            }
        }
        let got: Vec<_> = enumerate_ordered_semigroups(2, false).unwrap().collect();
        assert_eq!(got.len(), naive.len());
        for s in &naive {
            assert!(got.contains(s));
        }
    }

    #[test]
    fn dedup_keeps_one_per_class() {
        let all: Vec<_> = enumerate_ordered_semigroups(3, false).unwrap().collect();
        let reps: Vec<_> = enumerate_ordered_semigroups(3, true).unwrap().collect();
        let keys: HashSet<_> = reps.iter().map(OrderedSemigroup::canonical_form).collect();
        assert_eq!(keys.len(), reps.len());
        for s in &all {
            assert!(keys.contains(&s.canonical_form()));
        }
        assert!(reps.len() < all.len());
    }
}
