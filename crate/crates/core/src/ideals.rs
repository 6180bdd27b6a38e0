//! One- and two-sided ideals, principal ideals and the kernel.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::OrderedSemigroup;
use crate::subset::Subset;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals are nonempty by definition")]
    EmptySubset,
}

fn nonempty(i: &Subset) -> Result<(), IdealError> {
    if i.is_empty() {
        Err(IdealError::EmptySubset)
    } else {
        Ok(())
    }
}

fn absorbs_left(s: &OrderedSemigroup, i: &Subset) -> bool {
    i.iter()
        .all(|a| s.elements().all(|x| i.contains(s.mul(x, a))))
}

fn absorbs_right(s: &OrderedSemigroup, i: &Subset) -> bool {
    i.iter()
        .all(|a| s.elements().all(|x| i.contains(s.mul(a, x))))
}

/// `SI ⊆ I` and `(I] = I`.
pub fn is_left_ideal(s: &OrderedSemigroup, i: &Subset) -> Result<bool, IdealError> {
    nonempty(i)?;
    Ok(absorbs_left(s, i) && s.downset(i) == *i)
}

/// `IS ⊆ I` and `(I] = I`.
pub fn is_right_ideal(s: &OrderedSemigroup, i: &Subset) -> Result<bool, IdealError> {
    nonempty(i)?;
    Ok(absorbs_right(s, i) && s.downset(i) == *i)
}

pub fn is_ideal(s: &OrderedSemigroup, i: &Subset) -> Result<bool, IdealError> {
    nonempty(i)?;
    Ok(absorbs_left(s, i) && absorbs_right(s, i) && s.downset(i) == *i)
}

/// Per-element principal ideals:
/// `L(a) = (a ∪ Sa]`, `R(a) = (a ∪ aS]`, `I(a) = (a ∪ Sa ∪ aS ∪ SaS]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalIdeals {
    pub left: Vec<Subset>,
    pub right: Vec<Subset>,
    pub two_sided: Vec<Subset>,
}

pub fn principal_ideals(s: &OrderedSemigroup) -> PrincipalIdeals {
    let n = s.len();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    let mut two_sided = Vec::with_capacity(n);
    for a in s.elements() {
        let mut sa = Subset::singleton(n, a);
        let mut as_ = Subset::singleton(n, a);
        let mut both = Subset::singleton(n, a);
        for x in s.elements() {
            let xa = s.mul(x, a);
            let ax = s.mul(a, x);
            sa.insert(xa);
            as_.insert(ax);
            both.insert(xa);
            both.insert(ax);
            for y in s.elements() {
                both.insert(s.mul(xa, y));
            }
        }
        left.push(s.downset(&sa));
        right.push(s.downset(&as_));
        two_sided.push(s.downset(&both));
    }
    PrincipalIdeals {
        left,
        right,
        two_sided,
    }
}

/// Every ideal of `s`, smallest first, ties broken by mask value.
///
/// Each ideal is the union of the principal ideals of its members, so
/// the ideals are exactly the nonempty unions of principal ideals.
pub fn all_ideals(s: &OrderedSemigroup) -> Vec<Subset> {
    let principal = principal_ideals(s).two_sided;
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for p in &principal {
        let grown: Vec<u64> = seen.iter().map(|&j| j | p.bits()).collect();
        seen.insert(p.bits());
        seen.extend(grown);
    }
    let mut out: Vec<Subset> = seen
        .into_iter()
        .map(|b| Subset::from_bits(s.len(), b))
        .collect();
    out.sort_by(Subset::canonical_cmp);
    out
}

/// Intersection of all ideals, when nonempty.
pub fn kernel(s: &OrderedSemigroup) -> Option<Subset> {
    kernel_of(s, &all_ideals(s))
}

pub(crate) fn kernel_of(s: &OrderedSemigroup, ideals: &[Subset]) -> Option<Subset> {
    let k = ideals
        .iter()
        .fold(s.full_set(), |acc, i| acc.intersection(i));
    (!k.is_empty()).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn membership_examples() {
        let ch2 = fixtures::ch2();
        assert!(is_ideal(&ch2, &Subset::singleton(2, 0)).unwrap());
        assert!(!is_ideal(&ch2, &Subset::singleton(2, 1)).unwrap());
        // {1} is not downward closed and 0·1 = 0 escapes it
        assert!(!is_left_ideal(&ch2, &Subset::singleton(2, 1)).unwrap());
        for s in fixtures::all() {
            assert!(is_ideal(&s, &s.full_set()).unwrap());
            assert_eq!(is_ideal(&s, &s.empty_set()), Err(IdealError::EmptySubset));
            assert_eq!(
                is_left_ideal(&s, &s.empty_set()),
                Err(IdealError::EmptySubset)
            );
            assert_eq!(
                is_right_ideal(&s, &s.empty_set()),
                Err(IdealError::EmptySubset)
            );
        }
    }

    #[test]
    fn one_sided_ideals_of_lz2() {
        let lz2 = fixtures::lz2();
        // a·x = a: every singleton is a right ideal, and no proper subset is a left ideal
        assert!(is_right_ideal(&lz2, &Subset::singleton(2, 0)).unwrap());
        assert!(!is_left_ideal(&lz2, &Subset::singleton(2, 0)).unwrap());
    }

    #[test]
    fn principal_examples() {
        let p = principal_ideals(&fixtures::lz2());
        assert!(p.left[0].is_full());
        assert_eq!(p.right[0].to_vec(), vec![0]);
        let p = principal_ideals(&fixtures::ch2());
        assert!(p.two_sided[1].is_full());
        assert_eq!(p.two_sided[0].to_vec(), vec![0]);
        let p = principal_ideals(&fixtures::t1());
        assert_eq!(p.left[0].to_vec(), vec![0]);
        assert_eq!(p.right[0].to_vec(), vec![0]);
        assert_eq!(p.two_sided[0].to_vec(), vec![0]);
    }

    #[test]
    fn all_ideals_examples() {
        let got: Vec<_> = all_ideals(&fixtures::ch2())
            .iter()
            .map(Subset::to_vec)
            .collect();
        assert_eq!(got, vec![vec![0], vec![0, 1]]);
        let got: Vec<_> = all_ideals(&fixtures::lz2())
            .iter()
            .map(Subset::to_vec)
            .collect();
        assert_eq!(got, vec![vec![0, 1]]);
        let got: Vec<_> = all_ideals(&fixtures::t1())
            .iter()
            .map(Subset::to_vec)
            .collect();
        assert_eq!(got, vec![vec![0]]);
    }

    #[test]
    fn all_ideals_matches_subset_scan() {
        for s in fixtures::all()
            .into_iter()
            .chain(crate::enumerate::enumerate_ordered_semigroups(3, false).unwrap())
        {
            let mut brute: Vec<Subset> = (1u64..1 << s.len())
                .map(|b| Subset::from_bits(s.len(), b))
                .filter(|i| is_ideal(&s, i).unwrap())
                .collect();
            brute.sort_by(Subset::canonical_cmp);
            assert_eq!(all_ideals(&s), brute);
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&fixtures::ch2()).unwrap().to_vec(), vec![0]);
        assert_eq!(kernel(&fixtures::lz2()).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(kernel(&fixtures::zs2()).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn principal_ideals_are_ideals() {
        for s in fixtures::all() {
            let p = principal_ideals(&s);
            for a in s.elements() {
                assert!(is_left_ideal(&s, &p.left[a]).unwrap());
                assert!(is_right_ideal(&s, &p.right[a]).unwrap());
                assert!(is_ideal(&s, &p.two_sided[a]).unwrap());
                assert!(
                    p.left[a].contains(a) && p.right[a].contains(a) && p.two_sided[a].contains(a)
                );
            }
        }
    }
}
