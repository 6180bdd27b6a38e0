//! Decision procedures for the classes of ordered semigroups used by
//! the nil-extension characterizations.
//!
//! Every existential witness (`x`, `y`, `z` in the definitions) is
//! searched exhaustively over the carrier of the semigroup passed in,
//! so running a predicate on an induced substructure draws witnesses
//! from that substructure only.

use serde::Serialize;

use crate::semigroup::OrderedSemigroup;
use crate::subset::Subset;

/// Elements `a` with `a <= a·x·a` for some `x`.
pub fn reg_set(s: &OrderedSemigroup) -> Subset {
    Subset::from_indices(s.len(), s.elements().filter(|&a| is_regular_element(s, a)))
}

pub fn is_regular_element(s: &OrderedSemigroup, a: usize) -> bool {
    s.elements().any(|x| s.leq(a, s.mul(s.mul(a, x), a)))
}

pub fn is_regular(s: &OrderedSemigroup) -> bool {
    s.elements().all(|a| is_regular_element(s, a))
}

/// The element `z` with `z <= x` and `z·x = x·z = z` for all `x`.
///
/// Strictness `z < x` is only required for `x != z`, which the order's
/// antisymmetry already gives; `z` is unique when it exists.
pub fn zero_element(s: &OrderedSemigroup) -> Option<usize> {
    s.elements().find(|&z| {
        s.elements()
            .all(|x| s.leq(z, x) && s.mul(z, x) == z && s.mul(x, z) == z)
    })
}

/// Elements with some power equal to the zero; empty without a zero.
pub fn nilpotents(s: &OrderedSemigroup) -> Subset {
    match zero_element(s) {
        None => s.empty_set(),
        Some(z) => {
            let zero = Subset::singleton(s.len(), z);
            Subset::from_indices(
                s.len(),
                s.elements().filter(|&a| s.power_orbit(a).meets(&zero)),
            )
        }
    }
}

pub fn is_nil(s: &OrderedSemigroup) -> bool {
    zero_element(s).is_some() && nilpotents(s).is_full()
}

/// For all `a, b` there are `x, y` with `a <= x·b` and `a <= b·y`.
pub fn is_group_like(s: &OrderedSemigroup) -> bool {
    s.elements().all(|a| {
        s.elements().all(|b| {
            s.elements().any(|x| s.leq(a, s.mul(x, b)))
                && s.elements().any(|y| s.leq(a, s.mul(b, y)))
        })
    })
}

/// For all `a, b` there is `x` with `a <= x·b`.
pub fn is_left_group_like(s: &OrderedSemigroup) -> bool {
    s.elements().all(|a| {
        s.elements()
            .all(|b| s.elements().any(|x| s.leq(a, s.mul(x, b))))
    })
}

/// Alternative form: `a ∈ (aSab]` for all `a, b`.
pub fn is_left_group_like_lgo(s: &OrderedSemigroup) -> bool {
    lgo_failure(s).is_none()
}

/// First pair `(a, b)` with `a ∉ (aSab]`.
pub fn lgo_failure(s: &OrderedSemigroup) -> Option<(usize, usize)> {
    for a in s.elements() {
        for b in s.elements() {
            let ok = s
                .elements()
                .any(|x| s.leq(a, s.mul(s.mul(s.mul(a, x), a), b)));
            if !ok {
                return Some((a, b));
            }
        }
    }
    None
}

/// Regular, and `ab ∈ (bSa]` for all `a, b`.
pub fn is_clifford(s: &OrderedSemigroup) -> bool {
    is_regular(s)
        && s.elements().all(|a| {
            s.elements().all(|b| {
                let ab = s.mul(a, b);
                s.elements().any(|x| s.leq(ab, s.mul(s.mul(b, x), a)))
            })
        })
}

/// Regular, and `ab ∈ (Sa]` for all `a, b`.
pub fn is_left_clifford(s: &OrderedSemigroup) -> bool {
    is_regular(s)
        && s.elements().all(|a| {
            s.elements().all(|b| {
                let ab = s.mul(a, b);
                s.elements().any(|x| s.leq(ab, s.mul(x, a)))
            })
        })
}

/// Class membership flags, in a fixed field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub regular: bool,
    pub group_like: bool,
    pub left_group_like: bool,
    pub clifford: bool,
    pub left_clifford: bool,
    pub nil: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub reg_set: Subset,
    pub nil_set: Subset,
    pub zero: Option<usize>,
    pub flags: ClassFlags,
}

pub fn class_report(s: &OrderedSemigroup) -> ClassReport {
    let reg = reg_set(s);
    let zero = zero_element(s);
    let nil_set = nilpotents(s);
    let regular = reg.is_full();
    let flags = ClassFlags {
        regular,
        group_like: is_group_like(s),
        left_group_like: is_left_group_like(s),
        clifford: is_clifford(s),
        left_clifford: is_left_clifford(s),
        nil: zero.is_some() && nil_set.is_full(),
    };
    ClassReport {
        reg_set: reg,
        nil_set,
        zero,
        flags,
    }
}
