//! Element-wise characterizations of nil extensions of (left) group
//! like and (left) Clifford ordered semigroups, and a verifier pairing
//! each with the structural oracle in [`crate::extension`].
//!
//! "There exists n" quantifiers are decided by [`exists_power`], which
//! walks the powers of a tuple of elements until the tuple state
//! repeats. Which elements share the exponent is part of each
//! condition: only `a` varies in ne6/ne8/ne9, while ne7 raises `a` and
//! `b` to the same `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::reg_set;
use crate::extension::{
    oracle_scan, BaseClass, ExtensionError, NilExtensionCertificate, OracleScan, Rejection,
};
use crate::semigroup::{Instance, OrderedSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Ne6,
    Ne7,
    Ne8,
    Ne9,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::Ne6, Theorem::Ne7, Theorem::Ne8, Theorem::Ne9];

    /// The class the nil-extension base must belong to.
    pub fn base_class(self) -> BaseClass {
        match self {
            Theorem::Ne6 => BaseClass::LeftGroupLike,
            Theorem::Ne7 => BaseClass::GroupLike,
            Theorem::Ne8 => BaseClass::Clifford,
            Theorem::Ne9 => BaseClass::LeftClifford,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Ne6 => "ne6",
            Theorem::Ne7 => "ne7",
            Theorem::Ne8 => "ne8",
            Theorem::Ne9 => "ne9",
        }
    }

    pub fn condition(self, s: &OrderedSemigroup) -> bool {
        self.check(s).is_ok()
    }

    /// The element-wise condition, or its first failing tuple.
    pub fn check(self, s: &OrderedSemigroup) -> Result<(), PredicateFailure> {
        match self {
            Theorem::Ne6 => check_ne6(s),
            Theorem::Ne7 => check_ne7(s),
            Theorem::Ne8 => check_ne8(s),
            Theorem::Ne9 => check_ne9(s),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem `{s}` (expected ne6, ne7, ne8 or ne9)"))
    }
}

/// Outcome of an exponent search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSearch {
    pub found: bool,
    /// Least exponent satisfying the test.
    pub exponent: Option<u64>,
    /// Exponents tried before stopping.
    pub searched: u64,
}

/// Searches `n = 1, 2, ...` for an exponent at which `test` accepts the
/// tuple `(a_1^n, ..., a_k^n)`.
///
/// The tuple sequence is eventually periodic, so once a state repeats
/// no later exponent can succeed and the search reports `found: false`.
pub fn exists_power<F>(s: &OrderedSemigroup, varying: &[usize], mut test: F) -> PowerSearch
where
    F: FnMut(&[usize]) -> bool,
{
    assert!(
        !varying.is_empty(),
        "exists_power needs at least one varying element"
    );
    let k = varying.len();
    let mut current = varying.to_vec();
    let mut seen: Vec<usize> = Vec::new();
    let mut exponent = 1u64;
    loop {
        if test(&current) {
            return PowerSearch {
                found: true,
                exponent: Some(exponent),
                searched: exponent,
            };
        }
        if seen.chunks(k).any(|state| state == current.as_slice()) {
            return PowerSearch {
                found: false,
                exponent: None,
                searched: exponent,
            };
        }
        seen.extend_from_slice(&current);
        for (c, &a) in current.iter_mut().zip(varying) {
            *c = s.mul(*c, a);
        }
        exponent += 1;
    }
}

/// The first tuple at which an element-wise condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateFailure {
    /// 1 for the power clause, 2 for the order clause.
    pub clause: u8,
    /// `(a, b)` or `(x, a, y)` for clause 1, `(a, b)` for clause 2.
    pub tuple: Vec<usize>,
    /// Exponents examined before the power search gave up (clause 1).
    pub exponents_searched: Option<u64>,
}

fn power_failure(tuple: Vec<usize>, search: PowerSearch) -> PredicateFailure {
    PredicateFailure {
        clause: 1,
        tuple,
        exponents_searched: Some(search.searched),
    }
}

/// `p <= l·t·r` for some `t`, i.e. `p ∈ (lSr]`.
#[inline]
fn in_sandwich(s: &OrderedSemigroup, p: usize, l: usize, r: usize) -> bool {
    s.elements().any(|t| s.leq(p, s.mul(s.mul(l, t), r)))
}

/// Order clause shared by ne6/ne8/ne9: for `a ∈ S`, `b ∈ Reg(S)` with
/// `premise(a, b)`, some `t` satisfies `conclusion(a, b, t)`.
fn order_clause<P, C>(
    s: &OrderedSemigroup,
    premise: P,
    conclusion: C,
) -> Result<(), PredicateFailure>
where
    P: Fn(usize, usize) -> bool,
    C: Fn(usize, usize, usize) -> bool,
{
    let reg = reg_set(s);
    for a in s.elements() {
        for b in reg.iter() {
            if premise(a, b) && !s.elements().any(|t| conclusion(a, b, t)) {
                return Err(PredicateFailure {
                    clause: 2,
                    tuple: vec![a, b],
                    exponents_searched: None,
                });
            }
        }
    }
    Ok(())
}

/// ∀a,b ∃n: aⁿ ∈ (aⁿSaⁿb], and for `b ∈ Reg(S)`: `a <= ba ⇒ a <= axb` for some `x`.
pub fn check_ne6(s: &OrderedSemigroup) -> Result<(), PredicateFailure> {
    for a in s.elements() {
        for b in s.elements() {
            let search = exists_power(s, &[a], |p| {
                let p = p[0];
                in_sandwich(s, p, p, s.mul(p, b))
            });
            if !search.found {
                return Err(power_failure(vec![a, b], search));
            }
        }
    }
    order_clause(
        s,
        |a, b| s.leq(a, s.mul(b, a)),
        |a, b, x| s.leq(a, s.mul(s.mul(a, x), b)),
    )
}

/// ∀a,b ∃n (shared by `a` and `b`): aⁿ ∈ (bⁿSbⁿ].
pub fn check_ne7(s: &OrderedSemigroup) -> Result<(), PredicateFailure> {
    for a in s.elements() {
        for b in s.elements() {
            let search = exists_power(s, &[a, b], |p| in_sandwich(s, p[0], p[1], p[1]));
            if !search.found {
                return Err(power_failure(vec![a, b], search));
            }
        }
    }
    Ok(())
}

/// Power clause of ne8 (`mirror = true`) and ne9 (`mirror = false`):
/// with `m = xaⁿy` and `w = yaⁿx`, `m ∈ (mSw]` and either `m ∈ (wSm]`
/// or `m ∈ (mSm]`.
fn triple_clause(s: &OrderedSemigroup, mirror: bool) -> Result<(), PredicateFailure> {
    for x in s.elements() {
        for a in s.elements() {
            for y in s.elements() {
                let search = exists_power(s, &[a], |p| {
                    let m = s.mul(s.mul(x, p[0]), y);
                    let w = s.mul(s.mul(y, p[0]), x);
                    in_sandwich(s, m, m, w)
                        && if mirror {
                            in_sandwich(s, m, w, m)
                        } else {
                            in_sandwich(s, m, m, m)
                        }
                });
                if !search.found {
                    return Err(power_failure(vec![x, a, y], search));
                }
            }
        }
    }
    Ok(())
}

/// ne8: the mirrored triple clause, and for `b ∈ Reg(S)`: `a <= b ⇒ a ∈ (Sab]`.
pub fn check_ne8(s: &OrderedSemigroup) -> Result<(), PredicateFailure> {
    triple_clause(s, true)?;
    order_clause(
        s,
        |a, b| s.leq(a, b),
        |a, b, t| s.leq(a, s.mul(s.mul(t, a), b)),
    )
}

/// ne9: the one-sided triple clause, and for `b ∈ Reg(S)`: `a <= b ⇒ a <= azab` for some `z`.
pub fn check_ne9(s: &OrderedSemigroup) -> Result<(), PredicateFailure> {
    triple_clause(s, false)?;
    order_clause(
        s,
        |a, b| s.leq(a, b),
        |a, b, z| s.leq(a, s.mul(s.mul(s.mul(a, z), a), b)),
    )
}

pub fn cond_ne6(s: &OrderedSemigroup) -> bool {
    check_ne6(s).is_ok()
}

pub fn cond_ne7(s: &OrderedSemigroup) -> bool {
    check_ne7(s).is_ok()
}

pub fn cond_ne8(s: &OrderedSemigroup) -> bool {
    check_ne8(s).is_ok()
}

pub fn cond_ne9(s: &OrderedSemigroup) -> bool {
    check_ne9(s).is_ok()
}

/// Why a verdict came out false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum Witness {
    Predicate(PredicateFailure),
    Oracle { rejections: Vec<Rejection> },
}

/// The predicate and the oracle evaluated on one instance.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub theorem: Theorem,
    pub predicate: Result<(), PredicateFailure>,
    pub oracle: OracleScan,
}

impl Evaluation {
    pub fn predicate_verdict(&self) -> bool {
        self.predicate.is_ok()
    }

    pub fn oracle_verdict(&self) -> bool {
        self.oracle.certificate.is_some()
    }

    pub fn agree(&self) -> bool {
        self.predicate_verdict() == self.oracle_verdict()
    }
}

pub fn evaluate(s: &OrderedSemigroup, theorem: Theorem) -> Result<Evaluation, ExtensionError> {
    Ok(Evaluation {
        theorem,
        predicate: theorem.check(s),
        oracle: oracle_scan(s, theorem.base_class())?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance_key: String,
    pub theorem: Theorem,
    pub predicate_verdict: bool,
    pub oracle_verdict: bool,
    pub agree: bool,
    pub witness: Option<Witness>,
    pub certificate: Option<NilExtensionCertificate>,
    pub instance: Instance,
}

impl VerificationReport {
    pub fn from_evaluation(s: &OrderedSemigroup, eval: Evaluation) -> Self {
        let predicate_verdict = eval.predicate_verdict();
        let oracle_verdict = eval.oracle_verdict();
        let witness = match eval.predicate {
            Err(failure) => Some(Witness::Predicate(failure)),
            Ok(()) if !oracle_verdict => Some(Witness::Oracle {
                rejections: eval.oracle.rejections,
            }),
            Ok(()) => None,
        };
        VerificationReport {
            instance_key: s.canonical_form().to_hex(),
            theorem: eval.theorem,
            predicate_verdict,
            oracle_verdict,
            agree: predicate_verdict == oracle_verdict,
            witness,
            certificate: eval.oracle.certificate,
            instance: s.to_instance(),
        }
    }
}

/// Runs the element-wise condition and the oracle for `theorem` on `s`.
pub fn verify_theorem(
    s: &OrderedSemigroup,
    theorem: Theorem,
) -> Result<VerificationReport, ExtensionError> {
    Ok(VerificationReport::from_evaluation(
        s,
        evaluate(s, theorem)?,
    ))
}
