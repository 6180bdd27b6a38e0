//! Rees factors, nil extensions, and the structural oracle that looks
//! for an ideal `K` of a given class with every element having a power
//! inside `K`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes;
use crate::ideals::{all_ideals, is_ideal};
use crate::semigroup::{OrderedSemigroup, ValidationError, Violation};
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not closed under multiplication")]
    NotClosed,
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("Rees quotient fails validation: {}", .0.first().map(ToString::to_string).unwrap_or_default())]
    QuotientInvalid(Vec<Violation>),
    /// The quotient-nilness and power-membership tests disagree at `element`.
    #[error(
        "nil-extension paths disagree at element {element}: quotient nilpotent = {quotient_nilpotent}, \
         power in ideal = {power_in_ideal}"
    )]
    LemmaViolation {
        element: usize,
        quotient_nilpotent: bool,
        power_in_ideal: bool,
    },
}

/// The classes a nil-extension base may be required to belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseClass {
    GroupLike,
    LeftGroupLike,
    Clifford,
    LeftClifford,
}

impl BaseClass {
    pub const ALL: [BaseClass; 4] = [
        BaseClass::GroupLike,
        BaseClass::LeftGroupLike,
        BaseClass::Clifford,
        BaseClass::LeftClifford,
    ];

    pub fn holds(self, s: &OrderedSemigroup) -> bool {
        match self {
            BaseClass::GroupLike => classes::is_group_like(s),
            BaseClass::LeftGroupLike => classes::is_left_group_like(s),
            BaseClass::Clifford => classes::is_clifford(s),
            BaseClass::LeftClifford => classes::is_left_clifford(s),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BaseClass::GroupLike => "group_like",
            BaseClass::LeftGroupLike => "left_group_like",
            BaseClass::Clifford => "clifford",
            BaseClass::LeftClifford => "left_clifford",
        }
    }
}

impl fmt::Display for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BaseClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        BaseClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

/// A multiplicatively closed subset seen as an ordered semigroup in its
/// own right; `elements[i]` is the source index of local element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substructure {
    pub semigroup: OrderedSemigroup,
    pub elements: Vec<usize>,
}

/// Restricts the table and order of `s` to `k`.
pub fn induced_substructure(
    s: &OrderedSemigroup,
    k: &Subset,
) -> Result<Substructure, ExtensionError> {
    if k.is_empty() {
        return Err(ExtensionError::EmptySubset);
    }
    let elements = k.to_vec();
    let mut local = vec![usize::MAX; s.len()];
    for (i, &e) in elements.iter().enumerate() {
        local[e] = i;
    }
    let m = elements.len();
    let mut table = Vec::with_capacity(m * m);
    let mut leq = Vec::with_capacity(m * m);
    for &a in &elements {
        for &b in &elements {
            let ab = s.mul(a, b);
            if !k.contains(ab) {
                return Err(ExtensionError::NotClosed);
            }
            table.push(local[ab] as u8);
            leq.push(s.leq(a, b));
        }
    }
    // restriction of an ordered semigroup to a subsemigroup keeps all axioms
    let semigroup = OrderedSemigroup::from_flat_unchecked(m, table, leq);
    Ok(Substructure {
        semigroup,
        elements,
    })
}

/// `S/I`: the elements of `S \ I` plus an adjoined zero.
///
/// Quotient indices `0..m` are the elements of `S \ I` in ascending
/// order; index `m` is the zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesQuotient {
    pub base: OrderedSemigroup,
    pub ideal: Subset,
    pub quotient: OrderedSemigroup,
    /// Source index to quotient index; all of `I` maps to `zero`.
    pub mapping: Vec<usize>,
    pub zero: usize,
}

/// Builds the Rees factor with order `a ⪯ b` iff `a <= b` in `S` (for
/// `a, b ∉ I`) or `a = 0`, and validates the result.
pub fn rees_factor(s: &OrderedSemigroup, i: &Subset) -> Result<ReesQuotient, ExtensionError> {
    if i.is_empty() {
        return Err(ExtensionError::EmptySubset);
    }
    if !is_ideal(s, i).unwrap_or(false) {
        return Err(ExtensionError::NotAnIdeal);
    }
    let rest = i.complement().to_vec();
    let zero = rest.len();
    let m = zero + 1;
    let mut mapping = vec![zero; s.len()];
    for (q, &e) in rest.iter().enumerate() {
        mapping[e] = q;
    }
    let mut table = vec![zero as u8; m * m];
    let mut leq = vec![false; m * m];
    for (qa, &a) in rest.iter().enumerate() {
        for (qb, &b) in rest.iter().enumerate() {
            table[qa * m + qb] = mapping[s.mul(a, b)] as u8;
            leq[qa * m + qb] = s.leq(a, b);
        }
    }
    for q in 0..m {
        leq[zero * m + q] = true;
    }
    let quotient = OrderedSemigroup::from_flat(m, table, leq).map_err(|e| match e {
        ValidationError::Laws(v) => ExtensionError::QuotientInvalid(v),
        other => unreachable!("quotient shape is well formed: {other}"),
    })?;
    Ok(ReesQuotient {
        base: s.clone(),
        ideal: *i,
        quotient,
        mapping,
        zero,
    })
}

/// Both routes to the nil-extension verdict for one ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilExtensionPaths {
    /// `S/I` is a nil ordered semigroup.
    pub quotient_nil: bool,
    /// Every element has a power in `I`.
    pub powers_meet_ideal: bool,
}

pub fn nil_extension_paths(
    s: &OrderedSemigroup,
    i: &Subset,
) -> Result<NilExtensionPaths, ExtensionError> {
    let rees = rees_factor(s, i)?;
    let quotient_nil = classes::is_nil(&rees.quotient);
    let powers_meet_ideal = s.elements().all(|a| s.power_orbit(a).meets(i));
    if quotient_nil != powers_meet_ideal {
        let nil_in_quotient = classes::nilpotents(&rees.quotient);
        let element = s
            .elements()
            .find(|&a| nil_in_quotient.contains(rees.mapping[a]) != s.power_orbit(a).meets(i))
            .unwrap_or(0);
        return Err(ExtensionError::LemmaViolation {
            element,
            quotient_nilpotent: nil_in_quotient.contains(rees.mapping[element]),
            power_in_ideal: s.power_orbit(element).meets(i),
        });
    }
    Ok(NilExtensionPaths {
        quotient_nil,
        powers_meet_ideal,
    })
}

/// `S` is a nil extension of the ideal `I`; both routes must agree.
pub fn is_nil_extension(s: &OrderedSemigroup, i: &Subset) -> Result<bool, ExtensionError> {
    Ok(nil_extension_paths(s, i)?.quotient_nil)
}

/// Evidence that `S` is a nil extension of an ideal of a given class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilExtensionCertificate {
    pub base_ideal: Subset,
    pub class: BaseClass,
    /// Least `m >= 1` with `a^m` in the base ideal, per element.
    pub powers: BTreeMap<usize, usize>,
    /// The base is `Reg(S)`, found without scanning other ideals.
    pub fast_path: bool,
}

/// Why one candidate ideal was not accepted as a base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    NotInClass { ideal: Subset },
    NoPowerInIdeal { ideal: Subset, element: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleScan {
    pub certificate: Option<NilExtensionCertificate>,
    /// Rejections in scan order (fast-path candidate first, if it was an ideal).
    pub rejections: Vec<Rejection>,
}

enum Candidate {
    Accepted(NilExtensionCertificate),
    Rejected(Rejection),
}

fn try_base(
    s: &OrderedSemigroup,
    k: &Subset,
    class: BaseClass,
    fast_path: bool,
) -> Result<Candidate, ExtensionError> {
    let sub = induced_substructure(s, k)?;
    if !class.holds(&sub.semigroup) {
        return Ok(Candidate::Rejected(Rejection::NotInClass { ideal: *k }));
    }
    if !is_nil_extension(s, k)? {
        let element = s
            .elements()
            .find(|&a| !s.power_orbit(a).meets(k))
            .expect("some element misses the ideal");
        return Ok(Candidate::Rejected(Rejection::NoPowerInIdeal {
            ideal: *k,
            element,
        }));
    }
    let powers = s
        .elements()
        .map(|a| {
            (
                a,
                s.power_orbit(a)
                    .first_exponent_in(k)
                    .expect("power in ideal"),
            )
        })
        .collect();
    Ok(Candidate::Accepted(NilExtensionCertificate {
        base_ideal: *k,
        class,
        powers,
        fast_path,
    }))
}

/// Tries `Reg(S)` first, then every ideal in canonical order.
pub fn oracle_scan(s: &OrderedSemigroup, class: BaseClass) -> Result<OracleScan, ExtensionError> {
    let mut rejections = Vec::new();
    let reg = classes::reg_set(s);
    let mut tried_reg = false;
    if !reg.is_empty() && is_ideal(s, &reg).unwrap_or(false) {
        tried_reg = true;
        match try_base(s, &reg, class, true)? {
            Candidate::Accepted(cert) => {
                return Ok(OracleScan {
                    certificate: Some(cert),
                    rejections,
                })
            }
            Candidate::Rejected(r) => rejections.push(r),
        }
    }
    for k in all_ideals(s) {
        if tried_reg && k == reg {
            continue;
        }
        match try_base(s, &k, class, false)? {
            Candidate::Accepted(cert) => {
                return Ok(OracleScan {
                    certificate: Some(cert),
                    rejections,
                })
            }
            Candidate::Rejected(r) => rejections.push(r),
        }
    }
    Ok(OracleScan {
        certificate: None,
        rejections,
    })
}

/// A certificate that `S` is a nil extension of an ideal of `class`.
pub fn find_nil_extension_base(
    s: &OrderedSemigroup,
    class: BaseClass,
) -> Result<Option<NilExtensionCertificate>, ExtensionError> {
    Ok(oracle_scan(s, class)?.certificate)
}
