//! Green's relations and (complete) semilattice congruences.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ideals::principal_ideals;
use crate::semigroup::OrderedSemigroup;
use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("relation is not a congruence")]
    NotACongruence,
    #[error("relation is not a complete semilattice congruence")]
    NotCompleteSemilattice,
    #[error("decomposition condition {condition} fails: {detail}")]
    DecompositionCondition { condition: u8, detail: String },
}

/// Whether a predicate re-checks its stated precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precondition {
    /// Check it and fail with an error if it does not hold.
    Verify,
    /// Trust the caller (sweeps over instances already filtered).
    Assume,
}

/// A partition of the carrier `0..n`.
///
/// Class labels are normalized so that classes are numbered in order
/// of their smallest member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EquivalenceRelation {
    class_id: Vec<usize>,
    classes: Vec<Subset>,
}

impl EquivalenceRelation {
    /// Builds the partition whose classes are the level sets of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_key(labels.len(), |i| labels[i])
    }

    /// Groups `0..n` by the value of `key`.
    pub fn from_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_id = Vec::with_capacity(n);
        let mut classes: Vec<Subset> = Vec::new();
        for i in 0..n {
            let next = ids.len();
            let id = *ids.entry(key(i)).or_insert(next);
            if id == classes.len() {
                classes.push(Subset::empty(n));
            }
            classes[id].insert(i);
            class_id.push(id);
        }
        EquivalenceRelation { class_id, classes }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_key(n, |i| i)
    }

    pub fn universal(n: usize) -> Self {
        Self::from_key(n, |_| ())
    }

    /// Carrier size.
    pub fn carrier_len(&self) -> usize {
        self.class_id.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.class_id[a]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_id
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_id[a] == self.class_id[b]
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &EquivalenceRelation) -> bool {
        self.classes.iter().all(|c| {
            let first = c.first().expect("classes are nonempty");
            c.iter().all(|x| coarser.related(first, x))
        })
    }

    pub fn intersection(&self, other: &EquivalenceRelation) -> EquivalenceRelation {
        Self::from_key(self.carrier_len(), |i| {
            (self.class_id[i], other.class_id[i])
        })
    }

    pub fn is_identity(&self) -> bool {
        self.class_count() == self.carrier_len()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count() == 1
    }
}

impl fmt::Debug for EquivalenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.classes.iter()).finish()
    }
}

impl Serialize for EquivalenceRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.classes.iter())
    }
}

/// The four Green's equivalences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenRelations {
    #[serde(rename = "L")]
    pub l: EquivalenceRelation,
    #[serde(rename = "R")]
    pub r: EquivalenceRelation,
    #[serde(rename = "J")]
    pub j: EquivalenceRelation,
    #[serde(rename = "H")]
    pub h: EquivalenceRelation,
}

/// `a L b` iff `L(a) = L(b)`, likewise for `R` and `J`; `H = L ∩ R`.
pub fn green_relations(s: &OrderedSemigroup) -> GreenRelations {
    let p = principal_ideals(s);
    let n = s.len();
    let l = EquivalenceRelation::from_key(n, |a| p.left[a].bits());
    let r = EquivalenceRelation::from_key(n, |a| p.right[a].bits());
    let j = EquivalenceRelation::from_key(n, |a| p.two_sided[a].bits());
    let h = l.intersection(&r);
    GreenRelations { l, r, j, h }
}

/// Left and right compatibility of `rho` with multiplication.
pub fn is_congruence(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> bool {
    for class in rho.classes() {
        let mut members = class.iter();
        let Some(a) = members.next() else { continue };
        // comparing every member with one representative suffices
        for b in members {
            for c in s.elements() {
                if !rho.related(s.mul(c, a), s.mul(c, b)) || !rho.related(s.mul(a, c), s.mul(b, c))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn semilattice_laws(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> bool {
    s.elements().all(|a| {
        rho.related(a, s.mul(a, a)) && s.elements().all(|b| rho.related(s.mul(a, b), s.mul(b, a)))
    })
}

fn completeness_law(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> bool {
    s.elements().all(|a| {
        s.elements()
            .all(|b| !s.leq(a, b) || rho.related(a, s.mul(a, b)))
    })
}

/// `a ρ a²` and `ab ρ ba` for all `a, b`.
pub fn is_semilattice_congruence(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
    pre: Precondition,
) -> Result<bool, RelationError> {
    if pre == Precondition::Verify && !is_congruence(s, rho) {
        return Err(RelationError::NotACongruence);
    }
    Ok(semilattice_laws(s, rho))
}

/// A semilattice congruence with `a <= b ⇒ a ρ ab`.
pub fn is_complete_semilattice_congruence(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
    pre: Precondition,
) -> Result<bool, RelationError> {
    Ok(is_semilattice_congruence(s, rho, pre)? && completeness_law(s, rho))
}

/// Every partition of `0..n` as a restricted-growth labelling, in
/// lexicographic order of the label vectors.
pub fn set_partitions(n: usize) -> Vec<EquivalenceRelation> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn go(pos: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<EquivalenceRelation>) {
        if pos == labels.len() {
            out.push(EquivalenceRelation::from_labels(labels));
            return;
        }
        for v in 0..=max + 1 {
            labels[pos] = v;
            go(pos + 1, max.max(v), labels, out);
        }
    }
    if n == 0 {
        return out;
    }
    go(1, 0, &mut labels, &mut out);
    out
}

/// All complete semilattice congruences, finest partitions first.
pub fn enumerate_complete_semilattice_congruences(
    s: &OrderedSemigroup,
) -> Vec<EquivalenceRelation> {
    let mut found: Vec<EquivalenceRelation> = set_partitions(s.len())
        .into_iter()
        .filter(|rho| is_congruence(s, rho) && semilattice_laws(s, rho) && completeness_law(s, rho))
        .collect();
    found.sort_by_key(|rho| std::cmp::Reverse(rho.class_count()));
    found
}

/// A semilattice `Y` of components `S_α` indexed by the classes of a
/// complete semilattice congruence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemilatticeDecomposition {
    #[serde(skip)]
    pub congruence: EquivalenceRelation,
    pub components: Vec<Subset>,
    /// `order[α][β]` iff `α ⪯ β`, i.e. `α = αβ`.
    pub order: Vec<Vec<bool>>,
    /// `product[α][β]` is the component containing `S_α S_β`.
    #[serde(skip)]
    pub product: Vec<Vec<usize>>,
}

fn condition(condition: u8, detail: String) -> RelationError {
    RelationError::DecompositionCondition { condition, detail }
}

/// Splits `s` along `rho` and checks the four decomposition conditions.
pub fn decomposition(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
) -> Result<SemilatticeDecomposition, RelationError> {
    if !is_complete_semilattice_congruence(s, rho, Precondition::Verify).unwrap_or(false) {
        return Err(RelationError::NotCompleteSemilattice);
    }
    let components = rho.classes().to_vec();
    let k = components.len();
    let reps: Vec<usize> = components.iter().map(|c| c.first().unwrap()).collect();
    let product: Vec<Vec<usize>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| rho.class_of(s.mul(reps[a], reps[b])))
                .collect()
        })
        .collect();
    let order: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| product[a][b] == a).collect())
        .collect();

    // 1. pairwise disjoint, 2. covering
    let mut union = s.empty_set();
    for (a, ca) in components.iter().enumerate() {
        if union.intersects(ca) {
            return Err(condition(
                1,
                format!("component {a} overlaps an earlier one"),
            ));
        }
        union = union.union(ca);
    }
    if !union.is_full() {
        return Err(condition(2, "components do not cover the carrier".into()));
    }
    // 3. S_α S_β ⊆ S_{αβ}; with α = β this is closure of each component
    for a in 0..k {
        for b in 0..k {
            let prod = s.product_set(&components[a], &components[b]);
            if !prod.is_subset(&components[product[a][b]]) {
                return Err(condition(
                    3,
                    format!("S_{a} S_{b} leaves S_{}", product[a][b]),
                ));
            }
        }
    }
    // Y must be a semilattice under ⪯
    for a in 0..k {
        if !order[a][a] {
            return Err(condition(
                3,
                format!("component {a} is not idempotent in Y"),
            ));
        }
        for b in 0..k {
            if a != b && order[a][b] && order[b][a] {
                return Err(condition(
                    3,
                    format!("order on Y not antisymmetric at ({a}, {b})"),
                ));
            }
            if product[a][b] != product[b][a] {
                return Err(condition(3, format!("Y not commutative at ({a}, {b})")));
            }
        }
    }
    // 4. S_β ∩ (S_α] ≠ ∅ ⇒ β ⪯ α
    for a in 0..k {
        let below = s.downset(&components[a]);
        for b in 0..k {
            if components[b].intersects(&below) && !order[b][a] {
                return Err(condition(
                    4,
                    format!("S_{b} meets (S_{a}] but {b} is not below {a}"),
                ));
            }
        }
    }
    Ok(SemilatticeDecomposition {
        congruence: rho.clone(),
        components,
        order,
        product,
    })
}
