//! Finite ordered semigroups: validation, element primitives and a
//! canonical isomorphism-class key.
//!
//! Elements are the dense indices `0..n`. All structure lives in the
//! Cayley table and the order matrix; a value of [`OrderedSemigroup`]
//! can only be obtained through [`OrderedSemigroup::validate`] (or from
//! the enumerator, which checks the same axioms), so every instance in
//! circulation is associative, partially ordered and compatible.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{Subset, MAX_CARRIER};

/// Which side of a product a compatibility violation was found on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `a <= b` but not `x·a <= x·b`.
    Left,
    /// `a <= b` but not `a·x <= b·x`.
    Right,
}

/// The partial-order axiom a relation fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum OrderDefect {
    NotReflexive,
    NotAntisymmetric,
    /// `i <= via <= j` but not `i <= j`.
    NotTransitive {
        via: usize,
    },
}

/// One violated law, reported by [`OrderedSemigroup::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `(i·j)·k != i·(j·k)`.
    NotAssociative { i: usize, j: usize, k: usize },
    NotPartialOrder {
        reason: OrderDefect,
        pair: (usize, usize),
    },
    /// `a <= b` but the product with `x` on `side` is not ordered.
    NotCompatible {
        a: usize,
        b: usize,
        x: usize,
        side: Side,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotAssociative { i, j, k } => {
                write!(f, "not associative at ({i}, {j}, {k})")
            }
            Violation::NotPartialOrder {
                reason,
                pair: (i, j),
            } => match reason {
                OrderDefect::NotReflexive => write!(f, "order not reflexive at {i}"),
                OrderDefect::NotAntisymmetric => {
                    write!(f, "order not antisymmetric: {i} <= {j} and {j} <= {i}")
                }
                OrderDefect::NotTransitive { via } => {
                    write!(
                        f,
                        "order not transitive: {i} <= {via} <= {j} but not {i} <= {j}"
                    )
                }
            },
            Violation::NotCompatible { a, b, x, side } => match side {
                Side::Left => write!(f, "not compatible: {a} <= {b} but not {x}·{a} <= {x}·{b}"),
                Side::Right => write!(f, "not compatible: {a} <= {b} but not {a}·{x} <= {b}·{x}"),
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("carrier of size {0} exceeds the supported maximum of {MAX_CARRIER}")]
    TooLarge(usize),
    #[error("{what} has {found} rows, expected {expected}")]
    RowCount {
        what: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("{what} row {row} has {found} entries, expected {expected}")]
    Ragged {
        what: &'static str,
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is outside 0..{n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("order entry ({row}, {col}) = {value} is not 0 or 1")]
    NotBoolean { row: usize, col: usize, value: u64 },
    #[error("{} law violation(s), first: {}", .0.len(), .0[0])]
    Laws(Vec<Violation>),
}

impl ValidationError {
    /// The law violations, if this error is a law failure rather than a
    /// malformed input.
    pub fn violations(&self) -> Option<&[Violation]> {
        match self {
            ValidationError::Laws(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("malformed instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// The on-disk instance format: `{"n": .., "table": [[..]..], "leq": [[0|1..]..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
    pub leq: Vec<Vec<u64>>,
}

/// A finite semigroup together with a compatible partial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    n: usize,
    table: Vec<u8>,
    leq: Vec<bool>,
    /// `down[h]` = mask of `{t : t <= h}`.
    down: Vec<u64>,
}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedSemigroup")
            .field("n", &self.n)
            .field("table", &self.table_rows())
            .field("leq", &self.leq_rows())
            .finish()
    }
}

/// Collects every associativity failure of a flat `n x n` table.
pub(crate) fn associativity_violations(n: usize, table: &[u8]) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j] as usize;
            for k in 0..n {
                let jk = table[j * n + k] as usize;
                if table[ij * n + k] != table[i * n + jk] {
                    out.push(Violation::NotAssociative { i, j, k });
                }
            }
        }
    }
    out
}

pub(crate) fn order_violations(n: usize, leq: &[bool]) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 0..n {
        if !leq[i * n + i] {
            out.push(Violation::NotPartialOrder {
                reason: OrderDefect::NotReflexive,
                pair: (i, i),
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if leq[i * n + j] && leq[j * n + i] {
                out.push(Violation::NotPartialOrder {
                    reason: OrderDefect::NotAntisymmetric,
                    pair: (i, j),
                });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || leq[i * n + j] {
                continue;
            }
            if let Some(via) = (0..n).find(|&k| leq[i * n + k] && leq[k * n + j]) {
                out.push(Violation::NotPartialOrder {
                    reason: OrderDefect::NotTransitive { via },
                    pair: (i, j),
                });
            }
        }
    }
    out
}

pub(crate) fn compatibility_violations(n: usize, table: &[u8], leq: &[bool]) -> Vec<Violation> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq[a * n + b] {
                continue;
            }
            for x in 0..n {
                let (xa, xb) = (table[x * n + a] as usize, table[x * n + b] as usize);
                if !leq[xa * n + xb] {
                    out.push(Violation::NotCompatible {
                        a,
                        b,
                        x,
                        side: Side::Left,
                    });
                }
                let (ax, bx) = (table[a * n + x] as usize, table[b * n + x] as usize);
                if !leq[ax * n + bx] {
                    out.push(Violation::NotCompatible {
                        a,
                        b,
                        x,
                        side: Side::Right,
                    });
                }
            }
        }
    }
    out
}

/// Fast yes/no compatibility test used by the enumerator.
pub(crate) fn is_compatible(n: usize, table: &[u8], leq: &[bool]) -> bool {
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq[a * n + b] {
                continue;
            }
            for x in 0..n {
                if !leq[table[x * n + a] as usize * n + table[x * n + b] as usize]
                    || !leq[table[a * n + x] as usize * n + table[b * n + x] as usize]
                {
                    return false;
                }
            }
        }
    }
    true
}

impl OrderedSemigroup {
    /// Checks the raw data and seals it into an instance.
    ///
    /// Shape problems (ragged rows, out-of-range entries) are reported
    /// on their own; otherwise every violated associativity triple,
    /// order axiom and compatibility triple is collected.
    pub fn validate(
        n: usize,
        raw_table: &[Vec<usize>],
        raw_leq: &[Vec<bool>],
    ) -> Result<Self, ValidationError> {
        check_shape(n, raw_table, "table")?;
        check_shape(n, raw_leq, "leq")?;
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in raw_table.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(ValidationError::OutOfRange { row, col, value, n });
                }
                table.push(value as u8);
            }
        }
        let leq: Vec<bool> = raw_leq.iter().flatten().copied().collect();
        Self::from_flat(n, table, leq)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u8>,
        leq: Vec<bool>,
    ) -> Result<Self, ValidationError> {
        let mut violations = associativity_violations(n, &table);
        violations.extend(order_violations(n, &leq));
        violations.extend(compatibility_violations(n, &table, &leq));
        if !violations.is_empty() {
            return Err(ValidationError::Laws(violations));
        }
        Ok(Self::from_flat_unchecked(n, table, leq))
    }

    /// Caller guarantees the three axioms.
    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u8>, leq: Vec<bool>) -> Self {
        debug_assert!((1..=MAX_CARRIER).contains(&n));
        let mut down = vec![0u64; n];
        for t in 0..n {
            for h in 0..n {
                if leq[t * n + h] {
                    down[h] |= 1 << t;
                }
            }
        }
        OrderedSemigroup {
            n,
            table,
            leq,
            down,
        }
    }

    pub fn from_instance(instance: &Instance) -> Result<Self, ValidationError> {
        check_shape(instance.n, &instance.leq, "leq")?;
        let mut leq = Vec::with_capacity(instance.n);
        for (row, entries) in instance.leq.iter().enumerate() {
            let mut out = Vec::with_capacity(entries.len());
            for (col, &value) in entries.iter().enumerate() {
                out.push(match value {
                    0 => false,
                    1 => true,
                    _ => return Err(ValidationError::NotBoolean { row, col, value }),
                });
            }
            leq.push(out);
        }
        Self::validate(instance.n, &instance.table, &leq)
    }

    pub fn from_json_str(text: &str) -> Result<Self, InstanceError> {
        let instance: Instance = serde_json::from_str(text)?;
        Ok(Self::from_instance(&instance)?)
    }

    pub fn to_instance(&self) -> Instance {
        Instance {
            n: self.n,
            table: self.table_rows(),
            leq: (0..self.n)
                .map(|i| (0..self.n).map(|j| self.leq(i, j) as u64).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_instance()).expect("instance serializes")
    }

    /// Carrier size.
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; carriers are nonempty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// `a <= b`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// `a < b`, i.e. `a <= b` and `a != b`.
    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(|row| row.to_vec()).collect()
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.n)
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.n)
    }

    /// `(h]`, the principal downset of a single element.
    #[inline]
    pub fn below(&self, h: usize) -> Subset {
        Subset::from_bits(self.n, self.down[h])
    }

    /// `(H] = {t : t <= h for some h in H}`.
    pub fn downset(&self, h: &Subset) -> Subset {
        let bits = h.iter().fold(0u64, |acc, x| acc | self.down[x]);
        Subset::from_bits(self.n, bits)
    }

    /// True when `t` lies in `(H]`.
    #[inline]
    pub fn in_downset_of(&self, t: usize, h: usize) -> bool {
        self.leq(t, h)
    }

    /// `A·B = {a·b : a in A, b in B}`.
    pub fn product_set(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `a^k` computed as the left-to-right `k`-fold product, `k >= 1`.
    pub fn power(&self, a: usize, k: u64) -> usize {
        assert!(k >= 1, "semigroup powers start at exponent 1");
        if k <= self.n as u64 + 1 {
            let mut acc = a;
            for _ in 1..k {
                acc = self.mul(acc, a);
            }
            return acc;
        }
        self.power_orbit(a).power(k)
    }

    /// The distinct powers `a, a^2, ...` together with the pre-period
    /// and period of the sequence.
    pub fn power_orbit(&self, a: usize) -> PowerOrbit {
        let mut seen = vec![usize::MAX; self.n];
        let mut orbit = Vec::new();
        let mut current = a;
        loop {
            if seen[current] != usize::MAX {
                let first = seen[current];
                return PowerOrbit {
                    element: a,
                    index_len: first,
                    period: orbit.len() - first,
                    orbit,
                };
            }
            seen[current] = orbit.len();
            orbit.push(current);
            current = self.mul(current, a);
        }
    }

    /// Relabels the carrier: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> OrderedSemigroup {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut table = vec![0u8; n * n];
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
                leq[perm[i] * n + perm[j]] = self.leq(i, j);
            }
        }
        OrderedSemigroup::from_flat_unchecked(n, table, leq)
    }

    /// Isomorphism-class key: the lexicographically least encoding of
    /// `(table, leq)` over all relabelings of the carrier.
    ///
    /// Brute force over `n!` permutations; intended for `n <= 6`.
    pub fn canonical_form(&self) -> CanonicalForm {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.encode(&perm);
        let mut candidate = best.clone();
        // Heap's algorithm, iterative form.
        let mut c = vec![0usize; n];
        let mut i = 1;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                self.encode_into(&perm, &mut candidate);
                if candidate < best {
                    std::mem::swap(&mut best, &mut candidate);
                }
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        CanonicalForm(best)
    }

    fn encode(&self, perm: &[usize]) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode_into(perm, &mut out);
        out
    }

    fn encode_into(&self, perm: &[usize], out: &mut Vec<u8>) {
        let n = self.n;
        out.clear();
        out.resize(1 + 2 * n * n, 0);
        out[0] = n as u8;
        let (table_part, leq_part) = out[1..].split_at_mut(n * n);
        for i in 0..n {
            for j in 0..n {
                let cell = perm[i] * n + perm[j];
                table_part[cell] = perm[self.mul(i, j)] as u8;
                leq_part[cell] = self.leq(i, j) as u8;
            }
        }
    }
}

fn check_shape<T>(n: usize, rows: &[Vec<T>], what: &'static str) -> Result<(), ValidationError> {
    if n == 0 {
        return Err(ValidationError::EmptyCarrier);
    }
    if n > MAX_CARRIER {
        return Err(ValidationError::TooLarge(n));
    }
    if rows.len() != n {
        return Err(ValidationError::RowCount {
            what,
            found: rows.len(),
            expected: n,
        });
    }
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(ValidationError::Ragged {
                what,
                row,
                found: entries.len(),
                expected: n,
            });
        }
    }
    Ok(())
}

/// Byte key identifying an isomorphism class of ordered semigroups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering, used as the instance key in reports.
    pub fn to_hex(&self) -> String {
        use std::fmt::Write;
        self.0
            .iter()
            .fold(String::with_capacity(2 * self.0.len()), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// The sequence of powers of one element.
///
/// `orbit[k]` is `a^(k+1)`. After `index_len` distinct leading powers the
/// sequence cycles with length `period`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerOrbit {
    pub element: usize,
    pub index_len: usize,
    pub period: usize,
    pub orbit: Vec<usize>,
}

impl PowerOrbit {
    /// `a^k` for any `k >= 1`.
    pub fn power(&self, k: u64) -> usize {
        assert!(k >= 1);
        let k = (k - 1) as usize;
        if k < self.orbit.len() {
            self.orbit[k]
        } else {
            let offset = (k - self.index_len) % self.period;
            self.orbit[self.index_len + offset]
        }
    }

    /// Smallest `m >= 1` with `a^m` in `set`.
    pub fn first_exponent_in(&self, set: &Subset) -> Option<usize> {
        self.orbit
            .iter()
            .position(|&x| set.contains(x))
            .map(|p| p + 1)
    }

    pub fn meets(&self, set: &Subset) -> bool {
        self.orbit.iter().any(|&x| set.contains(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ch2_validates() {
        let s = OrderedSemigroup::validate(
            2,
            &[vec![0, 0], vec![0, 1]],
            &[vec![true, true], vec![false, true]],
        )
        .unwrap();
        assert_eq!(s.mul(1, 1), 1);
        assert!(s.lt(0, 1));
        assert!(!s.lt(1, 1));
    }

    #[test]
    fn one_minus_x_is_not_associative() {
        let err = OrderedSemigroup::validate(
            2,
            &[vec![1, 1], vec![0, 0]],
            &[vec![true, false], vec![false, true]],
        )
        .unwrap_err();
        let v = err.violations().unwrap();
        assert!(v.contains(&Violation::NotAssociative { i: 0, j: 0, k: 0 }));
        // every reported triple really fails
        let t = [[1usize, 1], [0, 0]];
        for viol in v {
            let Violation::NotAssociative { i, j, k } = *viol else {
                panic!("unexpected {viol:?}");
            };
            assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
        }
        // (x·y)·z = 1 - (1 - x) = x and x·(y·z) = 1 - x never agree
        assert_eq!(v.len(), 8);
    }

    #[test]
    fn ordered_group_is_not_compatible() {
        let err = OrderedSemigroup::validate(
            2,
            &[vec![0, 1], vec![1, 0]],
            &[vec![true, true], vec![false, true]],
        )
        .unwrap_err();
        let v = err.violations().unwrap();
        assert!(v.contains(&Violation::NotCompatible {
            a: 0,
            b: 1,
            x: 1,
            side: Side::Left
        }));
        assert!(v.contains(&Violation::NotCompatible {
            a: 0,
            b: 1,
            x: 1,
            side: Side::Right
        }));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn order_axioms_reported() {
        let table = vec![vec![0; 3]; 3];
        let leq = vec![
            vec![false, true, false],
            vec![true, true, true],
            vec![false, false, true],
        ];
        let err = OrderedSemigroup::validate(3, &table, &leq).unwrap_err();
        let v = err.violations().unwrap();
        assert!(v.contains(&Violation::NotPartialOrder {
            reason: OrderDefect::NotReflexive,
            pair: (0, 0)
        }));
        assert!(v.contains(&Violation::NotPartialOrder {
            reason: OrderDefect::NotAntisymmetric,
            pair: (0, 1)
        }));
        assert!(v.contains(&Violation::NotPartialOrder {
            reason: OrderDefect::NotTransitive { via: 1 },
            pair: (0, 2)
        }));
    }

    #[test]
    fn shape_errors() {
        let ragged = OrderedSemigroup::validate(2, &[vec![0, 0], vec![0]], &vec![vec![true; 2]; 2]);
        assert!(matches!(
            ragged,
            Err(ValidationError::Ragged { row: 1, .. })
        ));
        let range =
            OrderedSemigroup::validate(2, &[vec![0, 2], vec![0, 0]], &vec![vec![true; 2]; 2]);
        assert!(matches!(
            range,
            Err(ValidationError::OutOfRange { value: 2, .. })
        ));
        assert!(matches!(
            OrderedSemigroup::validate(0, &[], &[]),
            Err(ValidationError::EmptyCarrier)
        ));
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(OrderedSemigroup::from_json_str(r#"{"n":1,"table":[[0]],"leq":[[1]]}"#).is_ok());
        assert!(matches!(
            OrderedSemigroup::from_json_str(r#"{"n":1,"table":[[0]],"leq":[[2]]}"#),
            Err(InstanceError::Invalid(ValidationError::NotBoolean { .. }))
        ));
        assert!(matches!(
            OrderedSemigroup::from_json_str(r#"{"n":2,"table":[[0,0],[0]],"leq":[[1,0],[0,1]]}"#),
            Err(InstanceError::Invalid(ValidationError::Ragged { .. }))
        ));
        assert!(matches!(
            OrderedSemigroup::from_json_str(r#"{"n":1,"table":[[0]],"leq":[[-1]]}"#),
            Err(InstanceError::Json(_))
        ));
        assert!(matches!(
            OrderedSemigroup::from_json_str(r#"{"n":1,"table":[[0]]"#),
            Err(InstanceError::Json(_))
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let text = r#"{"n":2,"table":[[0,0],[0,1]],"leq":[[1,1],[0,1]]}"#;
        let s = OrderedSemigroup::from_json_str(text).unwrap();
        assert_eq!(s.to_json(), text);
    }

    #[test]
    fn downset_examples() {
        let ch2 = fixtures::ch2();
        assert_eq!(ch2.downset(&Subset::singleton(2, 1)).to_vec(), vec![0, 1]);
        for s in fixtures::all() {
            assert!(s.downset(&s.empty_set()).is_empty());
            assert!(s.downset(&s.full_set()).is_full());
        }
    }

    #[test]
    fn power_examples() {
        assert_eq!(fixtures::z2g().power(1, 2), 0);
        assert_eq!(fixtures::zs2().power(1, 2), 0);
        assert_eq!(fixtures::lz2().power(0, 5), 0);
        assert_eq!(fixtures::z2g().power(1, 1_000_001), 1);
    }

    #[test]
    fn orbit_examples() {
        let zs2 = fixtures::zs2().power_orbit(1);
        assert_eq!(
            (zs2.orbit.as_slice(), zs2.index_len, zs2.period),
            (&[1, 0][..], 1, 1)
        );
        let z2g = fixtures::z2g().power_orbit(1);
        assert_eq!(
            (z2g.orbit.as_slice(), z2g.index_len, z2g.period),
            (&[1, 0][..], 0, 2)
        );
        let t1 = fixtures::t1().power_orbit(0);
        assert_eq!(
            (t1.orbit.as_slice(), t1.index_len, t1.period),
            (&[0][..], 0, 1)
        );
    }

    #[test]
    fn canonical_form_examples() {
        let lz2 = fixtures::lz2();
        assert_eq!(lz2.canonical_form(), lz2.relabel(&[1, 0]).canonical_form());
        let right_zero = OrderedSemigroup::validate(
            2,
            &[vec![0, 1], vec![0, 1]],
            &[vec![true, false], vec![false, true]],
        )
        .unwrap();
        assert_ne!(lz2.canonical_form(), right_zero.canonical_form());
        assert_ne!(
            fixtures::ch2().canonical_form(),
            fixtures::z2g().canonical_form()
        );
    }
}
