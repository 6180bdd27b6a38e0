use serde::{Deserialize, Serialize};

use super::{check_order, EnumerationError};

/// Position of a shard-restricted table enumeration.
///
/// `table_prefix` holds the fixed leading cells (row-major) shared by
/// every table of the shard; `resume_after`, when present, is the last
/// table already emitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCursor {
    pub n: usize,
    pub table_prefix: Vec<usize>,
    pub resume_after: Option<Vec<usize>>,
}

/// Checks every associativity triple whose four cells lie in `0..=pos`
/// and that touches cell `pos`.
fn consistent_at(n: usize, table: &[u8], pos: usize) -> bool {
    let filled = |i: usize, j: usize| i * n + j <= pos;
    for a in 0..n {
        for b in 0..n {
            if !filled(a, b) {
                continue;
            }
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                if !filled(b, c) || !filled(ab, c) {
                    continue;
                }
                let bc = table[b * n + c] as usize;
                if !filled(a, bc) {
                    continue;
                }
                let cells = [a * n + b, ab * n + c, b * n + c, a * n + bc];
                if !cells.contains(&pos) {
                    continue;
                }
                if table[ab * n + c] != table[a * n + bc] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographic stream of associative `n x n` tables, flattened
/// row-major, optionally restricted to a fixed prefix.
#[derive(Clone, Debug)]
pub struct SemigroupTables {
    n: usize,
    table: Vec<u8>,
    prefix_len: usize,
    started: bool,
    done: bool,
}

impl SemigroupTables {
    /// Tables whose first cells equal `prefix`.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self, EnumerationError> {
        check_order(n)?;
        assert!(prefix.len() <= n * n);
        let mut table = vec![0u8; n * n];
        let mut done = false;
        for (pos, &v) in prefix.iter().enumerate() {
            assert!(v < n, "prefix entry out of range");
            table[pos] = v as u8;
            if !consistent_at(n, &table, pos) {
                done = true;
            }
        }
        Ok(SemigroupTables {
            n,
            table,
            prefix_len: prefix.len(),
            started: false,
            done,
        })
    }

    /// Continues a shard after the table recorded in `cursor`.
    pub fn resume(cursor: &EnumerationCursor) -> Result<Self, EnumerationError> {
        let mut it = Self::with_prefix(cursor.n, &cursor.table_prefix)?;
        if let Some(last) = &cursor.resume_after {
            assert_eq!(last.len(), cursor.n * cursor.n);
            assert_eq!(
                &last[..cursor.table_prefix.len()],
                cursor.table_prefix.as_slice()
            );
            it.table = last.iter().map(|&v| v as u8).collect();
            it.started = true;
        }
        Ok(it)
    }

    /// Cursor positioned after the most recently emitted table.
    pub fn cursor(&self) -> EnumerationCursor {
        EnumerationCursor {
            n: self.n,
            table_prefix: self.table[..self.prefix_len]
                .iter()
                .map(|&v| v as usize)
                .collect(),
            resume_after: self
                .started
                .then(|| self.table.iter().map(|&v| v as usize).collect()),
        }
    }
}

impl Iterator for SemigroupTables {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let n = self.n;
        let cells = n * n;
        if self.prefix_len == cells {
            // fully fixed: at most one table
            self.done = true;
            self.started = true;
            return Some(self.table.clone());
        }
        let (mut pos, mut fresh) = if self.started {
            (cells - 1, false)
        } else {
            self.started = true;
            (self.prefix_len, true)
        };
        loop {
            if fresh {
                self.table[pos] = 0;
            } else if self.table[pos] as usize + 1 == n {
                if pos == self.prefix_len {
                    self.done = true;
                    return None;
                }
                pos -= 1;
                continue;
            } else {
                self.table[pos] += 1;
            }
            if consistent_at(n, &self.table, pos) {
                if pos + 1 == cells {
                    return Some(self.table.clone());
                }
                pos += 1;
                fresh = true;
            } else {
                fresh = false;
            }
        }
    }
}

/// Every associative table on `0..n` exactly once, lexicographically.
pub fn enumerate_semigroups(n: usize) -> Result<SemigroupTables, EnumerationError> {
    SemigroupTables::with_prefix(n, &[])
}

/// First rows that extend to at least a consistent prefix, in order.
pub(crate) fn first_rows(n: usize) -> Vec<Vec<usize>> {
    let mut rows = Vec::new();
    let mut table = vec![0u8; n * n];
    fn go(n: usize, pos: usize, table: &mut Vec<u8>, rows: &mut Vec<Vec<usize>>) {
        if pos == n {
            rows.push(table[..n].iter().map(|&v| v as usize).collect());
            return;
        }
        for v in 0..n {
            table[pos] = v as u8;
            if consistent_at(n, table, pos) {
                go(n, pos + 1, table, rows);
            }
        }
    }
    go(n, 0, &mut table, &mut rows);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::associativity_violations;

    fn naive(n: usize) -> Vec<Vec<u8>> {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            // most significant digit first gives lexicographic order
            let mut table = vec![0u8; cells];
            for cell in (0..cells).rev() {
                table[cell] = (code % n) as u8;
                code /= n;
            }
            if associativity_violations(n, &table).is_empty() {
                out.push(table);
            }
        }
        out
    }

    #[test]
    fn matches_naive_filter() {
        for n in 1..=3 {
            let got: Vec<_> = enumerate_semigroups(n).unwrap().collect();
            assert_eq!(got, naive(n), "order {n}");
        }
    }

    #[test]
    fn known_labeled_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_semigroups(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 8, 113, 3492]);
    }

    #[test]
    fn shards_partition_the_stream() {
        for n in 1..=4 {
            let whole: Vec<_> = enumerate_semigroups(n).unwrap().collect();
            let mut joined = Vec::new();
            for row in first_rows(n) {
                joined.extend(SemigroupTables::with_prefix(n, &row).unwrap());
            }
            assert_eq!(joined, whole, "order {n}");
        }
    }

    #[test]
    fn resume_continues_where_it_stopped() {
        let whole: Vec<_> = enumerate_semigroups(3).unwrap().collect();
        let mut it = enumerate_semigroups(3).unwrap();
        let head: Vec<_> = it.by_ref().take(40).collect();
        let cursor = it.cursor();
        let json = serde_json::to_string(&cursor).unwrap();
        let back: EnumerationCursor = serde_json::from_str(&json).unwrap();
        let tail: Vec<_> = SemigroupTables::resume(&back).unwrap().collect();
        assert_eq!([head, tail].concat(), whole);
    }
}
