//! Exhaustive sweeps: per-order census of class flags and theorem
//! agreement, with deterministic sharded parallelism and checkpoints.
//!
//! The table stream of order `n` is split into shards by first row.
//! Shards are evaluated concurrently and merged in shard order; all
//! census fields are sums, so the result does not depend on the number
//! of worker threads. Counterexamples are sorted by instance key.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::ops::Range;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::tables::{first_rows, SemigroupTables};
use super::{check_order, enumerate_posets, EnumerationCursor, EnumerationError};
use crate::classes::{class_report, is_left_group_like, is_left_group_like_lgo};
use crate::extension::{nil_extension_paths, ExtensionError};
use crate::ideals::all_ideals;
use crate::semigroup::{is_compatible, Instance, OrderedSemigroup};
use crate::subset::Subset;
use crate::theorems::{evaluate, Theorem, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCounts {
    pub regular: u64,
    pub group_like: u64,
    pub left_group_like: u64,
    pub clifford: u64,
    pub left_clifford: u64,
    pub nil: u64,
    pub has_zero: u64,
}

impl FlagCounts {
    fn absorb(&mut self, o: &FlagCounts) {
        self.regular += o.regular;
        self.group_like += o.group_like;
        self.left_group_like += o.left_group_like;
        self.clifford += o.clifford;
        self.left_clifford += o.left_clifford;
        self.nil += o.nil;
        self.has_zero += o.has_zero;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub instances: u64,
    pub predicate_true: u64,
    pub oracle_true: u64,
    pub agree: u64,
    pub disagree: u64,
}

impl TheoremTally {
    fn absorb(&mut self, o: &TheoremTally) {
        self.instances += o.instances;
        self.predicate_true += o.predicate_true;
        self.oracle_true += o.oracle_true;
        self.agree += o.agree;
        self.disagree += o.disagree;
    }

    /// Percentage of instances on which predicate and oracle agree.
    pub fn agreement_rate(&self) -> f64 {
        if self.instances == 0 {
            100.0
        } else {
            100.0 * self.agree as f64 / self.instances as f64
        }
    }
}

/// Counts over every labeled ordered semigroup of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub order: usize,
    pub instances: u64,
    pub flags: FlagCounts,
    pub theorems: BTreeMap<Theorem, TheoremTally>,
    /// Instances where the two left-group-like tests differ.
    pub lgo_mismatches: u64,
    /// (instance, ideal) pairs on which both nil-extension routes ran.
    pub lemma_pairs: u64,
    pub lemma_violations: u64,
}

impl Census {
    pub fn empty(order: usize, theorems: &[Theorem]) -> Self {
        Census {
            order,
            instances: 0,
            flags: FlagCounts::default(),
            theorems: theorems
                .iter()
                .map(|&t| (t, TheoremTally::default()))
                .collect(),
            lgo_mismatches: 0,
            lemma_pairs: 0,
            lemma_violations: 0,
        }
    }

    pub fn absorb(&mut self, other: &Census) {
        assert_eq!(self.order, other.order);
        self.instances += other.instances;
        self.flags.absorb(&other.flags);
        for (t, tally) in &other.theorems {
            self.theorems.entry(*t).or_default().absorb(tally);
        }
        self.lgo_mismatches += other.lgo_mismatches;
        self.lemma_pairs += other.lemma_pairs;
        self.lemma_violations += other.lemma_violations;
    }

    pub fn disagreements(&self) -> u64 {
        self.theorems.values().map(|t| t.disagree).sum()
    }

    /// No theorem disagreement and no anomaly.
    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0 && self.lgo_mismatches == 0 && self.lemma_violations == 0
    }
}

/// A falsifying event other than a theorem disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "anomaly", rename_all = "snake_case")]
pub enum Anomaly {
    /// The definition of left group like and the `a ∈ (aSab]` form differ.
    LgoMismatch {
        instance: Instance,
        left_group_like: bool,
        lgo_form: bool,
    },
    /// The Rees-quotient and power-membership routes disagree, or the
    /// quotient failed validation.
    NilExtension {
        instance: Instance,
        ideal: Option<Subset>,
        error: String,
    },
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub theorems: Vec<Theorem>,
    pub jobs: usize,
    /// Run both nil-extension routes on every ideal of every instance.
    pub lemma_checks: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            theorems: Theorem::ALL.to_vec(),
            jobs: 1,
            lemma_checks: true,
        }
    }
}

/// The result of evaluating a range of shards.
#[derive(Clone, Debug)]
pub struct SweepBatch {
    pub census: Census,
    pub counterexamples: Vec<VerificationReport>,
    pub anomalies: Vec<Anomaly>,
}

impl SweepBatch {
    fn empty(order: usize, theorems: &[Theorem]) -> Self {
        SweepBatch {
            census: Census::empty(order, theorems),
            counterexamples: Vec::new(),
            anomalies: Vec::new(),
        }
    }

    fn absorb(&mut self, other: SweepBatch) {
        self.census.absorb(&other.census);
        self.counterexamples.extend(other.counterexamples);
        self.anomalies.extend(other.anomalies);
    }

    fn sort(&mut self) {
        self.counterexamples
            .sort_by(|a, b| (&a.instance_key, a.theorem).cmp(&(&b.instance_key, b.theorem)));
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("checkpoint I/O: {0}")]
    Io(#[from] io::Error),
    #[error("checkpoint is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// A prepared sweep over the ordered semigroups of one order.
pub struct Sweep {
    n: usize,
    shards: Vec<Vec<usize>>,
    posets: Vec<Vec<bool>>,
    options: SweepOptions,
    pool: rayon::ThreadPool,
}

impl Sweep {
    pub fn new(n: usize, options: SweepOptions) -> Result<Self, SweepError> {
        check_order(n)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs.max(1))
            .build()?;
        Ok(Sweep {
            n,
            shards: first_rows(n),
            posets: enumerate_posets(n)?,
            options,
            pool,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn shard_count(&self) -> usize {
        self.shards.len()
    }

    /// First row fixed by shard `i`.
    pub fn shard_prefix(&self, i: usize) -> &[usize] {
        &self.shards[i]
    }

    pub fn cursor_at(&self, shard: usize) -> EnumerationCursor {
        EnumerationCursor {
            n: self.n,
            table_prefix: self.shards.get(shard).cloned().unwrap_or_default(),
            resume_after: None,
        }
    }

    /// Evaluates shards `range` and merges them in shard order.
    pub fn run_range(&self, range: Range<usize>) -> SweepBatch {
        let results: Vec<SweepBatch> = self
            .pool
            .install(|| range.into_par_iter().map(|i| self.run_shard(i)).collect());
        let mut batch = SweepBatch::empty(self.n, &self.options.theorems);
        for r in results {
            batch.absorb(r);
        }
        batch.sort();
        batch
    }

    pub fn run_all(&self) -> SweepBatch {
        self.run_range(0..self.shard_count())
    }

    fn run_shard(&self, shard: usize) -> SweepBatch {
        let mut batch = SweepBatch::empty(self.n, &self.options.theorems);
        let tables =
            SemigroupTables::with_prefix(self.n, &self.shards[shard]).expect("order checked");
        for table in tables {
            for leq in &self.posets {
                if is_compatible(self.n, &table, leq) {
                    let s =
                        OrderedSemigroup::from_flat_unchecked(self.n, table.clone(), leq.clone());
                    self.examine(&s, &mut batch);
                }
            }
        }
        batch
    }

    fn examine(&self, s: &OrderedSemigroup, batch: &mut SweepBatch) {
        let census = &mut batch.census;
        census.instances += 1;
        let report = class_report(s);
        let f = &mut census.flags;
        f.regular += report.flags.regular as u64;
        f.group_like += report.flags.group_like as u64;
        f.left_group_like += report.flags.left_group_like as u64;
        f.clifford += report.flags.clifford as u64;
        f.left_clifford += report.flags.left_clifford as u64;
        f.nil += report.flags.nil as u64;
        f.has_zero += report.zero.is_some() as u64;

        let lgl = is_left_group_like(s);
        let lgo = is_left_group_like_lgo(s);
        if lgl != lgo {
            census.lgo_mismatches += 1;
            batch.anomalies.push(Anomaly::LgoMismatch {
                instance: s.to_instance(),
                left_group_like: lgl,
                lgo_form: lgo,
            });
        }

        if self.options.lemma_checks {
            for ideal in all_ideals(s) {
                census.lemma_pairs += 1;
                if let Err(e) = nil_extension_paths(s, &ideal) {
                    census.lemma_violations += 1;
                    batch.anomalies.push(Anomaly::NilExtension {
                        instance: s.to_instance(),
                        ideal: Some(ideal),
                        error: e.to_string(),
                    });
                }
            }
        }

        for &theorem in &self.options.theorems {
            let tally = census.theorems.entry(theorem).or_default();
            tally.instances += 1;
            match evaluate(s, theorem) {
                Ok(eval) => {
                    tally.predicate_true += eval.predicate_verdict() as u64;
                    tally.oracle_true += eval.oracle_verdict() as u64;
                    if eval.agree() {
                        tally.agree += 1;
                    } else {
                        tally.disagree += 1;
                        batch
                            .counterexamples
                            .push(VerificationReport::from_evaluation(s, eval));
                    }
                }
                Err(e) => {
                    // the oracle itself hit a falsified lemma; count it against the theorem
                    tally.disagree += 1;
                    if matches!(e, ExtensionError::LemmaViolation { .. }) {
                        census.lemma_violations += 1;
                    }
                    batch.anomalies.push(Anomaly::NilExtension {
                        instance: s.to_instance(),
                        ideal: None,
                        error: e.to_string(),
                    });
                }
            }
        }
    }
}

/// Census of every ordered semigroup of order `n`.
pub fn census(n: usize, options: SweepOptions) -> Result<SweepBatch, SweepError> {
    Ok(Sweep::new(n, options)?.run_all())
}

/// Resumable state of a multi-order sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCheckpoint {
    pub theorems: Vec<Theorem>,
    pub lemma_checks: bool,
    /// Censuses of orders already finished, ascending.
    pub completed: Vec<Census>,
    /// Next shard to evaluate.
    pub cursor: EnumerationCursor,
    pub next_shard: usize,
    /// Counts accumulated so far for `cursor.n`.
    pub counts: Census,
}

impl SweepCheckpoint {
    pub fn load(path: &Path) -> Result<Self, SweepError> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    /// Writes atomically via a sibling temporary file.
    pub fn save(&self, path: &Path) -> Result<(), SweepError> {
        let mut tmp = PathBuf::from(path);
        tmp.set_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    /// One census per finished order, ascending.
    pub censuses: Vec<Census>,
    /// False when the run stopped early at `max_batches`.
    pub complete: bool,
}

/// Sweeps orders `1..=max_order`, handing every batch to `sink` and,
/// when `checkpoint` is given, saving progress after each batch and
/// resuming from it if the file already exists.
///
/// `batch_shards` shards are evaluated per batch; `max_batches` stops
/// the run early (used to simulate interruption).
pub fn run_sweep<F>(
    max_order: usize,
    options: &SweepOptions,
    checkpoint: Option<&Path>,
    batch_shards: usize,
    max_batches: Option<usize>,
    mut sink: F,
) -> Result<SweepOutcome, SweepError>
where
    F: FnMut(&SweepBatch) -> io::Result<()>,
{
    check_order(max_order)?;
    let batch_shards = batch_shards.max(1);
    let mut state = match checkpoint {
        Some(path) if path.exists() => {
            let cp = SweepCheckpoint::load(path)?;
            if cp.theorems != options.theorems || cp.lemma_checks != options.lemma_checks {
                return Err(SweepError::CheckpointMismatch(
                    "theorem selection or lemma checks differ from the checkpointed run".into(),
                ));
            }
            if cp.cursor.n > max_order + 1 || cp.completed.len() + 1 != cp.cursor.n {
                return Err(SweepError::CheckpointMismatch(format!(
                    "checkpoint is at order {} with {} completed orders",
                    cp.cursor.n,
                    cp.completed.len()
                )));
            }
            cp
        }
        _ => SweepCheckpoint {
            theorems: options.theorems.clone(),
            lemma_checks: options.lemma_checks,
            completed: Vec::new(),
            cursor: EnumerationCursor {
                n: 1,
                table_prefix: Vec::new(),
                resume_after: None,
            },
            next_shard: 0,
            counts: Census::empty(1, &options.theorems),
        },
    };
    let mut batches = 0usize;
    while state.cursor.n <= max_order {
        let sweep = Sweep::new(state.cursor.n, options.clone())?;
        let fresh_order = state.next_shard == 0 && state.cursor.table_prefix.is_empty();
        if !fresh_order
            && state.next_shard < sweep.shard_count()
            && sweep.shard_prefix(state.next_shard) != state.cursor.table_prefix.as_slice()
        {
            return Err(SweepError::CheckpointMismatch(format!(
                "shard {} of order {} does not start with {:?}",
                state.next_shard, state.cursor.n, state.cursor.table_prefix
            )));
        }
        while state.next_shard < sweep.shard_count() {
            if max_batches.is_some_and(|m| batches >= m) {
                return Ok(SweepOutcome {
                    censuses: state.completed,
                    complete: false,
                });
            }
            let end = (state.next_shard + batch_shards).min(sweep.shard_count());
            let batch = sweep.run_range(state.next_shard..end);
            sink(&batch)?;
            state.counts.absorb(&batch.census);
            state.next_shard = end;
            state.cursor = sweep.cursor_at(end);
            batches += 1;
            if let Some(path) = checkpoint {
                state.save(path)?;
            }
        }
        let next = state.cursor.n + 1;
        let done = std::mem::replace(&mut state.counts, Census::empty(next, &options.theorems));
        state.completed.push(done);
        state.next_shard = 0;
        state.cursor = if next <= max_order {
            Sweep::new(next, options.clone())?.cursor_at(0)
        } else {
            EnumerationCursor {
                n: next,
                table_prefix: Vec::new(),
                resume_after: None,
            }
        };
        if let Some(path) = checkpoint {
            state.save(path)?;
        }
    }
    let mut censuses = state.completed;
    censuses.truncate(max_order);
    Ok(SweepOutcome {
        censuses,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_census() {
        let batch = census(1, SweepOptions::default()).unwrap();
        let c = &batch.census;
        assert_eq!(c.instances, 1);
        let f = c.flags;
        assert_eq!(
            [
                f.regular,
                f.group_like,
                f.left_group_like,
                f.clifford,
                f.left_clifford,
                f.nil,
                f.has_zero
            ],
            [1; 7]
        );
        for t in c.theorems.values() {
            assert_eq!((t.instances, t.agree), (1, 1));
        }
        assert!(c.is_clean());
    }

    #[test]
    fn census_json_is_stable() {
        let a = serde_json::to_string(&census(2, SweepOptions::default()).unwrap().census).unwrap();
        let b = serde_json::to_string(&census(2, SweepOptions::default()).unwrap().census).unwrap();
        assert_eq!(a, b);
        let back: Census = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
    }

    #[test]
    fn sweep_resumes_from_checkpoint() {
        let dir = std::env::temp_dir().join(format!("ordsemi-cp-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cp.json");
        let _ = fs::remove_file(&path);
        let opts = SweepOptions::default();
        let partial = run_sweep(3, &opts, Some(&path), 2, Some(3), |_| Ok(())).unwrap();
        assert!(!partial.complete);
        let resumed = run_sweep(3, &opts, Some(&path), 2, None, |_| Ok(())).unwrap();
        assert!(resumed.complete);
        let fresh = run_sweep(3, &opts, None, 2, None, |_| Ok(())).unwrap();
        assert_eq!(resumed.censuses, fresh.censuses);
        let other = SweepOptions {
            theorems: vec![Theorem::Ne7],
            ..SweepOptions::default()
        };
        assert!(matches!(
            run_sweep(3, &other, Some(&path), 2, None, |_| Ok(())),
            Err(SweepError::CheckpointMismatch(_))
        ));
        fs::remove_dir_all(&dir).unwrap();
    }
}
