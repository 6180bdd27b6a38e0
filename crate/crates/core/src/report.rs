//! Whole-instance analysis, as printed by `ordsemi analyze`.

use serde::Serialize;

use crate::classes::{class_report, is_left_group_like_lgo, ClassFlags};
use crate::ideals::{all_ideals, kernel_of};
use crate::relations::{green_relations, GreenRelations};
use crate::semigroup::OrderedSemigroup;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub zero: Option<usize>,
    pub reg_set: Subset,
    pub nilpotents: Subset,
    pub kernel: Option<Subset>,
    pub ideals: Vec<Subset>,
    pub green: GreenRelations,
    pub flags: ClassFlags,
    /// Result of the `a ∈ (aSab]` form of left group like.
    pub left_group_like_lgo: bool,
}

pub fn analyze(s: &OrderedSemigroup) -> AnalysisReport {
    let classes = class_report(s);
    let ideals = all_ideals(s);
    AnalysisReport {
        n: s.len(),
        zero: classes.zero,
        reg_set: classes.reg_set,
        nilpotents: classes.nil_set,
        kernel: kernel_of(s, &ideals),
        ideals,
        green: green_relations(s),
        flags: classes.flags,
        left_group_like_lgo: is_left_group_like_lgo(s),
    }
}
