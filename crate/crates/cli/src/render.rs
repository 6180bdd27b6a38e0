//! Plain-text output.

use std::fmt::Write;
use std::path::Path;

use ordsemi::enumerate::Census;
use ordsemi::extension::Rejection;
use ordsemi::relations::EquivalenceRelation;
use ordsemi::report::AnalysisReport;
use ordsemi::theorems::Witness;
use ordsemi::{Subset, VerificationReport, Violation};

fn set(s: &Subset) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn partition(rel: &EquivalenceRelation) -> String {
    rel.classes().iter().map(set).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn violations(v: &[Violation]) -> String {
    let mut out = format!("invalid: {} violation(s)\n", v.len());
    for x in v {
        let _ = writeln!(out, "  {x}");
    }
    out
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order        {}", r.n);
    let zero = r.zero.map_or_else(|| "none".to_string(), |z| z.to_string());
    let _ = writeln!(out, "zero         {zero}");
    let _ = writeln!(out, "regular      {}", set(&r.reg_set));
    let _ = writeln!(out, "nilpotent    {}", set(&r.nilpotents));
    let kernel = r.kernel.as_ref().map_or_else(|| "none".to_string(), set);
    let _ = writeln!(out, "kernel       {kernel}");
    let _ = writeln!(out, "ideals       {}", r.ideals.len());
    for i in &r.ideals {
        let _ = writeln!(out, "  {}", set(i));
    }
    let _ = writeln!(out, "green L      {}", partition(&r.green.l));
    let _ = writeln!(out, "green R      {}", partition(&r.green.r));
    let _ = writeln!(out, "green J      {}", partition(&r.green.j));
    let _ = writeln!(out, "green H      {}", partition(&r.green.h));
    let f = &r.flags;
    for (name, value) in [
        ("regular", f.regular),
        ("group_like", f.group_like),
        ("left_group_like", f.left_group_like),
        ("clifford", f.clifford),
        ("left_clifford", f.left_clifford),
        ("nil", f.nil),
    ] {
        let _ = writeln!(out, "{name:<16} {}", yes_no(value));
    }
    let _ = writeln!(out, "{:<16} {}", "lgo_form", yes_no(r.left_group_like_lgo));
    out
}

pub fn verification(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theorem      {}", r.theorem);
    let _ = writeln!(out, "condition    {}", r.predicate_verdict);
    let _ = writeln!(out, "oracle       {}", r.oracle_verdict);
    let _ = writeln!(out, "agree        {}", yes_no(r.agree));
    if let Some(c) = &r.certificate {
        let powers: Vec<String> = c.powers.iter().map(|(a, k)| format!("{a}^{k}")).collect();
        let _ = writeln!(
            out,
            "certificate  {} ideal {}{}",
            c.class,
            set(&c.base_ideal),
            if c.fast_path { " (regular part)" } else { "" }
        );
        let _ = writeln!(out, "powers       {}", powers.join(" "));
    }
    match &r.witness {
        Some(Witness::Predicate(p)) => {
            let _ = write!(
                out,
                "witness      clause {} fails at {:?}",
                p.clause, p.tuple
            );
            if let Some(k) = p.exponents_searched {
                let _ = write!(out, " after {k} exponent(s)");
            }
            out.push('\n');
        }
        Some(Witness::Oracle { rejections }) => {
            let _ = writeln!(out, "witness      no ideal qualifies");
            for rej in rejections {
                let _ = match rej {
                    Rejection::NotInClass { ideal } => {
                        writeln!(out, "  {} is not {}", set(ideal), r.theorem.base_class())
                    }
                    Rejection::NoPowerInIdeal { ideal, element } => {
                        writeln!(out, "  {}: no power of {element} lies in it", set(ideal))
                    }
                };
            }
        }
        None => {}
    }
    out
}

pub fn sweep(
    censuses: &[Census],
    counterexamples: &Path,
    written: bool,
    elapsed: Option<f64>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>5} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "order", "instances", "regular", "group", "lgroup", "cliff", "lcliff", "nil", "zero"
    );
    for c in censuses {
        let f = &c.flags;
        let _ = writeln!(
            out,
            "{:>5} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            c.order,
            c.instances,
            f.regular,
            f.group_like,
            f.left_group_like,
            f.clifford,
            f.left_clifford,
            f.nil,
            f.has_zero
        );
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "{:>5} {:>7} {:>9} {:>9} {:>9} {:>9} {:>9} {:>8}",
        "order", "theorem", "instances", "condition", "oracle", "agree", "disagree", "rate"
    );
    for c in censuses {
        for (t, tally) in &c.theorems {
            let _ = writeln!(
                out,
                "{:>5} {:>7} {:>9} {:>9} {:>9} {:>9} {:>9} {:>7.3}%",
                c.order,
                t.to_string(),
                tally.instances,
                tally.predicate_true,
                tally.oracle_true,
                tally.agree,
                tally.disagree,
                tally.agreement_rate()
            );
        }
    }
    out.push('\n');
    for c in censuses {
        let _ = writeln!(
            out,
            "order {}: lgo mismatches {}, nil-extension checks {} with {} violation(s)",
            c.order, c.lgo_mismatches, c.lemma_pairs, c.lemma_violations
        );
    }
    if written {
        let _ = writeln!(
            out,
            "counterexamples written to {}",
            counterexamples.display()
        );
    } else {
        let _ = writeln!(out, "no counterexamples");
    }
    if let Some(secs) = elapsed {
        let _ = writeln!(out, "elapsed {secs:.3}s");
    }
    out
}
