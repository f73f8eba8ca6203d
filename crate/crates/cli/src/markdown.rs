use std::fmt::Write;

use crate::report::{
    BranchReport, CaseReport, FormSet, GroupSummary, MethodReport, MuReport, Outcome,
    PowerReport, Report, ValidationReport, VerdictKind,
};

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let title = r.group.as_ref().map_or("", |g| g.name.as_str());
    let _ = writeln!(out, "# helpzc {}: {title}", r.command);
    if let Some(t) = &r.generated {
        let _ = writeln!(out, "\nGenerated {t}.");
    }
    if let Some(g) = &r.group {
        group(&mut out, g);
    }
    if let Some(rules) = &r.rules {
        let list = if rules.is_empty() {
            "none".to_string()
        } else {
            rules.join(", ")
        };
        let _ = writeln!(out, "Rules: {list}\n");
    }
    if !r.notes.is_empty() {
        for n in &r.notes {
            let _ = writeln!(out, "- {n}");
        }
        out.push('\n');
    }
    if let Some(v) = &r.validation {
        validation(&mut out, v);
    }
    if let Some(m) = &r.mu {
        mu(&mut out, m);
    }
    for c in &r.cases {
        case(&mut out, c);
    }
    if r.command == "check" {
        summary(&mut out, &r.cases);
    }
    if !r.flags.is_empty() {
        out.push_str("## Flags\n\n");
        for f in &r.flags {
            let _ = writeln!(out, "- {f}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "Outcome: **{}**", outcome(r));
    out
}

fn outcome(r: &Report) -> &'static str {
    match r.outcome {
        Outcome::Verified => "verified (the Zassenhaus conjecture holds for this group)",
        Outcome::Inconclusive => "inconclusive (exceptional partial augmentations remain)",
        Outcome::Success => "done",
        Outcome::Invalid => "invalid",
    }
}

fn group(out: &mut String, g: &GroupSummary) {
    let _ = write!(out, "\n|G| = {}, exponent {}", g.order, g.exponent);
    match g.psl {
        Some((p, 1)) => {
            let _ = write!(out, ", PSL(2, {p})");
        }
        Some((p, f)) => {
            let _ = write!(out, ", PSL(2, {p}^{f})");
        }
        None => {}
    }
    out.push_str("\n\n");
    if g.power_maps.is_empty() {
        let cls: Vec<String> = g.classes.iter().map(|c| format!("{} ({})", c.name, c.order)).collect();
        let _ = writeln!(out, "Classes: {}\n", cls.join(", "));
    } else {
        out.push_str("| class | order |");
        for m in &g.power_maps {
            let _ = write!(out, " {}-power |", m.prime);
        }
        out.push_str("\n|---|---|");
        for _ in &g.power_maps {
            out.push_str("---|");
        }
        out.push('\n');
        for (i, c) in g.classes.iter().enumerate() {
            let _ = write!(out, "| {} | {} |", c.name, c.order);
            for m in &g.power_maps {
                let _ = write!(out, " {} |", m.images[i]);
            }
            out.push('\n');
        }
        out.push('\n');
    }
    let _ = writeln!(out, "Tables: {}\n", g.tables.join(", "));
}

fn verdict(v: VerdictKind) -> &'static str {
    match v {
        VerdictKind::AllTrivial => "all trivial",
        VerdictKind::Nonexistent => "nonexistent",
        VerdictKind::Exceptional => "exceptional",
    }
}

fn method(m: &MethodReport) -> String {
    match m {
        MethodReport::Rule { rule, alias, .. } => format!("rule {rule} ({alias})"),
        MethodReport::Help => "HeLP".into(),
        MethodReport::EmptyAdmissible => "no admissible classes".into(),
    }
}

fn tuple(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}

fn power(order: u64, p: &PowerReport) -> String {
    let terms: Vec<String> = p
        .classes
        .iter()
        .zip(&p.entries)
        .filter(|(_, e)| **e != 0)
        .map(|(c, e)| format!("ν_{c} = {e}"))
        .collect();
    format!("u^{}: {}", order / p.order, terms.join(", "))
}

fn form_set(out: &mut String, fs: &FormSet) {
    for g in &fs.gammas {
        let _ = writeln!(out, "- {} = {}", g.name, g.rendered);
    }
    for f in &fs.forms {
        match &f.grouped {
            Some(gr) => {
                let _ = writeln!(out, "- {} = {gr} = {}", f.label, f.affine);
            }
            None => {
                let _ = writeln!(out, "- {} = {}", f.label, f.affine);
            }
        }
    }
    out.push('\n');
}

fn branch(out: &mut String, k: u64, classes: &[String], i: usize, b: &BranchReport) {
    let _ = write!(out, "### Assignment {}", i + 1);
    if b.powers.is_empty() {
        out.push_str(": no proper powers\n\n");
    } else {
        let ps: Vec<String> = b.powers.iter().map(|p| power(k, p)).collect();
        let _ = writeln!(out, ": {}\n", ps.join("; "));
    }
    if b.over_approximated {
        out.push_str("Over-approximated: a non-trivial power choice was kept unchecked.\n\n");
    }
    let free = &classes[..classes.len().saturating_sub(1)];
    let ranges: Vec<String> = free
        .iter()
        .zip(b.bounds.lower.iter().zip(&b.bounds.upper))
        .map(|(c, (l, h))| format!("ν_{c} ∈ [{l}, {h}]"))
        .collect();
    let how = match b.bounds.half_width {
        Some(w) => format!("{} ±{w}", b.bounds.method),
        None => b.bounds.method.clone(),
    };
    if ranges.is_empty() {
        let _ = writeln!(out, "Bounds ({how}).");
    } else {
        let _ = writeln!(out, "Bounds ({how}): {}.", ranges.join(", "));
    }
    let _ = writeln!(out, "Distinct constraints: {}.\n", b.constraints);
    if let Some(c) = &b.certificate {
        if c.forms.is_empty() {
            out.push_str("Certificate: none needed.\n\n");
        } else {
            out.push_str("Certificate (excludes every other integer point within the bounds):\n\n");
            form_set(out, c);
        }
    }
    if let Some(fs) = &b.forms {
        out.push_str("Constraints:\n\n");
        form_set(out, fs);
    }
    if b.solutions.is_empty() {
        out.push_str("No solutions.\n\n");
        return;
    }
    out.push('|');
    for c in classes {
        let _ = write!(out, " ν_{c} |");
    }
    out.push_str(" classification |\n|");
    for _ in 0..=classes.len() {
        out.push_str("---|");
    }
    out.push('\n');
    for s in &b.solutions {
        out.push('|');
        for e in &s.entries {
            let _ = write!(out, " {e} |");
        }
        match &s.trivial {
            Some(c) => {
                let _ = writeln!(out, " trivial ({c}) |");
            }
            None => out.push_str(" exceptional |\n"),
        }
    }
    out.push('\n');
}

fn case(out: &mut String, c: &CaseReport) {
    let _ = writeln!(out, "## Order {}\n", c.order);
    if !c.classes.is_empty() {
        let _ = writeln!(out, "Admissible classes: {}", c.classes.join(", "));
    }
    let _ = writeln!(out, "Method: {}", method(&c.method));
    if let MethodReport::Rule { justification, .. } = &c.method {
        let _ = writeln!(out, "Justification: {justification}");
    }
    out.push('\n');
    for n in &c.notes {
        let _ = writeln!(out, "- {n}");
    }
    if !c.notes.is_empty() {
        out.push('\n');
    }
    for (i, b) in c.branches.iter().enumerate() {
        branch(out, c.order, &c.classes, i, b);
    }
    if !c.exceptional.is_empty() {
        let e: Vec<String> = c.exceptional.iter().map(|v| tuple(v)).collect();
        let _ = writeln!(out, "Exceptional: {}\n", e.join(", "));
    }
    let _ = writeln!(out, "Verdict: {}\n", verdict(c.verdict));
}

fn summary(out: &mut String, cases: &[CaseReport]) {
    out.push_str("## Summary\n\n| order | method | verdict | solutions |\n|---|---|---|---|\n");
    for c in cases {
        let sols: Vec<String> = c.solutions.iter().map(|v| tuple(v)).collect();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.order,
            method(&c.method),
            verdict(c.verdict),
            if sols.is_empty() { "-".into() } else { sols.join(" ") }
        );
    }
    out.push('\n');
}

fn mu(out: &mut String, m: &MuReport) {
    let _ = writeln!(out, "Unit order: {}", m.order);
    let _ = writeln!(out, "Admissible classes: {}", m.classes.join(", "));
    if !m.powers.is_empty() {
        let ps: Vec<String> = m.powers.iter().map(|p| power(m.order, p)).collect();
        let _ = writeln!(out, "Powers: {}", ps.join("; "));
    }
    out.push('\n');
    form_set(
        out,
        &FormSet {
            gammas: m.gammas.clone(),
            forms: vec![m.form.clone()],
        },
    );
    if let Some(e) = &m.evaluation {
        let _ = writeln!(
            out,
            "At ν = {}: {} = {} ({})\n",
            tuple(&e.nu),
            m.form.label,
            e.value,
            if e.admissible {
                "a non-negative integer"
            } else {
                "not a non-negative integer"
            }
        );
    }
}

fn validation(out: &mut String, v: &ValidationReport) {
    let _ = writeln!(out, "Source: {}\n", v.source);
    if let Some(e) = &v.error {
        let _ = writeln!(out, "Error: {e}\n");
    }
    if v.violations.is_empty() && v.error.is_none() {
        out.push_str("No violations.\n\n");
    }
    for x in &v.violations {
        let _ = writeln!(out, "- {}: {}", x.location, x.message);
    }
    if !v.violations.is_empty() {
        out.push('\n');
    }
}
