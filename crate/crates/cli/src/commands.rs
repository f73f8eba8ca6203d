use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use help_core::cyclo::{divisors, format_rational};
use help_core::datasets::builtin_source;
use help_core::engine::{
    admissible_classes, check_group, check_orders, evaluate, form_family, mu_form, solve_detailed,
    solve_order, BoundMethod, CaseResult, CheckOptions, Classification, EngineError, HelpBranch,
    Method, PaVector, Parallelism, PowerAssignment, SolveOptions, Verdict,
};
use help_core::rules::{Decision, RuleId, RuleSet, UnknownRule};
use help_core::tables::{load_group, validate_source, GroupData, TableError};

use crate::gamma::Gammas;
use crate::report::{
    BoundsReport, BranchReport, CaseReport, ClassSummary, Evaluation, GroupSummary, MethodReport,
    MuReport, Outcome, PowerMapSummary, PowerReport, Report, SolutionReport, ValidationReport,
    VerdictKind, ViolationReport,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Rule(#[from] UnknownRule),
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Dataset bytes for a builtin name or a file path, with a display name.
pub fn read_source(spec: &str) -> Result<(String, Vec<u8>), CliError> {
    if let Some(s) = builtin_source(spec) {
        return Ok((spec.to_string(), s.as_bytes().to_vec()));
    }
    let bytes = std::fs::read(Path::new(spec)).map_err(|source| CliError::Io {
        path: spec.to_string(),
        source,
    })?;
    Ok((spec.to_string(), bytes))
}

pub fn load(spec: &str) -> Result<GroupData, CliError> {
    let (_, bytes) = read_source(spec)?;
    Ok(load_group(&bytes)?)
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub rules: RuleSet,
    pub fallback_box: Option<i64>,
    pub parallelism: Parallelism,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            rules: RuleSet::all(),
            fallback_box: None,
            parallelism: Parallelism::default(),
        }
    }
}

impl RunOptions {
    fn check_options(&self) -> CheckOptions {
        CheckOptions {
            rules: self.rules.clone(),
            solve: SolveOptions {
                fallback_box: self.fallback_box,
                parallelism: self.parallelism,
                ..SolveOptions::default()
            },
            certificates: true,
        }
    }

    fn rule_names(&self) -> Vec<String> {
        self.rules.iter().map(|r| r.name().to_string()).collect()
    }
}

pub fn group_summary(g: &GroupData, power_maps: bool) -> GroupSummary {
    let name = |c: usize| g.class(c).name.clone();
    GroupSummary {
        name: g.name().to_string(),
        order: g.order(),
        exponent: g.exponent(),
        psl: g.psl_params().map(|p| (p.p, p.f)),
        classes: g
            .classes()
            .iter()
            .map(|c| ClassSummary {
                name: c.name.clone(),
                order: c.element_order,
            })
            .collect(),
        tables: g.tables().iter().map(|t| t.label()).collect(),
        power_maps: if power_maps {
            g.powermaps()
                .iter()
                .map(|m| PowerMapSummary {
                    prime: m.prime,
                    images: m.images.iter().map(|&c| name(c)).collect(),
                })
                .collect()
        } else {
            Vec::new()
        },
    }
}

fn names(g: &GroupData, classes: &[usize]) -> Vec<String> {
    classes.iter().map(|&c| g.class(c).name.clone()).collect()
}

fn powers(g: &GroupData, a: &PowerAssignment) -> Vec<PowerReport> {
    a.choices()
        .iter()
        .map(|(&m, v)| PowerReport {
            order: m,
            classes: names(g, v.classes()),
            entries: v.entries().to_vec(),
        })
        .collect()
}

fn bounds(b: &HelpBranch) -> BoundsReport {
    let (method, half_width) = match b.bound_method {
        BoundMethod::FourierMotzkin => ("fourier-motzkin", None),
        BoundMethod::FallbackBox(w) => ("fallback-box", Some(w)),
        BoundMethod::Infeasible => ("infeasible", None),
        BoundMethod::Fixed => ("fixed", None),
        BoundMethod::NoAdmissibleClasses => ("no-admissible-classes", None),
    };
    BoundsReport {
        method: method.to_string(),
        half_width,
        lower: b.lower.clone(),
        upper: b.upper.clone(),
    }
}

fn branch_report(
    g: &GroupData,
    k: u64,
    b: &HelpBranch,
    opts: &RunOptions,
    with_forms: bool,
) -> Result<BranchReport, CliError> {
    let classes = admissible_classes(g, k);
    let family = form_family(g, k, &b.assignment, 1)?;
    let gammas = Gammas::collect(&family);
    let forms = if with_forms {
        let out = solve_detailed(g, k, &b.assignment, &opts.check_options().solve)?;
        Some(gammas.form_set(g, &classes, &out.forms))
    } else {
        None
    };
    Ok(BranchReport {
        powers: powers(g, &b.assignment),
        over_approximated: b.assignment.over_approximated(),
        bounds: bounds(b),
        constraints: b.num_forms,
        solutions: b
            .solutions
            .iter()
            .zip(&b.classifications)
            .map(|(v, c)| SolutionReport {
                entries: v.entries().to_vec(),
                trivial: match c {
                    Classification::Trivial(cl) => Some(g.class(*cl).name.clone()),
                    Classification::Exceptional => None,
                },
            })
            .collect(),
        certificate: b
            .certificate
            .as_ref()
            .map(|fs| gammas.form_set(g, &classes, fs)),
        forms,
    })
}

fn case_report(
    g: &GroupData,
    r: &CaseResult,
    opts: &RunOptions,
    with_forms: bool,
) -> Result<CaseReport, CliError> {
    let k = r.unit_order;
    let mut notes = r.notes.clone();
    let method = match &r.method {
        Method::Rule(o) => {
            if o.decision == Decision::Nonexistent && o.rule != RuleId::PowerClosure {
                notes.push(format!(
                    "a statement that such units are rationally conjugate to elements of G holds vacuously: G has no element of order {k}"
                ));
            }
            MethodReport::Rule {
                rule: o.rule.name().to_string(),
                alias: o.rule.alias().to_string(),
                justification: o.justification.clone(),
            }
        }
        Method::Help => MethodReport::Help,
        Method::EmptyAdmissible => MethodReport::EmptyAdmissible,
    };
    let mut branches = Vec::with_capacity(r.branches.len());
    for (i, b) in r.branches.iter().enumerate() {
        if b.certificate.is_none() {
            notes.push(format!(
                "assignment {}: no certificate, the search box is too large to scan",
                i + 1
            ));
        }
        branches.push(branch_report(g, k, b, opts, with_forms)?);
    }
    let (verdict, exceptional) = match &r.verdict {
        Verdict::AllTrivial => (VerdictKind::AllTrivial, Vec::new()),
        Verdict::Nonexistent => (VerdictKind::Nonexistent, Vec::new()),
        Verdict::Exceptional(e) => (
            VerdictKind::Exceptional,
            e.iter().map(|v| v.entries().to_vec()).collect(),
        ),
    };
    Ok(CaseReport {
        order: k,
        classes: names(g, &r.classes),
        method,
        verdict,
        solutions: r.solutions().iter().map(|v| v.entries().to_vec()).collect(),
        exceptional,
        notes,
        branches,
    })
}

fn over_approximation_flags(cases: &[CaseReport]) -> Vec<String> {
    cases
        .iter()
        .filter(|c| c.branches.iter().any(|b| b.over_approximated))
        .map(|c| format!("order {}: some power assignments are over-approximated", c.order))
        .collect()
}

/// Every candidate order, decided by the enabled rules or HeLP.
pub fn cmd_check(g: &GroupData, opts: &RunOptions) -> Result<Report, CliError> {
    let results = check_group(g, &opts.check_options())?;
    let cases = results
        .iter()
        .map(|r| case_report(g, r, opts, false))
        .collect::<Result<Vec<_>, _>>()?;
    let inconclusive = cases.iter().any(|c| c.verdict == VerdictKind::Exceptional);
    let mut report = Report::new(
        "check",
        if inconclusive {
            Outcome::Inconclusive
        } else {
            Outcome::Verified
        },
    );
    report.group = Some(group_summary(g, false));
    report.rules = Some(opts.rule_names());
    report.flags = over_approximation_flags(&cases);
    report.cases = cases;
    Ok(report)
}

/// HeLP for a single order, with every distinct constraint listed. Lower
/// orders are decided first, with the enabled rules.
pub fn cmd_solve(g: &GroupData, k: u64, opts: &RunOptions) -> Result<Report, CliError> {
    if k < 2 {
        return Err(usage("the unit order must be at least 2"));
    }
    let mut report = Report::new("solve", Outcome::Success);
    report.group = Some(group_summary(g, false));
    report.rules = Some(opts.rule_names());
    if g.exponent() % k != 0 {
        report.notes.push(format!(
            "{k} ∤ {}: the order of a torsion unit of V(ZG) divides the exponent of G, so there are no candidates",
            g.exponent()
        ));
        return Ok(report);
    }
    let lower: Vec<u64> = divisors(k).into_iter().filter(|&m| m > 1 && m < k).collect();
    let check = opts.check_options();
    let prior = check_orders(g, &lower, &check)?;
    for (m, r) in &prior {
        let how = match &r.method {
            Method::Rule(o) => format!("rule {}", o.rule.name()),
            Method::Help => "HeLP".to_string(),
            Method::EmptyAdmissible => "no admissible classes".to_string(),
        };
        report.notes.push(format!(
            "order {m}: {} solution(s), by {how}",
            r.solutions().len()
        ));
    }
    let r = solve_order(g, k, &prior, &check)?;
    let case = case_report(g, &r, opts, true)?;
    if case.verdict == VerdictKind::Exceptional {
        report.outcome = Outcome::Inconclusive;
    }
    report.flags = over_approximation_flags(std::slice::from_ref(&case));
    report.cases.push(case);
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct MuArgs {
    pub order: u64,
    /// `*` or `0` for the ordinary table, otherwise a characteristic.
    pub table: String,
    /// 1-based.
    pub character: usize,
    pub l: u64,
    /// `order=class,…`
    pub assign: Option<String>,
    /// `class=int,…`
    pub nu: Option<String>,
}

fn pairs(list: &str, flag: &str) -> Result<Vec<(String, String)>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            item.split_once('=')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| usage(format!("{flag}: expected key=value, got '{item}'")))
        })
        .collect()
}

/// Trivial power choices: the named class for each listed order, or the only
/// class of that order when it is unique.
fn parse_assignment(g: &GroupData, k: u64, list: Option<&str>) -> Result<PowerAssignment, CliError> {
    let mut given = BTreeMap::new();
    for (m, c) in pairs(list.unwrap_or(""), "--assign")? {
        let m: u64 = m
            .parse()
            .map_err(|_| usage(format!("--assign: '{m}' is not an order")))?;
        if m <= 1 || m >= k || k % m != 0 {
            return Err(usage(format!("--assign: {m} is not a proper divisor of {k}")));
        }
        given.insert(m, c);
    }
    let mut choices = BTreeMap::new();
    for m in divisors(k).into_iter().filter(|&m| m > 1 && m < k) {
        let of_order: Vec<usize> = (0..g.classes().len())
            .filter(|&c| g.class(c).element_order == m)
            .collect();
        let class = match given.get(&m) {
            Some(name) => {
                let c = g
                    .class_index(name)
                    .ok_or_else(|| TableError::UnknownClass(name.clone()))?;
                if g.class(c).element_order != m {
                    return Err(usage(format!(
                        "--assign: class {name} has order {}, not {m}",
                        g.class(c).element_order
                    )));
                }
                c
            }
            None if of_order.len() == 1 => of_order[0],
            None => {
                return Err(usage(format!(
                    "--assign: choose a class of order {m} for u^{} (one of: {})",
                    k / m,
                    names(g, &of_order).join(", ")
                )))
            }
        };
        let v = PaVector::indicator(m, admissible_classes(g, m), class)
            .expect("a class of order m is admissible for m");
        choices.insert(m, v);
    }
    Ok(PowerAssignment::new(k, choices))
}

/// One μ-form, optionally evaluated at a vector of partial augmentations.
pub fn cmd_mu(g: &GroupData, args: &MuArgs) -> Result<Report, CliError> {
    let k = args.order;
    if k < 2 {
        return Err(usage("the unit order must be at least 2"));
    }
    let table = match args.table.as_str() {
        "*" | "0" => g.ordinary_table(),
        s => {
            let p: u64 = s
                .parse()
                .map_err(|_| usage(format!("--table: expected 0, * or a prime, got '{s}'")))?;
            let t = g
                .table(p)
                .ok_or_else(|| usage(format!("{} has no {p}-modular table", g.name())))?;
            if k % p == 0 {
                return Err(usage(format!(
                    "the {p}-modular table is rejected for units of order {k}: {p} | {k}, and Brauer characters are only defined on {p}-regular classes"
                )));
            }
            t
        }
    };
    if args.character == 0 || args.character > table.num_rows() {
        return Err(usage(format!(
            "--char: χ_{} is out of range, the table has rows χ_1 … χ_{}",
            args.character,
            table.num_rows()
        )));
    }
    let a = parse_assignment(g, k, args.assign.as_deref())?;
    let classes = admissible_classes(g, k);
    let form = mu_form(g, table, args.character - 1, k, args.l, &a)?;
    let family = form_family(g, k, &a, 1)?;
    let gammas = Gammas::collect(&family);

    let mut notes = Vec::new();
    let evaluation = match &args.nu {
        None => None,
        Some(list) => {
            let mut entries = vec![0i64; classes.len()];
            for (name, x) in pairs(list, "--nu")? {
                let c = g
                    .class_index(&name)
                    .ok_or_else(|| TableError::UnknownClass(name.clone()))?;
                let i = classes.iter().position(|&d| d == c).ok_or_else(|| {
                    usage(format!(
                        "--nu: class {name} has order {}, which does not divide {k}",
                        g.class(c).element_order
                    ))
                })?;
                entries[i] = x
                    .parse()
                    .map_err(|_| usage(format!("--nu: '{x}' is not an integer")))?;
            }
            let s: i64 = entries.iter().sum();
            if s != 1 {
                notes.push(format!("the partial augmentations sum to {s}, not 1"));
            }
            let v = PaVector::new(k, classes.clone(), entries.clone());
            let (value, admissible) = evaluate(&form, &v);
            Some(Evaluation {
                nu: entries,
                value: format_rational(&value),
                admissible,
            })
        }
    };

    let mut report = Report::new("mu", Outcome::Success);
    report.group = Some(group_summary(g, false));
    report.notes = notes;
    report.mu = Some(MuReport {
        order: k,
        classes: names(g, &classes),
        powers: powers(g, &a),
        gammas: gammas.defs_for(g, &classes, &form),
        form: gammas.form_report(g, &form),
        evaluation,
    });
    Ok(report)
}

pub fn cmd_classes(g: &GroupData) -> Report {
    let mut report = Report::new("classes", Outcome::Success);
    report.group = Some(group_summary(g, true));
    report
}

/// Structural checks on a dataset; every violation is listed.
pub fn cmd_validate(spec: &str) -> Result<Report, CliError> {
    let (name, bytes) = read_source(spec)?;
    let mut report = Report::new("validate", Outcome::Success);
    let mut validation = ValidationReport {
        source: name,
        error: None,
        violations: Vec::new(),
    };
    match validate_source(&bytes) {
        Ok(v) if v.is_empty() => {
            report.group = Some(group_summary(&load_group(&bytes)?, false));
        }
        Ok(v) => {
            validation.violations = v
                .into_iter()
                .map(|x| ViolationReport {
                    location: x.location,
                    message: x.message,
                })
                .collect();
            report.outcome = Outcome::Invalid;
        }
        Err(e) => {
            validation.error = Some(e.to_string());
            report.outcome = Outcome::Invalid;
        }
    }
    report.validation = Some(validation);
    Ok(report)
}

/// `--no-rules` / `--only-rules` to a rule set.
pub fn rule_set(no_rules: bool, only: Option<&str>) -> Result<RuleSet, CliError> {
    match (no_rules, only) {
        (true, Some(_)) => Err(usage("--no-rules and --only-rules are mutually exclusive")),
        (true, None) => Ok(RuleSet::none()),
        (false, Some(list)) => Ok(RuleSet::parse(list)?),
        (false, None) => Ok(RuleSet::all()),
    }
}
