//! `helpzc`: HeLP checks of the Zassenhaus conjecture from character tables.

pub mod commands;
pub mod gamma;
pub mod markdown;
pub mod report;

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, MuArgs, RunOptions};
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "helpzc", version, about = "Verify the Zassenhaus conjecture with the HeLP method")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArg {
    /// Builtin dataset (psl_2_8, psl_2_17) or path to a group file.
    #[arg(long = "group", value_name = "FILE|BUILTIN")]
    group: Option<String>,
    #[arg(value_name = "GROUP", conflicts_with = "group")]
    positional: Option<String>,
}

impl GroupArg {
    fn get(&self) -> Result<&str, CliError> {
        self.group
            .as_deref()
            .or(self.positional.as_deref())
            .ok_or_else(|| CliError::Usage("no group given (use --group or a positional argument)".into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Record the generation time in the report.
    #[arg(long)]
    pub stamp: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    /// Disable every rule, power closure included.
    #[arg(long)]
    no_rules: bool,
    /// Comma-separated rule names or aliases (6.1, 6.3, 6.4, 6.6, 6.7, closure).
    #[arg(long, value_name = "ID,...")]
    only_rules: Option<String>,
    /// Half-width of the search box when elimination is too large.
    #[arg(long = "box", value_name = "B")]
    fallback_box: Option<i64>,
    /// Run branches and the search sequentially.
    #[arg(long)]
    sequential: bool,
}

impl SolveArgs {
    fn options(&self) -> Result<RunOptions, CliError> {
        if let Some(b) = self.fallback_box {
            if b < 0 {
                return Err(CliError::Usage("--box must be non-negative".into()));
            }
        }
        let mut o = RunOptions {
            rules: commands::rule_set(self.no_rules, self.only_rules.as_deref())?,
            fallback_box: self.fallback_box,
            ..RunOptions::default()
        };
        if self.sequential {
            o.parallelism = help_core::engine::Parallelism::Sequential;
        }
        Ok(o)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide every candidate unit order.
    Check {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run HeLP for one unit order and list all constraints.
    Solve {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        order: u64,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Show one multiplicity μ_l(u, χ, p) as an affine form.
    Mu {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        order: u64,
        /// 0 or * for the ordinary table, p for the p-modular one.
        #[arg(long, default_value = "*")]
        table: String,
        /// 1-based character index.
        #[arg(long = "char", value_name = "I")]
        character: usize,
        #[arg(long = "l", value_name = "J")]
        l: u64,
        /// Classes of the proper powers, e.g. 2=2a,3=3a.
        #[arg(long, value_name = "ORDER=CLASS,...")]
        assign: Option<String>,
        /// Partial augmentations to evaluate at, e.g. 2a=1,3a=0.
        #[arg(long, value_name = "CLASS=INT,...")]
        nu: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List conjugacy classes and power maps.
    Classes {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a dataset's structural invariants.
    Validate {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn stamp() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    format!("at unix time {secs}")
}

/// Runs a parsed command: the rendered report and the exit code.
pub fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    let (mut report, output): (Report, &OutputArgs) = match &cli.command {
        Command::Check { group, solve, output } => {
            let g = commands::load(group.get()?)?;
            (commands::cmd_check(&g, &solve.options()?)?, output)
        }
        Command::Solve {
            group,
            order,
            solve,
            output,
        } => {
            let g = commands::load(group.get()?)?;
            (commands::cmd_solve(&g, *order, &solve.options()?)?, output)
        }
        Command::Mu {
            group,
            order,
            table,
            character,
            l,
            assign,
            nu,
            output,
        } => {
            let g = commands::load(group.get()?)?;
            let args = MuArgs {
                order: *order,
                table: table.clone(),
                character: *character,
                l: *l,
                assign: assign.clone(),
                nu: nu.clone(),
            };
            (commands::cmd_mu(&g, &args)?, output)
        }
        Command::Classes { group, output } => {
            let g = commands::load(group.get()?)?;
            (commands::cmd_classes(&g), output)
        }
        Command::Validate { group, output } => (commands::cmd_validate(group.get()?)?, output),
    };
    if output.stamp {
        report.generated = Some(stamp());
    }
    let text = match output.format {
        Format::Md => markdown::render(&report),
        Format::Json => report.to_json(),
    };
    Ok((text, report.outcome.exit_code()))
}
