//! Command-line definitions and JSON config splicing.

use crate::exit::{usage, CliError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "exthyp",
    version,
    about = "Kernel-extended hypergeometric functions and identity checks"
)]
pub struct Cli {
    /// JSON file whose keys mirror the long flag names; explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one function value and print it as JSON.
    #[command(args_override_self = true)]
    Eval(FuncArgs),
    /// Check every registered identity and write a CSV report.
    #[command(args_override_self = true)]
    Conformance(ConformanceArgs),
    /// Evaluate the Hardy-Hilbert constant and both inequalities.
    #[command(args_override_self = true)]
    Hilbert(HilbertArgs),
    /// Tabulate a function over a range of one argument as CSV.
    #[command(args_override_self = true)]
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    #[value(name = "2f1")]
    Gauss,
    Pfq,
    F1,
    F2,
    Fd,
    Fa,
    Extbeta,
    Extgamma,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodFlag {
    Series,
    Integral,
    Mellin,
    Auto,
}

#[derive(Args, Clone, Debug)]
pub struct FuncArgs {
    #[arg(long, value_enum)]
    pub func: Func,
    /// `exp` or `kummer:a,c`.
    #[arg(long, default_value = "exp")]
    pub kernel: String,
    /// Comma list; for pfq `upper;lower` with optional `a:k` strides.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<f64>,
    /// Comma list of Lauricella arguments.
    #[arg(long, allow_hyphen_values = true)]
    pub xs: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    pub b: f64,
    #[arg(long, default_value_t = 0.0)]
    pub d: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodFlag,
    /// Contour override `c0,T,h` for the Mellin-Barnes method.
    #[arg(long, allow_hyphen_values = true)]
    pub contour: Option<String>,
    /// Number of Lauricella variables (checked against --xs).
    #[arg(long)]
    pub r: Option<usize>,
    /// Accept parameter pairings outside beta > alpha > 0 when the
    /// regularization makes the integrals converge.
    #[arg(long)]
    pub relaxed: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteFlag {
    All,
    Hyp,
    Appell,
    Lauricella,
    Ineq,
    Mellin,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFlag {
    Small,
    Full,
}

#[derive(Args, Clone, Debug)]
pub struct ConformanceArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteFlag,
    #[arg(long, value_enum, default_value = "small")]
    pub grid: GridFlag,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// CSV destination; standard output when absent (summary then goes to
    /// standard error).
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

#[derive(Args, Clone, Debug)]
pub struct HilbertArgs {
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    #[arg(long, default_value_t = 2.0)]
    pub q: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub s1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s2: f64,
    /// Scale of y in the first kernel factor.
    #[arg(long, default_value_t = 1.0)]
    pub a1: f64,
    /// Scale of y in the second kernel factor.
    #[arg(long, default_value_t = 1.0)]
    pub a2: f64,
    /// x-side power-weight exponent; middle of its range when absent.
    #[arg(long = "A1", allow_hyphen_values = true)]
    pub power1: Option<f64>,
    /// y-side power-weight exponent; middle of its range when absent.
    #[arg(long = "A2", allow_hyphen_values = true)]
    pub power2: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub pt: f64,
    #[arg(long, default_value_t = 0.0)]
    pub qt: f64,
    /// Test function, e.g. `exp_decay:0`, `bump:1,2`, `power_cut:0.3,2*1.5`, `zero`.
    #[arg(long, default_value = "exp_decay:0")]
    pub f: String,
    #[arg(long, default_value = "exp_decay:0")]
    pub g: String,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableVar {
    Z,
    X,
    Y,
    B,
    D,
}

#[derive(Args, Clone, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub func: FuncArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    /// Number of rows, endpoints included.
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Argument to vary; z for 2f1/pfq, x for f1/f2/fd/fa, b otherwise.
    #[arg(long, value_enum)]
    pub var: Option<TableVar>,
    /// CSV destination; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Splices the flags stored in a `--config` JSON file right after the
/// subcommand, so flags given on the command line override them.
pub fn expand_config(args: Vec<String>) -> Result<Vec<String>, CliError> {
    let mut path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(it.next().ok_or_else(|| usage("--config needs a path"))?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = std::fs::read_to_string(&path).map_err(|e| usage(format!("cannot read config {path}: {e}")))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("config {path} is not valid JSON: {e}")))?;
    let map = value
        .as_object()
        .ok_or_else(|| usage(format!("config {path} must hold a JSON object")))?;
    let mut flags = Vec::new();
    for (key, v) in map {
        let flag = format!("--{key}");
        match v {
            serde_json::Value::Bool(true) => flags.push(flag),
            serde_json::Value::Bool(false) | serde_json::Value::Null => {}
            serde_json::Value::String(s) => flags.push(format!("{flag}={s}")),
            serde_json::Value::Number(n) => flags.push(format!("{flag}={n}")),
            serde_json::Value::Array(items) => {
                let parts: Result<Vec<String>, CliError> = items
                    .iter()
                    .map(|i| match i {
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        serde_json::Value::String(s) => Ok(s.clone()),
                        _ => Err(usage(format!("config key '{key}' holds a non-scalar list item"))),
                    })
                    .collect();
                flags.push(format!("{flag}={}", parts?.join(",")));
            }
            serde_json::Value::Object(_) => return Err(usage(format!("config key '{key}' holds an object"))),
        }
    }
    // subcommand is the first argument after the program name
    let at = rest.len().min(2);
    let mut out: Vec<String> = rest[..at].to_vec();
    out.extend(flags);
    out.extend_from_slice(&rest[at..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn config_flags_are_overridden_by_command_line() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(
            f,
            r#"{{"func": "2f1", "params": [1, 1, 2], "z": 0.25, "relaxed": true, "b": 0.5}}"#
        )
        .unwrap();
        let path = f.path().to_str().unwrap();
        let args = expand_config(argv(&format!("exthyp eval --config {path} --z 0.5"))).unwrap();
        let cli = Cli::try_parse_from(args).unwrap();
        let Command::Eval(e) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(e.func, Func::Gauss);
        assert_eq!(e.params.as_deref(), Some("1,1,2"));
        assert_eq!(e.z, Some(0.5));
        assert_eq!(e.b, 0.5);
        assert!(e.relaxed);
    }

    #[test]
    fn missing_config_is_a_usage_error() {
        assert!(expand_config(argv("exthyp eval --config /nonexistent/cfg.json")).is_err());
        assert_eq!(
            expand_config(argv("exthyp eval --z 1")).unwrap(),
            argv("exthyp eval --z 1")
        );
    }

    #[test]
    fn hilbert_flags_are_case_sensitive() {
        let cli = Cli::try_parse_from(argv("exthyp hilbert --a1 1.2 --A1 0.3 --s2 -0.1")).unwrap();
        let Command::Hilbert(h) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!((h.a1, h.power1, h.s2), (1.2, Some(0.3), -0.1));
    }
}
