//! `eval` and `table` subcommands.

use crate::cli::{Func, FuncArgs, MethodFlag, TableArgs, TableVar};
use crate::exit::{usage, CliError};
use crate::output::{num, to_json};
use exthyp::appell::{f1_auto, f1_integral, f1_series, f2_auto, f2_integral, f2_series, AppellParams};
use exthyp::extbeta::{ext_beta, ext_gamma};
use exthyp::hyp::{eval_pfq, MethodChoice, PfqSpec, SERIES_RADIUS};
use exthyp::lauricella::{fa_integral, fa_series, fd_integral, fd_series, LauricellaParams};
use exthyp::mellin::{mb_eval, ContourSpec};
use exthyp::{EvalResult, Kernel, RegPair};
use serde::Serialize;
use std::io::Write;

#[derive(Serialize)]
struct EvalOutput {
    value: f64,
    abs_err_est: f64,
    method: &'static str,
    terms_or_nodes: usize,
    converged: bool,
}

fn parse_f64(s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| usage(format!("'{s}' is not a number")))
}

fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_f64).collect()
}

/// Upper `(value, stride)` pairs and lower parameters.
pub type PfqParams = (Vec<(f64, u32)>, Vec<f64>);

/// `a1,a2:2,...;b1,...`: upper parameters with optional strides, then lower.
pub fn parse_pfq(s: &str) -> Result<PfqParams, CliError> {
    let (up, lo) = s
        .split_once(';')
        .ok_or_else(|| usage("pfq parameters need the form 'upper;lower'"))?;
    let upper = up
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match t.split_once(':') {
            Some((a, k)) => {
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| usage(format!("bad stride in '{t}'")))?;
                if k == 0 {
                    return Err(usage(format!("stride must be positive in '{t}'")));
                }
                Ok((parse_f64(a)?, k))
            }
            None => Ok((parse_f64(t)?, 1)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((upper, parse_list(lo)?))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("--{flag} is required for this function")))
}

fn params(a: &FuncArgs, count: Option<usize>) -> Result<Vec<f64>, CliError> {
    let v = parse_list(need(a.params.as_deref(), "params")?)?;
    if let Some(n) = count {
        if v.len() != n {
            return Err(usage(format!("--params needs {n} values, got {}", v.len())));
        }
    }
    Ok(v)
}

fn lauricella_args(a: &FuncArgs) -> Result<Vec<f64>, CliError> {
    let xs = parse_list(need(a.xs.as_deref(), "xs")?)?;
    if let Some(r) = a.r {
        if r != xs.len() {
            return Err(usage(format!("--r {r} does not match {} values in --xs", xs.len())));
        }
    }
    Ok(xs)
}

fn pfq_spec(
    a: &FuncArgs,
    kernel: Kernel,
    reg: RegPair,
    upper: &[(f64, u32)],
    lower: &[f64],
) -> Result<PfqSpec, CliError> {
    Ok(if a.relaxed {
        PfqSpec::relaxed(kernel, upper, lower, reg)?
    } else {
        PfqSpec::new(kernel, upper, lower, reg)?
    })
}

fn eval_spec(a: &FuncArgs, spec: &PfqSpec) -> Result<EvalResult, CliError> {
    let z = need(a.z, "z")?;
    Ok(match (a.method, a.contour.as_deref()) {
        (MethodFlag::Mellin, Some(c)) => {
            let c = parse_list(c)?;
            if c.len() != 3 {
                return Err(usage("--contour needs c0,T,h"));
            }
            mb_eval(spec, z, ContourSpec::new(c[0], c[1], c[2])?, a.tol)?
        }
        (_, Some(_)) => return Err(usage("--contour applies only to --method mellin")),
        (m, None) => eval_pfq(spec, z, choice(m), a.tol)?,
    })
}

fn choice(m: MethodFlag) -> MethodChoice {
    match m {
        MethodFlag::Series => MethodChoice::Series,
        MethodFlag::Integral => MethodChoice::Integral,
        MethodFlag::Mellin => MethodChoice::Mellin,
        MethodFlag::Auto => MethodChoice::Auto,
    }
}

fn no_mellin(a: &FuncArgs) -> Result<(), CliError> {
    if a.method == MethodFlag::Mellin || a.contour.is_some() {
        return Err(usage("--method mellin is available for 2f1 and pfq only"));
    }
    Ok(())
}

/// Evaluates the function selected by the flags.
pub fn evaluate(a: &FuncArgs) -> Result<EvalResult, CliError> {
    if !(a.tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    let kernel = Kernel::parse(&a.kernel).map_err(|e| usage(e.to_string()))?;
    let reg = RegPair::new(a.b, a.d)?;
    match a.func {
        Func::Gauss => {
            let p = params(a, Some(3))?;
            let spec = pfq_spec(a, kernel, reg, &[(p[0], 1), (p[1], 1)], &[p[2]])?;
            eval_spec(a, &spec)
        }
        Func::Pfq => {
            let (upper, lower) = parse_pfq(need(a.params.as_deref(), "params")?)?;
            let spec = pfq_spec(a, kernel, reg, &upper, &lower)?;
            eval_spec(a, &spec)
        }
        Func::F1 => {
            no_mellin(a)?;
            let (x, y) = (need(a.x, "x")?, need(a.y, "y")?);
            let p = params(a, Some(4))?;
            let ap = AppellParams::f1(kernel, p[0], p[1], p[2], p[3], reg);
            Ok(match a.method {
                MethodFlag::Series => f1_series(&ap, x, y, a.tol)?,
                MethodFlag::Integral => f1_integral(&ap, x, y, a.tol)?,
                _ => f1_auto(&ap, x, y, a.tol)?,
            })
        }
        Func::F2 => {
            no_mellin(a)?;
            let (x, y) = (need(a.x, "x")?, need(a.y, "y")?);
            let p = params(a, Some(5))?;
            let ap = AppellParams::f2(kernel, p[0], p[1], p[2], p[3], p[4], reg);
            Ok(match a.method {
                MethodFlag::Series => f2_series(&ap, x, y, a.tol)?,
                MethodFlag::Integral => f2_integral(&ap, x, y, a.tol)?,
                _ => f2_auto(&ap, x, y, a.tol)?,
            })
        }
        Func::Fd => {
            no_mellin(a)?;
            let xs = lauricella_args(a)?;
            let p = params(a, Some(xs.len() + 2))?;
            let lp = LauricellaParams::new(kernel, p[0], &p[1..=xs.len()], &p[xs.len() + 1..], &xs, reg)?;
            let series = match a.method {
                MethodFlag::Series => true,
                MethodFlag::Integral => false,
                _ => xs.iter().all(|x| x.abs() < SERIES_RADIUS),
            };
            Ok(if series {
                fd_series(&lp, a.tol)?
            } else {
                fd_integral(&lp, a.tol)?
            })
        }
        Func::Fa => {
            no_mellin(a)?;
            let xs = lauricella_args(a)?;
            let r = xs.len();
            let p = params(a, Some(2 * r + 1))?;
            let lp = LauricellaParams::new(kernel, p[0], &p[1..=r], &p[r + 1..], &xs, reg)?;
            let series = match a.method {
                MethodFlag::Series => true,
                MethodFlag::Integral => false,
                _ => xs.iter().map(|x| x.abs()).sum::<f64>() < SERIES_RADIUS,
            };
            Ok(if series {
                fa_series(&lp, a.tol)?
            } else {
                fa_integral(&lp, a.tol)?
            })
        }
        Func::Extbeta => {
            no_mellin(a)?;
            let p = params(a, Some(2))?;
            Ok(ext_beta(&kernel, p[0], p[1], reg, a.tol)?)
        }
        Func::Extgamma => {
            no_mellin(a)?;
            let z = match (a.z, a.params.as_deref()) {
                (Some(z), _) => z,
                (None, Some(_)) => params(a, Some(1))?[0],
                (None, None) => return Err(usage("extgamma needs --z or --params")),
            };
            Ok(ext_gamma(&kernel, z, a.b, a.tol)?)
        }
    }
}

/// Prints the JSON line and returns the exit code: 0 when converged, 3 otherwise.
pub fn cmd_eval(a: &FuncArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let r = evaluate(a)?;
    let o = EvalOutput {
        value: r.value,
        abs_err_est: r.abs_err,
        method: r.method.as_str(),
        terms_or_nodes: r.terms_or_nodes,
        converged: r.converged,
    };
    writeln!(out, "{}", to_json(&o))?;
    Ok(if r.converged {
        crate::exit::OK
    } else {
        crate::exit::NO_CONVERGENCE
    })
}

fn default_var(f: Func) -> TableVar {
    match f {
        Func::Gauss | Func::Pfq => TableVar::Z,
        Func::F1 | Func::F2 | Func::Fd | Func::Fa => TableVar::X,
        Func::Extbeta | Func::Extgamma => TableVar::B,
    }
}

/// Copy of `a` with one argument set to `v`. For Lauricella functions `x`
/// is the first entry of `--xs`.
fn with_var(a: &FuncArgs, var: TableVar, v: f64) -> Result<FuncArgs, CliError> {
    let mut a = a.clone();
    match var {
        TableVar::Z => a.z = Some(v),
        TableVar::X if matches!(a.func, Func::Fd | Func::Fa) => {
            let mut xs = parse_list(need(a.xs.as_deref(), "xs")?)?;
            if xs.is_empty() {
                return Err(usage("--xs is empty"));
            }
            xs[0] = v;
            a.xs = Some(xs.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(","));
        }
        TableVar::X => a.x = Some(v),
        TableVar::Y => a.y = Some(v),
        TableVar::B => a.b = v,
        TableVar::D => a.d = v,
    }
    Ok(a)
}

/// Rows of (argument, value, err_est) over evenly spaced arguments.
pub fn cmd_table(t: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if t.steps == 0 {
        return Err(usage("--steps must be at least 1"));
    }
    if !(t.from.is_finite() && t.to.is_finite()) {
        return Err(usage("--from and --to must be finite"));
    }
    let var = t.var.unwrap_or_else(|| default_var(t.func.func));
    let mut rows = Vec::with_capacity(t.steps);
    let mut code = crate::exit::OK;
    for i in 0..t.steps {
        let arg = if t.steps == 1 {
            t.from
        } else {
            t.from + (t.to - t.from) * i as f64 / (t.steps - 1) as f64
        };
        let r = evaluate(&with_var(&t.func, var, arg)?)?;
        if !r.converged {
            code = crate::exit::NO_CONVERGENCE;
        }
        rows.push((arg, r.value, r.abs_err));
    }
    let sink: Box<dyn Write + '_> = match &t.out {
        Some(p) => Box::new(std::fs::File::create(p)?),
        None => Box::new(out),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["argument", "value", "err_est"])?;
    for (arg, v, e) in rows {
        w.write_record([num(arg), num(v), num(e)])?;
    }
    w.flush()?;
    Ok(code)
}
