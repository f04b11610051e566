use std::f64::consts::PI;

use qspc_core::complement::{
    auto_n, complementary_downscaled, complementary_known_delta, required_n as required_grid, ComplementOptions,
    ComplementResult, ZeroHandling,
};
use qspc_core::conventions::{cheb_to_circle, circle_to_laurent, laurent_to_circle, CircleMode};
use qspc_core::families::{
    eig_filter, jacobi_anger, random_poly, signum_params, signum_poly, RandomSpec,
};
use qspc_core::json::{CoeffDoc, Coefficients};
use qspc_core::metrics::metric_report;
use qspc_core::oracle::{canonical_complement, DEFAULT_CIRCLE_TOL};
use qspc_core::poly::{sup_norm_on_circle, DEFAULT_OVERSAMPLE};
use serde::Serialize;

use crate::io::{emit, read_doc, Failure};
use crate::{ComplementArgs, ConvertArgs, Family, FamilyArgs, From, GenerateArgs, MetricsArgs, Mode, OracleCheckArgs, RequiredNArgs, To};

fn clamp_hint(result: &ComplementResult) {
    if result.clamped_points > 0 {
        eprintln!(
            "warning: clamped 1 - |P|^2 at {} grid point(s); a root of 1 - |P|^2 sits on the grid. \
             Consider rotating P(z) -> P(e^(i a) z) with a = pi/(4N) = {:e}",
            result.clamped_points,
            PI / (4.0 * result.n_used as f64)
        );
    }
}

pub fn complement(args: ComplementArgs) -> Result<(), Failure> {
    let p = read_doc(&args.input)?.into_poly()?;
    let result = if let Some(eps) = args.eps {
        complementary_downscaled(&p, eps)?
    } else if args.auto {
        let target = args.target.expect("clap enforces --target with --auto");
        auto_n(&p, target, args.max_n)?
    } else if let Some(n) = args.n {
        if let Some(delta) = args.delta {
            let grid = sup_norm_on_circle(&p, DEFAULT_OVERSAMPLE);
            if grid > 1.0 - delta {
                eprintln!("warning: grid norm {grid} exceeds 1 - delta = {}", 1.0 - delta);
            }
        }
        let opts = ComplementOptions {
            n_points: n,
            zero_handling: if args.strict { ZeroHandling::Strict } else { ZeroHandling::Clamp },
            clamp_floor: args.clamp_floor,
        };
        complementary_known_delta(&p, &opts)?
    } else {
        return Err(Failure::input("choose one of --n N, --eps E or --auto --target L"));
    };
    clamp_hint(&result);
    emit(args.output.as_deref(), &CoeffDoc::from_complement(&result).to_json())
}

pub fn metrics(args: MetricsArgs) -> Result<(), Failure> {
    let p = read_doc(&args.p)?.into_poly()?;
    let q = read_doc(&args.q)?.into_poly()?;
    let report = metric_report(&p, &q, args.oversample)?;
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    emit(None, &text)
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::input(format!("--{flag} is required for --family {family}")))
}

/// Parses `--d` as a comma-separated list of degrees.
pub fn degrees(args: &FamilyArgs) -> Result<Vec<usize>, Failure> {
    let raw = need(args.d.as_deref(), "d", "random")?;
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::input(format!("--d: {s:?} is not a degree")))
        })
        .collect()
}

/// Builds the family member, as a circle polynomial when `circle` is set.
pub fn family_doc(args: &FamilyArgs, degree: Option<usize>, circle: bool) -> Result<CoeffDoc, Failure> {
    let input = |e: qspc_core::Error| Failure::input(e.to_string());
    let series = match args.family {
        Family::Random => {
            let d = match degree {
                Some(d) => d,
                None => match degrees(args)?.as_slice() {
                    [d] => *d,
                    _ => return Err(Failure::input("--d takes a single degree here")),
                },
            };
            let spec = RandomSpec::new(d, args.delta, args.seed).map_err(input)?;
            return Ok(CoeffDoc::from_poly(&random_poly(&spec)));
        }
        Family::Hamiltonian => {
            let tau = need(args.tau, "tau", "hamiltonian")?;
            let eps = need(args.eps, "eps", "hamiltonian")?;
            (jacobi_anger(tau, eps).map_err(input)?, CircleMode::Full)
        }
        Family::Eigfilter => {
            let a = need(args.a, "a", "eigfilter")?;
            let m = need(args.m, "m", "eigfilter")?;
            (eig_filter(a, m).map_err(input)?, CircleMode::Parity)
        }
        Family::Signum => {
            let a = need(args.a, "a", "signum")?;
            let eps = need(args.eps, "eps", "signum")?;
            let params = signum_params(a, eps).map_err(input)?;
            (signum_poly(&params), CircleMode::Parity)
        }
    };
    let (series, mode) = series;
    if circle {
        Ok(CoeffDoc::from_poly(&cheb_to_circle(&series, mode)?))
    } else {
        Ok(CoeffDoc::from_cheb(&series))
    }
}

pub fn generate(args: GenerateArgs) -> Result<(), Failure> {
    let doc = family_doc(&args.family, None, false)?;
    emit(args.output.as_deref(), &doc.to_json())
}

pub fn convert(args: ConvertArgs) -> Result<(), Failure> {
    let coeffs = read_doc(&args.input)?.into_coefficients()?;
    let mode = match args.mode {
        Mode::Full => CircleMode::Full,
        Mode::Parity => CircleMode::Parity,
    };
    let doc = match (args.from, coeffs, args.to) {
        (From::Cheb, Coefficients::Chebyshev(f), To::Circle) => CoeffDoc::from_poly(&cheb_to_circle(&f, mode)?),
        (From::Laurent, Coefficients::Laurent(f), To::Circle) => CoeffDoc::from_poly(&laurent_to_circle(&f)?),
        (From::Circle, Coefficients::Circle(p), To::Circle) => CoeffDoc::from_poly(&p),
        (From::Circle, Coefficients::Circle(p), To::Laurent) => CoeffDoc::from_laurent(&circle_to_laurent(&p)),
        (from, _, to) => {
            return Err(Failure::input(format!(
                "cannot convert this file with --from {from:?} --to {to:?}; check its \"basis\" field"
            )))
        }
    };
    emit(args.output.as_deref(), &doc.to_json())
}

pub fn required_n(args: RequiredNArgs) -> Result<(), Failure> {
    let n = required_grid(args.eps, args.delta, args.d)?;
    emit(None, &format!("{n}\n"))
}

#[derive(Serialize)]
struct DegreeReport {
    d: usize,
    seeds: u64,
    max_coeff_diff: f64,
    worst_seed: u64,
    max_n_used: usize,
    pass: bool,
}

#[derive(Serialize)]
struct OracleReport {
    delta: f64,
    target: f64,
    tol: f64,
    degrees: Vec<DegreeReport>,
    pass: bool,
}

pub fn oracle_check(args: OracleCheckArgs) -> Result<(), Failure> {
    use rayon::prelude::*;

    let mut degrees = Vec::new();
    for &d in &args.d {
        let rows: Vec<(u64, f64, usize)> = (args.seed_base..args.seed_base + args.seeds)
            .into_par_iter()
            .map(|seed| -> Result<(u64, f64, usize), Failure> {
                let spec = RandomSpec::new(d, args.delta, seed).map_err(|e| Failure::input(e.to_string()))?;
                let p = random_poly(&spec);
                let fft = auto_n(&p, args.target, 1 << 24)?;
                let roots = canonical_complement(&p, DEFAULT_CIRCLE_TOL)?;
                let diff = fft
                    .q
                    .coeffs()
                    .iter()
                    .zip(roots.coeffs())
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                Ok((seed, diff, fft.n_used))
            })
            .collect::<Result<_, _>>()?;
        let (worst_seed, max_coeff_diff) = rows
            .iter()
            .fold((args.seed_base, 0.0), |acc, r| if r.1 > acc.1 { (r.0, r.1) } else { acc });
        degrees.push(DegreeReport {
            d,
            seeds: args.seeds,
            max_coeff_diff,
            worst_seed,
            max_n_used: rows.iter().map(|r| r.2).max().unwrap_or(0),
            pass: max_coeff_diff <= args.tol,
        });
    }
    let pass = degrees.iter().all(|r| r.pass);
    let report = OracleReport {
        delta: args.delta,
        target: args.target,
        tol: args.tol,
        degrees,
        pass,
    };
    emit(
        args.output.as_deref(),
        &(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"),
    )?;
    if pass {
        Ok(())
    } else {
        Err(Failure::math("oracle disagreement above tolerance"))
    }
}
