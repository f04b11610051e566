use std::time::Instant;

use qspc_core::complement::{complementary_known_delta, ComplementOptions};
use qspc_core::metrics::phi;
use qspc_core::poly::DEFAULT_OVERSAMPLE;
use qspc_core::ComplexPoly;
use rayon::prelude::*;

use crate::commands::{degrees, family_doc};
use crate::io::{emit, Failure};
use crate::{BenchArgs, Family};

pub const HEADER: &str = "d,N,loss,phi_grid,runtime_ms,clamped_points";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub d: usize,
    pub n: usize,
    pub loss: f64,
    pub phi_grid: f64,
    pub runtime_ms: f64,
    pub clamped_points: usize,
}

impl BenchRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{:e},{:e},{:.3},{}",
            self.d, self.n, self.loss, self.phi_grid, self.runtime_ms, self.clamped_points
        )
    }
}

fn grid_sizes(from: usize, to: usize, factor: f64) -> Result<Vec<usize>, Failure> {
    if from == 0 || to < from {
        return Err(Failure::input("need 1 <= --n-from <= --n-to"));
    }
    if !(factor > 1.0) {
        return Err(Failure::input("--n-factor must exceed 1"));
    }
    let mut sizes = vec![from];
    loop {
        let last = *sizes.last().expect("nonempty");
        let next = ((last as f64 * factor).round() as usize).max(last + 1);
        if next > to {
            break;
        }
        sizes.push(next);
    }
    Ok(sizes)
}

fn measure(p: &ComplexPoly, n: usize, timed: bool) -> Result<BenchRow, Failure> {
    let start = Instant::now();
    let result = complementary_known_delta(p, &ComplementOptions::new(n))?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let (phi_grid, _) = phi(p, &result.q, DEFAULT_OVERSAMPLE)?;
    Ok(BenchRow {
        d: p.degree(),
        n,
        loss: result.loss,
        phi_grid,
        runtime_ms: if timed { elapsed } else { 0.0 },
        clamped_points: result.clamped_points,
    })
}

pub fn run(args: BenchArgs) -> Result<(), Failure> {
    let sizes = grid_sizes(args.n_from, args.n_to, args.n_factor)?;
    let polys: Vec<ComplexPoly> = if args.family.family == Family::Random {
        degrees(&args.family)?
            .into_iter()
            .map(|d| family_doc(&args.family, Some(d), true)?.into_poly().map_err(Failure::from))
            .collect::<Result<_, _>>()?
    } else {
        vec![family_doc(&args.family, None, true)?.into_poly()?]
    };

    let cells: Vec<(&ComplexPoly, usize)> = polys
        .iter()
        .flat_map(|p| sizes.iter().filter(|&&n| n > p.degree()).map(move |&n| (p, n)))
        .collect();
    let mut rows: Vec<BenchRow> = cells
        .into_par_iter()
        .map(|(p, n)| measure(p, n, !args.no_timing))
        .collect::<Result<_, _>>()?;
    rows.sort_by_key(|r| (r.d, r.n));

    let mut out = String::from(HEADER);
    out.push('\n');
    for row in &rows {
        out.push_str(&row.csv());
        out.push('\n');
    }
    emit(args.output.as_deref(), &out)
}
