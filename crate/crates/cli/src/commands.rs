use std::fmt::Write as _;

use anyhow::{anyhow, bail};
use hyperladder::numeric::solve_theta_levels;
use hyperladder::operators::{apply_word, Realization};
use hyperladder::rational::{rat, to_f64};
use hyperladder::spectra::{explore, orthonormalize};
use hyperladder::verify::{run_suite, VerifyReport};
use hyperladder::{
    apply_hamiltonian, bound_spectrum, cprime, normalize, solve_xi, Algebra, GridSpec, OperatorName, OperatorWord,
    ParamPoint, Rational,
};
use serde::Serialize;

use crate::output::{emit, format, full, json};
use crate::{Format, OutputArgs, Status};

/// Largest allowed |algebraic - numeric| in `crosscheck`.
pub const CROSSCHECK_TOL: f64 = 1e-3;

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn spectrum(target: &ParamPoint, out: &OutputArgs) -> anyhow::Result<Status> {
    let fmt = format(out, Format::Json, &[Format::Json, Format::Csv], "spectrum")?;
    let report = bound_spectrum(target)?;
    let text = match fmt {
        Format::Csv => {
            let mut s = String::from("energy,degeneracy,vertex,witnesses\n");
            for l in &report.levels {
                let words: Vec<String> = l.witnesses.iter().map(|w| w.to_string()).collect();
                writeln!(
                    s,
                    "{},{},\"{}\",\"{}\"",
                    l.energy,
                    l.degeneracy,
                    l.vertex,
                    words.join("; ")
                )?;
            }
            s
        }
        _ => json(&report)?,
    };
    emit(out, &text)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct TermOut {
    coeff: String,
    cos: String,
    sin: String,
    cosh: String,
    sinh: String,
}

#[derive(Serialize)]
struct StateOut {
    vertex: ParamPoint,
    algebra: Algebra,
    word: OperatorWord,
    label: ParamPoint,
    expr: String,
    terms: Vec<TermOut>,
    /// Exact H eigenvalue when the result is a nonzero eigenstate.
    eigenvalue: Option<String>,
    normalization: Option<f64>,
}

pub fn state(vertex: &ParamPoint, word: &str, algebra: Algebra, out: &OutputArgs) -> anyhow::Result<Status> {
    format(out, Format::Json, &[Format::Json], "state")?;
    let word: OperatorWord = word.parse()?;
    let root = algebra.vertex_state(vertex)?;
    let st = apply_word(&word, &root);
    let eigenvalue = if st.is_zero() {
        None
    } else {
        apply_hamiltonian(&st).ratio_to(&st.expr)
    };
    let normalization = normalize(&st).ok().map(|n| n.constant);
    let terms = st
        .expr
        .terms()
        .map(|(e, c)| TermOut {
            coeff: rational_str(c),
            cos: rational_str(&e.cos),
            sin: rational_str(&e.sin),
            cosh: rational_str(&e.cosh),
            sinh: rational_str(&e.sinh),
        })
        .collect();
    let report = StateOut {
        vertex: vertex.clone(),
        algebra,
        word,
        label: st.label.clone(),
        expr: st.expr.to_string(),
        terms,
        eigenvalue: eigenvalue.as_ref().map(rational_str),
        normalization,
    };
    emit(out, &json(&report)?)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a VerifyReport,
}

pub fn verify(seed: u64, probes: usize, corrupt: Option<&str>, out: &OutputArgs) -> anyhow::Result<Status> {
    let fmt = format(out, Format::Text, &[Format::Text, Format::Json], "verify")?;
    if probes == 0 {
        bail!("--probes must be at least 1");
    }
    let mut real = Realization::default();
    if let Some(name) = corrupt {
        let op: OperatorName = name.parse()?;
        if !op.is_ladder() {
            bail!("--corrupt expects a ladder operator, got {op}");
        }
        real = real.with_scale(op, rat(3, 4));
    }
    let report = run_suite(&real, seed, probes);
    let passed = report.all_passed();
    let text = match fmt {
        Format::Json => json(&VerifyOut {
            passed,
            report: &report,
        })?,
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                writeln!(s, "{c}")?;
                if let Some(why) = &c.first_failure {
                    writeln!(s, "      {why}")?;
                }
            }
            let good = report.checks.iter().filter(|c| c.passed()).count();
            writeln!(
                s,
                "{good}/{} identities passed (seed {seed}, {probes} probes each)",
                report.checks.len()
            )?;
            s
        }
    };
    emit(out, &text)?;
    Ok(if passed { Status::Ok } else { Status::CheckFailed })
}

#[derive(Serialize)]
struct NodeOut {
    label: ParamPoint,
    depth: usize,
    /// Number of independent states found at the label.
    degeneracy: usize,
    #[serde(rename = "cprime")]
    c_prime: String,
    words: Vec<OperatorWord>,
}

#[derive(Serialize)]
struct EdgeOut {
    from: ParamPoint,
    to: ParamPoint,
    op: String,
}

#[derive(Serialize)]
struct LatticeOut {
    vertex: ParamPoint,
    algebra: Algebra,
    energy: String,
    max_depth: usize,
    nodes: Vec<NodeOut>,
    edges: Vec<EdgeOut>,
}

pub fn lattice(vertex: &ParamPoint, algebra: Algebra, depth: usize, out: &OutputArgs) -> anyhow::Result<Status> {
    let fmt = format(out, Format::Json, &[Format::Json, Format::Dot], "lattice")?;
    let lat = explore(vertex, algebra, depth, &|_| true)?;
    let text = match fmt {
        Format::Dot => {
            let id = |l: &ParamPoint| {
                lat.nodes
                    .iter()
                    .position(|n| &n.point.label == l)
                    .expect("edge endpoint is a node")
            };
            let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
            writeln!(s, "  label=\"{algebra} lattice from {vertex}, E = {}\";", lat.energy)?;
            for (i, n) in lat.nodes.iter().enumerate() {
                writeln!(
                    s,
                    "  n{i} [label=\"{}\\ndepth {}, dim {}\"];",
                    n.point.label,
                    n.point.depth,
                    n.states.len()
                )?;
            }
            for e in &lat.edges {
                writeln!(s, "  n{} -> n{} [label=\"{}\"];", id(&e.from), id(&e.to), e.op)?;
            }
            s.push_str("}\n");
            s
        }
        _ => {
            let report = LatticeOut {
                vertex: vertex.clone(),
                algebra,
                energy: rational_str(&lat.energy),
                max_depth: depth,
                nodes: lat
                    .nodes
                    .iter()
                    .map(|n| NodeOut {
                        label: n.point.label.clone(),
                        depth: n.point.depth,
                        degeneracy: n.states.len(),
                        c_prime: rational_str(&cprime(&n.point.label)),
                        words: n.states.iter().map(|w| w.word.clone()).collect(),
                    })
                    .collect(),
                edges: lat
                    .edges
                    .iter()
                    .map(|e| EdgeOut {
                        from: e.from.clone(),
                        to: e.to.clone(),
                        op: e.op.to_string(),
                    })
                    .collect(),
            };
            json(&report)?
        }
    };
    emit(out, &text)?;
    Ok(Status::Ok)
}

pub fn sample(
    target: &ParamPoint,
    level: usize,
    index: usize,
    grid: usize,
    cutoff: f64,
    out: &OutputArgs,
) -> anyhow::Result<Status> {
    format(out, Format::Csv, &[Format::Csv], "sample")?;
    if grid < 2 {
        bail!("--grid must be at least 2");
    }
    if !(cutoff.is_finite() && cutoff > 0.0) {
        bail!("--cutoff must be positive and finite");
    }
    let report = bound_spectrum(target)?;
    let lvl = report.levels.get(level).ok_or_else(|| {
        anyhow!(
            "level {level} requested but {target} has {} bound levels",
            report.levels.len()
        )
    })?;
    let root = Algebra::Su21.vertex_state(&lvl.vertex)?;
    let states: Vec<_> = lvl.witnesses.iter().map(|w| apply_word(w, &root)).collect();
    let basis = orthonormalize(&states)?;
    let st = basis.get(index).ok_or_else(|| {
        anyhow!(
            "index {index} requested but level {level} has dimension {}",
            basis.len()
        )
    })?;

    // cell centres of an N x N grid on (0, pi/2) x (0, cutoff)
    let ht = std::f64::consts::FRAC_PI_2 / grid as f64;
    let hx = cutoff / grid as f64;
    let mut s = String::with_capacity(grid * grid * 72);
    s.push_str("theta,xi,value\n");
    for i in 0..grid {
        let theta = (i as f64 + 0.5) * ht;
        for j in 0..grid {
            let xi = (j as f64 + 0.5) * hx;
            let v = st.eval(theta, xi)?;
            writeln!(s, "{},{},{}", full(theta), full(xi), full(v))?;
        }
    }
    emit(out, &s)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct CrossRow {
    energy: String,
    exact: f64,
    numeric: Option<f64>,
    delta: Option<f64>,
    within_tolerance: bool,
}

#[derive(Serialize)]
struct SeparatedOut {
    theta_level: usize,
    /// Numeric separation constant from the theta problem.
    alpha: f64,
    /// Negative eigenvalues of the xi problem at this alpha.
    eigenvalues: Vec<f64>,
}

#[derive(Serialize)]
struct CrossOut {
    target: ParamPoint,
    tolerance: f64,
    grid_theta: GridSpec,
    grid_xi: GridSpec,
    rows: Vec<CrossRow>,
    separated: Vec<SeparatedOut>,
    warnings: Vec<String>,
    passed: bool,
}

pub fn crosscheck(target: &ParamPoint, grid: usize, cutoff: f64, out: &OutputArgs) -> anyhow::Result<Status> {
    let fmt = format(out, Format::Json, &[Format::Json, Format::Csv], "crosscheck")?;
    let report = bound_spectrum(target)?;
    let (l0, l1, l2) = (to_f64(&target.l0), to_f64(&target.l1), to_f64(&target.l2));
    let grid_theta = GridSpec::theta(grid);
    let grid_xi = GridSpec::xi(grid, cutoff);

    // the xi problem binds only while sqrt(alpha) < |l2| - 3/2, and
    // sqrt(alpha_k) = 1 + l0 + l1 + 2k
    let levels = ((l2.abs() - 2.5 - l0 - l1) / 2.0).floor().max(0.0) as usize + 1;
    let theta = solve_theta_levels(l0, l1, &grid_theta, levels)?;
    let mut warnings = theta.warnings.clone();
    let mut separated = Vec::new();
    for (k, &alpha) in theta.eigenvalues.iter().enumerate() {
        let xi = solve_xi(l2, alpha, &grid_xi)?;
        warnings.extend(xi.warnings);
        separated.push(SeparatedOut {
            theta_level: k,
            alpha,
            eigenvalues: xi.eigenvalues,
        });
    }

    let numeric: Vec<f64> = separated.iter().flat_map(|s| s.eigenvalues.iter().copied()).collect();
    let rows: Vec<CrossRow> = report
        .levels
        .iter()
        .map(|l| {
            let exact = to_f64(&l.energy);
            let nearest = numeric
                .iter()
                .copied()
                .min_by(|a, b| (a - exact).abs().total_cmp(&(b - exact).abs()));
            let delta = nearest.map(|n| (n - exact).abs());
            CrossRow {
                energy: rational_str(&l.energy),
                exact,
                numeric: nearest,
                delta,
                within_tolerance: delta.is_some_and(|d| d <= CROSSCHECK_TOL),
            }
        })
        .collect();
    let passed = rows.iter().all(|r| r.within_tolerance);
    let text = match fmt {
        Format::Csv => {
            let mut s = String::from("energy,exact,numeric,delta\n");
            for r in &rows {
                let opt = |x: Option<f64>| x.map(full).unwrap_or_default();
                writeln!(s, "{},{},{},{}", r.energy, full(r.exact), opt(r.numeric), opt(r.delta))?;
            }
            s
        }
        _ => json(&CrossOut {
            target: target.clone(),
            tolerance: CROSSCHECK_TOL,
            grid_theta,
            grid_xi,
            rows,
            separated,
            warnings,
            passed,
        })?,
    };
    emit(out, &text)?;
    Ok(if passed { Status::Ok } else { Status::CheckFailed })
}
