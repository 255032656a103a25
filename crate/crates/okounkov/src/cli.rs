//! Subcommand driver behind the thin binary: instance loading, experiment
//! orchestration, verification suites and report emission. One subcommand
//! per theorem cluster keeps the map from claims to runs legible.
//!
//! Exit codes: 0 when every hard check passes, 1 when a hard check fails,
//! 2 on operational errors (bad schema, Cauchy violations at load, unmet
//! hypothesis gates).

use crate::adelic::limit_series;
use crate::body::{
    adelic_volume_estimate, okounkov_truncated, restricted_series, restricted_volume_estimate,
    semigroup_slice,
};
use crate::geometry::lattice_index;
use crate::global::{build_global, continuity_experiment, fiber_check, model_convergence};
use crate::instance::Instance;
use crate::rational::{fraction_string, rat, Rat};
use crate::report::{write_bodies_svg, write_body_json, write_csv, RunReport};
use crate::series::stable_base_locus;
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "okounkov",
    about = "Exact Okounkov bodies, volumes and base loci for adelic divisors on toric instances",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output directory (overrides OKOUNKOV_OUT; default okounkov-out).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Truncated and exact Okounkov body of one divisor.
    Body {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        flag: Option<String>,
    },
    /// Volume sequence and certified volume estimate.
    Volume {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Hausdorff convergence of the stage bodies to the limit body.
    Converge {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        stages: Option<usize>,
    },
    /// Global semigroup and cone of a divisor pair, with fiber checks.
    Global {
        #[arg(long)]
        instance: PathBuf,
        /// Pair of divisor names, comma separated.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        amax: Option<i64>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Fiber directions a1,a2 (repeatable), e.g. --fiber 1,1.
        #[arg(long)]
        fiber: Vec<String>,
    },
    /// Restricted series, slice counts and restricted volume along a flat.
    Restricted {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        flat: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        ample: Option<String>,
    },
    /// Base locus, stable base locus and augmented base locus.
    Baselocus {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        ample: Option<String>,
        /// Second ample reference for the independence cross-check.
        #[arg(long)]
        ample2: Option<String>,
    },
    /// Volume continuity under rational perturbations.
    Continuity {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        divisor: String,
        /// Perturbation: "boundary" or the name of a declared ample divisor.
        #[arg(long, default_value = "boundary")]
        perturb: String,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        /// geometry | series | adelic | bodies | global | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Shortcut for --suite all.
        #[arg(long, default_value_t = false)]
        all: bool,
        /// Sample count for the randomized suites.
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Op(String),
    #[error(transparent)]
    Instance(#[from] crate::instance::InstanceError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<crate::body::BodyError> for CliError {
    fn from(e: crate::body::BodyError) -> Self {
        CliError::Op(e.to_string())
    }
}
impl From<crate::global::GlobalError> for CliError {
    fn from(e: crate::global::GlobalError) -> Self {
        CliError::Op(e.to_string())
    }
}
impl From<crate::adelic::AdelicError> for CliError {
    fn from(e: crate::adelic::AdelicError) -> Self {
        CliError::Op(e.to_string())
    }
}
impl From<crate::series::SeriesError> for CliError {
    fn from(e: crate::series::SeriesError) -> Self {
        CliError::Op(e.to_string())
    }
}

pub fn out_dir(cli_out: &Option<PathBuf>) -> PathBuf {
    cli_out
        .clone()
        .or_else(|| std::env::var_os("OKOUNKOV_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("okounkov-out"))
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let out = out_dir(&cli.out);
    match dispatch(&cli, &out) {
        Ok(report) => {
            report.print_summary();
            match report.write(&out) {
                Ok(path) => println!("report: {}", path.display()),
                Err(e) => {
                    eprintln!("error: cannot write report: {e}");
                    return 2;
                }
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &Path) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Body { instance, divisor, max_degree, flag } => {
            cmd_body(instance, divisor, *max_degree, flag.as_deref(), out)
        }
        Command::Volume { instance, divisor, max_degree } => {
            cmd_volume(instance, divisor, *max_degree, out)
        }
        Command::Converge { instance, divisor, stages } => {
            cmd_converge(instance, divisor, *stages, out)
        }
        Command::Global { instance, pair, amax, max_degree, fiber } => {
            cmd_global(instance, pair, *amax, *max_degree, fiber, out)
        }
        Command::Restricted { instance, divisor, flat, max_degree, ample } => {
            cmd_restricted(instance, divisor, flat, *max_degree, ample.as_deref(), out)
        }
        Command::Baselocus { instance, divisor, max_degree, ample, ample2 } => {
            cmd_baselocus(instance, divisor, *max_degree, ample.as_deref(), ample2.as_deref(), out)
        }
        Command::Continuity { instance, divisor, perturb, steps } => {
            cmd_continuity(instance, divisor, perturb, *steps, out)
        }
        Command::Verify { instance, suite, all, samples } => {
            let suite = if *all { "all" } else { suite.as_str() };
            cmd_verify(instance, suite, cli.seed, *samples)
        }
    }
}

fn cmd_body(
    path: &Path,
    divisor: &str,
    max_degree: Option<usize>,
    flag: Option<&str>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let flag = inst.flag(flag)?;
    let bound = max_degree.unwrap_or(inst.params.max_degree);
    let series = limit_series(d);
    let approx = okounkov_truncated(&series, flag, bound)?;
    let mut report = RunReport::new(format!("body --divisor {divisor}"), &inst.name);

    let inner_rel = format!("bodies/{divisor}_inner.json");
    write_body_json(&out.join(&inner_rel), &approx.inner_body)?;
    report.artifact(inner_rel);
    if let Some(exact) = &approx.exact_body {
        let exact_rel = format!("bodies/{divisor}_exact.json");
        write_body_json(&out.join(&exact_rel), exact)?;
        report.artifact(exact_rel);
        report.check(
            "inner-inside-exact",
            exact.contains_polytope(&approx.inner_body),
            format!("truncation at degree {bound} stays inside the exact body"),
        );
        report.value_rat("volume/exact", &exact.volume());
        report.value_rat("volume/exact-scaled", &crate::body::scaled_volume(exact));
    }
    report.value_rat("volume/inner", &approx.inner_body.volume());
    report.value_text("observed-big", if approx.observed_big { "yes" } else { "not observed by this degree" });

    let rows: Vec<Vec<String>> = approx
        .volume_sequence
        .iter()
        .map(|r| {
            vec![
                r.degree.to_string(),
                r.count.to_string(),
                fraction_string(&r.density),
            ]
        })
        .collect();
    let csv_rel = format!("tables/{divisor}_counts.csv");
    write_csv(&out.join(&csv_rel), &["degree", "count", "count_over_deg_d"], &rows)?;
    report.artifact(csv_rel);

    if flag.space_dim() <= 2 && !approx.inner_body.is_empty() {
        let svg_rel = format!("plots/{divisor}_body.svg");
        let mut bodies = vec![(format!("inner@{bound}"), &approx.inner_body)];
        if let Some(exact) = &approx.exact_body {
            bodies.push(("exact".to_string(), exact));
        }
        write_bodies_svg(&out.join(&svg_rel), &bodies)?;
        report.artifact(svg_rel);
    }
    report.info(
        "body-computed",
        true,
        format!(
            "{} slices to degree {bound}; inner body has {} vertices",
            approx.volume_sequence.len(),
            approx.inner_body.vertices().len()
        ),
    );
    Ok(report)
}

fn cmd_volume(
    path: &Path,
    divisor: &str,
    max_degree: Option<usize>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let flag = inst.flag(None)?;
    let bound = max_degree.unwrap_or(inst.params.max_degree).max(2);
    let est = adelic_volume_estimate(&limit_series(d), flag, bound)?;
    let mut report = RunReport::new(format!("volume --divisor {divisor}"), &inst.name);
    report.value_rat("estimate", &est.estimate);
    report.value_rat("certified-lower", &est.certified_lower);
    if let Some(upper) = &est.certified_upper {
        report.value_rat("certified-upper", upper);
        report.check(
            "estimate-bracketed",
            &est.certified_lower <= upper,
            "certified interval is ordered",
        );
        let d_dim = est.ambient_dim;
        let limit = upper / crate::rational::rat_int((1..=d_dim as i64).product());
        report.check(
            "gap-decay",
            crate::body::volume_gaps_decay(&est.approx.volume_sequence, d_dim, &limit),
            format!("scaled count gaps nonincreasing to degree {bound}"),
        );
    }
    let rows: Vec<Vec<String>> = est
        .approx
        .volume_sequence
        .iter()
        .map(|r| {
            let scaled = crate::rational::rat_int((1..=est.ambient_dim as i64).product()) * &r.density;
            vec![r.degree.to_string(), r.count.to_string(), fraction_string(&scaled)]
        })
        .collect();
    let csv_rel = format!("tables/{divisor}_volume.csv");
    write_csv(&out.join(&csv_rel), &["degree", "count", "scaled_estimate"], &rows)?;
    report.artifact(csv_rel);
    Ok(report)
}

fn cmd_converge(
    path: &Path,
    divisor: &str,
    stages: Option<usize>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let bound = stages.unwrap_or(inst.params.stage_bound).max(2);
    let table = model_convergence(d, bound)?;
    let mut report = RunReport::new(format!("converge --divisor {divisor}"), &inst.name);
    report.check("gaps-monotone", table.gaps_monotone, "Hausdorff gaps nonincreasing");
    report.check("volumes-monotone", table.volumes_monotone, "volume errors nonincreasing");
    report.value_rat("limit-volume", &table.limit_body_volume);
    if let Some(c) = &table.ratio_bound {
        report.value_rat("gap-over-q-bound", c);
    }
    report.value_text("metric", table.metric_note);
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| {
            vec![
                r.stage.to_string(),
                fraction_string(&r.tolerance),
                fraction_string(&r.hausdorff_gap),
                fraction_string(&r.body_volume),
                fraction_string(&r.scaled_volume),
            ]
        })
        .collect();
    let csv_rel = format!("tables/{divisor}_convergence.csv");
    write_csv(&out.join(&csv_rel), &["stage", "q", "hausdorff_gap", "body_volume", "scaled_volume"], &rows)?;
    report.artifact(csv_rel);

    if inst.frame.dim() <= 2 {
        let limit_body = d.limit_polytope()?;
        let mut bodies = vec![("limit".to_string(), &limit_body)];
        let mut stage_bodies = Vec::new();
        for j in 1..=bound.min(4) {
            let (dj, _) = d.stage(j)?;
            stage_bodies.push((format!("stage {j}"), dj.polytope(&inst.frame)?));
        }
        for (label, body) in &stage_bodies {
            bodies.push((label.clone(), body));
        }
        let svg_rel = format!("plots/{divisor}_convergence.svg");
        write_bodies_svg(&out.join(&svg_rel), &bodies)?;
        report.artifact(svg_rel);
    }
    Ok(report)
}

fn parse_pair(text: &str) -> Result<(Rat, Rat), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Op(format!("expected a1,a2 — got `{text}`")));
    }
    let parse_one = |s: &str| -> Result<Rat, CliError> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.parse().map_err(|_| CliError::Op(format!("bad rational `{s}`")))?;
            let d: i64 = d.parse().map_err(|_| CliError::Op(format!("bad rational `{s}`")))?;
            if d == 0 {
                return Err(CliError::Op("zero denominator".into()));
            }
            Ok(rat(n, d))
        } else {
            let n: i64 = s.parse().map_err(|_| CliError::Op(format!("bad integer `{s}`")))?;
            Ok(crate::rational::rat_int(n))
        }
    };
    Ok((parse_one(parts[0])?, parse_one(parts[1])?))
}

fn cmd_global(
    path: &Path,
    pair: &str,
    amax: Option<i64>,
    max_degree: Option<usize>,
    fibers: &[String],
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let names: Vec<&str> = pair.split(',').map(str::trim).collect();
    if names.len() != 2 {
        return Err(CliError::Op(format!("--pair expects two names, got `{pair}`")));
    }
    let d = inst.divisor(names[0])?;
    let e = inst.divisor(names[1])?;
    let flag = inst.flag(None)?;
    let amax = amax.unwrap_or(inst.params.amax);
    let degree = max_degree.unwrap_or(inst.params.grid_degree);
    let (semigroup, cone) = build_global(d, e, flag, amax, degree)?;
    let mut report = RunReport::new(format!("global --pair {pair}"), &inst.name);
    report.value_text("points", semigroup.num_points().to_string());
    report.value_text(
        "support-heights",
        semigroup
            .support_heights()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    let index = lattice_index(
        &semigroup
            .graded_vectors()
            .into_iter()
            .filter(|v| v.iter().any(|&c| c != 0))
            .collect::<Vec<_>>(),
    );
    report.check(
        "lattice-fullness",
        index.is_one(),
        format!("global points have index {index} in Z^(d+2)"),
    );

    let mut requested: Vec<(Rat, Rat)> = Vec::new();
    for f in fibers {
        requested.push(parse_pair(f)?);
    }
    if requested.is_empty() {
        requested.push((crate::rational::rat_int(1), crate::rational::rat_int(1)));
    }
    for a in &requested {
        let rep = fiber_check(d, e, a.clone(), flag, &cone, degree)?;
        let label = format!(
            "fiber({},{})",
            fraction_string(&a.0),
            fraction_string(&a.1)
        );
        match &rep.status {
            crate::global::FiberStatus::Skipped { reason } => {
                report.info(&label, true, format!("skipped: {reason}"));
            }
            crate::global::FiberStatus::Checked { exact_equal, gap } => {
                let passed = *exact_equal != Some(false);
                let gap_text = gap
                    .as_ref()
                    .map(|g| fraction_string(g))
                    .unwrap_or_else(|| "n/a".to_string());
                report.check(&label, passed, format!("gap {gap_text}"));
                if let Some(body) = &rep.direct {
                    let rel = format!(
                        "bodies/fiber_{}_{}.json",
                        fraction_string(&a.0).replace('/', "_"),
                        fraction_string(&a.1).replace('/', "_")
                    );
                    write_body_json(&out.join(&rel), body)?;
                    report.artifact(rel);
                }
            }
        }
    }
    let rows: Vec<Vec<String>> = semigroup
        .points()
        .map(|((v, (h1, h2)), count)| {
            vec![format!("{v:?}"), h1.to_string(), h2.to_string(), count.to_string()]
        })
        .collect();
    let csv_rel = "tables/global_points.csv".to_string();
    write_csv(&out.join(&csv_rel), &["valuation", "h1", "h2", "witnesses"], &rows)?;
    report.artifact(csv_rel);
    Ok(report)
}

fn cmd_restricted(
    path: &Path,
    divisor: &str,
    flat_name: &str,
    max_degree: Option<usize>,
    ample: Option<&str>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let flat = inst.flat(flat_name)?;
    let ample = inst.ample(ample)?;
    let bound = max_degree.unwrap_or(inst.params.max_degree).max(2);
    let series = restricted_series(d, flat, ample, inst.params.bplus_degree)?;
    let flag = inst.flag(None)?.clone().restriction_to(flat)?;
    let mut report = RunReport::new(
        format!("restricted --divisor {divisor} --flat {flat_name}"),
        &inst.name,
    );
    let mut rows = Vec::new();
    let mut counts_ok = true;
    for m in 1..=bound {
        let slice = semigroup_slice(&series, m, &flag)?;
        let dim = series.space(m)?.dim();
        if slice.len() != dim {
            counts_ok = false;
        }
        rows.push(vec![m.to_string(), dim.to_string(), slice.len().to_string()]);
    }
    report.check("restricted-slice-counts", counts_ok, format!("#slice = dim image for m <= {bound}"));
    let csv_rel = format!("tables/{divisor}_restricted_{flat_name}.csv");
    write_csv(&out.join(&csv_rel), &["degree", "dim", "slice"], &rows)?;
    report.artifact(csv_rel);

    let est = restricted_volume_estimate(&series, &flag, bound)?;
    report.value_rat("restricted-estimate", &est.estimate);
    if let Some(upper) = &est.certified_upper {
        report.value_rat("restricted-exact", upper);
    }
    let body_rel = format!("bodies/{divisor}_restricted_{flat_name}.json");
    write_body_json(&out.join(&body_rel), est.approx.body())?;
    report.artifact(body_rel);
    if flag.space_dim() <= 2 && !est.approx.body().is_empty() {
        let svg_rel = format!("plots/{divisor}_restricted_{flat_name}.svg");
        write_bodies_svg(&out.join(&svg_rel), &[("restricted body".to_string(), est.approx.body())])?;
        report.artifact(svg_rel);
    }
    Ok(report)
}

fn cmd_baselocus(
    path: &Path,
    divisor: &str,
    max_degree: Option<usize>,
    ample: Option<&str>,
    ample2: Option<&str>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let bound = max_degree.unwrap_or(inst.params.bplus_degree).max(1);
    let series = limit_series(d);
    let mut report = RunReport::new(format!("baselocus --divisor {divisor}"), &inst.name);

    let w1 = series.space(1)?;
    let bs = crate::series::base_locus(&w1)?;
    report.value_text("Bs", bs.to_string());
    let (sb, stab) = stable_base_locus(&series, bound)?;
    report.value_text("SB", sb.to_string());
    report.info(
        "sb-stabilized",
        true,
        format!("stable base locus constant from degree {} to {}", stab.stabilized_at, stab.checked_to),
    );

    let a1_name = ample;
    let a1 = inst.ample(a1_name)?;
    let (b1, rep1) = crate::adelic::augmented_base_locus(d, a1, bound)?;
    report.value_text("B+", b1.to_string());
    report.info(
        "bplus-stabilized",
        true,
        format!("augmented base locus constant from degree {}", rep1.stabilized_at),
    );
    let a2 = match ample2 {
        Some(n) => Some((n, inst.ample(Some(n))?)),
        None => inst.ample_pair().map(|(_, _, n2, a2)| (n2, a2)),
    };
    if let Some((n2, a2)) = a2 {
        let (b2, _) = crate::adelic::augmented_base_locus(d, a2, bound)?;
        report.check(
            "bplus-independent-of-ample",
            b1 == b2,
            format!("agreement under second ample {n2}: {b1} vs {b2}"),
        );
    }
    report.check("sb-inside-bplus", b1.contains_set(&sb), format!("SB = {sb} inside B+ = {b1}"));

    let rows: Vec<Vec<String>> = rep1
        .per_degree
        .iter()
        .map(|(m, locus)| vec![m.to_string(), locus.to_string()])
        .collect();
    let csv_rel = format!("tables/{divisor}_baselocus.csv");
    write_csv(&out.join(&csv_rel), &["degree", "locus_of_mD_minus_A"], &rows)?;
    report.artifact(csv_rel);
    Ok(report)
}

fn cmd_continuity(
    path: &Path,
    divisor: &str,
    perturb: &str,
    steps: Option<usize>,
    out: &Path,
) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let d = inst.divisor(divisor)?;
    let n = steps.unwrap_or(inst.params.t_steps).max(1);
    let perturbation = if perturb == "boundary" {
        d.boundary().divisor().clone()
    } else {
        inst.ample(Some(perturb))?.clone()
    };
    let ts: Vec<Rat> = (1..=n).map(|k| rat(1, 1i64 << k.min(62))).collect();
    let table = continuity_experiment(d, &perturbation, &ts)?;
    let mut report = RunReport::new(format!("continuity --divisor {divisor}"), &inst.name);
    report.check("gaps-monotone", table.gaps_monotone, "body gaps nonincreasing as t -> 0");
    report.check("volumes-converge", table.volumes_converge, "volume errors nonincreasing as t -> 0");
    report.value_rat("base-volume", &table.base_body_volume);
    report.value_text("metric", table.metric_note);
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| {
            vec![
                fraction_string(&r.t),
                fraction_string(&r.body_volume),
                fraction_string(&r.scaled_volume),
                fraction_string(&r.hausdorff_gap),
            ]
        })
        .collect();
    let csv_rel = format!("tables/{divisor}_continuity.csv");
    write_csv(&out.join(&csv_rel), &["t", "body_volume", "scaled_volume", "hausdorff_gap"], &rows)?;
    report.artifact(csv_rel);
    Ok(report)
}

fn cmd_verify(path: &Path, suite: &str, seed: u64, samples: usize) -> Result<RunReport, CliError> {
    let inst = Instance::load(path)?;
    let mut report = RunReport::new(format!("verify --suite {suite}"), &inst.name);
    let checks = match suite {
        "geometry" => crate::verify::suite_geometry(seed, samples),
        "series" => crate::verify::suite_series(seed, samples),
        "adelic" => crate::verify::suite_adelic(&inst, seed),
        "bodies" => crate::verify::suite_bodies(&inst, seed),
        "global" => crate::verify::suite_global(&inst, seed),
        "all" => crate::verify::suite_all(&inst, seed, samples),
        other => {
            return Err(CliError::Op(format!(
                "unknown suite `{other}` (expected geometry, series, adelic, bodies, global or all)"
            )))
        }
    };
    report.extend(checks);
    report.value_json("seed", serde_json::json!(seed));
    report.value_json(
        "summary",
        serde_json::json!({
            "checks": report.checks.len(),
            "hard_failures": report.hard_failures(),
        }),
    );
    Ok(report)
}
