//! Subcommand implementations. Each returns the files it wrote and a short
//! human-readable summary; nothing here prints.

use std::path::{Path, PathBuf};

use blendifs_core::metrics::{
    attractor_spread, beta_definition, beta_examples, covering_radii_selfmax, covering_radii_thm31,
    delta_self_dissimilarity, hausdorff_sets, measurement_uncertainty,
};
use blendifs_core::{blend, BlendResult, BlendingSequence, DiscreteSet, Grid};

use crate::cells;
use crate::cli::{
    AttractorArgs, BetaArgs, BlendArgs, Cli, Command, CommonArgs, DeltaArgs, EnvelopeArgs, HausdorffArgs, ImageArgs,
    InfoArgs, Metric, RadiiChoice, ThetaArgs,
};
use crate::config::RunConfig;
use crate::error::{CliError, Result};
use crate::pgm::{self, RenderSpec};
use crate::report::{
    write_reports, ApproximationSection, AttractorReport, BetaReportFile, BetaRow, BetaSection, BetaVariant,
    BlendReport, DeltaReport, DeltaRow, EnvelopeReport, HausdorffReport, HausdorffRow, RadiiRow,
};

#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub summary: Vec<String>,
    pub warnings: Vec<String>,
}

/// Runs a parsed command line, inside a dedicated thread pool when
/// `--threads` is given.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let threads = match &cli.command {
        Command::Attractor(a) => a.common.threads,
        Command::Blend(a) => a.common.threads,
        Command::Metrics(m) => match &m.metric {
            Metric::Hausdorff(a) => a.common.threads,
            Metric::Beta(a) => a.common.threads,
            Metric::Delta(a) => a.common.threads,
            Metric::Envelope(a) => a.common.threads,
        },
        Command::Info(_) => None,
    };
    match threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| dispatch(cli))
        }
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Attractor(a) => attractor(a),
        Command::Blend(a) => blend_cmd(a),
        Command::Metrics(m) => match &m.metric {
            Metric::Hausdorff(a) => hausdorff(a),
            Metric::Beta(a) => beta(a),
            Metric::Delta(a) => delta(a),
            Metric::Envelope(a) => envelope(a),
        },
        Command::Info(a) => info(a),
    }
}

struct Context {
    cfg: RunConfig,
    grid: Grid,
    out: PathBuf,
    warnings: Vec<String>,
}

fn load(common: &CommonArgs, resolution: Option<u32>) -> Result<Context> {
    let cfg = RunConfig::load(&common.config)?;
    let m = resolution.or(common.resolution).unwrap_or(cfg.resolution);
    if m == 0 {
        return Err(CliError::Usage("--resolution must be at least 1".into()));
    }
    let grid = Grid::new(cfg.system.bbox(), m)?;
    let out = common.out.clone().or_else(|| cfg.out.clone()).unwrap_or_else(|| PathBuf::from("out"));
    std::fs::create_dir_all(&out).map_err(|e| CliError::io(&out, e))?;
    let warnings = bbox_warnings(&cfg);
    Ok(Context { cfg, grid, out, warnings })
}

fn bbox_warnings(cfg: &RunConfig) -> Vec<String> {
    let names = cfg.names();
    cfg.system
        .bbox_violations()
        .iter()
        .map(|v| {
            format!(
                "system {} map {} sends corner ({}, {}) to ({}, {}) outside the box; images will be clamped",
                names[v.system - 1],
                v.map,
                v.corner.x,
                v.corner.y,
                v.image.x,
                v.image.y
            )
        })
        .collect()
}

fn render_spec(image: &ImageArgs) -> RenderSpec {
    RenderSpec { width: image.width, height: image.height, y_up: !image.y_down, ..RenderSpec::default() }
}

/// Parses `1,2,1` into a recipe over `n` systems.
pub fn parse_theta(text: &str, n: usize) -> Result<BlendingSequence> {
    let bad = |detail: String| CliError::Parse { what: "--theta", detail };
    let mut symbols = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let s: usize = part.parse().map_err(|_| bad(format!("`{part}` is not a system index")))?;
        if s == 0 || s > n {
            return Err(bad(format!("system index {s} is outside 1..={n}")));
        }
        symbols.push(s);
    }
    Ok(BlendingSequence::new(symbols, n)?)
}

fn resolve_theta(args: &ThetaArgs, cfg: &RunConfig) -> Result<(BlendingSequence, Option<u64>)> {
    let n = cfg.system.len();
    if let Some(text) = &args.theta {
        if args.length.is_some() {
            return Err(CliError::Usage("--length only applies to a seeded recipe".into()));
        }
        return Ok((parse_theta(text, n)?, None));
    }
    let seed = args
        .seed
        .or(cfg.seed)
        .ok_or_else(|| CliError::Usage("give --theta, or --seed (or a config seed) with --length".into()))?;
    let length = args.length.ok_or_else(|| CliError::Usage("a seeded recipe needs --length".into()))?;
    if length == 0 {
        return Err(CliError::Usage("--length must be at least 1".into()));
    }
    Ok((blend::generate_theta(seed, length, n)?, Some(seed)))
}

fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect()
}

fn approximation(ctx: &Context, r: &BlendResult) -> ApproximationSection {
    ApproximationSection {
        resolution: ctx.grid.resolution(),
        epsilon: ctx.grid.epsilon(),
        diam: ctx.grid.bbox().diam(),
        lambda_script_r: ctx.cfg.system.lambda_script_r(),
        k: r.theta.len(),
        error_bound_tight: r.error_bound_tight,
        error_bound_worst: r.error_bound_worst,
        clamp_count: r.clamp_count,
        cells: r.output.len(),
    }
}

fn write_set(dir: &Path, stem: &str, set: &DiscreteSet, image: &ImageArgs) -> Result<[PathBuf; 2]> {
    let pgm_path = dir.join(format!("{stem}.pgm"));
    let cells_path = dir.join(format!("{stem}.cells"));
    pgm::write(&pgm_path, set, &render_spec(image))?;
    cells::write(&cells_path, set)?;
    Ok([pgm_path, cells_path])
}

fn file_name(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn clamp_warning(r: &BlendResult) -> Option<String> {
    (r.clamp_count > 0).then(|| format!("{} map images fell outside the box and were clamped", r.clamp_count))
}

pub fn attractor(args: &AttractorArgs) -> Result<Outcome> {
    let cfg = RunConfig::load(&args.common.config)?;
    let i = cfg.lookup(&args.ifs)?;
    let delta = args.delta.or(if args.k.is_none() { cfg.delta } else { None });
    let (k, resolution) = match (args.k, delta) {
        (Some(k), _) => (k, None),
        (None, Some(d)) => {
            let p = blend::choose_parameters(d, &cfg.system)?;
            let m = args.common.resolution.unwrap_or(cfg.resolution.max(p.m_min));
            (p.k, Some(m))
        }
        (None, None) => (30, None),
    };
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let mut ctx = load(&args.common, resolution)?;
    let r = blend::discrete_attractor(&ctx.cfg.system, &ctx.grid, i, k)?;
    let ifs = ctx.cfg.system.system(i)?;
    let stem = file_stem(ifs.name());
    let [pgm_path, cells_path] = write_set(&ctx.out, &stem, &r.output, &args.image)?;
    let report = AttractorReport {
        command: "attractor",
        system: i,
        name: ifs.name().to_string(),
        lambda: ifs.lambda_r(),
        delta,
        approximation: approximation(&ctx, &r),
        image_file: file_name(&pgm_path),
        cells_file: file_name(&cells_path),
    };
    let [json, txt] = write_reports(&ctx.out, &stem, &report)?;
    ctx.warnings.extend(clamp_warning(&r));
    Ok(Outcome {
        files: vec![pgm_path, cells_path, json, txt],
        summary: vec![
            format!("{}: {} cells at M={} after k={}", report.name, r.output.len(), ctx.grid.resolution(), k),
            format!("error_bound_worst={} error_bound_tight={}", r.error_bound_worst, r.error_bound_tight),
        ],
        warnings: ctx.warnings,
    })
}

fn beta_section(cfg: &RunConfig, theta: &BlendingSequence, variant: BetaVariant) -> Result<BetaSection> {
    let lambdas = cfg.system.lambdas();
    let mut tail = None;
    let mut betas = Vec::with_capacity(lambdas.len());
    for (p, ifs) in cfg.system.systems().iter().enumerate() {
        let i = p + 1;
        let mut row = BetaRow {
            system: i,
            name: ifs.name().to_string(),
            lambda: lambdas[p],
            beta_def_lower: None,
            beta_def_upper: None,
            beta_examples: None,
        };
        if variant.definition() {
            let b = beta_definition(theta, &lambdas, i)?;
            row.beta_def_lower = Some(b.lower);
            row.beta_def_upper = Some(b.upper);
            tail = Some(b.tail_bound);
        }
        if variant.examples() {
            row.beta_examples = Some(beta_examples(theta, &lambdas, i)?);
        }
        betas.push(row);
    }
    Ok(BetaSection { theta: theta.symbols().to_vec(), tail_bound: tail, betas })
}

fn beta_lines(section: &BetaSection) -> Vec<String> {
    section
        .betas
        .iter()
        .map(|b| {
            let mut s = format!("beta[{}]", b.name);
            if let (Some(lo), Some(hi)) = (b.beta_def_lower, b.beta_def_upper) {
                s += &format!(" definition=[{lo}, {hi}]");
            }
            if let Some(e) = b.beta_examples {
                s += &format!(" examples={e}");
            }
            s
        })
        .collect()
}

pub fn blend_cmd(args: &BlendArgs) -> Result<Outcome> {
    let mut ctx = load(&args.common, None)?;
    let (theta, seed) = resolve_theta(&args.theta, &ctx.cfg)?;
    let z = match &args.z {
        Some(path) => cells::read(path, ctx.grid)?,
        None => DiscreteSet::full(ctx.grid),
    };
    let r = blend::blend_approx(&ctx.cfg.system, &ctx.grid, &theta, &z)?;
    let stem = file_stem(&args.name);
    let [pgm_path, cells_path] = write_set(&ctx.out, &stem, &r.output, &args.image)?;
    let beta = beta_section(&ctx.cfg, &theta, args.variant)?;
    let mut summary = vec![format!(
        "blend of length {} -> {} cells at M={}; error_bound_worst={} error_bound_tight={}",
        theta.len(),
        r.output.len(),
        ctx.grid.resolution(),
        r.error_bound_worst,
        r.error_bound_tight
    )];
    summary.extend(beta_lines(&beta));
    let report = BlendReport {
        command: "blend",
        seed,
        z_file: args.z.as_ref().map(|p| p.display().to_string()),
        approximation: approximation(&ctx, &r),
        beta,
        image_file: file_name(&pgm_path),
        cells_file: file_name(&cells_path),
    };
    let [json, txt] = write_reports(&ctx.out, &stem, &report)?;
    ctx.warnings.extend(clamp_warning(&r));
    Ok(Outcome { files: vec![pgm_path, cells_path, json, txt], summary, warnings: ctx.warnings })
}

/// Discrete attractors of every system after `k` applications, with the
/// largest worst-case error bound among them.
fn all_attractors(ctx: &Context, k: usize) -> Result<(Vec<DiscreteSet>, f64)> {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let mut sets = Vec::with_capacity(ctx.cfg.system.len());
    let mut worst: f64 = 0.0;
    for i in 1..=ctx.cfg.system.len() {
        let r = blend::discrete_attractor(&ctx.cfg.system, &ctx.grid, i, k)?;
        worst = worst.max(r.error_bound_worst);
        sets.push(r.output);
    }
    Ok((sets, worst))
}

pub fn hausdorff(args: &HausdorffArgs) -> Result<Outcome> {
    let ctx = load(&args.common, None)?;
    let names = ctx.cfg.names();
    let pairs: Vec<(usize, usize)> = match &args.pair {
        Some(text) => {
            let (a, b) = text.split_once(',').ok_or_else(|| CliError::Parse {
                what: "--pair",
                detail: format!("expected two names separated by a comma, got `{text}`"),
            })?;
            vec![(ctx.cfg.lookup(a.trim())?, ctx.cfg.lookup(b.trim())?)]
        }
        None => {
            let n = names.len();
            (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect()
        }
    };
    let (sets, worst) = all_attractors(&ctx, args.k)?;
    let uncertainty = measurement_uncertainty(&ctx.grid, worst);
    let mut rows = Vec::with_capacity(pairs.len());
    let mut summary = Vec::new();
    for (a, b) in pairs {
        let h = hausdorff_sets(&sets[a - 1], &sets[b - 1])?;
        summary.push(format!("d_H({}, {}) = {:.5} ± {:.5}", names[a - 1], names[b - 1], h.symmetric, uncertainty));
        rows.push(HausdorffRow {
            a: names[a - 1].clone(),
            b: names[b - 1].clone(),
            directed_ab: h.directed_ab,
            directed_ba: h.directed_ba,
            symmetric: h.symmetric,
        });
    }
    let report = HausdorffReport {
        command: "hausdorff",
        resolution: ctx.grid.resolution(),
        k: args.k,
        uncertainty,
        pairs: rows,
    };
    let files = write_reports(&ctx.out, "hausdorff", &report)?.to_vec();
    Ok(Outcome { files, summary, warnings: ctx.warnings })
}

pub fn beta(args: &BetaArgs) -> Result<Outcome> {
    let ctx = load(&args.common, None)?;
    let (theta, seed) = resolve_theta(&args.theta, &ctx.cfg)?;
    let section = beta_section(&ctx.cfg, &theta, args.variant)?;
    let summary = beta_lines(&section);
    let report = BetaReportFile { command: "beta", seed, beta: section };
    let files = write_reports(&ctx.out, "beta", &report)?.to_vec();
    Ok(Outcome { files, summary, warnings: ctx.warnings })
}

pub fn delta(args: &DeltaArgs) -> Result<Outcome> {
    let ctx = load(&args.common, None)?;
    let names = ctx.cfg.names();
    let targets: Vec<usize> = match &args.i0 {
        Some(name) => vec![ctx.cfg.lookup(name)?],
        None => (1..=names.len()).collect(),
    };
    let (sets, worst) = all_attractors(&ctx, args.k)?;
    let uncertainty = measurement_uncertainty(&ctx.grid, worst);
    let mut deltas = Vec::with_capacity(targets.len());
    let mut summary = Vec::new();
    for i0 in targets {
        let d = delta_self_dissimilarity(&ctx.cfg.system, &ctx.grid, i0, &sets)?;
        summary.push(format!("delta({}) = {:.5} ± {:.5}", names[i0 - 1], d, uncertainty));
        deltas.push(DeltaRow { i0, name: names[i0 - 1].clone(), delta: d });
    }
    let report = DeltaReport { command: "delta", resolution: ctx.grid.resolution(), k: args.k, uncertainty, deltas };
    let files = write_reports(&ctx.out, "delta", &report)?.to_vec();
    Ok(Outcome { files, summary, warnings: ctx.warnings })
}

pub fn envelope(args: &EnvelopeArgs) -> Result<Outcome> {
    let mut ctx = load(&args.common, None)?;
    let (sets, worst) = all_attractors(&ctx, args.k)?;
    let m_value = attractor_spread(&sets)?;
    let m_uncertainty = measurement_uncertainty(&ctx.grid, worst);
    let lambdas = ctx.cfg.system.lambdas();
    let mut covering = Vec::new();
    if matches!(args.radii, RadiiChoice::Thm31 | RadiiChoice::Both) {
        if lambdas.len() >= 2 {
            covering.push(covering_radii_thm31(&lambdas, m_value)?);
        } else if args.radii == RadiiChoice::Thm31 {
            return Err(CliError::Usage("thm31 radii need at least two systems".into()));
        } else {
            ctx.warnings.push("thm31 radii need at least two systems; skipped".into());
        }
    }
    if matches!(args.radii, RadiiChoice::Selfmax | RadiiChoice::Both) {
        covering.push(covering_radii_selfmax(&lambdas, m_value)?);
    }
    let names = ctx.cfg.names();
    let mut summary = vec![format!("M = {m_value:.5} ± {m_uncertainty:.5}")];
    for c in &covering {
        let radii: Vec<String> = c.radii.iter().map(|r| format!("{r:.5}")).collect();
        summary.push(format!("{}: {}", c.variant.as_str(), radii.join(", ")));
    }
    let report = EnvelopeReport {
        command: "envelope",
        resolution: ctx.grid.resolution(),
        k: args.k,
        names,
        lambdas,
        m_value,
        m_uncertainty,
        covering: covering
            .into_iter()
            .map(|c| RadiiRow { radius_variant: c.variant.as_str(), radii: c.radii })
            .collect(),
    };
    let files = write_reports(&ctx.out, "envelope", &report)?.to_vec();
    Ok(Outcome { files, summary, warnings: ctx.warnings })
}

pub fn info(args: &InfoArgs) -> Result<Outcome> {
    let cfg = RunConfig::load(&args.config)?;
    let m = args.resolution.unwrap_or(cfg.resolution);
    if m == 0 {
        return Err(CliError::Usage("--resolution must be at least 1".into()));
    }
    let grid = Grid::new(cfg.system.bbox(), m)?;
    let b = cfg.system.bbox();
    let mut summary = vec![
        format!("bbox [{}, {}] x [{}, {}], diam {}", b.x0, b.x1, b.y0, b.y1, b.diam()),
        format!("grid M={} epsilon={} cell_diagonal={}", m, grid.epsilon(), grid.cell_diagonal()),
        format!("lambda_script_r={}", cfg.system.lambda_script_r()),
    ];
    for (p, ifs) in cfg.system.systems().iter().enumerate() {
        let per_map: Vec<String> = ifs.lambdas().iter().map(|l| format!("{l:.6}")).collect();
        summary.push(format!(
            "{} {}: {} maps, lambda={} (maps: {})",
            p + 1,
            ifs.name(),
            ifs.len(),
            ifs.lambda_r(),
            per_map.join(", ")
        ));
    }
    if let Some(d) = cfg.delta {
        let p = blend::choose_parameters(d, &cfg.system)?;
        summary.push(format!("delta={d}: k={} epsilon_max={} m_min={}", p.k, p.epsilon_max, p.m_min));
    }
    Ok(Outcome { files: Vec::new(), summary, warnings: bbox_warnings(&cfg) })
}
