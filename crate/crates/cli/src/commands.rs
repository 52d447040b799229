use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;
use posetsym_core::group::GeneratorShape;
use posetsym_core::measure::{
    compare_frequency_profiles, endpoint_measure, estimate_frequencies, is_central, parse_markov,
    parse_vertex, sample_plancherel_with, sample_rsk_with_word, CentralMeasureSpec, FrequencyReport,
    MeasureSource,
};
use posetsym_core::numbering::enumerate_numberings_limited;
use posetsym_core::rng::replica_rng;
use posetsym_core::{
    build_graph, classify_local, generate_group, serialize_poset, verify_relations, Closure, Family,
    GroupConfig, IdealSpec, PosetWindow,
};

use crate::source::{read_file, RunConfig, Source};
use crate::{
    CliError, Command, Format, MeasureCommand, RunArgs, SamplerArgs, EXIT_CAP, EXIT_OK,
    EXIT_VIOLATION,
};

type Res = Result<i32, CliError>;

/// Largest permutation degree for which the stabilizer-chain order is also
/// computed.
const CHAIN_DEGREE_LIMIT: usize = 2000;
const DEFAULT_STEPS: usize = 1000;

pub(crate) fn execute(cmd: &Command, out: &mut String) -> Res {
    match cmd {
        Command::Poset { source } => cmd_poset(source, out),
        Command::Graph {
            source,
            depth,
            format,
        } => cmd_graph(source, *depth, *format, out),
        Command::Paths {
            source,
            depth,
            list,
            path_cap,
        } => cmd_paths(source, *depth, *list, *path_cap, out),
        Command::Group {
            source,
            depth,
            local,
            cap,
            path_cap,
            format,
        } => cmd_group(source, *depth, *local, *cap, *path_cap, *format, out),
        Command::Measure { action } => match action {
            MeasureCommand::Check {
                source,
                depth,
                sampler,
            } => cmd_check(source, *depth, sampler, out),
            MeasureCommand::Sample {
                source,
                depth,
                sampler,
                run,
            } => cmd_sample(source, *depth, sampler, run, out),
            MeasureCommand::Freq {
                source,
                depth,
                sampler,
                ideals,
                run,
            } => cmd_freq(source, *depth, sampler, ideals, run, out),
        },
        Command::Compare {
            source,
            depth,
            samplers,
            ideals,
            run,
            threshold,
        } => cmd_compare(source, *depth, samplers, ideals, run, *threshold, out),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_poset(source: &Source, out: &mut String) -> Res {
    let w = source.window()?;
    let mut cfg = RunConfig::new("poset");
    cfg.set("source", source.describe());
    out.push_str(&cfg.header());
    let p = &w.poset;
    let _ = writeln!(out, "elements: {}", p.len());
    let _ = writeln!(out, "covers: {}", p.covers().len());
    let _ = writeln!(out, "incomparable pairs: {}", p.incomparable_pairs());
    out.push_str(&serialize_poset(&w));
    Ok(EXIT_OK)
}

fn cmd_graph(source: &Source, depth: Option<usize>, format: Format, out: &mut String) -> Res {
    let (w, length) = source.window_for_length(depth)?;
    let g = build_graph(&w, length - 1)?;
    let mut cfg = RunConfig::new("graph");
    cfg.set("source", source.describe())
        .set("window", &g.window().family)
        .set("depth", length)
        .set("levels", format!("0..={}", g.depth()))
        .set("format", format.name());
    out.push_str(&cfg.header());
    match format {
        Format::Csv => out.push_str(&g.to_csv()),
        Format::Text => {
            let _ = writeln!(out, "{:>5}  {:>8}  {:>12}  dims", "level", "vertices", "paths");
            for level in 0..=g.depth() {
                let dims: Vec<&BigUint> = g.vertices(level).map(|v| g.dimension(v).unwrap()).collect();
                let total: BigUint = dims.iter().copied().sum();
                let list = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
                let _ = writeln!(out, "{level:>5}  {:>8}  {total:>12}  {list}", dims.len());
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_paths(source: &Source, depth: Option<usize>, list: bool, path_cap: usize, out: &mut String) -> Res {
    let (w, length) = source.window_for_length(depth)?;
    let g = build_graph(&w, length - 1)?;
    let mut cfg = RunConfig::new("paths");
    cfg.set("source", source.describe())
        .set("window", &g.window().family)
        .set("depth", length)
        .set("path-cap", path_cap)
        .set("list", yes_no(list));
    out.push_str(&cfg.header());
    let count: BigUint = g.vertices(length - 1).map(|v| g.dimension(v).unwrap()).sum();
    let _ = writeln!(out, "paths: {count}");
    if list {
        let paths = enumerate_numberings_limited(g.window(), length, path_cap)?;
        for p in &paths {
            let _ = writeln!(out, "{}", p.to_csv());
        }
    }
    Ok(EXIT_OK)
}

fn shape_name(s: GeneratorShape) -> &'static str {
    match s {
        GeneratorShape::BothTrivial => "both-trivial",
        GeneratorShape::FirstTrivial => "first-trivial",
        GeneratorShape::SecondTrivial => "second-trivial",
        GeneratorShape::Generic => "generic",
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `Some(n)` when the window is the Young diagram of shape `(n-1, 1)`.
fn hook_shape_size(w: &PosetWindow) -> Option<usize> {
    match &w.family {
        Family::YoungDiagram(p) if p.len() == 2 && p[1] == 1 => Some(p[0] as usize + 1),
        _ => None,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_group(
    source: &Source,
    depth: Option<usize>,
    local: Option<usize>,
    cap: usize,
    path_cap: usize,
    format: Format,
    out: &mut String,
) -> Res {
    let (w, length) = source.window_for_length(depth)?;
    let mut cfg = RunConfig::new("group");
    cfg.set("source", source.describe())
        .set("window", &w.family)
        .set("depth", length)
        .set("local", local.map_or("all".to_string(), |i| i.to_string()))
        .set("group-cap", cap)
        .set("path-cap", path_cap)
        .set("format", format.name());
    out.push_str(&cfg.header());

    let h = generate_group(
        &w,
        length,
        GroupConfig {
            path_limit: path_cap,
            cap,
        },
    )?;
    let n_gens = h.generators().len();
    let locals: Vec<usize> = match local {
        Some(i) if i == 0 || i + 1 > n_gens => {
            return Err(CliError::Input(format!(
                "--local {i} needs generators {i} and {}; this depth has 1..={n_gens}",
                i + 1
            )))
        }
        Some(i) => vec![i],
        None => (1..n_gens).collect(),
    };
    let relations = verify_relations(&h);
    let reports = locals
        .iter()
        .map(|&i| classify_local(&h, i))
        .collect::<Result<Vec<_>, _>>()?;
    let chain_order = (h.paths().len() <= CHAIN_DEGREE_LIMIT).then(|| h.stabilizer_chain_order());
    let orbits = h.orbits();
    let transitive = orbits == h.fibers();

    let order_text = match h.closure() {
        Closure::Complete { order, .. } => order.to_string(),
        Closure::CapExceeded { visited, radius } => {
            format!("cap-exceeded (visited {visited}, radius {radius})")
        }
    };
    let chain_text = chain_order.as_ref().map_or("skipped".to_string(), |o| o.to_string());
    let hook_n = hook_shape_size(&w).filter(|_| length == w.poset.len());

    match format {
        Format::Text => {
            let _ = writeln!(out, "paths: {}", h.paths().len());
            let _ = writeln!(out, "generators: {n_gens}");
            let _ = writeln!(out, "order: {order_text}");
            if let Closure::Complete { diameter, .. } = h.closure() {
                let _ = writeln!(out, "diameter: {diameter}");
            }
            let _ = writeln!(out, "stabilizer-chain order: {chain_text}");
            let _ = writeln!(out, "orbits: {} (fibers transitive: {})", orbits.len(), yes_no(transitive));
            if let Some(n) = hook_n {
                let _ = writeln!(
                    out,
                    "hook (n-1,1): n={n} numberings={} order={order_text} n!={} (n-1)!={}",
                    h.paths().len(),
                    factorial(n),
                    factorial(n - 1)
                );
            }
            let _ = writeln!(out, "relations:");
            let _ = writeln!(out, "  {:<18} {:>3} {:>3}  {:<6} witness", "family", "i", "j", "status");
            for c in &relations.checks {
                let witness = c.witness.map_or("-".to_string(), |p| h.paths()[p].to_csv());
                let _ = writeln!(
                    out,
                    "  {:<18} {:>3} {:>3}  {:<6} {witness}",
                    c.family.to_string(),
                    c.i,
                    c.j,
                    pass_fail(c.holds())
                );
            }
            let _ = writeln!(out, "local subgroups:");
            let _ = writeln!(
                out,
                "  {:>3} {:>7} {:>6}  {:<14} {:<6} orbits",
                "i", "product", "order", "shape", "status"
            );
            for r in &reports {
                let _ = writeln!(
                    out,
                    "  {:>3} {:>7} {:>6}  {:<14} {:<6} {}",
                    r.i,
                    r.product_order,
                    r.group_order,
                    shape_name(r.shape),
                    pass_fail(r.within_bounds() && r.dihedral_consistent()),
                    r.orbit_summary()
                );
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "kind,name,i,j,status,detail");
            let _ = writeln!(out, "order,bfs,,,{},{order_text}", pass_fail(matches!(h.closure(), Closure::Complete { .. })));
            let _ = writeln!(out, "order,stabilizer-chain,,,{},{chain_text}", pass_fail(chain_order.is_some()));
            let _ = writeln!(out, "orbits,fibers,,,{},{}", pass_fail(transitive), orbits.len());
            if let Some(n) = hook_n {
                let _ = writeln!(out, "hook,numberings,{n},,pass,{}", h.paths().len());
                let _ = writeln!(out, "hook,n!,{n},,pass,{}", factorial(n));
                let _ = writeln!(out, "hook,(n-1)!,{n},,pass,{}", factorial(n - 1));
            }
            for c in &relations.checks {
                let witness = c.witness.map_or(String::new(), |p| h.paths()[p].to_csv().replace(',', " "));
                let _ = writeln!(out, "relation,{},{},{},{},{witness}", c.family, c.i, c.j, pass_fail(c.holds()));
            }
            for r in &reports {
                let _ = writeln!(
                    out,
                    "local,{},{},{},{},product={} order={} orbits={}",
                    shape_name(r.shape),
                    r.i,
                    r.i + 1,
                    pass_fail(r.within_bounds() && r.dihedral_consistent()),
                    r.product_order,
                    r.group_order,
                    r.orbit_summary()
                );
            }
        }
    }

    let violated = !relations.all_hold()
        || !transitive
        || reports.iter().any(|r| !(r.within_bounds() && r.dihedral_consistent()));
    if violated {
        Ok(EXIT_VIOLATION)
    } else if matches!(h.closure(), Closure::CapExceeded { .. }) {
        Ok(EXIT_CAP)
    } else {
        Ok(EXIT_OK)
    }
}

/// Resolves a measure. Kernel-backed specs are built on the given source
/// (endpoint) or read from their file (markov).
fn resolve(source: &Source, depth: Option<usize>, spec: &str) -> Result<CentralMeasureSpec, CliError> {
    match spec.parse::<MeasureSource>()? {
        MeasureSource::Plancherel => Ok(CentralMeasureSpec::PlancherelYoung),
        MeasureSource::Rsk(alpha) => Ok(CentralMeasureSpec::RskThoma(alpha)),
        MeasureSource::Endpoint(vertex) => {
            let (w, length) = source.window_for_length(depth)?;
            let graph = Arc::new(build_graph(&w, length - 1)?);
            let kernel = endpoint_measure(graph, vertex)?;
            Ok(CentralMeasureSpec::EndpointUniform { vertex, kernel })
        }
        MeasureSource::Markov(file) => {
            if source.is_given() {
                return Err(CliError::Input("markov files carry their own poset; drop the poset flag".into()));
            }
            let kernel = parse_markov(&read_file(&file.clone().into())?)?;
            Ok(CentralMeasureSpec::ExplicitMarkov { name: file, kernel })
        }
    }
}

fn cmd_check(source: &Source, depth: Option<usize>, sampler: &SamplerArgs, out: &mut String) -> Res {
    let text = sampler.spec_string();
    if sampler.endpoint.is_some() {
        // fail early on a malformed vertex before building anything
        parse_vertex(sampler.endpoint.as_deref().unwrap_or_default())?;
    }
    let spec = resolve(source, depth, &text)?;
    let Some(kernel) = spec.kernel() else {
        return Err(CliError::Input(format!(
            "{spec} is only available as a sampler; check needs endpoint or markov"
        )));
    };
    let window = kernel.graph().window();
    let length = kernel.max_steps() + 1;
    let mut cfg = RunConfig::new("measure check");
    cfg.set("source", source.describe())
        .set("window", &window.family)
        .set("measure", &spec)
        .set("depth", length)
        .set("arithmetic", "exact rational");
    out.push_str(&cfg.header());

    let h = generate_group(window, length, GroupConfig::default())?;
    let masses = kernel.path_measure(h.paths())?;
    let report = is_central(&h, &masses, 0.0)?;
    let _ = writeln!(out, "paths: {}", h.paths().len());
    let _ = writeln!(out, "invariant: {}", yes_no(report.invariant()));
    let _ = writeln!(out, "fiber-uniform: {}", yes_no(report.fiber_uniform()));
    let _ = writeln!(out, "central: {}", yes_no(report.is_central()));
    for c in &report.invariance {
        if let Some(p) = c.witness {
            let _ = writeln!(out, "witness: sigma_{} moves the mass of path {}", c.sigma, h.paths()[p].to_csv());
        }
    }
    if let Some(fiber) = &report.non_uniform_fiber {
        let ids = h.endpoint(fiber[0]).to_ids();
        let ids = ids.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "non-uniform fiber: endpoint {{{ids}}}");
    }
    Ok(if report.is_central() { EXIT_OK } else { EXIT_VIOLATION })
}

fn steps_for(spec: &CentralMeasureSpec, run: &RunArgs) -> usize {
    run.n
        .unwrap_or_else(|| spec.kernel().map_or(DEFAULT_STEPS, |k| k.max_steps()))
}

fn run_header(cfg: &mut RunConfig, spec: &CentralMeasureSpec, n: usize, run: &RunArgs) {
    cfg.set("measure", spec)
        .set("n", n)
        .set("replicas", run.replicas)
        .set("seed", run.seed)
        .set("rng", "chacha8, replica k seeded with seed + k");
}

fn cmd_sample(source: &Source, depth: Option<usize>, sampler: &SamplerArgs, run: &RunArgs, out: &mut String) -> Res {
    let spec = resolve(source, depth, &sampler.spec_string())?;
    let n = steps_for(&spec, run);
    let mut cfg = RunConfig::new("measure sample");
    cfg.set("source", source.describe());
    run_header(&mut cfg, &spec, n, run);
    out.push_str(&cfg.header());
    let _ = writeln!(out, "replica,path");
    for k in 0..run.replicas as u64 {
        let mut rng = replica_rng(run.seed, k);
        let path = match &spec {
            CentralMeasureSpec::PlancherelYoung => cells_text(sample_plancherel_with(n, &mut rng).cells()),
            CentralMeasureSpec::RskThoma(alpha) => cells_text(sample_rsk_with_word(alpha, n, &mut rng).0.cells()),
            _ => {
                let kernel = spec.kernel().expect("kernel-backed measure");
                let ids = kernel.sample(n, &mut rng)?;
                ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            }
        };
        let _ = writeln!(out, "{k},{path}");
    }
    Ok(EXIT_OK)
}

fn cells_text(cells: &[(u32, u32)]) -> String {
    cells.iter().map(|(r, c)| format!("{r}:{c}")).collect::<Vec<_>>().join(" ")
}

fn parse_ideals(ideals: &[String]) -> Result<Vec<IdealSpec>, CliError> {
    Ok(ideals.iter().map(|s| s.parse()).collect::<Result<Vec<IdealSpec>, _>>()?)
}

fn cmd_freq(
    source: &Source,
    depth: Option<usize>,
    sampler: &SamplerArgs,
    ideals: &[String],
    run: &RunArgs,
    out: &mut String,
) -> Res {
    let spec = resolve(source, depth, &sampler.spec_string())?;
    let ideals = parse_ideals(ideals)?;
    let n = steps_for(&spec, run);
    let mut cfg = RunConfig::new("measure freq");
    cfg.set("source", source.describe());
    run_header(&mut cfg, &spec, n, run);
    if spec.tied_alpha() {
        cfg.set("warning", "alpha has tied entries; row-length frequencies split between tied letters");
    }
    out.push_str(&cfg.header());
    let reports = estimate_frequencies(&spec, &ideals, n, run.replicas, run.seed)?;
    out.push_str(FrequencyReport::CSV_HEADER);
    out.push('\n');
    for r in &reports {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    Ok(EXIT_OK)
}

fn cmd_compare(
    source: &Source,
    depth: Option<usize>,
    samplers: &[String],
    ideals: &[String],
    run: &RunArgs,
    threshold: f64,
    out: &mut String,
) -> Res {
    let specs = samplers
        .iter()
        .map(|s| resolve(source, depth, s))
        .collect::<Result<Vec<_>, _>>()?;
    let ideals = parse_ideals(ideals)?;
    let n = run.n.unwrap_or_else(|| {
        specs
            .iter()
            .map(|s| steps_for(s, &RunArgs { n: None, ..run.clone() }))
            .min()
            .unwrap_or(DEFAULT_STEPS)
    });
    let mut cfg = RunConfig::new("compare");
    cfg.set("source", source.describe());
    for s in &specs {
        cfg.set("sampler", s);
    }
    cfg.set("n", n)
        .set("replicas", run.replicas)
        .set("seed", run.seed)
        .set("threshold", format!("{threshold} combined stderr"))
        .set("rng", "chacha8, sampler s replica k seeded with seed + s*replicas + k");
    out.push_str(&cfg.header());

    let table = compare_frequency_profiles(&specs, &ideals, n, run.replicas, run.seed, threshold)?;
    out.push_str(FrequencyReport::CSV_HEADER);
    out.push('\n');
    for row in &table.reports {
        for r in row {
            out.push_str(&r.to_csv_row());
            out.push('\n');
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "a,b,max_separation,verdict");
    for p in &table.pairs {
        let _ = writeln!(
            out,
            "{},{},{:.3},{}",
            csv(&table.samplers[p.a]),
            csv(&table.samplers[p.b]),
            p.max_separation,
            if p.distinguished { "distinguished" } else { "indistinguishable" }
        );
    }
    Ok(EXIT_OK)
}

fn csv(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}
