use crate::{ChainArgs, GenArgs, HopArgs, RecognizeArgs, ReduceArgs, SolveArgs};
use anyhow::{anyhow, Context};
use contraction_core::classes::{recognize as in_class, witness, ClassId, UnknownClass, Witness};
use contraction_core::graph::{connected_components, EdgeSet, Graph};
use contraction_core::harness::{
    random_cross_instance, random_graph, random_list_instance, random_structured_instance, run_hop_trials,
    verify_chain as run_chains, ChainConfig, ChainOptions, Construction, GadgetSolver, HarnessError, HopSolvers,
    HopTrialConfig, Terminal,
};
use contraction_core::io::{parse_instance, serialize_edge_set, serialize_instance, Instance, Problem};
use contraction_core::reductions::{
    cc_to_hadwiger, cross_matching_to_structured, lsh_to_lsi_stream, lsi_to_cross_matching, reduce_3col_to_lsh,
    stream_count, structured_to_class, GadgetFamily, HadwigerTarget, Mutation, ReductionError, StreamPruning,
};
use contraction_core::solvers::{
    contract_to_clique, hadwiger_at_least, hadwiger_model, solve_3coloring, solve_cross_matching, solve_f_contraction,
    solve_f_contraction_restricted,
    solve_list_embedding, solve_structured, EmbeddingMode, FContractionInstance, Limits, SolverError, StructuredStrategy,
};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

/// Largest number of streamed instances `reduce` will write.
const MAX_STREAM_FILES: u128 = 10_000;

pub enum Outcome {
    Yes,
    No,
}

impl From<bool> for Outcome {
    fn from(b: bool) -> Self {
        if b {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }
}

pub enum Failure {
    Usage(anyhow::Error),
    Guard(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let guard = e.chain().find_map(|c| match c.downcast_ref::<SolverError>() {
            Some(s @ SolverError::GuardExceeded { .. }) => Some(s.to_string()),
            _ => match c.downcast_ref::<HarnessError>() {
                Some(HarnessError::Solver(s @ SolverError::GuardExceeded { .. })) => Some(s.to_string()),
                _ => None,
            },
        });
        match guard {
            Some(g) => Failure::Guard(g),
            None => Failure::Usage(e),
        }
    }
}

macro_rules! from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::from(anyhow::Error::from(e))
            }
        }
    )*};
}
from_error!(HarnessError, ReductionError, SolverError, contraction_core::io::IoError, std::io::Error);

fn guard(what: &str, got: usize, limit: usize) -> Result<(), Failure> {
    if got > limit {
        return Err(Failure::Guard(format!("{what} has {got} vertices, guard is {limit}")));
    }
    Ok(())
}

fn read_instance(path: &Path) -> anyhow::Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_text(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_problem(s: &str) -> anyhow::Result<Problem> {
    s.parse().map_err(|e: String| anyhow!(e))
}

fn parse_class(s: &str) -> anyhow::Result<ClassId> {
    s.parse().map_err(|e: UnknownClass| anyhow!(e))
}

fn ids(xs: &[usize]) -> String {
    xs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn pruning(no_prune: bool) -> StreamPruning {
    if no_prune {
        StreamPruning::None
    } else {
        StreamPruning::CapsAndCoverage
    }
}

pub fn gen(a: &GenArgs, seed: u64) -> Result<Outcome, Failure> {
    let inst = match parse_problem(&a.problem)? {
        Problem::ThreeColoring => Instance::ThreeColoring(random_graph(a.n, a.max_degree, seed)?),
        Problem::Lsh => Instance::List(random_list_instance(
            a.n,
            a.m.unwrap_or(a.n),
            a.colors,
            EmbeddingMode::Homomorphism,
            seed,
        )?),
        Problem::Lsi => {
            Instance::List(random_list_instance(a.n, a.m.unwrap_or(a.n), a.colors, EmbeddingMode::Isomorphism, seed)?)
        }
        Problem::CrossMatching => Instance::CrossMatching(random_cross_instance(a.n, seed)?),
        Problem::Structured => Instance::Structured(random_structured_instance(a.n, seed)?),
        other => return Err(Failure::Usage(anyhow!("gen does not support {other}"))),
    };
    write_text(a.out.as_deref(), &serialize_instance(&inst))?;
    Ok(Outcome::Yes)
}

/// A Hadwiger instance for the translation of `(g, t)`; a disconnected `g`
/// becomes a target above its vertex count, which is always a no.
fn hadwiger_instance(g: &Graph, t: usize) -> Instance {
    match cc_to_hadwiger(g, t) {
        HadwigerTarget::ImmediateNo => Instance::Hadwiger { g: g.clone(), h: g.vertex_count() + 1 },
        HadwigerTarget::Instance { g, h } => Instance::Hadwiger { g, h },
    }
}

pub fn reduce(a: &ReduceArgs, max_vertices: usize) -> Result<Outcome, Failure> {
    if let Some(chain) = &a.chain {
        return reduce_chain(a, chain, max_vertices);
    }
    let from = parse_problem(a.from.as_deref().expect("clap requires --from"))?;
    let to = parse_problem(a.to.as_deref().expect("clap requires --to"))?;
    let inst = read_instance(&a.input)?;
    if inst.problem() != from {
        return Err(Failure::Usage(anyhow!("input is a {} instance, not {from}", inst.problem())));
    }
    guard("input graph", inst.graph().vertex_count(), max_vertices)?;
    let out = match (&inst, to) {
        (Instance::ThreeColoring(g), Problem::Lsh) => Instance::List(reduce_3col_to_lsh(g, a.r)?.instance),
        (Instance::List(l), Problem::Lsi) => {
            let pruning = pruning(a.no_prune);
            let count = stream_count(l, pruning)?;
            if count > MAX_STREAM_FILES {
                return Err(Failure::Guard(format!("{count} streamed instances, limit is {MAX_STREAM_FILES}")));
            }
            fs::create_dir_all(&a.output).with_context(|| format!("creating {}", a.output.display()))?;
            for (i, s) in lsh_to_lsi_stream(l, pruning)?.enumerate() {
                let p = s.p.as_slice().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                let text = format!("c occupancy {p}\n{}", serialize_instance(&Instance::List(s.instance)));
                fs::write(a.output.join(format!("lsi-{:05}.txt", i + 1)), text)?;
            }
            println!("streams={count}");
            return Ok(Outcome::Yes);
        }
        (Instance::List(l), Problem::CrossMatching) => Instance::CrossMatching(lsi_to_cross_matching(l)?),
        (Instance::CrossMatching(x), Problem::Structured) => Instance::Structured(cross_matching_to_structured(x)?),
        (Instance::Structured(s), Problem::CliqueContraction) => Instance::CliqueContraction { g: s.g().clone(), t: s.n() },
        (Instance::Structured(s), Problem::Hadwiger) => hadwiger_instance(s.g(), s.n()),
        (Instance::CliqueContraction { g, t }, Problem::Hadwiger) => hadwiger_instance(g, *t),
        (Instance::Structured(s), Problem::FContraction) => {
            let class = parse_class(a.class.as_deref().ok_or_else(|| anyhow!("--class is required for fcon"))?)?;
            let family = GadgetFamily::for_class(class).ok_or(ReductionError::NoGadget(class))?;
            Instance::FContraction(structured_to_class(s, family)?.target(class))
        }
        _ => return Err(Failure::Usage(anyhow!("no construction from {from} to {to}"))),
    };
    fs::write(&a.output, serialize_instance(&out)).with_context(|| format!("writing {}", a.output.display()))?;
    Ok(Outcome::Yes)
}

/// Writes every intermediate instance of one path through the chain and a
/// manifest with one line per hop. The path follows the first streamed
/// instance whose list isomorphism answer is yes, or the first streamed
/// instance when there is none.
fn reduce_chain(a: &ReduceArgs, chain: &str, max_vertices: usize) -> Result<Outcome, Failure> {
    let terminal = match chain {
        "3col..hadwiger" => Problem::Hadwiger,
        "3col..fcon" => Problem::FContraction,
        _ => return Err(Failure::Usage(anyhow!("unknown chain `{chain}`, expected 3col..hadwiger or 3col..fcon"))),
    };
    let Instance::ThreeColoring(g) = read_instance(&a.input)? else {
        return Err(Failure::Usage(anyhow!("the chain starts from a 3col instance")));
    };
    guard("input graph", g.vertex_count(), max_vertices)?;
    let dir = &a.output;
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut manifest = String::new();
    let mut emit = |file: &str, hop: &str, construction: &str, params: &str, inst: &Instance| -> anyhow::Result<()> {
        // List hops are sized by h, the graph the construction builds.
        let g = match inst {
            Instance::List(l) => l.h(),
            other => other.graph(),
        };
        fs::write(dir.join(file), serialize_instance(inst))?;
        writeln!(
            manifest,
            "hop={hop} construction={construction}{params} vertices={} edges={} file={file}",
            g.vertex_count(),
            g.edge_count()
        )?;
        Ok(())
    };
    emit("3col.txt", "3col", "input", "", &Instance::ThreeColoring(g.clone()))?;
    let lsh = reduce_3col_to_lsh(&g, a.r)?;
    let lsh_params = format!(" r={} l={} max_degree={}", a.r, lsh.grouping.l(), g.max_degree());
    emit("lsh.txt", "lsh", "reduce_3col_to_lsh", &lsh_params, &Instance::List(lsh.instance.clone()))?;

    let pruning = pruning(a.no_prune);
    let count = stream_count(&lsh.instance, pruning)?;
    let mut chosen = None;
    for (i, s) in lsh_to_lsi_stream(&lsh.instance, pruning)?.enumerate() {
        let yes = solve_list_embedding(&s.instance).is_some();
        if chosen.is_none() || yes {
            chosen = Some((i, s));
        }
        if yes {
            break;
        }
    }
    let Some((index, streamed)) = chosen else {
        emit_manifest(dir, &manifest, &format!("hop=lsi construction=lsh_to_lsi_stream streams={count}"))?;
        println!("streams=0");
        return Ok(Outcome::Yes);
    };
    let occupancy = streamed.p.as_slice().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let lsi_params = format!(
        " pruning={} streams={count} stream_index={} occupancy={occupancy}",
        if a.no_prune { "none" } else { "caps-and-coverage" },
        index + 1
    );
    emit("lsi.txt", "lsi", "lsh_to_lsi_stream", &lsi_params, &Instance::List(streamed.instance.clone()))?;
    let cross = lsi_to_cross_matching(&streamed.instance)?;
    emit("xmatch.txt", "xmatch", "lsi_to_cross_matching", &format!(" n={}", cross.n()), &Instance::CrossMatching(cross.clone()))?;
    let st = cross_matching_to_structured(&cross)?;
    emit("structured.txt", "structured", "cross_matching_to_structured", &format!(" budget={}", st.n()), &Instance::Structured(st.clone()))?;
    if terminal == Problem::Hadwiger {
        let h = hadwiger_instance(st.g(), st.n());
        let Instance::Hadwiger { h: target, .. } = &h else { unreachable!() };
        emit("hadwiger.txt", "hadwiger", "cc_to_hadwiger", &format!(" target={target}"), &h)?;
    } else {
        let classes = match &a.class {
            Some(c) => vec![parse_class(c)?],
            None => ClassId::GADGET_TARGETS.to_vec(),
        };
        for class in classes {
            let family = GadgetFamily::for_class(class).ok_or(ReductionError::NoGadget(class))?;
            let gadget = structured_to_class(&st, family)?;
            let params = format!(" class={class} family={family} budget={}", gadget.n);
            emit(&format!("fcon-{class}.txt"), &format!("fcon:{class}"), "structured_to_class", &params, &Instance::FContraction(gadget.target(class)))?;
        }
    }
    emit_manifest(dir, &manifest, "")?;
    println!("streams={count}");
    Ok(Outcome::Yes)
}

fn emit_manifest(dir: &Path, manifest: &str, extra: &str) -> anyhow::Result<()> {
    let mut text = manifest.to_string();
    if !extra.is_empty() {
        text.push_str(extra);
        text.push('\n');
    }
    fs::write(dir.join("manifest.txt"), text).context("writing the manifest")
}

fn edges_answer(f: Option<EdgeSet>) -> (bool, String) {
    match f {
        Some(f) => (true, serialize_edge_set(&f)),
        None => (false, String::new()),
    }
}

pub fn solve(a: &SolveArgs, max_vertices: usize) -> Result<Outcome, Failure> {
    let problem = parse_problem(&a.problem)?;
    let mut inst = read_instance(&a.input)?;
    if inst.problem() != problem {
        return Err(Failure::Usage(anyhow!("input is a {} instance, not {problem}", inst.problem())));
    }
    match &mut inst {
        Instance::CliqueContraction { t, .. } => *t = a.budget.unwrap_or(*t),
        Instance::FContraction(f) => {
            let class = match &a.class {
                Some(c) => parse_class(c)?,
                None => f.class,
            };
            *f = FContractionInstance::new(f.g.clone(), a.budget.unwrap_or(f.t), class);
        }
        _ if a.restricted => return Err(Failure::Usage(anyhow!("--restricted applies to fcon only"))),
        _ if a.budget.is_some() || a.class.is_some() => {
            return Err(Failure::Usage(anyhow!("--budget and --class apply to cliquecon and fcon only")));
        }
        _ => {}
    }
    let core = match &inst {
        Instance::Structured(s) => s.g().vertex_count() - s.noise().len(),
        other => other.graph().vertex_count(),
    };
    guard("core graph", core, max_vertices)?;
    let limits = Limits::default();
    let (yes, witness) = match &inst {
        Instance::ThreeColoring(g) => match solve_3coloring(g) {
            Some(c) => (true, c.colors().iter().enumerate().map(|(u, c)| format!("col {} {c}\n", u + 1)).collect()),
            None => (false, String::new()),
        },
        Instance::List(l) => match solve_list_embedding(l) {
            Some(m) => (true, m.as_slice().iter().enumerate().map(|(u, v)| format!("map {} {}\n", u + 1, v + 1)).collect()),
            None => (false, String::new()),
        },
        Instance::CrossMatching(x) => edges_answer(solve_cross_matching(x)),
        Instance::CliqueContraction { g, t } => edges_answer(contract_to_clique(g, *t)),
        Instance::Structured(s) => {
            let strategy =
                if s.noise().is_empty() { StructuredStrategy::BranchAndBound } else { StructuredStrategy::Exhaustive };
            edges_answer(solve_structured(s, strategy, &limits)?)
        }
        Instance::Hadwiger { g, h } => {
            let largest = connected_components(g).blocks().iter().map(Vec::len).max().unwrap_or(0);
            if largest <= limits.partition_vertices {
                let (best, model) = hadwiger_model(g, &limits)?;
                let mut text = format!("hadwiger {best}\n");
                for (i, block) in model.blocks().iter().enumerate() {
                    let _ = writeln!(text, "part {} {}", i + 1, ids(block));
                }
                (best >= *h, text)
            } else {
                (hadwiger_at_least(g, *h), String::new())
            }
        }
        Instance::FContraction(f) if a.restricted => {
            let (sa, sb) = (f.g.vertices_tagged("A"), f.g.vertices_tagged("B"));
            if sa.is_empty() || sa.len() != sb.len() {
                return Err(Failure::Usage(anyhow!("--restricted needs vertices tagged A and B in equal numbers")));
            }
            edges_answer(solve_f_contraction_restricted(f, &sa, &sb))
        }
        Instance::FContraction(f) => edges_answer(solve_f_contraction(f, &limits)?),
    };
    print!("{}\n{witness}", if yes { "yes" } else { "no" });
    Ok(yes.into())
}

pub fn recognize(a: &RecognizeArgs) -> Result<Outcome, Failure> {
    let class = parse_class(&a.class)?;
    let inst = read_instance(&a.input)?;
    let g = inst.graph();
    let yes = in_class(class, g);
    println!("{}", if yes { "yes" } else { "no" });
    match witness(class, g) {
        Some(Witness::TwoCliques { a, b }) => println!("part A {}\npart B {}", ids(&a), ids(&b)),
        Some(Witness::Split { clique, independent }) => println!("part K {}\npart I {}", ids(&clique), ids(&independent)),
        Some(Witness::EliminationOrder(order)) => println!("order {}", ids(&order)),
        None => {}
    }
    Ok(yes.into())
}

pub fn verify_chain(a: &ChainArgs, seed: u64, max_vertices: usize) -> Result<Outcome, Failure> {
    guard("largest trial graph", a.n_max, max_vertices)?;
    let terminal: Terminal = a.terminal.parse().map_err(|e: String| anyhow!(e))?;
    let classes = if a.classes.is_empty() {
        ClassId::GADGET_TARGETS.to_vec()
    } else {
        a.classes.iter().map(|c| parse_class(c)).collect::<anyhow::Result<Vec<_>>>()?
    };
    let config = ChainConfig {
        n_min: a.n_min,
        n_max: a.n_max,
        max_degree: a.max_degree,
        trials: a.trials,
        seed,
        terminal,
        classes,
        options: ChainOptions { pruning: pruning(a.no_prune), max_vertices, ..ChainOptions::default() },
    };
    let summary = run_chains(&config)?;
    let passed = summary.passed();
    let mut text = format!("trials={} passed={passed} failed={}\n", summary.reports.len(), summary.reports.len() - passed);
    for (hop, count) in summary.decision_mismatches() {
        let _ = writeln!(text, "hop={hop} decision_mismatches={count}");
    }
    print!("{text}");
    if let Some(path) = &a.report {
        let mut report = String::new();
        for r in &summary.reports {
            report.push_str(&r.canonical());
        }
        report.push_str(&text);
        fs::write(path, report).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok((passed == summary.reports.len()).into())
}

pub fn verify_hop(a: &HopArgs, seed: u64) -> Result<Outcome, Failure> {
    let mut construction: Construction = a.hop.parse().map_err(|e: String| anyhow!(e))?;
    if let Construction::LsiStream(p) = &mut construction {
        *p = pruning(a.no_prune);
    }
    let mutation: Mutation = a.mutation.parse().map_err(|e: String| anyhow!(e))?;
    let solvers = HopSolvers {
        structured: if a.exhaustive { StructuredStrategy::Exhaustive } else { StructuredStrategy::BranchAndBound },
        gadget: if a.restricted { GadgetSolver::Restricted } else { GadgetSolver::Exhaustive },
        limits: Limits::default(),
    };
    let config = HopTrialConfig {
        construction,
        mutation,
        trials: a.trials,
        seed,
        min_size: a.min_size,
        max_size: a.max_size,
        solvers,
    };
    if a.trials == 0 {
        return Err(Failure::Usage(anyhow!("--trials must be positive")));
    }
    let summary = run_hop_trials(&config)?;
    let text = format!(
        "hop={construction} mutation={mutation} trials={} passed={} failed={} yes={}\n",
        summary.outcomes.len(),
        summary.passed(),
        summary.failed(),
        summary.yes()
    );
    print!("{text}");
    if let Some((s, o)) = summary.first_failure() {
        println!("c counterexample seed={s} source={} target={}", o.source_yes, o.target_yes);
        if let Some(ce) = &o.counterexample {
            print!("{ce}");
        }
    }
    if let Some(path) = &a.report {
        let mut report = String::new();
        for (s, o) in &summary.outcomes {
            let _ = writeln!(
                report,
                "trial seed={s} source={} target={} passed={}",
                o.source_yes,
                o.target_yes,
                o.passed()
            );
        }
        report.push_str(&text);
        fs::write(path, report).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok((summary.failed() == 0).into())
}
