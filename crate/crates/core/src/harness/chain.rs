use super::{digest, random_graph, HarnessError};
use crate::classes::ClassId;
use crate::graph::{EdgeSet, Graph};
use crate::io::serialize_edge_set;
use crate::reductions::{
    cc_to_hadwiger, check_cross_claim, cross_matching_to_structured, lsh_to_lsi_stream, lsi_to_cross_matching,
    reduce_3col_to_lsh, stream_count, structured_to_class, GadgetFamily, GadgetInstance, HadwigerTarget, ReductionError,
    StreamPruning,
};
use crate::solvers::{
    hadwiger_at_least, solve_3coloring, solve_cross_matching, solve_f_contraction_restricted, solve_list_embedding,
    solve_structured, Limits, StructuredStrategy,
};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// Which end of the chain to run after the structured hop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Terminal {
    Hadwiger,
    FContraction,
    Both,
}

impl Terminal {
    fn hadwiger(self) -> bool {
        self != Terminal::FContraction
    }

    fn gadgets(self) -> bool {
        self != Terminal::Hadwiger
    }
}

impl FromStr for Terminal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hadwiger" => Ok(Terminal::Hadwiger),
            "fcon" => Ok(Terminal::FContraction),
            "both" => Ok(Terminal::Both),
            _ => Err(format!("unknown terminal `{s}`, expected hadwiger, fcon or both")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    pub pruning: StreamPruning,
    /// Largest input graph the chain will run on.
    pub max_vertices: usize,
    /// Largest number of streamed instances the chain will run through.
    pub max_streams: u128,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { pruning: StreamPruning::CapsAndCoverage, max_vertices: 10, max_streams: 100_000 }
    }
}

/// One hop of a chain run. Hops after the stream aggregate over the
/// streamed instances: sizes are maxima, the decision is the disjunction, and
/// `disagreements` counts streamed instances whose answer differs from the
/// list isomorphism answer on the same instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopRecord {
    pub name: String,
    pub construction: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub instances: usize,
    pub yes_instances: usize,
    pub decision: bool,
    pub disagreements: usize,
    /// Digest of the first witness found, when the solver returns one.
    pub witness: Option<String>,
    pub wall: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    AllAgree,
    /// The first hop whose answer differs from the 3-Coloring answer, or that
    /// disagrees on some streamed instance, or whose structural claim failed.
    Divergent { hop: String },
    Truncated { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub seed: Option<u64>,
    pub vertices: usize,
    pub edges: usize,
    pub streams: u128,
    pub claim_violations: usize,
    pub hops: Vec<HopRecord>,
    pub verdict: Verdict,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::AllAgree
    }

    pub fn hop(&self, name: &str) -> Option<&HopRecord> {
        self.hops.iter().find(|h| h.name == name)
    }

    /// Key=value text without wall times; identical across runs for the
    /// same input.
    pub fn canonical(&self) -> String {
        self.render(false)
    }

    /// As [`ChainReport::canonical`], with wall times in milliseconds.
    pub fn with_times(&self) -> String {
        self.render(true)
    }

    fn render(&self, times: bool) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let seed = self.seed.map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(
            out,
            "chain seed={seed} vertices={} edges={} streams={} claim_violations={}",
            self.vertices, self.edges, self.streams, self.claim_violations
        );
        for h in &self.hops {
            let _ = write!(
                out,
                "hop name={} construction={} vertices={} edges={} instances={} yes={} decision={} disagreements={} witness={}",
                h.name,
                h.construction,
                h.vertices,
                h.edges,
                h.instances,
                h.yes_instances,
                yn(h.decision),
                h.disagreements,
                h.witness.as_deref().unwrap_or("-")
            );
            if times {
                let _ = write!(out, " time_ms={:.3}", h.wall.as_secs_f64() * 1e3);
            }
            out.push('\n');
        }
        match &self.verdict {
            Verdict::AllAgree => out.push_str("verdict=agree\n"),
            Verdict::Divergent { hop } => {
                let _ = writeln!(out, "verdict=divergent hop={hop}");
            }
            Verdict::Truncated { reason } => {
                let _ = writeln!(out, "verdict=truncated reason={reason}");
            }
        }
        out
    }
}

fn record(name: &str, construction: &'static str, g: &Graph) -> HopRecord {
    HopRecord {
        name: name.to_string(),
        construction,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        instances: 0,
        yes_instances: 0,
        decision: false,
        disagreements: 0,
        witness: None,
        wall: Duration::ZERO,
    }
}

impl HopRecord {
    fn observe(&mut self, g: &Graph, answer: bool, reference: Option<bool>, witness: Option<String>, start: Instant) {
        self.vertices = self.vertices.max(g.vertex_count());
        self.edges = self.edges.max(g.edge_count());
        self.instances += 1;
        if answer {
            self.yes_instances += 1;
            self.decision = true;
        }
        if reference.is_some_and(|r| r != answer) {
            self.disagreements += 1;
        }
        if self.witness.is_none() {
            self.witness = witness.map(|w| digest(&w));
        }
        self.wall += start.elapsed();
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn edges_witness(f: Option<&EdgeSet>) -> Option<String> {
    f.map(serialize_edge_set)
}

/// Runs the whole chain on `g`: 3-Coloring, list homomorphism, the stream
/// of list isomorphism instances, and for every streamed instance Cross
/// Matching, Structured Clique Contraction and the selected terminals.
///
/// The chain uses fast solvers after the stream: cross matchings for the
/// structured hop, branch and bound for Hadwiger, and the matching-restricted
/// search for the gadgets. Inputs over the size guards give a truncated report.
pub fn run_chain(
    g: &Graph,
    terminal: Terminal,
    classes: &[ClassId],
    options: &ChainOptions,
) -> Result<ChainReport, ReductionError> {
    let mut report = ChainReport {
        seed: None,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        streams: 0,
        claim_violations: 0,
        hops: Vec::new(),
        verdict: Verdict::AllAgree,
    };
    if g.vertex_count() > options.max_vertices {
        report.verdict = Verdict::Truncated {
            reason: format!("graph has {} vertices, guard is {}", g.vertex_count(), options.max_vertices),
        };
        return Ok(report);
    }

    let start = Instant::now();
    let coloring = solve_3coloring(g);
    let mut hop = record("3col", "input", g);
    hop.observe(g, coloring.is_some(), None, coloring.as_ref().map(|c| join(c.colors())), start);
    let reference = hop.decision;
    report.hops.push(hop);

    let start = Instant::now();
    let lsh = reduce_3col_to_lsh(g, 1)?;
    let answer = solve_list_embedding(&lsh.instance);
    let mut hop = record("lsh", "reduce_3col_to_lsh", lsh.instance.h());
    hop.observe(lsh.instance.h(), answer.is_some(), None, answer.map(|a| join(a.as_slice())), start);
    report.hops.push(hop);

    report.streams = stream_count(&lsh.instance, options.pruning)?;
    if report.streams > options.max_streams {
        report.verdict =
            Verdict::Truncated { reason: format!("{} streamed instances, guard is {}", report.streams, options.max_streams) };
        return Ok(report);
    }

    let empty = Graph::new(0);
    let mut lsi = record("lsi", "lsh_to_lsi_stream", &empty);
    let mut xmatch = record("xmatch", "lsi_to_cross_matching", &empty);
    let mut structured = record("structured", "cross_matching_to_structured", &empty);
    let mut hadwiger = record("hadwiger", "cc_to_hadwiger", &empty);
    let classes: Vec<ClassId> = if terminal.gadgets() { classes.to_vec() } else { Vec::new() };
    let mut gadget_hops: Vec<(ClassId, GadgetFamily, HopRecord)> = Vec::new();
    for &class in &classes {
        let family = GadgetFamily::for_class(class).ok_or(ReductionError::NoGadget(class))?;
        gadget_hops.push((class, family, record(&format!("fcon:{class}"), family.construction(), &empty)));
    }

    for streamed in lsh_to_lsi_stream(&lsh.instance, options.pruning)? {
        let start = Instant::now();
        let answer = solve_list_embedding(&streamed.instance);
        let here = answer.is_some();
        lsi.observe(streamed.instance.h(), here, None, answer.map(|a| join(a.as_slice())), start);

        let start = Instant::now();
        let cross = lsi_to_cross_matching(&streamed.instance)?;
        if check_cross_claim(&streamed.instance, &cross).is_err() {
            report.claim_violations += 1;
        }
        let m = solve_cross_matching(&cross);
        xmatch.observe(cross.l(), m.is_some(), Some(here), edges_witness(m.as_ref()), start);

        let start = Instant::now();
        let st = cross_matching_to_structured(&cross)?;
        let f = solve_structured(&st, StructuredStrategy::CrossMatchings, &Limits::default())
            .expect("cross matching search has no size guard");
        structured.observe(st.g(), f.is_some(), Some(here), edges_witness(f.as_ref()), start);

        if terminal.hadwiger() {
            let start = Instant::now();
            let (hg, answer) = match cc_to_hadwiger(st.g(), st.n()) {
                HadwigerTarget::ImmediateNo => (st.g().clone(), false),
                HadwigerTarget::Instance { g, h } => {
                    let yes = hadwiger_at_least(&g, h);
                    (g, yes)
                }
            };
            hadwiger.observe(&hg, answer, Some(here), None, start);
        }

        let mut gadgets: BTreeMap<GadgetFamily, GadgetInstance> = BTreeMap::new();
        for (class, family, hop) in &mut gadget_hops {
            let start = Instant::now();
            if !gadgets.contains_key(family) {
                gadgets.insert(*family, structured_to_class(&st, *family)?);
            }
            let gadget = &gadgets[family];
            let f = solve_f_contraction_restricted(&gadget.target(*class), st.a(), st.b());
            hop.observe(&gadget.graph, f.is_some(), Some(here), edges_witness(f.as_ref()), start);
        }
    }

    report.hops.push(lsi);
    report.hops.push(xmatch);
    report.hops.push(structured);
    if terminal.hadwiger() {
        report.hops.push(hadwiger);
    }
    report.hops.extend(gadget_hops.into_iter().map(|(_, _, h)| h));

    if report.claim_violations > 0 {
        report.verdict = Verdict::Divergent { hop: "xmatch".into() };
    } else if let Some(h) = report.hops.iter().find(|h| h.decision != reference || h.disagreements > 0) {
        report.verdict = Verdict::Divergent { hop: h.name.clone() };
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub terminal: Terminal,
    pub classes: Vec<ClassId>,
    pub options: ChainOptions,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig {
            n_min: 4,
            n_max: 7,
            max_degree: 4,
            trials: 100,
            seed: 0,
            terminal: Terminal::Both,
            classes: ClassId::GADGET_TARGETS.to_vec(),
            options: ChainOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSummary {
    /// One report per trial, in seed order.
    pub reports: Vec<ChainReport>,
}

impl ChainSummary {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.passed()).count()
    }

    /// Hop name to the number of trials in which it diverged.
    pub fn divergent_hops(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in &self.reports {
            if let Verdict::Divergent { hop } = &r.verdict {
                *out.entry(hop.clone()).or_insert(0) += 1;
            }
        }
        out
    }

    /// Hop name to the number of trials whose decision differs from the
    /// 3-Coloring decision, for every hop that appears.
    pub fn decision_mismatches(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in &self.reports {
            let Some(reference) = r.hop("3col").map(|h| h.decision) else { continue };
            for h in &r.hops {
                let count = out.entry(h.name.clone()).or_insert(0);
                if h.decision != reference {
                    *count += 1;
                }
            }
        }
        out
    }
}

/// Runs `trials` chains on random connected graphs. Trial `i` uses seed
/// `seed + i` and `n = n_min + i mod (n_max - n_min + 1)`.
pub fn verify_chain(config: &ChainConfig) -> Result<ChainSummary, HarnessError> {
    if config.n_min == 0 || config.n_min > config.n_max {
        return Err(HarnessError::InvalidParameters(format!("empty size range {}..={}", config.n_min, config.n_max)));
    }
    let span = config.n_max - config.n_min + 1;
    let mut reports = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let seed = config.seed.wrapping_add(i as u64);
            let g = random_graph(config.n_min + i % span, config.max_degree, seed)?;
            let mut report = run_chain(&g, config.terminal, &config.classes, &config.options)?;
            report.seed = Some(seed);
            Ok(report)
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    reports.sort_by_key(|r| r.seed);
    Ok(ChainSummary { reports })
}
