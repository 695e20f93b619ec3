use super::{
    random_cross_instance, random_free_structured_instance, random_graph, random_list_instance, random_structured_instance,
    rng, HarnessError,
};
use crate::classes::ClassId;
use crate::graph::Graph;
use crate::io::{serialize_instance, Instance};
use crate::reductions::{
    cc_to_hadwiger, check_cross_claim, cross_matching_to_structured_with, lsh_to_lsi_stream, lsi_to_cross_matching,
    reduce_3col_to_lsh, structured_to_class_with, ClaimViolation, GadgetFamily, HadwigerTarget, Mutation, ReductionError,
    StreamPruning,
};
use crate::solvers::{
    hadwiger_at_least, solve_3coloring, solve_clique_contraction, solve_cross_matching, solve_f_contraction,
    solve_f_contraction_restricted, solve_list_embedding, solve_structured, CrossMatchingInstance, EmbeddingMode, Limits,
    ListInstance, StructuredInstance, StructuredStrategy,
};
use rand::Rng;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// A source instance for one hop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopSource {
    Coloring(Graph),
    List(ListInstance),
    CrossMatching(CrossMatchingInstance),
    CliqueContraction { g: Graph, t: usize },
    Structured(StructuredInstance),
}

impl HopSource {
    pub fn to_instance(&self) -> Instance {
        match self.clone() {
            HopSource::Coloring(g) => Instance::ThreeColoring(g),
            HopSource::List(l) => Instance::List(l),
            HopSource::CrossMatching(x) => Instance::CrossMatching(x),
            HopSource::CliqueContraction { g, t } => Instance::CliqueContraction { g, t },
            HopSource::Structured(s) => Instance::Structured(s),
        }
    }
}

/// One construction of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Lsh,
    LsiStream(StreamPruning),
    CrossMatching,
    Structured,
    Hadwiger,
    Gadget(ClassId),
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Lsh => f.write_str("lsh"),
            Construction::LsiStream(_) => f.write_str("lsi"),
            Construction::CrossMatching => f.write_str("xmatch"),
            Construction::Structured => f.write_str("structured"),
            Construction::Hadwiger => f.write_str("hadwiger"),
            Construction::Gadget(c) => write!(f, "fcon:{c}"),
        }
    }
}

impl FromStr for Construction {
    type Err = String;

    /// Names as printed: `lsh`, `lsi`, `xmatch`, `structured`, `hadwiger`, `fcon:<class>`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lsh" => Ok(Construction::Lsh),
            "lsi" => Ok(Construction::LsiStream(StreamPruning::CapsAndCoverage)),
            "xmatch" => Ok(Construction::CrossMatching),
            "structured" => Ok(Construction::Structured),
            "hadwiger" => Ok(Construction::Hadwiger),
            _ => {
                let class = s.strip_prefix("fcon:").ok_or_else(|| format!("unknown hop `{s}`"))?;
                let class: ClassId = class.parse().map_err(|e: crate::classes::UnknownClass| e.to_string())?;
                if GadgetFamily::for_class(class).is_none() {
                    return Err(format!("no gadget reaches class {class}"));
                }
                Ok(Construction::Gadget(class))
            }
        }
    }
}

/// How the target gadget instance is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetSolver {
    /// Every forest of at most `n` edges.
    Exhaustive,
    /// Perfect A–B matchings only.
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HopSolvers {
    /// Target solver of the structured hop and source solver of the gadget hops.
    pub structured: StructuredStrategy,
    pub gadget: GadgetSolver,
    pub limits: Limits,
}

impl Default for HopSolvers {
    fn default() -> Self {
        HopSolvers { structured: StructuredStrategy::BranchAndBound, gadget: GadgetSolver::Exhaustive, limits: Limits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopOutcome {
    pub source_yes: bool,
    pub target_yes: bool,
    /// Only checked on the Cross Matching hop.
    pub claim_violation: Option<ClaimViolation>,
    /// The serialized source instance when the check failed.
    pub counterexample: Option<String>,
}

impl HopOutcome {
    pub fn passed(&self) -> bool {
        self.source_yes == self.target_yes && self.claim_violation.is_none()
    }
}

fn mismatch(construction: Construction, expected: &'static str) -> HarnessError {
    HarnessError::SourceMismatch { hop: construction.to_string(), expected }
}

/// Solves the source with one solver, builds the target, solves it with a
/// solver that does not rely on the construction, and compares.
pub fn verify_hop(
    source: &HopSource,
    construction: Construction,
    mutation: Mutation,
    solvers: &HopSolvers,
) -> Result<HopOutcome, HarnessError> {
    let applicable = match mutation {
        Mutation::None => true,
        Mutation::DropAC | Mutation::DropBD => construction == Construction::Structured,
        Mutation::DropNoiseJoins => matches!(construction, Construction::Gadget(_)),
        Mutation::DropPendants => {
            matches!(construction, Construction::Gadget(c) if GadgetFamily::for_class(c) == Some(GadgetFamily::Perfect))
        }
    };
    if !applicable {
        return Err(HarnessError::MutationNotApplicable { mutation: mutation.name(), hop: construction.to_string() });
    }
    let mut claim_violation = None;
    let (source_yes, target_yes) = match (construction, source) {
        (Construction::Lsh, HopSource::Coloring(g)) => {
            let red = reduce_3col_to_lsh(g, 1)?;
            (solve_3coloring(g).is_some(), solve_list_embedding(&red.instance).is_some())
        }
        (Construction::LsiStream(pruning), HopSource::List(l)) if l.mode() == EmbeddingMode::Homomorphism => {
            let mut stream = lsh_to_lsi_stream(l, pruning)?;
            let target = stream.any(|s| solve_list_embedding(&s.instance).is_some());
            (solve_list_embedding(l).is_some(), target)
        }
        (Construction::CrossMatching, HopSource::List(l)) if l.mode() == EmbeddingMode::Isomorphism => {
            let cross = lsi_to_cross_matching(l)?;
            claim_violation = check_cross_claim(l, &cross).err();
            (solve_list_embedding(l).is_some(), solve_cross_matching(&cross).is_some())
        }
        (Construction::Structured, HopSource::CrossMatching(x)) => {
            let st = cross_matching_to_structured_with(x, mutation)?;
            let target = solve_structured(&st, solvers.structured, &solvers.limits)?;
            (solve_cross_matching(x).is_some(), target.is_some())
        }
        (Construction::Hadwiger, HopSource::CliqueContraction { g, t }) => {
            let target = match cc_to_hadwiger(g, *t) {
                HadwigerTarget::ImmediateNo => false,
                HadwigerTarget::Instance { g, h } => hadwiger_at_least(&g, h),
            };
            (solve_clique_contraction(g, *t).is_some(), target)
        }
        (Construction::Gadget(class), HopSource::Structured(st)) => {
            let family = GadgetFamily::for_class(class).ok_or(ReductionError::NoGadget(class))?;
            let gadget = structured_to_class_with(st, family, mutation)?;
            let inst = gadget.target(class);
            let target = match solvers.gadget {
                GadgetSolver::Exhaustive => solve_f_contraction(&inst, &solvers.limits)?,
                GadgetSolver::Restricted => solve_f_contraction_restricted(&inst, st.a(), st.b()),
            };
            (solve_structured(st, solvers.structured, &solvers.limits)?.is_some(), target.is_some())
        }
        (c @ Construction::Lsh, _) => return Err(mismatch(c, "3-Coloring")),
        (c @ Construction::LsiStream(_), _) => return Err(mismatch(c, "list homomorphism")),
        (c @ Construction::CrossMatching, _) => return Err(mismatch(c, "list isomorphism")),
        (c @ Construction::Structured, _) => return Err(mismatch(c, "Cross Matching")),
        (c @ Construction::Hadwiger, _) => return Err(mismatch(c, "Clique Contraction")),
        (c @ Construction::Gadget(_), _) => return Err(mismatch(c, "Structured Clique Contraction")),
    };
    let mut outcome = HopOutcome { source_yes, target_yes, claim_violation, counterexample: None };
    if !outcome.passed() {
        outcome.counterexample = Some(serialize_instance(&source.to_instance()));
    }
    Ok(outcome)
}

/// A random source for `construction` whose size parameter is `size`:
/// graph order for the coloring hop, `|V(g)|` for list hops, `n` for the
/// matching, structured and gadget hops.
pub fn random_hop_source(construction: Construction, size: usize, seed: u64) -> Result<HopSource, HarnessError> {
    Ok(match construction {
        Construction::Lsh => HopSource::Coloring(random_graph(size, 4, seed)?),
        Construction::LsiStream(_) => {
            let n_h = 1 + rng(seed).gen_range(0..size.max(1) + 1);
            HopSource::List(random_list_instance(size, n_h, 3, EmbeddingMode::Homomorphism, seed)?)
        }
        Construction::CrossMatching => {
            HopSource::List(random_list_instance(size, size, 3, EmbeddingMode::Isomorphism, seed)?)
        }
        Construction::Structured => HopSource::CrossMatching(random_cross_instance(size, seed)?),
        Construction::Hadwiger => {
            let st = random_structured_instance(size, seed)?;
            HopSource::CliqueContraction { g: st.g().clone(), t: st.n() }
        }
        // Alternate between the chain's image and free instances, which are
        // the only ones sparse enough to expose some dropped gadget edges.
        Construction::Gadget(_) if seed % 2 == 1 => HopSource::Structured(random_free_structured_instance(size, seed)?),
        Construction::Gadget(_) => HopSource::Structured(random_structured_instance(size, seed)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopTrialConfig {
    pub construction: Construction,
    pub mutation: Mutation,
    pub trials: usize,
    pub seed: u64,
    pub min_size: usize,
    pub max_size: usize,
    pub solvers: HopSolvers,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopSummary {
    /// Seed and outcome of every trial, in seed order.
    pub outcomes: Vec<(u64, HopOutcome)>,
}

impl HopSummary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|(_, o)| o.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }

    pub fn yes(&self) -> usize {
        self.outcomes.iter().filter(|(_, o)| o.source_yes).count()
    }

    pub fn first_failure(&self) -> Option<&(u64, HopOutcome)> {
        self.outcomes.iter().find(|(_, o)| !o.passed())
    }
}

/// Runs `trials` hop checks; trial `i` uses seed `seed + i` and size
/// `min_size + i mod (max_size - min_size + 1)`.
pub fn run_hop_trials(config: &HopTrialConfig) -> Result<HopSummary, HarnessError> {
    if config.min_size == 0 || config.min_size > config.max_size {
        return Err(HarnessError::InvalidParameters(format!(
            "empty size range {}..={}",
            config.min_size, config.max_size
        )));
    }
    let span = config.max_size - config.min_size + 1;
    let mut outcomes = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let seed = config.seed.wrapping_add(i as u64);
            let source = random_hop_source(config.construction, config.min_size + i % span, seed)?;
            Ok((seed, verify_hop(&source, config.construction, config.mutation, &config.solvers)?))
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    outcomes.sort_by_key(|(s, _)| *s);
    Ok(HopSummary { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_names_round_trip() {
        for c in [
            Construction::Lsh,
            Construction::LsiStream(StreamPruning::CapsAndCoverage),
            Construction::CrossMatching,
            Construction::Structured,
            Construction::Hadwiger,
            Construction::Gadget(ClassId::Threshold),
        ] {
            assert_eq!(c.to_string().parse::<Construction>().unwrap(), c);
        }
        assert!("fcon:clique".parse::<Construction>().is_err());
    }

    #[test]
    fn wrong_source_and_mutation_are_rejected() {
        let source = HopSource::Coloring(Graph::complete(3));
        let solvers = HopSolvers::default();
        assert!(matches!(
            verify_hop(&source, Construction::Structured, Mutation::None, &solvers),
            Err(HarnessError::SourceMismatch { .. })
        ));
        assert!(matches!(
            verify_hop(&source, Construction::Lsh, Mutation::DropAC, &solvers),
            Err(HarnessError::MutationNotApplicable { .. })
        ));
    }

    #[test]
    fn small_hop_trials_pass() {
        for (construction, max) in [
            (Construction::Lsh, 5),
            (Construction::LsiStream(StreamPruning::None), 3),
            (Construction::CrossMatching, 4),
            (Construction::Structured, 3),
            (Construction::Gadget(ClassId::Split), 1),
        ] {
            let config = HopTrialConfig {
                construction,
                mutation: Mutation::None,
                trials: 12,
                seed: 7,
                min_size: if construction == Construction::Lsh { 2 } else { 1 },
                max_size: max,
                solvers: HopSolvers::default(),
            };
            let summary = run_hop_trials(&config).unwrap();
            assert_eq!(summary.failed(), 0, "{construction}: {:?}", summary.first_failure());
        }
    }

    #[test]
    fn failures_carry_the_source() {
        // Without the A × C join some trials disagree.
        let config = HopTrialConfig {
            construction: Construction::Structured,
            mutation: Mutation::DropAC,
            trials: 30,
            seed: 0,
            min_size: 1,
            max_size: 2,
            solvers: HopSolvers { structured: StructuredStrategy::Exhaustive, ..HopSolvers::default() },
        };
        let summary = run_hop_trials(&config).unwrap();
        let (_, failure) = summary.first_failure().expect("the mutation is detected");
        assert!(failure.counterexample.as_deref().unwrap().starts_with("problem xmatch"));
    }
}
