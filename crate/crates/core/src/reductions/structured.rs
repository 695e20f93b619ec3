use super::ReductionError;
use crate::classes::ClassId;
use crate::graph::{is_connected, EdgeSet, Graph};
use crate::solvers::{CrossMatchingInstance, FContractionInstance, StructuredInstance};
use std::fmt;
use std::str::FromStr;

/// Deliberate construction defects, used to show that the hop checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mutation {
    None,
    /// Structured instance without the `A × C` join.
    DropAC,
    /// Structured instance without the `B × D` join.
    DropBD,
    /// Gadget vertices not joined to the core.
    DropNoiseJoins,
    /// Perfect gadget without the edges from core vertices to their copies.
    DropPendants,
}

impl Mutation {
    pub const ALL: [Mutation; 5] =
        [Mutation::None, Mutation::DropAC, Mutation::DropBD, Mutation::DropNoiseJoins, Mutation::DropPendants];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::DropAC => "drop-ac",
            Mutation::DropBD => "drop-bd",
            Mutation::DropNoiseJoins => "drop-noise-joins",
            Mutation::DropPendants => "drop-pendants",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mutation::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown mutation `{s}`"))
    }
}

/// Adds a clique `C ∪ D` on `4n` new vertices, joins `A` to `C` and `B` to `D`.
/// Vertices of L keep their ids; `C` and `D` follow.
pub fn cross_matching_to_structured(inst: &CrossMatchingInstance) -> Result<StructuredInstance, ReductionError> {
    cross_matching_to_structured_with(inst, Mutation::None)
}

pub fn cross_matching_to_structured_with(
    inst: &CrossMatchingInstance,
    mutation: Mutation,
) -> Result<StructuredInstance, ReductionError> {
    let n = inst.n();
    let mut g = inst.l().clone();
    let first = g.add_vertices(4 * n);
    let c: Vec<usize> = (first..first + 2 * n).collect();
    let d: Vec<usize> = (first + 2 * n..first + 4 * n).collect();
    let k: Vec<usize> = (first..first + 4 * n).collect();
    g.make_clique(&k);
    if mutation != Mutation::DropAC {
        g.link_all(inst.a(), &c);
    }
    if mutation != Mutation::DropBD {
        g.link_all(inst.b(), &d);
    }
    for (name, part) in [("A", inst.a()), ("B", inst.b()), ("C", &c), ("D", &d)] {
        for &v in part {
            g.set_tag(v, name);
        }
    }
    Ok(StructuredInstance::new(g, [inst.a().to_vec(), inst.b().to_vec(), c, d, Vec::new()], n)?)
}

/// Hadwiger Number target of a clique contraction instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HadwigerTarget {
    /// Disconnected graphs never contract to a clique.
    ImmediateNo,
    /// Ask whether `g` has a `K_h` minor.
    Instance { g: Graph, h: usize },
}

pub fn cc_to_hadwiger(g: &Graph, t: usize) -> HadwigerTarget {
    if !is_connected(g) {
        return HadwigerTarget::ImmediateNo;
    }
    HadwigerTarget::Instance { g: g.clone(), h: g.vertex_count().saturating_sub(t) }
}

/// The three gadget constructions from Structured Clique Contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetFamily {
    /// Two cliques on `2n` new vertices each, joined to the core, not to each other.
    Chordal,
    /// An independent set of `n + 2` new vertices joined to the core.
    Split,
    /// A clique of copies with one pendant edge per core vertex, plus an
    /// independent set of `n + 1` new vertices joined to the core.
    Perfect,
}

impl GadgetFamily {
    pub const ALL: [GadgetFamily; 3] = [GadgetFamily::Chordal, GadgetFamily::Split, GadgetFamily::Perfect];

    pub fn name(self) -> &'static str {
        match self {
            GadgetFamily::Chordal => "chordal-family",
            GadgetFamily::Split => "split-family",
            GadgetFamily::Perfect => "perfect",
        }
    }

    /// Construction label used in chain reports.
    pub fn construction(self) -> &'static str {
        match self {
            GadgetFamily::Chordal => "structured_to_class:chordal-family",
            GadgetFamily::Split => "structured_to_class:split-family",
            GadgetFamily::Perfect => "structured_to_class:perfect",
        }
    }

    /// The gadget used for a target class, if any.
    pub fn for_class(class: ClassId) -> Option<GadgetFamily> {
        match class {
            ClassId::Clique => None,
            ClassId::TwoCliques
            | ClassId::Chordal
            | ClassId::Interval
            | ClassId::ProperInterval
            | ClassId::Threshold
            | ClassId::TriviallyPerfect => Some(GadgetFamily::Chordal),
            ClassId::Split | ClassId::CompleteSplit => Some(GadgetFamily::Split),
            ClassId::Perfect => Some(GadgetFamily::Perfect),
        }
    }
}

impl fmt::Display for GadgetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GadgetFamily::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown gadget family `{s}`"))
    }
}

/// A gadget-built graph with budget `n`. `noisy` views the same graph as a
/// noisy structured instance whose noise part is the gadget vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub family: GadgetFamily,
    pub graph: Graph,
    pub n: usize,
    pub noisy: StructuredInstance,
}

impl GadgetInstance {
    pub fn target(&self, class: ClassId) -> FContractionInstance {
        FContractionInstance::new(self.graph.clone(), self.n, class)
    }
}

pub fn structured_to_class(inst: &StructuredInstance, family: GadgetFamily) -> Result<GadgetInstance, ReductionError> {
    structured_to_class_with(inst, family, Mutation::None)
}

/// Appends the gadget vertices after the core and tags them `K`, `K'`, `S`,
/// `copy` or `I`.
pub fn structured_to_class_with(
    inst: &StructuredInstance,
    family: GadgetFamily,
    mutation: Mutation,
) -> Result<GadgetInstance, ReductionError> {
    if !inst.noise().is_empty() {
        return Err(ReductionError::NoiseNotEmpty(inst.noise().len()));
    }
    let n = inst.n();
    let core: Vec<usize> = (0..inst.g().vertex_count()).collect();
    let joins = mutation != Mutation::DropNoiseJoins;
    let mut g = inst.g().clone();
    let add = |g: &mut Graph, count: usize, tag: &str| {
        let first = g.add_vertices(count);
        let ids: Vec<usize> = (first..first + count).collect();
        for &v in &ids {
            g.set_tag(v, tag);
        }
        ids
    };
    match family {
        GadgetFamily::Chordal => {
            for tag in ["K", "K'"] {
                let k = add(&mut g, 2 * n, tag);
                g.make_clique(&k);
                if joins {
                    g.link_all(&core, &k);
                }
            }
        }
        GadgetFamily::Split => {
            let s = add(&mut g, n + 2, "S");
            if joins {
                g.link_all(&core, &s);
            }
        }
        GadgetFamily::Perfect => {
            let copies = add(&mut g, core.len(), "copy");
            g.make_clique(&copies);
            if mutation != Mutation::DropPendants {
                for (&u, &c) in core.iter().zip(&copies) {
                    g.link(u, c);
                }
            }
            let i = add(&mut g, n + 1, "I");
            if joins {
                g.link_all(&core, &i);
            }
        }
    }
    let noise: Vec<usize> = (core.len()..g.vertex_count()).collect();
    let [a, b, c, d, _] = inst.parts();
    let noisy = StructuredInstance::new(g.clone(), [a.to_vec(), b.to_vec(), c.to_vec(), d.to_vec(), noise], n)?;
    Ok(GadgetInstance { family, graph: g, n, noisy })
}

/// Whether `f` is a perfect matching of `n` edges of the graph, each joining
/// a vertex of `A` to a vertex of `B`.
pub fn check_solution_shape(inst: &StructuredInstance, f: &EdgeSet) -> bool {
    let in_a = |v: usize| inst.a().binary_search(&v).is_ok();
    let in_b = |v: usize| inst.b().binary_search(&v).is_ok();
    f.len() == inst.n()
        && f.is_matching()
        && f.check_in(inst.g()).is_ok()
        && f.iter().all(|(u, v)| (in_a(u) && in_b(v)) || (in_a(v) && in_b(u)))
}
