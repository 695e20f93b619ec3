//! Line-oriented text format for graphs and every instance type.
//!
//! A bare graph is the DIMACS-style block `p edge <n> <m>` followed by `m`
//! lines `e <u> <v>` and optional tag lines `t <u> <label>`. Lines starting
//! with `c` are comments. Instance files start with a header
//!
//! ```text
//! problem <id> [key=value ...]
//! ```
//!
//! followed by sections: `graph <name>` … `end` holding a graph block,
//! `coloring <graph> <k>` … `end` holding `col <u> <c>` lines, `lists` … `end`
//! holding `list <u> <v>...` lines, and top-level `part <name> <ids...>`
//! lines. Vertex ids are 1-based in text and 0-based in memory. Parsing
//! re-validates every instance invariant and rejects rather than repairs.

use crate::classes::ClassId;
use crate::graph::{EdgeSet, Graph, GraphError, ProperColoring};
use crate::solvers::{
    CrossMatchingInstance, EmbeddingMode, FContractionInstance, InstanceError, ListInstance, StructuredInstance,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invariant violated: {0}")]
    Invariant(#[from] InstanceError),
    #[error("invariant violated: {0}")]
    Graph(#[from] GraphError),
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Syntax { line, message: message.into() })
}

/// Problem ids used in headers and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    ThreeColoring,
    Lsh,
    Lsi,
    CrossMatching,
    CliqueContraction,
    Structured,
    Hadwiger,
    FContraction,
}

impl Problem {
    pub const ALL: [Problem; 8] = [
        Problem::ThreeColoring,
        Problem::Lsh,
        Problem::Lsi,
        Problem::CrossMatching,
        Problem::CliqueContraction,
        Problem::Structured,
        Problem::Hadwiger,
        Problem::FContraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::ThreeColoring => "3col",
            Problem::Lsh => "lsh",
            Problem::Lsi => "lsi",
            Problem::CrossMatching => "xmatch",
            Problem::CliqueContraction => "cliquecon",
            Problem::Structured => "structured",
            Problem::Hadwiger => "hadwiger",
            Problem::FContraction => "fcon",
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Problem::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| format!("unknown problem `{s}`"))
    }
}

/// Any instance the format can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    ThreeColoring(Graph),
    List(ListInstance),
    CrossMatching(CrossMatchingInstance),
    CliqueContraction { g: Graph, t: usize },
    Structured(StructuredInstance),
    Hadwiger { g: Graph, h: usize },
    FContraction(FContractionInstance),
}

impl Instance {
    pub fn problem(&self) -> Problem {
        match self {
            Instance::ThreeColoring(_) => Problem::ThreeColoring,
            Instance::List(l) if l.mode() == EmbeddingMode::Homomorphism => Problem::Lsh,
            Instance::List(_) => Problem::Lsi,
            Instance::CrossMatching(_) => Problem::CrossMatching,
            Instance::CliqueContraction { .. } => Problem::CliqueContraction,
            Instance::Structured(_) => Problem::Structured,
            Instance::Hadwiger { .. } => Problem::Hadwiger,
            Instance::FContraction(_) => Problem::FContraction,
        }
    }

    /// The main graph of the instance.
    pub fn graph(&self) -> &Graph {
        match self {
            Instance::ThreeColoring(g) | Instance::CliqueContraction { g, .. } | Instance::Hadwiger { g, .. } => g,
            Instance::List(l) => l.g(),
            Instance::CrossMatching(x) => x.l(),
            Instance::Structured(s) => s.g(),
            Instance::FContraction(f) => &f.g,
        }
    }
}

// ---------------------------------------------------------------- writing

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    write_graph(&mut out, g);
    out
}

fn write_graph(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for v in 0..g.vertex_count() {
        if let Some(tag) = g.tag(v) {
            let _ = writeln!(out, "t {} {}", v + 1, tag);
        }
    }
}

fn write_section(out: &mut String, name: &str, g: &Graph) {
    let _ = writeln!(out, "graph {name}");
    write_graph(out, g);
    out.push_str("end\n");
}

fn write_coloring(out: &mut String, name: &str, c: &ProperColoring) {
    let _ = writeln!(out, "coloring {name} {}", c.k());
    for (u, &col) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "col {} {}", u + 1, col);
    }
    out.push_str("end\n");
}

fn write_ids(out: &mut String, prefix: &str, ids: &[usize]) {
    out.push_str(prefix);
    for &v in ids {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    match inst {
        Instance::ThreeColoring(g) => {
            out.push_str("problem 3col\n");
            write_section(&mut out, "g", g);
        }
        Instance::List(l) => {
            let _ = writeln!(out, "problem {} mode={}", inst.problem(), l.mode().name());
            write_section(&mut out, "g", l.g());
            write_section(&mut out, "h", l.h());
            write_coloring(&mut out, "g", l.c_g());
            write_coloring(&mut out, "h", l.c_h());
            out.push_str("lists\n");
            for (u, list) in l.lists().iter().enumerate() {
                write_ids(&mut out, &format!("list {}", u + 1), list);
            }
            out.push_str("end\n");
        }
        Instance::CrossMatching(x) => {
            out.push_str("problem xmatch\n");
            write_section(&mut out, "g", x.l());
            write_ids(&mut out, "part A", x.a());
            write_ids(&mut out, "part B", x.b());
        }
        Instance::CliqueContraction { g, t } => {
            let _ = writeln!(out, "problem cliquecon budget={t}");
            write_section(&mut out, "g", g);
        }
        Instance::Structured(s) => {
            let _ = writeln!(out, "problem structured budget={}", s.n());
            write_section(&mut out, "g", s.g());
            for (name, part) in ["A", "B", "C", "D", "N"].into_iter().zip(s.parts()) {
                write_ids(&mut out, &format!("part {name}"), part);
            }
        }
        Instance::Hadwiger { g, h } => {
            let _ = writeln!(out, "problem hadwiger target={h}");
            write_section(&mut out, "g", g);
        }
        Instance::FContraction(f) => {
            let _ = writeln!(out, "problem fcon budget={} class={}", f.t, f.class);
            write_section(&mut out, "g", &f.g);
        }
    }
    out
}

/// Edge set as `e <u> <v>` lines, 1-based.
pub fn serialize_edge_set(f: &EdgeSet) -> String {
    let mut out = String::new();
    for (u, v) in f.iter() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

// ---------------------------------------------------------------- reading

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, w)| !w.is_empty() && w[0] != "c")
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(0, |(l, _)| *l)
    }
}

fn number(line: usize, word: &str, what: &str) -> Result<usize, IoError> {
    word.parse().or_else(|_| syntax(line, format!("expected {what}, found `{word}`")))
}

fn vertex(line: usize, word: &str, n: usize) -> Result<usize, IoError> {
    let v = number(line, word, "a vertex id")?;
    if v == 0 || v > n {
        return syntax(line, format!("vertex {v} out of range 1..={n}"));
    }
    Ok(v - 1)
}

/// Parses a bare graph block.
pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines, false)?;
    if let Some((line, words)) = lines.next() {
        return syntax(line, format!("unexpected `{}` after the graph", words[0]));
    }
    Ok(g)
}

/// Reads `p edge`, `e` and `t` lines; inside a section, stops at `end`.
fn read_graph(lines: &mut Lines<'_>, in_section: bool) -> Result<Graph, IoError> {
    let Some((line, words)) = lines.next() else { return syntax(lines.last_line(), "missing `p edge` line") };
    if words.len() != 4 || words[0] != "p" || words[1] != "edge" {
        return syntax(line, "expected `p edge <n> <m>`");
    }
    let n = number(line, words[2], "a vertex count")?;
    let m = number(line, words[3], "an edge count")?;
    let mut g = Graph::new(n);
    let mut edges = 0;
    loop {
        match lines.peek() {
            None if in_section => return syntax(lines.last_line(), "missing `end`"),
            None => break,
            Some((_, w)) if w[0] != "e" && w[0] != "t" => break,
            Some(_) => {}
        }
        let (line, words) = lines.next().expect("peeked");
        match words[0] {
            "e" => {
                if words.len() != 3 {
                    return syntax(line, "expected `e <u> <v>`");
                }
                let (u, v) = (vertex(line, words[1], n)?, vertex(line, words[2], n)?);
                if u == v {
                    return syntax(line, format!("self-loop at vertex {}", u + 1));
                }
                if g.has_edge(u, v) {
                    return syntax(line, format!("duplicate edge {{{}, {}}}", u + 1, v + 1));
                }
                g.add_edge(u, v)?;
                edges += 1;
            }
            _ => {
                if words.len() != 3 {
                    return syntax(line, "expected `t <u> <label>`");
                }
                let v = vertex(line, words[1], n)?;
                if g.tag(v).is_some() {
                    return syntax(line, format!("vertex {} tagged twice", v + 1));
                }
                g.set_tag(v, words[2]);
            }
        }
    }
    if edges != m {
        return syntax(line, format!("header announces {m} edges, found {edges}"));
    }
    if in_section {
        match lines.next() {
            Some((_, w)) if w == ["end"] => {}
            Some((l, w)) => return syntax(l, format!("expected `end`, found `{}`", w.join(" "))),
            None => return syntax(lines.last_line(), "missing `end`"),
        }
    }
    Ok(g)
}

/// Parses any instance file; text without a `problem` header is read as a
/// 3-Coloring instance on a bare graph.
pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let mut lines = Lines::new(text);
    let Some((line, words)) = lines.peek().cloned() else { return syntax(0, "empty input") };
    if words[0] != "problem" {
        return parse_graph(text).map(Instance::ThreeColoring);
    }
    lines.next();
    if words.len() < 2 {
        return syntax(line, "expected `problem <id>`");
    }
    let problem: Problem = words[1].parse().or_else(|e: String| syntax(line, e))?;
    let mut header = BTreeMap::new();
    for w in &words[2..] {
        let Some((k, v)) = w.split_once('=') else { return syntax(line, format!("expected key=value, found `{w}`")) };
        if header.insert(k.to_string(), v.to_string()).is_some() {
            return syntax(line, format!("duplicate header key `{k}`"));
        }
    }
    let mut graphs: BTreeMap<String, (usize, Graph)> = BTreeMap::new();
    let mut colorings: BTreeMap<String, (usize, usize, Vec<usize>)> = BTreeMap::new();
    let mut lists: Option<Vec<Vec<usize>>> = None;
    let mut parts: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
    while let Some((line, words)) = lines.next() {
        match words[0] {
            "graph" => {
                if words.len() != 2 {
                    return syntax(line, "expected `graph <name>`");
                }
                let g = read_graph(&mut lines, true)?;
                if graphs.insert(words[1].to_string(), (line, g)).is_some() {
                    return syntax(line, format!("graph `{}` given twice", words[1]));
                }
            }
            "coloring" => {
                if words.len() != 3 {
                    return syntax(line, "expected `coloring <graph> <k>`");
                }
                let name = words[1];
                let Some((_, g)) = graphs.get(name) else {
                    return syntax(line, format!("coloring for unknown graph `{name}`"));
                };
                let n = g.vertex_count();
                let k = number(line, words[2], "a color count")?;
                let mut colors = vec![0; n];
                loop {
                    let Some((l, w)) = lines.next() else { return syntax(lines.last_line(), "missing `end`") };
                    if w == ["end"] {
                        break;
                    }
                    if w.len() != 3 || w[0] != "col" {
                        return syntax(l, "expected `col <u> <c>` or `end`");
                    }
                    let u = vertex(l, w[1], n)?;
                    if colors[u] != 0 {
                        return syntax(l, format!("vertex {} colored twice", u + 1));
                    }
                    colors[u] = number(l, w[2], "a color")?;
                    if colors[u] == 0 {
                        return syntax(l, "colors start at 1");
                    }
                }
                if let Some(u) = colors.iter().position(|&c| c == 0) {
                    return syntax(line, format!("vertex {} has no color", u + 1));
                }
                if colorings.insert(name.to_string(), (line, k, colors)).is_some() {
                    return syntax(line, format!("coloring of `{name}` given twice"));
                }
            }
            "lists" => {
                let (Some((_, g)), Some((_, h))) = (graphs.get("g"), graphs.get("h")) else {
                    return syntax(line, "lists need graphs `g` and `h` first");
                };
                let (ng, nh) = (g.vertex_count(), h.vertex_count());
                let mut out: Vec<Option<Vec<usize>>> = vec![None; ng];
                loop {
                    let Some((l, w)) = lines.next() else { return syntax(lines.last_line(), "missing `end`") };
                    if w == ["end"] {
                        break;
                    }
                    if w.len() < 2 || w[0] != "list" {
                        return syntax(l, "expected `list <u> <v>...` or `end`");
                    }
                    let u = vertex(l, w[1], ng)?;
                    let vs = w[2..].iter().map(|x| vertex(l, x, nh)).collect::<Result<Vec<_>, _>>()?;
                    if out[u].replace(vs).is_some() {
                        return syntax(l, format!("list of vertex {} given twice", u + 1));
                    }
                }
                if let Some(u) = out.iter().position(Option::is_none) {
                    return syntax(line, format!("vertex {} has no list line", u + 1));
                }
                lists = Some(out.into_iter().map(Option::unwrap).collect());
            }
            "part" => {
                if words.len() < 2 {
                    return syntax(line, "expected `part <name> <ids...>`");
                }
                let ids = words[2..].iter().map(|s| s.to_string()).collect();
                if parts.insert(words[1].to_string(), (line, ids)).is_some() {
                    return syntax(line, format!("part `{}` given twice", words[1]));
                }
            }
            other => return syntax(line, format!("unexpected `{other}`")),
        }
    }

    let take_graph = |graphs: &mut BTreeMap<String, (usize, Graph)>, name: &str| -> Result<Graph, IoError> {
        graphs.remove(name).map(|(_, g)| g).ok_or_else(|| IoError::Syntax { line, message: format!("missing graph `{name}`") })
    };
    let key = |name: &str| -> Result<usize, IoError> {
        let Some(v) = header.get(name) else { return syntax(line, format!("header needs `{name}=`")) };
        number(line, v, name)
    };
    let mut part = |name: &str, n: usize| -> Result<Vec<usize>, IoError> {
        let Some((l, ids)) = parts.remove(name) else { return syntax(line, format!("missing `part {name}`")) };
        ids.iter().map(|x| vertex(l, x, n)).collect()
    };
    let allowed: &[&str] = match problem {
        Problem::Lsh | Problem::Lsi => &["mode"],
        Problem::CliqueContraction | Problem::Structured => &["budget"],
        Problem::Hadwiger => &["target"],
        Problem::FContraction => &["budget", "class"],
        Problem::ThreeColoring | Problem::CrossMatching => &[],
    };
    if let Some(k) = header.keys().find(|k| !allowed.contains(&k.as_str())) {
        return syntax(line, format!("header key `{k}` does not apply to {problem}"));
    }

    let inst = match problem {
        Problem::ThreeColoring => Instance::ThreeColoring(take_graph(&mut graphs, "g")?),
        Problem::Lsh | Problem::Lsi => {
            let mode = match header.get("mode").map(String::as_str) {
                Some("hom") => EmbeddingMode::Homomorphism,
                Some("iso") => EmbeddingMode::Isomorphism,
                Some(m) => return syntax(line, format!("unknown mode `{m}`")),
                None => return syntax(line, "header needs `mode=`"),
            };
            let expected = if problem == Problem::Lsh { EmbeddingMode::Homomorphism } else { EmbeddingMode::Isomorphism };
            if mode != expected {
                return syntax(line, format!("{problem} needs mode={}", expected.name()));
            }
            let g = take_graph(&mut graphs, "g")?;
            let h = take_graph(&mut graphs, "h")?;
            let mut coloring = |name: &str| -> Result<ProperColoring, IoError> {
                let Some((_, k, colors)) = colorings.remove(name) else {
                    return syntax(line, format!("missing coloring of `{name}`"));
                };
                Ok(ProperColoring::new(colors, k)?)
            };
            let c_g = coloring("g")?;
            let c_h = coloring("h")?;
            let Some(lists) = lists.take() else { return syntax(line, "missing `lists` section") };
            Instance::List(ListInstance::new(g, h, c_g, c_h, lists, mode)?)
        }
        Problem::CrossMatching => {
            let l = take_graph(&mut graphs, "g")?;
            let n = l.vertex_count();
            let a = part("A", n)?;
            let b = part("B", n)?;
            Instance::CrossMatching(CrossMatchingInstance::new(l, a, b)?)
        }
        Problem::CliqueContraction => Instance::CliqueContraction { t: key("budget")?, g: take_graph(&mut graphs, "g")? },
        Problem::Structured => {
            let g = take_graph(&mut graphs, "g")?;
            let n = g.vertex_count();
            let ps = [part("A", n)?, part("B", n)?, part("C", n)?, part("D", n)?, part("N", n)?];
            Instance::Structured(StructuredInstance::new(g, ps, key("budget")?)?)
        }
        Problem::Hadwiger => Instance::Hadwiger { h: key("target")?, g: take_graph(&mut graphs, "g")? },
        Problem::FContraction => {
            let Some(class) = header.get("class") else { return syntax(line, "header needs `class=`") };
            let class: ClassId = class.parse().or_else(|e: crate::classes::UnknownClass| syntax(line, e.to_string()))?;
            Instance::FContraction(FContractionInstance::new(take_graph(&mut graphs, "g")?, key("budget")?, class))
        }
    };
    if let Some((name, (l, _))) = graphs.into_iter().next() {
        return syntax(l, format!("graph `{name}` is not used by {problem}"));
    }
    if let Some((name, (l, _, _))) = colorings.into_iter().next() {
        return syntax(l, format!("coloring of `{name}` is not used by {problem}"));
    }
    if let Some((name, (l, _))) = parts.into_iter().next() {
        return syntax(l, format!("part `{name}` is not used by {problem}"));
    }
    if lists.is_some() {
        return syntax(line, format!("lists are not used by {problem}"));
    }
    Ok(inst)
}
