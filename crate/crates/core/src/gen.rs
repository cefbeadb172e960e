//! Seeded samplers for classes defined by forbidden induced subgraphs, and
//! hand-built instances that drive specific branches of the colorers.
//!
//! Random numbers come from splitmix64:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! out = z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic; a uniform real is `(out >> 11) * 2^-53`. One
//! generator seeded with `spec.seed` is shared by all attempts. An attempt
//! draws one real per pair `u < v` in lexicographic order and keeps the
//! edge when the real is below `p`, then adds the planted clique, then
//! repairs: while some forbidden pattern occurs, take the first pattern of
//! the family that does, and delete the lexicographically smallest edge
//! inside its witness. Samples are biased, not uniform over the class.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::LayeringCase;
use crate::graph::Graph;
use crate::recognition::{count_induced, Pattern};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid sampler spec: {0}")]
    BadSpec(String),
    #[error("no acceptable graph after {attempts} attempts for {spec}")]
    Exhausted { spec: String, attempts: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplerSpec {
    pub n: usize,
    pub p: f64,
    pub family: Vec<Pattern>,
    pub seed: u64,
    pub max_attempts: usize,
    /// Keep one component of at least `n / 2` vertices; `n` is then an
    /// upper bound on the size.
    pub connect: bool,
    /// Cliques forced before repair, on consecutive blocks of vertices
    /// counted back from the last vertex: the first size takes the last
    /// vertices, the next the block before it, and so on.
    pub plant_cliques: Vec<usize>,
}

impl SamplerSpec {
    pub fn new(n: usize, p: f64, family: &[Pattern], seed: u64) -> Self {
        Self {
            n,
            p,
            family: family.to_vec(),
            seed,
            max_attempts: 64,
            connect: false,
            plant_cliques: Vec::new(),
        }
    }

    pub fn connected(mut self) -> Self {
        self.connect = true;
        self
    }

    pub fn with_clique(self, size: usize) -> Self {
        self.with_cliques(&[size])
    }

    pub fn with_cliques(mut self, sizes: &[usize]) -> Self {
        self.plant_cliques = sizes.iter().copied().filter(|&s| s > 0).collect();
        self
    }

    pub fn with_attempts(mut self, attempts: usize) -> Self {
        self.max_attempts = attempts;
        self
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::BadSpec("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(GenError::BadSpec(format!("p = {} is outside [0, 1]", self.p)));
        }
        let planted: usize = self.plant_cliques.iter().sum();
        if planted > self.n {
            return Err(GenError::BadSpec(format!(
                "cannot plant {planted} clique vertices in {}",
                self.n
            )));
        }
        if let Some(p) = self.family.iter().find(|p| matches!(p, Pattern::Path(t) if *t < 2)) {
            return Err(GenError::BadSpec(format!("pattern {p} cannot be forbidden")));
        }
        if self.max_attempts == 0 {
            return Err(GenError::BadSpec("max_attempts must be at least 1".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SamplerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family: Vec<String> = self.family.iter().map(|p| p.to_string()).collect();
        let mut cliques: Vec<String> = self.plant_cliques.iter().map(|c| c.to_string()).collect();
        if cliques.is_empty() {
            cliques.push("0".into());
        }
        write!(
            f,
            "n={} p={} forbid={} seed={} connect={} cliques={}",
            self.n,
            self.p,
            family.join(","),
            self.seed,
            self.connect,
            cliques.join("+")
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SampleTrace {
    pub attempts: usize,
    pub drawn_edges: usize,
    pub deleted_edges: usize,
}

pub fn sample(spec: &SamplerSpec) -> Result<Graph, GenError> {
    sample_traced(spec).map(|(g, _)| g)
}

pub fn sample_traced(spec: &SamplerSpec) -> Result<(Graph, SampleTrace), GenError> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let mut trace = SampleTrace::default();
    for attempt in 1..=spec.max_attempts {
        trace.attempts = attempt;
        let drawn = draw(spec, &mut rng);
        trace.drawn_edges = drawn.m();
        let g = repair(&drawn, &spec.family);
        trace.deleted_edges = drawn.m() - g.m();
        if spec.family.iter().any(|p| p.find(&g).is_some()) {
            unreachable!("repair leaves no forbidden pattern");
        }
        if !spec.connect {
            return Ok((g, trace));
        }
        let Some(keep) = kept_component(&g, !spec.plant_cliques.is_empty()) else {
            continue;
        };
        return Ok((g.induced_subgraph(&keep).0, trace));
    }
    Err(GenError::Exhausted {
        spec: spec.to_string(),
        attempts: spec.max_attempts,
    })
}

/// With `connect`, the sample is one component of the repaired graph: the
/// one holding the last vertex when cliques are planted, else the largest (smallest vertex on
/// ties). Components with fewer than half the vertices are rejected.
fn kept_component(g: &Graph, planted: bool) -> Option<crate::graph::VertexSet> {
    let comps = g.connected_components();
    let chosen = if planted {
        comps.into_iter().find(|c| c.contains(g.n() - 1))
    } else {
        comps.into_iter().rev().max_by_key(|c| c.len())
    }?;
    (2 * chosen.len() >= g.n()).then_some(chosen)
}

fn draw(spec: &SamplerSpec, rng: &mut SplitMix64) -> Graph {
    let n = spec.n;
    let mut block = vec![usize::MAX; n];
    let mut end = n;
    for (b, &size) in spec.plant_cliques.iter().enumerate() {
        block[end - size..end].fill(b);
        end -= size;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let keep = rng.next_f64() < spec.p;
            if keep || (block[u] != usize::MAX && block[u] == block[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are in range")
}

/// The repair step alone: deletes edges until no pattern of `family`
/// occurs.
pub fn repair(g: &Graph, family: &[Pattern]) -> Graph {
    repair_rounds(g, family, |_| {})
}

/// Like [`repair`], reporting the graph before every deletion and the final
/// graph.
pub fn repair_rounds(g: &Graph, family: &[Pattern], mut observe: impl FnMut(&Graph)) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut current = g.clone();
    loop {
        observe(&current);
        let Some(witness) = family.iter().find_map(|p| p.find(&current)) else {
            return current;
        };
        let victim = smallest_edge_within(&current, &witness).expect("every pattern has an edge");
        edges.retain(|&e| e != victim);
        current = Graph::new(g.n(), &edges).expect("subset of valid edges");
    }
}

fn smallest_edge_within(g: &Graph, witness: &[usize]) -> Option<(usize, usize)> {
    let mut best = None;
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            let e = (a.min(b), a.max(b));
            if g.has_edge(e.0, e.1) && best.is_none_or(|cur| e < cur) {
                best = Some(e);
            }
        }
    }
    best
}

/// Total number of induced copies of the patterns in `family`.
pub fn forbidden_count(g: &Graph, family: &[Pattern]) -> usize {
    family.iter().map(|p| count_induced(g, &p.graph())).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PlantedKind {
    Lemma31 { case: PlantedCase },
    ExtensionBranch,
    P6Case1,
    P6Case2,
    P7Layers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlantedCase {
    Prism,
    EmptyN1,
    TwoPart,
    SinglePart,
}

impl PlantedKind {
    pub const ALL: [PlantedKind; 8] = [
        Self::Lemma31 {
            case: PlantedCase::Prism,
        },
        Self::Lemma31 {
            case: PlantedCase::EmptyN1,
        },
        Self::Lemma31 {
            case: PlantedCase::TwoPart,
        },
        Self::Lemma31 {
            case: PlantedCase::SinglePart,
        },
        Self::ExtensionBranch,
        Self::P6Case1,
        Self::P6Case2,
        Self::P7Layers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lemma31 {
                case: PlantedCase::Prism,
            } => "layering_prism",
            Self::Lemma31 {
                case: PlantedCase::EmptyN1,
            } => "layering_empty_n1",
            Self::Lemma31 {
                case: PlantedCase::TwoPart,
            } => "layering_two_part",
            Self::Lemma31 {
                case: PlantedCase::SinglePart,
            } => "layering_single_part",
            Self::ExtensionBranch => "extension_branch",
            Self::P6Case1 => "p6_case1",
            Self::P6Case2 => "p6_case2",
            Self::P7Layers => "p7_layers",
        }
    }
}

/// A hand-built graph with the layering and palette its branch produces.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedInstance {
    pub kind: PlantedKind,
    pub graph: Graph,
    /// The maximum clique to layer from.
    pub clique: Vec<usize>,
    pub case: LayeringCase,
    /// Colors used by the colorer the instance targets.
    pub palette: usize,
    /// For the extension branch: a coloring of everything below the target
    /// component, and the component itself.
    pub partial: Option<Vec<Option<usize>>>,
    pub target: Option<Vec<usize>>,
}

pub fn planted_instance(kind: PlantedKind) -> PlantedInstance {
    let build = |n: usize, edges: &[(usize, usize)]| Graph::new(n, edges).expect("planted edges are valid");
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let plain = |graph: Graph, clique: Vec<usize>, case: LayeringCase, palette: usize| PlantedInstance {
        kind,
        graph,
        clique,
        case,
        palette,
        partial: None,
        target: None,
    };
    match kind {
        PlantedKind::Lemma31 {
            case: PlantedCase::Prism,
        } => {
            let g = crate::graph::NamedGraph::Prism(4).build().expect("valid");
            plain(g, vec![0, 2, 4, 6], LayeringCase::Prism, 4)
        }
        PlantedKind::Lemma31 {
            case: PlantedCase::EmptyN1,
        } => plain(build(4, &k4), vec![0, 1, 2, 3], LayeringCase::EmptyN1, 4),
        PlantedKind::Lemma31 {
            case: PlantedCase::TwoPart,
        } => {
            let g = build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4)]);
            plain(g, vec![0, 1, 2], LayeringCase::TwoPart { i: 1, j: 2 }, 3)
        }
        PlantedKind::Lemma31 {
            case: PlantedCase::SinglePart,
        } => {
            let mut e = k4.to_vec();
            e.push((0, 4));
            plain(build(5, &e), vec![0, 1, 2, 3], LayeringCase::SinglePart { i: 1 }, 4)
        }
        PlantedKind::ExtensionBranch => {
            // x = 4 and y = 5 hang from v_1 = 0; the triangle {6, 7, 8} sits
            // on x, and 8 also sees y.
            let mut e = k4.to_vec();
            e.extend([(0, 4), (0, 5), (4, 6), (4, 7), (4, 8), (6, 7), (6, 8), (7, 8), (5, 8)]);
            let partial = vec![Some(1), Some(2), Some(3), Some(4), Some(2), Some(4), None, None, None];
            PlantedInstance {
                partial: Some(partial),
                target: Some(vec![6, 7, 8]),
                ..plain(build(9, &e), vec![0, 1, 2, 3], LayeringCase::SinglePart { i: 1 }, 4)
            }
        }
        PlantedKind::P6Case1 => {
            // a = 3 below v_1; N_2 = {4, 8}; N_3 holds the edge {5, 6} on 4
            // and the single vertex 7 on 8.
            let g = build(
                9,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (0, 3),
                    (3, 4),
                    (3, 8),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                    (7, 8),
                ],
            );
            plain(g, vec![0, 1, 2], LayeringCase::SinglePart { i: 1 }, 3)
        }
        PlantedKind::P6Case2 => {
            // W(1) = {3}, W(2) = {4}, adjacent; 5 sees both and has degree 2.
            let g = build(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4), (3, 5), (4, 5)]);
            plain(g, vec![0, 1, 2], LayeringCase::TwoPart { i: 1, j: 2 }, 3)
        }
        PlantedKind::P7Layers => {
            // One vertex per layer down to N_3 = {5, 6}, and the edge {7, 8}
            // in N_4 closing a triangle with 5.
            let g = build(
                9,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (0, 3),
                    (3, 4),
                    (4, 5),
                    (4, 6),
                    (5, 7),
                    (5, 8),
                    (7, 8),
                ],
            );
            plain(g, vec![0, 1, 2], LayeringCase::SinglePart { i: 1 }, 4)
        }
    }
}


#[cfg(test)]
mod planted_tests {
    use super::*;
    use crate::coloring::{
        color_bull_diamond, color_p6, color_p7, extend_into_clique_component, ExtensionRoute, TriangleFreeColorer,
    };
    use crate::decomposition::clique_layering;
    use crate::oracle::{self, Coloring};

    #[test]
    fn planted_instances_hit_their_branch() {
        for kind in PlantedKind::ALL {
            let inst = planted_instance(kind);
            let g = &inst.graph;
            assert!(
                Pattern::Bull.find(g).is_none() && Pattern::Diamond.find(g).is_none(),
                "{}",
                kind.name()
            );
            assert_eq!(oracle::clique_number(g), inst.clique.len(), "{}", kind.name());
            let l = clique_layering(g, &g.set_of(inst.clique.iter().copied())).unwrap();
            assert_eq!(l.case, inst.case, "{}", kind.name());
            let palette = match kind {
                PlantedKind::ExtensionBranch => {
                    let partial = Coloring {
                        palette: 4,
                        certificate: None,
                        assignment: inst.partial.clone().unwrap(),
                    };
                    let c = g.set_of(inst.target.clone().unwrap());
                    let (out, route) = extend_into_clique_component(&partial, &c, &l, g).unwrap();
                    assert_eq!(route, ExtensionRoute::ProofRecolor);
                    assert!(oracle::verify_coloring(g, &out).proper);
                    out.max_color()
                }
                PlantedKind::P6Case1 | PlantedKind::P6Case2 => color_p6(g).unwrap().0.palette,
                PlantedKind::P7Layers => color_p7(g).unwrap().0.palette,
                PlantedKind::Lemma31 { .. } => color_bull_diamond(g, &TriangleFreeColorer::exact()).unwrap().0.palette,
            };
            assert_eq!(palette, inst.palette, "{}", kind.name());
        }
    }
}
