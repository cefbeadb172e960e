//! Clique-rooted distance layering.
//!
//! For a maximum clique `K = {v_1, ..., v_w}`, `W(i)` holds the vertices
//! whose only neighbor in `K` is `v_i`, and `N_i` the vertices at distance
//! exactly `i` from `K`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::oracle;
use crate::recognition::{find_bull, find_diamond, find_triangle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayeringError {
    #[error("graph is disconnected; layer each component separately")]
    Disconnected,
    #[error("the root set {0:?} is not a clique")]
    NotAClique(Vec<usize>),
    #[error("root clique has {size} vertices; layering needs at least 3")]
    CliqueTooSmall { size: usize },
    #[error("root clique has {size} vertices but the clique number is {omega}")]
    NotMaximum { size: usize, omega: usize },
    #[error("graph contains an induced {pattern}: {witness:?}")]
    Forbidden { pattern: &'static str, witness: Vec<usize> },
    #[error("structural fact failed: {claim} (witness {witness:?})")]
    Structure { claim: String, witness: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LayeringCase {
    /// At least three `W` parts nonempty: the graph sits inside `K_w x K_2`.
    Prism,
    /// `N_1` is empty, so a connected graph is just `K`.
    EmptyN1,
    /// `N_1 = W(i) u W(j)`, both nonempty (1-based indices).
    TwoPart { i: usize, j: usize },
    /// `N_1 = W(i)`.
    SinglePart { i: usize },
}

impl LayeringCase {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Prism => "prism",
            Self::EmptyN1 => "empty_n1",
            Self::TwoPart { .. } => "two_part",
            Self::SinglePart { .. } => "single_part",
        }
    }

    /// Both prism-like cases are colored with `w` colors directly.
    pub fn is_prism_like(self) -> bool {
        matches!(self, Self::Prism | Self::EmptyN1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueLayering {
    /// `v_1, ..., v_w`.
    pub clique: Vec<usize>,
    /// `w[i - 1] = W(i)`.
    pub w: Vec<VertexSet>,
    /// `layers[i - 1] = N_i`.
    pub layers: Vec<VertexSet>,
    /// Distance to `K`; `None` for vertices in other components.
    pub dist: Vec<Option<usize>>,
    /// `N_1` vertices with more than one neighbor in `K`. Always empty for a
    /// layering built by [`clique_layering`].
    pub stray: VertexSet,
    pub case: LayeringCase,
}

#[derive(Debug, Clone, Serialize)]
pub struct LayeringSummary {
    pub clique: Vec<usize>,
    pub w: Vec<Vec<usize>>,
    pub layer_sizes: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    pub case: LayeringCase,
}

impl CliqueLayering {
    /// Builds the layering for the clique in the given order with no checks.
    pub fn raw(g: &Graph, clique: &[usize]) -> Self {
        let kset = g.set_of(clique.iter().copied());
        let dist = if kset.is_empty() {
            vec![None; g.n()]
        } else {
            g.bfs_layers(&kset).expect("clique is nonempty")
        };
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut layers = vec![g.empty_set(); depth];
        for (v, d) in dist.iter().enumerate() {
            if let Some(d @ 1..) = *d {
                layers[d - 1].insert(v);
            }
        }
        let mut w = vec![g.empty_set(); clique.len()];
        let mut stray = g.empty_set();
        if let Some(n1) = layers.first() {
            for x in n1 {
                let hits = g.neighbors(x).intersection(&kset);
                if hits.len() == 1 {
                    let v = hits.first().expect("one neighbor");
                    let idx = clique.iter().position(|&c| c == v).expect("neighbor lies in K");
                    w[idx].insert(x);
                } else {
                    stray.insert(x);
                }
            }
        }
        let case = case_of(&w, layers.first());
        Self {
            clique: clique.to_vec(),
            w,
            layers,
            dist,
            stray,
            case,
        }
    }

    pub fn omega(&self) -> usize {
        self.clique.len()
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// `N_i` for `i >= 1`, if nonempty.
    pub fn layer(&self, i: usize) -> Option<&VertexSet> {
        i.checked_sub(1).and_then(|j| self.layers.get(j))
    }

    /// `W(i)`, 1-based.
    pub fn part(&self, i: usize) -> &VertexSet {
        &self.w[i - 1]
    }

    pub fn clique_set(&self, g: &Graph) -> VertexSet {
        g.set_of(self.clique.iter().copied())
    }

    /// Components of `G[N_i]`, ordered by smallest vertex.
    pub fn layer_components(&self, g: &Graph, i: usize) -> Vec<VertexSet> {
        self.layer(i).map(|l| g.components_within(l)).unwrap_or_default()
    }

    /// Everything at distance below `i`, including `K`.
    pub fn below(&self, g: &Graph, i: usize) -> VertexSet {
        let mut s = g.empty_set();
        for (v, d) in self.dist.iter().enumerate() {
            if matches!(d, Some(d) if *d < i) {
                s.insert(v);
            }
        }
        s
    }

    pub fn summary(&self) -> LayeringSummary {
        LayeringSummary {
            clique: self.clique.clone(),
            w: self.w.iter().map(VertexSet::to_vec).collect(),
            layer_sizes: self.layers.iter().map(VertexSet::len).collect(),
            layers: self.layers.iter().map(VertexSet::to_vec).collect(),
            case: self.case,
        }
    }
}

fn case_of(w: &[VertexSet], n1: Option<&VertexSet>) -> LayeringCase {
    let nonempty: Vec<usize> = (0..w.len()).filter(|&i| !w[i].is_empty()).map(|i| i + 1).collect();
    match nonempty.as_slice() {
        [] if n1.is_none_or(VertexSet::is_empty) => LayeringCase::EmptyN1,
        [] => LayeringCase::SinglePart { i: 1 },
        [i] => LayeringCase::SinglePart { i: *i },
        [i, j] => LayeringCase::TwoPart { i: *i, j: *j },
        _ => LayeringCase::Prism,
    }
}

/// Checks the preconditions, orders `K` so the nonempty `W` parts come
/// first, and settles the case split. In the prism case the forced facts
/// (singleton parts, `N_1 u N_2` a clique, `N_3` empty) are asserted.
pub fn clique_layering(g: &Graph, k: &VertexSet) -> Result<CliqueLayering, LayeringError> {
    if !g.is_connected() {
        return Err(LayeringError::Disconnected);
    }
    if !g.is_clique(k) {
        return Err(LayeringError::NotAClique(k.to_vec()));
    }
    if k.len() < 3 {
        return Err(LayeringError::CliqueTooSmall { size: k.len() });
    }
    let omega = oracle::clique_number(g);
    if k.len() != omega {
        return Err(LayeringError::NotMaximum { size: k.len(), omega });
    }
    if let Some(witness) = find_bull(g) {
        return Err(forbidden("bull", witness));
    }
    if let Some(witness) = find_diamond(g) {
        return Err(forbidden("diamond", witness));
    }

    let first = CliqueLayering::raw(g, &k.to_vec());
    if let Some(x) = first.stray.first() {
        return Err(structure("an N_1 vertex has two neighbors in K", vec![x]));
    }
    let mut order: Vec<usize> = (0..first.clique.len()).collect();
    order.sort_by_key(|&i| (first.w[i].is_empty(), i));
    let clique: Vec<usize> = order.iter().map(|&i| first.clique[i]).collect();
    let layering = CliqueLayering::raw(g, &clique);

    if layering.case == LayeringCase::Prism {
        for (i, part) in layering.w.iter().enumerate() {
            if part.len() > 1 {
                let mut wit = part.to_vec();
                wit.push(layering.clique[i]);
                return Err(structure("prism case: a W part has two vertices", wit));
            }
        }
        let mut top = layering.layer(1).cloned().unwrap_or_else(|| g.empty_set());
        if let Some(n2) = layering.layer(2) {
            top.union_with(n2);
        }
        if !g.is_clique(&top) {
            return Err(structure("prism case: N_1 u N_2 is not a clique", top.to_vec()));
        }
        if let Some(n3) = layering.layer(3) {
            return Err(structure("prism case: N_3 is nonempty", n3.to_vec()));
        }
    }
    Ok(layering)
}

fn forbidden(pattern: &'static str, mut witness: Vec<usize>) -> LayeringError {
    witness.sort_unstable();
    LayeringError::Forbidden { pattern, witness }
}

fn structure(claim: &str, witness: Vec<usize>) -> LayeringError {
    LayeringError::Structure {
        claim: claim.to_string(),
        witness,
    }
}

// ---------------------------------------------------------------------------
// structural verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl ClauseResult {
    fn ok(clause: &'static str) -> Self {
        Self {
            clause,
            holds: true,
            detail: None,
            witness: None,
        }
    }

    fn fail(clause: &'static str, detail: impl Into<String>, witness: Vec<usize>) -> Self {
        Self {
            clause,
            holds: false,
            detail: Some(detail.into()),
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma31Verdict {
    pub clauses: Vec<ClauseResult>,
    /// When a clause fails, the bull or diamond that explains it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<(String, Vec<usize>)>,
}

impl Lemma31Verdict {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.clause == name)
    }
}

/// True when `s` contains three pairwise adjacent vertices.
pub fn has_triangle_within(g: &Graph, s: &VertexSet) -> bool {
    triangle_within(g, s).is_some()
}

fn triangle_within(g: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    let (h, map) = g.induced_subgraph(s);
    find_triangle(&h).map(|t| t.iter().map(|&v| map[v]).collect())
}

/// Checks the three structural clauses on a layering:
/// (i) `N_1` splits into the `W` parts as the case demands;
/// (ii) every component of `G[N_i]`, `i >= 2`, is a clique or triangle-free;
/// (iii) components with a triangle have no neighbor in `N_{i+1}`.
pub fn verify_lemma31(g: &Graph, l: &CliqueLayering) -> Lemma31Verdict {
    let clauses = vec![clause_i(g, l), clause_ii(g, l), clause_iii(g, l)];
    let forbidden = if clauses.iter().all(|c| c.holds) {
        None
    } else {
        find_bull(g)
            .map(|w| ("bull".to_string(), sorted(w)))
            .or_else(|| find_diamond(g).map(|w| ("diamond".to_string(), sorted(w))))
    };
    Lemma31Verdict { clauses, forbidden }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn clause_i(g: &Graph, l: &CliqueLayering) -> ClauseResult {
    const C: &str = "i";
    if let Some(x) = l.stray.first() {
        let mut wit = vec![x];
        wit.extend(l.clique.iter().copied().filter(|&v| g.has_edge(v, x)));
        return ClauseResult::fail(C, "N_1 vertex with several neighbors in K", wit);
    }
    let empty = g.empty_set();
    let n1 = l.layer(1).unwrap_or(&empty);
    match l.case {
        LayeringCase::EmptyN1 => {
            if !n1.is_empty() {
                return ClauseResult::fail(C, "N_1 expected empty", n1.to_vec());
            }
        }
        LayeringCase::Prism => {
            if let Some(p) = l.w.iter().find(|p| p.len() > 1) {
                return ClauseResult::fail(C, "prism case with a W part of size > 1", p.to_vec());
            }
            let mut top = n1.clone();
            if let Some(n2) = l.layer(2) {
                top.union_with(n2);
            }
            if !g.is_clique(&top) {
                return ClauseResult::fail(C, "prism case with N_1 u N_2 not a clique", top.to_vec());
            }
            if let Some(n3) = l.layer(3) {
                return ClauseResult::fail(C, "prism case with N_3 nonempty", n3.to_vec());
            }
        }
        LayeringCase::SinglePart { i } => {
            for comp in g.components_within(n1) {
                if !g.is_clique(&comp) {
                    let wit = non_edge_in(g, &comp);
                    return ClauseResult::fail(C, format!("G[W({i})] has a non-clique component"), wit);
                }
            }
        }
        LayeringCase::TwoPart { i, j } => {
            let (a, b) = (l.part(i), l.part(j));
            for part in [a, b] {
                if !g.is_independent(part) {
                    let wit = part
                        .iter()
                        .find_map(|u| g.neighbors_in(u, part).first().map(|v| vec![u, v]));
                    return ClauseResult::fail(C, "a W part is not independent", wit.unwrap_or_default());
                }
            }
            for u in a {
                if let Some(v) = b.difference(g.neighbors(u)).first() {
                    return ClauseResult::fail(C, "W parts are not completely joined", vec![u, v]);
                }
            }
        }
    }
    ClauseResult::ok(C)
}

fn non_edge_in(g: &Graph, s: &VertexSet) -> Vec<usize> {
    for u in s {
        let mut rest = s.difference(g.neighbors(u));
        rest.remove(u);
        if let Some(v) = rest.first() {
            return vec![u, v];
        }
    }
    Vec::new()
}

fn clause_ii(g: &Graph, l: &CliqueLayering) -> ClauseResult {
    for i in 2..=l.depth() {
        for comp in l.layer_components(g, i) {
            if g.is_clique(&comp) {
                continue;
            }
            if let Some(t) = triangle_within(g, &comp) {
                return ClauseResult::fail(
                    "ii",
                    format!("component of N_{i} is neither a clique nor triangle-free"),
                    t,
                );
            }
        }
    }
    ClauseResult::ok("ii")
}

fn clause_iii(g: &Graph, l: &CliqueLayering) -> ClauseResult {
    for i in 2..=l.depth() {
        let Some(next) = l.layer(i + 1) else { break };
        for comp in l.layer_components(g, i) {
            if !has_triangle_within(g, &comp) {
                continue;
            }
            let reach = g.neighborhood_of_set(&comp).intersection(next);
            if let Some(y) = reach.first() {
                let x = comp
                    .iter()
                    .find(|&x| g.has_edge(x, y))
                    .expect("y has a neighbor in the component");
                return ClauseResult::fail(
                    "iii",
                    format!("triangle component of N_{i} reaches N_{}", i + 1),
                    vec![x, y],
                );
            }
        }
    }
    ClauseResult::ok("iii")
}
