//! Forbidden induced subgraphs and class membership.
//!
//! Every witness returned by a `find_*` detector is a sorted vertex tuple,
//! except for paths and cycles, which come back in traversal order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, NamedGraph, VertexSet};
use crate::oracle;

pub const DEFAULT_PERFECT_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph with {n} vertices exceeds the perfection-check limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("unknown pattern `{0}` (expected bull, diamond, triangle, paw or p<t>)")]
    UnknownPattern(String),
}

/// The patterns the samplers and class checks understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Bull,
    Diamond,
    Triangle,
    Paw,
    Path(usize),
}

impl Pattern {
    pub fn graph(self) -> Graph {
        let named = match self {
            Self::Bull => NamedGraph::Bull,
            Self::Diamond => NamedGraph::Diamond,
            Self::Triangle => NamedGraph::Complete(3),
            Self::Paw => NamedGraph::Paw,
            Self::Path(t) => NamedGraph::Path(t.max(1)),
        };
        named.build().expect("pattern parameters are valid")
    }

    /// Runs the specialized detector; the witness is sorted.
    pub fn find(self, g: &Graph) -> Option<Vec<usize>> {
        let mut w = match self {
            Self::Bull => find_bull(g),
            Self::Diamond => find_diamond(g),
            Self::Triangle => find_triangle(g).map(|t| t.to_vec()),
            Self::Paw => find_paw(g),
            Self::Path(t) => find_induced_path(g, t),
        }?;
        w.sort_unstable();
        Some(w)
    }

    pub fn name(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bull => f.write_str("bull"),
            Self::Diamond => f.write_str("diamond"),
            Self::Triangle => f.write_str("triangle"),
            Self::Paw => f.write_str("paw"),
            Self::Path(t) => write!(f, "p{t}"),
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Pattern {
    type Err = RecognitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let parsed = match lower.as_str() {
            "bull" => Some(Self::Bull),
            "diamond" => Some(Self::Diamond),
            "triangle" | "k3" => Some(Self::Triangle),
            "paw" => Some(Self::Paw),
            other => other
                .strip_prefix('p')
                .and_then(|rest| {
                    rest.strip_prefix("ath(")
                        .and_then(|r| r.strip_suffix(')'))
                        .or(Some(rest))
                })
                .and_then(|num| num.parse().ok())
                .filter(|&t: &usize| t >= 1)
                .map(Self::Path),
        };
        parsed.ok_or_else(|| RecognitionError::UnknownPattern(s.to_string()))
    }
}

// ---------------------------------------------------------------------------
// generic induced-subgraph search
// ---------------------------------------------------------------------------

/// An induced embedding of `pattern` into `g`: `emb[p]` is the image of
/// pattern vertex `p`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let order = search_order(pattern);
    let mut image = vec![usize::MAX; k];
    let mut used = g.empty_set();
    if place(g, pattern, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Pattern vertices in BFS order per component, so each placed vertex is
/// constrained by an already-placed neighbor where possible.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut seen = vec![false; pattern.n()];
    let mut roots: Vec<usize> = (0..pattern.n()).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in pattern.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

fn place(g: &Graph, pattern: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: &mut VertexSet) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = used.complement();
    for &q in &order[..depth] {
        let gq = g.neighbors(image[q]);
        if pattern.has_edge(p, q) {
            cand.intersect_with(gq);
        } else {
            cand.difference_with(gq);
        }
    }
    let need = pattern.degree(p);
    for v in cand.iter() {
        if g.degree(v) < need {
            continue;
        }
        image[p] = v;
        used.insert(v);
        if place(g, pattern, order, depth + 1, image, used) {
            return true;
        }
        used.remove(v);
    }
    image[p] = usize::MAX;
    false
}

/// Number of vertex subsets inducing a copy of `pattern`.
pub fn count_induced(g: &Graph, pattern: &Graph) -> usize {
    let k = pattern.n();
    if k > g.n() || k == 0 {
        return usize::from(k == 0);
    }
    let order = search_order(pattern);
    let mut image = vec![usize::MAX; k];
    let mut used = g.empty_set();
    let mut found = std::collections::BTreeSet::new();
    collect_all(g, pattern, &order, 0, &mut image, &mut used, &mut found);
    found.len()
}

fn collect_all(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
    found: &mut std::collections::BTreeSet<Vec<usize>>,
) {
    if depth == order.len() {
        let mut s = image.to_vec();
        s.sort_unstable();
        found.insert(s);
        return;
    }
    let p = order[depth];
    let mut cand = used.complement();
    for &q in &order[..depth] {
        let gq = g.neighbors(image[q]);
        if pattern.has_edge(p, q) {
            cand.intersect_with(gq);
        } else {
            cand.difference_with(gq);
        }
    }
    for v in cand.iter() {
        image[p] = v;
        used.insert(v);
        collect_all(g, pattern, order, depth + 1, image, used, found);
        used.remove(v);
    }
}

// ---------------------------------------------------------------------------
// specialized detectors
// ---------------------------------------------------------------------------

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.iter().find(|&w| w > v) {
            return Some([u, v, w]);
        }
    }
    None
}

/// All triangles `[a, b, c]` with `a < b < c`.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        out.extend(common.iter().filter(|&w| w > v).map(|w| [u, v, w]));
    }
    out
}

pub fn count_triangles(g: &Graph) -> usize {
    g.edges()
        .map(|(u, v)| {
            g.neighbors(u)
                .intersection(g.neighbors(v))
                .iter()
                .filter(|&w| w > v)
                .count()
        })
        .sum()
}

/// An edge whose endpoints share two non-adjacent neighbors.
pub fn find_diamond(g: &Graph) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        for a in common.iter() {
            let mut rest = common.difference(g.neighbors(a));
            rest.remove(a);
            if let Some(b) = rest.first() {
                return Some(vec![u, v, a, b]);
            }
        }
    }
    None
}

/// Neighbors of `x` adjacent to neither `y` nor `z`, excluding the triangle.
fn private_neighbors(g: &Graph, x: usize, y: usize, z: usize) -> VertexSet {
    let mut s = g.neighbors(x).difference(g.neighbors(y));
    s.difference_with(g.neighbors(z));
    s.remove(y);
    s.remove(z);
    s
}

pub fn find_paw(g: &Graph) -> Option<Vec<usize>> {
    for [a, b, c] in triangles(g) {
        for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
            if let Some(p) = private_neighbors(g, x, y, z).first() {
                return Some(vec![a, b, c, p]);
            }
        }
    }
    None
}

/// A triangle with pendants at two distinct corners, the pendants
/// non-adjacent.
pub fn find_bull(g: &Graph) -> Option<Vec<usize>> {
    for [a, b, c] in triangles(g) {
        let corners = [a, b, c];
        let private: Vec<VertexSet> = (0..3)
            .map(|i| private_neighbors(g, corners[i], corners[(i + 1) % 3], corners[(i + 2) % 3]))
            .collect();
        for i in 0..3 {
            for j in i + 1..3 {
                for p in private[i].iter() {
                    if let Some(q) = private[j].difference(g.neighbors(p)).first() {
                        return Some(vec![a, b, c, p, q]);
                    }
                }
            }
        }
    }
    None
}

/// An induced path on `t` vertices, in path order.
pub fn find_induced_path(g: &Graph, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return Some(Vec::new());
    }
    let mut path = Vec::with_capacity(t);
    for s in 0..g.n() {
        path.push(s);
        let blocked = g.empty_set();
        if extend_path(g, t, &mut path, blocked) {
            return Some(path);
        }
        path.pop();
    }
    None
}

/// `blocked` holds every vertex on or adjacent to the path minus its last
/// vertex; the next vertex must avoid it.
fn extend_path(g: &Graph, t: usize, path: &mut Vec<usize>, blocked: VertexSet) -> bool {
    if path.len() == t {
        return true;
    }
    let last = *path.last().expect("path is nonempty");
    let mut cand = g.neighbors(last).difference(&blocked);
    for &p in path.iter() {
        cand.remove(p);
    }
    let mut next_blocked = blocked;
    next_blocked.union_with(g.neighbors(last));
    next_blocked.insert(last);
    for v in cand.iter() {
        path.push(v);
        if extend_path(g, t, path, next_blocked.clone()) {
            return true;
        }
        path.pop();
    }
    false
}

/// Calls `visit` on every induced cycle with at least `min_len` vertices,
/// once per cycle: the cycle starts at its smallest vertex and its second
/// vertex is smaller than its last. Stops early when `visit` returns false.
pub fn for_each_induced_cycle(g: &Graph, min_len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if !cycle_dfs(g, min_len.max(3), &mut path, &mut visit) {
            return;
        }
    }
}

fn cycle_dfs(g: &Graph, min_len: usize, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let s = path[0];
    let last = *path.last().expect("path is nonempty");
    // new vertices must avoid neighbors of every path vertex except `last`
    // and, when closing, `s`
    let mut forbidden = g.empty_set();
    for &p in path.iter().take(path.len() - 1).skip(1) {
        forbidden.union_with(g.neighbors(p));
        forbidden.insert(p);
    }
    forbidden.insert(s);
    let mut cand = g.neighbors(last).difference(&forbidden);
    for p in 0..=s {
        cand.remove(p);
    }
    for w in cand.iter() {
        let go_on = if path.len() >= 2 && g.has_edge(w, s) {
            if path.len() + 1 < min_len || path[1] > w {
                continue;
            }
            path.push(w);
            let go_on = visit(path);
            path.pop();
            go_on
        } else {
            path.push(w);
            let go_on = cycle_dfs(g, min_len, path, visit);
            path.pop();
            go_on
        };
        if !go_on {
            return false;
        }
    }
    true
}

/// An induced odd cycle of length at least 5.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_cycle(g, 5, |c| {
        if c.len() % 2 == 1 {
            found = Some(c.to_vec());
            false
        } else {
            true
        }
    });
    found
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleKind {
    Hole,
    Antihole,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectVerdict {
    pub perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<HoleKind>,
    /// The odd cycle, in cycle order, in `G` (hole) or its complement
    /// (antihole).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

pub fn is_perfect(g: &Graph) -> Result<PerfectVerdict, RecognitionError> {
    is_perfect_with_limit(g, DEFAULT_PERFECT_LIMIT)
}

/// Exhaustive check for odd holes in `G` and in its complement.
pub fn is_perfect_with_limit(g: &Graph, limit: usize) -> Result<PerfectVerdict, RecognitionError> {
    if g.n() > limit {
        return Err(RecognitionError::SizeLimit { n: g.n(), limit });
    }
    if let Some(c) = find_odd_hole(g) {
        return Ok(PerfectVerdict {
            perfect: false,
            kind: Some(HoleKind::Hole),
            witness: Some(c),
        });
    }
    if let Some(c) = find_odd_hole(&g.complement()) {
        return Ok(PerfectVerdict {
            perfect: false,
            kind: Some(HoleKind::Antihole),
            witness: Some(c),
        });
    }
    Ok(PerfectVerdict {
        perfect: true,
        kind: None,
        witness: None,
    })
}

/// The parts of a complete multipartite graph (the complement's
/// components, each required to be a clique there), or `None`.
pub fn is_complete_multipartite(g: &Graph) -> Option<Vec<VertexSet>> {
    let parts = g.complement().connected_components();
    for (i, a) in parts.iter().enumerate() {
        if !g.is_independent(a) {
            return None;
        }
        for b in &parts[i + 1..] {
            if a.iter().any(|u| !b.is_subset(g.neighbors(u))) {
                return None;
            }
        }
    }
    Some(parts)
}

// ---------------------------------------------------------------------------
// class report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub bull_free: bool,
    pub diamond_free: bool,
    pub paw_free: bool,
    pub triangle_free: bool,
    pub triangle_count: usize,
    pub path_probe: usize,
    pub path_free: bool,
    pub omega: usize,
    /// Pattern name to sorted witness tuple, for every pattern found.
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

impl ClassReport {
    pub fn bull_diamond_free(&self) -> bool {
        self.bull_free && self.diamond_free
    }
}

pub fn classify(g: &Graph, path_probe: usize) -> Result<ClassReport, GraphError> {
    if path_probe < 2 {
        return Err(GraphError::BadParameter {
            name: "path_probe",
            reason: format!("needs t >= 2, got {path_probe}"),
        });
    }
    let mut witnesses = BTreeMap::new();
    let mut probe = |p: Pattern| {
        let w = p.find(g);
        let free = w.is_none();
        if let Some(w) = w {
            witnesses.insert(p.name(), w);
        }
        free
    };
    let bull_free = probe(Pattern::Bull);
    let diamond_free = probe(Pattern::Diamond);
    let paw_free = probe(Pattern::Paw);
    let triangle_free = probe(Pattern::Triangle);
    let path_free = probe(Pattern::Path(path_probe));
    Ok(ClassReport {
        n: g.n(),
        m: g.m(),
        bull_free,
        diamond_free,
        paw_free,
        triangle_free,
        triangle_count: count_triangles(g),
        path_probe,
        path_free,
        omega: oracle::clique_number(g),
        witnesses,
    })
}
