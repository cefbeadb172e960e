//! Exact ground truth: maximum clique, chromatic number, and coloring checks.
//!
//! Both exact searches are exponential in the worst case. The chromatic
//! search refuses components larger than a desk limit (default
//! [`DEFAULT_CHI_LIMIT`]).

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{BoundCertificate, Theorem};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CHI_LIMIT: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("component with {n} vertices exceeds the exact-search limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
}

/// A vertex coloring with colors `1..=palette`; `None` marks an uncolored
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub palette: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<BoundCertificate>,
    pub assignment: Vec<Option<usize>>,
}

impl Coloring {
    pub fn uncolored(n: usize, palette: usize) -> Self {
        Self {
            palette,
            certificate: None,
            assignment: vec![None; n],
        }
    }

    /// A total coloring from 1-based colors; the palette is the largest color.
    pub fn from_colors(colors: &[usize]) -> Self {
        Self {
            palette: colors.iter().copied().max().unwrap_or(0),
            certificate: None,
            assignment: colors.iter().map(|&c| Some(c)).collect(),
        }
    }

    pub fn with_certificate(mut self, cert: BoundCertificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    #[inline]
    pub fn color(&self, v: usize) -> Option<usize> {
        self.assignment.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, c: usize) {
        self.assignment[v] = Some(c);
    }

    pub fn clear(&mut self, v: usize) {
        self.assignment[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn max_color(&self) -> usize {
        self.assignment.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.assignment.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Colors used by the neighbors of `v`, as a bitmask indexed by color.
    pub fn neighbor_colors(&self, g: &Graph, v: usize) -> Vec<bool> {
        let mut used = vec![false; self.palette.max(self.max_color()) + 1];
        for u in g.neighbors(v) {
            if let Some(c) = self.color(u) {
                used[c] = true;
            }
        }
        used
    }

    /// Shrinks the declared palette to the largest color in use.
    pub fn tighten(&mut self) {
        self.palette = self.max_color();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MonochromaticEdge { u: usize, v: usize, color: usize },
    Uncolored { vertex: usize },
    OutOfPalette { vertex: usize, color: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringVerdict {
    pub proper: bool,
    pub violations: Vec<Violation>,
}

/// Lists every monochromatic edge, uncolored vertex and color outside
/// `1..=palette`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> ColoringVerdict {
    let mut violations = Vec::new();
    for v in 0..g.n() {
        match c.color(v) {
            None => violations.push(Violation::Uncolored { vertex: v }),
            Some(col) if col == 0 || col > c.palette => {
                violations.push(Violation::OutOfPalette { vertex: v, color: col })
            }
            Some(_) => {}
        }
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (c.color(u), c.color(v)) {
            if a == b {
                violations.push(Violation::MonochromaticEdge { u, v, color: a });
            }
        }
    }
    ColoringVerdict {
        proper: violations.is_empty(),
        violations,
    }
}

// ---------------------------------------------------------------------------
// maximum clique
// ---------------------------------------------------------------------------

/// A maximum clique, found by branch and bound with a greedy-coloring bound.
/// Deterministic for a given labeling.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = Vec::new();
    if g.n() > 0 {
        best.push(0);
        let mut current = Vec::new();
        expand(g, &mut current, g.vertices(), &mut best);
    }
    let mut out = g.empty_set();
    for v in best {
        out.insert(v);
    }
    out
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
    let (order, bound) = color_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + bound[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = cand.intersection(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// Greedy color classes over `cand`; `bound[i]` is the class number of
/// `order[i]`, an upper bound on the clique size within `order[..=i]`.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut left = cand.clone();
    let mut order = Vec::with_capacity(cand.len());
    let mut bound = Vec::with_capacity(cand.len());
    let mut k = 0;
    while !left.is_empty() {
        k += 1;
        let mut avail = left.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.neighbors(v));
            left.remove(v);
            order.push(v);
            bound.push(k);
        }
    }
    (order, bound)
}

// ---------------------------------------------------------------------------
// chromatic number
// ---------------------------------------------------------------------------

/// Smallest-last (degeneracy) order, reversed so the densest core comes first.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// DSATUR greedy coloring. Colors are 1-based; ties go to the higher degree,
/// then the smaller index.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 2]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (1..).find(|&c| !seen[v][c]).expect("some color is free");
        colors[v] = c;
        for u in g.neighbors(v) {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    colors
}

/// Exact chromatic number with an optimal coloring, using the default limit.
pub fn chromatic_number_exact(g: &Graph) -> Result<(usize, Coloring), OracleError> {
    chromatic_number_exact_with_limit(g, DEFAULT_CHI_LIMIT)
}

/// Exact chromatic number. Components are solved independently; the limit
/// applies to the largest component.
pub fn chromatic_number_exact_with_limit(g: &Graph, limit: usize) -> Result<(usize, Coloring), OracleError> {
    let comps = g.connected_components();
    if let Some(big) = comps.iter().map(VertexSet::len).max() {
        if big > limit {
            return Err(OracleError::SizeLimit { n: big, limit });
        }
    }
    let mut colors = vec![0usize; g.n()];
    for comp in &comps {
        let (h, map) = g.induced_subgraph(comp);
        for (i, c) in exact_connected(&h).into_iter().enumerate() {
            colors[map[i]] = c;
        }
    }
    let chi = colors.iter().copied().max().unwrap_or(0);
    let cert = BoundCertificate {
        theorem: Theorem::Exact,
        claimed_bound: chi,
        omega: clique_number(g),
        k_used: None,
    };
    Ok((chi, Coloring::from_colors(&colors).with_certificate(cert)))
}

fn exact_connected(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let clique = max_clique(g).to_vec();
    let upper = dsatur(g);
    let ub = upper.iter().copied().max().unwrap_or(0);
    if ub == clique.len() {
        return upper;
    }
    let order = degeneracy_order(g);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut s = Search {
        g,
        colors: vec![0; n],
        counts: vec![vec![0; ub + 2]; n],
        sat: vec![0; n],
        rank,
        lower: clique.len(),
        best: ub,
        best_colors: upper,
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i + 1);
    }
    s.dfs(clique.len(), clique.len());
    s.best_colors
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    rank: Vec<usize>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v) {
            self.counts[u][c] += 1;
            if self.counts[u][c] == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for u in self.g.neighbors(v) {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let n = self.colors.len();
        (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let free_deg = self.g.neighbors(v).iter().filter(|&u| self.colors[u] == 0).count();
                (self.sat[v], free_deg, std::cmp::Reverse(self.rank[v]))
            })
            .expect("called with an uncolored vertex left")
    }

    fn dfs(&mut self, colored: usize, max_used: usize) {
        if colored == self.colors.len() {
            if max_used < self.best {
                self.best = max_used;
                self.best_colors.clone_from(&self.colors);
            }
            return;
        }
        let v = self.pick();
        if self.sat[v] >= self.best - 1 {
            return;
        }
        let top = (max_used + 1).min(self.best - 1);
        for c in 1..=top {
            if self.counts[v][c] == 0 {
                self.assign(v, c);
                self.dfs(colored + 1, max_used.max(c));
                self.unassign(v);
                if self.best == self.lower {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(g: NamedGraph) -> Graph {
        g.build().unwrap()
    }

    /// Subset enumeration, independent of the branch and bound.
    fn brute_omega(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn cliques_of_named_graphs() {
        let d = named(NamedGraph::Diamond);
        let k = max_clique(&d);
        assert_eq!(k.len(), 3);
        assert!(d.is_clique(&k));
        assert_eq!(clique_number(&named(NamedGraph::Grotzsch)), 2);
        let p5 = named(NamedGraph::Prism(5));
        let k = max_clique(&p5);
        assert_eq!(k.len(), brute_omega(&p5));
        assert_eq!(k.len(), 5);
        // one side of the prism: all ids share a parity
        let sides: Vec<_> = k.iter().map(|v| v % 2).collect();
        assert!(sides.iter().all(|&s| s == sides[0]));
    }

    #[test]
    fn chromatic_numbers_of_named_graphs() {
        assert_eq!(chromatic_number_exact(&named(NamedGraph::Grotzsch)).unwrap().0, 4);
        assert_eq!(chromatic_number_exact(&named(NamedGraph::Cycle(5))).unwrap().0, 3);
        for w in 1..=6 {
            assert_eq!(chromatic_number_exact(&named(NamedGraph::Complete(w))).unwrap().0, w);
        }
        assert_eq!(chromatic_number_exact(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn size_limit_is_enforced() {
        let g = named(NamedGraph::Cycle(12));
        assert_eq!(
            chromatic_number_exact_with_limit(&g, 10).unwrap_err(),
            OracleError::SizeLimit { n: 12, limit: 10 }
        );
        // small components pass even when the whole graph is large
        let many = (0..6).fold(Graph::empty(0), |acc, _| {
            acc.disjoint_union(&named(NamedGraph::Cycle(5)))
        });
        assert_eq!(chromatic_number_exact_with_limit(&many, 10).unwrap().0, 3);
    }

    #[test]
    fn verification_reports_each_problem() {
        let k2 = named(NamedGraph::Complete(2));
        let bad = Coloring::from_colors(&[1, 1]);
        let v = verify_coloring(&k2, &bad);
        assert!(!v.proper);
        assert_eq!(
            v.violations,
            vec![Violation::MonochromaticEdge { u: 0, v: 1, color: 1 }]
        );

        let g = named(NamedGraph::Grotzsch);
        let (_, c) = chromatic_number_exact(&g).unwrap();
        assert!(verify_coloring(&g, &c).proper);

        let rainbow = Coloring::from_colors(&(1..=11).collect::<Vec<_>>());
        assert!(verify_coloring(&g, &rainbow).proper);

        let mut partial = Coloring::uncolored(2, 1);
        partial.set(0, 2);
        let v = verify_coloring(&k2, &partial);
        assert_eq!(
            v.violations,
            vec![
                Violation::OutOfPalette { vertex: 0, color: 2 },
                Violation::Uncolored { vertex: 1 }
            ]
        );
    }

    #[test]
    fn dsatur_is_proper() {
        for g in [
            NamedGraph::Grotzsch,
            NamedGraph::Prism(4),
            NamedGraph::Bull,
            NamedGraph::Cycle(7),
        ] {
            let g = named(g);
            assert!(verify_coloring(&g, &Coloring::from_colors(&dsatur(&g))).proper);
        }
    }
}
