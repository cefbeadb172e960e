//! Shared machinery for the layer-by-layer colorers.

use serde::Serialize;

use super::extend::{extend_with, ExtensionRoute};
use super::{claim, BoundCertificate, ColoringError, Theorem};
use crate::decomposition::{CliqueLayering, LayeringCase};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{self, Coloring};
use crate::recognition::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    /// The root clique `K`.
    Clique,
    /// `N_1`.
    FirstLayer,
    /// A triangle-free component of some `N_i`, `i >= 2`.
    TriangleFree,
    /// A component of some `N_i` containing a triangle.
    CliqueComponent,
    /// A component without a triangle colored from a fixed pair of colors.
    SmallClique,
    /// A whole component handled in one step (triangle-free or prism).
    Whole,
    /// A layer colored with a fixed rule and repaired by list coloring.
    Rule,
}

/// One colored piece: which layer, which vertices, and the colors it was
/// allowed to use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerPiece {
    pub layer: usize,
    pub kind: PieceKind,
    pub vertices: Vec<usize>,
    pub allowed: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<ExtensionRoute>,
}

/// How one connected component was colored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<LayeringCase>,
    pub pieces: Vec<LayerPiece>,
    /// Places where a stated rule did not apply and a search took over.
    pub fallbacks: Vec<String>,
}

impl Trace {
    fn relabel(&mut self, map: &[usize]) {
        for p in &mut self.pieces {
            for v in &mut p.vertices {
                *v = map[*v];
            }
        }
    }
}

pub(crate) struct ComponentResult {
    pub colors: Vec<usize>,
    pub bound: usize,
    pub theorem: Theorem,
    pub k_used: Option<usize>,
    pub trace: Trace,
}

pub(crate) fn require_free(g: &Graph, patterns: &[Pattern]) -> Result<(), ColoringError> {
    for &p in patterns {
        if let Some(witness) = p.find(g) {
            return Err(ColoringError::ClassViolation {
                pattern: p.name(),
                witness,
            });
        }
    }
    Ok(())
}

/// Runs `color` on each component and merges the results. The certificate
/// takes the largest component bound and that component's theorem.
pub(crate) fn per_component(
    g: &Graph,
    mut color: impl FnMut(&Graph) -> Result<ComponentResult, ColoringError>,
) -> Result<(Coloring, BoundCertificate, Vec<Trace>), ColoringError> {
    let mut colors = vec![0; g.n()];
    let mut traces = Vec::new();
    let mut best: Option<(usize, Theorem)> = None;
    let mut k_used: Option<usize> = None;
    for comp in g.connected_components() {
        let (h, map) = g.induced_subgraph(&comp);
        let mut r = color(&h)?;
        for (i, &c) in r.colors.iter().enumerate() {
            colors[map[i]] = c;
        }
        if best.is_none_or(|(b, _)| r.bound > b) {
            best = Some((r.bound, r.theorem));
        }
        if let Some(k) = r.k_used {
            k_used = Some(k_used.map_or(k, |x| x.max(k)));
        }
        r.trace.relabel(&map);
        traces.push(r.trace);
    }
    let (bound, theorem) = best.unwrap_or((0, Theorem::Exact));
    let cert = BoundCertificate {
        theorem,
        claimed_bound: bound,
        omega: oracle::clique_number(g),
        k_used,
    };
    let coloring = Coloring::from_colors(&colors).with_certificate(cert.clone());
    let verdict = oracle::verify_coloring(g, &coloring);
    if !verdict.proper {
        return Err(claim(
            format!("assembled coloring is improper: {:?}", verdict.violations.first()),
            Vec::new(),
        ));
    }
    if coloring.palette > cert.claimed_bound {
        return Err(claim(
            format!(
                "palette {} exceeds claimed bound {}",
                coloring.palette, cert.claimed_bound
            ),
            Vec::new(),
        ));
    }
    Ok((coloring, cert, traces))
}

/// A 2-coloring of `comp` with colors `a`, `b`, the smallest vertex of each
/// component getting `a`; `None` when `comp` is not bipartite, with an odd
/// closed walk's edge as the witness.
pub(crate) fn two_color(g: &Graph, comp: &VertexSet, a: usize, b: usize) -> Result<Vec<(usize, usize)>, Vec<usize>> {
    let mut side = vec![None; g.n()];
    let mut out = Vec::new();
    for root in comp {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are placed");
            out.push((v, if s { b } else { a }));
            for u in g.neighbors_in(v, comp).iter() {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return Err(vec![v, u]),
                    Some(_) => {}
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Backtracking over `vars` with every other vertex fixed. `permitted`
/// restricts individual (vertex, color) pairs. Returns the assignment in
/// `vars` order.
pub(crate) fn list_color(
    g: &Graph,
    base: &Coloring,
    vars: &[usize],
    palette: usize,
    permitted: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut work = base.clone();
    for &v in vars {
        work.clear(v);
    }
    let mut order: Vec<usize> = vars.to_vec();
    order.sort_by_key(|&v| {
        let fixed = g.neighbors(v).iter().filter(|&u| work.color(u).is_some()).count();
        (std::cmp::Reverse(fixed), std::cmp::Reverse(g.degree(v)), v)
    });
    if assign(g, &mut work, &order, 0, palette, permitted) {
        Some(vars.iter().map(|&v| work.color(v).expect("assigned")).collect())
    } else {
        None
    }
}

fn assign(
    g: &Graph,
    work: &mut Coloring,
    order: &[usize],
    depth: usize,
    palette: usize,
    permitted: &dyn Fn(usize, usize) -> bool,
) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    let mut used = vec![false; palette + 1];
    for u in g.neighbors(v) {
        if let Some(c) = work.color(u) {
            if c <= palette {
                used[c] = true;
            }
        }
    }
    for (c, &taken) in used.iter().enumerate().skip(1) {
        if taken || !permitted(v, c) {
            continue;
        }
        work.set(v, c);
        if assign(g, work, order, depth + 1, palette, permitted) {
            return true;
        }
        work.clear(v);
    }
    false
}

/// Incremental coloring of one connected component along its layering.
pub(crate) struct Builder<'a> {
    pub g: &'a Graph,
    pub l: &'a CliqueLayering,
    pub coloring: Coloring,
    pub trace: Trace,
    allowed: Vec<Option<Vec<usize>>>,
}

impl<'a> Builder<'a> {
    pub fn new(g: &'a Graph, l: &'a CliqueLayering, palette: usize) -> Self {
        Self {
            g,
            l,
            coloring: Coloring::uncolored(g.n(), palette),
            trace: Trace {
                case: Some(l.case),
                ..Trace::default()
            },
            allowed: vec![None; g.n()],
        }
    }

    pub fn palette(&self) -> usize {
        self.coloring.palette
    }

    fn piece(&mut self, layer: usize, kind: PieceKind, vertices: Vec<usize>, allowed: Vec<usize>) {
        self.trace.pieces.push(LayerPiece {
            layer,
            kind,
            vertices,
            allowed,
            route: None,
        });
    }

    /// `v_i` gets color `i`.
    pub fn color_clique(&mut self) {
        for (i, &v) in self.l.clique.iter().enumerate() {
            self.coloring.set(v, i + 1);
        }
        let w = self.l.omega();
        self.piece(0, PieceKind::Clique, self.l.clique.clone(), (1..=w).collect());
    }

    /// Two parts: `W(1)` gets 2 and `W(2)` gets 1. One part: in each clique
    /// component of `G[N_1]` the smallest vertex gets 2 and the others
    /// 3, 4, ... in increasing order.
    pub fn color_first_layer(&mut self) -> Result<(), ColoringError> {
        let Some(n1) = self.l.layer(1).cloned() else {
            return Ok(());
        };
        match self.l.case {
            LayeringCase::TwoPart { i, j } => {
                for v in self.l.part(i).clone().iter() {
                    self.coloring.set(v, 2);
                }
                for v in self.l.part(j).clone().iter() {
                    self.coloring.set(v, 1);
                }
            }
            LayeringCase::SinglePart { .. } => {
                for comp in self.g.components_within(&n1) {
                    if !self.g.is_clique(&comp) {
                        return Err(claim("G[N_1] is a disjoint union of cliques", comp.to_vec()));
                    }
                    for (idx, v) in comp.iter().enumerate() {
                        let c = idx + 2;
                        if c > self.palette() {
                            return Err(claim("N_1 clique component fits the palette", comp.to_vec()));
                        }
                        self.coloring.set(v, c);
                    }
                }
            }
            LayeringCase::Prism | LayeringCase::EmptyN1 => {
                return Err(ColoringError::Precondition(
                    "prism-like layering reached the layer pipeline".into(),
                ))
            }
        }
        let allowed = (1..=self.l.omega()).collect();
        self.piece(1, PieceKind::FirstLayer, n1.to_vec(), allowed);
        Ok(())
    }

    /// Colors `comp` with `colors[i]` on its `i`-th vertex and records the
    /// colors the piece may use.
    pub fn color_piece(
        &mut self,
        layer: usize,
        kind: PieceKind,
        comp: &VertexSet,
        colors: &[usize],
        allowed: Vec<usize>,
    ) {
        for (v, &c) in comp.iter().zip(colors) {
            self.coloring.set(v, c);
            self.allowed[v] = Some(allowed.clone());
        }
        self.piece(layer, kind, comp.to_vec(), allowed);
    }

    /// 2-colors a component with colors `a` and `b`.
    pub fn two_color_piece(
        &mut self,
        layer: usize,
        kind: PieceKind,
        comp: &VertexSet,
        a: usize,
        b: usize,
        what: &str,
    ) -> Result<(), ColoringError> {
        let pairs = two_color(self.g, comp, a, b).map_err(|w| claim(format!("{what} is bipartite"), w))?;
        let colors: Vec<usize> = pairs.iter().map(|&(_, c)| c).collect();
        self.color_piece(layer, kind, comp, &colors, vec![a, b]);
        Ok(())
    }

    /// Extends the coloring into a clique component of `N_layer`.
    pub fn extend(&mut self, layer: usize, comp: &VertexSet) -> Result<(), ColoringError> {
        let allowed = &self.allowed;
        let permitted = |v: usize, c: usize| allowed[v].as_ref().is_none_or(|a| a.contains(&c));
        let (next, route) = extend_with(&self.coloring, comp, self.l, self.g, &permitted)?;
        if route == ExtensionRoute::ExactFallback {
            self.trace.fallbacks.push(format!(
                "clique extension into {:?} needed the exact search",
                comp.to_vec()
            ));
        }
        self.coloring = next;
        let palette = self.palette();
        self.piece(
            layer,
            PieceKind::CliqueComponent,
            comp.to_vec(),
            (1..=palette).collect(),
        );
        if let Some(p) = self.trace.pieces.last_mut() {
            p.route = Some(route);
        }
        Ok(())
    }

    pub fn note_fallback(&mut self, text: String) {
        self.trace.fallbacks.push(text);
    }

    pub fn record(&mut self, layer: usize, kind: PieceKind, vertices: Vec<usize>, allowed: Vec<usize>) {
        self.piece(layer, kind, vertices, allowed);
    }

    /// Checks the coloring is total and proper and returns the colors.
    pub fn finish(self) -> Result<(Vec<usize>, Trace), ColoringError> {
        let verdict = oracle::verify_coloring(self.g, &self.coloring);
        if !verdict.proper {
            return Err(claim(
                format!("layer coloring is proper: {:?}", verdict.violations.first()),
                Vec::new(),
            ));
        }
        let colors = self.coloring.assignment.iter().map(|c| c.expect("total")).collect();
        Ok((colors, self.trace))
    }
}

/// True when the component of a layer contains a triangle (and so, in the
/// class, is a clique).
pub(crate) fn is_triangle_piece(g: &Graph, comp: &VertexSet) -> bool {
    crate::decomposition::has_triangle_within(g, comp)
}
