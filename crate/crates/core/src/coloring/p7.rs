//! `(P_7, bull, diamond)`-free graphs with at most `max{7, w}` colors.
//!
//! Layer palettes: `K` and `N_1` as in the general pipeline; triangle-free
//! components of `N_2` take a 5-coloring shifted into {3..7}; `N_3` is
//! perfect and its triangle-free components take {1, 2}; `N_4` is a union
//! of cliques whose components of at most two vertices take {3, 4}; `N_5`
//! is empty. Clique components are extended into.

use super::pipeline::{is_triangle_piece, per_component, require_free, Builder, ComponentResult, PieceKind, Trace};
use super::thm32::prism_component;
use super::{claim, BoundCertificate, Certified, ColoringError, LayerPiece, Strategy, Theorem, TriangleFreeColorer};
use crate::decomposition::{clique_layering, CliqueLayering};
use crate::graph::Graph;
use crate::oracle::{self, Coloring};
use crate::recognition::{is_perfect, Pattern};

pub fn color_p7(g: &Graph) -> Result<Certified, ColoringError> {
    color_p7_with(g, Strategy::Exact)
}

pub fn color_p7_with(g: &Graph, strategy: Strategy) -> Result<Certified, ColoringError> {
    let (c, cert, _) = color_p7_traced(g, strategy)?;
    Ok((c, cert))
}

/// As [`color_p7_with`], also returning one [`Trace`] per component.
pub fn color_p7_traced(
    g: &Graph,
    strategy: Strategy,
) -> Result<(Coloring, BoundCertificate, Vec<Trace>), ColoringError> {
    require_free(g, &[Pattern::Bull, Pattern::Diamond, Pattern::Path(7)])?;
    let (c, mut cert, traces) = per_component(g, |h| component(h, strategy))?;
    cert.claimed_bound = cert.claimed_bound.max(7.max(cert.omega));
    cert.theorem = Theorem::ThmP7;
    Ok((c.with_certificate(cert.clone()), cert, traces))
}

pub(crate) fn component(h: &Graph, strategy: Strategy) -> Result<ComponentResult, ColoringError> {
    let kset = oracle::max_clique(h);
    let omega = kset.len();
    let bound = omega.max(7);
    if omega <= 2 {
        let colors = TriangleFreeColorer::new(strategy, Some(5)).color(h)?;
        let k = colors.iter().copied().max().unwrap_or(0);
        let trace = Trace {
            pieces: vec![LayerPiece {
                layer: 0,
                kind: PieceKind::Whole,
                vertices: (0..h.n()).collect(),
                allowed: (1..=5).collect(),
                route: None,
            }],
            ..Trace::default()
        };
        return Ok(ComponentResult {
            colors,
            bound,
            theorem: Theorem::ThmP7,
            k_used: Some(k),
            trace,
        });
    }
    let l = clique_layering(h, &kset)?;
    if l.case.is_prism_like() {
        let mut r = prism_component(h, &l)?;
        r.bound = bound;
        r.theorem = Theorem::ThmP7;
        return Ok(r);
    }
    let (colors, trace, k) = layers(h, &l, strategy, bound)?;
    Ok(ComponentResult {
        colors,
        bound,
        theorem: Theorem::ThmP7,
        k_used: Some(k),
        trace,
    })
}

fn layers(
    h: &Graph,
    l: &CliqueLayering,
    strategy: Strategy,
    palette: usize,
) -> Result<(Vec<usize>, Trace, usize), ColoringError> {
    let colorer = TriangleFreeColorer::new(strategy, Some(5));
    let mut b = Builder::new(h, l, palette);
    b.color_clique();
    b.color_first_layer()?;

    let mut k_used = 0;
    let comps2 = l.layer_components(h, 2);
    for comp in comps2.iter().filter(|c| !is_triangle_piece(h, c)) {
        let (sub, _) = h.induced_subgraph(comp);
        let local = colorer.color(&sub)?;
        k_used = k_used.max(local.iter().copied().max().unwrap_or(0));
        let shifted: Vec<usize> = local.iter().map(|c| c + 2).collect();
        b.color_piece(2, PieceKind::TriangleFree, comp, &shifted, (3..=7).collect());
    }
    for comp in comps2.iter().filter(|c| is_triangle_piece(h, c)) {
        b.extend(2, comp)?;
    }

    if let Some(n3) = l.layer(3) {
        let (sub, map) = h.induced_subgraph(n3);
        let verdict = is_perfect(&sub)?;
        if !verdict.perfect {
            let w = verdict.witness.unwrap_or_default().iter().map(|&v| map[v]).collect();
            return Err(claim("G[N_3] is perfect", w));
        }
    }
    let comps3 = l.layer_components(h, 3);
    for comp in comps3.iter().filter(|c| !is_triangle_piece(h, c)) {
        b.two_color_piece(3, PieceKind::TriangleFree, comp, 1, 2, "triangle-free component of N_3")?;
    }
    for comp in comps3.iter().filter(|c| is_triangle_piece(h, c)) {
        b.extend(3, comp)?;
    }

    if let Some(n5) = l.layer(5) {
        return Err(claim("N_5 is empty", n5.to_vec()));
    }
    let comps4 = l.layer_components(h, 4);
    for comp in &comps4 {
        if !h.is_clique(comp) {
            return Err(claim("G[N_4] is a disjoint union of cliques", comp.to_vec()));
        }
        if comp.len() <= 2 {
            let colors: Vec<usize> = (3..3 + comp.len()).collect();
            b.color_piece(4, PieceKind::SmallClique, comp, &colors, vec![3, 4]);
        }
    }
    for comp in comps4.iter().filter(|c| c.len() >= 3) {
        b.extend(4, comp)?;
    }
    let (colors, trace) = b.finish()?;
    Ok((colors, trace, k_used))
}
