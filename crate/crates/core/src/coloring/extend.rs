//! Extending a coloring of `K u N_1 u ... u N_{i-1}` into a clique
//! component of `N_i`.
//!
//! Three routes, tried in order:
//! 1. greedy: each vertex of the component takes its smallest free color;
//! 2. recoloring: with `A` the common neighbors of the component in
//!    `N_{i-1}`, `x = min A` and `u` a neighbor of `x` one layer further
//!    in, the one component vertex `x_1` with neighbors outside `A` takes
//!    `u`'s color and those outside neighbors take `x`'s color;
//! 3. exact: backtracking over the component and its neighbors in
//!    `N_{i-1}`, everything else fixed.
//!
//! Route 3 is reported so callers can flag it.

use serde::Serialize;

use super::pipeline::list_color;
use super::ColoringError;
use crate::decomposition::CliqueLayering;
use crate::graph::{Graph, VertexSet};
use crate::oracle::Coloring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionRoute {
    Greedy,
    ProofRecolor,
    ExactFallback,
}

/// Extends `partial` (palette unchanged) to the clique component `c` of
/// some `N_i`, `i >= 2`.
pub fn extend_into_clique_component(
    partial: &Coloring,
    c: &VertexSet,
    l: &CliqueLayering,
    g: &Graph,
) -> Result<(Coloring, ExtensionRoute), ColoringError> {
    extend_with(partial, c, l, g, &|_, _| true)
}

pub(crate) fn extend_with(
    partial: &Coloring,
    c: &VertexSet,
    l: &CliqueLayering,
    g: &Graph,
    permitted: &dyn Fn(usize, usize) -> bool,
) -> Result<(Coloring, ExtensionRoute), ColoringError> {
    let layer = check_component(c, l, g)?;
    let palette = partial.palette;
    let members = c.to_vec();

    if let Some(done) = greedy(partial, &members, g, palette) {
        return Ok((done, ExtensionRoute::Greedy));
    }
    if let Some(done) = recolor(partial, c, layer, l, g, palette, permitted) {
        return Ok((done, ExtensionRoute::ProofRecolor));
    }

    let prev = l.layer(layer - 1).expect("layer i-1 exists");
    let fringe = g.neighborhood_of_set(c).intersection(prev);
    let mut vars = members.clone();
    vars.extend(fringe.iter());
    let free = |v: usize, col: usize| c.contains(v) || permitted(v, col);
    match list_color(g, partial, &vars, palette, &free) {
        Some(colors) => {
            let mut out = partial.clone();
            for (&v, &col) in vars.iter().zip(&colors) {
                out.set(v, col);
            }
            Ok((out, ExtensionRoute::ExactFallback))
        }
        None => Err(ColoringError::ExtensionFailed {
            component: members,
            palette,
        }),
    }
}

/// The component must be a clique with at least three vertices inside a
/// single layer `i >= 2`, with everything below it colored.
fn check_component(c: &VertexSet, l: &CliqueLayering, g: &Graph) -> Result<usize, ColoringError> {
    let layer = c
        .first()
        .and_then(|v| l.dist[v])
        .ok_or_else(|| ColoringError::Precondition("component is empty or unreachable from K".into()))?;
    if layer < 2 || c.iter().any(|v| l.dist[v] != Some(layer)) {
        return Err(ColoringError::Precondition(format!(
            "component {:?} is not inside a single layer N_i with i >= 2",
            c.to_vec()
        )));
    }
    if c.len() < 3 || !g.is_clique(c) {
        return Err(ColoringError::Precondition(format!(
            "component {:?} is not a clique containing a triangle",
            c.to_vec()
        )));
    }
    Ok(layer)
}

fn smallest_free(g: &Graph, col: &Coloring, v: usize, palette: usize) -> Option<usize> {
    let used = col.neighbor_colors(g, v);
    (1..=palette).find(|&c| !used.get(c).copied().unwrap_or(false))
}

fn greedy(partial: &Coloring, members: &[usize], g: &Graph, palette: usize) -> Option<Coloring> {
    let mut out = partial.clone();
    for &v in members {
        let c = smallest_free(g, &out, v, palette)?;
        out.set(v, c);
    }
    Some(out)
}

fn recolor(
    partial: &Coloring,
    c: &VertexSet,
    layer: usize,
    l: &CliqueLayering,
    g: &Graph,
    palette: usize,
    permitted: &dyn Fn(usize, usize) -> bool,
) -> Option<Coloring> {
    let prev = l.layer(layer - 1)?;
    let a: VertexSet = {
        let mut s = prev.clone();
        for v in c {
            s.intersect_with(g.neighbors(v));
        }
        s
    };
    let x = a.first()?;
    let further = if layer == 2 {
        l.clique_set(g)
    } else {
        l.layer(layer - 2)?.clone()
    };
    let u = g.neighbors(x).intersection(&further).first()?;
    let outside = g.neighborhood_of_set(c).intersection(prev).difference(&a);
    let x1s: Vec<usize> = c.iter().filter(|&v| g.neighbors(v).intersects(&outside)).collect();
    let [x1] = x1s.as_slice() else { return None };

    let mut out = partial.clone();
    let (cu, cx) = (partial.color(u)?, partial.color(x)?);
    out.set(*x1, cu);
    for y in outside.iter() {
        if !permitted(y, cx) {
            return None;
        }
        out.set(y, cx);
    }
    for v in c.iter().filter(|v| v != x1) {
        let col = smallest_free(g, &out, v, palette)?;
        out.set(v, col);
    }
    let touched: Vec<usize> = c.iter().chain(outside.iter()).collect();
    let clean = touched.iter().all(|&v| {
        g.neighbors(v)
            .iter()
            .all(|w| out.color(w).is_none() || out.color(w) != out.color(v))
    });
    clean.then_some(out)
}
