//! The `max{2k, w}` coloring of (bull, diamond)-free graphs.
//!
//! Per connected component with `w > 2`: color `K` with `1..w`, color `N_1`
//! by its case, color triangle-free components of `N_i` (`i >= 2`) with a
//! `k`-coloring shifted into `k+1..2k` on even layers and kept in `1..k` on
//! odd layers, then extend into the clique components layer by layer.
//! Components with `w <= 2` go to the triangle-free colorer whole.

use super::pipeline::{is_triangle_piece, per_component, require_free, Builder, ComponentResult, PieceKind, Trace};
use super::prism::color_prism_case;
use super::{BoundCertificate, Certified, ColoringError, Theorem, TriangleFreeColorer};
use crate::decomposition::clique_layering;
use crate::graph::{Graph, VertexSet};
use crate::oracle::{self, Coloring};
use crate::recognition::Pattern;

pub fn color_bull_diamond(g: &Graph, colorer: &TriangleFreeColorer) -> Result<Certified, ColoringError> {
    let (c, cert, _) = color_bull_diamond_traced(g, colorer)?;
    Ok((c, cert))
}

/// As [`color_bull_diamond`], also returning one [`Trace`] per component.
pub fn color_bull_diamond_traced(
    g: &Graph,
    colorer: &TriangleFreeColorer,
) -> Result<(Coloring, BoundCertificate, Vec<Trace>), ColoringError> {
    require_free(g, &[Pattern::Bull, Pattern::Diamond])?;
    per_component(g, |h| component(h, colorer, Theorem::Thm32))
}

/// The same pipeline with the budget `t - 2` on triangle-free pieces, for
/// `P_t`-free input; the certificate claims `max{2t - 4, w}`.
pub fn color_cor38(g: &Graph, t: usize) -> Result<Certified, ColoringError> {
    if t < 3 {
        return Err(ColoringError::Precondition(format!(
            "path length t = {t} must be at least 3"
        )));
    }
    require_free(g, &[Pattern::Bull, Pattern::Diamond, Pattern::Path(t)])?;
    let colorer = TriangleFreeColorer::exact().with_budget(t - 2);
    let (c, mut cert, _) = per_component(g, |h| component(h, &colorer, Theorem::Cor38))?;
    cert.claimed_bound = cert.claimed_bound.max((2 * t - 4).max(cert.omega));
    cert.theorem = Theorem::Cor38;
    Ok((c.with_certificate(cert.clone()), cert))
}

pub(crate) fn component(
    h: &Graph,
    colorer: &TriangleFreeColorer,
    theorem: Theorem,
) -> Result<ComponentResult, ColoringError> {
    let kset = oracle::max_clique(h);
    let omega = kset.len();
    if omega <= 2 {
        let colors = colorer.color(h)?;
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut trace = Trace::default();
        trace.pieces.push(super::LayerPiece {
            layer: 0,
            kind: PieceKind::Whole,
            vertices: (0..h.n()).collect(),
            allowed: (1..=k).collect(),
            route: None,
        });
        return Ok(ComponentResult {
            colors,
            bound: k,
            theorem: Theorem::TriangleFree,
            k_used: Some(k),
            trace,
        });
    }
    let l = clique_layering(h, &kset)?;
    if l.case.is_prism_like() {
        return prism_component(h, &l);
    }

    let mut tf_pieces: Vec<(usize, VertexSet, Vec<usize>)> = Vec::new();
    let mut clique_pieces: Vec<(usize, VertexSet)> = Vec::new();
    for i in 2..=l.depth() {
        for comp in l.layer_components(h, i) {
            if is_triangle_piece(h, &comp) {
                clique_pieces.push((i, comp));
            } else {
                let (sub, _) = h.induced_subgraph(&comp);
                let colors = colorer.color(&sub)?;
                tf_pieces.push((i, comp, colors));
            }
        }
    }
    let used = tf_pieces
        .iter()
        .flat_map(|(_, _, c)| c.iter().copied())
        .max()
        .unwrap_or(0);
    let k = used.max(2);
    let palette = (2 * k).max(omega);

    let mut b = Builder::new(h, &l, palette);
    b.color_clique();
    b.color_first_layer()?;
    for (i, comp, colors) in &tf_pieces {
        let offset = if i % 2 == 0 { k } else { 0 };
        let shifted: Vec<usize> = colors.iter().map(|c| c + offset).collect();
        b.color_piece(
            *i,
            PieceKind::TriangleFree,
            comp,
            &shifted,
            (offset + 1..=offset + k).collect(),
        );
    }
    for (i, comp) in &clique_pieces {
        b.extend(*i, comp)?;
    }
    let (colors, trace) = b.finish()?;
    Ok(ComponentResult {
        colors,
        bound: palette,
        theorem,
        k_used: Some(k),
        trace,
    })
}

pub(crate) fn prism_component(
    h: &Graph,
    l: &crate::decomposition::CliqueLayering,
) -> Result<ComponentResult, ColoringError> {
    let c = color_prism_case(h, l)?;
    let colors = c
        .assignment
        .iter()
        .map(|x| x.expect("prism coloring is total"))
        .collect();
    let mut trace = Trace {
        case: Some(l.case),
        ..Trace::default()
    };
    trace.pieces.push(super::LayerPiece {
        layer: 0,
        kind: PieceKind::Whole,
        vertices: (0..h.n()).collect(),
        allowed: (1..=l.omega()).collect(),
        route: None,
    });
    Ok(ComponentResult {
        colors,
        bound: l.omega(),
        theorem: Theorem::Prism,
        k_used: None,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use crate::oracle::verify_coloring;

    #[test]
    fn grotzsch_goes_through_the_triangle_free_branch() {
        let g = NamedGraph::Grotzsch.build().unwrap();
        let (c, cert) = color_bull_diamond(&g, &TriangleFreeColorer::exact()).unwrap();
        assert_eq!(c.palette, 4);
        assert_eq!(cert.theorem, Theorem::TriangleFree);
        assert!(verify_coloring(&g, &c).proper);
    }

    #[test]
    fn prism_uses_omega_colors() {
        let g = NamedGraph::Prism(5).build().unwrap();
        let (c, cert) = color_bull_diamond(&g, &TriangleFreeColorer::exact()).unwrap();
        assert_eq!((c.palette, cert.theorem), (5, Theorem::Prism));
    }

    #[test]
    fn bull_is_rejected() {
        let g = NamedGraph::Bull.build().unwrap();
        assert!(matches!(
            color_bull_diamond(&g, &TriangleFreeColorer::exact()),
            Err(ColoringError::ClassViolation { .. })
        ));
    }

    #[test]
    fn layered_instance_respects_the_bound() {
        // K_4 on 0..4, pendant path 0-4-5-6-7-8 closing a 5-cycle 4..9 at 4
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)];
        edges.extend([(4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]);
        let g = Graph::new(9, &edges).unwrap();
        let (c, cert) = color_bull_diamond(&g, &TriangleFreeColorer::exact()).unwrap();
        assert!(verify_coloring(&g, &c).proper);
        assert!(c.palette <= cert.claimed_bound);
        assert_eq!(cert.claimed_bound, (2 * cert.k_used.unwrap()).max(4));
    }

    #[test]
    fn cor38_claims_the_path_bound() {
        let g = NamedGraph::Cycle(5).build().unwrap();
        let (_, cert) = color_cor38(&g, 5).unwrap();
        assert_eq!((cert.theorem, cert.claimed_bound), (Theorem::Cor38, 6));
    }
}
