//! `(P_5, bull, diamond)`-free graphs: triangle-free components take at most
//! three colors, the others are perfect and get an exact `w`-coloring.

use super::pipeline::{per_component, require_free, ComponentResult, PieceKind, Trace};
use super::{claim, Certified, ColoringError, LayerPiece, Strategy, Theorem, TriangleFreeColorer};
use crate::graph::Graph;
use crate::oracle;
use crate::recognition::{is_perfect, Pattern};

pub fn color_p5(g: &Graph) -> Result<Certified, ColoringError> {
    color_p5_with(g, Strategy::Exact)
}

pub fn color_p5_with(g: &Graph, strategy: Strategy) -> Result<Certified, ColoringError> {
    require_free(g, &[Pattern::Bull, Pattern::Diamond, Pattern::Path(5)])?;
    let (c, cert, _) = per_component(g, |h| component(h, strategy))?;
    Ok((c, cert))
}

pub(crate) fn component(h: &Graph, strategy: Strategy) -> Result<ComponentResult, ColoringError> {
    let omega = oracle::clique_number(h);
    let n = h.n();
    let whole = |allowed: usize| Trace {
        pieces: vec![LayerPiece {
            layer: 0,
            kind: PieceKind::Whole,
            vertices: (0..n).collect(),
            allowed: (1..=allowed).collect(),
            route: None,
        }],
        ..Trace::default()
    };
    if omega <= 2 {
        let colors = TriangleFreeColorer::new(strategy, Some(3)).color(h)?;
        let k = colors.iter().copied().max().unwrap_or(0);
        return Ok(ComponentResult {
            colors,
            bound: 3,
            theorem: Theorem::CorP5,
            k_used: Some(k),
            trace: whole(3),
        });
    }
    let verdict = is_perfect(h)?;
    if !verdict.perfect {
        return Err(claim(
            "a P5-free component with a triangle is perfect",
            verdict.witness.unwrap_or_default(),
        ));
    }
    let (chi, c) = oracle::chromatic_number_exact(h)?;
    if chi != omega {
        return Err(claim(
            format!("perfect component has chi = omega, found {chi} vs {omega}"),
            Vec::new(),
        ));
    }
    Ok(ComponentResult {
        colors: c.assignment.iter().map(|x| x.expect("total")).collect(),
        bound: omega,
        theorem: Theorem::CorP5,
        k_used: None,
        trace: whole(omega),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn named_examples() {
        let (c, cert) = color_p5(&NamedGraph::Cycle(5).build().unwrap()).unwrap();
        assert_eq!((c.palette, cert.claimed_bound), (3, 3));
        let (c, _) = color_p5(&NamedGraph::Complete(4).build().unwrap()).unwrap();
        assert_eq!(c.palette, 4);
        assert!(color_p5(&NamedGraph::Path(5).build().unwrap()).is_err());
    }
}
