//! `(P_6, bull, diamond)`-free graphs: four colors when `w = 2`, otherwise
//! `w` colors.

use super::pipeline::{
    is_triangle_piece, list_color, per_component, require_free, two_color, Builder, ComponentResult, PieceKind, Trace,
};
use super::thm32::prism_component;
use super::{claim, BoundCertificate, Certified, ColoringError, LayerPiece, Strategy, Theorem, TriangleFreeColorer};
use crate::decomposition::{clique_layering, CliqueLayering, LayeringCase};
use crate::graph::Graph;
use crate::oracle::{self, Coloring};
use crate::recognition::{is_perfect, Pattern};

pub fn color_p6(g: &Graph) -> Result<Certified, ColoringError> {
    color_p6_with(g, Strategy::Exact)
}

pub fn color_p6_with(g: &Graph, strategy: Strategy) -> Result<Certified, ColoringError> {
    let (c, cert, _) = color_p6_traced(g, strategy)?;
    Ok((c, cert))
}

/// As [`color_p6_with`], also returning one [`Trace`] per component.
pub fn color_p6_traced(
    g: &Graph,
    strategy: Strategy,
) -> Result<(Coloring, BoundCertificate, Vec<Trace>), ColoringError> {
    require_free(g, &[Pattern::Bull, Pattern::Diamond, Pattern::Path(6)])?;
    let (c, mut cert, traces) = per_component(g, |h| component(h, strategy))?;
    cert.theorem = match cert.omega {
        0..=2 => Theorem::CorP6Omega2,
        3 => Theorem::ThmP6Omega3,
        _ => Theorem::ThmP6Big,
    };
    Ok((c.with_certificate(cert.clone()), cert, traces))
}

pub(crate) fn component(h: &Graph, strategy: Strategy) -> Result<ComponentResult, ColoringError> {
    let kset = oracle::max_clique(h);
    let omega = kset.len();
    if omega <= 2 {
        let colors = TriangleFreeColorer::new(strategy, Some(4)).color(h)?;
        let k = colors.iter().copied().max().unwrap_or(0);
        let trace = Trace {
            pieces: vec![LayerPiece {
                layer: 0,
                kind: PieceKind::Whole,
                vertices: (0..h.n()).collect(),
                allowed: (1..=4).collect(),
                route: None,
            }],
            ..Trace::default()
        };
        return Ok(ComponentResult {
            colors,
            bound: if omega == 2 { 4 } else { omega },
            theorem: Theorem::CorP6Omega2,
            k_used: Some(k),
            trace,
        });
    }
    let l = clique_layering(h, &kset)?;
    if l.case.is_prism_like() {
        return prism_component(h, &l);
    }
    let (colors, trace) = if omega == 3 {
        omega_three(h, &l)?
    } else {
        omega_big(h, &l)?
    };
    Ok(ComponentResult {
        colors,
        bound: omega,
        theorem: if omega == 3 {
            Theorem::ThmP6Omega3
        } else {
            Theorem::ThmP6Big
        },
        k_used: None,
        trace,
    })
}

fn assert_empty(l: &CliqueLayering, i: usize) -> Result<(), ColoringError> {
    match l.layer(i) {
        Some(layer) if !layer.is_empty() => Err(claim(format!("N_{i} is empty"), layer.to_vec())),
        _ => Ok(()),
    }
}

/// `w >= 4`: `N_2` is perfect, its triangle-free components take {3, 4};
/// `N_3` is a union of cliques and `N_4` is empty. Components of `N_3`
/// with at most two vertices take {1, 2}: their neighbors in `N_2` lie in
/// triangle-free components, which use {3, 4}.
fn omega_big(h: &Graph, l: &CliqueLayering) -> Result<(Vec<usize>, Trace), ColoringError> {
    let omega = l.omega();
    let mut b = Builder::new(h, l, omega);
    b.color_clique();
    b.color_first_layer()?;
    if let Some(n2) = l.layer(2) {
        let (sub, map) = h.induced_subgraph(n2);
        let verdict = is_perfect(&sub)?;
        if !verdict.perfect {
            let w = verdict.witness.unwrap_or_default().iter().map(|&v| map[v]).collect();
            return Err(claim("G[N_2] is perfect", w));
        }
    }
    let comps2 = l.layer_components(h, 2);
    for comp in comps2.iter().filter(|c| !is_triangle_piece(h, c)) {
        b.two_color_piece(2, PieceKind::TriangleFree, comp, 3, 4, "triangle-free component of N_2")?;
    }
    for comp in comps2.iter().filter(|c| is_triangle_piece(h, c)) {
        b.extend(2, comp)?;
    }
    assert_empty(l, 4)?;
    let comps3 = l.layer_components(h, 3);
    for comp in &comps3 {
        if !h.is_clique(comp) {
            return Err(claim("G[N_3] is a disjoint union of cliques", comp.to_vec()));
        }
        if comp.len() <= 2 {
            let colors: Vec<usize> = (1..=comp.len()).collect();
            b.color_piece(3, PieceKind::SmallClique, comp, &colors, vec![1, 2]);
        }
    }
    for comp in comps3.iter().filter(|c| c.len() >= 3) {
        b.extend(3, comp)?;
    }
    b.finish()
}

/// `w = 3`. With one `W` part, `N_1` takes {2, 3}, `N_2` is bipartite and
/// takes {1, 3}, `N_4` is empty and `N_3` splits into single vertices
/// (color 2) and edges hanging from one `N_2` vertex `z` (the two colors
/// other than `z`'s). With two parts, `N_3` is empty; an `N_2` vertex
/// missing one part takes that part's color and one seeing both takes 3.
/// Edges inside `N_2` can defeat that rule, in which case `N_2` is
/// list-colored from what its `N_1` neighbors leave free.
fn omega_three(h: &Graph, l: &CliqueLayering) -> Result<(Vec<usize>, Trace), ColoringError> {
    let mut b = Builder::new(h, l, 3);
    b.color_clique();
    b.color_first_layer()?;
    let empty = h.empty_set();
    let n2 = l.layer(2).unwrap_or(&empty).clone();
    if let Err(w) = two_color(h, &n2, 1, 3) {
        return Err(claim("G[N_2] is bipartite", w));
    }
    match l.case {
        LayeringCase::SinglePart { .. } => {
            for comp in h.components_within(&n2) {
                b.two_color_piece(2, PieceKind::TriangleFree, &comp, 1, 3, "component of N_2")?;
            }
            assert_empty(l, 4)?;
            for comp in l.layer_components(h, 3) {
                let vs = comp.to_vec();
                match vs.as_slice() {
                    [_] => b.color_piece(3, PieceKind::SmallClique, &comp, &[2], vec![2]),
                    [x, y] => {
                        let nx = h.neighbors(*x).intersection(&n2);
                        let ny = h.neighbors(*y).intersection(&n2);
                        if nx != ny || nx.len() != 1 {
                            return Err(claim("an edge of N_3 hangs from a single N_2 vertex", vec![*x, *y]));
                        }
                        let z = nx.first().expect("one neighbor");
                        let cz = b.coloring.color(z).expect("N_2 is colored");
                        let free: Vec<usize> = (1..=3).filter(|&c| c != cz).collect();
                        b.color_piece(3, PieceKind::SmallClique, &comp, &free, free.clone());
                    }
                    _ => return Err(claim("G[N_3] has components of at most two vertices", vs)),
                }
            }
        }
        LayeringCase::TwoPart { i, j } => {
            assert_empty(l, 3)?;
            let (wi, wj) = (l.part(i).clone(), l.part(j).clone());
            let order = n2.to_vec();
            let mut rule = Vec::with_capacity(order.len());
            for &x in &order {
                let (a, c) = (h.neighbors(x).intersects(&wi), h.neighbors(x).intersects(&wj));
                let col = match (a, c) {
                    (false, _) => 2,
                    (true, false) => 1,
                    (true, true) => {
                        if h.degree(x) != 2 {
                            return Err(claim("an N_2 vertex seeing both W parts has degree 2", vec![x]));
                        }
                        3
                    }
                };
                rule.push(col);
            }
            for (&x, &c) in order.iter().zip(&rule) {
                b.coloring.set(x, c);
            }
            let clash = order.iter().find(|&&x| {
                h.neighbors_in(x, &n2)
                    .iter()
                    .any(|y| b.coloring.color(y) == b.coloring.color(x))
            });
            if let Some(&x) = clash {
                b.note_fallback(format!("N_2 rule gives a monochromatic edge at {x}; list-coloring N_2"));
                let colors = list_color(h, &b.coloring, &order, 3, &|_, _| true)
                    .ok_or_else(|| claim("N_2 is list-colorable from {1, 2, 3}", order.clone()))?;
                for (&x, &c) in order.iter().zip(&colors) {
                    b.coloring.set(x, c);
                }
            }
            b.record(2, PieceKind::Rule, order, vec![1, 2, 3]);
        }
        LayeringCase::Prism | LayeringCase::EmptyN1 => unreachable!("prism-like cases return earlier"),
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use crate::oracle::verify_coloring;

    #[test]
    fn named_examples() {
        let (c, cert) = color_p6(&NamedGraph::Grotzsch.build().unwrap()).unwrap();
        assert_eq!(
            (c.palette, cert.claimed_bound, cert.theorem),
            (4, 4, Theorem::CorP6Omega2)
        );
        let (c, cert) = color_p6(&NamedGraph::Prism(4).build().unwrap()).unwrap();
        assert_eq!((c.palette, cert.claimed_bound), (4, 4));
    }

    #[test]
    fn disconnected_input_is_bounded_per_component() {
        let g = NamedGraph::Grotzsch
            .build()
            .unwrap()
            .disjoint_union(&NamedGraph::Complete(3).build().unwrap());
        let (c, cert) = color_p6(&g).unwrap();
        assert_eq!((c.palette, cert.omega, cert.claimed_bound), (4, 3, 4));
        assert!(verify_coloring(&g, &c).proper);
    }

    #[test]
    fn edge_inside_n2_falls_back_to_list_coloring() {
        // W(1) = {3}, W(2) = {4}; 5 and 6 are adjacent and both see only 3,
        // so the rule would give both the color of W(2).
        let g = Graph::new(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4), (3, 5), (3, 6), (5, 6)],
        )
        .unwrap();
        let l = clique_layering(&g, &g.set_of([0, 1, 2])).unwrap();
        assert_eq!(l.case, LayeringCase::TwoPart { i: 1, j: 2 });
        let (colors, trace) = omega_three(&g, &l).unwrap();
        assert_eq!(trace.fallbacks.len(), 1);
        let c = crate::oracle::Coloring::from_colors(&colors);
        assert!(verify_coloring(&g, &c).proper);
        assert_eq!(c.palette, 3);
    }
}
