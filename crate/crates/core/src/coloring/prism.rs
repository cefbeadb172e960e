use super::{claim, BoundCertificate, ColoringError, Theorem};
use crate::decomposition::CliqueLayering;
use crate::graph::Graph;
use crate::oracle::Coloring;

/// Colors a graph inside `K_w x K_2` with `w` colors: `v_i` gets `i`, and
/// the second row `N_1 u N_2` (a clique) gets distinct colors with each
/// `W(j)` vertex avoiding color `j`, found by backtracking in vertex order.
pub fn color_prism_case(g: &Graph, l: &CliqueLayering) -> Result<Coloring, ColoringError> {
    if !l.case.is_prism_like() {
        return Err(ColoringError::Precondition(format!(
            "layering case is {}, not prism",
            l.case.tag()
        )));
    }
    let w = l.omega();
    let mut colors = vec![0usize; g.n()];
    for (i, &v) in l.clique.iter().enumerate() {
        colors[v] = i + 1;
    }
    let mut row = g.empty_set();
    for i in 1..=2 {
        if let Some(layer) = l.layer(i) {
            row.union_with(layer);
        }
    }
    if !g.is_clique(&row) {
        return Err(claim("second row N_1 u N_2 is a clique", row.to_vec()));
    }
    let row = row.to_vec();
    let forbidden: Vec<Option<usize>> = row
        .iter()
        .map(|&x| (0..w).find(|&j| l.w[j].contains(x)).map(|j| j + 1))
        .collect();
    let mut taken = vec![false; w + 1];
    if !place(&row, &forbidden, 0, &mut taken, &mut colors, w) {
        return Err(claim("second row admits a color assignment", row));
    }
    let cert = BoundCertificate {
        theorem: Theorem::Prism,
        claimed_bound: w,
        omega: w,
        k_used: None,
    };
    Ok(Coloring::from_colors(&colors).with_certificate(cert))
}

fn place(
    row: &[usize],
    forbidden: &[Option<usize>],
    i: usize,
    taken: &mut [bool],
    colors: &mut [usize],
    w: usize,
) -> bool {
    let Some(&x) = row.get(i) else { return true };
    for c in 1..=w {
        if taken[c] || forbidden[i] == Some(c) {
            continue;
        }
        taken[c] = true;
        colors[x] = c;
        if place(row, forbidden, i + 1, taken, colors, w) {
            return true;
        }
        taken[c] = false;
    }
    colors[x] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::clique_layering;
    use crate::graph::NamedGraph;
    use crate::oracle::verify_coloring;

    #[test]
    fn prism3_is_a_cyclic_shift() {
        let g = NamedGraph::Prism(3).build().unwrap();
        let l = clique_layering(&g, &g.set_of([0, 2, 4])).unwrap();
        let c = color_prism_case(&g, &l).unwrap();
        assert_eq!(c.palette, 3);
        let first: Vec<_> = [0, 2, 4].iter().map(|&v| c.color(v).unwrap()).collect();
        let second: Vec<_> = [1, 3, 5].iter().map(|&v| c.color(v).unwrap()).collect();
        assert_eq!(first, vec![1, 2, 3]);
        assert!(
            (1..3).any(|s| (0..3).all(|i| second[i] == first[(i + s) % 3])),
            "{second:?}"
        );
        assert!(verify_coloring(&g, &c).proper);
    }

    #[test]
    fn lone_clique_and_partial_prism() {
        let k4 = NamedGraph::Complete(4).build().unwrap();
        let l = clique_layering(&k4, &k4.vertices()).unwrap();
        assert_eq!(color_prism_case(&k4, &l).unwrap().palette, 4);

        let p4 = NamedGraph::Prism(4).build().unwrap();
        let keep = p4.set_of((0..8).filter(|&v| v != 7));
        let (h, _) = p4.induced_subgraph(&keep);
        let l = clique_layering(&h, &h.set_of([0, 2, 4, 6])).unwrap();
        let c = color_prism_case(&h, &l).unwrap();
        assert_eq!(c.palette, 4);
        assert!(verify_coloring(&h, &c).proper);
    }
}
