//! Random graphs grown so that clique components appear deep in the
//! layering, which plain samples almost never produce.

use chibound::coloring::{
    color_bull_diamond_traced, color_p7_traced, ExtensionRoute, Strategy, Trace, TriangleFreeColorer,
};
use chibound::gen::{repair, sample, SamplerSpec, SplitMix64};
use chibound::oracle::{chromatic_number_exact, clique_number, verify_coloring};
use chibound::recognition::{find_induced_path, Pattern};
use chibound::Graph;

const BD: [Pattern; 2] = [Pattern::Bull, Pattern::Diamond];

/// A bull- and diamond-free base with a planted clique, then `hangs` rounds
/// of: pick a vertex `x`, attach a new clique of `size` vertices joined to
/// `x`, give each new vertex a few random extra edges, and repair.
fn grown(seed: u64, base_n: usize, clique: usize, hangs: usize, size: usize, extra: f64) -> Graph {
    let spec = SamplerSpec::new(base_n, 0.25, &BD, seed)
        .connected()
        .with_clique(clique)
        .with_attempts(400);
    let mut g = sample(&spec).expect("base sample");
    let mut rng = SplitMix64::new(seed ^ 0xA5A5_5A5A);
    for _ in 0..hangs {
        let n0 = g.n();
        let x = (rng.next_u64() % n0 as u64) as usize;
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for a in 0..size {
            edges.push((x, n0 + a));
            for b in a + 1..size {
                edges.push((n0 + a, n0 + b));
            }
            for y in 0..n0 {
                if y != x && rng.next_f64() < extra {
                    edges.push((y, n0 + a));
                }
            }
        }
        g = repair(&Graph::new(n0 + size, &edges).expect("valid"), &BD);
    }
    g
}

fn routes(traces: &[Trace], counts: &mut [usize; 3]) {
    for p in traces.iter().flat_map(|t| &t.pieces) {
        match p.route {
            Some(ExtensionRoute::Greedy) => counts[0] += 1,
            Some(ExtensionRoute::ProofRecolor) => counts[1] += 1,
            Some(ExtensionRoute::ExactFallback) => counts[2] += 1,
            None => {}
        }
    }
}

#[test]
fn grown_graphs_reach_every_extension_route() {
    let mut counts = [0usize; 3];
    for seed in 0..400u64 {
        let g = grown(seed, 10 + (seed % 6) as usize, 4 + (seed % 2) as usize, 3, 3, 0.06);
        let (c, cert, traces) = color_bull_diamond_traced(&g, &TriangleFreeColorer::exact()).expect("colorable");
        assert!(verify_coloring(&g, &c).proper, "seed {seed}");
        let k = cert.k_used.unwrap_or(0);
        assert!(c.palette <= (2 * k).max(clique_number(&g)), "seed {seed}");
        if g.connected_components().iter().all(|s| s.len() <= 40) {
            assert!(chromatic_number_exact(&g).unwrap().0 <= c.palette, "seed {seed}");
        }
        routes(&traces, &mut counts);
    }
    eprintln!(
        "extension routes: greedy={} recolor={} exact={}",
        counts[0], counts[1], counts[2]
    );
    assert!(counts[0] >= 50, "too few extensions exercised: {counts:?}");
    assert_eq!(counts[2], 0, "the exact fallback ran: {counts:?}");
}

#[test]
fn planted_branch_needs_the_recoloring() {
    use chibound::coloring::extend_into_clique_component;
    use chibound::decomposition::clique_layering;
    use chibound::gen::{planted_instance, PlantedKind};
    use chibound::Coloring;

    let inst = planted_instance(PlantedKind::ExtensionBranch);
    let g = &inst.graph;
    let l = clique_layering(g, &g.set_of(inst.clique.iter().copied())).unwrap();
    let partial = Coloring {
        palette: inst.palette,
        certificate: None,
        assignment: inst.partial.clone().unwrap(),
    };
    let target = g.set_of(inst.target.clone().unwrap());
    let (done, route) = extend_into_clique_component(&partial, &target, &l, g).unwrap();
    assert_eq!(route, ExtensionRoute::ProofRecolor);
    assert!(verify_coloring(g, &done).proper);
    assert!(done.palette <= inst.palette);

    let (c, _, traces) = color_bull_diamond_traced(g, &TriangleFreeColorer::exact()).unwrap();
    assert!(verify_coloring(g, &c).proper);
    let mut counts = [0; 3];
    routes(&traces, &mut counts);
    assert_eq!(counts[2], 0);
}

#[test]
fn p7_colorer_on_grown_p7_free_graphs() {
    let mut checked = 0;
    for seed in 0..400u64 {
        let g = grown(seed, 8 + (seed % 5) as usize, 4, 2, 3, 0.04);
        if find_induced_path(&g, 7).is_some() {
            continue;
        }
        checked += 1;
        let (c, cert, traces) = color_p7_traced(&g, Strategy::Exact).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(verify_coloring(&g, &c).proper, "seed {seed}");
        assert!(
            c.palette <= clique_number(&g).max(7) && c.palette <= cert.claimed_bound,
            "seed {seed}"
        );
        let mut counts = [0; 3];
        routes(&traces, &mut counts);
        assert_eq!(counts[2], 0, "seed {seed}");
    }
    assert!(checked >= 100, "only {checked} grown graphs were P7-free");
}
