//! Property tests over random graphs and seeded class samples.

use chibound::bounds::{bull_diamond_nm, degree_form, harris, poljak_tuza, table_bound, Family};
use chibound::coloring::{
    color_bull_diamond, color_bull_diamond_traced, color_dispatch, color_p5, color_p6, color_p7, PieceKind,
    TriangleFreeColorer,
};
use chibound::decomposition::{clique_layering, verify_lemma31};
use chibound::gen::{repair_rounds, sample, SamplerSpec};
use chibound::io::{parse_auto, write_dimacs, write_edge_list};
use chibound::oracle::{chromatic_number_exact, clique_number, max_clique, verify_coloring};
use chibound::recognition::{
    contains_induced, find_bull, find_diamond, find_induced_path, find_paw, find_triangle, for_each_induced_cycle,
    is_complete_multipartite, is_perfect, Pattern,
};
use chibound::{Graph, VertexSet};
use proptest::prelude::*;

const BD: [Pattern; 2] = [Pattern::Bull, Pattern::Diamond];

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.1f64..0.9).prop_flat_map(|(n, p)| {
        prop::collection::vec(prop::bool::weighted(p), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn with_perm(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.n();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

/// A seeded sample of the class; `connect` keeps one large component.
fn class_sample(family: &'static [Pattern], max_n: usize, connect: bool) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 4..=max_n, 0.1f64..0.5, 0usize..5).prop_map(move |(seed, n, p, clique)| {
        let mut spec = SamplerSpec::new(n, p, family, seed)
            .with_clique(clique.min(n))
            .with_attempts(400);
        if connect {
            spec = spec.connected();
        }
        sample(&spec).expect("sampler succeeds")
    })
}

fn chi(g: &Graph) -> usize {
    chromatic_number_exact(g).unwrap().0
}

fn sorted_pattern_free(g: &Graph, pattern: &Graph) -> bool {
    contains_induced(g, pattern).is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // graph

    #[test]
    fn product_chromatic_number_is_the_larger_factor(g in graph(1, 6), h in graph(1, 6)) {
        let p = g.cartesian_product(&h);
        prop_assert!(chi(&p) <= chi(&g).max(chi(&h)));
    }

    #[test]
    fn induced_subgraph_on_everything_is_identity(g in graph(0, 14)) {
        let (h, map) = g.induced_subgraph(&g.vertices());
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn bfs_layers_follow_relabeling((g, perm) in graph(1, 14).prop_flat_map(with_perm), root in 0usize..14) {
        let root = root % g.n();
        let h = g.relabel(&perm);
        let before = g.bfs_layers(&g.set_of([root])).unwrap();
        let after = h.bfs_layers(&h.set_of([perm[root]])).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(before[v], after[perm[v]]);
        }
    }

    // recognition

    #[test]
    fn detectors_agree_with_generic_search(g in graph(1, 12)) {
        let named = |p: Pattern| p.graph();
        prop_assert_eq!(find_bull(&g).is_none(), sorted_pattern_free(&g, &named(Pattern::Bull)));
        prop_assert_eq!(find_diamond(&g).is_none(), sorted_pattern_free(&g, &named(Pattern::Diamond)));
        prop_assert_eq!(find_paw(&g).is_none(), sorted_pattern_free(&g, &named(Pattern::Paw)));
        prop_assert_eq!(find_triangle(&g).is_none(), sorted_pattern_free(&g, &named(Pattern::Triangle)));
        for t in 4..=7 {
            prop_assert_eq!(find_induced_path(&g, t).is_none(), sorted_pattern_free(&g, &named(Pattern::Path(t))));
        }
    }

    #[test]
    fn witnesses_are_sorted_induced_copies(g in graph(4, 12)) {
        for p in [Pattern::Bull, Pattern::Diamond, Pattern::Paw] {
            if let Some(w) = p.find(&g) {
                prop_assert!(w.windows(2).all(|x| x[0] < x[1]));
                let (sub, _) = g.induced_subgraph(&g.set_of(w.iter().copied()));
                prop_assert!(contains_induced(&sub, &p.graph()).is_some());
            }
        }
    }

    #[test]
    fn paw_free_components_with_triangles_are_complete_multipartite(
        g in class_sample(&[Pattern::Paw], 12, false)
    ) {
        for comp in g.connected_components() {
            let (h, _) = g.induced_subgraph(&comp);
            if find_triangle(&h).is_some() {
                prop_assert!(is_complete_multipartite(&h).is_some());
            }
        }
    }

    #[test]
    fn consecutive_cycle_vertices_share_no_neighbour(g in class_sample(&BD, 16, false)) {
        let mut bad = None;
        for_each_induced_cycle(&g, 5, |cyc| {
            let k = cyc.len();
            for i in 0..k {
                let (a, b) = (cyc[i], cyc[(i + 1) % k]);
                if g.neighbors(a).intersects(g.neighbors(b)) {
                    bad = Some(cyc.to_vec());
                    return false;
                }
            }
            true
        });
        prop_assert!(bad.is_none(), "cycle {:?}", bad);
    }

    #[test]
    fn perfect_graphs_have_chi_equal_omega_on_induced_subgraphs(g in graph(1, 9)) {
        if is_perfect(&g).unwrap().perfect {
            for mask in 1u32..(1 << g.n()) {
                let s = VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
                let (h, _) = g.induced_subgraph(&s);
                prop_assert_eq!(chi(&h), clique_number(&h));
            }
        }
    }

    // oracle

    #[test]
    fn clique_number_bounds_chi_from_below(g in graph(1, 16)) {
        let k = max_clique(&g);
        prop_assert!(g.is_clique(&k));
        let (x, c) = chromatic_number_exact(&g).unwrap();
        prop_assert!(k.len() <= x);
        prop_assert!(verify_coloring(&g, &c).proper);
        prop_assert_eq!(c.palette, x);
    }

    #[test]
    fn chi_ignores_labels((g, perm) in graph(1, 14).prop_flat_map(with_perm)) {
        prop_assert_eq!(chi(&g), chi(&g.relabel(&perm)));
    }

    #[test]
    fn chi_is_the_largest_component_value(g in graph(1, 16)) {
        let per = g
            .connected_components()
            .iter()
            .map(|c| chi(&g.induced_subgraph(c).0))
            .max()
            .unwrap_or(0);
        prop_assert_eq!(chi(&g), per);
    }

    // decomposition

    #[test]
    fn layering_clauses_hold_on_connected_samples(g in class_sample(&BD, 20, true)) {
        if clique_number(&g) > 2 {
            let l = clique_layering(&g, &max_clique(&g)).unwrap();
            let k = l.clique_set(&g);
            prop_assert_eq!(&g.bfs_layers(&k).unwrap(), &l.dist);
            let verdict = verify_lemma31(&g, &l);
            prop_assert!(verdict.all_hold(), "{:?}", verdict);
            for i in 2..=l.depth() {
                for c in l.layer_components(&g, i) {
                    let has_triangle = chibound::decomposition::has_triangle_within(&g, &c);
                    if has_triangle {
                        let next = l.layer(i + 1).cloned().unwrap_or_else(|| g.empty_set());
                        prop_assert!(!g.neighborhood_of_set(&c).intersects(&next));
                    }
                }
            }
        }
    }

    // coloring

    #[test]
    fn thm32_is_sound_and_keeps_layer_colors(g in class_sample(&BD, 22, false)) {
        let (c, cert, traces) = color_bull_diamond_traced(&g, &TriangleFreeColorer::exact()).unwrap();
        prop_assert!(verify_coloring(&g, &c).proper);
        let k = cert.k_used.unwrap_or(0);
        prop_assert!(c.palette <= cert.claimed_bound);
        prop_assert!(c.palette <= (2 * k).max(clique_number(&g)));
        prop_assert!(chi(&g) <= c.palette);
        for t in &traces {
            // Each component has its own budget `kc <= k`.
            for p in t.pieces.iter().filter(|p| p.kind == PieceKind::TriangleFree) {
                let kc = p.allowed.len();
                prop_assert!(kc <= k);
                let window: Vec<usize> = if p.layer % 2 == 0 { (kc + 1..=2 * kc).collect() } else { (1..=kc).collect() };
                prop_assert_eq!(&p.allowed, &window);
                for &v in &p.vertices {
                    prop_assert!(window.contains(&c.color(v).unwrap()));
                }
            }
        }
    }

    #[test]
    fn path_colorers_are_sound(g in class_sample(&BD, 18, false)) {
        let omega = clique_number(&g);
        let x = chi(&g);
        if find_induced_path(&g, 5).is_none() {
            let (c, cert) = color_p5(&g).unwrap();
            prop_assert!(verify_coloring(&g, &c).proper && c.palette <= cert.claimed_bound && x <= c.palette);
            prop_assert!(c.palette <= omega.max(3));
        }
        if find_induced_path(&g, 6).is_none() {
            let (c, cert) = color_p6(&g).unwrap();
            prop_assert!(verify_coloring(&g, &c).proper && c.palette <= cert.claimed_bound && x <= c.palette);
            let bound = if omega == 2 { 4 } else { omega };
            prop_assert!(c.palette <= bound);
        }
        if find_induced_path(&g, 7).is_none() {
            let (c, cert) = color_p7(&g).unwrap();
            prop_assert!(verify_coloring(&g, &c).proper && c.palette <= cert.claimed_bound && x <= c.palette);
            prop_assert!(c.palette <= omega.max(7));
        }
        let ((c, cert), _) = color_dispatch(&g).unwrap();
        prop_assert!(verify_coloring(&g, &c).proper && c.palette <= cert.claimed_bound && x <= c.palette);
    }

    #[test]
    fn palettes_ignore_labels((g, perm) in class_sample(&BD, 16, false).prop_flat_map(with_perm)) {
        let h = g.relabel(&perm);
        let (a, _) = color_bull_diamond(&g, &TriangleFreeColorer::exact()).unwrap();
        let (b, _) = color_bull_diamond(&h, &TriangleFreeColorer::exact()).unwrap();
        prop_assert_eq!(a.palette, b.palette);
        let ((a, _), _) = color_dispatch(&g).unwrap();
        let ((b, _), _) = color_dispatch(&h).unwrap();
        prop_assert_eq!(a.palette, b.palette);
    }

    // bounds

    #[test]
    fn bound_formulas_hold_on_triangle_free_samples(g in class_sample(&[Pattern::Triangle], 18, false)) {
        let x = chi(&g) as f64;
        if let Some(b) = poljak_tuza(g.n(), g.m()) {
            prop_assert!(x <= b);
        }
        prop_assert!(x <= harris(g.n(), 0));
    }

    #[test]
    fn bull_diamond_nm_bound_holds(g in class_sample(&BD, 18, false)) {
        let x = chi(&g) as f64;
        if let Some(b) = bull_diamond_nm(g.n(), g.m()) {
            prop_assert!(x <= b.max(clique_number(&g) as f64));
        }
    }

    #[test]
    fn path_table_bounds_hold(g in class_sample(&BD, 16, false)) {
        let omega = clique_number(&g);
        let x = chi(&g);
        for comp in g.connected_components() {
            let (h, _) = g.induced_subgraph(&comp);
            for t in 5..=7 {
                if find_induced_path(&h, t).is_none() {
                    prop_assert!(chi(&h) <= table_bound(Family::Pt(t), clique_number(&h)).unwrap());
                }
            }
        }
        for t in 5..=7 {
            if find_induced_path(&g, t).is_none() && t != 6 {
                prop_assert!(x <= table_bound(Family::Pt(t), omega).unwrap());
            }
        }
    }

    // sampler and io

    #[test]
    fn samples_are_deterministic_and_in_class(seed in any::<u64>(), n in 2usize..16, p in 0.05f64..0.7) {
        let spec = SamplerSpec::new(n, p, &BD, seed);
        let a = sample(&spec).unwrap();
        prop_assert_eq!(&a, &sample(&spec).unwrap());
        prop_assert!(find_bull(&a).is_none() && find_diamond(&a).is_none());
    }

    #[test]
    fn write_then_read_is_identity(g in graph(0, 20)) {
        prop_assert_eq!(&parse_auto(&write_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_auto(&write_dimacs(&g)).unwrap(), &g);
    }
}

#[test]
fn samplers_never_escape_their_class() {
    let families: [&[Pattern]; 4] = [
        &BD,
        &[Pattern::Paw],
        &[Pattern::Triangle],
        &[Pattern::Bull, Pattern::Diamond, Pattern::Path(6)],
    ];
    let mut draws = 0;
    for (f, family) in families.iter().enumerate() {
        for seed in 0..250u64 {
            let n = 4 + (seed % 11) as usize;
            let p = 0.1 + 0.1 * (seed % 6) as f64;
            let g = sample(&SamplerSpec::new(n, p, family, seed * 7 + f as u64)).unwrap();
            for pat in family.iter() {
                assert!(pat.find(&g).is_none(), "{pat} escaped: seed {seed}");
            }
            draws += 1;
        }
    }
    assert_eq!(draws, 1000);
}

#[test]
fn repair_deletes_one_edge_per_round_until_clean() {
    for seed in 0..300u64 {
        let spec = SamplerSpec::new(6 + (seed % 10) as usize, 0.5, &BD, seed);
        let mut rng = chibound::gen::SplitMix64::new(seed);
        let n = spec.n;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < spec.p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let mut sizes = Vec::new();
        let out = repair_rounds(&g, &BD, |h| sizes.push(h.m()));
        assert!(sizes.windows(2).all(|w| w[1] + 1 == w[0]), "seed {seed}");
        assert!(find_bull(&out).is_none() && find_diamond(&out).is_none());
    }
}

/// The count of forbidden copies can rise after a deletion: taking an edge
/// out of a `K_4` creates a diamond.
#[test]
fn forbidden_count_is_not_monotone_under_repair() {
    use chibound::gen::{forbidden_count, repair};
    let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let k4_minus = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!((forbidden_count(&k4, &BD), forbidden_count(&k4_minus, &BD)), (0, 1));
    let mut rises = 0;
    let mut rounds = 0;
    for seed in 0..200u64 {
        let mut rng = chibound::gen::SplitMix64::new(seed);
        let n = 8;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < 0.6 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let mut counts = Vec::new();
        let out = repair_rounds(&g, &BD, |h| counts.push(forbidden_count(h, &BD)));
        assert_eq!(out, repair(&g, &BD));
        assert_eq!(*counts.last().unwrap(), 0);
        rounds += counts.len() - 1;
        rises += counts.windows(2).filter(|w| w[1] > w[0]).count();
    }
    assert!(rounds > 0);
    assert!(rises > 0, "no round increased the count over {rounds} rounds");
}

#[test]
fn formulas_are_nondecreasing_on_their_range() {
    let mut prev = 0.0;
    for n in 3..2000 {
        let v = poljak_tuza(n, usize::MAX / 4).unwrap();
        assert!(v >= prev, "poljak_tuza n={n}");
        prev = v;
    }
    let mut prev = 0.0;
    for m in 8..5000 {
        let v = poljak_tuza(1_000_000, m).unwrap();
        assert!(v >= prev, "poljak_tuza m={m}");
        prev = v;
    }
    for n in 1..500 {
        assert!(harris(n + 1, 10) >= harris(n, 10));
        assert!(harris(n, n + 1) >= harris(n, n));
    }
    let mut prev = 0.0;
    for m in 8..5000 {
        let v = bull_diamond_nm(1_000_000, m).unwrap();
        assert!(v >= prev, "bull_diamond_nm m={m}");
        prev = v;
    }
    let mut prev = 0.0;
    for d in 3..2000 {
        let v = degree_form(d, 1.0).unwrap();
        assert!(v >= prev, "degree_form d={d}");
        prev = v;
    }
    for omega in 1..30 {
        for t in [5, 7, 8, 12] {
            assert!(table_bound(Family::Pt(t), omega + 1).unwrap() >= table_bound(Family::Pt(t), omega).unwrap());
        }
        for t in 8..20 {
            assert!(table_bound(Family::Pt(t + 1), omega).unwrap() >= table_bound(Family::Pt(t), omega).unwrap());
        }
    }
}
