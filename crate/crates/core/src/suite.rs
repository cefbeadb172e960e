//! The acceptance battery: eleven seeded checks, each reported as pass or
//! fail with the first few counterexamples.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bull_diamond_nm, eval_bounds, harris, poljak_tuza};
use crate::coloring::{
    color_bull_diamond_traced, color_p5, color_p6, color_p6_traced, color_p7_traced, ExtensionRoute, PieceKind,
    Strategy, Trace, TriangleFreeColorer,
};
use crate::decomposition::{clique_layering, verify_lemma31, CliqueLayering, LayeringCase};
use crate::gen::{sample, SamplerSpec};
use crate::graph::{Graph, NamedGraph};
use crate::oracle::{self, chromatic_number_exact_with_limit, verify_coloring, DEFAULT_CHI_LIMIT};
use crate::recognition::{classify, for_each_induced_cycle, is_complete_multipartite, is_perfect, Pattern};

pub const DEFAULT_SEED: u64 = 20_240_601;
const MAX_REPORTED: usize = 5;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Size cap for the exact chromatic search.
    pub chi_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            chi_limit: DEFAULT_CHI_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances or assertions examined.
    pub checked: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
    /// How the clique extensions went, and how often a stated rule had to
    /// give way to a search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<RouteStats>,
    pub millis: u128,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RouteStats {
    pub greedy: usize,
    pub proof_recolor: usize,
    pub exact_fallback: usize,
    pub rule_fallbacks: usize,
}

impl RouteStats {
    fn of(traces: &[Trace]) -> Self {
        let mut s = Self::default();
        for t in traces {
            for p in &t.pieces {
                match p.route {
                    Some(ExtensionRoute::Greedy) => s.greedy += 1,
                    Some(ExtensionRoute::ProofRecolor) => s.proof_recolor += 1,
                    Some(ExtensionRoute::ExactFallback) => s.exact_fallback += 1,
                    None => {}
                }
            }
            s.rule_fallbacks += t.fallbacks.len();
        }
        s.rule_fallbacks -= s.exact_fallback;
        s
    }

    fn add(&mut self, o: Self) {
        self.greedy += o.greedy;
        self.proof_recolor += o.proof_recolor;
        self.exact_fallback += o.exact_fallback;
        self.rule_fallbacks += o.rule_fallbacks;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

impl SuiteReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&c.line());
            out.push('\n');
        }
        out
    }
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} {:>2} {:<28} checked={:<6} failures={:<4} {:>7} ms",
            self.id, self.name, self.checked, self.failure_count, self.millis
        );
        if let Some(r) = self.routes {
            s.push_str(&format!(
                "  extensions: greedy={} recolor={} exact={} rule_fallbacks={}",
                r.greedy, r.proof_recolor, r.exact_fallback, r.rule_fallbacks
            ));
        }
        if let Some(first) = self.failures.first() {
            s.push_str(&format!("  first: {first}"));
        }
        s
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "grotzsch_witness"),
    (2, "c5_witness"),
    (3, "bull_diamond_coloring"),
    (4, "layering_structure"),
    (5, "cycle_common_neighbours"),
    (6, "p5_perfection"),
    (7, "p6_colorings"),
    (8, "p7_colorings"),
    (9, "bound_formulas"),
    (10, "product_and_paw_facts"),
    (11, "oracle_self_check"),
];

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let criteria: Vec<CriterionOutcome> = CRITERIA.iter().map(|&(id, _)| run_criterion(id, cfg)).collect();
    SuiteReport {
        seed: cfg.seed,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

/// Runs one criterion by number; unknown numbers fail.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionOutcome {
    let start = Instant::now();
    let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1);
    let mut tally = Tally::default();
    match id {
        1 => grotzsch(cfg, &mut tally),
        2 => c5(cfg, &mut tally),
        3 => bull_diamond_coloring(cfg, &mut tally),
        4 => layering_structure(cfg, &mut tally),
        5 => cycle_neighbours(cfg, &mut tally),
        6 => p5_perfection(cfg, &mut tally),
        7 => p6_colorings(cfg, &mut tally),
        8 => p7_colorings(cfg, &mut tally),
        9 => bound_formulas(cfg, &mut tally),
        10 => facts(cfg, &mut tally),
        11 => oracle_self_check(cfg, &mut tally),
        _ => tally.fail(format!("no criterion numbered {id}")),
    }
    CriterionOutcome {
        id,
        name,
        passed: tally.failure_count == 0 && tally.checked > 0,
        checked: tally.checked,
        failure_count: tally.failure_count,
        failures: tally.failures,
        routes: tally.routes,
        millis: start.elapsed().as_millis(),
    }
}

#[derive(Debug, Default)]
struct Tally {
    checked: usize,
    failure_count: usize,
    failures: Vec<String>,
    routes: Option<RouteStats>,
}

impl Tally {
    fn absorb_routed(&mut self, results: Vec<Result<RouteStats, String>>) {
        let mut total = self.routes.unwrap_or_default();
        for r in results {
            match r {
                Ok(s) => {
                    total.add(s);
                    self.checked += 1;
                }
                Err(e) => self.check(false, || e),
            }
        }
        self.routes = Some(total);
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    /// Folds per-instance results computed in parallel.
    fn absorb(&mut self, results: Vec<Result<(), String>>) {
        for r in results {
            self.check(r.is_ok(), || r.err().unwrap_or_default());
        }
    }
}

fn named(g: NamedGraph) -> Graph {
    g.build().expect("named graph parameters are valid")
}

fn chi(g: &Graph, cfg: &SuiteConfig) -> Result<usize, String> {
    chromatic_number_exact_with_limit(g, cfg.chi_limit)
        .map(|(k, _)| k)
        .map_err(|e| e.to_string())
}

fn stream_seed(cfg: &SuiteConfig, stream: u64, i: usize) -> u64 {
    cfg.seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(stream << 32)
        .wrapping_add(i as u64)
}

/// A labelled sample: `(label, graph)`, or the sampler error text.
type Sample = Result<(String, Graph), String>;

fn draw(spec: SamplerSpec) -> Sample {
    let label = spec.to_string();
    sample(&spec).map(|g| (label, g)).map_err(|e| e.to_string())
}

const BD: [Pattern; 2] = [Pattern::Bull, Pattern::Diamond];
const DENSITIES: [f64; 4] = [0.15, 0.2, 0.25, 0.3];

/// The 500 connected (bull, diamond)-free graphs on 8..=25 vertices shared
/// by criteria 3 to 5.
fn bull_diamond_samples(cfg: &SuiteConfig) -> Vec<Sample> {
    (0..500)
        .into_par_iter()
        .map(|i| {
            let n = 8 + i % 18;
            let spec = SamplerSpec::new(n, DENSITIES[i % 4], &BD, stream_seed(cfg, 3, i))
                .connected()
                .with_clique((i / 4) % 6)
                .with_attempts(400);
            draw(spec)
        })
        .collect()
}

fn grotzsch(cfg: &SuiteConfig, t: &mut Tally) {
    let g = named(NamedGraph::Grotzsch);
    let r = classify(&g, 6).expect("probe is valid");
    t.check(r.path_free && r.bull_free && r.diamond_free && r.triangle_free, || {
        format!("classification {:?}", r.witnesses)
    });
    let x = chi(&g, cfg);
    t.check(x == Ok(4), || format!("chi = {x:?}, expected 4"));
    match color_p6(&g) {
        Ok((c, cert)) => t.check(
            c.palette <= 4 && cert.claimed_bound == 4 && verify_coloring(&g, &c).proper,
            || format!("palette {} with claimed bound {}", c.palette, cert.claimed_bound),
        ),
        Err(e) => t.check(false, || e.to_string()),
    }
}

fn c5(cfg: &SuiteConfig, t: &mut Tally) {
    let g = named(NamedGraph::Cycle(5));
    let x = chi(&g, cfg);
    t.check(x == Ok(3), || format!("chi = {x:?}, expected 3"));
    match color_p5(&g) {
        Ok((c, cert)) => t.check(
            c.palette == 3 && cert.claimed_bound == 3 && cert.omega == 2 && verify_coloring(&g, &c).proper,
            || format!("palette {} with claimed bound {}", c.palette, cert.claimed_bound),
        ),
        Err(e) => t.check(false, || e.to_string()),
    }
}

fn bull_diamond_coloring(cfg: &SuiteConfig, t: &mut Tally) {
    let results = bull_diamond_samples(cfg)
        .into_par_iter()
        .map(|s| {
            let (label, g) = s?;
            let (c, cert, traces) =
                color_bull_diamond_traced(&g, &TriangleFreeColorer::exact()).map_err(|e| format!("{label}: {e}"))?;
            let k = cert.k_used.unwrap_or(0);
            let omega = oracle::clique_number(&g);
            if !verify_coloring(&g, &c).proper {
                return Err(format!("{label}: improper coloring"));
            }
            if c.palette > (2 * k).max(omega) {
                return Err(format!("{label}: palette {} > max(2*{k}, {omega})", c.palette));
            }
            let x = chi(&g, cfg).map_err(|e| format!("{label}: {e}"))?;
            if x > c.palette {
                return Err(format!("{label}: chi {x} > palette {}", c.palette));
            }
            Ok(RouteStats::of(&traces))
        })
        .collect();
    t.absorb_routed(results);
}

/// Distances agree with a fresh BFS from `K`, the layers partition
/// `V \ K`, and every `N_1` vertex lies in exactly one `W` part.
fn layering_consistent(g: &Graph, l: &CliqueLayering) -> Result<(), String> {
    let k = l.clique_set(g);
    let bfs = g.bfs_layers(&k).map_err(|e| e.to_string())?;
    if bfs != l.dist {
        return Err("layer distances disagree with BFS".into());
    }
    let mut seen = k.clone();
    for (i, layer) in l.layers.iter().enumerate() {
        if seen.intersects(layer) {
            return Err(format!("N_{} overlaps earlier layers", i + 1));
        }
        if layer.iter().any(|v| l.dist[v] != Some(i + 1)) {
            return Err(format!("N_{} holds a vertex at another distance", i + 1));
        }
        seen.union_with(layer);
    }
    if seen.len() != g.n() {
        return Err("layers do not cover the graph".into());
    }
    if let Some(n1) = l.layer(1) {
        for x in n1 {
            let parts = l.w.iter().filter(|p| p.contains(x)).count();
            if parts != 1 {
                return Err(format!("N_1 vertex {x} lies in {parts} W parts"));
            }
        }
    }
    let expected = match l.w.iter().filter(|p| !p.is_empty()).count() {
        0 => LayeringCase::EmptyN1,
        1 => LayeringCase::SinglePart { i: 1 },
        2 => LayeringCase::TwoPart { i: 1, j: 2 },
        _ => LayeringCase::Prism,
    };
    if l.case != expected {
        return Err(format!("case {:?} does not match the nonempty W parts", l.case));
    }
    Ok(())
}

fn layering_structure(cfg: &SuiteConfig, t: &mut Tally) {
    let results: Vec<Option<Result<(), String>>> = bull_diamond_samples(cfg)
        .into_par_iter()
        .map(|s| {
            let (label, g) = match s {
                Ok(x) => x,
                Err(e) => return Some(Err(e)),
            };
            let kset = oracle::max_clique(&g);
            if kset.len() <= 2 {
                return None;
            }
            Some((|| {
                let l = clique_layering(&g, &kset).map_err(|e| format!("{label}: {e}"))?;
                layering_consistent(&g, &l).map_err(|e| format!("{label}: {e}"))?;
                let verdict = verify_lemma31(&g, &l);
                if let Some(bad) = verdict.clauses.iter().find(|c| !c.holds) {
                    return Err(format!("{label}: clause {} fails: {:?}", bad.clause, bad));
                }
                let (c, _, traces) = color_bull_diamond_traced(&g, &TriangleFreeColorer::exact())
                    .map_err(|e| format!("{label}: {e}"))?;
                for piece in traces
                    .iter()
                    .flat_map(|tr| &tr.pieces)
                    .filter(|p| p.kind == PieceKind::TriangleFree)
                {
                    let k = piece.allowed.len();
                    let lo = if piece.layer % 2 == 0 { k + 1 } else { 1 };
                    let want: Vec<usize> = (lo..lo + k).collect();
                    if piece.allowed != want {
                        return Err(format!("{label}: N_{} piece allowed {:?}", piece.layer, piece.allowed));
                    }
                    if let Some(&v) = piece
                        .vertices
                        .iter()
                        .find(|&&v| !c.color(v).is_some_and(|x| want.contains(&x)))
                    {
                        return Err(format!(
                            "{label}: vertex {v} of N_{} colored {:?}",
                            piece.layer,
                            c.color(v)
                        ));
                    }
                }
                Ok(())
            })())
        })
        .collect();
    t.absorb(results.into_iter().flatten().collect());
}

fn cycle_neighbours(cfg: &SuiteConfig, t: &mut Tally) {
    let results: Vec<(usize, Result<(), String>)> = bull_diamond_samples(cfg)
        .into_par_iter()
        .map(|s| {
            let (label, g) = match s {
                Ok(x) => x,
                Err(e) => return (0, Err(e)),
            };
            let mut cycles = 0;
            let mut bad = None;
            for_each_induced_cycle(&g, 5, |cyc| {
                cycles += 1;
                for i in 0..cyc.len() {
                    let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                    if let Some(x) = g.neighbors(a).intersection(g.neighbors(b)).first() {
                        bad = Some(format!("{label}: {x} sees {a} and {b} on cycle {cyc:?}"));
                        return false;
                    }
                }
                true
            });
            (cycles, bad.map_or(Ok(()), Err))
        })
        .collect();
    for (cycles, r) in results {
        t.checked += cycles;
        if let Err(e) = r {
            t.fail(e);
        }
    }
}

fn p5_perfection(cfg: &SuiteConfig, t: &mut Tally) {
    let family = [Pattern::Bull, Pattern::Diamond, Pattern::Path(5)];
    let results: Vec<Result<(), String>> = (0..200)
        .into_par_iter()
        .map(|i| {
            let n = 6 + i % 13;
            let spec = SamplerSpec::new(n, 0.3 + 0.1 * (i % 4) as f64, &family, stream_seed(cfg, 6, i))
                .connected()
                .with_clique(3 + i % 3)
                .with_attempts(400);
            let (label, g) = draw(spec)?;
            let omega = oracle::clique_number(&g);
            if omega < 3 {
                return Err(format!("{label}: sample has w = {omega}"));
            }
            let verdict = is_perfect(&g).map_err(|e| format!("{label}: {e}"))?;
            if !verdict.perfect {
                return Err(format!("{label}: not perfect, witness {:?}", verdict.witness));
            }
            let x = chi(&g, cfg).map_err(|e| format!("{label}: {e}"))?;
            if x != omega {
                return Err(format!("{label}: chi {x} != w {omega}"));
            }
            let (c, _) = color_p5(&g).map_err(|e| format!("{label}: {e}"))?;
            if c.palette != omega {
                return Err(format!("{label}: colorer used {} colors, w = {omega}", c.palette));
            }
            Ok(())
        })
        .collect();
    t.absorb(results);
}

fn p6_colorings(cfg: &SuiteConfig, t: &mut Tally) {
    let family = [Pattern::Bull, Pattern::Diamond, Pattern::Path(6)];
    let results: Vec<Result<(usize, RouteStats), String>> = (0..300)
        .into_par_iter()
        .map(|i| {
            let n = 8 + i % 13;
            let clique = [0, 3, 4, 5][i % 4];
            let spec = SamplerSpec::new(n, DENSITIES[(i / 4) % 4], &family, stream_seed(cfg, 7, i))
                .connected()
                .with_clique(clique)
                .with_attempts(400);
            let (label, g) = draw(spec)?;
            let omega = oracle::clique_number(&g);
            let (c, cert, traces) = color_p6_traced(&g, Strategy::Exact).map_err(|e| format!("{label}: {e}"))?;
            if !verify_coloring(&g, &c).proper {
                return Err(format!("{label}: improper coloring"));
            }
            let ok = match omega {
                0..=2 => c.palette <= 4,
                _ => c.palette == omega,
            };
            if !ok || c.palette > cert.claimed_bound {
                return Err(format!("{label}: w = {omega}, palette {}", c.palette));
            }
            Ok((omega, RouteStats::of(&traces)))
        })
        .collect();
    let mut buckets = [0usize; 3];
    for (w, _) in results.iter().flatten() {
        buckets[(*w).clamp(2, 4) - 2] += 1;
    }
    t.absorb_routed(results.into_iter().map(|r| r.map(|(_, s)| s)).collect());
    t.check(buckets.iter().all(|&b| b > 0), || {
        format!("samples per w bucket (2, 3, >=4): {buckets:?}")
    });
}

fn p7_colorings(cfg: &SuiteConfig, t: &mut Tally) {
    let family = [Pattern::Bull, Pattern::Diamond, Pattern::Path(7)];
    let results: Vec<Result<RouteStats, String>> = (0..200)
        .into_par_iter()
        .map(|i| {
            let n = 8 + i % 15;
            let mut spec = SamplerSpec::new(n, DENSITIES[i % 4], &family, stream_seed(cfg, 8, i))
                .with_clique((i / 4) % 7)
                .with_attempts(400);
            if i % 2 == 0 {
                spec = spec.connected();
            }
            let (label, g) = draw(spec)?;
            let omega = oracle::clique_number(&g);
            let (c, cert, traces) = color_p7_traced(&g, Strategy::Exact).map_err(|e| format!("{label}: {e}"))?;
            if !verify_coloring(&g, &c).proper {
                return Err(format!("{label}: improper coloring"));
            }
            if c.palette > omega.max(7) || cert.claimed_bound != omega.max(7) {
                return Err(format!("{label}: palette {} against max(7, {omega})", c.palette));
            }
            Ok(RouteStats::of(&traces))
        })
        .collect();
    t.absorb_routed(results);
}

fn bound_formulas(cfg: &SuiteConfig, t: &mut Tally) {
    let tf: Vec<Result<(), String>> = (0..300)
        .into_par_iter()
        .map(|i| {
            let n = 5 + i % 21;
            let spec = SamplerSpec::new(
                n,
                0.2 + 0.1 * (i % 4) as f64,
                &[Pattern::Triangle],
                stream_seed(cfg, 9, i),
            )
            .with_attempts(400);
            let (label, g) = draw(spec)?;
            let x = chi(&g, cfg).map_err(|e| format!("{label}: {e}"))? as f64;
            if let Some(pt) = poljak_tuza(g.n(), g.m()) {
                if x > pt {
                    return Err(format!("{label}: chi {x} > {pt:.6}"));
                }
            }
            let h = harris(g.n(), 0);
            if x > h {
                return Err(format!("{label}: chi {x} > {h:.6}"));
            }
            let report = eval_bounds(&g, &classify(&g, 5).map_err(|e| e.to_string())?);
            if let Some((name, v)) = report.asserted().find(|&(_, v)| x > v) {
                return Err(format!("{label}: chi {x} > {name} = {v:.6}"));
            }
            Ok(())
        })
        .collect();
    t.absorb(tf);
    let bd: Vec<Result<(), String>> = (0..300)
        .into_par_iter()
        .map(|i| {
            let n = 5 + i % 21;
            let spec = SamplerSpec::new(n, DENSITIES[i % 4], &BD, stream_seed(cfg, 19, i))
                .with_clique((i / 4) % 6)
                .with_attempts(400);
            let (label, g) = draw(spec)?;
            let x = chi(&g, cfg).map_err(|e| format!("{label}: {e}"))? as f64;
            let omega = oracle::clique_number(&g) as f64;
            let nm = bull_diamond_nm(g.n(), g.m()).unwrap_or(f64::INFINITY);
            if x > omega.max(nm) {
                return Err(format!("{label}: chi {x} > max({omega}, {nm:.6})"));
            }
            let report = eval_bounds(&g, &classify(&g, 5).map_err(|e| e.to_string())?);
            if let Some((name, v)) = report.asserted().find(|&(_, v)| x > v) {
                return Err(format!("{label}: chi {x} > {name} = {v:.6}"));
            }
            Ok(())
        })
        .collect();
    t.absorb(bd);
}

/// Named graphs on at most five vertices.
pub fn small_fixtures() -> Vec<(String, Graph)> {
    let mut out = vec![
        NamedGraph::Bull,
        NamedGraph::Diamond,
        NamedGraph::Paw,
        NamedGraph::Chair,
        NamedGraph::Matching(2),
        NamedGraph::Prism(2),
    ];
    out.extend((1..=5).map(NamedGraph::Path));
    out.extend((3..=5).map(NamedGraph::Cycle));
    out.extend((1..=5).map(NamedGraph::Complete));
    out.extend([(1, 3), (1, 4), (2, 2), (2, 3)].map(|(a, b)| NamedGraph::CompleteBipartite(a, b)));
    out.into_iter().map(|g| (g.to_string(), named(g))).collect()
}

fn facts(cfg: &SuiteConfig, t: &mut Tally) {
    let fixtures = small_fixtures();
    let chis: Vec<usize> = fixtures
        .iter()
        .map(|(_, g)| chi(g, cfg).unwrap_or(usize::MAX))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..fixtures.len())
        .flat_map(|i| (0..fixtures.len()).map(move |j| (i, j)))
        .collect();
    let products: Vec<Result<(), String>> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let p = fixtures[i].1.cartesian_product(&fixtures[j].1);
            let x = chi(&p, cfg)?;
            if x > chis[i].max(chis[j]) {
                return Err(format!(
                    "chi({} x {}) = {x} > max({}, {})",
                    fixtures[i].0, fixtures[j].0, chis[i], chis[j]
                ));
            }
            Ok(())
        })
        .collect();
    t.absorb(products);
    let paw: Vec<Result<(), String>> = (0..300)
        .into_par_iter()
        .map(|i| {
            let n = 4 + i % 9;
            let spec = SamplerSpec::new(n, 0.2 + 0.15 * (i % 5) as f64, &[Pattern::Paw], stream_seed(cfg, 10, i))
                .with_clique((i / 5) % 5)
                .with_attempts(400);
            let (label, g) = draw(spec)?;
            for comp in g.connected_components() {
                let (h, _) = g.induced_subgraph(&comp);
                if Pattern::Triangle.find(&h).is_some() && is_complete_multipartite(&h).is_none() {
                    return Err(format!(
                        "{label}: component {:?} has a triangle and is not complete multipartite",
                        comp.to_vec()
                    ));
                }
            }
            Ok(())
        })
        .collect();
    t.absorb(paw);
}

fn oracle_self_check(cfg: &SuiteConfig, t: &mut Tally) {
    let mut expected: Vec<(NamedGraph, usize)> = Vec::new();
    expected.extend((1..=6).map(|k| (NamedGraph::Complete(k), k)));
    expected.extend((3..=9).map(|k| (NamedGraph::Cycle(k), if k % 2 == 0 { 2 } else { 3 })));
    expected.push((NamedGraph::Grotzsch, 4));
    expected.extend((1..=5).map(|w| (NamedGraph::Prism(w), w.max(2))));
    expected.extend([(NamedGraph::Bull, 3), (NamedGraph::Diamond, 3), (NamedGraph::Paw, 3)]);
    for (g, want) in expected {
        let x = chi(&named(g), cfg);
        t.check(x == Ok(want), || format!("chi({g}) = {x:?}, expected {want}"));
    }
}
