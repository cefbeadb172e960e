//! Closed-form chromatic bounds and table lookups.
//!
//! Logarithms are natural. A term whose logarithm argument is at most 1 is
//! undefined; an entry made of several terms takes the minimum of the
//! defined ones and is undefined only when none is.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, NamedGraph};
use crate::oracle;
use crate::recognition::{contains_induced, ClassReport};

/// Edge count above which the induced matching number is not computed.
pub const INDUCED_MATCHING_EDGE_LIMIT: usize = 160;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("parameter out of range for {family}: {reason}")]
    Parameter { family: String, reason: String },
    #[error("unknown family `{0}` (expected p<t>, k1r<r>, pk2<p> or chair)")]
    UnknownFamily(String),
}

/// A row of the path table or the forbidden-subgraph table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Pt(usize),
    K1r(usize),
    PK2(usize),
    Chair,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pt(t) => write!(f, "p{t}"),
            Self::K1r(r) => write!(f, "k1r{r}"),
            Self::PK2(p) => write!(f, "pk2{p}"),
            Self::Chair => f.write_str("chair"),
        }
    }
}

impl FromStr for Family {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let num = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| BoundsError::UnknownFamily(s.to_string()))
        };
        if lower == "chair" {
            Ok(Self::Chair)
        } else if let Some(rest) = lower.strip_prefix("k1r") {
            Ok(Self::K1r(num(rest)?))
        } else if let Some(rest) = lower.strip_prefix("pk2") {
            Ok(Self::PK2(num(rest)?))
        } else if let Some(rest) = lower.strip_prefix('p') {
            Ok(Self::Pt(num(rest)?))
        } else {
            Err(BoundsError::UnknownFamily(s.to_string()))
        }
    }
}

/// The tabulated chromatic bound for `(F, bull, diamond)`-free graphs with
/// clique number `omega`.
pub fn table_bound(family: Family, omega: usize) -> Result<usize, BoundsError> {
    let bad = |reason: &str| BoundsError::Parameter {
        family: family.to_string(),
        reason: reason.to_string(),
    };
    Ok(match family {
        Family::Pt(t) if t < 5 => return Err(bad("needs t >= 5")),
        Family::Pt(5) => omega.max(3),
        Family::Pt(6) => {
            if omega == 2 {
                4
            } else {
                omega
            }
        }
        Family::Pt(7) => omega.max(7),
        Family::Pt(t) => omega.max(2 * t - 4),
        Family::K1r(0) => return Err(bad("needs r >= 1")),
        Family::K1r(r) => omega.max(6).max(2 * r),
        Family::PK2(0) => return Err(bad("needs p >= 1")),
        Family::PK2(p) => omega.max(4 * p - 4),
        Family::Chair => omega.max(6),
    })
}

fn ln_term(arg: f64) -> Option<f64> {
    (arg > 1.0).then(|| arg.ln())
}

fn min_defined(terms: &[Option<f64>]) -> Option<f64> {
    terms.iter().flatten().copied().reduce(f64::min)
}

pub fn poljak_tuza(n: usize, m: usize) -> Option<f64> {
    let (n, m) = (n as f64, m as f64);
    min_defined(&[
        ln_term(n).map(|l| 4.0 * (n / l).sqrt()),
        ln_term(m).map(|l| 14.0 * m.cbrt() / l.powf(2.0 / 3.0)),
    ])
}

pub fn harris(n: usize, triangles: usize) -> f64 {
    2.0 * (n as f64).sqrt() + (6.0 * triangles as f64).cbrt()
}

/// The `n`/`m` bound for (bull, diamond)-free graphs that are not
/// `w`-colorable.
pub fn bull_diamond_nm(n: usize, m: usize) -> Option<f64> {
    let (nf, mf) = (n as f64, m as f64);
    let root = (n > 0).then(|| 4.0 * nf.sqrt());
    min_defined(&[
        root,
        ln_term(nf).map(|l| 8.0 * (nf / l).sqrt()),
        ln_term(mf).map(|l| 28.0 * mf.cbrt() / l.powf(2.0 / 3.0)),
    ])
}

/// `factor * D / ln D`, the leading term of the degree bounds.
pub fn degree_form(max_degree: usize, factor: f64) -> Option<f64> {
    let d = max_degree as f64;
    ln_term(d).map(|l| factor * d / l)
}

/// A real bound that serializes with six decimals, or as `"undefined"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed(pub Option<f64>);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Some(v) if v.is_finite() => {
                let raw =
                    serde_json::value::RawValue::from_string(format!("{v:.6}")).map_err(serde::ser::Error::custom)?;
                raw.serialize(s)
            }
            _ => s.serialize_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub value: Fixed,
    /// Whether the hypotheses of the bound hold for this graph.
    pub applicable: bool,
    /// Stated only up to a `1 + o(1)` factor; never compared against `chi`.
    pub asymptotic_only: bool,
    /// The graph is either `w`-colorable or below `value`; compare `chi`
    /// against `max(w, value)`.
    pub or_omega: bool,
}

impl BoundEntry {
    fn plain(value: Option<f64>, applicable: bool) -> Self {
        Self {
            value: Fixed(value),
            applicable,
            asymptotic_only: false,
            or_omega: false,
        }
    }

    /// The number `chi` must not exceed, when the entry makes a claim.
    pub fn asserted(&self, omega: usize) -> Option<f64> {
        if !self.applicable || self.asymptotic_only {
            return None;
        }
        let v = self.value.0?;
        Some(if self.or_omega { v.max(omega as f64) } else { v })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundInputs {
    pub n: usize,
    pub m: usize,
    pub triangles: usize,
    pub max_degree: usize,
    pub omega: usize,
    pub bull_free: bool,
    pub diamond_free: bool,
    pub triangle_free: bool,
    pub path_probe: usize,
    pub path_free: bool,
    pub chair_free: bool,
    /// Smallest `r` with the graph `K_{1,r}`-free.
    pub star_r: usize,
    /// Smallest `p` with the graph `pK_2`-free, when computed.
    pub matching_p: Option<usize>,
    /// Clique number of each component, largest component first.
    pub component_omegas: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    pub bounds: BTreeMap<String, BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.get(name)
    }

    /// Entries that make a finite claim, with the claimed value.
    pub fn asserted(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.bounds
            .iter()
            .filter_map(|(k, e)| e.asserted(self.inputs.omega).map(|v| (k.as_str(), v)))
    }
}

/// Largest independent set inside any neighborhood.
fn max_neighborhood_alpha(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let (sub, _) = g.induced_subgraph(g.neighbors(v));
            if sub.n() == 0 {
                0
            } else {
                oracle::clique_number(&sub.complement())
            }
        })
        .max()
        .unwrap_or(0)
}

/// Largest induced matching, by a clique search in the compatibility graph
/// of the edges.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut compatible = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let touch = [a, b]
                .iter()
                .any(|&x| x == c || x == d || g.has_edge(x, c) || g.has_edge(x, d));
            if !touch {
                compatible.push((i, j));
            }
        }
    }
    let h = Graph::new(edges.len(), &compatible).expect("edge indices are in range");
    if h.n() == 0 {
        0
    } else {
        oracle::clique_number(&h)
    }
}

pub fn eval_bounds(g: &Graph, report: &ClassReport) -> BoundReport {
    let chair = NamedGraph::Chair.build().expect("chair is valid");
    let chair_free = contains_induced(g, &chair).is_none();
    let star_r = max_neighborhood_alpha(g) + 1;
    let matching_p = (g.m() <= INDUCED_MATCHING_EDGE_LIMIT).then(|| induced_matching_number(g) + 1);
    let mut comps = g.connected_components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let component_omegas: Vec<usize> = comps
        .iter()
        .map(|c| oracle::clique_number(&g.induced_subgraph(c).0))
        .collect();
    let inputs = BoundInputs {
        n: g.n(),
        m: g.m(),
        triangles: report.triangle_count,
        max_degree: g.max_degree(),
        omega: report.omega,
        bull_free: report.bull_free,
        diamond_free: report.diamond_free,
        triangle_free: report.triangle_free,
        path_probe: report.path_probe,
        path_free: report.path_free,
        chair_free,
        star_r,
        matching_p,
        component_omegas,
    };
    let bd = inputs.bull_free && inputs.diamond_free;
    let (t, omega) = (inputs.path_probe, inputs.omega);
    let mut bounds = BTreeMap::new();
    let mut put = |name: &str, e: BoundEntry| {
        bounds.insert(name.to_string(), e);
    };

    put(
        "poljak_tuza",
        BoundEntry::plain(poljak_tuza(inputs.n, inputs.m), inputs.triangle_free),
    );
    put(
        "harris",
        BoundEntry::plain(Some(harris(inputs.n, inputs.triangles)), true),
    );
    put(
        "bull_diamond_nm",
        BoundEntry {
            or_omega: true,
            ..BoundEntry::plain(bull_diamond_nm(inputs.n, inputs.m), bd)
        },
    );
    put(
        "molloy_triangle_free",
        BoundEntry {
            asymptotic_only: true,
            ..BoundEntry::plain(degree_form(inputs.max_degree, 1.0), inputs.triangle_free)
        },
    );
    put(
        "bull_diamond_degree",
        BoundEntry {
            asymptotic_only: true,
            or_omega: true,
            ..BoundEntry::plain(degree_form(inputs.max_degree, 2.0), bd)
        },
    );

    let pt = inputs.path_free;
    let exp = omega.saturating_sub(1) as i32;
    put(
        "gyarfas",
        BoundEntry::plain(Some(((t as f64) - 1.0).powi(exp)), pt && t >= 2),
    );
    put(
        "gravier_hoang_maffray",
        BoundEntry::plain(Some(((t as f64) - 2.0).powi(exp)), pt && t >= 4),
    );
    put(
        "path_linear",
        BoundEntry::plain(Some(omega.max((2 * t).saturating_sub(4)) as f64), pt && bd && t >= 2),
    );
    // Per component: the t = 6 row is not monotone in w.
    let table1 = (t >= 5).then(|| {
        inputs
            .component_omegas
            .iter()
            .map(|&w| table_bound(Family::Pt(t), w).expect("t >= 5"))
            .max()
            .unwrap_or(0) as f64
    });
    put("table1", BoundEntry::plain(table1, pt && bd && t >= 5));

    let k1r = table_bound(Family::K1r(star_r), omega).ok().map(|v| v as f64);
    put("table2_star", BoundEntry::plain(k1r, bd));
    let pk2 = matching_p
        .and_then(|p| table_bound(Family::PK2(p), omega).ok())
        .map(|v| v as f64);
    put("table2_matching", BoundEntry::plain(pk2, bd && pk2.is_some()));
    put(
        "table2_chair",
        BoundEntry::plain(
            Some(table_bound(Family::Chair, omega).expect("valid") as f64),
            bd && chair_free,
        ),
    );

    BoundReport { inputs, bounds }
}
