use serde::Serialize;

use super::{BoundCertificate, ColoringError, Theorem};
use crate::graph::Graph;
use crate::oracle::{self, Coloring};
use crate::recognition::find_triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Optimal coloring by exact search.
    Exact,
    /// DSATUR, replaced by the exact search when it overshoots the budget.
    DsaturChecked,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Self::Exact),
            "dsatur" | "dsatur_checked" => Ok(Self::DsaturChecked),
            other => Err(format!("unknown strategy `{other}` (expected exact or dsatur)")),
        }
    }
}

/// The subroutine used on triangle-free pieces. `claimed_k` is the color
/// budget the caller relies on; `None` accepts whatever the strategy needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleFreeColorer {
    pub strategy: Strategy,
    pub claimed_k: Option<usize>,
}

impl TriangleFreeColorer {
    pub fn exact() -> Self {
        Self {
            strategy: Strategy::Exact,
            claimed_k: None,
        }
    }

    pub fn new(strategy: Strategy, claimed_k: Option<usize>) -> Self {
        Self { strategy, claimed_k }
    }

    pub fn with_budget(self, k: usize) -> Self {
        Self {
            claimed_k: Some(k),
            ..self
        }
    }

    /// Colors a triangle-free graph with colors `1..`; the result is proper.
    pub fn color(&self, g: &Graph) -> Result<Vec<usize>, ColoringError> {
        if let Some(t) = find_triangle(g) {
            return Err(ColoringError::ClassViolation {
                pattern: "triangle".into(),
                witness: t.to_vec(),
            });
        }
        let colors = match self.strategy {
            Strategy::Exact => exact(g)?,
            Strategy::DsaturChecked => {
                let greedy = oracle::dsatur(g);
                let used = greedy.iter().copied().max().unwrap_or(0);
                if self.claimed_k.is_some_and(|k| used > k) {
                    exact(g)?
                } else {
                    greedy
                }
            }
        };
        let used = colors.iter().copied().max().unwrap_or(0);
        if let Some(k) = self.claimed_k {
            if used > k {
                return Err(ColoringError::BudgetExceeded {
                    needed: used,
                    budget: k,
                });
            }
        }
        debug_assert!(oracle::verify_coloring(g, &Coloring::from_colors(&colors)).proper);
        Ok(colors)
    }
}

fn exact(g: &Graph) -> Result<Vec<usize>, ColoringError> {
    let (_, c) = oracle::chromatic_number_exact(g)?;
    Ok(c.assignment
        .into_iter()
        .map(|c| c.expect("exact coloring is total"))
        .collect())
}

/// Colors a triangle-free graph; the certificate claims the budget when one
/// is set and the palette otherwise.
pub fn color_triangle_free(g: &Graph, colorer: &TriangleFreeColorer) -> Result<Coloring, ColoringError> {
    let colors = colorer.color(g)?;
    let used = colors.iter().copied().max().unwrap_or(0);
    let cert = BoundCertificate {
        theorem: Theorem::TriangleFree,
        claimed_bound: colorer.claimed_k.unwrap_or(used),
        omega: oracle::clique_number(g),
        k_used: Some(used),
    };
    Ok(Coloring::from_colors(&colors).with_certificate(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn named_examples() {
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        assert_eq!(
            color_triangle_free(&c5, &TriangleFreeColorer::exact()).unwrap().palette,
            3
        );
        let gr = NamedGraph::Grotzsch.build().unwrap();
        let c = color_triangle_free(&gr, &TriangleFreeColorer::exact().with_budget(4)).unwrap();
        assert_eq!(c.palette, 4);
        let k33 = NamedGraph::CompleteBipartite(3, 3).build().unwrap();
        for s in [Strategy::Exact, Strategy::DsaturChecked] {
            assert_eq!(
                color_triangle_free(&k33, &TriangleFreeColorer::new(s, Some(2)))
                    .unwrap()
                    .palette,
                2
            );
        }
    }

    #[test]
    fn budget_and_triangles_are_enforced() {
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        assert!(matches!(
            TriangleFreeColorer::exact().with_budget(2).color(&c5),
            Err(ColoringError::BudgetExceeded { needed: 3, budget: 2 })
        ));
        let k3 = NamedGraph::Complete(3).build().unwrap();
        assert!(matches!(
            TriangleFreeColorer::exact().color(&k3),
            Err(ColoringError::ClassViolation { .. })
        ));
    }
}
