use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// The small graphs the chromatic bounds are stated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Triangle `{0,1,2}` with pendants `3` at `1` and `4` at `2`.
    Bull,
    /// `K_4` minus the edge `0-3`.
    Diamond,
    /// Triangle `{0,1,2}` with pendant `3` at `2`.
    Paw,
    /// Outer 5-cycle `0..5`, inner vertices `5..10` with `5 + i` adjacent to
    /// `i - 1` and `i + 1` (mod 5), center `10` adjacent to the inner ring.
    Grotzsch,
    /// Induced path on `t` vertices `0 - 1 - ... - (t-1)`.
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_w` x `K_2`; vertex `(a, side)` has id `2a + side`.
    Prism(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,3}` with one edge subdivided (also called the fork).
    Chair,
    /// `p` disjoint edges.
    Matching(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph, GraphError> {
        let bad = |reason: &str| GraphError::BadParameter {
            name: self.kind(),
            reason: reason.to_string(),
        };
        match self {
            Self::Bull => Graph::new(5, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
            Self::Diamond => Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
            Self::Paw => Graph::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
            Self::Grotzsch => {
                let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                for i in 0..5 {
                    edges.push((5 + i, (i + 4) % 5));
                    edges.push((5 + i, (i + 1) % 5));
                    edges.push((5 + i, 10));
                }
                Graph::new(11, &edges)
            }
            Self::Path(t) => {
                if t == 0 {
                    return Err(bad("path needs t >= 1"));
                }
                let edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
                Graph::new(t, &edges)
            }
            Self::Cycle(t) => {
                if t < 3 {
                    return Err(bad("cycle needs t >= 3"));
                }
                let edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
                Graph::new(t, &edges)
            }
            Self::Complete(t) => {
                if t == 0 {
                    return Err(bad("complete graph needs t >= 1"));
                }
                let edges: Vec<_> = (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))).collect();
                Graph::new(t, &edges)
            }
            Self::Prism(w) => {
                if w == 0 {
                    return Err(bad("prism needs omega >= 1"));
                }
                Ok(Self::Complete(w)
                    .build()?
                    .cartesian_product(&Self::Complete(2).build()?))
            }
            Self::CompleteBipartite(a, b) => {
                if a + b == 0 {
                    return Err(bad("complete bipartite graph needs a + b >= 1"));
                }
                let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
                Graph::new(a + b, &edges)
            }
            Self::Chair => Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
            Self::Matching(p) => {
                if p == 0 {
                    return Err(bad("matching needs p >= 1"));
                }
                let edges: Vec<_> = (0..p).map(|i| (2 * i, 2 * i + 1)).collect();
                Graph::new(2 * p, &edges)
            }
        }
    }

    fn kind(self) -> &'static str {
        match self {
            Self::Bull => "bull",
            Self::Diamond => "diamond",
            Self::Paw => "paw",
            Self::Grotzsch => "grotzsch",
            Self::Path(_) => "path",
            Self::Cycle(_) => "cycle",
            Self::Complete(_) => "complete",
            Self::Prism(_) => "prism",
            Self::CompleteBipartite(..) => "complete_bipartite",
            Self::Chair => "chair",
            Self::Matching(_) => "matching",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Path(t) | Self::Cycle(t) | Self::Complete(t) | Self::Prism(t) | Self::Matching(t) => {
                write!(f, "{}({t})", self.kind())
            }
            Self::CompleteBipartite(a, b) => write!(f, "{}({a},{b})", self.kind()),
            _ => f.write_str(self.kind()),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    /// Accepts `bull`, `grotzsch`, `path(6)`, `complete_bipartite(2,3)`, ...
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let s = s.trim().to_ascii_lowercase();
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
            _ => (s.as_str(), ""),
        };
        let nums: Result<Vec<usize>, _> = args
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| a.trim().parse::<usize>())
            .collect();
        let bad = |reason: String| GraphError::BadParameter {
            name: "named graph",
            reason,
        };
        let nums = nums.map_err(|e| bad(format!("`{s}`: {e}")))?;
        let one = || match nums.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad(format!("`{head}` takes one argument"))),
        };
        Ok(match head {
            "bull" => Self::Bull,
            "diamond" => Self::Diamond,
            "paw" => Self::Paw,
            "grotzsch" | "groetzsch" => Self::Grotzsch,
            "chair" | "fork" => Self::Chair,
            "path" => Self::Path(one()?),
            "cycle" => Self::Cycle(one()?),
            "complete" => Self::Complete(one()?),
            "prism" => Self::Prism(one()?),
            "matching" => Self::Matching(one()?),
            "complete_bipartite" => match nums.as_slice() {
                [a, b] => Self::CompleteBipartite(*a, *b),
                _ => return Err(bad("complete_bipartite takes two arguments".into())),
            },
            other => return Err(bad(format!("unknown graph `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles(g: &Graph) -> usize {
        let n = g.n();
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    #[test]
    fn sizes() {
        let cases = [
            (NamedGraph::Bull, 5, 5, 1),
            (NamedGraph::Diamond, 4, 5, 2),
            (NamedGraph::Paw, 4, 4, 1),
            (NamedGraph::Grotzsch, 11, 20, 0),
            (NamedGraph::Prism(3), 6, 9, 2),
            (NamedGraph::CompleteBipartite(2, 3), 5, 6, 0),
            (NamedGraph::Chair, 5, 4, 0),
        ];
        for (g, n, m, t) in cases {
            let built = g.build().unwrap();
            assert_eq!((built.n(), built.m(), triangles(&built)), (n, m, t), "{g}");
        }
    }

    #[test]
    fn grotzsch_is_regular_where_expected() {
        let g = NamedGraph::Grotzsch.build().unwrap();
        let degs: Vec<_> = (0..11).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 5]);
    }

    #[test]
    fn parse_round_trip() {
        for g in [
            NamedGraph::Bull,
            NamedGraph::Path(6),
            NamedGraph::CompleteBipartite(2, 3),
            NamedGraph::Prism(4),
            NamedGraph::Grotzsch,
        ] {
            assert_eq!(g.to_string().parse::<NamedGraph>().unwrap(), g);
        }
        assert!("cycle(2)".parse::<NamedGraph>().unwrap().build().is_err());
        assert!("nope".parse::<NamedGraph>().is_err());
    }
}
