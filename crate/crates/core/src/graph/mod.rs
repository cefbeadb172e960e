//! Simple undirected graphs over dense vertex ids `0..n`, with one neighbor
//! bitset per vertex.

mod named;
mod set;

pub use named::NamedGraph;
pub use set::{Iter as VertexSetIter, VertexSet};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter for {name}: {reason}")]
    BadParameter { name: &'static str, reason: String },
    #[error("source set for a distance search is empty")]
    EmptySource,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge sequence. Duplicate pairs collapse, and the
    /// result does not depend on edge order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![VertexSet::new(n); n])
    }

    /// Adjacency rows must already be symmetric and loop-free.
    fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self { adj, m }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, items: I) -> VertexSet {
        VertexSet::from_iter_in(self.n(), items)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbors of `v` restricted to `within`.
    pub fn neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        self.adj[v].intersection(within)
    }

    /// N(S): vertices outside `s` with a neighbor in `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in ascending order.
    /// The returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Self, Vec<usize>) {
        let map = s.to_vec();
        let k = map.len();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| VertexSet::from_iter_in(k, self.adj[v].intersection(s).iter().map(|u| index[u])))
            .collect();
        (Self::from_adjacency(adj), map)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.n(), &edges).expect("relabeling by a permutation keeps edges valid")
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.n();
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
            .collect();
        Self::new(off + other.n(), &edges).expect("union of valid graphs is valid")
    }

    /// Cartesian product. Vertex `(a, u)` gets id `a * other.n() + u`.
    pub fn cartesian_product(&self, other: &Self) -> Self {
        let h = other.n();
        let mut edges = Vec::new();
        for a in 0..self.n() {
            for (u, v) in other.edges() {
                edges.push((a * h + u, a * h + v));
            }
        }
        for (a, b) in self.edges() {
            for u in 0..h {
                edges.push((a * h + u, b * h + u));
            }
        }
        Self::new(self.n() * h, &edges).expect("product edges are in range")
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_of(0).len() == self.n()
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = self.empty_set();
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left.difference_with(&c);
            out.push(c);
        }
        out
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = self.empty_set();
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.empty_set();
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Distance from every vertex to the set `sources`; `None` when unreachable.
    pub fn bfs_layers(&self, sources: &VertexSet) -> Result<Vec<Option<usize>>, GraphError> {
        if sources.is_empty() {
            return Err(GraphError::EmptySource);
        }
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have a distance");
            for u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_dedups_and_ignores_order() {
        let g = Graph::new(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.n(), 4);
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let b = Graph::new(4, &[(3, 2), (0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, NamedGraph::Paw.build().unwrap());
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert!(g.is_connected());
    }

    #[test]
    fn components() {
        let bull = NamedGraph::Bull.build().unwrap();
        assert_eq!(bull.connected_components().len(), 1);
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let sizes: Vec<_> = g.connected_components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 1]);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
    }

    #[test]
    fn bfs_distances() {
        let p5 = NamedGraph::Path(5).build().unwrap();
        let d = p5.bfs_layers(&p5.set_of([0])).unwrap();
        assert_eq!(d, (0..5).map(Some).collect::<Vec<_>>());
        let all = p5.bfs_layers(&p5.vertices()).unwrap();
        assert!(all.iter().all(|&x| x == Some(0)));
        assert_eq!(p5.bfs_layers(&p5.empty_set()), Err(GraphError::EmptySource));
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.bfs_layers(&g.set_of([0])).unwrap()[2], None);
    }

    #[test]
    fn prism_side_is_one_step_from_the_other() {
        // prism(3): ids a*2+side; side 0 is {0,2,4}
        let p = NamedGraph::Prism(3).build().unwrap();
        let d = p.bfs_layers(&p.set_of([0, 2, 4])).unwrap();
        for v in [1, 3, 5] {
            assert_eq!(d[v], Some(1));
        }
    }

    #[test]
    fn product_counts() {
        let k3 = NamedGraph::Complete(3).build().unwrap();
        let k2 = NamedGraph::Complete(2).build().unwrap();
        let p = k3.cartesian_product(&k2);
        // brute force over the pair grid
        let mut expected = 0;
        for x in 0..6 {
            for y in x + 1..6 {
                let (a, u, b, v) = (x / 2, x % 2, y / 2, y % 2);
                if (a == b && k2.has_edge(u, v)) || (u == v && k3.has_edge(a, b)) {
                    expected += 1;
                }
            }
        }
        assert_eq!((p.n(), p.m()), (6, 9));
        assert_eq!(p.m(), expected);
        let k1 = Graph::empty(1);
        let bull = NamedGraph::Bull.build().unwrap();
        assert_eq!(k1.cartesian_product(&bull), bull);
    }

    #[test]
    fn induced_subgraph_of_everything_is_identity() {
        let g = NamedGraph::Grotzsch.build().unwrap();
        let (h, map) = g.induced_subgraph(&g.vertices());
        assert_eq!(h, g);
        assert_eq!(map, (0..11).collect::<Vec<_>>());
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        let co = c5.complement();
        assert_eq!(co.m(), 5);
        assert!((0..5).all(|v| co.degree(v) == 2));
        assert_eq!(co.complement(), c5);
    }
}
