//! Simple graphs, graph powers, t-path enumeration and path ideals.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

/// Guard on the number of partial sequences visited during t-path
/// enumeration.
pub const PATH_ENUMERATION_CAP: usize = 10_000_000;

/// An undirected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct SimpleGraph {
    num_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// JSON form `{"n": int, "edges": [[i, j], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<SimpleGraph> for GraphRepr {
    fn from(g: SimpleGraph) -> Self {
        GraphRepr {
            n: g.num_vertices,
            edges: g.edges.into_iter().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for SimpleGraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        SimpleGraph::new(repr.n, repr.edges)
    }
}

impl SimpleGraph {
    /// Build a graph, normalizing edges to `(min, max)` pairs and
    /// rejecting loops and out-of-range endpoints.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > num_vertices {
                    return Err(Error::VariableOutOfRange { index: v, num_vars: num_vertices });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph { num_vertices, edges: set })
    }

    /// The path on `n` vertices, edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        SimpleGraph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable
    /// vertices. Index 0 is unused.
    fn distances_from(&self, source: usize, adj: &[Vec<usize>]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices + 1];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The k-th power: same vertices, an edge wherever the distance in
    /// `self` is between 1 and `k`.
    pub fn power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("graph power must be at least 1".into()));
        }
        let adj = self.adjacency();
        let mut edges = BTreeSet::new();
        for source in 1..=self.num_vertices {
            let dist = self.distances_from(source, &adj);
            for (target, &d) in dist.iter().enumerate().skip(source + 1) {
                if d >= 1 && d <= k {
                    edges.insert((source, target));
                }
            }
        }
        Ok(SimpleGraph { num_vertices: self.num_vertices, edges })
    }

    /// All paths on `t` distinct vertices, each listed once up to
    /// reversal, together with their squarefree monomials.
    pub fn t_paths(&self, t: usize) -> Result<Vec<TPath>> {
        if t < 2 {
            return Err(Error::InvalidParameter("t-paths need t >= 2".into()));
        }
        let adj = self.adjacency();
        let mut found = Vec::new();
        let mut sequence = Vec::with_capacity(t);
        let mut visited = vec![false; self.num_vertices + 1];
        let mut budget = PATH_ENUMERATION_CAP;
        for start in 1..=self.num_vertices {
            sequence.push(start);
            visited[start] = true;
            extend_path(self, &adj, &mut sequence, &mut visited, t, &mut found, &mut budget)?;
            visited[start] = false;
            sequence.pop();
        }
        found.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(found)
    }

    /// The t-path ideal: one squarefree generator per t-path vertex set,
    /// in the ring on the graph's vertices.
    pub fn path_ideal(&self, t: usize) -> Result<MonomialIdeal> {
        let ring = RingContext::new(self.num_vertices)?;
        let gens = self.t_paths(t)?.into_iter().map(|p| p.monomial).collect();
        MonomialIdeal::minimalize(ring, gens)
    }

    /// The edge ideal, generated by `x_i x_j` over the edges.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let ring = RingContext::new(self.num_vertices)?;
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_support(self.num_vertices, &[a, b]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(ring, gens)
    }
}

/// A t-path as its vertex sequence (canonical direction: first endpoint
/// smaller than the last) plus the induced squarefree monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPath {
    pub vertices: Vec<usize>,
    pub monomial: Monomial,
}

fn extend_path(
    graph: &SimpleGraph,
    adj: &[Vec<usize>],
    sequence: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    t: usize,
    found: &mut Vec<TPath>,
    budget: &mut usize,
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::PathEnumerationCap(PATH_ENUMERATION_CAP));
    }
    *budget -= 1;
    if sequence.len() == t {
        // Each undirected path is visited once per direction; keep the
        // one whose first endpoint is smaller.
        if sequence[0] < sequence[t - 1] {
            let monomial = Monomial::from_support(graph.num_vertices, sequence)?;
            found.push(TPath { vertices: sequence.clone(), monomial });
        }
        return Ok(());
    }
    let last = *sequence.last().unwrap();
    for &next in &adj[last] {
        if !visited[next] {
            sequence.push(next);
            visited[next] = true;
            extend_path(graph, adj, sequence, visited, t, found, budget)?;
            visited[next] = false;
            sequence.pop();
        }
    }
    Ok(())
}

/// `I_t((P_n)^k)`, the t-path ideal of the k-th power of the path on
/// `n` vertices. Defaults `k = 2`, `t = 3` give the squared-path family.
pub fn power_path_ideal(n: usize, k: usize, t: usize) -> Result<MonomialIdeal> {
    SimpleGraph::path(n)?.power(k)?.path_ideal(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squared_path(n: usize) -> SimpleGraph {
        SimpleGraph::path(n).unwrap().power(2).unwrap()
    }

    #[test]
    fn path_graph_edges() {
        assert_eq!(SimpleGraph::path(1).unwrap().num_edges(), 0);
        assert_eq!(
            SimpleGraph::path(2).unwrap().edges().collect::<Vec<_>>(),
            vec![(1, 2)]
        );
        assert_eq!(
            SimpleGraph::path(5).unwrap().edges().collect::<Vec<_>>(),
            vec![(1, 2), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert!(SimpleGraph::new(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, [(1, 4)]).is_err());
    }

    #[test]
    fn squared_path_edges() {
        let g = squared_path(5);
        let expected: Vec<(usize, usize)> =
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn power_one_is_identity() {
        let g = SimpleGraph::path(6).unwrap();
        assert_eq!(g.power(1).unwrap(), g);
    }

    #[test]
    fn high_power_is_complete() {
        let g = SimpleGraph::path(4).unwrap().power(3).unwrap();
        assert_eq!(g.num_edges(), 6);
    }

    #[test]
    fn power_edges_match_bfs_distance() {
        // For squared paths the closed form is |j - i| <= 2; check it
        // against the BFS definition for every n up to 50.
        for n in 1..=50 {
            let g = squared_path(n);
            for i in 1..=n {
                for j in (i + 1)..=n {
                    assert_eq!(g.has_edge(i, j), j - i <= 2, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn power_monotone_in_k() {
        let g = SimpleGraph::path(9).unwrap();
        for k in 1..8 {
            let small = g.power(k).unwrap();
            let large = g.power(k + 1).unwrap();
            for e in small.edges() {
                assert!(large.has_edge(e.0, e.1));
            }
        }
        // Complete once k reaches the diameter.
        assert_eq!(g.power(8).unwrap().num_edges(), 9 * 8 / 2);
    }

    #[test]
    fn t_paths_on_plain_path() {
        let paths = SimpleGraph::path(3).unwrap().t_paths(3).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices, vec![1, 2, 3]);
    }

    #[test]
    fn t_path_monomials_on_squared_paths() {
        let distinct = |n: usize| {
            let mut monomials: Vec<_> = squared_path(n)
                .t_paths(3)
                .unwrap()
                .into_iter()
                .map(|p| p.monomial)
                .collect();
            monomials.sort();
            monomials.dedup();
            monomials
        };
        assert_eq!(distinct(5).len(), 8);

        let on4 = distinct(4);
        let expected: Vec<_> = [[1, 2, 3], [2, 3, 4], [1, 3, 4], [1, 2, 4]]
            .iter()
            .map(|s| Monomial::from_support(4, s).unwrap())
            .collect();
        for m in &expected {
            assert!(on4.contains(m));
        }
        assert_eq!(on4.len(), 4);
    }

    #[test]
    fn path_ideal_small_cases() {
        let i3 = power_path_ideal(3, 2, 3).unwrap();
        assert_eq!(i3, MonomialIdeal::parse("x1*x2*x3", Some(3)).unwrap());

        let i5 = power_path_ideal(5, 2, 3).unwrap();
        let expected = MonomialIdeal::parse(
            "x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x3*x4, x2*x4*x5, x1*x2*x4, x2*x3*x5, x1*x3*x5",
            Some(5),
        )
        .unwrap();
        assert_eq!(i5, expected);
    }

    #[test]
    fn path_ideal_generator_count() {
        // Brute-force enumeration agrees with the closed count 4n - 12.
        for n in 4..=12 {
            let ideal = power_path_ideal(n, 2, 3).unwrap();
            assert_eq!(ideal.generators().len(), 4 * n - 12, "n = {n}");
        }
    }

    #[test]
    fn path_ideal_generators_are_squarefree_of_degree_t() {
        for (n, t) in [(7, 3), (8, 4), (9, 2)] {
            let ideal = power_path_ideal(n, 2, t).unwrap();
            for g in ideal.generators() {
                assert!(g.is_squarefree());
                assert_eq!(g.degree() as usize, t);
            }
        }
    }

    #[test]
    fn path_ideal_matches_four_families() {
        // Generators of the 3-path ideal of a squared path split into
        // the four arithmetic families {i,i+1,i+2}, {i,i+2,i+3},
        // {i,i+1,i+3} and {i,i+2,i+4}.
        for n in 3..=10usize {
            let mut expected = Vec::new();
            for i in 1..=n {
                for offsets in [[0, 1, 2], [0, 2, 3], [0, 1, 3], [0, 2, 4]] {
                    if i + offsets[2] <= n {
                        let support: Vec<usize> = offsets.iter().map(|o| i + o).collect();
                        expected.push(Monomial::from_support(n, &support).unwrap());
                    }
                }
            }
            let ring = RingContext::new(n).unwrap();
            let expected = MonomialIdeal::minimalize(ring, expected).unwrap();
            assert_eq!(power_path_ideal(n, 2, 3).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn no_t_path_gives_zero_ideal() {
        let ideal = SimpleGraph::path(2).unwrap().path_ideal(3).unwrap();
        assert!(ideal.is_zero());
    }

    #[test]
    fn edge_ideal_equals_two_path_ideal() {
        let g = squared_path(6);
        assert_eq!(g.edge_ideal().unwrap(), g.path_ideal(2).unwrap());

        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(
            p3.edge_ideal().unwrap(),
            MonomialIdeal::parse("x1*x2, x2*x3", Some(3)).unwrap()
        );

        let edgeless = SimpleGraph::new(4, []).unwrap();
        assert!(edgeless.edge_ideal().unwrap().is_zero());
    }

    #[test]
    fn graph_json_roundtrip() {
        let g = squared_path(4);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[2,4],[3,4]]}"#);
        let back: SimpleGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
    }
}
