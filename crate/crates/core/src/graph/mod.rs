//! Simple undirected graphs on dense vertex indices `0..n`, their distance
//! matrices, block decomposition and the two composition operations used by
//! the rest of the crate.

mod blocks;
mod canon;
mod graph6;

pub use blocks::{block_cut_tree, first_non_clique_block, is_block_graph, BlockCutTree};
pub use canon::{canonical_form, canonical_graph6, canonical_labeling};
pub use graph6::{decode_graph6, encode_graph6};

use std::collections::VecDeque;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// Simple, loop-free undirected graph. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    connected: bool,
}

impl Graph {
    /// Validates the edge list: endpoints in range, no loops, no repeated
    /// pairs (in either orientation). Connectivity is recorded, not required.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        let connected = bfs_distances(&adj, 0).iter().all(|d| d.is_some());
        Ok(Graph { adj, edges: normalized, connected })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).expect("no edges to validate")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("complete graph is valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.size() + 1 == self.order()
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.order(), &edges).expect("relabeling preserves validity")
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is valid")
    }

    /// All-pairs shortest path lengths by BFS from every vertex.
    pub fn distances(&self) -> Result<Vec<Vec<u32>>, GraphError> {
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        Ok((0..self.order())
            .map(|s| bfs_distances(&self.adj, s).into_iter().map(|d| d.expect("connected graph")).collect())
            .collect())
    }

    /// Edge-list text: `n m` followed by `m` lines `u v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |line: usize, text: &str| -> Result<(usize, usize), GraphError> {
            let nums: Vec<_> = text.split_whitespace().map(str::parse::<usize>).collect();
            match nums.as_slice() {
                [Ok(a), Ok(b)] => Ok((*a, *b)),
                _ => Err(GraphError::EdgeList {
                    line,
                    message: format!("expected two non-negative integers, got `{text}`"),
                }),
            }
        };
        let (line, header) =
            lines.next().ok_or(GraphError::EdgeList { line: 1, message: "missing `n m` header".into() })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = lines.next().ok_or(GraphError::EdgeList {
                line: line + edges.len() + 1,
                message: format!("expected {m} edges, found {}", edges.len()),
            })?;
            edges.push(parse_pair(line, text)?);
        }
        if let Some((line, _)) = lines.next() {
            return Err(GraphError::EdgeList { line, message: "more edges than declared".into() });
        }
        Graph::from_edges(n, &edges)
    }
}

fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    if adj.is_empty() {
        return dist;
    }
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices are labeled");
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Distance matrix of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix, GraphError> {
    let d = g.distances()?;
    Ok(IntMatrix::from_fn(g.order(), |i, j| BigInt::from(d[i][j])))
}

/// Cartesian product: vertex `(a, x)` is numbered `a·|V(h)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(g.size() * nh + h.size() * g.order());
    for &(a, b) in g.edges() {
        for x in 0..nh {
            edges.push((a * nh + x, b * nh + x));
        }
    }
    for a in 0..g.order() {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    Graph::from_edges(g.order() * nh, &edges).expect("product edges are distinct")
}

/// Glues `h` onto `g` by identifying `h`'s vertex `v` with `g`'s vertex `u`.
/// `g` keeps its labels; the remaining vertices of `h` follow in order.
pub fn one_point_union(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph, GraphError> {
    if u >= g.order() {
        return Err(GraphError::OutOfRange { vertex: u, order: g.order() });
    }
    if v >= h.order() {
        return Err(GraphError::OutOfRange { vertex: v, order: h.order() });
    }
    let ng = g.order();
    let map = |w: usize| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => ng + w,
        std::cmp::Ordering::Greater => ng + w - 1,
    };
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(a, b)| (map(a), map(b))));
    Graph::from_edges(ng + h.order() - 1, &edges)
}
