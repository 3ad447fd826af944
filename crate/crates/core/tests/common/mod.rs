//! Helpers shared by the integration tests. Each test binary uses a subset.
#![allow(dead_code)]

use distpoly::graph::Graph;
use rand::Rng;

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let perm = random_permutation(rng, n);
    Graph::from_edges(n, &edges).unwrap().relabel(&perm)
}

/// Random block graph: cliques of random size glued one at a time onto a
/// random existing vertex, until exactly `n` vertices.
pub fn random_block_graph<R: Rng>(rng: &mut R, n: usize, max_clique: usize) -> Graph {
    let mut order = 1;
    let mut edges = Vec::new();
    while order < n {
        let extra = rng.gen_range(1..max_clique.max(2)).min(n - order);
        let anchor = rng.gen_range(0..order);
        let mut members = vec![anchor];
        members.extend(order..order + extra);
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
        order += extra;
    }
    let perm = random_permutation(rng, n);
    Graph::from_edges(n, &edges).unwrap().relabel(&perm)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Floyd–Warshall on the adjacency relation.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection, after cheap invariant checks.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..n).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return false;
    }
    permutations(n).into_iter().any(|perm| {
        (0..n).all(|v| g.degree(v) == h.degree(perm[v])) && g.edges().iter().all(|&(a, b)| h.has_edge(perm[a], perm[b]))
    })
}

/// Every labelled graph on `n` vertices as a bitmask over the pairs
/// `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
