//! Named graph families and exhaustive enumeration of small block graphs.
//!
//! Vertex labelings are fixed so that reports are reproducible:
//!
//! * `windmill(k, t)`: vertex 0 is the shared vertex, clique `i` occupies
//!   `0` together with `1 + i(t−1) .. (i+1)(t−1)`.
//! * `barbell(t, ℓ)`: clique A on `0..t`, the path runs from `t−1` to
//!   `t+ℓ−2`, clique B on `t+ℓ−2 .. 2t+ℓ−2`.
//! * `lollipop(t, ℓ)`: clique on `0..t`, path from `t−1` to `t+ℓ−2`.
//! * `block_path(b, t)`: clique `i` on `i(t−1) ..= (i+1)(t−1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{canonical_form, canonical_graph6, cartesian_product, one_point_union, Graph};

/// Largest order accepted by [`enumerate_block_graphs`] unless a caller
/// raises the cap explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const CONNECTED_ENUMERATION_CAP: usize = 8;

/// Hamming graphs are built densely; refuse anything above this order.
pub const HAMMING_ORDER_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} needs parameter `{param}`")]
    MissingParam { family: FamilyKind, param: &'static str },
    #[error("{family}: parameter `{param}` = {value} is below the minimum {min}")]
    OutOfRange { family: FamilyKind, param: &'static str, value: usize, min: usize },
    #[error("Prüfer entry {value} at position {position} is not below {order}")]
    Pruefer { position: usize, value: usize, order: usize },
    #[error("{what} would have {order} vertices, above the cap {cap}")]
    TooLarge { what: &'static str, order: usize, cap: usize },
    #[error("unknown family `{0}`")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Clique,
    Path,
    Star,
    TreePruefer,
    Hamming,
    Hypercube,
    Windmill,
    Friendship,
    Barbell,
    Lollipop,
    BlockPath,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 11] = [
        FamilyKind::Clique,
        FamilyKind::Path,
        FamilyKind::Star,
        FamilyKind::TreePruefer,
        FamilyKind::Hamming,
        FamilyKind::Hypercube,
        FamilyKind::Windmill,
        FamilyKind::Friendship,
        FamilyKind::Barbell,
        FamilyKind::Lollipop,
        FamilyKind::BlockPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Clique => "clique",
            FamilyKind::Path => "path",
            FamilyKind::Star => "star",
            FamilyKind::TreePruefer => "tree_pruefer",
            FamilyKind::Hamming => "hamming",
            FamilyKind::Hypercube => "hypercube",
            FamilyKind::Windmill => "windmill",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Barbell => "barbell",
            FamilyKind::Lollipop => "lollipop",
            FamilyKind::BlockPath => "block_path",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| FamilyError::UnknownKind(s.to_string()))
    }
}

/// Integer parameters of a family instance. Which ones are read depends on
/// the kind: `clique` t; `path`, `star` n; `tree_pruefer` pruefer;
/// `hamming` d, q; `hypercube` d; `windmill` k, t; `friendship` k;
/// `barbell`, `lollipop` t, ell; `block_path` b, t.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pruefer: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    #[serde(default)]
    pub params: FamilyParams,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: FamilyParams) -> Self {
        FamilySpec { kind, params }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        let kind = self.kind;
        let p = &self.params;
        let need =
            |value: Option<usize>, param: &'static str| value.ok_or(FamilyError::MissingParam { family: kind, param });
        match kind {
            FamilyKind::Clique => clique(need(p.t, "t")?),
            FamilyKind::Path => path(need(p.n, "n")?),
            FamilyKind::Star => star(need(p.n, "n")?),
            FamilyKind::TreePruefer => {
                let seq = p.pruefer.as_ref().ok_or(FamilyError::MissingParam { family: kind, param: "pruefer" })?;
                tree_from_pruefer(seq)
            }
            FamilyKind::Hamming => hamming(need(p.d, "d")?, need(p.q, "q")?),
            FamilyKind::Hypercube => hypercube(need(p.d, "d")?),
            FamilyKind::Windmill => windmill(need(p.k, "k")?, need(p.t, "t")?),
            FamilyKind::Friendship => friendship(need(p.k, "k")?),
            FamilyKind::Barbell => barbell(need(p.t, "t")?, need(p.ell, "ell")?),
            FamilyKind::Lollipop => lollipop(need(p.t, "t")?, need(p.ell, "ell")?),
            FamilyKind::BlockPath => block_path(need(p.b, "b")?, need(p.t, "t")?),
        }
    }

    /// Short human-readable name such as `windmill(t=3,k=2)`.
    pub fn descriptor(&self) -> String {
        let p = &self.params;
        let mut parts = Vec::new();
        for (name, value) in [("t", p.t), ("k", p.k), ("ell", p.ell), ("d", p.d), ("q", p.q), ("b", p.b), ("n", p.n)] {
            if let Some(v) = value {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(seq) = &p.pruefer {
            let joined: Vec<String> = seq.iter().map(usize::to_string).collect();
            parts.push(format!("pruefer=[{}]", joined.join(",")));
        }
        format!("{}({})", self.kind, parts.join(","))
    }
}

fn at_least(family: FamilyKind, param: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::OutOfRange { family, param, value, min })
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("family constructions produce simple graphs")
}

fn clique_edges(vertices: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
}

pub fn clique(t: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Clique, "t", t, 1)?;
    Ok(Graph::complete(t))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Path, "n", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

/// `K_{1,n−1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Star, "n", n, 2)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(build(n, &edges))
}

/// The labeled tree on `len + 2` vertices with the given Prüfer sequence.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for (position, &v) in seq.iter().enumerate() {
        if v >= n {
            return Err(FamilyError::Pruefer { position, value: v, order: n });
        }
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a tree under construction has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Ok(build(n, &edges))
}

/// `H(d, q)`: the `d`-fold Cartesian power of `K_q`.
pub fn hamming(d: usize, q: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Hamming, "d", d, 1)?;
    at_least(FamilyKind::Hamming, "q", q, 2)?;
    let order = u32::try_from(d).ok().and_then(|d| q.checked_pow(d));
    if order.is_none_or(|o| o > HAMMING_ORDER_CAP) {
        return Err(FamilyError::TooLarge {
            what: "hamming graph",
            order: order.unwrap_or(usize::MAX),
            cap: HAMMING_ORDER_CAP,
        });
    }
    let kq = Graph::complete(q);
    Ok((1..d).fold(kq.clone(), |acc, _| cartesian_product(&acc, &kq)))
}

pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Hypercube, "d", d, 1)?;
    hamming(d, 2)
}

/// `W(k, t)`: `k` copies of `K_t` sharing one vertex.
pub fn windmill(k: usize, t: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Windmill, "k", k, 2)?;
    at_least(FamilyKind::Windmill, "t", t, 2)?;
    let n = k * (t - 1) + 1;
    let mut edges = Vec::new();
    for i in 0..k {
        let mut block = vec![0];
        block.extend(1 + i * (t - 1)..1 + (i + 1) * (t - 1));
        clique_edges(&block, &mut edges);
    }
    Ok(build(n, &edges))
}

/// `F_{2k+1} = W(k, 3)`.
pub fn friendship(k: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Friendship, "k", k, 2)?;
    windmill(k, 3)
}

/// `B(t, ℓ)`: two copies of `K_t` joined by a path on `ℓ` vertices whose
/// ends are one vertex of each clique.
pub fn barbell(t: usize, ell: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Barbell, "t", t, 2)?;
    at_least(FamilyKind::Barbell, "ell", ell, 2)?;
    let n = 2 * t + ell - 2;
    let mut edges = Vec::new();
    clique_edges(&(0..t).collect::<Vec<_>>(), &mut edges);
    edges.extend((t..t + ell - 1).map(|v| (v - 1, v)));
    clique_edges(&(t + ell - 2..n).collect::<Vec<_>>(), &mut edges);
    Ok(build(n, &edges))
}

/// `L(t, ℓ)`: `K_t` with a path on `ℓ` vertices hanging from one vertex.
pub fn lollipop(t: usize, ell: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::Lollipop, "t", t, 2)?;
    at_least(FamilyKind::Lollipop, "ell", ell, 2)?;
    let n = t + ell - 1;
    let mut edges = Vec::new();
    clique_edges(&(0..t).collect::<Vec<_>>(), &mut edges);
    edges.extend((t..n).map(|v| (v - 1, v)));
    Ok(build(n, &edges))
}

/// `b` copies of `K_t` chained so that consecutive cliques share a vertex.
pub fn block_path(b: usize, t: usize) -> Result<Graph, FamilyError> {
    at_least(FamilyKind::BlockPath, "b", b, 1)?;
    at_least(FamilyKind::BlockPath, "t", t, 2)?;
    let n = b * (t - 1) + 1;
    let mut edges = Vec::new();
    for i in 0..b {
        clique_edges(&(i * (t - 1)..=(i + 1) * (t - 1)).collect::<Vec<_>>(), &mut edges);
    }
    Ok(build(n, &edges))
}

/// All Prüfer sequences of length `n − 2` over `0..n`, in lexicographic
/// order. Yields nothing for `n < 2`.
pub fn pruefer_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n.saturating_sub(2);
    let mut next = (n >= 2).then(|| vec![0; len]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut pos = len;
        while pos > 0 {
            pos -= 1;
            if succ[pos] + 1 < n {
                succ[pos] += 1;
                next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    })
}

/// One representative per isomorphism class of connected block graphs on
/// `n` vertices, each in canonical form, sorted by canonical graph6.
///
/// Every block graph with at least two blocks has a leaf block, so the
/// classes on `n` vertices are `K_n` together with all ways of gluing a
/// clique `K_s` onto a vertex of a block graph on `n − s + 1` vertices.
pub fn enumerate_block_graphs(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    if n > cap {
        return Err(FamilyError::TooLarge { what: "block graph enumeration", order: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::complete(1)]];
    for m in 2..=n {
        let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
        let km = canonical_form(&Graph::complete(m));
        classes.insert(crate::graph::encode_graph6(&km), km);
        for s in 2..m {
            let clique = Graph::complete(s);
            for base in &levels[m - s + 1] {
                for u in 0..base.order() {
                    let glued = one_point_union(base, u, &clique, 0).expect("vertex in range");
                    let canon = canonical_form(&glued);
                    classes.entry(crate::graph::encode_graph6(&canon)).or_insert(canon);
                }
            }
        }
        levels.push(classes.into_values().collect());
    }
    Ok(levels.swap_remove(n))
}

/// Isomorphism classes of trees on `n` vertices (block graphs whose blocks
/// are all edges), in canonical form and canonical-key order.
pub fn enumerate_trees(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    Ok(enumerate_block_graphs(n, cap)?.into_iter().filter(Graph::is_tree).collect())
}

/// Isomorphism classes of connected graphs on `n` vertices, sorted by
/// canonical graph6. Built by adding one vertex with a nonempty
/// neighbourhood to every class on `n − 1` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n > CONNECTED_ENUMERATION_CAP {
        return Err(FamilyError::TooLarge {
            what: "connected graph enumeration",
            order: n,
            cap: CONNECTED_ENUMERATION_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::complete(1)];
    for m in 2..=n {
        let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
        for base in &level {
            for mask in 1u32..(1 << (m - 1)) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let g = build(m, &edges);
                let canon = canonical_form(&g);
                classes.entry(crate::graph::encode_graph6(&canon)).or_insert(canon);
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// Canonical graph6 keys of a list of graphs, in order.
pub fn canonical_keys(graphs: &[Graph]) -> Vec<String> {
    graphs.iter().map(canonical_graph6).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_cut_tree, is_block_graph};

    #[test]
    fn small_constructions() {
        assert_eq!(clique(4).unwrap().size(), 6);
        let c4 = hypercube(2).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        let s = tree_from_pruefer(&[0, 0]).unwrap();
        assert_eq!(s.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(windmill(2, 3).unwrap().order(), 5);
        assert_eq!(barbell(3, 2).unwrap().order(), 6);
        assert_eq!(lollipop(3, 2).unwrap().order(), 4);
        assert_eq!(lollipop(4, 3).unwrap().order(), 6);
        assert_eq!(block_path(3, 3).unwrap().order(), 7);
    }

    #[test]
    fn block_structure() {
        let w = windmill(2, 4).unwrap();
        assert_eq!(block_cut_tree(&w).unwrap().block_sizes(), vec![4, 4]);
        let b = barbell(6, 2).unwrap();
        assert_eq!(b.order(), 12);
        assert_eq!(block_cut_tree(&b).unwrap().blocks().len(), 3);
        let bp = block_cut_tree(&block_path(3, 3).unwrap()).unwrap();
        assert_eq!((bp.blocks().len(), bp.cut_vertices().len()), (3, 2));
        assert!(!is_block_graph(&hypercube(2).unwrap()));
    }

    #[test]
    fn degenerate_parameters() {
        let same = |a: &Graph, b: &Graph| canonical_graph6(a) == canonical_graph6(b);
        assert!(same(&windmill(3, 2).unwrap(), &star(4).unwrap()));
        assert!(same(&barbell(2, 2).unwrap(), &path(4).unwrap()));
        assert!(same(&lollipop(2, 5).unwrap(), &path(6).unwrap()));
        assert!(same(&block_path(4, 2).unwrap(), &path(5).unwrap()));
        assert!(same(&block_path(2, 3).unwrap(), &windmill(2, 3).unwrap()));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(windmill(1, 3), Err(FamilyError::OutOfRange { param: "k", .. })));
        assert!(matches!(barbell(3, 1), Err(FamilyError::OutOfRange { param: "ell", .. })));
        assert!(matches!(tree_from_pruefer(&[5]), Err(FamilyError::Pruefer { .. })));
        assert!(matches!(hamming(20, 3), Err(FamilyError::TooLarge { .. })));
        let spec = FamilySpec::new(FamilyKind::Windmill, FamilyParams { k: Some(2), ..Default::default() });
        assert!(matches!(spec.build(), Err(FamilyError::MissingParam { param: "t", .. })));
        assert!(enumerate_block_graphs(11, DEFAULT_ENUMERATION_CAP).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = FamilySpec::new(FamilyKind::Windmill, FamilyParams { k: Some(2), t: Some(3), ..Default::default() });
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"kind":"windmill","params":{"t":3,"k":2}}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&text).unwrap(), spec);
        assert_eq!(spec.descriptor(), "windmill(t=3,k=2)");
        assert_eq!("block_path".parse::<FamilyKind>().unwrap(), FamilyKind::BlockPath);
    }

    #[test]
    fn block_graph_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_block_graphs(n, 10).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 22, 59, 165]);
    }

    #[test]
    fn pruefer_iteration() {
        assert_eq!(pruefer_sequences(2).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(pruefer_sequences(4).count(), 16);
        assert_eq!(pruefer_sequences(1).count(), 0);
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }
}
