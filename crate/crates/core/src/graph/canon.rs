//! Canonical labelings.
//!
//! Block graphs are canonized through their block-cut tree: the tree is
//! rooted at its center, each node gets a canonical code from its sorted
//! child codes (block nodes also record how many non-cut vertices they
//! carry), and vertices are numbered by a preorder walk in code order. Since
//! a block graph is determined by that labeled tree, two block graphs receive
//! the same canonical form exactly when they are isomorphic.
//!
//! Every other graph goes through colour refinement plus individualization
//! with backtracking, keeping the labeling whose graph6 bit string is
//! smallest. Branches on a vertex that is a twin of an already explored
//! vertex of the same cell are skipped, since swapping twins is an
//! automorphism fixing the current colouring.

use std::cmp::Ordering;

use super::{block_cut_tree, encode_graph6, is_block_graph, Graph};

/// Permutation `perm` with `perm[v]` the canonical label of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.order() >= 2 && is_block_graph(g) {
        block_graph_labeling(g)
    } else {
        refinement_labeling(g)
    }
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn canonical_graph6(g: &Graph) -> String {
    encode_graph6(&canonical_form(g))
}

fn block_graph_labeling(g: &Graph) -> Vec<usize> {
    let bct = block_cut_tree(g).expect("block graphs are connected");
    let blocks = bct.blocks();
    let cuts = bct.cut_vertices();
    let nb = blocks.len();
    let total = nb + cuts.len();
    let mut tree = vec![Vec::new(); total];
    for &(b, c) in bct.incidence() {
        let cut_node = nb + cuts.binary_search(&c).expect("incidence names a cut vertex");
        tree[b].push(cut_node);
        tree[cut_node].push(b);
    }

    let private: Vec<Vec<usize>> =
        blocks.iter().map(|b| b.iter().copied().filter(|&v| !bct.is_cut_vertex(v)).collect()).collect();

    let best = tree_centers(&tree)
        .into_iter()
        .map(|root| {
            let codes = subtree_codes(&tree, root, |node| {
                if node < nb {
                    format!("B{}", private[node].len())
                } else {
                    "C".to_string()
                }
            });
            (codes, root)
        })
        .min_by(|a, b| a.0[a.1].cmp(&b.0[b.1]))
        .expect("a nonempty tree has a center");
    let (codes, root) = best;

    let mut perm = vec![usize::MAX; g.order()];
    let mut next = 0;
    let mut assign = |v: usize, perm: &mut Vec<usize>| {
        perm[v] = next;
        next += 1;
    };
    // preorder walk, children in code order
    let mut stack = vec![(root, usize::MAX)];
    while let Some((node, parent)) = stack.pop() {
        if node < nb {
            for &v in &private[node] {
                assign(v, &mut perm);
            }
        } else {
            assign(cuts[node - nb], &mut perm);
        }
        let mut children: Vec<usize> = tree[node].iter().copied().filter(|&c| c != parent).collect();
        children.sort_by(|a, b| codes[*a].cmp(&codes[*b]).then(a.cmp(b)));
        stack.extend(children.into_iter().rev().map(|c| (c, node)));
    }
    debug_assert!(perm.iter().all(|&p| p != usize::MAX));
    perm
}

/// One or two centers of a tree given as adjacency lists.
fn tree_centers(tree: &[Vec<usize>]) -> Vec<usize> {
    let n = tree.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = tree.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            for &w in &tree[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

/// Canonical code of every node's subtree when the tree hangs from `root`.
fn subtree_codes(tree: &[Vec<usize>], root: usize, label: impl Fn(usize) -> String) -> Vec<String> {
    let n = tree.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &tree[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut child_codes: Vec<&str> =
            tree[v].iter().filter(|&&w| w != parent[v]).map(|&w| codes[w].as_str()).collect();
        child_codes.sort_unstable();
        let code = format!("{}({})", label(v), child_codes.join(","));
        codes[v] = code;
    }
    codes
}

fn refinement_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    search(g, vec![0; n], &mut best);
    best.expect("search reaches at least one discrete colouring").1
}

fn search(g: &Graph, colours: Vec<usize>, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let colours = refine(g, colours);
    let n = g.order();
    let mut counts = vec![0usize; n];
    for &c in &colours {
        counts[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let key = adjacency_key(g, &colours);
        let better = match best {
            None => true,
            Some((k, _)) => key.cmp(k) == Ordering::Less,
        };
        if better {
            *best = Some((key, colours));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut explored: Vec<usize> = Vec::new();
    for &v in &cell {
        if explored.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        explored.push(v);
        let child = colours.iter().enumerate().map(|(w, &c)| if w == v { 2 * c } else { 2 * c + 1 }).collect();
        search(g, child, best);
    }
}

/// Iterated colour refinement; colours are re-ranked to `0..k` by the sorted
/// signature `(colour, sorted neighbour colours)`, which keeps the result
/// independent of vertex numbering.
fn refine(g: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                nc.sort_unstable();
                (colours[v], nc)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colours = signatures.iter().map(|s| distinct.binary_search(s).expect("signature present")).collect();
        if distinct.len() == classes {
            return colours;
        }
        classes = distinct.len();
    }
}

fn adjacency_key(g: &Graph, labels: &[usize]) -> Vec<bool> {
    let n = g.order();
    let mut vertex_at = vec![0; n];
    for (v, &l) in labels.iter().enumerate() {
        vertex_at[l] = v;
    }
    let mut key = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            key.push(g.has_edge(vertex_at[i], vertex_at[j]));
        }
    }
    key
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&w| w != v);
    let b = g.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_copies_agree() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_graph6(&g), canonical_graph6(&g.relabel(&perm)));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let perm = [2, 4, 1, 0, 3];
        assert_eq!(canonical_graph6(&c5), canonical_graph6(&c5.relabel(&perm)));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_graph6(&p4), canonical_graph6(&star));
    }

    #[test]
    fn large_symmetric_inputs_finish() {
        let k = Graph::complete(40);
        assert_eq!(canonical_form(&k), k);
        let edges: Vec<_> = (1..30).map(|v| (0, v)).collect();
        let star = Graph::from_edges(30, &edges).unwrap();
        assert_eq!(canonical_form(&star).order(), 30);
    }

    #[test]
    fn centers() {
        let path: Vec<Vec<usize>> = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        assert_eq!(tree_centers(&path), vec![1, 2]);
        let star: Vec<Vec<usize>> = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
        assert_eq!(tree_centers(&star), vec![0]);
    }
}
