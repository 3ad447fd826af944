use super::{Graph, GraphError};

/// Blocks (biconnected components, as vertex sets) and cut vertices of a
/// connected graph, with the block/cut-vertex incidence pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    incidence: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Blocks as sorted vertex lists, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// `(block index, cut vertex)` pairs.
    pub fn incidence(&self) -> &[(usize, usize)] {
        &self.incidence
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Biconnected components by an iterative lowpoint DFS.
///
/// A single vertex forms one block on its own; the empty graph has none.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut blocks = Vec::new();
    let mut is_cut = vec![false; n];
    if n == 1 {
        blocks.push(vec![0]);
    } else if n > 1 {
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut vertex_stack = Vec::with_capacity(n);
        let root = 0;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut frames = vec![(root, UNSEEN, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        vertex_stack.push(root);
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if let Some(&w) = g.neighbors(v).get(frame.2) {
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    vertex_stack.push(w);
                    frames.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(u, _, _)) = frames.last() else {
                continue;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut block = vec![u];
                while let Some(x) = vertex_stack.pop() {
                    block.push(x);
                    if x == v {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
                if u == root {
                    root_children += 1;
                } else {
                    is_cut[u] = true;
                }
            }
        }
        is_cut[root] = root_children >= 2;
    }
    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let incidence = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, verts)| verts.iter().filter(|&&v| is_cut[v]).map(move |&v| (b, v)))
        .collect();
    Ok(BlockCutTree { blocks, cut_vertices, incidence })
}

/// The first block (in lexicographic order) that does not induce a clique.
pub fn first_non_clique_block(g: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    let bct = block_cut_tree(g)?;
    Ok(bct
        .blocks
        .into_iter()
        .find(|b| !b.iter().enumerate().all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))))
}

/// True iff `g` is connected and every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    matches!(first_non_clique_block(g), Ok(None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_one_block() {
        let bct = block_cut_tree(&Graph::complete(4)).unwrap();
        assert_eq!(bct.blocks(), &[vec![0, 1, 2, 3]]);
        assert!(bct.cut_vertices().is_empty());
        assert!(bct.incidence().is_empty());
    }

    #[test]
    fn path_blocks() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bct = block_cut_tree(&p3).unwrap();
        assert_eq!(bct.blocks(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(bct.cut_vertices(), &[1]);
        assert_eq!(bct.incidence(), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn singleton_and_cycle() {
        let k1 = Graph::empty(1);
        assert_eq!(block_cut_tree(&k1).unwrap().blocks(), &[vec![0]]);
        assert!(is_block_graph(&k1));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!is_block_graph(&c4));
        assert_eq!(first_non_clique_block(&c4).unwrap(), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn root_articulation() {
        // bowtie centred at 0: two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        assert_eq!(bct.blocks(), &[vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(bct.cut_vertices(), &[0]);
        assert!(is_block_graph(&g));
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(block_cut_tree(&Graph::empty(2)), Err(GraphError::Disconnected));
        assert!(!is_block_graph(&Graph::empty(2)));
    }
}
