use crate::families::enumerate_connected_graphs;
use crate::graph::{distance_matrix, encode_graph6, one_point_union, Graph};
use crate::linalg::Inertia;

use super::MetricError;

/// Two graphs whose distance matrices each have exactly one positive
/// eigenvalue, glued at one vertex into a graph with more than one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionCounterexample {
    pub first: Graph,
    pub first_vertex: usize,
    pub second: Graph,
    pub second_vertex: usize,
    pub union: Graph,
    pub union_inertia: Inertia,
}

fn distance_inertia(g: &Graph) -> Inertia {
    distance_matrix(g).expect("enumerated graphs are connected").inertia().expect("distance matrices are symmetric")
}

/// Searches pairs of connected graphs on at most `max_order` vertices each,
/// in order of increasing union size, for a one-point union that breaks the
/// one-positive-eigenvalue property. Returns the first pair found.
pub fn one_point_union_search(max_order: usize) -> Result<Option<UnionCounterexample>, MetricError> {
    if max_order < 2 {
        return Ok(None);
    }
    let mut pool: Vec<Vec<Graph>> = vec![Vec::new()];
    for n in 1..=max_order {
        let graphs = enumerate_connected_graphs(n)?;
        pool.push(graphs.into_iter().filter(|g| n >= 2 && distance_inertia(g).positive == 1).collect());
    }
    for total in 3..=2 * max_order - 1 {
        for n1 in 2..=max_order {
            let Some(n2) = (total + 1).checked_sub(n1) else { continue };
            if n2 < n1 || n2 > max_order {
                continue;
            }
            for g in &pool[n1] {
                for h in &pool[n2] {
                    for u in 0..n1 {
                        for v in 0..n2 {
                            let union = one_point_union(g, u, h, v).expect("vertices in range");
                            let union_inertia = distance_inertia(&union);
                            if union_inertia.positive > 1 {
                                return Ok(Some(UnionCounterexample {
                                    first: g.clone(),
                                    first_vertex: u,
                                    second: h.clone(),
                                    second_vertex: v,
                                    union,
                                    union_inertia,
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

impl UnionCounterexample {
    pub fn describe(&self) -> String {
        format!(
            "{} at {} glued to {} at {} gives {} with {} positive eigenvalues",
            encode_graph6(&self.first),
            self.first_vertex,
            encode_graph6(&self.second),
            self.second_vertex,
            encode_graph6(&self.union),
            self.union_inertia.positive
        )
    }
}
