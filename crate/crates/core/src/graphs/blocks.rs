//! Connectivity, 2-connected components, and the block-multiset invariant
//! that decides unimodular equivalence of symmetric edge polytopes.

use super::{canonical_key, CanonicalKey, Graph};
use crate::{Error, Result};

/// Loops are ignored. The order-1 graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Vertex sets (1-based, sorted) of the connected components, ordered by
/// smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let d = g.order();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..d {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = g.adj_mask(v) & !comp;
            comp |= new;
            frontier |= new;
        }
        seen |= comp;
        out.push((0..d).filter(|&v| comp >> v & 1 == 1).map(|v| v + 1).collect());
    }
    out
}

fn require_connected_simple(g: &Graph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::LoopsNotAllowed);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Edge sets of the blocks, each edge `(i, j)` with `i < j`. Blocks are
/// listed in discovery order of a depth-first search from vertex 1.
fn block_edge_sets(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn run(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in 0..self.g.order() {
                if self.g.adj_mask(u) >> v & 1 == 0 || Some(v) == parent {
                    continue;
                }
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.run(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push((e.0.min(e.1) + 1, e.0.max(e.1) + 1));
                            if e == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        self.blocks.push(block);
                    }
                } else if self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let d = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; d],
        low: vec![0; d],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for s in 0..d {
        if dfs.disc[s] == 0 {
            dfs.run(s, None);
        }
    }
    dfs.blocks
}

/// Maximal 2-connected subgraphs; a bridge is a `K_2` block. Each block is
/// returned as a graph on its own vertices relabeled `1..=k` in increasing
/// order.
pub fn biconnected_components(g: &Graph) -> Result<Vec<Graph>> {
    require_connected_simple(g)?;
    Ok(block_edge_sets(g)
        .into_iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(i, j)| [i, j]).collect();
            vs.sort_unstable();
            vs.dedup();
            let pos = |v: usize| vs.binary_search(&v).unwrap() + 1;
            let relabeled: Vec<(usize, usize)> =
                edges.iter().map(|&(i, j)| (pos(i), pos(j))).collect();
            Graph::from_edges(vs.len(), &relabeled, &[]).expect("block edges are valid")
        })
        .collect())
}

/// Vertices whose removal disconnects the graph (1-based, sorted).
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let blocks = block_edge_sets(g);
    let mut count = vec![0usize; g.order()];
    for block in &blocks {
        let mut vs: Vec<usize> = block.iter().flat_map(|&(i, j)| [i, j]).collect();
        vs.sort_unstable();
        vs.dedup();
        for v in vs {
            count[v - 1] += 1;
        }
    }
    (1..=g.order()).filter(|&v| count[v - 1] > 1).collect()
}

/// Sorted multiset of canonical keys of the blocks. Two connected simple
/// graphs have unimodularly equivalent symmetric edge polytopes iff these
/// keys agree.
pub fn unimodular_class_key(g: &Graph) -> Result<Vec<CanonicalKey>> {
    let mut keys: Vec<CanonicalKey> = biconnected_components(g)?
        .iter()
        .map(canonical_key)
        .collect();
    keys.sort();
    Ok(keys)
}

pub fn unimodular_equivalent(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(unimodular_class_key(a)? == unimodular_class_key(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle, path, star};

    /// Cut vertices by deleting each vertex and testing connectivity.
    fn brute_articulation_points(g: &Graph) -> Vec<usize> {
        (1..=g.order())
            .filter(|&v| {
                let rest: Vec<usize> = (1..=g.order()).filter(|&u| u != v).collect();
                !rest.is_empty() && !is_connected(&g.induced(&rest))
            })
            .collect()
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&complete_graph(3).unwrap()));
        let two = Graph::from_edges(4, &[(1, 2), (3, 4)], &[]).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(components(&two), vec![vec![1, 2], vec![3, 4]]);
        assert!(is_connected(&path(5).unwrap()));
        // loops do not connect anything
        let looped = Graph::from_edges(2, &[], &[1, 2]).unwrap();
        assert!(!is_connected(&looped));
    }

    #[test]
    fn tree_blocks_are_edges() {
        for d in 2..9 {
            let blocks = biconnected_components(&path(d).unwrap()).unwrap();
            assert_eq!(blocks.len(), d - 1);
            assert!(blocks.iter().all(|b| b.order() == 2 && b.num_edges() == 1));
        }
        let s = biconnected_components(&star(6).unwrap()).unwrap();
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn cycle_is_one_block() {
        let blocks = biconnected_components(&cycle(5).unwrap()).unwrap();
        assert_eq!(blocks, vec![cycle(5).unwrap()]);
    }

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)], &[])
            .unwrap();
        assert_eq!(brute_articulation_points(&g), vec![3]);
        assert_eq!(articulation_points(&g), vec![3]);
        let blocks = biconnected_components(&g).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| *b == complete_graph(3).unwrap()));
    }

    #[test]
    fn errors() {
        let two = Graph::from_edges(4, &[(1, 2), (3, 4)], &[]).unwrap();
        assert_eq!(biconnected_components(&two), Err(Error::Disconnected));
        let looped = Graph::from_edges(2, &[(1, 2)], &[1]).unwrap();
        assert_eq!(biconnected_components(&looped), Err(Error::LoopsNotAllowed));
    }

    #[test]
    fn unimodular_equivalence_examples() {
        assert!(unimodular_equivalent(&path(6).unwrap(), &star(6).unwrap()).unwrap());
        assert!(!unimodular_equivalent(&cycle(4).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn articulation_points_match_oracle() {
        let graphs = [
            Graph::from_edges(6, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)], &[])
                .unwrap(),
            Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (5, 6)], &[]).unwrap(),
            cycle(6).unwrap(),
            star(5).unwrap(),
        ];
        for g in &graphs {
            let ap = articulation_points(g);
            assert_eq!(ap, brute_articulation_points(g), "{g:?}");
            // blocks - 1 = sum over cut vertices of (blocks containing it - 1)
            let blocks = block_edge_sets(g);
            let mut extra = 0;
            for &v in &ap {
                extra += blocks
                    .iter()
                    .filter(|b| b.iter().any(|&(i, j)| i == v || j == v))
                    .count()
                    - 1;
            }
            assert_eq!(blocks.len(), extra + 1);
        }
    }
}
