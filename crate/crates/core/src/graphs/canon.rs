//! Canonical labeling by individualization and refinement.
//!
//! The search tree is built from an ordered partition that is refined to an
//! equitable one, then a vertex of the first non-singleton cell is
//! individualized. Every refinement step depends only on the graph structure
//! and the order of cells, so relabeling the graph permutes the leaves. The
//! canonical labeling is the leaf whose certificate (loop bits, then the
//! upper-triangular adjacency bitstring) is lexicographically largest.
//! Automorphisms discovered at equal leaves prune sibling branches.

use std::fmt;

use super::Graph;

/// Certificate of a graph under its canonical labeling. Equal keys iff the
/// graphs are isomorphic with loops mapped to loops.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    order: u8,
    /// Bit 63 is canonical position 0.
    loops: u64,
    /// Upper triangle row-major, most significant bit first.
    adjacency: Vec<u64>,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let d = self.order();
        let mut g = Graph::empty(d);
        let mut bit = 0usize;
        for i in 0..d {
            if self.loops >> (63 - i) & 1 == 1 {
                g.add_loop(i + 1);
            }
            for j in i + 1..d {
                if self.adjacency[bit / 64] >> (63 - bit % 64) & 1 == 1 {
                    g.add_edge(i + 1, j + 1);
                }
                bit += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalKey {
    /// `<order>:<loops hex>:<adjacency hex>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.order();
        let loop_digits = d.div_ceil(4).max(1);
        let loops = self.loops >> (64 - 4 * loop_digits);
        write!(f, "{d}:{loops:0w$x}:", w = loop_digits)?;
        let bits = d * d.saturating_sub(1) / 2;
        let digits = bits.div_ceil(4).max(1);
        for k in 0..digits {
            let word = self.adjacency.get(k / 16).copied().unwrap_or(0);
            let nibble = (word >> (60 - 4 * (k % 16))) & 0xf;
            write!(f, "{nibble:x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).0
}

/// Canonical key plus a labeling `lab` where `lab[k]` is the (1-based)
/// vertex placed at canonical position `k`.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let d = g.order();
    let mut initial = Vec::new();
    let looped: Vec<usize> = (0..d).filter(|&v| g.loop_mask() >> v & 1 == 1).collect();
    let free: Vec<usize> = (0..d).filter(|&v| g.loop_mask() >> v & 1 == 0).collect();
    for cell in [looped, free] {
        if !cell.is_empty() {
            initial.push(cell);
        }
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(initial, &mut Vec::new());
    let (key, lab) = search.best.expect("search visits at least one leaf");
    (key, lab.into_iter().map(|v| v + 1).collect())
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(CanonicalKey, Vec<usize>)>,
    best: Option<(CanonicalKey, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let orbit = self.orbit_representatives(fixed);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (k, cell) in cells.iter().enumerate() {
                if k == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            fixed.push(v);
            self.visit(child, fixed);
            fixed.pop();
        }
    }

    /// Orbit label of every vertex under the automorphisms found so far that
    /// fix `fixed` pointwise.
    fn orbit_representatives(&self, fixed: &[usize]) -> Vec<usize> {
        let d = self.g.order();
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if fixed.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..d).map(|v| find(&mut parent, v)).collect()
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let key = certificate(self.g, &lab);
        let Some((first_key, first_lab)) = &self.first else {
            self.first = Some((key.clone(), lab.clone()));
            self.best = Some((key, lab));
            return;
        };
        if &key == first_key {
            self.automorphisms.push(map_between(first_lab, &lab));
            return;
        }
        let (best_key, best_lab) = self.best.as_ref().unwrap();
        if &key == best_key {
            self.automorphisms.push(map_between(best_lab, &lab));
        } else if &key > best_key {
            self.best = Some((key, lab));
        }
    }
}

/// The permutation sending `from[k]` to `to[k]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn certificate(g: &Graph, lab: &[usize]) -> CanonicalKey {
    let d = lab.len();
    let bits = d * d.saturating_sub(1) / 2;
    let mut adjacency = vec![0u64; bits.div_ceil(64).max(1)];
    let mut loops = 0u64;
    let mut bit = 0usize;
    for i in 0..d {
        if g.loop_mask() >> lab[i] & 1 == 1 {
            loops |= 1 << (63 - i);
        }
        let row = g.adj_mask(lab[i]);
        for &v in &lab[i + 1..] {
            if row >> v & 1 == 1 {
                adjacency[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    CanonicalKey {
        order: d as u8,
        loops,
        adjacency,
    }
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Sub-cells are ordered by their count vectors.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let d = g.order();
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(d);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.adj_mask(v);
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}
