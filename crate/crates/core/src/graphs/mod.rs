//! Finite graphs with optional loops, the named families used throughout the
//! crate, and the one-graph-per-line text format.

mod blocks;
mod canon;
mod enumerate;

use std::fmt;
use std::str::FromStr;

pub use blocks::{
    articulation_points, biconnected_components, components, is_connected, unimodular_class_key,
    unimodular_equivalent,
};
pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use enumerate::{enumerate_connected_simple, enumerate_connected_simple_unbounded};

use crate::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (adjacency rows are `u64` masks).
pub const MAX_ORDER: usize = 64;

/// A graph on vertices `1..=d` with simple edges and a set of looped vertices.
///
/// Vertices are 1-based in every public method; the bit masks used internally
/// are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    adj: Vec<u64>,
    loops: u64,
}

impl Graph {
    /// Edgeless graph of order `d`.
    pub fn empty(d: usize) -> Self {
        assert!(d <= MAX_ORDER, "graph order {d} exceeds {MAX_ORDER}");
        Self {
            d,
            adj: vec![0; d],
            loops: 0,
        }
    }

    pub fn from_edges(d: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        if d == 0 || d > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "graph order must be in 1..={MAX_ORDER}, got {d}"
            )));
        }
        let mut g = Self::empty(d);
        for &(i, j) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(Error::InvalidArgument(format!(
                    "edge {i}-{j} is a loop; list loops separately"
                )));
            }
            if g.has_edge(i, j) {
                return Err(Error::InvalidArgument(format!("duplicate edge {i}-{j}")));
            }
            g.add_edge(i, j);
        }
        for &v in loops {
            g.check_vertex(v)?;
            if g.has_loop(v) {
                return Err(Error::InvalidArgument(format!("duplicate loop at {v}")));
            }
            g.add_loop(v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.d {
            Err(Error::InvalidArgument(format!(
                "vertex {v} outside 1..={}",
                self.d
            )))
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i >= 1 && j >= 1 && i <= self.d && j <= self.d);
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
    }

    pub fn add_loop(&mut self, v: usize) {
        self.loops |= 1 << (v - 1);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops >> (v - 1) & 1 == 1
    }

    /// Non-loop edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            let mut row = self.adj[i] >> (i + 1);
            let mut j = i + 1;
            while row != 0 {
                if row & 1 == 1 {
                    out.push((i + 1, j + 1));
                }
                row >>= 1;
                j += 1;
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (1..=self.d).filter(|&v| self.has_loop(v)).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn num_loops(&self) -> usize {
        self.loops.count_ones() as usize
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn adj_mask(&self, v0: usize) -> u64 {
        self.adj[v0]
    }

    pub(crate) fn loop_mask(&self) -> u64 {
        self.loops
    }

    /// Relabel so that vertex `v` becomes `perm[v-1]` (both 1-based).
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.d);
        let mut g = Self::empty(self.d);
        for (i, j) in self.edges() {
            g.add_edge(perm[i - 1], perm[j - 1]);
        }
        for v in self.loops() {
            g.add_loop(perm[v - 1]);
        }
        g
    }

    /// Induced subgraph on the given 1-based vertices, relabeled `1..=k` in
    /// the listed order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
            if self.has_loop(u) {
                g.add_loop(a + 1);
            }
        }
        g
    }

    /// Every pair of looped vertices is joined by an edge.
    pub fn satisfies_condition_star(&self) -> bool {
        let loops = self.loops();
        loops
            .iter()
            .enumerate()
            .all(|(a, &i)| loops[a + 1..].iter().all(|&j| self.has_edge(i, j)))
    }

    /// Adds the missing edges between looped vertices. The edge polytope is
    /// unchanged by this.
    pub fn normalize_condition_star(&self) -> Self {
        let mut g = self.clone();
        let loops = self.loops();
        for (a, &i) in loops.iter().enumerate() {
            for &j in &loops[a + 1..] {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Classifies graphs whose edge polytope is simple but not a simplex.
    pub fn smooth_class(&self) -> Option<SmoothClass> {
        let free: Vec<usize> = (1..=self.d).filter(|&v| !self.has_loop(v)).collect();
        if free.is_empty() {
            return None;
        }
        let looped = self.loops();
        let joined_to_free = looped
            .iter()
            .all(|&i| free.iter().all(|&j| self.has_edge(i, j)));
        match looped.len() {
            0 => match complete_bipartite_sides(self) {
                Some((p, q)) if p >= 2 && q >= 2 => Some(SmoothClass::Alpha { p, q }),
                _ => None,
            },
            1 if joined_to_free => {
                let sub = self.induced(&free);
                complete_bipartite_sides(&sub).map(|(p, q)| SmoothClass::Beta { p, q })
            }
            n if n >= 2 && joined_to_free && self.satisfies_condition_star() => {
                let sub = self.induced(&free);
                (sub.num_edges() == 0).then_some(SmoothClass::Gamma { d: self.d, p: n })
            }
            _ => None,
        }
    }
}

/// The three families of graphs (with possible loops) whose edge polytopes
/// are simple and smooth but not simplices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothClass {
    /// Complete bipartite `K_{p,q}` containing a 4-cycle.
    Alpha { p: usize, q: usize },
    /// One loop, loop-free part `K_{p,q}`, looped vertex joined to all.
    Beta { p: usize, q: usize },
    /// `p >= 2` loops on `d` vertices, loop-free part edgeless.
    Gamma { d: usize, p: usize },
}

/// Sides `(p, q)`, `p >= q`, if `g` is a loop-free complete bipartite graph
/// with both sides nonempty.
fn complete_bipartite_sides(g: &Graph) -> Option<(usize, usize)> {
    if !g.is_simple() || !is_connected(g) || g.order() < 2 {
        return None;
    }
    let mut side = vec![None; g.order()];
    side[0] = Some(false);
    let mut stack = vec![1usize];
    while let Some(u) = stack.pop() {
        let su = side[u - 1].unwrap();
        for v in 1..=g.order() {
            if g.has_edge(u, v) {
                match side[v - 1] {
                    None => {
                        side[v - 1] = Some(!su);
                        stack.push(v);
                    }
                    Some(sv) if sv == su => return None,
                    _ => {}
                }
            }
        }
    }
    let p = side.iter().filter(|s| **s == Some(false)).count();
    let q = g.order() - p;
    (g.num_edges() == p * q).then_some((p.max(q), p.min(q)))
}

impl fmt::Display for Graph {
    /// `d=<n>;E=<i-j,...>;L=<i,...>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
        let loops: Vec<String> = self.loops().iter().map(|v| v.to_string()).collect();
        write!(f, "d={};E={};L={}", self.d, edges.join(","), loops.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph_line(s).map_err(|message| Error::Parse { line: 1, message })
    }
}

fn parse_graph_line(line: &str) -> std::result::Result<Graph, String> {
    let mut d = None;
    let mut edges = None;
    let mut loops = None;
    for field in line.trim().split(';') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| format!("field {field:?} is not key=value"))?;
        let slot = match key.trim() {
            "d" => {
                let n: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad vertex count {value:?}"))?;
                if d.replace(n).is_some() {
                    return Err("duplicate field d".into());
                }
                continue;
            }
            "E" => &mut edges,
            "L" => &mut loops,
            other => return Err(format!("unknown field {other:?}")),
        };
        if slot.replace(value.trim().to_string()).is_some() {
            return Err(format!("duplicate field {key}"));
        }
    }
    let d = d.ok_or("missing field d")?;
    let parse_vertex = |s: &str| -> std::result::Result<usize, String> {
        s.trim().parse().map_err(|_| format!("bad vertex {s:?}"))
    };
    let mut edge_list = Vec::new();
    for item in edges.as_deref().unwrap_or("").split(',').filter(|s| !s.trim().is_empty()) {
        let (i, j) = item
            .split_once('-')
            .ok_or_else(|| format!("bad edge {item:?}"))?;
        edge_list.push((parse_vertex(i)?, parse_vertex(j)?));
    }
    let mut loop_list = Vec::new();
    for item in loops.as_deref().unwrap_or("").split(',').filter(|s| !s.trim().is_empty()) {
        loop_list.push(parse_vertex(item)?);
    }
    Graph::from_edges(d, &edge_list, &loop_list).map_err(|e| e.to_string())
}

/// Parses one graph per line; blank lines and `#` comments are skipped.
/// Errors carry the 1-based line number.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, l)| parse_graph_line(l).map_err(|message| Error::Parse { line: n + 1, message }))
        .collect()
}

/// A partition `q_1 >= ... >= q_t >= 1` of `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts are sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "a partition needs at least one part and all parts positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All partitions of `d` in reverse lexicographic order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=max.min(rest)).rev() {
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if d > 0 {
            rec(d, d, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn complete_graph(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidArgument("complete graph needs d >= 1".into()));
    }
    let mut g = Graph::empty(d);
    for i in 1..=d {
        for j in i + 1..=d {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// `K_{q_1,...,q_t}`: parts occupy consecutive vertex ranges, largest first.
pub fn complete_multipartite(p: &Partition) -> Result<Graph> {
    if p.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "multipartite graph {p} has no edges"
        )));
    }
    let mut part_of = Vec::new();
    for (k, &q) in p.parts().iter().enumerate() {
        part_of.extend(std::iter::repeat(k).take(q));
    }
    let d = part_of.len();
    let mut g = Graph::empty(d);
    for i in 0..d {
        for j in i + 1..d {
            if part_of[i] != part_of[j] {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    Ok(g)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    complete_multipartite(&Partition::new(vec![p, q])?)
}

/// `p` looped vertices `1..=p`, all joined to each other and to every one of
/// the `d-p` loop-free vertices, which are pairwise non-adjacent.
pub fn gamma_family(d: usize, p: usize) -> Result<Graph> {
    if p < 2 || p >= d {
        return Err(Error::InvalidArgument(format!(
            "gamma family needs d > p >= 2, got d={d}, p={p}"
        )));
    }
    let mut g = Graph::empty(d);
    for i in 1..=p {
        g.add_loop(i);
        for j in i + 1..=d {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// `K_{p,q}` on vertices `1..=p+q` plus a looped vertex `p+q+1` joined to all.
pub fn beta_family(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!(
            "beta family needs p, q >= 1, got p={p}, q={q}"
        )));
    }
    let d = p + q + 1;
    let mut g = Graph::empty(d);
    for i in 1..=p {
        for j in p + 1..=p + q {
            g.add_edge(i, j);
        }
    }
    for i in 1..d {
        g.add_edge(i, d);
    }
    g.add_loop(d);
    Ok(g)
}

pub fn cycle(d: usize) -> Result<Graph> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs d >= 3, got {d}")));
    }
    let mut g = path(d)?;
    g.add_edge(1, d);
    Ok(g)
}

pub fn path(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidArgument("path needs d >= 1".into()));
    }
    let mut g = Graph::empty(d);
    for i in 1..d {
        g.add_edge(i, i + 1);
    }
    Ok(g)
}

/// Star `K_{1,d-1}` with centre 1.
pub fn star(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::InvalidArgument("star needs d >= 2".into()));
    }
    let mut g = Graph::empty(d);
    for j in 2..=d {
        g.add_edge(1, j);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_graph(2).unwrap().num_edges(), 1);
        assert_eq!(complete_graph(3).unwrap().edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(complete_graph(5).unwrap().num_edges(), 10);
    }

    #[test]
    fn multipartite_edge_rule() {
        let k3 = complete_multipartite(&Partition::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(k3, complete_graph(3).unwrap());
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.num_edges(), 6);
        // (2,1,1): 2*1 + 2*1 + 1*1
        let g = complete_multipartite(&Partition::new(vec![2, 1, 1]).unwrap()).unwrap();
        assert_eq!((g.order(), g.num_edges()), (4, 5));
        assert!(complete_multipartite(&Partition::new(vec![4]).unwrap()).is_err());
    }

    #[test]
    fn gamma_family_shape() {
        let g = gamma_family(4, 2).unwrap();
        assert_eq!(g.loops(), vec![1, 2]);
        assert_eq!(g.num_edges(), 5);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(3, 4));
        let g = gamma_family(3, 2).unwrap();
        assert_eq!((g.num_loops(), g.num_edges()), (2, 3));
        assert!(gamma_family(4, 1).is_err());
        assert!(gamma_family(4, 4).is_err());
    }

    #[test]
    fn beta_family_shape() {
        let g = beta_family(1, 1).unwrap();
        assert_eq!((g.order(), g.num_loops(), g.num_edges()), (3, 1, 3));
        let g = beta_family(2, 1).unwrap();
        assert_eq!((g.order(), g.num_loops(), g.num_edges()), (4, 1, 5));
        assert!(beta_family(0, 2).is_err());
    }

    #[test]
    fn family_classification() {
        for d in 3..9 {
            for p in 2..d {
                let g = gamma_family(d, p).unwrap();
                assert!(g.satisfies_condition_star());
                assert_eq!(g.smooth_class(), Some(SmoothClass::Gamma { d, p }));
            }
        }
        for p in 1..5 {
            for q in 1..5 {
                let g = beta_family(p, q).unwrap();
                assert!(g.satisfies_condition_star());
                assert_eq!(
                    g.smooth_class(),
                    Some(SmoothClass::Beta { p: p.max(q), q: p.min(q) })
                );
            }
        }
        assert_eq!(
            complete_bipartite(3, 2).unwrap().smooth_class(),
            Some(SmoothClass::Alpha { p: 3, q: 2 })
        );
        assert_eq!(complete_graph(4).unwrap().smooth_class(), None);
    }

    #[test]
    fn condition_star_normalization() {
        let g = Graph::from_edges(4, &[(1, 3), (2, 3)], &[1, 2]).unwrap();
        assert!(!g.satisfies_condition_star());
        let n = g.normalize_condition_star();
        assert!(n.satisfies_condition_star());
        assert!(n.has_edge(1, 2));
        assert_eq!(n.num_edges(), 3);
    }

    #[test]
    fn text_format_round_trip() {
        let g = gamma_family(4, 2).unwrap();
        let s = g.to_string();
        assert_eq!(s, "d=4;E=1-2,1-3,1-4,2-3,2-4;L=1,2");
        assert_eq!(s.parse::<Graph>().unwrap(), g);
        let k1 = "d=1;E=;L=".parse::<Graph>().unwrap();
        assert_eq!(k1.order(), 1);
    }

    #[test]
    fn parser_reports_line_numbers() {
        let text = "d=2;E=1-2;L=\n\n# comment\nd=3;E=1-4;L=\n";
        match parse_graphs(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        for bad in ["d=3;E=1-1;L=", "d=3;E=1-2,2-1;L=", "E=1-2", "d=x;E=;L=", "d=2;E=1-2;L=;Q=1"] {
            assert!(bad.parse::<Graph>().is_err(), "{bad}");
        }
        assert_eq!(parse_graphs("d=2;E=1-2;L=\nd=3;E=1-2,2-3;L=").unwrap().len(), 2);
    }

    #[test]
    fn partitions() {
        let counts: Vec<usize> = (1..=10).map(|d| Partition::all(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
