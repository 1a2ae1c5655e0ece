//! Lattice polytopes given by their vertices: edge polytopes and symmetric
//! edge polytopes of graphs, exact membership in dilations, and lattice-point
//! counts.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::graphs::Graph;
use crate::lp::{self, Feasibility};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeKind {
    /// Convex hull of `e_i + e_j` over edges (and `2 e_i` over loops).
    Edge,
    /// Convex hull of `±(e_i - e_j)` over edges of a simple graph.
    Symmetric,
    General,
}

impl PolytopeKind {
    pub fn name(self) -> &'static str {
        match self {
            PolytopeKind::Edge => "edge",
            PolytopeKind::Symmetric => "symmetric",
            PolytopeKind::General => "general",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<Vec<i64>>,
    kind: PolytopeKind,
    dim: OnceLock<usize>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertices == other.vertices
    }
}

impl LatticePolytope {
    /// Convex hull of the given points. Duplicates and points that lie in the
    /// hull of the others are removed.
    pub fn from_points(points: Vec<Vec<i64>>) -> Result<Self> {
        let mut pts = points;
        pts.sort();
        pts.dedup();
        let ambient = pts.first().ok_or(Error::EmptyPolytope)?.len();
        if pts.iter().any(|p| p.len() != ambient) {
            return Err(Error::InvalidArgument("points of mixed dimension".into()));
        }
        let mut k = 0;
        while k < pts.len() {
            let others: Vec<Vec<i64>> = pts
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, p)| p.clone())
                .collect();
            if !others.is_empty() && in_hull(&others, &pts[k], 1) {
                pts.remove(k);
            } else {
                k += 1;
            }
        }
        Ok(Self::with_kind(ambient, pts, PolytopeKind::General))
    }

    fn with_kind(ambient: usize, mut vertices: Vec<Vec<i64>>, kind: PolytopeKind) -> Self {
        vertices.sort();
        vertices.dedup();
        Self {
            ambient,
            vertices,
            kind,
            dim: OnceLock::new(),
        }
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn kind(&self) -> PolytopeKind {
        self.kind
    }

    /// Rank of `{v - v_0}` over the rationals.
    pub fn affine_dimension(&self) -> usize {
        *self.dim.get_or_init(|| {
            let v0 = &self.vertices[0];
            let rows: Vec<Vec<i64>> = self.vertices[1..]
                .iter()
                .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
                .collect();
            rank(&rows)
        })
    }

    pub fn dilate(&self, m: u64) -> Dilation<'_> {
        Dilation { base: self, m }
    }

    /// Whether every vertex has the same coordinate sum.
    fn constant_sum(&self) -> Option<i64> {
        let s: i64 = self.vertices[0].iter().sum();
        self.vertices
            .iter()
            .all(|v| v.iter().sum::<i64>() == s)
            .then_some(s)
    }

    /// `|mP ∩ Z^d|`, each candidate decided by exact LP membership.
    pub fn count_lattice_points(&self, m: u64) -> BigInt {
        let mut oracle = Membership::new(self);
        let mut count = 0u64;
        self.for_each_candidate(m, |x| {
            if oracle.contains(x, m as i64) {
                count += 1;
            }
        });
        BigInt::from(count)
    }

    /// `|mP ∩ Z^d|` for `m = 0..=max_m`.
    ///
    /// Symmetric edge polytopes are counted as balls in the lattice walk
    /// generated by their vertices; their vertex matrix is a network matrix,
    /// so the least dilation containing an integer point equals the fewest
    /// generators summing to it. Other polytopes enumerate candidates:
    /// sums of `m` vertices are accepted directly, the rest go through
    /// learned Farkas cuts and then the LP.
    pub fn lattice_counts(&self, max_m: u64) -> Vec<BigInt> {
        if self.kind == PolytopeKind::Symmetric {
            if let Some(c) = symmetric_ball_counts(self, max_m) {
                return c.into_iter().map(BigInt::from).collect();
            }
        }
        let mut oracle = Membership::new(self);
        let packable = self.ambient <= 16
            && self
                .vertices
                .iter()
                .flatten()
                .all(|&c| c.unsigned_abs() * max_m.max(1) <= 127);
        let mut sums: HashSet<u128> = HashSet::from([pack(&vec![0; self.ambient])]);
        let mut out = Vec::with_capacity(max_m as usize + 1);
        for m in 0..=max_m {
            if packable && m > 0 {
                let mut next = HashSet::with_capacity(sums.len() * 2);
                for &s in &sums {
                    let base = unpack(s, self.ambient);
                    for v in &self.vertices {
                        let x: Vec<i64> = base.iter().zip(v).map(|(a, b)| a + b).collect();
                        next.insert(pack(&x));
                    }
                }
                sums = next;
            }
            let mut count = 0u64;
            self.for_each_candidate(m, |x| {
                if (packable && sums.contains(&pack(x))) || oracle.contains(x, m as i64) {
                    count += 1;
                }
            });
            out.push(BigInt::from(count));
        }
        out
    }

    /// Calls `f` on every integer point of the bounding box of `mP`
    /// intersected with the coordinate-sum hyperplane when there is one.
    fn for_each_candidate(&self, m: u64, mut f: impl FnMut(&[i64])) {
        let d = self.ambient;
        let m = m as i64;
        let lo: Vec<i64> = (0..d)
            .map(|i| m * self.vertices.iter().map(|v| v[i]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| m * self.vertices.iter().map(|v| v[i]).max().unwrap())
            .collect();
        let target = self.constant_sum().map(|s| s * m);
        // suffix bounds for pruning the sum
        let mut lo_tail = vec![0i64; d + 1];
        let mut hi_tail = vec![0i64; d + 1];
        for i in (0..d).rev() {
            lo_tail[i] = lo_tail[i + 1] + lo[i];
            hi_tail[i] = hi_tail[i + 1] + hi[i];
        }
        let mut x = vec![0i64; d];
        fn rec(
            i: usize,
            partial: i64,
            x: &mut Vec<i64>,
            bounds: (&[i64], &[i64], &[i64], &[i64]),
            target: Option<i64>,
            f: &mut dyn FnMut(&[i64]),
        ) {
            let (lo, hi, lo_tail, hi_tail) = bounds;
            if i == x.len() {
                if target.is_none_or(|t| t == partial) {
                    f(x);
                }
                return;
            }
            let (mut a, mut b) = (lo[i], hi[i]);
            if let Some(t) = target {
                a = a.max(t - partial - hi_tail[i + 1]);
                b = b.min(t - partial - lo_tail[i + 1]);
            }
            for v in a..=b {
                x[i] = v;
                rec(i + 1, partial + v, x, bounds, target, f);
            }
        }
        rec(0, 0, &mut x, (&lo, &hi, &lo_tail, &hi_tail), target, &mut f);
    }
}

/// A dilation `mP` of a lattice polytope.
#[derive(Clone, Copy, Debug)]
pub struct Dilation<'a> {
    pub base: &'a LatticePolytope,
    pub m: u64,
}

impl Dilation<'_> {
    /// Whether `x` lies in `mP`, i.e. `x = Σ c_i v_i` with `c >= 0`,
    /// `Σ c_i = m`. Decided by exact rational LP.
    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.base.ambient && in_hull(&self.base.vertices, x, self.m as i64)
    }
}

fn hull_system(vertices: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = vertices[0].len();
    let mut a: Vec<Vec<i64>> = (0..d)
        .map(|i| vertices.iter().map(|v| v[i]).collect())
        .collect();
    a.push(vec![1; vertices.len()]);
    a
}

fn in_hull(vertices: &[Vec<i64>], x: &[i64], m: i64) -> bool {
    let a = hull_system(vertices);
    let mut b = x.to_vec();
    b.push(m);
    matches!(lp::feasibility(&a, &b), Feasibility::Feasible(_))
}

/// LP membership with a cache of separating inequalities harvested from
/// Farkas certificates. A cut `(a, a0)` satisfies `a·v + a0 <= 0` for every
/// vertex, so `a·x + a0·m > 0` proves `x ∉ mP` for every `m`.
struct Membership {
    system: Vec<Vec<i64>>,
    cuts: Vec<Vec<i64>>,
}

impl Membership {
    fn new(p: &LatticePolytope) -> Self {
        Self {
            system: hull_system(&p.vertices),
            cuts: Vec::new(),
        }
    }

    fn contains(&mut self, x: &[i64], m: i64) -> bool {
        let separated = |cut: &Vec<i64>| {
            let s: i128 = cut
                .iter()
                .zip(x.iter().chain(std::iter::once(&m)))
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum();
            s > 0
        };
        if let Some(k) = self.cuts.iter().position(separated) {
            // move to front: the same few facets reject most candidates
            if k > 0 {
                let cut = self.cuts.remove(k);
                self.cuts.insert(0, cut);
            }
            return false;
        }
        let mut b = x.to_vec();
        b.push(m);
        match lp::feasibility(&self.system, &b) {
            Feasibility::Feasible(_) => true,
            Feasibility::Infeasible(y) => {
                if let Some(cut) = lp::integer_direction(&y) {
                    self.cuts.push(cut);
                }
                false
            }
        }
    }
}

fn pack(x: &[i64]) -> u128 {
    x.iter()
        .fold(0u128, |acc, &c| (acc << 8) | ((c + 128) as u8 as u128))
}

fn unpack(mut key: u128, d: usize) -> Vec<i64> {
    let mut x = vec![0i64; d];
    for i in (0..d).rev() {
        x[i] = (key & 0xff) as i64 - 128;
        key >>= 8;
    }
    x
}

/// Sizes of the balls of radius `0..=max_m` around the origin in the walk
/// generated by the vertices, by breadth-first search. `None` if the points
/// do not fit the packed representation.
fn symmetric_ball_counts(p: &LatticePolytope, max_m: u64) -> Option<Vec<u64>> {
    if p.ambient > 16 || max_m > 127 {
        return None;
    }
    let zero = vec![0i64; p.ambient];
    let mut seen: HashSet<u128> = HashSet::from([pack(&zero)]);
    let mut frontier: Vec<Vec<i64>> = vec![zero];
    let mut out = vec![1u64];
    for _ in 1..=max_m {
        let mut next = Vec::new();
        for x in &frontier {
            for v in &p.vertices {
                let y: Vec<i64> = x.iter().zip(v).map(|(a, b)| a + b).collect();
                if seen.insert(pack(&y)) {
                    next.push(y);
                }
            }
        }
        out.push(seen.len() as u64);
        frontier = next;
    }
    Some(out)
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Edge polytope. Requires condition (*) when loops are present: apply
/// [`Graph::normalize_condition_star`] first. `e_i + e_j` is dropped when
/// both `i` and `j` carry loops, since it is then not a vertex.
pub fn edge_polytope(g: &Graph) -> Result<LatticePolytope> {
    if g.num_edges() == 0 && g.num_loops() == 0 {
        return Err(Error::EmptyPolytope);
    }
    if !g.satisfies_condition_star() {
        return Err(Error::InvalidArgument(
            "loops violate condition (*); normalize the graph first".into(),
        ));
    }
    let d = g.order();
    let mut vertices = Vec::new();
    for (i, j) in g.edges() {
        if g.has_loop(i) && g.has_loop(j) {
            continue;
        }
        let mut v = vec![0; d];
        v[i - 1] = 1;
        v[j - 1] = 1;
        vertices.push(v);
    }
    for i in g.loops() {
        let mut v = vec![0; d];
        v[i - 1] = 2;
        vertices.push(v);
    }
    Ok(LatticePolytope::with_kind(d, vertices, PolytopeKind::Edge))
}

/// Symmetric edge polytope of a simple graph.
pub fn symmetric_edge_polytope(g: &Graph) -> Result<LatticePolytope> {
    if !g.is_simple() {
        return Err(Error::LoopsNotAllowed);
    }
    if g.num_edges() == 0 {
        return Err(Error::EmptyPolytope);
    }
    let d = g.order();
    let mut vertices = Vec::new();
    for (i, j) in g.edges() {
        let mut v = vec![0; d];
        v[i - 1] = 1;
        v[j - 1] = -1;
        vertices.push(v.iter().map(|c| -c).collect());
        vertices.push(v);
    }
    Ok(LatticePolytope::with_kind(d, vertices, PolytopeKind::Symmetric))
}

/// Polytope of the given kind for `g`.
pub fn polytope(g: &Graph, kind: PolytopeKind) -> Result<LatticePolytope> {
    match kind {
        PolytopeKind::Edge => edge_polytope(g),
        PolytopeKind::Symmetric => symmetric_edge_polytope(g),
        PolytopeKind::General => Err(Error::InvalidArgument(
            "graphs define edge or symmetric polytopes only".into(),
        )),
    }
}

/// Integer points of `P` that are not vertices, at `m = 1`.
pub fn non_vertex_points(p: &LatticePolytope) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut oracle = Membership::new(p);
    p.for_each_candidate(1, |x| {
        if oracle.contains(x, 1) && p.vertices.binary_search(&x.to_vec()).is_err() {
            out.push(x.to_vec());
        }
    });
    out
}
