//! Ehrhart polynomials: interpolation from lattice-point counts, closed forms
//! for the graph families that have one, and delta-vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graphs::{self, Graph, Partition, SmoothClass};
use crate::poly::{rat, RationalPolynomial};
use crate::polytopes::{self, LatticePolytope, PolytopeKind};
use crate::{Error, Result};

/// The polynomial of degree at most `dim` through `(m, counts[m])`,
/// `m = 0..=dim`, in the Newton basis `binom(m, k)`.
pub fn interpolate(counts: &[BigInt], dim: usize) -> Result<RationalPolynomial> {
    if counts.len() != dim + 1 {
        return Err(Error::InterpolationLength {
            expected: dim + 1,
            got: counts.len(),
        });
    }
    // Σ_k Δ^k(0) · (dim!/k!) · m(m-1)...(m-k+1), divided by dim! at the end
    let mut diffs: Vec<BigInt> = counts.to_vec();
    let mut numer = vec![BigInt::zero(); dim + 1];
    let mut falling = vec![BigInt::one()];
    let weights: Vec<BigInt> = {
        // dim!/k! for k = 0..=dim
        let mut w = vec![BigInt::one(); dim + 1];
        for k in (0..dim).rev() {
            w[k] = &w[k + 1] * BigInt::from(k + 1);
        }
        w
    };
    for k in 0..=dim {
        let c = &diffs[0] * &weights[k];
        for (slot, f) in numer.iter_mut().zip(&falling) {
            *slot += &c * f;
        }
        // falling *= (m - k)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (i, f) in falling.iter().enumerate() {
            next[i + 1] += f;
            next[i] -= f * BigInt::from(k);
        }
        falling = next;
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let denom = weights[0].clone();
    Ok(RationalPolynomial::new(
        numer
            .into_iter()
            .map(|n| BigRational::new(n, denom.clone()))
            .collect(),
    ))
}

fn int_binom(n: i64, k: i64) -> BigInt {
    // binom(n, 0) = 1 for every n; otherwise only n >= -1 occurs, where the
    // polynomial value for n < k is 0
    if k == 0 {
        return BigInt::one();
    }
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Ehrhart polynomial of `p` from direct counts at `m = 0..=dim P`.
pub fn ehrhart_bruteforce(p: &LatticePolytope) -> Result<RationalPolynomial> {
    let dim = p.affine_dimension();
    interpolate(&p.lattice_counts(dim as u64), dim)
}

fn binom(scale: i64, offset: i64, k: i64) -> RationalPolynomial {
    if k < 0 {
        RationalPolynomial::zero()
    } else {
        RationalPolynomial::binomial(scale, offset, k as usize)
    }
}

fn range_check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_string()))
    }
}

/// Edge polytope of `K_d`: `binom(d+2m-1, d-1) - d binom(m+d-2, d-1)`.
pub fn ehrhart_complete(d: usize) -> Result<RationalPolynomial> {
    range_check(d >= 2, "K_d needs d >= 2")?;
    let d = d as i64;
    let a = binom(2, d - 1, d - 1);
    let b = binom(1, d - 2, d - 1).scale(&rat(d));
    Ok(&a - &b)
}

/// `p(m; d, j) = binom(j+m-1, j-1) binom(d-j+m-1, d-j)`.
pub fn p_func(d: usize, j: usize) -> Result<RationalPolynomial> {
    range_check(1 <= j && j <= d, "p(m; d, j) needs 1 <= j <= d")?;
    let (d, j) = (d as i64, j as i64);
    Ok(&binom(1, j - 1, j - 1) * &binom(1, d - j - 1, d - j))
}

/// `f(m; d, j) = p(m; d, 1) + ... + p(m; d, j)`.
pub fn f_func(d: usize, j: usize) -> Result<RationalPolynomial> {
    range_check(1 <= j && j <= d, "f(m; d, j) needs 1 <= j <= d")?;
    (1..=j).try_fold(RationalPolynomial::zero(), |acc, k| Ok(&acc + &p_func(d, k)?))
}

fn multipartite_check(p: &Partition) -> Result<()> {
    range_check(p.len() >= 2, "a complete multipartite graph needs two parts")
}

/// Edge polytope of `K_{q_1,...,q_t}`: `f(m;d,d) - Σ_k f(m;d,q_k)`.
pub fn ehrhart_multipartite(p: &Partition) -> Result<RationalPolynomial> {
    multipartite_check(p)?;
    let d = p.total() as i64;
    // f(m; d, j) at integer m >= 0; the polynomial of degree d-1 is recovered
    // from d values
    let f = |m: i64, j: i64| -> BigInt {
        (1..=j)
            .map(|k| int_binom(k + m - 1, k - 1) * int_binom(d - k + m - 1, d - k))
            .sum()
    };
    let values: Vec<BigInt> = (0..d)
        .map(|m| {
            let parts: BigInt = p.parts().iter().map(|&q| f(m, q as i64)).sum();
            f(m, d) - parts
        })
        .collect();
    interpolate(&values, d as usize - 1)
}

/// The same polynomial from the double-sum formula
/// `binom(d+2m-1, d-1) - Σ_k Σ_{1<=i<=j<=q_k} binom(j-i+m-1, j-i) binom(d-j+m-1, d-j)`.
pub fn ehrhart_eq1(p: &Partition) -> Result<RationalPolynomial> {
    multipartite_check(p)?;
    let d = p.total() as i64;
    let mut out = binom(2, d - 1, d - 1);
    for &q in p.parts() {
        for j in 1..=q as i64 {
            for i in 1..=j {
                let term = &binom(1, j - i - 1, j - i) * &binom(1, d - j - 1, d - j);
                out = &out - &term;
            }
        }
    }
    Ok(out)
}

/// α case: `binom(p+m-1, p-1) binom(q+m-1, q-1)`.
pub fn ehrhart_alpha(p: usize, q: usize) -> Result<RationalPolynomial> {
    range_check(p >= 1 && q >= 1, "alpha needs p, q >= 1")?;
    let (p, q) = (p as i64, q as i64);
    Ok(&binom(1, p - 1, p - 1) * &binom(1, q - 1, q - 1))
}

/// β case: `binom(p+m, p) binom(q+m, q)`.
pub fn ehrhart_beta(p: usize, q: usize) -> Result<RationalPolynomial> {
    range_check(p >= 1 && q >= 1, "beta needs p, q >= 1")?;
    let (p, q) = (p as i64, q as i64);
    Ok(&binom(1, p, p) * &binom(1, q, q))
}

/// γ case with `p` loops: `f_{d,p}(m) = Σ_{j=1}^p binom(j+m-2, j-1) binom(d-j+m, d-j)`.
pub fn ehrhart_gamma(d: usize, p: usize) -> Result<RationalPolynomial> {
    range_check(d > p && p >= 2, "gamma needs d > p >= 2")?;
    let (d, p) = (d as i64, p as i64);
    Ok((1..=p).fold(RationalPolynomial::zero(), |acc, j| {
        &acc + &(&binom(1, j - 2, j - 1) * &binom(1, d - j, d - j))
    }))
}

/// `g_{d,p}(m) = f_{d,p}(m) / binom(d-p+m, d-p)` as a polynomial of degree
/// `p - 1`; the division is exact.
pub fn g_polynomial(d: usize, p: usize) -> Result<RationalPolynomial> {
    let f = ehrhart_gamma(d, p)?;
    let (q, r) = f.div_rem(&binom(1, (d - p) as i64, (d - p) as i64));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `g_{d,p}(k)`. At `k = -1..=-(d-p)` both numerator and denominator vanish
/// and the value is the one of the quotient polynomial.
pub fn g_func(d: usize, p: usize, k: i64) -> Result<BigRational> {
    Ok(g_polynomial(d, p)?.eval_int(k))
}

/// Closed-form Ehrhart polynomial of the edge polytope of `g`, when `g` is a
/// complete multipartite graph or a loop graph of type α, β or γ.
pub fn edge_closed_form(g: &Graph) -> Option<RationalPolynomial> {
    if g.is_simple() {
        return multipartite_type(g).and_then(|p| ehrhart_multipartite(&p).ok());
    }
    match g.smooth_class()? {
        SmoothClass::Alpha { p, q } => ehrhart_alpha(p, q).ok(),
        SmoothClass::Beta { p, q } => ehrhart_beta(p, q).ok(),
        SmoothClass::Gamma { d, p } => ehrhart_gamma(d, p).ok(),
    }
}

/// The partition `(q_1, ..., q_t)` if `g` is `K_{q_1,...,q_t}` with `t >= 2`:
/// non-adjacency must be an equivalence relation.
pub fn multipartite_type(g: &Graph) -> Option<Partition> {
    let d = g.order();
    let mut seen = vec![false; d + 1];
    let mut parts = Vec::new();
    for v in 1..=d {
        if seen[v] {
            continue;
        }
        let class: Vec<usize> = (1..=d).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &a in &class {
            for &b in &class {
                if a != b && g.has_edge(a, b) {
                    return None;
                }
            }
            seen[a] = true;
        }
        parts.push(class.len());
    }
    let squares: usize = parts.iter().map(|q| q * q).sum();
    let consistent = parts.iter().sum::<usize>() == d && g.num_edges() * 2 + squares == d * d;
    (consistent && parts.len() >= 2)
        .then(|| Partition::new(parts).ok())
        .flatten()
}

/// Delta-vector `δ_0..δ_D` of an Ehrhart polynomial of degree `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Self { entries }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// `δ_1 <= δ_i` for `1 <= i < D`, required whenever `δ_D != 0`.
    pub fn satisfies_hibi_bound(&self) -> bool {
        let d = self.dim();
        if d < 2 || self.entries[d].is_zero() {
            return true;
        }
        self.entries[1..d].iter().all(|e| self.entries[1] <= *e)
    }

    /// Sum of the entries, the normalized volume.
    pub fn volume(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// `i(m) = Σ_j δ_j binom(m + D - j, D)`.
    pub fn to_polynomial(&self) -> RationalPolynomial {
        let d = self.dim() as i64;
        self.entries
            .iter()
            .enumerate()
            .fold(RationalPolynomial::zero(), |acc, (j, e)| {
                let term = binom(1, d - j as i64, d).scale(&BigRational::from_integer(e.clone()));
                &acc + &term
            })
    }

    /// The delta-polynomial `Σ δ_j t^j`.
    pub fn generating_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(
            self.entries
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        )
    }

    fn from_generating(p: &RationalPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| c.to_integer()).collect())
    }
}

/// `δ_j = Σ_{k=0}^{j} (-1)^k binom(D+1, k) i(j-k)` with `D = deg i`.
pub fn delta_vector(poly: &RationalPolynomial) -> Result<DeltaVector> {
    let d = poly.degree().ok_or(Error::ZeroPolynomial)?;
    if poly.eval_int(0) != BigRational::one() {
        return Err(Error::NotEhrhart("value at 0 is not 1".into()));
    }
    let values: Vec<BigRational> = (0..=d as i64).map(|m| poly.eval_int(m)).collect();
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut s = BigRational::zero();
        let mut c = BigInt::one();
        for k in 0..=j {
            let term = &values[j - k] * BigRational::from_integer(c.clone());
            if k % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
            c = c * BigInt::from(d + 1 - k) / BigInt::from(k + 1);
        }
        if !s.is_integer() {
            return Err(Error::NotEhrhart(format!("δ_{j} = {s} is not an integer")));
        }
        entries.push(s.to_integer());
    }
    Ok(DeltaVector::new(entries))
}

/// `i(m) = (-1)^D i(-m-1)` as a polynomial identity.
pub fn is_gorenstein(poly: &RationalPolynomial, dim: usize) -> bool {
    let reflected = poly.compose_linear(&rat(-1), &rat(-1));
    let reflected = if dim % 2 == 0 { reflected } else { -&reflected };
    (poly - &reflected).is_zero()
}

/// δ of the symmetric edge polytope of a tree of order `d`: `binom(d-1, i)`.
pub fn symmetric_delta_tree(d: usize) -> DeltaVector {
    DeltaVector::new((0..d).map(|i| binomial_int(d - 1, i)).collect())
}

/// δ of the symmetric edge polytope of `K_d`: `binom(d-1, i)^2`.
pub fn symmetric_delta_complete(d: usize) -> DeltaVector {
    DeltaVector::new(
        (0..d)
            .map(|i| {
                let b = binomial_int(d - 1, i);
                &b * &b
            })
            .collect(),
    )
}

/// δ of the symmetric edge polytope of `K_{2,d-2}`:
/// `(1+t)^{d-3} (1 + 2(d-2) t + t^2)`.
pub fn symmetric_delta_k2(d: usize) -> DeltaVector {
    assert!(d >= 3);
    let one_plus_t = RationalPolynomial::from_integers(&[1, 1]);
    let mut p = RationalPolynomial::from_integers(&[1, 2 * (d as i64 - 2), 1]);
    for _ in 0..d - 3 {
        p = &p * &one_plus_t;
    }
    DeltaVector::from_generating(&p)
}

fn binomial_int(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Closed-form δ of the symmetric edge polytope of a connected simple graph
/// whose blocks are all complete graphs or `K_{2,n}`.
///
/// Cutting at an articulation vertex turns the polytope into the free sum of
/// the two sides, and for reflexive polytopes the delta-polynomial of a free
/// sum is the product of the factors.
pub fn symmetric_closed_form_delta(g: &Graph) -> Option<DeltaVector> {
    let blocks = graphs::biconnected_components(g).ok()?;
    let mut product = RationalPolynomial::one();
    for b in &blocks {
        let k = b.order();
        let delta = if b.num_edges() == k * (k - 1) / 2 {
            symmetric_delta_complete(k)
        } else if k >= 4
            && multipartite_type(b).is_some_and(|p| p.len() == 2 && p.parts()[1] == 2)
        {
            symmetric_delta_k2(k)
        } else {
            return None;
        };
        product = &product * &delta.generating_polynomial();
    }
    Some(DeltaVector::from_generating(&product))
}

/// Closed-form Ehrhart polynomial of `g`'s polytope of the given kind, if the
/// graph belongs to a family that has one.
pub fn closed_form(g: &Graph, kind: PolytopeKind) -> Option<RationalPolynomial> {
    match kind {
        PolytopeKind::Edge => edge_closed_form(g),
        PolytopeKind::Symmetric => symmetric_closed_form_delta(g).map(|d| d.to_polynomial()),
        PolytopeKind::General => None,
    }
}

/// Brute-force Ehrhart polynomial of `g`'s polytope of the given kind.
pub fn bruteforce(g: &Graph, kind: PolytopeKind) -> Result<RationalPolynomial> {
    ehrhart_bruteforce(&polytopes::polytope(g, kind)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{
        beta_family, complete_bipartite, complete_graph, complete_multipartite, cycle,
        gamma_family, path, star,
    };
    use crate::polytopes::{edge_polytope, symmetric_edge_polytope};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn interpolation() {
        let p = interpolate(&ints(&[1, 3, 6]), 2).unwrap();
        assert_eq!(p, RationalPolynomial::binomial(1, 2, 2));
        assert_eq!(interpolate(&ints(&[1, 1]), 0).is_err(), true);
        assert_eq!(interpolate(&ints(&[1]), 0).unwrap(), RationalPolynomial::one());
        // square pyramidal numbers m(m+1)(2m+1)/6 shifted: 1, 5, 14, 30
        let p = interpolate(&ints(&[1, 5, 14, 30]), 3).unwrap();
        for m in 0..10i64 {
            let n = m + 1;
            assert_eq!(p.eval_int(m), rat(n * (n + 1) * (2 * n + 1) / 6));
        }
    }

    #[test]
    fn complete_graph_formula() {
        assert_eq!(ehrhart_complete(2).unwrap(), RationalPolynomial::one());
        assert_eq!(ehrhart_complete(3).unwrap(), RationalPolynomial::binomial(1, 2, 2));
        let g = complete_graph(5).unwrap();
        assert_eq!(
            ehrhart_complete(5).unwrap(),
            ehrhart_bruteforce(&edge_polytope(&g).unwrap()).unwrap()
        );
    }

    #[test]
    fn p_and_f_identities() {
        for d in 2..=12 {
            for j in 1..=d {
                let v = p_func(d, j).unwrap().eval_int(0);
                assert_eq!(v, rat(i64::from(j == d)));
            }
            for j in 1..=d / 2 {
                let lhs = p_func(d, d - j).unwrap();
                let rhs = p_func(d, j).unwrap().scale(&(rat(d as i64) / rat(j as i64) - rat(1)));
                assert_eq!(lhs, rhs, "d={d} j={j}");
            }
            let top = f_func(d, d).unwrap();
            assert_eq!(top, RationalPolynomial::binomial(2, d as i64 - 1, d - 1));
        }
        assert!(p_func(3, 0).is_err());
        assert!(f_func(3, 4).is_err());
    }

    #[test]
    fn multipartite_examples() {
        let k3 = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(ehrhart_multipartite(&k3).unwrap(), RationalPolynomial::binomial(1, 2, 2));
        assert_eq!(ehrhart_eq1(&k3).unwrap(), RationalPolynomial::binomial(1, 2, 2));
        for (p, q) in [(2, 2), (3, 2), (4, 1), (3, 3)] {
            let part = Partition::new(vec![p, q]).unwrap();
            let expected = ehrhart_alpha(p, q).unwrap();
            assert_eq!(ehrhart_multipartite(&part).unwrap(), expected);
            assert_eq!(ehrhart_eq1(&part).unwrap(), expected);
        }
        // (n,1,1): binom(m+n, n) (nm + n + 1)/(n + 1)
        for n in 1..=6i64 {
            let part = Partition::new(vec![n as usize, 1, 1]).unwrap();
            let expected = &RationalPolynomial::binomial(1, n, n as usize)
                * &RationalPolynomial::linear(rat(n) / rat(n + 1), rat(1));
            assert_eq!(ehrhart_multipartite(&part).unwrap(), expected, "n={n}");
        }
        for d in 2..=10 {
            for part in Partition::all(d).iter().filter(|p| p.len() >= 2) {
                assert_eq!(ehrhart_multipartite(part).unwrap(), ehrhart_eq1(part).unwrap());
            }
        }
        assert!(ehrhart_multipartite(&Partition::new(vec![3]).unwrap()).is_err());
    }

    #[test]
    fn degrees_of_multipartite() {
        for d in 3..=8 {
            for part in Partition::all(d).iter().filter(|p| p.len() >= 2) {
                let deg = ehrhart_multipartite(part).unwrap().degree().unwrap();
                assert_eq!(deg, if part.len() == 2 { d - 2 } else { d - 1 });
            }
        }
    }

    #[test]
    fn loop_families() {
        // p = 2: ((dm + d - 1)/(d - 1)) binom(d - 2 + m, d - 2)
        for d in 3..=10i64 {
            let expected = &RationalPolynomial::binomial(1, d - 2, d as usize - 2)
                * &RationalPolynomial::linear(rat(d) / rat(d - 1), rat(1));
            assert_eq!(ehrhart_gamma(d as usize, 2).unwrap(), expected);
        }
        for d in 3..=10 {
            for p in 2..d {
                assert_eq!(ehrhart_gamma(d, p).unwrap().degree(), Some(d - 1));
                assert_eq!(g_func(d, p, 0).unwrap(), rat(1));
            }
        }
        assert_eq!(ehrhart_beta(2, 3).unwrap().eval_int(1), rat(12));
        assert!(ehrhart_gamma(4, 1).is_err());
        assert!(ehrhart_gamma(4, 4).is_err());
        // removable singularity: g_{6,2}(m) = (6m + 5)/5
        assert_eq!(g_func(6, 2, -2).unwrap(), crate::poly::rat_frac(-7, 5));
        for d in 3..=10 {
            for p in 2..d {
                let f = ehrhart_gamma(d, p).unwrap();
                let g = g_polynomial(d, p).unwrap();
                assert_eq!(g.degree(), Some(p - 1));
                let den = RationalPolynomial::binomial(1, (d - p) as i64, d - p);
                assert_eq!(&g * &den, f);
            }
        }
        let g = gamma_family(4, 2).unwrap();
        assert_eq!(
            ehrhart_bruteforce(&edge_polytope(&g).unwrap()).unwrap(),
            ehrhart_gamma(4, 2).unwrap()
        );
        assert_eq!(edge_closed_form(&g), Some(ehrhart_gamma(4, 2).unwrap()));
        let b = beta_family(2, 1).unwrap();
        assert_eq!(
            ehrhart_bruteforce(&edge_polytope(&b).unwrap()).unwrap(),
            ehrhart_beta(2, 1).unwrap()
        );
    }

    #[test]
    fn g_sign_pattern() {
        for d in 4..=10 {
            for p in 2..d {
                if d + 2 < 2 * p {
                    assert!(g_func(d, p, -((d - p + 1) as i64)).unwrap().is_zero());
                    continue;
                }
                for k in 0..p as i64 {
                    let v = g_func(d, p, -k).unwrap();
                    let signed = if k % 2 == 0 { v } else { -v };
                    assert!(signed.is_positive(), "d={d} p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn delta_vectors() {
        let k4 = ehrhart_complete(4).unwrap();
        let delta = delta_vector(&k4).unwrap();
        assert_eq!(delta, DeltaVector::from_i64(&[1, 2, 1, 0]));
        assert!(!is_gorenstein(&k4, 3));
        assert_eq!(delta.to_polynomial(), k4);
        assert!(is_gorenstein(&RationalPolynomial::one(), 0));
        assert!(delta_vector(&RationalPolynomial::from_integers(&[2, 1])).is_err());
        let bad = RationalPolynomial::new(vec![rat(1), crate::poly::rat_frac(1, 2)]);
        assert!(delta_vector(&bad).is_err());
    }

    #[test]
    fn symmetric_formulas_against_counts() {
        for d in 2..=6 {
            let t = symmetric_edge_polytope(&path(d).unwrap()).unwrap();
            let poly = ehrhart_bruteforce(&t).unwrap();
            assert_eq!(delta_vector(&poly).unwrap(), symmetric_delta_tree(d));
            let k = symmetric_edge_polytope(&complete_graph(d).unwrap()).unwrap();
            let poly = ehrhart_bruteforce(&k).unwrap();
            assert_eq!(delta_vector(&poly).unwrap(), symmetric_delta_complete(d));
            assert!(is_gorenstein(&poly, d - 1));
        }
        for d in 4..=6 {
            let g = complete_bipartite(2, d - 2).unwrap();
            let poly = bruteforce(&g, PolytopeKind::Symmetric).unwrap();
            assert_eq!(delta_vector(&poly).unwrap(), symmetric_delta_k2(d));
        }
        assert_eq!(symmetric_delta_k2(4), DeltaVector::from_i64(&[1, 5, 5, 1]));
    }

    #[test]
    fn block_products() {
        let bowtie =
            Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)], &[]).unwrap();
        let closed = closed_form(&bowtie, PolytopeKind::Symmetric).unwrap();
        assert_eq!(closed, bruteforce(&bowtie, PolytopeKind::Symmetric).unwrap());
        let star5 = star(5).unwrap();
        assert_eq!(symmetric_closed_form_delta(&star5), Some(symmetric_delta_tree(5)));
        assert!(symmetric_closed_form_delta(&cycle(5).unwrap()).is_none());
    }

    #[test]
    fn multipartite_recognition() {
        let part = Partition::new(vec![3, 2, 1]).unwrap();
        let g = complete_multipartite(&part).unwrap().permute(&[6, 1, 5, 2, 4, 3]);
        assert_eq!(multipartite_type(&g), Some(part));
        assert_eq!(multipartite_type(&path(4).unwrap()), None);
        assert_eq!(
            multipartite_type(&cycle(4).unwrap()),
            Some(Partition::new(vec![2, 2]).unwrap())
        );
    }
}
