//! Roots of Ehrhart polynomials.
//!
//! Integer roots and rational roots are found and deflated exactly. The rest
//! is split into square-free factors, each solved by Aberth iteration and
//! polished with Newton steps at double-double precision, so every numeric
//! root is simple in the factor it comes from.

mod aberth;
mod checks;
mod dd;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::RationalPolynomial;
use crate::{Error, Result};

pub use aberth::MAX_ITERATIONS;
pub use checks::{
    check_circle, check_halfinteger_floor, check_interlacing, check_narrow_strip,
    check_stability, check_strip, deviation_from_half_line, Check, ConjectureReport, Context,
    Status, Verdict,
    DEFAULT_TOL,
};

/// Relative residual every numeric root must meet: `|p(z)| <= RESIDUAL_BOUND
/// * Σ |a_k| |z|^k`.
pub const RESIDUAL_BOUND: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    ExactInteger,
    ExactRational,
    Numeric,
}

impl RootKind {
    pub fn is_exact(self) -> bool {
        self != RootKind::Numeric
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    /// Present for exact roots.
    pub exact: Option<BigRational>,
    pub kind: RootKind,
    pub multiplicity: usize,
    /// Relative residual for numeric roots, 0 for exact ones.
    pub residual: f64,
}

impl Root {
    fn exact(r: BigRational, multiplicity: usize) -> Self {
        let kind = if r.is_integer() {
            RootKind::ExactInteger
        } else {
            RootKind::ExactRational
        };
        Root {
            value: Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            exact: Some(r),
            kind,
            multiplicity,
            residual: 0.0,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match (&self.kind, &self.exact) {
            (RootKind::ExactInteger, Some(r)) => r.to_integer().to_i64(),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.value.im == 0.0
    }
}

/// Roots with multiplicity of a polynomial of degree `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub degree: usize,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Every root repeated by multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.value).take(r.multiplicity))
            .collect()
    }

    /// Exact integer roots with multiplicity.
    pub fn integer_roots(&self) -> Vec<(i64, usize)> {
        self.roots
            .iter()
            .filter_map(|r| r.as_integer().map(|k| (k, r.multiplicity)))
            .collect()
    }

    pub fn is_integer_root(&self, k: i64) -> bool {
        self.roots.iter().any(|r| r.as_integer() == Some(k))
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// A root set built directly from values, for checks on synthetic data.
    pub fn from_values(values: &[Complex64]) -> Self {
        RootSet {
            roots: values
                .iter()
                .map(|&value| Root {
                    value,
                    exact: None,
                    kind: RootKind::Numeric,
                    multiplicity: 1,
                    residual: 0.0,
                })
                .collect(),
            degree: values.len(),
        }
    }

    /// CSV rows `graph_key,polytope,D,re,im,exact,residual`, one per root
    /// counted with multiplicity.
    pub fn csv_rows(&self, graph_key: &str, polytope: &str) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.push(format!(
                    "{graph_key},{polytope},{},{},{},{},{}",
                    self.degree,
                    sig12(r.value.re),
                    sig12(r.value.im),
                    r.kind.is_exact(),
                    sig12(r.residual)
                ));
            }
        }
        out
    }
}

pub const CSV_HEADER: &str = "graph_key,polytope,D,re,im,exact,residual";

/// Shortest decimal for `x` rounded to 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    format!("{rounded}")
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}")?,
            None if self.value.im == 0.0 => write!(f, "{:.6}", self.value.re)?,
            None => write!(f, "{:.6}{:+.6}i", self.value.re, self.value.im)?,
        }
        if self.multiplicity > 1 {
            write!(f, " (x{})", self.multiplicity)?;
        }
        Ok(())
    }
}

fn eval_integer(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Upper bound on the modulus of every root.
fn cauchy_bound(coeffs: &[BigInt]) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].to_f64().unwrap().abs();
    (0..n)
        .map(|k| (coeffs[k].to_f64().unwrap().abs() / lead).powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        * 2.0
}

/// All integer roots with multiplicity, in increasing order.
pub fn integer_roots(poly: &RationalPolynomial) -> Result<Vec<(i64, usize)>> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rest = poly.clone();
    let mut out = Vec::new();
    let mut take = |r: i64, rest: &mut RationalPolynomial| {
        let x = BigRational::from_integer(BigInt::from(r));
        let mut mult = 0;
        while rest.degree().unwrap_or(0) > 0 {
            let (q, rem) = rest.div_linear(&x);
            if !rem.is_zero() {
                break;
            }
            *rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    };
    take(0, &mut rest);
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let coeffs = rest.primitive_integer();
    let bound = cauchy_bound(&coeffs).ceil() as i64 + 1;
    let constant = coeffs[0].abs();
    let candidates: Vec<i64> = if bound <= 1_000_000 {
        (-bound..=bound)
            .filter(|&r| r != 0 && (&constant % BigInt::from(r.abs())).is_zero())
            .collect()
    } else {
        // a bound this large means coefficients of wildly different size;
        // take candidates from a numeric solve instead
        let solver = aberth::Solver::new(&coeffs);
        let mut c: Vec<i64> = solver
            .solve(0.0)
            .roots
            .iter()
            .filter(|z| z.im.abs() < 0.5 && z.re.abs() < 9e15)
            .map(|z| z.re.round() as i64)
            .filter(|&r| r != 0)
            .collect();
        c.sort_unstable();
        c.dedup();
        c
    };
    for r in candidates {
        if eval_integer(&coeffs, &BigInt::from(r)).is_zero() {
            take(r, &mut rest);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Continued-fraction convergents of `x` with denominators up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let (Some(h), Some(k)) = (
            a.checked_mul(h1).and_then(|v| v.checked_add(h0)),
            a.checked_mul(k1).and_then(|v| v.checked_add(k0)),
        ) else {
            break;
        };
        if k > max_den {
            break;
        }
        out.push((h, k));
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = y - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Options for [`complex_roots_with`].
#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Rotation of the starting circle, in radians.
    pub phase: f64,
    /// Maximal distance between a root and the conjugate of its partner.
    pub pairing_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            phase: 0.0,
            pairing_tol: 1e-7,
        }
    }
}

/// All complex roots of `poly` with multiplicity.
pub fn complex_roots(poly: &RationalPolynomial) -> Result<RootSet> {
    complex_roots_with(poly, SolverOptions::default())
}

pub fn complex_roots_with(poly: &RationalPolynomial, opts: SolverOptions) -> Result<RootSet> {
    let degree = poly.degree().ok_or(Error::ZeroPolynomial)?;
    let mut roots: Vec<Root> = Vec::new();
    let mut rest = poly.clone();
    for (r, mult) in integer_roots(poly)? {
        let x = BigRational::from_integer(BigInt::from(r));
        for _ in 0..mult {
            rest = rest.div_linear(&x).0;
        }
        roots.push(Root::exact(x, mult));
    }
    let original: Vec<dd::DD> = poly.primitive_integer().iter().map(dd::DD::from_bigint).collect();
    for (factor, mult) in rest.squarefree_factors() {
        solve_squarefree(&factor, mult, &original, opts, &mut roots)?;
    }
    roots.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    let set = RootSet { roots, degree };
    debug_assert_eq!(set.total_multiplicity(), degree);
    Ok(set)
}

fn solve_squarefree(
    factor: &RationalPolynomial,
    mult: usize,
    original: &[dd::DD],
    opts: SolverOptions,
    out: &mut Vec<Root>,
) -> Result<()> {
    let mut g = factor.clone();
    // exact rational roots, spotted from numeric approximations
    loop {
        let Some(n) = g.degree().filter(|&n| n > 0) else {
            return Ok(());
        };
        let coeffs = g.primitive_integer();
        let lead = coeffs[n].abs();
        let solver = aberth::Solver::new(&coeffs);
        let outcome = solver.solve(opts.phase);
        let approx: Vec<Complex64> = outcome.roots.iter().map(|&z| solver.polish(z)).collect();
        let mut found = None;
        'search: for z in approx.iter().filter(|z| z.im.abs() < 1e-6 * (1.0 + z.re.abs())) {
            let max_den = lead.to_i64().unwrap_or(i64::MAX).min(1 << 40);
            for (h, k) in convergents(z.re, max_den) {
                if (&lead % BigInt::from(k)).is_zero() {
                    let r = BigRational::new(BigInt::from(h), BigInt::from(k));
                    if g.eval(&r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        if let Some(r) = found {
            g = g.div_linear(&r).0;
            out.push(Root::exact(r, mult));
            continue;
        }
        return finish_numeric(&solver, outcome, approx, mult, original, opts, out);
    }
}

fn finish_numeric(
    solver: &aberth::Solver,
    outcome: aberth::Outcome,
    approx: Vec<Complex64>,
    mult: usize,
    original: &[dd::DD],
    opts: SolverOptions,
    out: &mut Vec<Root>,
) -> Result<()> {
    let n = approx.len();
    let residuals: Vec<f64> = approx.iter().map(|&z| solver.relative_residual(z)).collect();
    if !outcome.converged || residuals.iter().any(|&r| r > RESIDUAL_BOUND) {
        return Err(Error::NoConvergence {
            iterations: outcome.iterations,
            degree: n,
            certified: approx
                .iter()
                .zip(&residuals)
                .filter(|(_, &r)| r <= RESIDUAL_BOUND)
                .map(|(&z, _)| z)
                .collect(),
        });
    }
    // real roots: a real polynomial with a simple root near the axis has it
    // on the axis
    let mut real = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for z in approx {
        let snapped = solver.polish_real(z.re);
        if z.im.abs() <= opts.pairing_tol * (1.0 + z.norm())
            && solver.relative_residual(Complex64::new(snapped, 0.0)) <= RESIDUAL_BOUND
        {
            real.push(snapped);
        } else if z.im > 0.0 {
            upper.push(z);
        } else {
            lower.push(z);
        }
    }
    let mut values: Vec<Complex64> = real.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    for z in upper {
        let Some((k, dist)) = lower
            .iter()
            .enumerate()
            .map(|(k, w)| (k, (w.conj() - z).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
        else {
            return Err(Error::UnpairedRoot { re: z.re, im: z.im });
        };
        if dist > opts.pairing_tol * (1.0 + z.norm()) {
            return Err(Error::UnpairedRoot { re: z.re, im: z.im });
        }
        let w = lower.swap_remove(k);
        let re = (z.re + w.re) / 2.0;
        let im = (z.im - w.im) / 2.0;
        values.push(Complex64::new(re, im));
        values.push(Complex64::new(re, -im));
    }
    if let Some(z) = lower.first() {
        return Err(Error::UnpairedRoot { re: z.re, im: z.im });
    }
    for value in values {
        out.push(Root {
            value,
            exact: None,
            kind: RootKind::Numeric,
            multiplicity: mult,
            residual: aberth::relative_residual(original, value)
                .max(solver.relative_residual(value)),
        });
    }
    Ok(())
}

/// Continued-fraction convergents of `x` as rationals.
pub fn rational_convergents(x: f64, max_den: i64) -> Vec<BigRational> {
    convergents(x, max_den)
        .into_iter()
        .map(|(h, k)| BigRational::new(BigInt::from(h), BigInt::from(k)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::{ehrhart_complete, ehrhart_gamma, ehrhart_multipartite};
    use crate::poly::{rat, rat_frac};
    use crate::Partition;

    #[test]
    fn integer_roots_of_families() {
        for d in 3..=10usize {
            let roots = integer_roots(&ehrhart_gamma(d, 2).unwrap()).unwrap();
            let expected: Vec<(i64, usize)> = (-(d as i64 - 2)..=-1).map(|k| (k, 1)).collect();
            assert_eq!(roots, expected, "d={d}");
        }
        for (p, q) in [(2usize, 3usize), (4, 2), (3, 3)] {
            let poly = ehrhart_multipartite(&Partition::new(vec![p, q]).unwrap()).unwrap();
            let ints = integer_roots(&poly).unwrap();
            let distinct: Vec<i64> = ints.iter().map(|&(r, _)| r).collect();
            let top = (p.max(q) - 1) as i64;
            assert_eq!(distinct, (-top..=-1).collect::<Vec<_>>());
            assert_eq!(ints.iter().map(|&(_, m)| m).sum::<usize>(), p + q - 2);
        }
        assert!(integer_roots(&RationalPolynomial::one()).unwrap().is_empty());
        assert_eq!(integer_roots(&RationalPolynomial::zero()), Err(Error::ZeroPolynomial));
        let p = RationalPolynomial::from_roots(&[rat(0), rat(0), rat(5), rat(-7)]);
        assert_eq!(integer_roots(&p).unwrap(), vec![(-7, 1), (0, 2), (5, 1)]);
    }

    #[test]
    fn exact_rational_roots() {
        let rs = complex_roots(&ehrhart_gamma(12, 2).unwrap()).unwrap();
        assert_eq!(rs.total_multiplicity(), 11);
        let rational: Vec<&Root> =
            rs.roots.iter().filter(|r| r.kind == RootKind::ExactRational).collect();
        assert_eq!(rational.len(), 1);
        assert_eq!(rational[0].exact, Some(rat_frac(-11, 12)));
        for n in 1..=6i64 {
            let poly = ehrhart_multipartite(&Partition::new(vec![n as usize, 1, 1]).unwrap())
                .unwrap();
            let rs = complex_roots(&poly).unwrap();
            if n > 1 {
                let r = rs.roots.iter().find(|r| r.kind == RootKind::ExactRational).unwrap();
                assert_eq!(r.exact, Some(rat_frac(-(n + 1), n)));
            }
        }
    }

    #[test]
    fn complex_pairs_and_residuals() {
        let rs = complex_roots(&ehrhart_gamma(12, 10).unwrap()).unwrap();
        let pair: Vec<Complex64> = rs
            .values()
            .into_iter()
            .filter(|z| z.im != 0.0)
            .collect();
        assert_eq!(pair.len(), 2);
        assert!((pair[0].re - -4.16).abs() < 0.005 && (pair[0].im.abs() - 0.18).abs() < 0.005);
        assert_eq!(pair[0], pair[1].conj());
        assert!(rs.max_residual() <= RESIDUAL_BOUND);
        // m^2 + 1
        let rs = complex_roots(&RationalPolynomial::from_integers(&[1, 0, 1])).unwrap();
        assert_eq!(rs.values(), vec![Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0)]);
    }

    #[test]
    fn repeated_nonrational_roots() {
        // (m^2 + m + 1)^2 (m^2 - 2)
        let a = RationalPolynomial::from_integers(&[1, 1, 1]);
        let b = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let rs = complex_roots(&(&(&a * &a) * &b)).unwrap();
        assert_eq!(rs.total_multiplicity(), 6);
        assert_eq!(rs.roots.iter().filter(|r| r.multiplicity == 2).count(), 2);
        let s2 = rs.roots.iter().find(|r| r.value.re > 1.0).unwrap();
        assert!((s2.value.re - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn stable_under_restart() {
        for d in [6usize, 9, 12] {
            let poly = ehrhart_complete(d).unwrap();
            let a = complex_roots(&poly).unwrap().values();
            let b = complex_roots_with(&poly, SolverOptions { phase: 1.234, ..Default::default() })
                .unwrap()
                .values();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn constants_have_no_roots() {
        let rs = complex_roots(&RationalPolynomial::one()).unwrap();
        assert_eq!(rs.total_multiplicity(), 0);
        assert!(complex_roots(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn csv_and_convergents() {
        assert_eq!(sig12(-0.58300212345678901), "-0.583002123457");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-2.0), "-2");
        let rs = complex_roots(&ehrhart_complete(3).unwrap()).unwrap();
        assert_eq!(
            rs.csv_rows("3:0:e", "edge"),
            vec!["3:0:e,edge,2,-2,0,true,0", "3:0:e,edge,2,-1,0,true,0"]
        );
        let c = rational_convergents(-11.0 / 12.0, 100);
        assert_eq!(c.last(), Some(&rat_frac(-11, 12)));
    }
}
