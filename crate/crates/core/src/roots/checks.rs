//! Root-location checks. Each returns a [`Verdict`] whose `margin` is the
//! smallest slack over all roots: positive inside the region, negative for a
//! violation, with `worst` the root attaining it.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::RootSet;
use crate::polytopes::PolytopeKind;
use crate::{Error, Result};

/// Tolerance on real-part comparisons and the threshold for `|ℜ z + 1/2|`.
pub const DEFAULT_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub worst: Option<Complex64>,
    pub margin: f64,
}

impl Verdict {
    pub fn not_applicable() -> Self {
        Verdict {
            status: Status::NotApplicable,
            worst: None,
            margin: f64::INFINITY,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Smallest `slack(z)` over the roots; passes when it is at least `-tol`.
    fn from_slack(rs: &RootSet, tol: f64, slack: impl Fn(Complex64) -> f64) -> Self {
        let mut v = Verdict {
            status: Status::Pass,
            worst: None,
            margin: f64::INFINITY,
        };
        for z in rs.values() {
            let s = slack(z);
            if s < v.margin {
                v.margin = s;
                v.worst = Some(z);
            }
        }
        if v.margin < -tol {
            v.status = Status::Fail;
        }
        v
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

/// `-D <= ℜ z <= D - 1`.
pub fn check_strip(rs: &RootSet, dim: usize, tol: f64) -> Verdict {
    let d = dim as f64;
    Verdict::from_slack(rs, tol, |z| (z.re + d).min(d - 1.0 - z.re))
}

/// `ℜ z < 0` for every root, with `ℜ z >= -tol` counted as a failure.
pub fn check_stability(rs: &RootSet, tol: f64) -> Verdict {
    Verdict::from_slack(rs, 0.0, |z| -z.re - tol)
}

/// `|z + d/4| <= d/4`, or `z` within `tol` of an integer in `-(d-1)..=-1`.
pub fn check_circle(rs: &RootSet, d: usize, tol: f64) -> Verdict {
    let c = d as f64 / 4.0;
    Verdict::from_slack(rs, tol, |z| {
        let inside = c - (z + c).norm();
        let k = z.re.round();
        if k <= -1.0 && k >= -(d as f64 - 1.0) && (z - k).norm() <= tol {
            inside.max(0.0)
        } else {
            inside
        }
    })
}

/// `-D/2 <= ℜ z <= D/2 - 1`.
pub fn check_narrow_strip(rs: &RootSet, dim: usize, tol: f64) -> Verdict {
    let h = dim as f64 / 2.0;
    Verdict::from_slack(rs, tol, |z| (z.re + h).min(h - 1.0 - z.re))
}

/// `max |ℜ z + 1/2|`, 0 for an empty set.
pub fn deviation_from_half_line(rs: &RootSet) -> f64 {
    rs.values()
        .iter()
        .map(|z| (z.re + 0.5).abs())
        .fold(0.0, f64::max)
}

fn check_half_line(rs: &RootSet, tol: f64) -> Verdict {
    Verdict::from_slack(rs, 0.0, |z| tol - (z.re + 0.5).abs())
}

fn gamma_range(d: usize, p: usize) -> Result<()> {
    if d > p && p >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("need d > p >= 2, got d={d} p={p}")))
    }
}

/// Roots of `f_{d,p}` with `d - 2p + 2 >= 0`: exactly the simple integer
/// roots `-1..=-(d-p)` and one real root in each `(-k, -k+1)`,
/// `k = 1..p-1`.
pub fn check_interlacing(d: usize, p: usize, rs: &RootSet, tol: f64) -> Result<Verdict> {
    gamma_range(d, p)?;
    if d + 2 < 2 * p {
        return Err(Error::InvalidArgument(format!(
            "interlacing needs d - 2p + 2 >= 0, got d={d} p={p}"
        )));
    }
    let fail = |worst: Option<Complex64>| Verdict {
        status: Status::Fail,
        worst,
        margin: -1.0,
    };
    let mut ints = rs.integer_roots();
    ints.sort_unstable();
    let expected: Vec<(i64, usize)> = (-((d - p) as i64)..=-1).map(|k| (k, 1)).collect();
    if ints != expected {
        return Ok(fail(None));
    }
    let mut others: Vec<Complex64> = rs
        .roots
        .iter()
        .filter(|r| r.as_integer().is_none())
        .flat_map(|r| std::iter::repeat(r.value).take(r.multiplicity))
        .collect();
    if others.len() != p - 1 {
        return Ok(fail(others.first().copied()));
    }
    others.sort_by(|a, b| b.re.total_cmp(&a.re));
    let mut margin = f64::INFINITY;
    let mut worst = None;
    for (i, z) in others.iter().enumerate() {
        let k = (i + 1) as f64;
        if z.im.abs() > tol {
            return Ok(fail(Some(*z)));
        }
        // distance into the open interval (-k, -k+1)
        let slack = (z.re + k).min(-k + 1.0 - z.re);
        if slack < margin {
            margin = slack;
            worst = Some(*z);
        }
    }
    Ok(Verdict {
        status: if margin > 0.0 { Status::Pass } else { Status::Fail },
        worst,
        margin,
    })
}

/// Every integer in `-1..=-⌊(d-1)/2⌋` is an exact root.
pub fn check_halfinteger_floor(d: usize, p: usize, rs: &RootSet) -> Result<Verdict> {
    gamma_range(d, p)?;
    let top = ((d - 1) / 2) as i64;
    let missing = (1..=top).find(|&k| !rs.is_integer_root(-k));
    Ok(match missing {
        None => Verdict {
            status: Status::Pass,
            worst: None,
            margin: 0.0,
        },
        Some(k) => Verdict {
            status: Status::Fail,
            worst: Some(Complex64::new(-(k as f64), 0.0)),
            margin: -1.0,
        },
    })
}

/// Checks run over a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Strip,
    Stability,
    Circle,
    NarrowStrip,
    HalfLine,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Strip,
        Check::Stability,
        Check::Circle,
        Check::NarrowStrip,
        Check::HalfLine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Strip => "strip",
            Check::Stability => "stability",
            Check::Circle => "circle",
            Check::NarrowStrip => "narrow-strip",
            Check::HalfLine => "half-line",
        }
    }

    /// Whether a failure should fail a run. Stability and the half line are
    /// open questions with known exceptions, so they are only reported.
    pub fn gated(self) -> bool {
        matches!(self, Check::Strip | Check::Circle | Check::NarrowStrip)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub graph_key: String,
    pub kind: PolytopeKind,
    pub dim: usize,
    pub verdicts: Vec<(Check, Verdict)>,
}

/// What is known about the polytope a root set came from.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub kind: PolytopeKind,
    /// Number of graph vertices.
    pub order: usize,
    pub dim: usize,
    pub gorenstein: bool,
    pub multipartite: bool,
}

impl ConjectureReport {
    pub fn evaluate(
        graph_key: &str,
        ctx: Context,
        rs: &RootSet,
        checks: &[Check],
        tol: f64,
    ) -> Self {
        let verdicts = checks
            .iter()
            .map(|&c| {
                let v = match c {
                    Check::Strip => check_strip(rs, ctx.dim, tol),
                    Check::Stability => check_stability(rs, tol),
                    Check::Circle if ctx.multipartite => check_circle(rs, ctx.order, tol),
                    Check::NarrowStrip if ctx.gorenstein => check_narrow_strip(rs, ctx.dim, tol),
                    Check::HalfLine if ctx.gorenstein => check_half_line(rs, tol),
                    _ => Verdict::not_applicable(),
                };
                (c, v)
            })
            .collect();
        ConjectureReport {
            graph_key: graph_key.to_string(),
            kind: ctx.kind,
            dim: ctx.dim,
            verdicts,
        }
    }

    pub fn verdict(&self, check: Check) -> Option<&Verdict> {
        self.verdicts.iter().find(|(c, _)| *c == check).map(|(_, v)| v)
    }

    pub fn gated_failure(&self) -> bool {
        self.verdicts.iter().any(|(c, v)| c.gated() && v.failed())
    }

    pub const CSV_HEADER: &'static str = "graph_key,polytope,D,check,status,worst_re,worst_im,margin";

    pub fn csv_rows(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .map(|(c, v)| {
                let (re, im) = v
                    .worst
                    .map(|z| (super::sig12(z.re), super::sig12(z.im)))
                    .unwrap_or_default();
                let margin = if v.margin.is_finite() {
                    super::sig12(v.margin)
                } else {
                    String::new()
                };
                format!(
                    "{},{},{},{},{},{re},{im},{margin}",
                    self.graph_key,
                    self.kind.name(),
                    self.dim,
                    c,
                    v.status
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::{ehrhart_complete, ehrhart_gamma};
    use crate::poly::RationalPolynomial;
    use crate::roots::complex_roots;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn strip() {
        let k3 = complex_roots(&ehrhart_complete(3).unwrap()).unwrap();
        let v = check_strip(&k3, 2, DEFAULT_TOL);
        assert!(v.passed());
        assert_eq!(v.margin, 0.0);
        assert_eq!(v.worst, Some(c(-2.0, 0.0)));
        let bad = RootSet::from_values(&[c(-4.0, 0.0), c(-1.0, 0.0), c(-0.5, 1.0)]);
        assert!(check_strip(&bad, 3, DEFAULT_TOL).failed());
    }

    #[test]
    fn stability() {
        let rs = complex_roots(&RationalPolynomial::from_integers(&[-1, 1])).unwrap();
        assert!(check_stability(&rs, DEFAULT_TOL).failed());
        let near = RootSet::from_values(&[c(-0.001610, 2.324505), c(-0.001610, -2.324505)]);
        assert!(check_stability(&near, DEFAULT_TOL).passed());
    }

    #[test]
    fn circle() {
        // integer branch: -(d-2) for the star lies outside the disk for d = 6
        let rs = RootSet::from_values(&[c(-4.0, 0.0), c(-1.0, 0.0)]);
        assert!(check_circle(&rs, 6, DEFAULT_TOL).passed());
        let rs = RootSet::from_values(&[c(-2.0, 0.0)]);
        assert!(check_circle(&rs, 3, DEFAULT_TOL).passed());
        let rs = RootSet::from_values(&[c(-1.5, 2.0)]);
        assert!(check_circle(&rs, 6, DEFAULT_TOL).failed());
        let rs = RootSet::from_values(&[c(0.1, 0.0)]);
        assert!(check_circle(&rs, 6, DEFAULT_TOL).failed());
    }

    #[test]
    fn narrow_strip_and_half_line() {
        let rs = RootSet::from_values(&[c(-0.5, 1.0), c(-0.5, -1.0)]);
        assert!(check_narrow_strip(&rs, 2, DEFAULT_TOL).passed());
        assert_eq!(deviation_from_half_line(&rs), 0.0);
        let rs = RootSet::from_values(&[c(2.0, 0.0), c(-3.0, 0.0)]);
        assert!(check_narrow_strip(&rs, 4, DEFAULT_TOL).failed());
        assert_eq!(deviation_from_half_line(&RootSet::from_values(&[])), 0.0);
    }

    #[test]
    fn interlacing_rows() {
        let rows: [(usize, &[f64]); 2] = [
            (7, &[-5.31, -4.42, -3.47, -2.53, -1.58, -0.69]),
            (5, &[-3.83, -2.77, -1.74, -0.76]),
        ];
        for (p, alphas) in rows {
            let rs = complex_roots(&ehrhart_gamma(12, p).unwrap()).unwrap();
            assert!(check_interlacing(12, p, &rs, DEFAULT_TOL).unwrap().passed());
            let mut found: Vec<f64> = rs
                .roots
                .iter()
                .filter(|r| r.as_integer().is_none())
                .map(|r| r.value.re)
                .collect();
            found.sort_by(f64::total_cmp);
            for (x, y) in found.iter().zip(alphas) {
                assert!((x - y).abs() < 0.005, "{x} vs {y}");
            }
        }
        for d in 3..=10 {
            let rs = complex_roots(&ehrhart_gamma(d, 2).unwrap()).unwrap();
            assert!(check_interlacing(d, 2, &rs, DEFAULT_TOL).unwrap().passed());
        }
        let rs = complex_roots(&ehrhart_gamma(12, 8).unwrap()).unwrap();
        assert!(check_interlacing(12, 8, &rs, DEFAULT_TOL).is_err());
    }

    #[test]
    fn halfinteger_floor() {
        for p in [3, 8, 9, 10, 11] {
            let rs = complex_roots(&ehrhart_gamma(12, p).unwrap()).unwrap();
            assert!(check_halfinteger_floor(12, p, &rs).unwrap().passed());
        }
        let rs = complex_roots(&ehrhart_gamma(5, 2).unwrap()).unwrap();
        assert!(check_halfinteger_floor(5, 2, &rs).unwrap().passed());
        let rs = RootSet::from_values(&[c(-1.0, 0.0)]);
        assert!(check_halfinteger_floor(5, 2, &rs).unwrap().failed());
        assert!(check_halfinteger_floor(5, 1, &rs).is_err());
    }

    #[test]
    fn reports() {
        let rs = complex_roots(&ehrhart_complete(3).unwrap()).unwrap();
        let ctx = Context {
            kind: PolytopeKind::Edge,
            order: 3,
            dim: 2,
            gorenstein: false,
            multipartite: true,
        };
        let r = ConjectureReport::evaluate("3:0:e", ctx, &rs, &Check::ALL, DEFAULT_TOL);
        assert!(!r.gated_failure());
        assert_eq!(r.verdict(Check::NarrowStrip).unwrap().status, Status::NotApplicable);
        assert!(r.verdict(Check::Circle).unwrap().passed());
        assert_eq!(r.csv_rows()[0], "3:0:e,edge,2,strip,pass,-2,0,0");
        assert_eq!("narrow-strip".parse::<Check>().unwrap(), Check::NarrowStrip);
        assert!("nope".parse::<Check>().is_err());
    }
}
