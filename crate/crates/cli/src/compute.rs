//! Building a cache record for one graph.

use clap::ValueEnum;

use ehrhart_core::ehrhart;
use ehrhart_core::roots::{self, Check, ConjectureReport, Context, RootSet};
use ehrhart_core::{PolytopeKind, RationalPolynomial};

use crate::cache::{CacheRecord, RootRecord, VerdictRecord, VERSION};
use crate::corpus::Entry;
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed form when the graph has one, brute force otherwise.
    Auto,
    Formula,
    Bruteforce,
    /// Both paths; a disagreement is an error.
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Formula => "formula",
            Method::Bruteforce => "bruteforce",
            Method::Both => "both",
        }
    }
}

fn polynomial(e: &Entry, kind: PolytopeKind, method: Method) -> Result<(RationalPolynomial, Method), Failure> {
    let g = &e.graph;
    let closed = || ehrhart::closed_form(g, kind);
    let brute = || ehrhart::bruteforce(g, kind).map_err(|err| Failure::Compute(format!("{g}: {err}")));
    let no_formula = || Failure::Compute(format!("{g}: no closed form for the {} polytope", kind.name()));
    match method {
        Method::Auto => match closed() {
            Some(p) => Ok((p, Method::Formula)),
            None => Ok((brute()?, Method::Bruteforce)),
        },
        Method::Formula => Ok((closed().ok_or_else(no_formula)?, Method::Formula)),
        Method::Bruteforce => Ok((brute()?, Method::Bruteforce)),
        Method::Both => {
            let f = closed().ok_or_else(no_formula)?;
            let b = brute()?;
            if f != b {
                return Err(Failure::Compute(format!(
                    "{g}: closed form {f} differs from brute force {b}"
                )));
            }
            Ok((f, Method::Both))
        }
    }
}

pub fn context(rec: &CacheRecord, kind: PolytopeKind) -> Context {
    Context {
        kind,
        order: rec.graph.parse::<ehrhart_core::Graph>().map(|g| g.order()).unwrap_or(0),
        dim: rec.dim,
        gorenstein: rec.gorenstein,
        multipartite: rec.multipartite,
    }
}

fn roots_record(rs: &RootSet) -> Vec<RootRecord> {
    rs.roots
        .iter()
        .map(|r| RootRecord {
            re: r.value.re,
            im: r.value.im,
            exact: r.exact.as_ref().map(|q| format!("{}/{}", q.numer(), q.denom())),
            multiplicity: r.multiplicity,
            residual: r.residual,
        })
        .collect()
}

pub fn verdict_records(report: &ConjectureReport) -> Vec<VerdictRecord> {
    report
        .verdicts
        .iter()
        .map(|(c, v)| VerdictRecord {
            check: c.name().to_string(),
            status: v.status.to_string(),
            margin: v.margin.is_finite().then_some(v.margin),
        })
        .collect()
}

pub fn compute(e: &Entry, kind: PolytopeKind, method: Method, tol: f64) -> Result<CacheRecord, Failure> {
    let (poly, used) = polynomial(e, kind, method)?;
    let fail = |err: ehrhart_core::Error| Failure::Compute(format!("{}: {err}", e.graph));
    let dim = poly.degree().ok_or_else(|| Failure::Compute(format!("{}: zero polynomial", e.graph)))?;
    let delta = ehrhart::delta_vector(&poly).map_err(fail)?;
    let rs = roots::complex_roots(&poly).map_err(fail)?;
    let mut rec = CacheRecord {
        graph_key: e.key.to_string(),
        kind: kind.name().to_string(),
        graph: e.graph.to_string(),
        method: used.name().to_string(),
        dim,
        gorenstein: ehrhart::is_gorenstein(&poly, dim),
        multipartite: kind == PolytopeKind::Edge && ehrhart::multipartite_type(&e.graph).is_some(),
        ehrhart: poly.to_strings(),
        delta: delta.entries().iter().map(|x| x.to_string()).collect(),
        roots: roots_record(&rs),
        verdicts: Vec::new(),
        version: VERSION.to_string(),
    };
    let report = ConjectureReport::evaluate(&rec.graph_key, context(&rec, kind), &rs, &Check::ALL, tol);
    rec.verdicts = verdict_records(&report);
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_family;
    use ehrhart_core::graphs::canonical_key;

    fn entry(spec: &str) -> Entry {
        let graph = parse_family(spec).unwrap();
        Entry {
            key: canonical_key(&graph),
            graph,
        }
    }

    #[test]
    fn multipartite_record() {
        let rec = compute(&entry("multipartite:3,2,2"), PolytopeKind::Edge, Method::Auto, 1e-7).unwrap();
        assert_eq!(rec.dim, 6);
        assert_eq!(rec.method, "formula");
        assert!(rec.multipartite);
        assert_eq!(rec.ehrhart[0], "1/1");
        let rs = rec.root_set().unwrap();
        assert_eq!(rs.total_multiplicity(), 6);
        assert_eq!(rec.polynomial().unwrap(), ehrhart::ehrhart_multipartite(&ehrhart_core::Partition::new(vec![3, 2, 2]).unwrap()).unwrap());
    }

    #[test]
    fn both_methods_agree_and_formula_requires_closed_form() {
        let rec = compute(&entry("complete:3"), PolytopeKind::Edge, Method::Both, 1e-7).unwrap();
        assert_eq!(rec.method, "both");
        assert_eq!(rec.root_set().unwrap().integer_roots(), vec![(-2, 1), (-1, 1)]);
        let err = compute(&entry("cycle:5"), PolytopeKind::Edge, Method::Formula, 1e-7).unwrap_err();
        assert!(matches!(err, Failure::Compute(_)));
        let rec = compute(&entry("cycle:5"), PolytopeKind::Edge, Method::Auto, 1e-7).unwrap();
        assert_eq!(rec.method, "bruteforce");
    }

    #[test]
    fn symmetric_records_are_gorenstein() {
        let rec = compute(&entry("cycle:5"), PolytopeKind::Symmetric, Method::Bruteforce, 1e-7).unwrap();
        assert!(rec.gorenstein);
        assert_eq!(rec.delta.first().map(String::as_str), Some("1"));
        assert_eq!(rec.delta, rec.delta.iter().rev().cloned().collect::<Vec<_>>());
    }
}
