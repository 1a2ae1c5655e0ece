//! Resolving an input (order, family spec or graph file) to a list of graphs.

use std::collections::BTreeMap;
use std::path::Path;

use ehrhart_core::graphs::{self, CanonicalKey, Graph, Partition};
use ehrhart_core::PolytopeKind;

use crate::Failure;

#[derive(Clone, Debug)]
pub struct Entry {
    pub key: CanonicalKey,
    pub graph: Graph,
}

const FAMILIES: [&str; 8] = [
    "complete",
    "multipartite",
    "bipartite",
    "alpha",
    "beta",
    "gamma",
    "cycle",
    "tree",
];

fn numbers(spec: &str, args: &str) -> Result<Vec<usize>, Failure> {
    args.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad number {s:?} in family spec {spec:?}")))
        })
        .collect()
}

fn exactly<const N: usize>(spec: &str, v: Vec<usize>) -> Result<[usize; N], Failure> {
    v.try_into()
        .map_err(|_| Failure::Usage(format!("family spec {spec:?} needs {N} parameter(s)")))
}

/// Graph named by a family spec such as `gamma:12,7` or `tree:path:6`.
pub fn parse_family(spec: &str) -> Result<Graph, Failure> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("family spec {spec:?} has no ':'")))?;
    let usage = |e: ehrhart_core::Error| Failure::Usage(format!("{spec}: {e}"));
    match name {
        "complete" => {
            let [d] = exactly(spec, numbers(spec, args)?)?;
            graphs::complete_graph(d).map_err(usage)
        }
        "multipartite" => {
            let p = Partition::new(numbers(spec, args)?).map_err(usage)?;
            graphs::complete_multipartite(&p).map_err(usage)
        }
        "bipartite" => {
            let [p, q] = exactly(spec, numbers(spec, args)?)?;
            graphs::complete_bipartite(p, q).map_err(usage)
        }
        "alpha" => {
            let [p, q] = exactly(spec, numbers(spec, args)?)?;
            if p < 2 || q < 2 {
                return Err(Failure::Usage(format!("{spec}: alpha needs p, q >= 2")));
            }
            graphs::complete_bipartite(p, q).map_err(usage)
        }
        "beta" => {
            let [p, q] = exactly(spec, numbers(spec, args)?)?;
            graphs::beta_family(p, q).map_err(usage)
        }
        "gamma" => {
            let [d, p] = exactly(spec, numbers(spec, args)?)?;
            graphs::gamma_family(d, p).map_err(usage)
        }
        "cycle" => {
            let [d] = exactly(spec, numbers(spec, args)?)?;
            graphs::cycle(d).map_err(usage)
        }
        "tree" => {
            let (shape, n) = args
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("{spec}: expected tree:path:d or tree:star:d")))?;
            let [d] = exactly(spec, numbers(spec, n)?)?;
            match shape {
                "path" => graphs::path(d).map_err(usage),
                "star" => graphs::star(d).map_err(usage),
                _ => Err(Failure::Usage(format!("{spec}: unknown tree shape {shape:?}"))),
            }
        }
        _ => Err(Failure::Usage(format!("unknown family {name:?}"))),
    }
}

fn is_family_spec(input: &str) -> bool {
    input
        .split_once(':')
        .is_some_and(|(name, _)| FAMILIES.contains(&name))
}

/// Graphs for `input` or `--order`, one per isomorphism class, sorted by
/// canonical key. Symmetric corpora are further reduced to one graph per
/// unimodular class (the one with the smallest key).
pub fn load(input: Option<&str>, order: Option<usize>, kind: PolytopeKind) -> Result<Vec<Entry>, Failure> {
    let graphs = match (input, order) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage("give either an input or --order, not both".into()))
        }
        (None, None) => return Err(Failure::Usage("no input: give a file, a family spec or --order".into())),
        (None, Some(d)) => graphs::enumerate_connected_simple(d).map_err(|e| Failure::Usage(e.to_string()))?,
        (Some(s), None) if is_family_spec(s) => vec![parse_family(s)?],
        (Some(path), None) => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            graphs::parse_graphs(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
        }
    };
    if graphs.is_empty() {
        return Err(Failure::Usage("empty corpus".into()));
    }
    let mut by_key = BTreeMap::new();
    for g in graphs {
        by_key.entry(graphs::canonical_key(&g)).or_insert(g);
    }
    let entries: Vec<Entry> = by_key
        .into_iter()
        .map(|(key, graph)| Entry { key, graph })
        .collect();
    if kind != PolytopeKind::Symmetric || entries.iter().any(|e| !e.graph.is_simple()) {
        return Ok(entries);
    }
    let mut classes: BTreeMap<Vec<CanonicalKey>, Entry> = BTreeMap::new();
    for e in entries {
        let class = graphs::unimodular_class_key(&e.graph).map_err(|err| Failure::Compute(err.to_string()))?;
        classes.entry(class).or_insert(e);
    }
    let mut reps: Vec<Entry> = classes.into_values().collect();
    reps.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        assert_eq!(parse_family("complete:4").unwrap().num_edges(), 6);
        assert_eq!(parse_family("multipartite:3,2,2").unwrap().num_edges(), 16);
        assert_eq!(parse_family("bipartite:2,3").unwrap().num_edges(), 6);
        assert_eq!(parse_family("alpha:2,2").unwrap().num_edges(), 4);
        assert_eq!(parse_family("beta:1,2").unwrap().num_loops(), 1);
        assert_eq!(parse_family("gamma:12,7").unwrap().num_loops(), 7);
        assert_eq!(parse_family("cycle:5").unwrap().num_edges(), 5);
        assert_eq!(parse_family("tree:path:6").unwrap().num_edges(), 5);
        assert_eq!(parse_family("tree:star:6").unwrap().degree(1), 5);
        for bad in ["complete", "complete:x", "gamma:5", "alpha:1,3", "tree:oak:3", "sphere:3"] {
            assert!(matches!(parse_family(bad), Err(Failure::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn symmetric_corpora_reduce_to_classes() {
        let edge = load(None, Some(5), PolytopeKind::Edge).unwrap();
        assert_eq!(edge.len(), 21);
        let sym = load(None, Some(5), PolytopeKind::Symmetric).unwrap();
        assert_eq!(sym.len(), 16);
        assert!(sym.windows(2).all(|w| w[0].key < w[1].key));
    }
}
