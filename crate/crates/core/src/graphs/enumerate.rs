//! Isomorphism-free generation of connected simple graphs.
//!
//! Every connected graph of order `d` has a vertex whose removal leaves a
//! connected graph (a leaf of any spanning tree), so extending each connected
//! graph of order `d-1` by one vertex with every nonempty neighbourhood
//! reaches every class. Duplicates are removed by canonical key.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_key, CanonicalKey, Graph};
use crate::{Error, Result};

/// One canonical representative per isomorphism class of connected simple
/// graphs of order `d`, sorted by canonical key. Supported for `2..=8`.
pub fn enumerate_connected_simple(d: usize) -> Result<Vec<Graph>> {
    if !(2..=8).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "enumeration supports orders 2..=8, got {d}"
        )));
    }
    Ok(enumerate_connected_simple_unbounded(d))
}

/// Same as [`enumerate_connected_simple`] without the order check. Order 9
/// (261080 graphs) takes minutes and a few hundred MB.
pub fn enumerate_connected_simple_unbounded(d: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 2..=d {
        level = extend(&level, k);
    }
    if d == 0 {
        Vec::new()
    } else {
        level
    }
}

fn extend(smaller: &[Graph], k: usize) -> Vec<Graph> {
    let keys: Vec<Vec<CanonicalKey>> = smaller
        .par_iter()
        .map(|h| {
            let mut local: Vec<CanonicalKey> = (1u64..1 << (k - 1))
                .map(|nbrs| {
                    let mut g = Graph::empty(k);
                    for (i, j) in h.edges() {
                        g.add_edge(i, j);
                    }
                    for v in 0..k - 1 {
                        if nbrs >> v & 1 == 1 {
                            g.add_edge(v + 1, k);
                        }
                    }
                    canonical_key(&g)
                })
                .collect();
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    let unique: BTreeSet<CanonicalKey> = keys.into_iter().flatten().collect();
    unique.into_iter().map(|key| key.to_graph()).collect()
}
