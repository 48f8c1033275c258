//! Edge weightings read off subgraphs of a blow-up `G^s`.
//!
//! Copy `j` of base edge `e` has id `s·e + j` in the blow-up (see
//! [`crate::generators::blow_up`]). The weight of `e` is one more than the
//! number of its copies in `H`, so a vertex's weighted degree is its
//! `H`-degree plus `d`.

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeighting {
    pub s: usize,
    /// Per base edge, in `1..=s + 1`.
    pub weights: Vec<usize>,
    pub weighted_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctReport {
    pub distinct: bool,
    /// Vertices sharing their weighted degree with another vertex, ascending.
    pub duplicates: Vec<VertexId>,
}

fn weighted_degrees(base: &Multigraph, weights: &[usize]) -> Vec<usize> {
    let mut out = vec![0; base.vertex_bound()];
    for e in base.edge_ids() {
        let (u, v) = base.endpoints(e);
        out[u] += weights[e];
        out[v] += weights[e];
    }
    out
}

/// Weighting `f(e) = |E_e ∩ H| + 1` for `h` on `blow_up`, the `s`-fold
/// blow-up of `base`.
pub fn weighting_from_subgraph(
    base: &Multigraph,
    s: usize,
    blow_up: &Multigraph,
    h: &SpanningSubgraph,
) -> Result<EdgeWeighting> {
    if s == 0 || blow_up.edge_bound() != s * base.edge_bound() {
        return Err(Error::HostMismatch(format!(
            "expected {} blow-up edges, found {}",
            s * base.edge_bound(),
            blow_up.edge_bound()
        )));
    }
    let mut weights = vec![1; base.edge_bound()];
    for (e, weight) in weights.iter_mut().enumerate() {
        if !base.is_live(e) {
            return Err(Error::HostMismatch(format!("base edge {e} is dead")));
        }
        let ends = base.endpoints(e);
        for j in 0..s {
            let c: EdgeId = s * e + j;
            let (a, b) = blow_up.endpoints(c);
            if (a, b) != ends && (b, a) != ends {
                return Err(Error::HostMismatch(format!("copy {c} does not match base edge {e}")));
            }
            if h.contains(c) {
                *weight += 1;
            }
        }
    }
    let weighted_degrees = weighted_degrees(base, &weights);
    Ok(EdgeWeighting { s, weights, weighted_degrees })
}

/// Checks that all weighted degrees of live vertices differ.
pub fn verify_distinct(base: &Multigraph, w: &EdgeWeighting) -> DistinctReport {
    let mut by_value: Vec<(usize, VertexId)> =
        base.vertices().map(|v| (w.weighted_degrees[v], v)).collect();
    by_value.sort_unstable();
    let mut duplicates = Vec::new();
    for (i, &(val, v)) in by_value.iter().enumerate() {
        let before = i > 0 && by_value[i - 1].0 == val;
        let after = i + 1 < by_value.len() && by_value[i + 1].0 == val;
        if before || after {
            duplicates.push(v);
        }
    }
    duplicates.sort_unstable();
    DistinctReport { distinct: duplicates.is_empty(), duplicates }
}
