//! Linear-time construction of a state-0 spanning subgraph of a cubic
//! multigraph: every degree class then has size within 2 of `n/4`.

mod decompose;
mod repair;
mod state;
mod workspace;

pub use decompose::{decompose, find_contraction, Decomposition};
pub use state::{classify, classify_entries, is_proper, is_state0, is_state1, is_state2, CubicState};
pub use workspace::{Counters, CubicWorkspace, EdgeIndex};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph};

const BASE_TAIL: [usize; 4] = [1, 2, 0, 3];

/// State-0 subgraph of a disjoint union of `K₂³` copies. Components are taken
/// in order of their smallest vertex; with `m = 4k + r`, the first `4k` get
/// 0, 1, 2, 3 edges cyclically and the last `r` get 1, 2, 0, 3 edges.
pub fn base_subgraph(g: &Multigraph) -> Result<SpanningSubgraph> {
    let mut seen = vec![false; g.vertex_bound()];
    let mut comps: Vec<Vec<EdgeId>> = Vec::new();
    for v in g.vertices() {
        if seen[v] {
            continue;
        }
        let inc = g.incident(v);
        let w = g.edge(inc[0]).other(v);
        if inc.len() != 3 || g.multiplicity(v, w) != 3 {
            return Err(Error::PreconditionViolated(format!("vertex {v} is not in a K2^3 component")));
        }
        seen[v] = true;
        seen[w] = true;
        let mut es = inc.to_vec();
        es.sort_unstable();
        comps.push(es);
    }
    let m = comps.len();
    let full = m - m % 4;
    let mut members = Vec::new();
    for (c, es) in comps.iter().enumerate() {
        let take = if c < full { c % 4 } else { BASE_TAIL[c - full] };
        members.extend_from_slice(&es[..take]);
    }
    SpanningSubgraph::from_edges(g, &members)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CubicOptions {
    /// Rebuild and compare the edge index after every step.
    pub verify_index: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CubicStats {
    pub n: usize,
    pub m: usize,
    pub type_i: usize,
    pub type_ii: usize,
    pub counters: Counters,
    pub final_a: [i64; 4],
}

pub fn solve_cubic(g: &Multigraph) -> Result<(SpanningSubgraph, CubicStats)> {
    solve_cubic_with(g, CubicOptions::default())
}

pub fn solve_cubic_with(g: &Multigraph, opts: CubicOptions) -> Result<(SpanningSubgraph, CubicStats)> {
    if g.regularity() != Some(3) {
        return Err(Error::NotCubic);
    }
    let dec = decompose(g)?;
    let h0 = base_subgraph(&dec.base)?;
    let mut ws = CubicWorkspace::new(dec.base.clone(), h0)?;
    if !is_state0(&ws.a()) {
        return Err(Error::InternalInvariant(format!("base subgraph has a = {:?}", ws.a())));
    }
    for rec in dec.ops.iter().rev() {
        ws.apply_op_and_repair(rec)?;
        if opts.verify_index {
            ws.check_index()?;
        }
    }
    let final_a = ws.a();
    let counters = ws.counters;
    let (host, h) = ws.into_parts();
    let members: Vec<EdgeId> = h.members(&host);
    if members.iter().any(|&e| e >= g.edge_bound()) {
        return Err(Error::InternalInvariant("replay left a contraction edge alive".into()));
    }
    let out = SpanningSubgraph::from_edges(g, &members)?;
    let type_i = dec.type_i_count();
    let stats = CubicStats {
        n: g.num_vertices(),
        m: dec.m,
        type_i,
        type_ii: dec.ops.len() - type_i,
        counters,
        final_a,
    };
    Ok((out, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irregularity::a_scaled;

    fn mk23(m: usize) -> Multigraph {
        let mut edges = Vec::new();
        for c in 0..m {
            for _ in 0..3 {
                edges.push((2 * c, 2 * c + 1));
            }
        }
        Multigraph::build(2 * m, &edges).unwrap()
    }

    #[test]
    fn base_vectors() {
        for (m, want) in [(1, [-2, 6, -2, -2]), (4, [0, 0, 0, 0]), (5, [-2, 6, -2, -2])] {
            let g = mk23(m);
            let h = base_subgraph(&g).unwrap();
            let a = a_scaled::<i64>(&g, &h).unwrap();
            assert_eq!(a.entries, want.to_vec(), "m = {m}");
        }
        for m in 1..=12 {
            let g = mk23(m);
            let h = base_subgraph(&g).unwrap();
            let a = a_scaled::<i64>(&g, &h).unwrap();
            let arr: [i64; 4] = a.entries.clone().try_into().unwrap();
            assert!(is_state0(&arr), "m = {m}: {arr:?}");
        }
    }

    #[test]
    fn small_hosts() {
        let k4 = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let k33 = Multigraph::build(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        for g in [mk23(1), k4, k33] {
            let (h, stats) =
                solve_cubic_with(&g, CubicOptions { verify_index: true }).unwrap();
            let a = a_scaled::<i64>(&g, &h).unwrap();
            assert_eq!(a.entries, stats.final_a.to_vec());
            assert!(is_state0(&stats.final_a));
        }
    }
}
