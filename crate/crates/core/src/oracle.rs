//! Brute force over every spanning subgraph of a small multigraph.
//!
//! Subgraphs are visited in reflected Gray-code order, so each step toggles
//! one edge and updates the degree profile in O(1). Masks index the live
//! edges in ascending id order: bit `i` is the `i`-th live edge.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::irregularity::AVector;
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph, VertexId};

/// Largest number of live edges the enumeration accepts.
pub const MAX_EDGES: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// `min over H of max_i |ã_i|`, scale `d + 1`.
    pub best_scaled_inf_norm: i64,
    /// Edge ids of an optimal subgraph; the one with the smallest mask.
    pub witness: Vec<EdgeId>,
    pub subgraph_count: u64,
}

/// Incremental degree profile of the subgraph selected by a mask.
struct Walker {
    ends: Vec<(VertexId, VertexId)>,
    deg: Vec<usize>,
    a: AVector,
    mask: u64,
}

impl Walker {
    fn new(g: &Multigraph, edges: &[EdgeId]) -> Result<Self> {
        let d = g.regularity().ok_or(Error::NotRegular)?;
        let n = g.num_vertices();
        let mut entries = vec![-(n as i64); d + 1];
        entries[0] += ((d + 1) * n) as i64;
        let ends = edges.iter().map(|&e| g.endpoints(e)).collect();
        Ok(Walker { ends, deg: vec![0; g.vertex_bound()], a: AVector { d, n, entries }, mask: 0 })
    }

    fn bump(&mut self, v: VertexId, up: bool) {
        let scale = (self.a.d + 1) as i64;
        let k = self.deg[v];
        self.a.entries[k] -= scale;
        let k = if up { k + 1 } else { k - 1 };
        self.deg[v] = k;
        self.a.entries[k] += scale;
    }

    fn toggle(&mut self, bit: usize) {
        self.mask ^= 1 << bit;
        let up = self.mask & (1 << bit) != 0;
        let (u, v) = self.ends[bit];
        self.bump(u, up);
        self.bump(v, up);
    }

    fn set(&mut self, mask: u64) {
        for bit in 0..self.ends.len() {
            if (self.mask ^ mask) & (1 << bit) != 0 {
                self.toggle(bit);
            }
        }
    }

    /// Walks all masks that agree with the current one above `low` bits.
    fn walk(&mut self, low: usize, mut f: impl FnMut(u64, &AVector) -> ControlFlow<()>) -> ControlFlow<()> {
        f(self.mask, &self.a)?;
        for t in 1..(1u64 << low) {
            self.toggle(t.trailing_zeros() as usize);
            f(self.mask, &self.a)?;
        }
        ControlFlow::Continue(())
    }
}

fn live_edges(g: &Multigraph) -> Result<Vec<EdgeId>> {
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    if edges.len() > MAX_EDGES {
        return Err(Error::TooLarge(edges.len()));
    }
    Ok(edges)
}

fn mask_to_edges(edges: &[EdgeId], mask: u64) -> Vec<EdgeId> {
    edges.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect()
}

/// Calls `f` on every spanning subgraph (as a mask over `live`) with its
/// `ã`, until `f` breaks.
pub fn visit(
    g: &Multigraph,
    f: impl FnMut(u64, &AVector) -> ControlFlow<()>,
) -> Result<Vec<EdgeId>> {
    let edges = live_edges(g)?;
    let mut w = Walker::new(g, &edges)?;
    let _ = w.walk(edges.len(), f);
    Ok(edges)
}

fn inf_norm(a: &AVector) -> i64 {
    a.entries.iter().map(|x| x.abs()).max().unwrap_or(0)
}

fn best_in_block(w: &mut Walker, low: usize) -> (i64, u64) {
    let mut best = (i64::MAX, u64::MAX);
    let _ = w.walk(low, |mask, a| {
        let key = (inf_norm(a), mask);
        if key < best {
            best = key;
        }
        ControlFlow::Continue(())
    });
    best
}

pub fn oracle_best(g: &Multigraph) -> Result<OracleResult> {
    oracle_best_split(g, 0)
}

/// Like [`oracle_best`], with the top `prefix_bits` mask bits fixed per
/// worker thread. The result does not depend on `prefix_bits`.
pub fn oracle_best_split(g: &Multigraph, prefix_bits: usize) -> Result<OracleResult> {
    let edges = live_edges(g)?;
    let m = edges.len();
    let p = prefix_bits.min(m).min(8);
    let low = m - p;
    let blocks: Vec<(i64, u64)> = if p == 0 {
        let mut w = Walker::new(g, &edges)?;
        vec![best_in_block(&mut w, low)]
    } else {
        let mut walkers = Vec::with_capacity(1 << p);
        for prefix in 0..(1u64 << p) {
            let mut w = Walker::new(g, &edges)?;
            w.set(prefix << low);
            walkers.push(w);
        }
        std::thread::scope(|s| {
            let handles: Vec<_> = walkers
                .iter_mut()
                .map(|w| s.spawn(move || best_in_block(w, low)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).collect()
        })
    };
    let (norm, mask) = blocks.into_iter().min().expect("at least one block");
    Ok(OracleResult {
        best_scaled_inf_norm: norm,
        witness: mask_to_edges(&edges, mask),
        subgraph_count: 1u64 << m,
    })
}

/// First subgraph in enumeration order whose `ã` satisfies `pred`.
pub fn oracle_state_exists(
    g: &Multigraph,
    mut pred: impl FnMut(&AVector) -> bool,
) -> Result<Option<SpanningSubgraph>> {
    let mut hit = None;
    let edges = visit(g, |mask, a| {
        if pred(a) {
            hit = Some(mask);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    hit.map(|mask| SpanningSubgraph::from_edges(g, &mask_to_edges(&edges, mask))).transpose()
}

/// The subgraph selected by `mask` over the live edges of `g`.
pub fn subgraph_of_mask(g: &Multigraph, mask: u64) -> Result<SpanningSubgraph> {
    let edges = live_edges(g)?;
    SpanningSubgraph::from_edges(g, &mask_to_edges(&edges, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irregularity::a_scaled;

    fn k23() -> Multigraph {
        Multigraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn incremental_matches_recompute() {
        let g = Multigraph::build(
            4,
            &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)],
        )
        .unwrap();
        let mut seen = 0;
        visit(&g, |mask, a| {
            let h = subgraph_of_mask(&g, mask).unwrap();
            assert_eq!(a, &a_scaled::<i64>(&g, &h).unwrap());
            seen += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen, 64);
    }

    #[test]
    fn k23_has_no_spread_subgraph() {
        let found = oracle_state_exists(&k23(), |a| {
            a.counts().iter().all(|&m| m <= 1)
        })
        .unwrap();
        assert!(found.is_none());
        let r = oracle_best(&k23()).unwrap();
        assert_eq!(r.subgraph_count, 8);
        assert_eq!(r.best_scaled_inf_norm, 6);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn split_is_deterministic() {
        let g = crate::generators::petersen();
        let a = oracle_best(&g).unwrap();
        for p in 1..4 {
            assert_eq!(oracle_best_split(&g, p).unwrap(), a);
        }
    }

    #[test]
    fn too_large() {
        let g = crate::generators::complete_bipartite(6).unwrap();
        assert_eq!(oracle_best(&g), Err(Error::TooLarge(36)));
    }
}
