//! Reduction of a cubic multigraph to disjoint copies of `K₂³` by repeatedly
//! removing two adjacent vertices.

use arrayvec::ArrayVec;

use crate::error::{Error, Result};
use crate::multigraph::{CubicOpRecord, EdgeId, Multigraph, VertexId};

/// Result of [`decompose`]: the contracted graph and the steps that rebuild
/// the original from it, in contraction order.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub base: Multigraph,
    pub m: usize,
    pub ops: Vec<CubicOpRecord>,
}

impl Decomposition {
    /// Re-applies every step (newest first) to a copy of the base graph.
    pub fn replay(&self) -> Result<Multigraph> {
        let mut g = self.base.clone();
        for rec in self.ops.iter().rev() {
            g.expand_pair(rec)?;
        }
        Ok(g)
    }

    pub fn type_i_count(&self) -> usize {
        self.ops.iter().filter(|r| r.is_type_i()).count()
    }
}

/// Incident edges of `v` other than `skip`, with the far endpoints.
fn others(g: &Multigraph, v: VertexId, skip: &[EdgeId]) -> ArrayVec<(EdgeId, VertexId), 3> {
    let mut out: ArrayVec<(EdgeId, VertexId), 3> = g
        .incident(v)
        .iter()
        .filter(|e| !skip.contains(e))
        .map(|&e| (e, g.edge(e).other(v)))
        .collect();
    out.sort_unstable();
    out
}

fn doubled_partner(g: &Multigraph, v: VertexId) -> Option<(VertexId, [EdgeId; 2])> {
    let inc = others(g, v, &[]);
    for i in 0..inc.len() {
        for j in i + 1..inc.len() {
            if inc[i].1 == inc[j].1 {
                return Some((inc[i].1, [inc[i].0, inc[j].0]));
            }
        }
    }
    None
}

/// Removes `u`, `v` joined by two parallel edges and joins their third
/// neighbours. The neighbours must differ.
fn type_i_reverse(g: &Multigraph, u: VertexId, v: VertexId, uv: [EdgeId; 2]) -> Result<CubicOpRecord> {
    let [(xu, x)] = others(g, u, &uv)[..] else {
        return Err(Error::InternalInvariant(format!("{u} is not on a doubled edge")));
    };
    let [(vy, y)] = others(g, v, &uv)[..] else {
        return Err(Error::InternalInvariant(format!("{v} is not on a doubled edge")));
    };
    if x == y || x == v || y == u {
        return Err(Error::InternalInvariant(format!("doubled edge {u}-{v} is not contractible")));
    }
    Ok(CubicOpRecord::TypeI { x, y, u, v, xy: g.edge_bound(), xu, uv, vy })
}

/// Removes the endpoints of a simple edge `u`-`v` whose other neighbours are
/// pairwise distinct on each side.
fn type_ii_reverse(g: &Multigraph, uv: EdgeId) -> Result<CubicOpRecord> {
    let (u, v) = g.endpoints(uv);
    let [(xu, x), (uy, y)] = others(g, u, &[uv])[..] else {
        return Err(Error::InternalInvariant(format!("bad degree at {u}")));
    };
    let [(zv, z), (vw, w)] = others(g, v, &[uv])[..] else {
        return Err(Error::InternalInvariant(format!("bad degree at {v}")));
    };
    if x == y || z == w || [x, y, z, w].iter().any(|&t| t == u || t == v) {
        return Err(Error::InternalInvariant(format!("edge {uv} is not contractible")));
    }
    let e0 = g.edge_bound();
    Ok(CubicOpRecord::TypeII { x, y, z, w, u, v, xy: e0, zw: e0 + 1, xu, uy, zv, vw, uv })
}

fn ends_distinct(g: &Multigraph, a: VertexId, skip: EdgeId) -> bool {
    let o = others(g, a, &[skip]);
    o.len() == 2 && o[0].1 != o[1].1
}

/// Contraction for a doubled edge `u`=`v` that is not part of a triple edge.
fn chain(g: &Multigraph, u: VertexId, v: VertexId, uv: [EdgeId; 2]) -> Result<CubicOpRecord> {
    let x = others(g, u, &uv)[0].1;
    let y = others(g, v, &uv)[0].1;
    if x != y {
        return type_i_reverse(g, u, v, uv);
    }
    // u and v share their third neighbour w; its last edge leaves {u, v}.
    let w = x;
    let third: ArrayVec<(EdgeId, VertexId), 3> =
        others(g, w, &[]).into_iter().filter(|&(_, t)| t != u && t != v).collect();
    let [(wx, xp)] = third[..] else {
        return Err(Error::InternalInvariant(format!("vertex {w} has no exit edge")));
    };
    if ends_distinct(g, xp, wx) {
        return type_ii_reverse(g, wx);
    }
    let (yp, pair) = doubled_partner(g, xp)
        .ok_or_else(|| Error::InternalInvariant(format!("expected a doubled edge at {xp}")))?;
    type_i_reverse(g, xp, yp, pair)
}

/// Finds a contraction near `start`, which must lie in a connected cubic
/// component with at least four vertices.
pub fn find_contraction(g: &Multigraph, start: VertexId) -> Result<CubicOpRecord> {
    if !g.is_vertex_live(start) {
        return Err(Error::VertexOutOfRange(start));
    }
    if g.degree(start) != 3 {
        return Err(Error::NotCubic);
    }
    if let Some((v, pair)) = doubled_partner(g, start) {
        if g.multiplicity(start, v) == 3 {
            return Err(Error::TooSmall(start));
        }
        return chain(g, start, v, pair);
    }
    let (ua, a) = others(g, start, &[])[0];
    if ends_distinct(g, a, ua) {
        return type_ii_reverse(g, ua);
    }
    let (b, pair) = doubled_partner(g, a)
        .ok_or_else(|| Error::InternalInvariant(format!("expected a doubled edge at {a}")))?;
    chain(g, a, b, pair)
}

fn anchors(rec: &CubicOpRecord) -> Vec<VertexId> {
    match *rec {
        CubicOpRecord::TypeI { x, y, .. } => vec![x, y],
        CubicOpRecord::TypeII { x, y, z, w, .. } => vec![x, y, z, w],
    }
}

/// Contracts `g` down to `m` copies of `K₂³`.
pub fn decompose(g: &Multigraph) -> Result<Decomposition> {
    if g.regularity() != Some(3) {
        return Err(Error::NotCubic);
    }
    let mut base = g.clone();
    let mut ops = Vec::new();
    let mut work: Vec<VertexId> = base.vertices().collect();
    work.reverse();
    while let Some(u) = work.pop() {
        if !base.is_vertex_live(u) {
            continue;
        }
        let e = base.incident(u)[0];
        let (a, b) = base.endpoints(e);
        if base.multiplicity(a, b) == 3 {
            continue;
        }
        let rec = find_contraction(&base, u)?;
        base.contract_pair(&rec)?;
        if base.is_vertex_live(u) {
            work.push(u);
        }
        work.extend(anchors(&rec).into_iter().filter(|&t| base.is_vertex_live(t)));
        ops.push(rec);
    }
    let m = base.num_vertices() / 2;
    debug_assert_eq!(g.num_vertices() / 2, m + ops.len());
    Ok(Decomposition { base, m, ops })
}
