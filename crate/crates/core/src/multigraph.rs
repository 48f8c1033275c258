//! Loop-free multigraphs with stable edge identities, and spanning subgraphs
//! over them.
//!
//! Parallel edges are distinct records. Removed edges and vertices become
//! tombstones so that identifiers stay valid across the cubic decomposition
//! and its replay.

use arrayvec::ArrayVec;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub alive: bool,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    edges: Vec<Edge>,
    incidence: Vec<SmallVec<[EdgeId; 4]>>,
    vertex_alive: Vec<bool>,
    live_vertices: usize,
    live_edges: usize,
    /// Number of live vertices of each degree.
    degree_hist: Vec<usize>,
}

impl Multigraph {
    /// A graph on `n` isolated vertices.
    pub fn with_vertices(n: usize) -> Self {
        Multigraph {
            edges: Vec::new(),
            incidence: vec![SmallVec::new(); n],
            vertex_alive: vec![true; n],
            live_vertices: n,
            live_edges: 0,
            degree_hist: vec![n],
        }
    }

    /// Builds a multigraph; edge `i` of the result is `edge_list[i]`.
    pub fn build(num_vertices: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::VertexOutOfRange(i));
            }
            if u == v {
                return Err(Error::LoopEdge(i));
            }
        }
        let mut g = Multigraph::with_vertices(num_vertices);
        g.edges.reserve(edge_list.len());
        for &(u, v) in edge_list {
            g.push_edge(u, v);
        }
        Ok(g)
    }

    /// Appends a new edge and returns its id.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let idx = self.edges.len();
        if !self.is_vertex_live(u) || !self.is_vertex_live(v) {
            return Err(Error::VertexOutOfRange(idx));
        }
        if u == v {
            return Err(Error::LoopEdge(idx));
        }
        Ok(self.push_edge(u, v))
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let e = self.edges.len();
        self.edges.push(Edge { u, v, alive: false });
        self.attach(e);
        e
    }

    /// Appends an isolated vertex.
    pub fn add_vertex(&mut self) -> VertexId {
        let v = self.incidence.len();
        self.incidence.push(SmallVec::new());
        self.vertex_alive.push(true);
        self.live_vertices += 1;
        self.hist_add(0, 1);
        v
    }

    /// Number of live vertices.
    pub fn num_vertices(&self) -> usize {
        self.live_vertices
    }

    /// Number of live edges.
    pub fn num_edges(&self) -> usize {
        self.live_edges
    }

    /// One past the largest vertex id ever allocated.
    pub fn vertex_bound(&self) -> usize {
        self.incidence.len()
    }

    /// One past the largest edge id ever allocated.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let ed = &self.edges[e];
        (ed.u, ed.v)
    }

    #[inline]
    pub fn is_live(&self, e: EdgeId) -> bool {
        self.edges.get(e).is_some_and(|ed| ed.alive)
    }

    #[inline]
    pub fn is_vertex_live(&self, v: VertexId) -> bool {
        self.vertex_alive.get(v).copied().unwrap_or(false)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Live edges incident to `v`, in no particular order.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// Live vertex ids in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    /// Live edge ids in ascending order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(e, ed)| ed.alive.then_some(e))
    }

    /// `Some(d)` if every live vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let mut found = None;
        for (deg, &count) in self.degree_hist.iter().enumerate() {
            if count > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(deg);
            }
        }
        found
    }

    /// Number of live edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.incidence[u]
            .iter()
            .filter(|&&e| self.edges[e].other(u) == v)
            .count()
    }

    /// Sorted list of live edges as `(min, max)` endpoint pairs.
    pub fn live_edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .edge_ids()
            .map(|e| {
                let (u, v) = self.endpoints(e);
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Disjoint union; vertices and edges of `other` are shifted past ours.
    /// Only live elements of `other` are copied.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let mut edges: Vec<(VertexId, VertexId)> =
            self.edge_ids().map(|e| self.endpoints(e)).collect();
        let shift = self.vertex_bound();
        edges.extend(other.edge_ids().map(|e| {
            let (u, v) = other.endpoints(e);
            (u + shift, v + shift)
        }));
        // endpoints are in range and loop-free by construction
        Multigraph::build(shift + other.vertex_bound(), &edges).expect("union of valid graphs")
    }

    fn hist_add(&mut self, deg: usize, delta: isize) {
        if self.degree_hist.len() <= deg {
            self.degree_hist.resize(deg + 1, 0);
        }
        let slot = &mut self.degree_hist[deg];
        *slot = slot.checked_add_signed(delta).expect("degree histogram underflow");
    }

    fn bump_degree(&mut self, v: VertexId, grow: bool) {
        let d = self.incidence[v].len();
        if grow {
            self.hist_add(d - 1, -1);
            self.hist_add(d, 1);
        } else {
            self.hist_add(d + 1, -1);
            self.hist_add(d, 1);
        }
    }

    fn attach(&mut self, e: EdgeId) {
        let Edge { u, v, .. } = self.edges[e];
        self.edges[e].alive = true;
        self.live_edges += 1;
        self.incidence[u].push(e);
        self.bump_degree(u, true);
        self.incidence[v].push(e);
        self.bump_degree(v, true);
    }

    fn detach(&mut self, e: EdgeId) {
        let Edge { u, v, .. } = self.edges[e];
        self.edges[e].alive = false;
        self.live_edges -= 1;
        for x in [u, v] {
            let list = &mut self.incidence[x];
            let pos = list.iter().position(|&f| f == e).expect("incidence out of sync");
            list.swap_remove(pos);
            self.bump_degree(x, false);
        }
    }

    /// Marks a live edge dead. Its id is never reused.
    pub fn kill_edge(&mut self, e: EdgeId) -> Result<()> {
        if !self.is_live(e) {
            return Err(Error::DeadEdge(e));
        }
        self.detach(e);
        Ok(())
    }

    /// Brings a dead edge back with its original endpoints.
    pub fn revive_edge(&mut self, e: EdgeId) -> Result<()> {
        let Some(ed) = self.edges.get(e) else {
            return Err(Error::MalformedRecord(format!("edge {e} was never allocated")));
        };
        if ed.alive {
            return Err(Error::MalformedRecord(format!("edge {e} is already live")));
        }
        if !self.is_vertex_live(ed.u) || !self.is_vertex_live(ed.v) {
            return Err(Error::MalformedRecord(format!("edge {e} has a dead endpoint")));
        }
        self.attach(e);
        Ok(())
    }

    /// Removes an isolated vertex.
    pub fn kill_vertex(&mut self, v: VertexId) -> Result<()> {
        if !self.is_vertex_live(v) || self.degree(v) != 0 {
            return Err(Error::MalformedRecord(format!("vertex {v} is not a live isolated vertex")));
        }
        self.vertex_alive[v] = false;
        self.live_vertices -= 1;
        self.hist_add(0, -1);
        Ok(())
    }

    /// Revives a dead vertex, or allocates it if `v` is the next fresh id.
    pub fn revive_vertex(&mut self, v: VertexId) -> Result<()> {
        if v == self.vertex_bound() {
            self.add_vertex();
            return Ok(());
        }
        if v > self.vertex_bound() || self.vertex_alive[v] {
            return Err(Error::MalformedRecord(format!("vertex {v} cannot be revived")));
        }
        self.vertex_alive[v] = true;
        self.live_vertices += 1;
        self.hist_add(0, 1);
        Ok(())
    }

    /// Revives a dead edge, or appends it if `e` is the next fresh id.
    /// Endpoints must match the stored (or to-be-stored) ones.
    fn restore_edge(&mut self, e: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if e == self.edge_bound() {
            if u == v || !self.is_vertex_live(u) || !self.is_vertex_live(v) {
                return Err(Error::MalformedRecord(format!("cannot append edge {e} = {u}-{v}")));
            }
            self.push_edge(u, v);
            return Ok(());
        }
        self.check_endpoints(e, u, v)?;
        self.revive_edge(e)
    }

    fn check_endpoints(&self, e: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        let Some(ed) = self.edges.get(e) else {
            return Err(Error::MalformedRecord(format!("edge {e} was never allocated")));
        };
        if !((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) {
            return Err(Error::MalformedRecord(format!(
                "edge {e} joins {}-{}, record says {u}-{v}",
                ed.u, ed.v
            )));
        }
        Ok(())
    }

    fn restorable(&self, e: EdgeId, u: VertexId, v: VertexId, next: &mut usize) -> Result<()> {
        if e == *next && e >= self.edge_bound() {
            *next += 1;
            return Ok(());
        }
        self.check_endpoints(e, u, v)?;
        if self.edges[e].alive {
            return Err(Error::MalformedRecord(format!("edge {e} is already live")));
        }
        Ok(())
    }

    /// Applies a generation step forward: removes the record's small-graph
    /// edges, adds its two vertices and its new edges.
    pub fn expand_pair(&mut self, rec: &CubicOpRecord) -> Result<()> {
        let (u, v) = rec.new_vertices();
        for (e, a, b) in rec.removed_edges() {
            if !self.is_live(e) {
                return Err(Error::MalformedRecord(format!("edge {e} is not live")));
            }
            self.check_endpoints(e, a, b)?;
        }
        for w in [u, v] {
            let fresh = w >= self.vertex_bound();
            if !fresh && self.vertex_alive[w] {
                return Err(Error::MalformedRecord(format!("vertex {w} is live")));
            }
        }
        if v != u + 1 && (u >= self.vertex_bound() || v >= self.vertex_bound()) {
            return Err(Error::MalformedRecord("fresh vertices must be consecutive".into()));
        }
        if u >= self.vertex_bound() && u != self.vertex_bound() {
            return Err(Error::MalformedRecord(format!("vertex {u} skips ids")));
        }
        let mut next = self.edge_bound();
        for (e, a, b) in rec.added_edges() {
            self.restorable(e, a, b, &mut next)?;
        }

        for (e, _, _) in rec.removed_edges() {
            self.detach(e);
        }
        self.revive_vertex(u)?;
        self.revive_vertex(v)?;
        for (e, a, b) in rec.added_edges() {
            self.restore_edge(e, a, b)?;
        }
        Ok(())
    }

    /// Inverse of [`expand_pair`](Self::expand_pair).
    pub fn contract_pair(&mut self, rec: &CubicOpRecord) -> Result<()> {
        let (u, v) = rec.new_vertices();
        let added = rec.added_edges();
        for &(e, a, b) in &added {
            if !self.is_live(e) {
                return Err(Error::MalformedRecord(format!("edge {e} is not live")));
            }
            self.check_endpoints(e, a, b)?;
        }
        for w in [u, v] {
            if !self.is_vertex_live(w) {
                return Err(Error::MalformedRecord(format!("vertex {w} is not live")));
            }
            let mut own: ArrayVec<EdgeId, 5> = ArrayVec::new();
            if self.incidence[w].len() > 5 {
                return Err(Error::MalformedRecord(format!("vertex {w} has too many edges")));
            }
            own.extend(self.incidence[w].iter().copied());
            own.sort_unstable();
            let mut expect: ArrayVec<EdgeId, 5> = added
                .iter()
                .filter(|&&(_, a, b)| a == w || b == w)
                .map(|&(e, _, _)| e)
                .collect();
            expect.sort_unstable();
            if own != expect {
                return Err(Error::MalformedRecord(format!(
                    "vertex {w} has neighbourhood outside the record"
                )));
            }
        }
        let mut next = self.edge_bound();
        for (e, a, b) in rec.removed_edges() {
            self.restorable(e, a, b, &mut next)?;
        }

        for &(e, _, _) in &added {
            self.detach(e);
        }
        self.kill_vertex(u)?;
        self.kill_vertex(v)?;
        for (e, a, b) in rec.removed_edges() {
            self.restore_edge(e, a, b)?;
        }
        Ok(())
    }
}

/// One two-vertex generation step between cubic multigraphs.
///
/// `TypeI` replaces `xy` by the path `x-u=v-y` with a doubled middle edge.
/// `TypeII` replaces `xy` and `zw` by `xu, uy, zv, vw` plus the bridge `uv`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CubicOpRecord {
    TypeI {
        x: VertexId,
        y: VertexId,
        u: VertexId,
        v: VertexId,
        xy: EdgeId,
        xu: EdgeId,
        uv: [EdgeId; 2],
        vy: EdgeId,
    },
    TypeII {
        x: VertexId,
        y: VertexId,
        z: VertexId,
        w: VertexId,
        u: VertexId,
        v: VertexId,
        xy: EdgeId,
        zw: EdgeId,
        xu: EdgeId,
        uy: EdgeId,
        zv: EdgeId,
        vw: EdgeId,
        uv: EdgeId,
    },
}

impl CubicOpRecord {
    /// Plans a forward Type I step on `xy` using fresh vertex and edge ids.
    pub fn plan_type_i(g: &Multigraph, xy: EdgeId) -> Result<Self> {
        if !g.is_live(xy) {
            return Err(Error::DeadEdge(xy));
        }
        let (x, y) = g.endpoints(xy);
        let (u, v) = (g.vertex_bound(), g.vertex_bound() + 1);
        let e0 = g.edge_bound();
        Ok(CubicOpRecord::TypeI { x, y, u, v, xy, xu: e0, uv: [e0 + 1, e0 + 2], vy: e0 + 3 })
    }

    /// Plans a forward Type II step on the distinct edges `xy`, `zw`.
    pub fn plan_type_ii(g: &Multigraph, xy: EdgeId, zw: EdgeId) -> Result<Self> {
        for e in [xy, zw] {
            if !g.is_live(e) {
                return Err(Error::DeadEdge(e));
            }
        }
        if xy == zw {
            return Err(Error::MalformedRecord("Type II needs two distinct edges".into()));
        }
        let (x, y) = g.endpoints(xy);
        let (z, w) = g.endpoints(zw);
        let (u, v) = (g.vertex_bound(), g.vertex_bound() + 1);
        let e0 = g.edge_bound();
        Ok(CubicOpRecord::TypeII {
            x,
            y,
            z,
            w,
            u,
            v,
            xy,
            zw,
            xu: e0,
            uy: e0 + 1,
            zv: e0 + 2,
            vw: e0 + 3,
            uv: e0 + 4,
        })
    }

    pub fn is_type_i(&self) -> bool {
        matches!(self, CubicOpRecord::TypeI { .. })
    }

    /// The two vertices present only in the larger graph.
    pub fn new_vertices(&self) -> (VertexId, VertexId) {
        match *self {
            CubicOpRecord::TypeI { u, v, .. } | CubicOpRecord::TypeII { u, v, .. } => (u, v),
        }
    }

    /// Edges of the smaller graph that the forward step deletes.
    pub fn removed_edges(&self) -> ArrayVec<(EdgeId, VertexId, VertexId), 2> {
        match *self {
            CubicOpRecord::TypeI { x, y, xy, .. } => [(xy, x, y)].into_iter().collect(),
            CubicOpRecord::TypeII { x, y, z, w, xy, zw, .. } => ArrayVec::from([(xy, x, y), (zw, z, w)]),
        }
    }

    /// Edges of the larger graph that the forward step creates.
    pub fn added_edges(&self) -> ArrayVec<(EdgeId, VertexId, VertexId), 5> {
        match *self {
            CubicOpRecord::TypeI { x, y, u, v, xu, uv, vy, .. } => {
                [(xu, x, u), (uv[0], u, v), (uv[1], u, v), (vy, v, y)].into_iter().collect()
            }
            CubicOpRecord::TypeII { x, y, z, w, u, v, xu, uy, zv, vw, uv, .. } => {
                ArrayVec::from([(xu, x, u), (uy, u, y), (zv, z, v), (vw, v, w), (uv, u, v)])
            }
        }
    }
}

/// Effect of toggling one edge on its endpoints' effective degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToggleDelta {
    pub edge: EdgeId,
    pub endpoints: (VertexId, VertexId),
    pub old_degrees: (usize, usize),
    pub new_degrees: (usize, usize),
    /// Whether the edge is effectively in the subgraph after the toggle.
    pub now_member: bool,
}

/// A spanning subgraph `H` of a host multigraph, stored as raw per-edge
/// flags plus a polarity bit. With the polarity set, the effective subgraph
/// is the complement of the raw one, so switching between `H` and `G \ H`
/// costs O(1).
///
/// The host is passed to every method that needs it; the subgraph only
/// stores per-id state and must be used with the graph it was created for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph {
    member: Vec<bool>,
    raw_degree: Vec<usize>,
    complemented: bool,
}

impl SpanningSubgraph {
    /// `H = ∅`.
    pub fn empty(g: &Multigraph) -> Self {
        SpanningSubgraph {
            member: vec![false; g.edge_bound()],
            raw_degree: vec![0; g.vertex_bound()],
            complemented: false,
        }
    }

    /// `H = G`.
    pub fn full(g: &Multigraph) -> Self {
        let mut h = SpanningSubgraph::empty(g);
        h.complemented = true;
        h
    }

    /// The subgraph whose member edges are exactly `edges`.
    pub fn from_edges(g: &Multigraph, edges: &[EdgeId]) -> Result<Self> {
        let mut h = SpanningSubgraph::empty(g);
        for &e in edges {
            if !g.is_live(e) {
                return Err(Error::DeadEdge(e));
            }
            if !h.member[e] {
                h.set_raw(g, e, true);
            }
        }
        Ok(h)
    }

    /// The subgraph selecting bit `i` of `mask` for the `i`-th live edge.
    pub fn from_mask(g: &Multigraph, mask: u64) -> Self {
        let mut h = SpanningSubgraph::empty(g);
        for (i, e) in g.edge_ids().enumerate() {
            if i < 64 && mask >> i & 1 == 1 {
                h.set_raw(g, e, true);
            }
        }
        h
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    /// Whether live edge `e` is effectively in `H`.
    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.member[e] != self.complemented
    }

    #[inline]
    pub fn raw_member(&self, e: EdgeId) -> bool {
        self.member[e]
    }

    #[inline]
    pub fn raw_degree(&self, v: VertexId) -> usize {
        self.raw_degree[v]
    }

    /// Effective `d_H(v)`.
    #[inline]
    pub fn degree(&self, g: &Multigraph, v: VertexId) -> usize {
        if self.complemented {
            g.degree(v) - self.raw_degree[v]
        } else {
            self.raw_degree[v]
        }
    }

    fn set_raw(&mut self, g: &Multigraph, e: EdgeId, flag: bool) {
        let (a, b) = g.endpoints(e);
        if self.member[e] == flag {
            return;
        }
        self.member[e] = flag;
        if flag {
            self.raw_degree[a] += 1;
            self.raw_degree[b] += 1;
        } else {
            self.raw_degree[a] -= 1;
            self.raw_degree[b] -= 1;
        }
    }

    /// Flips the effective membership of `e`.
    pub fn toggle(&mut self, g: &Multigraph, e: EdgeId) -> Result<ToggleDelta> {
        if !g.is_live(e) {
            return Err(Error::DeadEdge(e));
        }
        let (a, b) = g.endpoints(e);
        let old = (self.degree(g, a), self.degree(g, b));
        let flag = !self.member[e];
        self.set_raw(g, e, flag);
        Ok(ToggleDelta {
            edge: e,
            endpoints: (a, b),
            old_degrees: old,
            new_degrees: (self.degree(g, a), self.degree(g, b)),
            now_member: self.contains(e),
        })
    }

    /// Replaces `H` by `G \ H` in O(1). The host must be regular.
    pub fn flip_polarity(&mut self, g: &Multigraph) -> Result<()> {
        if g.regularity().is_none() {
            return Err(Error::NotRegular);
        }
        self.complemented = !self.complemented;
        Ok(())
    }

    /// Polarity flip without the regularity check, for callers that hold
    /// the invariant themselves.
    pub(crate) fn flip_polarity_unchecked(&mut self) {
        self.complemented = !self.complemented;
    }

    /// Live edges effectively in `H`, ascending.
    pub fn members(&self, g: &Multigraph) -> Vec<EdgeId> {
        g.edge_ids().filter(|&e| self.contains(e)).collect()
    }

    /// Number of live edges effectively in `H`.
    pub fn size(&self, g: &Multigraph) -> usize {
        g.edge_ids().filter(|&e| self.contains(e)).count()
    }

    /// An equivalent subgraph with the polarity bit cleared.
    pub fn materialize(&self, g: &Multigraph) -> SpanningSubgraph {
        let mut out = SpanningSubgraph::empty(g);
        for e in g.edge_ids() {
            if self.contains(e) {
                out.set_raw(g, e, true);
            }
        }
        out
    }

    /// Grows the per-id storage after the host allocated new ids.
    pub(crate) fn sync_capacity(&mut self, g: &Multigraph) {
        if self.member.len() < g.edge_bound() {
            self.member.resize(g.edge_bound(), false);
        }
        if self.raw_degree.len() < g.vertex_bound() {
            self.raw_degree.resize(g.vertex_bound(), 0);
        }
    }

    /// Bookkeeping for an edge that the host has killed or is about to kill.
    pub(crate) fn detach_edge(&mut self, g: &Multigraph, e: EdgeId) {
        if self.member[e] {
            self.set_raw(g, e, false);
        }
    }

    /// Bookkeeping for an edge the host just made live.
    pub(crate) fn attach_edge(&mut self, g: &Multigraph, e: EdgeId, in_h: bool) {
        self.sync_capacity(g);
        self.member[e] = false;
        if in_h != self.complemented {
            self.set_raw(g, e, true);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Multigraph {
        Multigraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn c4() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_and_regularity() {
        let g = k23();
        assert_eq!((g.degree(0), g.degree(1)), (3, 3));
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(c4().regularity(), Some(2));
        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.regularity(), None);
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(Multigraph::build(2, &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(Multigraph::build(2, &[(0, 1), (0, 2)]), Err(Error::VertexOutOfRange(1)));
    }

    #[test]
    fn toggle_reports_degrees() {
        let g = c4();
        let mut h = SpanningSubgraph::empty(&g);
        let d = h.toggle(&g, 0).unwrap();
        assert_eq!(d.endpoints, (0, 1));
        assert_eq!(d.old_degrees, (0, 0));
        assert_eq!(d.new_degrees, (1, 1));
        h.toggle(&g, 0).unwrap();
        assert_eq!(h, SpanningSubgraph::empty(&g));

        let g = k23();
        let mut h = SpanningSubgraph::full(&g);
        let d = h.toggle(&g, 1).unwrap();
        assert_eq!((d.old_degrees, d.new_degrees), ((3, 3), (2, 2)));
        assert!(!d.now_member);
    }

    #[test]
    fn toggle_dead_edge_fails() {
        let mut g = c4();
        let mut h = SpanningSubgraph::empty(&g);
        g.kill_edge(2).unwrap();
        assert_eq!(h.toggle(&g, 2), Err(Error::DeadEdge(2)));
    }

    #[test]
    fn flip_polarity_complements() {
        let g = k23();
        let mut h = SpanningSubgraph::from_edges(&g, &[0]).unwrap();
        h.flip_polarity(&g).unwrap();
        assert_eq!(h.members(&g), vec![1, 2]);
        h.flip_polarity(&g).unwrap();
        assert_eq!(h.members(&g), vec![0]);

        let g = c4();
        let mut h = SpanningSubgraph::empty(&g);
        h.flip_polarity(&g).unwrap();
        assert!(g.vertices().all(|v| h.degree(&g, v) == 2));

        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let mut h = SpanningSubgraph::empty(&p3);
        assert_eq!(h.flip_polarity(&p3), Err(Error::NotRegular));
    }

    #[test]
    fn type_i_on_k23() {
        let mut g = k23();
        let before = g.live_edge_multiset();
        let rec = CubicOpRecord::plan_type_i(&g, 0).unwrap();
        g.expand_pair(&rec).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.live_edge_multiset(), vec![(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)]);
        g.contract_pair(&rec).unwrap();
        assert_eq!(g.live_edge_multiset(), before);
        assert_eq!(g.num_vertices(), 2);
    }

    #[test]
    fn type_ii_on_k23() {
        let mut g = k23();
        let before = g.live_edge_multiset();
        let rec = CubicOpRecord::plan_type_ii(&g, 0, 1).unwrap();
        g.expand_pair(&rec).unwrap();
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.num_edges(), 6);
        assert_eq!(g.live_edge_multiset(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        g.contract_pair(&rec).unwrap();
        assert_eq!(g.live_edge_multiset(), before);
    }

    #[test]
    fn contract_rejects_wrong_neighbourhood() {
        let mut g = k23();
        let rec = CubicOpRecord::plan_type_i(&g, 0).unwrap();
        g.expand_pair(&rec).unwrap();
        let (u, _) = rec.new_vertices();
        let extra = g.add_vertex();
        g.add_edge(u, extra).unwrap();
        assert!(matches!(g.contract_pair(&rec), Err(Error::MalformedRecord(_))));
    }

    #[test]
    fn handshake_holds_through_mutation() {
        let mut g = k23();
        let rec = CubicOpRecord::plan_type_ii(&g, 0, 2).unwrap();
        g.expand_pair(&rec).unwrap();
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.num_edges());
    }
}
