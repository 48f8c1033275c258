//! Mutable state of the cubic solver: host graph, subgraph and an index
//! answering "give me some `H(i,j)`-edge" or "some `S_(i;1,1)` center" in
//! O(1), kept current under every toggle, expansion and polarity flip.
//!
//! The index is keyed by raw data (raw membership flag and raw degree), which
//! a polarity flip leaves untouched. Effective queries translate through the
//! polarity bit: with it set, effective degree `i` is raw degree `3 − i` and
//! effective membership is the negation of the raw flag.

use arrayvec::ArrayVec;

use crate::error::{Error, Result};
use crate::irregularity::AVector;
use crate::multigraph::{CubicOpRecord, EdgeId, Multigraph, SpanningSubgraph, VertexId};

use super::state::{classify_entries, CubicState};

const NONE: usize = usize::MAX;

/// Work counters, for checking that total effort is linear.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub toggles: u64,
    pub bucket_updates: u64,
    pub flips: u64,
    pub state1_repairs: u64,
    pub state2_repairs: u64,
    /// Largest number of first-phase rounds in one normalisation.
    pub max_phase1_rounds: u64,
}

/// Raw-keyed bucket index. Bucket `side·16 + 4·r_lo + r_hi` holds the live
/// edges with raw flag `side` and raw endpoint degrees `r_lo ≤ r_hi`.
#[derive(Debug, Clone, Default)]
pub struct EdgeIndex {
    buckets: Vec<Vec<EdgeId>>,
    slot: Vec<usize>,
    key: Vec<u8>,
    /// Raw-in edges to raw-degree-1 neighbours.
    hit1: Vec<u8>,
    /// Raw-out edges to raw-degree-2 neighbours.
    hit2: Vec<u8>,
    /// Star centers by raw degree: `r ≥ 2` needs `hit1 ≥ 2`, `r ≤ 1` needs
    /// `hit2 ≥ 2`.
    stars: Vec<Vec<VertexId>>,
    star_slot: Vec<usize>,
    star_key: Vec<u8>,
    class: [usize; 4],
    vmark: Vec<u32>,
    emark: Vec<u32>,
    epoch: u32,
}

/// Marks `i` with `epoch`; true if it was not marked yet.
fn stamp(marks: &mut Vec<u32>, i: usize, epoch: u32) -> bool {
    if marks.len() <= i {
        marks.resize(i + 1, 0);
    }
    let fresh = marks[i] != epoch;
    marks[i] = epoch;
    fresh
}

impl EdgeIndex {
    fn build(g: &Multigraph, h: &SpanningSubgraph) -> Self {
        let mut idx = EdgeIndex {
            buckets: vec![Vec::new(); 32],
            stars: vec![Vec::new(); 4],
            ..EdgeIndex::default()
        };
        idx.grow(g);
        for v in g.vertices() {
            idx.class[h.raw_degree(v)] += 1;
        }
        let mut c = 0;
        for e in g.edge_ids() {
            idx.insert_edge(g, h, e, &mut c);
        }
        for v in g.vertices() {
            idx.restar(h, v, &mut c);
        }
        idx
    }

    fn grow(&mut self, g: &Multigraph) {
        if self.slot.len() < g.edge_bound() {
            self.slot.resize(g.edge_bound(), NONE);
            self.key.resize(g.edge_bound(), 0);
        }
        if self.hit1.len() < g.vertex_bound() {
            self.hit1.resize(g.vertex_bound(), 0);
            self.hit2.resize(g.vertex_bound(), 0);
            self.star_slot.resize(g.vertex_bound(), NONE);
            self.star_key.resize(g.vertex_bound(), 0);
        }
    }

    fn key_of(g: &Multigraph, h: &SpanningSubgraph, e: EdgeId) -> usize {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (h.raw_degree(a), h.raw_degree(b));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        usize::from(h.raw_member(e)) * 16 + lo * 4 + hi
    }

    fn hits(&mut self, g: &Multigraph, h: &SpanningSubgraph, e: EdgeId, add: bool) {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (h.raw_degree(a), h.raw_degree(b));
        let (table, want) = if h.raw_member(e) { (&mut self.hit1, 1) } else { (&mut self.hit2, 2) };
        for (x, ry) in [(a, rb), (b, ra)] {
            if ry == want {
                if add {
                    table[x] += 1;
                } else {
                    table[x] -= 1;
                }
            }
        }
    }

    fn insert_edge(&mut self, g: &Multigraph, h: &SpanningSubgraph, e: EdgeId, c: &mut u64) {
        let k = Self::key_of(g, h, e);
        self.key[e] = k as u8;
        self.slot[e] = self.buckets[k].len();
        self.buckets[k].push(e);
        self.hits(g, h, e, true);
        *c += 1;
    }

    fn remove_edge(&mut self, g: &Multigraph, h: &SpanningSubgraph, e: EdgeId, c: &mut u64) {
        let k = self.key[e] as usize;
        let pos = self.slot[e];
        let bucket = &mut self.buckets[k];
        bucket.swap_remove(pos);
        if let Some(&moved) = bucket.get(pos) {
            self.slot[moved] = pos;
        }
        self.slot[e] = NONE;
        self.hits(g, h, e, false);
        *c += 1;
    }

    fn unstar(&mut self, v: VertexId, c: &mut u64) {
        let pos = self.star_slot.get(v).copied().unwrap_or(NONE);
        if pos == NONE {
            return;
        }
        let set = &mut self.stars[self.star_key[v] as usize];
        set.swap_remove(pos);
        if let Some(&moved) = set.get(pos) {
            self.star_slot[moved] = pos;
        }
        self.star_slot[v] = NONE;
        *c += 1;
    }

    fn restar(&mut self, h: &SpanningSubgraph, v: VertexId, c: &mut u64) {
        self.unstar(v, c);
        let r = h.raw_degree(v);
        let hit = if r >= 2 { self.hit1[v] } else { self.hit2[v] };
        if hit >= 2 {
            self.star_key[v] = r as u8;
            self.star_slot[v] = self.stars[r].len();
            self.stars[r].push(v);
            *c += 1;
        }
    }

    /// Canonical contents, for comparing two indexes.
    fn snapshot(&self) -> (Vec<Vec<EdgeId>>, Vec<Vec<VertexId>>, [usize; 4]) {
        let sorted = |xs: &Vec<Vec<usize>>| {
            xs.iter()
                .map(|b| {
                    let mut b = b.clone();
                    b.sort_unstable();
                    b
                })
                .collect()
        };
        (sorted(&self.buckets), sorted(&self.stars), self.class)
    }
}

/// Host graph, subgraph and index, mutated together.
#[derive(Debug, Clone)]
pub struct CubicWorkspace {
    g: Multigraph,
    h: SpanningSubgraph,
    idx: EdgeIndex,
    pub counters: Counters,
}

impl CubicWorkspace {
    pub fn new(g: Multigraph, h: SpanningSubgraph) -> Result<Self> {
        if g.regularity() != Some(3) {
            return Err(Error::NotCubic);
        }
        let mut h = h;
        h.sync_capacity(&g);
        let idx = EdgeIndex::build(&g, &h);
        Ok(CubicWorkspace { g, h, idx, counters: Counters::default() })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.g
    }

    pub fn subgraph(&self) -> &SpanningSubgraph {
        &self.h
    }

    pub fn into_parts(self) -> (Multigraph, SpanningSubgraph) {
        (self.g, self.h)
    }

    fn pol(&self) -> bool {
        self.h.is_complemented()
    }

    /// `m(H,k)` from the maintained class counts.
    pub fn counts(&self) -> [usize; 4] {
        let c = self.idx.class;
        if self.pol() {
            [c[3], c[2], c[1], c[0]]
        } else {
            c
        }
    }

    /// `ã = 4·m(H,·) − n`.
    pub fn a(&self) -> [i64; 4] {
        let n = self.g.num_vertices() as i64;
        self.counts().map(|m| 4 * m as i64 - n)
    }

    pub fn a_vector(&self) -> AVector {
        AVector { d: 3, n: self.g.num_vertices(), entries: self.a().to_vec() }
    }

    pub fn state(&self) -> CubicState {
        classify_entries(&self.a())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.h.degree(&self.g, v)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.h.contains(e)
    }

    fn bucket(&self, side: bool, i: usize, j: usize) -> Option<EdgeId> {
        let (lo, hi) = (i.min(j), i.max(j));
        self.idx.buckets[usize::from(side) * 16 + lo * 4 + hi].last().copied()
    }

    /// Some `H(i,j)`-edge of `H`.
    pub fn p(&self, i: usize, j: usize) -> Option<EdgeId> {
        if self.pol() {
            self.bucket(false, 3 - i, 3 - j)
        } else {
            self.bucket(true, i, j)
        }
    }

    /// Some `H(i,j)`-edge of `G \ H`.
    pub fn q(&self, i: usize, j: usize) -> Option<EdgeId> {
        if self.pol() {
            self.bucket(true, 3 - i, 3 - j)
        } else {
            self.bucket(false, i, j)
        }
    }

    /// Some path `x–c–z` in `H` with `d_H(c) = i` and `d_H(x) = d_H(z) = 1`,
    /// returned as the center and the two edges.
    pub fn star(&self, i: usize) -> Option<(VertexId, [EdgeId; 2])> {
        let r = if self.pol() { 3 - i } else { i };
        let &c = self.idx.stars[r].last()?;
        let mut found = self
            .g
            .incident(c)
            .iter()
            .copied()
            .filter(|&e| self.h.contains(e) && self.degree(self.g.edge(e).other(c)) == 1);
        Some((c, [found.next()?, found.next()?]))
    }

    /// Replaces `H` by `G \ H`.
    pub fn flip(&mut self) {
        self.h.flip_polarity_unchecked();
        self.counters.flips += 1;
    }

    /// Runs `f` with the index entries around `seeds` taken out, then puts
    /// them back. `f` may only change edges incident to a seed and degrees
    /// of seeds.
    fn local<R>(
        &mut self,
        seeds: &[VertexId],
        f: impl FnOnce(&mut Multigraph, &mut SpanningSubgraph) -> Result<R>,
    ) -> Result<R> {
        let mut s: ArrayVec<VertexId, 8> = ArrayVec::new();
        for &v in seeds {
            if !s.contains(&v) {
                s.push(v);
            }
        }
        let mut c = 0u64;
        if self.idx.epoch > u32::MAX - 8 {
            self.idx.epoch = 0;
            self.idx.vmark.fill(0);
            self.idx.emark.fill(0);
        }
        self.idx.epoch += 2;
        let (ve, ee) = (self.idx.epoch, self.idx.epoch + 1);
        let mut near: ArrayVec<VertexId, 48> = ArrayVec::new();
        let mut edges: ArrayVec<EdgeId, 24> = ArrayVec::new();
        for &v in &s {
            stamp(&mut self.idx.vmark, v, ve);
            near.push(v);
            if !self.g.is_vertex_live(v) {
                continue;
            }
            for &e in self.g.incident(v) {
                if stamp(&mut self.idx.emark, e, ee) {
                    edges.push(e);
                }
            }
        }
        for &e in &edges {
            self.idx.remove_edge(&self.g, &self.h, e, &mut c);
            let (a, b) = self.g.endpoints(e);
            for x in [a, b] {
                if stamp(&mut self.idx.vmark, x, ve) {
                    near.push(x);
                }
            }
        }
        for &v in &near {
            self.idx.unstar(v, &mut c);
        }
        for &v in &s {
            if self.g.is_vertex_live(v) {
                self.idx.class[self.h.raw_degree(v)] -= 1;
            }
        }

        let out = f(&mut self.g, &mut self.h);
        if out.is_err() {
            self.h.sync_capacity(&self.g);
            self.idx = EdgeIndex::build(&self.g, &self.h);
            return out;
        }

        self.idx.grow(&self.g);
        // Fresh stamp for the edge pass; vertex stamps carry over.
        let ee = ee + 2;
        self.idx.epoch += 2;
        edges.clear();
        for &v in &s {
            if !self.g.is_vertex_live(v) {
                continue;
            }
            self.idx.class[self.h.raw_degree(v)] += 1;
            for &e in self.g.incident(v) {
                if stamp(&mut self.idx.emark, e, ee) {
                    edges.push(e);
                }
            }
        }
        for &e in &edges {
            self.idx.insert_edge(&self.g, &self.h, e, &mut c);
            let (a, b) = self.g.endpoints(e);
            for x in [a, b] {
                if stamp(&mut self.idx.vmark, x, ve) {
                    near.push(x);
                }
            }
        }
        for &v in &near {
            if self.g.is_vertex_live(v) {
                self.idx.restar(&self.h, v, &mut c);
            }
        }
        self.counters.bucket_updates += c;
        out
    }

    /// Flips the membership of `e`.
    pub fn toggle(&mut self, e: EdgeId) -> Result<()> {
        if !self.g.is_live(e) {
            return Err(Error::DeadEdge(e));
        }
        let (a, b) = self.g.endpoints(e);
        self.local(&[a, b], |g, h| h.toggle(g, e).map(|_| ()))?;
        self.counters.toggles += 1;
        Ok(())
    }

    /// Removes `e` from `H`; it must be in `H`.
    pub fn delete(&mut self, e: EdgeId) -> Result<()> {
        if !self.g.is_live(e) || !self.h.contains(e) {
            return Err(Error::WrongSide(e));
        }
        self.toggle(e)
    }

    /// Adds `e` to `H`; it must be in `G \ H`.
    pub fn add(&mut self, e: EdgeId) -> Result<()> {
        if !self.g.is_live(e) || self.h.contains(e) {
            return Err(Error::WrongSide(e));
        }
        self.toggle(e)
    }

    /// Applies a generation step to the host. Each new edge enters `H`
    /// exactly when `in_h` says so.
    pub fn expand(&mut self, rec: &CubicOpRecord, in_h: impl Fn(EdgeId) -> bool) -> Result<()> {
        let mut seeds: ArrayVec<VertexId, 6> = ArrayVec::new();
        for (_, a, b) in rec.removed_edges() {
            seeds.push(a);
            seeds.push(b);
        }
        let (u, v) = rec.new_vertices();
        seeds.push(u);
        seeds.push(v);
        let added = rec.added_edges();
        let removed = rec.removed_edges();
        self.local(&seeds, |g, h| {
            g.expand_pair(rec)?;
            h.sync_capacity(g);
            for &(e, _, _) in &removed {
                h.detach_edge(g, e);
            }
            for &(e, _, _) in &added {
                h.attach_edge(g, e, in_h(e));
            }
            Ok(())
        })?;
        self.counters.toggles += (added.len() + removed.len()) as u64;
        Ok(())
    }

    /// Rebuilds the index from scratch and compares it with the maintained one.
    pub fn check_index(&self) -> Result<()> {
        let fresh = EdgeIndex::build(&self.g, &self.h);
        if fresh.snapshot() != self.idx.snapshot() {
            return Err(Error::InternalInvariant("edge index out of sync".into()));
        }
        let live_ok = self.g.edge_ids().all(|e| self.idx.slot[e] != NONE);
        if !live_ok {
            return Err(Error::InternalInvariant("live edge missing from index".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn buckets_follow_toggles_and_flips() {
        let g = k4();
        let mut ws = CubicWorkspace::new(g, SpanningSubgraph::empty(&k4())).unwrap();
        assert_eq!(ws.a(), [12, -4, -4, -4]);
        assert!(ws.q(0, 0).is_some() && ws.p(0, 0).is_none());
        ws.add(0).unwrap();
        assert_eq!(ws.p(1, 1), Some(0));
        assert_eq!(ws.a(), [4, 4, -4, -4]);
        ws.add(1).unwrap();
        // path 1–0–2: center 0 has H-degree 2 and two degree-1 ends
        assert_eq!(ws.star(2).map(|s| s.0), Some(0));
        ws.check_index().unwrap();
        ws.flip();
        assert_eq!(ws.a(), [-4, 0, 4, 0]);
        assert!(ws.p(2, 2).is_some());
        assert!(ws.q(1, 2).is_some());
        assert!(ws.star(2).is_none());
        ws.check_index().unwrap();
    }

    #[test]
    fn expansion_keeps_index() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let h = SpanningSubgraph::from_edges(&g, &[0]).unwrap();
        let mut ws = CubicWorkspace::new(g, h).unwrap();
        let rec = CubicOpRecord::plan_type_i(ws.graph(), 0).unwrap();
        ws.expand(&rec, |_| true).unwrap();
        ws.check_index().unwrap();
        assert_eq!(ws.a(), [-4, 4, -4, 4]);

        let rec = CubicOpRecord::plan_type_ii(ws.graph(), 1, 2).unwrap();
        ws.flip();
        ws.expand(&rec, |e| e != 10 && e != 11).unwrap();
        ws.check_index().unwrap();
    }
}
