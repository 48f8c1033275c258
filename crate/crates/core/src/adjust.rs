//! Edge and multi-star adjustments with their exact b-vector deltas, and the
//! candidate search used by the general solver.
//!
//! Deltas are returned as `Vec<i64>` of length `d`, entry `i − 1` holding the
//! change of `b̃_i`.

use crate::error::{Error, Result};
use crate::irregularity::BVector;
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph, VertexId};

/// Change to `b̃_1..=b̃_d`, at offsets `0..d`.
pub type BDelta = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Delete,
    Add,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    InH,
    InComplement,
}

impl Side {
    fn holds(self, h: &SpanningSubgraph, e: EdgeId) -> bool {
        h.contains(e) == (self == Side::InH)
    }
}

/// All edges of a star that join the center to one leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarLeaf {
    pub leaf: VertexId,
    /// `d_H(leaf)` when the star was built.
    pub degree: usize,
    pub edges: Vec<EdgeId>,
}

impl StarLeaf {
    pub fn alpha(&self) -> usize {
        self.edges.len()
    }
}

/// A multi-star `S_(k; ℓ_1..ℓ_s; α_1..α_s)` on one side of `H`. Degrees are
/// `H`-degrees for both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiStar {
    pub center: VertexId,
    pub center_degree: usize,
    pub side: Side,
    pub leaves: Vec<StarLeaf>,
}

impl MultiStar {
    /// Total number of edges `m`.
    pub fn size(&self) -> usize {
        self.leaves.iter().map(StarLeaf::alpha).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.leaves.iter().flat_map(|l| l.edges.iter().copied())
    }
}

/// `A⁺`, `A⁻` and the run lengths `n_i`, `m_i` for a threshold `α̃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalParams {
    pub d: usize,
    pub alpha_scaled: i64,
    plus: Vec<bool>,
    minus: Vec<bool>,
    n: Vec<usize>,
    m: Vec<usize>,
}

impl IntervalParams {
    fn idx_ok(&self, i: i64) -> bool {
        i >= 1 && i <= self.d as i64
    }

    pub fn in_plus(&self, i: i64) -> bool {
        self.idx_ok(i) && self.plus[i as usize]
    }

    pub fn in_minus(&self, i: i64) -> bool {
        self.idx_ok(i) && self.minus[i as usize]
    }

    /// `n_i`, or 0 when `i` is in neither set.
    pub fn n_of(&self, i: usize) -> usize {
        self.n.get(i).copied().unwrap_or(0)
    }

    /// `m_i`, or 0 when `i` is in neither set.
    pub fn m_of(&self, i: usize) -> usize {
        self.m.get(i).copied().unwrap_or(0)
    }

    pub fn a_plus(&self) -> Vec<usize> {
        (1..=self.d).filter(|&i| self.plus[i]).collect()
    }

    pub fn a_minus(&self) -> Vec<usize> {
        (1..=self.d).filter(|&i| self.minus[i]).collect()
    }
}

pub fn interval_params(b: &BVector, alpha_scaled: i64) -> IntervalParams {
    let d = b.dim();
    let mut plus = vec![false; d + 2];
    let mut minus = vec![false; d + 2];
    for i in 1..=d {
        let x = b.at(i as i64);
        plus[i] = x > alpha_scaled;
        minus[i] = x < -alpha_scaled;
    }
    let run = |set: &[bool], i: usize, up: bool| -> usize {
        let mut k = 1;
        loop {
            let j = if up { i + k } else { i.wrapping_sub(k) };
            if j == 0 || j > d || !set[j] {
                return k;
            }
            k += 1;
        }
    };
    let mut n = vec![0; d + 2];
    let mut m = vec![0; d + 2];
    for i in 1..=d {
        if plus[i] {
            n[i] = run(&plus, i, true);
            m[i] = run(&plus, i, false);
        } else if minus[i] {
            n[i] = run(&minus, i, false);
            m[i] = run(&minus, i, true);
        }
    }
    IntervalParams { d, alpha_scaled, plus, minus, n, m }
}

/// A structure whose removal or addition improves `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Candidate {
    /// An `H`-edge; `i`, `j` are the endpoint degrees.
    EdgeInH { edge: EdgeId, i: usize, j: usize },
    /// A complement edge; `i`, `j` are the endpoint degrees plus one.
    EdgeInComplement { edge: EdgeId, i: usize, j: usize },
    StarInH(MultiStar),
    StarInComplement(MultiStar),
}

fn bump(delta: &mut [i64], i: usize, by: i64) -> Result<()> {
    if i == 0 || i > delta.len() {
        return Err(Error::IndexOutOfRange(i as i64));
    }
    delta[i - 1] += by;
    Ok(())
}

/// Predicted delta for toggling an `H(i,j)`-edge, degrees taken before.
pub fn edge_delta(d: usize, i: usize, j: usize, action: Action) -> Result<BDelta> {
    let s = (d + 1) as i64;
    let mut delta = vec![0; d];
    match action {
        Action::Delete => {
            bump(&mut delta, i, s)?;
            bump(&mut delta, j, s)?;
        }
        Action::Add => {
            bump(&mut delta, i + 1, -s)?;
            bump(&mut delta, j + 1, -s)?;
        }
    }
    Ok(delta)
}

/// Predicted delta for deleting (`InH`) or adding (`InComplement`) a star.
pub fn star_delta(d: usize, star: &MultiStar) -> Result<BDelta> {
    let s = (d + 1) as i64;
    let mut delta = vec![0; d];
    let k = star.center_degree as i64;
    let m = star.size() as i64;
    let mut run = |base: i64, len: i64| -> Result<()> {
        for t in 0..len {
            let i = match star.side {
                Side::InH => base - t,
                Side::InComplement => base + 1 + t,
            };
            if i < 1 || i > d as i64 {
                return Err(Error::IndexOutOfRange(i));
            }
            delta[i as usize - 1] += if star.side == Side::InH { s } else { -s };
        }
        Ok(())
    };
    run(k, m)?;
    for leaf in &star.leaves {
        run(leaf.degree as i64, leaf.alpha() as i64)?;
    }
    Ok(delta)
}

fn host_degree(g: &Multigraph) -> Result<usize> {
    g.regularity().ok_or(Error::NotRegular)
}

/// Deletes an `H`-edge or adds a complement edge, returning the b̃-delta.
pub fn apply_edge(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    e: EdgeId,
    action: Action,
) -> Result<BDelta> {
    let d = host_degree(g)?;
    if !g.is_live(e) {
        return Err(Error::DeadEdge(e));
    }
    let side = match action {
        Action::Delete => Side::InH,
        Action::Add => Side::InComplement,
    };
    if !side.holds(h, e) {
        return Err(Error::WrongSide(e));
    }
    let (x, y) = g.endpoints(e);
    let delta = edge_delta(d, h.degree(g, x), h.degree(g, y), action)?;
    h.toggle(g, e)?;
    Ok(delta)
}

/// Checks that `star` still describes the current state of `h`.
pub fn validate_star(g: &Multigraph, h: &SpanningSubgraph, star: &MultiStar) -> Result<()> {
    host_degree(g)?;
    let c = star.center;
    if !g.is_vertex_live(c) || h.degree(g, c) != star.center_degree {
        return Err(Error::StaleStar(format!("center {c} degree changed")));
    }
    let mut seen = Vec::new();
    for leaf in &star.leaves {
        if leaf.leaf == c || seen.contains(&leaf.leaf) {
            return Err(Error::StaleStar(format!("leaf {} repeated or equal to center", leaf.leaf)));
        }
        seen.push(leaf.leaf);
        if h.degree(g, leaf.leaf) != leaf.degree {
            return Err(Error::StaleStar(format!("leaf {} degree changed", leaf.leaf)));
        }
        for &e in &leaf.edges {
            if !g.is_live(e) {
                return Err(Error::DeadEdge(e));
            }
            let (x, y) = g.endpoints(e);
            if !((x == c && y == leaf.leaf) || (y == c && x == leaf.leaf)) {
                return Err(Error::StaleStar(format!("edge {e} does not join center and leaf")));
            }
            if !star.side.holds(h, e) {
                return Err(Error::WrongSide(e));
            }
        }
        let mut es = leaf.edges.clone();
        es.sort_unstable();
        es.dedup();
        if es.len() != leaf.edges.len() || es.is_empty() {
            return Err(Error::StaleStar(format!("leaf {} edge list is invalid", leaf.leaf)));
        }
    }
    Ok(())
}

/// Deletes (`InH`) or adds (`InComplement`) every edge of `star`.
pub fn apply_multistar(g: &Multigraph, h: &mut SpanningSubgraph, star: &MultiStar) -> Result<BDelta> {
    let d = host_degree(g)?;
    validate_star(g, h, star)?;
    let delta = star_delta(d, star)?;
    for e in star.edges() {
        h.toggle(g, e)?;
    }
    Ok(delta)
}

/// Searches for one of the four improving structures, in order: an
/// `H`-edge, a complement edge, an `H`-star, a complement star. Ties go to
/// the lowest edge or vertex id.
pub fn find_candidate(g: &Multigraph, h: &SpanningSubgraph, p: &IntervalParams) -> Option<Candidate> {
    let deg = |v: VertexId| h.degree(g, v);
    for e in g.edge_ids() {
        if !h.contains(e) {
            continue;
        }
        let (x, y) = g.endpoints(e);
        let (dx, dy) = (deg(x), deg(y));
        for (i, j) in [(dx, dy), (dy, dx)] {
            if p.in_minus(i as i64) && !p.in_plus(j as i64) {
                return Some(Candidate::EdgeInH { edge: e, i, j });
            }
        }
    }
    for e in g.edge_ids() {
        if h.contains(e) {
            continue;
        }
        let (x, y) = g.endpoints(e);
        let (dx, dy) = (deg(x) + 1, deg(y) + 1);
        for (i, j) in [(dx, dy), (dy, dx)] {
            if p.in_plus(i as i64) && !p.in_minus(j as i64) {
                return Some(Candidate::EdgeInComplement { edge: e, i, j });
            }
        }
    }
    if let Some(star) = selection_star(g, h, p, Side::InH) {
        return Some(Candidate::StarInH(star));
    }
    selection_star(g, h, p, Side::InComplement).map(Candidate::StarInComplement)
}

/// Directed selection: every vertex whose class lies in the source set picks
/// its `n_ℓ` lowest-id edges on `side`; a vertex receiving at least `m_k + 1`
/// picks becomes a star center.
fn selection_star(
    g: &Multigraph,
    h: &SpanningSubgraph,
    p: &IntervalParams,
    side: Side,
) -> Option<MultiStar> {
    // `shift` maps an H-degree to its b-index: deletion uses the degree,
    // addition uses degree + 1.
    let shift = usize::from(side == Side::InComplement);
    let source = |idx: usize| match side {
        Side::InH => p.in_minus(idx as i64),
        Side::InComplement => p.in_plus(idx as i64),
    };
    let target = |idx: usize| match side {
        Side::InH => p.in_plus(idx as i64),
        Side::InComplement => p.in_minus(idx as i64),
    };
    let selected = |x: VertexId| -> Vec<(EdgeId, VertexId)> {
        let l = h.degree(g, x) + shift;
        if !source(l) {
            return Vec::new();
        }
        let mut es: Vec<EdgeId> = g.incident(x).iter().copied().filter(|&e| side.holds(h, e)).collect();
        es.sort_unstable();
        es.truncate(p.n_of(l));
        es.into_iter()
            .map(|e| (e, g.edge(e).other(x)))
            .filter(|&(_, y)| target(h.degree(g, y) + shift))
            .collect()
    };

    let mut count = vec![0usize; g.vertex_bound()];
    for x in g.vertices() {
        for (_, y) in selected(x) {
            count[y] += 1;
        }
    }
    let center = g.vertices().find(|&y| {
        let k = h.degree(g, y) + shift;
        target(k) && count[y] > p.m_of(k)
    })?;
    let k = h.degree(g, center) + shift;
    let want = p.m_of(k) + 1;

    let mut leaves: Vec<StarLeaf> = Vec::new();
    let mut taken = 0;
    'outer: for x in g.vertices() {
        for (e, y) in selected(x) {
            if y != center {
                continue;
            }
            match leaves.iter_mut().find(|l| l.leaf == x) {
                Some(l) => l.edges.push(e),
                None => leaves.push(StarLeaf { leaf: x, degree: h.degree(g, x), edges: vec![e] }),
            }
            taken += 1;
            if taken == want {
                break 'outer;
            }
        }
    }
    Some(MultiStar { center, center_degree: h.degree(g, center), side, leaves })
}

fn require_cubic(g: &Multigraph) -> Result<()> {
    match g.regularity() {
        Some(3) => Ok(()),
        _ => Err(Error::NotCubic),
    }
}

/// Lowest-id `H`-edge with both endpoints of `H`-degree 3.
pub fn find_edge_33(g: &Multigraph, h: &SpanningSubgraph) -> Result<Option<EdgeId>> {
    require_cubic(g)?;
    Ok(g.edge_ids().find(|&e| {
        let (x, y) = g.endpoints(e);
        h.contains(e) && h.degree(g, x) == 3 && h.degree(g, y) == 3
    }))
}

/// Lowest-id complement edge with both endpoints of `H`-degree 0.
pub fn find_edge_00_complement(g: &Multigraph, h: &SpanningSubgraph) -> Result<Option<EdgeId>> {
    require_cubic(g)?;
    Ok(g.edge_ids().find(|&e| {
        let (x, y) = g.endpoints(e);
        !h.contains(e) && h.degree(g, x) == 0 && h.degree(g, y) == 0
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irregularity::b_scaled;

    fn k4() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn a_delta(b: &[i64]) -> Vec<i64> {
        let d = b.len();
        (0..=d).map(|i| b.get(i).copied().unwrap_or(0) - if i == 0 { 0 } else { b[i - 1] }).collect()
    }

    #[test]
    fn edge_delta_examples() {
        let b = [-2i64, 4, 2];
        let delta = edge_delta(3, 2, 1, Action::Delete).unwrap();
        let after: Vec<i64> = b.iter().zip(&delta).map(|(x, y)| x + y).collect();
        assert_eq!(after, vec![2, 8, 2]);
        assert_eq!(edge_delta(3, 0, 0, Action::Add).unwrap(), vec![-8, 0, 0]);
    }

    #[test]
    fn delete_then_add_cancels() {
        let g = k4();
        let mut h = SpanningSubgraph::from_edges(&g, &[0, 3]).unwrap();
        let d1 = apply_edge(&g, &mut h, 0, Action::Delete).unwrap();
        let d2 = apply_edge(&g, &mut h, 0, Action::Add).unwrap();
        assert!(d1.iter().zip(&d2).all(|(x, y)| x + y == 0));
        assert_eq!(apply_edge(&g, &mut h, 1, Action::Delete), Err(Error::WrongSide(1)));
    }

    #[test]
    fn star_deltas_match_known_a_shifts() {
        let s31 = MultiStar {
            center: 0,
            center_degree: 3,
            side: Side::InH,
            leaves: vec![
                StarLeaf { leaf: 1, degree: 1, edges: vec![0] },
                StarLeaf { leaf: 2, degree: 1, edges: vec![1] },
            ],
        };
        assert_eq!(a_delta(&star_delta(3, &s31).unwrap()), vec![8, -4, 0, -4]);
        let s21 = MultiStar { center_degree: 2, ..s31.clone() };
        assert_eq!(a_delta(&star_delta(3, &s21).unwrap()), vec![12, -8, -4, 0]);

        let single = MultiStar {
            center: 0,
            center_degree: 2,
            side: Side::InH,
            leaves: vec![StarLeaf { leaf: 1, degree: 3, edges: vec![0] }],
        };
        assert_eq!(star_delta(3, &single).unwrap(), edge_delta(3, 2, 3, Action::Delete).unwrap());
    }

    #[test]
    fn star_out_of_range() {
        let s = MultiStar {
            center: 0,
            center_degree: 1,
            side: Side::InH,
            leaves: vec![StarLeaf { leaf: 1, degree: 1, edges: vec![0, 1] }],
        };
        assert_eq!(star_delta(3, &s), Err(Error::IndexOutOfRange(0)));
    }

    #[test]
    fn interval_examples() {
        let b = BVector { entries: vec![6, 7, 2, -8, -9] };
        let p = interval_params(&b, 5);
        assert_eq!(p.a_plus(), vec![1, 2]);
        assert_eq!(p.a_minus(), vec![4, 5]);
        assert_eq!([p.n_of(1), p.n_of(2), p.n_of(4), p.n_of(5)], [2, 1, 1, 2]);
        assert_eq!([p.m_of(1), p.m_of(2), p.m_of(4), p.m_of(5)], [1, 2, 2, 1]);

        let p = interval_params(&BVector { entries: vec![1, -1, 0] }, 5);
        assert!(p.a_plus().is_empty() && p.a_minus().is_empty());

        let p = interval_params(&BVector { entries: vec![9, 9, 9, 9] }, 5);
        for i in 1..=4 {
            assert_eq!((p.n_of(i), p.m_of(i)), (4 - i + 1, i));
        }
    }

    #[test]
    fn edge_33_and_00() {
        let g = k4();
        let full = SpanningSubgraph::full(&g);
        assert_eq!(find_edge_33(&g, &full).unwrap(), Some(0));
        let empty = SpanningSubgraph::empty(&g);
        assert_eq!(find_edge_00_complement(&g, &empty).unwrap(), Some(0));
        let pm = SpanningSubgraph::from_edges(&g, &[0, 5]).unwrap();
        assert_eq!(find_edge_33(&g, &pm).unwrap(), None);
        let c4 = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(find_edge_33(&c4, &SpanningSubgraph::empty(&c4)), Err(Error::NotCubic));
    }

    #[test]
    fn clause_one_has_priority() {
        let g = k4();
        let h = SpanningSubgraph::full(&g);
        let b = b_scaled::<i64>(&g, &h).unwrap();
        // b̃ = (-4,-8,-12): A⁻ = {2,3}, A⁺ = ∅
        let p = interval_params(&b, 4);
        match find_candidate(&g, &h, &p) {
            Some(Candidate::EdgeInH { edge: 0, i: 3, j: 3 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
