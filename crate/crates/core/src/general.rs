//! Improvement loop for arbitrary `d`-regular multigraphs. Ends with
//! `‖b̃‖∞ ≤ d²(d+1)`, hence `|m(H,k) − n/(d+1)| ≤ 2d²` for every `k`.

use crate::adjust::{
    self, find_candidate, interval_params, Action, Candidate, IntervalParams, MultiStar, Side,
};
use crate::error::{invariant, Error, Result};
use crate::irregularity::{b_scaled, is_improvement, BVector, Improvement};
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph};

/// What an improving step changed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applied {
    Edge { edge: EdgeId, action: Action },
    Star(MultiStar),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// `|b̃_j|` lies in the window `(M̃ − d(d+1), M̃]`.
    Found(usize),
    Improved(Applied, Improvement),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveReport {
    pub improvement_count: u64,
    pub type_a_count: u64,
    pub type_b_count: u64,
    pub initial_b_inf: i64,
    pub final_b_inf: i64,
}

/// One improving step, with the vectors on either side of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub before: BVector,
    pub after: BVector,
    pub kind: Improvement,
    pub applied: Applied,
}

fn scale_of(d: usize) -> i64 {
    d as i64 + 1
}

/// `b̃` of `G \ H` from `b̃` of `H`.
fn negate_b(b: &BVector) -> BVector {
    BVector { entries: b.entries.iter().rev().map(|&x| -x).collect() }
}

fn add_delta(b: &mut BVector, delta: &[i64]) {
    for (x, y) in b.entries.iter_mut().zip(delta) {
        *x += y;
    }
}

fn checked_improvement(before: &BVector, after: &BVector) -> Result<Improvement> {
    match is_improvement(before, after)? {
        Improvement::NotImprovement => invariant(format!(
            "step from {:?} to {:?} is not an improvement",
            before.entries, after.entries
        )),
        k => Ok(k),
    }
}

/// Deletes an `H`-edge or adds a complement edge after checking the
/// inequalities that make the move an improvement. `b` is kept in sync.
pub fn improve_by_edge(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    b: &mut BVector,
    e: EdgeId,
    action: Action,
) -> Result<Improvement> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    let s = scale_of(d);
    if !g.is_live(e) {
        return Err(Error::DeadEdge(e));
    }
    let (x, y) = g.endpoints(e);
    let (dx, dy) = (h.degree(g, x) as i64, h.degree(g, y) as i64);
    let ok = match action {
        Action::Delete => {
            if !h.contains(e) {
                return Err(Error::WrongSide(e));
            }
            [(dx, dy), (dy, dx)]
                .iter()
                .any(|&(i, j)| b.at(i) < -s && b.at(i) + b.at(j) < -s)
        }
        Action::Add => {
            if h.contains(e) {
                return Err(Error::WrongSide(e));
            }
            [(dx + 1, dy + 1), (dy + 1, dx + 1)]
                .iter()
                .any(|&(i, j)| b.at(i) > s && b.at(i) + b.at(j) > s)
        }
    };
    if !ok {
        return Err(Error::PreconditionViolated(format!(
            "edge {e} ({action:?}) fails the b-value inequalities at degrees ({dx},{dy})"
        )));
    }
    let before = b.clone();
    let delta = adjust::apply_edge(g, h, e, action)?;
    add_delta(b, &delta);
    checked_improvement(&before, b)
}

/// Deletes (`InH`) or adds (`InComplement`) a star produced by the
/// selection search, after checking the threshold on `b̃_{k∓m_k}`.
pub fn improve_by_multistar(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    b: &mut BVector,
    star: &MultiStar,
    params: &IntervalParams,
) -> Result<Improvement> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    let dd = (d * (d + 1)) as i64;
    let slack = params.alpha_scaled - dd;
    if slack < 0 {
        return Err(Error::PreconditionViolated(format!(
            "alpha {} is below d(d+1) = {dd}",
            params.alpha_scaled
        )));
    }
    match star.side {
        Side::InH => {
            let k = star.center_degree;
            let at = k as i64 - params.m_of(k) as i64;
            if b.at(at) > slack {
                return Err(Error::PreconditionViolated(format!(
                    "b[{at}] = {} exceeds {slack}",
                    b.at(at)
                )));
            }
        }
        Side::InComplement => {
            let k = star.center_degree + 1;
            let at = (k + params.m_of(k)) as i64;
            if b.at(at) < -slack {
                return Err(Error::PreconditionViolated(format!(
                    "b[{at}] = {} is below {}",
                    b.at(at),
                    -slack
                )));
            }
        }
    }
    let before = b.clone();
    let delta = adjust::apply_multistar(g, h, star)?;
    add_delta(b, &delta);
    checked_improvement(&before, b)
}

/// Either reports an index in the window below `M̃`, or applies one
/// improvement. Requires some `|b̃_i| > M̃ ≥ d(d+1)`.
pub fn reduce_step(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    b: &mut BVector,
    m_scaled: i64,
) -> Result<ReduceOutcome> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    let s = scale_of(d);
    let dd = d as i64 * s;
    if m_scaled < dd {
        return Err(Error::PreconditionViolated(format!("M = {m_scaled} is below d(d+1) = {dd}")));
    }
    if b.max_abs() <= m_scaled {
        return Err(Error::PreconditionViolated("no entry of b exceeds M".into()));
    }
    if let Some(j) = (1..=d).find(|&j| {
        let x = b.at(j as i64).abs();
        x > m_scaled - dd && x <= m_scaled
    }) {
        return Ok(ReduceOutcome::Found(j));
    }

    let flip = !b.entries.iter().any(|&x| x > m_scaled);
    if flip {
        h.flip_polarity_unchecked();
        *b = negate_b(b);
    }
    let out = reduce_positive(g, h, b, m_scaled, d);
    if flip {
        h.flip_polarity_unchecked();
        *b = negate_b(b);
    }
    out
}

fn reduce_positive(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    b: &mut BVector,
    m_scaled: i64,
    d: usize,
) -> Result<ReduceOutcome> {
    let s = scale_of(d);
    let in_plus = |i: usize| i >= 1 && i <= d && b.at(i as i64) > m_scaled;
    let Some(x) = g.vertices().find(|&v| in_plus(h.degree(g, v) + 1)) else {
        return invariant("no vertex of degree i-1 with i in A+");
    };
    let i = h.degree(g, x) + 1;
    let Some(e) = g.incident(x).iter().copied().filter(|&e| !h.contains(e)).min() else {
        return invariant(format!("vertex {x} of degree {} has no complement edge", i - 1));
    };
    let j = h.degree(g, g.edge(e).other(x)) + 1;
    if b.at(i as i64) + b.at(j as i64) > s {
        let kind = improve_by_edge(g, h, b, e, Action::Add)?;
        return Ok(ReduceOutcome::Improved(Applied::Edge { edge: e, action: Action::Add }, kind));
    }

    let params = interval_params(b, m_scaled);
    if params.a_minus().is_empty() {
        return invariant("A- is empty although the window is clear");
    }
    match find_candidate(g, h, &params) {
        Some(Candidate::EdgeInH { edge, .. }) => {
            let kind = improve_by_edge(g, h, b, edge, Action::Delete)?;
            Ok(ReduceOutcome::Improved(Applied::Edge { edge, action: Action::Delete }, kind))
        }
        Some(Candidate::EdgeInComplement { edge, .. }) => {
            let kind = improve_by_edge(g, h, b, edge, Action::Add)?;
            Ok(ReduceOutcome::Improved(Applied::Edge { edge, action: Action::Add }, kind))
        }
        Some(Candidate::StarInH(star)) | Some(Candidate::StarInComplement(star)) => {
            let kind = improve_by_multistar(g, h, b, &star, &params)?;
            Ok(ReduceOutcome::Improved(Applied::Star(star), kind))
        }
        None => invariant(format!("no candidate found for b = {:?}", b.entries)),
    }
}

/// One pass of the level descent. `None` once `‖b̃‖∞ ≤ d²(d+1)`.
pub fn improve_once_with(
    g: &Multigraph,
    h: &mut SpanningSubgraph,
    b: &mut BVector,
) -> Result<Option<(Applied, Improvement)>> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    let dd = (d * (d + 1)) as i64;
    if b.max_abs() <= d as i64 * dd {
        return Ok(None);
    }
    let mut t = d as i64;
    while t >= 1 {
        match reduce_step(g, h, b, t * dd)? {
            ReduceOutcome::Improved(applied, kind) => return Ok(Some((applied, kind))),
            ReduceOutcome::Found(_) => t -= 1,
        }
    }
    invariant(format!("level descent exhausted on b = {:?}", b.entries))
}

/// Applies one improvement if `H` is not yet within the target bound.
pub fn improve_once(g: &Multigraph, h: &mut SpanningSubgraph) -> Result<bool> {
    let mut b = b_scaled::<i64>(g, h)?;
    Ok(improve_once_with(g, h, &mut b)?.is_some())
}

/// The explicit bound on the length of any improvement sequence,
/// `((d+1)dn + 1)·((d+1)n + 1)^(d−1)`, saturating.
pub fn iteration_bound(d: usize, n: usize) -> u128 {
    let (d, n) = (d as u128, n as u128);
    let first = (d + 1).saturating_mul(d).saturating_mul(n).saturating_add(1);
    let base = (d + 1).saturating_mul(n).saturating_add(1);
    (1..d).fold(first, |acc, _| acc.saturating_mul(base))
}

/// Stepwise driver of the improvement loop.
#[derive(Debug, Clone)]
pub struct GeneralSolver<'g> {
    g: &'g Multigraph,
    h: SpanningSubgraph,
    b: BVector,
    bound: u128,
    verify: bool,
    report: SolveReport,
}

impl<'g> GeneralSolver<'g> {
    pub fn new(g: &'g Multigraph, initial: SpanningSubgraph) -> Result<Self> {
        let d = g.regularity().ok_or(Error::NotRegular)?;
        if d < 2 {
            return Err(Error::DegreeTooSmall(d));
        }
        let b = b_scaled::<i64>(g, &initial)?;
        let report = SolveReport {
            initial_b_inf: b.max_abs(),
            final_b_inf: b.max_abs(),
            ..SolveReport::default()
        };
        Ok(GeneralSolver {
            g,
            h: initial,
            b,
            bound: iteration_bound(d, g.num_vertices()),
            verify: false,
            report,
        })
    }

    /// Recompute `b̃` from scratch after every step and compare.
    pub fn with_verify(mut self, on: bool) -> Self {
        self.verify = on;
        self
    }

    pub fn subgraph(&self) -> &SpanningSubgraph {
        &self.h
    }

    pub fn b(&self) -> &BVector {
        &self.b
    }

    pub fn report(&self) -> &SolveReport {
        &self.report
    }

    /// Performs one improvement; `None` when the target is reached.
    pub fn step(&mut self) -> Result<Option<StepRecord>> {
        let before = self.b.clone();
        let Some((applied, kind)) = improve_once_with(self.g, &mut self.h, &mut self.b)? else {
            return Ok(None);
        };
        if self.verify {
            let fresh = b_scaled::<i64>(self.g, &self.h)?;
            if fresh != self.b {
                return invariant(format!(
                    "incremental b {:?} differs from recomputed {:?}",
                    self.b.entries, fresh.entries
                ));
            }
        }
        let r = &mut self.report;
        r.improvement_count += 1;
        match kind {
            Improvement::TypeA => r.type_a_count += 1,
            Improvement::TypeB => r.type_b_count += 1,
            Improvement::NotImprovement => unreachable!("filtered by checked_improvement"),
        }
        r.final_b_inf = self.b.max_abs();
        if u128::from(r.improvement_count) > self.bound {
            return invariant("improvement count exceeds the sequence-length bound");
        }
        Ok(Some(StepRecord { before, after: self.b.clone(), kind, applied }))
    }

    pub fn run(mut self) -> Result<(SpanningSubgraph, SolveReport)> {
        while self.step()?.is_some() {}
        Ok((self.h, self.report))
    }
}

/// Runs the improvement loop from `initial` (empty when `None`).
pub fn solve_general(
    g: &Multigraph,
    initial: Option<SpanningSubgraph>,
) -> Result<(SpanningSubgraph, SolveReport)> {
    let h = initial.unwrap_or_else(|| SpanningSubgraph::empty(g));
    GeneralSolver::new(g, h)?.run()
}
