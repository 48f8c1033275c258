//! Named multigraph families and random regular multigraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, SpanningSubgraph, VertexId};

const LOOP_RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Two vertices joined by `k` parallel edges.
    K2k(usize),
    /// `K_{d,d}`.
    CompleteBipartite(usize),
    /// Every edge of the base graph replaced by `s` parallel copies.
    DoubledGraph(Box<GeneratorSpec>, usize),
    Cycle(usize),
    /// `copies` disjoint copies of a graph.
    DisjointUnion(Box<GeneratorSpec>, usize),
    RandomRegular { n: usize, d: usize, seed: u64 },
    Petersen,
    K4,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Multigraph> {
    match spec {
        GeneratorSpec::K2k(k) => k2k(*k),
        GeneratorSpec::CompleteBipartite(d) => complete_bipartite(*d),
        GeneratorSpec::DoubledGraph(base, s) => blow_up(&generate(base)?, *s),
        GeneratorSpec::Cycle(n) => cycle(*n),
        GeneratorSpec::DisjointUnion(base, copies) => disjoint_copies(&generate(base)?, *copies),
        GeneratorSpec::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
        GeneratorSpec::Petersen => Ok(petersen()),
        GeneratorSpec::K4 => Ok(k4()),
    }
}

pub fn k2k(k: usize) -> Result<Multigraph> {
    if k == 0 {
        return Err(Error::InvalidParams("K2^k needs k >= 1".into()));
    }
    Multigraph::build(2, &vec![(0, 1); k])
}

pub fn complete_bipartite(d: usize) -> Result<Multigraph> {
    if d == 0 {
        return Err(Error::InvalidParams("K_{d,d} needs d >= 1".into()));
    }
    let mut edges = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            edges.push((a, d + b));
        }
    }
    Multigraph::build(2 * d, &edges)
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::InvalidParams("a cycle needs n >= 2".into()));
    }
    let edges: Vec<(VertexId, VertexId)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::build(n, &edges)
}

pub fn k4() -> Multigraph {
    Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid")
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::build(10, &edges).expect("valid")
}

/// `G^s`: copy `j` of edge `e` gets id `s·e + j`.
pub fn blow_up(g: &Multigraph, s: usize) -> Result<Multigraph> {
    if s == 0 {
        return Err(Error::InvalidParams("blow-up needs s >= 1".into()));
    }
    let mut out = Multigraph::with_vertices(g.vertex_bound());
    for e in 0..g.edge_bound() {
        if !g.is_live(e) {
            return Err(Error::InvalidParams("blow-up needs a graph without dead edges".into()));
        }
        let (u, v) = g.endpoints(e);
        for _ in 0..s {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}

pub fn disjoint_copies(g: &Multigraph, copies: usize) -> Result<Multigraph> {
    if copies == 0 {
        return Err(Error::InvalidParams("need at least one copy".into()));
    }
    let mut out = g.clone();
    for _ in 1..copies {
        out = out.disjoint_union(g);
    }
    Ok(out)
}

/// Configuration model on `n·d` stubs. Loops are broken by re-pairing the
/// looped stub pair with a random other pair; parallel edges are kept.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || d == 0 || (n * d) % 2 == 1 {
        return Err(Error::InvalidParams(format!("no {d}-regular multigraph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    stubs.shuffle(&mut rng);
    let pairs = stubs.len() / 2;
    let mut loops: Vec<usize> = (0..pairs).filter(|&p| stubs[2 * p] == stubs[2 * p + 1]).collect();
    let mut retries = 0;
    while let Some(p) = loops.pop() {
        if stubs[2 * p] != stubs[2 * p + 1] {
            continue;
        }
        retries += 1;
        if retries > LOOP_RETRIES {
            return Err(Error::RetryExhausted(LOOP_RETRIES));
        }
        let q = rng.gen_range(0..pairs);
        if q == p {
            loops.push(p);
            continue;
        }
        // {a, a} + {b, c} → {a, b} + {a, c} or {a, c} + {a, b}
        let i = 2 * q + usize::from(rng.gen_bool(0.5));
        stubs.swap(2 * p + 1, i);
        for r in [p, q] {
            if stubs[2 * r] == stubs[2 * r + 1] {
                loops.push(r);
            }
        }
    }
    let edges: Vec<(VertexId, VertexId)> =
        stubs.chunks_exact(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    Multigraph::build(n, &edges)
}

/// Each live edge enters independently with probability `p`.
pub fn random_subgraph(g: &Multigraph, p: f64, seed: u64) -> SpanningSubgraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members: Vec<_> = g.edge_ids().filter(|_| rng.gen_bool(p)).collect();
    SpanningSubgraph::from_edges(g, &members).expect("live edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named() {
        assert_eq!(generate(&GeneratorSpec::K2k(3)).unwrap().live_edge_multiset(), vec![(0, 1); 3]);
        let k33 = generate(&GeneratorSpec::CompleteBipartite(3)).unwrap();
        assert_eq!((k33.regularity(), k33.num_edges()), (Some(3), 9));
        let c3x2 =
            generate(&GeneratorSpec::DoubledGraph(Box::new(GeneratorSpec::Cycle(3)), 2)).unwrap();
        assert_eq!((c3x2.num_vertices(), c3x2.num_edges(), c3x2.regularity()), (3, 6, Some(4)));
        assert_eq!(c3x2.endpoints(2), c3x2.endpoints(3));
        assert_eq!(petersen().regularity(), Some(3));
        assert_eq!(petersen().num_edges(), 15);
    }

    #[test]
    fn random_regular_basics() {
        let g = random_regular(2, 3, 7).unwrap();
        assert_eq!(g.live_edge_multiset(), vec![(0, 1); 3]);
        assert_eq!(
            random_regular(100, 3, 42).unwrap().live_edge_multiset(),
            random_regular(100, 3, 42).unwrap().live_edge_multiset()
        );
        for seed in 0..100 {
            assert_eq!(random_regular(100, 3, seed).unwrap().regularity(), Some(3));
        }
        assert!(matches!(random_regular(5, 3, 0), Err(Error::InvalidParams(_))));
        assert_eq!(random_regular(1, 2, 0).err(), Some(Error::RetryExhausted(LOOP_RETRIES)));
    }
}
