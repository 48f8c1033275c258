#![allow(dead_code)]

use std::collections::BTreeSet;

use irregular_core::generators::random_regular;
use irregular_core::Multigraph;

pub fn is_connected(g: &Multigraph) -> bool {
    let verts: Vec<usize> = g.vertices().collect();
    let Some(&start) = verts.first() else { return true };
    let mut seen = vec![false; g.vertex_bound()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &e in g.incident(v) {
            let w = g.edge(e).other(v);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == verts.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut es: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                .collect();
            es.sort_unstable();
            es
        })
        .min()
        .unwrap_or_default()
        .into_iter()
        .take(n * 3)
        .collect()
}

/// Every connected loop-free cubic multigraph on `n` vertices, one per
/// isomorphism class. Practical for `n ≤ 6`.
pub fn connected_cubic(n: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    let mut rest = vec![3usize; n];
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        pairs: &[(usize, usize)],
        rest: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        found: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if rest.iter().all(|&r| r == 0) {
            found.push(chosen.clone());
            return;
        }
        if i == pairs.len() {
            return;
        }
        let (a, b) = pairs[i];
        // Vertex a gets no further pairs after the last one starting at a.
        let last_for_a = pairs[i + 1..].iter().all(|&(x, y)| x != a && y != a);
        let max = rest[a].min(rest[b]);
        for k in 0..=max {
            if last_for_a && rest[a] != k {
                continue;
            }
            rest[a] -= k;
            rest[b] -= k;
            for _ in 0..k {
                chosen.push((a, b));
            }
            rec(i + 1, pairs, rest, chosen, found);
            for _ in 0..k {
                chosen.pop();
            }
            rest[a] += k;
            rest[b] += k;
        }
    }
    let mut found = Vec::new();
    rec(0, &pairs, &mut rest, &mut chosen, &mut found);
    let mut out = Vec::new();
    for edges in found {
        let g = Multigraph::build(n, &edges).unwrap();
        if !is_connected(&g) {
            continue;
        }
        if classes.insert(canonical(n, &edges, &perms)) {
            out.push(g);
        }
    }
    out
}

/// Connected random cubic multigraphs on `n` vertices, `count` of them.
pub fn sampled_connected_cubic(n: usize, count: usize, seed0: u64) -> Vec<Multigraph> {
    let mut out = Vec::new();
    let mut seed = seed0;
    while out.len() < count {
        let g = random_regular(n, 3, seed).unwrap();
        seed += 1;
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}
