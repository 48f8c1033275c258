//! Degree profiles and the scaled a- and b-vectors of a spanning subgraph.
//!
//! With `d` the regular degree and `n` the vertex count, the stored values
//! are `ã_i = (d+1)·m(H,i) − n` and `b̃_i = ã_0 + … + ã_{i−1}` for
//! `i = 1..=d`. Both are the real quantities multiplied by `d + 1`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, SpanningSubgraph};
use crate::scalar::Scalar;

pub type AVector = ScaledAVector<i64>;
pub type BVector = ScaledBVector<i64>;

/// `ã_0..=ã_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledAVector<T: Scalar = i64> {
    pub d: usize,
    pub n: usize,
    pub entries: Vec<T>,
}

/// `b̃_1..=b̃_d`, stored at offsets `0..d`. `b̃_0 = b̃_{d+1} = 0` implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledBVector<T: Scalar = i64> {
    pub entries: Vec<T>,
}

/// The magnitudes `|b̃_i|` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortedC<T: Scalar = i64> {
    pub magnitudes: Vec<T>,
}

/// Outcome of comparing two b-vectors in the improvement order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Improvement {
    /// The L1 norm dropped.
    TypeA,
    /// Same L1 norm, lexicographically larger sorted magnitudes.
    TypeB,
    NotImprovement,
}

fn cast<T: Scalar>(x: usize) -> Result<T> {
    T::from_count(x).ok_or_else(|| Error::PreconditionViolated(format!("{x} overflows the scalar type")))
}

impl<T: Scalar> ScaledAVector<T> {
    /// Builds `ã` from the class counts `m(H,0..=d)`.
    pub fn from_profile(counts: &[usize]) -> Result<Self> {
        let d = counts.len().checked_sub(1).ok_or(Error::DimensionMismatch(0, 1))?;
        let n: usize = counts.iter().sum();
        let scale: T = cast(d + 1)?;
        let nn: T = cast(n)?;
        let entries = counts
            .iter()
            .map(|&m| Ok(scale * cast::<T>(m)? - nn))
            .collect::<Result<Vec<T>>>()?;
        Ok(ScaledAVector { d, n, entries })
    }

    /// The scale factor `d + 1`.
    pub fn scale(&self) -> T {
        T::from_count(self.d + 1).expect("scale fits")
    }

    /// `m(H,i)` recovered from `ã_i`.
    pub fn counts(&self) -> Vec<usize> {
        let scale = self.scale();
        let n = T::from_count(self.n).expect("n fits");
        self.entries
            .iter()
            .map(|&a| ((a + n) / scale).to_i64_checked().expect("count fits") as usize)
            .collect()
    }

    /// `max_i |ã_i|`.
    pub fn max_abs(&self) -> T {
        self.entries.iter().map(|a| a.abs()).max().unwrap_or_else(T::zero)
    }

    /// Prefix sums giving `b̃`.
    pub fn to_b(&self) -> ScaledBVector<T> {
        let mut acc = T::zero();
        let entries = self.entries[..self.d]
            .iter()
            .map(|&a| {
                acc = acc + a;
                acc
            })
            .collect();
        ScaledBVector { entries }
    }
}

impl<T: Scalar> ScaledBVector<T> {
    /// `d`.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `b̃_i` for any integer `i`, zero outside `1..=d`.
    #[inline]
    pub fn at(&self, i: i64) -> T {
        if i >= 1 && (i as usize) <= self.entries.len() {
            self.entries[i as usize - 1]
        } else {
            T::zero()
        }
    }

    /// Adds `delta` to `b̃_i`, `1 <= i <= d`.
    #[inline]
    pub fn bump(&mut self, i: usize, delta: T) {
        self.entries[i - 1] = self.entries[i - 1] + delta;
    }

    pub fn max_abs(&self) -> T {
        self.entries.iter().map(|b| b.abs()).max().unwrap_or_else(T::zero)
    }

    /// `Σ |b̃_i|`.
    pub fn l1(&self) -> T {
        self.entries.iter().fold(T::zero(), |s, b| s + b.abs())
    }

    pub fn sorted_c(&self) -> SortedC<T> {
        let mut magnitudes: Vec<T> = self.entries.iter().map(|b| b.abs()).collect();
        magnitudes.sort_unstable();
        SortedC { magnitudes }
    }

    /// Consecutive differences giving `ã`, for a host with `n` vertices.
    pub fn to_a(&self, n: usize) -> ScaledAVector<T> {
        let d = self.dim();
        let entries = (0..=d as i64).map(|i| self.at(i + 1) - self.at(i)).collect();
        ScaledAVector { d, n, entries }
    }

    /// Entry-wise `after − self`.
    pub fn delta_to(&self, after: &ScaledBVector<T>) -> Vec<T> {
        self.entries.iter().zip(&after.entries).map(|(&x, &y)| y - x).collect()
    }
}

/// `m(H,k)` for `k = 0..=d`.
pub fn degree_profile(g: &Multigraph, h: &SpanningSubgraph) -> Result<Vec<usize>> {
    let d = g.regularity().ok_or(Error::NotRegular)?;
    let mut counts = vec![0usize; d + 1];
    for v in g.vertices() {
        counts[h.degree(g, v)] += 1;
    }
    Ok(counts)
}

pub fn a_scaled<T: Scalar>(g: &Multigraph, h: &SpanningSubgraph) -> Result<ScaledAVector<T>> {
    ScaledAVector::from_profile(&degree_profile(g, h)?)
}

pub fn b_scaled<T: Scalar>(g: &Multigraph, h: &SpanningSubgraph) -> Result<ScaledBVector<T>> {
    Ok(a_scaled::<T>(g, h)?.to_b())
}

/// Classifies `after` against `before` in the improvement order.
pub fn is_improvement<T: Scalar>(
    before: &ScaledBVector<T>,
    after: &ScaledBVector<T>,
) -> Result<Improvement> {
    if before.dim() != after.dim() {
        return Err(Error::DimensionMismatch(before.dim(), after.dim()));
    }
    Ok(match after.l1().cmp(&before.l1()) {
        Ordering::Less => Improvement::TypeA,
        Ordering::Greater => Improvement::NotImprovement,
        Ordering::Equal if before.sorted_c() < after.sorted_c() => Improvement::TypeB,
        Ordering::Equal => Improvement::NotImprovement,
    })
}

/// The vectors of `G \ H` given those of `H`.
pub fn complement_vectors<T: Scalar>(
    a: &ScaledAVector<T>,
    b: &ScaledBVector<T>,
) -> (ScaledAVector<T>, ScaledBVector<T>) {
    let mut ra = a.entries.clone();
    ra.reverse();
    let rb = b.entries.iter().rev().map(|&x| -x).collect();
    (ScaledAVector { d: a.d, n: a.n, entries: ra }, ScaledBVector { entries: rb })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(x: &[i64]) -> ScaledBVector {
        ScaledBVector { entries: x.to_vec() }
    }

    #[test]
    fn profiles_of_small_hosts() {
        let k23 = Multigraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let h = SpanningSubgraph::from_edges(&k23, &[0]).unwrap();
        assert_eq!(degree_profile(&k23, &h).unwrap(), vec![0, 2, 0, 0]);
        let a = a_scaled::<i64>(&k23, &h).unwrap();
        assert_eq!(a.entries, vec![-2, 6, -2, -2]);
        assert_eq!(a.to_b().entries, vec![-2, 4, 2]);
        assert_eq!(
            degree_profile(&k23, &SpanningSubgraph::full(&k23)).unwrap(),
            vec![0, 0, 0, 2]
        );

        let c4 = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = SpanningSubgraph::from_edges(&c4, &[0]).unwrap();
        assert_eq!(degree_profile(&c4, &h).unwrap(), vec![2, 2, 0]);
        assert_eq!(a_scaled::<i32>(&c4, &h).unwrap().entries, vec![2, 2, -4]);
        assert_eq!(b_scaled::<i128>(&c4, &h).unwrap().entries, vec![2, 4]);
    }

    #[test]
    fn empty_subgraph_vectors() {
        let c6 = Multigraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let h = SpanningSubgraph::empty(&c6);
        assert_eq!(a_scaled::<i64>(&c6, &h).unwrap().entries, vec![12, -6, -6]);
        assert_eq!(b_scaled::<i64>(&c6, &h).unwrap().entries, vec![12, 6]);
    }

    #[test]
    fn profile_requires_regular_host() {
        let p3 = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let h = SpanningSubgraph::empty(&p3);
        assert_eq!(degree_profile(&p3, &h), Err(Error::NotRegular));
    }

    #[test]
    fn improvement_order() {
        assert_eq!(is_improvement(&bv(&[-2, 4, 2]), &bv(&[-2, 2, 2])), Ok(Improvement::TypeA));
        assert_eq!(is_improvement(&bv(&[0, 4, -4]), &bv(&[2, -2, -4])), Ok(Improvement::TypeB));
        assert_eq!(is_improvement(&bv(&[1, 2]), &bv(&[1, 2])), Ok(Improvement::NotImprovement));
        assert_eq!(is_improvement(&bv(&[1, 2]), &bv(&[1])), Err(Error::DimensionMismatch(2, 1)));
    }

    #[test]
    fn complement_examples() {
        let a = ScaledAVector { d: 3, n: 2, entries: vec![-2i64, 6, -2, -2] };
        let (ca, cb) = complement_vectors(&a, &a.to_b());
        assert_eq!(ca.entries, vec![-2, -2, 6, -2]);
        assert_eq!(cb.entries, vec![-2, -4, 2]);
        let (aa, bb) = complement_vectors(&ca, &cb);
        assert_eq!((aa, bb), (a.clone(), a.to_b()));

        let pal = ScaledAVector { d: 2, n: 3, entries: vec![1i64, -2, 1] };
        let (pa, pb) = complement_vectors(&pal, &pal.to_b());
        assert_eq!(pa, pal);
        assert_eq!(pb, pal.to_b());
    }

    #[test]
    fn a_b_roundtrip() {
        let a = ScaledAVector { d: 3, n: 2, entries: vec![-2i64, 6, -2, -2] };
        assert_eq!(a.to_b().to_a(2), a);
        assert_eq!(a.counts(), vec![0, 2, 0, 0]);
    }
}
