//! The root system A₅ in ε-coordinates and weight arithmetic.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Rank of the ambient lattice Z⁶ = span{ε₁, …, ε₆}.
pub const N: usize = 6;

/// Integer vector in Z⁶, the coefficients of ε₁ … ε₆.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub [i32; N]);

impl Weight {
    pub const ZERO: Weight = Weight([0; N]);

    /// ε_i, zero-based index.
    pub fn eps(i: usize) -> Weight {
        let mut w = [0; N];
        w[i] = 1;
        Weight(w)
    }

    /// The root ε_i − ε_j (zero-based indices).
    pub fn root(i: usize, j: usize) -> Weight {
        Weight::eps(i) - Weight::eps(j)
    }

    /// Simple root α_k = ε_k − ε_{k+1}, k = 1..5.
    pub fn simple_root(k: usize) -> Weight {
        Weight::root(k - 1, k)
    }

    pub fn coords(&self) -> &[i32; N] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.as_root().is_some()
    }

    /// (i, j) with self = ε_i − ε_j, zero-based, if self is a root.
    pub fn as_root(&self) -> Option<(usize, usize)> {
        let mut plus = None;
        let mut minus = None;
        for (k, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if plus.is_none() => plus = Some(k),
                -1 if minus.is_none() => minus = Some(k),
                _ => return None,
            }
        }
        plus.zip(minus)
    }

    pub fn coord_sum(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Sum of the positive coordinates.
    pub fn positive_part(&self) -> i32 {
        self.0.iter().filter(|&&c| c > 0).sum()
    }

    pub fn permuted(&self, perm: &[usize; N]) -> Weight {
        let mut w = [0; N];
        for (i, &p) in perm.iter().enumerate() {
            w[p] = self.0[i];
        }
        Weight(w)
    }

    pub fn is_h2_weight(&self) -> bool {
        self.0.iter().filter(|&&c| c == 1).count() == 3
            && self.0.iter().filter(|&&c| c == -1).count() == 3
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.map(|c| -c))
    }
}

impl Mul<Weight> for i32 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight(rhs.0.map(|c| self * c))
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `1,1,1,-1,-1,-1`, optionally wrapped in brackets.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let coords: Vec<i32> = inner
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Parse(format!("invalid weight {s:?}")))?;
        let arr: [i32; N] = coords
            .try_into()
            .map_err(|_| Error::Parse(format!("weight {s:?} must have 6 coordinates")))?;
        Ok(Weight(arr))
    }
}

/// The 30 roots ε_i − ε_j, i ≠ j, ordered by (i, j).
pub fn roots() -> Vec<Weight> {
    let mut r = Vec::with_capacity(30);
    for i in 0..N {
        for j in 0..N {
            if i != j {
                r.push(Weight::root(i, j));
            }
        }
    }
    r
}

/// All multisets of `k` roots summing to `mu` with at least
/// `distinct_at_least` pairwise distinct members. Each multiset is sorted
/// by position in [`roots`].
pub fn decompositions(mu: Weight, k: usize, distinct_at_least: usize) -> Vec<Vec<Weight>> {
    let all = roots();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    fn rec(
        all: &[Weight],
        start: usize,
        remaining: Weight,
        left: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            if remaining == Weight::ZERO {
                out.push(stack.clone());
            }
            return;
        }
        // each root lowers the positive part by at most one
        if remaining.positive_part() > left as i32 {
            return;
        }
        for idx in start..all.len() {
            stack.push(idx);
            rec(all, idx, remaining - all[idx], left - 1, stack, out);
            stack.pop();
        }
    }
    if mu.coord_sum() != 0 || k == 0 {
        return out;
    }
    let mut raw = Vec::new();
    rec(&all, 0, mu, k, &mut stack, &mut raw);
    for ms in raw {
        let distinct = ms.iter().collect::<BTreeSet<_>>().len();
        if distinct >= distinct_at_least {
            out.push(ms.into_iter().map(|i| all[i]).collect());
        }
    }
    out
}

/// All permutations of {0, …, 5} in lexicographic order.
pub fn permutations() -> Vec<[usize; N]> {
    let mut out = Vec::with_capacity(720);
    let mut cur = [0usize; N];
    let mut used = [false; N];
    fn rec(pos: usize, cur: &mut [usize; N], used: &mut [bool; N], out: &mut Vec<[usize; N]>) {
        if pos == N {
            out.push(*cur);
            return;
        }
        for v in 0..N {
            if !used[v] {
                used[v] = true;
                cur[pos] = v;
                rec(pos + 1, cur, used, out);
                used[v] = false;
            }
        }
    }
    rec(0, &mut cur, &mut used, &mut out);
    out
}

/// Orbit of `mu` under the Weyl group S₆ permuting ε-coordinates.
pub fn weyl_orbit(mu: Weight) -> BTreeSet<Weight> {
    permutations().iter().map(|p| mu.permuted(p)).collect()
}

/// The 20 weights with three +1 and three −1 coordinates, ordered
/// lexicographically by the index triple carrying +1.
pub fn h2_weights() -> Vec<Weight> {
    triples()
        .into_iter()
        .map(|t| weight_of_triple(&t))
        .collect()
}

/// Increasing triples (i, j, k) of zero-based indices, lexicographic.
pub fn triples() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(20);
    for i in 0..N {
        for j in i + 1..N {
            for k in j + 1..N {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Σ_{i∈T} ε_i − Σ_{j∉T} ε_j.
pub fn weight_of_triple(t: &[usize; 3]) -> Weight {
    let mut w = [-1; N];
    for &i in t {
        w[i] = 1;
    }
    Weight(w)
}

/// Inverse of [`weight_of_triple`].
pub fn triple_of_weight(mu: &Weight) -> Option<[usize; 3]> {
    if !mu.is_h2_weight() {
        return None;
    }
    let plus: Vec<usize> = (0..N).filter(|&i| mu.0[i] == 1).collect();
    Some([plus[0], plus[1], plus[2]])
}
