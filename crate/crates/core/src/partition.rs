//! Integer partitions and the `z` statistic.
//!
//! A partition indexes both a permutation cycle type and a power-sum
//! monomial `p[λ1]*p[λ2]*...`. Parts are kept weakly decreasing. The
//! ordering on partitions (degree first, then the part lists compared
//! lexicographically) is the canonical term order used everywhere for
//! deterministic iteration and output.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A weakly decreasing sequence of positive integers, with its sum cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    degree: u32,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        let degree = parts.iter().sum();
        Partition { parts, degree }
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), degree: 0 }
    }

    pub fn single(part: u32) -> Self {
        Partition::new(vec![part])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of parts, usually written l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of a given part value.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Iterates `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Multiplicities<'_> {
        Multiplicities { parts: &self.parts, pos: 0 }
    }

    /// Multiset union of the parts of two partitions (μ ∪ ν).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition { degree: self.degree + other.degree, parts: merged }
    }

    /// The partition 2λ obtained by doubling every part.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
            degree: 2 * self.degree,
        }
    }

    /// The partition with every part multiplied by `k` (k ≥ 1).
    pub fn scaled(&self, k: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| k * p).collect(),
            degree: k * self.degree,
        }
    }

    /// Removes one part equal to `part`; returns None if absent.
    pub fn without_one(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts, degree: self.degree - part })
    }

    /// Appends one extra part, keeping parts sorted.
    pub fn with_part(&self, part: u32) -> Partition {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
        parts.insert(pos, part);
        Partition { parts, degree: self.degree + part }
    }

    /// The statistic z(λ) = Π_i i^{l_i} l_i! over part values i with
    /// multiplicity l_i; n!/z(λ) is the number of permutations of cycle
    /// type λ.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                acc *= part;
            }
            for m in 2..=mult {
                acc *= m;
            }
        }
        acc
    }
}

pub struct Multiplicities<'a> {
    parts: &'a [u32],
    pos: usize,
}

impl Iterator for Multiplicities<'_> {
    type Item = (u32, u32);

    fn next(&mut self) -> Option<(u32, u32)> {
        if self.pos >= self.parts.len() {
            return None;
        }
        let part = self.parts[self.pos];
        let start = self.pos;
        while self.pos < self.parts.len() && self.parts[self.pos] == part {
            self.pos += 1;
        }
        Some((part, (self.pos - start) as u32))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n` in canonical order. `partitions_of(0)` yields
/// exactly the empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    emit(n, n, &mut stack, &mut out);
    out
}

fn emit(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    // iterating the leading (largest) part upward yields ascending
    // lexicographic order on the part lists
    for part in 1..=remaining.min(max_part) {
        stack.push(part);
        emit(remaining - part, part, stack, out);
        stack.pop();
    }
}
