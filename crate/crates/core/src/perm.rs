//! Permutations in one-line notation, the pack operation, classical pattern
//! containment, quadrant counting and the marked-mesh-pattern statistic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` is legal.
///
/// Positions and values are 1-based at the interface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// Internal constructor for values known to form a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value at 1-based position `pos`.
    pub fn value_at(&self, pos: usize) -> Result<u32> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            });
        }
        Ok(self.values[pos - 1])
    }

    /// 1-based position of a value.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Direct 132 check: a violation is a pair `j < k` with some earlier value
    /// below `σ_k` and `σ_k < σ_j`.
    pub fn avoids_132(&self) -> bool {
        let v = &self.values;
        for k in 2..v.len() {
            let mut min_before = u32::MAX;
            for j in 0..k {
                if min_before < v[k] && v[k] < v[j] {
                    return false;
                }
                min_before = min_before.min(v[j]);
            }
        }
        true
    }

    /// Points of the graph strictly inside each quadrant centered at
    /// position `pos` (1-based).
    pub fn quadrant_counts(&self, pos: usize) -> Result<QuadrantCounts> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            });
        }
        let i = pos - 1;
        let vi = self.values[i];
        let mut q = QuadrantCounts::default();
        for (j, &vj) in self.values.iter().enumerate() {
            if j == i {
                continue;
            }
            match (j > i, vj > vi) {
                (true, true) => q.q1 += 1,
                (false, true) => q.q2 += 1,
                (false, false) => q.q3 += 1,
                (true, false) => q.q4 += 1,
            }
        }
        Ok(q)
    }

    /// Does position `pos` match the marked mesh pattern `p`?
    pub fn matches_at(&self, pos: usize, p: &MeshPattern) -> Result<bool> {
        let q = self.quadrant_counts(pos)?;
        Ok(q.q1 >= p.a && q.q2 >= p.b && q.q3 >= p.c && q.q4 >= p.d)
    }

    /// The statistic: number of positions matching `p`.
    pub fn mmp(&self, p: &MeshPattern) -> usize {
        (1..=self.len())
            .filter(|&pos| self.matches_at(pos, p).unwrap())
            .count()
    }

    /// Lengths of the maximal increasing runs.
    pub fn descent_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0usize;
        for (i, &v) in self.values.iter().enumerate() {
            run += 1;
            if i + 1 == self.values.len() || self.values[i + 1] < v {
                parts.push(run);
                run = 0;
            }
        }
        Composition { parts }
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `7,6,8,9,4,5,2,1,3` or the bare digit string `768945213`
    /// (the latter only for n ≤ 9).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                what: "permutation",
                input: s.to_string(),
            });
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| Error::Parse {
                        what: "permutation",
                        input: s.to_string(),
                    })
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).filter(|&d| d > 0).ok_or(Error::Parse {
                        what: "permutation",
                        input: s.to_string(),
                    })
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Quadrant thresholds of a simple marked mesh pattern `MMP(a, b, c, d)`.
/// A zero threshold imposes no condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeshPattern {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl MeshPattern {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        MeshPattern { a, b, c, d }
    }
}

impl fmt::Display for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "mesh pattern",
                    input: s.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        if parts.len() != 4 {
            return Err(Error::Parse {
                what: "mesh pattern",
                input: s.to_string(),
            });
        }
        Ok(MeshPattern::new(parts[0], parts[1], parts[2], parts[3]))
    }
}

/// Number of graph points strictly inside each open quadrant around a position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuadrantCounts {
    pub q1: usize,
    pub q2: usize,
    pub q3: usize,
    pub q4: usize,
}

/// A composition of `n`: positive parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Standardization: the i-th smallest entry of `w` is replaced by `i`.
pub fn pack<T: Ord + Copy>(w: &[T]) -> Result<Permutation> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| w[i]);
    for pair in idx.windows(2) {
        if w[pair[0]] == w[pair[1]] {
            return Err(Error::DuplicateEntries);
        }
    }
    let mut values = vec![0u32; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        values[i] = rank as u32 + 1;
    }
    Ok(Permutation::from_vec_unchecked(values))
}

/// Does the classical pattern `tau` occur in `sigma`?
///
/// Backtracking over index subsequences with order-isomorphism pruning.
/// Exponential in the worst case, which is fine at desk scale.
pub fn occurs(tau: &Permutation, sigma: &Permutation) -> bool {
    let t = tau.values();
    let s = sigma.values();
    if t.is_empty() {
        return true;
    }
    if t.len() > s.len() {
        return false;
    }
    fn search(t: &[u32], s: &[u32], chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == t.len() {
            return true;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for i in start..s.len() {
            if s.len() - i < t.len() - depth {
                break;
            }
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(d, &j)| (s[j] < s[i]) == (t[d] < t[depth]));
            if consistent {
                chosen.push(i);
                if search(t, s, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    search(t, s, &mut Vec::new())
}

pub fn avoids(tau: &Permutation, sigma: &Permutation) -> bool {
    !occurs(tau, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&[2, 7, 5, 4]).unwrap(), p("1432"));
        assert_eq!(pack(&[1, 2, 3]).unwrap(), p("123"));
        assert_eq!(pack(&[4, 1, 2]).unwrap(), p("312"));
        assert_eq!(pack::<u32>(&[]).unwrap(), Permutation::new(vec![]).unwrap());
        assert_eq!(pack(&[3, 3]).unwrap_err(), Error::DuplicateEntries);
    }

    #[test]
    fn pack_idempotent() {
        let w = [9u32, 2, 11, 5, 3];
        let once = pack(&w).unwrap();
        let twice = pack(once.values()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn occurs_examples() {
        assert!(!occurs(&p("132"), &p("768945213")));
        assert!(occurs(&p("1"), &p("321")));
        assert!(!occurs(&p("21"), &p("123")));
        assert!(occurs(&p("132"), &p("132")));
    }

    #[test]
    fn avoids_examples() {
        assert!(avoids(&p("132"), &p("768945213")));
        assert!(!avoids(&p("132"), &p("132")));
        let empty = Permutation::new(vec![]).unwrap();
        assert!(avoids(&p("132"), &empty));
    }

    #[test]
    fn quadrant_counts_examples() {
        let sigma = p("768945213");
        let q = sigma.quadrant_counts(6).unwrap();
        assert_eq!((q.q1, q.q2, q.q3, q.q4), (0, 4, 1, 3));
        let q = p("1").quadrant_counts(1).unwrap();
        assert_eq!((q.q1, q.q2, q.q3, q.q4), (0, 0, 0, 0));
        let q = sigma.quadrant_counts(1).unwrap();
        assert_eq!((q.q1, q.q2, q.q3, q.q4), (2, 0, 0, 6));
        assert!(sigma.quadrant_counts(0).is_err());
        assert!(sigma.quadrant_counts(10).is_err());
    }

    #[test]
    fn matches_examples() {
        let sigma = p("768945213");
        assert!(sigma.matches_at(6, &MeshPattern::new(0, 3, 1, 1)).unwrap());
        assert!(sigma.matches_at(3, &MeshPattern::new(0, 0, 0, 0)).unwrap());
        assert!(!sigma.matches_at(4, &MeshPattern::new(1, 0, 0, 0)).unwrap());
    }

    #[test]
    fn mmp_examples() {
        let sigma = p("768945213");
        assert_eq!(sigma.mmp(&MeshPattern::new(0, 1, 0, 0)), 6);
        assert_eq!(sigma.mmp(&MeshPattern::new(0, 0, 0, 0)), 9);
        assert_eq!(sigma.mmp(&MeshPattern::new(0, 0, 1, 0)), 4);
        let empty = Permutation::new(vec![]).unwrap();
        assert_eq!(empty.mmp(&MeshPattern::new(1, 2, 3, 4)), 0);
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(p("7123456").descent_composition().parts(), &[1, 6]);
        assert_eq!(p("123456").descent_composition().parts(), &[6]);
        assert_eq!(p("654123").descent_composition().parts(), &[1, 1, 1, 3]);
        let empty = Permutation::new(vec![]).unwrap();
        assert!(empty.descent_composition().parts().is_empty());
    }

    #[test]
    fn quadrants_partition_everything() {
        let sigma = p("768945213");
        for pos in 1..=9 {
            let q = sigma.quadrant_counts(pos).unwrap();
            assert_eq!(q.q1 + q.q2 + q.q3 + q.q4, 8);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("7,6,8,9,4,5,2,1,3"), p("768945213"));
        assert_eq!(p("768945213").to_string(), "768945213");
        let long = Permutation::identity(11);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("".parse::<Permutation>().is_err());
        assert!("120".parse::<Permutation>().is_err());
        assert!("1,1".parse::<Permutation>().is_err());
    }
}
