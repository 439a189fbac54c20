//! Enumeration of 132-avoiding permutations and the exact distribution
//! polynomials of the mmp statistic over them.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{avoids, MeshPattern, Permutation};

/// Coefficient vector of the distribution of `mmp(pattern)` over `S_n(132)`:
/// `coeffs[k]` permutations attain statistic value `k`. Trailing zeros are
/// trimmed; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatPolynomial {
    pub n: usize,
    pub pattern: MeshPattern,
    coeffs: Vec<u128>,
}

impl StatPolynomial {
    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn sum(&self) -> u128 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for StatPolynomial {
    /// Renders as `8 + 4x + 2x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (k, c) {
                (0, _) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{c}x"),
                (_, 1) => format!("x^{k}"),
                (_, _) => format!("{c}x^{k}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// All of `S_n(132)` in lexicographic order.
///
/// Generation follows the tree decomposition: the maximum splits a
/// 132-avoider into a prefix over the top remaining values and an arbitrary
/// smaller avoider, so the work is Catalan-sized rather than factorial.
pub fn avoiders_132(n: usize) -> Vec<Permutation> {
    let mut memo: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
    for m in 1..=n {
        let mut words = Vec::new();
        for left in 0..m {
            let right = m - 1 - left;
            let shift = (m - 1 - left) as u32;
            for li in 0..memo[left].len() {
                for ri in 0..memo[right].len() {
                    let mut w = Vec::with_capacity(m);
                    w.extend(memo[left][li].iter().map(|&v| v + shift));
                    w.push(m as u32);
                    w.extend_from_slice(&memo[right][ri]);
                    words.push(w);
                }
            }
        }
        memo.push(words);
    }
    let mut out: Vec<Permutation> = memo
        .pop()
        .expect("built up to n")
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect();
    out.sort();
    out
}

/// Generic avoider enumeration by filtering all of `S_n`; intended only for
/// cross-checking the fast 132 generator at small `n`.
pub fn enumerate_avoiders(n: usize, tau: &Permutation) -> Vec<Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
        .filter(|sigma| avoids(tau, sigma))
        .collect()
}

/// The polynomial `Q_{n,132}^{(a,b,c,d)}(x)` as an exact coefficient vector.
pub fn q_polynomial(n: usize, pattern: MeshPattern) -> StatPolynomial {
    let mut coeffs = vec![0u128; n + 1];
    for sigma in avoiders_132(n) {
        coeffs[sigma.mmp(&pattern)] += 1;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    StatPolynomial { n, pattern, coeffs }
}

/// Which single quadrant carries the threshold `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    I,
    II,
    III,
}

impl Quadrant {
    pub fn pattern(self, ell: usize) -> MeshPattern {
        match self {
            Quadrant::I => MeshPattern::new(ell, 0, 0, 0),
            Quadrant::II => MeshPattern::new(0, ell, 0, 0),
            Quadrant::III => MeshPattern::new(0, 0, ell, 0),
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
        })
    }
}

impl FromStr for Quadrant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Quadrant::I),
            "II" | "2" => Ok(Quadrant::II),
            "III" | "3" => Ok(Quadrant::III),
            _ => Err(Error::Parse {
                what: "quadrant",
                input: s.to_string(),
            }),
        }
    }
}

/// Coefficient rows of `Q^{(pattern)}|_{t^n x^k}` for `n = 1..=max_n`.
///
/// The table starts at `n = 1`; the constant term 1 of the generating series
/// (the empty permutation) is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub quadrant: Quadrant,
    pub ell: usize,
    rows: Vec<Vec<u128>>,
}

impl DistributionTable {
    /// Row for a given `n` (1-based).
    pub fn row(&self, n: usize) -> &[u128] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<u128>] {
        &self.rows
    }
}

pub fn distribution_table(quadrant: Quadrant, ell: usize, max_n: usize) -> DistributionTable {
    let rows = (1..=max_n)
        .map(|n| q_polynomial(n, quadrant.pattern(ell)).coeffs.clone())
        .collect();
    DistributionTable {
        quadrant,
        ell,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::catalan_number;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn avoiders_small() {
        assert_eq!(avoiders_132(0), vec![Permutation::new(vec![]).unwrap()]);
        let expected: Vec<Permutation> = ["123", "213", "231", "312", "321"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(avoiders_132(3), expected);
    }

    #[test]
    fn avoiders_match_generic_filter() {
        let tau = p("132");
        for n in 0..=7 {
            let fast = avoiders_132(n);
            let slow = enumerate_avoiders(n, &tau);
            assert_eq!(fast, slow, "n = {n}");
            assert_eq!(fast.len() as u128, catalan_number(n).unwrap());
        }
    }

    #[test]
    fn enumerate_avoiders_of_trivial_pattern() {
        assert!(enumerate_avoiders(3, &p("1")).is_empty());
        assert_eq!(enumerate_avoiders(4, &p("132")).len(), 14);
    }

    #[test]
    fn q_polynomial_paper_examples() {
        assert_eq!(
            q_polynomial(4, MeshPattern::new(2, 0, 0, 0)).coeffs(),
            &[8, 4, 2]
        );
        assert_eq!(
            q_polynomial(4, MeshPattern::new(0, 2, 0, 0)).coeffs(),
            &[4, 6, 4]
        );
        assert_eq!(
            q_polynomial(4, MeshPattern::new(0, 0, 2, 0)).coeffs(),
            &[5, 7, 2]
        );
    }

    #[test]
    fn q_polynomial_trivial_pattern_masses_at_n() {
        for n in 1..=6 {
            let q = q_polynomial(n, MeshPattern::new(0, 0, 0, 0));
            let mut expected = vec![0u128; n + 1];
            expected[n] = catalan_number(n).unwrap();
            assert_eq!(q.coeffs(), &expected[..]);
        }
    }

    #[test]
    fn row_sums_are_catalan() {
        for n in 1..=8 {
            for pat in [
                MeshPattern::new(1, 0, 0, 0),
                MeshPattern::new(0, 2, 0, 0),
                MeshPattern::new(0, 0, 3, 0),
                MeshPattern::new(1, 1, 1, 1),
            ] {
                assert_eq!(q_polynomial(n, pat).sum(), catalan_number(n).unwrap());
            }
        }
    }

    #[test]
    fn quadrant_iv_mirrors_quadrant_ii() {
        for n in 1..=7 {
            for k in 1..=4 {
                assert_eq!(
                    q_polynomial(n, MeshPattern::new(0, 0, 0, k)).coeffs(),
                    q_polynomial(n, MeshPattern::new(0, k, 0, 0)).coeffs(),
                );
            }
        }
    }

    #[test]
    fn table_rows_paper_examples() {
        let t = distribution_table(Quadrant::I, 2, 5);
        assert_eq!(t.row(5), &[16, 12, 9, 5]);
        let t = distribution_table(Quadrant::II, 2, 5);
        assert_eq!(t.row(5), &[5, 12, 15, 10]);
        let t = distribution_table(Quadrant::III, 1, 5);
        assert_eq!(t.row(5), &[1, 10, 20, 10, 1]);
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(
            q_polynomial(4, MeshPattern::new(2, 0, 0, 0)).to_string(),
            "8 + 4x + 2x^2"
        );
        assert_eq!(
            q_polynomial(1, MeshPattern::new(0, 0, 0, 0)).to_string(),
            "x"
        );
        assert_eq!(
            q_polynomial(5, MeshPattern::new(0, 0, 1, 0)).to_string(),
            "1 + 10x + 20x^2 + 10x^3 + x^4"
        );
    }
}
