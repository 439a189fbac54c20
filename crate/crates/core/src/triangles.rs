//! Catalan numbers, the Catalan (ballot) and Narayana triangles, the x = 0
//! specializations of the quadrant-II series, and exact rational-series
//! expansion. All arithmetic is exact in `u128`/`i128` with overflow detected.

use crate::error::{Error, Result};

fn checked_mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn checked_add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Binomial coefficient, exact at every intermediate step.
fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = checked_mul(acc, n - k + i)? / i;
    }
    Ok(acc)
}

/// The n-th Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> Result<u128> {
    let n = n as u128;
    Ok(binomial(2 * n, n)? / (n + 1))
}

/// Entry `C_{n,k}` of the Catalan triangle (ballot numbers), `1 ≤ k ≤ n`.
///
/// Computed as `binom(n+k-2, k-1) * (n-k+1) / n`: the closed form shifted to
/// match the triangle whose row `n` ends with `C_n` twice (A009766 read with
/// 1-based rows and columns).
pub fn catalan_triangle(n: usize, k: usize) -> Result<u128> {
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { pos: k, len: n });
    }
    let (n, k) = (n as u128, k as u128);
    let b = binomial(n + k - 2, k - 1)?;
    Ok(checked_mul(b, n - k + 1)? / n)
}

/// Narayana number `N(n, k) = binom(n, k-1) * binom(n, k) / n`, `1 ≤ k ≤ n`.
pub fn narayana(n: usize, k: usize) -> Result<u128> {
    if k == 0 || k > n {
        return Err(Error::PositionOutOfRange { pos: k, len: n });
    }
    let (n, k) = (n as u128, k as u128);
    Ok(checked_mul(binomial(n, k - 1)?, binomial(n, k)?)? / n)
}

/// `Q_{n,132}^{(0,k,0,0)}(0)` via the three-case recurrence:
/// 1 when `n = 1` or `k = 1`; previous row plus previous column when
/// `n ≥ k`; previous column alone when `n < k`.
pub fn q_zero_recurrence(n: usize, k: usize) -> Result<u128> {
    debug_assert!(n >= 1 && k >= 1);
    let mut table = vec![vec![0u128; k + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=k {
            table[i][j] = if i == 1 || j == 1 {
                1
            } else if i >= j {
                checked_add(table[i - 1][j], table[i][j - 1])?
            } else {
                table[i][j - 1]
            };
        }
    }
    Ok(table[n][k])
}

/// Same value as the sum of the first `k` entries of row `n` of the Catalan
/// triangle.
pub fn q_zero_partial_sum(n: usize, k: usize) -> Result<u128> {
    let mut sum = 0u128;
    for j in 1..=k.min(n) {
        sum = checked_add(sum, catalan_triangle(n, j)?)?;
    }
    Ok(sum)
}

/// Same value again, via the Catalan-convolution recurrence
/// `R_n^k = R_{n-1}^k + Σ_{i=1}^{k-1} C_{i-1} R_{n-i}^{k-i}` (terms with
/// `n - i < 1` vanish; `n = 1` and `k = 1` are the bases).
pub fn q_zero_convolution(n: usize, k: usize) -> Result<u128> {
    debug_assert!(n >= 1 && k >= 1);
    let mut table = vec![vec![0u128; k + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=k {
            table[i][j] = if i == 1 || j == 1 {
                1
            } else {
                let mut v = table[i - 1][j];
                for step in 1..j.min(i) {
                    let term = checked_mul(catalan_number(step - 1)?, table[i - step][j - step])?;
                    v = checked_add(v, term)?;
                }
                v
            };
        }
    }
    Ok(table[n][k])
}

/// Quotient of two integer polynomials in `t`, expandable as a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<i128>,
    denominator: Vec<i128>,
}

impl RationalSeries {
    /// Coefficient vectors are in increasing powers of `t`; the denominator
    /// must have a nonzero constant term.
    pub fn new(numerator: Vec<i128>, denominator: Vec<i128>) -> Result<Self> {
        if denominator.first().copied().unwrap_or(0) == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    /// `(1 - t)^power` as a denominator helper.
    pub fn one_minus_t_pow(power: usize) -> Vec<i128> {
        let mut den = vec![1i128];
        for _ in 0..power {
            // multiply by (1 - t)
            let mut next = vec![0i128; den.len() + 1];
            for (i, &c) in den.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            den = next;
        }
        den
    }
}

/// Exact power-series coefficients of `numerator / denominator` up to
/// `t^order` inclusive.
pub fn expand_series(rs: &RationalSeries, order: usize) -> Result<Vec<i128>> {
    let den0 = rs.denominator[0];
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let mut acc: i128 = rs.numerator.get(j).copied().unwrap_or(0);
        for i in 1..=j.min(rs.denominator.len() - 1) {
            let term = rs.denominator[i]
                .checked_mul(coeffs[j - i])
                .ok_or(Error::Overflow)?;
            acc = acc.checked_sub(term).ok_or(Error::Overflow)?;
        }
        if acc % den0 != 0 {
            return Err(Error::NonIntegerSeries);
        }
        coeffs.push(acc / den0);
    }
    Ok(coeffs)
}

/// The printed rational forms of `Q^{(0,k,0,0)}(t, 0)` for `k = 1..=4`.
pub fn q_zero_rational(k: usize) -> Option<RationalSeries> {
    let numerator: Vec<i128> = match k {
        1 => vec![1],
        2 => vec![1, -1, 1],
        3 => vec![1, -2, 2, 1, -1],
        4 => vec![1, -3, 4, -1, 3, -5, 2],
        _ => return None,
    };
    Some(
        RationalSeries::new(numerator, RationalSeries::one_minus_t_pow(k))
            .expect("constant term 1"),
    )
}

/// Rows `1..=max_n` of the Catalan triangle.
pub fn catalan_triangle_rows(max_n: usize) -> Result<Vec<Vec<u128>>> {
    (1..=max_n)
        .map(|n| (1..=n).map(|k| catalan_triangle(n, k)).collect())
        .collect()
}

/// Rows `1..=max_n` of the Narayana triangle.
pub fn narayana_rows(max_n: usize) -> Result<Vec<Vec<u128>>> {
    (1..=max_n)
        .map(|n| (1..=n).map(|k| narayana(n, k)).collect())
        .collect()
}

/// The `max_n × max_k` grid of x = 0 specializations.
pub fn q_zero_rows(max_n: usize, max_k: usize) -> Result<Vec<Vec<u128>>> {
    (1..=max_n)
        .map(|n| (1..=max_k).map(|k| q_zero_recurrence(n, k)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let expected: [u128; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan_number(n).unwrap(), c);
        }
        assert_eq!(catalan_number(8).unwrap(), 1430);
        assert_eq!(catalan_number(30).unwrap(), 3814986502092304);
    }

    #[test]
    fn catalan_triangle_examples() {
        assert_eq!(catalan_triangle(5, 3).unwrap(), 9);
        for n in 1..=8 {
            assert_eq!(catalan_triangle(n, 1).unwrap(), 1);
        }
        assert_eq!(catalan_triangle(8, 8).unwrap(), 429);
        assert!(catalan_triangle(3, 4).is_err());
        assert!(catalan_triangle(3, 0).is_err());
    }

    #[test]
    fn catalan_triangle_recurrence() {
        for n in 2..=12 {
            for k in 2..n {
                assert_eq!(
                    catalan_triangle(n, k).unwrap(),
                    catalan_triangle(n, k - 1).unwrap() + catalan_triangle(n - 1, k).unwrap()
                );
            }
            assert_eq!(
                catalan_triangle(n, n).unwrap(),
                catalan_triangle(n, n - 1).unwrap()
            );
            // the diagonal repeats the previous Catalan number: row n ends
            // with C_{n-1} twice
            assert_eq!(
                catalan_triangle(n, n).unwrap(),
                catalan_number(n - 1).unwrap()
            );
        }
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana(8, 4).unwrap(), 490);
        assert_eq!(narayana(7, 4).unwrap(), 175);
        for n in 1..=8 {
            assert_eq!(narayana(n, 1).unwrap(), 1);
        }
    }

    #[test]
    fn narayana_symmetry_and_row_sums() {
        for n in 1..=12 {
            let mut sum = 0u128;
            for k in 1..=n {
                assert_eq!(narayana(n, k).unwrap(), narayana(n, n + 1 - k).unwrap());
                sum += narayana(n, k).unwrap();
            }
            assert_eq!(sum, catalan_number(n).unwrap());
        }
    }

    #[test]
    fn q_zero_examples() {
        assert_eq!(q_zero_recurrence(8, 3).unwrap(), 35);
        assert_eq!(q_zero_recurrence(1, 7).unwrap(), 1);
        assert_eq!(q_zero_recurrence(3, 7).unwrap(), 5);
        assert_eq!(q_zero_partial_sum(8, 3).unwrap(), 35);
        assert_eq!(q_zero_partial_sum(5, 4).unwrap(), 28);
        assert_eq!(q_zero_convolution(8, 3).unwrap(), 35);
        assert_eq!(q_zero_convolution(5, 2).unwrap(), 5);
        for n in 1..=10 {
            assert_eq!(q_zero_convolution(n, n).unwrap(), catalan_number(n).unwrap());
        }
    }

    #[test]
    fn q_zero_triple_agreement() {
        for n in 1..=10 {
            for k in 1..=10 {
                let a = q_zero_recurrence(n, k).unwrap();
                let b = q_zero_partial_sum(n, k).unwrap();
                let c = q_zero_convolution(n, k).unwrap();
                assert_eq!(a, b, "recurrence vs partial sum at ({n},{k})");
                assert_eq!(a, c, "recurrence vs convolution at ({n},{k})");
            }
        }
    }

    #[test]
    fn expand_series_examples() {
        let geometric = RationalSeries::new(vec![1], vec![1, -1]).unwrap();
        assert_eq!(expand_series(&geometric, 5).unwrap(), vec![1, 1, 1, 1, 1, 1]);

        let k2 = q_zero_rational(2).unwrap();
        assert_eq!(
            expand_series(&k2, 8).unwrap(),
            vec![1, 1, 2, 3, 4, 5, 6, 7, 8]
        );

        let zero = RationalSeries::new(vec![], vec![1]).unwrap();
        assert_eq!(expand_series(&zero, 4).unwrap(), vec![0; 5]);

        assert!(RationalSeries::new(vec![1], vec![0, 1]).is_err());
    }

    #[test]
    fn rational_forms_match_q_zero_table() {
        for k in 1..=4 {
            let rs = q_zero_rational(k).unwrap();
            let coeffs = expand_series(&rs, 8).unwrap();
            assert_eq!(coeffs[0], 1, "constant term of k = {k}");
            for (n, &c) in coeffs.iter().enumerate().skip(1) {
                assert_eq!(
                    c as u128,
                    q_zero_recurrence(n, k).unwrap(),
                    "k = {k}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(catalan_number(200).unwrap_err(), Error::Overflow);
    }
}
