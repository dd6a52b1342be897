//! Difference operators over sequences and paired sequences.

use crate::aifs::{AifsElement, AifsPattern};
use crate::error::Error;

/// Consecutive differences with an implicit zero at the origin, so the
/// output has the same length as the input and telescopes back to it.
pub fn delta(values: &[f64]) -> Result<Vec<f64>, Error> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut prev = 0.0;
    Ok(values
        .iter()
        .map(|&v| {
            let d = v - prev;
            prev = v;
            d
        })
        .collect())
}

/// Second-order mixed difference of a double sequence at 1-based (m, n):
/// y(m,n) - y(m-1,n) - y(m,n-1) + y(m-1,n-1), where row 0 and column 0
/// are an implicit zero boundary.
pub fn divided_difference_grid(grid: &[Vec<f64>], m: usize, n: usize) -> Result<f64, Error> {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    let oob = || Error::GridIndex { m, n, rows, cols };
    if m == 0 || n == 0 {
        return Err(oob());
    }
    let at = |i: usize, j: usize| -> Option<f64> {
        if i == 0 || j == 0 {
            Some(0.0)
        } else {
            grid.get(i - 1)?.get(j - 1).copied()
        }
    };
    let y = at(m, n).ok_or_else(oob)?;
    let up = at(m - 1, n).ok_or_else(oob)?;
    let left = at(m, n - 1).ok_or_else(oob)?;
    let diag = at(m - 1, n - 1).ok_or_else(oob)?;
    Ok(y - up - left + diag)
}

/// Step-size operator on a consecutive element pair:
/// mu_k - mu_{k-1} + nu_{k-1} - nu_k.
pub fn novel_divided_difference(curr: AifsElement, prev: AifsElement) -> f64 {
    novel_divided_difference_raw(curr.pair(), prev.pair())
}

/// The same operator on raw (mu, nu) pairs, without element validation.
pub fn novel_divided_difference_raw(curr: (f64, f64), prev: (f64, f64)) -> f64 {
    curr.0 - prev.0 + prev.1 - curr.1
}

/// Which components of each pair feed the step-size operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Full,
    MembershipOnly,
    NonmembershipOnly,
}

/// Step sizes of a pattern against the implicit (0, 0) origin element.
pub fn novel_dd_sequence(pattern: &AifsPattern, projection: Projection) -> Vec<f64> {
    novel_dd_sequence_raw(&pattern.pairs(), projection)
}

/// Step sizes of a raw pair sequence against the (0, 0) origin.
pub fn novel_dd_sequence_raw(pairs: &[(f64, f64)], projection: Projection) -> Vec<f64> {
    let project = |(mu, nu): (f64, f64)| match projection {
        Projection::Full => (mu, nu),
        Projection::MembershipOnly => (mu, 0.0),
        Projection::NonmembershipOnly => (0.0, nu),
    };
    let mut prev = (0.0, 0.0);
    pairs
        .iter()
        .map(|&pair| {
            let curr = project(pair);
            let d = novel_divided_difference_raw(curr, prev);
            prev = curr;
            d
        })
        .collect()
}
