//! Jones polynomial by the Kauffman-bracket state sum.
//!
//! Only circle counts of resolutions are shared with the chain-complex
//! pipeline; no signs, edge maps or linear algebra are involved, so agreement
//! with the graded Euler characteristic of the homology is a real check.

use rayon::prelude::*;

use crate::cube::{Resolver, State};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::homology::GradedDims;
use crate::poly::LaurentPolynomial;

pub fn state_sum_jones(d: &LinkDiagram) -> Result<LaurentPolynomial> {
    state_sum_jones_with_cap(d, crate::DEFAULT_CROSSING_CAP)
}

/// Unnormalized Jones polynomial (unknot = `q + q^-1`):
/// `sum over states s of (-1)^(|s| - n_-) q^(|s| + n_+ - 2 n_-) (q + q^-1)^c(s)`.
pub fn state_sum_jones_with_cap(d: &LinkDiagram, cap: usize) -> Result<LaurentPolynomial> {
    let n = d.crossing_count();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    let res = Resolver::new(d);
    let (n_plus, n_minus) = (d.n_plus() as i32, d.n_minus() as i32);

    // coefficient table indexed by (weight, circles), then expanded once
    // a connected projection with k crossings smooths to at most k + 1 circles
    let max_circles = n + d.component_count() + 1;
    let counts = (0..1u32 << n)
        .into_par_iter()
        .map(|bits| {
            let s = State::new(bits, n);
            res.smoothing(s).map(|sm| (s.weight(), sm.circle_count()))
        })
        .try_fold(
            || vec![vec![0i64; max_circles + 1]; n + 1],
            |mut acc, r| {
                let (w, c) = r?;
                acc[w][c] += 1;
                Ok::<_, Error>(acc)
            },
        )
        .try_reduce(
            || vec![vec![0i64; max_circles + 1]; n + 1],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                Ok(a)
            },
        )?;

    let circle = LaurentPolynomial::circle();
    let mut total = LaurentPolynomial::zero();
    for (w, row) in counts.iter().enumerate() {
        let w = w as i32;
        let sign = if (w - n_minus).rem_euclid(2) == 0 { 1 } else { -1 };
        for (c, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = LaurentPolynomial::monomial(sign * count, w + n_plus - 2 * n_minus);
            total = total + &term * &circle.pow(c as u32);
        }
    }
    Ok(total)
}

/// `sum over (i, j) of (-1)^i q^j dim(i, j)`.
pub fn euler_characteristic(g: &GradedDims) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(g.iter().map(|((i, j), d)| {
        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        (j, sign * d as i64)
    }))
}
