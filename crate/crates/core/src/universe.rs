//! Finite universes `E(n, M)`: every element of dimension `n` whose filter
//! generators have all coordinates in `1..=M`.

use crate::element::{IpfElement, Point};
use crate::perm::Permutation;

/// All points of the box `[lo, hi]` (inclusive, componentwise) in
/// lexicographic order.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// Points of `[1..M]ⁿ` in lexicographic order.
pub fn grid_points(n: usize, max: i64) -> Vec<Point> {
    box_points(&vec![1; n], &vec![max; n])
        .into_iter()
        .map(|v| Point::new(v).expect("box starts at 1"))
        .collect()
}

/// The universe `E(n, M)`, ordered by permutation, then `x`, then `y`.
pub fn universe(n: usize, max: i64) -> Vec<IpfElement> {
    let points = grid_points(n, max);
    let mut out = Vec::with_capacity(points.len() * points.len());
    for sigma in Permutation::all(n) {
        for x in &points {
            for y in &points {
                out.push(IpfElement::from_raw(sigma.clone(), x.clone(), y.clone()));
            }
        }
    }
    out
}

/// Idempotents of `E(n, M)`.
pub fn idempotents(n: usize, max: i64) -> Vec<IpfElement> {
    grid_points(n, max)
        .into_iter()
        .map(IpfElement::idempotent_on)
        .collect()
}
