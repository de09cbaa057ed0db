//! One-sided equations `χ·a = b` and `a·χ = b`, and the finite sets of
//! elements above a given one in the natural order.

use crate::element::{IpfElement, Point};
use crate::error::{ensure_dim, Result};
use crate::perm::{vsub, Permutation};
use crate::universe::box_points;

/// All `ξ` with `a ≼ ξ`: same `σ` and translation gap, with domain
/// generator in `↓a.x`. Sorted by `(x, y)`.
pub fn up_set(a: &IpfElement) -> Result<Vec<IpfElement>> {
    let n = a.dim();
    let gap = a.translation_gap()?;
    let mut out = Vec::new();
    for x in box_points(&vec![1; n], a.x().coords()) {
        let y = vsub(&a.sigma().act_unchecked(&x), &gap)?;
        if y.iter().all(|&c| c >= 1) {
            out.push(IpfElement::from_raw(
                a.sigma().clone(),
                Point::new(x)?,
                Point::new(y)?,
            ));
        }
    }
    Ok(out)
}

/// `{χ : χ·a = b}`. Any solution satisfies `b·a⁻¹ = χ·(a·a⁻¹) ≼ χ`, so
/// the candidates are `up_set(b·a⁻¹)`.
pub fn solve_left(a: &IpfElement, b: &IpfElement) -> Result<Vec<IpfElement>> {
    ensure_dim(a.dim(), b.dim())?;
    let mut out = Vec::new();
    for chi in up_set(&b.compose(&a.inverse())?)? {
        if chi.compose(a)? == *b {
            out.push(chi);
        }
    }
    Ok(out)
}

/// `{χ : a·χ = b}`, with candidates `up_set(a⁻¹·b)`.
pub fn solve_right(a: &IpfElement, b: &IpfElement) -> Result<Vec<IpfElement>> {
    ensure_dim(a.dim(), b.dim())?;
    let mut out = Vec::new();
    for chi in up_set(&a.inverse().compose(b)?)? {
        if a.compose(&chi)? == *b {
            out.push(chi);
        }
    }
    Ok(out)
}

/// The total map `z ↦ z + k·𝟏`.
pub fn shift_element(n: usize, k: u32) -> IpfElement {
    IpfElement::from_raw(
        Permutation::identity(n),
        Point::ones(n),
        Point::new(vec![i64::from(k) + 1; n]).expect("positive"),
    )
}
