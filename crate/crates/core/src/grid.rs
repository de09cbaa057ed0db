//! Brute-force oracle: elements as explicit partial injective maps on the
//! box `[1..B]ⁿ`.
//!
//! Nothing here uses the composition formulas of [`IpfElement`]; maps are
//! built pointwise from [`IpfElement::apply`] and composed as finite tables.
//!
//! A realized element is the restriction of `z ↦ (z − x)σ + y` to points
//! whose image also lies in the box, so its domain is the sub-box
//! `[x, x + (B·𝟏 − y)σ⁻¹]` rather than a full truncated filter. The oracle
//! therefore recognizes maps whose domain and range are sub-boxes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::element::{IpfElement, Point};
use crate::error::{ensure_dim, IpfError, Result};
use crate::perm::Permutation;
use crate::universe::{box_points, grid_points};

/// Box bound that keeps composites of elements with coordinates `<= max`
/// recognizable: generators of a composite stay below `2·max`, and
/// recognition needs one more step in every direction.
pub fn faithful_bound(max: i64) -> i64 {
    2 * max + 3
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridMap {
    n: usize,
    bound: i64,
    entries: BTreeMap<Vec<i64>, Vec<i64>>,
}

impl GridMap {
    /// Builds a map from an explicit table; keys and values must lie in the
    /// box and the table must be injective.
    pub fn from_entries(
        n: usize,
        bound: i64,
        entries: impl IntoIterator<Item = (Vec<i64>, Vec<i64>)>,
    ) -> Result<Self> {
        if bound < 2 {
            return Err(IpfError::BoxTooSmall { bound, needed: 2 });
        }
        let mut table = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (k, v) in entries {
            ensure_dim(n, k.len())?;
            ensure_dim(n, v.len())?;
            for p in [&k, &v] {
                if p.iter().any(|&c| c < 1 || c > bound) {
                    return Err(IpfError::NotOrderIso(format!(
                        "point {p:?} lies outside the box [1..{bound}]"
                    )));
                }
            }
            if !seen.insert(v.clone()) {
                return Err(IpfError::NotOrderIso(format!("value {v:?} repeated")));
            }
            table.insert(k, v);
        }
        Ok(GridMap {
            n,
            bound,
            entries: table,
        })
    }

    pub fn empty(n: usize, bound: i64) -> Self {
        GridMap {
            n,
            bound,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, z: &[i64]) -> Option<&Vec<i64>> {
        self.entries.get(z)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &Vec<i64>)> {
        self.entries.iter()
    }

    /// Least point of the domain, if the domain has one.
    pub fn domain_min(&self) -> Option<Vec<i64>> {
        componentwise_min(self.entries.keys())
    }

    /// Least point of the range, if the range has one.
    pub fn range_min(&self) -> Option<Vec<i64>> {
        componentwise_min(self.entries.values())
    }
}

fn componentwise_min<'a>(mut it: impl Iterator<Item = &'a Vec<i64>>) -> Option<Vec<i64>> {
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, p| {
        acc.iter().zip(p).map(|(a, b)| *a.min(b)).collect()
    }))
}

fn componentwise_max<'a>(mut it: impl Iterator<Item = &'a Vec<i64>>) -> Option<Vec<i64>> {
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, p| {
        acc.iter().zip(p).map(|(a, b)| *a.max(b)).collect()
    }))
}

fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Restricts `a` to the box `[1..B]ⁿ`.
pub fn realize(a: &IpfElement, bound: i64) -> Result<GridMap> {
    let needed = a.max_coord().max(2);
    if bound < needed {
        return Err(IpfError::BoxTooSmall { bound, needed });
    }
    let n = a.dim();
    let mut entries = BTreeMap::new();
    for z in box_points(a.x().coords(), &vec![bound; n]) {
        let image = a.apply(&Point::new(z.clone())?)?;
        if image.coords().iter().all(|&c| c <= bound) {
            entries.insert(z, image.into_inner());
        }
    }
    Ok(GridMap { n, bound, entries })
}

/// Composition of finite partial maps, `f` first.
pub fn grid_compose(f: &GridMap, g: &GridMap) -> Result<GridMap> {
    ensure_dim(f.n, g.n)?;
    if f.bound != g.bound {
        return Err(IpfError::BoxMismatch {
            left: f.bound,
            right: g.bound,
        });
    }
    let entries = f
        .entries
        .iter()
        .filter_map(|(k, v)| g.entries.get(v).map(|w| (k.clone(), w.clone())))
        .collect();
    Ok(GridMap {
        n: f.n,
        bound: f.bound,
        entries,
    })
}

/// Whether a point set fills the whole box between its componentwise
/// min and max.
fn is_full_box<'a>(points: impl Iterator<Item = &'a Vec<i64>> + Clone, count: usize) -> bool {
    let (Some(lo), Some(hi)) = (componentwise_min(points.clone()), componentwise_max(points)) else {
        return false;
    };
    let size = lo
        .iter()
        .zip(&hi)
        .try_fold(1usize, |acc, (a, b)| acc.checked_mul((b - a + 1) as usize));
    size == Some(count)
}

/// Monotone along every covering pair `p ⋖ p + eᵢ` inside the table's domain.
fn monotone_on_covers(table: &BTreeMap<&Vec<i64>, &Vec<i64>>, n: usize) -> bool {
    table.iter().all(|(p, fp)| {
        (0..n).all(|i| {
            let mut q = (*p).clone();
            q[i] += 1;
            table.get(&q).is_none_or(|fq| le(fp, fq))
        })
    })
}

/// True iff the domain and range are full sub-boxes and both the map and
/// its converse are monotone. On a box, monotonicity only needs checking
/// along covering pairs.
pub fn is_order_iso(f: &GridMap) -> bool {
    let count = f.entries.len();
    if count == 0 || !is_full_box(f.entries.keys(), count) {
        return false;
    }
    let forward: BTreeMap<&Vec<i64>, &Vec<i64>> = f.entries.iter().collect();
    let converse: BTreeMap<&Vec<i64>, &Vec<i64>> = f.entries.iter().map(|(k, v)| (v, k)).collect();
    converse.len() == count
        && is_full_box(converse.keys().copied(), count)
        && monotone_on_covers(&forward, f.n)
        && monotone_on_covers(&converse, f.n)
}

/// Reads the canonical triple off a finite order isomorphism: `x` is the
/// least point of the domain, `y` its image, and the images of `x + eᵢ`
/// are `y + e_{(i)σ}`.
pub fn grid_recognize(f: &GridMap) -> Result<IpfElement> {
    if !is_order_iso(f) {
        return Err(IpfError::NotOrderIso(
            "domain and range must be sub-boxes related monotonically both ways".into(),
        ));
    }
    let n = f.n;
    let x = f.domain_min().expect("nonempty");
    let y = f.entries[&x].clone();
    let mut image = vec![0i64; n];
    for (i, slot) in image.iter_mut().enumerate() {
        let mut step = x.clone();
        step[i] += 1;
        let target = f.entries.get(&step).ok_or_else(|| {
            IpfError::InsufficientBox(format!("{step:?} is not in the realized domain"))
        })?;
        let diff: Vec<i64> = target.iter().zip(&y).map(|(a, b)| a - b).collect();
        let unit = diff.iter().position(|&d| d == 1);
        match unit {
            Some(j) if diff.iter().filter(|&&d| d != 0).count() == 1 => *slot = j as i64 + 1,
            _ => {
                return Err(IpfError::NotOrderIso(format!(
                    "image of {step:?} is not a unit step from {y:?}"
                )))
            }
        }
    }
    let sigma = Permutation::from_one_line(&image)
        .map_err(|_| IpfError::NotOrderIso("unit steps do not form a permutation".into()))?;
    let element = IpfElement::new(n, sigma, x, y)?;
    for (k, v) in &f.entries {
        if element.apply(&Point::new(k.clone())?)?.coords() != v.as_slice() {
            return Err(IpfError::NotOrderIso(format!(
                "{k:?} does not follow the recovered affine map"
            )));
        }
    }
    Ok(element)
}

/// Smallest idempotent `ε` (lexicographic in `ε.x ∈ [1..bound]ⁿ`) with
/// `b · ε = a`, witnessing `a ≼ b`.
pub fn witness_leq(a: &IpfElement, b: &IpfElement, bound: i64) -> Result<Option<IpfElement>> {
    ensure_dim(a.dim(), b.dim())?;
    for x in grid_points(a.dim(), bound) {
        let e = IpfElement::idempotent_on(x);
        if b.compose(&e)? == *a {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Smallest idempotent `ε` with `a · ε = b · ε`, witnessing `a σ_mg b`.
pub fn witness_mg(a: &IpfElement, b: &IpfElement, bound: i64) -> Result<Option<IpfElement>> {
    ensure_dim(a.dim(), b.dim())?;
    for x in grid_points(a.dim(), bound) {
        let e = IpfElement::idempotent_on(x);
        if a.compose(&e)? == b.compose(&e)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

impl fmt::Display for GridMap {
    /// Header `grid{n=..;B=..}` then one sorted `(k)->(v)` line per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "grid{{n={};B={}}}", self.n, self.bound)?;
        for (k, v) in &self.entries {
            f.write_str("\n")?;
            write_tuple(f, k)?;
            f.write_str("->")?;
            write_tuple(f, v)?;
        }
        Ok(())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}
