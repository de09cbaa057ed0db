//! Canonical form of an order isomorphism `↑x → ↑y` of `ℕⁿ`.
//!
//! Every such map is `z ↦ (z − x)σ + y` for a unique triple `(σ, x, y)`,
//! so elements are stored as that triple and compared structurally.

use std::fmt;

use crate::error::{ensure_dim, IpfError, Result};
use crate::perm::{vadd, vmax, vsub, write_list, Permutation};

/// Largest dimension for which the unit group is enumerated by default.
pub const DEFAULT_MAX_DIM: usize = 8;

/// A point of `ℕⁿ`; every coordinate is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some((index, &value)) = coords.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(IpfError::NonPositiveCoordinate { index, value });
        }
        Ok(Point(coords))
    }

    /// The least element `𝟏 = (1, …, 1)`.
    pub fn ones(n: usize) -> Self {
        Point(vec![1; n])
    }

    /// `𝟏 + eᵢ` for the zero-based coordinate `i`.
    pub fn ones_plus_unit(n: usize, i: usize) -> Self {
        let mut v = vec![1; n];
        v[i] = 2;
        Point(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Product order: every coordinate of `self` is `<=` the matching one of `other`.
    pub fn le(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum, the meet of the principal filters.
    pub fn join(&self, other: &Point) -> Point {
        Point(vmax(&self.0, &other.0))
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IpfElement {
    sigma: Permutation,
    x: Point,
    y: Point,
}

/// Green's relations between two elements of the same monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreenFlags {
    pub l: bool,
    pub r: bool,
    pub h: bool,
    pub d: bool,
    pub j: bool,
}

impl IpfElement {
    /// Validating constructor (`make_element`).
    pub fn new(n: usize, sigma: Permutation, x: Vec<i64>, y: Vec<i64>) -> Result<Self> {
        ensure_dim(n, sigma.len())?;
        ensure_dim(n, x.len())?;
        ensure_dim(n, y.len())?;
        Ok(IpfElement {
            sigma,
            x: Point::new(x)?,
            y: Point::new(y)?,
        })
    }

    /// Convenience constructor from a 1-based one-line permutation.
    pub fn from_parts(sigma: &[i64], x: &[i64], y: &[i64]) -> Result<Self> {
        let sigma = Permutation::from_one_line(sigma)?;
        Self::new(sigma.len(), sigma, x.to_vec(), y.to_vec())
    }

    pub(crate) fn from_raw(sigma: Permutation, x: Point, y: Point) -> Self {
        debug_assert!(sigma.len() == x.dim() && x.dim() == y.dim());
        IpfElement { sigma, x, y }
    }

    pub fn identity(n: usize) -> Self {
        IpfElement {
            sigma: Permutation::identity(n),
            x: Point::ones(n),
            y: Point::ones(n),
        }
    }

    /// The identity map of the principal filter `↑x`.
    pub fn idempotent_on(x: Point) -> Self {
        IpfElement {
            sigma: Permutation::identity(x.dim()),
            y: x.clone(),
            x,
        }
    }

    /// The unit `(σ, 𝟏, 𝟏)` permuting coordinates.
    pub fn unit(sigma: Permutation) -> Self {
        let n = sigma.len();
        IpfElement {
            sigma,
            x: Point::ones(n),
            y: Point::ones(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// Generator of the domain filter.
    pub fn x(&self) -> &Point {
        &self.x
    }

    /// Generator of the range filter.
    pub fn y(&self) -> &Point {
        &self.y
    }

    /// Product in application order: `self` first, then `other`.
    pub fn compose(&self, other: &IpfElement) -> Result<IpfElement> {
        ensure_dim(self.dim(), other.dim())?;
        let m = vmax(self.y.coords(), other.x.coords());
        let dom_shift = self
            .sigma
            .inverse()
            .act_unchecked(&vsub(&m, self.y.coords())?);
        let x = vadd(&dom_shift, self.x.coords())?;
        let ran_shift = other.sigma.act_unchecked(&vsub(&m, other.x.coords())?);
        let y = vadd(&ran_shift, other.y.coords())?;
        Ok(IpfElement {
            sigma: self.sigma.then_unchecked(&other.sigma),
            x: Point(x),
            y: Point(y),
        })
    }

    pub fn inverse(&self) -> IpfElement {
        IpfElement {
            sigma: self.sigma.inverse(),
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.sigma.is_identity() && self.x == self.y
    }

    /// Evaluates the map at `z`: `(z − x)σ + y`.
    pub fn apply(&self, z: &Point) -> Result<Point> {
        ensure_dim(self.dim(), z.dim())?;
        if !self.x.le(z) {
            return Err(IpfError::OutsideDomain {
                point: z.coords().to_vec(),
                generator: self.x.coords().to_vec(),
            });
        }
        let shifted = self.sigma.act_unchecked(&vsub(z.coords(), self.x.coords())?);
        Ok(Point(vadd(&shifted, self.y.coords())?))
    }

    /// Splits the element as `ρ · σ · λ`: a translation of `↑x` onto `ℕⁿ`,
    /// a unit, and a translation of `ℕⁿ` onto `↑y`.
    pub fn factorize(&self) -> (IpfElement, IpfElement, IpfElement) {
        let n = self.dim();
        let rho = IpfElement {
            sigma: Permutation::identity(n),
            x: self.x.clone(),
            y: Point::ones(n),
        };
        let lambda = IpfElement {
            sigma: Permutation::identity(n),
            x: Point::ones(n),
            y: self.y.clone(),
        };
        (rho, IpfElement::unit(self.sigma.clone()), lambda)
    }

    /// `L` and `R` are equality of domains and ranges; the monoid is
    /// bisimple, so `D` and `J` always hold.
    pub fn green_relations(&self, other: &IpfElement) -> Result<GreenFlags> {
        ensure_dim(self.dim(), other.dim())?;
        let l = self.x == other.x;
        let r = self.y == other.y;
        Ok(GreenFlags {
            l,
            r,
            h: l && r,
            d: true,
            j: true,
        })
    }

    /// `(x)σ − y`, the translation invariant shared by a whole `σ_mg` class.
    pub fn translation_gap(&self) -> Result<Vec<i64>> {
        vsub(&self.sigma.act_unchecked(self.x.coords()), self.y.coords())
    }

    /// Natural partial order: `self ≼ other` iff `self = other · ε` for some
    /// idempotent `ε`. With the canonical triple this means equal `σ`, equal
    /// translation gap, and `self.x >= other.x` (a restriction has a smaller
    /// domain filter, hence a larger generator).
    pub fn natural_leq(&self, other: &IpfElement) -> Result<bool> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(self.sigma == other.sigma
            && self.translation_gap()? == other.translation_gap()?
            && other.x.le(&self.x))
    }

    /// An element `α` with `αα⁻¹ = e` and `α⁻¹α = i` for idempotents `e`, `i`.
    pub fn connect_idempotents(e: &IpfElement, i: &IpfElement) -> Result<IpfElement> {
        ensure_dim(e.dim(), i.dim())?;
        if !e.is_idempotent() || !i.is_idempotent() {
            return Err(IpfError::NotIdempotent);
        }
        Ok(IpfElement {
            sigma: Permutation::identity(e.dim()),
            x: e.x.clone(),
            y: i.x.clone(),
        })
    }

    /// Largest coordinate appearing in `x` or `y`.
    pub fn max_coord(&self) -> i64 {
        self.x
            .coords()
            .iter()
            .chain(self.y.coords())
            .copied()
            .max()
            .unwrap_or(1)
    }
}

/// The group of units, `{(σ, 𝟏, 𝟏)}`, for `n` up to `cap`.
pub fn enumerate_units_with_cap(n: usize, cap: usize) -> Result<Vec<IpfElement>> {
    if n > cap {
        return Err(IpfError::CapExceeded { n, cap });
    }
    Ok(Permutation::all(n)
        .into_iter()
        .map(IpfElement::unit)
        .collect())
}

pub fn enumerate_units(n: usize) -> Result<Vec<IpfElement>> {
    enumerate_units_with_cap(n, DEFAULT_MAX_DIM)
}

impl fmt::Display for IpfElement {
    /// Canonical text form, e.g. `ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ipf{{n={}; s={}; x={}; y={}}}",
            self.dim(),
            self.sigma,
            self.x,
            self.y
        )
    }
}
