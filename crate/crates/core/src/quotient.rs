//! The two semidirect-product images of the monoid.
//!
//! `psi` is an isomorphism onto `𝒮ₙ ⋉ 𝒞ⁿ(p,q)`, where `𝒞(p,q)` is the
//! bicyclic monoid on pairs of non-negative integers with
//! `(i,j)*(k,l) = (i + max(j,k) − j, l + max(j,k) − k)`.
//! `upsilon` is the quotient by the least group congruence, onto
//! `𝒮ₙ ⋉ ℤⁿ` with `(σ,z)(τ,w) = (στ, (z)τ + w)`.

use std::fmt;

use crate::element::{IpfElement, Point};
use crate::error::{ensure_dim, IpfError, Result};
use crate::perm::{vadd, vneg, write_list, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemidirectPair {
    pub sigma: Permutation,
    pub pairs: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientElement {
    pub sigma: Permutation,
    pub z: Vec<i64>,
}

/// Product in the bicyclic monoid on `ℕ₀ × ℕ₀`.
pub fn bicyclic_mul((i, j): (i64, i64), (k, l): (i64, i64)) -> Result<(i64, i64)> {
    let m = j.max(k);
    let left = i.checked_add(m - j).ok_or(IpfError::Overflow)?;
    let right = l.checked_add(m - k).ok_or(IpfError::Overflow)?;
    Ok((left, right))
}

impl SemidirectPair {
    pub fn new(sigma: Permutation, pairs: Vec<(i64, i64)>) -> Result<Self> {
        ensure_dim(sigma.len(), pairs.len())?;
        if let Some((index, &(a, b))) = pairs.iter().enumerate().find(|(_, &(a, b))| a < 0 || b < 0) {
            return Err(IpfError::NonPositiveCoordinate {
                index,
                value: a.min(b),
            });
        }
        Ok(SemidirectPair { sigma, pairs })
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// `Φ_σ`: permutes both coordinate vectors of `[x, y]`.
    pub fn twist(pairs: &[(i64, i64)], sigma: &Permutation) -> Vec<(i64, i64)> {
        let firsts: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        let seconds: Vec<i64> = pairs.iter().map(|p| p.1).collect();
        sigma
            .act_unchecked(&firsts)
            .into_iter()
            .zip(sigma.act_unchecked(&seconds))
            .collect()
    }
}

/// `Ψ(a) = (σ, [(x)σ − 𝟏, y − 𝟏])`, shifted so the pairs live in `ℕ₀`.
pub fn psi(a: &IpfElement) -> SemidirectPair {
    let twisted = a.sigma().act_unchecked(a.x().coords());
    let pairs = twisted
        .iter()
        .zip(a.y().coords())
        .map(|(u, v)| (u - 1, v - 1))
        .collect();
    SemidirectPair {
        sigma: a.sigma().clone(),
        pairs,
    }
}

/// Inverse of [`psi`].
pub fn psi_inverse(g: &SemidirectPair) -> Result<IpfElement> {
    let twisted: Vec<i64> = g.pairs.iter().map(|p| p.0 + 1).collect();
    let x = g.sigma.inverse().act_unchecked(&twisted);
    let y = g.pairs.iter().map(|p| p.1 + 1).collect();
    IpfElement::new(g.dim(), g.sigma.clone(), x, y)
}

/// `(σ,[u,v])·(τ,[w,t]) = (στ, Φ_τ([u,v]) * [w,t])`.
pub fn sd_mul(g: &SemidirectPair, h: &SemidirectPair) -> Result<SemidirectPair> {
    ensure_dim(g.dim(), h.dim())?;
    let pairs = SemidirectPair::twist(&g.pairs, &h.sigma)
        .into_iter()
        .zip(&h.pairs)
        .map(|(p, q)| bicyclic_mul(p, *q))
        .collect::<Result<_>>()?;
    Ok(SemidirectPair {
        sigma: g.sigma.then_unchecked(&h.sigma),
        pairs,
    })
}

impl QuotientElement {
    pub fn new(sigma: Permutation, z: Vec<i64>) -> Result<Self> {
        ensure_dim(sigma.len(), z.len())?;
        Ok(QuotientElement { sigma, z })
    }

    pub fn identity(n: usize) -> Self {
        QuotientElement {
            sigma: Permutation::identity(n),
            z: vec![0; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.z.iter().all(|&c| c == 0)
    }

    /// `(σ,z)(τ,w) = (στ, (z)τ + w)`.
    pub fn mul(&self, other: &QuotientElement) -> Result<QuotientElement> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(QuotientElement {
            sigma: self.sigma.then_unchecked(&other.sigma),
            z: vadd(&other.sigma.act_unchecked(&self.z), &other.z)?,
        })
    }

    /// `(σ,z)⁻¹ = (σ⁻¹, −(z)σ⁻¹)`.
    pub fn inv(&self) -> Result<QuotientElement> {
        let inv = self.sigma.inverse();
        let z = vneg(&inv.act_unchecked(&self.z))?;
        Ok(QuotientElement { sigma: inv, z })
    }

    /// Conjugate by a unit: `(τ,0)⁻¹ (σ,z) (τ,0) = (τ⁻¹στ, (z)τ)`.
    pub fn conjugate_by(&self, tau: &Permutation) -> QuotientElement {
        QuotientElement {
            sigma: tau.inverse().then_unchecked(&self.sigma).then_unchecked(tau),
            z: tau.act_unchecked(&self.z),
        }
    }
}

/// `Υ(a) = (σ, (x)σ − y)`.
pub fn upsilon(a: &IpfElement) -> Result<QuotientElement> {
    Ok(QuotientElement {
        sigma: a.sigma().clone(),
        z: a.translation_gap()?,
    })
}

pub fn quotient_mul(g: &QuotientElement, h: &QuotientElement) -> Result<QuotientElement> {
    g.mul(h)
}

pub fn quotient_inv(g: &QuotientElement) -> Result<QuotientElement> {
    g.inv()
}

/// Least group congruence: equal `Υ`-images.
pub fn mg_related(a: &IpfElement, b: &IpfElement) -> Result<bool> {
    ensure_dim(a.dim(), b.dim())?;
    Ok(upsilon(a)? == upsilon(b)?)
}

/// Greatest element of the `σ_mg`-class of `a` under the natural order.
///
/// Coordinate `i` of the domain is glued to coordinate `(i)σ` of the range,
/// and each glued pair can be shifted down on its own until one side
/// reaches 1. A single shift `k` applied to every coordinate is not enough in
/// general: `(id,(1,2),(1,2))` lies strictly below the identity.
pub fn top_of_class(a: &IpfElement) -> IpfElement {
    let (xs, ys) = (a.x().coords(), a.y().coords());
    let mut x = xs.to_vec();
    let mut y = ys.to_vec();
    for (i, xi) in xs.iter().enumerate() {
        let j = a.sigma().image_of(i);
        let k = xi.min(&ys[j]) - 1;
        x[i] -= k;
        y[j] -= k;
    }
    IpfElement::from_raw(
        a.sigma().clone(),
        Point::new(x).expect("shifted coordinates stay positive"),
        Point::new(y).expect("shifted coordinates stay positive"),
    )
}

/// Some element with the given `Υ`-image, with generators as small as
/// possible: `x = (max(z,0))σ⁻¹ + 𝟏`, `y = max(−z,0) + 𝟏`.
pub fn upsilon_preimage(g: &QuotientElement) -> Result<IpfElement> {
    let pos: Vec<i64> = g.z.iter().map(|&c| c.max(0) + 1).collect();
    let neg: Vec<i64> = g
        .z
        .iter()
        .map(|&c| c.checked_neg().map(|c| c.max(0) + 1).ok_or(IpfError::Overflow))
        .collect::<Result<_>>()?;
    let x = g.sigma.inverse().act_unchecked(&pos);
    IpfElement::new(g.dim(), g.sigma.clone(), x, neg)
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quo{{s={}; z=", self.sigma)?;
        write_list(f, &self.z)?;
        f.write_str("}")
    }
}

impl fmt::Display for SemidirectPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sdp{{s={}; p=[", self.sigma)?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("]}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &[i64], x: &[i64], y: &[i64]) -> IpfElement {
        IpfElement::from_parts(s, x, y).unwrap()
    }

    fn q(s: &[i64], z: &[i64]) -> QuotientElement {
        QuotientElement::new(Permutation::from_one_line(s).unwrap(), z.to_vec()).unwrap()
    }

    fn sd1(i: i64, j: i64) -> SemidirectPair {
        SemidirectPair::new(Permutation::identity(1), vec![(i, j)]).unwrap()
    }

    fn worked() -> (IpfElement, IpfElement) {
        (el(&[2, 1], &[2, 1], &[1, 3]), el(&[1, 2], &[2, 2], &[1, 1]))
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&IpfElement::identity(2)).to_string(), "sdp{s=[1,2]; p=[(0,0),(0,0)]}");
        let (a, _) = worked();
        assert_eq!(psi(&a).to_string(), "sdp{s=[2,1]; p=[(0,0),(1,2)]}");
        assert_eq!(psi_inverse(&psi(&a)).unwrap(), a);
    }

    #[test]
    fn bicyclic_products() {
        // the shift n ↦ n+1 on ℕ and its partial inverse
        assert_eq!(sd_mul(&sd1(0, 1), &sd1(1, 0)).unwrap(), sd1(0, 0));
        assert_eq!(sd_mul(&sd1(1, 0), &sd1(0, 1)).unwrap(), sd1(1, 1));
        let up = el(&[1], &[1], &[2]);
        assert_eq!(psi(&up), sd1(0, 1));
        assert_eq!(psi(&up.compose(&up.inverse()).unwrap()), sd1(0, 0));
    }

    #[test]
    fn psi_multiplicative_on_worked_pair() {
        let (a, b) = worked();
        assert_eq!(sd_mul(&psi(&a), &psi(&b)).unwrap(), psi(&a.compose(&b).unwrap()));
    }

    #[test]
    fn upsilon_examples() {
        let e = IpfElement::idempotent_on(Point::new(vec![4, 2]).unwrap());
        assert_eq!(upsilon(&e).unwrap(), QuotientElement::identity(2));
        let (a, b) = worked();
        assert_eq!(upsilon(&a).unwrap(), q(&[2, 1], &[0, -1]));
        assert_eq!(
            upsilon(&a.compose(&b).unwrap()).unwrap(),
            quotient_mul(&upsilon(&a).unwrap(), &upsilon(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn quotient_group_laws() {
        let g = q(&[2, 1], &[0, -1]);
        let id = QuotientElement::identity(2);
        assert_eq!(g.mul(&id).unwrap(), g);
        assert_eq!(id.mul(&g).unwrap(), g);
        assert_eq!(g.mul(&g).unwrap(), q(&[1, 2], &[-1, -1]));
        assert_eq!(q(&[1, 2], &[3, -2]).inv().unwrap(), q(&[1, 2], &[-3, 2]));
        assert_eq!(g.inv().unwrap(), q(&[2, 1], &[1, 0]));
        assert!(g.mul(&g.inv().unwrap()).unwrap().is_identity());
        assert_eq!(g.inv().unwrap().inv().unwrap(), g);
    }

    #[test]
    fn mg_examples() {
        let (a, _) = worked();
        let b = el(&[2, 1], &[3, 2], &[2, 4]);
        assert!(mg_related(&a, &b).unwrap());
        assert!(mg_related(&a, &a).unwrap());
        assert!(!mg_related(&a, &el(&[1, 2], &[2, 1], &[1, 3])).unwrap());
    }

    #[test]
    fn top_examples() {
        assert_eq!(top_of_class(&el(&[1, 2], &[3, 2], &[2, 4])), el(&[1, 2], &[2, 1], &[1, 3]));
        let (a, _) = worked();
        let top = top_of_class(&a);
        assert_eq!(top, el(&[2, 1], &[1, 1], &[1, 2]));
        assert!(a.natural_leq(&top).unwrap() && !top.natural_leq(&a).unwrap());
        let corner = el(&[1, 2], &[1, 2], &[1, 2]);
        assert_eq!(top_of_class(&corner), IpfElement::identity(2));
        assert_eq!(top_of_class(&IpfElement::identity(3)), IpfElement::identity(3));
        let deep = el(&[2, 1], &[5, 7], &[6, 9]);
        let top = top_of_class(&deep);
        assert!(mg_related(&top, &deep).unwrap());
        assert!(deep.natural_leq(&top).unwrap());
    }

    #[test]
    fn preimage_hits_image() {
        for g in [q(&[2, 1], &[0, -1]), q(&[1, 2], &[3, -2]), q(&[2, 1], &[-4, 5])] {
            assert_eq!(upsilon(&upsilon_preimage(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn rejects_negative_pairs() {
        assert!(SemidirectPair::new(Permutation::identity(1), vec![(-1, 0)]).is_err());
    }
}
