//! Least congruence identifying a pair of elements.
//!
//! Every congruence other than equality is a group congruence, so it
//! contains `σ_mg` and is the pullback along `Υ` of a normal subgroup of
//! `𝒮ₙ ⋉ ℤⁿ`. This correspondence is the standard one for inverse
//! semigroups; it is assumed here, not derived.
//!
//! A normal subgroup `N` is stored in coset form `(K, r, L)`: `K` is the
//! projection of `N` to `𝒮ₙ`, `L = N ∩ ℤⁿ` is a permutation-invariant
//! lattice, and `N = {(π, r_π + ℓ) : π ∈ K, ℓ ∈ L}`. Two members over the
//! same `π` differ by `(r − r')π⁻¹ ∈ L`, and `L` is invariant, so this form
//! always exists; [`NormalSubgroupRep::verify`] still re-checks it.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::element::{IpfElement, DEFAULT_MAX_DIM};
use crate::error::{ensure_dim, IpfError, Result};
use crate::lattice::LatticeBasis;
use crate::perm::{vsub, write_list, Permutation};
use crate::quotient::{upsilon, QuotientElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSubgroupRep {
    n: usize,
    /// coset representatives keyed by permutation, each reduced modulo `lattice`
    reps: BTreeMap<Permutation, Vec<i64>>,
    lattice: LatticeBasis,
}

impl NormalSubgroupRep {
    pub fn trivial(n: usize) -> Self {
        NormalSubgroupRep {
            n,
            reps: BTreeMap::from([(Permutation::identity(n), vec![0; n])]),
            lattice: LatticeBasis::zero(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `K`, sorted by one-line form.
    pub fn perm_part(&self) -> impl Iterator<Item = &Permutation> {
        self.reps.keys()
    }

    pub fn reps(&self) -> &BTreeMap<Permutation, Vec<i64>> {
        &self.reps
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    pub fn is_trivial(&self) -> bool {
        self.reps.len() == 1 && self.lattice.is_zero()
    }

    pub fn contains(&self, g: &QuotientElement) -> Result<bool> {
        ensure_dim(self.n, g.dim())?;
        match self.reps.get(&g.sigma) {
            None => Ok(false),
            Some(r) => self.lattice.contains(&vsub(&g.z, r)?),
        }
    }

    /// A generating set of `N` as a subgroup: one member per coset plus the
    /// lattice basis.
    pub fn generators(&self) -> Vec<QuotientElement> {
        let mut out: Vec<QuotientElement> = self
            .reps
            .iter()
            .map(|(p, r)| QuotientElement {
                sigma: p.clone(),
                z: r.clone(),
            })
            .collect();
        out.extend(self.lattice.rows().iter().map(|row| QuotientElement {
            sigma: Permutation::identity(self.n),
            z: row.clone(),
        }));
        out
    }

    /// Re-checks the coset form: `r_id ∈ L`, `L` invariant under every
    /// coordinate permutation, closure under inverses, and closure under
    /// products with a strided sample of at most 32 generators.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: String| Err(IpfError::RepresentationFailure(m));
        let id = Permutation::identity(self.n);
        match self.reps.get(&id) {
            Some(r) if self.lattice.contains(r)? => {}
            _ => return fail("identity coset is not the lattice".into()),
        }
        for row in self.lattice.rows() {
            for tau in Permutation::adjacent_transpositions(self.n) {
                if !self.lattice.contains(&tau.act_unchecked(row))? {
                    return fail(format!("lattice not invariant: {row:?} under {tau}"));
                }
            }
        }
        let gens = self.generators();
        let stride = gens.len().div_ceil(32).max(1);
        let sample: Vec<&QuotientElement> = gens.iter().step_by(stride).collect();
        for member in &gens {
            if !self.contains(&member.inv()?)? {
                return fail(format!("not closed under inverse at {member}"));
            }
            for g in &sample {
                if !self.contains(&member.mul(g)?)? {
                    return fail(format!("not closed under product {member} * {g}"));
                }
            }
        }
        Ok(())
    }
}

type CosetReps = BTreeMap<Permutation, Vec<i64>>;

/// Subgroup generated by `gens` modulo `lattice`. Returns the reduced coset
/// representatives and any lattice vectors forced by coset collisions.
fn close_subgroup(
    n: usize,
    gens: &[QuotientElement],
    lattice: &LatticeBasis,
) -> Result<(CosetReps, Vec<Vec<i64>>)> {
    let mut reps = BTreeMap::new();
    let mut forced = Vec::new();
    let id = Permutation::identity(n);
    reps.insert(id.clone(), vec![0; n]);
    let mut queue = VecDeque::from([QuotientElement::identity(n)]);
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            let mut next = cur.mul(g)?;
            next.z = lattice.reduce(&next.z)?;
            match reps.get(&next.sigma) {
                None => {
                    reps.insert(next.sigma.clone(), next.z.clone());
                    queue.push_back(next);
                }
                Some(existing) if *existing != next.z => forced.push(vsub(&next.z, existing)?),
                Some(_) => {}
            }
        }
    }
    Ok((reps, forced))
}

/// Normal closure of `gens` in `𝒮ₙ ⋉ ℤⁿ`, by saturation.
///
/// Each round first grows the lattice (commutators `(eᵢ)π − eᵢ` with
/// translations, then invariance under coordinate permutations), then
/// closes the permutation part as a group, feeding coset collisions back
/// into the lattice, then adds conjugates of the generators by adjacent
/// transpositions that are not yet members. Stops when a round changes
/// nothing.
pub fn normal_closure_with_cap(
    gens: &[QuotientElement],
    n: usize,
    cap: usize,
) -> Result<NormalSubgroupRep> {
    if n > cap {
        return Err(IpfError::CapExceeded { n, cap });
    }
    for g in gens {
        ensure_dim(n, g.dim())?;
    }
    let transpositions = Permutation::adjacent_transpositions(n);
    let mut gens: Vec<QuotientElement> = gens.to_vec();
    let mut lattice = LatticeBasis::zero(n);
    let mut reps: BTreeMap<Permutation, Vec<i64>> =
        BTreeMap::from([(Permutation::identity(n), vec![0; n])]);
    for g in &gens {
        reps.entry(g.sigma.clone()).or_insert_with(|| g.z.clone());
    }

    loop {
        let mut vectors: Vec<Vec<i64>> = Vec::new();
        for pi in reps.keys() {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                vectors.push(vsub(&pi.act_unchecked(&e), &e)?);
            }
        }
        let mut grown = lattice.extend(&vectors)?;
        loop {
            let images: Vec<Vec<i64>> = grown
                .rows()
                .iter()
                .flat_map(|row| transpositions.iter().map(move |t| t.act_unchecked(row)))
                .collect();
            let next = grown.extend(&images)?;
            if next == grown {
                break;
            }
            grown = next;
        }

        let (closed, forced) = close_subgroup(n, &gens, &grown)?;
        let grown = grown.extend(&forced)?;

        let candidate = NormalSubgroupRep {
            n,
            reps: reduce_reps(&closed, &grown)?,
            lattice: grown,
        };
        let mut added = false;
        for g in gens.clone() {
            for t in &transpositions {
                let c = g.conjugate_by(t);
                if !candidate.contains(&c)? {
                    gens.push(c);
                    added = true;
                }
            }
        }

        let stable = candidate.lattice == lattice && candidate.reps == reps;
        lattice = candidate.lattice;
        reps = candidate.reps;
        if stable && !added {
            break;
        }
    }

    let rep = NormalSubgroupRep { n, reps, lattice };
    rep.verify()?;
    Ok(rep)
}

fn reduce_reps(
    reps: &BTreeMap<Permutation, Vec<i64>>,
    lattice: &LatticeBasis,
) -> Result<BTreeMap<Permutation, Vec<i64>>> {
    reps.iter()
        .map(|(p, r)| Ok((p.clone(), lattice.reduce(r)?)))
        .collect()
}

pub fn normal_closure(gens: &[QuotientElement], n: usize) -> Result<NormalSubgroupRep> {
    normal_closure_with_cap(gens, n, DEFAULT_MAX_DIM)
}

pub fn subgroup_contains(group: &NormalSubgroupRep, g: &QuotientElement) -> Result<bool> {
    group.contains(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceDescriptor {
    /// Equality.
    Identity { n: usize },
    /// Pullback of a normal subgroup of `𝒮ₙ ⋉ ℤⁿ` along `Υ`.
    Group(NormalSubgroupRep),
}

impl CongruenceDescriptor {
    pub fn dim(&self) -> usize {
        match self {
            CongruenceDescriptor::Identity { n } => *n,
            CongruenceDescriptor::Group(g) => g.dim(),
        }
    }

    pub fn subgroup(&self) -> Option<&NormalSubgroupRep> {
        match self {
            CongruenceDescriptor::Identity { .. } => None,
            CongruenceDescriptor::Group(g) => Some(g),
        }
    }

    pub fn relates(&self, c: &IpfElement, d: &IpfElement) -> Result<bool> {
        congruence_relates(self, c, d)
    }
}

/// The `Υ`-difference `Υ(a)·Υ(b)⁻¹`.
pub fn upsilon_gap(a: &IpfElement, b: &IpfElement) -> Result<QuotientElement> {
    upsilon(a)?.mul(&upsilon(b)?.inv()?)
}

pub fn congruence_from_pair_with_cap(
    a: &IpfElement,
    b: &IpfElement,
    cap: usize,
) -> Result<CongruenceDescriptor> {
    ensure_dim(a.dim(), b.dim())?;
    if a == b {
        return Ok(CongruenceDescriptor::Identity { n: a.dim() });
    }
    let gap = upsilon_gap(a, b)?;
    Ok(CongruenceDescriptor::Group(normal_closure_with_cap(
        &[gap],
        a.dim(),
        cap,
    )?))
}

pub fn congruence_from_pair(a: &IpfElement, b: &IpfElement) -> Result<CongruenceDescriptor> {
    congruence_from_pair_with_cap(a, b, DEFAULT_MAX_DIM)
}

pub fn congruence_relates(
    desc: &CongruenceDescriptor,
    c: &IpfElement,
    d: &IpfElement,
) -> Result<bool> {
    ensure_dim(desc.dim(), c.dim())?;
    ensure_dim(desc.dim(), d.dim())?;
    match desc {
        CongruenceDescriptor::Identity { .. } => Ok(c == d),
        CongruenceDescriptor::Group(group) => group.contains(&upsilon_gap(c, d)?),
    }
}

impl fmt::Display for NormalSubgroupRep {
    /// `K=[...]; reps=[...]; L=[...]` with `reps` aligned to `K`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K=[")?;
        for (i, p) in self.reps.keys().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]; reps=[")?;
        for (i, r) in self.reps.values().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_list(f, r)?;
        }
        write!(f, "]; L={}", self.lattice)
    }
}

impl fmt::Display for CongruenceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceDescriptor::Identity { n } => write!(f, "cong{{kind=identity; n={n}}}"),
            CongruenceDescriptor::Group(g) => write!(f, "cong{{kind=group; n={}; {g}}}", g.dim()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::mg_related;
    use crate::universe::universe;

    fn q(s: &[i64], z: &[i64]) -> QuotientElement {
        QuotientElement::new(Permutation::from_one_line(s).unwrap(), z.to_vec()).unwrap()
    }

    fn el(s: &[i64], x: &[i64], y: &[i64]) -> IpfElement {
        IpfElement::from_parts(s, x, y).unwrap()
    }

    #[test]
    fn cyclic_closure_in_dimension_one() {
        let n = normal_closure(&[q(&[1], &[3])], 1).unwrap();
        assert_eq!(n.perm_part().count(), 1);
        assert_eq!(n.lattice().rows(), &[vec![3]]);
    }

    #[test]
    fn translation_generator_fills_z2() {
        let n = normal_closure(&[q(&[1, 2], &[1, 0])], 2).unwrap();
        assert_eq!(n.perm_part().count(), 1);
        assert_eq!(n.lattice().rows(), &[vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn swap_generator() {
        let n = normal_closure(&[q(&[2, 1], &[0, 0])], 2).unwrap();
        let k: Vec<_> = n.perm_part().map(|p| p.one_line()).collect();
        assert_eq!(k, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(n.lattice().rows(), &[vec![1, -1]]);
        assert_eq!(n.reps()[&Permutation::from_one_line(&[2, 1]).unwrap()], vec![0, 0]);
        assert!(subgroup_contains(&n, &q(&[1, 2], &[1, -1])).unwrap());
        assert!(!subgroup_contains(&n, &q(&[1, 2], &[1, 1])).unwrap());
        assert!(subgroup_contains(&n, &QuotientElement::identity(2)).unwrap());
        // conjugating by a translation stays inside
        let t = q(&[1, 2], &[5, -2]);
        let s = q(&[2, 1], &[0, 0]);
        let conj = t.inv().unwrap().mul(&s).unwrap().mul(&t).unwrap();
        assert!(n.contains(&conj).unwrap());
        n.verify().unwrap();
    }

    #[test]
    fn three_cycle_in_dimension_three() {
        let n = normal_closure(&[q(&[2, 3, 1], &[0, 0, 0])], 3).unwrap();
        // the alternating group, with the sum-zero lattice
        assert_eq!(n.perm_part().count(), 3);
        assert!(n.contains(&q(&[1, 2, 3], &[1, -1, 0])).unwrap());
        assert!(!n.contains(&q(&[1, 2, 3], &[1, 0, 0])).unwrap());
        assert!(!n.contains(&q(&[2, 1, 3], &[0, 0, 0])).unwrap());
    }

    #[test]
    fn transposition_in_dimension_three_generates_all_permutations() {
        let n = normal_closure(&[q(&[2, 1, 3], &[0, 0, 0])], 3).unwrap();
        assert_eq!(n.perm_part().count(), 6);
        for p in Permutation::all(3) {
            assert!(n.contains(&QuotientElement::new(p, vec![0, 0, 0]).unwrap()).unwrap());
        }
    }

    #[test]
    fn twisted_representative() {
        // (swap, (1,0)): squares to (id, (1,1))
        let n = normal_closure(&[q(&[2, 1], &[1, 0])], 2).unwrap();
        assert!(n.contains(&q(&[1, 2], &[1, 1])).unwrap());
        assert!(n.contains(&q(&[1, 2], &[1, -1])).unwrap());
        assert!(!n.contains(&q(&[1, 2], &[1, 0])).unwrap());
        assert!(n.contains(&q(&[2, 1], &[0, 1])).unwrap());
        assert!(!n.contains(&q(&[2, 1], &[0, 0])).unwrap());
        n.verify().unwrap();
    }

    #[test]
    fn stable_under_rerun() {
        for g in [q(&[2, 1], &[1, 0]), q(&[1, 2], &[2, 4]), q(&[2, 1], &[3, -3])] {
            let a = normal_closure(std::slice::from_ref(&g), 2).unwrap();
            let b = normal_closure(&[g], 2).unwrap();
            assert_eq!(a, b);
            let again = normal_closure(&a.generators(), 2).unwrap();
            assert_eq!(again, a);
        }
    }

    #[test]
    fn cap_and_dimension_errors() {
        assert!(matches!(
            normal_closure_with_cap(&[q(&[1, 2], &[1, 0])], 2, 1),
            Err(IpfError::CapExceeded { n: 2, cap: 1 })
        ));
        assert!(matches!(
            normal_closure(&[q(&[1], &[1])], 2),
            Err(IpfError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn descriptor_kinds() {
        let a = el(&[2, 1], &[2, 1], &[1, 3]);
        assert_eq!(
            congruence_from_pair(&a, &a).unwrap(),
            CongruenceDescriptor::Identity { n: 2 }
        );
        let b = el(&[2, 1], &[3, 2], &[2, 4]);
        let d = congruence_from_pair(&a, &b).unwrap();
        assert!(d.subgroup().unwrap().is_trivial());
    }

    #[test]
    fn identity_descriptor_relates_only_equal() {
        let d = CongruenceDescriptor::Identity { n: 1 };
        let c = el(&[1], &[2], &[3]);
        assert!(d.relates(&c, &c).unwrap());
        assert!(!d.relates(&c, &el(&[1], &[3], &[4])).unwrap());
    }

    #[test]
    fn trivial_subgroup_is_sigma_mg() {
        let a = el(&[2, 1], &[2, 1], &[1, 3]);
        let b = el(&[2, 1], &[3, 2], &[2, 4]);
        let d = congruence_from_pair(&a, &b).unwrap();
        let u = universe(2, 2);
        for c in &u {
            for e in &u {
                assert_eq!(d.relates(c, e).unwrap(), mg_related(c, e).unwrap());
            }
        }
    }

    #[test]
    fn gap_three_in_dimension_one() {
        let d = congruence_from_pair(&el(&[1], &[4], &[1]), &el(&[1], &[1], &[1])).unwrap();
        assert_eq!(d.subgroup().unwrap().lattice().rows(), &[vec![3]]);
        // gaps x − y: 6 and 0, then 4 and 0
        assert!(d.relates(&el(&[1], &[7], &[1]), &el(&[1], &[2], &[2])).unwrap());
        assert!(!d.relates(&el(&[1], &[5], &[1]), &el(&[1], &[2], &[2])).unwrap());
    }

    #[test]
    fn descriptor_text() {
        let n = normal_closure(&[q(&[2, 1], &[0, 0])], 2).unwrap();
        assert_eq!(
            CongruenceDescriptor::Group(n).to_string(),
            "cong{kind=group; n=2; K=[[1,2],[2,1]]; reps=[[0,0],[0,0]]; L=[[1,-1]]}"
        );
        assert_eq!(
            CongruenceDescriptor::Identity { n: 3 }.to_string(),
            "cong{kind=identity; n=3}"
        );
    }
}
