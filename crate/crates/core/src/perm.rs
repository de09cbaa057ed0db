//! Permutations of coordinate positions, acting on the right.
//!
//! A permutation is stored in one-line form: `image[i]` is the image of
//! position `i`. Products are read left to right, so `(i)(στ) = ((i)σ)τ`,
//! and the action on a vector moves the entry at position `i` to position
//! `(i)σ`, i.e. component `j` of `(z)σ` is `z[(j)σ⁻¹]`.

use std::fmt;

use crate::error::{ensure_dim, IpfError, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// zero-based images
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-line form with 1-based values,
    /// e.g. `[2, 1]` for the transposition of two coordinates.
    pub fn from_one_line(one_line: &[i64]) -> Result<Self> {
        let n = one_line.len();
        let not_perm = || IpfError::NotAPermutation {
            n,
            image: one_line.to_vec(),
        };
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in one_line {
            if v < 1 || v as u64 > n as u64 {
                return Err(not_perm());
            }
            let v = (v - 1) as usize;
            if std::mem::replace(&mut seen[v], true) {
                return Err(not_perm());
            }
            image.push(v);
        }
        Ok(Permutation { image })
    }

    /// The one-line form with 1-based values.
    pub fn one_line(&self) -> Vec<i64> {
        self.image.iter().map(|&v| v as i64 + 1).collect()
    }

    /// Transposition of the zero-based positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Zero-based image of the zero-based position `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        ensure_dim(self.len(), other.len())?;
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        }
    }

    /// Right action on an integer vector: component `j` of the result is
    /// `z[(j)σ⁻¹]`.
    pub fn act(&self, z: &[i64]) -> Result<Vec<i64>> {
        ensure_dim(self.len(), z.len())?;
        Ok(self.act_unchecked(z))
    }

    pub(crate) fn act_unchecked(&self, z: &[i64]) -> Vec<i64> {
        let mut out = vec![0; z.len()];
        for (i, &v) in self.image.iter().enumerate() {
            out[v] = z[i];
        }
        out
    }

    /// All `n!` permutations in lexicographic order of their one-line form.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation {
            image: current.clone(),
        }];
        while next_lex(&mut current) {
            out.push(Permutation {
                image: current.clone(),
            });
        }
        out
    }

    /// Adjacent transpositions `(i i+1)`, which generate the full group.
    pub fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
        (0..n.saturating_sub(1))
            .map(|i| Self::transposition(n, i, i + 1))
            .collect()
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `perm_apply`: the coordinate action `(z)σ` on any integer vector.
pub fn perm_apply(sigma: &Permutation, z: &[i64]) -> Result<Vec<i64>> {
    sigma.act(z)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.one_line())
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    f.write_str("[")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

// Checked componentwise arithmetic shared by the element and quotient code.

pub(crate) fn vadd(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(IpfError::Overflow))
        .collect()
}

pub(crate) fn vsub(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(IpfError::Overflow))
        .collect()
}

pub(crate) fn vmax(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn vneg(a: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .map(|x| x.checked_neg().ok_or(IpfError::Overflow))
        .collect()
}
