//! Integer lattices in row-style Hermite normal form.

use std::fmt;

use crate::error::{ensure_dim, IpfError, Result};

/// Entries are kept below this magnitude; anything larger is an overflow.
pub const ENTRY_CAP: i64 = 1 << 62;

/// Sublattice of `ℤⁿ` given by its HNF basis: each pivot lies strictly to
/// the right of the one above, pivots are positive, and entries above a
/// pivot are reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    n: usize,
    rows: Vec<Vec<i64>>,
}

fn capped(v: i64) -> Result<i64> {
    if v.unsigned_abs() >= ENTRY_CAP as u64 {
        Err(IpfError::Overflow)
    } else {
        Ok(v)
    }
}

/// `row -= q * pivot_row`, checked.
fn sub_multiple(row: &mut [i64], q: i64, pivot_row: &[i64]) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for (r, p) in row.iter_mut().zip(pivot_row) {
        let prod = q.checked_mul(*p).ok_or(IpfError::Overflow)?;
        *r = capped(r.checked_sub(prod).ok_or(IpfError::Overflow)?)?;
    }
    Ok(())
}

impl LatticeBasis {
    pub fn zero(n: usize) -> Self {
        LatticeBasis { n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn pivot(row: &[i64]) -> usize {
        row.iter().position(|&c| c != 0).expect("basis rows are nonzero")
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[i64]) -> Result<Vec<i64>> {
        ensure_dim(self.n, v.len())?;
        let mut out = v.to_vec();
        for row in &self.rows {
            let c = Self::pivot(row);
            let q = out[c].div_euclid(row[c]);
            sub_multiple(&mut out, q, row)?;
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&c| c == 0))
    }

    /// Lattice generated by these rows together with `extra`.
    pub fn extend<'a>(&self, extra: impl IntoIterator<Item = &'a Vec<i64>>) -> Result<Self> {
        let mut all = self.rows.clone();
        all.extend(extra.into_iter().cloned());
        hnf_basis(self.n, &all)
    }

    /// True iff every vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &LatticeBasis) -> Result<bool> {
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// HNF basis of the lattice generated by `vectors` in `ℤⁿ`.
pub fn hnf_basis(n: usize, vectors: &[Vec<i64>]) -> Result<LatticeBasis> {
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        ensure_dim(n, v.len())?;
        for &c in v {
            capped(c)?;
        }
        if v.iter().any(|&c| c != 0) {
            rows.push(v.clone());
        }
    }

    let mut top = 0;
    for col in 0..n {
        if top == rows.len() {
            break;
        }
        // Euclid on the column until a single nonzero entry remains.
        loop {
            let best = (top..rows.len())
                .filter(|&r| rows[r][col] != 0)
                .min_by_key(|&r| rows[r][col].unsigned_abs());
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[top][col]);
                    let pivot_row = rows[top].clone();
                    sub_multiple(&mut rows[r], q, &pivot_row)?;
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[top][col] == 0 {
            continue;
        }
        if rows[top][col] < 0 {
            for c in rows[top].iter_mut() {
                *c = -*c;
            }
        }
        let pivot_row = rows[top].clone();
        for row in rows.iter_mut().take(top) {
            let q = row[col].div_euclid(pivot_row[col]);
            sub_multiple(row, q, &pivot_row)?;
        }
        top += 1;
        rows.retain(|r| r.iter().any(|&c| c != 0));
    }
    rows.truncate(top);
    Ok(LatticeBasis { n, rows })
}

pub fn lattice_contains(lattice: &LatticeBasis, v: &[i64]) -> Result<bool> {
    lattice.contains(v)
}

impl fmt::Display for LatticeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            crate::perm::write_list(f, row)?;
        }
        f.write_str("]")
    }
}
