//! Small prime-field linear algebra: matrices over F_p, kernels, and
//! exhaustive subspace enumeration. Primes are capped at 13 so that the
//! subspace lattices stay enumerable.

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub fn check_prime(p: u64) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::BadPrime(p))
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is a small prime, Fermat is fine
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let mut m = Self::zero(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            data: vec![0; self.rows * other.cols],
        };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + self.get(i, j) * v[j]) % self.p;
                }
                acc
            })
            .collect()
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            for j in c..self.cols {
                let v = self.get(r, j) * inv % p;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c);
                    for j in c..self.cols {
                        let v = (self.get(i, j) + (p - f) * self.get(r, j)) % p;
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }
}

/// Basis of the right kernel over F_p; `cols - rank` vectors.
pub fn fp_kernel(m: &FpMatrix) -> Vec<Vec<u64>> {
    let p = m.p;
    let mut red = m.clone();
    let pivots = red.rref();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; m.cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - red.get(r, free)) % p;
        }
        basis.push(v);
    }
    basis
}

/// A subspace of F_p^d held as reduced row echelon basis rows (canonical).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FpSubspace {
    pub p: u64,
    pub ambient: usize,
    pub basis: Vec<Vec<u64>>,
}

impl FpSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis rows; membership iff the result is 0.
    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for row in &self.basis {
            let lead = row.iter().position(|&x| x != 0).unwrap();
            if v[lead] != 0 {
                let f = v[lead];
                for j in 0..self.ambient {
                    v[j] = (v[j] + (p - f) * row[j]) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

/// Number of subspaces of F_p^d (sum of Gaussian binomials), used for
/// enumeration budgets.
pub fn count_subspaces(p: u64, d: usize) -> u128 {
    let p = p as u128;
    let mut total = 0u128;
    for k in 0..=d {
        // [d choose k]_p
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= p.pow((d - i) as u32) - 1;
            den *= p.pow((k - i) as u32) - 1;
        }
        total += num / den;
    }
    total
}

/// All subspaces of F_p^d, enumerated as RREF row bases in a fixed order.
pub fn enumerate_subspaces(p: u64, d: usize) -> Vec<FpSubspace> {
    let mut out = Vec::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            // free positions: row i, column j with j > pivots[i], j not a pivot
            let mut free = Vec::new();
            for (i, &pi) in pivots.iter().enumerate() {
                for j in (pi + 1)..d {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut counter = vec![0u64; free.len()];
            loop {
                let mut basis = vec![vec![0u64; d]; k];
                for (i, &pi) in pivots.iter().enumerate() {
                    basis[i][pi] = 1;
                }
                for (idx, &(i, j)) in free.iter().enumerate() {
                    basis[i][j] = counter[idx];
                }
                out.push(FpSubspace {
                    p,
                    ambient: d,
                    basis,
                });
                // mixed-radix increment
                let mut carry = true;
                for c in counter.iter_mut() {
                    if !carry {
                        break;
                    }
                    *c += 1;
                    if *c == p {
                        *c = 0;
                    } else {
                        carry = false;
                    }
                }
                if carry {
                    break;
                }
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..=(n - k) {
        for rest in combinations(n - first - 1, k - 1) {
            let mut c = vec![first];
            c.extend(rest.iter().map(|r| first + 1 + r));
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_sizes() {
        let z = FpMatrix::zero(5, 2, 2).unwrap();
        assert_eq!(fp_kernel(&z).len(), 2);
        let id = FpMatrix::identity(5, 3).unwrap();
        assert!(fp_kernel(&id).is_empty());
    }

    #[test]
    fn kernel_matches_exhaustive_scan() {
        // brute-force scan over all 125 vectors of F_5^3 as the oracle
        let mut state = 3u64;
        let step = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (*s >> 33) % 5
        };
        for _ in 0..8 {
            let mut m = FpMatrix::zero(5, 3, 3).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    m.set(i, j, step(&mut state));
                }
            }
            let mut kernel_count = 0usize;
            for a in 0..5u64 {
                for b in 0..5u64 {
                    for c in 0..5u64 {
                        if m.mul_vec(&[a, b, c]).iter().all(|&x| x == 0) {
                            kernel_count += 1;
                        }
                    }
                }
            }
            let basis = fp_kernel(&m);
            assert_eq!(5usize.pow(basis.len() as u32), kernel_count);
            assert_eq!(basis.len(), 3 - m.rank());
            for v in &basis {
                assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn subspace_enumeration_counts() {
        // 1 + (p+1) + 1 subspaces of F_p^2
        for p in [2u64, 3, 5] {
            let subs = enumerate_subspaces(p, 2);
            assert_eq!(subs.len() as u128, count_subspaces(p, 2));
            assert_eq!(subs.len() as u64, p + 3);
        }
        assert_eq!(count_subspaces(5, 4), 1120);
        // canonical forms are pairwise distinct
        let mut subs = enumerate_subspaces(3, 3);
        let n = subs.len();
        subs.sort();
        subs.dedup();
        assert_eq!(subs.len(), n);
    }

    #[test]
    fn membership() {
        let subs = enumerate_subspaces(5, 3);
        for s in subs.iter().filter(|s| s.dim() == 1) {
            let v = &s.basis[0];
            let double: Vec<u64> = v.iter().map(|&x| x * 2 % 5).collect();
            assert!(s.contains(&double));
        }
    }

    #[test]
    fn prime_guard() {
        assert!(check_prime(17).is_err());
        assert!(check_prime(4).is_err());
        assert!(check_prime(13).is_ok());
    }
}
