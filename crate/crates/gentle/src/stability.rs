//! King stability certificates over a small prime field.
//!
//! A module `M` is theta-semi-stable when `theta(dim M) = 0` and
//! `theta(dim M') <= 0` for all submodules, theta-stable when the inequality
//! is strict for proper nonzero submodules. Submodule enumeration over the
//! rationals is impossible, so a rational module is shadowed over `F_p`
//! (with the parameter specializations nonzero mod p) and the finitely many
//! subspace tuples closed under the arrow maps are enumerated exhaustively.
//! Certificates are labeled by the prime and specialization used; they are
//! exact statements over `F_p`, not characteristic-zero proofs.

use crate::error::{Error, Result};
use crate::exact::fp::{check_prime, count_subspaces, enumerate_subspaces, FpMatrix, FpSubspace};
use crate::exact::Rational;
use crate::quiver::{weight_pairing, DimVec, GentleAlgebra, Weight};
use crate::updown::QRep;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeSet;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A rational module reduced entry-wise mod p.
#[derive(Debug, Clone)]
pub struct FpRepresentation {
    pub p: u64,
    pub dims: DimVec,
    pub mats: Vec<FpMatrix>,
}

fn reduce_entry(x: &Rational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::PrimeDividesDenominator {
            value: crate::exact::fmt_rational(x),
            prime: p,
        });
    }
    let num = x.numer().mod_floor(&pb);
    let num = num.to_u64().expect("residue fits");
    let den = den.to_u64().expect("residue fits");
    // den^(p-2) mod p
    let mut inv = 1u64;
    let mut base = den % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    Ok(num * inv % p)
}

pub fn reduce_mod_p(a: &GentleAlgebra, m: &QRep, p: u64) -> Result<FpRepresentation> {
    check_prime(p)?;
    let mut mats = Vec::with_capacity(m.mats.len());
    for q in &m.mats {
        let mut f = FpMatrix::zero(p, q.rows, q.cols)?;
        for i in 0..q.rows {
            for j in 0..q.cols {
                f.set(i, j, reduce_entry(q.get(i, j), p)?);
            }
        }
        mats.push(f);
    }
    let rep = FpRepresentation {
        p,
        dims: m.dims.clone(),
        mats,
    };
    for &(x, y) in a.relation_pairs() {
        if !rep.mats[y].mul(&rep.mats[x]).is_zero() {
            return Err(Error::Other(
                "relation product nonzero after reduction".to_string(),
            ));
        }
    }
    Ok(rep)
}

/// All dimension vectors of submodules: tuples of subspaces
/// `U_i <= F_p^(d(i))` with `M(a) U_(ta) <= U_(ha)` for every arrow,
/// enumerated exhaustively with per-vertex pruning. Refuses (never samples)
/// when the subspace-tuple count exceeds the budget.
pub fn submodule_dimvectors(
    a: &GentleAlgebra,
    m: &FpRepresentation,
    budget: u128,
) -> Result<BTreeSet<DimVec>> {
    let p = m.p;
    let mut needed: u128 = 1;
    for &d in &m.dims {
        needed = needed.saturating_mul(count_subspaces(p, d));
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
    }
    let nv = a.n_vertices();
    let subspaces: Vec<Vec<FpSubspace>> = (0..nv)
        .map(|i| enumerate_subspaces(p, m.dims[i]))
        .collect();
    // check an arrow as soon as both endpoints are chosen
    let image_ok = |mat: &FpMatrix, u: &FpSubspace, w: &FpSubspace| -> bool {
        u.basis.iter().all(|row| w.contains(&mat.mul_vec(row)))
    };
    let mut found: BTreeSet<DimVec> = BTreeSet::new();
    let mut choice: Vec<usize> = Vec::with_capacity(nv);
    fn rec(
        a: &GentleAlgebra,
        m: &FpRepresentation,
        subspaces: &[Vec<FpSubspace>],
        image_ok: &dyn Fn(&FpMatrix, &FpSubspace, &FpSubspace) -> bool,
        choice: &mut Vec<usize>,
        found: &mut BTreeSet<DimVec>,
    ) {
        let v = choice.len();
        if v == subspaces.len() {
            found.insert(
                choice
                    .iter()
                    .enumerate()
                    .map(|(i, &s)| subspaces[i][s].dim())
                    .collect(),
            );
            return;
        }
        'candidates: for s in 0..subspaces[v].len() {
            for (ai, ar) in a.quiver().arrows().iter().enumerate() {
                let (t, h) = (ar.tail, ar.head);
                if t == v && h < v {
                    if !image_ok(&m.mats[ai], &subspaces[v][s], &subspaces[h][choice[h]]) {
                        continue 'candidates;
                    }
                } else if h == v && t < v {
                    if !image_ok(&m.mats[ai], &subspaces[t][choice[t]], &subspaces[v][s]) {
                        continue 'candidates;
                    }
                }
            }
            choice.push(s);
            rec(a, m, subspaces, image_ok, choice, found);
            choice.pop();
        }
    }
    rec(a, m, &subspaces, &image_ok, &mut choice, &mut found);
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    SemistableNotStable,
    Unstable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Stable => write!(f, "stable"),
            Verdict::SemistableNotStable => write!(f, "semistable-not-stable"),
            Verdict::Unstable => write!(f, "unstable"),
        }
    }
}

/// The verdict together with the data needed to re-check it: the realized
/// submodule dimension vectors and, when the verdict is not `Stable`, a
/// witness vector attaining the violated inequality.
#[derive(Debug, Clone)]
pub struct StabilityCertificate {
    pub verdict: Verdict,
    pub witness: Option<DimVec>,
    pub realized: BTreeSet<DimVec>,
    pub prime: u64,
    pub theta: Weight,
    pub dims: DimVec,
}

impl StabilityCertificate {
    /// Re-derives the verdict from the certificate's own fields.
    pub fn revalidate(&self) -> bool {
        let zero = vec![0usize; self.dims.len()];
        if !self.realized.contains(&zero) || !self.realized.contains(&self.dims) {
            return false;
        }
        let proper = |v: &DimVec| *v != zero && *v != self.dims;
        match self.verdict {
            Verdict::Stable => {
                self.witness.is_none()
                    && self
                        .realized
                        .iter()
                        .filter(|v| proper(v))
                        .all(|v| weight_pairing(&self.theta, v) < 0)
            }
            Verdict::SemistableNotStable => match &self.witness {
                Some(w) => {
                    proper(w)
                        && self.realized.contains(w)
                        && weight_pairing(&self.theta, w) == 0
                        && self
                            .realized
                            .iter()
                            .filter(|v| proper(v))
                            .all(|v| weight_pairing(&self.theta, v) <= 0)
                }
                None => false,
            },
            Verdict::Unstable => match &self.witness {
                Some(w) => {
                    proper(w)
                        && self.realized.contains(w)
                        && weight_pairing(&self.theta, w) > 0
                }
                None => false,
            },
        }
    }
}

/// Evaluates theta on every realized submodule dimension vector and issues
/// the verdict per King's definitions. Requires `theta(dim M) = 0`.
pub fn check_stability(
    a: &GentleAlgebra,
    m: &FpRepresentation,
    theta: &Weight,
    budget: u128,
) -> Result<StabilityCertificate> {
    let pairing = weight_pairing(theta, &m.dims);
    if pairing != 0 {
        return Err(Error::WeightNotZero(pairing));
    }
    let realized = submodule_dimvectors(a, m, budget)?;
    let zero = vec![0usize; m.dims.len()];
    let proper: Vec<&DimVec> = realized
        .iter()
        .filter(|v| **v != zero && **v != m.dims)
        .collect();
    // deterministic witness: the lexicographically smallest violating vector
    let positive = proper
        .iter()
        .find(|v| weight_pairing(theta, v) > 0)
        .map(|v| (*v).clone());
    if let Some(w) = positive {
        return Ok(StabilityCertificate {
            verdict: Verdict::Unstable,
            witness: Some(w),
            realized,
            prime: m.p,
            theta: theta.clone(),
            dims: m.dims.clone(),
        });
    }
    let null = proper
        .iter()
        .find(|v| weight_pairing(theta, v) == 0)
        .map(|v| (*v).clone());
    let (verdict, witness) = match null {
        Some(w) => (Verdict::SemistableNotStable, Some(w)),
        None => (Verdict::Stable, None),
    };
    Ok(StabilityCertificate {
        verdict,
        witness,
        realized,
        prime: m.p,
        theta: theta.clone(),
        dims: m.dims.clone(),
    })
}
