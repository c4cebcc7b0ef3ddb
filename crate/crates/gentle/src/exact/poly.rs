//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector under graded
//! lexicographic order (total degree first, then exponents left to right),
//! with the variable order fixed at ring construction. That makes printing
//! and leading-term extraction deterministic, which the CLI and the test
//! fixtures rely on.

use super::rational::{fmt_rational, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector; `Ord` is graded lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Component-wise quotient, if `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered list of named indeterminates shared by a family of polynomials.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<Vec<String>>);

impl PolyRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        PolyRing(Arc::new(vars.into_iter().map(Into::into).collect()))
    }

    /// The ring of constants.
    pub fn constants() -> Self {
        PolyRing(Arc::new(Vec::new()))
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Rational) -> MultiPoly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; self.n_vars()]), c);
        }
        p
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Rational::one())
    }

    /// The variable `name` as a polynomial.
    pub fn var(&self, name: &str) -> MultiPoly {
        let i = self
            .var_index(name)
            .unwrap_or_else(|| panic!("variable {name} not in ring"));
        let mut exps = vec![0; self.n_vars()];
        exps[i] = 1;
        let mut p = self.zero();
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for PolyRing {}

/// Sparse multivariate polynomial; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// The constant coefficient (the whole value when `is_constant`).
    pub fn constant_part(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_constant())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert!(
            self.ring == other.ring,
            "polynomials from different variable contexts"
        );
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = self.ring.zero();
        if c.is_zero() {
            return out;
        }
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    /// Exact division: returns `self / g` when `g` divides exactly, else
    /// `None`. Complete for divisibility testing because the leading term of
    /// a product is the product of leading terms over an integral domain.
    pub fn exact_div(&self, g: &MultiPoly) -> Option<MultiPoly> {
        self.assert_same_ring(g);
        assert!(!g.is_zero(), "division by zero polynomial");
        let (gm, gc) = g.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quot = self.ring.zero();
        let mut rem = self.clone();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&gm)?;
            let qc = rc / &gc;
            let mut t = self.ring.zero();
            t.terms.insert(qm, qc);
            rem = rem.sub(&t.mul(g));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// How many times `g` divides `self`; also returns the cofactor.
    pub fn divide_out(&self, g: &MultiPoly) -> (u32, MultiPoly) {
        let mut n = 0;
        let mut f = self.clone();
        if f.is_zero() {
            return (0, f);
        }
        while let Some(q) = f.exact_div(g) {
            f = q;
            n += 1;
            if f.is_constant() {
                break;
            }
        }
        (n, f)
    }

    /// Evaluates at a full assignment, one rational per ring variable.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ring.n_vars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-expresses the polynomial in another ring, matching variables by
    /// name; fails if a used variable is missing there.
    pub fn cast(&self, ring: &PolyRing) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.ring.n_vars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            match ring.var_index(v) {
                Some(j) => map.push(Some(j)),
                None => {
                    // only an error if the variable actually occurs
                    if self.terms.keys().any(|m| m.0[i] > 0) {
                        return Err(Error::Specialization(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; ring.n_vars()];
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[map[i].unwrap()] = e;
                }
            }
            out.insert_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Evaluation through a name -> value map; errors on a missing variable.
    pub fn eval_named(&self, assign: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.ring.n_vars());
        for v in self.ring.vars() {
            match assign.get(v) {
                Some(x) => values.push(x.clone()),
                None => return Err(Error::Specialization(v.clone())),
            }
        }
        Ok(self.eval(&values))
    }
}

impl fmt::Display for MultiPoly {
    /// Graded-lex descending, explicit `*` and `^`, e.g. `2*lambda^2*mu - 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                factors.push(fmt_rational(&mag));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars()[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    fn lm_ring() -> PolyRing {
        PolyRing::new(["lambda", "mu"])
    }

    #[test]
    fn term_order_is_graded_lex() {
        let r = lm_ring();
        let l = r.var("lambda");
        let m = r.var("mu");
        // lambda^2 > lambda*mu > mu^2 > lambda > mu > 1
        let p = l
            .mul(&l)
            .add(&l.mul(&m))
            .add(&m.mul(&m))
            .add(&l)
            .add(&m)
            .add(&r.one());
        assert_eq!(
            p.to_string(),
            "lambda^2 + lambda*mu + mu^2 + lambda + mu + 1"
        );
    }

    #[test]
    fn arithmetic_and_display() {
        let r = lm_ring();
        let l = r.var("lambda");
        let m = r.var("mu");
        let p = l.sub(&m);
        assert_eq!(p.to_string(), "lambda - mu");
        let q = p.mul(&p);
        assert_eq!(q.to_string(), "lambda^2 - 2*lambda*mu + mu^2");
        assert!(p.sub(&p).is_zero());
        let c = r.constant(ratio(-1, 3));
        assert_eq!(c.scale(&rat(-3)).to_string(), "1");
    }

    #[test]
    fn exact_division() {
        let r = lm_ring();
        let l = r.var("lambda");
        let m = r.var("mu");
        let f = l.sub(&m).mul(&l).mul(&m).mul(&l); // lambda^2 * mu * (lambda - mu)
        let (pl, rest) = f.divide_out(&l);
        assert_eq!(pl, 2);
        let (pm, rest) = rest.divide_out(&m);
        assert_eq!(pm, 1);
        let (pd, unit) = rest.divide_out(&l.sub(&m));
        assert_eq!(pd, 1);
        assert!(unit.is_constant());
        assert_eq!(unit.constant_part(), rat(1));
        // non-divisibility is reported, not mangled
        assert!(l.add(&m).exact_div(&l.sub(&m)).is_none());
    }

    #[test]
    fn evaluation() {
        let r = lm_ring();
        let p = r.var("lambda").mul(&r.var("mu")).add(&r.constant(rat(1)));
        assert_eq!(p.eval(&[ratio(1, 2), rat(4)]), rat(3));
        let mut named = BTreeMap::new();
        named.insert("lambda".to_string(), rat(2));
        assert!(p.eval_named(&named).is_err()); // mu missing
    }
}
