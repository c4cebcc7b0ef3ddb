//! Matrices of multivariate polynomials.
//!
//! The determinant uses fraction-free Bareiss elimination: over an integral
//! domain every division in the Bareiss recurrence is exact, so the entries
//! never leave the polynomial ring. Small matrices go through cofactor
//! expansion instead.

use super::poly::{MultiPoly, PolyRing};
use super::qmat::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    ring: PolyRing,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            ring: ring.clone(),
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        assert!(v.ring() == &self.ring, "entry from a different variable context");
        self.data[i * self.cols + j] = v;
    }

    pub fn from_fn(
        ring: &PolyRing,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Self {
        let mut m = Self::zero(ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn constant(ring: &PolyRing, q: &QMatrix) -> Self {
        Self::from_fn(ring, q.rows, q.cols, |i, j| ring.constant(q.get(i, j).clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.get(k, j).is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&self.get(i, k).mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn scale(&self, c: &MultiPoly) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.get(i, j).mul(c)
        })
    }

    /// Re-expresses all entries in another ring (variables matched by name).
    pub fn cast(&self, ring: &PolyRing) -> Result<PolyMatrix> {
        let mut out = PolyMatrix::zero(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).cast(ring)?);
            }
        }
        Ok(out)
    }

    /// Specializes every entry at a name -> rational assignment.
    pub fn specialize(&self, assign: &BTreeMap<String, Rational>) -> Result<QMatrix> {
        let mut values = Vec::with_capacity(self.ring.n_vars());
        for v in self.ring.vars() {
            match assign.get(v) {
                Some(x) => values.push(x.clone()),
                None => return Err(Error::Specialization(v.clone())),
            }
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).eval(&values)
        }))
    }

    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        assert!(self.ring == other.ring);
        let mut out = PolyMatrix::zero(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }
}

/// Exact determinant. Cofactor expansion for dimension <= 4, fraction-free
/// Bareiss elimination above that. The 0x0 determinant is 1.
pub fn poly_det(m: &PolyMatrix) -> Result<MultiPoly> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    if m.rows <= 4 {
        Ok(det_cofactor(m))
    } else {
        Ok(det_bareiss(m))
    }
}

fn det_cofactor(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows;
    if n == 0 {
        return m.ring().one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = m.ring().zero();
    for i in 0..n {
        if m.get(i, 0).is_zero() {
            continue;
        }
        let minor = PolyMatrix::from_fn(m.ring(), n - 1, n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            m.get(rr, c + 1).clone()
        });
        let term = m.get(i, 0).mul(&det_cofactor(&minor));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn det_bareiss(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows;
    let mut a = m.clone();
    let mut prev = m.ring().one();
    let mut sign = false;
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(pr) = ((k + 1)..n).find(|&i| !a.get(i, k).is_zero()) else {
                return m.ring().zero();
            };
            for j in 0..n {
                let tmp = a.get(k, j).clone();
                a.set(k, j, a.get(pr, j).clone());
                a.set(pr, j, tmp);
            }
            sign = !sign;
        }
        let pivot = a.get(k, k).clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = a.get(i, j).mul(&pivot).sub(&a.get(i, k).mul(a.get(k, j)));
                let q = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
                a.set(i, j, q);
            }
        }
        for i in (k + 1)..n {
            a.set(i, k, m.ring().zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Rank of the matrix after specializing all variables to rationals.
pub fn poly_rank_at(m: &PolyMatrix, assign: &BTreeMap<String, Rational>) -> Result<usize> {
    Ok(m.specialize(assign)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};
    use num_traits::Zero;

    /// Test-side oracle: plain cofactor expansion along the first row,
    /// independent of the production `poly_det` path.
    fn det_oracle(m: &PolyMatrix) -> MultiPoly {
        let n = m.rows;
        if n == 0 {
            return m.ring().one();
        }
        let mut acc = m.ring().zero();
        for j in 0..n {
            let minor = PolyMatrix::from_fn(m.ring(), n - 1, n - 1, |r, c| {
                let cc = if c < j { c } else { c + 1 };
                m.get(r + 1, cc).clone()
            });
            let term = m.get(0, j).mul(&det_oracle(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Independent rank oracle: largest k with a nonsingular k x k minor.
    fn rank_oracle(q: &QMatrix) -> usize {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n - first - 1, k - 1) {
                    let mut c = vec![first];
                    for r in rest.drain(..) {
                        c.push(first + 1 + r);
                    }
                    out.push(c);
                }
            }
            out
        }
        let maxk = q.rows.min(q.cols);
        for k in (1..=maxk).rev() {
            for rs in combos(q.rows, k) {
                for cs in combos(q.cols, k) {
                    let sub = QMatrix::from_fn(k, k, |i, j| q.get(rs[i], cs[j]).clone());
                    if !sub.det().is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn rng_poly(ring: &PolyRing, state: &mut u64) -> MultiPoly {
        // degree <= 1 entries with small integer coefficients
        let mut next = || {
            *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*state >> 33) % 7) as i64 - 3
        };
        let mut p = ring.constant(rat(next()));
        for v in ring.vars() {
            p = p.add(&ring.var(v).scale(&rat(next())));
        }
        p
    }

    #[test]
    fn empty_and_two_by_two() {
        let ring = PolyRing::new(["lambda", "mu"]);
        let empty = PolyMatrix::zero(&ring, 0, 0);
        assert_eq!(poly_det(&empty).unwrap(), ring.one());
        let mut m = PolyMatrix::zero(&ring, 2, 2);
        m.set(0, 0, ring.var("lambda"));
        m.set(0, 1, ring.var("mu"));
        m.set(1, 0, ring.one());
        m.set(1, 1, ring.one());
        assert_eq!(
            poly_det(&m).unwrap(),
            ring.var("lambda").sub(&ring.var("mu"))
        );
        let ns = PolyMatrix::zero(&ring, 2, 3);
        assert!(poly_det(&ns).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let ring = PolyRing::new(["lambda", "mu"]);
        let mut state = 17u64;
        for _ in 0..6 {
            let m = PolyMatrix::from_fn(&ring, 5, 5, |_, _| rng_poly(&ring, &mut state));
            assert_eq!(det_bareiss(&m), det_oracle(&m));
        }
    }

    #[test]
    fn det_commutes_with_specialization() {
        // evaluate(poly_det(m), sigma) == det(specialize(m, sigma)),
        // >= 100 random instances, dims <= 5, entry degree <= 2
        let ring = PolyRing::new(["lambda", "mu"]);
        let mut state = 5u64;
        let step = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (*s >> 33) as i64
        };
        for trial in 0..100 {
            let n = (trial % 5) + 1;
            let m = PolyMatrix::from_fn(&ring, n, n, |_, _| {
                let a = rng_poly(&ring, &mut state);
                let b = rng_poly(&ring, &mut state);
                a.mul(&b) // degree <= 2
            });
            let d = poly_det(&m).unwrap();
            let mut assign = BTreeMap::new();
            assign.insert("lambda".to_string(), ratio(step(&mut state) % 9 + 10, 3));
            assign.insert("mu".to_string(), ratio(step(&mut state) % 9 - 20, 7));
            let lhs = d.eval_named(&assign).unwrap();
            let rhs = m.specialize(&assign).unwrap().det();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn det_is_multiplicative_on_block_diagonals() {
        let ring = PolyRing::new(["lambda", "mu"]);
        let mut state = 99u64;
        for _ in 0..10 {
            let a = PolyMatrix::from_fn(&ring, 2, 2, |_, _| rng_poly(&ring, &mut state));
            let b = PolyMatrix::from_fn(&ring, 3, 3, |_, _| rng_poly(&ring, &mut state));
            let s = a.direct_sum(&b);
            assert_eq!(
                poly_det(&s).unwrap(),
                poly_det(&a).unwrap().mul(&poly_det(&b).unwrap())
            );
        }
    }

    #[test]
    fn rank_at_specialization() {
        let ring = PolyRing::new(["lambda"]);
        let id = PolyMatrix::identity(&ring, 3);
        let mut assign = BTreeMap::new();
        assign.insert("lambda".to_string(), rat(5));
        assert_eq!(poly_rank_at(&id, &assign).unwrap(), 3);

        let mut l = PolyMatrix::zero(&ring, 1, 1);
        l.set(0, 0, ring.var("lambda"));
        let mut zero_assign = BTreeMap::new();
        zero_assign.insert("lambda".to_string(), rat(0));
        assert_eq!(poly_rank_at(&l, &zero_assign).unwrap(), 0);
        assert!(poly_rank_at(&l, &BTreeMap::new()).is_err());
    }

    #[test]
    fn rank_matches_minor_oracle() {
        let mut state = 23u64;
        let step = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*s >> 33) % 5) as i64 - 2
        };
        for _ in 0..10 {
            let q = QMatrix::from_fn(4, 6, |_, _| rat(step(&mut state)));
            assert_eq!(q.rank(), rank_oracle(&q));
        }
    }
}
