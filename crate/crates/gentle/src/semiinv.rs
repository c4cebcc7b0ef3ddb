//! Generalized Schofield semi-invariants.
//!
//! For a module `X` with minimal presentation `P1 --F--> P0 -> X -> 0` and a
//! module `M` with `theta^X(dim M) = 0`, the map `Hom(F, M)` is square and
//! `cbar^X(M) = det Hom(F, M)` is a semi-invariant of weight `theta^X`. For
//! an indecomposable regular pair, the symbolic determinant against the same
//! band at a second parameter factors as
//! `unit * lambda^p * mu^l * (lambda - mu)`; over a full regular component
//! the determinant against a direct sum of band modules factors into
//! per-copy linear factors and parameter monomials, which separates generic
//! modules and yields the transcendence basis of ratios.
//!
//! Slot order is fixed (sinks and sources sorted by vertex then level), so
//! determinants are computed to a fixed unit; only ratios and vanishing loci
//! are contractual.

use crate::error::{Error, Result};
use crate::exact::{poly_det, MultiPoly, PolyMatrix, PolyRing, Rational};
use crate::homalg::{band_presentation, ProjectivePresentation};
use crate::quiver::{GentleAlgebra, Weight};
use crate::updown::{
    canonical_basepoints, classify_components, updown_graph, updown_module, ComponentKind,
    DecompEntry, GenericDecomposition, GraphComponent, LambdaValue, Representation, SignFunction,
};
use num_traits::Zero;

/// The weight of a presentation: multiplicities of each projective in `P0`
/// minus those in `P1`.
#[derive(Debug, Clone)]
pub struct SchofieldWeight {
    pub theta: Weight,
    pub p0_mult: Vec<usize>,
    pub p1_mult: Vec<usize>,
}

pub fn weight_of(a: &GentleAlgebra, pres: &ProjectivePresentation) -> SchofieldWeight {
    let n = a.n_vertices();
    let mut p0_mult = vec![0usize; n];
    let mut p1_mult = vec![0usize; n];
    for &x in &pres.p0 {
        p0_mult[x] += 1;
    }
    for &x in &pres.p1 {
        p1_mult[x] += 1;
    }
    SchofieldWeight {
        theta: pres.weight(n),
        p0_mult,
        p1_mult,
    }
}

/// The value of a semi-invariant: a polynomial in the band parameters.
pub type SemiInvariantValue = MultiPoly;

/// Assembles `Hom(F, M)` and returns its determinant. The block from the
/// `P0` slot at vertex `u` to the `P1` slot at vertex `s` is the sum of
/// `coeff * M(path)` over the entry's path terms; symbolic entries are
/// allowed. Errors when the matrix is not square, i.e. when
/// `theta^X(dim M) != 0`.
pub fn schofield_si(
    a: &GentleAlgebra,
    pres: &ProjectivePresentation,
    m: &Representation,
) -> Result<SemiInvariantValue> {
    let _ = a;
    // work in the union of both variable contexts
    let mut vars: Vec<String> = pres.ring.vars().to_vec();
    for v in m.ring().vars() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    let ring = PolyRing::new(vars);
    let pres = pres.cast_ring(&ring)?;
    let m = m.cast(&ring)?;

    let rows: usize = pres.p1.iter().map(|&v| m.dims[v]).sum();
    let cols: usize = pres.p0.iter().map(|&v| m.dims[v]).sum();
    if rows != cols {
        return Err(Error::WeightNotZero(cols as i64 - rows as i64));
    }
    let mut h = PolyMatrix::zero(&ring, rows, cols);
    let mut row_offset = 0;
    for (s, &sv) in pres.p1.iter().enumerate() {
        let mut col_offset = 0;
        for (u, &uv) in pres.p0.iter().enumerate() {
            let mut block = PolyMatrix::zero(&ring, m.dims[sv], m.dims[uv]);
            for (coeff, path) in &pres.entries[u][s] {
                let action = m.path_matrix(path, uv);
                block = block.add(&action.scale(coeff));
            }
            for i in 0..block.rows {
                for j in 0..block.cols {
                    h.set(row_offset + i, col_offset + j, block.get(i, j).clone());
                }
            }
            col_offset += m.dims[uv];
        }
        row_offset += m.dims[sv];
    }
    poly_det(&h)
}

/// The closed-form exponents of an indecomposable regular pair: the symbolic
/// determinant of the band against itself at a second parameter factors by
/// exact trial division as `unit * lambda^p * mu^l * (lambda - mu)`.
#[derive(Debug, Clone)]
pub struct ExponentPair {
    pub p: u32,
    pub l: u32,
    /// Canonical word of the band the exponents belong to.
    pub word: String,
    /// The constant left after dividing out all factors.
    pub unit: Rational,
    /// The full symbolic determinant in `lambda`, `mu`.
    pub value: SemiInvariantValue,
}

/// Builds the presentation of the band at `lambda` and its generic module at
/// `mu`, both symbolic, and factors the determinant. A shape violation (the
/// closed formula guarantees none) is a hard error.
pub fn band_exponents(a: &GentleAlgebra, d: &[usize], r: &[usize]) -> Result<ExponentPair> {
    let eps = SignFunction::default_for(a);
    let g = updown_graph(a, &d.to_vec(), &r.to_vec(), &eps)?;
    let comps = classify_components(a, &g);
    if comps.len() != 1 || comps[0].kind != ComponentKind::Band {
        return Err(Error::NotRegular(
            "band exponents need an indecomposable regular pair (one band)".to_string(),
        ));
    }
    let word = comps[0].word.render(a);
    let bands: Vec<&GraphComponent> = comps.iter().collect();
    let theta = canonical_basepoints(&g, &bands);
    let pres = band_presentation(
        a,
        &d.to_vec(),
        &r.to_vec(),
        &eps,
        &theta,
        &[LambdaValue::Var("lambda".to_string())],
    )?;
    let module = updown_module(
        a,
        &g,
        &eps,
        &comps,
        &theta,
        &[LambdaValue::Var("mu".to_string())],
    )?;
    let det = schofield_si(a, &pres, &module)?;
    if det.is_zero() {
        return Err(Error::ShapeViolation(
            "symbolic determinant vanished identically".to_string(),
        ));
    }
    let ring = det.ring().clone();
    let lambda = ring.var("lambda");
    let mu = ring.var("mu");
    let (p, rest) = det.divide_out(&lambda);
    let (l, rest) = rest.divide_out(&mu);
    let (lin, unit) = rest.divide_out(&lambda.sub(&mu));
    if lin != 1 || !unit.is_constant() || unit.is_zero() {
        return Err(Error::ShapeViolation(format!(
            "determinant is not unit * lambda^p * mu^l * (lambda - mu): {det}"
        )));
    }
    Ok(ExponentPair {
        p,
        l,
        word,
        unit: unit.constant_part(),
        value: det,
    })
}

fn band_entries_of(decomp: &GenericDecomposition) -> Result<Vec<&DecompEntry>> {
    if decomp.entries.iter().any(|e| e.kind != ComponentKind::Band) {
        return Err(Error::NotRegular(
            "the decomposition has string summands".to_string(),
        ));
    }
    Ok(decomp.entries.iter().collect())
}

/// The fully factored symbolic determinant of `cbar^(X_family, lambda)` on
/// the generic direct sum of a regular decomposition, one variable per band
/// copy.
#[derive(Debug, Clone)]
pub struct MultiBandFormula {
    /// Index of the distinguished band family.
    pub family: usize,
    /// Total exponent of `lambda`.
    pub lambda_pow: u32,
    /// Exponent of each copy's parameter, per family.
    pub mu_pow: Vec<u32>,
    /// The constant unit in front.
    pub unit: Rational,
    /// The symbolic determinant itself.
    pub value: MultiPoly,
}

/// Computes and factors the determinant symbolically, verifying the product
/// shape: one `(lambda - mu(i,j))` factor per copy of the distinguished
/// family, none for other families, equal parameter exponents within each
/// family, and a constant unit.
pub fn arbitrary_band_formula(
    a: &GentleAlgebra,
    decomp: &GenericDecomposition,
    family: usize,
) -> Result<MultiBandFormula> {
    let entries = band_entries_of(decomp)?;
    if family >= entries.len() {
        return Err(Error::UnknownBand(format!("b{}", family + 1)));
    }
    let mut vars = vec!["lambda".to_string()];
    for (i, e) in entries.iter().enumerate() {
        for j in 0..e.multiplicity {
            vars.push(format!("mu_{}_{}", i + 1, j + 1));
        }
    }
    let ring = PolyRing::new(vars);

    let eps = SignFunction::default_for(a);
    let xi = entries[family];
    let g_i = updown_graph(a, &xi.dim, &xi.rank, &eps)?;
    let comps_i = classify_components(a, &g_i);
    if comps_i.len() != 1 {
        return Err(Error::ShapeViolation(
            "decomposition entry is not a single band".to_string(),
        ));
    }
    let bands_i: Vec<&GraphComponent> = comps_i.iter().collect();
    let pres = band_presentation(
        a,
        &xi.dim,
        &xi.rank,
        &eps,
        &canonical_basepoints(&g_i, &bands_i),
        &[LambdaValue::Var("lambda".to_string())],
    )?
    .cast_ring(&ring)?;

    // the generic module of the whole component: block sum of one band
    // module per copy, each with its own parameter
    let mut total: Option<Representation> = None;
    for (i, e) in entries.iter().enumerate() {
        for j in 0..e.multiplicity {
            let g = updown_graph(a, &e.dim, &e.rank, &eps)?;
            let comps = classify_components(a, &g);
            let bands: Vec<&GraphComponent> = comps.iter().collect();
            let m = updown_module(
                a,
                &g,
                &eps,
                &comps,
                &canonical_basepoints(&g, &bands),
                &[LambdaValue::Var(format!("mu_{}_{}", i + 1, j + 1))],
            )?
            .cast(&ring)?;
            total = Some(match total {
                None => m,
                Some(t) => t.direct_sum(&m),
            });
        }
    }
    let x_mu = total.expect("a regular decomposition has at least one band");

    let det = schofield_si(a, &pres, &x_mu)?;
    if det.is_zero() {
        return Err(Error::ShapeViolation(
            "symbolic determinant vanished identically".to_string(),
        ));
    }
    let lambda = ring.var("lambda");
    let (lambda_pow, mut rest) = det.divide_out(&lambda);
    let mut mu_pow = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let mut family_pows = Vec::new();
        for j in 0..e.multiplicity {
            let mu = ring.var(&format!("mu_{}_{}", i + 1, j + 1));
            let (pw, r1) = rest.divide_out(&mu);
            rest = r1;
            family_pows.push(pw);
            if i == family {
                let (lin, r2) = rest.divide_out(&lambda.sub(&mu));
                rest = r2;
                if lin != 1 {
                    return Err(Error::ShapeViolation(format!(
                        "expected exactly one (lambda - mu({},{})) factor, found {lin}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if family_pows.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::ShapeViolation(format!(
                "parameter exponents differ within family {}",
                i + 1
            )));
        }
        mu_pow.push(family_pows.first().copied().unwrap_or(0));
    }
    if !rest.is_constant() || rest.is_zero() {
        return Err(Error::ShapeViolation(format!(
            "leftover non-constant factor {rest}"
        )));
    }
    Ok(MultiBandFormula {
        family,
        lambda_pow,
        mu_pow,
        unit: rest.constant_part(),
        value: det,
    })
}

impl MultiBandFormula {
    /// Evaluates the factored right-hand side at rational parameters.
    pub fn evaluate(
        &self,
        entries: &[&DecompEntry],
        lambda: &Rational,
        mu: &[Vec<Rational>],
    ) -> Rational {
        let mut acc = self.unit.clone();
        for _ in 0..self.lambda_pow {
            acc *= lambda;
        }
        for (i, e) in entries.iter().enumerate() {
            for j in 0..e.multiplicity {
                for _ in 0..self.mu_pow[i] {
                    acc *= &mu[i][j];
                }
                if i == self.family {
                    acc *= lambda - &mu[i][j];
                }
            }
        }
        acc
    }
}

fn validate_mu(entries: &[&DecompEntry], mu: &[Vec<Rational>]) -> Result<()> {
    if mu.len() != entries.len() {
        return Err(Error::CoincidentMu(format!(
            "expected parameters for {} band families",
            entries.len()
        )));
    }
    for (i, e) in entries.iter().enumerate() {
        if mu[i].len() != e.multiplicity {
            return Err(Error::CoincidentMu(format!(
                "family {} has multiplicity {}, got {} parameters",
                i + 1,
                e.multiplicity,
                mu[i].len()
            )));
        }
        for (j, v) in mu[i].iter().enumerate() {
            if v.is_zero() {
                return Err(Error::DegenerateLambda(format!("mu({},{})", i + 1, j + 1)));
            }
            for w in mu[i].iter().skip(j + 1) {
                if v == w {
                    return Err(Error::CoincidentMu(format!(
                        "mu({},{}) repeats within family {}",
                        i + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Evaluates `cbar^(X_family, lambda)` on the direct sum of band modules at
/// rational parameters, by direct determinant computation.
pub fn eval_cv(
    a: &GentleAlgebra,
    decomp: &GenericDecomposition,
    family: usize,
    lambda: &Rational,
    mu: &[Vec<Rational>],
) -> Result<Rational> {
    let entries = band_entries_of(decomp)?;
    if family >= entries.len() {
        return Err(Error::UnknownBand(format!("b{}", family + 1)));
    }
    validate_mu(&entries, mu)?;
    if lambda.is_zero() {
        return Err(Error::DegenerateLambda("lambda".to_string()));
    }
    let eps = SignFunction::default_for(a);
    let xi = entries[family];
    let g_i = updown_graph(a, &xi.dim, &xi.rank, &eps)?;
    let comps_i = classify_components(a, &g_i);
    let bands_i: Vec<&GraphComponent> = comps_i.iter().collect();
    let pres = band_presentation(
        a,
        &xi.dim,
        &xi.rank,
        &eps,
        &canonical_basepoints(&g_i, &bands_i),
        &[LambdaValue::Rat(lambda.clone())],
    )?;
    let mut total: Option<Representation> = None;
    for (i, e) in entries.iter().enumerate() {
        for j in 0..e.multiplicity {
            let g = updown_graph(a, &e.dim, &e.rank, &eps)?;
            let comps = classify_components(a, &g);
            let bands: Vec<&GraphComponent> = comps.iter().collect();
            let m = updown_module(
                a,
                &g,
                &eps,
                &comps,
                &canonical_basepoints(&g, &bands),
                &[LambdaValue::Rat(mu[i][j].clone())],
            )?;
            total = Some(match total {
                None => m,
                Some(t) => t.direct_sum(&m),
            });
        }
    }
    let x_mu = total.expect("nonempty decomposition");
    let det = schofield_si(a, &pres, &x_mu)?;
    Ok(det.constant_part())
}

/// Direct evaluation cross-checked against the symbolically factored
/// formula; a mismatch is an invariant failure.
pub fn multi_band_eval(
    a: &GentleAlgebra,
    decomp: &GenericDecomposition,
    family: usize,
    lambda: &Rational,
    mu: &[Vec<Rational>],
) -> Result<Rational> {
    let entries = band_entries_of(decomp)?;
    validate_mu(&entries, mu)?;
    let direct = eval_cv(a, decomp, family, lambda, mu)?;
    let formula = arbitrary_band_formula(a, decomp, family)?;
    let expected = formula.evaluate(&entries, lambda, mu);
    if direct != expected {
        return Err(Error::ShapeViolation(format!(
            "direct determinant {} disagrees with the factored product {}",
            crate::exact::fmt_rational(&direct),
            crate::exact::fmt_rational(&expected)
        )));
    }
    Ok(direct)
}

/// The transcendence-basis ratios of one parameter vector: for each family
/// `i` and consecutive grid values `lambda(i,j)`, `lambda(i,j+1)`, the ratio
/// of the two semi-invariants evaluated on `X_mu`.
pub fn basis_ratios(
    a: &GentleAlgebra,
    decomp: &GenericDecomposition,
    grids: &[Vec<Rational>],
    mu: &[Vec<Rational>],
) -> Result<Vec<Rational>> {
    let entries = band_entries_of(decomp)?;
    validate_mu(&entries, mu)?;
    if grids.len() != entries.len() {
        return Err(Error::Flag {
            flag: "grid".to_string(),
            detail: format!("expected {} grids, got {}", entries.len(), grids.len()),
        });
    }
    for (i, (grid, e)) in grids.iter().zip(&entries).enumerate() {
        if grid.len() != e.multiplicity + 1 {
            return Err(Error::Flag {
                flag: "grid".to_string(),
                detail: format!(
                    "family {} has multiplicity {}; need {} grid values, got {}",
                    i + 1,
                    e.multiplicity,
                    e.multiplicity + 1,
                    grid.len()
                ),
            });
        }
        for (j, v) in grid.iter().enumerate() {
            if v.is_zero() {
                return Err(Error::GridHitsParameter("0".to_string()));
            }
            if grid.iter().skip(j + 1).any(|w| w == v) {
                return Err(Error::Flag {
                    flag: "grid".to_string(),
                    detail: format!("repeated grid value in family {}", i + 1),
                });
            }
            if mu[i].contains(v) {
                return Err(Error::GridHitsParameter(crate::exact::fmt_rational(v)));
            }
        }
    }
    let mut ratios = Vec::new();
    for (i, grid) in grids.iter().enumerate() {
        let values: Vec<Rational> = grid
            .iter()
            .map(|l| eval_cv(a, decomp, i, l, mu))
            .collect::<Result<_>>()?;
        for w in values.windows(2) {
            if w[1].is_zero() {
                return Err(Error::GridHitsParameter("denominator vanished".to_string()));
            }
            ratios.push(&w[0] / &w[1]);
        }
    }
    Ok(ratios)
}

/// True iff all transcendence-basis ratios agree on `X_mu` and `X_nu`; by
/// the separation argument this holds iff `mu` and `nu` agree up to
/// permutations within each band family.
pub fn separation_test(
    a: &GentleAlgebra,
    decomp: &GenericDecomposition,
    grids: &[Vec<Rational>],
    mu: &[Vec<Rational>],
    nu: &[Vec<Rational>],
) -> Result<bool> {
    let r_mu = basis_ratios(a, decomp, grids, mu)?;
    let r_nu = basis_ratios(a, decomp, grids, nu)?;
    Ok(r_mu == r_nu)
}
