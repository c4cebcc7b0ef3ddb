// Generalized Schofield semi-invariants: the symbolic determinant of
// Hom(F, M), its closed-form exponents, and the product formula on a
// direct sum of band modules.
//
// ```sh
// cargo run --example semi_invariants
// ```

use gentle::exact::{fmt_rational, rat};
use gentle::quiver::parse_quiver;
use gentle::rank::regular_rank_function;
use gentle::semiinv::{arbitrary_band_formula, band_exponents, multi_band_eval};
use gentle::updown::{generic_decomposition, SignFunction};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    // the smallest band: cbar^X(M_mu) = lambda - mu
    let a2 = parse_quiver(&fixture("a2.quiver"))?;
    let e = band_exponents(&a2, &[1, 2, 1], &[1, 1, 1, 1])?;
    println!(
        "a2 band: det Hom(F, M_mu) = {}   (p = {}, l = {}, unit = {})",
        e.value, e.p, e.l, e.unit
    );

    // an 8x8 case where the lambda exponent is nonzero
    let ex5 = parse_quiver(&fixture("ex5.quiver"))?;
    let d = vec![2, 3, 1, 2, 3, 1];
    let r = regular_rank_function(&ex5, &d).expect("regular");
    let e = band_exponents(&ex5, &d, &r)?;
    println!(
        "ex5 big band: det = {}   (p = {}, l = {}, unit = {})",
        e.value, e.p, e.l, e.unit
    );

    // the product formula on a multiplicity-two component
    let eps = SignFunction::default_for(&a2);
    let decomp = generic_decomposition(&a2, &vec![2, 4, 2], &vec![2; 4], &eps)?;
    let formula = arbitrary_band_formula(&a2, &decomp, 0)?;
    println!(
        "doubled a2 band: det factors as unit {} * lambda^{} * prod mu^{} * prod (lambda - mu_j)",
        fmt_rational(&formula.unit),
        formula.lambda_pow,
        formula.mu_pow[0]
    );
    let value = multi_band_eval(&a2, &decomp, 0, &rat(5), &[vec![rat(2), rat(3)]])?;
    println!(
        "evaluated at lambda = 5, mu = (2, 3): {} (= (5-2)(5-3) up to the unit)",
        fmt_rational(&value)
    );
    Ok(())
}
