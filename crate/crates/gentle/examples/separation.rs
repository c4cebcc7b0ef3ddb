// Transcendence-basis ratios separating generic modules: two parameter
// vectors give the same ratios exactly when they agree up to permutation
// within each band family.
//
// ```sh
// cargo run --example separation
// ```

use gentle::exact::{fmt_rational, rat};
use gentle::quiver::parse_quiver;
use gentle::semiinv::{basis_ratios, separation_test};
use gentle::updown::{generic_decomposition, SignFunction};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("a2.quiver"))?;
    let eps = SignFunction::default_for(&a);
    // one band family with multiplicity two
    let decomp = generic_decomposition(&a, &vec![2, 4, 2], &vec![2; 4], &eps)?;
    let grids = vec![vec![rat(5), rat(7), rat(11)]];

    let mu = vec![vec![rat(2), rat(3)]];
    let ratios = basis_ratios(&a, &decomp, &grids, &mu)?;
    println!(
        "ratios on X_mu, mu = (2, 3): [{}]",
        ratios.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
    );

    for nu in [
        vec![vec![rat(3), rat(2)]],   // a permutation: same module
        vec![vec![rat(2), rat(13)]],  // genuinely different
        vec![vec![rat(-4), rat(9)]],
    ] {
        let agree = separation_test(&a, &decomp, &grids, &mu, &nu)?;
        println!(
            "nu = ({}, {}): ratios agree = {agree}",
            fmt_rational(&nu[0][0]),
            fmt_rational(&nu[0][1])
        );
    }
    Ok(())
}
