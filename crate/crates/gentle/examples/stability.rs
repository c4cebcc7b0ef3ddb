// King stability certificates for explicit modules by exhaustive submodule
// enumeration over small prime fields.
//
// ```sh
// cargo run --example stability
// ```

use gentle::exact::rat;
use gentle::homalg::band_presentation;
use gentle::quiver::parse_quiver;
use gentle::semiinv::weight_of;
use gentle::stability::{check_stability, reduce_mod_p, DEFAULT_BUDGET};
use gentle::updown::{
    canonical_basepoints, classify_components, updown_data, updown_graph, GraphComponent,
    LambdaValue, SignFunction,
};
use std::collections::BTreeMap;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("a2.quiver"))?;
    let eps = SignFunction::default_for(&a);
    let d = vec![1, 2, 1];
    let r = vec![1; 4];

    // theta^M from the band presentation
    let g = updown_graph(&a, &d, &r, &eps)?;
    let comps = classify_components(&a, &g);
    let bands: Vec<&GraphComponent> = comps.iter().collect();
    let pres = band_presentation(
        &a,
        &d,
        &r,
        &eps,
        &canonical_basepoints(&g, &bands),
        &[LambdaValue::Rat(rat(2))],
    )?;
    let theta = weight_of(&a, &pres).theta;
    println!("theta^M = {theta:?}");

    let m = updown_data(&a, &d, &r, &eps, Some(vec![LambdaValue::Rat(rat(2))]))?
        .module
        .specialize(&BTreeMap::new())?;

    for p in [5u64, 7, 11] {
        let f = reduce_mod_p(&a, &m, p)?;
        let cert = check_stability(&a, &f, &theta, DEFAULT_BUDGET)?;
        println!(
            "over F_{p}: {} ({} realized submodule dimension vectors, re-validates: {})",
            cert.verdict,
            cert.realized.len(),
            cert.revalidate()
        );
    }

    // the square of the band is semistable but not stable
    let double = m.direct_sum(&m);
    let f = reduce_mod_p(&a, &double, 5)?;
    let cert = check_stability(&a, &f, &theta, DEFAULT_BUDGET)?;
    println!(
        "M + M over F_5: {} with witness {:?}",
        cert.verdict,
        cert.witness.unwrap()
    );
    Ok(())
}
