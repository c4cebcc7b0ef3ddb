// The explicit minimal projective presentation of a band module, its
// Schofield weight, and an exactness check at a rational parameter.
//
// ```sh
// cargo run --example band_presentation
// ```

use gentle::exact::ratio;
use gentle::homalg::{band_cover_maps, band_presentation};
use gentle::quiver::parse_quiver;
use gentle::semiinv::weight_of;
use gentle::updown::{
    canonical_basepoints, classify_components, updown_graph, updown_module, GraphComponent,
    LambdaValue, SignFunction,
};
use std::collections::BTreeMap;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("ex3.quiver"))?;
    let q = a.quiver();
    let d = vec![1; 6];
    let mut r = vec![1; 7];
    r[q.arrow_by_name("a2")?] = 0; // the hexagonal band

    let eps = SignFunction::default_for(&a);
    let g = updown_graph(&a, &d, &r, &eps)?;
    let comps = classify_components(&a, &g);
    let bands: Vec<&GraphComponent> = comps.iter().collect();
    let theta = canonical_basepoints(&g, &bands);

    // symbolic presentation P1 -> P0
    let pres = band_presentation(&a, &d, &r, &eps, &theta, &[LambdaValue::Var("lambda".into())])?;
    let names = |slots: &[usize]| {
        slots
            .iter()
            .map(|&x| format!("P({})", q.vertex_name(x)))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    println!("P1 = {}", names(&pres.p1));
    println!("P0 = {}", names(&pres.p0));
    for (s, _) in pres.p1.iter().enumerate() {
        for (u, _) in pres.p0.iter().enumerate() {
            for (coeff, path) in &pres.entries[u][s] {
                println!("  F entry: ({}) * {}", coeff, a.path_name(path));
            }
        }
    }
    let w = weight_of(&a, &pres);
    println!("Schofield weight theta^X = {:?}", w.theta);

    // exactness of P1 -> P0 -> M -> 0 at lambda = 5/3
    let lam = LambdaValue::Rat(ratio(5, 3));
    let pres_rat = band_presentation(&a, &d, &r, &eps, &theta, &[lam.clone()])?;
    let m = updown_module(&a, &g, &eps, &comps, &theta, &[lam])?
        .specialize(&BTreeMap::new())?;
    let ev = band_cover_maps(&a, &g, &pres_rat, &m)?;
    let f = pres_rat.f_vertex_maps(&a, &BTreeMap::new())?;
    for y in 0..a.n_vertices() {
        let onto = ev[y].rank() == m.dims[y];
        let composite_zero = ev[y].mul(&f[y]).is_zero();
        let exact = f[y].rank() == ev[y].cols - m.dims[y];
        println!(
            "vertex {}: onto {}, ev.F = 0 {}, ker ev = im F {}",
            q.vertex_name(y),
            onto,
            composite_zero,
            exact
        );
        assert!(onto && composite_zero && exact);
    }
    Ok(())
}
