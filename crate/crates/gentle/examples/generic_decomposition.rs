// Generic decompositions of components mod(A, d, r) and the transcendence
// degree of their fields of rational invariants.
//
// ```sh
// cargo run --example generic_decomposition
// ```

use gentle::quiver::parse_quiver;
use gentle::updown::{generic_decomposition, transcendence_degree, SignFunction};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("a2.quiver"))?;
    let eps = SignFunction::default_for(&a);

    for (d, r) in [
        (vec![2, 2, 2], vec![1, 1, 1, 1]), // two string summands
        (vec![1, 2, 1], vec![1, 1, 1, 1]), // one band
        (vec![2, 4, 2], vec![2, 2, 2, 2]), // the band doubled
    ] {
        let dec = generic_decomposition(&a, &d, &r, &eps)?;
        println!("mod(A, {d:?}, {r:?}):");
        for e in &dec.entries {
            println!(
                "  {} x{}  word \"{}\"  d_i = {:?}  r_i = {:?}",
                e.kind,
                e.multiplicity,
                e.word.render(&a),
                e.dim,
                e.rank
            );
        }
        println!(
            "  transcendence degree = {}",
            transcendence_degree(&a, &d, &r, &eps)?
        );
    }
    Ok(())
}
