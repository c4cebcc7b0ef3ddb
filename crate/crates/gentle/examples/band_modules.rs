// Generic up-and-down modules: explicit matrices with one parameter per
// band, relation checks, and rank behavior under specialization.
//
// ```sh
// cargo run --example band_modules
// ```

use gentle::exact::rat;
use gentle::quiver::parse_quiver;
use gentle::updown::{updown_data, LambdaValue, SignFunction};
use std::collections::BTreeMap;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("a2.quiver"))?;
    let q = a.quiver();
    let eps = SignFunction::default_for(&a);
    let d = vec![1, 2, 1];
    let r = vec![1; 4];

    // symbolic parameter
    let data = updown_data(&a, &d, &r, &eps, None)?;
    println!("generic band module on d = (1,2,1):");
    for (i, ar) in q.arrows().iter().enumerate() {
        let m = &data.module.mats[i];
        let rows: Vec<String> = (0..m.rows)
            .map(|x| {
                let cells: Vec<String> = (0..m.cols).map(|y| m.get(x, y).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        println!("  M({}) = [{}]", ar.name, rows.join(", "));
    }
    println!(
        "  relations vanish: {}",
        data.module.satisfies_relations(&a)
    );
    let theta = data.basepoints[0];
    let gv = data.graph.vertices[theta];
    println!(
        "  base point Theta(b) = v_{}^{}",
        gv.level,
        q.vertex_name(gv.q)
    );

    // rational specialization realizes the generic arrow ranks
    let spec = updown_data(&a, &d, &r, &eps, Some(vec![LambdaValue::Rat(rat(7))]))?
        .module
        .specialize(&BTreeMap::new())?;
    for (i, ar) in q.arrows().iter().enumerate() {
        println!(
            "  rank M({}) at lambda = 7: {} (r({}) = {})",
            ar.name,
            spec.mats[i].rank(),
            ar.name,
            r[i]
        );
    }
    Ok(())
}
