// Parse quiver files and validate the gentle axioms.
//
// ```sh
// cargo run --example validate_quiver
// ```

use gentle::quiver::parse_quiver;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("ex5.quiver"))?;
    let q = a.quiver();
    println!(
        "{}: {} vertices, {} arrows, colors {:?}",
        q.name,
        q.n_vertices(),
        q.n_arrows(),
        (0..q.n_colors()).map(|c| q.color_name(c)).collect::<Vec<_>>()
    );
    println!("relation pairs (composable, same color):");
    for &(x, y) in a.relation_pairs() {
        println!("  {} . {}  (the path {}*{} lies in the ideal)",
            q.arrow(y).name, q.arrow(x).name, q.arrow(y).name, q.arrow(x).name);
    }
    for v in 0..q.n_vertices() {
        let colors: Vec<&str> = a.colors_at(v).iter().map(|&c| q.color_name(c)).collect();
        println!("vertex {} meets colors {:?}", q.vertex_name(v), colors);
    }

    // a string algebra that is not gentle is rejected with the axiom named
    println!();
    match parse_quiver(&fixture("butterfly.quiver")) {
        Err(e) => println!("butterfly: rejected as expected: {e}"),
        Ok(_) => println!("butterfly: unexpectedly accepted!"),
    }
    Ok(())
}
