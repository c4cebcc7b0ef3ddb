// Build the up-and-down graph of the six-vertex running example with the
// explicitly pinned sign function, and list its components.
//
// ```sh
// cargo run --example updown_graph
// ```

use gentle::quiver::parse_quiver;
use gentle::updown::{classify_components, updown_graph, SignFunction};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("ex5.quiver"))?;
    let q = a.quiver();
    let d = vec![3, 4, 1, 2, 3, 2];
    let mut r = vec![0; 8];
    for (name, v) in [
        ("r1", 3), ("r2", 1), ("g1", 2), ("g2", 1),
        ("p1", 2), ("p2", 2), ("b1", 2), ("b2", 1),
    ] {
        r[q.arrow_by_name(name)?] = v;
    }
    let color = |n: &str| (0..q.n_colors()).find(|&c| q.color_name(c) == n).unwrap();
    let eps = SignFunction::with_overrides(
        &a,
        &[
            (q.vertex("1")?, color("green"), 1),
            (q.vertex("2")?, color("pink"), 1),
            (q.vertex("3")?, color("red"), 1),
            (q.vertex("4")?, color("blue"), 1),
            (q.vertex("5")?, color("blue"), 1),
            (q.vertex("6")?, color("pink"), 1),
        ],
    )?;

    let g = updown_graph(&a, &d, &r, &eps)?;
    println!(
        "graph has {} vertices and {} arrows",
        g.vertices.len(),
        g.arrows.len()
    );
    for ga in &g.arrows {
        let t = g.vertices[ga.tail];
        let h = g.vertices[ga.head];
        println!(
            "  f_{}^{}: v_{}^{} -> v_{}^{}",
            ga.level,
            q.arrow(ga.qa).name,
            t.level,
            q.vertex_name(t.q),
            h.level,
            q.vertex_name(h.q)
        );
    }
    for c in classify_components(&a, &g) {
        println!(
            "{}: {} graph vertices, word \"{}\", induced d = {:?}",
            c.kind,
            c.gvertices.len(),
            c.word.render(&a),
            c.dim
        );
    }
    Ok(())
}
