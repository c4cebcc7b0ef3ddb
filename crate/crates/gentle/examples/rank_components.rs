// Maximal rank functions (the labels of irreducible components) and the
// unique regular rank function of a dimension vector.
//
// ```sh
// cargo run --example rank_components
// ```

use gentle::quiver::parse_quiver;
use gentle::rank::{is_regular, maximal_rank_functions, regular_rank_function};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("ex3.quiver"))?;
    let q = a.quiver();
    let d = vec![1; 6];
    println!("d = (1,1,1,1,1,1) on {}:", q.name);
    for r in maximal_rank_functions(&a, &d) {
        let pretty: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, x)| format!("{}={}", q.arrow(i).name, x))
            .collect();
        println!(
            "  maximal r = ({})  regular: {}",
            pretty.join(","),
            is_regular(&a, &d, &r)
        );
    }

    // the regular rank function is forced by the recursion along each color
    let a = parse_quiver(&fixture("ex5.quiver"))?;
    for d in [vec![1, 2, 1, 1, 2, 1], vec![3, 4, 1, 2, 3, 2]] {
        match regular_rank_function(&a, &d) {
            Some(r) => println!("{d:?} has the regular rank function {r:?}"),
            None => println!("{d:?} has no regular rank function"),
        }
    }
    Ok(())
}
