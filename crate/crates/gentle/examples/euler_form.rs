// The Euler form by chain counting, and its homological meaning.
//
// ```sh
// cargo run --example euler_form
// ```

use gentle::homalg::{ext1_dim, hom_dim};
use gentle::quiver::parse_quiver;
use gentle::updown::{updown_data, LambdaValue, SignFunction};
use std::collections::BTreeMap;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn main() -> gentle::Result<()> {
    let a = parse_quiver(&fixture("a2.quiver"))?;

    let d = vec![1, 2, 1];
    println!("<<d, d>> for the band dimension vector d = (1,2,1): {}", a.euler_form(&d, &d));
    let e = vec![2, 2, 2];
    println!("<<(2,2,2), (2,2,2)>> = {}", a.euler_form(&e, &e));

    // on modules of projective dimension <= 1 the form computes
    // dim Hom - dim Ext^1
    let eps = SignFunction::default_for(&a);
    let x = updown_data(&a, &d, &vec![1; 4], &eps, Some(vec![LambdaValue::Rat(gentle::exact::rat(2))]))?
        .module
        .specialize(&BTreeMap::new())?;
    let n = updown_data(&a, &e, &vec![1; 4], &eps, None)?
        .module
        .specialize(&BTreeMap::new())?;
    let euler = a.euler_form(&x.dims, &n.dims);
    let hom = hom_dim(&a, &x, &n);
    let ext = ext1_dim(&a, &x, &n)?;
    println!("dim Hom(X, N) = {hom}, dim Ext^1(X, N) = {ext}, <<dim X, dim N>> = {euler}");
    assert_eq!(euler, hom as i64 - ext as i64);
    Ok(())
}
