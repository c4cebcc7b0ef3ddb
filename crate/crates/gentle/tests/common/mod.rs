//! Shared helpers for the integration suites: fixture loading, a seeded
//! random gentle-quiver generator, and random module builders.

#![allow(dead_code)]

use gentle::exact::{rat, Rational};
use gentle::homalg::projective_module;
use gentle::quiver::{parse_quiver, DimVec, GentleAlgebra};
use gentle::rank::{maximal_rank_functions, regular_rank_function, RankFn};
use gentle::updown::{
    generic_decomposition, updown_data, ComponentKind, LambdaValue, QRep, SignFunction,
};
use rand::rngs::StdRng;
use rand::Rng;
use std::collections::BTreeMap;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_fixture(name: &str) -> GentleAlgebra {
    parse_quiver(&fixture(name)).expect("fixture parses")
}

pub fn rank_by_name(a: &GentleAlgebra, pairs: &[(&str, usize)]) -> RankFn {
    let mut r = vec![0; a.n_arrows()];
    for (name, v) in pairs {
        r[a.quiver().arrow_by_name(name).unwrap()] = *v;
    }
    r
}

/// A random triangular gentle quiver: 1-4 color paths over up to
/// `max_vertices` ordered vertices, each vertex meeting at most two colors.
/// Vertex indices increase along every path, so the quiver is acyclic by
/// construction; the parser re-validates everything.
pub fn random_gentle_quiver(rng: &mut StdRng, max_vertices: usize) -> Option<GentleAlgebra> {
    let n = rng.gen_range(2..=max_vertices);
    let n_colors = rng.gen_range(1..=4);
    let mut color_count = vec![0usize; n];
    let mut text = String::from("quiver random\n");
    for v in 1..=n {
        text.push_str(&format!("vertex {v}\n"));
    }
    let mut arrow_id = 0;
    let mut made_any = false;
    for c in 0..n_colors {
        // pick a strictly increasing vertex chain through spare capacity
        let mut chain: Vec<usize> = Vec::new();
        let start_candidates: Vec<usize> = (0..n).filter(|&v| color_count[v] < 2).collect();
        if start_candidates.is_empty() {
            continue;
        }
        let mut v = start_candidates[rng.gen_range(0..start_candidates.len())];
        chain.push(v);
        let len = rng.gen_range(1..=3);
        for _ in 0..len {
            let nexts: Vec<usize> = ((v + 1)..n).filter(|&w| color_count[w] < 2).collect();
            if nexts.is_empty() {
                break;
            }
            v = nexts[rng.gen_range(0..nexts.len())];
            chain.push(v);
        }
        if chain.len() < 2 {
            continue;
        }
        for &w in &chain {
            color_count[w] += 1;
        }
        for w in chain.windows(2) {
            arrow_id += 1;
            text.push_str(&format!("arrow a{arrow_id} {} {} c{c}\n", w[0] + 1, w[1] + 1));
            made_any = true;
        }
    }
    if !made_any {
        return None;
    }
    parse_quiver(&text).ok()
}

/// Scans the dimension box for nonzero vectors carrying a regular rank
/// function; returns all of them.
pub fn regular_dims(a: &GentleAlgebra, max_dim: usize) -> Vec<(DimVec, RankFn)> {
    let n = a.n_vertices();
    let mut out = Vec::new();
    let mut d = vec![0usize; n];
    loop {
        if d.iter().any(|&x| x > 0) {
            if let Some(r) = regular_rank_function(a, &d) {
                out.push((d.clone(), r));
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            d[i] += 1;
            if d[i] > max_dim {
                d[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// A random valid module: the up-and-down module of a random maximal rank
/// function at random distinct nonzero rational parameters.
pub fn random_updown_module(a: &GentleAlgebra, rng: &mut StdRng, max_dim: usize) -> QRep {
    let eps = SignFunction::default_for(a);
    loop {
        let d: DimVec = (0..a.n_vertices()).map(|_| rng.gen_range(0..=max_dim)).collect();
        if d.iter().all(|&x| x == 0) {
            continue;
        }
        let maxes = maximal_rank_functions(a, &d);
        let r = maxes[rng.gen_range(0..maxes.len())].clone();
        let n_bands: usize = generic_decomposition(a, &d, &r, &eps)
            .unwrap()
            .band_entries()
            .map(|e| e.multiplicity)
            .sum();
        let mut used: Vec<i64> = Vec::new();
        let lambdas: Vec<LambdaValue> = (0..n_bands)
            .map(|_| {
                let mut x = rng.gen_range(2..60);
                while used.contains(&x) {
                    x += 1;
                }
                used.push(x);
                LambdaValue::Rat(rat(x))
            })
            .collect();
        let data = updown_data(a, &d, &r, &eps, Some(lambdas)).unwrap();
        return data.module.specialize(&BTreeMap::new()).unwrap();
    }
}

/// A random module of projective dimension <= 1: a direct sum of projectives
/// and band modules at fresh parameters.
pub fn random_pdim1_module(
    a: &GentleAlgebra,
    bands: &[(DimVec, RankFn)],
    rng: &mut StdRng,
) -> QRep {
    let eps = SignFunction::default_for(a);
    let mut total: Option<QRep> = None;
    let push = |m: QRep, total: &mut Option<QRep>| {
        *total = Some(match total.take() {
            None => m,
            Some(t) => t.direct_sum(&m),
        });
    };
    for x in 0..a.n_vertices() {
        for _ in 0..rng.gen_range(0..2) {
            push(projective_module(a, x).unwrap().to_qrep(a), &mut total);
        }
    }
    let mut lambda_seed = 2i64;
    for (d, r) in bands {
        for _ in 0..rng.gen_range(0..3) {
            lambda_seed += rng.gen_range(1..7);
            let data = updown_data(
                a,
                d,
                r,
                &eps,
                Some(vec![LambdaValue::Rat(rat(lambda_seed))]),
            )
            .unwrap();
            assert_eq!(
                data.components
                    .iter()
                    .filter(|c| c.kind == ComponentKind::Band)
                    .count(),
                1
            );
            push(data.module.specialize(&BTreeMap::new()).unwrap(), &mut total);
        }
    }
    match total {
        Some(t) => t,
        None => projective_module(a, 0).unwrap().to_qrep(a),
    }
}

/// Band module of an indecomposable regular pair at one rational parameter.
pub fn band_module(a: &GentleAlgebra, d: &DimVec, r: &RankFn, lambda: Rational) -> QRep {
    let eps = SignFunction::default_for(a);
    let data = updown_data(a, d, r, &eps, Some(vec![LambdaValue::Rat(lambda)])).unwrap();
    data.module.specialize(&BTreeMap::new()).unwrap()
}
