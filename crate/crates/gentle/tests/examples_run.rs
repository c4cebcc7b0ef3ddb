//! Every example in `examples/` is compiled into this test and executed.

macro_rules! example_runs {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                main().expect("example should run");
            }
        }
    };
}

example_runs!(validate_quiver, "validate_quiver.rs");
example_runs!(euler_form, "euler_form.rs");
example_runs!(rank_components, "rank_components.rs");
example_runs!(updown_graph, "updown_graph.rs");
example_runs!(generic_decomposition, "generic_decomposition.rs");
example_runs!(band_modules, "band_modules.rs");
example_runs!(band_presentation, "band_presentation.rs");
example_runs!(semi_invariants, "semi_invariants.rs");
example_runs!(separation, "separation.rs");
example_runs!(stability, "stability.rs");
