macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(
    semigroup_invariants,
    "semigroup_invariants.rs",
    semigroup_invariants_runs
);
example!(
    equidist_deciders,
    "equidist_deciders.rs",
    equidist_deciders_runs
);
example!(equidist_moduli, "equidist_moduli.rs", equidist_moduli_runs);
example!(
    polynomial_criterion,
    "polynomial_criterion.rs",
    polynomial_criterion_runs
);
example!(
    feng_independence,
    "feng_independence.rs",
    feng_independence_runs
);
example!(unit_relations, "unit_relations.rs", unit_relations_runs);
example!(worked_examples, "worked_examples.rs", worked_examples_runs);
