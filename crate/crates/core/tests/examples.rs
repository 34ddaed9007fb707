macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect("example should run");
        }
    };
}

example!(classify_half_twist, "classify_half_twist.rs");
example!(word_problem, "word_problem.rs");
example!(comb_pure_braid, "comb_pure_braid.rs");
example!(crossing_indices, "crossing_indices.rs");
example!(root_uniqueness, "root_uniqueness.rs");
example!(free_group_conjugacy, "free_group_conjugacy.rs");
example!(move_switching_strands, "move_switching_strands.rs");
example!(generate_and_verify, "generate_and_verify.rs");
