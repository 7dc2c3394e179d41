//! Runs every crate example as a test.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(golden_system);
example!(row_counting);
example!(row_generation);
example!(transversal_number);
example!(queries);
example!(oracle_crosscheck);
example!(row_census);
