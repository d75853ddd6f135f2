//! Prints the four reference tables through the same code path as the CLI.

use awroots::cli::{parse_args, run};

fn main() {
    for mode in ["table1", "table2", "table3", "table4"] {
        let config = parse_args(["awroots", "--mode", mode]).expect("defaults are valid");
        let outcome = run(&config).expect("reference tables solve");
        println!("{}", outcome.stdout);
    }
}
