//! Reproduce the published parameter tables, flagging the rows that the
//! formulas do not support.

use agq::cli::{self, Format};

fn main() {
    let outcome = cli::cmd_table(Format::Text).unwrap();
    print!("{}", outcome.rendered);
}
