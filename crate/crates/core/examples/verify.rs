//! Runs every verification suite on one packing at reduced sample sizes.
//!
//! cargo run --release --example verify

use circlepack::checks::{run_suite, Suite, SuiteOptions};
use circlepack::kernel::{validate_config, Kind, Sign};

fn main() -> circlepack::Result<()> {
    let c = validate_config(Kind::Oct, &[-4, 7, 10, 12, 15, 26], Sign::Plus)?;
    let opts = SuiteOptions { pairs: 2000, moves: 20_000, n: 5000, ..SuiteOptions::default() };
    let mut ok = true;
    for s in Suite::ALL {
        let rep = run_suite(s, Some(&c), &opts)?;
        ok &= rep.passed();
        println!("{rep}");
    }
    std::process::exit(if ok { 0 } else { 2 });
}
