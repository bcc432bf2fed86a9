//! Sporadic integers of the square packing (−1,2,3,6): admissible mod 8, not a square
//! (χ₂ = −1), and still missing up to N.
//!
//! cargo run --release --example sporadic

use circlepack::kernel::{validate_config, Kind, Sign};
use circlepack::reporting::{sporadic_report, ReportOptions, SporadicReport};

fn main() -> circlepack::Result<()> {
    let c = validate_config(Kind::Square, &[-1, 2, 3, 6], Sign::Plus)?;
    let rep = sporadic_report(&c, 100_000, &ReportOptions::default())?;
    println!("type {} chi2 {} excluded {}", rep.type_label, rep.chi2, rep.obstruction);
    println!("S_P(N) = {:?}", rep.sporadic);
    println!("max {:?}, count {}", rep.sporadic_max, rep.sporadic_count);
    print!("{}", SporadicReport::to_csv(&[rep])?);
    Ok(())
}
