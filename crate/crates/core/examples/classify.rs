//! Modular type and χ₂ of a few packings, one per family.
//!
//! cargo run --example classify

use circlepack::invariants::{chi2_packing, Obstruction};
use circlepack::kernel::{modular_type, validate_config, Kind, Sign};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> circlepack::Result<()> {
    let seeds: [(Kind, &[i64]); 5] = [
        (Kind::Oct, &[-6, 10, 17, 17, 24, 40]),
        (Kind::Oct, &[-2, 3, 6, 8, 11, 16]),
        // cubic seeds may be given in any order
        (Kind::Cube, &[11, 8, 7, 6, 4, 3, 2, -1]),
        (Kind::Square, &[-1, 2, 3, 6]),
        (Kind::Tri, &[-9, 15, 23]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (kind, seed) in seeds {
        let c = validate_config(kind, seed, Sign::Plus)?;
        let ty = modular_type(&c)?;
        let chi2 = chi2_packing(&c, 64, &mut rng)?;
        let ob = Obstruction::for_type(&ty, chi2);
        println!("{c:<40} type {:<8} chi2 {chi2:>3}  excluded: {}", ty.label, ob.describe());
    }
    Ok(())
}
