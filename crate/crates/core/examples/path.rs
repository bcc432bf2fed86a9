//! Chains of tangent circles with coprime consecutive curvatures.

use circlepack::enumeration::coprime_path_between;
use circlepack::kernel::{validate_config, Kind, Sign};

fn main() -> circlepack::Result<()> {
    let cases: [(Kind, &[i64], i64, i64); 4] = [
        (Kind::Oct, &[-1, 2, 2, 4, 4, 7], 2, 4),
        (Kind::Cube, &[-2, 5, 5, 6, 12, 13, 13, 20], 6, 12),
        (Kind::Square, &[-1, 2, 3, 6], 2, 6),
        (Kind::Tri, &[-11, 13, 73], 13, 253),
    ];
    for (kind, seed, u, v) in cases {
        let c = validate_config(kind, seed, Sign::Plus)?;
        let chain = coprime_path_between(&c, u, v)?;
        chain.verify()?;
        println!("{c}: {u} to {v}: {:?}", chain.curvatures());
    }
    Ok(())
}
