//! Witnesses ρ behind χ₂ at each seed circle of the triangular packing (−9,15,23), and the
//! pair symbol across a tangent coprime pair.

use circlepack::invariants::{chi2_circle, partial_symbol, raw_symbol, rho_witnesses};
use circlepack::kernel::{validate_config, CircleId, Kind, Sign};

fn main() -> circlepack::Result<()> {
    let c = validate_config(Kind::Tri, &[-9, 15, 23], Sign::Plus)?;
    for x in c.seed_circles() {
        let a = c.curvature(x)?;
        let ws: Vec<String> = rho_witnesses(&c, x)?
            .take(6)
            .map(|w| format!("{}:{:+}", w.rho, raw_symbol(a, &w)))
            .collect();
        println!("{x} a = {a:>3}  chi2 = {:+}  rho:(rho/a') {}", chi2_circle(&c, x)?, ws.join(" "));
    }
    let (p, q) = (CircleId::Site(1, 0), CircleId::Site(0, 1));
    println!("pair symbol of {p} and {q}: {:+}", partial_symbol(&c, p, q)?);
    Ok(())
}
