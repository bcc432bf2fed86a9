//! Draws the (−1,2,2,4,4,7) octahedral packing and a partial-type packing with its three
//! fill classes.
//!
//! cargo run --example render [DIR]

use std::path::PathBuf;

use circlepack::kernel::{validate_config, Kind, Sign};
use circlepack::reporting::{render_svg, RenderLimits};

fn main() -> circlepack::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let jobs: [(&str, Kind, &[i64], RenderLimits); 3] = [
        ("oct.svg", Kind::Oct, &[-1, 2, 2, 4, 4, 7], RenderLimits { depth: 4, labels: true, ..RenderLimits::default() }),
        ("oct-partial.svg", Kind::Oct, &[-2, 3, 6, 8, 11, 16], RenderLimits { depth: 5, ..RenderLimits::default() }),
        ("tri.svg", Kind::Tri, &[-11, 13, 73], RenderLimits { depth: 3, max_curvature: 3000, ..RenderLimits::default() }),
    ];
    for (name, kind, seed, lim) in jobs {
        let c = validate_config(kind, seed, Sign::Plus)?;
        let svg = render_svg(&c, &lim)?;
        let path = dir.join(name);
        std::fs::write(&path, &svg)?;
        println!("{c}: {} circles -> {}", svg.matches("<circle").count(), path.display());
    }
    Ok(())
}
