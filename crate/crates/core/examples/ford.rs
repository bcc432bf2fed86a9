//! Octahedral Ford circles and their images under the four dual circles.

use circlepack::geometry::reflect;
use circlepack::kernel::ford::reflection_table;
use circlepack::kernel::{dual_circles, ford_circles, ford_params, Kind};

fn main() {
    let duals = dual_circles(Kind::Oct);
    let table = reflection_table(Kind::Oct);
    for f in ford_circles(Kind::Oct, 3) {
        let images: Vec<String> = duals
            .iter()
            .zip(&table)
            .map(|(d, t)| {
                let g = ford_params(Kind::Oct, &reflect(&f.circle, d).unwrap()).unwrap();
                assert_eq!((g.x, g.y), {
                    let (x, y) = t(f.x, f.y);
                    if y < 0 || (y == 0 && x < 0) { (-x, -y) } else { (x, y) }
                });
                format!("({},{})", g.x, g.y)
            })
            .collect();
        println!("({:>2},{}) {:?}  curvature {:>3}  -> {}", f.x, f.y, f.class, f.circle.curv.to_string(), images.join(" "));
    }
}
