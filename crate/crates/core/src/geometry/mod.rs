//! Inversive coordinates for oriented circles and lines.

mod circle;
mod map;

pub use circle::{inner_product, reflect, tangent, Euclid, InversiveCircle};
pub use map::{apply_map, LinearCircleMap};

/// Shorthand for building a circle from `(rational, surd)` integer pairs in field `d`.
pub fn circle(d: u8, parts: [(i64, i64); 4]) -> InversiveCircle {
    use crate::arith::QuadRat;
    let [a, b, c, e] = parts.map(|(r, s)| QuadRat::from_parts(d, (r, 1), (s, 1)));
    InversiveCircle::new(a, b, c, e).expect("valid circle")
}

#[cfg(test)]
mod tests;
