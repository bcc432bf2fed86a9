use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::kernel::{apply_generator, CircleId, Config, FaceId};

fn window(config: &Config) -> Vec<CircleId> {
    match config {
        Config::Grid(_) => (-1..=1).flat_map(|i| (-1..=1).map(move |j| CircleId::Site(i, j))).collect(),
        _ => config.seed_circles(),
    }
}

fn too_big(config: &Config, cap: i64) -> bool {
    match config {
        Config::Grid(g) => g.poly.d.unsigned_abs() > cap as u128,
        _ => config.seed_values().iter().any(|v| v.abs() > cap),
    }
}

/// A configuration reached from `config` by a random word of up to `steps` generators.
/// Moves that would push a curvature past `cap` in absolute value are skipped.
pub fn random_config<R: Rng>(config: &Config, rng: &mut R, steps: usize, cap: i64) -> Result<Config> {
    let len = rng.gen_range(0..=steps);
    let mut c = *config;
    for _ in 0..len {
        let faces: Vec<FaceId> = match c {
            Config::Grid(_) => {
                let site = *window(&c).choose(rng).unwrap();
                c.faces_containing(site)
            }
            _ => c.all_faces(),
        };
        if let Ok(n) = apply_generator(&c, *faces.choose(rng).unwrap()) {
            if !too_big(&n, cap) {
                c = n;
            }
        }
    }
    Ok(c)
}

/// A random circle of nonzero curvature reached by a random word.
pub fn random_circle<R: Rng>(config: &Config, rng: &mut R, steps: usize, cap: i64) -> Result<(Config, CircleId)> {
    loop {
        let c = random_config(config, rng, steps, cap)?;
        let x = *window(&c).choose(rng).unwrap();
        if c.curvature(x)? != 0 {
            return Ok((c, x));
        }
    }
}

/// A random tangent pair of nonzero curvatures reached by a random word.
pub fn random_tangent_pair<R: Rng>(
    config: &Config,
    rng: &mut R,
    steps: usize,
    cap: i64,
) -> Result<(Config, CircleId, CircleId)> {
    loop {
        let (c, x) = random_circle(config, rng, steps, cap)?;
        let y = *c.neighbors(x)?.choose(rng).unwrap();
        if c.curvature(y)? != 0 {
            return Ok((c, x, y));
        }
    }
}
