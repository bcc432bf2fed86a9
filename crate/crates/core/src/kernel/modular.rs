use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{Config, Kind};

/// A congruence class pattern shared by all configurations of a packing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModularType {
    pub kind: Kind,
    pub label: String,
    pub residues: Vec<i64>,
    pub modulus: i64,
}

const OCT: [&[i64]; 4] = [&[0, 1, 2], &[0, 3, 6], &[4, 5, 6], &[2, 4, 7]];
const CUBE: [&[i64]; 2] = [&[0, 1, 2], &[0, 2, 3]];
const SQUARE: [&[i64]; 4] = [&[1], &[5], &[3, 7], &[0, 1, 2, 3, 4, 5, 6, 7]];
const TRI: [&[i64]; 6] = [&[1], &[7], &[3, 11], &[5, 9], &[2, 5, 8, 11], &[0, 1, 3, 4, 6, 7, 9, 10]];

fn label_of(res: &[i64]) -> String {
    if res.len() == 8 && res.iter().copied().eq(0..8) {
        return "full".into();
    }
    let s: Vec<String> = res.iter().map(|r| r.to_string()).collect();
    format!("({})", s.join(","))
}

/// All modular types of a family.
pub fn types_of(kind: Kind) -> Vec<ModularType> {
    let sets: &[&[i64]] = match kind {
        Kind::Oct => &OCT,
        Kind::Cube => &CUBE,
        Kind::Square => &SQUARE,
        Kind::Tri => &TRI,
    };
    sets.iter()
        .map(|r| ModularType { kind, label: label_of(r), residues: r.to_vec(), modulus: kind.modulus() })
        .collect()
}

/// Looks up a type by its label, e.g. `(0,1,2)` or `full`.
pub fn type_by_label(kind: Kind, label: &str) -> Result<ModularType> {
    let want: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    types_of(kind)
        .into_iter()
        .find(|t| t.label == want)
        .ok_or_else(|| Error::Invalid(format!("unknown {kind} type label '{label}'")))
}

/// Residues mod `M` that occur in the configuration and its immediate surroundings.
pub fn observed_residues(config: &Config) -> BTreeSet<i64> {
    let m = config.kind().modulus();
    let mut out = BTreeSet::new();
    match config {
        Config::Oct(_) | Config::Cube(_) => {
            let mut add = |c: &Config| {
                for x in c.seed_values() {
                    out.insert(x.rem_euclid(m));
                }
            };
            add(config);
            for f in config.all_faces() {
                if let Ok(n) = super::apply_generator(config, f) {
                    add(&n);
                }
            }
        }
        Config::Grid(g) => {
            // values mod M are periodic with period dividing 2M in each direction
            let p = 2 * m;
            for i in 0..p {
                for j in 0..p {
                    out.insert((g.at(i, j).rem_euclid(m as i128)) as i64);
                }
            }
        }
    }
    out
}

/// The modular type of the packing containing `config`.
pub fn modular_type(config: &Config) -> Result<ModularType> {
    let seen = observed_residues(config);
    let types = types_of(config.kind());
    if let Some(t) = types.iter().find(|t| t.residues.iter().copied().collect::<BTreeSet<_>>() == seen) {
        return Ok(t.clone());
    }
    let sup: Vec<&ModularType> = types.iter().filter(|t| seen.iter().all(|r| t.residues.contains(r))).collect();
    match sup.as_slice() {
        [t] => Ok((*t).clone()),
        _ => Err(Error::Verification(format!("residues {seen:?} match no {} type", config.kind()))),
    }
}

/// Sums of tangent curvatures that can never occur, per family, as residues mod 8 or 12.
pub fn forbidden_tangent_sums(kind: Kind) -> (i64, &'static [i64]) {
    match kind {
        Kind::Oct | Kind::Cube => (8, &[5, 7]),
        Kind::Square => (8, &[3, 6, 7]),
        Kind::Tri => (12, &[5, 10, 11]),
    }
}
