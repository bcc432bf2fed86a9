use serde::Serialize;

use crate::error::{Error, Result};

use super::grid::Lattice;
use super::oct::PAIRS;
use super::{CircleId, Config};

/// A proper coloring of the tangency graph that is constant along generator moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Coloring {
    /// Color per slot of the sextuple or octuple.
    Slots(Vec<u8>),
    /// `(i - j) mod 3` on the triangular lattice.
    TriLattice,
}

impl Coloring {
    pub fn color(&self, c: CircleId) -> Option<u8> {
        match (self, c) {
            (Coloring::Slots(v), CircleId::Slot(i)) => v.get(i).copied(),
            (Coloring::TriLattice, CircleId::Site(i, j)) => Some((i - j).rem_euclid(3) as u8),
            _ => None,
        }
    }

    pub fn classes(&self) -> usize {
        match self {
            Coloring::Slots(v) => v.iter().max().map_or(0, |m| *m as usize + 1),
            Coloring::TriLattice => 3,
        }
    }
}

/// Octahedral: one color per opposite pair. Cubic: the two tetrahedral vertex classes.
/// Triangular: the three sublattice classes. Square packings have no coloring.
pub fn coloring(config: &Config) -> Result<Coloring> {
    match config {
        Config::Oct(_) => {
            let mut v = vec![0u8; 6];
            for (k, &(i, j)) in PAIRS.iter().enumerate() {
                v[i] = k as u8;
                v[j] = k as u8;
            }
            Ok(Coloring::Slots(v))
        }
        Config::Cube(_) => Ok(Coloring::Slots(vec![0, 1, 0, 1, 1, 0, 1, 0])),
        Config::Grid(g) if g.lattice == Lattice::Tri => Ok(Coloring::TriLattice),
        Config::Grid(_) => Err(Error::NotApplicable("square packings have no coloring".into())),
    }
}

/// Index of the opposite pair whose curvatures are odd, for octahedral sextuples.
pub fn odd_pair(config: &Config) -> Option<usize> {
    match config {
        Config::Oct(o) => PAIRS.iter().position(|&(i, _)| o.v[i] % 2 != 0),
        _ => None,
    }
}
