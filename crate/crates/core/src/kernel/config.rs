use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::cube::{self, CubeConfig};
use super::grid::{Grid, GridFace, Lattice};
use super::oct::{self, OctConfig};
use super::{Kind, Sign};

/// A configuration of one packing family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Config {
    Oct(OctConfig),
    Cube(CubeConfig),
    Grid(Grid),
}

/// A circle of a configuration: a slot of the sextuple/octuple or a grid site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CircleId {
    Slot(usize),
    Site(i64, i64),
}

impl fmt::Display for CircleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleId::Slot(i) => write!(f, "{}", (b'a' + *i as u8) as char),
            CircleId::Site(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// A generator: one dual circle of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FaceId {
    /// Bit `k` of the mask picks the second slot of opposite pair `k`.
    Oct(u8),
    /// Index into the cube's face list `abcd, abfe, bcgf, cdhg, adhe, efgh`.
    Cube(usize),
    Grid(GridFace),
}

impl Config {
    pub fn kind(&self) -> Kind {
        match self {
            Config::Oct(_) => Kind::Oct,
            Config::Cube(_) => Kind::Cube,
            Config::Grid(g) => match g.lattice {
                Lattice::Square => Kind::Square,
                Lattice::Tri => Kind::Tri,
            },
        }
    }

    pub fn as_grid(&self) -> Option<&Grid> {
        match self {
            Config::Grid(g) => Some(g),
            _ => None,
        }
    }

    pub fn curvature(&self, c: CircleId) -> Result<i64> {
        match (self, c) {
            (Config::Oct(o), CircleId::Slot(i)) if i < 6 => Ok(o.v[i]),
            (Config::Cube(q), CircleId::Slot(i)) if i < 8 => Ok(q.v[i]),
            (Config::Grid(g), CircleId::Site(i, j)) => i64::try_from(g.at(i, j)).map_err(|_| Error::Overflow),
            _ => Err(Error::InvalidCircle(format!("{c:?} for {}", self.kind()))),
        }
    }

    /// Circles of the seed window: all slots, or the seed face of a grid.
    pub fn seed_circles(&self) -> Vec<CircleId> {
        match self {
            Config::Oct(_) => (0..6).map(CircleId::Slot).collect(),
            Config::Cube(_) => (0..8).map(CircleId::Slot).collect(),
            Config::Grid(g) => match g.lattice {
                Lattice::Square => vec![(0, 0), (1, 0), (0, 1), (1, 1)],
                Lattice::Tri => vec![(0, 0), (1, 0), (0, 1)],
            }
            .into_iter()
            .map(|(i, j)| CircleId::Site(i, j))
            .collect(),
        }
    }

    /// Circles tangent to `c` inside this configuration.
    pub fn neighbors(&self, c: CircleId) -> Result<Vec<CircleId>> {
        self.curvature(c)?;
        Ok(match (self, c) {
            (Config::Oct(_), CircleId::Slot(i)) => {
                (0..6).filter(|&j| j != i && j != oct::opposite(i)).map(CircleId::Slot).collect()
            }
            (Config::Cube(_), CircleId::Slot(i)) => {
                (0..8).filter(|&j| cube::adjacent(i, j)).map(CircleId::Slot).collect()
            }
            (Config::Grid(g), CircleId::Site(i, j)) => {
                g.neighbors(i, j).into_iter().map(|(x, y)| CircleId::Site(x, y)).collect()
            }
            _ => unreachable!(),
        })
    }

    pub fn adjacent(&self, c1: CircleId, c2: CircleId) -> Result<bool> {
        Ok(self.neighbors(c1)?.contains(&c2))
    }

    /// Tangent pairs of the configuration (for grids: the edges of the seed window).
    pub fn edges(&self) -> Vec<(CircleId, CircleId)> {
        match self {
            Config::Oct(_) => oct::OctConfig::edges().map(|(i, j)| (CircleId::Slot(i), CircleId::Slot(j))).collect(),
            Config::Cube(_) => cube::EDGES.iter().map(|&(i, j)| (CircleId::Slot(i), CircleId::Slot(j))).collect(),
            Config::Grid(_) => {
                let s = self.seed_circles();
                let mut out = Vec::new();
                for (k, &a) in s.iter().enumerate() {
                    for &b in &s[k + 1..] {
                        if self.adjacent(a, b).unwrap() {
                            out.push((a, b));
                        }
                    }
                }
                out
            }
        }
    }

    /// Faces of the configuration containing circle `c`.
    pub fn faces_containing(&self, c: CircleId) -> Vec<FaceId> {
        match (self, c) {
            (Config::Oct(_), CircleId::Slot(i)) => {
                (0..8u8).filter(|&m| oct::face_slots(m).contains(&i)).map(FaceId::Oct).collect()
            }
            (Config::Cube(_), CircleId::Slot(i)) => {
                (0..6).filter(|&k| cube::FACES[k].contains(&i)).map(FaceId::Cube).collect()
            }
            (Config::Grid(g), CircleId::Site(i, j)) => match g.lattice {
                Lattice::Square => [(0, 0), (-1, 0), (0, -1), (-1, -1)]
                    .iter()
                    .map(|&(di, dj)| FaceId::Grid(GridFace::square(i + di, j + dj)))
                    .collect(),
                Lattice::Tri => [
                    GridFace { i, j, up: true },
                    GridFace { i: i - 1, j, up: true },
                    GridFace { i, j: j - 1, up: true },
                    GridFace { i: i - 1, j, up: false },
                    GridFace { i, j: j - 1, up: false },
                    GridFace { i: i - 1, j: j - 1, up: false },
                ]
                .into_iter()
                .map(FaceId::Grid)
                .collect(),
            },
            _ => Vec::new(),
        }
    }

    /// Every face of an octahedral or cubic configuration; grids have infinitely many.
    pub fn all_faces(&self) -> Vec<FaceId> {
        match self {
            Config::Oct(_) => (0..8u8).map(FaceId::Oct).collect(),
            Config::Cube(_) => (0..6).map(FaceId::Cube).collect(),
            Config::Grid(g) => match g.lattice {
                Lattice::Square => vec![FaceId::Grid(GridFace::square(0, 0))],
                Lattice::Tri => vec![
                    FaceId::Grid(GridFace { i: 0, j: 0, up: true }),
                    FaceId::Grid(GridFace { i: 0, j: 0, up: false }),
                ],
            },
        }
    }

    pub fn face_circles(&self, face: FaceId) -> Result<Vec<CircleId>> {
        match (self, face) {
            (Config::Oct(_), FaceId::Oct(m)) if m < 8 => Ok(oct::face_slots(m).map(CircleId::Slot).to_vec()),
            (Config::Cube(_), FaceId::Cube(k)) if k < 6 => Ok(cube::FACES[k].map(CircleId::Slot).to_vec()),
            (Config::Grid(g), FaceId::Grid(f)) => {
                Ok(f.vertices(g.lattice).into_iter().map(|(i, j)| CircleId::Site(i, j)).collect())
            }
            _ => Err(Error::InvalidFace(format!("{face:?} for {}", self.kind()))),
        }
    }

    /// Values of the seed circles, in seed order.
    pub fn seed_values(&self) -> Vec<i64> {
        self.seed_circles().into_iter().map(|c| self.curvature(c).unwrap()).collect()
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.seed_values().iter().map(|x| x.to_string()).collect();
        write!(f, "{} ({})", self.kind(), v.join(","))
    }
}

/// Checks all family relations and builds a configuration. The sign picks the
/// grid completion and is ignored for the octahedral and cubic families.
pub fn validate_config(kind: Kind, values: &[i64], sign: Sign) -> Result<Config> {
    if values.len() != kind.arity() {
        return Err(Error::Invalid(format!("{kind} seed needs {} integers, got {}", kind.arity(), values.len())));
    }
    Ok(match kind {
        Kind::Oct => Config::Oct(OctConfig::new(values)?),
        Kind::Cube => Config::Cube(CubeConfig::new(values)?),
        Kind::Square => Config::Grid(Grid::square(values, sign)?),
        Kind::Tri => Config::Grid(Grid::tri(values, sign)?),
    })
}

/// Completes minimal data: an octahedral triangle `(a,b,c)`, a cubic face `(a,b,c,d)`,
/// a square staircase `(j,k,l)` or a triangular triangle `(a,b,c)`.
pub fn complete_from_minimal(kind: Kind, minimal: &[i64], sign: Sign) -> Result<Config> {
    let need = match kind {
        Kind::Oct | Kind::Square | Kind::Tri => 3,
        Kind::Cube => 4,
    };
    if minimal.len() != need {
        return Err(Error::Invalid(format!("{kind} completion needs {need} integers, got {}", minimal.len())));
    }
    let m = minimal;
    Ok(match kind {
        Kind::Oct => Config::Oct(OctConfig::complete(m[0], m[1], m[2], sign)?),
        Kind::Cube => Config::Cube(CubeConfig::complete([m[0], m[1], m[2], m[3]], sign)?),
        Kind::Square => Config::Grid(Grid::square_from_staircase(m[0], m[1], m[2], sign)?),
        Kind::Tri => Config::Grid(Grid::tri(m, sign)?),
    })
}

/// Reflects the configuration through the dual circle of `face`.
pub fn apply_generator(config: &Config, face: FaceId) -> Result<Config> {
    match (config, face) {
        (Config::Oct(o), FaceId::Oct(m)) if m < 8 => o.flip(m).map(Config::Oct).ok_or(Error::Overflow),
        (Config::Cube(c), FaceId::Cube(k)) if k < 6 => c.flip(k).map(Config::Cube).ok_or(Error::Overflow),
        (Config::Grid(g), FaceId::Grid(f)) if g.lattice == Lattice::Tri || f.up => {
            g.checked_flip(&f).map(Config::Grid).ok_or(Error::Overflow)
        }
        _ => Err(Error::InvalidFace(format!("{face:?} for {}", config.kind()))),
    }
}
