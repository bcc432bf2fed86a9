use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The four packing families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Oct,
    Cube,
    Square,
    Tri,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Oct, Kind::Cube, Kind::Square, Kind::Tri];

    /// Modulus of the congruence restrictions.
    pub fn modulus(self) -> i64 {
        match self {
            Kind::Oct => 8,
            Kind::Cube => 4,
            Kind::Square => 8,
            Kind::Tri => 12,
        }
    }

    /// Radicand of the coordinate field of the strip packing.
    pub fn field_tag(self) -> u8 {
        match self {
            Kind::Oct | Kind::Cube => 2,
            Kind::Square => 1,
            Kind::Tri => 3,
        }
    }

    /// Number of integers in a seed.
    pub fn arity(self) -> usize {
        match self {
            Kind::Oct => 6,
            Kind::Cube => 8,
            Kind::Square => 4,
            Kind::Tri => 3,
        }
    }

    pub fn generators(self) -> &'static str {
        match self {
            Kind::Oct => "8 octahedron faces",
            Kind::Cube => "6 cube faces",
            Kind::Square => "one flip per square face",
            Kind::Tri => "one flip per triangular face",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Oct => "oct",
            Kind::Cube => "cube",
            Kind::Square => "square",
            Kind::Tri => "tri",
        }
    }

    pub fn is_grid(self) -> bool {
        matches!(self, Kind::Square | Kind::Tri)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oct" => Ok(Kind::Oct),
            "cube" => Ok(Kind::Cube),
            "square" => Ok(Kind::Square),
            "tri" => Ok(Kind::Tri),
            _ => Err(Error::Invalid(format!("unknown kind '{s}' (expected oct|cube|square|tri)"))),
        }
    }
}

/// Root branch of a quadratic completion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[default]
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn apply(self, x: i128) -> i128 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(Error::Invalid(format!("sign must be + or -, got '{s}'"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Parses a comma-separated integer list such as `-1,2,2,4,4,7`.
pub fn parse_seed(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>().map_err(|_| Error::Invalid(format!("bad integer '{t}' in seed")))
        })
        .collect()
}
