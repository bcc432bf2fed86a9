use crate::error::Result;
use crate::kernel::{validate_config, Config, Kind, Sign};

/// A seed from the published data tables with the bound it was run to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSeed {
    pub kind: Kind,
    pub seed: &'static [i64],
    pub n: u64,
}

impl TableSeed {
    pub fn config(&self) -> Result<Config> {
        validate_config(self.kind, self.seed, Sign::Plus)
    }

    /// Rows small enough for a laptop run.
    pub fn is_desk_scale(&self) -> bool {
        self.n <= 1_000_000
    }
}

const fn row(kind: Kind, seed: &'static [i64], n: u64) -> TableSeed {
    TableSeed { kind, seed, n }
}

/// Octahedral, cubic, square and triangular table seeds in table order.
pub fn table_seeds() -> Vec<TableSeed> {
    use Kind::*;
    vec![
        row(Oct, &[-7, 16, 16, 18, 18, 41], 120_000_000),
        row(Oct, &[-6, 10, 17, 17, 24, 40], 80_000_000),
        row(Oct, &[-2, 3, 6, 8, 11, 16], 1_000_000),
        row(Oct, &[-5, 8, 14, 16, 22, 35], 4_000_000),
        row(Oct, &[-1, 2, 2, 4, 4, 7], 1_000_000),
        row(Oct, &[-4, 7, 10, 12, 15, 26], 40_000_000),
        row(Oct, &[-2, 4, 5, 5, 6, 12], 1_000_000),
        row(Oct, &[-4, 6, 13, 13, 20, 30], 80_000_000),
        row(Cube, &[-7, 16, 18, 25, 41, 48, 50, 73], 1_000_000),
        row(Cube, &[-2, 5, 5, 6, 12, 13, 13, 20], 1_000_000),
        row(Cube, &[-1, 2, 3, 4, 6, 7, 8, 11], 1_000_000),
        row(Cube, &[-2, 3, 10, 11, 15, 16, 23, 28], 1_000_000),
        row(Square, &[1, 1, 1, 1], 100_000),
        row(Square, &[-7, 17, 17, 41], 100_000),
        row(Square, &[-3, 5, 13, 21], 100_000),
        row(Square, &[-27, 37, 173, 237], 100_000),
        row(Square, &[-3, 5, 12, 20], 100_000),
        row(Square, &[-1, 2, 3, 6], 100_000),
        row(Square, &[-1, 3, 3, 7], 100_000),
        row(Square, &[-5, 7, 31, 43], 100_000),
        row(Tri, &[1, 1, 1], 100_000),
        row(Tri, &[-11, 13, 73], 100_000),
        row(Tri, &[-5, 7, 19], 100_000),
        row(Tri, &[-17, 31, 43], 100_000),
        row(Tri, &[-1, 3, 3], 100_000),
        row(Tri, &[-9, 15, 23], 100_000),
        row(Tri, &[-3, 5, 9], 100_000),
        row(Tri, &[-7, 9, 33], 100_000),
        row(Tri, &[-2, 3, 6], 100_000),
        row(Tri, &[-3, 6, 7], 100_000),
        row(Tri, &[-1, 2, 2], 100_000),
        row(Tri, &[-4, 5, 20], 100_000),
    ]
}
