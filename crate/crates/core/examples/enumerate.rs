//! Enumerates the curvatures of the (−1,2,2,4,4,7) octahedral packing and round-trips the
//! presence file.
//!
//! cargo run --release --example enumerate [N]

use circlepack::enumeration::{enumerate_curvatures, EnumOptions};
use circlepack::kernel::{validate_config, Kind, Sign};
use circlepack::reporting::{read_presence, write_presence};

fn main() -> circlepack::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let c = validate_config(Kind::Oct, &[-1, 2, 2, 4, 4, 7], Sign::Plus)?;
    let p = enumerate_curvatures(&c, n, &EnumOptions::default())?;
    println!("{c}: {} of 1..={n} present, {} states", p.count(), p.stats.states);
    let first: Vec<u64> = (1..=n).filter(|&k| p.contains(k)).take(15).collect();
    println!("smallest: {first:?}");

    let path = std::env::temp_dir().join("oct-1-2-2-4-4-7.pkc");
    write_presence(&path, &p)?;
    let back = read_presence(&path)?;
    assert_eq!(back, p);
    println!("wrote and re-read {} ({} bytes)", path.display(), std::fs::metadata(&path)?.len());
    Ok(())
}
