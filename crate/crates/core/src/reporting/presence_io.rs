use std::fs;
use std::path::Path;

use crate::enumeration::CurvaturePresence;
use crate::error::{Error, Result};

pub const PRESENCE_MAGIC: &[u8; 8] = b"PKCURV01";

/// Magic, `N` as little-endian `u64`, then the bit words little-endian.
pub fn presence_to_bytes(p: &CurvaturePresence) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + 8 * p.words().len());
    out.extend_from_slice(PRESENCE_MAGIC);
    out.extend_from_slice(&p.n().to_le_bytes());
    for w in p.words() {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

pub fn presence_from_bytes(bytes: &[u8]) -> Result<CurvaturePresence> {
    if bytes.len() < 16 || &bytes[..8] != PRESENCE_MAGIC {
        return Err(Error::MalformedPresence);
    }
    let n = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    let body = &bytes[16..];
    if body.len() % 8 != 0 || (body.len() / 8) as u64 != n.div_ceil(64) {
        return Err(Error::MalformedPresence);
    }
    let words = body.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
    CurvaturePresence::from_words(n, words).map_err(|_| Error::MalformedPresence)
}

pub fn write_presence(path: &Path, p: &CurvaturePresence) -> Result<()> {
    Ok(fs::write(path, presence_to_bytes(p))?)
}

pub fn read_presence(path: &Path) -> Result<CurvaturePresence> {
    presence_from_bytes(&fs::read(path)?)
}
