use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::{enumerate_curvatures, CurvaturePresence, EnumOptions};
use crate::error::{Error, Result};
use crate::invariants::{chi2_packing, has_global_chi2, Chi2Value, Obstruction};
use crate::kernel::{modular_type, Config, Kind, ModularType};

/// Sporadic lists longer than this are cut in JSON output.
pub const JSON_LIST_LIMIT: usize = 100_000;

/// Residues mod `M` of the type, after checking it belongs to `kind`.
pub fn admissible_residues(kind: Kind, ty: &ModularType) -> Result<BTreeSet<i64>> {
    if ty.kind != kind {
        return Err(Error::Invalid(format!("type {} belongs to {}, not {kind}", ty.label, ty.kind)));
    }
    Ok(ty.residues.iter().copied().collect())
}

/// Passes the residue filter and is not of the obstructed shape.
pub fn is_admissible(ty: &ModularType, obstruction: Obstruction, n: u64) -> bool {
    ty.residues.contains(&((n % ty.modulus as u64) as i64)) && !obstruction.contains(n)
}

pub fn admissible_count(ty: &ModularType, obstruction: Obstruction, n: u64) -> u64 {
    (1..=n).filter(|&k| is_admissible(ty, obstruction, k)).count() as u64
}

/// Integers up to `n` of the excluded shape. Empty unless `chi2` is `-1` on a type carrying
/// a global invariant. Not intersected with the residue classes.
pub fn obstructed_values(ty: &ModularType, chi2: Chi2Value, n: u64) -> Vec<u64> {
    let ob = Obstruction::for_type(ty, chi2);
    if ob == Obstruction::None {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    let mut k = 1u64;
    while k * k <= n {
        for m in [1, 2, 3] {
            let v = m * k * k;
            if v <= n && ob.contains(v) {
                out.insert(v);
            }
        }
        k += 1;
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub enumeration: EnumOptions,
    /// Random circles checked when computing the packing invariant.
    pub chi2_samples: usize,
    pub rng_seed: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { enumeration: EnumOptions::default(), chi2_samples: 64, rng_seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicReport {
    pub kind: Kind,
    pub seed: Vec<i64>,
    #[serde(rename = "type")]
    pub type_label: String,
    pub chi2: Chi2Value,
    pub obstruction: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub admissible_count: u64,
    pub present_count: u64,
    pub sporadic_count: u64,
    pub sporadic_max: Option<u64>,
    pub sporadic: Vec<u64>,
}

/// Classifies, enumerates and sieves.
pub fn sporadic_report(config: &Config, n: u64, opts: &ReportOptions) -> Result<SporadicReport> {
    let ty = modular_type(config)?;
    let chi2 = if has_global_chi2(&ty) {
        chi2_packing(config, opts.chi2_samples, &mut ChaCha8Rng::seed_from_u64(opts.rng_seed))?
    } else {
        Chi2Value::NotApplicable
    };
    let present = enumerate_curvatures(config, n, &opts.enumeration)?;
    Ok(report_from_presence(config, &ty, chi2, &present))
}

/// The sieve step alone, for a presence set computed elsewhere.
pub fn report_from_presence(config: &Config, ty: &ModularType, chi2: Chi2Value, present: &CurvaturePresence) -> SporadicReport {
    let n = present.n();
    let ob = Obstruction::for_type(ty, chi2);
    let mut admissible = 0;
    let mut sporadic = Vec::new();
    for k in 1..=n {
        if is_admissible(ty, ob, k) {
            admissible += 1;
            if !present.contains(k) {
                sporadic.push(k);
            }
        }
    }
    SporadicReport {
        kind: config.kind(),
        seed: config.seed_values(),
        type_label: ty.label.clone(),
        chi2,
        obstruction: ob.describe().to_string(),
        n,
        admissible_count: admissible,
        present_count: present.count(),
        sporadic_count: sporadic.len() as u64,
        sporadic_max: sporadic.last().copied(),
        sporadic,
    }
}

#[derive(Serialize)]
struct JsonReport<'a, C: Serialize> {
    tool: &'static str,
    version: &'static str,
    config: &'a C,
    kind: Kind,
    seed: &'a [i64],
    #[serde(rename = "type")]
    type_label: &'a str,
    chi2: Chi2Value,
    obstruction: &'a str,
    #[serde(rename = "N")]
    n: u64,
    admissible_count: u64,
    present_count: u64,
    sporadic_count: u64,
    sporadic_max: Option<u64>,
    sporadic: &'a [u64],
    sporadic_truncated: bool,
}

const CSV_HEADER: [&str; 10] =
    ["kind", "seed", "type", "chi2", "obstruction", "N", "admissible_count", "present_count", "sporadic_count", "sporadic_max"];

impl SporadicReport {
    /// Pretty JSON with the tool version and `config` echoed back.
    pub fn to_json<C: Serialize>(&self, config: &C) -> Result<String> {
        let truncated = self.sporadic.len() > JSON_LIST_LIMIT;
        let j = JsonReport {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            config,
            kind: self.kind,
            seed: &self.seed,
            type_label: &self.type_label,
            chi2: self.chi2,
            obstruction: &self.obstruction,
            n: self.n,
            admissible_count: self.admissible_count,
            present_count: self.present_count,
            sporadic_count: self.sporadic_count,
            sporadic_max: self.sporadic_max,
            sporadic: &self.sporadic[..self.sporadic.len().min(JSON_LIST_LIMIT)],
            sporadic_truncated: truncated,
        };
        serde_json::to_string_pretty(&j).map_err(|e| Error::Io(e.to_string()))
    }

    /// One header line and one row per report.
    pub fn to_csv(reports: &[SporadicReport]) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(CSV_HEADER).map_err(io)?;
        for r in reports {
            let seed: Vec<String> = r.seed.iter().map(|v| v.to_string()).collect();
            w.write_record([
                r.kind.to_string(),
                seed.join(" "),
                r.type_label.clone(),
                r.chi2.to_string(),
                r.obstruction.clone(),
                r.n.to_string(),
                r.admissible_count.to_string(),
                r.present_count.to_string(),
                r.sporadic_count.to_string(),
                r.sporadic_max.map_or(String::new(), |m| m.to_string()),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}
