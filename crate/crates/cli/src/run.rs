use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use circlepack::checks::{run_suite, Suite, SuiteOptions, SuiteReport};
use circlepack::enumeration::{coprime_path_between, enumerate_curvatures, EnumOptions};
use circlepack::invariants::{
    chi2_circle, chi2_packing, has_circle_chi2, raw_symbol, rho_witnesses, Chi2Value, Obstruction,
};
use circlepack::kernel::{ford_circles, modular_type, parse_seed, validate_config, Config, Kind, Sign};
use circlepack::reporting::{render_svg, report_from_presence, table_seeds, write_presence, RenderLimits, SporadicReport};
use circlepack::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::*;

pub fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Classify(a) => classify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Sporadic(a) => sporadic(a),
        Command::Chi2(a) => chi2(a),
        Command::Ford(a) => ford(a),
        Command::Path(a) => path(a),
        Command::Verify(a) => verify(a),
        Command::Render(a) => render(a),
    }
}

fn packing(p: &PackingArgs) -> Result<Config> {
    let kind: Kind = p.kind.parse()?;
    let sign: Sign = p.sign.parse()?;
    validate_config(kind, &parse_seed(&p.seed)?, sign)
}

fn enum_opts(c: &CapArgs) -> Result<EnumOptions> {
    let mut o = EnumOptions { threads: c.threads, ..EnumOptions::default() };
    if c.threads == Some(0) {
        return Err(Error::Invalid("--threads must be at least 1".into()));
    }
    if let Some(m) = c.max_states {
        o.max_states = m;
    }
    if let Some(s) = c.time_budget {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Invalid("--time-budget must be a positive number of seconds".into()));
        }
        o.time_budget = Some(Duration::from_secs_f64(s));
    }
    if let Some(b) = c.max_memory {
        o.max_bitset_bytes = b;
    }
    Ok(o)
}

fn bound(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Invalid("--max must be at least 1".into()));
    }
    Ok(n)
}

fn packing_chi2(config: &Config, samples: usize, rng_seed: u64) -> Result<Chi2Value> {
    chi2_packing(config, samples, &mut ChaCha8Rng::seed_from_u64(rng_seed))
}

fn write(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
struct Classification {
    kind: Kind,
    seed: Vec<i64>,
    #[serde(rename = "type")]
    type_label: String,
    modulus: i64,
    residues: Vec<i64>,
    chi2: Chi2Value,
    obstruction: &'static str,
}

fn classify(a: ClassifyArgs) -> Result<u8> {
    let config = packing(&a.packing)?;
    let ty = modular_type(&config)?;
    let chi2 = packing_chi2(&config, a.verify_bound, a.rng_seed)?;
    let c = Classification {
        kind: config.kind(),
        seed: config.seed_values(),
        type_label: ty.label.clone(),
        modulus: ty.modulus,
        residues: ty.residues.clone(),
        chi2,
        obstruction: Obstruction::for_type(&ty, chi2).describe(),
    };
    if a.json {
        println!("{}", to_json(&c)?);
    } else {
        println!("kind: {}", c.kind);
        println!("seed: {}", join(&c.seed));
        println!("type: {} (mod {})", c.type_label, c.modulus);
        println!("chi2: {}", c.chi2);
        println!("obstruction: {}", c.obstruction);
    }
    Ok(0)
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn enumerate(a: EnumerateArgs) -> Result<u8> {
    let config = packing(&a.packing)?;
    let n = bound(a.n)?;
    let opts = enum_opts(&a.caps)?;
    eprintln!("enumerating {config} up to N = {n}");
    let t = Instant::now();
    let p = enumerate_curvatures(&config, n, &opts)?;
    eprintln!("done: {} states in {:.2?}", p.stats.states, t.elapsed());
    write_presence(&a.out, &p)?;
    println!("N: {n}");
    println!("present: {}", p.count());
    println!("states: {}", p.stats.states);
    println!("wrote {}", a.out.display());
    Ok(0)
}

/// Settings echoed into the JSON report. Thread count and caps are left out since they do not
/// change the result.
#[derive(Serialize)]
struct SporadicEcho<'a> {
    command: &'static str,
    kind: &'a str,
    seed: &'a str,
    sign: &'a str,
    max: u64,
    verify_bound: usize,
    rng_seed: u64,
}

fn sporadic(a: SporadicArgs) -> Result<u8> {
    let config = packing(&a.packing)?;
    let n = bound(a.n)?;
    let opts = enum_opts(&a.caps)?;
    let ty = modular_type(&config)?;
    let chi2 = packing_chi2(&config, a.verify_bound, a.rng_seed)?;
    eprintln!("{config}: type {}, chi2 {chi2}; enumerating up to N = {n}", ty.label);
    let t = Instant::now();
    let present = enumerate_curvatures(&config, n, &opts)?;
    eprintln!("done: {} states in {:.2?}", present.stats.states, t.elapsed());
    if let Some(out) = &a.out {
        write_presence(out, &present)?;
    }
    let rep = report_from_presence(&config, &ty, chi2, &present);
    let echo = SporadicEcho {
        command: "sporadic",
        kind: &a.packing.kind,
        seed: &a.packing.seed,
        sign: &a.packing.sign,
        max: n,
        verify_bound: a.verify_bound,
        rng_seed: a.rng_seed,
    };
    let json = rep.to_json(&echo)?;
    if let Some(p) = &a.json {
        write(p, &(json.clone() + "\n"))?;
    }
    if let Some(p) = &a.csv {
        write(p, &SporadicReport::to_csv(std::slice::from_ref(&rep))?)?;
    }
    if a.json.is_none() && a.csv.is_none() {
        println!("{json}");
    } else {
        print_summary(&rep);
    }
    Ok(0)
}

fn print_summary(r: &SporadicReport) {
    println!("{} ({}) type {} chi2 {} N {}", r.kind, join(&r.seed), r.type_label, r.chi2, r.n);
    println!("admissible: {}", r.admissible_count);
    println!("present: {}", r.present_count);
    println!("sporadic_count: {}", r.sporadic_count);
    println!("sporadic_max: {}", r.sporadic_max.map_or("-".to_string(), |m| m.to_string()));
}

fn chi2(a: Chi2Args) -> Result<u8> {
    let config = packing(&a.packing)?;
    let ty = modular_type(&config)?;
    let value = packing_chi2(&config, a.verify_bound, a.rng_seed)?;
    println!("{config}: type {}", ty.label);
    println!("chi2: {value}");
    let per_circle = has_circle_chi2(&ty);
    for c in config.seed_circles() {
        let k = config.curvature(c)?;
        if k == 0 {
            println!("circle {c}: curvature 0, skipped");
            continue;
        }
        let v = if per_circle { chi2_circle(&config, c)?.to_string() } else { "n/a".into() };
        println!("circle {c}: curvature {k}, value {v}");
        for w in rho_witnesses(&config, c)?.take(a.witnesses) {
            println!(
                "  rho = {:>8} at ({},{}) {:?}, (rho/a') = {:>2}",
                w.rho,
                w.x,
                w.y,
                w.class,
                raw_symbol(k, &w)
            );
        }
    }
    Ok(0)
}

fn ford(a: FordArgs) -> Result<u8> {
    let kind: Kind = a.kind.parse()?;
    if a.bound < 0 {
        return Err(Error::Invalid("--bound must be nonnegative".into()));
    }
    let circles = ford_circles(kind, a.bound);
    let rows: Vec<[String; 6]> = circles
        .iter()
        .map(|f| {
            let c = &f.circle;
            let touch = if c.curv.is_zero() { "inf".to_string() } else { format!("{:.6}", c.h1.to_f64() / c.curv.to_f64()) };
            [f.x.to_string(), f.y.to_string(), format!("{:?}", f.class).to_lowercase(), c.curv.to_string(), c.cocurv.to_string(), touch]
        })
        .collect();
    let header = ["x", "y", "class", "curvature", "cocurvature", "touches"];
    match &a.csv {
        Some(p) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(header).map_err(io)?;
            for r in &rows {
                w.write_record(r).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            write(p, &String::from_utf8_lossy(&bytes))?;
            println!("wrote {} circles to {}", rows.len(), p.display());
        }
        None => {
            println!("{:>5} {:>5} {:>6} {:>12} {:>14} {:>12}", header[0], header[1], header[2], header[3], header[4], header[5]);
            for r in &rows {
                println!("{:>5} {:>5} {:>6} {:>12} {:>14} {:>12}", r[0], r[1], r[2], r[3], r[4], r[5]);
            }
        }
    }
    Ok(0)
}

fn path(a: PathArgs) -> Result<u8> {
    let config = packing(&a.packing)?;
    let chain = coprime_path_between(&config, a.from, a.to)?;
    chain.verify()?;
    if a.json {
        println!("{}", to_json(&chain)?);
    } else {
        println!("{}", join(&chain.curvatures()).replace(',', " -> "));
        println!("length: {}", chain.len());
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let suite: Suite = a.suite.parse()?;
    if a.threads == Some(0) {
        return Err(Error::Invalid("--threads must be at least 1".into()));
    }
    let mut opts = SuiteOptions {
        bound: a.bound,
        n: bound(a.n)?,
        rng_seed: a.rng_seed,
        enumeration: EnumOptions { threads: a.threads, ..EnumOptions::default() },
        ..SuiteOptions::default()
    };
    if let Some(v) = a.verify_bound {
        opts.pairs = v;
        opts.circles = v;
        opts.moves = v;
    }
    let subjects: Vec<Option<Config>> = if !suite.needs_config() {
        vec![None]
    } else if a.table {
        table_seeds().iter().map(|r| r.config().map(Some)).collect::<Result<_>>()?
    } else {
        match (&a.kind, &a.seed) {
            (Some(k), Some(s)) => {
                let p = PackingArgs { kind: k.clone(), seed: s.clone(), sign: a.sign.clone() };
                vec![Some(packing(&p)?)]
            }
            _ => return Err(Error::Invalid(format!("the {suite} suite needs --kind and --seed, or --table"))),
        }
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in &subjects {
        let t = Instant::now();
        let r = run_suite(suite, s.as_ref(), &opts)?;
        eprintln!("{suite} on {}: {:.2?}", r.subject, t.elapsed());
        if !a.json {
            println!("{r}");
        }
        reports.push(r);
    }
    if a.json {
        println!("{}", to_json(&reports)?);
    }
    Ok(if reports.iter().all(SuiteReport::passed) { 0 } else { 2 })
}

fn render(a: RenderArgs) -> Result<u8> {
    let config = packing(&a.packing)?;
    let lim = RenderLimits { depth: a.depth, max_curvature: a.max_curvature, labels: a.labels, colors: !a.no_color };
    let svg = render_svg(&config, &lim)?;
    write(&a.out, &svg)?;
    println!("wrote {} circles to {}", svg.matches("<circle").count(), a.out.display());
    Ok(0)
}
