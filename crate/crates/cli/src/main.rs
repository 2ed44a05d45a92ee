//! `sdcodes`: build self-dual codes from group-ring constructions, map
//! them to binary, classify weight enumerators, derive new codes by
//! extension and neighboring, search parameter spaces, and re-check the
//! bundled manifests.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use sdcodes_cli::config::{resolve_workers, FileConfig};
use sdcodes_cli::pipeline::{
    self, describe_profile, extend_to_binary, neighbor_to_binary, parse_params,
    psi_image_generator, run_construction, ChainChoice,
};
use sdcodes_cli::record::{CodeRecord, Provenance};
use sdcodes_cli::reproduce::{reproduce, ReproduceOptions};
use sdcodes_cli::search::{self, GammaDomain, SearchConfig, TargetSpec};
use sdcodes_cli::tables::TableId;
use sdcodes::bincode::{classify, rains_bound, BinaryCode, Family};
use sdcodes::construct::build_generator;
use sdcodes::derive::NeighborCoords;
use sdcodes::groupring::RingMatrix;
use sdcodes::rings::RingId;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sdcodes", version, about = "Self-dual code construction and search toolkit")]
struct Cli {
    /// Worker thread count (also SDCODES_WORKERS or the config file).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Optional TOML config file (defaults to ./sdcodes.toml when present).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Group literal: C9, C3xC5 or C3,3.
    #[arg(long)]
    group: Option<String>,
    /// Coefficient ring: F2, F2+uF2, F4 or F4+uF4.
    #[arg(long)]
    ring: Option<String>,
    /// Border quadruple gamma1..gamma4 in ring shorthand.
    #[arg(long)]
    gamma: Option<String>,
    /// First group-ring element, in labeling order.
    #[arg(long)]
    v1: Option<String>,
    /// Second group-ring element.
    #[arg(long)]
    v2: Option<String>,
}

impl ParamArgs {
    fn build(&self) -> Result<sdcodes::construct::ConstructionParams> {
        let need = |o: &Option<String>, name: &str| {
            o.clone().ok_or_else(|| anyhow!("--{name} is required here"))
        };
        parse_params(
            &need(&self.group, "group")?,
            &need(&self.ring, "ring")?,
            &need(&self.gamma, "gamma")?,
            &need(&self.v1, "v1")?,
            &need(&self.v2, "v2")?,
        )
    }

    fn is_empty(&self) -> bool {
        self.group.is_none()
            && self.ring.is_none()
            && self.gamma.is_none()
            && self.v1.is_none()
            && self.v2.is_none()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a candidate (or a manifest of them), check self-duality,
    /// Gray-map to binary and classify.
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        /// Batch manifest: one `group ring g1,g2 v1 g3,g4 v2` row per line.
        #[arg(long, conflicts_with_all = ["group", "ring", "gamma", "v1", "v2"])]
        manifest: Option<PathBuf>,
        /// Gray route: canonical or alternate-f4u.
        #[arg(long, default_value = "canonical")]
        gray_chain: String,
        /// Write the record(s) as JSON into this directory or file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a stored record: recompute its profile bit-exactly.
    Verify { record: PathBuf },
    /// Exact minimum weight of a stored generator (`n k` header format).
    Minweight {
        #[arg(long)]
        gen: PathBuf,
    },
    /// Weight profile and enumerator family of a stored generator.
    Classify {
        #[arg(long)]
        gen: PathBuf,
    },
    /// Extend a length-n self-dual code to length n+2 with a unit c and a
    /// vector X with <X,X> = 1.
    Extend {
        /// Base record (construction provenance required).
        #[arg(long, conflicts_with = "gen")]
        record: Option<PathBuf>,
        /// Base binary generator file (extended over F2).
        #[arg(long)]
        gen: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
        /// The unit c in ring shorthand.
        #[arg(long)]
        c: String,
        /// The extension vector X in ring shorthand.
        #[arg(long)]
        x: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Neighbor of a self-dual binary code through a vector x outside it.
    Neighbor {
        /// Base record.
        #[arg(long, conflicts_with = "gen")]
        record: Option<PathBuf>,
        /// Base binary generator file.
        #[arg(long)]
        gen: Option<PathBuf>,
        /// 0/1 suffix of x (after the zero prefix).
        #[arg(long)]
        x: String,
        /// Number of leading zero coordinates of x.
        #[arg(long, default_value_t = 0)]
        zero_prefix: usize,
        /// Coordinate interpretation of x: standard-form or raw.
        #[arg(long)]
        coords: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search construction parameters for codes matching a target.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long)]
        ring: String,
        /// Fixed gamma quadruple; omit to sweep all quadruples.
        #[arg(long)]
        gamma: Option<String>,
        /// Target minimum weight of the binary image.
        #[arg(long)]
        target_d: usize,
        /// Target family (e.g. W64_2).
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long)]
        beta: Option<i64>,
        /// Target gamma parameter of the length-68 forms.
        #[arg(long)]
        gamma_param: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Maximum candidates to evaluate.
        #[arg(long)]
        budget: Option<u64>,
        /// Resume offset returned by a previous partial run.
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long, default_value = "canonical")]
        gray_chain: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run bundled manifests (table1..table10 or `all`) and report
    /// PASS/FAIL/SKIP per row.
    Reproduce {
        /// table1..table10, or `all`.
        table: String,
        /// Neighbor-vector interpretation: standard-form or raw.
        #[arg(long)]
        neighbor_coords: Option<String>,
        #[arg(long, default_value = "canonical")]
        gray_chain: String,
    },
}

fn parse_coords(s: &str) -> Result<NeighborCoords> {
    match s {
        "standard-form" | "standard" => Ok(NeighborCoords::StandardForm),
        "raw" => Ok(NeighborCoords::Raw),
        _ => bail!("unknown coordinate interpretation `{s}` (standard-form | raw)"),
    }
}

fn parse_family(s: &str) -> Result<Family> {
    match s.to_uppercase().replace(',', "_").as_str() {
        "W56_1" => Ok(Family::W56_1),
        "W56_2" => Ok(Family::W56_2),
        "W64_1" => Ok(Family::W64_1),
        "W64_2" => Ok(Family::W64_2),
        "W68_1" => Ok(Family::W68_1),
        "W68_2" => Ok(Family::W68_2),
        "W80_2" => Ok(Family::W80_2),
        _ => bail!("unknown family `{s}`"),
    }
}

fn load_code(path: &Path) -> Result<BinaryCode> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(BinaryCode::load(BufReader::new(file))?)
}

fn write_record(record: &CodeRecord, out: Option<&Path>, json: bool) -> Result<()> {
    if let Some(path) = out {
        let path = if path.is_dir() { path.join(format!("{}.json", record.id)) } else { path.to_path_buf() };
        record.save(&path)?;
        println!("wrote {}", path.display());
    } else if json {
        println!("{}", serde_json::to_string_pretty(record)?);
    }
    Ok(())
}

/// The F2/F2+uF2 generator a record's code can be extended from.
fn extension_base_from_record(rec: &CodeRecord) -> Result<RingMatrix> {
    let (group, ring, gamma, v1, v2) = rec.construct_provenance()?;
    let params = parse_params(&group, &ring, &gamma, &v1, &v2)?;
    match params.ring() {
        RingId::F4U => psi_image_generator(&params),
        RingId::F2 | RingId::F2U => {
            let g = build_generator(&params);
            if !sdcodes::construct::is_self_dual_over_ring(&g)? {
                bail!("record's construction is not self-dual over {}", params.ring());
            }
            Ok(g)
        }
        RingId::F4 => bail!("extension requires an F2, F2+uF2 or F4+uF4 base, got F4"),
    }
}

fn binary_as_ring_matrix(code: &BinaryCode) -> RingMatrix {
    let ring = RingId::F2;
    let mut m = RingMatrix::zero(ring, code.k(), code.n());
    for r in 0..code.k() {
        for c in 0..code.n() {
            if code.generator().get(r, c) {
                m.set(r, c, ring.one()).expect("same ring");
            }
        }
    }
    m
}

fn run(cli: Cli) -> Result<bool> {
    let file_config = FileConfig::load(cli.config.as_deref())?;
    if let Some(workers) = resolve_workers(cli.workers, &file_config) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring the worker pool")?;
    }

    match cli.command {
        Command::Construct { params, manifest, gray_chain, out } => {
            let chain = ChainChoice::parse(
                &file_config.gray_chain.clone().filter(|_| gray_chain == "canonical").unwrap_or(gray_chain),
            )?;
            let mut all_ok = true;
            let rows: Vec<(String, sdcodes::construct::ConstructionParams)> = if let Some(path) =
                manifest
            {
                let file =
                    File::open(&path).with_context(|| format!("opening {}", path.display()))?;
                let mut rows = Vec::new();
                for (ln, line) in BufReader::new(file).lines().enumerate() {
                    let line = line?;
                    let t = line.trim();
                    if t.is_empty() || t.starts_with('#') {
                        continue;
                    }
                    let p = pipeline::parse_manifest_row(t)
                        .with_context(|| format!("{}:{}", path.display(), ln + 1))?;
                    rows.push((t.to_string(), p));
                }
                rows
            } else {
                if params.is_empty() {
                    bail!("provide --group/--ring/--gamma/--v1/--v2 or --manifest");
                }
                vec![("(flags)".into(), params.build()?)]
            };

            for (label, p) in rows {
                let desc = format!(
                    "{} {} gamma=({})",
                    p.group().literal(),
                    p.ring(),
                    sdcodes::rings::emit_vector(p.gamma())
                );
                let outcome = run_construction(p, chain)?;
                if !outcome.ring_self_dual {
                    all_ok = false;
                    println!("{label}: NOT self-dual over the ring — {desc} (flagged, no record)");
                    continue;
                }
                let profile =
                    outcome.profile.clone().ok_or_else(|| anyhow!("missing profile"))?;
                println!("{label}: {}", describe_profile(&outcome.code, &profile));
                let record = CodeRecord::new(
                    &outcome.code,
                    profile,
                    Provenance::Construct {
                        group: outcome.params.group().literal(),
                        ring: outcome.params.ring().to_string(),
                        gamma: sdcodes::rings::emit_vector(outcome.params.gamma()),
                        v1: sdcodes::rings::emit_vector(&outcome.params.v1().coeffs()),
                        v2: sdcodes::rings::emit_vector(&outcome.params.v2().coeffs()),
                        gray_chain: format!("{chain:?}"),
                    },
                    outcome.ring_self_dual,
                );
                write_record(&record, out.as_deref(), cli.json)?;
            }
            Ok(all_ok)
        }

        Command::Verify { record } => {
            let rec = CodeRecord::load(&record)?;
            match rec.verify() {
                Ok(()) => {
                    println!("{}: PASS — profile reproduces bit-exactly", record.display());
                    Ok(true)
                }
                Err(e) => {
                    println!("{}: FAIL — {e:#}", record.display());
                    Ok(false)
                }
            }
        }

        Command::Minweight { gen } => {
            let code = load_code(&gen)?;
            println!("{}", code.min_weight());
            Ok(true)
        }

        Command::Classify { gen } => {
            let code = load_code(&gen)?;
            let profile = classify(&code)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&profile)?);
            } else {
                println!("{}", describe_profile(&code, &profile));
                let extremal =
                    sdcodes::bincode::is_extremal(code.n(), code.is_type_ii(), profile.d);
                println!(
                    "bound for n={}: {} ({})",
                    code.n(),
                    rains_bound(code.n(), code.is_type_ii()),
                    if extremal { "extremal" } else { "not extremal" }
                );
            }
            Ok(true)
        }

        Command::Extend { record, gen, params, c, x, out } => {
            let base = if let Some(path) = record {
                extension_base_from_record(&CodeRecord::load(&path)?)?
            } else if let Some(path) = gen {
                binary_as_ring_matrix(&load_code(&path)?)
            } else if !params.is_empty() {
                let p = params.build()?;
                match p.ring() {
                    RingId::F4U => psi_image_generator(&p)?,
                    _ => build_generator(&p),
                }
            } else {
                bail!("provide --record, --gen or construction flags");
            };
            let (code, profile) = extend_to_binary(base, &c, &x)?;
            println!("{}", describe_profile(&code, &profile));
            let record = CodeRecord::new(
                &code,
                profile,
                Provenance::Extend { base: "(input)".into(), c, x },
                true,
            );
            write_record(&record, out.as_deref(), cli.json)?;
            Ok(true)
        }

        Command::Neighbor { record, gen, x, zero_prefix, coords, out } => {
            let base = if let Some(path) = record {
                CodeRecord::load(&path)?.code()?
            } else if let Some(path) = gen {
                load_code(&path)?
            } else {
                bail!("provide --record or --gen");
            };
            let coords = match coords.or(file_config.neighbor_coords.clone()) {
                Some(s) => parse_coords(&s)?,
                None => NeighborCoords::StandardForm,
            };
            let (code, profile) = neighbor_to_binary(&base, &x, zero_prefix, coords)?;
            println!(
                "{} (x interpreted in {} coordinates)",
                describe_profile(&code, &profile),
                coords.label()
            );
            let record = CodeRecord::new(
                &code,
                profile,
                Provenance::Neighbor {
                    base: "(input)".into(),
                    x_suffix: x,
                    zero_prefix,
                    coords: coords.label().into(),
                },
                true,
            );
            write_record(&record, out.as_deref(), cli.json)?;
            Ok(true)
        }

        Command::Search {
            group,
            ring,
            gamma,
            target_d,
            family,
            alpha,
            beta,
            gamma_param,
            seed,
            budget,
            start,
            gray_chain,
            out,
        } => {
            let config = SearchConfig {
                group,
                ring,
                gamma_domain: match gamma {
                    Some(g) => GammaDomain::Fixed(g),
                    None => GammaDomain::Exhaustive,
                },
                target: TargetSpec {
                    d: target_d,
                    family: family.as_deref().map(parse_family).transpose()?,
                    alpha,
                    beta,
                    gamma: gamma_param,
                },
                seed: seed.or(file_config.seed).unwrap_or(0),
                budget: budget.or(file_config.budget).unwrap_or(1_000_000),
                start,
            };
            let ledger = search::run(&config, ChainChoice::parse(&gray_chain)?)?;
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&ledger)?)?;
                println!("wrote {}", path.display());
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&ledger)?);
            } else {
                print!("{}", ledger.render_text());
            }
            Ok(true)
        }

        Command::Reproduce { table, neighbor_coords, gray_chain } => {
            let opts = ReproduceOptions {
                chain: ChainChoice::parse(&gray_chain)?,
                neighbor_coords: match neighbor_coords.or(file_config.neighbor_coords.clone()) {
                    Some(s) => parse_coords(&s)?,
                    None => NeighborCoords::StandardForm,
                },
            };
            let ids: Vec<TableId> = if table.eq_ignore_ascii_case("all") {
                TableId::ALL.to_vec()
            } else {
                vec![table.parse().map_err(|e: String| anyhow!(e))?]
            };
            let mut all_pass = true;
            let mut reports = Vec::new();
            for id in ids {
                let report = reproduce(id, &opts)?;
                all_pass &= report.all_pass();
                if !cli.json {
                    print!("{}", report.render_text());
                    std::io::stdout().flush().ok();
                }
                reports.push(report);
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            Ok(all_pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
