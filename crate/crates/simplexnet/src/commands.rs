//! Command line interface. Each subcommand writes its result to `--out`
//! (or stdout) and a short summary to stdout.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use simplexnet_core::bits::to_bitstring;
use simplexnet_core::exactcover::count_solutions_tn_with;
use simplexnet_core::experiments::amplitude_classes::{
    run_amplitude_classes, REFERENCE_MAGNITUDES,
};
use simplexnet_core::experiments::anisotropy::{run_anisotropy, PREDICTED_PATTERNS};
use simplexnet_core::experiments::region_entropy::{best_matches, Placement, MATCH_TOLERANCE};
use simplexnet_core::experiments::scan4::ScanConfig;
use simplexnet_core::frustration::{
    frustration_indicator, unit_couplings, wannier_estimate, WANNIER_NOTE,
};
use simplexnet_core::network::{
    contract_diagonal, contract_pairwise, plan_order, DEFAULT_MEMORY_CAP,
};
use simplexnet_core::spectral::{entanglement_entropy, ground_state_small_lambda};
use simplexnet_core::HamiltonianSpec;

use crate::drivers;
use crate::formats::{
    parse_cover, parse_lattice, parse_network, parse_region, parse_state_csv, write_manifold,
    write_state_csv, ManifoldFile,
};
use crate::report::Provenance;

#[derive(Debug, Parser)]
#[command(
    name = "simplexnet",
    version,
    about = "Simplex tensor networks for frustrated spin lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ContractMethod {
    Diagonal,
    Pairwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Tn,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlacementArg {
    Apex,
    Centered,
    All,
}

impl From<PlacementArg> for Placement {
    fn from(p: PlacementArg) -> Self {
        match p {
            PlacementArg::Apex => Placement::Apex,
            PlacementArg::Centered => Placement::Centered,
            PlacementArg::All => Placement::All,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Contract a network file into a state CSV.
    Contract {
        #[arg(long)]
        network: PathBuf,
        #[arg(long, value_enum, default_value = "diagonal")]
        method: ContractMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ground state of the transverse-field antiferromagnet on a lattice.
    Eig {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long = "J", default_value_t = 1.0, allow_hyphen_values = true)]
        j: f64,
        #[arg(long, default_value_t = 1e-3)]
        lambda: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entanglement entropy (ebits) of a region of a state CSV.
    Entropy {
        #[arg(long)]
        state: PathBuf,
        /// Comma-separated sites, e.g. "0,1,2".
        #[arg(long)]
        region: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical ground manifold of the unit antiferromagnet.
    Ground {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count Exact Cover solutions.
    Xcover {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "tn")]
        method: CountMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Region entropies of the simplex rows on triangular patches.
    Table1 {
        #[arg(long, value_delimiter = ',', default_value = "3,4,5,6")]
        sides: Vec<usize>,
        #[arg(long, value_enum, default_value = "all")]
        placement: PlacementArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Small-field ground state of the six-spin lattice.
    Eq4 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize the inner-square entropy over symmetric 4-qubit simplices.
    Scan4 {
        #[arg(long, default_value_t = 9)]
        grid: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 100)]
        max_passes: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Anisotropic couplings on a triangle and the six-site patch.
    Aniso {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Finite-patch degeneracy exponents log2(M)/n.
    Wannier {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        sides: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r.context("writing stdout"),
            }
        }
    }
}

/// Prints the summary unless the payload already went to stdout.
fn summary(out: &Option<PathBuf>, text: &str) {
    if out.is_some() {
        println!("{text}");
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Contract {
            network,
            method,
            out,
        } => {
            let spec = parse_network(&read(&network)?)?.to_spec()?;
            let (state, norm_sqr) = match method {
                ContractMethod::Diagonal => {
                    let c = contract_diagonal(&spec)?;
                    (c.state, c.norm_sqr)
                }
                ContractMethod::Pairwise => {
                    let c = contract_pairwise(&spec, &plan_order(&spec), DEFAULT_MEMORY_CAP)?;
                    (c.state, c.norm_sqr)
                }
            };
            let header = Provenance::new("contract")
                .param("network", network.display())
                .param("method", format!("{method:?}").to_lowercase())
                .header();
            emit(&out, &format!("{header}{}", write_state_csv(&state)))?;
            summary(
                &out,
                &format!("sites={} norm_sqr={norm_sqr:.6}", spec.n_sites()),
            );
        }
        Command::Eig {
            lattice,
            j,
            lambda,
            out,
        } => {
            let l = parse_lattice(&read(&lattice)?)?.lattice;
            let gs = ground_state_small_lambda(&HamiltonianSpec::uniform(&l, j, lambda))?;
            let header = Provenance::new("eig")
                .param("lattice", lattice.display())
                .param("J", j)
                .param("lambda", lambda)
                .header();
            let text = format!(
                "{header}# energy={:.6}\n# gap={:.6}\n{}",
                gs.energy,
                gs.gap(),
                write_state_csv(&gs.state)
            );
            emit(&out, &text)?;
            summary(
                &out,
                &format!("energy={:.6} gap={:.6}", gs.energy, gs.gap()),
            );
        }
        Command::Entropy { state, region, out } => {
            let psi = parse_state_csv(&read(&state)?)?;
            let r = parse_region(psi.n_qubits(), &region)?;
            let s = entanglement_entropy(&psi, &r)?;
            let header = Provenance::new("entropy")
                .param("state", state.display())
                .param("region", &region)
                .header();
            emit(&out, &format!("{header}entropy={s:.6}\n"))?;
            summary(&out, &format!("entropy={s:.6}"));
        }
        Command::Ground { lattice, out } => {
            let l = parse_lattice(&read(&lattice)?)?.lattice;
            let m = drivers::enumerate_ground(&l)?;
            let verdict = frustration_indicator(&unit_couplings(&l), m.energy).verdict();
            let header = Provenance::new("ground")
                .param("lattice", lattice.display())
                .header();
            emit(
                &out,
                &format!("{header}{}", write_manifold(&ManifoldFile::from(&m))),
            )?;
            summary(
                &out,
                &format!("M={} E0={} {verdict}", m.degeneracy(), m.energy),
            );
        }
        Command::Xcover {
            instance,
            method,
            out,
        } => {
            let inst = parse_cover(&read(&instance)?)?;
            let text = match method {
                CountMethod::Tn => {
                    let c = count_solutions_tn_with(&inst, DEFAULT_MEMORY_CAP)?;
                    format!(
                        "count={} free_bits={} peak_rank={} peak_elements={}\n",
                        c.count, c.free_bits, c.peak_rank, c.peak_elements
                    )
                }
                CountMethod::Brute => {
                    format!("count={}\n", drivers::count_solutions_bruteforce(&inst)?)
                }
            };
            let header = Provenance::new("xcover")
                .param("instance", instance.display())
                .param("method", format!("{method:?}").to_lowercase())
                .header();
            emit(&out, &format!("{header}{text}"))?;
            summary(&out, text.trim_end());
        }
        Command::Table1 {
            sides,
            placement,
            out,
        } => {
            if sides.is_empty() {
                bail!("no patch sides given");
            }
            let entries = drivers::run_region_entropy(&sides, placement.into())?;
            let sides_text: Vec<String> = sides.iter().map(usize::to_string).collect();
            let mut text = Provenance::new("table1")
                .param("sides", sides_text.join(","))
                .param("placement", format!("{placement:?}").to_lowercase())
                .header();
            text.push_str(ENTROPY_CSV_HEADER);
            text.push('\n');
            for e in &entries {
                writeln!(
                    text,
                    "{},{},{},{},{},{},{},{:.4},{:.4},{:.4}",
                    e.side,
                    e.n_sites,
                    e.label,
                    e.n_a,
                    e.apex.0,
                    e.apex.1,
                    e.boundary,
                    e.entropy,
                    e.reference,
                    e.residual()
                )?;
            }
            emit(&out, &text)?;
            summary(&out, &region_entropy_summary(&entries));
        }
        Command::Eq4 { out } => {
            let text = format!(
                "{}{}",
                Provenance::new("eq4").header(),
                amplitude_class_report()?
            );
            emit(&out, &text)?;
            summary(&out, "eq4 report written");
        }
        Command::Scan4 {
            grid,
            seed,
            restarts,
            max_passes,
            out,
        } => {
            let config = ScanConfig {
                grid,
                seed,
                restarts,
                max_passes,
            };
            let r = drivers::run_scan4(&config)?;
            let mut text = Provenance::new("scan4")
                .param("grid", grid)
                .param("seed", seed)
                .param("restarts", restarts)
                .param("max_passes", max_passes)
                .header();
            let fmt5 = |c: [f64; 5]| c.map(|v| format!("{v:.6}")).join(" ");
            writeln!(text, "# best_entropy={:.4}", r.best.entropy)?;
            writeln!(text, "# best_coeffs={}", fmt5(r.best.coeffs))?;
            writeln!(text, "# reference_entropy={:.4}", r.reference.entropy)?;
            writeln!(text, "# gauge_fixed={}", fmt5(r.gauge_fixed))?;
            writeln!(text, "# pattern_residual={:.6}", r.pattern_residual)?;
            writeln!(text, "# converged={}", r.converged)?;
            text.push_str(SCAN_CSV_HEADER);
            text.push('\n');
            for (k, p) in r.trace.iter().enumerate() {
                let c = p.coeffs;
                writeln!(
                    text,
                    "{k},{:.6},{:.6},{:.6},{:.6},{:.6},{:.4}",
                    c[0], c[1], c[2], c[3], c[4], p.entropy
                )?;
            }
            emit(&out, &text)?;
            summary(
                &out,
                &format!(
                    "best_entropy={:.4} reference_entropy={:.4} pattern_residual={:.6}",
                    r.best.entropy, r.reference.entropy, r.pattern_residual
                ),
            );
        }
        Command::Aniso { out } => {
            let text = format!("{}{}", Provenance::new("aniso").header(), aniso_report()?);
            emit(&out, &text)?;
            summary(&out, "aniso report written");
        }
        Command::Wannier { sides, out } => {
            let sides_text: Vec<String> = sides.iter().map(usize::to_string).collect();
            let mut text = Provenance::new("wannier")
                .param("sides", sides_text.join(","))
                .header();
            text.push_str("side,n_sites,degeneracy,exponent\n");
            for p in wannier_estimate(&sides)? {
                writeln!(
                    text,
                    "{},{},{},{:.4}",
                    p.side, p.n_sites, p.degeneracy, p.exponent
                )?;
            }
            writeln!(text, "# {WANNIER_NOTE}")?;
            emit(&out, &text)?;
            summary(&out, "wannier table written");
        }
    }
    Ok(())
}

pub const ENTROPY_CSV_HEADER: &str =
    "side,n_sites,simplex,n_a,apex_row,apex_col,boundary,entropy,reference,residual";

pub const SCAN_CSV_HEADER: &str = "step,a0,a1,a2,a3,a4,entropy";

fn region_entropy_summary(
    entries: &[simplexnet_core::experiments::region_entropy::EntropyEntry],
) -> String {
    let mut s = String::new();
    for m in best_matches(entries) {
        let values: Vec<String> = m
            .per_size
            .iter()
            .map(|b| format!("{:.4}@({},{})", b.entropy, b.apex.0, b.apex.1))
            .collect();
        let status = if m.matches() { "match" } else { "no match" };
        writeln!(
            s,
            "{} side={} best=[{}] max_residual={:.4} ({status} at tolerance {MATCH_TOLERANCE})",
            m.label,
            m.side,
            values.join(", "),
            m.max_residual
        )
        .unwrap();
    }
    s.trim_end().to_string()
}

fn amplitude_class_report() -> Result<String> {
    let r = run_amplitude_classes()?;
    let mut s = String::new();
    writeln!(s, "field={:e}", r.field)?;
    writeln!(s, "energy={:.6}", r.energy)?;
    writeln!(s, "gap={:.6}", r.gap)?;
    writeln!(s, "pt_overlap={:.6}", r.pt_overlap)?;
    writeln!(s, "classes={}", r.classes.len())?;
    let residuals = r.magnitude_residuals();
    for (k, c) in r.classes.iter().enumerate() {
        let reference = REFERENCE_MAGNITUDES.get(k).copied().unwrap_or(f64::NAN);
        writeln!(
            s,
            "class {k}: magnitude={:.4} reference={reference:.2} residual={:.4} size={}",
            c.magnitude,
            residuals.get(k).copied().unwrap_or(f64::NAN),
            c.members.len()
        )?;
    }
    writeln!(s, "listed_signs={:?}", r.listed_signs)?;
    writeln!(s, "magnitudes_match={}", r.magnitudes_match())?;
    writeln!(s, "signs_match={}", r.signs_match())?;
    writeln!(s, "listing_consistent={}", r.listing_consistent())?;
    writeln!(
        s,
        "w_structure_zero_field_limit={}",
        r.limit_w_structure.passed()
    )?;
    writeln!(
        s,
        "w_structure_finite_field={} (largest amplitude outside the classical manifold {:.2e})",
        r.finite_field_w_structure.passed(),
        r.admixture
    )?;
    writeln!(s, "listed states (configuration, listed class, amplitude, computed class, flipped amplitude):")?;
    for l in &r.listed {
        writeln!(
            s,
            "{} {} {:+.4} {} {:+.4}",
            to_bitstring(l.configuration, 6),
            l.listed_class,
            l.amplitude,
            l.computed_class.map_or("-".to_string(), |c| c.to_string()),
            l.flipped_amplitude
        )?;
    }
    Ok(s)
}

fn aniso_report() -> Result<String> {
    let mut s = String::new();
    writeln!(
        s,
        "horizontal bonds (same patch row) J=-1, slanted bonds J=+1"
    )?;
    writeln!(
        s,
        "patterns read as (base-left, base-right, apex); predicted {PREDICTED_PATTERNS:?}"
    )?;
    for c in run_anisotropy()? {
        let configs: Vec<String> = c
            .configurations
            .iter()
            .map(|&x| to_bitstring(x, c.n_sites))
            .collect();
        writeln!(s, "case={} sites={}", c.name, c.n_sites)?;
        writeln!(s, "  E0={} M={}", c.ground_energy, c.configurations.len())?;
        writeln!(s, "  configurations={}", configs.join(" "))?;
        writeln!(s, "  patterns={}", c.patterns.join(" "))?;
        writeln!(s, "  patterns_as_predicted={}", c.patterns_as_predicted())?;
        writeln!(s, "  w_structure={}", c.w_structure_passed)?;
        writeln!(s, "  frustration={}", c.frustration.verdict())?;
    }
    Ok(s)
}
