//! `swcover`: exact invariants of spherical 3-manifolds and obstruction
//! checks for configurations of embedded surfaces in 4-manifolds.
//!
//! Exit status: 0 when no check reports an obstruction or contradiction,
//! 1 when one does, 2 on usage or input errors.

mod report;
mod scenario;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use swcover::constraints::evaluate_scenario;
use swcover::exactmath::rational::Rational;
use swcover::exactmath::rootsum::{alpha_sum, beta_sum};
use swcover::exactmath::dedekind_sum;
use swcover::plumbing::{
    cusp_boundary_data, cusp_matching_solutions, cusp_sharpness_obstruction, sharp_delta_search,
    PlumbingGraph,
};
use swcover::spherical::{
    lens_delta, lens_eta, prism_invariants, rho_lens_cover, rho_prism_cover, y0_deltas,
};
use swcover::swcalc::mu;

#[derive(Parser)]
#[command(
    name = "swcover",
    version,
    about = "Exact eta/delta invariants and Seiberg-Witten obstruction checks for surface configurations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Query exact invariants of the catalog 3-manifolds
    Invariant {
        #[command(subcommand)]
        which: InvariantCmd,
    },
    /// Branched-cover report for a scenario file
    Cover {
        /// Path to a JSON scenario document
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Run every obstruction check on a scenario file
    Check {
        /// Path to a JSON scenario document
        #[arg(long)]
        scenario: PathBuf,
        /// Emit machine-readable JSON verdicts
        #[arg(long)]
        json_out: bool,
    },
    /// Plumbing graph tables and characteristic-vector searches
    Plumbing {
        #[command(subcommand)]
        which: PlumbingCmd,
    },
    /// Raw covering-formula coefficients mu_j(n; n_0, ..., n_(p-1))
    Mu {
        /// The prime p
        #[arg(long)]
        prime: u64,
        /// The top argument n, an integer or half-integer such as "-5/2"
        #[arg(long, allow_hyphen_values = true)]
        top: String,
        /// Comma-separated n_0, ..., n_(p-1)
        #[arg(long, allow_hyphen_values = true)]
        parts: String,
        /// The omitted index j
        #[arg(long)]
        j: usize,
    },
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// delta(L(p,q), s_u); all u when u is omitted
    LensDelta {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        u: Option<u64>,
    },
    /// eta_sig(L(p,q)) and eta_dir(L(p,q), s_u); all u when omitted
    LensEta {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        u: Option<u64>,
    },
    /// All invariants of the prism manifold Y(n)
    Prism {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// The Dedekind sum s(q, p)
    Dedekind {
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        p: i64,
    },
    /// alpha(u, n), the linear eta-denominator sum
    Alpha { u: u64, n: u64 },
    /// beta(u, n), the squared eta-denominator sum
    Beta { u: u64, n: u64 },
    /// rho of the degree-p covering L(n/p, 1) -> L(n, 1)
    RhoLens { n: u64, p: u64 },
    /// rho of the double covering Y(m/2) -> Y(m)
    RhoPrism {
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// The four delta invariants of Y(0) = RP^3 # RP^3
    Y0,
}

#[derive(Subcommand)]
enum PlumbingCmd {
    /// The cusp filling table W_p for p = 1..7 (or a single p)
    CuspTable { p: Option<u64> },
    /// Characteristic vectors with delta matching a target mod 1
    Search {
        /// Comma-separated vertex weights, e.g. "-2,-2,-2"
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Comma-separated edges "a-b", e.g. "0-1,1-2"; empty for none
        #[arg(long, default_value = "")]
        edges: String,
        /// Target delta mod 1, e.g. "-1/8"
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Coordinate bound for the search
        #[arg(long)]
        bound: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Invariant { which } => {
            print!("{}", invariant_report(which)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { scenario } => {
            let scenario = scenario::load_scenario(&scenario).map_err(|e| e.to_string())?;
            let (text, contradiction) =
                report::cover_report(&scenario).map_err(|e| e.to_string())?;
            print!("{text}");
            Ok(if contradiction {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Check { scenario, json_out } => {
            let scenario = scenario::load_scenario(&scenario).map_err(|e| e.to_string())?;
            let verdicts = evaluate_scenario(&scenario).map_err(|e| e.to_string())?;
            if json_out {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report::verdicts_json(&verdicts))
                        .map_err(|e| e.to_string())?
                );
            } else {
                print!("{}", report::format_verdicts(&verdicts));
            }
            Ok(if report::any_obstructed(&verdicts) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Plumbing { which } => {
            print!("{}", plumbing_report(which)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mu { prime, top, parts, j } => {
            let n: Rational = top
                .parse()
                .map_err(|e| format!("bad --top value {top:?}: {e}"))?;
            let n_vec = parse_i64_list(&parts)?;
            let value = mu(prime, &n, &n_vec, j).map_err(|e| e.to_string())?;
            println!("mu_{j}({top}; {parts}) = {value} (mod {prime})");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn invariant_report(cmd: InvariantCmd) -> Result<String, String> {
    let mut out = String::new();
    match cmd {
        InvariantCmd::LensDelta { p, q, u } => match u {
            Some(u) => out.push_str(&format!(
                "{}\n",
                lens_delta(p, q, u).map_err(|e| e.to_string())?
            )),
            None => {
                for u in 0..p {
                    out.push_str(&format!(
                        "{u}: {}\n",
                        lens_delta(p, q, u).map_err(|e| e.to_string())?
                    ));
                }
            }
        },
        InvariantCmd::LensEta { p, q, u } => {
            let us: Vec<u64> = match u {
                Some(u) => vec![u],
                None => (0..p).collect(),
            };
            let (sig, _) = lens_eta(p, q, us[0]).map_err(|e| e.to_string())?;
            out.push_str(&format!("eta_sig: {sig}\n"));
            for u in us {
                let (_, dir) = lens_eta(p, q, u).map_err(|e| e.to_string())?;
                out.push_str(&format!("eta_dir {u}: {dir}\n"));
            }
        }
        InvariantCmd::Prism { n } => {
            let sig = prism_invariants(n, 0, 0).map_err(|e| e.to_string())?.eta_sig;
            out.push_str(&format!("eta_sig: {sig}\n"));
            for u in 0..2u8 {
                for v in 0..2u8 {
                    let inv = prism_invariants(n, u, v).map_err(|e| e.to_string())?;
                    out.push_str(&format!(
                        "(u={u},v={v}): {} (eta_dir {})\n",
                        inv.delta, inv.eta_dir
                    ));
                }
            }
        }
        InvariantCmd::Dedekind { q, p } => {
            out.push_str(&format!("{}\n", dedekind_sum(q, p).map_err(|e| e.to_string())?));
        }
        InvariantCmd::Alpha { u, n } => {
            out.push_str(&format!("{}\n", alpha_sum(u, n).map_err(|e| e.to_string())?));
        }
        InvariantCmd::Beta { u, n } => {
            out.push_str(&format!("{}\n", beta_sum(u, n).map_err(|e| e.to_string())?));
        }
        InvariantCmd::RhoLens { n, p } => {
            out.push_str(&format!("{}\n", rho_lens_cover(n, p).map_err(|e| e.to_string())?));
        }
        InvariantCmd::RhoPrism { m } => {
            out.push_str(&format!("{}\n", rho_prism_cover(m).map_err(|e| e.to_string())?));
        }
        InvariantCmd::Y0 => {
            let labels = ["(+,+)", "(+,-)", "(-,+)", "(-,-)"];
            for (label, value) in labels.iter().zip(y0_deltas()) {
                out.push_str(&format!("{label}: {value}\n"));
            }
        }
    }
    Ok(out)
}

fn plumbing_report(cmd: PlumbingCmd) -> Result<String, String> {
    let mut out = String::new();
    match cmd {
        PlumbingCmd::CuspTable { p } => {
            let range: Vec<u64> = match p {
                Some(p) => vec![p],
                None => (1..=7).collect(),
            };
            for p in range {
                let data = cusp_boundary_data(p).map_err(|e| e.to_string())?;
                let mut sols = cusp_matching_solutions(p).map_err(|e| e.to_string())?;
                sols.sort();
                out.push_str(&format!(
                    "p={p}: boundary {}, filling b_2 = {}, sigma = {}, matching pairings {{{}}}, only borderline solutions: {}\n",
                    data.boundary,
                    data.filling.b2(),
                    data.filling.signature(),
                    sols.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "),
                    cusp_sharpness_obstruction(p).map_err(|e| e.to_string())?
                ));
            }
        }
        PlumbingCmd::Search {
            weights,
            edges,
            target,
            bound,
        } => {
            let weights = parse_i64_list(&weights)?;
            let edges = parse_edges(&edges)?;
            let target: Rational = target
                .parse()
                .map_err(|e| format!("bad --target value: {e}"))?;
            let graph =
                PlumbingGraph::new(weights, edges).map_err(|e| e.to_string())?;
            let found =
                sharp_delta_search(&graph, &target, bound).map_err(|e| e.to_string())?;
            out.push_str(&format!(
                "{} characteristic vectors with delta = {target} (mod 1), coordinates bounded by {bound}\n",
                found.len()
            ));
            for c in found {
                out.push_str(&format!(
                    "({})\n",
                    c.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                ));
            }
        }
    }
    Ok(out)
}

fn parse_i64_list(text: &str) -> Result<Vec<i64>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad integer {part:?}: {e}"))
        })
        .collect()
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| format!("bad edge {part:?}: expected \"a-b\""))?;
            Ok((
                a.parse::<usize>().map_err(|e| format!("bad edge {part:?}: {e}"))?,
                b.parse::<usize>().map_err(|e| format!("bad edge {part:?}: {e}"))?,
            ))
        })
        .collect()
}
