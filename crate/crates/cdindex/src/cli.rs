//! Command-line front end: JSON ingestion, subcommand dispatch, canonical
//! text output, and the exit-code contract (0 success or check passed, 1
//! check failed with a witness on stdout, 2 input error on stderr).

use std::collections::BTreeSet;
use std::io::Read;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::{
    boolean_poset, check_local_relation, check_wednesday_raising, manifold_poset, ngon_poset,
    omega_poset, semisusp_inclusion_exclusion_check, semisusp_via_intersections, semisuspension,
    simple_chain_poset, Face, SimplicialComplex,
};
use crate::flag::{
    ab_index_via, check_alexander_duality, check_coalgebra_identity, check_h_symmetry,
    dehn_sommerville_witness, flag_f_vector, flag_h_vector, AbIndexMethod, FlagVector,
};
use crate::io::{
    parse_complex_file, parse_face_text, parse_pair_file, parse_poset_file, render_poset_file,
};
use crate::ncpoly::ab_to_cd;
use crate::ops::{
    cartesian_product, dual, find_zippers, merge_equal_upset, pyramid, stanley_product,
    zip_zipper, Zipper,
};
use crate::poset::Poset;
use crate::qsym::qsym_of_poset;
use crate::rat::render_rat;
use crate::shelling::{
    phi_shelling_component, semisusp_via_h_triangle, verify_shelling_h_triangle, PhiMethod,
    PhiTable, ShellingError,
};

#[derive(Parser)]
#[command(name = "cdindex", version, about = "Flag enumeration for quasi-graded posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Ab,
    Cd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Chains,
    Recursion,
    Mobius,
}

impl From<Method> for AbIndexMethod {
    fn from(method: Method) -> Self {
        match method {
            Method::Chains => AbIndexMethod::Chains,
            Method::Recursion => AbIndexMethod::Recursion,
            Method::Mobius => AbIndexMethod::Mobius,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlagKind {
    F,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Intersections,
    HTriangle,
}

#[derive(Clone, Copy, ValueEnum)]
enum PhiMethodArg {
    Direct,
    Recursive,
    Binomial,
}

impl From<PhiMethodArg> for PhiMethod {
    fn from(method: PhiMethodArg) -> Self {
        match method {
            PhiMethodArg::Direct => PhiMethod::Direct,
            PhiMethodArg::Recursive => PhiMethod::Recursive,
            PhiMethodArg::Binomial => PhiMethod::Binomial,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Prints the ab-index or cd-index of a poset.
    Psi {
        #[arg(long)]
        poset: String,
        #[arg(long, value_enum, default_value_t = Basis::Ab)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Prints the flag f-vector or flag h-vector of a poset.
    Flags {
        #[arg(value_enum)]
        kind: FlagKind,
        #[arg(long)]
        poset: String,
    },
    /// Runs a structural check; prints OK, or a FAIL witness on failure.
    Check {
        #[command(subcommand)]
        mode: CheckMode,
    },
    /// Fills even-rank zeta values to make a poset Eulerian and emits it.
    Complete {
        #[arg(long)]
        poset: String,
    },
    /// Restricts a poset to the selected proper ranks and emits it.
    Select {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        ranks: String,
    },
    /// Applies a poset operation and emits the resulting poset.
    Op {
        #[command(subcommand)]
        operation: Operation,
    },
    /// Lists the zippers of a poset, one `(z; x, y)` per line.
    Zippers {
        #[arg(long)]
        poset: String,
    },
    /// Prints a semisuspension cd-index, or emits the poset itself.
    Semi {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum)]
        via: Option<Via>,
        /// Shelling order as semicolon-separated facets of comma-joined
        /// vertices; defaults to sorted facet order.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, conflicts_with = "via")]
        emit_poset: bool,
    },
    /// Emits the stratified ball poset with rank span n+1.
    Omega { n: i64 },
    /// Emits a poset from the catalog of named families.
    Catalog {
        #[command(subcommand)]
        family: Family,
    },
    /// Prints one shelling-component cd-index.
    Phi {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        i: i64,
        #[arg(long, value_enum, default_value_t = PhiMethodArg::Recursive)]
        method: PhiMethodArg,
    },
    /// Prints every shelling component with degree at most n.
    Phitable {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = PhiMethodArg::Recursive)]
        method: PhiMethodArg,
    },
    /// Verifies a shelling order and prints its h-triangle.
    Shell {
        #[arg(long)]
        complex: String,
        /// Facets in shelling order, semicolon-separated, vertices
        /// comma-joined within a facet.
        #[arg(long)]
        order: String,
    },
    /// Prints the quasisymmetric function of a poset.
    Qsym {
        #[arg(long)]
        poset: String,
    },
}

#[derive(Subcommand)]
enum CheckMode {
    /// The Eulerian condition on every interval.
    Eulerian {
        #[arg(long)]
        poset: String,
    },
    /// The generalized Dehn-Sommerville relations on the flag f-vector.
    Ds {
        #[arg(long)]
        poset: String,
    },
    /// Coproduct compatibility of the ab-index with intervals.
    Coalgebra {
        #[arg(long)]
        poset: String,
    },
    /// Complementation symmetry of the flag h-vector.
    Hsym {
        #[arg(long)]
        poset: String,
    },
    /// Alexander duality for the rank-selected complementary pair.
    Alexander {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        ranks: String,
    },
    /// The rank-raising identity for a semisuspension.
    Wednesday {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        n: i64,
    },
    /// The vanishing alternating sum over a subdivision pair.
    Local {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        n: i64,
    },
    /// Semisuspension inclusion-exclusion for two complexes.
    InclusionExclusion {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        other: String,
        #[arg(long)]
        n: i64,
    },
    /// Product and coproduct identities of the quasisymmetric function.
    Hopf {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        other: String,
    },
}

#[derive(Subcommand)]
enum Operation {
    /// Order reversal.
    Dual {
        #[arg(long)]
        poset: String,
    },
    /// Cartesian product of two posets.
    Product {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        other: String,
    },
    /// Stanley product of two posets.
    Stanley {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        other: String,
    },
    /// Cartesian product with the two-element chain.
    Pyramid {
        #[arg(long)]
        poset: String,
    },
    /// Merges two elements with equal upsets into one.
    Merge {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Zips a zipper (z; x, y) into a single element.
    Zip {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The boolean lattice of subsets of {1..k}.
    Boolean {
        #[arg(long)]
        k: u32,
    },
    /// A polygon with n vertices and n edges, in one of three
    /// stratification variants.
    Ngon {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        variant: u8,
    },
    /// A closed n-manifold of Euler characteristic chi as a single
    /// stratum over its (empty-by-convention) boundary.
    Manifold {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        chi: i64,
    },
    /// A chain with prescribed sparse zeta values from the bottom.
    SimpleChain {
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: i64,
    },
}

enum Outcome {
    Pass,
    Fail,
}

/// Parses arguments (without the program name), runs one command, and
/// returns the process exit code.
pub fn dispatch(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let mut argv = vec!["cdindex".to_string()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match run(cli.command, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load_poset(path: &str) -> Result<Poset, String> {
    parse_poset_file(&read_input(path)?).map_err(|e| format!("{path}: {e}"))
}

fn load_complex(path: &str) -> Result<SimplicialComplex, String> {
    parse_complex_file(&read_input(path)?).map_err(|e| format!("{path}: {e}"))
}

fn parse_ranks(text: &str) -> Result<BTreeSet<i64>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|piece| !piece.is_empty())
        .map(|piece| {
            piece
                .parse::<i64>()
                .map_err(|_| format!("invalid rank `{piece}`"))
        })
        .collect()
}

fn parse_order(text: &str) -> Vec<Face> {
    text.split(';').map(parse_face_text).collect()
}

fn emit_poset(out: &mut dyn Write, poset: &Poset) -> Result<Outcome, String> {
    write!(out, "{}", render_poset_file(poset)).map_err(|e| e.to_string())?;
    Ok(Outcome::Pass)
}

fn emit_line(out: &mut dyn Write, line: &str) -> Result<Outcome, String> {
    writeln!(out, "{line}").map_err(|e| e.to_string())?;
    Ok(Outcome::Pass)
}

fn verdict(out: &mut dyn Write, holds: bool, witness: &str) -> Result<Outcome, String> {
    if holds {
        emit_line(out, "OK")
    } else {
        writeln!(out, "{witness}").map_err(|e| e.to_string())?;
        Ok(Outcome::Fail)
    }
}

fn render_rank_set(set: &BTreeSet<i64>) -> String {
    let parts: Vec<String> = set.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn print_flag_vector(out: &mut dyn Write, vector: &FlagVector) -> Result<Outcome, String> {
    for (mask, value) in vector.iter() {
        let set = FlagVector::set_of(mask);
        writeln!(out, "{}: {}", render_rank_set(&set), render_rat(value))
            .map_err(|e| e.to_string())?;
    }
    Ok(Outcome::Pass)
}

fn run(command: Command, out: &mut dyn Write) -> Result<Outcome, String> {
    match command {
        Command::Psi {
            poset,
            basis,
            method,
        } => {
            let p = load_poset(&poset)?;
            let ab = ab_index_via(&p, method.into()).map_err(|e| e.to_string())?;
            match basis {
                Basis::Ab => emit_line(out, &ab.render()),
                Basis::Cd => {
                    let cd = ab_to_cd(&ab).map_err(|e| e.to_string())?;
                    emit_line(out, &cd.render())
                }
            }
        }
        Command::Flags { kind, poset } => {
            let p = load_poset(&poset)?;
            let vector = match kind {
                FlagKind::F => flag_f_vector(&p),
                FlagKind::H => flag_h_vector(&p),
            }
            .map_err(|e| e.to_string())?;
            print_flag_vector(out, &vector)
        }
        Command::Check { mode } => run_check(mode, out),
        Command::Complete { poset } => {
            let p = load_poset(&poset)?;
            let completed = p.complete_eulerian().map_err(|e| e.to_string())?;
            emit_poset(out, &completed)
        }
        Command::Select { poset, ranks } => {
            let p = load_poset(&poset)?;
            let selected = parse_ranks(&ranks)?;
            let restricted = p.rank_selection(&selected).map_err(|e| e.to_string())?;
            emit_poset(out, &restricted)
        }
        Command::Op { operation } => run_operation(operation, out),
        Command::Zippers { poset } => {
            let p = load_poset(&poset)?;
            for zipper in find_zippers(&p) {
                writeln!(out, "{zipper}").map_err(|e| e.to_string())?;
            }
            Ok(Outcome::Pass)
        }
        Command::Semi {
            complex,
            n,
            via,
            order,
            emit_poset: emit,
        } => {
            let gamma = load_complex(&complex)?;
            if emit {
                let poset = semisuspension(&gamma, n).map_err(|e| e.to_string())?;
                return emit_poset(out, &poset);
            }
            let cd = match via {
                None => {
                    let poset = semisuspension(&gamma, n).map_err(|e| e.to_string())?;
                    crate::flag::cd_index(&poset).map_err(|e| e.to_string())?
                }
                Some(Via::Intersections) => {
                    semisusp_via_intersections(&gamma, n).map_err(|e| e.to_string())?
                }
                Some(Via::HTriangle) => {
                    let order = match order {
                        Some(text) => parse_order(&text),
                        None => {
                            let mut facets = gamma.facets().to_vec();
                            facets.sort();
                            facets
                        }
                    };
                    semisusp_via_h_triangle(&gamma, &order, n).map_err(|e| e.to_string())?
                }
            };
            emit_line(out, &cd.render())
        }
        Command::Omega { n } => {
            let poset = omega_poset(n).map_err(|e| e.to_string())?;
            emit_poset(out, &poset)
        }
        Command::Catalog { family } => {
            let poset = match family {
                Family::Boolean { k } => boolean_poset(k),
                Family::Ngon { n, variant } => ngon_poset(n, variant),
                Family::Manifold { n, chi } => manifold_poset(n, chi),
                Family::SimpleChain { f, n } => {
                    let values: Result<Vec<i64>, String> = f
                        .split(',')
                        .map(str::trim)
                        .filter(|piece| !piece.is_empty())
                        .map(|piece| {
                            piece
                                .parse::<i64>()
                                .map_err(|_| format!("invalid value `{piece}`"))
                        })
                        .collect();
                    simple_chain_poset(&values?, n)
                }
            }
            .map_err(|e| e.to_string())?;
            emit_poset(out, &poset)
        }
        Command::Phi { n, k, i, method } => {
            let cd =
                phi_shelling_component(n, k, i, method.into()).map_err(|e| e.to_string())?;
            emit_line(out, &cd.render())
        }
        Command::Phitable { n, method } => {
            let table = PhiTable::up_to(n, method.into()).map_err(|e| e.to_string())?;
            for ((n, k, i), cd) in table.iter() {
                writeln!(out, "phi({n},{k},{i}) = {}", cd.render()).map_err(|e| e.to_string())?;
            }
            Ok(Outcome::Pass)
        }
        Command::Shell { complex, order } => {
            let delta = load_complex(&complex)?;
            let order = parse_order(&order);
            match verify_shelling_h_triangle(&delta, &order) {
                Ok(triangle) => {
                    for ((k, i), count) in &triangle.counts {
                        writeln!(out, "h({k},{i}) = {count}").map_err(|e| e.to_string())?;
                    }
                    Ok(Outcome::Pass)
                }
                Err(ShellingError::NotAShelling {
                    r,
                    intersection,
                    required,
                }) => {
                    writeln!(
                        out,
                        "FAIL facet {r}: intersection {intersection} is not pure of dimension {required}"
                    )
                    .map_err(|e| e.to_string())?;
                    Ok(Outcome::Fail)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Qsym { poset } => {
            let p = load_poset(&poset)?;
            let f = qsym_of_poset(&p).map_err(|e| e.to_string())?;
            emit_line(out, &f.render())
        }
    }
}

fn run_check(mode: CheckMode, out: &mut dyn Write) -> Result<Outcome, String> {
    match mode {
        CheckMode::Eulerian { poset } => {
            let p = load_poset(&poset)?;
            match p.eulerian_witness() {
                None => emit_line(out, "OK"),
                Some(witness) => {
                    writeln!(out, "FAIL interval ({},{})", witness.x, witness.z)
                        .map_err(|e| e.to_string())?;
                    Ok(Outcome::Fail)
                }
            }
        }
        CheckMode::Ds { poset } => {
            let p = load_poset(&poset)?;
            match dehn_sommerville_witness(&p).map_err(|e| e.to_string())? {
                None => emit_line(out, "OK"),
                Some(witness) => {
                    writeln!(
                        out,
                        "FAIL relation S={} window ({},{}) sum {}",
                        render_rank_set(&witness.s),
                        witness.i,
                        witness.k,
                        render_rat(&witness.sum)
                    )
                    .map_err(|e| e.to_string())?;
                    Ok(Outcome::Fail)
                }
            }
        }
        CheckMode::Coalgebra { poset } => {
            let p = load_poset(&poset)?;
            let holds = check_coalgebra_identity(&p).map_err(|e| e.to_string())?;
            verdict(out, holds, "FAIL coalgebra identity")
        }
        CheckMode::Hsym { poset } => {
            let p = load_poset(&poset)?;
            let holds = check_h_symmetry(&p).map_err(|e| e.to_string())?;
            verdict(out, holds, "FAIL flag h-vector symmetry")
        }
        CheckMode::Alexander { poset, ranks } => {
            let p = load_poset(&poset)?;
            let selected = parse_ranks(&ranks)?;
            let (bottom, top) = p.bounds().map_err(|e| e.to_string())?;
            let mut q = BTreeSet::from([p.id(bottom).to_string(), p.id(top).to_string()]);
            let mut r = q.clone();
            for i in 0..p.len() {
                if i == bottom || i == top {
                    continue;
                }
                if selected.contains(&p.rank(i)) {
                    q.insert(p.id(i).to_string());
                } else {
                    r.insert(p.id(i).to_string());
                }
            }
            let holds = check_alexander_duality(&p, &q, &r).map_err(|e| e.to_string())?;
            verdict(
                out,
                holds,
                &format!("FAIL alexander duality ranks {}", render_rank_set(&selected)),
            )
        }
        CheckMode::Wednesday { complex, n } => {
            let gamma = load_complex(&complex)?;
            let holds = check_wednesday_raising(&gamma, n).map_err(|e| e.to_string())?;
            verdict(out, holds, &format!("FAIL raising identity at n={n}"))
        }
        CheckMode::Local { pair, n } => {
            let (gamma, lambda, carrier) =
                parse_pair_file(&read_input(&pair)?).map_err(|e| format!("{pair}: {e}"))?;
            let holds =
                check_local_relation(&gamma, &lambda, &carrier, n).map_err(|e| e.to_string())?;
            verdict(out, holds, "FAIL local relation")
        }
        CheckMode::InclusionExclusion { complex, other, n } => {
            let gamma = load_complex(&complex)?;
            let delta = load_complex(&other)?;
            let holds = semisusp_inclusion_exclusion_check(&gamma, &delta, n)
                .map_err(|e| e.to_string())?;
            verdict(out, holds, "FAIL inclusion-exclusion")
        }
        CheckMode::Hopf { poset, other } => {
            let p = load_poset(&poset)?;
            let q = load_poset(&other)?;
            let holds = crate::qsym::check_hopf_identities(&p, &q).map_err(|e| e.to_string())?;
            verdict(out, holds, "FAIL Hopf identity")
        }
    }
}

fn run_operation(operation: Operation, out: &mut dyn Write) -> Result<Outcome, String> {
    let result = match operation {
        Operation::Dual { poset } => dual(&load_poset(&poset)?).map_err(|e| e.to_string())?,
        Operation::Product { poset, other } => {
            cartesian_product(&load_poset(&poset)?, &load_poset(&other)?)
                .map_err(|e| e.to_string())?
        }
        Operation::Stanley { poset, other } => {
            stanley_product(&load_poset(&poset)?, &load_poset(&other)?)
                .map_err(|e| e.to_string())?
        }
        Operation::Pyramid { poset } => {
            let (product, _) = pyramid(&load_poset(&poset)?).map_err(|e| e.to_string())?;
            product
        }
        Operation::Merge { poset, x, y } => {
            merge_equal_upset(&load_poset(&poset)?, &x, &y).map_err(|e| e.to_string())?
        }
        Operation::Zip { poset, z, x, y } => {
            let p = load_poset(&poset)?;
            let zipper = Zipper { z, x, y };
            zip_zipper(&p, &zipper).map_err(|e| e.to_string())?
        }
    };
    emit_poset(out, &result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = dispatch(&args, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn phi_and_phitable_print_components() {
        let (code, out, _) = run_args(&["phi", "--n", "3", "--k", "2", "--i", "1", "--method", "recursive"]);
        assert_eq!(code, 0);
        assert_eq!(out, "dc\n");

        let (code, out, _) = run_args(&["phitable", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("phi(2,0,0) = c^2 - 2*d\n"));
        assert!(out.contains("phi(2,2,1) = d\n"));

        let (code, _, err) = run_args(&["phi", "--n", "0", "--k", "0", "--i", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("error:"));
    }

    #[test]
    fn omega_emits_and_reingests() {
        let (code, out, _) = run_args(&["omega", "3"]);
        assert_eq!(code, 0);
        let poset = crate::io::parse_poset_file(&out).unwrap();
        assert_eq!(
            crate::flag::cd_index(&poset).unwrap().render(),
            "c^3 - cd - dc"
        );
    }

    #[test]
    fn unknown_subcommand_is_an_input_error() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_prints_to_stdout() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn shelling_output_reports_h_triangle() {
        let dir = std::env::temp_dir().join("cdindex-cli-shell-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("circle.json");
        std::fs::write(
            &path,
            r#"{"facets": [["a","b"], ["a","c"], ["b","c"]]}"#,
        )
        .unwrap();
        let path = path.to_str().unwrap();

        let (code, out, _) = run_args(&["shell", "--complex", path, "--order", "a,b;b,c;a,c"]);
        assert_eq!(code, 0);
        assert_eq!(out, "h(2,0) = 1\nh(2,1) = 1\nh(2,2) = 1\n");

        let (code, out, _) = run_args(&["semi", "--complex", path, "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "c^2 + d\n");
        let (_, via_out, _) = run_args(&[
            "semi",
            "--complex",
            path,
            "--n",
            "2",
            "--via",
            "h-triangle",
        ]);
        assert_eq!(via_out, "c^2 + d\n");
        let (_, via_out, _) = run_args(&[
            "semi",
            "--complex",
            path,
            "--n",
            "2",
            "--via",
            "intersections",
        ]);
        assert_eq!(via_out, "c^2 + d\n");
    }

}
