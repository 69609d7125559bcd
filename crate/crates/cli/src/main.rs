//! `glvar`: command-line front end for glvar-core.

mod report;
mod scenario;

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use glvar_core::equimap::{
    factors_through, instantiate, is_typical, phi_family, psi_map, quadric_discriminant, FactorResult, MapFile, Typicality, WeightedMap,
};
use glvar_core::glvariety::{delta_range, fit_delta, image_closure_level, image_membership, mapping_space, LevelFamily, Membership};
use glvar_core::polyalg::parse_poly;
use glvar_core::schur::{lr_coefficient, schur_dim, sym_decompose};
use glvar_core::shift::{shift_complement, shift_tuple};
use glvar_core::{Budget, Error, Ideal, MonomialOrder, Partition, PartitionTuple, Rational, Ring};
use serde_json::{json, Value};

use report::{poly_strings, rational_strings, Report};

#[derive(Parser, Debug)]
#[command(name = "glvar", version, about = "Computations with GL-varieties and equivariant maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Groebner step budget (overrides GLVAR_BUDGET).
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shift a partition tuple: Sh_n of A^tuple.
    Shift {
        #[arg(short = 'n', long = "shift", default_value_t = 1)]
        n: u32,
        tuple: String,
    },
    /// Dimension of S_λ(K^n), or of A^tuple{K^n} for a tuple.
    Dim {
        shape: String,
        #[arg(long)]
        level: u32,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr { lambda: String, mu: String, nu: String },
    /// Schur decomposition of Sym(A^tuple) up to a degree.
    Sym {
        tuple: String,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Also report the dimension of each graded piece on K^n.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Equations of the space of maps A^λ → X.
    Mapspace {
        lambda: String,
        /// Family file, or `rank-one`.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        level: u32,
    },
    /// Is a point in the image of a map at level n?
    Membership {
        /// Map file, or one of phi0, phi1, psi, discriminant.
        #[arg(long)]
        map: String,
        #[arg(long)]
        level: u32,
        /// Comma-separated rational target coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Ideal of the closed image of a map at level n.
    Closure {
        #[arg(long)]
        map: String,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
    },
    /// Does a map factor through A^mid?
    Factor {
        #[arg(long)]
        map: String,
        mid: String,
    },
    /// Is a map typical onto its image closure?
    Typical {
        #[arg(long)]
        map: String,
    },
    /// Dimension function of a family, optionally fitted by a polynomial.
    Delta {
        #[arg(long)]
        family: String,
        /// Levels `a..b` (inclusive).
        #[arg(long, value_parser = parse_range)]
        range: Option<(u32, u32)>,
        #[arg(long, value_parser = parse_range)]
        fit: Option<(u32, u32)>,
        #[arg(long, value_parser = parse_range)]
        test: Option<(u32, u32)>,
    },
    /// Saturate an ideal by a polynomial.
    Saturate {
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        #[arg(long)]
        by: String,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Run a named worked example.
    Scenario {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(scenario::NAMES))]
        name: String,
        /// Compare the certificate with the expected one.
        #[arg(long)]
        verify: bool,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got '{s}'"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start '{a}'"))?;
    let b: u32 = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end '{b}'"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// A failure, with the exit code it maps to.
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnknownVariable { .. }
            | Error::InvalidTuple(_)
            | Error::Arity { .. }
            | Error::Invalid(_)
            | Error::Json(_)
            | Error::ShapeMismatch(_)
            | Error::AbstractCoefficients(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let budget = cli.global.budget.map(Budget::new).unwrap_or_else(Budget::from_env);
    match run(cli.command, budget) {
        Ok(report) => {
            if cli.global.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn tuple_arg(s: &str) -> Result<PartitionTuple, Failure> {
    // a bare partition stands for the one-entry tuple
    match (s.parse::<Partition>(), s.parse::<PartitionTuple>()) {
        (Ok(p), _) => Ok(PartitionTuple::new(vec![p])),
        (_, Err(e)) => Err(Error::from(e).into()),
        (_, Ok(t)) => Ok(t),
    }
}

fn partition_arg(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>().map_err(Error::from)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

/// A built-in map name or a map file.
pub fn load_map(name: &str) -> Result<WeightedMap, Failure> {
    Ok(match name {
        "phi0" => phi_family(Rational::from_integer(0.into())),
        "phi1" => phi_family(Rational::from_integer(1.into())),
        "psi" => psi_map(),
        "discriminant" => quadric_discriminant(),
        path if Path::new(path).exists() => WeightedMap::from_file(&read_json::<MapFile>(path)?)?,
        other => return Err(Failure::Usage(format!("no map named '{other}' and no such file"))),
    })
}

/// A built-in family name or a family file.
pub fn load_family(name: &str) -> Result<LevelFamily, Failure> {
    Ok(match name {
        "rank-one" => LevelFamily::rank_one_pairs(),
        path if Path::new(path).exists() => read_json::<LevelFamily>(path)?,
        other => return Err(Failure::Usage(format!("no family named '{other}' and no such file"))),
    })
}

fn run(command: Command, budget: Budget) -> Result<Report, Failure> {
    match command {
        Command::Shift { n, tuple } => {
            let t = tuple_arg(&tuple)?;
            let shifted = shift_tuple(n, &t);
            let complement = shift_complement(n, &t);
            let mut r = Report::new("shift", json!({"n": n, "tuple": t.to_string()}));
            r.line(shifted.to_string());
            r.result = json!(shifted.to_string());
            r.certificates = json!({"complement": complement.to_string()});
            Ok(r)
        }
        Command::Dim { shape, level } => {
            let (entries, kind) = match shape.parse::<Partition>() {
                Ok(p) => (vec![p], "partition"),
                Err(_) => (tuple_arg(&shape)?.entries().to_vec(), "tuple"),
            };
            let dim: u64 = entries.iter().map(|p| schur_dim(p, level)).sum();
            let mut r = Report::new("dim", json!({"shape": shape, "kind": kind, "level": level}));
            r.line(dim.to_string());
            r.result = json!(dim);
            Ok(r)
        }
        Command::Lr { lambda, mu, nu } => {
            let (l, m, n) = (partition_arg(&lambda)?, partition_arg(&mu)?, partition_arg(&nu)?);
            let c = lr_coefficient(&l, &m, &n);
            let mut r = Report::new("lr", json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string()}));
            r.line(c.to_string());
            r.result = json!(c);
            Ok(r)
        }
        Command::Sym { tuple, degree, level } => {
            let t = tuple_arg(&tuple)?;
            let e = sym_decompose(&t, degree)?;
            let mut r = Report::new("sym", json!({"tuple": t.to_string(), "degree": degree, "level": level}));
            r.line(e.to_string());
            let terms: Vec<Value> = e.terms().iter().map(|(p, m)| json!([p.to_string(), m])).collect();
            r.result = json!(terms);
            if let Some(n) = level {
                let dims: Vec<u64> = (0..=degree)
                    .map(|d| e.graded_piece(d).map(|(p, m)| m * schur_dim(p, n)).sum())
                    .collect();
                r.line(format!("graded dimensions at level n = {n}: {dims:?}"));
                r.certificates = json!({"graded_dimensions": dims});
            }
            Ok(r)
        }
        Command::Mapspace { lambda, family, level } => {
            let lam = tuple_arg(&lambda)?;
            let fam = load_family(&family)?;
            let m = mapping_space(&lam, &fam, level, budget)?;
            let mut r = Report::new(
                "mapspace",
                json!({"lambda": lam.to_string(), "family": fam.to_string(), "level": level}),
            );
            r.line(format!("coefficient symbols: [{}]", m.symbols.join(", ")));
            r.line(format!("ideal at level n = {level}: {}", m.ideal));
            r.line(format!(
                "level n = {} {}",
                level + 1,
                if m.stabilized {
                    "gives the same ideal (stabilized)"
                } else {
                    "differs (not stabilized)"
                }
            ));
            r.result = json!({"symbols": m.symbols, "ideal": poly_strings(m.ideal.generators())});
            r.certificates = json!({"level": level, "compared_with": level + 1, "stabilized": m.stabilized});
            Ok(r)
        }
        Command::Membership { map, level, point } => {
            let f = load_map(&map)?;
            let coords = point
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<Rational>()
                        .map_err(|_| Failure::Usage(format!("bad rational '{s}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = image_membership(&f, level, &coords, budget)?;
            let mut r = Report::new(
                "membership",
                json!({"map": f.to_string(), "level": level, "point": rational_strings(&coords)}),
            );
            r.line(format!("{m} (level n = {level} evidence only)"));
            let kind = match &m {
                Membership::Member(_) => "member",
                Membership::ClosureOnly => "closure_only",
                Membership::NonMember => "non_member",
            };
            r.result = json!(kind);
            if let Membership::Member(Some(pre)) = &m {
                let names = instantiate(&f, level)?.ring.names().to_vec();
                let pairs: Vec<String> = names.iter().zip(pre).map(|(n, v)| format!("{n} = {v}")).collect();
                r.line(format!("preimage: {}", pairs.join(", ")));
                r.certificates = json!({"preimage": rational_strings(pre), "coordinates": names});
            }
            Ok(r)
        }
        Command::Closure { map, level, order } => {
            let f = load_map(&map)?;
            let x = image_closure_level(&f, level, budget)?;
            let gb = x.ideal.groebner(&order, budget)?;
            let dim = gb.dimension()?;
            let mut r = Report::new("closure", json!({"map": f.to_string(), "level": level, "order": order.to_string()}));
            r.line(format!("ring: {}", x.ring().names().join(", ")));
            if gb.polys().is_empty() {
                r.line("zero ideal (the image is dense)");
            }
            for g in gb.polys() {
                r.line(g.to_string());
            }
            r.line(format!("dimension {dim} at level n = {level}"));
            r.result = json!({"ring": x.ring().names(), "ideal": poly_strings(gb.polys())});
            r.certificates = json!({"dimension": dim});
            Ok(r)
        }
        Command::Factor { map, mid } => {
            let f = load_map(&map)?;
            let mid = tuple_arg(&mid)?;
            let res = factors_through(&f, &mid, budget)?;
            let mut r = Report::new("factor", json!({"map": f.to_string(), "mid": mid.to_string()}));
            r.line(res.to_string());
            r.result = json!(factor_word(&res));
            r.certificates = factor_certificate(&res);
            Ok(r)
        }
        Command::Typical { map } => {
            let f = load_map(&map)?;
            let rep = is_typical(&f, budget)?;
            let mut r = Report::new("typical", json!({"map": f.to_string()}));
            r.line(rep.verdict.to_string());
            for (t, res) in &rep.checked {
                r.line(format!("  through {t}: {res}"));
            }
            r.result = json!(match &rep.verdict {
                Typicality::Typical => "typical",
                Typicality::NotTypical { .. } => "not_typical",
                Typicality::Unknown { .. } => "unknown",
            });
            let checked: Vec<Value> = rep
                .checked
                .iter()
                .map(|(t, res)| json!([t.to_string(), factor_word(res)]))
                .collect();
            r.certificates = json!({"checked": checked});
            if let Typicality::NotTypical { through, witness } = &rep.verdict {
                r.certificates["through"] = json!(through.to_string());
                if let Some(w) = witness {
                    r.certificates["witness"] = json!({"inner": w.inner.to_string(), "outer": w.outer.to_string()});
                }
            }
            Ok(r)
        }
        Command::Delta { family, range, fit, test } => {
            let fam = load_family(&family)?;
            let mut r = Report::new(
                "delta",
                json!({"family": fam.to_string(), "range": range.map(|(a, b)| format!("{a}..{b}")), "fit": fit.map(|(a, b)| format!("{a}..{b}")), "test": test.map(|(a, b)| format!("{a}..{b}"))}),
            );
            if let Some((a, b)) = range {
                let mut values = Vec::new();
                for (d, v) in delta_range(&fam, a..=b, budget) {
                    let v = v?;
                    r.line(format!("delta({d}) = {v}"));
                    values.push(json!([d, v]));
                }
                r.result = json!({"values": values});
            }
            if let Some((a, b)) = fit {
                let fit_levels: Vec<u32> = (a..=b).collect();
                let test_levels: Vec<u32> = match test {
                    Some((c, d)) => (c..=d).collect(),
                    None => Vec::new(),
                };
                let f = fit_delta(&fam, &fit_levels, &test_levels, budget)?;
                r.line(format!("fitted delta(d) = {}", f.polynomial));
                for (d, p, actual) in &f.tested {
                    r.line(format!("  d = {d}: predicted {p}, computed {actual}"));
                }
                r.line(if f.agrees() {
                    "held-out levels agree".into()
                } else {
                    "held-out levels disagree".to_string()
                });
                r.result["polynomial"] = json!(f.polynomial.to_string());
                let tested: Vec<Value> = f.tested.iter().map(|(d, p, a)| json!([d, p.to_string(), a])).collect();
                r.certificates = json!({"degree": f.degree, "degree_bound": f.degree_bound, "tested": tested, "agrees": f.agrees()});
            }
            if range.is_none() && fit.is_none() {
                return Err(Failure::Usage("delta needs --range or --fit".into()));
            }
            Ok(r)
        }
        Command::Saturate { vars, by, order, gens } => {
            let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let ring = Ring::new(names.iter().copied());
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let ideal = Ideal::parse(&ring, &refs)?;
            let h = parse_poly(&by, &ring)?;
            let sat = ideal.saturate(&h, budget)?;
            let gb = sat.groebner(&order, budget)?;
            let unchanged = sat.same_ideal(&ideal, budget)?;
            let mut r = Report::new(
                "saturate",
                json!({"vars": names, "gens": gens, "by": by, "order": order.to_string()}),
            );
            for g in gb.polys() {
                r.line(g.to_string());
            }
            r.result = json!(poly_strings(gb.polys()));
            r.certificates = json!({"already_saturated": unchanged});
            Ok(r)
        }
        Command::Scenario { name, verify } => scenario::run(&name, verify, budget),
    }
}

pub fn factor_word(r: &FactorResult) -> &'static str {
    match r {
        FactorResult::Yes(_) => "yes",
        FactorResult::No => "no",
        FactorResult::Unknown(_) => "unknown",
    }
}

pub fn factor_certificate(r: &FactorResult) -> Value {
    match r {
        FactorResult::Yes(Some(w)) => json!({"inner": w.inner.to_string(), "outer": w.outer.to_string()}),
        FactorResult::Yes(None) => json!({"witness": null}),
        FactorResult::No => json!({"groebner_basis": "{1} on every echelon slice"}),
        FactorResult::Unknown(b) => json!({"budget_exhausted": b}),
    }
}
