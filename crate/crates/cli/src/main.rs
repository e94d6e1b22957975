//! `invforms`: decide whether irreducible modules of simple algebraic groups
//! carry invariant quadratic forms, and run the brute-force lattice oracles.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use invforms::chevlab::{self, cache, Caps, SpaceFamily};
use invforms::classify::{self, Verdict};
use invforms::repdata;
use invforms::rootsys::{self, DParity, Family, SimpleType, Weight};
use invforms::Error;

const SCHEMA: u32 = 1;

mod exit {
    pub const DECIDED: u8 = 0;
    pub const DISAGREE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const UNKNOWN: u8 = 3;
    pub const RESOURCE: u8 = 4;
    pub const INTERNAL: u8 = 5;
}

#[derive(Parser)]
#[command(name = "invforms", version, about = "Invariant quadratic forms on irreducible modules")]
struct Cli {
    /// Print a JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum ClassicalFamily {
    A,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChoice {
    Gram,
    Solver,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    Duality,
    #[value(name = "typeE")]
    TypeE,
    #[value(name = "examplesC")]
    ExamplesC,
}

#[derive(Subcommand)]
enum Command {
    /// Classify L(λ) for a simple type, a dominant weight and a characteristic.
    Classify {
        /// A, B, C, D, E6, E7, E8, F4 or G2.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Comma-separated coefficients on the fundamental weights, Bourbaki order.
        #[arg(long)]
        weight: String,
        /// 0 or a prime.
        #[arg(long = "char")]
        p: u64,
    },
    /// Composition factors of the Weyl module V(ω_r) (C) or V(ω_r + ω_s) (A).
    Factors {
        #[arg(long, ignore_case = true)]
        family: ClassicalFamily,
        /// l for C_l or A_l.
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long = "char")]
        p: u64,
    },
    /// Composition factors of L(ω_r) on C_{l-1}, or of π_{r,s} on SL_{n-1}.
    Restrict {
        #[arg(long, ignore_case = true)]
        family: ClassicalFamily,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long = "char")]
        p: u64,
    },
    /// Orthogonality of the symmetric-group module D^{(n-r, r)} in characteristic 2.
    Symgroup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Run the lattice oracles on L(ω_k) (C_l) or L(ω_k + ω_{n-k}) (A_l, n = l + 1).
    Verify {
        #[arg(long, ignore_case = true)]
        family: ClassicalFamily,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value = "both")]
        oracle: OracleChoice,
        /// Largest ambient dimension to build.
        #[arg(long, default_value_t = Caps::default().max_ambient)]
        max_ambient: usize,
    },
    /// Regenerate a reference table.
    Table {
        #[arg(long)]
        name: TableName,
        /// Largest rank for the example families.
        #[arg(long, default_value_t = 64)]
        max: usize,
    },
}

/// The record printed with `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct QueryResult {
    schema: u32,
    command: String,
    query: Value,
    result: Value,
    provenance: Option<String>,
    elapsed_ms: u64,
}

struct Reply {
    command: &'static str,
    query: Value,
    result: Value,
    provenance: Option<String>,
    text: String,
    code: u8,
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => exit::INPUT,
        Error::Resource(_) => exit::RESOURCE,
        Error::Internal(_) => exit::INTERNAL,
    }
}

fn verdict_code(v: Verdict) -> u8 {
    if v == Verdict::Unknown {
        exit::UNKNOWN
    } else {
        exit::DECIDED
    }
}

fn parse_type(ty: &str, rank: Option<usize>) -> Result<SimpleType, Error> {
    let ty = ty.trim();
    let family: Family = ty
        .get(..1)
        .ok_or_else(|| Error::Input("empty type".into()))?
        .parse()?;
    let embedded = &ty[1..];
    let rank = match (embedded.is_empty(), rank) {
        (true, Some(r)) => r,
        (true, None) => return Err(Error::Input(format!("type {ty} needs --rank"))),
        (false, r) => {
            let e: usize = embedded.parse().map_err(|_| Error::Input(format!("bad type {ty:?}")))?;
            if r.is_some_and(|r| r != e) {
                return Err(Error::Input(format!("--rank {} does not match type {ty}", r.unwrap())));
            }
            e
        }
    };
    SimpleType::new(family, rank)
}

fn labels<T: std::fmt::Display>(items: impl IntoIterator<Item = (T, u32)>) -> String {
    items.into_iter().map(|(k, m)| format!("{k}:{m}")).collect::<Vec<_>>().join(", ")
}

fn need_s(s: Option<usize>) -> Result<usize, Error> {
    s.ok_or_else(|| Error::Input("type A needs --s".into()))
}

fn cmd_classify(ty: &str, rank: Option<usize>, weight: &str, p: u64) -> Result<Reply, Error> {
    let ty = parse_type(ty, rank)?;
    let lambda: Weight = weight.parse()?;
    let class = classify::classify(ty, &lambda, p)?;
    Ok(Reply {
        command: "classify",
        query: json!({ "type": ty.to_string(), "weight": lambda.coeffs(), "char": p }),
        result: json!({ "verdict": class.verdict.as_str() }),
        provenance: Some(class.provenance.as_str().into()),
        text: format!("{} [{}]", class.verdict.as_str(), class.provenance.as_str()),
        code: verdict_code(class.verdict),
    })
}

fn cmd_factors(family: ClassicalFamily, rank: usize, r: usize, s: Option<usize>, p: u64) -> Result<Reply, Error> {
    let (query, pairs): (Value, Vec<(String, u32)>) = match family {
        ClassicalFamily::C => (
            json!({ "family": "C", "rank": rank, "r": r, "char": p }),
            repdata::comp_factors_c(rank, r, p)?.into_iter().map(|j| (j.to_string(), 1)).collect(),
        ),
        ClassicalFamily::A => {
            let s = need_s(s)?;
            (
                json!({ "family": "A", "rank": rank, "r": r, "s": s, "char": p }),
                repdata::comp_factors_a(rank + 1, r, s, p)?
                    .into_iter()
                    .map(|(a, b)| (format!("({a},{b})"), 1))
                    .collect(),
            )
        }
    };
    Ok(Reply {
        command: "factors",
        query,
        result: json!({ "factors": pairs.iter().map(|(k, m)| json!([k, m])).collect::<Vec<_>>() }),
        provenance: None,
        text: labels(pairs),
        code: exit::DECIDED,
    })
}

fn cmd_restrict(family: ClassicalFamily, rank: usize, r: usize, s: Option<usize>, p: u64) -> Result<Reply, Error> {
    let (query, pairs): (Value, Vec<(String, u32)>) = match family {
        ClassicalFamily::C => (
            json!({ "family": "C", "rank": rank, "r": r, "char": p }),
            repdata::branch_c(rank, r, p)?.into_iter().map(|(j, m)| (j.to_string(), m)).collect(),
        ),
        ClassicalFamily::A => {
            let s = need_s(s)?;
            (
                json!({ "family": "A", "rank": rank, "r": r, "s": s, "char": p }),
                repdata::branch_a(rank + 1, r, s, p)?
                    .into_iter()
                    .map(|((a, b), m)| (format!("({a},{b})"), m))
                    .collect(),
            )
        }
    };
    Ok(Reply {
        command: "restrict",
        query,
        result: json!({ "factors": pairs.iter().map(|(k, m)| json!([k, m])).collect::<Vec<_>>() }),
        provenance: None,
        text: labels(pairs),
        code: exit::DECIDED,
    })
}

fn cmd_symgroup(n: usize, r: usize) -> Result<Reply, Error> {
    let v = classify::symgroup_classify(n, r)?;
    Ok(Reply {
        command: "symgroup",
        query: json!({ "n": n, "r": r }),
        result: json!({ "verdict": v.as_str() }),
        provenance: Some("symmetric-group".into()),
        text: v.as_str().into(),
        code: verdict_code(v),
    })
}

fn cmd_verify(
    family: ClassicalFamily,
    rank: usize,
    index: usize,
    oracle: OracleChoice,
    max_ambient: usize,
) -> Result<Reply, Error> {
    let caps = Caps { max_ambient, ..Caps::default() };
    let (space_family, closed, label) = match family {
        ClassicalFamily::C => {
            let closed = classify::fundamental_verdict(Family::C, rank, index)?;
            (SpaceFamily::Symplectic { l: rank, k: index }, closed, format!("C{rank} ω{index}"))
        }
        ClassicalFamily::A => {
            let n = rank + 1;
            let closed = classify::paired_weight_verdict(n, index)?;
            (SpaceFamily::SlTensor { n, k: index }, closed, format!("A{rank} ω{index}+ω{}", n - index))
        }
    };
    let module = cache::load_or_generate(space_family, &caps)?;
    let gram = match oracle {
        OracleChoice::Solver => None,
        _ if chevlab::has_even_form(space_family) => Some(chevlab::oracle_gram(&module)?),
        OracleChoice::Gram => {
            return Err(Error::Input("the Gram oracle needs an even degree for type C".into()))
        }
        OracleChoice::Both => None,
    };
    let solver = match oracle {
        OracleChoice::Gram => None,
        _ => Some(chevlab::oracle_solver(&module)?),
    };
    let agree = gram.iter().chain(solver.iter()).all(|&v| v == closed);
    let show = |v: Option<Verdict>| v.map_or("n/a", Verdict::as_str);
    let text = format!(
        "{label}: lattice rank {}, radical {}\ngram: {}\nsolver: {}\nclosed-form: {}\n{}",
        module.rank(),
        module.radical_dim(),
        show(gram),
        show(solver),
        closed.as_str(),
        if agree { "AGREE" } else { "DISAGREE" }
    );
    Ok(Reply {
        command: "verify",
        query: json!({
            "family": match family { ClassicalFamily::A => "A", ClassicalFamily::C => "C" },
            "rank": rank,
            "index": index,
        }),
        result: json!({
            "gram": gram.map(Verdict::as_str),
            "solver": solver.map(Verdict::as_str),
            "closed_form": closed.as_str(),
            "agree": agree,
            "lattice_rank": module.rank(),
            "radical_dim": module.radical_dim(),
        }),
        provenance: None,
        text,
        code: if agree { exit::DECIDED } else { exit::DISAGREE },
    })
}

/// `d(λ) mod 2` as a sum of coefficients, one per orbit of `-w_0` on the nodes.
fn parity_formula(ty: SimpleType) -> Result<(String, String), Error> {
    let l = ty.rank();
    let rd = rootsys::RootDatum::new(ty);
    let perm = rd.minus_w0_permutation();
    let mut terms = Vec::new();
    let mut conditions = Vec::new();
    for i in 0..l {
        let j = perm[i];
        if j < i {
            continue;
        }
        if j > i {
            conditions.push(format!("m{} = m{}", i + 1, j + 1));
        }
        let mut w = Weight::zero(l);
        w.0[i] = 1;
        w.0[j] = 1;
        let d = rootsys::d_lambda(ty, &w)?;
        if d % 2 == 1 {
            terms.push(format!("m{}", i + 1));
        }
    }
    let condition = if conditions.is_empty() { "always".into() } else { conditions.join(", ") };
    let parity = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
    Ok((condition, parity))
}

fn cmd_table(name: TableName, max: usize) -> Result<Reply, Error> {
    let mut rows = Vec::new();
    let mut text = Vec::new();
    match name {
        TableName::Duality => {
            for ty in SimpleType::all_up_to(8) {
                if matches!((ty.family(), ty.rank()), (Family::B, 1) | (Family::C, 1)) {
                    continue;
                }
                let (condition, parity) = parity_formula(ty)?;
                // The closed form must agree on every self-dual generator.
                for g in rootsys::self_dual_generators(ty) {
                    let d = rootsys::d_lambda(ty, &g)?;
                    let direct = if d % 2 == 0 { DParity::Even } else { DParity::Odd };
                    if rootsys::d_parity_closed_form(ty, &g)? != direct {
                        return Err(Error::Internal(format!("parity closed form disagrees for {ty} {g}")));
                    }
                }
                text.push(format!("{:<4} {:<36} {}", ty.to_string(), condition, parity));
                rows.push(json!({ "type": ty.to_string(), "self_dual_when": condition, "d_mod_2": parity }));
            }
        }
        TableName::TypeE => {
            for (ty, w, expected) in classify::type_e_table() {
                let got = classify::classify(ty, &w, 2)?.verdict;
                if got != expected {
                    return Err(Error::Internal(format!("classifier disagrees with the table at {ty} {w}")));
                }
                let orth = if got == Verdict::Orthogonal { "yes" } else { "no" };
                text.push(format!("{:<4} {:<18} {}", ty.to_string(), w.to_string(), orth));
                rows.push(json!({ "type": ty.to_string(), "weight": w.coeffs(), "orthogonal": orth == "yes" }));
            }
        }
        TableName::ExamplesC => {
            let families: [(&str, usize, Box<dyn Fn(usize) -> Option<Result<Verdict, Error>>>); 6] = [
                ("C_l  ω2", 2, Box::new(|l| Some(classify::fundamental_verdict(Family::C, l, 2)))),
                ("C_l  ω4", 4, Box::new(|l| Some(classify::fundamental_verdict(Family::C, l, 4)))),
                ("C_l  ω_l", 2, Box::new(|l| Some(classify::fundamental_verdict(Family::C, l, l)))),
                ("C_l  ω_(l-1)", 2, Box::new(|l| Some(classify::fundamental_verdict(Family::C, l, l - 1)))),
                ("SL_n ω1+ω_(n-1)", 3, Box::new(|n| Some(classify::paired_weight_verdict(n, 1)))),
                ("SL_n ω2+ω_(n-2)", 5, Box::new(|n| Some(classify::paired_weight_verdict(n, 2)))),
            ];
            for (label, start, verdict) in families.iter() {
                let mut bad = Vec::new();
                for x in *start..=max.max(*start) {
                    if let Some(v) = verdict(x) {
                        if v? == Verdict::SymplecticOnly {
                            bad.push(x);
                        }
                    }
                }
                let listed: Vec<String> = bad.iter().map(usize::to_string).collect();
                text.push(format!("{label:<18} not orthogonal for {}..={max}: {}", start, listed.join(" ")));
                rows.push(json!({ "family": label, "from": start, "to": max, "not_orthogonal": bad }));
            }
        }
    }
    let name = match name {
        TableName::Duality => "duality",
        TableName::TypeE => "typeE",
        TableName::ExamplesC => "examplesC",
    };
    Ok(Reply {
        command: "table",
        query: json!({ "name": name, "max": max }),
        result: json!({ "rows": rows }),
        provenance: None,
        text: text.join("\n"),
        code: exit::DECIDED,
    })
}

fn dispatch(command: &Command) -> Result<Reply, Error> {
    match command {
        Command::Classify { ty, rank, weight, p } => cmd_classify(ty, *rank, weight, *p),
        Command::Factors { family, rank, r, s, p } => cmd_factors(*family, *rank, *r, *s, *p),
        Command::Restrict { family, rank, r, s, p } => cmd_restrict(*family, *rank, *r, *s, *p),
        Command::Symgroup { n, r } => cmd_symgroup(*n, *r),
        Command::Verify { family, rank, index, oracle, max_ambient } => {
            cmd_verify(*family, *rank, *index, *oracle, *max_ambient)
        }
        Command::Table { name, max } => cmd_table(*name, *max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(reply) => {
            if cli.json {
                let record = QueryResult {
                    schema: SCHEMA,
                    command: reply.command.into(),
                    query: reply.query,
                    result: reply.result,
                    provenance: reply.provenance,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                };
                println!("{}", serde_json::to_string_pretty(&record).expect("serializable record"));
            } else {
                println!("{}", reply.text);
            }
            ExitCode::from(reply.code)
        }
        Err(e) => {
            eprintln!("invforms: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
