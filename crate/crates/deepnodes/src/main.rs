//! Command-line surface: series expansion, tree listing, bijection
//! conversion, the verification suite and convergence-table emission.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use deepnodes::asymptotics::{limit_gap_check, ratio_table};
use deepnodes::genfun::{
    self, gf_a, gf_a_h, gf_dg, gf_g, gf_p_h, DGRoute, GRoute, Route,
};
use deepnodes::paths::{
    decorated_to_skew, decorated_to_tree, skew_to_decorated, tree_to_decorated, validate_skew,
    DecoratedPath, SkewDiagnostics, SkewPath,
};
use deepnodes::series::Rat;
use deepnodes::trees::{self, MarkedTree};

#[derive(Parser)]
#[command(
    name = "deepnodes",
    version,
    about = "Exact enumeration of deepest nodes in marked ordered trees"
)]
struct Cli {
    /// Truncation order for series computations
    #[arg(long, global = true, env = "DEEPNODES_ORDER", default_value_t = 30)]
    order: usize,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generating function expanded to the truncation order
    Series {
        /// Which generating function: A, Ah, ph, G or dG
        #[arg(long, value_enum)]
        gf: GfKind,
        /// Height bound (required for Ah and ph)
        #[arg(long)]
        h: Option<usize>,
        /// Computation route (defaults per generating function)
        #[arg(long)]
        route: Option<String>,
    },
    /// Count or list all marked ordered trees of a given size
    Trees {
        #[arg(long)]
        size: usize,
        /// Print one canonical encoding per line with height/deepest/marks
        #[arg(long)]
        list: bool,
        /// Largest size the exhaustive generator will materialize
        #[arg(long, default_value_t = 11)]
        bound: usize,
    },
    /// Convert between tree, decorated-path and skew-path encodings
    Biject {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        input: String,
    },
    /// Run the identity suite, cross-route checks, brute-force comparisons
    /// and bijection round trips
    Verify {},
    /// Emit the deepest-nodes convergence table
    Table {
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GfKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "Ah", alias = "ah")]
    Ah,
    #[value(name = "ph")]
    Ph,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "dG", alias = "dg")]
    Dg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Repr {
    Tree,
    Decorated,
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.order < 1 {
        eprintln!("error: --order must be at least 1");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Series { gf, h, route } => cmd_series(cli.order, *gf, *h, route.as_deref()),
        Command::Trees { size, list, bound } => cmd_trees(*size, *list, *bound),
        Command::Biject { from, to, input } => cmd_biject(*from, *to, input),
        Command::Verify {} => cmd_verify(cli.order),
        Command::Table { max_n, format } => cmd_table(*max_n, *format),
    };
    match result {
        Ok((text, code)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<(String, u8), String>;

fn cmd_series(order: usize, gf: GfKind, h: Option<usize>, route: Option<&str>) -> CmdResult {
    let rendered = match gf {
        GfKind::A => {
            if route.is_some() {
                return Err("A has a single route".into());
            }
            gf_a(order).to_string()
        }
        GfKind::Ah => {
            let h = h.ok_or("--h is required for Ah")?;
            if h < 1 {
                return Err("--h must be at least 1".into());
            }
            let route = match route.unwrap_or("recursive") {
                "recursive" => Route::Recursive,
                "closed" => Route::Closed,
                other => return Err(format!("unknown route '{other}' (recursive|closed)")),
            };
            gf_a_h(h, order, route).to_string()
        }
        GfKind::Ph => {
            let h = h.ok_or("--h is required for ph")?;
            if h < 1 {
                return Err("--h must be at least 1".into());
            }
            let route = match route.unwrap_or("recursive") {
                "recursive" => Route::Recursive,
                "closed" => Route::Closed,
                other => return Err(format!("unknown route '{other}' (recursive|closed)")),
            };
            gf_p_h(h, order, route).map_err(|e| e.to_string())?.to_string()
        }
        GfKind::G => {
            let route = match route.unwrap_or("recursive") {
                "recursive" => GRoute::Recursive,
                "explicit" => GRoute::Explicit,
                other => return Err(format!("unknown route '{other}' (recursive|explicit)")),
            };
            gf_g(order, route).to_string()
        }
        GfKind::Dg => {
            let route = match route.unwrap_or("closed_sum") {
                "derivative" => DGRoute::Derivative,
                "closed_sum" => DGRoute::ClosedSum,
                "level_recursion" => DGRoute::LevelRecursion,
                other => {
                    return Err(format!(
                        "unknown route '{other}' (derivative|closed_sum|level_recursion)"
                    ))
                }
            };
            gf_dg(order, route).to_string()
        }
    };
    Ok((format!("{rendered}\n"), 0))
}

fn cmd_trees(size: usize, list: bool, bound: usize) -> CmdResult {
    if bound > trees::MAX_GENERATE {
        return Err(format!(
            "--bound must not exceed {}",
            trees::MAX_GENERATE
        ));
    }
    if size < 1 || size > bound {
        return Err(format!("--size must be between 1 and {bound}"));
    }
    let all = trees::generate(size).map_err(|e| e.to_string())?;
    let mut out = String::new();
    if list {
        for t in &all {
            let s = t.stats();
            writeln!(out, "{} {} {} {}", t.encode(), s.height, s.deepest, s.marks).unwrap();
        }
    } else {
        writeln!(out, "{}", all.len()).unwrap();
    }
    Ok((out, 0))
}

fn cmd_biject(from: Repr, to: Repr, input: &str) -> CmdResult {
    // normalize through the decorated path, which sits between the other two
    let decorated = match from {
        Repr::Tree => {
            let tree = MarkedTree::decode(input).map_err(|e| e.to_string())?;
            tree_to_decorated(&tree)
        }
        Repr::Decorated => DecoratedPath::parse(input).map_err(|e| e.to_string())?,
        Repr::Skew => {
            let skew = SkewPath::parse(input).map_err(|e| e.to_string())?;
            if let d @ (SkewDiagnostics::BelowAxis { .. }
            | SkewDiagnostics::OpenEnd { .. }
            | SkewDiagnostics::SegmentOverlap { .. }) = validate_skew(&skew)
            {
                return Err(format!("invalid skew path: {d:?}"));
            }
            skew_to_decorated(&skew).map_err(|e| e.to_string())?
        }
    };
    let rendered = match to {
        Repr::Tree => decorated_to_tree(&decorated)
            .map_err(|e| e.to_string())?
            .encode(),
        Repr::Decorated => decorated.to_string(),
        Repr::Skew => decorated_to_skew(&decorated)
            .map_err(|e| e.to_string())?
            .to_string(),
    };
    Ok((format!("{rendered}\n"), 0))
}

fn cmd_verify(order: usize) -> CmdResult {
    let mut out = String::new();
    let mut all_ok = true;
    let mut record = |out: &mut String, name: &str, pass: bool| {
        writeln!(out, "{} {name}", if pass { "PASS" } else { "FAIL" }).unwrap();
        all_ok &= pass;
    };

    for check in genfun::identity_suite(order).checks {
        record(&mut out, &format!("identity: {}", check.name), check.pass);
    }

    for h in 1..=12 {
        record(
            &mut out,
            &format!("A_{h} recursive = closed"),
            gf_a_h(h, order, Route::Recursive) == gf_a_h(h, order, Route::Closed),
        );
    }
    for h in 2..=12 {
        let pass = match (
            gf_p_h(h, order, Route::Recursive),
            gf_p_h(h, order, Route::Closed),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        record(&mut out, &format!("p_{h} recursive = closed"), pass);
    }
    let g_rec = gf_g(order, GRoute::Recursive);
    record(
        &mut out,
        "G recursive = explicit",
        g_rec == gf_g(order, GRoute::Explicit),
    );
    let dg = gf_dg(order, DGRoute::ClosedSum);
    record(
        &mut out,
        "dG derivative = closed_sum",
        gf_dg(order, DGRoute::Derivative) == dg,
    );
    record(
        &mut out,
        "dG level_recursion = closed_sum",
        gf_dg(order, DGRoute::LevelRecursion) == dg,
    );

    let a = gf_a(order);
    let brute_bound = 11.min(order);
    for n in 1..=brute_bound {
        let generated = trees::generate(n).map_err(|e| e.to_string())?;
        record(
            &mut out,
            &format!("|trees({n})| = [z^{n}] A"),
            Rat::from_integer(generated.len().into()) == *a.coeff(n).unwrap(),
        );
        let oracle = trees::deepest_polynomial(n).map_err(|e| e.to_string())?;
        let coeff = g_rec.coeff(n).unwrap();
        let same = oracle
            .iter()
            .enumerate()
            .all(|(d, c)| coeff.coeff(d) == Rat::from_integer(c.clone()));
        record(&mut out, &format!("deepest_polynomial({n}) = [z^{n}] G"), same);
        let total: num::BigInt = generated.iter().map(|t| t.stats().deepest).sum::<usize>().into();
        record(
            &mut out,
            &format!("total deepest({n}) = [z^{n}] dG"),
            Rat::from_integer(total) == *dg.coeff(n).unwrap(),
        );
    }

    let mut roundtrip_ok = true;
    for n in 1..=10.min(brute_bound) {
        for t in trees::generate(n).map_err(|e| e.to_string())? {
            let dec = tree_to_decorated(&t);
            if decorated_to_tree(&dec).as_ref() != Ok(&t) {
                roundtrip_ok = false;
                break;
            }
            let skew = match decorated_to_skew(&dec) {
                Ok(s) => s,
                Err(_) => {
                    roundtrip_ok = false;
                    break;
                }
            };
            if skew_to_decorated(&skew).as_ref() != Ok(&dec)
                || validate_skew(&skew) != SkewDiagnostics::Valid
            {
                roundtrip_ok = false;
                break;
            }
        }
    }
    record(&mut out, "bijection round trips (n <= 10)", roundtrip_ok);

    Ok((out, u8::from(!all_ok)))
}

fn cmd_table(max_n: usize, format: Format) -> CmdResult {
    if max_n < 1 {
        return Err("--max-n must be at least 1".into());
    }
    let table = ratio_table(max_n);
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "{:>6} {:>28} {:>28} {:>10}", "nodes", "deepest_nodes", "trees", "ratio")
                .unwrap();
            for row in &table {
                writeln!(
                    out,
                    "{:>6} {:>28} {:>28} {:>10}",
                    row.n, row.deepest_total, row.trees, row.ratio
                )
                .unwrap();
            }
            if max_n >= 20 {
                if let Ok(report) = limit_gap_check(&table, 20, max_n) {
                    writeln!(
                        out,
                        "|ratio({}) - 5/3| = {} (was {} at n = 20)",
                        max_n,
                        deepnodes::asymptotics::decimal_string(&report.gap_large, 6),
                        deepnodes::asymptotics::decimal_string(&report.gap_small, 6),
                    )
                    .unwrap();
                }
            }
        }
        Format::Csv => {
            writeln!(out, "nodes,deepest_nodes,trees,ratio").unwrap();
            for row in &table {
                writeln!(out, "{},{},{},{}", row.n, row.deepest_total, row.trees, row.ratio)
                    .unwrap();
            }
        }
        Format::Json => {
            // integers emitted verbatim: exact, never floats
            out.push_str("[\n");
            for (i, row) in table.iter().enumerate() {
                let ratio = row.exact_ratio();
                write!(
                    out,
                    "  {{\"n\": {}, \"deepest_total\": {}, \"trees\": {}, \"ratio_num\": {}, \"ratio_den\": {}}}",
                    row.n,
                    row.deepest_total,
                    row.trees,
                    ratio.numer(),
                    ratio.denom()
                )
                .unwrap();
                out.push_str(if i + 1 < table.len() { ",\n" } else { "\n" });
            }
            out.push_str("]\n");
        }
    }
    Ok((out, 0))
}
