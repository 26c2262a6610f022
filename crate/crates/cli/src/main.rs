//! `braidknot`: knot invariants of braid closures from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::process::ExitCode;

use braidknot::verify::paper_checks;
use braidknot::{
    invariant_report, parse_braid, verify_family, Family, Field, InvariantReport, ReportOptions,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "braidknot",
    version,
    about = "Exact knot invariants of braid closures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single braid closure.
    Invariants {
        /// Braid word, e.g. "[3,2,2,1,3,2,2,3,2,(1,2)^6]".
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Strand count; inferred as max|letter|+1 when omitted.
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Cross-check a braid family over a parameter range.
    Family {
        /// Kn, A or B.
        #[arg(long)]
        name: Family,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Also compute HOMFLY-PT and the MFW lower bound (slower).
        #[arg(long)]
        homfly: bool,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run the full cross-check sweep; exits 1 on any mismatch.
    Verify {
        #[arg(long, required = true)]
        paper: bool,
    },
}

#[derive(Args)]
struct Output {
    /// Also compute HOMFLY-PT and the MFW bracket.
    #[arg(long)]
    homfly: bool,
    /// Single-line JSON.
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Invariants {
            braid,
            strands,
            output,
        } => invariants(&braid, strands, &output),
        Command::Family {
            name,
            from,
            to,
            homfly,
            json,
        } => family(name, from, to, homfly, json),
        Command::Verify { .. } => verify(),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn invariants(text: &str, strands: Option<usize>, output: &Output) -> ExitCode {
    let word = match parse_braid(text, strands) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let report = invariant_report(
        &word,
        ReportOptions {
            homfly: output.homfly,
        },
    );
    if output.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else if output.pretty {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", render_text(&report));
    }
    ExitCode::SUCCESS
}

fn show<T>(field: &Field<T>, f: impl FnOnce(&T) -> String) -> String {
    match field {
        Field::Value(v) => f(v),
        Field::Absent { reason, .. } => format!("absent ({reason})"),
    }
}

fn render_text(r: &InvariantReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<17}{v}\n"));
    line("braid", r.braid.clone());
    line("strands", r.strands.to_string());
    line("writhe", r.writhe.to_string());
    line("components", r.components.to_string());
    line("genus", show(&r.genus, |g| g.to_string()));
    line("alexander", show(&r.alexander, |p| p.to_string()));
    line(
        "formal semigroup",
        show(&r.formal_semigroup, |s| {
            format!("{:?} ∪ [{}, ∞)", s.finite_part, s.threshold)
        }),
    );
    line(
        "closed under +",
        show(&r.semigroup_closed, |c| match c.witness {
            None => "yes".into(),
            Some((a, b)) => format!("no ({a} + {b} = {} missing)", a + b),
        }),
    );
    line("homfly", show(&r.homfly, |p| p.to_string()));
    line(
        "mfw",
        show(&r.mfw, |m| {
            format!(
                "d+ = {}, d- = {}, {} <= braid index <= {}",
                m.d_plus, m.d_minus, m.lower_bound, m.upper_bound
            )
        }),
    );
    out
}

fn family(name: Family, from: u32, to: u32, homfly: bool, json: bool) -> ExitCode {
    let verdicts = match verify_family(name, from, to, ReportOptions { homfly }) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string(&verdicts).expect("verdicts serialize")
        );
    } else {
        println!("  n  routes semigroup closed genus   mfw   alexander");
        for v in &verdicts {
            let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
            println!(
                "{:>3}  {:<6} {:<9} {:<6} {:<7} {:<5} {}",
                v.n,
                v.route_agreement,
                opt(v.semigroup_agreement),
                opt(v.semigroup_closed.map(|c| c.closed)),
                format!("{}{}", v.genus, if v.genus_ok { "" } else { "!" }),
                v.mfw_lower.map_or("-".into(), |m| m.to_string()),
                v.alexander
            );
        }
    }
    if verdicts.iter().all(|v| v.consistent()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify() -> ExitCode {
    let outcomes = paper_checks();
    for o in &outcomes {
        println!(
            "[{}] {}. {} ({} ms): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.millis,
            o.detail
        );
    }
    if outcomes.iter().all(|o| o.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
