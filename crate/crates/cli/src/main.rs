//! Batch CLI over the library: parse documents, run one operation, print
//! a deterministic JSON report, exit by verdict.

use clap::Parser;
use prosset_cli::{corpus, run, schema};

#[derive(Parser, Debug)]
#[command(
    name = "prosset",
    about = "Desk-scale computations with truncated simplicial sets and pro-spaces"
)]
struct Args {
    /// Command: homology | pro-hom | is-pro-iso | we-check-{b,c,d,e} |
    /// factor-we | factor-cofib | lift | rlp | strong-fib | postnikov |
    /// map-space | twisted-cohomology | corpus-gen | verify-certificates
    command: String,

    /// Input documents (JSON files).
    inputs: Vec<std::path::PathBuf>,

    /// Truncation bound override (where a command uses one).
    #[arg(long)]
    dim_bound: Option<usize>,

    /// Search budget (candidate steps).
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,

    /// Maximum generator dimension for lifting-property reports.
    #[arg(long)]
    rlp_max_dim: Option<usize>,

    /// Seed for corpus generation.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Degree ceiling for homotopy checks and mapping spaces.
    #[arg(long, default_value_t = 1)]
    n_max: usize,

    /// Attachment rounds for the small object argument.
    #[arg(long, default_value_t = 6)]
    step_budget: usize,

    /// Cohomology degree.
    #[arg(long, default_value_t = 1)]
    degree: usize,

    /// Coefficient modulus (homology) or family threshold n (rlp).
    #[arg(long)]
    modulus: Option<i128>,

    /// Corpus profile: spheres | nerves | towers | retracts | squares.
    #[arg(long)]
    profile: Option<String>,

    /// Directory to write corpus documents into (one file each).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() {
    let args = Args::parse();
    std::process::exit(real_main(args));
}

fn real_main(args: Args) -> i32 {
    if args.command == "corpus-gen" {
        let profile = match &args.profile {
            Some(p) => p.clone(),
            None => {
                eprintln!("corpus-gen requires --profile");
                return 3;
            }
        };
        return match corpus::corpus_gen(args.seed, &profile) {
            Ok(docs) => {
                match &args.out {
                    Some(dir) => {
                        if let Err(e) = std::fs::create_dir_all(dir) {
                            eprintln!("cannot create {}: {e}", dir.display());
                            return 3;
                        }
                        for (i, d) in docs.iter().enumerate() {
                            let path = dir.join(format!("{profile}-{i:03}.json"));
                            if let Err(e) = std::fs::write(&path, schema::serialize(d)) {
                                eprintln!("cannot write {}: {e}", path.display());
                                return 3;
                            }
                        }
                    }
                    None => {
                        for d in &docs {
                            print!("{}", schema::serialize(d));
                        }
                    }
                }
                0
            }
            Err(e) => {
                eprintln!("{e}");
                3
            }
        };
    }

    let mut inputs = Vec::new();
    for path in &args.inputs {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("cannot read {}: {e}", path.display());
                return 3;
            }
        };
        match schema::parse(&text) {
            Ok(doc) => inputs.push(doc),
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return 3;
            }
        }
    }

    let flags = run::Flags {
        dim_bound: args.dim_bound,
        budget: args.budget,
        rlp_max_dim: args.rlp_max_dim,
        seed: args.seed,
        n_max: args.n_max,
        step_budget: args.step_budget,
        degree: args.degree,
        modulus: args.modulus,
    };
    let outcome = run::run(&args.command, &inputs, &flags);
    let doc = schema::doc(schema::Payload::Report(outcome.report));
    print!("{}", schema::serialize(&doc));
    outcome.exit
}
