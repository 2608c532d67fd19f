use clap::{Args, Parser, Subcommand, ValueEnum};

const SET_HELP: &str = "Base set: explicit `{a,b,c}`, or the family `Rp(p=P,N=K)` \
meaning {P*n^2 : 1 <= n <= K}; parts combine with `+`, e.g. `Rp(p=3,N=40)+{4}`";

#[derive(Debug, Parser)]
#[command(name = "seqforge", version, about = "Practical numbers, sum-free sequences, sums of distinct powers and (k,l,m)-numbers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub family: Family,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Write tables to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; 1 forces sequential scans. Defaults to available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Omit the provenance footer (tool version, config hash, wall time).
    #[arg(long, global = true)]
    pub no_provenance: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Practical numbers.
    #[command(subcommand)]
    Practical(PracticalCmd),
    /// Sum-free sequences.
    #[command(subcommand)]
    Sumfree(SumfreeCmd),
    /// Sums of distinct powers.
    #[command(subcommand)]
    Powsum(PowsumCmd),
    /// (k,l,m)-numbers.
    #[command(subcommand)]
    Klm(KlmCmd),
    /// Checkpointed experiments.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Subcommand)]
pub enum PracticalCmd {
    /// Test one integer (Stewart criterion, or the divisor-sum definition with --oracle).
    Check {
        n: u64,
        #[arg(long)]
        oracle: bool,
    },
    /// Factorization, sigma and divisors.
    Factor { n: u64 },
    /// List practical numbers up to --limit.
    List {
        #[arg(long)]
        limit: u64,
    },
    /// P(x) and P2(x) at checkpoints.
    Count {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<u64>,
    },
    /// Least practical decomposition of an even number.
    Goldbach { n: u64 },
    /// Check that m*n is practical for practical m and n <= 2m.
    Product { m: u64, n: u64 },
    /// Centers m with m+o practical for every offset.
    Tuples {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        offsets: Vec<i64>,
        #[arg(long)]
        limit: u64,
    },
    /// Twin practical multiples m1*r, m2*s of a qualifying pair.
    Twin { m1: u64, m2: u64 },
    /// lambda1 / lambda2 ratios at checkpoints.
    Lambda {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<u64>,
    },
    /// P(2x) / P(x).
    Erdos { x: u64 },
}

#[derive(Debug, Subcommand)]
pub enum SumfreeCmd {
    /// Verify a sequence; reports the first violating index.
    Check {
        #[arg(value_delimiter = ',', required = true)]
        terms: Vec<u64>,
    },
    /// Greedy continuation of a seed up to --limit.
    Greedy {
        #[arg(long, value_delimiter = ',', required = true)]
        seed: Vec<u64>,
        #[arg(long)]
        limit: u64,
    },
    /// Reciprocal sum, gap statistic and growth exponent of a verified prefix.
    Stats {
        #[arg(value_delimiter = ',', required = true)]
        terms: Vec<u64>,
    },
    /// Subset sums of a term list up to --bound.
    Sums {
        #[arg(value_delimiter = ',', required = true)]
        terms: Vec<u64>,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SetArgs {
    #[arg(long, help = SET_HELP)]
    pub set: String,
    /// Minimum exponent s.
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Collapse numerically equal powers from different (a, k).
    #[arg(long)]
    pub dedup: bool,
}

#[derive(Debug, Subcommand)]
pub enum PowsumCmd {
    /// Pow(A; s) up to --bound.
    Terms {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        bound: u64,
    },
    /// Elements of Sigma(Pow(A; s)) up to --bound.
    Sigma {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        bound: u64,
    },
    /// Completeness window and density over [1, bound].
    Window {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        bound: u64,
    },
    /// The family {p n^2 : n <= N} + {p+1}.
    Counterexample {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long = "N")]
        n: u64,
    },
    /// Reciprocal and logarithmic weights and the coprimality hypotheses.
    Weights {
        #[arg(long, help = SET_HELP)]
        set: String,
    },
    /// First elements of Sigma(Pow(A; s)) and their growth exponent.
    Joint {
        #[arg(long, default_value = "{3,4}", help = SET_HELP)]
        set: String,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct KlmArgs {
    #[arg(long, default_value_t = 2)]
    pub k: u64,
    #[arg(long, default_value_t = 1)]
    pub l: u64,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
}

#[derive(Debug, Subcommand)]
pub enum KlmCmd {
    /// Test one integer.
    Check {
        n: u64,
        #[command(flatten)]
        params: KlmArgs,
    },
    /// Enumerate up to --limit.
    List {
        #[command(flatten)]
        params: KlmArgs,
        #[arg(long)]
        limit: u64,
    },
    /// Counting function at checkpoints (default: powers of ten and the limit).
    Count {
        #[command(flatten)]
        params: KlmArgs,
        #[arg(long)]
        limit: u64,
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<u64>,
    },
    /// n^m exactly and its base-k digit sum.
    Digits {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// Check B(n (2^nu - 1)) = nu.
    Identity {
        #[arg(long)]
        nu: u32,
        #[arg(long)]
        n: u64,
    },
    /// Log-log slope of the (2,1,2) counting function.
    Fit {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = 10_000)]
        from: u64,
    },
    /// p_(2,k,k)(n) sqrt(ln n) / (n G_k) at checkpoints.
    Gk {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        limit: u64,
    },
    /// Compare counts with the known growth bounds.
    Monitor {
        #[command(flatten)]
        params: KlmArgs,
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        desk_floor: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        upper_constant: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentId {
    Lambda,
    ErdosRatio,
    GoldbachExhaustive,
    TwinCount,
    Counterexample,
    Joint34,
    Alpha,
    Gk,
    SumfreeStats,
}

#[derive(Debug, Clone, Args)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub id: ExperimentId,
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub checkpoints: Vec<u64>,
    #[arg(long, default_value_t = 3)]
    pub p: u64,
    #[arg(long = "N", default_value_t = 40)]
    pub n: u64,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    #[arg(long, default_value_t = 100_000)]
    pub bound: u64,
    #[arg(long, default_value_t = 10_000)]
    pub count: usize,
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub seed: Vec<u64>,
}
