use clap::{Args, Parser, Subcommand, ValueEnum};

use dyckperm::corpus::DEFAULT_MAX_N;

#[derive(Debug, Parser)]
#[command(
    name = "dyckperm",
    version,
    about = "1234-avoiding permutations as pairs of Dyck paths"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit one JSON object per result instead of plain text
    #[arg(long, global = true)]
    pub json: bool,

    /// Print paths as code literals (`n=7;A=2,6;D=1,3`) instead of U/D strings
    #[arg(long, global = true)]
    pub code: bool,

    /// Largest n the generators will accept
    #[arg(long, global = true, env = "DYCKPERM_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Send a permutation to its pair of Dyck paths
    Map {
        /// The permutation, as one quoted argument or as separate values
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Recover the 1234-avoider behind an admissible pair
    Unmap {
        path_p: String,
        path_q: String,
    },
    /// Decide whether a pair of paths is in the image
    Admissible {
        path_p: String,
        path_q: String,
    },
    /// The 1234-avoiding representative of a permutation's class
    Canon {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    Lprime {
        path: String,
    },
    Kreweras {
        path: String,
    },
    /// Whether P ≤ Q in the path order
    Leq {
        path_p: String,
        path_q: String,
    },
    /// Upper covers of a path, or the Hasse diagram of a semilength class
    Covers {
        #[arg(long, conflicts_with_all = ["dot", "n"])]
        list: Option<String>,
        #[arg(long, requires = "n")]
        dot: bool,
        #[arg(long)]
        n: Option<usize>,
    },
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "paths")]
        avoid: Option<Avoid>,
        /// Dyck paths of semilength n instead of permutations
        #[arg(long)]
        paths: bool,
    },
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "paths")]
        avoid: Option<Avoid>,
        #[arg(long)]
        paths: bool,
    },
    /// ASCII drawing of a path
    Render {
        path: String,
    },
    /// Run the property suites for every size up to --n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<Suite>,
        /// Worker threads; 0 means one per processor
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Seed for the sampled checks above the exhaustive limits
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Avoid {
    #[value(name = "123")]
    P123,
    #[value(name = "1234")]
    P1234,
}

impl From<Avoid> for dyckperm::Pattern {
    fn from(a: Avoid) -> Self {
        match a {
            Avoid::P123 => dyckperm::Pattern::P123,
            Avoid::P1234 => dyckperm::Pattern::P1234,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    All,
    Counts,
    Involutions,
    /// μ = L′∘λ on 123-avoiders
    #[value(name = "theorem6", alias = "mu-lprime")]
    MuLprime,
    /// ν image equals the admissible pairs
    #[value(name = "theorem7", alias = "image")]
    Image,
    Roundtrip,
    PosetOracle,
    /// reverse-complement and inverse symmetries
    #[value(name = "prop3", alias = "symmetries")]
    Symmetries,
    /// multiplicativity over right-connected components
    #[value(name = "prop4", alias = "multiplicativity")]
    Multiplicativity,
    /// intrinsic minima/maxima order criterion vs the path order
    #[value(name = "prop5", alias = "order-criterion")]
    OrderCriterion,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Counts,
        Suite::Involutions,
        Suite::MuLprime,
        Suite::Image,
        Suite::Roundtrip,
        Suite::PosetOracle,
        Suite::Symmetries,
        Suite::Multiplicativity,
        Suite::OrderCriterion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Counts => "counts",
            Suite::Involutions => "involutions",
            Suite::MuLprime => "theorem6",
            Suite::Image => "theorem7",
            Suite::Roundtrip => "roundtrip",
            Suite::PosetOracle => "poset-oracle",
            Suite::Symmetries => "prop3",
            Suite::Multiplicativity => "prop4",
            Suite::OrderCriterion => "prop5",
        }
    }
}
