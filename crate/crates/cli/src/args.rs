use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "apolar", version, about = "Apolarity, catalecticants and rank bounds for symmetric forms")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Coefficient field: `QQ` or `Fp:<prime>`.
    #[arg(long, global = true, default_value = "QQ")]
    pub field: String,
    /// Number of variables; inferred from the highest index when omitted.
    #[arg(long, global = true)]
    pub nvars: Option<usize>,
    /// Write the JSON report to this path (`-` for stdout only).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Hilbert function, length and minimal generators of F⊥.
    Annihilator {
        #[arg(long)]
        form: String,
    },
    /// Lower bound length/d on the cactus rank.
    RankBound {
        #[arg(long)]
        form: String,
    },
    /// Cactus, smoothable and Waring rank of x0^d0 ·· xn^dn.
    Monomial {
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        exponents: Vec<u32>,
    },
    /// Exact rank certificate for (x0 ·· xn)^d.
    Certify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd', value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
    /// Check an ideal or a point set for apolarity to F.
    #[command(group(ArgGroup::new("witness").required(true).args(["ideal", "points"])))]
    Verify {
        #[arg(long)]
        form: String,
        /// Generators in y0..yn separated by `;`.
        #[arg(long)]
        ideal: Option<String>,
        /// File with one point per line, coordinates separated by `:`.
        #[arg(long)]
        points: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Annihilator { .. } => "annihilator",
            Command::RankBound { .. } => "rank-bound",
            Command::Monomial { .. } => "monomial",
            Command::Certify { .. } => "certify",
            Command::Verify { .. } => "verify",
        }
    }
}
