//! Command-line front end for `slicegroup`: argument parsing, table output
//! and the lattice cache.

pub mod cache;
pub mod commands;
pub mod output;

use std::path::PathBuf;

use anyhow::Result;
use clap::{Parser, Subcommand};

use cache::LatticeCache;
use commands::{Context, SliceOptions};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "slicegroup", version, about = "Burnside and slice Burnside constants of small finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Directory for the subgroup lattice cache.
    #[arg(long, env = "SLICEGROUP_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Ignore the cache even if a directory is configured.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest group order accepted.
    #[arg(long, default_value_t = slicegroup::DEFAULT_ORDER_CAP, global = true)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, element orders, center and subgroup counts.
    Info { expr: String },
    /// All subgroups in lattice order, with conjugacy classes.
    Subgroups { expr: String },
    /// The Möbius function μ(X, G), and μ(X, Y) on request.
    Mobius {
        expr: String,
        /// A pair "X,Y" of subgroups.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Idempotents of the Burnside algebra.
    Burnside {
        expr: String,
        /// Add the table of deflation constants m_{G,N}.
        #[arg(long)]
        m_table: bool,
        /// Add β(G) with its witness.
        #[arg(long)]
        beta: bool,
    },
    /// Slice classes and slice Burnside data.
    Slices {
        expr: String,
        /// Coefficients of ξ_{T,S}; give "T,S".
        #[arg(long)]
        xi: Option<String>,
        /// Constants m_{G,S,N} and m°_{G,S,N} for the given S.
        #[arg(long)]
        m_table: Option<String>,
        /// Decide whether (G, S) is a T-slice.
        #[arg(long)]
        tslice: Option<String>,
        /// Decide whether (G, S) is a T°-slice.
        #[arg(long)]
        t0slice: Option<String>,
    },
    /// The largest quotient T°-slice of (G, S).
    Tau0 {
        expr: String,
        #[arg(long)]
        slice: String,
    },
    /// Run the verification suite over a catalog of groups.
    Verify {
        /// File with one group expression per line.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
    },
    /// The C2 x D8 example where T-slices have no largest quotient.
    Remark22,
}

/// Executes a parsed command line, returning the rendered output and whether
/// every check it ran passed.
pub fn run(cli: &Cli) -> Result<(String, bool)> {
    let cache = match (&cli.cache_dir, cli.no_cache) {
        (Some(dir), false) => LatticeCache::at(dir),
        _ => LatticeCache::disabled(),
    };
    let ctx = Context { cap: cli.cap, cache };
    let (output, passed) = match &cli.command {
        Command::Info { expr } => (commands::info(&ctx, expr)?, true),
        Command::Subgroups { expr } => (commands::subgroups(&ctx, expr)?, true),
        Command::Mobius { expr, pair } => (commands::mobius(&ctx, expr, pair.as_deref())?, true),
        Command::Burnside { expr, m_table, beta } => (commands::burnside(&ctx, expr, *m_table, *beta)?, true),
        Command::Slices {
            expr,
            xi,
            m_table,
            tslice,
            t0slice,
        } => {
            let opts = SliceOptions {
                xi: xi.as_deref(),
                m_table: m_table.as_deref(),
                tslice: tslice.as_deref(),
                t0slice: t0slice.as_deref(),
            };
            (commands::slices(&ctx, expr, opts)?, true)
        }
        Command::Tau0 { expr, slice } => (commands::tau0(&ctx, expr, slice)?, true),
        Command::Verify { catalog, check } => {
            let catalog = match catalog {
                Some(path) => Some(commands::read_catalog(&std::fs::read_to_string(path).map_err(|e| {
                    anyhow::anyhow!("cannot read catalog {}: {e}", path.display())
                })?)),
                None => None,
            };
            commands::verify(&ctx, catalog, check.as_deref())?
        }
        Command::Remark22 => commands::counterexample(),
    };
    Ok((output.render(cli.format), passed))
}
