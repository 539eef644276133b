use adlv_core::{CartanType, RootSystem};
use clap::ValueEnum;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

/// Either one Cartan type or all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeSel {
    All,
    One(CartanType),
}

impl TypeSel {
    pub fn parse(s: &str) -> CliResult<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TypeSel::All);
        }
        CartanType::parse(s)
            .map(TypeSel::One)
            .ok_or_else(|| CliError::Usage(format!("unknown Cartan type '{s}'")))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub types: TypeSel,
    pub rank: Option<usize>,
    /// Largest finite Weyl group that may be enumerated.
    pub group_cap: u64,
    /// Interval length budget; `None` means the command's default.
    pub interval_budget: Option<usize>,
    pub seed: u64,
    pub format: Format,
    /// Largest group for which tables recompute entries by brute force.
    pub brute_cap: u64,
    pub timing: bool,
}

pub const DEFAULT_BUDGET: usize = 30;

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            types: TypeSel::All,
            rank: None,
            group_cap: 1_000_000,
            interval_budget: None,
            seed: 0,
            format: Format::Json,
            brute_cap: 4000,
            timing: true,
        }
    }
}

impl RunConfig {
    pub fn for_type(ty: CartanType, rank: usize) -> Self {
        RunConfig {
            types: TypeSel::One(ty),
            rank: Some(rank),
            ..RunConfig::default()
        }
    }

    pub fn budget(&self) -> usize {
        self.interval_budget.unwrap_or(DEFAULT_BUDGET)
    }

    /// The single root system named by `--type` and `--rank`.
    pub fn root_system(&self) -> CliResult<RootSystem> {
        let TypeSel::One(ty) = self.types else {
            return Err(CliError::Usage("this command needs a single --type".into()));
        };
        let rank = self
            .rank
            .ok_or_else(|| CliError::Usage("this command needs --rank".into()))?;
        ty.validate(rank).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(RootSystem::new(ty, rank)?)
    }
}
