use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use permgroup::families::{
    affine_1, alternating, counterexample_group, cyclic_regular, dihedral, mathieu, pgl2, symmetric,
};
use permgroup::{build_engine, parse_cycles, Error, GeneratorData, GroupEngine, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
    Affine,
    Pgl2,
    Mathieu11,
    Mathieu12,
    Counterexample,
}

/// Where the group comes from: a generator file, inline generators, or a family.
#[derive(Args, Debug)]
pub struct GroupInput {
    /// Generator file (`degree <n>`, optional `order <N>`, one generator per line)
    #[arg(conflicts_with_all = ["gens", "family"])]
    pub file: Option<PathBuf>,

    /// Inline generators separated by `;`, e.g. "(1,2,3);(1,2)"
    #[arg(long, requires = "degree", conflicts_with = "family")]
    pub gens: Option<String>,

    #[arg(long)]
    pub degree: Option<usize>,

    #[arg(long, value_enum)]
    pub family: Option<Family>,

    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub p: Option<u32>,

    #[arg(long)]
    pub m: Option<u32>,

    #[arg(long)]
    pub q: Option<u64>,

    /// Largest group the element stream may enumerate
    #[arg(long)]
    pub cap: Option<u64>,
}

fn missing(flag: &str, family: Family) -> Error {
    Error::InvalidArgument(format!("--{flag} is required for {family:?}"))
}

impl GroupInput {
    pub fn load(&self) -> Result<GroupEngine> {
        let engine = self.build()?;
        Ok(match self.cap {
            Some(cap) => engine.with_element_cap(BigUint::from(cap)),
            None => engine,
        })
    }

    fn build(&self) -> Result<GroupEngine> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| Error::DataFile {
                line: 0,
                message: format!("{}: {e}", path.display()),
            })?;
            return GeneratorData::parse(&text)?.build();
        }
        if let Some(gens) = &self.gens {
            let degree = self.degree.ok_or(Error::ZeroDegree)?;
            let parsed = gens
                .split(';')
                .map(|g| parse_cycles(g, degree))
                .collect::<Result<Vec<_>>>()?;
            return build_engine(&parsed);
        }
        let Some(family) = self.family else {
            return Err(Error::InvalidArgument(
                "give a generator file, --gens with --degree, or --family".into(),
            ));
        };
        let n = || self.n.ok_or_else(|| missing("n", family));
        match family {
            Family::Symmetric => symmetric(n()?),
            Family::Alternating => alternating(n()?),
            Family::Cyclic => cyclic_regular(n()?),
            Family::Dihedral => dihedral(n()?),
            Family::Affine => {
                let p = self.p.ok_or_else(|| missing("p", family))?;
                affine_1(p, self.m.unwrap_or(1))
            }
            Family::Pgl2 => pgl2(self.q.ok_or_else(|| missing("q", family))?),
            Family::Mathieu11 => mathieu(11),
            Family::Mathieu12 => mathieu(12),
            Family::Counterexample => Ok(counterexample_group()),
        }
    }
}
