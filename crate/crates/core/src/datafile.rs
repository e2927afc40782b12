//! Text format for generator lists.
//!
//! ```text
//! # comment
//! degree 11
//! order 7920
//! family mathieu11
//! (1,2,3,4,5,6,7,8,9,10,11)
//! (3,7,11,8)(4,10,5,6)
//! ```
//!
//! `degree` must be the first non-comment line. `order` and `family` are
//! optional keyword lines placed before the generators. Every following
//! non-blank line is one generator in cycle notation (`()` for the identity).
//! With no generator lines the group is trivial.

use num_bigint::BigUint;

use crate::engine::{build_engine, GroupEngine};
use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation};
use crate::BigCount;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorData {
    pub degree: usize,
    pub family: Option<String>,
    pub generators: Vec<Permutation>,
    /// When present, the computed order must equal it.
    pub expected_order: Option<BigCount>,
}

impl GeneratorData {
    /// Parses the text format; errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<GeneratorData> {
        let err = |line: usize, message: String| Error::DataFile { line, message };
        let mut degree: Option<usize> = None;
        let mut family = None;
        let mut expected_order = None;
        let mut generators = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            let value = words.next();
            if words.next().is_some() && !line.starts_with('(') {
                return Err(err(
                    line_no,
                    format!("unexpected trailing text in {line:?}"),
                ));
            }
            let Some(n) = degree else {
                if keyword != "degree" {
                    return Err(err(line_no, "the first line must be `degree <n>`".into()));
                }
                let n: usize = value
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| err(line_no, "degree must be a positive integer".into()))?;
                if n == 0 {
                    return Err(err(line_no, "degree must be a positive integer".into()));
                }
                degree = Some(n);
                continue;
            };
            match keyword {
                "order" | "family" if !generators.is_empty() => {
                    return Err(err(
                        line_no,
                        format!("`{keyword}` must precede the generators"),
                    ));
                }
                "order" => {
                    let order: BigUint = value
                        .and_then(|v| v.parse().ok())
                        .ok_or_else(|| err(line_no, "order must be a decimal integer".into()))?;
                    expected_order = Some(order);
                }
                "family" => {
                    let tag = value.ok_or_else(|| err(line_no, "missing family tag".into()))?;
                    family = Some(tag.to_string());
                }
                "degree" => return Err(err(line_no, "duplicate degree line".into())),
                _ => {
                    let g = parse_cycles(line, n).map_err(|e| err(line_no, e.to_string()))?;
                    generators.push(g);
                }
            }
        }

        let degree = degree.ok_or_else(|| err(1, "missing `degree <n>` line".into()))?;
        Ok(GeneratorData {
            degree,
            family,
            generators,
            expected_order,
        })
    }

    /// Builds the engine and enforces the `order` line if present.
    pub fn build(&self) -> Result<GroupEngine> {
        let engine = if self.generators.is_empty() {
            build_engine(&[Permutation::identity(self.degree)])?
        } else {
            build_engine(&self.generators)?
        };
        if let Some(expected) = &self.expected_order {
            let computed = engine.order();
            if &computed != expected {
                return Err(Error::OrderMismatch {
                    expected: expected.clone(),
                    computed,
                });
            }
        }
        Ok(engine)
    }

    /// Renders back into the text format.
    pub fn render(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        if let Some(order) = &self.expected_order {
            out.push_str(&format!("order {order}\n"));
        }
        if let Some(family) = &self.family {
            out.push_str(&format!("family {family}\n"));
        }
        for g in &self.generators {
            out.push_str(&g.format_cycles());
            out.push('\n');
        }
        out
    }
}
