//! Machine-readable documents. Big integers are decimal strings.

use permgroup::{
    BochertReport, ClassificationReport, DivisibilityReport, Filter, FrobeniusReport, MomentValue,
};
use serde::{Deserialize, Serialize};

pub fn filter_name(filter: Filter) -> &'static str {
    match filter {
        Filter::AllNontrivialElements => "all",
        Filter::PrimePowerOrder => "prime-power",
        Filter::PrimeOrder => "prime",
        Filter::AllNontrivialSubgroups => "subgroups",
    }
}

pub fn set(values: &[usize]) -> String {
    let inner: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDocument {
    pub degree: usize,
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub degree: usize,
    pub order: String,
    pub filter: String,
    pub spectrum: Vec<usize>,
    pub product: String,
    pub divides: bool,
    pub quotient: Option<String>,
    pub sharp: bool,
}

impl CheckDocument {
    pub fn new(report: &DivisibilityReport) -> CheckDocument {
        CheckDocument {
            degree: report.degree,
            order: report.group_order.to_string(),
            filter: filter_name(report.spectrum.filter).to_string(),
            spectrum: report.spectrum.values.clone(),
            product: report.product.to_string(),
            divides: report.divides,
            quotient: report.quotient.as_ref().map(ToString::to_string),
            sharp: report.is_sharp,
        }
    }

    pub fn render_text(&self) -> String {
        format!(
            "degree {}\norder {}\nfilter {}\nspectrum {}\nproduct {}\ndivides {}\nquotient {}\nsharp {}\n",
            self.degree,
            self.order,
            self.filter,
            set(&self.spectrum),
            self.product,
            self.divides,
            self.quotient.as_deref().unwrap_or("-"),
            self.sharp
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentRow {
    pub k: u32,
    pub direct: Option<String>,
    pub recursive: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentsDocument {
    pub degree: usize,
    pub order: String,
    pub method: String,
    pub moments: Vec<MomentRow>,
    pub agree: Option<bool>,
}

impl MomentsDocument {
    pub fn render_text(&self) -> String {
        let mut out = format!("degree {}\norder {}\n", self.degree, self.order);
        let header = match self.method.as_str() {
            "both" => "k direct recursive",
            "direct" => "k direct",
            _ => "k recursive",
        };
        out.push_str(header);
        out.push('\n');
        for row in &self.moments {
            let cells: Vec<&str> = [&row.direct, &row.recursive]
                .into_iter()
                .flatten()
                .map(String::as_str)
                .collect();
            out.push_str(&format!("{} {}\n", row.k, cells.join(" ")));
        }
        if self.agree == Some(false) {
            out.push_str("MISMATCH\n");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentEntry {
    pub k: u32,
    pub value: String,
}

fn moment_entries(moments: &[MomentValue]) -> Vec<MomentEntry> {
    moments
        .iter()
        .map(|m| MomentEntry {
            k: m.k,
            value: m.value.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusBlock {
    pub is_frobenius: bool,
    pub kernel_size: usize,
    pub kernel_is_subgroup: bool,
    pub kernel_is_normal: bool,
    pub kernel_is_abelian: bool,
}

impl From<&FrobeniusReport> for FrobeniusBlock {
    fn from(f: &FrobeniusReport) -> Self {
        FrobeniusBlock {
            is_frobenius: f.is_frobenius,
            kernel_size: f.kernel_size,
            kernel_is_subgroup: f.kernel_is_subgroup,
            kernel_is_normal: f.kernel_is_normal,
            kernel_is_abelian: f.kernel_is_abelian,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BochertBlock {
    pub applicable: bool,
    pub order: String,
    pub bound: String,
    pub satisfied: bool,
}

impl From<&BochertReport> for BochertBlock {
    fn from(b: &BochertReport) -> Self {
        BochertBlock {
            applicable: b.applicable,
            order: b.order.to_string(),
            bound: b.bound.to_string(),
            satisfied: b.satisfied,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub degree: usize,
    pub order: String,
    pub orbits: usize,
    pub transitive: bool,
    pub transitivity_degree: usize,
    pub sharply_transitive_k: Option<usize>,
    pub rank: Option<usize>,
    pub primitive: bool,
    pub block: Option<Vec<usize>>,
    pub spectrum: Option<Vec<usize>>,
    pub product: Option<String>,
    pub divides: Option<bool>,
    pub quotient: Option<String>,
    pub sharp: Option<bool>,
    pub frobenius: Option<FrobeniusBlock>,
    pub bochert: BochertBlock,
    pub moments: Vec<MomentEntry>,
    pub tags: Vec<String>,
    pub unavailable: Vec<String>,
}

impl ClassifyDocument {
    pub fn new(r: &ClassificationReport) -> ClassifyDocument {
        let b = r.blichfeldt.as_ref();
        ClassifyDocument {
            degree: r.degree,
            order: r.order.to_string(),
            orbits: r.num_orbits,
            transitive: r.transitive,
            transitivity_degree: r.transitivity_degree,
            sharply_transitive_k: r.sharply_transitive_k,
            rank: r.rank,
            primitive: r.primitivity.primitive,
            block: r.primitivity.block.clone(),
            spectrum: b.map(|b| b.spectrum.values.clone()),
            product: b.map(|b| b.product.to_string()),
            divides: b.map(|b| b.divides),
            quotient: b.and_then(|b| b.quotient.as_ref().map(ToString::to_string)),
            sharp: b.map(|b| b.is_sharp),
            frobenius: r.frobenius.as_ref().map(FrobeniusBlock::from),
            bochert: BochertBlock::from(&r.bochert),
            moments: moment_entries(&r.moments),
            tags: r.tags(),
            unavailable: r.unavailable().into_iter().map(String::from).collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut lines = vec![
            format!("degree {}", self.degree),
            format!("order {}", self.order),
            format!("orbits {}", self.orbits),
            format!("transitive {}", self.transitive),
            format!("transitivity_degree {}", self.transitivity_degree),
            format!(
                "sharply_transitive {}",
                opt(self.sharply_transitive_k.map(|k| k.to_string()))
            ),
            format!("rank {}", opt(self.rank.map(|r| r.to_string()))),
            format!("primitive {}", self.primitive),
        ];
        if let Some(block) = &self.block {
            lines.push(format!("block {}", set(block)));
        }
        lines.push(format!(
            "spectrum {}",
            opt(self.spectrum.as_deref().map(set))
        ));
        lines.push(format!("product {}", opt(self.product.clone())));
        lines.push(format!(
            "divides {}",
            opt(self.divides.map(|d| d.to_string()))
        ));
        lines.push(format!("quotient {}", opt(self.quotient.clone())));
        lines.push(format!("sharp {}", opt(self.sharp.map(|s| s.to_string()))));
        match &self.frobenius {
            Some(f) if f.is_frobenius => lines.push(format!(
                "frobenius true (kernel {}, normal {}, abelian {})",
                f.kernel_size, f.kernel_is_normal, f.kernel_is_abelian
            )),
            Some(_) => lines.push("frobenius false".into()),
            None => lines.push("frobenius -".into()),
        }
        let b = &self.bochert;
        lines.push(if b.applicable {
            format!("bochert {} <= {}: {}", b.order, b.bound, b.satisfied)
        } else {
            "bochert not applicable".to_string()
        });
        let moments: Vec<String> = self
            .moments
            .iter()
            .map(|m| format!("F_{}={}", m.k, m.value))
            .collect();
        lines.push(format!("moments {}", moments.join(" ")));
        lines.push(format!("tags {}", self.tags.join(",")));
        if !self.unavailable.is_empty() {
            lines.push(format!("unavailable {}", self.unavailable.join(",")));
        }
        lines.join("\n") + "\n"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub name: String,
    pub degree: usize,
    pub order: String,
    pub spectrum: Vec<usize>,
    pub product: String,
    pub divides: bool,
    pub sharp: bool,
    pub tags: Vec<String>,
    pub moments_agree: bool,
    pub orbit_stabilizer: bool,
    pub note: Option<String>,
}

impl CorpusRow {
    pub fn holds(&self) -> bool {
        self.divides && self.moments_agree && self.orbit_stabilizer
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDocument {
    pub groups: Vec<CorpusRow>,
    pub all_invariants_hold: bool,
}

impl CorpusDocument {
    pub fn render_text(&self) -> String {
        let mut out = String::from("name degree order spectrum product divides sharp tags\n");
        for r in &self.groups {
            out.push_str(&format!(
                "{} {} {} {} {} {} {} {}{}\n",
                r.name,
                r.degree,
                r.order,
                set(&r.spectrum),
                r.product,
                r.divides,
                r.sharp,
                if r.tags.is_empty() {
                    "-".to_string()
                } else {
                    r.tags.join(",")
                },
                if r.holds() { "" } else { " INVARIANT FAILURE" }
            ));
        }
        out
    }
}
