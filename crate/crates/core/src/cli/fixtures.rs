//! Fixture CSV: `name, pd_code, crossing_number, adequate(Y/N)`, plus an optional `writhe`.

use std::io::Read;

use serde::Serialize;

use crate::diagram::{parse_pd, Diagram};
use crate::error::{Error, Result};

pub const BUNDLED: &str = include_str!("../../fixtures/knots.csv");

const KNOWN: [&str; 5] = ["name", "pd_code", "crossing_number", "adequate", "writhe"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRecord {
    pub name: String,
    pub pd_code: String,
    pub crossing_number: usize,
    pub adequate: bool,
    pub writhe: Option<i64>,
}

impl FixtureRecord {
    /// Parses the PD code and checks the declared values against the diagram.
    pub fn diagram(&self) -> Result<Diagram> {
        let d = parse_pd(&self.pd_code)?.with_name(self.name.clone());
        let mismatch = |what: &str, declared: String, computed: String| {
            Err(Error::Fixture(format!(
                "{}: declared {what} {declared}, computed {computed}",
                self.name
            )))
        };
        if d.crossing_count() != self.crossing_number {
            return mismatch(
                "crossing number",
                self.crossing_number.to_string(),
                d.crossing_count().to_string(),
            );
        }
        let adequate = d.adequacy().adequate();
        if adequate != self.adequate {
            return mismatch("adequacy", self.adequate.to_string(), adequate.to_string());
        }
        if let Some(w) = self.writhe {
            if w != d.writhe() {
                return mismatch("writhe", w.to_string(), d.writhe().to_string());
            }
        }
        Ok(d)
    }
}

pub struct FixtureSet {
    pub records: Vec<FixtureRecord>,
    pub warnings: Vec<String>,
}

pub fn load_fixtures(reader: impl Read) -> Result<FixtureSet> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Fixture(e.to_string()))?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let mut warnings: Vec<String> = headers
        .iter()
        .filter(|h| !KNOWN.contains(h))
        .map(|h| format!("ignoring unknown fixture column `{h}`"))
        .collect();
    let need = |name: &str| col(name).ok_or_else(|| Error::Fixture(format!("missing column `{name}`")));
    let (c_name, c_pd, c_cn, c_ad) = (
        need("name")?,
        need("pd_code")?,
        need("crossing_number")?,
        need("adequate")?,
    );
    let c_wr = col("writhe");
    let mut records = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| Error::Fixture(e.to_string()))?;
        let line = i + 2;
        let field = |c: usize| row.get(c).unwrap_or("").to_string();
        let crossing_number = field(c_cn)
            .parse()
            .map_err(|_| Error::Fixture(format!("line {line}: bad crossing_number `{}`", field(c_cn))))?;
        let adequate = match field(c_ad).as_str() {
            "Y" | "y" => true,
            "N" | "n" => false,
            other => {
                return Err(Error::Fixture(format!(
                    "line {line}: adequate must be Y or N, got `{other}`"
                )))
            }
        };
        let writhe = match c_wr.map(field).filter(|s| !s.is_empty()) {
            Some(s) => Some(
                s.parse()
                    .map_err(|_| Error::Fixture(format!("line {line}: bad writhe `{s}`")))?,
            ),
            None => None,
        };
        records.push(FixtureRecord {
            name: field(c_name),
            pd_code: field(c_pd),
            crossing_number,
            adequate,
            writhe,
        });
    }
    if records.is_empty() {
        warnings.push("fixture file has no records".into());
    }
    Ok(FixtureSet { records, warnings })
}
