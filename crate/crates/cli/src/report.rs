use lcs_core::linalg::Rational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::job::JobSpec;
use crate::WorkbenchError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Rational { num: String, den: String },
    Bool(bool),
    Text(String),
}

impl Value {
    pub fn rational(q: &Rational) -> Self {
        Value::Rational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    fn csv_cell(&self) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Rational { num, den } if den == "1" => num.clone(),
            Value::Rational { num, den } => format!("{num}/{den}"),
            Value::Bool(b) => b.to_string(),
            Value::Text(t) => t.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub m: usize,
    pub n: usize,
    pub series_or_check: String,
    pub k: Option<usize>,
    /// A multidegree, a one-entry total degree for `.total` rows, or the
    /// parts of a partition for decomposition rows.
    pub degree: Vec<usize>,
    pub t_power: Option<usize>,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub job: JobSpec,
    pub engine_version: String,
    pub wall_time_seconds: f64,
    /// sha256 over the canonical JSON of `rows`.
    pub digest: String,
    pub cache_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: Manifest,
    pub rows: Vec<Row>,
    /// False iff some check the job treats as asserted failed.
    #[serde(skip)]
    pub ok: bool,
}

pub fn digest(rows: &[Row]) -> String {
    let canonical = serde_json::to_vec(rows).expect("rows serialize");
    hex::encode(Sha256::digest(&canonical))
}

impl Report {
    pub fn rows_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Row> + 'a {
        self.rows.iter().filter(move |r| r.series_or_check == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String, WorkbenchError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "m",
            "n",
            "series_or_check",
            "k",
            "degree_vector",
            "t_power",
            "value",
        ])
        .map_err(csv_error)?;
        for r in &self.rows {
            let degree: Vec<String> = r.degree.iter().map(|d| d.to_string()).collect();
            w.write_record([
                r.m.to_string(),
                r.n.to_string(),
                r.series_or_check.clone(),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                degree.join(";"),
                r.t_power.map(|t| t.to_string()).unwrap_or_default(),
                r.value.csv_cell(),
            ])
            .map_err(csv_error)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| WorkbenchError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn csv_error(e: csv::Error) -> WorkbenchError {
    WorkbenchError::Io(std::io::Error::other(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcs_core::linalg::ratio;

    #[test]
    fn csv_cells() {
        assert_eq!(Value::rational(&ratio(6, 4)).csv_cell(), "3/2");
        assert_eq!(Value::rational(&ratio(-4, 2)).csv_cell(), "-2");
        assert_eq!(Value::Bool(true).csv_cell(), "true");
    }

    #[test]
    fn untagged_values_round_trip() {
        for v in [
            Value::Int(3),
            Value::rational(&ratio(1, 3)),
            Value::Bool(false),
            Value::Text("x".into()),
        ] {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<Value>(&s).unwrap(), v);
        }
    }
}
