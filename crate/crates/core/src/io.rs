//! JSON exchange format for presentations.
//!
//! ```json
//! {"source_twists":[-4],"target_twists":[2],"entries":[["X^6 + Y^6 + Z^6"]]}
//! ```
//! `entries[row][col]` with rows indexed by the target twists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{Form, Scalar};
use crate::gradedmat::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub source_twists: Vec<i32>,
    pub target_twists: Vec<i32>,
    pub entries: Vec<Vec<String>>,
}

impl From<&Presentation> for PresentationJson {
    fn from(p: &Presentation) -> Self {
        PresentationJson {
            source_twists: p.source().to_vec(),
            target_twists: p.target().to_vec(),
            entries: p
                .entries()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        }
    }
}

impl PresentationJson {
    /// Parses every entry; grading violations are returned as
    /// [`Error::InvalidPresentation`].
    pub fn to_presentation(&self) -> Result<Presentation> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (j, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (i, s) in row.iter().enumerate() {
                let need = match (self.target_twists.get(j), self.source_twists.get(i)) {
                    (Some(b), Some(a)) => Some(b - a),
                    _ => None,
                };
                let form = match Form::parse(s, need) {
                    Ok(f) => f,
                    // keep the wrong degree so that validation can name it
                    Err(_) if need.is_some() => Form::parse(s, None)
                        .map_err(|e| Error::Parse(format!("entry ({},{}): {e}", j + 1, i + 1)))?,
                    Err(e) => {
                        return Err(Error::Parse(format!("entry ({},{}): {e}", j + 1, i + 1)))
                    }
                };
                out.push(form);
            }
            entries.push(out);
        }
        Presentation::new(
            self.source_twists.clone(),
            self.target_twists.clone(),
            entries,
        )
    }
}

pub fn presentation_from_json(s: &str) -> Result<Presentation> {
    let raw: PresentationJson = serde_json::from_str(s)?;
    raw.to_presentation()
}

pub fn presentation_to_json(p: &Presentation) -> String {
    serde_json::to_string(&PresentationJson::from(p)).expect("serializable")
}

pub fn presentation_to_json_pretty(p: &Presentation) -> String {
    serde_json::to_string_pretty(&PresentationJson::from(p)).expect("serializable")
}

/// A point list such as `[[1,0,0],[1,"1/2",3]]`.
pub fn points_from_json(s: &str) -> Result<Vec<[Scalar; 3]>> {
    let raw: Vec<Vec<serde_json::Value>> = serde_json::from_str(s)?;
    raw.iter()
        .map(|p| {
            if p.len() != 3 {
                return Err(Error::Parse(format!("point with {} coordinates", p.len())));
            }
            let c: Vec<Scalar> = p.iter().map(scalar_from_json).collect::<Result<_>>()?;
            Ok([c[0].clone(), c[1].clone(), c[2].clone()])
        })
        .collect()
}

fn scalar_from_json(v: &serde_json::Value) -> Result<Scalar> {
    let text = match v {
        serde_json::Value::Number(n) if n.is_i64() => n.to_string(),
        serde_json::Value::String(s) => s.trim().to_string(),
        other => return Err(Error::Parse(format!("not an exact coordinate: {other}"))),
    };
    let f = Form::parse(&text, Some(0))?;
    Ok(f.coeffs()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::int;

    #[test]
    fn round_trip() {
        let s = r#"{"source_twists":[-4],"target_twists":[2],"entries":[["X^6 + Y^6 + Z^6"]]}"#;
        let p = presentation_from_json(s).unwrap();
        assert_eq!(presentation_to_json(&p), s);
    }

    #[test]
    fn zero_entries_take_the_required_degree() {
        let s = r#"{"source_twists":[-2,-1],"target_twists":[0],"entries":[["0","X"]]}"#;
        let p = presentation_from_json(s).unwrap();
        assert_eq!(p.entry(0, 0).degree(), 2);
    }

    #[test]
    fn wrong_degree_is_reported() {
        let s = r#"{"source_twists":[-2],"target_twists":[0],"entries":[["X"]]}"#;
        assert!(matches!(
            presentation_from_json(s),
            Err(Error::InvalidPresentation(v)) if v.len() == 1
        ));
    }

    #[test]
    fn points() {
        let pts = points_from_json(r#"[[1,0,0],["1/2",2,-3]]"#).unwrap();
        assert_eq!(pts[1][2], int(-3));
        assert!(points_from_json("[[1,2]]").is_err());
    }
}
