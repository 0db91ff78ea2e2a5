//! JSON arrangement files.
//!
//! ```json
//! {
//!   "field": {"minpoly": ["1", "1", "1"], "label": "w"},
//!   "lines": [["1", ["0", "-1"], "0"]],
//!   "conics": [["0", "0", "0", "1", "1", "1"]],
//!   "hints": []
//! }
//! ```
//!
//! `minpoly` lists coefficients from the constant term up. A field element is either a
//! single rational string or a list of power-basis coordinates. Conic coefficients are
//! ordered x², y², z², xy, xz, yz.

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::exactnum::{
    element_strings, make_number_field, parse_element, FieldElement, NumberField, Rational,
};
use crate::geometry::{Arrangement, Conic, Line, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Rational(String),
    Coords(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub minpoly: Vec<String>,
    #[serde(default = "default_label")]
    pub label: String,
}

fn default_label() -> String {
    "t".into()
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec {
            minpoly: vec!["0".into(), "1".into()],
            label: default_label(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(default)]
    pub lines: Vec<[ElementRepr; 3]>,
    #[serde(default)]
    pub conics: Vec<[ElementRepr; 6]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hints: Vec<[ElementRepr; 3]>,
}

fn ctx(context: impl Into<String>, e: impl ToString) -> ParseError {
    ParseError::File {
        context: context.into(),
        message: e.to_string(),
    }
}

fn element(field: &NumberField, e: &ElementRepr, at: &str) -> Result<FieldElement, ParseError> {
    let coords = match e {
        ElementRepr::Rational(s) => vec![s.clone()],
        ElementRepr::Coords(v) => v.clone(),
    };
    parse_element(field, &coords).map_err(|err| ctx(at, err))
}

fn repr(e: &FieldElement) -> ElementRepr {
    match e.as_rational() {
        Some(r) => ElementRepr::Rational(r.to_string()),
        None => ElementRepr::Coords(element_strings(e)),
    }
}

fn triple(
    field: &NumberField,
    items: &[ElementRepr; 3],
    at: &str,
) -> Result<[FieldElement; 3], ParseError> {
    Ok([
        element(field, &items[0], &format!("{at}[0]"))?,
        element(field, &items[1], &format!("{at}[1]"))?,
        element(field, &items[2], &format!("{at}[2]"))?,
    ])
}

impl ArrangementFile {
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text)
            .map_err(|e| ctx(format!("line {}, column {}", e.line(), e.column()), e))
    }

    /// One member per line.
    pub fn to_json(&self) -> String {
        fn rows<T: Serialize>(rows: &[T]) -> String {
            if rows.is_empty() {
                return "[]".into();
            }
            let body: Vec<String> = rows
                .iter()
                .map(|r| format!("    {}", serde_json::to_string(r).expect("serializable")))
                .collect();
            format!("[\n{}\n  ]", body.join(",\n"))
        }
        let mut out = format!(
            "{{\n  \"field\": {},\n  \"lines\": {},\n  \"conics\": {}",
            serde_json::to_string(&self.field).expect("serializable"),
            rows(&self.lines),
            rows(&self.conics)
        );
        if !self.hints.is_empty() {
            out.push_str(&format!(",\n  \"hints\": {}", rows(&self.hints)));
        }
        out.push_str("\n}");
        out
    }

    pub fn field(&self) -> Result<NumberField, ParseError> {
        let coeffs = self
            .field
            .minpoly
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.parse::<Rational>()
                    .map_err(|e| ctx(format!("field.minpoly[{i}]"), e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        make_number_field(&coeffs, &self.field.label).map_err(|e| ctx("field.minpoly", e))
    }

    pub fn to_arrangement(&self) -> Result<Arrangement, ParseError> {
        let field = self.field()?;
        let mut lines = Vec::with_capacity(self.lines.len());
        for (i, l) in self.lines.iter().enumerate() {
            let at = format!("lines[{i}]");
            let c = triple(&field, l, &at)?;
            lines.push(Line::new(c).map_err(|e| ctx(at, e))?);
        }
        let mut conics = Vec::with_capacity(self.conics.len());
        for (i, q) in self.conics.iter().enumerate() {
            let at = format!("conics[{i}]");
            let mut c = Vec::with_capacity(6);
            for (j, e) in q.iter().enumerate() {
                c.push(element(&field, e, &format!("{at}[{j}]"))?);
            }
            let c: [FieldElement; 6] = c.try_into().expect("six coefficients");
            conics.push(Conic::from_coefficients(c).map_err(|e| ctx(at, e))?);
        }
        let mut hints = Vec::with_capacity(self.hints.len());
        for (i, h) in self.hints.iter().enumerate() {
            let at = format!("hints[{i}]");
            let c = triple(&field, h, &at)?;
            hints.push(ProjPoint::new(c).map_err(|e| ctx(at, e))?);
        }
        Ok(Arrangement::new(field, lines, conics, hints)?)
    }

    pub fn from_arrangement(arr: &Arrangement) -> Self {
        let field = arr.field();
        let spec = if field.is_rational() {
            FieldSpec::default()
        } else {
            FieldSpec {
                minpoly: field
                    .minimal_polynomial()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                label: field.label().to_string(),
            }
        };
        ArrangementFile {
            field: spec,
            lines: arr
                .lines()
                .iter()
                .map(|l| l.coeffs().clone().map(|e| repr(&e)))
                .collect(),
            conics: arr
                .conics()
                .iter()
                .map(|q| q.coefficients().map(|e| repr(&e)))
                .collect(),
            hints: arr
                .point_hints()
                .iter()
                .map(|p| p.coords().clone().map(|e| repr(&e)))
                .collect(),
        }
    }
}

/// Parse and validate an arrangement file.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    ArrangementFile::from_json(text)?.to_arrangement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GeometryError;

    const CL5: &str = r#"{
        "lines": [["1","0","0"], ["0","1","0"], ["0","0","1"]],
        "conics": [["0","0","0","1","1","1"]]
    }"#;

    #[test]
    fn parses_rational_file() {
        let arr = parse_arrangement(CL5).unwrap();
        assert_eq!((arr.d(), arr.k()), (3, 1));
        assert!(arr.field().is_rational());
    }

    #[test]
    fn roundtrip_is_identity() {
        let file = ArrangementFile::from_json(CL5).unwrap();
        let again = ArrangementFile::from_arrangement(&file.to_arrangement().unwrap());
        let text = again.to_json();
        let third = ArrangementFile::from_json(&text).unwrap();
        assert_eq!(again, third);
        assert_eq!(
            ArrangementFile::from_arrangement(&third.to_arrangement().unwrap()),
            third
        );
    }

    #[test]
    fn number_field_elements() {
        let text = r#"{
            "field": {"minpoly": ["1","1","1"], "label": "w"},
            "lines": [["1", ["0","-1"], "0"], ["1", ["-1","-1"], "0"], ["1","-1","0"]]
        }"#;
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.field().degree(), 2);
        let back = ArrangementFile::from_arrangement(&arr);
        assert_eq!(
            back.lines[0][1],
            ElementRepr::Coords(vec!["0".into(), "-1".into()])
        );
        assert_eq!(back.lines[0][0], ElementRepr::Rational("1".into()));
    }

    #[test]
    fn errors_carry_context() {
        let err = ArrangementFile::from_json("{\n  \"lines\": [[\"1\",\"0\"]]\n}").unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        let err = parse_arrangement(r#"{"lines": [["1","x","0"]]}"#).unwrap_err();
        assert!(err.to_string().contains("lines[0][1]"), "{err}");
        let err = parse_arrangement(r#"{"lines": [["1","0","0"], ["2","0","0"]]}"#).unwrap_err();
        assert_eq!(err, ParseError::Geometry(GeometryError::NotReduced(0, 1)));
        let err = parse_arrangement(r#"{"conics": [["1","0","0","0","0","0"]]}"#).unwrap_err();
        assert!(err.to_string().contains("conics[0]"), "{err}");
    }
}
