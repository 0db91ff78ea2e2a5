//! Exact arithmetic over Q and over number fields Q[t]/(m(t)).

mod field;
mod rational;
pub mod roots;

pub use field::{
    field_arith, field_inverse, make_number_field, ArithOp, FieldElement, NumberField,
};
pub use rational::{rational_sqrt, Rational};

/// Parse a field element from its power-basis coordinate strings.
pub fn parse_element(
    field: &NumberField,
    coords: &[String],
) -> Result<FieldElement, crate::error::ParseError> {
    let coords = coords
        .iter()
        .map(|s| s.parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    field
        .element(coords)
        .map_err(|e| crate::error::ParseError::Element(e.to_string()))
}

/// Power-basis coordinate strings of a field element.
pub fn element_strings(e: &FieldElement) -> Vec<String> {
    e.coords().iter().map(ToString::to_string).collect()
}
