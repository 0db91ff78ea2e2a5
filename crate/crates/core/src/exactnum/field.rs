use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rational::Rational;
use crate::error::ArithError;

#[derive(Debug)]
struct FieldData {
    /// Coefficients of the monic minimal polynomial, constant term first.
    minpoly: Vec<Rational>,
    label: String,
    irreducibility_checked: bool,
}

/// A number field Q[t]/(m(t)) presented by a monic minimal polynomial.
///
/// Cheap to clone; all elements of one field share the same handle.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// The rational numbers, presented as Q[t]/(t).
    pub fn rationals() -> Self {
        NumberField(Arc::new(FieldData {
            minpoly: vec![Rational::zero(), Rational::one()],
            label: "t".into(),
            irreducibility_checked: true,
        }))
    }

    /// Q(ω) with ω² + ω + 1 = 0.
    pub fn cyclotomic3() -> Self {
        make_number_field(&[1.into(), 1.into(), 1.into()], "w").expect("t^2+t+1 is irreducible")
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minimal_polynomial(&self) -> &[Rational] {
        &self.0.minpoly
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// False when the field has degree ≥ 4 and irreducibility was accepted on trust.
    pub fn irreducibility_checked(&self) -> bool {
        self.0.irreducibility_checked
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = r;
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from(n))
    }

    /// The class of t, i.e. the generator. In Q this is 0.
    pub fn generator(&self) -> FieldElement {
        if self.is_rational() {
            return self.from_rational(-self.0.minpoly[0].clone());
        }
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[1] = Rational::one();
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    /// Element from power-basis coordinates; shorter lists are zero-padded.
    pub fn element(&self, coords: Vec<Rational>) -> Result<FieldElement, ArithError> {
        let n = self.degree();
        if coords.len() > n {
            return Err(ArithError::CoordinateLength {
                expected: n,
                found: coords.len(),
            });
        }
        let mut coords = coords;
        coords.resize(n, Rational::zero());
        Ok(FieldElement {
            field: self.clone(),
            coords,
        })
    }

    fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }

    /// Reduce a polynomial (constant term first) modulo the minimal polynomial.
    fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let n = self.degree();
        let m = &self.0.minpoly;
        while poly.len() > n {
            let lead = poly.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - n;
            for (i, c) in m[..n].iter().enumerate() {
                if !c.is_zero() {
                    poly[shift + i] -= &(&lead * c);
                }
            }
        }
        poly.resize(n, Rational::zero());
        poly
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "Q");
        }
        write!(f, "Q({})[", self.label())?;
        for (i, c) in self.0.minpoly.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Build a number field from a monic minimal polynomial given constant term first.
///
/// Degree 1 yields Q. For degree 2 and 3 the polynomial is rejected when it has a rational
/// root; above degree 3 irreducibility is taken on trust.
pub fn make_number_field(minpoly: &[Rational], label: &str) -> Result<NumberField, ArithError> {
    let mut poly = minpoly.to_vec();
    while poly.last().is_some_and(Rational::is_zero) {
        poly.pop();
    }
    if poly.len() < 2 {
        return Err(ArithError::DegreeZero);
    }
    if !poly.last().expect("nonempty").is_one() {
        return Err(ArithError::NotMonic);
    }
    let degree = poly.len() - 1;
    if degree == 1 {
        // Q presented by t - a; normalise to t.
        return Ok(NumberField::rationals());
    }
    let mut checked = false;
    if degree <= 3 {
        if let Some(roots) = super::roots::rational_roots_certified(&poly) {
            if let Some(root) = roots.first() {
                return Err(ArithError::Reducible(root.to_string()));
            }
            checked = true;
        }
    }
    Ok(NumberField(Arc::new(FieldData {
        minpoly: poly,
        label: label.to_string(),
        irreducibility_checked: checked,
    })))
}

/// Element of a number field in power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

/// Which ring operation [`field_arith`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn field_arith(
    a: &FieldElement,
    b: &FieldElement,
    op: ArithOp,
) -> Result<FieldElement, ArithError> {
    if !a.field.same(&b.field) {
        return Err(ArithError::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add_unchecked(b),
        ArithOp::Sub => a.sub_unchecked(b),
        ArithOp::Mul => a.mul_unchecked(b),
    })
}

/// Inverse via the extended Euclidean algorithm against the minimal polynomial.
pub fn field_inverse(a: &FieldElement) -> Result<FieldElement, ArithError> {
    a.inv().ok_or(ArithError::DivisionByZero)
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        if self.field.is_rational() {
            return Some(self.field.from_rational(self.coords[0].inv()?));
        }
        let a = trim(self.coords.clone());
        let m = self.field.0.minpoly.clone();
        // Invariant: s * a ≡ r (mod m) for each (r, s) pair.
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since m is irreducible and a ≠ 0 mod m.
        let c = r1.first().and_then(Rational::inv)?;
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Some(FieldElement {
            coords: self.field.reduce(s),
            field: self.field.clone(),
        })
    }

    fn add_unchecked(&self, b: &FieldElement) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn sub_unchecked(&self, b: &FieldElement) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    fn mul_unchecked(&self, b: &FieldElement) -> FieldElement {
        let n = self.coords.len();
        if n == 1 {
            return FieldElement {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &b.coords[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += &(x * y);
                }
            }
        }
        FieldElement {
            coords: self.field.reduce(prod),
            field: self.field.clone(),
        }
    }

    fn check_field(&self, other: &FieldElement) {
        assert!(
            self.field.same(&other.field),
            "arithmetic between elements of different number fields"
        );
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let out = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(out)
}

/// Quotient and remainder; `b` must be trimmed and nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &(&c * bi);
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field.same(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on power-basis coordinates; a total order used only for canonical output.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let label = self.field.label();
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => label.to_string(),
                _ => format!("{label}^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{power}")?,
                (_, false) => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

macro_rules! elem_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.check_field(rhs);
                self.$inner(rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

elem_binop!(Add, add, add_unchecked);
elem_binop!(Sub, sub, sub_unchecked);
elem_binop!(Mul, mul, mul_unchecked);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
