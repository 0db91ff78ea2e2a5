//! Homogeneous polynomials in 3 or 4 variables over a number field.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactnum::{FieldElement, NumberField, Rational};

pub const VARIABLE_NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Exponent vector; unused trailing variables carry exponent 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub [u16; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }
}

/// All monomials of the given degree in graded-lex order (x > y > z > w), largest first.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = [0u16; 4];
    fill(nvars, 0, degree as u16, &mut exps, &mut out);
    out
}

fn fill(nvars: usize, var: usize, remaining: u16, exps: &mut [u16; 4], out: &mut Vec<Monomial>) {
    if var == nvars - 1 {
        exps[var] = remaining;
        out.push(Monomial(*exps));
        exps[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill(nvars, var + 1, remaining - e, exps, out);
    }
    exps[var] = 0;
}

/// Position of each monomial of a degree in the [`monomials`] order.
pub fn monomial_index(nvars: usize, degree: u32) -> HashMap<Monomial, usize> {
    monomials(nvars, degree)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn monomial_count(nvars: usize, degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    binomial(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A homogeneous polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogPoly {
    field: NumberField,
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl HomogPoly {
    pub fn zero(field: &NumberField, nvars: usize, degree: u32) -> Self {
        assert!(nvars == 3 || nvars == 4, "3 or 4 variables");
        HomogPoly {
            field: field.clone(),
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from terms; every monomial must have the given degree.
    pub fn from_terms(
        field: &NumberField,
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut p = HomogPoly::zero(field, nvars, degree);
        for (m, c) in terms {
            assert_eq!(m.degree(), degree, "inhomogeneous term");
            assert!(m.0[nvars..].iter().all(|&e| e == 0), "too many variables");
            p.add_term(m, c);
        }
        p
    }

    /// Polynomial with integer coefficients, for tests and catalog entries.
    pub fn from_int_terms(field: &NumberField, nvars: usize, terms: &[([u16; 4], i64)]) -> Self {
        let degree = Monomial(terms[0].0).degree();
        HomogPoly::from_terms(
            field,
            nvars,
            degree,
            terms
                .iter()
                .map(|(e, c)| (Monomial(*e), field.from_int(*c))),
        )
    }

    pub fn linear_form(coeffs: &[FieldElement; 3]) -> Self {
        let field = coeffs[0].field();
        HomogPoly::from_terms(
            field,
            3,
            1,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = [0u16; 4];
                e[i] = 1;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Quadratic form from coefficients of x², y², z², xy, xz, yz.
    pub fn quadratic_form(c: &[FieldElement; 6]) -> Self {
        let field = c[0].field();
        let exps = [
            [2, 0, 0, 0],
            [0, 2, 0, 0],
            [0, 0, 2, 0],
            [1, 1, 0, 0],
            [1, 0, 1, 0],
            [0, 1, 1, 0],
        ];
        HomogPoly::from_terms(
            field,
            3,
            2,
            exps.iter().zip(c).map(|(e, c)| (Monomial(*e), c.clone())),
        )
    }

    /// `x_i^e` as a polynomial.
    pub fn power_of_variable(field: &NumberField, nvars: usize, var: usize, e: u32) -> Self {
        let mut exps = [0u16; 4];
        exps[var] = e as u16;
        HomogPoly::from_terms(field, nvars, e, [(Monomial(exps), field.one())])
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when every coefficient lies in Q.
    pub fn has_rational_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn rational_terms(&self) -> Option<Vec<(Monomial, Rational)>> {
        self.terms
            .iter()
            .map(|(m, c)| c.as_rational().map(|r| (*m, r.clone())))
            .collect()
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = HomogPoly::zero(&self.field, self.nvars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(
            self.degree, other.degree,
            "sum of forms of different degree"
        );
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> HomogPoly {
        let mut out = HomogPoly::zero(&self.field, self.nvars, self.degree);
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> HomogPoly {
        assert!(var < self.nvars && self.degree >= 1);
        let mut out = HomogPoly::zero(&self.field, self.nvars, self.degree - 1);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d.0[var] -= 1;
            out.add_term(d, c.scale(&Rational::from(e as i64)));
        }
        out
    }

    /// Same polynomial regarded in four variables (w absent).
    pub fn with_four_variables(&self) -> HomogPoly {
        HomogPoly {
            nvars: 4,
            ..self.clone()
        }
    }

    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate().take(self.nvars) {
                if e > 0 {
                    t = &t * &point[v].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `x_i ↦ Σ_j m[i][j] x_j`.
    pub fn linear_substitution(&self, m: &[Vec<FieldElement>]) -> HomogPoly {
        let n = self.nvars;
        let images: Vec<HomogPoly> = (0..n)
            .map(|i| {
                HomogPoly::from_terms(
                    &self.field,
                    n,
                    1,
                    (0..n).map(|j| {
                        let mut e = [0u16; 4];
                        e[j] = 1;
                        (Monomial(e), m[i][j].clone())
                    }),
                )
            })
            .collect();
        let mut out = HomogPoly::zero(&self.field, n, self.degree);
        for (mono, c) in &self.terms {
            let mut term =
                HomogPoly::from_terms(&self.field, n, 0, [(Monomial([0; 4]), c.clone())]);
            for (v, image) in images.iter().enumerate() {
                for _ in 0..mono.0[v] {
                    term = term.mul(image);
                }
            }
            for (mm, cc) in term.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = monomials(self.nvars, self.degree);
        let mut first = true;
        for m in order {
            let Some(c) = self.terms.get(&m) else {
                continue;
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        if e == 1 {
                            VARIABLE_NAMES[v].to_string()
                        } else {
                            format!("{}^{e}", VARIABLE_NAMES[v])
                        }
                    })
                    .collect();
            let mono = vars.join("*");
            match (c.is_one(), mono.is_empty()) {
                (true, false) => write!(f, "{mono}")?,
                (_, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
