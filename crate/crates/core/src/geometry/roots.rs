//! Projective roots of binary forms over the declared field.
//!
//! Only roots that are reachable without extending the field are produced: linear
//! factors, rational roots of rational forms, quadratic factors whose discriminant is a
//! rational square, and roots supplied as hints. Anything else is reported as unresolved.

use crate::exactnum::roots::rational_roots_certified;
use crate::exactnum::{rational_sqrt, FieldElement, NumberField, Rational};

/// Projective root `(s : u)` of a binary form with its multiplicity.
#[derive(Debug, Clone)]
pub struct FormRoot {
    pub s: FieldElement,
    pub u: FieldElement,
    pub multiplicity: usize,
}

/// Residual factor that could not be split.
#[derive(Debug, Clone)]
pub struct Unresolved {
    pub residual: String,
    pub discriminant: String,
}

/// Roots of the binary form `Σ_j coeffs[j] s^j u^(n-j)` where `n = coeffs.len() - 1`.
///
/// `hints` are candidate roots `(s, u)`; those that are actual roots are deflated first.
/// The form must not be identically zero.
pub fn binary_form_roots(
    field: &NumberField,
    coeffs: &[FieldElement],
    hints: &[(FieldElement, FieldElement)],
) -> Result<Vec<FormRoot>, Unresolved> {
    let n = coeffs.len() - 1;
    let mut p: Vec<FieldElement> = coeffs.to_vec();
    trim(&mut p);
    assert!(!p.is_empty(), "binary form is identically zero");
    let mut roots = Vec::new();
    let at_infinity = n - (p.len() - 1);
    if at_infinity > 0 {
        roots.push(FormRoot {
            s: field.one(),
            u: field.zero(),
            multiplicity: at_infinity,
        });
    }

    let mut affine: Vec<(FieldElement, usize)> = Vec::new();
    extract_rational_roots(field, &mut p, &mut affine);
    for (s, u) in hints {
        if u.is_zero() {
            continue;
        }
        let x = s * &u.inv().expect("nonzero");
        deflate_all(field, &mut p, &x, &mut affine);
    }

    while p.len() > 1 {
        let deg = p.len() - 1;
        if deg == 1 {
            let x = -(&p[0] * &p[1].inv().expect("nonzero"));
            add_root(&mut affine, x, 1);
            break;
        }
        if extract_rational_roots(field, &mut p, &mut affine) {
            continue;
        }
        if deg == 2 {
            let (c, b, a) = (&p[0], &p[1], &p[2]);
            let disc = &(b * b) - &(&field.from_int(4) * &(a * c));
            let two_a_inv = (&field.from_int(2) * a).inv().expect("nonzero");
            if disc.is_zero() {
                add_root(&mut affine, -(b * &two_a_inv), 2);
                break;
            }
            let root = disc
                .as_rational()
                .and_then(rational_sqrt)
                .map(|r| field.from_rational(r));
            match root {
                Some(sq) => {
                    add_root(&mut affine, &(&sq - b) * &two_a_inv, 1);
                    add_root(&mut affine, &(-&sq - b) * &two_a_inv, 1);
                    break;
                }
                None => {
                    return Err(Unresolved {
                        residual: format_poly(&p),
                        discriminant: disc.to_string(),
                    })
                }
            }
        }
        return Err(Unresolved {
            residual: format_poly(&p),
            discriminant: "n/a (degree > 2)".into(),
        });
    }

    roots.extend(affine.into_iter().map(|(x, m)| FormRoot {
        s: x,
        u: field.one(),
        multiplicity: m,
    }));
    Ok(roots)
}

/// Deflate every rational root when all coefficients are rational; true if any was found.
fn extract_rational_roots(
    field: &NumberField,
    p: &mut Vec<FieldElement>,
    roots: &mut Vec<(FieldElement, usize)>,
) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(rp) = p
        .iter()
        .map(|c| c.as_rational().cloned())
        .collect::<Option<Vec<Rational>>>()
    else {
        return false;
    };
    let Some(found) = rational_roots_certified(&rp) else {
        return false;
    };
    let any = !found.is_empty();
    for r in found {
        deflate_all(field, p, &field.from_rational(r), roots);
    }
    any
}

fn deflate_all(
    field: &NumberField,
    p: &mut Vec<FieldElement>,
    x: &FieldElement,
    roots: &mut Vec<(FieldElement, usize)>,
) {
    let mut mult = 0;
    while p.len() > 1 && eval(field, p, x).is_zero() {
        *p = deflate(p, x);
        mult += 1;
    }
    if mult > 0 {
        add_root(roots, x.clone(), mult);
    }
}

fn add_root(roots: &mut Vec<(FieldElement, usize)>, x: FieldElement, mult: usize) {
    if let Some(entry) = roots.iter_mut().find(|(y, _)| *y == x) {
        entry.1 += mult;
    } else {
        roots.push((x, mult));
    }
}

fn trim(p: &mut Vec<FieldElement>) {
    while p.last().is_some_and(FieldElement::is_zero) {
        p.pop();
    }
}

pub(crate) fn eval(field: &NumberField, p: &[FieldElement], x: &FieldElement) -> FieldElement {
    p.iter().rev().fold(field.zero(), |acc, c| &(&acc * x) + c)
}

/// Divide by `(s - x)`, assuming `x` is a root.
fn deflate(p: &[FieldElement], x: &FieldElement) -> Vec<FieldElement> {
    let n = p.len() - 1;
    let mut q = vec![p[n].clone(); n];
    for i in (1..n).rev() {
        q[i - 1] = &p[i] + &(&q[i] * x);
    }
    q
}

fn format_poly(p: &[FieldElement]) -> String {
    let mut terms = Vec::new();
    for (j, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match j {
            0 => String::new(),
            1 => "*s".to_string(),
            _ => format!("*s^{j}"),
        };
        terms.push(format!("({c}){mono}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
