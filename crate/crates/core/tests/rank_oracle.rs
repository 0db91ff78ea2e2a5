//! Dense Gaussian elimination over Q on matrices built from polynomial products, as an
//! independent check of the sparse ranks behind the Jacobian computations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tjurina_core::catalog::catalog_get;
use tjurina_core::exactnum::{FieldElement, NumberField, Rational};
use tjurina_core::geometry::{Arrangement, Line};
use tjurina_core::jacobian::{
    defining_polynomial, jacobian_algebra_dimension, jacobian_image_rank, mdr,
};
use tjurina_core::poly::{monomials, HomogPoly};

fn dense_rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        let pivot: Vec<FieldElement> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                row[j] = &row[j] - &(&f * &pivot[j]);
            }
        }
        rank += 1;
    }
    rank
}

/// Rows are the coefficient vectors of μ·∂_i f over all monomials μ of degree `s`.
fn product_matrix(f: &HomogPoly, s: u32) -> Vec<Vec<FieldElement>> {
    let field = f.field();
    let n = f.nvars();
    let target = monomials(n, s + f.degree() - 1);
    let mut rows = Vec::new();
    for i in 0..n {
        let partial = f.derivative(i);
        for mu in monomials(n, s) {
            let g = partial.mul(&HomogPoly::from_terms(field, n, s, [(mu, field.one())]));
            rows.push(
                target
                    .iter()
                    .map(|t| g.coefficient(t).cloned().unwrap_or_else(|| field.zero()))
                    .collect(),
            );
        }
    }
    rows
}

/// Random rational lines; `None` when two of them coincide.
fn random_arrangement(rng: &mut ChaCha8Rng, d: usize) -> Option<Arrangement> {
    let q = NumberField::rationals();
    let lines = (0..d)
        .map(|_| loop {
            let c: [FieldElement; 3] = std::array::from_fn(|_| {
                q.from_rational(Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            });
            if let Ok(l) = Line::new(c) {
                break l;
            }
        })
        .collect();
    Arrangement::new(q, lines, vec![], vec![]).ok()
}

#[test]
fn sparse_rank_matches_dense_on_catalog_curves() {
    for name in ["triangle", "generic4", "cl5", "dual_hesse"] {
        let f = defining_polynomial(catalog_get(name).unwrap().arrangement.as_ref().unwrap());
        let top = if name == "dual_hesse" { 4 } else { f.degree() };
        for s in 0..top {
            assert_eq!(
                jacobian_image_rank(&f, s as i64),
                dense_rank(product_matrix(&f, s)),
                "{name} s={s}"
            );
        }
    }
}

#[test]
fn sparse_rank_matches_dense_on_random_rational_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..6 {
        let d = rng.gen_range(3..=5);
        let arr = loop {
            if let Some(a) = random_arrangement(&mut rng, d) {
                break a;
            }
        };
        let f = defining_polynomial(&arr);
        for s in 0..f.degree() {
            assert_eq!(
                jacobian_image_rank(&f, s as i64),
                dense_rank(product_matrix(&f, s))
            );
        }
        // the Hilbert function from the sparse path, one degree past the oracle start
        let t = 3 * (f.degree() - 2) + 1;
        let dense = dense_rank(product_matrix(&f, t + 1 - f.degree()));
        let total = monomials(3, t).len() as u64;
        assert_eq!(jacobian_algebra_dimension(&f, t), total - dense as u64);
    }
}

#[test]
fn mdr_is_first_degree_with_a_kernel() {
    for name in ["triangle", "generic4", "cl5"] {
        let f = defining_polynomial(catalog_get(name).unwrap().arrangement.as_ref().unwrap());
        let first = (0..f.degree())
            .find(|&s| {
                let rows = product_matrix(&f, s);
                dense_rank(rows.clone()) < rows.len()
            })
            .unwrap();
        assert_eq!(mdr(&f).unwrap(), first, "{name}");
    }
}
