//! Exact rank of sparse matrices over Q or a number field.
//!
//! Vectors are eliminated one at a time against an echelon basis keyed by leading index.
//! Sparse inputs are processed first so early pivots stay short and fill-in stays low.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{FieldElement, Rational};

/// Exact field scalar usable by the elimination routines.
pub trait Scalar: Clone + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse of a nonzero scalar.
    fn inv(&self) -> Self;
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Rational::inv(self).expect("pivot is nonzero")
    }
}

impl Scalar for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        FieldElement::inv(self).expect("pivot is nonzero")
    }
}

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// `a - c * b` for sorted sparse vectors.
fn axpy<T: Scalar>(a: &SparseVec<T>, c: &T, b: &SparseVec<T>) -> SparseVec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                let v = va.sub(&c.mul(vb));
                if !v.is_zero() {
                    out.push((*ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (_, Some((ib, vb))) => {
                out.push((*ib, c.mul(vb).neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incrementally built row-echelon basis.
pub struct EchelonBasis<T> {
    pivots: HashMap<usize, SparseVec<T>>,
}

impl<T: Scalar> Default for EchelonBasis<T> {
    fn default() -> Self {
        EchelonBasis {
            pivots: HashMap::new(),
        }
    }
}

impl<T: Scalar> EchelonBasis<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v` to the span; returns true if the rank grew.
    pub fn insert(&mut self, mut v: SparseVec<T>) -> bool {
        loop {
            let Some((lead, coeff)) = v.first() else {
                return false;
            };
            match self.pivots.get(lead) {
                Some(p) => {
                    let c = coeff.clone();
                    v = axpy(&v, &c, p);
                }
                None => {
                    let lead = *lead;
                    let inv = coeff.inv();
                    let normalised: SparseVec<T> =
                        v.into_iter().map(|(i, x)| (i, x.mul(&inv))).collect();
                    self.pivots.insert(lead, normalised);
                    return true;
                }
            }
        }
    }
}

/// Rank of the span of the given sparse vectors.
pub fn sparse_rank<T: Scalar>(mut vectors: Vec<SparseVec<T>>) -> usize {
    vectors.retain(|v| !v.is_empty());
    vectors.sort_by_key(Vec::len);
    let mut basis = EchelonBasis::default();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Divides out the gcd of the entries and makes the leading entry positive.
fn make_primitive(v: &mut SparseVec<BigInt>) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if v.first().is_some_and(|(_, x)| x.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a·u − b·w` for sorted sparse integer vectors.
fn combine(
    a: &BigInt,
    u: &SparseVec<BigInt>,
    b: &BigInt,
    w: &SparseVec<BigInt>,
) -> SparseVec<BigInt> {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        let take_u = j >= w.len() || (i < u.len() && u[i].0 < w[j].0);
        let take_w = i >= u.len() || (j < w.len() && w[j].0 < u[i].0);
        if take_u {
            out.push((u[i].0, a * &u[i].1));
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let v = a * &u[i].1 - b * &w[j].1;
            if !v.is_zero() {
                out.push((u[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Fraction-free echelon basis over Z; rows are kept primitive.
#[derive(Default)]
pub struct IntegerEchelonBasis {
    pivots: HashMap<usize, SparseVec<BigInt>>,
}

impl IntegerEchelonBasis {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v` to the span over Q; returns true if the rank grew.
    pub fn insert(&mut self, mut v: SparseVec<BigInt>) -> bool {
        make_primitive(&mut v);
        loop {
            let Some((lead, coeff)) = v.first() else {
                return false;
            };
            match self.pivots.get(lead) {
                Some(p) => {
                    let g = coeff.gcd(&p[0].1);
                    let (a, b) = (&p[0].1 / &g, coeff / &g);
                    v = combine(&a, &v, &b, p);
                    make_primitive(&mut v);
                }
                None => {
                    self.pivots.insert(*lead, v);
                    return true;
                }
            }
        }
    }
}

/// Rank over Q of rational sparse vectors; each row is first scaled to integers.
///
/// `dense` selects Bareiss elimination, which wins once rows fill in quickly.
pub fn rational_rank(vectors: Vec<SparseVec<Rational>>, dense: bool) -> usize {
    let mut rows: Vec<SparseVec<BigInt>> = vectors
        .into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            let l = v.iter().fold(BigInt::one(), |l, (_, x)| l.lcm(x.denom()));
            v.into_iter()
                .map(|(i, x)| (i, x.numer() * (&l / x.denom())))
                .collect()
        })
        .collect();
    if dense {
        let cols = rows
            .iter()
            .filter_map(|v| v.last().map(|x| x.0 + 1))
            .max()
            .unwrap_or(0);
        let dense = rows
            .into_iter()
            .map(|v| {
                let mut d = vec![BigInt::zero(); cols];
                for (i, x) in v {
                    d[i] = x;
                }
                d
            })
            .collect();
        return bareiss_rank(dense);
    }
    rows.sort_by_key(Vec::len);
    let mut basis = IntegerEchelonBasis::default();
    for v in rows {
        basis.insert(v);
    }
    basis.rank()
}

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so no gcds are needed.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..cols {
                let v = &pivot[col] * &row[j] - &f * &pivot[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn rank_small() {
        let v1 = vec![(0, r(1)), (1, r(2))];
        let v2 = vec![(0, r(2)), (1, r(4))];
        let v3 = vec![(1, r(1)), (2, r(1))];
        assert_eq!(sparse_rank(vec![v1.clone(), v2]), 1);
        assert_eq!(sparse_rank(vec![v1, v3]), 2);
        assert_eq!(sparse_rank::<Rational>(vec![vec![], vec![]]), 0);
    }

    #[test]
    fn integer_path_matches_field_path() {
        let rows = vec![
            vec![
                (0, Rational::new(1, 2)),
                (1, Rational::new(2, 3)),
                (3, r(5)),
            ],
            vec![(0, r(3)), (1, r(4)), (3, r(30))],
            vec![(1, Rational::new(-7, 4)), (2, r(1))],
            vec![(0, r(2)), (2, Rational::new(4, 7)), (3, r(1))],
            vec![(1, Rational::new(-7, 4)), (2, r(1))],
        ];
        assert_eq!(
            rational_rank(rows.clone(), false),
            sparse_rank(rows.clone())
        );
        assert_eq!(rational_rank(rows, true), 3);
        assert_eq!(rational_rank(vec![vec![], vec![(2, r(-3))]], true), 1);
        let sparse: Vec<SparseVec<Rational>> =
            (0..6).map(|i| vec![(i, r(1)), (i + 7, r(2))]).collect();
        assert_eq!(rational_rank(sparse.clone(), false), 6);
        assert_eq!(rational_rank(sparse, true), 6);
    }

    #[test]
    fn bareiss_small() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(bareiss_rank(m(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]])), 2);
        assert_eq!(bareiss_rank(m(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 5]])), 2);
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[3, 4], &[5, 7]])), 2);
        assert_eq!(bareiss_rank(m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn axpy_cancels() {
        let a = vec![(0, r(2)), (3, r(1))];
        let b = vec![(0, r(1)), (2, r(5))];
        let out = axpy(&a, &r(2), &b);
        assert_eq!(out, vec![(2, r(-10)), (3, r(1))]);
    }
}
