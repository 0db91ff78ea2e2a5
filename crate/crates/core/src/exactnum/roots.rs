//! Rational roots of univariate polynomials over Q by the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

const TRIAL_LIMIT: u64 = 1 << 20;

/// Distinct rational roots of `poly` (constant term first), in increasing order.
///
/// Returns `None` when a coefficient is too large to factor by trial division, in which
/// case the candidate set could not be enumerated completely.
pub fn rational_roots_certified(poly: &[Rational]) -> Option<Vec<Rational>> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    if p.len() < 2 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    let lowest = p
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if lowest > 0 {
        roots.push(Rational::zero());
        p.drain(..lowest);
    }
    if p.len() >= 2 {
        let ints = clear_denominators(&p);
        let lead = ints.last().expect("nonempty").abs();
        let constant = ints[0].abs();
        let ps = divisors(&constant)?;
        let qs = divisors(&lead)?;
        let mut seen = std::collections::BTreeSet::new();
        for a in &ps {
            for b in &qs {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for cand in [
                    Rational::new(a.clone(), b.clone()),
                    Rational::new(-a, b.clone()),
                ] {
                    if !seen.contains(&cand) && eval(&p, &cand).is_zero() {
                        seen.insert(cand);
                    }
                }
            }
        }
        roots.extend(seen);
    }
    roots.sort();
    Some(roots)
}

/// Best-effort variant of [`rational_roots_certified`].
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    rational_roots_certified(poly).unwrap_or_default()
}

pub fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

fn clear_denominators(p: &[Rational]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// All positive divisors of `n > 0`, or `None` when `n` has a prime factor beyond the trial
/// division range that cannot be certified prime.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p: u64 = 2;
    while p < TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if rest.to_u128().is_none() || rest >= &limit * &limit {
            return None;
        }
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = d.clone();
            for _ in 0..=e {
                next.push(pw.clone());
                pw *= &prime;
            }
        }
        divs = next;
    }
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn finds_simple_roots() {
        // (t-2)(t+3)(2t-1) = 2t^3 + 1t^2 ... expand: (t^2 + t - 6)(2t - 1) = 2t^3 + t^2 - 13t + 6
        let p = [q(6), q(-13), q(1), q(2)];
        let r = rational_roots(&p);
        assert_eq!(r, vec![q(-3), Rational::new(1, 2), q(2)]);
    }

    #[test]
    fn zero_and_no_roots() {
        assert_eq!(rational_roots(&[q(0), q(0), q(1)]), vec![q(0)]);
        assert!(rational_roots(&[q(1), q(1), q(1)]).is_empty());
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_empty());
    }

    #[test]
    fn rational_coefficients() {
        // t - 3/4
        assert_eq!(
            rational_roots(&[Rational::new(-3, 4), q(1)]),
            vec![Rational::new(3, 4)]
        );
    }
}
