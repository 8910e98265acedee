//! Drinfeld polynomial tuples, their ordered factorization into fundamental
//! factors, and conversion to and from highest-weight eigenvalue series.

use std::cmp::Ordering;

use num::complex::Complex64;
use num::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{int, re_compare, LinAlgError, Matrix, Rational, Scalar, Series};
use crate::rootsys::{LieType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrinfeldError {
    #[error("trivial module: every Drinfeld polynomial is 1")]
    TrivialModule,
    #[error("expected {expected} node polynomials, found {found}")]
    NodeCount { expected: usize, found: usize },
    #[error("node {node} out of range 1..={rank}")]
    BadNode { node: usize, rank: usize },
    #[error("not a Drinfeld series: {0}")]
    NotDrinfeldSeries(String),
    #[error("series order {order} too small for degree {degree}")]
    OrderTooSmall { order: usize, degree: usize },
    #[error("polynomial has roots outside Q(i)")]
    RootsOutsideField,
}

/// Canonical multiset order: real part descending, then imaginary descending.
pub fn sort_roots(roots: &mut [Scalar]) {
    roots.sort_by(re_compare);
}

/// `π_i(u) = Π_j (u − a_{i,j})`, stored as root multisets per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldTuple {
    lie_type: LieType,
    roots: Vec<Vec<Scalar>>,
}

impl DrinfeldTuple {
    pub fn new(lie_type: LieType, mut roots: Vec<Vec<Scalar>>) -> Result<Self, DrinfeldError> {
        if roots.len() != lie_type.rank() {
            return Err(DrinfeldError::NodeCount { expected: lie_type.rank(), found: roots.len() });
        }
        roots.iter_mut().for_each(|r| sort_roots(r));
        Ok(DrinfeldTuple { lie_type, roots })
    }

    pub fn trivial(lie_type: LieType) -> Self {
        DrinfeldTuple { lie_type, roots: vec![Vec::new(); lie_type.rank()] }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Roots of `π_node`.
    pub fn roots(&self, node: usize) -> &[Scalar] {
        &self.roots[node - 1]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.roots.iter().map(Vec::len).collect()
    }

    pub fn total_degree(&self) -> usize {
        self.roots.iter().map(Vec::len).sum()
    }

    /// `λ = Σ m_i ω_i`.
    pub fn weight(&self) -> Weight {
        Weight(self.degrees().into_iter().map(|m| m as i64).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub node: usize,
    pub a: Scalar,
}

impl Factor {
    pub fn new(node: usize, a: Scalar) -> Self {
        Factor { node, a }
    }
}

/// Ordered tensor product `V_{a_1}(ω_{b_1}) ⊗ … ⊗ V_{a_k}(ω_{b_k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorChain {
    pub lie_type: LieType,
    pub factors: Vec<Factor>,
}

impl FactorChain {
    pub fn new(lie_type: LieType, factors: Vec<Factor>) -> Result<Self, DrinfeldError> {
        for f in &factors {
            if !(1..=lie_type.rank()).contains(&f.node) {
                return Err(DrinfeldError::BadNode { node: f.node, rank: lie_type.rank() });
            }
        }
        Ok(FactorChain { lie_type, factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

fn factor_order(x: &Factor, y: &Factor) -> Ordering {
    re_compare(&x.a, &y.a).then_with(|| x.node.cmp(&y.node))
}

/// Factors sorted by real part descending (ties: imaginary part
/// descending, then node ascending).
pub fn order_factors(pi: &DrinfeldTuple) -> Result<FactorChain, DrinfeldError> {
    if pi.total_degree() == 0 {
        return Err(DrinfeldError::TrivialModule);
    }
    let mut factors: Vec<Factor> = pi
        .lie_type
        .nodes()
        .flat_map(|n| pi.roots(n).iter().map(move |a| Factor::new(n, a.clone())))
        .collect();
    factors.sort_by(factor_order);
    Ok(FactorChain { lie_type: pi.lie_type, factors })
}

pub fn chain_to_poly(c: &FactorChain) -> DrinfeldTuple {
    let mut roots = vec![Vec::new(); c.lie_type.rank()];
    for f in &c.factors {
        roots[f.node - 1].push(f.a.clone());
    }
    DrinfeldTuple::new(c.lie_type, roots).expect("node count matches rank")
}

/// `π_i(u) ↦ π_i(u − a)`.
pub fn shift_tuple(pi: &DrinfeldTuple, a: &Scalar) -> DrinfeldTuple {
    let roots = pi.roots.iter().map(|rs| rs.iter().map(|r| r + a).collect()).collect();
    DrinfeldTuple::new(pi.lie_type, roots).unwrap()
}

/// Expansion of `Π (u + d − a)/(u − a)` at `u = ∞` to order `n`.
pub fn eigenvalue_series(roots: &[Scalar], d: i64, n: usize) -> Series {
    let d = Scalar::from_int(d);
    roots.iter().fold(Series::one(n), |acc, a| {
        // 1 + d/(u − a) = 1 + Σ_k d a^k u^{-k-1}
        let mut c = vec![Scalar::one()];
        let mut p = Scalar::one();
        for _ in 0..n {
            c.push(&d * &p);
            p = &p * a;
        }
        acc.mul(&Series::new(c, n))
    })
}

fn binom(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * int(n - j) / int(j + 1);
    }
    acc
}

/// Recovers the root multiset of the monic `Q` of degree `deg` with
/// `Q(u + d)/Q(u) = s`.
///
/// Matching `Q(u+d) = s(u)·Q(u)` coefficientwise is linear in the
/// elementary symmetric functions of the roots; the roots themselves are
/// then located numerically and confirmed by exact evaluation.
pub fn series_to_poly(s: &Series, deg: usize, d: i64) -> Result<Vec<Scalar>, DrinfeldError> {
    if s.coeff(0) != Scalar::one() {
        return Err(DrinfeldError::NotDrinfeldSeries("constant term is not 1".into()));
    }
    if deg == 0 {
        return if s.coeffs().iter().skip(1).all(Zero::is_zero) {
            Ok(Vec::new())
        } else {
            Err(DrinfeldError::NotDrinfeldSeries("nonzero tail for degree 0".into()))
        };
    }
    let n = s.order();
    if n < deg + 1 {
        return Err(DrinfeldError::OrderTooSmall { order: n, degree: deg });
    }
    let dd = deg as i64;
    let dq = Scalar::from_int(d);
    // equation m (coefficient of u^{deg-m}), m = 1..=n; unknowns e_1..e_deg
    let coef = |m: usize, k: usize| -> Scalar {
        let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let mk = m as i64 - k as i64;
        if mk < 0 {
            return Scalar::zero();
        }
        let shift = Scalar::real(binom(dd - k as i64, mk)) * dq.pow(mk as u32);
        sign * (shift - s.coeff(m - k))
    };
    let mut a = Matrix::zeros(n, deg);
    let mut rhs = Vec::with_capacity(n);
    for m in 1..=n {
        for k in 1..=deg {
            a[(m - 1, k - 1)] = coef(m, k);
        }
        rhs.push(-coef(m, 0));
    }
    let e = a.solve(&rhs).map_err(|err| match err {
        LinAlgError::Inconsistent => DrinfeldError::NotDrinfeldSeries("coefficient equations are inconsistent".into()),
        _ => DrinfeldError::OrderTooSmall { order: n, degree: deg },
    })?;
    // Q(u) = Σ (−1)^k e_k u^{deg−k}, highest degree first
    let mut poly = vec![Scalar::one()];
    for (k, ek) in e.iter().enumerate() {
        poly.push(if k % 2 == 0 { -ek } else { ek.clone() });
    }
    let mut roots = exact_roots(poly)?;
    sort_roots(&mut roots);
    Ok(roots)
}

fn horner(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

/// Synthetic division by `(u − x)`; assumes `x` is a root.
fn deflate(poly: &[Scalar], x: &Scalar) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = Scalar::zero();
    for c in &poly[..poly.len() - 1] {
        acc = &(&acc * x) + c;
        out.push(acc.clone());
    }
    out
}

fn to_c64(x: &Scalar) -> Complex64 {
    Complex64::new(x.re.to_f64().unwrap_or(f64::NAN), x.im.to_f64().unwrap_or(f64::NAN))
}

/// Aberth–Ehrlich iteration for a monic polynomial (highest degree first).
fn approximate_roots(poly: &[Complex64]) -> Vec<Complex64> {
    let n = poly.len() - 1;
    let radius = 1.0 + poly.iter().skip(1).map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for c in poly {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = ratio / (Complex64::one() - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Continued-fraction convergent of `x` within `tol`.
fn rationalize(x: f64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i128;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        if ((p1 as f64) / (q1 as f64) - x).abs() <= tol {
            return Some(Rational::new(p1.into(), q1.into()));
        }
        let frac = y - a as f64;
        if frac == 0.0 {
            return Some(Rational::new(p1.into(), q1.into()));
        }
        y = 1.0 / frac;
    }
    None
}

fn candidates(z: Complex64) -> Vec<Scalar> {
    let scale = 1.0 + z.norm();
    [1e-11, 1e-9, 1e-7, 1e-5, 1e-3]
        .iter()
        .filter_map(|t| Some(Scalar::new(rationalize(z.re, t * scale)?, rationalize(z.im, t * scale)?)))
        .collect()
}

/// All roots of a monic polynomial over Q(i), with multiplicity.
fn exact_roots(mut poly: Vec<Scalar>) -> Result<Vec<Scalar>, DrinfeldError> {
    let mut found = Vec::new();
    'outer: while poly.len() > 1 {
        let approx = approximate_roots(&poly.iter().map(to_c64).collect::<Vec<_>>());
        for &z in &approx {
            // the mean of a cluster is far more accurate than its members
            let near: Vec<Complex64> =
                approx.iter().copied().filter(|w| (w - z).norm() < 1e-2 * (1.0 + z.norm())).collect();
            let mean = near.iter().sum::<Complex64>() / near.len() as f64;
            for cand in candidates(mean).into_iter().chain(candidates(z)) {
                if horner(&poly, &cand).is_zero() {
                    while poly.len() > 1 && horner(&poly, &cand).is_zero() {
                        poly = deflate(&poly, &cand);
                        found.push(cand.clone());
                    }
                    continue 'outer;
                }
            }
        }
        return Err(DrinfeldError::RootsOutsideField);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_scalar, rat};
    use crate::rootsys::Family;
    use proptest::prelude::*;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    fn a2() -> LieType {
        LieType::new(Family::A, 2).unwrap()
    }

    #[test]
    fn order_examples() {
        let pi = DrinfeldTuple::new(a2(), vec![vec![s("2")], vec![s("1"), s("3")]]).unwrap();
        let c = order_factors(&pi).unwrap();
        let got: Vec<(usize, Scalar)> = c.factors.iter().map(|f| (f.node, f.a.clone())).collect();
        assert_eq!(got, vec![(2, s("3")), (1, s("2")), (2, s("1"))]);
        assert_eq!(chain_to_poly(&c), pi);

        let pi = DrinfeldTuple::new(a2(), vec![vec![s("1-1i"), s("1+1i")], vec![]]).unwrap();
        let c = order_factors(&pi).unwrap();
        assert_eq!(c.factors, vec![Factor::new(1, s("1+1i")), Factor::new(1, s("1-1i"))]);

        assert_eq!(order_factors(&DrinfeldTuple::trivial(a2())), Err(DrinfeldError::TrivialModule));
    }

    #[test]
    fn tie_break_by_node() {
        let pi = DrinfeldTuple::new(a2(), vec![vec![s("0")], vec![s("0")]]).unwrap();
        let c = order_factors(&pi).unwrap();
        assert_eq!(c.factors.iter().map(|f| f.node).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn chain_to_poly_repeated_root() {
        let c = FactorChain::new(a2(), vec![Factor::new(2, s("0")), Factor::new(2, s("0"))]).unwrap();
        assert_eq!(chain_to_poly(&c).roots(2), &[s("0"), s("0")]);
        assert!(FactorChain::new(a2(), vec![Factor::new(3, s("0"))]).is_err());
    }

    #[test]
    fn shift_examples() {
        let pi = DrinfeldTuple::new(a2(), vec![vec![s("1")], vec![]]).unwrap();
        assert_eq!(shift_tuple(&pi, &s("2")).roots(1), &[s("3")]);
        assert_eq!(shift_tuple(&pi, &s("0")), pi);
        assert_eq!(shift_tuple(&shift_tuple(&pi, &s("5/2-1i")), &s("-5/2+1i")), pi);
    }

    #[test]
    fn series_examples() {
        let a = s("7/3");
        let one = eigenvalue_series(std::slice::from_ref(&a), 1, 3);
        assert_eq!(one.coeffs(), &[s("1"), s("1"), a.clone(), &a * &a]);
        let two = eigenvalue_series(std::slice::from_ref(&a), 2, 3);
        assert_eq!(two.coeffs(), &[s("1"), s("2"), &a * &s("2"), &(&a * &a) * &s("2")]);
        let b = s("-1/2");
        let ab = eigenvalue_series(&[a.clone(), b.clone()], 1, 2);
        assert_eq!(ab.coeff(1), s("2"));
        assert_eq!(ab.coeff(2), &(&a + &b) + &s("1"));
    }

    #[test]
    fn series_to_poly_examples() {
        let sr = Series::new(vec![s("1"), s("1"), s("5"), s("25")], 3);
        assert_eq!(series_to_poly(&sr, 1, 1).unwrap(), vec![s("5")]);
        // 1 + 2u⁻¹ + 2·3u⁻² + 2·9u⁻³ + …: one root 3 with d = 2, or the
        // string {a − d + 1, a} = {2, 3} with unit shift
        let sr = Series::new(vec![s("1"), s("2"), s("6"), s("18"), s("54")], 4);
        assert_eq!(series_to_poly(&sr, 1, 2).unwrap(), vec![s("3")]);
        assert_eq!(series_to_poly(&sr, 2, 1).unwrap(), vec![s("3"), s("2")]);
        assert!(series_to_poly(&sr, 2, 2).is_err());
    }

    #[test]
    fn series_to_poly_rejects() {
        let sr = Series::new(vec![s("1"), s("1"), s("5"), s("24")], 3);
        assert!(matches!(series_to_poly(&sr, 1, 1), Err(DrinfeldError::NotDrinfeldSeries(_))));
        let sr = Series::new(vec![s("2")], 3);
        assert!(series_to_poly(&sr, 1, 1).is_err());
        let sr = eigenvalue_series(&[s("1"), s("2")], 1, 2);
        assert!(matches!(series_to_poly(&sr, 2, 1), Err(DrinfeldError::OrderTooSmall { .. })));
    }

    #[test]
    fn irrational_roots_reported() {
        // u² − 2 has no roots in Q(i)
        let err = exact_roots(vec![s("1"), s("0"), s("-2")]);
        assert_eq!(err, Err(DrinfeldError::RootsOutsideField));
    }

    #[test]
    fn gaussian_and_repeated_roots() {
        let roots = vec![s("1/3+2i"), s("1/3+2i"), s("-4/7"), s("-4/7")];
        let sr = eigenvalue_series(&roots, 3, 8);
        let mut expect = roots.clone();
        sort_roots(&mut expect);
        assert_eq!(series_to_poly(&sr, 4, 3).unwrap(), expect);
    }

    #[test]
    fn binom_convention() {
        assert_eq!(binom(4, 2), int(6));
        assert_eq!(binom(4, -1), int(0));
        assert_eq!(binom(3, 5), int(0));
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Scalar::real(rat(n, d)))
    }

    proptest! {
        #[test]
        fn roundtrip(roots in proptest::collection::vec(small_rational(), 1..=4), d in 1i64..=3) {
            let sr = eigenvalue_series(&roots, d, 2 * roots.len());
            let mut expect = roots.clone();
            sort_roots(&mut expect);
            prop_assert_eq!(series_to_poly(&sr, roots.len(), d).unwrap(), expect);
        }

        #[test]
        fn order_is_permutation_stable(roots in proptest::collection::vec(small_rational(), 1..=6), seed in 0usize..100) {
            let t = LieType::new(Family::A, 3).unwrap();
            let split = |rs: &[Scalar]| {
                let mut per = vec![Vec::new(); 3];
                for (k, r) in rs.iter().enumerate() { per[k % 3].push(r.clone()); }
                per
            };
            let pi = DrinfeldTuple::new(t, split(&roots)).unwrap();
            let c = order_factors(&pi).unwrap();
            for w in c.factors.windows(2) {
                prop_assert!(w[0].a.re >= w[1].a.re);
            }
            prop_assert_eq!(chain_to_poly(&c), pi.clone());
            // permuting roots within a node does not change the chain
            let per: Vec<Vec<Scalar>> = split(&roots).into_iter().map(|mut v| { let len = v.len(); if len > 0 { v.rotate_left(seed % len); } v }).collect();
            let c2 = order_factors(&DrinfeldTuple::new(t, per).unwrap()).unwrap();
            prop_assert_eq!(c2, c);
        }
    }
}
