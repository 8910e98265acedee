//! Explicit finite-dimensional modules over `Y(sl2)`.
//!
//! Evaluation modules `W_m(a)` are built from closed-form actions on the
//! basis `w_0, …, w_m` (`w_m` highest). Tensor products use the coproduct on
//! `x₀^±, h₀, h₁`; everything of level ≥ 1 beyond `h₁` comes from the ladder
//!
//! ```text
//! x⁻_{k+1} = −½([h₁, x⁻_k] + h₀x⁻_k + x⁻_k h₀)
//! x⁺_{k+1} =  ½([h₁, x⁺_k] − h₀x⁺_k − x⁺_k h₀)
//! h_k      = [x⁺_k, x⁻_0]
//! ```
//!
//! which is forced by the defining relations. Highest-weight and
//! irreducibility tests are brute force: spin a seed vector under the
//! generators and compare dimensions.

use num::One;
use thiserror::Error;

use crate::drinfeld::eigenvalue_series;
use crate::exact::{
    basis_vector, is_zero_vector, rat, row_space_closure, vec_add, vec_scale, vec_sub, LinAlgError, Matrix,
    Scalar, Vector,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("highest weight must be a positive integer, got {0}")]
    BadHighestWeight(i64),
    #[error("empty tensor specification")]
    EmptySpec,
    #[error("irreducibility test supports only W_1 factors, found W_{0}")]
    Unsupported(i64),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A tensor factor `W_m(a)`.
pub type FactorSpec = (i64, Scalar);

/// A module given by the six generators `x₀^±, x₁^±, h₀, h₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SL2Module {
    pub factors: Vec<FactorSpec>,
    pub dim: usize,
    pub x0p: Matrix,
    pub x0m: Matrix,
    pub x1p: Matrix,
    pub x1m: Matrix,
    pub h0: Matrix,
    pub h1: Matrix,
    /// Pure tensors `w_{s₁}⊗…⊗w_{s_n}`, indexed like `Matrix::kron`.
    pub labels: Vec<String>,
}

impl SL2Module {
    pub fn generators(&self) -> [&Matrix; 6] {
        [&self.x0p, &self.x0m, &self.x1p, &self.x1m, &self.h0, &self.h1]
    }

    /// Tensor product of the highest-weight vectors.
    pub fn highest_vector(&self) -> Vector {
        basis_vector(self.dim, self.dim - 1)
    }

    /// Dimension of the submodule generated by `seed`.
    pub fn spin(&self, seed: &[Scalar]) -> Result<usize, Sl2Error> {
        let gens: Vec<Matrix> = self.generators().into_iter().cloned().collect();
        Ok(row_space_closure(&gens, seed)?.dimension)
    }
}

/// `(x⁺_k, x⁻_k, h_k)` on `W_m(a)`.
fn wm_level(m: i64, a: &Scalar, k: u32) -> (Matrix, Matrix, Matrix) {
    let n = (m + 1) as usize;
    let (mut xp, mut xm, mut h) = (Matrix::zeros(n, n), Matrix::zeros(n, n), Matrix::zeros(n, n));
    for s in 0..=m {
        let sv = Scalar::from_int(s);
        let up = (&sv + a).pow(k);
        let down = (&(&sv + a) - &Scalar::one()).pow(k);
        let si = s as usize;
        if s < m {
            xp[(si + 1, si)] = &up * &Scalar::from_int(s + 1);
        }
        if s > 0 {
            xm[(si - 1, si)] = &down * &Scalar::from_int(m - s + 1);
        }
        h[(si, si)] = &(&down * &Scalar::from_int(s * (m - s + 1))) - &(&up * &Scalar::from_int((s + 1) * (m - s)));
    }
    (xp, xm, h)
}

/// The evaluation module `W_m(a)`.
pub fn wm_module(m: i64, a: Scalar) -> Result<SL2Module, Sl2Error> {
    if m <= 0 {
        return Err(Sl2Error::BadHighestWeight(m));
    }
    let (x0p, x0m, h0) = wm_level(m, &a, 0);
    let (x1p, x1m, h1) = wm_level(m, &a, 1);
    Ok(SL2Module {
        factors: vec![(m, a)],
        dim: (m + 1) as usize,
        x0p,
        x0m,
        x1p,
        x1m,
        h0,
        h1,
        labels: (0..=m).map(|s| format!("w{s}")).collect(),
    })
}

/// `x⁻_k` on `W_m(a)` straight from the closed form, for any `k`.
pub fn wm_x_minus(m: i64, a: &Scalar, k: u32) -> Matrix {
    wm_level(m, a, k).1
}

/// `h_k` on `W_m(a)` straight from the closed form.
pub fn wm_h(m: i64, a: &Scalar, k: u32) -> Matrix {
    wm_level(m, a, k).2
}

fn half() -> Scalar {
    Scalar::real(rat(1, 2))
}

fn anticommutator(a: &Matrix, b: &Matrix) -> Matrix {
    &(a * b) + &(b * a)
}

fn next_minus(h0: &Matrix, h1: &Matrix, xm: &Matrix) -> Matrix {
    (&h1.commutator(xm) + &anticommutator(h0, xm)).scale(&-half())
}

fn next_plus(h0: &Matrix, h1: &Matrix, xp: &Matrix) -> Matrix {
    (&h1.commutator(xp) - &anticommutator(h0, xp)).scale(&half())
}

fn tensor_pair(v: &SL2Module, w: &SL2Module) -> SL2Module {
    let (iv, iw) = (Matrix::identity(v.dim), Matrix::identity(w.dim));
    let prim = |a: &Matrix, b: &Matrix| &a.kron(&iw) + &iv.kron(b);
    let x0p = prim(&v.x0p, &w.x0p);
    let x0m = prim(&v.x0m, &w.x0m);
    let h0 = prim(&v.h0, &w.h0);
    let h1 = &(&prim(&v.h1, &w.h1) + &v.h0.kron(&w.h0)) - &v.x0m.kron(&w.x0p).scale(&Scalar::from_int(2));
    let x1p = next_plus(&h0, &h1, &x0p);
    let x1m = next_minus(&h0, &h1, &x0m);
    let labels = v.labels.iter().flat_map(|a| w.labels.iter().map(move |b| format!("{a}⊗{b}"))).collect();
    let mut factors = v.factors.clone();
    factors.extend(w.factors.iter().cloned());
    SL2Module { factors, dim: v.dim * w.dim, x0p, x0m, x1p, x1m, h0, h1, labels }
}

fn build(spec: &[FactorSpec]) -> Result<Vec<SL2Module>, Sl2Error> {
    if spec.is_empty() {
        return Err(Sl2Error::EmptySpec);
    }
    spec.iter().map(|(m, a)| wm_module(*m, a.clone())).collect()
}

/// `W_{m₁}(a₁) ⊗ … ⊗ W_{m_n}(a_n)`, bracketed `((V₁⊗V₂)⊗V₃)⊗…`.
pub fn tensor_module(spec: &[FactorSpec]) -> Result<SL2Module, Sl2Error> {
    let mut parts = build(spec)?.into_iter();
    let first = parts.next().unwrap();
    Ok(parts.fold(first, |acc, w| tensor_pair(&acc, &w)))
}

/// Same module bracketed `V₁⊗(V₂⊗(…))`; equal to [`tensor_module`] by coassociativity.
pub fn tensor_module_right(spec: &[FactorSpec]) -> Result<SL2Module, Sl2Error> {
    let mut parts = build(spec)?;
    let last = parts.pop().unwrap();
    Ok(parts.into_iter().rev().fold(last, |acc, v| tensor_pair(&v, &acc)))
}

/// Matrices of `x_k^±, h_k` for `k ≤ K`.
#[derive(Debug, Clone)]
pub struct GeneratorLadder<'a> {
    pub module: &'a SL2Module,
    pub xp: Vec<Matrix>,
    pub xm: Vec<Matrix>,
    pub h: Vec<Matrix>,
}

impl GeneratorLadder<'_> {
    pub fn top(&self) -> usize {
        self.h.len() - 1
    }
}

pub fn extend_generators(module: &SL2Module, k_max: usize) -> GeneratorLadder<'_> {
    let mut xp = vec![module.x0p.clone(), module.x1p.clone()];
    let mut xm = vec![module.x0m.clone(), module.x1m.clone()];
    let mut h = vec![module.h0.clone(), module.h1.clone()];
    for k in 1..k_max {
        let p = next_plus(&module.h0, &module.h1, &xp[k]);
        let m = next_minus(&module.h0, &module.h1, &xm[k]);
        h.push(p.commutator(&module.x0m));
        xp.push(p);
        xm.push(m);
    }
    GeneratorLadder { module, xp, xm, h }
}

/// Is the tensor of highest vectors cyclic?
pub fn is_highest_weight(spec: &[FactorSpec]) -> Result<bool, Sl2Error> {
    let module = tensor_module(spec)?;
    Ok(module.spin(&module.highest_vector())? == module.dim)
}

/// The dual chain of a `W_1` tensor product: reversed, each parameter shifted by `−1`.
pub fn dual_spec(spec: &[FactorSpec]) -> Vec<FactorSpec> {
    spec.iter().rev().map(|(m, a)| (*m, a - &Scalar::one())).collect()
}

/// Irreducibility of a tensor product of `W_1` factors.
///
/// The module is irreducible iff both it and its dual are highest weight. The
/// dual reverses the factors and shifts every parameter by the same constant;
/// only differences matter, so the shift is dropped.
pub fn is_irreducible(spec: &[FactorSpec]) -> Result<bool, Sl2Error> {
    if let Some((m, _)) = spec.iter().find(|(m, _)| *m != 1) {
        return Err(Sl2Error::Unsupported(*m));
    }
    let reversed: Vec<FactorSpec> = spec.iter().rev().cloned().collect();
    Ok(is_highest_weight(spec)? && is_highest_weight(&reversed)?)
}

/// Drinfeld roots of the tensor product: `a, a+1, …, a+m−1` for each `W_m(a)`.
pub fn spec_roots(spec: &[FactorSpec]) -> Vec<Scalar> {
    spec.iter()
        .flat_map(|(m, a)| (0..*m).map(move |j| a + &Scalar::from_int(j)))
        .collect()
}

/// Eigenvalues of `h_0, …, h_N` on the highest vector, or `None` if it is not an eigenvector.
pub fn highest_eigenvalues(spec: &[FactorSpec], order: usize) -> Result<Option<Vec<Scalar>>, Sl2Error> {
    let module = tensor_module(spec)?;
    let ladder = extend_generators(&module, order.max(1));
    let v = module.highest_vector();
    let top = module.dim - 1;
    let mut out = Vec::with_capacity(order + 1);
    for h in ladder.h.iter().take(order + 1) {
        let hv = h.mul_vec(&v);
        let lambda = hv[top].clone();
        if !is_zero_vector(&vec_sub(&hv, &vec_scale(&v, &lambda))) {
            return Ok(None);
        }
        out.push(lambda);
    }
    Ok(Some(out))
}

/// `h_k` acts on the highest vector by the `u^{-k-1}` coefficient of the
/// Drinfeld series, for every `k ≤ N`.
pub fn verify_drinfeld_series(spec: &[FactorSpec], order: usize) -> Result<bool, Sl2Error> {
    let Some(eigen) = highest_eigenvalues(spec, order)? else { return Ok(false) };
    let series = eigenvalue_series(&spec_roots(spec), 1, order + 1);
    Ok(eigen.iter().enumerate().all(|(k, e)| *e == series.coeff(k + 1)))
}

/// `v⁺⊗w⁻ − v⁻⊗w⁺` in a product of two `W_1`'s.
pub fn antisymmetric_vector() -> Vector {
    let mut v = basis_vector(4, 2);
    v[1] = -Scalar::one();
    v
}

/// In `W_1(a+1) ⊗ W_1(a)` the antisymmetric vector is killed by all six generators.
pub fn trivial_submodule_check(a: &Scalar) -> Result<bool, Sl2Error> {
    let module = tensor_module(&[(1, a + &Scalar::one()), (1, a.clone())])?;
    let v0 = antisymmetric_vector();
    Ok(module.generators().iter().all(|g| is_zero_vector(&g.mul_vec(&v0))))
}

/// A named identity and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass }
    }
}

/// Defining relations of `Y(sl2)` on the ladder up to level `K`.
pub fn relation_suite(module: &SL2Module, k_max: usize) -> Vec<Check> {
    let k_max = k_max.max(1);
    let lad = extend_generators(module, k_max);
    let two = Scalar::from_int(2);
    let mut out = vec![Check::new(
        "h1 = [x1+, x0-]",
        module.x1p.commutator(&module.x0m) == module.h1,
    )];
    out.push(Check::new("h1 = [x0+, x1-]", module.x0p.commutator(&module.x1m) == module.h1));
    for r in 0..=k_max {
        for s in 0..=k_max {
            if r < s {
                out.push(Check::new(format!("[h{r}, h{s}] = 0"), lad.h[r].commutator(&lad.h[s]).is_zero()));
            }
            if r + s <= k_max {
                out.push(Check::new(
                    format!("[x{r}+, x{s}-] = h{}", r + s),
                    lad.xp[r].commutator(&lad.xm[s]) == lad.h[r + s],
                ));
            }
            if r + s < k_max {
                let (p, q) = (r, s);
                let lhs_p = &lad.xp[p + 1].commutator(&lad.xp[q]) - &lad.xp[p].commutator(&lad.xp[q + 1]);
                out.push(Check::new(
                    format!("[x{}+, x{q}+] - [x{p}+, x{}+]", p + 1, q + 1),
                    lhs_p == anticommutator(&lad.xp[p], &lad.xp[q]),
                ));
                let lhs_m = &lad.xm[p + 1].commutator(&lad.xm[q]) - &lad.xm[p].commutator(&lad.xm[q + 1]);
                out.push(Check::new(
                    format!("[x{}-, x{q}-] - [x{p}-, x{}-]", p + 1, q + 1),
                    lhs_m == anticommutator(&lad.xm[p], &lad.xm[q]).scale(&-Scalar::one()),
                ));
                let lhs_hp = &lad.h[p + 1].commutator(&lad.xp[q]) - &lad.h[p].commutator(&lad.xp[q + 1]);
                out.push(Check::new(
                    format!("[h{}, x{q}+] - [h{p}, x{}+]", p + 1, q + 1),
                    lhs_hp == anticommutator(&lad.h[p], &lad.xp[q]),
                ));
                let lhs_hm = &lad.h[p + 1].commutator(&lad.xm[q]) - &lad.h[p].commutator(&lad.xm[q + 1]);
                out.push(Check::new(
                    format!("[h{}, x{q}-] - [h{p}, x{}-]", p + 1, q + 1),
                    lhs_hm == anticommutator(&lad.h[p], &lad.xm[q]).scale(&-Scalar::one()),
                ));
            }
        }
        out.push(Check::new(
            format!("[h0, x{r}+] = 2x{r}+"),
            lad.h[0].commutator(&lad.xp[r]) == lad.xp[r].scale(&two),
        ));
        out.push(Check::new(
            format!("[h0, x{r}-] = -2x{r}-"),
            lad.h[0].commutator(&lad.xm[r]) == lad.xm[r].scale(&-&two),
        ));
    }
    out
}

fn apply(ms: &[&Matrix], v: &[Scalar]) -> Vector {
    ms.iter().rev().fold(v.to_vec(), |acc, m| m.mul_vec(&acc))
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// The `W_2(a)` identities for the lowering operators on `w_2`.
pub fn w2_battery(a: &Scalar) -> Result<Vec<Check>, Sl2Error> {
    let module = wm_module(2, a.clone())?;
    let lad = extend_generators(&module, 3);
    let xm = &lad.xm;
    let (w0, w1, w2) = (basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2));
    let a1 = a + &Scalar::one();
    let sq = apply(&[&xm[0], &xm[0]], &w2);
    let mut out = Vec::new();
    let item_i = (0..=3u32).all(|k| {
        xm[k as usize].mul_vec(&w2) == vec_scale(&w1, &a1.pow(k))
            && xm[k as usize].mul_vec(&w1) == vec_scale(&w0, &(&s(2) * &a.pow(k)))
    });
    out.push(Check::new("(i) x_k- w2 = (a+1)^k w1, x_k- w1 = 2a^k w0", item_i));
    let x0x1 = apply(&[&xm[0], &xm[1]], &w2);
    let x1x0 = apply(&[&xm[1], &xm[0]], &w2);
    out.push(Check::new("(ii) x0- x1- w2 = (a+1)(x0-)^2 w2", x0x1 == vec_scale(&sq, &a1)));
    out.push(Check::new("(iii) x1- x0- w2 = a(x0-)^2 w2", x1x0 == vec_scale(&sq, a)));
    out.push(Check::new(
        "(iv) (x1- x0- + x0- x1-) w2 = (2a+1)(x0-)^2 w2",
        vec_add(&x0x1, &x1x0) == vec_scale(&sq, &(&(&s(2) * a) + &Scalar::one())),
    ));
    let c5 = &(&(&s(2) * &a.pow(2)) + &(&s(2) * a)) + &Scalar::one();
    out.push(Check::new(
        "(v) (x2- x0- + x0- x2-) w2 = (2a^2+2a+1)(x0-)^2 w2",
        vec_add(&apply(&[&xm[2], &xm[0]], &w2), &apply(&[&xm[0], &xm[2]], &w2)) == vec_scale(&sq, &c5),
    ));
    out.push(Check::new(
        "(vi) (x1-)^2 w2 = a(a+1)(x0-)^2 w2",
        apply(&[&xm[1], &xm[1]], &w2) == vec_scale(&sq, &(a * &a1)),
    ));
    Ok(out)
}

/// The `W_1(b) ⊗ W_1(a)` identities on `v⁺⊗w⁺`.
///
/// Item (i) is reported as stated; it holds iff `a − b ≠ 1`, since at
/// `a − b = 1` the vector `v⁺⊗w⁺` generates only a 3-dimensional submodule.
pub fn w1w1_battery(a: &Scalar, b: &Scalar) -> Result<Vec<Check>, Sl2Error> {
    let module = tensor_module(&[(1, b.clone()), (1, a.clone())])?;
    let lad = extend_generators(&module, 3);
    let xm = &lad.xm;
    let v = module.highest_vector();
    // v⁻⊗w⁺ and v⁺⊗w⁻
    let (lo_hi, hi_lo) = (basis_vector(4, 1), basis_vector(4, 2));
    let sq = apply(&[&xm[0], &xm[0]], &v);
    let half = half();
    let one = Scalar::one();
    let mut out = Vec::new();

    let x0v = xm[0].mul_vec(&v);
    let x1v = xm[1].mul_vec(&v);
    let rank = Matrix::from_rows(vec![x0v, x1v]).rank();
    out.push(Check::new("(i) x0- v, x1- v linearly independent", rank == 2));

    let x0x1 = apply(&[&xm[0], &xm[1]], &v);
    let x1x0 = apply(&[&xm[1], &xm[0]], &v);
    let ab = a + b;
    out.push(Check::new(
        "(ii) x0- x1- v = (a+b+1)/2 (x0-)^2 v",
        x0x1 == vec_scale(&sq, &(&(&ab + &one) * &half)),
    ));
    out.push(Check::new(
        "(iii) x1- x0- v = (a+b-1)/2 (x0-)^2 v",
        x1x0 == vec_scale(&sq, &(&(&ab - &one) * &half)),
    ));
    out.push(Check::new("(iv) (x1- x0- + x0- x1-) v = (a+b)(x0-)^2 v", vec_add(&x0x1, &x1x0) == vec_scale(&sq, &ab)));

    let c2 = &(&b.pow(2) + b) + a;
    let x2v = xm[2].mul_vec(&v);
    let x0x2 = apply(&[&xm[0], &xm[2]], &v);
    let x1x2 = apply(&[&xm[1], &xm[2]], &v);
    out.push(Check::new(
        "(v) x2- v = (b^2+b+a) v-w+ + a^2 v+w-; x0- x2- v, x1- x2- v",
        x2v == vec_add(&vec_scale(&lo_hi, &c2), &vec_scale(&hi_lo, &a.pow(2)))
            && x0x2 == vec_scale(&sq, &(&(&c2 + &a.pow(2)) * &half))
            && x1x2 == vec_scale(&sq, &(&(&(a * b) * &(&ab + &one)) * &half)),
    ));
    out.push(Check::new("(vi) (x1-)^2 v = ab (x0-)^2 v", apply(&[&xm[1], &xm[1]], &v) == vec_scale(&sq, &(a * b))));

    let c3 = &(&(&b.pow(3) + &b.pow(2)) + &(a * b)) + &a.pow(2);
    let x3v = xm[3].mul_vec(&v);
    let x0x3 = apply(&[&xm[0], &xm[3]], &v);
    out.push(Check::new(
        "(vii) x3- v = (b^3+b^2+ab+a^2) v-w+ + a^3 v+w-; x0- x3- v",
        x3v == vec_add(&vec_scale(&lo_hi, &c3), &vec_scale(&hi_lo, &a.pow(3)))
            && x0x3 == vec_scale(&sq, &(&(&c3 + &a.pow(3)) * &half)),
    ));
    Ok(out)
}
