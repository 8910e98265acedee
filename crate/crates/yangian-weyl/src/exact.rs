//! Exact scalars, dense matrices over ℚ(i), and truncated series in u⁻¹.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty scalar")]
    Empty,
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("seed vector is zero")]
    ZeroSeed,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has no unique solution")]
    Underdetermined,
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::real(rat(n, d))
    }

    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar { re: &self.re * r, im: &self.im * r }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        if !self.im.is_zero() {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}i", sign, self.im.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_scalar(s)
    }
}

fn parse_int(tok: &str, allow_sign: bool) -> Result<BigInt, ParseError> {
    let digits = if allow_sign { tok.strip_prefix('-').unwrap_or(tok) } else { tok };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Malformed(tok.to_string()));
    }
    tok.parse::<BigInt>().map_err(|_| ParseError::Malformed(tok.to_string()))
}

fn parse_rat(tok: &str) -> Result<Rational, ParseError> {
    match tok.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(tok, true)?)),
        Some((n, d)) => {
            let n = parse_int(n, true)?;
            let d = parse_int(d, false)?;
            if d.is_zero() {
                return Err(ParseError::ZeroDenominator(tok.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Parses `rat ((+|-) rat "i")?` where `rat = int ("/" posint)?`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseError::Empty);
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Scalar::real(parse_rat(t)?));
    };
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(k, _)| k)
        .last()
        .ok_or_else(|| ParseError::Malformed(t.to_string()))?;
    let re = parse_rat(&body[..split])?;
    let sign = &body[split..split + 1];
    let im_tok = &body[split + 1..];
    if im_tok.starts_with('-') || im_tok.starts_with('+') {
        return Err(ParseError::Malformed(format!("{}{}i", sign, im_tok)));
    }
    let mut im = parse_rat(im_tok).map_err(|e| match e {
        ParseError::Malformed(_) => ParseError::Malformed(format!("{}i", im_tok)),
        other => other,
    })?;
    if sign == "-" {
        im = -im;
    }
    Ok(Scalar { re, im })
}

/// Ordering by real part descending, then imaginary part descending.
/// `Less` means `x` precedes `y`.
pub fn re_compare(x: &Scalar, y: &Scalar) -> Ordering {
    y.re.cmp(&x.re).then_with(|| y.im.cmp(&x.im))
}

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn vec_add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Kronecker product; basis index of `e_i ⊗ f_j` is `i·dim(f) + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut k = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self[(r1, c1)];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = &other[(r2, c2)];
                        if !b.is_zero() {
                            k[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b;
                        }
                    }
                }
            }
        }
        k
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, c)].is_zero()) else { continue };
            m.swap_rows(lead, p);
            let inv = m[(lead, c)].inv().unwrap();
            for cc in 0..m.cols {
                m[(lead, cc)] = &m[(lead, cc)] * &inv;
            }
            for r in 0..m.rows {
                if r != lead && !m[(r, c)].is_zero() {
                    let f = m[(r, c)].clone();
                    for cc in 0..m.cols {
                        let t = &f * &m[(lead, cc)];
                        m[(r, cc)] -= &t;
                    }
                }
            }
            pivots.push(c);
            lead += 1;
            if lead == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vector(self.cols);
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// Unique solution of `self · x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(LinAlgError::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Err(LinAlgError::Underdetermined);
        }
        Ok((0..self.cols).map(|k| red[(k, self.cols)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut m = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        let t = a * b;
                        m[(r, c)] += &t;
                    }
                }
            }
        }
        m
    }
}

/// Result of spinning a seed under a set of operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub dimension: usize,
    /// Rows of the reduced row-echelon basis.
    pub basis: Vec<Vector>,
}

/// Smallest subspace containing `seed` and stable under every generator.
pub fn row_space_closure(generators: &[Matrix], seed: &[Scalar]) -> Result<Closure, LinAlgError> {
    let n = seed.len();
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(LinAlgError::DimensionMismatch { expected: n, found: g.rows().max(g.cols()) });
        }
    }
    if is_zero_vector(seed) {
        return Err(LinAlgError::ZeroSeed);
    }
    // echelon rows keyed by pivot column, each normalized at its pivot
    let mut echelon: Vec<(usize, Vector)> = Vec::new();
    let mut queue = vec![seed.to_vec()];
    while let Some(v) = queue.pop() {
        let Some(r) = reduce_against(&echelon, v) else { continue };
        for g in generators {
            queue.push(g.mul_vec(&r.1));
        }
        echelon.push(r);
    }
    let rows: Vec<Vector> = echelon.into_iter().map(|(_, v)| v).collect();
    let (red, pivots) = Matrix::from_rows(rows).rref();
    let basis = (0..pivots.len()).map(|k| red.row(k).to_vec()).collect::<Vec<_>>();
    Ok(Closure { dimension: basis.len(), basis })
}

fn reduce_against(echelon: &[(usize, Vector)], mut v: Vector) -> Option<(usize, Vector)> {
    for (p, row) in echelon {
        if !v[*p].is_zero() {
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
    }
    let p = v.iter().position(|x| !x.is_zero())?;
    let inv = v[p].inv().unwrap();
    let v = v.iter().map(|x| x * &inv).collect();
    Some((p, v))
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &[Scalar]) -> bool {
    if basis.is_empty() {
        return is_zero_vector(v);
    }
    let m = Matrix::from_rows(basis.to_vec());
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    Matrix::from_rows(ext).rank() == m.rank()
}

/// Truncated series `c₀ + c₁u⁻¹ + … + c_N u⁻ᴺ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Scalar>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.resize(order + 1, Scalar::zero());
        Series { coeffs }
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Scalar::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of u⁻ᵏ (zero beyond the order).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut out = vec![Scalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += &(a * b);
            }
        }
        Series { coeffs: out }
    }

    /// Inverse when the constant term is nonzero.
    pub fn inverse(&self) -> Option<Series> {
        let c0inv = self.coeffs[0].inv()?;
        let n = self.order();
        let mut out = vec![Scalar::zero(); n + 1];
        out[0] = c0inv.clone();
        for k in 1..=n {
            let mut acc = Scalar::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -&(&acc * &c0inv);
        }
        Some(Series { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("3/2"), Scalar::from_ratio(3, 2));
        assert_eq!(s("1-2i"), Scalar::new(int(1), int(-2)));
        assert_eq!(s("4/2"), Scalar::from_int(2));
        assert_eq!(s("-1/3+5/7i"), Scalar::new(rat(-1, 3), rat(5, 7)));
    }

    #[test]
    fn parse_errors_name_token() {
        assert_eq!(parse_scalar("1/0"), Err(ParseError::ZeroDenominator("1/0".into())));
        assert_eq!(parse_scalar("x"), Err(ParseError::Malformed("x".into())));
        assert_eq!(parse_scalar("1+i"), Err(ParseError::Malformed("i".into())));
        assert_eq!(parse_scalar("1/-2"), Err(ParseError::Malformed("-2".into())));
        assert_eq!(parse_scalar(""), Err(ParseError::Empty));
        assert!(parse_scalar("2i").is_err());
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(s("1-2i").to_string(), "1-2i");
        assert_eq!(s("0+1/2i").to_string(), "0+1/2i");
        assert_eq!(s("-6/4").to_string(), "-3/2");
    }

    #[test]
    fn compare_examples() {
        assert_eq!(re_compare(&s("2"), &s("1+1i")), Ordering::Less);
        assert_eq!(re_compare(&s("1+1i"), &s("1-1i")), Ordering::Less);
        assert_eq!(re_compare(&s("0"), &s("0")), Ordering::Equal);
    }

    #[test]
    fn gaussian_division() {
        let a = s("1+2i");
        let b = s("3-1i");
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn closure_examples() {
        let e1 = basis_vector(3, 0);
        assert_eq!(row_space_closure(&[Matrix::identity(3)], &e1).unwrap().dimension, 1);
        let mut p = Matrix::zeros(3, 3);
        p[(1, 0)] = Scalar::one();
        p[(2, 1)] = Scalar::one();
        p[(0, 2)] = Scalar::one();
        let c = row_space_closure(&[p], &e1).unwrap();
        assert_eq!(c.dimension, 3);
        assert_eq!(c.basis, (0..3).map(|k| basis_vector(3, k)).collect::<Vec<_>>());
    }

    #[test]
    fn closure_errors() {
        assert_eq!(row_space_closure(&[Matrix::identity(2)], &zero_vector(2)), Err(LinAlgError::ZeroSeed));
        assert!(matches!(
            row_space_closure(&[Matrix::identity(3)], &basis_vector(2, 0)),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_rows(vec![
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
        ]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(is_zero_vector(&m.mul_vec(v)));
        }
        let a = Matrix::from_rows(vec![vec![2.into(), 1.into()], vec![1.into(), 3.into()]]);
        let x = a.solve(&[5.into(), 10.into()]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(3)]);
        assert_eq!(m.solve(&[1.into(), 1.into()]), Err(LinAlgError::Inconsistent));
    }

    #[test]
    fn series_inverse() {
        let f = Series::new(vec![1.into(), 3.into(), s("1/2-1i")], 5);
        let g = f.inverse().unwrap();
        assert_eq!(f.mul(&g), Series::one(5));
        assert!(Series::new(vec![Scalar::zero(), 1.into()], 2).inverse().is_none());
    }
}
