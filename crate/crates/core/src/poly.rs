//! Dense univariate polynomials and truncated power series over
//! [`FieldElement`]: arithmetic, gcd, Sylvester determinant, separability,
//! series square roots, and Hankel blocks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{FieldCtx, FieldElement};
use crate::linalg::Matrix;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact polynomial division (remainder {0})")]
    InexactDivision(String),
    #[error("separability criteria disagree (Sylvester vs gcd)")]
    InternalMismatch,
    #[error("branch does not square to the constant term")]
    BadBranch,
    #[error("series stores {have} coefficients, {need} required")]
    InsufficientPrecision { have: usize, need: usize },
    #[error("Hankel block must be square for a determinant ({rows}x{cols})")]
    NonSquareBlock { rows: usize, cols: usize },
}

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(ctx: FieldCtx, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(coeffs.iter().all(|c| c.ctx() == ctx), "mixed contexts");
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        Poly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Poly::constant(ctx.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let ctx = c.ctx();
        Poly::new(ctx, vec![c])
    }

    pub fn from_i64(ctx: FieldCtx, coeffs: &[i64]) -> Self {
        Poly::new(ctx, coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    /// x^n
    pub fn x_pow(ctx: FieldCtx, n: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[n] = ctx.one();
        Poly { ctx, coeffs }
    }

    /// x - a
    pub fn linear_root(a: &FieldElement) -> Self {
        Poly::new(a.ctx(), vec![-a, a.ctx().one()])
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg 0 for the zero polynomial, convenient in bounds.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::new(self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.ctx.from_i64(i as i64) * c)
            .collect();
        Poly::new(self.ctx, coeffs)
    }

    /// Substitute x -> x + a (Taylor shift by synthetic division).
    pub fn shift(&self, a: &FieldElement) -> Poly {
        if self.is_zero() || a.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        // repeatedly divide by (x - (-a)) accumulating remainders
        for k in 0..n - 1 {
            for i in (k..n - 1).rev() {
                let add = &coeffs[i + 1] * a;
                coeffs[i] = &coeffs[i] + &add;
            }
        }
        Poly::new(self.ctx, coeffs)
    }

    pub fn square(&self) -> Poly {
        self * self
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn div_rem(&self, div: &Poly) -> Result<(Poly, Poly), PolyError> {
        if div.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let d = div.degree().unwrap();
        if self.is_zero() || self.degree().unwrap() < d {
            return Ok((Poly::zero(self.ctx), self.clone()));
        }
        let lc_inv = div.leading().unwrap().inverse().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let n = self.degree().unwrap();
        let mut quot = vec![self.ctx.zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let q = &rem[k + d] * &lc_inv;
            if !q.is_zero() {
                for i in 0..=d {
                    let sub = &q * &div.coeffs[i];
                    rem[k + i] = &rem[k + i] - &sub;
                }
            }
            quot[k] = q;
        }
        rem.truncate(d);
        Ok((Poly::new(self.ctx, quot), Poly::new(self.ctx, rem)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, div: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.div_rem(div)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision(r.to_string()));
        }
        Ok(q)
    }

    pub fn rem(&self, div: &Poly) -> Result<Poly, PolyError> {
        Ok(self.div_rem(div)?.1)
    }

    /// Truncation mod x^order.
    pub fn truncated(&self, order: usize) -> Poly {
        Poly::new(
            self.ctx,
            self.coeffs.iter().take(order).cloned().collect(),
        )
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::new(self.ctx, coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::new(self.ctx, coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let add = a * b;
                coeffs[i + j] = &coeffs[i + j] + &add;
            }
        }
        Poly::new(self.ctx, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.ctx, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}
forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is rejected.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.make_monic())
}

/// Extended gcd: returns monic `g` and `(s, t)` with `s f + t g2 = g`.
pub fn poly_xgcd(f: &Poly, g2: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
    if f.is_zero() && g2.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let ctx = f.ctx();
    let (mut r0, mut r1) = (f.clone(), g2.clone());
    let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
    let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let lc_inv = r0
        .leading()
        .expect("gcd of nonzero pair is nonzero")
        .inverse()
        .unwrap();
    Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
}

/// Sylvester determinant of (f, f'): the (2n-1)x(2n-1) resultant determinant,
/// zero exactly when f has a multiple root.
pub fn sylvester_det(f: &Poly) -> Result<FieldElement, PolyError> {
    let n = match f.degree() {
        None | Some(0) => return Err(PolyError::ZeroPolynomial),
        Some(n) => n,
    };
    let ctx = f.ctx();
    let df = f.derivative();
    let size = 2 * n - 1;
    // Left block: n-1 shifted copies of f's coefficients; right block: n
    // shifted copies of f'. Column j of the left block holds f_{n-i+j} in row
    // i (0-based), matching the classical layout transposed.
    let m = Matrix::from_fn(ctx, size, size, |i, j| {
        if j < n - 1 {
            let idx = n as isize - i as isize + j as isize;
            if idx < 0 {
                ctx.zero()
            } else {
                f.coeff(idx as usize)
            }
        } else {
            let jj = j - (n - 1);
            let idx = n as isize - 1 - i as isize + jj as isize;
            if idx < 0 {
                ctx.zero()
            } else {
                df.coeff(idx as usize)
            }
        }
    });
    Ok(m.det())
}

/// Separability of f, decided by the Sylvester determinant and cross-checked
/// against gcd(f, f'); a disagreement signals a bug.
pub fn is_separable(f: &Poly) -> Result<bool, PolyError> {
    let via_sylvester = !sylvester_det(f)?.is_zero();
    let g = poly_gcd(f, &f.derivative())?;
    let via_gcd = g.degree() == Some(0);
    if via_sylvester != via_gcd {
        return Err(PolyError::InternalMismatch);
    }
    Ok(via_sylvester)
}

/// Truncated power series, coefficients a_0..a_{order-1} stored explicitly.
/// Access beyond the stored prefix is an error, never silent extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl Series {
    pub fn new(ctx: FieldCtx, coeffs: Vec<FieldElement>) -> Self {
        assert!(coeffs.iter().all(|c| c.ctx() == ctx), "mixed contexts");
        Series { ctx, coeffs }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Number of stored coefficients; the series is known mod x^order.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Result<&FieldElement, PolyError> {
        self.coeffs.get(i).ok_or(PolyError::InsufficientPrecision {
            have: self.coeffs.len(),
            need: i + 1,
        })
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_poly_prefix(&self, order: usize) -> Poly {
        Poly::new(
            self.ctx,
            self.coeffs.iter().take(order).cloned().collect(),
        )
    }
}

/// Branch of sqrt(f) in k[[x]] with prescribed constant term. Coefficients
/// satisfy a_k = (f_k - sum_{i=1}^{k-1} a_i a_{k-i}) / (2 a_0).
pub fn series_sqrt(f: &Poly, branch: &FieldElement, order: usize) -> Result<Series, PolyError> {
    let f0 = f.coeff(0);
    if branch.is_zero() || &branch.square() != &f0 {
        return Err(PolyError::BadBranch);
    }
    let ctx = f.ctx();
    let two_a0_inv = (&ctx.from_i64(2) * branch)
        .inverse()
        .expect("branch is nonzero");
    let mut a: Vec<FieldElement> = Vec::with_capacity(order);
    a.push(branch.clone());
    for k in 1..order {
        let mut s = ctx.zero();
        for i in 1..k {
            s = &s + &(&a[i] * &a[k - i]);
        }
        let num = &f.coeff(k) - &s;
        a.push(&num * &two_a0_inv);
    }
    Ok(Series::new(ctx, a))
}

/// Rectangular Hankel block of a series: entry (i, j) is coefficient
/// `start + i + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HankelSpec {
    pub start: usize,
    pub rows: usize,
    pub cols: usize,
}

impl HankelSpec {
    pub fn new(start: usize, rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "degenerate Hankel block");
        HankelSpec { start, rows, cols }
    }
}

fn hankel_matrix(s: &Series, spec: HankelSpec) -> Result<Matrix, PolyError> {
    let need = spec.start + spec.rows + spec.cols - 1;
    if s.order() < need {
        return Err(PolyError::InsufficientPrecision {
            have: s.order(),
            need,
        });
    }
    Ok(Matrix::from_fn(s.ctx(), spec.rows, spec.cols, |i, j| {
        s.coeffs()[spec.start + i + j].clone()
    }))
}

/// Exact determinant of a square Hankel block.
pub fn hankel_det(s: &Series, spec: HankelSpec) -> Result<FieldElement, PolyError> {
    if spec.rows != spec.cols {
        return Err(PolyError::NonSquareBlock {
            rows: spec.rows,
            cols: spec.cols,
        });
    }
    Ok(hankel_matrix(s, spec)?.det())
}

/// Whether the Hankel block has less-than-maximal rank, decided by exact
/// elimination (valid for rectangular blocks).
pub fn hankel_rank_deficient(s: &Series, spec: HankelSpec) -> Result<bool, PolyError> {
    let m = hankel_matrix(s, spec)?;
    Ok(m.rank() < spec.rows.min(spec.cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn gcd_simple() {
        let ctx = FieldCtx::rational();
        // gcd(x^2 - 1, x - 1) = x - 1
        let f = Poly::from_i64(ctx, &[-1, 0, 1]);
        let g = Poly::from_i64(ctx, &[-1, 1]);
        assert_eq!(poly_gcd(&f, &g).unwrap(), g);
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[2, 0, 2]); // 2x^2 + 2
        let z = Poly::zero(ctx);
        assert_eq!(poly_gcd(&f, &z).unwrap(), Poly::from_i64(ctx, &[1, 0, 1]));
        assert!(poly_gcd(&z, &z).is_err());
    }

    #[test]
    fn gcd_common_roots() {
        let ctx = FieldCtx::rational();
        // x^3 - x = x(x-1)(x+1), x^2 + x = x(x+1): common part x(x+1) = x^2 + x
        let f = Poly::from_i64(ctx, &[0, -1, 0, 1]);
        let g = Poly::from_i64(ctx, &[0, 1, 1]);
        assert_eq!(poly_gcd(&f, &g).unwrap(), Poly::from_i64(ctx, &[0, 1, 1]));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[-1, 0, 1]);
        let g = Poly::from_i64(ctx, &[2, 1]);
        let (d, s, t) = poly_xgcd(&f, &g).unwrap();
        assert_eq!(&(&s * &f) + &(&t * &g), d);
    }

    #[test]
    fn sylvester_double_root_vanishes() {
        let ctx = FieldCtx::rational();
        // x^2 has a double root
        assert_eq!(
            sylvester_det(&Poly::from_i64(ctx, &[0, 0, 1])).unwrap(),
            ctx.zero()
        );
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        assert_eq!(
            sylvester_det(&Poly::from_i64(ctx, &[2, -3, 0, 1])).unwrap(),
            ctx.zero()
        );
    }

    #[test]
    fn sylvester_x2_minus_1() {
        let ctx = FieldCtx::rational();
        // 3x3 determinant expands to -4 = -Res-style value; nonzero either way
        let s = sylvester_det(&Poly::from_i64(ctx, &[-1, 0, 1])).unwrap();
        assert_eq!(s, ctx.from_i64(-4));
    }

    #[test]
    fn separability_examples() {
        let ctx = FieldCtx::rational();
        // gamma=2, s=1 member of the even-torsion family:
        // f = x^5 - x^4/2 - x^3 + x^2 - 1/2, stored lowest-first
        let f = Poly::new(
            ctx,
            vec![
                ctx.from_ratio(-1, 2),
                ctx.zero(),
                ctx.from_i64(1),
                ctx.from_i64(-1),
                ctx.from_ratio(-1, 2),
                ctx.from_i64(1),
            ],
        );
        assert!(is_separable(&f).unwrap());
        assert!(!is_separable(&Poly::from_i64(ctx, &[0, 0, 0, 1])).unwrap());
        // x(x-1)(x-2)(x-4)(x-9): distinct roots
        let mut g = Poly::from_i64(ctx, &[0, 1]);
        for r in [1, 2, 4, 9] {
            g = &g * &Poly::from_i64(ctx, &[-r, 1]);
        }
        assert!(is_separable(&g).unwrap());
    }

    #[test]
    fn sylvester_gcd_consistency_random() {
        let ctx = FieldCtx::rational();
        // 200 random polynomials of degree <= 8: S(f) = 0 iff gcd(f, f') nonconstant.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let deg = 1 + (next() % 8) as usize;
            let mut coeffs: Vec<i64> = (0..deg).map(|_| (next() % 7) as i64 - 3).collect();
            coeffs.push(1 + (next() % 3) as i64);
            let f = Poly::from_i64(ctx, &coeffs);
            // force occasional multiple roots
            let f = if next() % 3 == 0 {
                &f * &Poly::from_i64(ctx, &[1, 2, 1]) // (x+1)^2
            } else {
                f
            };
            if f.degree().unwrap_or(0) == 0 {
                continue;
            }
            assert!(is_separable(&f).is_ok(), "criteria agree for {f}");
        }
    }

    #[test]
    fn series_sqrt_exact_polynomial_root() {
        let ctx = FieldCtx::rational();
        // f = (1+x)^2, branch 1, order 5 -> (1, 1, 0, 0, 0)
        let f = Poly::from_i64(ctx, &[1, 2, 1]);
        let s = series_sqrt(&f, &ctx.one(), 5).unwrap();
        let expect: Vec<FieldElement> = [1, 1, 0, 0, 0].iter().map(|&c| ctx.from_i64(c)).collect();
        assert_eq!(s.coeffs(), &expect[..]);
    }

    #[test]
    fn series_sqrt_one_plus_x() {
        let ctx = FieldCtx::rational();
        // sqrt(1+x) = 1 + x/2 - x^2/8 + x^3/16 - ...
        let f = Poly::from_i64(ctx, &[1, 1]);
        let s = series_sqrt(&f, &ctx.one(), 4).unwrap();
        assert_eq!(
            s.coeffs(),
            &[
                ctx.one(),
                ctx.from_ratio(1, 2),
                ctx.from_ratio(-1, 8),
                ctx.from_ratio(1, 16),
            ]
        );
    }

    #[test]
    fn series_sqrt_squares_back() {
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[4, 1, -3, 0, 2, 7]);
        let order = 12;
        let s = series_sqrt(&f, &ctx.from_i64(2), order).unwrap();
        let p = s.to_poly_prefix(order);
        let diff = &p.square() - &f;
        for i in 0..order {
            assert!(diff.coeff(i).is_zero(), "mismatch at x^{i}");
        }
    }

    #[test]
    fn series_sqrt_bad_branch() {
        let ctx = FieldCtx::rational();
        let f = Poly::from_i64(ctx, &[4, 1]);
        assert_eq!(
            series_sqrt(&f, &ctx.from_i64(3), 3),
            Err(PolyError::BadBranch)
        );
    }

    #[test]
    fn hankel_examples() {
        let ctx = FieldCtx::rational();
        // all-zero block
        let s = Series::new(ctx, vec![ctx.zero(); 6]);
        let spec = HankelSpec::new(1, 2, 2);
        assert_eq!(hankel_det(&s, spec).unwrap(), ctx.zero());
        assert!(hankel_rank_deficient(&s, spec).unwrap());
        // rows (1,2),(2,4) are proportional
        let s = Series::new(
            ctx,
            vec![ctx.from_i64(1), ctx.from_i64(2), ctx.from_i64(4)],
        );
        let spec = HankelSpec::new(0, 2, 2);
        assert_eq!(hankel_det(&s, spec).unwrap(), ctx.zero());
        assert!(hankel_rank_deficient(&s, spec).unwrap());
        // 1x1 nonzero block
        let s = Series::new(ctx, vec![ctx.from_i64(5)]);
        let spec = HankelSpec::new(0, 1, 1);
        assert_eq!(hankel_det(&s, spec).unwrap(), ctx.from_i64(5));
        assert!(!hankel_rank_deficient(&s, spec).unwrap());
    }

    #[test]
    fn hankel_agrees_with_cofactor_small() {
        let ctx = FieldCtx::rational();
        let vals: Vec<FieldElement> = (0..9).map(|i| ctx.from_i64([3, 1, 4, 1, 5, 9, 2, 6, 5][i])).collect();
        let s = Series::new(ctx, vals.clone());
        // 3x3 block starting at 0: entries a_{i+j}
        let det = hankel_det(&s, HankelSpec::new(0, 3, 3)).unwrap();
        // cofactor expansion by hand over the same entries
        let a = |i: usize| vals[i].clone();
        let m = |i: usize, j: usize| a(i + j);
        let cof = &(&m(0, 0) * &(&(&m(1, 1) * &m(2, 2)) - &(&m(1, 2) * &m(2, 1))))
            - &(&m(0, 1) * &(&(&m(1, 0) * &m(2, 2)) - &(&m(1, 2) * &m(2, 0))))
            + &(&m(0, 2) * &(&(&m(1, 0) * &m(2, 1)) - &(&m(1, 1) * &m(2, 0))));
        assert_eq!(det, cof);
    }

    #[test]
    fn insufficient_precision_reported() {
        let ctx = FieldCtx::rational();
        let s = Series::new(ctx, vec![ctx.one(); 3]);
        assert!(matches!(
            hankel_det(&s, HankelSpec::new(2, 2, 2)),
            Err(PolyError::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn shift_is_substitution() {
        let ctx = FieldCtx::rational();
        // f(x) = x^2 + 1, f(x + 3) = x^2 + 6x + 10
        let f = Poly::from_i64(ctx, &[1, 0, 1]);
        assert_eq!(f.shift(&ctx.from_i64(3)), Poly::from_i64(ctx, &[10, 6, 1]));
        // eval consistency on a quadratic-field constant
        let c = FieldCtx::quadratic(5);
        let g = Poly::from_i64(c, &[2, -1, 0, 4]);
        let a = c.sqrt_gen();
        let shifted = g.shift(&a);
        let x0 = c.from_i64(7);
        assert_eq!(shifted.eval(&x0), g.eval(&(&x0 + &a)));
    }
}
