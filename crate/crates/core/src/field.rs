//! Exact scalar arithmetic over Q and a single quadratic extension Q(sqrt(d)).
//!
//! Every scalar in the library is a [`FieldElement`] `a + b*sqrt(d)` with
//! `a, b` arbitrary-precision rationals kept in lowest terms. A context with
//! `d = 0` is plain Q (and then `b = 0` is enforced).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field context mismatch: Q(sqrt({0})) vs Q(sqrt({1}))")]
    CtxMismatch(i64, i64),
    #[error("{0} has no square root in the ambient field")]
    NoSquareRoot(String),
    #[error("invalid field context d = {0}: must be squarefree and != 1")]
    InvalidCtx(i64),
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
}

/// The ambient field: Q when `d == 0`, otherwise Q(sqrt(d)) with `d`
/// squarefree and different from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: i64,
}

impl FieldCtx {
    pub const RATIONAL: FieldCtx = FieldCtx { d: 0 };

    pub fn new(d: i64) -> Result<Self, FieldError> {
        if d == 1 || (d != 0 && !is_squarefree(d)) {
            return Err(FieldError::InvalidCtx(d));
        }
        Ok(FieldCtx { d })
    }

    pub fn rational() -> Self {
        Self::RATIONAL
    }

    /// Q(sqrt(d)); panics on a non-squarefree or trivial `d`. Use
    /// [`FieldCtx::new`] for fallible construction.
    pub fn quadratic(d: i64) -> Self {
        Self::new(d).expect("invalid quadratic context")
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_rational(*self, BigRational::zero())
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::from_rational(*self, BigRational::one())
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        FieldElement::from_rational(*self, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(&self, p: i64, q: i64) -> FieldElement {
        assert!(q != 0, "zero denominator");
        FieldElement::from_rational(
            *self,
            BigRational::new(BigInt::from(p), BigInt::from(q)),
        )
    }

    /// The generator sqrt(d) itself; panics over plain Q.
    pub fn sqrt_gen(&self) -> FieldElement {
        assert!(self.d != 0, "sqrt generator requested over Q");
        FieldElement::new(*self, BigRational::zero(), BigRational::one())
    }
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// An element `a + b*sqrt(d)` of the ambient [`FieldCtx`]. Rationals are kept
/// in lowest terms with positive denominator (num-rational canonicalizes);
/// equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    ctx: FieldCtx,
    a: BigRational,
    b: BigRational,
}

impl FieldElement {
    pub fn new(ctx: FieldCtx, a: BigRational, b: BigRational) -> Self {
        assert!(
            !(ctx.is_rational() && !b.is_zero()),
            "nonzero sqrt part over plain Q"
        );
        FieldElement { ctx, a, b }
    }

    pub fn from_rational(ctx: FieldCtx, a: BigRational) -> Self {
        FieldElement {
            ctx,
            a,
            b: BigRational::zero(),
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rational value of a `b == 0` element; panics otherwise.
    pub fn as_rational(&self) -> &BigRational {
        assert!(self.b.is_zero(), "element has a sqrt part");
        &self.a
    }

    fn check_ctx(&self, other: &Self) -> Result<(), FieldError> {
        if self.ctx != other.ctx {
            return Err(FieldError::CtxMismatch(self.ctx.d, other.ctx.d));
        }
        Ok(())
    }

    fn assert_ctx(&self, other: &Self) {
        if self.ctx != other.ctx {
            panic!(
                "field context mismatch: Q(sqrt({})) vs Q(sqrt({}))",
                self.ctx.d, other.ctx.d
            );
        }
    }

    pub fn conjugate(&self) -> Self {
        FieldElement {
            ctx: self.ctx,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a^2 - d*b^2, a rational.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.ctx.d));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero(), "nonzero element with zero norm");
        let conj = self.conjugate();
        Ok(FieldElement {
            ctx: self.ctx,
            a: conj.a / &n,
            b: conj.b / &n,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_ctx(other)?;
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact square root in the ambient field, if one exists. The branch is
    /// deterministic: positive rational part, ties broken by positive sqrt
    /// part.
    pub fn sqrt_exact(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Ok(self.ctx.zero());
        }
        let no_root = || FieldError::NoSquareRoot(self.to_string());
        if self.b.is_zero() {
            // Either sqrt(a) is rational or a = d * t^2 for rational t.
            if let Some(r) = rational_sqrt(&self.a) {
                return Ok(Self::canonical_branch(FieldElement::from_rational(
                    self.ctx, r,
                )));
            }
            if !self.ctx.is_rational() {
                let d = BigRational::from_integer(BigInt::from(self.ctx.d));
                if let Some(t) = rational_sqrt(&(&self.a / &d)) {
                    return Ok(Self::canonical_branch(FieldElement::new(
                        self.ctx,
                        BigRational::zero(),
                        t,
                    )));
                }
            }
            return Err(no_root());
        }
        // (u + v sqrt(d))^2 = a + b sqrt(d) forces u^2 = (a +- s)/2 with
        // s = sqrt(a^2 - d b^2) rational, and v = b/(2u).
        let s = rational_sqrt(&self.norm()).ok_or_else(no_root)?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&two * &u);
                let root = FieldElement::new(self.ctx, u, v);
                debug_assert_eq!(root.square(), *self);
                return Ok(Self::canonical_branch(root));
            }
        }
        Err(no_root())
    }

    fn canonical_branch(root: FieldElement) -> FieldElement {
        let positive = if !root.a.is_zero() {
            root.a.is_positive()
        } else {
            root.b.is_positive() || root.b.is_zero()
        };
        if positive {
            root
        } else {
            -&root
        }
    }
}

/// sqrt of a nonnegative rational, when it is again rational.
fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let p = x.numer().sqrt();
    let q = x.denom().sqrt();
    if &(&p * &p) == x.numer() && &(&q * &q) == x.denom() {
        Some(BigRational::new(p, q))
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_ctx(rhs);
        FieldElement {
            ctx: self.ctx,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}
forward_binop!(Add, add);

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_ctx(rhs);
        FieldElement {
            ctx: self.ctx,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}
forward_binop!(Sub, sub);

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_ctx(rhs);
        let d = BigRational::from_integer(BigInt::from(self.ctx.d));
        FieldElement {
            ctx: self.ctx,
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}
forward_binop!(Mul, mul);

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.assert_ctx(rhs);
        self.checked_div(rhs).expect("division by zero")
    }
}
forward_binop!(Div, div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            ctx: self.ctx,
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Textual form used by all JSON I/O: `p/q` (or `p` for integers) and
/// `p/q+r/s*sqrt(d)` / `p/q-r/s*sqrt(d)` when the sqrt part is nonzero.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt({})", self.a, sign, self.b.abs(), self.ctx.d)
    }
}

impl FieldElement {
    /// Parses the textual form accepted by [`fmt::Display`]; the ambient
    /// context is supplied by the caller and checked against any `sqrt(d)`
    /// occurring in the string.
    pub fn parse(ctx: FieldCtx, s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let err = || FieldError::Parse(s.to_string());
        if let Some(idx) = s.find("*sqrt(") {
            let close = s.rfind(')').ok_or_else(err)?;
            let d: i64 = s[idx + 6..close].parse().map_err(|_| err())?;
            if d != ctx.d {
                return Err(FieldError::CtxMismatch(ctx.d, d));
            }
            let head = &s[..idx];
            // Split the rational part from the sqrt coefficient: scan for a
            // sign that is not a leading sign and not inside a fraction.
            let bytes = head.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                    split = Some(i);
                    break;
                }
            }
            let (a_str, b_str, b_sign) = match split {
                Some(i) => (&head[..i], &head[i + 1..], if bytes[i] == b'-' { -1 } else { 1 }),
                None => ("0", head, 1),
            };
            let a = parse_rational(a_str).ok_or_else(err)?;
            let b = parse_rational(b_str).ok_or_else(err)?;
            let b = if b_sign < 0 { -b } else { b };
            Ok(FieldElement::new(ctx, a, b))
        } else {
            let a = parse_rational(s).ok_or_else(err)?;
            Ok(FieldElement::from_rational(ctx, a))
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

/// Squarefree decomposition `n = d * k^2` of a nonzero rational: returns
/// `(d, k)` with `d` a squarefree integer carrying the sign of `n`. Used to
/// pick the quadratic context in which sqrt(n) exists: sqrt(n) = k*sqrt(d).
pub fn squarefree_decomposition(n: &BigRational) -> Option<(i64, BigRational)> {
    if n.is_zero() {
        return None;
    }
    // n = p/q = (p*q)/q^2, so the squarefree part of n is that of p*q.
    let m = n.numer() * n.denom();
    let (d, k) = squarefree_part_int(&m)?;
    let k = BigRational::new(k, n.denom().abs());
    Some((d, k))
}

fn squarefree_part_int(m: &BigInt) -> Option<(i64, BigInt)> {
    let mut rest = m.abs();
    let mut sqfree = BigInt::one();
    let mut square = BigInt::one();
    let mut p = BigInt::from(2);
    // Trial division; desk-scale inputs only.
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= rest {
        if &p > &limit {
            return None;
        }
        if (&rest % &p).is_zero() {
            let mut e = 0u32;
            while (&rest % &p).is_zero() {
                rest /= &p;
                e += 1;
            }
            if e % 2 == 1 {
                sqfree *= &p;
            }
            for _ in 0..e / 2 {
                square *= &p;
            }
        }
        p += 1;
    }
    sqfree *= &rest; // leftover prime
    let sign = if m.is_negative() { -1 } else { 1 };
    let d: i64 = i64::try_from(&sqfree).ok()?;
    Some((sign * d, square))
}
