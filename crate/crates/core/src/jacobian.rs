//! Degree-0 divisor classes supported away from q, in Mumford form (u, v):
//! semi-reduced/reduced predicates, Cantor reduction, the group law, scalar
//! multiples of point classes, and torsion-order detection.

use thiserror::Error;

use crate::curve::{AffinePoint, HyperellipticCurve};
use crate::poly::{poly_xgcd, series_sqrt, Poly, PolyError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum JacobianError {
    #[error("u is not monic")]
    UNotMonic,
    #[error("deg v must be smaller than deg u")]
    VDegreeTooLarge,
    #[error("u does not divide f - v^2")]
    MumfordConditionFailed,
    #[error("divisor is already reduced")]
    AlreadyReduced,
    #[error("scalar multiple of a point over infinity is undefined")]
    PointOverInfinity,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Mumford presentation (u, v) of a semi-reduced divisor class: u monic,
/// deg v < deg u (v = 0 when u = 1), and u | f - v^2. Represents the class of
/// (the divisor cut by u, v) minus (deg u) * q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MumfordDivisor {
    u: Poly,
    v: Poly,
}

impl MumfordDivisor {
    /// Checked constructor; every operation in this module routes its result
    /// through here, so the Mumford invariant is re-verified after each step.
    pub fn new(curve: &HyperellipticCurve, u: Poly, v: Poly) -> Result<Self, JacobianError> {
        if !u.is_monic() {
            return Err(JacobianError::UNotMonic);
        }
        let du = u.degree().unwrap();
        if !v.is_zero() && v.deg_or_zero() >= du {
            return Err(JacobianError::VDegreeTooLarge);
        }
        if du == 0 && !v.is_zero() {
            return Err(JacobianError::VDegreeTooLarge);
        }
        let defect = (curve.f() - &v.square()).rem(&u)?;
        if !defect.is_zero() {
            return Err(JacobianError::MumfordConditionFailed);
        }
        Ok(MumfordDivisor { u, v })
    }

    pub fn identity(curve: &HyperellipticCurve) -> Self {
        let ctx = curve.ctx();
        MumfordDivisor {
            u: Poly::one(ctx),
            v: Poly::zero(ctx),
        }
    }

    /// The class [p - q] of an affine point.
    pub fn from_point(curve: &HyperellipticCurve, p: &AffinePoint) -> Self {
        MumfordDivisor::new(curve, Poly::linear_root(p.x()), Poly::constant(p.y().clone()))
            .expect("a curve point always satisfies the Mumford conditions")
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn v(&self) -> &Poly {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    /// Degree of the effective part (deg u).
    pub fn degree(&self) -> usize {
        self.u.degree().unwrap()
    }
}

/// deg u <= gamma. Semi-reducedness is structural for any valid Mumford pair.
pub fn is_reduced(curve: &HyperellipticCurve, d: &MumfordDivisor) -> bool {
    d.degree() <= curve.gamma()
}

/// One step of Cantor reduction: u1 = (f - v^2)/u made monic, v1 = -v mod u1.
/// Strictly decreases deg u.
pub fn cantor_step(
    curve: &HyperellipticCurve,
    d: &MumfordDivisor,
) -> Result<MumfordDivisor, JacobianError> {
    if is_reduced(curve, d) {
        return Err(JacobianError::AlreadyReduced);
    }
    let u1 = (curve.f() - &d.v.square()).exact_div(&d.u)?.make_monic();
    let v1 = if u1.is_one() {
        Poly::zero(curve.ctx())
    } else {
        (-&d.v).rem(&u1)?
    };
    let next = MumfordDivisor::new(curve, u1, v1)?;
    debug_assert!(next.degree() < d.degree());
    Ok(next)
}

/// Full reduction, returning the reduced representative and the number of
/// Cantor steps taken.
pub fn reduce_counting(
    curve: &HyperellipticCurve,
    d: &MumfordDivisor,
) -> Result<(MumfordDivisor, usize), JacobianError> {
    let mut cur = d.clone();
    let mut steps = 0;
    while !is_reduced(curve, &cur) {
        cur = cantor_step(curve, &cur)?;
        steps += 1;
    }
    Ok((cur, steps))
}

pub fn reduce(
    curve: &HyperellipticCurve,
    d: &MumfordDivisor,
) -> Result<MumfordDivisor, JacobianError> {
    Ok(reduce_counting(curve, d)?.0)
}

/// Class negation: (u, -v mod u), realized by the hyperelliptic involution on
/// the support.
pub fn neg(curve: &HyperellipticCurve, d: &MumfordDivisor) -> MumfordDivisor {
    if d.is_identity() {
        return d.clone();
    }
    let v = (-&d.v).rem(&d.u).expect("u is nonzero");
    MumfordDivisor::new(curve, d.u.clone(), v).expect("negation preserves the Mumford conditions")
}

/// Group law: extended-gcd composition followed by Cantor reduction.
pub fn add(
    curve: &HyperellipticCurve,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
) -> Result<MumfordDivisor, JacobianError> {
    if d1.is_identity() {
        return Ok(d2.clone());
    }
    if d2.is_identity() {
        return Ok(d1.clone());
    }
    let (u1, v1) = (&d1.u, &d1.v);
    let (u2, v2) = (&d2.u, &d2.v);
    // d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2)
    let (d0, e1, e2) = poly_xgcd(u1, u2)?;
    let vsum = v1 + v2;
    let (d, c1, c2) = poly_xgcd(&d0, &vsum)?;
    let s1 = &c1 * &e1;
    let s2 = &c1 * &e2;
    let s3 = c2;
    let u = (u1 * u2).exact_div(&d.square())?;
    let cross = &(&(&s1 * u1) * v2) + &(&(&s2 * u2) * v1);
    let num = &cross + &(&s3 * &(&(v1 * v2) + curve.f()));
    let v = num.exact_div(&d)?.rem(&u)?;
    let composed = MumfordDivisor::new(curve, u, v)?;
    reduce(curve, &composed)
}

pub fn sub(
    curve: &HyperellipticCurve,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
) -> Result<MumfordDivisor, JacobianError> {
    add(curve, d1, &neg(curve, d2))
}

/// Reduced Mumford form of j * [p - q].
///
/// For f(a) != 0 this starts from the pair ((x-a)^j, v) with v the branch
/// series of sqrt(f) at a truncated mod (x-a)^j, then reduces. Weierstrass
/// points (where the branch is undefined) are routed through the group law.
pub fn scalar_mul_point(
    curve: &HyperellipticCurve,
    p: &AffinePoint,
    j: usize,
) -> Result<MumfordDivisor, JacobianError> {
    if j == 0 {
        return Ok(MumfordDivisor::identity(curve));
    }
    if j == 1 {
        return Ok(MumfordDivisor::from_point(curve, p));
    }
    if p.is_weierstrass() {
        let base = MumfordDivisor::from_point(curve, p);
        let mut acc = MumfordDivisor::identity(curve);
        for _ in 0..j {
            acc = add(curve, &acc, &base)?;
        }
        return Ok(acc);
    }
    let shifted = curve.f().shift(p.x());
    let series = series_sqrt(&shifted, p.y(), j)?;
    let v_local = series.to_poly_prefix(j);
    let neg_a = -p.x();
    let v = v_local.shift(&neg_a);
    let u = power_of_linear(p.x(), j);
    let d = MumfordDivisor::new(curve, u, v)?;
    reduce(curve, &d)
}

fn power_of_linear(a: &crate::field::FieldElement, j: usize) -> Poly {
    let lin = Poly::linear_root(a);
    let mut acc = Poly::one(a.ctx());
    for _ in 0..j {
        acc = &acc * &lin;
    }
    acc
}

/// Result of a torsion-order search up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionResult {
    Order(usize),
    NonTorsionUpTo(usize),
}

impl TorsionResult {
    pub fn order(&self) -> Option<usize> {
        match self {
            TorsionResult::Order(n) => Some(*n),
            TorsionResult::NonTorsionUpTo(_) => None,
        }
    }
}

/// Least j <= max_n with j * [p - q] = 0. Orders in {3, ..., 2*gamma} cannot
/// occur for point classes, so only j = 2 and j >= 2*gamma + 1 are tested.
pub fn torsion_order(
    curve: &HyperellipticCurve,
    p: &AffinePoint,
    max_n: usize,
) -> Result<TorsionResult, JacobianError> {
    let base = MumfordDivisor::from_point(curve, p);
    let mut acc = base.clone();
    for j in 2..=max_n {
        acc = add(curve, &acc, &base)?;
        let candidate = j == 2 || j >= 2 * curve.gamma() + 1;
        if acc.is_identity() {
            debug_assert!(candidate, "torsion order {j} inside the excluded range");
            if candidate {
                return Ok(TorsionResult::Order(j));
            }
        }
    }
    Ok(TorsionResult::NonTorsionUpTo(max_n))
}
