//! Odd hyperelliptic curves y^2 = f(x) with the marked Weierstrass point q at
//! infinity. The point q is never materialized: divisors account for it
//! through degree bookkeeping.

use thiserror::Error;

use crate::field::{FieldCtx, FieldElement};
use crate::poly::{is_separable, Poly, PolyError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CurveError {
    #[error("f is not monic")]
    NotMonic,
    #[error("deg f = {got}, expected {expected}")]
    WrongDegree { expected: usize, got: usize },
    #[error("f is inseparable")]
    Inseparable,
    #[error("point ({x}, {y}) is not on the curve")]
    PointNotOnCurve { x: String, y: String },
    #[error("degree mismatch after completing the square")]
    DegreeMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// y^2 = f(x) with f monic separable of degree 2*gamma + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticCurve {
    gamma: usize,
    f: Poly,
}

impl HyperellipticCurve {
    pub fn new(gamma: usize, f: Poly) -> Result<Self, CurveError> {
        assert!(gamma >= 1, "gamma must be at least 1");
        let expected = 2 * gamma + 1;
        match f.degree() {
            Some(d) if d == expected => {}
            d => {
                return Err(CurveError::WrongDegree {
                    expected,
                    got: d.unwrap_or(0),
                })
            }
        }
        if !f.is_monic() {
            return Err(CurveError::NotMonic);
        }
        if !is_separable(&f)? {
            return Err(CurveError::Inseparable);
        }
        Ok(HyperellipticCurve { gamma, f })
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn ctx(&self) -> FieldCtx {
        self.f.ctx()
    }

    pub fn contains(&self, x: &FieldElement, y: &FieldElement) -> bool {
        y.square() == self.f.eval(x)
    }

    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<AffinePoint, CurveError> {
        AffinePoint::new(self, x, y)
    }

    /// The same curve with x translated so that `a` moves to the origin
    /// (substitutes x -> x + a).
    pub fn translated(&self, a: &FieldElement) -> Result<HyperellipticCurve, CurveError> {
        HyperellipticCurve::new(self.gamma, self.f.shift(a))
    }

    /// (x, y) -> (x, -y); fixes exactly the affine Weierstrass points.
    pub fn involution(&self, p: &AffinePoint) -> AffinePoint {
        AffinePoint {
            x: p.x.clone(),
            y: -&p.y,
        }
    }
}

/// Checked affine point; y^2 = f(x) holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePoint {
    x: FieldElement,
    y: FieldElement,
}

impl AffinePoint {
    pub fn new(
        curve: &HyperellipticCurve,
        x: FieldElement,
        y: FieldElement,
    ) -> Result<Self, CurveError> {
        if !curve.contains(&x, &y) {
            return Err(CurveError::PointNotOnCurve {
                x: x.to_string(),
                y: y.to_string(),
            });
        }
        Ok(AffinePoint { x, y })
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }

    pub fn is_weierstrass(&self) -> bool {
        self.y.is_zero()
    }
}

/// Affine substitution produced by completing the square: maps points of
/// y^2 + h(x) y = F(x) to points of the standard model Y^2 = F + h^2/4.
#[derive(Debug, Clone)]
pub struct SquareCompletion {
    h_half: Poly,
}

impl SquareCompletion {
    /// Image of an old-model point (x, y): (x, y + h(x)/2).
    pub fn map(&self, x: &FieldElement, y: &FieldElement) -> (FieldElement, FieldElement) {
        let ny = y + &self.h_half.eval(x);
        (x.clone(), ny)
    }
}

/// Converts y^2 + h(x) y = F(x) to standard odd form by the substitution
/// Y = y + h/2, yielding Y^2 = F + h^2/4.
pub fn from_h_form(
    gamma: usize,
    h: &Poly,
    big_f: &Poly,
) -> Result<(HyperellipticCurve, SquareCompletion), CurveError> {
    let ctx = big_f.ctx();
    let quarter = ctx.from_ratio(1, 4);
    let f = big_f + &h.square().scale(&quarter);
    let expected = 2 * gamma + 1;
    if f.degree() != Some(expected) {
        return Err(CurveError::DegreeMismatch);
    }
    let curve = HyperellipticCurve::new(gamma, f)?;
    let half = ctx.from_ratio(1, 2);
    Ok((
        curve,
        SquareCompletion {
            h_half: h.scale(&half),
        },
    ))
}
