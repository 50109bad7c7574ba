//! Exact 2x2 boost kinematics in the (z, t) plane.
//!
//! Natural units with c = 1 throughout. A boost with rapidity `eta` acts on
//! (z, t) through a symmetric hyperbolic matrix; in light-cone coordinates
//! u = (z + t)/sqrt(2), v = (z - t)/sqrt(2) the same boost is the diagonal
//! squeeze (u, v) -> (e^{eta/2} u, e^{-eta/2} v), so the product u*v is
//! invariant. All operations here are pure functions over immutable values.

use crate::error::{Error, Result};

/// Default bound on |eta|. Keeps e^{+-eta} small enough that the quadrature
/// in downstream modules stays well-conditioned.
pub const ETA_MAX: f64 = 10.0;

/// Additive boost parameter (velocity beta = tanh eta).
///
/// Construction is the single validation gate: a `Rapidity` is always finite
/// and within the configured bound, so boost operations are total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rapidity(f64);

impl Rapidity {
    /// Validates against the default bound [`ETA_MAX`].
    pub fn new(eta: f64) -> Result<Self> {
        Self::bounded(eta, ETA_MAX)
    }

    /// Validates against a caller-supplied bound.
    pub fn bounded(eta: f64, max: f64) -> Result<Self> {
        if eta.is_finite() && eta.abs() <= max {
            Ok(Rapidity(eta))
        } else {
            Err(Error::RapidityOutOfRange { eta, max })
        }
    }

    /// The rest frame, eta = 0.
    pub fn zero() -> Self {
        Rapidity(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn negate(self) -> Self {
        Rapidity(-self.0)
    }
}

/// Event coordinates (z, t) in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceTimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpaceTimePoint {
    pub fn new(z: f64, t: f64) -> Self {
        SpaceTimePoint { z, t }
    }

    pub fn is_finite(&self) -> bool {
        self.z.is_finite() && self.t.is_finite()
    }

    /// Half the quadratic invariant, (z^2 - t^2)/2. Equals u*v.
    pub fn half_interval(&self) -> f64 {
        0.5 * (self.z * self.z - self.t * self.t)
    }
}

/// Light-cone coordinates u = (z + t)/sqrt(2), v = (z - t)/sqrt(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub fn new(u: f64, v: f64) -> Self {
        LightConePoint { u, v }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }

    /// The boost invariant u*v = (z^2 - t^2)/2.
    pub fn invariant_product(&self) -> f64 {
        self.u * self.v
    }
}

/// Symmetric 2x2 boost matrix [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostMatrix {
    pub m00: f64,
    pub m01: f64,
    pub m10: f64,
    pub m11: f64,
}

impl BoostMatrix {
    pub fn determinant(&self) -> f64 {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn apply(&self, p: SpaceTimePoint) -> SpaceTimePoint {
        SpaceTimePoint {
            z: self.m00 * p.z + self.m01 * p.t,
            t: self.m10 * p.z + self.m11 * p.t,
        }
    }

    /// Matrix product self * other (composition of boosts).
    pub fn compose(&self, other: &BoostMatrix) -> BoostMatrix {
        BoostMatrix {
            m00: self.m00 * other.m00 + self.m01 * other.m10,
            m01: self.m00 * other.m01 + self.m01 * other.m11,
            m10: self.m10 * other.m00 + self.m11 * other.m10,
            m11: self.m10 * other.m01 + self.m11 * other.m11,
        }
    }
}

/// Four spacetime components in natural units, boost axis along z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl FourVector {
    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector { x, y, z, t }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite() && self.t.is_finite()
    }
}

/// The boost matrix for rapidity eta.
pub fn boost_matrix(eta: Rapidity) -> BoostMatrix {
    let half = 0.5 * eta.value();
    let c = half.cosh();
    let s = half.sinh();
    BoostMatrix {
        m00: c,
        m01: s,
        m10: s,
        m11: c,
    }
}

/// Boosts a (z, t) point: (z', t') = boost_matrix(eta) * (z, t).
pub fn boost_point(eta: Rapidity, p: SpaceTimePoint) -> SpaceTimePoint {
    boost_matrix(eta).apply(p)
}

/// (z, t) -> (u, v) with u = (z + t)/sqrt(2), v = (z - t)/sqrt(2).
pub fn to_lightcone(p: SpaceTimePoint) -> LightConePoint {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    LightConePoint {
        u: (p.z + p.t) * inv_sqrt2,
        v: (p.z - p.t) * inv_sqrt2,
    }
}

/// Inverse of [`to_lightcone`]: z = (u + v)/sqrt(2), t = (u - v)/sqrt(2).
pub fn from_lightcone(q: LightConePoint) -> SpaceTimePoint {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    SpaceTimePoint {
        z: (q.u + q.v) * inv_sqrt2,
        t: (q.u - q.v) * inv_sqrt2,
    }
}

/// The boost as a squeeze: (u', v') = (e^{eta/2} u, e^{-eta/2} v).
pub fn boost_lightcone(eta: Rapidity, q: LightConePoint) -> LightConePoint {
    let half = 0.5 * eta.value();
    LightConePoint {
        u: half.exp() * q.u,
        v: (-half).exp() * q.v,
    }
}

/// Center and separation coordinates of a two-constituent bound state:
/// X = (x_a + x_b)/2, x = (x_a - x_b)/(2 sqrt(2)).
///
/// The normalization is asymmetric on purpose; the inverse map
/// [`hadron_constituents`] carries the resulting sqrt(2) factors.
pub fn hadron_coordinates(xa: FourVector, xb: FourVector) -> (FourVector, FourVector) {
    let sep = 0.5 / std::f64::consts::SQRT_2;
    let center = FourVector {
        x: 0.5 * (xa.x + xb.x),
        y: 0.5 * (xa.y + xb.y),
        z: 0.5 * (xa.z + xb.z),
        t: 0.5 * (xa.t + xb.t),
    };
    let separation = FourVector {
        x: sep * (xa.x - xb.x),
        y: sep * (xa.y - xb.y),
        z: sep * (xa.z - xb.z),
        t: sep * (xa.t - xb.t),
    };
    (center, separation)
}

/// Inverse of [`hadron_coordinates`]: x_a = X + sqrt(2) x, x_b = X - sqrt(2) x.
pub fn hadron_constituents(center: FourVector, separation: FourVector) -> (FourVector, FourVector) {
    let s = std::f64::consts::SQRT_2;
    let xa = FourVector {
        x: center.x + s * separation.x,
        y: center.y + s * separation.y,
        z: center.z + s * separation.z,
        t: center.t + s * separation.t,
    };
    let xb = FourVector {
        x: center.x - s * separation.x,
        y: center.y - s * separation.y,
        z: center.z - s * separation.z,
        t: center.t - s * separation.t,
    };
    (xa, xb)
}
