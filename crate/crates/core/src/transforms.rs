//! Reflections and rotations.
//!
//! Rotations are carried by unit quaternions, the even multivectors
//! `q0 + q12 e12 + q23 e23 + q13 e13`, and act by the sandwich `q m q~`.
//! The Cayley–Klein pair `(alpha, beta)` is the one for which
//! `q = alpha P3 + beta (e1 P3) - beta* (e1 N3) + alpha* N3`, i.e. the
//! matrix image of `q` is `[[alpha, -beta*], [beta, alpha*]]`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Blade, Multivector};
use crate::clusters::{n, p, structure_element, Label};
use crate::error::{Error, Result};

/// Allowed deviation of `|q|^2` (and mirror norms) from one.
pub const UNIT_TOLERANCE: f64 = 1e-12;
/// Allowed deviation of `|c|^2` from one for rotation axes.
pub const AXIS_TOLERANCE: f64 = 1e-9;

/// Even multivector: only grades 0 and 2 populated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Multivector", into = "Multivector")]
pub struct Quaternion(Multivector);

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion(Multivector::ONE);

    pub fn new(m: Multivector) -> Result<Self> {
        if !m.odd_part().is_zero() {
            return Err(Error::NotEven);
        }
        Ok(Quaternion(m))
    }

    pub fn from_parts(q0: f64, q12: f64, q23: f64, q13: f64) -> Self {
        Quaternion(Multivector::from_terms(&[
            (q0, Blade::E0),
            (q12, Blade::E12),
            (q23, Blade::E23),
            (q13, Blade::E13),
        ]))
    }

    pub fn value(&self) -> Multivector {
        self.0
    }

    pub fn norm_squared(&self) -> f64 {
        self.0.norm_squared()
    }

    pub fn is_unit(&self) -> bool {
        (self.norm_squared() - 1.0).abs() <= UNIT_TOLERANCE
    }

    pub fn ensure_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NonUnitQuaternion {
                norm_sq: self.norm_squared(),
            })
        }
    }

    pub fn reversion(&self) -> Quaternion {
        Quaternion(self.0.reversion())
    }

    pub fn normalized(&self) -> Quaternion {
        Quaternion(self.0 / self.0.norm())
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(-self.0)
    }
}

impl TryFrom<Multivector> for Quaternion {
    type Error = Error;
    fn try_from(m: Multivector) -> Result<Self> {
        Quaternion::new(m)
    }
}

impl From<Quaternion> for Multivector {
    fn from(q: Quaternion) -> Multivector {
        q.0
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CayleyKlein {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl CayleyKlein {
    /// `alpha alpha* + beta beta*`.
    pub fn norm_sqr(&self) -> f64 {
        self.alpha.norm_sqr() + self.beta.norm_sqr()
    }

    /// Reassembles `alpha P3 + beta (e1 P3) - beta* (e1 N3) + alpha* N3`.
    pub fn to_quaternion(&self) -> Quaternion {
        let e1 = Multivector::basis(Blade::E1);
        let z = Multivector::from_complex;
        let m = z(self.alpha) * p(3) + z(self.beta) * (e1 * p(3))
            - z(self.beta.conj()) * (e1 * n(3))
            + z(self.alpha.conj()) * n(3);
        Quaternion(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerRodrigues {
    pub rho: f64,
    pub nu: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl EulerRodrigues {
    pub fn norm_sqr(&self) -> f64 {
        self.rho * self.rho + self.nu * self.nu + self.mu * self.mu + self.lambda * self.lambda
    }

    /// `alpha = rho - i nu`, `beta = -i (mu + i lambda)`.
    pub fn to_cayley_klein(&self) -> CayleyKlein {
        let i = Complex64::i();
        CayleyKlein {
            alpha: Complex64::new(self.rho, -self.nu),
            beta: -i * Complex64::new(self.mu, self.lambda),
        }
    }
}

/// Rotation axis and angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisAngle {
    pub axis: [f64; 3],
    pub theta: f64,
}

impl AxisAngle {
    pub fn new(axis: [f64; 3], theta: f64) -> Self {
        AxisAngle { axis, theta }
    }

    pub fn axis_vector(&self) -> Multivector {
        let [c1, c2, c3] = self.axis;
        Multivector::vector(c1, c2, c3)
    }
}

/// `cos(theta/2) - sin(theta/2) e123 c`: anticlockwise rotation about `c`.
pub fn quaternion_from_axis_angle(aa: &AxisAngle) -> Result<Quaternion> {
    let c = aa.axis_vector();
    let norm_sq = c.norm_squared();
    if (norm_sq - 1.0).abs() > AXIS_TOLERANCE {
        return Err(Error::NonUnitAxis { norm_sq });
    }
    let half = aa.theta / 2.0;
    let m = Multivector::scalar(half.cos()) - (Multivector::I * c) * half.sin();
    Quaternion::new(m)
}

/// Reads `(alpha, beta)` off the positive spinor: `P3 q P3 = alpha P3` and
/// `P3 e1 q P3 = beta P3`.
pub fn cayley_klein(q: &Quaternion) -> Result<CayleyKlein> {
    q.ensure_unit()?;
    let e1 = Multivector::basis(Blade::E1);
    let coefficient =
        |m: Multivector| Complex64::new(2.0 * m.get(Blade::E0), 2.0 * m.get(Blade::E123));
    Ok(CayleyKlein {
        alpha: coefficient(p(3) * q.0 * p(3)),
        beta: coefficient(p(3) * e1 * q.0 * p(3)),
    })
}

pub fn euler_rodrigues(q: &Quaternion) -> Result<EulerRodrigues> {
    let ck = cayley_klein(q)?;
    Ok(EulerRodrigues {
        rho: ck.alpha.re,
        nu: -ck.alpha.im,
        mu: -ck.beta.im,
        lambda: ck.beta.re,
    })
}

/// `q m q~`.
pub fn rotate(m: &Multivector, q: &Quaternion) -> Result<Multivector> {
    q.ensure_unit()?;
    Ok(q.0 * *m * q.0.reversion())
}

/// The rotation that applies `second` first and then `first`.
pub fn compose(first: &Quaternion, second: &Quaternion) -> Result<Quaternion> {
    first.ensure_unit()?;
    second.ensure_unit()?;
    Quaternion::new(first.0 * second.0)
}

/// Reflection in the origin: odd grades change sign.
pub fn reflect_point(m: &Multivector) -> Multivector {
    m.grade_involution()
}

fn check_mirror(mirror: &Multivector, grade: u8, expected: &'static str) -> Result<()> {
    let ok = mirror.off_grade_mass(grade) <= UNIT_TOLERANCE
        && (mirror.norm_squared() - 1.0).abs() <= UNIT_TOLERANCE;
    if ok {
        Ok(())
    } else {
        Err(Error::BadMirror { expected })
    }
}

/// `n m n` for a unit vector `n`: components along the line are kept.
pub fn reflect_line(m: &Multivector, axis: &Multivector) -> Result<Multivector> {
    check_mirror(axis, 1, "vector")?;
    Ok(*axis * *m * *axis)
}

/// Reflection in the plane of a unit bivector `B`: `B m^ B~`, which is
/// `n m^ n` for the plane normal `n`. Only the normal component of a
/// vector changes sign.
pub fn reflect_plane(m: &Multivector, plane: &Multivector) -> Result<Multivector> {
    check_mirror(plane, 2, "bivector")?;
    Ok(*plane * m.grade_involution() * plane.reversion())
}

/// A mirror: the origin, a line through it, or a plane through it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reflection {
    Point,
    Line(Multivector),
    Plane(Multivector),
}

impl Reflection {
    pub fn apply(&self, m: &Multivector) -> Result<Multivector> {
        match self {
            Reflection::Point => Ok(reflect_point(m)),
            Reflection::Line(a) => reflect_line(m, a),
            Reflection::Plane(b) => reflect_plane(m, b),
        }
    }

    fn is_basis(&self) -> bool {
        let single = |m: &Multivector| {
            let nonzero: Vec<f64> = m.terms().map(|(_, c)| c).filter(|c| *c != 0.0).collect();
            nonzero.len() == 1 && nonzero[0].abs() == 1.0
        };
        match self {
            Reflection::Point => true,
            Reflection::Line(a) => single(a),
            Reflection::Plane(b) => single(b),
        }
    }
}

impl FromStr for Reflection {
    type Err = Error;

    /// `point`, a basis vector name, or a basis bivector name.
    fn from_str(s: &str) -> Result<Self> {
        if s == "point" {
            return Ok(Reflection::Point);
        }
        let blade: Blade = s.parse()?;
        match blade.grade() {
            1 => Ok(Reflection::Line(blade.into())),
            2 => Ok(Reflection::Plane(blade.into())),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Signed permutation of the structure-element labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelPermutation {
    images: [(Label, f64); 8],
}

impl LabelPermutation {
    pub fn identity() -> Self {
        LabelPermutation {
            images: Label::ALL.map(|l| (l, 1.0)),
        }
    }

    pub fn image(&self, label: Label) -> (Label, f64) {
        self.images[label.position()]
    }

    /// Apply `self` after `before`.
    pub fn after(&self, before: &LabelPermutation) -> LabelPermutation {
        LabelPermutation {
            images: Label::ALL.map(|l| {
                let (mid, s1) = before.image(l);
                let (out, s2) = self.image(mid);
                (out, s1 * s2)
            }),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == LabelPermutation::identity()
    }
}

/// The relabelling of structure elements realised by a basis mirror,
/// found by reflecting each element's value.
pub fn structure_permutation(op: &Reflection) -> Result<LabelPermutation> {
    if !op.is_basis() {
        return Err(Error::NonBasisMirror);
    }
    let mut images = [(Label::A, 0.0); 8];
    for l in Label::ALL {
        let r = op.apply(&structure_element(l))?;
        images[l.position()] = Label::ALL
            .into_iter()
            .find_map(|t| {
                let s = structure_element(t);
                if r == s {
                    Some((t, 1.0))
                } else if r == -s {
                    Some((t, -1.0))
                } else {
                    None
                }
            })
            .ok_or(Error::NonBasisMirror)?;
    }
    Ok(LabelPermutation { images })
}
