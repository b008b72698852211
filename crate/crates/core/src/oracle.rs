//! 2x2 complex matrix representation of G(3,0).
//!
//! The map sends `e1, e2, e3` to the Pauli matrices and is extended to the
//! other blades by multiplying generator images in ascending index order.
//! It never consults the multivector product table, which is what makes it
//! usable as an independent check on the rest of the crate.

use std::ops::{Add, Mul, Sub};
use std::sync::LazyLock;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Blade, Multivector};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Row-major 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl ComplexMatrix2 {
    pub const fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        ComplexMatrix2 { m11, m12, m21, m22 }
    }

    pub const IDENTITY: ComplexMatrix2 = ComplexMatrix2::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: ComplexMatrix2 = ComplexMatrix2::new(ZERO, ZERO, ZERO, ZERO);

    pub fn entries(&self) -> [Complex64; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn scale(&self, z: Complex64) -> ComplexMatrix2 {
        ComplexMatrix2::new(self.m11 * z, self.m12 * z, self.m21 * z, self.m22 * z)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix2 {
        ComplexMatrix2::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        )
    }

    pub fn trace(&self) -> Complex64 {
        self.m11 + self.m22
    }

    pub fn determinant(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix2) -> f64 {
        (*self - *other)
            .entries()
            .iter()
            .fold(0.0, |acc, z| acc.max(z.norm()))
    }

    pub fn approx_eq(&self, other: &ComplexMatrix2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn add(self, r: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2::new(
            self.m11 + r.m11,
            self.m12 + r.m12,
            self.m21 + r.m21,
            self.m22 + r.m22,
        )
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn sub(self, r: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2::new(
            self.m11 - r.m11,
            self.m12 - r.m12,
            self.m21 - r.m21,
            self.m22 - r.m22,
        )
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;
    fn mul(self, r: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2::new(
            self.m11 * r.m11 + self.m12 * r.m21,
            self.m11 * r.m12 + self.m12 * r.m22,
            self.m21 * r.m11 + self.m22 * r.m21,
            self.m21 * r.m12 + self.m22 * r.m22,
        )
    }
}

/// Images of `e1, e2, e3`.
pub const GENERATORS: [ComplexMatrix2; 3] = [
    ComplexMatrix2::new(ZERO, ONE, ONE, ZERO),
    ComplexMatrix2::new(ZERO, Complex64::new(0.0, -1.0), I, ZERO),
    ComplexMatrix2::new(ONE, ZERO, ZERO, Complex64::new(-1.0, 0.0)),
];

static BLADE_IMAGES: LazyLock<[ComplexMatrix2; 8]> = LazyLock::new(|| {
    Blade::ALL.map(|b| {
        b.indices()
            .into_iter()
            .fold(ComplexMatrix2::IDENTITY, |acc, k| {
                acc * GENERATORS[k as usize - 1]
            })
    })
});

/// Matrix image of a single blade.
pub fn blade_matrix(b: Blade) -> ComplexMatrix2 {
    BLADE_IMAGES[b.position()]
}

pub fn to_matrix(m: &Multivector) -> ComplexMatrix2 {
    m.terms().fold(ComplexMatrix2::ZERO, |acc, (b, c)| {
        acc + blade_matrix(b).scale(Complex64::new(c, 0.0))
    })
}

/// Inverse of [`to_matrix`]. The blade images are orthonormal under
/// `<X, Y> = Re tr(X^† Y) / 2`, so each coefficient is one projection.
pub fn from_matrix(x: &ComplexMatrix2) -> Multivector {
    let mut out = Multivector::ZERO;
    for b in Blade::ALL {
        let c = (blade_matrix(b).adjoint() * *x).trace().re / 2.0;
        out.set(b, c);
    }
    out
}

pub fn adjoint(x: &ComplexMatrix2) -> ComplexMatrix2 {
    x.adjoint()
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepr {
    m11: [f64; 2],
    m12: [f64; 2],
    m21: [f64; 2],
    m22: [f64; 2],
}

impl Serialize for ComplexMatrix2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            m11: pair(self.m11),
            m12: pair(self.m12),
            m21: pair(self.m21),
            m22: pair(self.m22),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(deserializer)?;
        let m = ComplexMatrix2::new(unpair(r.m11), unpair(r.m12), unpair(r.m21), unpair(r.m22));
        if m.entries().iter().any(|z| !z.is_finite()) {
            return Err(serde::de::Error::custom("matrix entries must be finite"));
        }
        Ok(m)
    }
}
