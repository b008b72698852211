//! Spinor ideals and geometric qubits.
//!
//! Multiplying by `P3` or `N3` projects the algebra onto a positive or
//! negative spinor ideal. Right multiplication gives contravariant spinors
//! (`s P = s`), left multiplication covariant ones (`P s = s`). A unit
//! quaternion splits as `q = q P3 + q N3`; the positive part
//! `alpha P3 + beta (e1 P3)` is the geometric qubit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{blade_mul, Blade, Multivector};
use crate::clusters::{n, p, Label};
use crate::error::{Error, Result};
use crate::transforms::Quaternion;

/// Tolerance on `|s P - s|` when accepting an externally built spinor.
pub const IDEAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ideal {
    Positive,
    Negative,
}

impl Ideal {
    /// `P3` or `N3`.
    pub fn projector(self) -> Multivector {
        match self {
            Ideal::Positive => p(3),
            Ideal::Negative => n(3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ideal::Positive => "positive",
            Ideal::Negative => "negative",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Contravariant,
    Covariant,
}

impl Variance {
    pub fn name(self) -> &'static str {
        match self {
            Variance::Contravariant => "contravariant",
            Variance::Covariant => "covariant",
        }
    }

    fn flip(self) -> Variance {
        match self {
            Variance::Contravariant => Variance::Covariant,
            Variance::Covariant => Variance::Contravariant,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A multivector known to lie in one of the four one-sided ideals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpinorRepr", into = "SpinorRepr")]
pub struct Spinor {
    value: Multivector,
    ideal: Ideal,
    variance: Variance,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(deny_unknown_fields)]
struct SpinorRepr {
    ideal: Ideal,
    variance: Variance,
    value: Multivector,
}

impl TryFrom<SpinorRepr> for Spinor {
    type Error = Error;
    fn try_from(r: SpinorRepr) -> Result<Spinor> {
        Spinor::new(r.value, r.ideal, r.variance)
    }
}

impl From<Spinor> for SpinorRepr {
    fn from(s: Spinor) -> SpinorRepr {
        SpinorRepr {
            ideal: s.ideal,
            variance: s.variance,
            value: s.value,
        }
    }
}

impl Spinor {
    /// Checks absorption of the projector on the side fixed by `variance`.
    pub fn new(value: Multivector, ideal: Ideal, variance: Variance) -> Result<Spinor> {
        let pr = ideal.projector();
        let absorbed = match variance {
            Variance::Contravariant => value * pr,
            Variance::Covariant => pr * value,
        };
        if !absorbed.approx_eq(&value, IDEAL_TOLERANCE) {
            return Err(Error::NotInIdeal(ideal.name()));
        }
        Ok(Spinor {
            value,
            ideal,
            variance,
        })
    }

    /// `alpha P3 + beta (e1 P3)`.
    pub fn qubit(alpha: Complex64, beta: Complex64) -> Spinor {
        let z = Multivector::from_complex;
        Spinor {
            value: z(alpha) * p(3) + z(beta) * e1p3(),
            ideal: Ideal::Positive,
            variance: Variance::Contravariant,
        }
    }

    pub fn value(&self) -> Multivector {
        self.value
    }

    pub fn ideal(&self) -> Ideal {
        self.ideal
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    /// `(alpha, beta)` with `self = alpha P3 + beta (e1 P3)`; positive
    /// contravariant spinors only.
    pub fn amplitudes(&self) -> Result<(Complex64, Complex64)> {
        self.expect(Ideal::Positive, Variance::Contravariant)?;
        let e1 = Multivector::basis(Blade::E1);
        let read =
            |m: Multivector| Complex64::new(2.0 * m.get(Blade::E0), 2.0 * m.get(Blade::E123));
        Ok((read(p(3) * self.value), read(p(3) * e1 * self.value)))
    }

    fn expect_variance(&self, variance: Variance) -> Result<()> {
        if self.variance != variance {
            return Err(Error::VarianceMismatch {
                expected: variance.name(),
            });
        }
        Ok(())
    }

    fn expect(&self, ideal: Ideal, variance: Variance) -> Result<()> {
        if self.ideal != ideal {
            return Err(Error::IdealMismatch {
                left: self.ideal.name(),
                right: ideal.name(),
            });
        }
        self.expect_variance(variance)
    }
}

fn e1p3() -> Multivector {
    Multivector::basis(Blade::E1) * p(3)
}

fn e1n3() -> Multivector {
    Multivector::basis(Blade::E1) * n(3)
}

/// Positive/negative image of `m`: `m P`, `m N` (right) or `P m`, `N m` (left).
pub fn project(m: &Multivector, ideal: Ideal, side: Side) -> Spinor {
    let pr = ideal.projector();
    let (value, variance) = match side {
        Side::Right => (*m * pr, Variance::Contravariant),
        Side::Left => (pr * *m, Variance::Covariant),
    };
    Spinor {
        value,
        ideal,
        variance,
    }
}

/// The other blade with the same right projection up to sign:
/// `b P3 = (b e3) P3` and `b N3 = -(b e3) N3`.
pub fn degeneracy_partner(b: Blade, ideal: Ideal) -> (Blade, f64) {
    let (sign, partner) = blade_mul(b, Blade::E3);
    let ideal_sign = match ideal {
        Ideal::Positive => 1.0,
        Ideal::Negative => -1.0,
    };
    (partner, sign * ideal_sign)
}

/// `q P3` together with its complement `q N3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricQubit {
    pub positive: Spinor,
    pub negative: Spinor,
}

impl GeometricQubit {
    pub fn quaternion(&self) -> Multivector {
        self.positive.value + self.negative.value
    }
}

pub fn spinor_pair(q: &Quaternion) -> Result<GeometricQubit> {
    q.ensure_unit()?;
    let m = q.value();
    Ok(GeometricQubit {
        positive: project(&m, Ideal::Positive, Side::Right),
        negative: project(&m, Ideal::Negative, Side::Right),
    })
}

/// Reversion of a contravariant spinor, which lands in the matching left ideal.
pub fn covariant(s: &Spinor) -> Result<Spinor> {
    s.expect_variance(Variance::Contravariant)?;
    Ok(Spinor {
        value: s.value.reversion(),
        ideal: s.ideal,
        variance: s.variance.flip(),
    })
}

fn same_ideal(a: &Spinor, b: &Spinor) -> Result<()> {
    if a.ideal != b.ideal {
        return Err(Error::IdealMismatch {
            left: a.ideal.name(),
            right: b.ideal.name(),
        });
    }
    Ok(())
}

/// Covariant times contravariant: the projector itself for a unit quaternion.
pub fn inner(sc: &Spinor, s: &Spinor) -> Result<Multivector> {
    sc.expect_variance(Variance::Covariant)?;
    s.expect_variance(Variance::Contravariant)?;
    same_ideal(sc, s)?;
    Ok(sc.value * s.value)
}

/// Idempotent paravector `(e0 ± a)/2` of a unit vector `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParavectorState {
    pub value: Multivector,
    pub polarity: Ideal,
}

impl ParavectorState {
    /// The unit vector `a`.
    pub fn vector(&self) -> Multivector {
        let sign = match self.polarity {
            Ideal::Positive => 2.0,
            Ideal::Negative => -2.0,
        };
        self.value.grade(1) * sign
    }
}

/// Contravariant times covariant: `P(a)` or `N(a)` for the rotated `e3`.
pub fn outer(s: &Spinor, sc: &Spinor) -> Result<ParavectorState> {
    s.expect_variance(Variance::Contravariant)?;
    sc.expect_variance(Variance::Covariant)?;
    same_ideal(s, sc)?;
    Ok(ParavectorState {
        value: s.value * sc.value,
        polarity: s.ideal,
    })
}

/// `a = q P3 q~ - q N3 q~`.
pub fn reconstruct_vector(q: &Quaternion) -> Result<Multivector> {
    let pair = spinor_pair(q)?;
    let pos = outer(&pair.positive, &covariant(&pair.positive)?)?;
    let neg = outer(&pair.negative, &covariant(&pair.negative)?)?;
    Ok(pos.value - neg.value)
}

/// A positive qubit regrouped over `P1 P3 = A + C` and `N1 P3 = B + Dbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HadamardTerms {
    /// `alpha + beta`, the weight of `P1 P3`.
    pub plus: Complex64,
    /// `alpha - beta`, the weight of `N1 P3`.
    pub minus: Complex64,
}

impl HadamardTerms {
    pub const PLUS_LABELS: [Label; 2] = [Label::A, Label::C];
    pub const MINUS_LABELS: [Label; 2] = [Label::B, Label::Dbar];

    pub fn plus_element() -> Multivector {
        p(1) * p(3)
    }

    pub fn minus_element() -> Multivector {
        n(1) * p(3)
    }

    pub fn resum(&self) -> Multivector {
        Multivector::from_complex(self.plus) * Self::plus_element()
            + Multivector::from_complex(self.minus) * Self::minus_element()
    }
}

pub fn hadamard_regroup(s: &Spinor) -> Result<HadamardTerms> {
    let (alpha, beta) = s.amplitudes()?;
    Ok(HadamardTerms {
        plus: alpha + beta,
        minus: alpha - beta,
    })
}

/// `(e1 + e3) P3 / sqrt 2` and `(e1 - e3) P3 / sqrt 2`.
pub fn hadamard_basis_vectors() -> [Spinor; 2] {
    let (e1, e3) = (Multivector::basis(Blade::E1), Multivector::basis(Blade::E3));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [(e1 + e3) * h, (e1 - e3) * h].map(|v| project(&v, Ideal::Positive, Side::Right))
}

/// Left multiplication by `e1`: swaps `P3` and `e1 P3`.
pub fn not_gate(s: &Spinor) -> Result<Spinor> {
    s.expect_variance(Variance::Contravariant)?;
    Ok(Spinor {
        value: Multivector::basis(Blade::E1) * s.value,
        ..*s
    })
}

/// The two basis paravectors of a contravariant ideal.
pub fn ideal_basis(ideal: Ideal) -> [Multivector; 2] {
    match ideal {
        Ideal::Positive => [p(3), e1p3()],
        Ideal::Negative => [n(3), e1n3()],
    }
}
