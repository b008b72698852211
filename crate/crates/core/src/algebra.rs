//! Multivectors of the Euclidean geometric algebra G(3,0).
//!
//! A [`Multivector`] stores eight real coefficients in the fixed order
//! `e0, e1, e2, e3, e12, e23, e13, e123`. Note that `e23` precedes `e13`.
//! Everything outside this module addresses coefficients through [`Blade`],
//! never by raw position.
//!
//! The geometric product uses an 8x8 table of target blades and signs that
//! is evaluated at compile time by literally sorting the concatenated index
//! lists of the two factors and counting transpositions.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Complex number realised inside the algebra as `re*e0 + im*e123`.
pub type ComplexScalar = Complex64;

/// One of the eight basis blades, identified by its subset of `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Blade {
    E0,
    E1,
    E2,
    E3,
    E12,
    E23,
    E13,
    E123,
}

impl Blade {
    /// All blades in storage order.
    pub const ALL: [Blade; 8] = [
        Blade::E0,
        Blade::E1,
        Blade::E2,
        Blade::E3,
        Blade::E12,
        Blade::E23,
        Blade::E13,
        Blade::E123,
    ];

    /// Position of this blade in the coefficient array.
    pub const fn position(self) -> usize {
        self as usize
    }

    /// Bit `k-1` is set when `e_k` is a factor of the blade.
    pub const fn mask(self) -> u8 {
        match self {
            Blade::E0 => 0b000,
            Blade::E1 => 0b001,
            Blade::E2 => 0b010,
            Blade::E3 => 0b100,
            Blade::E12 => 0b011,
            Blade::E23 => 0b110,
            Blade::E13 => 0b101,
            Blade::E123 => 0b111,
        }
    }

    pub const fn from_mask(mask: u8) -> Blade {
        match mask & 0b111 {
            0b000 => Blade::E0,
            0b001 => Blade::E1,
            0b010 => Blade::E2,
            0b100 => Blade::E3,
            0b011 => Blade::E12,
            0b110 => Blade::E23,
            0b101 => Blade::E13,
            _ => Blade::E123,
        }
    }

    /// Vector index `k` of `e_k` for the three grade-1 blades.
    pub const fn vector(k: u8) -> Option<Blade> {
        match k {
            1 => Some(Blade::E1),
            2 => Some(Blade::E2),
            3 => Some(Blade::E3),
            _ => None,
        }
    }

    pub const fn grade(self) -> u8 {
        self.mask().count_ones() as u8
    }

    /// Ascending list of the vector indices making up the blade.
    pub fn indices(self) -> Vec<u8> {
        (1..=3)
            .filter(|k| self.mask() & (1 << (k - 1)) != 0)
            .collect()
    }

    pub const fn name(self) -> &'static str {
        match self {
            Blade::E0 => "e0",
            Blade::E1 => "e1",
            Blade::E2 => "e2",
            Blade::E3 => "e3",
            Blade::E12 => "e12",
            Blade::E23 => "e23",
            Blade::E13 => "e13",
            Blade::E123 => "e123",
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Blade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Blade::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Product `e_a e_b = sign * e_(a xor b)`, found by bubble-sorting the
/// concatenated index lists and cancelling the squared pairs.
const fn blade_product(a: u8, b: u8) -> (u8, i8) {
    let mut list = [0u8; 6];
    let mut len = 0;
    let mut k = 1;
    while k <= 3 {
        if a & (1 << (k - 1)) != 0 {
            list[len] = k;
            len += 1;
        }
        k += 1;
    }
    k = 1;
    while k <= 3 {
        if b & (1 << (k - 1)) != 0 {
            list[len] = k;
            len += 1;
        }
        k += 1;
    }
    let mut swaps = 0;
    let mut i = 0;
    while i < len {
        let mut j = 0;
        while j + 1 < len - i {
            if list[j] > list[j + 1] {
                let t = list[j];
                list[j] = list[j + 1];
                list[j + 1] = t;
                swaps += 1;
            }
            j += 1;
        }
        i += 1;
    }
    // e_k e_k = e0 for positive signature, so adjacent duplicates vanish.
    let mut mask = 0u8;
    let mut p = 0;
    while p < len {
        if p + 1 < len && list[p] == list[p + 1] {
            p += 2;
        } else {
            mask |= 1 << (list[p] - 1);
            p += 1;
        }
    }
    (mask, if swaps % 2 == 0 { 1 } else { -1 })
}

const fn build_table() -> [[(u8, i8); 8]; 8] {
    let mut table = [[(0u8, 0i8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            let (mask, sign) = blade_product(Blade::ALL[i].mask(), Blade::ALL[j].mask());
            table[i][j] = (Blade::from_mask(mask).position() as u8, sign);
            j += 1;
        }
        i += 1;
    }
    table
}

/// `PRODUCT[i][j] = (k, s)` means `blade_i * blade_j = s * blade_k`.
static PRODUCT: [[(u8, i8); 8]; 8] = build_table();

/// Product of two basis blades as `(sign, blade)`.
pub fn blade_mul(a: Blade, b: Blade) -> (f64, Blade) {
    let (k, s) = PRODUCT[a.position()][b.position()];
    (s as f64, Blade::ALL[k as usize])
}

/// The three involutions: grade-dependent sign flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Reverses the order of vector factors: grades 2 and 3 negate.
    Reversion,
    /// Space inversion (the overline): grades 1 and 3 negate.
    GradeInvolution,
    /// Composition of the two: grades 1 and 2 negate.
    CliffordConjugation,
}

impl Involution {
    fn sign(self, grade: u8) -> f64 {
        let negate = match self {
            Involution::Reversion => grade == 2 || grade == 3,
            Involution::GradeInvolution => grade % 2 == 1,
            Involution::CliffordConjugation => grade == 1 || grade == 2,
        };
        if negate {
            -1.0
        } else {
            1.0
        }
    }
}

/// An element of G(3,0).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    coeffs: [f64; 8],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; 8] };
    pub const ONE: Multivector = Multivector::scalar(1.0);
    /// The pseudoscalar `e123`, which plays the role of the imaginary unit.
    pub const I: Multivector = Multivector::basis(Blade::E123);

    /// Builds a multivector from coefficients in storage order
    /// `e0, e1, e2, e3, e12, e23, e13, e123`.
    pub const fn from_coeffs(coeffs: [f64; 8]) -> Self {
        Multivector { coeffs }
    }

    pub const fn coeffs(&self) -> [f64; 8] {
        self.coeffs
    }

    pub const fn scalar(s: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = s;
        Multivector { coeffs }
    }

    /// Unit multivector with coefficient 1 at `blade`.
    pub const fn basis(blade: Blade) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[blade.position()] = 1.0;
        Multivector { coeffs }
    }

    pub fn vector(a1: f64, a2: f64, a3: f64) -> Self {
        Multivector::from_terms(&[(a1, Blade::E1), (a2, Blade::E2), (a3, Blade::E3)])
    }

    pub fn from_terms(terms: &[(f64, Blade)]) -> Self {
        let mut m = Multivector::ZERO;
        for &(c, b) in terms {
            m.coeffs[b.position()] += c;
        }
        m
    }

    /// Embeds `re + i*im` as `re*e0 + im*e123`.
    pub fn from_complex(z: ComplexScalar) -> Self {
        Multivector::from_terms(&[(z.re, Blade::E0), (z.im, Blade::E123)])
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.position()]
    }

    pub fn set(&mut self, blade: Blade, value: f64) {
        self.coeffs[blade.position()] = value;
    }

    /// Iterates `(blade, coefficient)` pairs in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        Blade::ALL.into_iter().map(move |b| (b, self.get(b)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn geometric_product(&self, other: &Multivector) -> Multivector {
        let mut out = [0.0; 8];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let (k, s) = PRODUCT[i][j];
                out[k as usize] += s as f64 * a * b;
            }
        }
        Multivector { coeffs: out }
    }

    pub fn involution(&self, kind: Involution) -> Multivector {
        let mut out = *self;
        for b in Blade::ALL {
            out.coeffs[b.position()] *= kind.sign(b.grade());
        }
        out
    }

    pub fn reversion(&self) -> Multivector {
        self.involution(Involution::Reversion)
    }

    pub fn grade_involution(&self) -> Multivector {
        self.involution(Involution::GradeInvolution)
    }

    pub fn clifford_conjugate(&self) -> Multivector {
        self.involution(Involution::CliffordConjugation)
    }

    /// Keeps only the coefficients of grade `k`.
    pub fn grade(&self, k: u8) -> Multivector {
        let mut out = Multivector::ZERO;
        for b in Blade::ALL.into_iter().filter(|b| b.grade() == k) {
            out.coeffs[b.position()] = self.get(b);
        }
        out
    }

    pub fn even_part(&self) -> Multivector {
        self.grade(0) + self.grade(2)
    }

    pub fn odd_part(&self) -> Multivector {
        self.grade(1) + self.grade(3)
    }

    pub fn scalar_part(&self) -> f64 {
        self.get(Blade::E0)
    }

    /// Largest absolute coefficient outside grade `k`.
    pub fn off_grade_mass(&self, k: u8) -> f64 {
        self.terms()
            .filter(|(b, _)| b.grade() != k)
            .fold(0.0, |acc, (_, c)| acc.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// True iff the largest coefficient difference is at most `tol`.
    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        self.max_abs_diff(other) <= tol
    }

    /// Reads the multivector as a complex number if only `e0` and `e123`
    /// are populated.
    pub fn as_complex(&self) -> Option<ComplexScalar> {
        let rest = self
            .terms()
            .filter(|(b, _)| !matches!(b, Blade::E0 | Blade::E123))
            .all(|(_, c)| c == 0.0);
        rest.then(|| ComplexScalar::new(self.get(Blade::E0), self.get(Blade::E123)))
    }
}

/// Componentwise weighted sum.
pub fn linear_combine(terms: &[(f64, Multivector)]) -> Multivector {
    terms
        .iter()
        .fold(Multivector::ZERO, |acc, &(s, m)| acc + m * s)
}

/// Multiplies by a complex scalar through its `e0 + e123` embedding.
/// The embedding is central, so the side does not matter.
pub fn complex_multiply(z: ComplexScalar, m: &Multivector) -> Multivector {
    Multivector::from_complex(z) * *m
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= rhs;
        self
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric_product(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(mut self, s: f64) -> Multivector {
        for c in self.coeffs.iter_mut() {
            *c *= s;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(mut self, s: f64) -> Multivector {
        for c in self.coeffs.iter_mut() {
            *c /= s;
        }
        self
    }
}

impl From<Blade> for Multivector {
    fn from(b: Blade) -> Self {
        Multivector::basis(b)
    }
}

impl From<ComplexScalar> for Multivector {
    fn from(z: ComplexScalar) -> Self {
        Multivector::from_complex(z)
    }
}

/// Prints in the expression syntax accepted by the parser, e.g.
/// `0.5*e0 - 0.5*e13`. Default formatting round-trips exactly.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.terms() {
            if c == 0.0 {
                continue;
            }
            let neg = c.is_sign_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if mag != 1.0 {
                match f.precision() {
                    Some(p) => write!(f, "{mag:.p$}*")?,
                    None => write!(f, "{mag}*")?,
                }
            }
            f.write_str(b.name())?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultivectorRepr {
    e0: f64,
    e1: f64,
    e2: f64,
    e3: f64,
    e12: f64,
    e23: f64,
    e13: f64,
    e123: f64,
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let [e0, e1, e2, e3, e12, e23, e13, e123] = self.coeffs;
        MultivectorRepr {
            e0,
            e1,
            e2,
            e3,
            e12,
            e23,
            e13,
            e123,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = MultivectorRepr::deserialize(deserializer)?;
        let m = Multivector::from_coeffs([r.e0, r.e1, r.e2, r.e3, r.e12, r.e23, r.e13, r.e123]);
        if !m.is_finite() {
            return Err(serde::de::Error::custom(
                "multivector coefficients must be finite",
            ));
        }
        Ok(m)
    }
}
