//! The geometric byte.
//!
//! Each axis contributes a complementary pair of idempotent paravectors
//! `P_k = (e0 + e_k)/2` and `N_k = (e0 - e_k)/2`. Choosing one factor per
//! axis, in axis order, gives the eight structure elements `A .. Abar`; the
//! choice of sum or difference per axis gives the eight basis blades.
//!
//! Structure elements are placed on a unit cube: a label's vertex has octant
//! sign `+` on axis `k` when its `k`-th factor is `P_k` and `-` when it is
//! `N_k`, so `A` sits at `(+,+,+)` and every overlined label is antipodal to
//! its partner.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Blade, Multivector};
use crate::error::{Error, Result};

/// Which paravector of a complementary pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn sign(self) -> f64 {
        match self {
            Polarity::Positive => 1.0,
            Polarity::Negative => -1.0,
        }
    }

    pub fn opposite(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// `P_axis` or `N_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Paravector {
    axis: u8,
    polarity: Polarity,
}

impl Paravector {
    pub fn new(axis: u8, polarity: Polarity) -> Result<Self> {
        if !(1..=3).contains(&axis) {
            return Err(Error::AxisOutOfRange(axis));
        }
        Ok(Paravector { axis, polarity })
    }

    pub fn axis(&self) -> u8 {
        self.axis
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// `(e0 ± e_axis) / 2`.
    pub fn value(&self) -> Multivector {
        let e = Multivector::basis(Blade::vector(self.axis).expect("axis validated"));
        (Multivector::ONE + e * self.polarity.sign()) * 0.5
    }

    pub fn name(&self) -> String {
        let letter = match self.polarity {
            Polarity::Positive => 'P',
            Polarity::Negative => 'N',
        };
        format!("{letter}{}", self.axis)
    }
}

/// Shorthand for the positive paravector `P_axis`.
pub fn p(axis: u8) -> Multivector {
    paravector(axis, Polarity::Positive).expect("axis in range")
}

/// Shorthand for the negative paravector `N_axis`.
pub fn n(axis: u8) -> Multivector {
    paravector(axis, Polarity::Negative).expect("axis in range")
}

pub fn paravector(axis: u8, polarity: Polarity) -> Result<Multivector> {
    Ok(Paravector::new(axis, polarity)?.value())
}

/// The eight structure elements in their canonical listing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
    C,
    D,
    Dbar,
    Cbar,
    Bbar,
    Abar,
}

impl Label {
    pub const ALL: [Label; 8] = [
        Label::A,
        Label::B,
        Label::C,
        Label::D,
        Label::Dbar,
        Label::Cbar,
        Label::Bbar,
        Label::Abar,
    ];

    pub fn position(self) -> usize {
        self as usize
    }

    /// Bit `k-1` set when the `k`-th factor is `N_k`.
    pub fn negative_mask(self) -> u8 {
        match self {
            Label::A => 0b000,
            Label::B => 0b001,
            Label::C => 0b010,
            Label::D => 0b100,
            Label::Dbar => 0b011,
            Label::Cbar => 0b101,
            Label::Bbar => 0b110,
            Label::Abar => 0b111,
        }
    }

    pub fn from_negative_mask(mask: u8) -> Label {
        Label::ALL
            .into_iter()
            .find(|l| l.negative_mask() == mask & 0b111)
            .expect("every 3-bit mask names a label")
    }

    /// Polarity of the factor on `axis` (1..=3).
    pub fn factor(self, axis: u8) -> Polarity {
        if self.negative_mask() & (1 << (axis - 1)) != 0 {
            Polarity::Negative
        } else {
            Polarity::Positive
        }
    }

    /// Octant signs of the cube vertex.
    pub fn vertex(self) -> [i8; 3] {
        [1, 2, 3].map(|k| self.factor(k).sign() as i8)
    }

    /// The antipodal label (space inversion).
    pub fn bar(self) -> Label {
        Label::from_negative_mask(!self.negative_mask())
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::A => "A",
            Label::B => "B",
            Label::C => "C",
            Label::D => "D",
            Label::Dbar => "Dbar",
            Label::Cbar => "Cbar",
            Label::Bbar => "Bbar",
            Label::Abar => "Abar",
        }
    }

    /// Name with a combining overline, for display.
    pub fn display_name(self) -> &'static str {
        match self {
            Label::A => "A",
            Label::B => "B",
            Label::C => "C",
            Label::D => "D",
            Label::Dbar => "D\u{0304}",
            Label::Cbar => "C\u{0304}",
            Label::Bbar => "B\u{0304}",
            Label::Abar => "A\u{0304}",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

static STRUCTURE: LazyLock<[Multivector; 8]> = LazyLock::new(|| {
    Label::ALL.map(|l| {
        [1, 2, 3]
            .into_iter()
            .map(|k| paravector(k, l.factor(k)).expect("axis in range"))
            .fold(Multivector::ONE, |acc, f| acc * f)
    })
});

/// Ordered triple product of paravectors, one per axis.
pub fn structure_element(label: Label) -> Multivector {
    STRUCTURE[label.position()]
}

/// `(-1)^(|blade ∩ N-factors|)`: the sign with which a structure element
/// enters a basis blade when the byte brackets are opened.
fn inner_sign(blade: Blade, label: Label) -> f64 {
    if (blade.mask() & label.negative_mask())
        .count_ones()
        .is_multiple_of(2)
    {
        1.0
    } else {
        -1.0
    }
}

/// Coordinates over the structure elements, in label order.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StructureCoords([f64; 8]);

impl StructureCoords {
    pub const fn new(values: [f64; 8]) -> Self {
        StructureCoords(values)
    }

    pub fn values(&self) -> [f64; 8] {
        self.0
    }

    pub fn get(&self, label: Label) -> f64 {
        self.0[label.position()]
    }

    pub fn set(&mut self, label: Label, value: f64) {
        self.0[label.position()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, f64)> + '_ {
        Label::ALL.into_iter().map(move |l| (l, self.get(l)))
    }

    /// Labels whose coordinate is nonzero.
    pub fn support(&self) -> Vec<Label> {
        self.iter()
            .filter(|(_, v)| *v != 0.0)
            .map(|(l, _)| l)
            .collect()
    }
}

impl std::ops::Add for StructureCoords {
    type Output = StructureCoords;
    fn add(self, rhs: StructureCoords) -> StructureCoords {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        out
    }
}

/// The unique coordinates of `m` over the eight structure elements.
pub fn to_structure_coords(m: &Multivector) -> StructureCoords {
    let mut out = [0.0; 8];
    for (b, c) in m.terms() {
        if c == 0.0 {
            continue;
        }
        for l in Label::ALL {
            out[l.position()] += inner_sign(b, l) * c;
        }
    }
    StructureCoords(out)
}

pub fn from_structure_coords(coords: &StructureCoords) -> Multivector {
    coords.iter().fold(Multivector::ZERO, |acc, (l, c)| {
        acc + structure_element(l) * c
    })
}

/// Rows = labels, columns = blades in storage order; entries are `±1/8`.
pub fn structure_matrix() -> [[f64; 8]; 8] {
    Label::ALL.map(|l| structure_element(l).coeffs())
}

/// Rows = blades in storage order, columns = labels; entries are `±1`.
pub fn inner_structure_matrix() -> [[f64; 8]; 8] {
    Blade::ALL.map(|b| to_structure_coords(&Multivector::basis(b)).values())
}

/// One geometric bit: `+` selects `P_k + N_k`, `-` selects `P_k - N_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// State of the geometric byte, e.g. `--+` for `e12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ByteSignature(pub [Sign; 3]);

impl ByteSignature {
    /// All eight signatures, ordered like the blades they produce.
    pub fn all() -> [ByteSignature; 8] {
        Blade::ALL.map(blade_to_byte_signature)
    }

    pub fn with_flipped(self, axis: usize) -> ByteSignature {
        let mut s = self.0;
        s[axis] = s[axis].flip();
        ByteSignature(s)
    }

    pub fn hamming(&self, other: &ByteSignature) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Blade selected by the signature, read off the bits directly.
    pub fn blade(&self) -> Blade {
        let mask = (0..3)
            .filter(|&k| self.0[k] == Sign::Minus)
            .fold(0u8, |acc, k| acc | (1 << k));
        Blade::from_mask(mask)
    }
}

impl fmt::Display for ByteSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ByteSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                _ => Err(Error::UnknownName(s.to_string())),
            })
            .collect::<Result<_>>()?;
        let arr: [Sign; 3] = signs
            .try_into()
            .map_err(|_| Error::UnknownName(s.to_string()))?;
        Ok(ByteSignature(arr))
    }
}

/// Evaluates `(P1 ± N1)(P2 ± N2)(P3 ± N3)` with the geometric product.
pub fn byte_signature_to_blade(sig: &ByteSignature) -> Multivector {
    (0..3).fold(Multivector::ONE, |acc, k| {
        let axis = k as u8 + 1;
        acc * (p(axis) + n(axis) * sig.0[k].value())
    })
}

pub fn blade_to_byte_signature(blade: Blade) -> ByteSignature {
    ByteSignature([0, 1, 2].map(|k| {
        if blade.mask() & (1 << k) != 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }))
}

/// A face of the cube: 0/1 coordinates of `P_axis` or `N_axis`.
pub fn face_paravector(axis: u8, polarity: Polarity) -> Result<StructureCoords> {
    Ok(to_structure_coords(&paravector(axis, polarity)?))
}

/// The two families of cube-diagonal pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagBasisKind {
    /// `(X - Xbar)`: spans the odd part (vectors and trivector).
    VectorDiag,
    /// `(X + Xbar)`: spans the even part (scalar and bivectors).
    QuaternionDiag,
}

impl DiagBasisKind {
    fn partner_sign(self) -> f64 {
        match self {
            DiagBasisKind::VectorDiag => -1.0,
            DiagBasisKind::QuaternionDiag => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagBasisKind::VectorDiag => "vector_diag",
            DiagBasisKind::QuaternionDiag => "quaternion_diag",
        }
    }
}

/// Labels heading each diagonal, paired with their antipodes.
pub const DIAGONALS: [Label; 4] = [Label::A, Label::B, Label::C, Label::D];

pub fn diag_basis(kind: DiagBasisKind) -> [Multivector; 4] {
    DIAGONALS.map(|l| structure_element(l) + structure_element(l.bar()) * kind.partner_sign())
}

/// Coefficients over a diagonal basis plus the norm of what they miss.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagDecomposition {
    pub coefficients: [f64; 4],
    pub residual: f64,
}

/// Projects onto the diagonal family without failing.
pub fn diag_coefficients(m: &Multivector, kind: DiagBasisKind) -> DiagDecomposition {
    let coords = to_structure_coords(m);
    let sign = kind.partner_sign();
    let coefficients = DIAGONALS.map(|l| (coords.get(l) + sign * coords.get(l.bar())) / 2.0);
    let basis = diag_basis(kind);
    let resum = coefficients
        .iter()
        .zip(basis.iter())
        .fold(Multivector::ZERO, |acc, (&d, b)| acc + *b * d);
    DiagDecomposition {
        coefficients,
        residual: (*m - resum).norm(),
    }
}

/// Residual above which [`decompose_diag`] rejects the input.
pub const SPAN_TOLERANCE: f64 = 1e-12;

/// Coefficients `d` with `m = sum d_i basis_i`.
pub fn decompose_diag(m: &Multivector, kind: DiagBasisKind) -> Result<[f64; 4]> {
    let d = diag_coefficients(m, kind);
    if d.residual > SPAN_TOLERANCE {
        return Err(Error::OutOfSpan {
            basis: kind.name(),
            residual: d.residual,
        });
    }
    Ok(d.coefficients)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct CoordsRepr {
    A: f64,
    B: f64,
    C: f64,
    D: f64,
    Dbar: f64,
    Cbar: f64,
    Bbar: f64,
    Abar: f64,
}

impl Serialize for StructureCoords {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d, db, cb, bb, ab] = self.0;
        CoordsRepr {
            A: a,
            B: b,
            C: c,
            D: d,
            Dbar: db,
            Cbar: cb,
            Bbar: bb,
            Abar: ab,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StructureCoords {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = CoordsRepr::deserialize(deserializer)?;
        let values = [r.A, r.B, r.C, r.D, r.Dbar, r.Cbar, r.Bbar, r.Abar];
        if values.iter().any(|v| !v.is_finite()) {
            return Err(serde::de::Error::custom("coordinates must be finite"));
        }
        Ok(StructureCoords(values))
    }
}
