//! One multivector seen in every basis the crate knows about.

use serde::Serialize;

use crate::algebra::Multivector;
use crate::clusters::{
    diag_basis, diag_coefficients, from_structure_coords, to_structure_coords, DiagBasisKind,
    DiagDecomposition, StructureCoords,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub blade: Multivector,
    pub structure: StructureCoords,
    pub vector_diag: DiagDecomposition,
    pub quaternion_diag: DiagDecomposition,
}

pub fn decompose_report(m: &Multivector) -> DecompositionReport {
    DecompositionReport {
        blade: *m,
        structure: to_structure_coords(m),
        vector_diag: diag_coefficients(m, DiagBasisKind::VectorDiag),
        quaternion_diag: diag_coefficients(m, DiagBasisKind::QuaternionDiag),
    }
}

fn diag_resum(d: &DiagDecomposition, kind: DiagBasisKind) -> Multivector {
    diag_basis(kind)
        .iter()
        .zip(d.coefficients)
        .fold(Multivector::ZERO, |acc, (b, c)| acc + *b * c)
}

impl DecompositionReport {
    /// The input rebuilt from each view: blade, structure, and the two
    /// diagonal families added together (each covers one parity).
    pub fn resummations(&self) -> [Multivector; 3] {
        [
            self.blade,
            from_structure_coords(&self.structure),
            diag_resum(&self.vector_diag, DiagBasisKind::VectorDiag)
                + diag_resum(&self.quaternion_diag, DiagBasisKind::QuaternionDiag),
        ]
    }

    /// Worst resummation error against `m`.
    pub fn max_error(&self, m: &Multivector) -> f64 {
        self.resummations()
            .iter()
            .fold(0.0, |acc, r| acc.max(r.max_abs_diff(m)))
    }
}
