//! The distance-3 triangular color code: layout, logical operators, and the
//! flag look-up decoder.
//!
//! Qubit numbering (1..=7 in the tables, 0-based in code) is pinned so that the
//! per-qubit syndrome signatures and the flagged hook cells reproduce the
//! decoding look-up table under exhaustive fault injection:
//!
//! ```text
//!   plaquette 1 = {1,2,3,4}    plaquette 2 = {2,3,5,6}    plaquette 3 = {3,4,6,7}
//! ```
//!
//! Logical representatives live on the triangle edges {1,2,5}, {5,6,7} and
//! {1,4,7}; qubit 3 sits in the interior.

use crate::pauli::{Pauli, PauliString};

/// X or Z sector of the CSS code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Basis {
    X,
    Z,
}

impl Basis {
    pub fn conjugate(self) -> Basis {
        match self {
            Basis::X => Basis::Z,
            Basis::Z => Basis::X,
        }
    }

    pub fn pauli(self) -> Pauli {
        match self {
            Basis::X => Pauli::X,
            Basis::Z => Pauli::Z,
        }
    }
}

/// Plaquette supports of the d=3 triangular code, 0-based qubit indices sorted
/// ascending (the in-plaquette coupling order of the readout circuits).
pub const PLAQUETTES: [[usize; 4]; 3] = [[0, 1, 2, 3], [1, 2, 4, 5], [2, 3, 5, 6]];

/// Logical edge representatives, 0-based.
pub const EDGE_REPS: [[usize; 3]; 3] = [[0, 1, 4], [4, 5, 6], [0, 3, 6]];

/// Canonical verdict representatives: chosen so that Z_L avoids the X₇-type
/// gauge coset left by the M_XX collapse and X_L avoids the Z₅-type coset left
/// by the M_ZZ collapse.
pub const Z_LOGICAL_REP: [usize; 3] = [0, 1, 4]; // qubits {1,2,5}
pub const X_LOGICAL_REP: [usize; 3] = [0, 3, 6]; // qubits {1,4,7}

pub const N_DATA: usize = 7;
pub const DISTANCE: usize = 3;

/// Fixed layout of one 7-qubit block: plaquette→qubit incidence plus logical
/// operators, parameterized by an offset into a larger register.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeLayout {
    /// Index of data qubit d1 within the global register; d(i) = offset + i - 1.
    pub offset: usize,
}

impl CodeLayout {
    pub fn new(offset: usize) -> CodeLayout {
        CodeLayout { offset }
    }

    pub fn n_data(&self) -> usize {
        N_DATA
    }

    pub fn plaquette_count(&self) -> usize {
        PLAQUETTES.len()
    }

    pub fn generator_count(&self) -> usize {
        2 * PLAQUETTES.len()
    }

    pub fn logical_qubits(&self) -> usize {
        N_DATA - self.generator_count()
    }

    /// Data qubits of plaquette `p` (1-based), as global register indices.
    pub fn plaquette(&self, p: usize) -> [usize; 4] {
        assert!((1..=3).contains(&p), "plaquette id {p} out of range");
        let mut qs = PLAQUETTES[p - 1];
        for q in &mut qs {
            *q += self.offset;
        }
        qs
    }

    pub fn data_qubits(&self) -> Vec<usize> {
        (self.offset..self.offset + N_DATA).collect()
    }

    /// Global index of the 1-based local data qubit `i`.
    pub fn data(&self, i: usize) -> usize {
        assert!((1..=N_DATA).contains(&i));
        self.offset + i - 1
    }

    /// Weight-4 stabilizer S_basis^(p) as a Pauli string on an n-qubit register.
    pub fn stabilizer(&self, n: usize, basis: Basis, p: usize) -> PauliString {
        PauliString::on_qubits(n, &self.plaquette(p), basis.pauli())
    }

    /// Weight-3 logical representative along triangle edge `edge` ∈ 0..3.
    pub fn logical_edge(&self, n: usize, basis: Basis, edge: usize) -> PauliString {
        assert!(edge < 3);
        let qs: Vec<usize> = EDGE_REPS[edge].iter().map(|&q| q + self.offset).collect();
        PauliString::on_qubits(n, &qs, basis.pauli())
    }

    /// Canonical logical operator used by verdicts (gauge-immune edge choice).
    pub fn logical(&self, n: usize, basis: Basis) -> PauliString {
        let rep = match basis {
            Basis::Z => Z_LOGICAL_REP,
            Basis::X => X_LOGICAL_REP,
        };
        let qs: Vec<usize> = rep.iter().map(|&q| q + self.offset).collect();
        PauliString::on_qubits(n, &qs, basis.pauli())
    }
}

/// A syndrome triple with optional flag information.
///
/// `r[p]` is the ±1 outcome of the p-th (1-based) stabilizer readout; for a
/// flagged decode these are the un-flagged conjugate-basis outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syndrome {
    pub basis: Basis,
    pub r: [i8; 3],
    pub flagged_plaquette: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictClass {
    NoError,
    MeasurementError,
    Weight1,
    Weight2Hook,
    FlagPlusData,
}

/// Decoder output: local 1-based data-qubit indices to correct, plus the
/// classification of the consulted cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderVerdict {
    pub qubits: Vec<usize>,
    pub class: VerdictClass,
}

impl DecoderVerdict {
    /// Correction as a Pauli string of the given kind on a block.
    pub fn correction(&self, n: usize, layout: &CodeLayout, kind: Pauli) -> PauliString {
        let qs: Vec<usize> = self.qubits.iter().map(|&i| layout.data(i)).collect();
        PauliString::on_qubits(n, &qs, kind)
    }
}

fn r_index(r: [i8; 3]) -> usize {
    // (r1,r2,r3) → 3-bit index, bit set ⇔ −1 outcome.
    (((r[0] < 0) as usize) << 2) | (((r[1] < 0) as usize) << 1) | ((r[2] < 0) as usize)
}

/// Column 1 of the look-up table: no flag, syndrome triple → weight-≤1 error.
pub fn decode_unflagged(syndrome: &Syndrome) -> DecoderVerdict {
    assert!(syndrome.flagged_plaquette.is_none());
    let qubit = match r_index(syndrome.r) {
        0b000 => None,
        0b001 => Some(7),
        0b010 => Some(5),
        0b011 => Some(6),
        0b100 => Some(1),
        0b101 => Some(4),
        0b110 => Some(2),
        0b111 => Some(3),
        _ => unreachable!(),
    };
    match qubit {
        None => DecoderVerdict { qubits: vec![], class: VerdictClass::NoError },
        Some(q) => DecoderVerdict { qubits: vec![q], class: VerdictClass::Weight1 },
    }
}

/// Flagged columns of the look-up table.
///
/// The syndrome `r` must hold the subsequent un-flagged conjugate-basis
/// outcomes; grey cells return the identified measurement/weight-1/hook
/// correction, white cells the flag-plus-data reading exactly as printed.
pub fn decode_flagged(syndrome: &Syndrome) -> DecoderVerdict {
    let p = syndrome
        .flagged_plaquette
        .expect("decode_flagged requires a triggered flag");
    assert!((1..=3).contains(&p), "flagged plaquette {p} out of range");
    // (qubits, grey?) per r-index, for each flagged plaquette.
    let (qubits, grey): (&[usize], bool) = match (p, r_index(syndrome.r)) {
        (_, 0b000) => (&[], true), // flag-measurement error, no data correction
        (1, 0b001) => (&[7], false),
        (1, 0b010) => (&[3, 4], true),
        (1, 0b011) => (&[6], false),
        (1, 0b100) => (&[1], true),
        (1, 0b101) => (&[4], true),
        (1, 0b110) => (&[2], false),
        (1, 0b111) => (&[3], false),
        (2, 0b001) => (&[5, 6], true),
        (2, 0b010) => (&[5], false),
        (2, 0b011) => (&[6], true),
        (2, 0b100) => (&[1], false),
        (2, 0b101) => (&[4], false),
        (2, 0b110) => (&[2], true),
        (2, 0b111) => (&[3], false),
        (3, 0b001) => (&[7], true),
        (3, 0b010) => (&[6, 7], true),
        (3, 0b011) => (&[6], false),
        (3, 0b100) => (&[1], false),
        (3, 0b101) => (&[4], false),
        (3, 0b110) => (&[2], false),
        (3, 0b111) => (&[3], true),
        _ => unreachable!(),
    };
    let class = if qubits.is_empty() {
        VerdictClass::MeasurementError
    } else if grey && qubits.len() == 2 {
        VerdictClass::Weight2Hook
    } else if grey {
        VerdictClass::Weight1
    } else {
        VerdictClass::FlagPlusData
    };
    DecoderVerdict { qubits: qubits.to_vec(), class }
}

/// True if the cell for (flagged plaquette, r) is grey in the look-up table,
/// i.e. reachable from a single fault in the flagged readout itself.
pub fn is_grey_cell(p: usize, r: [i8; 3]) -> bool {
    matches!(
        (p, r_index(r)),
        (_, 0b000)
            | (1, 0b010)
            | (1, 0b100)
            | (1, 0b101)
            | (2, 0b001)
            | (2, 0b011)
            | (2, 0b110)
            | (3, 0b001)
            | (3, 0b010)
            | (3, 0b111)
    )
}

/// Syndrome of a Pauli error against the three same-block stabilizers of the
/// given basis: entry p is −1 iff the error anticommutes with S_basis^(p).
pub fn syndrome_of(n: usize, layout: &CodeLayout, basis: Basis, error: &PauliString) -> [i8; 3] {
    let mut r = [1i8; 3];
    for p in 1..=3 {
        if layout.stabilizer(n, basis, p).anticommutes_with(error) {
            r[p - 1] = -1;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_counts() {
        let l = CodeLayout::new(0);
        assert_eq!(l.n_data(), 7);
        assert_eq!(l.plaquette_count(), 3);
        assert_eq!(l.generator_count(), 6);
        assert_eq!(l.logical_qubits(), 1);
        // n = d²/2 + d − 1/2 at d=3.
        assert_eq!(l.n_data(), (DISTANCE * DISTANCE + 2 * DISTANCE - 1) / 2);
    }

    #[test]
    fn stabilizers_commute_pairwise() {
        let l = CodeLayout::new(0);
        let mut all = vec![];
        for b in [Basis::X, Basis::Z] {
            for p in 1..=3 {
                all.push(l.stabilizer(7, b, p));
            }
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert!(all[i].commutes_with(&all[j]), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn logicals_anticommute_and_commute_with_stabilizers() {
        let l = CodeLayout::new(0);
        let xl = l.logical(7, Basis::X);
        let zl = l.logical(7, Basis::Z);
        assert!(xl.anticommutes_with(&zl));
        assert_eq!(xl.weight(), 3);
        assert_eq!(zl.weight(), 3);
        for b in [Basis::X, Basis::Z] {
            for p in 1..=3 {
                let s = l.stabilizer(7, b, p);
                assert!(s.commutes_with(&xl));
                assert!(s.commutes_with(&zl));
            }
        }
        for edge in 0..3 {
            assert_eq!(l.logical_edge(7, Basis::Z, edge).weight(), 3);
        }
    }

    #[test]
    fn edge_representatives_differ_by_stabilizer_products() {
        // Exhaustive membership check in the 2^3 Z-plaquette subgroup.
        let l = CodeLayout::new(0);
        let e0 = l.logical_edge(7, Basis::Z, 0);
        for edge in 1..3 {
            let mut diff = l.logical_edge(7, Basis::Z, edge);
            diff.mul_assign(&e0);
            let mut found = false;
            for mask in 0..8u8 {
                let mut prod = PauliString::identity(7);
                for p in 1..=3 {
                    if mask >> (p - 1) & 1 == 1 {
                        prod.mul_assign(&l.stabilizer(7, Basis::Z, p));
                    }
                }
                if prod == diff {
                    found = true;
                }
            }
            assert!(found, "edge {edge} not stabilizer-equivalent to edge 0");
        }
    }

    #[test]
    fn stabilizer_group_has_order_64_without_logicals() {
        let l = CodeLayout::new(0);
        let mut elements = std::collections::HashSet::new();
        for xm in 0..8u8 {
            for zm in 0..8u8 {
                let mut prod = PauliString::identity(7);
                for p in 1..=3 {
                    if xm >> (p - 1) & 1 == 1 {
                        prod.mul_assign(&l.stabilizer(7, Basis::X, p));
                    }
                    if zm >> (p - 1) & 1 == 1 {
                        prod.mul_assign(&l.stabilizer(7, Basis::Z, p));
                    }
                }
                elements.insert(format!("{prod:?}"));
            }
        }
        assert_eq!(elements.len(), 64);
        let xl = format!("{:?}", l.logical(7, Basis::X));
        let zl = format!("{:?}", l.logical(7, Basis::Z));
        assert!(!elements.contains(&xl));
        assert!(!elements.contains(&zl));
    }

    #[test]
    fn unflagged_decoder_corrects_every_single_fault() {
        let l = CodeLayout::new(0);
        for basis in [Basis::X, Basis::Z] {
            let err_kind = basis.conjugate().pauli();
            for q in 0..7 {
                let err = PauliString::single(7, q, err_kind);
                let r = syndrome_of(7, &l, basis, &err);
                let verdict = decode_unflagged(&Syndrome { basis, r, flagged_plaquette: None });
                let corr = verdict.correction(7, &l, err_kind);
                let residual = PauliString::product(err, &corr);
                // Residual must be trivial: commutes with both logicals and
                // has empty syndrome.
                assert_eq!(syndrome_of(7, &l, basis, &residual), [1, 1, 1]);
                assert!(residual.commutes_with(&l.logical(7, Basis::X)));
                assert!(residual.commutes_with(&l.logical(7, Basis::Z)));
                assert!(residual.is_identity(), "single fault on {q} not exactly removed");
            }
        }
    }

    #[test]
    fn table_examples() {
        // Spec'd rows of the look-up table.
        let s = |r: [i8; 3], p: Option<usize>| Syndrome { basis: Basis::X, r, flagged_plaquette: p };
        assert_eq!(decode_flagged(&s([1, -1, 1], Some(1))).qubits, vec![3, 4]);
        assert_eq!(decode_flagged(&s([1, 1, -1], Some(2))).qubits, vec![5, 6]);
        assert_eq!(
            decode_flagged(&s([1, 1, 1], Some(1))).class,
            VerdictClass::MeasurementError
        );
        assert_eq!(decode_unflagged(&s([-1, 1, 1], None)).qubits, vec![1]);
        assert_eq!(decode_unflagged(&s([1, 1, 1], None)).qubits, Vec::<usize>::new());
        assert_eq!(decode_unflagged(&s([1, 1, -1], None)).qubits, vec![7]);
    }

    #[test]
    fn product_of_z_plaquettes_deforms_logical() {
        // ∏_p S_z^(p) × Z_L stays within the data-qubit group and is again a
        // valid logical representative (commutes with all stabilizers,
        // anticommutes with X_L).
        let l = CodeLayout::new(0);
        let mut op = l.logical(7, Basis::Z);
        for p in 1..=3 {
            op.mul_assign(&l.stabilizer(7, Basis::Z, p));
        }
        for b in [Basis::X, Basis::Z] {
            for p in 1..=3 {
                assert!(op.commutes_with(&l.stabilizer(7, b, p)));
            }
        }
        assert!(op.anticommutes_with(&l.logical(7, Basis::X)));
    }
}
