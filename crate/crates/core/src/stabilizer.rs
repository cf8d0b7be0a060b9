//! Exact stabilizer simulation of Clifford circuits in tableau form.
//!
//! The register is tracked as a full Aaronson–Gottesman tableau (destabilizer
//! and stabilizer rows with sign bits). Gates are restricted to the trapped-ion
//! set: single-qubit rotations at Clifford angles (±π/2 and π), the
//! fully-entangling two-qubit MS gate X²(±π/2), its five-ion variant, and the
//! derived conveniences H, S and CNOT. Only ± signs are tracked; the ±i phases
//! that appear in intermediate row products always cancel for valid states.

use crate::pauli::{Pauli, PauliString};
use rand::Rng;

/// Rotation angle restricted to the Clifford set.
///
/// Any other angle is unrepresentable; [`Angle::from_half_turns`] is the
/// checked entry point for externally supplied values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Angle {
    PlusHalf,
    MinusHalf,
    Pi,
}

impl Angle {
    /// Accepts ±0.5 and ±1.0 (in units of π); anything else is rejected.
    pub fn from_half_turns(t: f64) -> Result<Angle, GateError> {
        if (t - 0.5).abs() < 1e-12 {
            Ok(Angle::PlusHalf)
        } else if (t + 0.5).abs() < 1e-12 {
            Ok(Angle::MinusHalf)
        } else if (t.abs() - 1.0).abs() < 1e-12 {
            Ok(Angle::Pi)
        } else {
            Err(GateError::NonCliffordAngle(t))
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GateError {
    #[error("rotation angle {0}π is not a Clifford angle (±π/2 or π)")]
    NonCliffordAngle(f64),
    #[error("duplicate targets in multi-qubit gate")]
    DuplicateTargets,
    #[error("qubit index {0} out of range for register of {1}")]
    OutOfRange(usize, usize),
}

/// A gate from the trapped-ion Clifford set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GateOp {
    Rx(usize, Angle),
    Ry(usize, Angle),
    Rz(usize, Angle),
    /// Fully entangling two-qubit MS gate X²(±π/2); sign +1 ⇒ θ=+π/2.
    Ms2(usize, usize, i8),
    /// Five-ion MS gate, the commuting product of X²(±π/2) over all 10 pairs.
    Ms5([usize; 5], i8),
    Cnot(usize, usize),
    H(usize),
    S(usize),
}

impl GateOp {
    pub fn targets(&self) -> Vec<usize> {
        match *self {
            GateOp::Rx(q, _) | GateOp::Ry(q, _) | GateOp::Rz(q, _) | GateOp::H(q) | GateOp::S(q) => vec![q],
            GateOp::Ms2(a, b, _) | GateOp::Cnot(a, b) => vec![a, b],
            GateOp::Ms5(qs, _) => qs.to_vec(),
        }
    }

    pub fn validate(&self, n: usize) -> Result<(), GateError> {
        let ts = self.targets();
        for &q in &ts {
            if q >= n {
                return Err(GateError::OutOfRange(q, n));
            }
        }
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                if ts[i] == ts[j] {
                    return Err(GateError::DuplicateTargets);
                }
            }
        }
        Ok(())
    }
}

/// Stabilizer state of `n` qubits as a destabilizer/stabilizer tableau.
#[derive(Clone)]
pub struct StabilizerState {
    n: usize,
    words: usize,
    /// 2n rows; row i < n are destabilizers, rows n..2n stabilizers.
    x: Vec<u64>,
    z: Vec<u64>,
    /// Sign bit per row: 1 ⇔ −1.
    r: Vec<u8>,
}

const WORD: usize = 64;

impl StabilizerState {
    /// The all-zeros state |0…0⟩ stabilized by {Z_1, …, Z_n}.
    pub fn new(n: usize) -> StabilizerState {
        assert!(n >= 1, "register must contain at least one qubit");
        let words = (n + WORD - 1) / WORD;
        let mut st = StabilizerState {
            n,
            words,
            x: vec![0; 2 * n * words],
            z: vec![0; 2 * n * words],
            r: vec![0; 2 * n],
        };
        for i in 0..n {
            // destabilizer i = X_i, stabilizer i = Z_i
            st.x[i * words + i / WORD] |= 1 << (i % WORD);
            st.z[(n + i) * words + i / WORD] |= 1 << (i % WORD);
        }
        st
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    fn bit(vec: &[u64], row: usize, words: usize, q: usize) -> bool {
        vec[row * words + q / WORD] >> (q % WORD) & 1 == 1
    }

    #[inline]
    fn xbit(&self, row: usize, q: usize) -> bool {
        Self::bit(&self.x, row, self.words, q)
    }

    #[inline]
    fn zbit(&self, row: usize, q: usize) -> bool {
        Self::bit(&self.z, row, self.words, q)
    }

    pub fn apply(&mut self, g: GateOp) {
        g.validate(self.n).expect("ill-formed gate");
        match g {
            GateOp::H(q) => self.h(q),
            GateOp::S(q) => self.rz_half(q, true),
            GateOp::Cnot(c, t) => self.cnot(c, t),
            GateOp::Rx(q, Angle::PlusHalf) => self.rx_half(q, true),
            GateOp::Rx(q, Angle::MinusHalf) => self.rx_half(q, false),
            GateOp::Rx(q, Angle::Pi) => self.pauli_phase(q, false, true),
            GateOp::Ry(q, Angle::PlusHalf) => self.ry_half(q, true),
            GateOp::Ry(q, Angle::MinusHalf) => self.ry_half(q, false),
            GateOp::Ry(q, Angle::Pi) => self.pauli_phase(q, true, true),
            GateOp::Rz(q, Angle::PlusHalf) => self.rz_half(q, true),
            GateOp::Rz(q, Angle::MinusHalf) => self.rz_half(q, false),
            GateOp::Rz(q, Angle::Pi) => self.pauli_phase(q, true, false),
            GateOp::Ms2(a, b, s) => self.ms2(a, b, s),
            GateOp::Ms5(qs, s) => self.ms5(&qs, s),
        }
    }

    /// Apply a Pauli operator (sign-irrelevant global action, exact phase on rows).
    pub fn apply_pauli(&mut self, p: &PauliString) {
        assert_eq!(p.n_qubits(), self.n);
        for q in 0..self.n {
            match p.get(q) {
                Pauli::I => {}
                Pauli::X => self.pauli_phase(q, false, true),
                Pauli::Z => self.pauli_phase(q, true, false),
                Pauli::Y => self.pauli_phase(q, true, true),
            }
        }
    }

    fn h(&mut self, q: usize) {
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        for row in 0..2 * self.n {
            let xi = self.x[row * self.words + w] & b;
            let zi = self.z[row * self.words + w] & b;
            if xi != 0 && zi != 0 {
                self.r[row] ^= 1;
            }
            self.x[row * self.words + w] ^= xi ^ zi;
            self.z[row * self.words + w] ^= xi ^ zi;
        }
    }

    /// RZ(±π/2); plus = S up to global phase.
    fn rz_half(&mut self, q: usize, plus: bool) {
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        for row in 0..2 * self.n {
            let xi = self.x[row * self.words + w] & b != 0;
            let zi = self.z[row * self.words + w] & b != 0;
            // +: flip sign on Y (X→Y, Y→−X); −: flip on X (X→−Y, Y→X)
            if xi && (zi == plus) {
                self.r[row] ^= 1;
            }
            if xi {
                self.z[row * self.words + w] ^= b;
            }
        }
    }

    /// RX(±π/2): +: Z→−Y, Y→Z; −: Z→Y, Y→−Z.
    fn rx_half(&mut self, q: usize, plus: bool) {
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        for row in 0..2 * self.n {
            let xi = self.x[row * self.words + w] & b != 0;
            let zi = self.z[row * self.words + w] & b != 0;
            if zi && (xi != plus) {
                self.r[row] ^= 1;
            }
            if zi {
                self.x[row * self.words + w] ^= b;
            }
        }
    }

    /// RY(±π/2): +: X→−Z, Z→X; −: X→Z, Z→−X.
    fn ry_half(&mut self, q: usize, plus: bool) {
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        for row in 0..2 * self.n {
            let xi = self.x[row * self.words + w] & b != 0;
            let zi = self.z[row * self.words + w] & b != 0;
            if xi != zi && (xi == plus) {
                self.r[row] ^= 1;
            }
            if xi != zi {
                self.x[row * self.words + w] ^= b;
                self.z[row * self.words + w] ^= b;
            }
        }
    }

    /// Conjugation by a Pauli on one qubit: flips signs of anticommuting rows.
    /// (zpart, xpart) = (true,false) ⇒ Z; (false,true) ⇒ X; (true,true) ⇒ Y.
    fn pauli_phase(&mut self, q: usize, zpart: bool, xpart: bool) {
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        for row in 0..2 * self.n {
            let xi = self.x[row * self.words + w] & b != 0;
            let zi = self.z[row * self.words + w] & b != 0;
            let anti = (zpart && xi) ^ (xpart && zi);
            if anti {
                self.r[row] ^= 1;
            }
        }
    }

    fn cnot(&mut self, c: usize, t: usize) {
        let (wc, bc) = (c / WORD, 1u64 << (c % WORD));
        let (wt, bt) = (t / WORD, 1u64 << (t % WORD));
        for row in 0..2 * self.n {
            let xc = self.x[row * self.words + wc] & bc != 0;
            let zc = self.z[row * self.words + wc] & bc != 0;
            let xt = self.x[row * self.words + wt] & bt != 0;
            let zt = self.z[row * self.words + wt] & bt != 0;
            if xc && zt && (xt == zc) {
                self.r[row] ^= 1;
            }
            if xc {
                self.x[row * self.words + wt] ^= bt;
            }
            if zt {
                self.z[row * self.words + wc] ^= bc;
            }
        }
    }

    /// X²(±π/2) as the gate sequence H,H,S(†),S(†),CZ,H,H.
    ///
    /// Sign convention realized here: X²(+π/2) conjugates Z_i → −Y_i X_j and
    /// Y_i → Z_i X_j (X operators invariant), matching the MS-gate propagation
    /// identities up to the free global sign choice.
    fn ms2(&mut self, a: usize, b: usize, sign: i8) {
        self.h(a);
        self.h(b);
        if sign > 0 {
            self.rz_half(a, true);
            self.rz_half(b, true);
            // CZ = H_b CNOT(a,b) H_b
            self.h(b);
            self.cnot(a, b);
            self.h(b);
        } else {
            self.h(b);
            self.cnot(a, b);
            self.h(b);
            self.rz_half(a, false);
            self.rz_half(b, false);
        }
        self.h(a);
        self.h(b);
    }

    /// Five-ion MS gate: commuting product of X²(sign·π/2) over all 10 pairs.
    fn ms5(&mut self, qs: &[usize; 5], sign: i8) {
        for i in 0..5 {
            for j in i + 1..5 {
                self.ms2(qs[i], qs[j], sign);
            }
        }
    }

    fn row_anticommutes(&self, row: usize, p: &PauliString) -> bool {
        let (px, pz) = p.xz_words();
        let mut parity = 0u32;
        for w in 0..self.words {
            parity ^= (self.x[row * self.words + w] & pz[w]).count_ones();
            parity ^= (self.z[row * self.words + w] & px[w]).count_ones();
        }
        parity & 1 == 1
    }

    /// Aaronson–Gottesman rowsum: row_h ← row_i · row_h, exact sign.
    fn rowsum(&mut self, h: usize, i: usize) {
        let mut iexp: u32 = (2 * (self.r[h] as u32 + self.r[i] as u32)) % 4;
        for q in 0..self.n {
            let a = Pauli::from_bits(self.xbit(i, q), self.zbit(i, q));
            let b = Pauli::from_bits(self.xbit(h, q), self.zbit(h, q));
            iexp = (iexp + g_exp(a, b)) % 4;
        }
        // Stabilizer-row targets always land on a real phase; destabilizer
        // rows may not, but their phase bits are never read.
        self.r[h] = if iexp == 2 || iexp == 3 { 1 } else { 0 };
        for w in 0..self.words {
            self.x[h * self.words + w] ^= self.x[i * self.words + w];
            self.z[h * self.words + w] ^= self.z[i * self.words + w];
        }
    }

    fn set_row(&mut self, row: usize, p: &PauliString, neg: bool) {
        let (px, pz) = p.xz_words();
        for w in 0..self.words {
            self.x[row * self.words + w] = px[w];
            self.z[row * self.words + w] = pz[w];
        }
        self.r[row] = neg as u8;
    }

    fn copy_row(&mut self, dst: usize, src: usize) {
        for w in 0..self.words {
            self.x[dst * self.words + w] = self.x[src * self.words + w];
            self.z[dst * self.words + w] = self.z[src * self.words + w];
        }
        self.r[dst] = self.r[src];
    }

    /// Expectation of a signed Pauli observable without collapsing:
    /// `Some(±1)` when the outcome is deterministic, `None` when it is random.
    pub fn expectation(&self, p: &PauliString) -> Option<i8> {
        assert!(!p.is_identity(), "measuring the identity is ill-defined");
        for row in self.n..2 * self.n {
            if self.row_anticommutes(row, p) {
                return None;
            }
        }
        Some(self.deterministic_value(p))
    }

    fn deterministic_value(&self, p: &PauliString) -> i8 {
        // Accumulate the stabilizer-group element with the same bit pattern as
        // p by following the destabilizer pairings.
        let mut acc = PauliString::identity(self.n);
        let mut neg = false;
        for i in 0..self.n {
            if self.row_anticommutes(i, p) {
                let row = self.row_pauli(self.n + i);
                let mut iexp = 0u32;
                for q in 0..self.n {
                    iexp = (iexp + g_exp(row.0.get(q), acc.get(q))) % 4;
                }
                acc.mul_assign_unchecked(&row.0);
                match (iexp + if row.1 { 2 } else { 0 }) % 4 {
                    0 => {}
                    2 => neg = !neg,
                    _ => unreachable!("stabilizer product left an imaginary phase"),
                }
            }
        }
        debug_assert_eq!(acc.support(), p.support());
        let same = neg == (p.sign() < 0);
        if same {
            1
        } else {
            -1
        }
    }

    /// Projective measurement of a signed Pauli observable.
    ///
    /// Deterministic outcomes leave the state unchanged; a random outcome
    /// updates the tableau so that `outcome · p` becomes a generator.
    pub fn measure_pauli<R: Rng>(&mut self, p: &PauliString, rng: &mut R) -> i8 {
        assert!(!p.is_identity(), "measuring the identity is ill-defined");
        let mut pivot = None;
        for row in self.n..2 * self.n {
            if self.row_anticommutes(row, p) {
                pivot = Some(row);
                break;
            }
        }
        let Some(pivot) = pivot else {
            return self.deterministic_value(p);
        };
        // Random branch.
        for row in 0..2 * self.n {
            if row != pivot && self.row_anticommutes(row, p) {
                self.rowsum(row, pivot);
            }
        }
        // Old stabilizer becomes the destabilizer conjugate to the new one.
        self.copy_row(pivot - self.n, pivot);
        let outcome: i8 = if rng.gen::<bool>() { 1 } else { -1 };
        // State stabilizes outcome·p.
        let neg = (outcome < 0) != (p.sign() < 0);
        self.set_row(pivot, p, neg);
        outcome
    }

    /// Reset qubit `q` to |0⟩: a Z measurement followed by a conditional flip.
    pub fn reset_qubit<R: Rng>(&mut self, q: usize, rng: &mut R) {
        let zq = PauliString::single(self.n, q, Pauli::Z);
        if self.measure_pauli(&zq, rng) < 0 {
            self.pauli_phase(q, false, true);
        }
    }

    fn row_pauli(&self, row: usize) -> (PauliString, bool) {
        let mut p = PauliString::identity(self.n);
        for q in 0..self.n {
            p.set(q, Pauli::from_bits(self.xbit(row, q), self.zbit(row, q)));
        }
        (p, self.r[row] == 1)
    }

    /// The current stabilizer generators, signs included.
    pub fn generators(&self) -> Vec<PauliString> {
        (self.n..2 * self.n)
            .map(|row| {
                let (mut p, neg) = self.row_pauli(row);
                if neg {
                    p.negate();
                }
                p
            })
            .collect()
    }

    /// Validity check used by tests: generators mutually commute and are
    /// symplectically independent (rank n), destabilizers pair correctly.
    pub fn check_invariants(&self) {
        let gens = self.generators();
        for i in 0..self.n {
            for j in i + 1..self.n {
                assert!(
                    gens[i].commutes_with(&gens[j]),
                    "generators {i} and {j} anticommute"
                );
            }
        }
        // Rank check via Gaussian elimination over GF(2) on [x|z].
        let mut rows: Vec<u128> = gens
            .iter()
            .map(|g| {
                let (x, z) = g.xz_words();
                (x[0] as u128) | ((z[0] as u128) << 64)
            })
            .collect();
        let mut rank = 0;
        for bit in 0..128u32 {
            if let Some(pos) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
                rows.swap(rank, pos);
                for i in 0..rows.len() {
                    if i != rank && rows[i] >> bit & 1 == 1 {
                        rows[i] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        assert_eq!(rank, self.n, "stabilizer generators are not independent");
        // Each destabilizer anticommutes with its own stabilizer only.
        for i in 0..self.n {
            let (d, _) = self.row_pauli(i);
            for j in 0..self.n {
                let anti = d.anticommutes_with(&{
                    let (p, _) = self.row_pauli(self.n + j);
                    p
                });
                assert_eq!(anti, i == j, "destabilizer pairing broken at ({i},{j})");
            }
        }
    }
}

impl PauliString {
    /// Bitwise product without phase tracking; only for internal accumulation
    /// where the phase is tracked separately.
    fn mul_assign_unchecked(&mut self, other: &PauliString) {
        let n = self.n_qubits();
        for q in 0..n {
            let a = self.get(q);
            let b = other.get(q);
            let (ax, az) = a.bits();
            let (bx, bz) = b.bits();
            self.set(q, Pauli::from_bits(ax ^ bx, az ^ bz));
        }
    }
}

fn g_exp(a: Pauli, b: Pauli) -> u32 {
    use Pauli::*;
    match (a, b) {
        (I, _) | (_, I) => 0,
        (X, X) | (Y, Y) | (Z, Z) => 0,
        (X, Y) => 1,
        (Y, X) => 3,
        (Y, Z) => 1,
        (Z, Y) => 3,
        (Z, X) => 1,
        (X, Z) => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn rng() -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(7)
    }

    fn pstr(n: usize, qubits: &[(usize, Pauli)]) -> PauliString {
        let mut p = PauliString::identity(n);
        for &(q, k) in qubits {
            p.set(q, k);
        }
        p
    }

    #[test]
    fn new_state_is_all_zeros() {
        let mut st = StabilizerState::new(3);
        let mut r = rng();
        for q in 0..3 {
            let zq = PauliString::single(3, q, Pauli::Z);
            assert_eq!(st.measure_pauli(&zq, &mut r), 1);
        }
        st.check_invariants();
    }

    #[test]
    fn rx_pi_flips_z_generator() {
        let mut st = StabilizerState::new(1);
        st.apply(GateOp::Rx(0, Angle::Pi));
        let gens = st.generators();
        assert_eq!(format!("{:?}", gens[0]), "-Z");
    }

    #[test]
    fn ms2_conjugation_matches_propagation_identities() {
        // On |00⟩ the generators are Z_1, Z_2; X²(+π/2) maps Z_i → −Y_i X_j.
        let mut st = StabilizerState::new(2);
        st.apply(GateOp::Ms2(0, 1, 1));
        let gens = st.generators();
        assert_eq!(format!("{:?}", gens[0]), "-YX");
        assert_eq!(format!("{:?}", gens[1]), "-XY");
        st.check_invariants();

        // Y_i → Z_i X_j: prepare Y eigenstates via S·H|0⟩ (stabilized by +Y).
        let mut st = StabilizerState::new(2);
        st.apply(GateOp::H(0));
        st.apply(GateOp::S(0));
        st.apply(GateOp::H(1));
        st.apply(GateOp::S(1));
        st.apply(GateOp::Ms2(0, 1, 1));
        let gens = st.generators();
        assert_eq!(format!("{:?}", gens[0]), "+ZX");
        assert_eq!(format!("{:?}", gens[1]), "+XZ");
    }

    #[test]
    fn ms2_pair_is_inverse() {
        let mut st = StabilizerState::new(2);
        st.apply(GateOp::H(0));
        st.apply(GateOp::Cnot(0, 1));
        let before = st.generators();
        st.apply(GateOp::Ms2(0, 1, 1));
        st.apply(GateOp::Ms2(0, 1, -1));
        assert_eq!(
            before.iter().map(|g| format!("{g:?}")).collect::<Vec<_>>(),
            st.generators().iter().map(|g| format!("{g:?}")).collect::<Vec<_>>()
        );
    }

    #[test]
    fn ms2_squared_equals_xx_action() {
        // X²(π/2)² = −i X_i X_j: conjugation action equals RX(π)⊗RX(π).
        let mut a = StabilizerState::new(2);
        a.apply(GateOp::H(0));
        a.apply(GateOp::Cnot(0, 1));
        let mut b = a.clone();
        a.apply(GateOp::Ms2(0, 1, 1));
        a.apply(GateOp::Ms2(0, 1, 1));
        b.apply(GateOp::Rx(0, Angle::Pi));
        b.apply(GateOp::Rx(1, Angle::Pi));
        assert_eq!(
            a.generators().iter().map(|g| format!("{g:?}")).collect::<Vec<_>>(),
            b.generators().iter().map(|g| format!("{g:?}")).collect::<Vec<_>>()
        );
    }

    #[test]
    fn cnot_conjugation() {
        // X_c → X_c X_t: start from |+0⟩ (gens X_1, Z_2).
        let mut st = StabilizerState::new(2);
        st.apply(GateOp::H(0));
        st.apply(GateOp::Cnot(0, 1));
        let gens = st.generators();
        assert_eq!(format!("{:?}", gens[0]), "+XX");
        assert_eq!(format!("{:?}", gens[1]), "+ZZ");
    }

    #[test]
    fn measurement_projection_is_idempotent() {
        let mut st = StabilizerState::new(1);
        let x0 = PauliString::single(1, 0, Pauli::X);
        let mut r = rng();
        let first = st.measure_pauli(&x0, &mut r);
        for _ in 0..5 {
            assert_eq!(st.measure_pauli(&x0, &mut r), first);
        }
        st.check_invariants();
    }

    #[test]
    fn signed_observable_measurement() {
        let mut st = StabilizerState::new(1);
        let mut minus_z = PauliString::single(1, 0, Pauli::Z);
        minus_z.negate();
        let mut r = rng();
        assert_eq!(st.measure_pauli(&minus_z, &mut r), -1);
    }

    #[test]
    fn reset_restores_zero() {
        let mut st = StabilizerState::new(2);
        let mut r = rng();
        st.apply(GateOp::Rx(0, Angle::Pi));
        st.apply(GateOp::H(1));
        st.reset_qubit(0, &mut r);
        st.reset_qubit(1, &mut r);
        for q in 0..2 {
            let zq = PauliString::single(2, q, Pauli::Z);
            assert_eq!(st.measure_pauli(&zq, &mut r), 1);
        }
    }

    #[test]
    fn ms5_equals_explicit_pair_product_any_order() {
        let mut r = rng();
        for _ in 0..20 {
            // Random-ish 5-qubit stabilizer state from a few random gates.
            let mut st = StabilizerState::new(5);
            for _ in 0..15 {
                let q = r.gen_range(0..5);
                match r.gen_range(0..4) {
                    0 => st.apply(GateOp::H(q)),
                    1 => st.apply(GateOp::S(q)),
                    2 => st.apply(GateOp::Rx(q, Angle::PlusHalf)),
                    _ => {
                        let p = (q + 1 + r.gen_range(0..4)) % 5;
                        st.apply(GateOp::Cnot(q, p));
                    }
                }
            }
            let mut a = st.clone();
            a.apply(GateOp::Ms5([0, 1, 2, 3, 4], 1));
            // Reversed pair ordering must give the identical tableau action.
            let mut b = st.clone();
            let mut pairs = vec![];
            for i in 0..5 {
                for j in i + 1..5 {
                    pairs.push((i, j));
                }
            }
            for &(i, j) in pairs.iter().rev() {
                b.apply(GateOp::Ms2(i, j, 1));
            }
            assert_eq!(
                a.generators().iter().map(|g| format!("{g:?}")).collect::<Vec<_>>(),
                b.generators().iter().map(|g| format!("{g:?}")).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn ms5_inverse_pair_is_identity() {
        let mut st = StabilizerState::new(5);
        st.apply(GateOp::H(2));
        st.apply(GateOp::Cnot(2, 4));
        let before: Vec<_> = st.generators().iter().map(|g| format!("{g:?}")).collect();
        st.apply(GateOp::Ms5([0, 1, 2, 3, 4], 1));
        st.apply(GateOp::Ms5([0, 1, 2, 3, 4], -1));
        let after: Vec<_> = st.generators().iter().map(|g| format!("{g:?}")).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn conjugation_preserves_commutation_for_all_gates() {
        let gates = [
            GateOp::H(0),
            GateOp::S(0),
            GateOp::Cnot(0, 1),
            GateOp::Rx(0, Angle::PlusHalf),
            GateOp::Ry(1, Angle::MinusHalf),
            GateOp::Rz(0, Angle::Pi),
            GateOp::Ms2(0, 1, 1),
            GateOp::Ms2(1, 2, -1),
        ];
        let mut r = rng();
        for g in gates {
            for _ in 0..40 {
                let mut p = PauliString::identity(3);
                let mut q = PauliString::identity(3);
                for i in 0..3 {
                    p.set(i, Pauli::NONTRIVIAL[r.gen_range(0..3)]);
                    if r.gen::<bool>() {
                        q.set(i, Pauli::NONTRIVIAL[r.gen_range(0..3)]);
                    }
                }
                // Conjugate both through the gate by pushing them through a
                // fresh tableau: encode P as the stabilizer of an auxiliary
                // construction — simpler: verify on the state level via signs.
                // [UPUt, UQUt] == [P, Q] reduces to checking the symplectic
                // form is preserved, which the tableau guarantees only if the
                // update rules are symplectic. Test exactly that:
                let before = p.anticommutes_with(&q);
                let (cp, cq) = (conjugate(&p, g), conjugate(&q, g));
                assert_eq!(cp.anticommutes_with(&cq), before, "gate {g:?}");
            }
        }
    }

    /// Conjugate an unsigned Pauli through a gate by abusing a tableau whose
    /// stabilizer rows start as the single-qubit Paulis composing it.
    fn conjugate(p: &PauliString, g: GateOp) -> PauliString {
        // Build a state, overwrite one stabilizer row with p, apply the gate,
        // and read the row back. Signs are not meaningful here, support is.
        let mut st = StabilizerState::new(3);
        st.set_row(3, p, false);
        st.apply(g);
        let (out, _) = st.row_pauli(3);
        out
    }

    #[test]
    fn angle_constructor_rejects_non_clifford() {
        assert!(Angle::from_half_turns(0.5).is_ok());
        assert!(Angle::from_half_turns(-1.0).is_ok());
        assert_eq!(
            Angle::from_half_turns(0.25),
            Err(GateError::NonCliffordAngle(0.25))
        );
    }

    #[test]
    fn gate_validation() {
        assert_eq!(
            GateOp::Ms5([0, 1, 2, 3, 3], 1).validate(7),
            Err(GateError::DuplicateTargets)
        );
        assert_eq!(
            GateOp::Cnot(0, 9).validate(7),
            Err(GateError::OutOfRange(9, 7))
        );
    }
}
