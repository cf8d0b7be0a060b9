//! Six-parameter stochastic Pauli error model and duration bookkeeping.
//!
//! Error channels per location class:
//!  - prep/measure: X with probability p_m (X after preparation, X before
//!    measurement),
//!  - 1q gate: uniform X/Y/Z with total p_1q,
//!  - 2q MS: uniform over the 15 nontrivial two-qubit Paulis with total p_2q,
//!  - 5q MS: uniform over the 1023 nontrivial five-qubit Paulis with total p_5q,
//!  - idle quantum: Z with p_idle(time_quantum, T2),
//!  - junction crossing: Z with p_cross on every qubit of the register for the
//!    duration of the crossing (the transported ions and the spectators alike
//!    dephase by exactly p_idle(t_cross) = p_cross).
//!
//! Durations default to the anticipated experimental values, with the
//! simulation-friendly simplification that 2- and 5-qubit MS gates,
//! measurements and state preparations all take as long as a crystal
//! split/merge, and 1-qubit rotations are instantaneous.

use crate::circuit::FaultClass;
use crate::pauli::{Pauli, PauliString};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Dephasing probability accumulated over time t with coherence time T2.
pub fn p_idle(t: f64, t2: f64) -> f64 {
    assert!(t >= 0.0 && t2 > 0.0);
    (1.0 - (-t / t2).exp()) / 2.0
}

/// Crossing duration that produces dephasing p_cross: the inverse of p_idle.
pub fn t_cross(p_cross: f64, t2: f64) -> Result<f64, NoiseError> {
    if !(0.0..0.5).contains(&p_cross) {
        return Err(NoiseError::InvalidDephasing(p_cross));
    }
    Ok(-t2 * (1.0 - 2.0 * p_cross).ln())
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum NoiseError {
    #[error("dephasing probability {0} outside [0, 1/2)")]
    InvalidDephasing(f64),
    #[error("probability {0} outside [0, 1)")]
    InvalidProbability(f64),
}

/// How junction-crossing time is charged to the wall clock.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingAccounting {
    /// t_cross × (ions in the transported group) per crossing event.
    PerIon,
    /// t_cross once per crossing event regardless of group size.
    PerEvent,
}

/// Operation durations in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Durations {
    pub one_qubit: f64,
    pub two_qubit_ms: f64,
    pub five_qubit_ms: f64,
    pub measurement: f64,
    pub reset: f64,
    pub recool: f64,
    pub shuttle: f64,
    pub split_merge: f64,
    pub rotation: f64,
}

impl Durations {
    /// Anticipated values with the paper's pessimistic simplification applied:
    /// MS gates, measurements and preparations all last one split/merge.
    pub fn anticipated() -> Durations {
        let sm = 30e-6;
        Durations {
            one_qubit: 0.0,
            two_qubit_ms: sm,
            five_qubit_ms: sm,
            measurement: sm,
            reset: sm,
            recool: 100e-6,
            shuttle: 5e-6,
            split_merge: sm,
            rotation: 20e-6,
        }
    }

    /// Raw anticipated hardware values without the simplification. Off the
    /// modeling assumptions used for the headline numbers; kept selectable
    /// from configuration and flagged in output metadata.
    pub fn anticipated_raw() -> Durations {
        Durations {
            one_qubit: 1e-6,
            two_qubit_ms: 15e-6,
            five_qubit_ms: 15e-6,
            measurement: 30e-6,
            reset: 10e-6,
            recool: 100e-6,
            shuttle: 5e-6,
            split_merge: 30e-6,
            rotation: 20e-6,
        }
    }
}

/// The six microscopic error rates plus T2 and duration bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseParams {
    pub p_m: f64,
    pub p_1q: f64,
    pub p_2q: f64,
    pub p_5q: f64,
    pub p_cross: f64,
    pub t2: f64,
    pub durations: Durations,
    /// Idle-dephasing quantum; defaults to the split/merge duration.
    pub time_quantum: f64,
    pub crossing_accounting: CrossingAccounting,
}

impl NoiseParams {
    /// Anticipated experimental values.
    pub fn anticipated() -> NoiseParams {
        NoiseParams {
            p_m: 1e-4,
            p_1q: 1e-5,
            p_2q: 2e-4,
            p_5q: 1e-3,
            p_cross: 1e-5,
            t2: 2.2,
            durations: Durations::anticipated(),
            time_quantum: 30e-6,
            crossing_accounting: CrossingAccounting::PerEvent,
        }
    }

    pub fn noiseless() -> NoiseParams {
        NoiseParams {
            p_m: 0.0,
            p_1q: 0.0,
            p_2q: 0.0,
            p_5q: 0.0,
            p_cross: 0.0,
            ..NoiseParams::anticipated()
        }
    }

    /// Single-parameter mode: probability p on every gate, preparation and
    /// measurement location; reconfiguration channels (idle, crossing) off.
    pub fn depolarizing(p: f64) -> NoiseParams {
        NoiseParams {
            p_m: p,
            p_1q: p,
            p_2q: p,
            p_5q: p,
            p_cross: 0.0,
            ..NoiseParams::anticipated()
        }
    }

    /// Idle dephasing per time quantum.
    pub fn p_idle_quantum(&self) -> f64 {
        p_idle(self.time_quantum, self.t2)
    }

    pub fn t_cross(&self) -> f64 {
        t_cross(self.p_cross, self.t2).expect("p_cross within range")
    }

    /// Error probability of one location of the given class.
    pub fn class_probability(&self, class: FaultClass) -> f64 {
        match class {
            FaultClass::PrepMeasure => self.p_m,
            FaultClass::OneQubit => self.p_1q,
            FaultClass::TwoQubitMs => self.p_2q,
            FaultClass::FiveQubitMs => self.p_5q,
            FaultClass::IdleQuantum => self.p_idle_quantum(),
            FaultClass::JunctionCross => self.p_cross,
        }
    }

    pub fn validate(&self) -> Result<(), NoiseError> {
        for p in [self.p_m, self.p_1q, self.p_2q, self.p_5q] {
            if !(0.0..1.0).contains(&p) {
                return Err(NoiseError::InvalidProbability(p));
            }
        }
        if !(0.0..0.5).contains(&self.p_cross) {
            return Err(NoiseError::InvalidDephasing(self.p_cross));
        }
        Ok(())
    }
}

/// Support size of the error channel attached to a location class.
pub fn channel_support_size(class: FaultClass) -> usize {
    match class {
        FaultClass::PrepMeasure => 1,
        FaultClass::OneQubit => 3,
        FaultClass::TwoQubitMs => 15,
        FaultClass::FiveQubitMs => 1023,
        FaultClass::IdleQuantum => 1,
        FaultClass::JunctionCross => 1,
    }
}

/// The k-th (0-based) element of a class's error support as a Pauli string on
/// the location's targets, embedded in an n-qubit register.
pub fn channel_element(n: usize, class: FaultClass, targets: &[usize], k: usize) -> PauliString {
    assert!(k < channel_support_size(class));
    match class {
        FaultClass::PrepMeasure => PauliString::single(n, targets[0], Pauli::X),
        FaultClass::IdleQuantum | FaultClass::JunctionCross => {
            PauliString::single(n, targets[0], Pauli::Z)
        }
        FaultClass::OneQubit => PauliString::single(n, targets[0], Pauli::NONTRIVIAL[k]),
        FaultClass::TwoQubitMs => multi_qubit_element(n, targets, k + 1),
        FaultClass::FiveQubitMs => multi_qubit_element(n, targets, k + 1),
    }
}

/// Index 1..4^m−1 interpreted base-4 over the targets (0=I,1=X,2=Y,3=Z).
fn multi_qubit_element(n: usize, targets: &[usize], mut code: usize) -> PauliString {
    let mut p = PauliString::identity(n);
    for &t in targets {
        let digit = code % 4;
        code /= 4;
        let kind = match digit {
            0 => Pauli::I,
            1 => Pauli::X,
            2 => Pauli::Y,
            _ => Pauli::Z,
        };
        p.set(t, kind);
    }
    p
}

/// Draw one error from a class's channel, or None with the complementary
/// probability. Uniform over the class support.
pub fn draw_error<R: Rng>(
    n: usize,
    class: FaultClass,
    targets: &[usize],
    params: &NoiseParams,
    rng: &mut R,
) -> Option<PauliString> {
    let p = params.class_probability(class);
    if p == 0.0 || rng.gen::<f64>() >= p {
        return None;
    }
    Some(draw_uniform_support(n, class, targets, rng))
}

/// Uniform draw from the nontrivial support of a class.
pub fn draw_uniform_support<R: Rng>(
    n: usize,
    class: FaultClass,
    targets: &[usize],
    rng: &mut R,
) -> PauliString {
    let size = channel_support_size(class);
    let k = if size == 1 { 0 } else { rng.gen_range(0..size) };
    channel_element(n, class, targets, k)
}

/// Z- and X-flip rates of the bare physical Bell-pair preparation under the
/// 2-qubit MS channel: 8 of the 15 Pauli errors flip each correlation.
pub fn bare_bell_reference(p_2q: f64) -> (f64, f64) {
    let rate = 8.0 * p_2q / 15.0;
    (rate, rate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_idle_limits() {
        assert_eq!(p_idle(0.0, 2.2), 0.0);
        assert!((p_idle(1e9, 2.2) - 0.5).abs() < 1e-12);
        let v = p_idle(2.2, 2.2);
        assert!((v - (1.0 - (-1.0f64).exp()) / 2.0).abs() < 1e-15);
        assert!((v - 0.3161).abs() < 1e-4);
    }

    #[test]
    fn t_cross_is_inverse_of_p_idle() {
        for p in [0.0, 1e-5, 5.2e-4, 1e-3, 0.2] {
            let t = t_cross(p, 2.2).unwrap();
            assert!((p_idle(t, 2.2) - p).abs() < 1e-12);
        }
        assert_eq!(t_cross(0.0, 2.2).unwrap(), 0.0);
        assert!(t_cross(0.5, 2.2).is_err());
    }

    #[test]
    fn t_cross_at_paper_break_even() {
        // p_cross = 5.2e-4 at T2 = 2.2 s gives ≈ 2.289 ms (the quoted 2 ms is
        // rounded).
        let t = t_cross(5.2e-4, 2.2).unwrap();
        assert!((t - 2.289e-3).abs() < 2e-6, "t = {t}");
    }

    #[test]
    fn channel_support_sizes() {
        assert_eq!(channel_support_size(FaultClass::TwoQubitMs), 15);
        assert_eq!(channel_support_size(FaultClass::FiveQubitMs), 1023);
        assert_eq!(channel_support_size(FaultClass::OneQubit), 3);
    }

    #[test]
    fn channel_elements_are_nontrivial_and_distinct() {
        let mut seen = std::collections::HashSet::new();
        for k in 0..15 {
            let p = channel_element(4, FaultClass::TwoQubitMs, &[1, 3], k);
            assert!(!p.is_identity());
            assert!(seen.insert(format!("{p:?}")));
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn zero_rate_channel_never_fires() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(3);
        let params = NoiseParams { p_1q: 0.0, ..NoiseParams::anticipated() };
        for _ in 0..1000 {
            assert!(draw_error(2, FaultClass::OneQubit, &[0], &params, &mut rng).is_none());
        }
    }

    #[test]
    fn bare_reference_value() {
        let (z, x) = bare_bell_reference(2e-4);
        assert!((z - 1.0667e-4).abs() < 1e-8);
        assert_eq!(z, x);
        assert_eq!(bare_bell_reference(0.0).0, 0.0);
    }
}
