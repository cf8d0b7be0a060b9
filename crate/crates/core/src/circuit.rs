//! Fault locations, resource tallies, the Pauli frame, and the shot executor.
//!
//! A protocol is executed as a stream of primitive operations against a
//! [`ShotCtx`]. Each noisy primitive owns one fault location identified by
//! (class, ordinal), with ordinals counted in execution order; the census of
//! the error-free fully-FT path defines the reference location set used by the
//! samplers. Ordinals reached only on adaptive branches lie beyond the
//! reference census and assigned faults that are never reached are skipped and
//! recorded in the realized weights.

use crate::noise::{self, NoiseParams};
use crate::pauli::PauliString;
use crate::stabilizer::{GateOp, StabilizerState};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The six noise-parameter classes of fault locations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FaultClass {
    PrepMeasure,
    OneQubit,
    TwoQubitMs,
    FiveQubitMs,
    IdleQuantum,
    JunctionCross,
}

impl FaultClass {
    pub const ALL: [FaultClass; 6] = [
        FaultClass::PrepMeasure,
        FaultClass::OneQubit,
        FaultClass::TwoQubitMs,
        FaultClass::FiveQubitMs,
        FaultClass::IdleQuantum,
        FaultClass::JunctionCross,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            FaultClass::PrepMeasure => "prep-measure",
            FaultClass::OneQubit => "1q-gate",
            FaultClass::TwoQubitMs => "2q-ms",
            FaultClass::FiveQubitMs => "5q-ms",
            FaultClass::IdleQuantum => "idle-quantum",
            FaultClass::JunctionCross => "junction-cross",
        }
    }
}

/// One enumerated fault site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultLocation {
    pub class: FaultClass,
    pub ordinal: usize,
    pub targets: Vec<usize>,
}

/// Census of fault locations per class along the reference path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Census {
    pub counts: [usize; 6],
}

impl Census {
    pub fn count(&self, class: FaultClass) -> usize {
        self.counts[class.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Prescribed errors: (class, ordinal) → index into the class's channel
/// support. The executor materializes the Pauli when the location is reached
/// and its targets are known.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FaultAssignment {
    pub entries: BTreeMap<(FaultClass, usize), u16>,
}

impl FaultAssignment {
    pub fn single(class: FaultClass, ordinal: usize, support_index: u16) -> FaultAssignment {
        let mut entries = BTreeMap::new();
        entries.insert((class, ordinal), support_index);
        FaultAssignment { entries }
    }

    pub fn weight(&self, class: FaultClass) -> usize {
        self.entries.keys().filter(|(c, _)| *c == class).count()
    }
}

/// Noise regime of one shot.
#[derive(Clone, Copy)]
pub enum NoiseMode<'a> {
    /// No errors; used for censusing and noiseless checks.
    Noiseless,
    /// Inject exactly the assigned errors (subset sampling, FT verification).
    Assigned(&'a FaultAssignment),
    /// Independent per-location Bernoulli draws (traditional sampling).
    Traditional,
}

/// Running counts of executed operations and elapsed schedule time.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ResourceTally {
    pub one_qubit_gates: u64,
    pub two_qubit_ms: u64,
    pub five_qubit_ms: u64,
    pub measurements: u64,
    pub resets: u64,
    /// Junction crossings, counted per transported ion.
    pub junction_crossings: u64,
    pub reorder_steps: u64,
    pub cool_steps: u64,
    pub elapsed_seconds: f64,
}

/// Pending Pauli corrections plus the recorded ±1 parities of a run.
///
/// In frame mode corrections accumulate here and measurement outcomes are
/// reinterpreted through the frame; in inline mode every recorded correction
/// is applied to the state immediately. Both modes must produce identical
/// verdicts.
#[derive(Debug, Clone)]
pub struct PauliFrame {
    pending: PauliString,
    inline: bool,
    pub parities: Vec<(&'static str, i8)>,
}

impl PauliFrame {
    pub fn new(n: usize, inline: bool) -> PauliFrame {
        PauliFrame { pending: PauliString::identity(n), inline, parities: vec![] }
    }

    pub fn record_correction(&mut self, state: &mut StabilizerState, correction: &PauliString) {
        if correction.is_identity() {
            return;
        }
        if self.inline {
            state.apply_pauli(correction);
        } else {
            self.pending.mul_assign(correction);
        }
    }

    /// Sign the frame contributes to a measurement of observable `obs`.
    pub fn sign_for(&self, obs: &PauliString) -> i8 {
        if self.pending.anticommutes_with(obs) {
            -1
        } else {
            1
        }
    }

    pub fn record_parity(&mut self, name: &'static str, value: i8) {
        self.parities.push((name, value));
    }

    pub fn parity(&self, name: &str) -> Option<i8> {
        self.parities.iter().rev().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    /// Apply all pending corrections to the state (verdict time).
    pub fn flush(&mut self, state: &mut StabilizerState) {
        if !self.pending.is_identity() {
            state.apply_pauli(&self.pending);
            self.pending = PauliString::identity(self.pending.n_qubits());
        }
    }

    pub fn pending(&self) -> &PauliString {
        &self.pending
    }
}

/// Reconfiguration step kinds with a duration but no dedicated error channel
/// beyond idle dephasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReconfigKind {
    Split,
    Merge,
    Shuttle,
    Rotate,
    Cool,
}

/// Executor state for one shot of one protocol.
pub struct ShotCtx<'a> {
    pub state: StabilizerState,
    pub params: &'a NoiseParams,
    pub mode: NoiseMode<'a>,
    pub rng: ChaCha12Rng,
    /// Qubits subject to idle dephasing and crossing errors.
    pub noisy_qubits: Vec<usize>,
    pub counters: [usize; 6],
    pub realized: [usize; 6],
    pub tally: ResourceTally,
    pub frame: PauliFrame,
    /// Set once any error is detected by the protocol logic.
    pub error_detected: bool,
    /// Monotone low-resource switch: once set, FT constraints are dropped.
    pub low_resource: bool,
    pub trace: Option<Vec<String>>,
}

impl<'a> ShotCtx<'a> {
    pub fn new(
        n: usize,
        noisy_qubits: Vec<usize>,
        params: &'a NoiseParams,
        mode: NoiseMode<'a>,
        rng: ChaCha12Rng,
        frame_inline: bool,
    ) -> ShotCtx<'a> {
        ShotCtx {
            state: StabilizerState::new(n),
            params,
            mode,
            rng,
            noisy_qubits,
            counters: [0; 6],
            realized: [0; 6],
            tally: ResourceTally::default(),
            frame: PauliFrame::new(n, frame_inline),
            error_detected: false,
            low_resource: false,
            trace: None,
        }
    }

    pub fn n(&self) -> usize {
        self.state.n_qubits()
    }

    fn tracef(&mut self, line: String) {
        if let Some(t) = &mut self.trace {
            t.push(line);
        }
    }

    /// Claim the next fault location of a class and inject its error if the
    /// noise mode prescribes one.
    fn fault_point(&mut self, class: FaultClass, targets: &[usize]) {
        let ordinal = self.counters[class.index()];
        self.counters[class.index()] += 1;
        let n = self.n();
        let error = match self.mode {
            NoiseMode::Noiseless => None,
            NoiseMode::Assigned(assignment) => assignment
                .entries
                .get(&(class, ordinal))
                .map(|&k| noise::channel_element(n, class, targets, k as usize)),
            NoiseMode::Traditional => {
                noise::draw_error(n, class, targets, self.params, &mut self.rng)
            }
        };
        if let Some(e) = error {
            self.realized[class.index()] += 1;
            self.tracef(format!("fault {} #{ordinal} -> {e:?}", class.name()));
            self.state.apply_pauli(&e);
        }
    }

    /// Mark the flag/error guards in the trace.
    pub fn note_detected(&mut self, why: &str) {
        if !self.error_detected {
            self.tracef(format!("error-detected: {why}"));
        }
        self.error_detected = true;
    }

    pub fn set_low_resource(&mut self, why: &str) {
        if !self.low_resource {
            self.tracef(format!("low-resource: {why}"));
        }
        self.low_resource = true;
        self.error_detected = true;
    }

    /// Single-qubit rotation: instantaneous, one 1q fault location.
    pub fn gate_1q(&mut self, g: GateOp) {
        let targets = g.targets();
        debug_assert_eq!(targets.len(), 1);
        self.tracef(format!("gate {g:?}"));
        self.state.apply(g);
        self.tally.one_qubit_gates += 1;
        self.tally.elapsed_seconds += self.params.durations.one_qubit;
        self.fault_point(FaultClass::OneQubit, &targets);
    }

    /// Two-qubit MS gate step: gate error plus idle dephasing on spectators.
    pub fn ms2(&mut self, a: usize, b: usize, sign: i8) {
        self.tracef(format!("ms2 {a} {b} {sign:+}"));
        self.state.apply(GateOp::Ms2(a, b, sign));
        self.tally.two_qubit_ms += 1;
        self.fault_point(FaultClass::TwoQubitMs, &[a, b]);
        self.timed_idle(self.params.durations.two_qubit_ms, &[a, b]);
    }

    /// Five-qubit MS gate step.
    pub fn ms5(&mut self, qs: [usize; 5], sign: i8) {
        self.tracef(format!("ms5 {qs:?} {sign:+}"));
        self.state.apply(GateOp::Ms5(qs, sign));
        self.tally.five_qubit_ms += 1;
        self.fault_point(FaultClass::FiveQubitMs, &qs);
        self.timed_idle(self.params.durations.five_qubit_ms, &qs);
    }

    /// Z-basis measurement with an X-flip location before the readout.
    /// Returns the raw physical outcome.
    pub fn measure_z(&mut self, q: usize) -> i8 {
        self.fault_point(FaultClass::PrepMeasure, &[q]);
        let zq = PauliString::single(self.n(), q, crate::pauli::Pauli::Z);
        let outcome = self.state.measure_pauli(&zq, &mut self.rng);
        self.tally.measurements += 1;
        self.timed_idle(self.params.durations.measurement, &[q]);
        self.tracef(format!("measure {q} -> {outcome:+}"));
        outcome
    }

    /// Reset to |0⟩ with an X-flip location after the preparation.
    pub fn reset(&mut self, q: usize) {
        self.tracef(format!("reset {q}"));
        self.state.reset_qubit(q, &mut self.rng);
        self.tally.resets += 1;
        self.timed_idle(self.params.durations.reset, &[q]);
        self.fault_point(FaultClass::PrepMeasure, &[q]);
    }

    /// Crystal reconfiguration step: duration plus idle dephasing on all
    /// participating qubits.
    pub fn reconfig(&mut self, kind: ReconfigKind, count: u64) {
        let d = match kind {
            ReconfigKind::Split | ReconfigKind::Merge => self.params.durations.split_merge,
            ReconfigKind::Shuttle => self.params.durations.shuttle,
            ReconfigKind::Rotate => self.params.durations.rotation,
            ReconfigKind::Cool => self.params.durations.recool,
        };
        match kind {
            ReconfigKind::Cool => self.tally.cool_steps += count,
            _ => self.tally.reorder_steps += count,
        }
        for _ in 0..count {
            self.timed_idle(d, &[]);
        }
        self.tracef(format!("reconfig {kind:?} x{count}"));
    }

    /// A junction-crossing event: Z-with-p_cross location on every noisy qubit
    /// (transported ions and spectators dephase alike for the crossing time);
    /// wall-clock charged per the configured accounting mode.
    pub fn cross_event(&mut self, transported: &[usize]) {
        self.tally.junction_crossings += transported.len() as u64;
        let t = self.params.t_cross();
        self.tally.elapsed_seconds += match self.params.crossing_accounting {
            noise::CrossingAccounting::PerIon => t * transported.len() as f64,
            noise::CrossingAccounting::PerEvent => t,
        };
        self.tracef(format!("jcross {transported:?}"));
        let qubits = self.noisy_qubits.clone();
        for q in qubits {
            self.fault_point(FaultClass::JunctionCross, &[q]);
        }
    }

    /// Advance time by `duration`, dephasing every noisy qubit not in `busy`
    /// for the whole-quantum count (rounded up).
    fn timed_idle(&mut self, duration: f64, busy: &[usize]) {
        self.tally.elapsed_seconds += duration;
        if duration <= 0.0 {
            return;
        }
        let quanta = (duration / self.params.time_quantum).ceil() as usize;
        let qubits: Vec<usize> = self
            .noisy_qubits
            .iter()
            .copied()
            .filter(|q| !busy.contains(q))
            .collect();
        for _ in 0..quanta {
            for &q in &qubits {
                self.fault_point(FaultClass::IdleQuantum, &[q]);
            }
        }
    }

    /// Census snapshot of the locations claimed so far.
    pub fn census(&self) -> Census {
        Census { counts: self.counters }
    }

    /// Assigned locations whose ordinal was never reached on this path.
    pub fn skipped(&self) -> Vec<(FaultClass, usize)> {
        match self.mode {
            NoiseMode::Assigned(a) => a
                .entries
                .keys()
                .filter(|&&(c, ord)| ord >= self.counters[c.index()])
                .copied()
                .collect(),
            _ => vec![],
        }
    }

    /// Frame-adjusted interpretation of an outcome that semantically measured
    /// the observable `obs`.
    pub fn adjust(&self, raw: i8, obs: &PauliString) -> i8 {
        raw * self.frame.sign_for(obs)
    }

    /// Record a correction through the frame (inline mode applies it now).
    pub fn record_correction(&mut self, correction: &PauliString) {
        self.tracef(format!("correction {correction:?}"));
        self.frame.record_correction(&mut self.state, correction);
    }
}

/// One executable operation produced by schedule compilation.
#[derive(Debug, Clone, PartialEq)]
pub enum CompiledOp {
    Gate1q(GateOp),
    Ms2 { a: usize, b: usize, sign: i8 },
    Ms5 { qs: [usize; 5], sign: i8 },
    MeasureZ { q: usize },
    Reset { q: usize },
    Reconfig { kind: ReconfigKind },
    Cross { transported: Vec<usize> },
}

impl<'a> ShotCtx<'a> {
    pub fn run_op(&mut self, op: &CompiledOp) -> Option<i8> {
        match op {
            CompiledOp::Gate1q(g) => {
                self.gate_1q(*g);
                None
            }
            CompiledOp::Ms2 { a, b, sign } => {
                self.ms2(*a, *b, *sign);
                None
            }
            CompiledOp::Ms5 { qs, sign } => {
                self.ms5(*qs, *sign);
                None
            }
            CompiledOp::MeasureZ { q } => Some(self.measure_z(*q)),
            CompiledOp::Reset { q } => {
                self.reset(*q);
                None
            }
            CompiledOp::Reconfig { kind } => {
                self.reconfig(*kind, 1);
                None
            }
            CompiledOp::Cross { transported } => {
                self.cross_event(transported);
                None
            }
        }
    }

    /// Execute a compiled block, collecting measurement outcomes in order.
    pub fn run_block(&mut self, ops: &[CompiledOp]) -> Vec<i8> {
        let mut outcomes = vec![];
        for op in ops {
            if let Some(m) = self.run_op(op) {
                outcomes.push(m);
            }
        }
        outcomes
    }
}

/// Render an executed trace as line-oriented text (debug dump).
pub fn dump_trace(lines: &[String]) -> String {
    let mut out = String::new();
    for l in lines {
        out.push_str(l);
        out.push('\n');
    }
    out
}
