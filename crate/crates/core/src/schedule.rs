//! Segmented-trap layout, microscopic schedules and their compilation.
//!
//! A [`Schedule`] is a line-oriented list of trap operations (crystal
//! splitting/merging, shuttling, rotations, sympathetic cooling, junction
//! crossings, gates, measurements, resets). Validation replays the ion
//! positions and enforces zone capacities, junction adjacency, the
//! gates-only-in-manipulation-zones rule and re-cooling before every
//! entangling gate. Compilation lowers a schedule to the executor's operation
//! stream and produces the deterministic error-free resource tally.

use crate::circuit::{CompiledOp, ReconfigKind, ResourceTally};
use crate::noise::{CrossingAccounting, NoiseParams};
use crate::stabilizer::{Angle, GateOp};
use std::collections::BTreeMap;
use std::fmt;

/// Storage and manipulation regions of one trap arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Zone {
    S1,
    S2,
    S3,
    M1,
    M2,
}

impl Zone {
    pub fn is_manipulation(self) -> bool {
        matches!(self, Zone::M1 | Zone::M2)
    }

    pub fn all() -> [Zone; 5] {
        [Zone::S1, Zone::S2, Zone::S3, Zone::M1, Zone::M2]
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Arms joined by Y junctions, with per-zone ion capacity.
#[derive(Debug, Clone)]
pub struct TrapLayout {
    pub n_arms: usize,
    pub junctions: Vec<(usize, usize)>,
    pub zone_capacity: usize,
}

impl TrapLayout {
    /// Two neighboring arms (transversal CNOT) plus a spare arm whose vacated
    /// zones serve as temporary storage.
    pub fn two_arms_with_spare() -> TrapLayout {
        TrapLayout { n_arms: 3, junctions: vec![(0, 1), (0, 2), (1, 2)], zone_capacity: 6 }
    }

    /// Three arms in a row: control–ancilla and ancilla–target adjacency
    /// (lattice surgery layout).
    pub fn three_arms_row() -> TrapLayout {
        TrapLayout { n_arms: 3, junctions: vec![(0, 1), (1, 2)], zone_capacity: 6 }
    }

    pub fn single_arm() -> TrapLayout {
        TrapLayout { n_arms: 1, junctions: vec![], zone_capacity: 6 }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.junctions.contains(&(a, b)) || self.junctions.contains(&(b, a))
    }
}

/// One ion of the register. Qubit-carrying ions use their qubit index as ion
/// id; cooling ions carry none and never receive qubit operations.
#[derive(Debug, Clone)]
pub struct Ion {
    pub label: String,
    pub qubit: Option<usize>,
    pub home: (usize, Zone),
}

#[derive(Debug, Clone)]
pub struct IonRegister {
    pub ions: Vec<Ion>,
}

impl IonRegister {
    pub fn positions(&self) -> Vec<(usize, Zone)> {
        self.ions.iter().map(|i| i.home).collect()
    }

    pub fn cooling_ions(&self) -> Vec<usize> {
        self.ions
            .iter()
            .enumerate()
            .filter(|(_, i)| i.qubit.is_none())
            .map(|(k, _)| k)
            .collect()
    }
}

/// One step of a microscopic schedule. Ion operands are register indices.
#[derive(Debug, Clone, PartialEq)]
pub enum ScheduleStep {
    Split { arm: usize, zone: Zone },
    Merge { arm: usize, zone: Zone },
    Shuttle { ions: Vec<usize>, to: (usize, Zone) },
    Rotate { arm: usize, zone: Zone },
    Cool { arm: usize, zone: Zone },
    JCross { ions: Vec<usize>, to: (usize, Zone) },
    Gate1q { gate: GateOp },
    Ms2 { a: usize, b: usize, sign: i8 },
    Ms5 { ions: [usize; 5], sign: i8 },
    Measure { ion: usize },
    Reset { ion: usize },
}

#[derive(Debug, Clone, Default)]
pub struct Schedule {
    pub steps: Vec<ScheduleStep>,
}

impl Schedule {
    pub fn new(steps: Vec<ScheduleStep>) -> Schedule {
        Schedule { steps }
    }

    pub fn extend(&mut self, steps: Vec<ScheduleStep>) {
        self.steps.extend(steps);
    }

    /// Line-oriented text rendering (one step per line) for inspection and
    /// for user-supplied schedule variants.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&step_to_line(s));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Schedule, String> {
        let mut steps = vec![];
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            steps.push(line_to_step(line).map_err(|e| format!("line {}: {e}", no + 1))?);
        }
        Ok(Schedule { steps })
    }
}

fn zone_from_str(s: &str) -> Result<Zone, String> {
    match s {
        "S1" => Ok(Zone::S1),
        "S2" => Ok(Zone::S2),
        "S3" => Ok(Zone::S3),
        "M1" => Ok(Zone::M1),
        "M2" => Ok(Zone::M2),
        _ => Err(format!("unknown zone {s}")),
    }
}

fn site_to_string(site: (usize, Zone)) -> String {
    format!("a{}:{}", site.0, site.1)
}

fn site_from_str(s: &str) -> Result<(usize, Zone), String> {
    let (arm, zone) = s.split_once(':').ok_or_else(|| format!("bad site {s}"))?;
    let arm = arm
        .strip_prefix('a')
        .and_then(|a| a.parse().ok())
        .ok_or_else(|| format!("bad arm in {s}"))?;
    Ok((arm, zone_from_str(zone)?))
}

fn ions_to_string(ions: &[usize]) -> String {
    ions.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn ions_from_str(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad ion list {s}")))
        .collect()
}

fn gate_to_line(g: &GateOp) -> String {
    let ang = |a: &Angle| match a {
        Angle::PlusHalf => "+",
        Angle::MinusHalf => "-",
        Angle::Pi => "pi",
    };
    match g {
        GateOp::Rx(q, a) => format!("rx{} {q}", ang(a)),
        GateOp::Ry(q, a) => format!("ry{} {q}", ang(a)),
        GateOp::Rz(q, a) => format!("rz{} {q}", ang(a)),
        GateOp::H(q) => format!("h {q}"),
        GateOp::S(q) => format!("s {q}"),
        GateOp::Cnot(c, t) => format!("cnot {c} {t}"),
        GateOp::Ms2(a, b, s) => format!("ms2 {a} {b} {}", if *s > 0 { "+" } else { "-" }),
        GateOp::Ms5(qs, s) => format!("ms5 {} {}", ions_to_string(qs), if *s > 0 { "+" } else { "-" }),
    }
}

fn step_to_line(s: &ScheduleStep) -> String {
    match s {
        ScheduleStep::Split { arm, zone } => format!("split a{arm} {zone}"),
        ScheduleStep::Merge { arm, zone } => format!("merge a{arm} {zone}"),
        ScheduleStep::Shuttle { ions, to } => {
            format!("shuttle {} {}", ions_to_string(ions), site_to_string(*to))
        }
        ScheduleStep::Rotate { arm, zone } => format!("rotate a{arm} {zone}"),
        ScheduleStep::Cool { arm, zone } => format!("cool a{arm} {zone}"),
        ScheduleStep::JCross { ions, to } => {
            format!("jcross {} {}", ions_to_string(ions), site_to_string(*to))
        }
        ScheduleStep::Gate1q { gate } => format!("gate {}", gate_to_line(gate)),
        ScheduleStep::Ms2 { a, b, sign } => {
            format!("ms2 {a} {b} {}", if *sign > 0 { "+" } else { "-" })
        }
        ScheduleStep::Ms5 { ions, sign } => {
            format!("ms5 {} {}", ions_to_string(ions), if *sign > 0 { "+" } else { "-" })
        }
        ScheduleStep::Measure { ion } => format!("measure {ion}"),
        ScheduleStep::Reset { ion } => format!("reset {ion}"),
    }
}

fn line_to_step(line: &str) -> Result<ScheduleStep, String> {
    let mut parts = line.split_whitespace();
    let kind = parts.next().ok_or("empty line")?;
    let rest: Vec<&str> = parts.collect();
    let arm_zone = |rest: &[&str]| -> Result<(usize, Zone), String> {
        if rest.len() != 2 {
            return Err(format!("expected arm and zone in {line}"));
        }
        let arm = rest[0]
            .strip_prefix('a')
            .and_then(|a| a.parse().ok())
            .ok_or_else(|| format!("bad arm {}", rest[0]))?;
        Ok((arm, zone_from_str(rest[1])?))
    };
    match kind {
        "split" => arm_zone(&rest).map(|(arm, zone)| ScheduleStep::Split { arm, zone }),
        "merge" => arm_zone(&rest).map(|(arm, zone)| ScheduleStep::Merge { arm, zone }),
        "rotate" => arm_zone(&rest).map(|(arm, zone)| ScheduleStep::Rotate { arm, zone }),
        "cool" => arm_zone(&rest).map(|(arm, zone)| ScheduleStep::Cool { arm, zone }),
        "shuttle" => Ok(ScheduleStep::Shuttle {
            ions: ions_from_str(rest.first().ok_or("missing ions")?)?,
            to: site_from_str(rest.get(1).ok_or("missing site")?)?,
        }),
        "jcross" => Ok(ScheduleStep::JCross {
            ions: ions_from_str(rest.first().ok_or("missing ions")?)?,
            to: site_from_str(rest.get(1).ok_or("missing site")?)?,
        }),
        "measure" => Ok(ScheduleStep::Measure {
            ion: rest.first().and_then(|s| s.parse().ok()).ok_or("bad ion")?,
        }),
        "reset" => Ok(ScheduleStep::Reset {
            ion: rest.first().and_then(|s| s.parse().ok()).ok_or("bad ion")?,
        }),
        "ms2" => Ok(ScheduleStep::Ms2 {
            a: rest.first().and_then(|s| s.parse().ok()).ok_or("bad ion")?,
            b: rest.get(1).and_then(|s| s.parse().ok()).ok_or("bad ion")?,
            sign: if rest.get(2) == Some(&"+") { 1 } else { -1 },
        }),
        "ms5" => {
            let ions = ions_from_str(rest.first().ok_or("missing ions")?)?;
            let ions: [usize; 5] = ions.try_into().map_err(|_| "ms5 needs 5 ions")?;
            Ok(ScheduleStep::Ms5 { ions, sign: if rest.get(1) == Some(&"+") { 1 } else { -1 } })
        }
        "gate" => {
            let g = rest.join(" ");
            parse_gate(&g).map(|gate| ScheduleStep::Gate1q { gate })
        }
        _ => Err(format!("unknown step kind {kind}")),
    }
}

fn parse_gate(s: &str) -> Result<GateOp, String> {
    let mut parts = s.split_whitespace();
    let name = parts.next().ok_or("empty gate")?;
    let args: Vec<&str> = parts.collect();
    let q = |i: usize| -> Result<usize, String> {
        args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| format!("bad gate arg in {s}"))
    };
    let ang = |suffix: &str| match suffix {
        "+" => Ok(Angle::PlusHalf),
        "-" => Ok(Angle::MinusHalf),
        "pi" => Ok(Angle::Pi),
        other => Err(format!("bad angle {other}")),
    };
    if let Some(suffix) = name.strip_prefix("rx") {
        return Ok(GateOp::Rx(q(0)?, ang(suffix)?));
    }
    if let Some(suffix) = name.strip_prefix("ry") {
        return Ok(GateOp::Ry(q(0)?, ang(suffix)?));
    }
    if let Some(suffix) = name.strip_prefix("rz") {
        return Ok(GateOp::Rz(q(0)?, ang(suffix)?));
    }
    match name {
        "h" => Ok(GateOp::H(q(0)?)),
        "s" => Ok(GateOp::S(q(0)?)),
        "cnot" => Ok(GateOp::Cnot(q(0)?, q(1)?)),
        _ => Err(format!("unknown gate {name}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub step: usize,
    pub message: String,
}

/// Replay a schedule over the register positions and report every rule
/// violation; never panics on malformed schedules.
pub fn validate(schedule: &Schedule, layout: &TrapLayout, register: &IonRegister) -> Vec<Violation> {
    let mut violations: Vec<Violation> = vec![];
    let mut pos = register.positions();
    let mut last_cooled: BTreeMap<(usize, Zone), usize> = BTreeMap::new();
    let mut last_changed: BTreeMap<(usize, Zone), usize> = BTreeMap::new();
    let occupancy = |pos: &[(usize, Zone)], site: (usize, Zone)| -> usize {
        pos.iter().filter(|&&p| p == site).count()
    };

    for (idx, step) in schedule.steps.iter().enumerate() {
        match step {
            ScheduleStep::Split { arm, zone }
            | ScheduleStep::Merge { arm, zone }
            | ScheduleStep::Rotate { arm, zone } => {
                last_changed.insert((*arm, *zone), idx);
            }
            ScheduleStep::Cool { arm, zone } => {
                let site = (*arm, *zone);
                if !register.cooling_ions().iter().any(|&c| pos[c] == site) {
                    violations.push(Violation {
                        step: idx,
                        message: format!(
                            "cool at {} without a cooling ion present",
                            site_to_string(site)
                        ),
                    });
                }
                last_cooled.insert(site, idx);
            }
            ScheduleStep::Shuttle { ions, to } | ScheduleStep::JCross { ions, to } => {
                if ions.is_empty() {
                    violations.push(Violation { step: idx, message: "empty transport".into() });
                    continue;
                }
                let from = pos[ions[0]];
                if ions.iter().any(|&i| pos[i] != from) {
                    violations.push(Violation {
                        step: idx,
                        message: "transported ions not co-located".into(),
                    });
                }
                if matches!(step, ScheduleStep::JCross { .. }) {
                    if !layout.adjacent(from.0, to.0) {
                        violations.push(Violation {
                            step: idx,
                            message: format!("arms {} and {} share no junction", from.0, to.0),
                        });
                    }
                } else if from.0 != to.0 {
                    violations.push(Violation {
                        step: idx,
                        message: "shuttle cannot change arms; use jcross".into(),
                    });
                }
                if occupancy(&pos, *to) + ions.len() > layout.zone_capacity {
                    violations.push(Violation {
                        step: idx,
                        message: format!("zone {} over capacity", site_to_string(*to)),
                    });
                }
                for &i in ions {
                    pos[i] = *to;
                }
                last_changed.insert(from, idx);
                last_changed.insert(*to, idx);
            }
            ScheduleStep::Ms2 { a, b, .. } => {
                check_entangle(&pos, &[*a, *b], idx, &last_cooled, &last_changed, &mut violations);
            }
            ScheduleStep::Ms5 { ions, .. } => {
                check_entangle(&pos, ions, idx, &last_cooled, &last_changed, &mut violations);
            }
            ScheduleStep::Gate1q { gate } => {
                for q in gate.targets() {
                    if !pos[q].1.is_manipulation() {
                        violations.push(Violation {
                            step: idx,
                            message: format!("1q gate on ion {q} outside a manipulation zone"),
                        });
                    }
                }
            }
            ScheduleStep::Measure { ion } | ScheduleStep::Reset { ion } => {
                if !pos[*ion].1.is_manipulation() {
                    violations.push(Violation {
                        step: idx,
                        message: format!(
                            "measurement/reset of ion {ion} outside a manipulation zone"
                        ),
                    });
                }
            }
        }
    }
    violations
}

fn check_entangle(
    pos: &[(usize, Zone)],
    ions: &[usize],
    idx: usize,
    last_cooled: &BTreeMap<(usize, Zone), usize>,
    last_changed: &BTreeMap<(usize, Zone), usize>,
    violations: &mut Vec<Violation>,
) {
    let site = pos[ions[0]];
    if ions.iter().any(|&i| pos[i] != site) {
        violations.push(Violation {
            step: idx,
            message: "entangling gate on ions in different zones".into(),
        });
        return;
    }
    if !site.1.is_manipulation() {
        violations.push(Violation {
            step: idx,
            message: format!("entangling gate in storage zone {}", site_to_string(site)),
        });
    }
    let cooled = last_cooled.get(&site).copied();
    let changed = last_changed.get(&site).copied();
    let ok = match (cooled, changed) {
        (Some(c), Some(m)) => c > m,
        (Some(_), None) => true,
        _ => false,
    };
    if !ok {
        violations.push(Violation {
            step: idx,
            message: format!(
                "entangling gate at {} without re-cooling after reconfiguration",
                site_to_string(site)
            ),
        });
    }
}

/// Compile a schedule into the executor's operation stream.
pub fn compile(schedule: &Schedule) -> Vec<CompiledOp> {
    let mut ops = vec![];
    for step in &schedule.steps {
        match step {
            ScheduleStep::Split { .. } => ops.push(CompiledOp::Reconfig { kind: ReconfigKind::Split }),
            ScheduleStep::Merge { .. } => ops.push(CompiledOp::Reconfig { kind: ReconfigKind::Merge }),
            ScheduleStep::Rotate { .. } => ops.push(CompiledOp::Reconfig { kind: ReconfigKind::Rotate }),
            ScheduleStep::Cool { .. } => ops.push(CompiledOp::Reconfig { kind: ReconfigKind::Cool }),
            ScheduleStep::Shuttle { .. } => {
                ops.push(CompiledOp::Reconfig { kind: ReconfigKind::Shuttle })
            }
            ScheduleStep::JCross { ions, .. } => {
                ops.push(CompiledOp::Cross { transported: ions.clone() })
            }
            ScheduleStep::Gate1q { gate } => ops.push(CompiledOp::Gate1q(*gate)),
            ScheduleStep::Ms2 { a, b, sign } => {
                ops.push(CompiledOp::Ms2 { a: *a, b: *b, sign: *sign })
            }
            ScheduleStep::Ms5 { ions, sign } => {
                ops.push(CompiledOp::Ms5 { qs: *ions, sign: *sign })
            }
            ScheduleStep::Measure { ion } => ops.push(CompiledOp::MeasureZ { q: *ion }),
            ScheduleStep::Reset { ion } => ops.push(CompiledOp::Reset { q: *ion }),
        }
    }
    ops
}

/// Deterministic error-free tally of a compiled operation stream under the
/// given parameters (wall clock uses the configured crossing accounting).
pub fn static_tally(ops: &[CompiledOp], params: &NoiseParams) -> ResourceTally {
    let mut t = ResourceTally::default();
    let d = &params.durations;
    for op in ops {
        match op {
            CompiledOp::Gate1q(_) => {
                t.one_qubit_gates += 1;
                t.elapsed_seconds += d.one_qubit;
            }
            CompiledOp::Ms2 { .. } => {
                t.two_qubit_ms += 1;
                t.elapsed_seconds += d.two_qubit_ms;
            }
            CompiledOp::Ms5 { .. } => {
                t.five_qubit_ms += 1;
                t.elapsed_seconds += d.five_qubit_ms;
            }
            CompiledOp::MeasureZ { .. } => {
                t.measurements += 1;
                t.elapsed_seconds += d.measurement;
            }
            CompiledOp::Reset { .. } => {
                t.resets += 1;
                t.elapsed_seconds += d.reset;
            }
            CompiledOp::Reconfig { kind } => {
                match kind {
                    ReconfigKind::Cool => t.cool_steps += 1,
                    _ => t.reorder_steps += 1,
                }
                t.elapsed_seconds += match kind {
                    ReconfigKind::Split | ReconfigKind::Merge => d.split_merge,
                    ReconfigKind::Shuttle => d.shuttle,
                    ReconfigKind::Rotate => d.rotation,
                    ReconfigKind::Cool => d.recool,
                };
            }
            CompiledOp::Cross { transported } => {
                t.junction_crossings += transported.len() as u64;
                let tc = params.t_cross();
                t.elapsed_seconds += match params.crossing_accounting {
                    CrossingAccounting::PerIon => tc * transported.len() as f64,
                    CrossingAccounting::PerEvent => tc,
                };
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_register() -> IonRegister {
        IonRegister {
            ions: vec![
                Ion { label: "d1".into(), qubit: Some(0), home: (0, Zone::S2) },
                Ion { label: "s".into(), qubit: Some(1), home: (0, Zone::M2) },
                Ion { label: "c".into(), qubit: None, home: (0, Zone::M2) },
            ],
        }
    }

    #[test]
    fn text_round_trip() {
        let sched = Schedule::new(vec![
            ScheduleStep::Split { arm: 0, zone: Zone::S2 },
            ScheduleStep::Shuttle { ions: vec![0], to: (0, Zone::M2) },
            ScheduleStep::Merge { arm: 0, zone: Zone::M2 },
            ScheduleStep::Cool { arm: 0, zone: Zone::M2 },
            ScheduleStep::Gate1q { gate: GateOp::Ry(1, Angle::PlusHalf) },
            ScheduleStep::Ms2 { a: 1, b: 0, sign: 1 },
            ScheduleStep::Measure { ion: 1 },
            ScheduleStep::Reset { ion: 1 },
            ScheduleStep::JCross { ions: vec![0], to: (1, Zone::S1) },
        ]);
        let text = sched.to_text();
        let parsed = Schedule::parse(&text).unwrap();
        assert_eq!(parsed.steps, sched.steps);
    }

    #[test]
    fn legal_gate_sequence_validates() {
        let layout = TrapLayout::two_arms_with_spare();
        let reg = toy_register();
        let sched = Schedule::new(vec![
            ScheduleStep::Split { arm: 0, zone: Zone::S2 },
            ScheduleStep::Shuttle { ions: vec![0], to: (0, Zone::M2) },
            ScheduleStep::Merge { arm: 0, zone: Zone::M2 },
            ScheduleStep::Cool { arm: 0, zone: Zone::M2 },
            ScheduleStep::Ms2 { a: 1, b: 0, sign: 1 },
        ]);
        assert!(validate(&sched, &layout, &reg).is_empty());
    }

    #[test]
    fn entangling_in_storage_zone_is_flagged() {
        let layout = TrapLayout::two_arms_with_spare();
        let mut reg = toy_register();
        reg.ions[1].home = (0, Zone::S2);
        reg.ions[2].home = (0, Zone::S2);
        let sched = Schedule::new(vec![
            ScheduleStep::Cool { arm: 0, zone: Zone::S2 },
            ScheduleStep::Ms2 { a: 1, b: 0, sign: 1 },
        ]);
        let v = validate(&sched, &layout, &reg);
        assert!(v.iter().any(|v| v.message.contains("storage zone")));
    }

    #[test]
    fn entangling_without_recool_is_flagged() {
        let layout = TrapLayout::two_arms_with_spare();
        let reg = toy_register();
        let sched = Schedule::new(vec![
            ScheduleStep::Split { arm: 0, zone: Zone::S2 },
            ScheduleStep::Shuttle { ions: vec![0], to: (0, Zone::M2) },
            ScheduleStep::Merge { arm: 0, zone: Zone::M2 },
            ScheduleStep::Ms2 { a: 1, b: 0, sign: 1 },
        ]);
        let v = validate(&sched, &layout, &reg);
        assert!(v.iter().any(|v| v.message.contains("re-cooling")));
    }

    #[test]
    fn jcross_requires_junction() {
        let layout = TrapLayout::three_arms_row(); // arms 0 and 2 not adjacent
        let reg = toy_register();
        let sched =
            Schedule::new(vec![ScheduleStep::JCross { ions: vec![0], to: (2, Zone::S1) }]);
        let v = validate(&sched, &layout, &reg);
        assert!(v.iter().any(|v| v.message.contains("junction")));
    }

    #[test]
    fn capacity_enforced() {
        let layout = TrapLayout { n_arms: 1, junctions: vec![], zone_capacity: 1 };
        let mut reg = toy_register();
        reg.ions[2].home = (0, Zone::S3);
        let sched =
            Schedule::new(vec![ScheduleStep::Shuttle { ions: vec![0], to: (0, Zone::M2) }]);
        let v = validate(&sched, &layout, &reg);
        assert!(v.iter().any(|v| v.message.contains("capacity")));
    }
}
