//! Condition-level diagnosis of a distribution and exhaustive verification
//! of the representation criteria over a whole system class.
//!
//! [`diagnose`] evaluates the distributional conditions only and predicts
//! which representations hold for every system. [`verify_theorems`]
//! enumerates every system of a class, evaluates the representations
//! directly at every breakpoint, and cross-checks each equivalence between
//! a representation and its distributional criterion. A disagreement
//! between two independently computed sides is reported as
//! [`Error::Inconsistency`], which can only mean a defect in this crate.

use serde_json::{json, Value};

use crate::distribution::{LifetimeDistribution, QualityFunction, WeakWitness, MAX_ORDERING_COMPONENTS};
use crate::error::{Error, Result};
use crate::io::system_to_json;
use crate::scalar::Scalar;
use crate::signature::{boland_signature, probability_signature, Signature, WeightFunction};
use crate::structure::{decode_state, enumerate_systems, StructureFunction, SystemClass};

use super::{mix_order_statistics, probability_signature_oracle, reliability_from_states, system_lifetime};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// Verdicts inferred from the distributional conditions.
    Predicted,
    /// Verdicts computed over every system of a class.
    Verified,
}

/// Conditions at one breakpoint `t`; they hold on `[t, next breakpoint)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalDiagnosis<T> {
    pub t: T,
    pub states_exchangeable: bool,
    pub condition_q: Option<bool>,
    /// Verified mode only: the system-signature mixture is exact for every system at `t`.
    pub boland_representation: Option<bool>,
    /// Verified mode only: the probability-signature mixture is exact for every system at `t`.
    pub probability_representation: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateWitness<T> {
    pub t: T,
    pub first: usize,
    pub second: usize,
    pub first_prob: T,
    pub second_prob: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionWitness<T> {
    pub t: T,
    pub state: usize,
    pub prob: T,
    pub weighted_level_total: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RepresentationWitness<T> {
    pub system: StructureFunction,
    pub breakpoint_index: usize,
    pub t: T,
    pub reliability: T,
    pub representation: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignatureWitness<T> {
    pub system: StructureFunction,
    pub system_signature: Signature<T>,
    pub probability_signature: Signature<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witnesses<T> {
    pub states: Option<StateWitness<T>>,
    pub condition_q: Option<ConditionWitness<T>>,
    pub q_asymmetry: Option<usize>,
    pub weak_exchangeability: Option<WeakWitness<T>>,
    pub boland_representation: Option<RepresentationWitness<T>>,
    pub probability_representation: Option<RepresentationWitness<T>>,
    pub signatures: Option<SignatureWitness<T>>,
}

impl<T> Default for Witnesses<T> {
    fn default() -> Self {
        Witnesses {
            states: None,
            condition_q: None,
            q_asymmetry: None,
            weak_exchangeability: None,
            boland_representation: None,
            probability_representation: None,
            signatures: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosisReport<T> {
    pub mode: ReportMode,
    pub n: usize,
    pub class: Option<SystemClass>,
    pub systems_checked: usize,
    pub has_ties: bool,
    pub quality: QualityFunction<T>,
    pub q_symmetric: bool,
    pub states_exchangeable_everywhere: bool,
    pub lifetimes_exchangeable: bool,
    /// `None` when the distribution has ties or too many components.
    pub weakly_exchangeable: Option<bool>,
    pub skipped_orderings: Vec<Vec<usize>>,
    /// `None` when the distribution has ties.
    pub condition_q_everywhere: Option<bool>,
    pub intervals: Vec<IntervalDiagnosis<T>>,
    /// The system-signature mixture equals the reliability for every system and time.
    pub boland_representation_all: bool,
    /// The probability-signature mixture equals the reliability for every system and time.
    pub probability_representation_all: Option<bool>,
    pub both_representations: Option<bool>,
    /// Probability and system signatures coincide for every system.
    pub signatures_agree_all: Option<bool>,
    pub witnesses: Witnesses<T>,
}

/// Evaluates every distributional condition and predicts the verdicts.
pub fn diagnose<T: Scalar>(d: &LifetimeDistribution<T>) -> Result<DiagnosisReport<T>> {
    let n = d.n();
    let has_ties = d.has_ties();
    let quality = d.relative_quality();
    let q_weights = WeightFunction::from_quality(&quality);
    let mut witnesses = Witnesses::default();

    let mut intervals = Vec::new();
    for t in d.breakpoints() {
        let sd = d.state_distribution(&t)?;
        let exch = sd.exchangeability_witness();
        if let (Some((a, b)), None) = (exch, &witnesses.states) {
            witnesses.states = Some(StateWitness {
                t: t.clone(),
                first: a,
                second: b,
                first_prob: sd.prob(a).clone(),
                second_prob: sd.prob(b).clone(),
            });
        }
        let condition_q = if has_ties {
            None
        } else {
            let violation = sd.condition_w_witness(&q_weights)?;
            if let (Some(s), None) = (violation, &witnesses.condition_q) {
                witnesses.condition_q = Some(ConditionWitness {
                    t: t.clone(),
                    state: s,
                    prob: sd.prob(s).clone(),
                    weighted_level_total: q_weights.get(s).clone() * sd.level_total(crate::structure::level(s)),
                });
            }
            Some(violation.is_none())
        };
        intervals.push(IntervalDiagnosis {
            t,
            states_exchangeable: exch.is_none(),
            condition_q,
            boland_representation: None,
            probability_representation: None,
        });
    }

    let states_exchangeable_everywhere = intervals.iter().all(|i| i.states_exchangeable);
    let condition_q_everywhere = (!has_ties).then(|| intervals.iter().all(|i| i.condition_q == Some(true)));
    witnesses.q_asymmetry = quality.asymmetry_witness();
    let q_symmetric = witnesses.q_asymmetry.is_none();

    let (weakly_exchangeable, skipped_orderings) = if has_ties || n > MAX_ORDERING_COMPONENTS {
        (None, Vec::new())
    } else {
        let weak = d.weak_exchangeability()?;
        witnesses.weak_exchangeability = weak.witness;
        (Some(weak.holds), weak.skipped_orderings)
    };

    let no_ties = !has_ties;
    Ok(DiagnosisReport {
        mode: ReportMode::Predicted,
        n,
        class: None,
        systems_checked: 0,
        has_ties,
        q_symmetric,
        states_exchangeable_everywhere,
        lifetimes_exchangeable: d.lifetimes_exchangeable(),
        weakly_exchangeable,
        skipped_orderings,
        condition_q_everywhere,
        intervals,
        boland_representation_all: states_exchangeable_everywhere,
        probability_representation_all: condition_q_everywhere,
        both_representations: no_ties.then_some(q_symmetric && states_exchangeable_everywhere),
        signatures_agree_all: no_ties.then_some(q_symmetric),
        quality,
        witnesses,
    })
}

fn inconsistency(theorem: &'static str, detail: String) -> Error {
    Error::Inconsistency { theorem, detail }
}

/// Enumerates every system of `class` on `d.n()` components and checks both
/// representations directly at every breakpoint, then asserts that each
/// verdict agrees with its distributional criterion.
pub fn verify_theorems<T: Scalar>(d: &LifetimeDistribution<T>, class: SystemClass) -> Result<DiagnosisReport<T>> {
    let n = d.n();
    class.check_arity(n)?;
    let systems = enumerate_systems(n, class)?;
    let mut report = diagnose(d)?;
    let no_ties = !report.has_ties;

    let states: Vec<_> = report
        .intervals
        .iter()
        .map(|i| d.state_distribution(&i.t))
        .collect::<Result<_>>()?;
    let mut boland_ok = vec![true; states.len()];
    let mut prob_ok = vec![true; states.len()];
    let mut all_agree = true;
    let mut witnesses = Witnesses::default();

    for phi in &systems {
        let system_sig = boland_signature::<T>(phi)?;
        let prob_sig = if no_ties {
            let q_based = probability_signature(phi, &report.quality)?;
            let oracle = probability_signature_oracle(phi, d)?;
            if !q_based.approx_eq(&oracle) {
                return Err(inconsistency(
                    "probability signature from the quality function vs atom-level oracle",
                    format!("system {}", phi.bit_string()),
                ));
            }
            if !q_based.approx_eq(&system_sig) {
                all_agree = false;
                if witnesses.signatures.is_none() {
                    witnesses.signatures = Some(SignatureWitness {
                        system: phi.clone(),
                        system_signature: system_sig.clone(),
                        probability_signature: q_based.clone(),
                    });
                }
            }
            Some(q_based)
        } else {
            None
        };
        let lifetimes: Vec<T> = d
            .atoms()
            .iter()
            .map(|a| system_lifetime(phi, &a.lifetimes))
            .collect::<Result<_>>()?;

        for (idx, sd) in states.iter().enumerate() {
            let t = sd.t();
            let reliability = reliability_from_states(phi, sd);
            let by_atoms = d
                .atoms()
                .iter()
                .zip(&lifetimes)
                .filter(|(_, life)| *life > t)
                .fold(T::zero(), |acc, (a, _)| acc + a.prob.clone());
            if !reliability.approx_eq(&by_atoms) {
                return Err(inconsistency(
                    "reliability from the state distribution vs atom scan",
                    format!("system {} at t = {}", phi.bit_string(), t.to_text()),
                ));
            }

            let boland = mix_order_statistics(&system_sig, sd);
            if !boland.approx_eq(&reliability) {
                boland_ok[idx] = false;
                if witnesses.boland_representation.is_none() {
                    witnesses.boland_representation = Some(RepresentationWitness {
                        system: phi.clone(),
                        breakpoint_index: idx,
                        t: t.clone(),
                        reliability: reliability.clone(),
                        representation: boland,
                    });
                }
            }
            if let Some(p) = &prob_sig {
                let mixture = mix_order_statistics(p, sd);
                if !mixture.approx_eq(&reliability) {
                    prob_ok[idx] = false;
                    if witnesses.probability_representation.is_none() {
                        witnesses.probability_representation = Some(RepresentationWitness {
                            system: phi.clone(),
                            breakpoint_index: idx,
                            t: t.clone(),
                            reliability,
                            representation: mixture,
                        });
                    }
                }
            }
        }
    }

    for (idx, interval) in report.intervals.iter_mut().enumerate() {
        if boland_ok[idx] != interval.states_exchangeable {
            return Err(inconsistency(
                "system-signature representation for every system vs state exchangeability",
                format!(
                    "t = {}: representation {}, exchangeable {}",
                    interval.t.to_text(),
                    boland_ok[idx],
                    interval.states_exchangeable
                ),
            ));
        }
        interval.boland_representation = Some(boland_ok[idx]);
        if no_ties {
            if Some(prob_ok[idx]) != interval.condition_q {
                return Err(inconsistency(
                    "probability-signature representation for every system vs the quality-weighted state condition",
                    format!(
                        "t = {}: representation {}, condition {:?}",
                        interval.t.to_text(),
                        prob_ok[idx],
                        interval.condition_q
                    ),
                ));
            }
            interval.probability_representation = Some(prob_ok[idx]);
        }
    }

    let boland_all = boland_ok.iter().all(|&b| b);
    if boland_all != report.states_exchangeable_everywhere {
        return Err(inconsistency(
            "system-signature representation for every time vs state exchangeability at every time",
            format!("representation {boland_all}"),
        ));
    }
    report.boland_representation_all = boland_all;

    if no_ties {
        let prob_all = prob_ok.iter().all(|&b| b);
        if all_agree != report.q_symmetric {
            return Err(inconsistency(
                "signature agreement for every system vs symmetry of the quality function",
                format!("agreement {all_agree}, symmetric {}", report.q_symmetric),
            ));
        }
        let both = boland_all && prob_all;
        let agreement_and_states = all_agree && report.states_exchangeable_everywhere;
        let symmetry_and_states = report.q_symmetric && report.states_exchangeable_everywhere;
        if both != agreement_and_states || both != symmetry_and_states {
            return Err(inconsistency(
                "both representations vs signature agreement with exchangeable states vs symmetric quality with exchangeable states",
                format!("{both} / {agreement_and_states} / {symmetry_and_states}"),
            ));
        }
        report.probability_representation_all = Some(prob_all);
        report.both_representations = Some(both);
        report.signatures_agree_all = Some(all_agree);
    }

    report.witnesses.boland_representation = witnesses.boland_representation;
    report.witnesses.probability_representation = witnesses.probability_representation;
    report.witnesses.signatures = witnesses.signatures;
    report.mode = ReportMode::Verified;
    report.class = Some(class);
    report.systems_checked = systems.len();
    Ok(report)
}

fn state_json(n: usize, state: usize) -> Value {
    Value::from(decode_state(n, state).into_iter().map(u8::from).collect::<Vec<_>>())
}

fn subset_json(n: usize, subset: usize) -> Value {
    Value::from((1..=n).filter(|i| subset >> (i - 1) & 1 == 1).collect::<Vec<_>>())
}

fn signature_json<T: Scalar>(s: &Signature<T>) -> Value {
    Value::from(s.to_texts())
}

fn representation_json<T: Scalar>(w: &RepresentationWitness<T>) -> Value {
    json!({
        "system": system_to_json(&w.system),
        "breakpoint_index": w.breakpoint_index,
        "t": w.t.to_text(),
        "reliability": w.reliability.to_text(),
        "representation": w.representation.to_text(),
    })
}

impl<T: Scalar> DiagnosisReport<T> {
    /// JSON form with every number as canonical text and keys in sorted order.
    pub fn to_json(&self) -> Value {
        let n = self.n;
        let w = &self.witnesses;
        let quality: Vec<Value> = (0..1usize << n)
            .map(|s| json!({ "subset": subset_json(n, s), "q": self.quality.get(s).to_text() }))
            .collect();
        let intervals: Vec<Value> = self
            .intervals
            .iter()
            .map(|i| {
                json!({
                    "t": i.t.to_text(),
                    "states_exchangeable": i.states_exchangeable,
                    "condition_q": i.condition_q,
                    "eq3_all_phi": i.boland_representation,
                    "eq1_all_phi": i.probability_representation,
                })
            })
            .collect();
        json!({
            "mode": match self.mode {
                ReportMode::Predicted => "predicted",
                ReportMode::Verified => "verified",
            },
            "n": n,
            "class": self.class.map(SystemClass::as_str),
            "systems_checked": self.systems_checked,
            "has_ties": self.has_ties,
            "q": quality,
            "q_symmetric": self.q_symmetric,
            "states_exchangeable_everywhere": self.states_exchangeable_everywhere,
            "lifetimes_exchangeable": self.lifetimes_exchangeable,
            "weakly_exchangeable": self.weakly_exchangeable,
            "skipped_orderings": self.skipped_orderings,
            "condition_q_everywhere": self.condition_q_everywhere,
            "intervals": intervals,
            "eq3_all_phi": self.boland_representation_all,
            "eq1_all_phi": self.probability_representation_all,
            "both": self.both_representations,
            "signatures_agree_all_phi": self.signatures_agree_all,
            "witnesses": {
                "states": w.states.as_ref().map(|s| json!({
                    "t": s.t.to_text(),
                    "first": state_json(n, s.first),
                    "second": state_json(n, s.second),
                    "first_prob": s.first_prob.to_text(),
                    "second_prob": s.second_prob.to_text(),
                })),
                "condition_q": w.condition_q.as_ref().map(|c| json!({
                    "t": c.t.to_text(),
                    "state": state_json(n, c.state),
                    "prob": c.prob.to_text(),
                    "weighted_level_total": c.weighted_level_total.to_text(),
                })),
                "q_asymmetry": w.q_asymmetry.map(|s| json!({
                    "subset": subset_json(n, s),
                    "q": self.quality.get(s).to_text(),
                })),
                "weak_exchangeability": w.weak_exchangeability.as_ref().map(|x| json!({
                    "ordering": x.ordering,
                    "k": x.k,
                    "t": x.t.to_text(),
                    "unconditional": x.unconditional.to_text(),
                    "conditional": x.conditional.to_text(),
                })),
                "eq3": w.boland_representation.as_ref().map(representation_json),
                "eq1": w.probability_representation.as_ref().map(representation_json),
                "signatures": w.signatures.as_ref().map(|s| json!({
                    "system": system_to_json(&s.system),
                    "system_signature": signature_json(&s.system_signature),
                    "probability_signature": signature_json(&s.probability_signature),
                })),
            },
        })
    }
}
