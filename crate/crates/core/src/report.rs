//! Full per-`n` verification pipeline and its serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bott::{bott_algebra, max_compact};
use crate::clifford::AmbientSignature;
use crate::closure::{blade_closure, check_cap, lemma_containment_check};
use crate::delta::{delta_identities, lower_bound_dim};
use crate::error::{Error, Result};
use crate::lie::{classify_timed, ClassificationResult, ClassifyOptions, SplitOutcome};
use crate::roots::theorem_b_check;
use crate::spin::{spin_generator_masks, verify_relations};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn from_bool(ok: bool, detail: String) -> Self {
        Check {
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(detail: impl Into<String>) -> Self {
        Check {
            status: Status::Skipped,
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub relations: Check,
    pub lemma: Check,
    pub identities: Check,
    pub killing: Check,
    pub rank: Check,
    pub split: Check,
    pub roots: Check,
    pub classify: Check,
}

impl Checks {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Check)> {
        [
            ("relations", &self.relations),
            ("lemma", &self.lemma),
            ("identities", &self.identities),
            ("killing", &self.killing),
            ("rank", &self.rank),
            ("split", &self.split),
            ("roots", &self.roots),
            ("classify", &self.classify),
        ]
        .into_iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub closure_dim: usize,
    pub expected_dim: u64,
    pub delta: [u64; 4],
    pub bott_algebra: String,
    pub max_compact: String,
    /// Type matched by the classification, if any. Carried in the `classify`
    /// check detail in serialized form.
    #[serde(skip)]
    pub classified_as: Option<String>,
    pub checks: Checks,
    /// Milliseconds per stage; empty unless requested, so that reports are
    /// reproducible byte for byte.
    pub timings_ms: BTreeMap<String, u64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub rank_trials: usize,
    pub jacobi_samples: usize,
    pub allow_large: bool,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            rank_trials: 5,
            jacobi_samples: 1000,
            allow_large: false,
            timings: false,
        }
    }
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    laps: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn new(enabled: bool) -> Self {
        Stopwatch {
            enabled,
            last: Instant::now(),
            laps: BTreeMap::new(),
        }
    }

    fn lap(&mut self, name: &str) {
        if self.enabled {
            let ms = self.last.elapsed().as_millis() as u64;
            *self.laps.entry(name.to_owned()).or_default() += ms;
        }
        self.last = Instant::now();
    }
}

fn killing_check(c: &ClassificationResult) -> Check {
    if c.expected_type.is_semisimple() {
        let ok = c.killing_negative_definite && c.center_dim == 0;
        Check::from_bool(
            ok,
            format!(
                "negative definite: {}, center dim {}",
                c.killing_negative_definite, c.center_dim
            ),
        )
    } else {
        let ok = c.center_dim == 1
            && c.killing_radical.len() == 1
            && c.derived_dim == 3
            && c.derived_killing_negative_definite;
        Check::from_bool(
            ok,
            format!(
                "center dim {}, radical span{{{}}}, derived dim {} with negative definite form: {}",
                c.center_dim,
                c.killing_radical.join(", "),
                c.derived_dim,
                c.derived_killing_negative_definite
            ),
        )
    }
}

fn rank_check(c: &ClassificationResult) -> Check {
    let want = c.expected_type.rank();
    Check::from_bool(
        c.rank as u64 == want && c.rank_certified,
        format!(
            "rank {} (expected {want}), certified across probe primes: {}",
            c.rank, c.rank_certified
        ),
    )
}

fn split_check_of(c: &ClassificationResult) -> Check {
    match &c.split {
        SplitOutcome::NotApplicable { reason } => Check::skipped(reason.clone()),
        SplitOutcome::Split(r) => Check::from_bool(
            r.pass(),
            format!(
                "halves ({}, {}), cross brackets vanish: {}, ideals closed: {}",
                r.plus_dim, r.minus_dim, r.cross_brackets_vanish, r.ideals_closed
            ),
        ),
    }
}

/// Runs every check for one `n >= 3`.
pub fn verify(n: usize, opts: VerifyOptions) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::NTooSmall {
            what: "verify",
            min: 3,
            n,
        });
    }
    check_cap(n, opts.allow_large)?;
    let mut clock = Stopwatch::new(opts.timings);
    let nu = n as u32;

    let rel = verify_relations(n)?;
    let relations = Check::from_bool(
        rel.all_pass(),
        format!(
            "{} relations checked, {} failed",
            rel.checks.len(),
            rel.failures.len()
        ),
    );
    clock.lap("relations");

    let sig = AmbientSignature::new(n)?;
    let basis = blade_closure(sig, &spin_generator_masks(n)?)?;
    clock.lap("closure");
    let lem = lemma_containment_check(&basis)?;
    let lemma = Check::from_bool(
        lem.pass,
        format!(
            "required blades present: {}, top blade present: {} (expected {}), equals predicted set: {}",
            lem.required_present, lem.top_blade_present, lem.top_blade_expected, lem.equals_predicted
        ),
    );
    clock.lap("lemma");

    let ids = delta_identities(nu)?;
    let identities = Check::from_bool(
        ids.all_pass(),
        format!(
            "total: {}, half sums: {}, complements: {}, closed forms: {}",
            ids.total, ids.half_sums, ids.complements, ids.closed_forms
        ),
    );
    let delta = ids
        .values
        .clone()
        .map(|v| v.parse::<u64>().expect("n is capped"));
    let expected_dim = lower_bound_dim(nu)?.to_u64().expect("n is capped");
    clock.lap("identities");

    let (class, stages) = classify_timed(
        n,
        ClassifyOptions {
            seed: opts.seed,
            trials: opts.rank_trials,
        },
    )?;
    if opts.timings {
        for (name, d) in stages {
            *clock.laps.entry(format!("classify.{name}")).or_default() += d.as_millis() as u64;
        }
    }
    clock.lap("classify");
    let killing = killing_check(&class);
    let rank = rank_check(&class);
    let split = split_check_of(&class);
    let mut classify = Check::from_bool(
        class.pass,
        if class.pass {
            format!("{}", class.expected_type)
        } else {
            format!(
                "expected {}: {}",
                class.expected_type,
                class.mismatches.join("; ")
            )
        },
    );
    if n == 3 {
        classify
            .detail
            .push_str(" (reductive; the scalar 1 is not a bracket)");
    }

    let roots = if n <= 8 {
        let t = theorem_b_check(n)?;
        let sc_ok = crate::lie::StructureConstants::from_basis(&basis)?
            .check_jacobi(opts.jacobi_samples, opts.seed);
        Check::from_bool(
            t.pass && sc_ok,
            format!(
                "{} positive roots, closure dim {}",
                t.positive_roots, t.closure_dim
            ),
        )
    } else {
        Check::skipped(format!("E_{n} is of infinite type"))
    };
    clock.lap("roots");

    let checks = Checks {
        relations,
        lemma,
        identities,
        killing,
        rank,
        split,
        roots,
        classify,
    };
    let failed = checks.iter().any(|(_, c)| c.failed()) || basis.dim() as u64 != expected_dim;
    Ok(VerificationReport {
        n,
        closure_dim: basis.dim(),
        expected_dim,
        delta,
        bott_algebra: bott_algebra(nu)?.to_string(),
        max_compact: max_compact(nu)?.to_string(),
        classified_as: class.matched_type.map(|t| t.to_string()),
        checks,
        timings_ms: clock.laps,
        verdict: if failed { Verdict::Fail } else { Verdict::Pass },
    })
}

/// One row of the side-by-side algebra table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub bott_algebra: String,
    pub max_compact: String,
    pub max_compact_dim: String,
    /// `None` for `n = 2`, which has no spin generators.
    pub closure_dim: Option<usize>,
}

pub fn algebra_table(to_n: usize, allow_large: bool) -> Result<Vec<TableRow>> {
    if to_n < 2 {
        return Err(Error::NTooSmall {
            what: "report",
            min: 2,
            n: to_n,
        });
    }
    check_cap(to_n, allow_large)?;
    (2..=to_n)
        .map(|n| {
            let mc = max_compact(n as u32)?;
            let closure_dim = if n >= 3 {
                Some(blade_closure(AmbientSignature::new(n)?, &spin_generator_masks(n)?)?.dim())
            } else {
                None
            };
            Ok(TableRow {
                n,
                bott_algebra: bott_algebra(n as u32)?.to_string(),
                max_compact: mc.to_string(),
                max_compact_dim: mc.dim().to_string(),
                closure_dim,
            })
        })
        .collect()
}
