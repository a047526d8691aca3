//! The nested recursions satisfied by leaf-label counting sequences, the
//! additive constant they carry, and checkers that verify them against
//! materialized tables.
//!
//! For a tree grafted from a seed of height `p` with arity `k` and label
//! parameter `j`, the counting sequence eventually satisfies
//!
//! ```text
//! R(n) = Σ_{i=1..k} R(n − shift − (i−1)·j − R(n − i·j)) + ν
//! ```
//!
//! once `n` passes the level boundary `N(p+1)`. The constant `ν` can be
//! computed three independent ways: from direct label counts on the first
//! `p` levels, from a closed form in the level leaf counts, and empirically
//! by solving the recursion against a table. Schedule-labeled trees satisfy
//! a variant whose shift depends on the level of the inner argument, and
//! chain-seed spine-labeled trees satisfy the constant-shift form with
//! derived effective parameters.

use serde::Serialize;
use thiserror::Error;

use crate::labeling::{
    boundary_label, leaf_count_seq, LabelError, LabelScheme, LeafCountTable,
    Schedule, SchemeFlavor,
};
use crate::skeleton::{ConfigError, GraftConfig, NodeRole};
use crate::tree::OrderedTree;

/// Errors from evaluating a recurrence forward.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("argument {argument} out of range in term {term} at n = {n}")]
    Undefined { n: u64, term: u64, argument: i64 },
    #[error("arity and step must be at least 1")]
    BadParameters,
}

/// Errors from verification and constant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("this operation is defined for standard-flavor schemes")]
    WrongFlavor,
    #[error("this check needs a constant supernode count; use the schedule-aware check")]
    ScheduleNotConstant,
    #[error("n_max {n_max} does not reach past the checking threshold {threshold}")]
    RangeTooSmall { n_max: u64, threshold: u64 },
    #[error("perturbed prefix of length {len} overlaps the protected zone starting at label {start}")]
    PrefixTooLong { len: usize, start: u64 },
    #[error("empirical solve found no admissible index in the requested range")]
    EmptySolveRange,
}

/// A constant-shift nested recurrence, ready to evaluate forward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    /// Number of nested terms summed (`k`).
    pub arity: u64,
    /// Inner-argument step (`j`).
    pub step: u64,
    /// Constant outer-argument shift; may be negative.
    pub shift: i64,
    /// Additive constant.
    pub nu: i64,
    /// `R(1), R(2), …` seed values.
    pub initial: Vec<i64>,
}

/// Evaluates `R(n) = Σ_{i=1..k} R(n − shift − (i−1)·step − R(n − i·step)) + ν`
/// forward to `n_max`, seeded by the initial values. Every argument must
/// land in `1..n` or evaluation stops with an error.
pub fn eval_recurrence(spec: &RecurrenceSpec, n_max: u64) -> Result<Vec<i64>, RecurrenceError> {
    if spec.arity == 0 || spec.step == 0 {
        return Err(RecurrenceError::BadParameters);
    }
    let mut r: Vec<i64> = Vec::with_capacity(n_max as usize);
    r.extend(spec.initial.iter().take(n_max as usize));
    let mut n = r.len() as u64 + 1;
    while n <= n_max {
        let mut sum = 0i64;
        for i in 1..=spec.arity {
            let inner = n as i64 - (i * spec.step) as i64;
            if inner < 1 {
                return Err(RecurrenceError::Undefined { n, term: i, argument: inner });
            }
            let rv = r[(inner - 1) as usize];
            let outer = n as i64 - spec.shift - ((i - 1) * spec.step) as i64 - rv;
            if outer < 1 || outer >= n as i64 {
                return Err(RecurrenceError::Undefined { n, term: i, argument: outer });
            }
            sum += r[(outer - 1) as usize];
        }
        r.push(sum + spec.nu);
        n += 1;
    }
    Ok(r)
}

/// One failed index in a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: u64,
    pub lhs: i64,
    /// Right-hand side, or `None` when an argument fell outside `1..n`.
    pub rhs: Option<i64>,
}

/// Result of checking a recursion over an index range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checked_from: u64,
    pub checked_to: u64,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

/// Checks `r[n] = Σ_i r[arg(n, i, r[n − i·j])] + ν` over `from..=to`.
/// `arg_of` receives `(n, i, R(n − i·j))` and returns the outer argument.
fn run_check<F>(
    r: &[i64],
    from: u64,
    to: u64,
    k: u64,
    j: u64,
    nu: i64,
    arg_of: F,
) -> VerificationReport
where
    F: Fn(u64, u64, i64) -> i64,
{
    let mut violations = Vec::new();
    for n in from..=to {
        let lhs = r[(n - 1) as usize];
        let mut sum = 0i64;
        let mut defined = true;
        for i in 1..=k {
            let inner = n as i64 - (i * j) as i64;
            if inner < 1 {
                defined = false;
                break;
            }
            let outer = arg_of(n, i, r[(inner - 1) as usize]);
            if outer < 1 || outer >= n as i64 {
                defined = false;
                break;
            }
            sum += r[(outer - 1) as usize];
        }
        if !defined {
            violations.push(Violation { n, lhs, rhs: None });
        } else if lhs != sum + nu {
            violations.push(Violation { n, lhs, rhs: Some(sum + nu) });
        }
    }
    VerificationReport { checked_from: from, checked_to: to, passed: violations.is_empty(), violations }
}

/// The additive constant computed three independent ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuReport {
    /// Leaf labels on the first `p` levels.
    pub alpha: i64,
    /// Labels on penultimate nodes of the first `p` levels.
    pub beta: i64,
    /// `α − k·(β + s_0 − s_1)`, from direct counts.
    pub nu_from_counts: i64,
    /// Closed form in the per-level leaf counts.
    pub nu_simplified: i64,
    /// Constant solved from a table, when a checking range was available.
    pub nu_empirical: Option<i64>,
    /// All available values agree.
    pub consistent: bool,
}

/// Sums label counts over the first `p` levels: leaf labels (`alpha`) and
/// penultimate-node labels (`beta`).
fn alpha_beta(config: &GraftConfig, scheme: &LabelScheme) -> (i64, i64) {
    let p = config.seed_height();
    let mut alpha = 0i64;
    let mut beta = 0i64;
    for i in 1..=p {
        let shape = config.build_level(i);
        for id in shape.shape.pre_order() {
            let role = shape.roles[id];
            let count = match role {
                NodeRole::Supernode => scheme.supernode_schedule().value(i),
                NodeRole::Extra => scheme.extra_count(),
                NodeRole::Regular => scheme.j(),
            } as i64;
            if shape.k_leaf[id] {
                alpha += count;
            }
            if shape.is_penultimate(id) {
                beta += count;
            }
        }
    }
    (alpha, beta)
}

/// Computes the additive constant for a standard-flavor scheme: from direct
/// counts, from the leaf-count closed form, and (when `n_max` reaches past
/// `N(p+1)`) empirically from a materialized table.
pub fn nu_report(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<NuReport, VerifyError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(VerifyError::WrongFlavor);
    }
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let k = config.arity() as i64;
    let j = scheme.j() as i64;
    let s0 = scheme.extra_count() as i64;
    let s1 = scheme.supernode_schedule().value(1) as i64;
    let (alpha, beta) = alpha_beta(config, scheme);
    let nu_from_counts = alpha - k * (beta + s0 - s1);
    let leaves: Vec<i64> = (1..=p)
        .map(|i| config.build_level(i).k_leaf.iter().filter(|&&b| b).count() as i64)
        .collect();
    let base = if p == 1 {
        j * (leaves[0] - k)
    } else {
        j * leaves[p - 1] - j * (k - 1) * leaves[..p - 1].iter().sum::<i64>()
    };
    let nu_simplified = base + (1 - k) * (s0 - j);
    let threshold = boundary_label(config, scheme, p + 1);
    let nu_empirical = if n_max > threshold + config.arity() * scheme.j() {
        let table = leaf_count_seq(config, scheme, n_max)?;
        solve_nu_scheduled(&table, config, scheme, threshold + 1, n_max)?
    } else {
        None
    };
    let consistent = nu_from_counts == nu_simplified
        && nu_empirical.map_or(true, |e| e == nu_from_counts);
    Ok(NuReport { alpha, beta, nu_from_counts, nu_simplified, nu_empirical, consistent })
}

/// Solves for a constant `ν` making the constant-shift recursion hold over
/// `from..=to` against table values. Returns `None` when no single constant
/// works; errors when no index in the range yields a defined right-hand side.
pub fn solve_nu_empirical(
    values: &[i64],
    k: u64,
    j: u64,
    shift: i64,
    from: u64,
    to: u64,
) -> Result<Option<i64>, VerifyError> {
    solve_nu_with(values, k, j, from, to, |n, i, rv| {
        n as i64 - shift - ((i - 1) * j) as i64 - rv
    })
}

fn solve_nu_with<F>(
    values: &[i64],
    k: u64,
    j: u64,
    from: u64,
    to: u64,
    arg_of: F,
) -> Result<Option<i64>, VerifyError>
where
    F: Fn(u64, u64, i64) -> i64,
{
    let to = to.min(values.len() as u64);
    let mut candidate: Option<i64> = None;
    let mut any = false;
    for n in from..=to {
        let lhs = values[(n - 1) as usize];
        let mut sum = 0i64;
        let mut defined = true;
        for i in 1..=k {
            let inner = n as i64 - (i * j) as i64;
            if inner < 1 {
                defined = false;
                break;
            }
            let outer = arg_of(n, i, values[(inner - 1) as usize]);
            if outer < 1 || outer >= n as i64 {
                defined = false;
                break;
            }
            sum += values[(outer - 1) as usize];
        }
        if !defined {
            continue;
        }
        any = true;
        let nu = lhs - sum;
        match candidate {
            None => candidate = Some(nu),
            Some(c) if c != nu => return Ok(None),
            _ => {}
        }
    }
    if !any {
        return Err(VerifyError::EmptySolveRange);
    }
    Ok(candidate)
}

/// Level-aware empirical solve for schedule-labeled trees.
fn solve_nu_scheduled(
    table: &LeafCountTable,
    config: &GraftConfig,
    scheme: &LabelScheme,
    from: u64,
    to: u64,
) -> Result<Option<i64>, VerifyError> {
    let _ = config;
    let j = scheme.j();
    let s0 = scheme.extra_count() as i64;
    let sched = scheme.supernode_schedule().clone();
    let values = table.values();
    let levels: Vec<u32> = (1..=values.len() as u64)
        .map(|n| table.level_of(n).expect("in range"))
        .collect();
    solve_nu_with(values, config.arity(), j, from, to, move |n, i, rv| {
        let inner = n - i * j;
        let sm = sched.value(levels[(inner - 1) as usize] as usize) as i64;
        n as i64 - (sm - s0) - (i * j) as i64 - rv
    })
}

/// The effective constant-shift form of a standard scheme: the recursion
/// shift is `s + j − s_0` (negative values allowed), where `s` is the
/// constant supernode count.
pub fn effective_shift(scheme: &LabelScheme) -> i64 {
    scheme.supernode_schedule().tail() as i64 + scheme.j() as i64 - scheme.extra_count() as i64
}

/// Verifies the constant-shift recursion for a standard-flavor scheme with
/// constant supernode counts, from just past `N(p+1)` to `n_max`. The
/// constant is computed from counts unless `force_nu` overrides it.
pub fn verify_recursion_with_nu(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
    force_nu: Option<i64>,
) -> Result<VerificationReport, VerifyError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(VerifyError::WrongFlavor);
    }
    if !scheme.supernode_schedule().is_constant() {
        return Err(VerifyError::ScheduleNotConstant);
    }
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let threshold = boundary_label(config, scheme, p + 1);
    if n_max <= threshold {
        return Err(VerifyError::RangeTooSmall { n_max, threshold });
    }
    let nu = match force_nu {
        Some(v) => v,
        None => nu_report(config, scheme, 0)?.nu_from_counts,
    };
    let shift = effective_shift(scheme);
    let table = leaf_count_seq(config, scheme, n_max)?;
    let (k, j) = (config.arity(), scheme.j());
    Ok(run_check(table.values(), threshold + 1, n_max, k, j, nu, |n, i, rv| {
        n as i64 - shift - ((i - 1) * j) as i64 - rv
    }))
}

/// [`verify_recursion_with_nu`] with the constant computed from counts.
pub fn verify_recursion(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<VerificationReport, VerifyError> {
    verify_recursion_with_nu(config, scheme, n_max, None)
}

/// Verifies the schedule-aware recursion, whose outer shift depends on the
/// level holding the inner argument:
///
/// ```text
/// R(n) = Σ_{i=1..k} R(n − (s_{m(n−i·j)} − s_0) − i·j − R(n − i·j)) + ν
/// ```
///
/// where `m(x)` is the level of label `x`. Defined for every standard
/// scheme; coincides with the constant-shift form when the schedule is
/// constant.
pub fn verify_scheduled_with_nu(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
    force_nu: Option<i64>,
) -> Result<VerificationReport, VerifyError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(VerifyError::WrongFlavor);
    }
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let threshold = boundary_label(config, scheme, p + 1);
    if n_max <= threshold {
        return Err(VerifyError::RangeTooSmall { n_max, threshold });
    }
    let nu = match force_nu {
        Some(v) => v,
        None => nu_report(config, scheme, 0)?.nu_from_counts,
    };
    let table = leaf_count_seq(config, scheme, n_max)?;
    let (k, j) = (config.arity(), scheme.j());
    let s0 = scheme.extra_count() as i64;
    let sched = scheme.supernode_schedule().clone();
    let levels: Vec<u32> = (1..=n_max)
        .map(|n| table.level_of(n).expect("in range"))
        .collect();
    Ok(run_check(table.values(), threshold + 1, n_max, k, j, nu, |n, i, rv| {
        let inner = n - i * j;
        let sm = sched.value(levels[(inner - 1) as usize] as usize) as i64;
        n as i64 - (sm - s0) - (i * j) as i64 - rv
    }))
}

/// [`verify_scheduled_with_nu`] with the constant computed from counts.
pub fn verify_scheduled(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<VerificationReport, VerifyError> {
    verify_scheduled_with_nu(config, scheme, n_max, None)
}

/// Parameters of a binary chain-seed spine labeling: the extra node takes
/// one label, supernodes take `s1` then `s2` forever, spine children take
/// `j1` then `j2` forever, and other nodes take `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainSpineParams {
    pub j: u64,
    pub s1: u64,
    pub s2: u64,
    pub j1: u64,
    pub j2: u64,
}

impl ChainSpineParams {
    pub fn scheme(&self) -> LabelScheme {
        LabelScheme::chain_spine(
            self.j,
            Schedule::new(vec![self.s1], self.s2),
            Schedule::new(vec![self.j1], self.j2),
        )
    }

    pub fn config(&self) -> GraftConfig {
        GraftConfig::new(OrderedTree::parse("(())").expect("valid"), 2).expect("valid")
    }

    /// Effective additive constant of the recursion: `2j − j1 − 1`.
    pub fn nu_eff(&self) -> i64 {
        2 * self.j as i64 - self.j1 as i64 - 1
    }

    /// Effective shift of the recursion: `j + s2 − 1 + j2 − j1`.
    pub fn s_eff(&self) -> i64 {
        self.j as i64 + self.s2 as i64 - 1 + self.j2 as i64 - self.j1 as i64
    }
}

/// Verification output for a chain-seed spine labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSpineReport {
    pub nu_eff: i64,
    pub s_eff: i64,
    /// The sequence starts with `s1 + 1` ones.
    pub ones_prefix_ok: bool,
    pub recursion: VerificationReport,
}

/// Verifies that a chain-seed spine labeling satisfies the constant-shift
/// recursion with its effective parameters, checking from just past both
/// `N(2)` and `5j + s_eff + s1`.
pub fn verify_chain_spine(
    params: &ChainSpineParams,
    n_max: u64,
) -> Result<ChainSpineReport, VerifyError> {
    let config = params.config();
    let scheme = params.scheme();
    let n2 = boundary_label(&config, &scheme, 2);
    let low = 5 * params.j as i64 + params.s_eff() + params.s1 as i64;
    let threshold = (n2 as i64).max(low).max(0) as u64;
    if n_max <= threshold {
        return Err(VerifyError::RangeTooSmall { n_max, threshold });
    }
    let table = leaf_count_seq(&config, &scheme, n_max)?;
    let ones = params.s1 + 1;
    let ones_prefix_ok = (1..=ones.min(n_max)).all(|n| table.r(n).unwrap() == 1)
        && (ones < n_max && table.r(ones + 1).unwrap() == 2);
    let (nu, shift, j) = (params.nu_eff(), params.s_eff(), params.j);
    let recursion = run_check(table.values(), threshold + 1, n_max, 2, j, nu, |n, i, rv| {
        n as i64 - shift - ((i - 1) * j) as i64 - rv
    });
    Ok(ChainSpineReport { nu_eff: nu, s_eff: shift, ones_prefix_ok, recursion })
}

/// The canonical initial segment: true values of the sequence through
/// `N(p+1)`, enough to seed forward evaluation of the recursion.
pub fn initial_conditions(
    config: &GraftConfig,
    scheme: &LabelScheme,
) -> Result<Vec<i64>, VerifyError> {
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let threshold = boundary_label(config, scheme, p + 1);
    let table = leaf_count_seq(config, scheme, threshold)?;
    Ok(table.values().to_vec())
}

/// Replaces the first values of the sequence (any values you like below the
/// label `N(p)`), keeps the true values from `N(p)` through `N(p+1)`, and
/// checks that forward evaluation of the constant-shift recursion still
/// reproduces the true sequence past `N(p+1)`: the recursion never reads
/// below label `N(p)`.
pub fn perturb_prefix_check(
    config: &GraftConfig,
    scheme: &LabelScheme,
    perturbed: &[i64],
    n_max: u64,
) -> Result<VerificationReport, VerifyError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(VerifyError::WrongFlavor);
    }
    if !scheme.supernode_schedule().is_constant() {
        return Err(VerifyError::ScheduleNotConstant);
    }
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let np = boundary_label(config, scheme, p);
    let threshold = boundary_label(config, scheme, p + 1);
    if perturbed.len() as u64 > np.saturating_sub(1) {
        return Err(VerifyError::PrefixTooLong { len: perturbed.len(), start: np });
    }
    if n_max <= threshold {
        return Err(VerifyError::RangeTooSmall { n_max, threshold });
    }
    let table = leaf_count_seq(config, scheme, n_max)?;
    let nu = nu_report(config, scheme, 0)?.nu_from_counts;
    let shift = effective_shift(scheme);
    let (k, j) = (config.arity(), scheme.j());
    let mut synth: Vec<i64> = table.values()[..threshold as usize].to_vec();
    synth[..perturbed.len()].copy_from_slice(perturbed);
    let mut violations = Vec::new();
    for n in threshold + 1..=n_max {
        let mut sum = 0i64;
        let mut defined = true;
        for i in 1..=k {
            let inner = n as i64 - (i * j) as i64;
            if inner < 1 {
                defined = false;
                break;
            }
            let outer = n as i64 - shift - ((i - 1) * j) as i64 - synth[(inner - 1) as usize];
            if outer < 1 || outer >= n as i64 {
                defined = false;
                break;
            }
            sum += synth[(outer - 1) as usize];
        }
        let truth = table.values()[(n - 1) as usize];
        if !defined {
            violations.push(Violation { n, lhs: truth, rhs: None });
            synth.push(truth); // keep comparing downstream against truth
        } else {
            let value = sum + nu;
            if value != truth {
                violations.push(Violation { n, lhs: truth, rhs: Some(value) });
            }
            synth.push(value);
        }
    }
    Ok(VerificationReport {
        checked_from: threshold + 1,
        checked_to: n_max,
        passed: violations.is_empty(),
        violations,
    })
}

/// Diagnostic: the shortest prefix of true values that, used as initial
/// conditions, lets forward evaluation reproduce the table through `n_max`.
/// Not a guarantee beyond `n_max`.
pub fn minimal_agreeing_prefix(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<u64, VerifyError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(VerifyError::WrongFlavor);
    }
    if !scheme.supernode_schedule().is_constant() {
        return Err(VerifyError::ScheduleNotConstant);
    }
    scheme.validate_for(config)?;
    let p = config.seed_height();
    let threshold = boundary_label(config, scheme, p + 1);
    if n_max <= threshold {
        return Err(VerifyError::RangeTooSmall { n_max, threshold });
    }
    let table = leaf_count_seq(config, scheme, n_max)?;
    let nu = nu_report(config, scheme, 0)?.nu_from_counts;
    let shift = effective_shift(scheme);
    let spec_base = RecurrenceSpec {
        arity: config.arity(),
        step: scheme.j(),
        shift,
        nu,
        initial: Vec::new(),
    };
    for len in 1..=threshold {
        let mut spec = spec_base.clone();
        spec.initial = table.values()[..len as usize].to_vec();
        match eval_recurrence(&spec, n_max) {
            Ok(values) if values == table.values() => return Ok(len),
            _ => continue,
        }
    }
    Ok(threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::LabelScheme;

    fn demo_config() -> GraftConfig {
        GraftConfig::new(OrderedTree::parse("(((()))())").unwrap(), 2).unwrap()
    }

    fn golomb_config() -> GraftConfig {
        GraftConfig::new(OrderedTree::parse("((()))").unwrap(), 1).unwrap()
    }

    fn golomb_scheme() -> LabelScheme {
        LabelScheme::with_schedule(1, 1, Schedule::constant(0))
    }

    #[test]
    fn forward_evaluation_of_the_classic_self_describing_recurrence() {
        let spec = RecurrenceSpec { arity: 1, step: 1, shift: 0, nu: 1, initial: vec![1] };
        let values = eval_recurrence(&spec, 20).unwrap();
        assert_eq!(
            values,
            [1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6]
        );
    }

    #[test]
    fn forward_evaluation_rejects_escaping_arguments() {
        let spec = RecurrenceSpec { arity: 2, step: 3, shift: 0, nu: 0, initial: vec![1, 2] };
        let err = eval_recurrence(&spec, 10).unwrap_err();
        assert!(matches!(err, RecurrenceError::Undefined { .. }));
    }

    #[test]
    fn constant_computation_on_the_demo_tree() {
        let report = nu_report(&demo_config(), &LabelScheme::standard(2, 0), 200).unwrap();
        assert_eq!(report.alpha, 10);
        assert_eq!(report.beta, 4);
        assert_eq!(report.nu_from_counts, -2);
        assert_eq!(report.nu_simplified, -2);
        assert_eq!(report.nu_empirical, Some(-2));
        assert!(report.consistent);
    }

    #[test]
    fn constant_computation_on_scheduled_chains() {
        let report = nu_report(&golomb_config(), &golomb_scheme(), 300).unwrap();
        assert_eq!(report.alpha, 3);
        assert_eq!(report.beta, 1);
        assert_eq!(report.nu_from_counts, 1);
        assert_eq!(report.nu_simplified, 1);
        assert_eq!(report.nu_empirical, Some(1));
        assert!(report.consistent);

        let conolly = GraftConfig::new(OrderedTree::parse("(())").unwrap(), 2).unwrap();
        let report = nu_report(&conolly, &LabelScheme::standard(1, 0), 300).unwrap();
        assert_eq!(report.nu_from_counts, 0);
        assert_eq!(report.nu_empirical, Some(0));
        assert!(report.consistent);
    }

    #[test]
    fn recursion_holds_on_the_demo_tree() {
        let report = verify_recursion(&demo_config(), &LabelScheme::standard(2, 0), 400).unwrap();
        assert_eq!(report.checked_from, 33);
        assert!(report.passed, "violations: {:?}", &report.violations[..5.min(report.violations.len())]);
    }

    #[test]
    fn recursion_holds_with_a_scheduled_extra_count() {
        // Chain seed, constant supernode count, oversized extra count: the
        // effective shift goes negative.
        let conolly = GraftConfig::new(OrderedTree::parse("(())").unwrap(), 2).unwrap();
        let scheme = LabelScheme::with_schedule(1, 2, Schedule::constant(0));
        assert_eq!(effective_shift(&scheme), -1);
        let report = verify_recursion(&conolly, &scheme, 400).unwrap();
        assert!(report.passed, "violations: {:?}", &report.violations[..5.min(report.violations.len())]);
    }

    #[test]
    fn scheduled_form_holds_where_the_constant_form_is_refused() {
        let scheme = LabelScheme::with_schedule(1, 1, Schedule::new(vec![2, 1], 0));
        let conolly = GraftConfig::new(OrderedTree::parse("(())").unwrap(), 2).unwrap();
        assert!(matches!(
            verify_recursion(&conolly, &scheme, 200),
            Err(VerifyError::ScheduleNotConstant)
        ));
        let report = verify_scheduled(&conolly, &scheme, 200).unwrap();
        assert!(report.passed, "violations: {:?}", &report.violations[..5.min(report.violations.len())]);
    }

    #[test]
    fn scheduled_form_matches_constant_form_on_plain_schemes() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        let a = verify_recursion(&cfg, &scheme, 300).unwrap();
        let b = verify_scheduled(&cfg, &scheme, 300).unwrap();
        assert!(a.passed && b.passed);
        assert_eq!(a.checked_from, b.checked_from);
    }

    #[test]
    fn forcing_the_wrong_constant_breaks_every_index() {
        let report =
            verify_recursion_with_nu(&demo_config(), &LabelScheme::standard(2, 0), 200, Some(-1))
                .unwrap();
        assert!(!report.passed);
        assert_eq!(report.violations.len() as u64, 200 - report.checked_from + 1);
    }

    #[test]
    fn empirical_solve_recovers_the_constant() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        let table = leaf_count_seq(&cfg, &scheme, 300).unwrap();
        let nu = solve_nu_empirical(table.values(), 2, 2, 0, 33, 300).unwrap();
        assert_eq!(nu, Some(-2));
        // A non-constant residue yields None.
        let nu = solve_nu_empirical(table.values(), 2, 2, 1, 33, 300).unwrap();
        assert_eq!(nu, None);
    }

    #[test]
    fn chain_spine_recursion_with_derived_parameters() {
        // General case with distinct first-level counts.
        let params = ChainSpineParams { j: 1, s1: 0, s2: 0, j1: 2, j2: 1 };
        assert_eq!(params.nu_eff(), -1);
        assert_eq!(params.s_eff(), -1);
        let report = verify_chain_spine(&params, 400).unwrap();
        assert!(report.ones_prefix_ok);
        assert!(report.recursion.passed, "violations: {:?}", &report.recursion.violations[..5.min(report.recursion.violations.len())]);

        // Homogeneous shifted variant.
        let params = ChainSpineParams { j: 1, s1: 1, s2: 1, j1: 1, j2: 1 };
        assert_eq!(params.nu_eff(), 0);
        assert_eq!(params.s_eff(), 1);
        let report = verify_chain_spine(&params, 400).unwrap();
        assert!(report.ones_prefix_ok);
        assert!(report.recursion.passed);
    }

    #[test]
    fn chain_spine_matching_the_plain_chain() {
        // Parameters that reproduce the plain chain labeling's sequence.
        let params = ChainSpineParams { j: 1, s1: 0, s2: 0, j1: 1, j2: 1 };
        assert_eq!(params.nu_eff(), 0);
        assert_eq!(params.s_eff(), 0);
        let report = verify_chain_spine(&params, 300).unwrap();
        assert!(report.recursion.passed);
    }

    #[test]
    fn perturbing_the_early_prefix_changes_nothing_downstream() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        // The protected zone starts at N(3) = 16: fifteen replaceable values.
        let report = perturb_prefix_check(
            &cfg,
            &scheme,
            &[16, 0, 5, 1, 7, 2, 6, 13, 3, 9, 11, 4, 15, 10, 8],
            400,
        )
        .unwrap();
        assert!(report.passed, "violations: {:?}", &report.violations[..5.min(report.violations.len())]);
        let err = perturb_prefix_check(&cfg, &scheme, &[0; 16], 400).unwrap_err();
        assert!(matches!(err, VerifyError::PrefixTooLong { len: 16, start: 16 }));
    }

    #[test]
    fn perturbing_the_scheduled_chain_prefix() {
        let report =
            perturb_prefix_check(&golomb_config(), &golomb_scheme(), &[4, 0, 2], 500).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn minimal_prefix_for_the_scheduled_chain_is_a_single_value() {
        let len = minimal_agreeing_prefix(&golomb_config(), &golomb_scheme(), 200).unwrap();
        assert_eq!(len, 1);
    }

    #[test]
    fn initial_segment_seeds_forward_evaluation() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        let initial = initial_conditions(&cfg, &scheme).unwrap();
        assert_eq!(initial.len(), 32);
        let spec = RecurrenceSpec { arity: 2, step: 2, shift: 0, nu: -2, initial };
        let values = eval_recurrence(&spec, 500).unwrap();
        let table = leaf_count_seq(&cfg, &scheme, 500).unwrap();
        assert_eq!(values, table.values());
    }

    #[test]
    fn wrong_flavor_is_refused() {
        let params = ChainSpineParams { j: 1, s1: 0, s2: 0, j1: 1, j2: 1 };
        let err = nu_report(&params.config(), &params.scheme(), 100).unwrap_err();
        assert!(matches!(err, VerifyError::WrongFlavor));
    }
}
