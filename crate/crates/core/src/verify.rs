//! Seeded verification suites. Each suite runs over a list of targets
//! (a signature, plus a preset for the table comparison); every target gets
//! its own random stream derived from the seed, so reports do not depend on
//! scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{BladeIndex, Field, Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::golden::{golden_cases, golden_matrices};
use crate::ideals::{preset_ideal_basis, standard_ideal_basis, Preset};
use crate::involutions::{dagger, generator_dagger_sign, hermitian_split};
use crate::linalg::ComplexMatrix;
use crate::random::{derived_rng, random_homogeneous, random_multivector};
use crate::representation::Representation;
use crate::theorems::bracket_table::{bracket_table, fit_line, verify_line_on};
use crate::theorems::grade_support::{exhaustive_support_violations, rank_table_comparison};
use crate::theorems::hermitian_forms::{dagger_via_negative_generators, dagger_via_positive_generators};
use crate::theorems::nondegeneracy::grade2_nondegeneracy;
use crate::theorems::reconstruction::{central_part, commutators_with_generators, solve_commutator_system};
use crate::theorems::structure::{
    bivector_commutator_violations, central_blades, contraction_prediction, expected_central_blades,
    volume_commutation_violations, volume_square_prediction,
};
use crate::unitary::{
    basis_change_residuals, conjugated_bases, group_dimension_check, random_unitary,
    unitarity_residual, UnitaryElement,
};

/// Tolerance for unitarity and basis-change relations.
pub const UNITARY_TOL: f64 = 1e-8;
/// Tolerance for the reconstruction round trip.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;
/// Bound on imaginary parts of Hermitian spectra and on `Im det` of real
/// elements.
pub const SPECTRAL_TOL: f64 = 1e-8;
/// Relative tolerance for determinant identities.
pub const DET_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem(u8),
    Golden,
    Unitary,
    Normal,
    Spectral,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Theorem(1),
        Suite::Theorem(2),
        Suite::Theorem(3),
        Suite::Theorem(4),
        Suite::Theorem(5),
        Suite::Theorem(6),
        Suite::Theorem(7),
        Suite::Theorem(8),
        Suite::Golden,
        Suite::Unitary,
        Suite::Normal,
        Suite::Spectral,
    ];

    /// Largest `n` covered by `--all`.
    pub fn max_n(self) -> usize {
        match self {
            Suite::Theorem(3) | Suite::Golden => 5,
            _ => 6,
        }
    }

    /// Targets for `--all`.
    pub fn all_targets(self) -> Vec<Target> {
        if self == Suite::Golden {
            return golden_cases()
                .into_iter()
                .map(|(sig, p)| Target::with_preset(sig, p))
                .collect();
        }
        let mut out: Vec<Target> = Signature::all_up_to(self.max_n(), Field::Complex)
            .expect("within N_MAX")
            .into_iter()
            .map(Target::new)
            .collect();
        if self == Suite::Theorem(2) {
            // the rank table needs grades up to 8
            out.push(Target::new(Signature::complex(8, 0).expect("valid")));
        }
        out
    }

    /// Targets for a single signature.
    pub fn targets_for(self, sig: Signature) -> Result<Vec<Target>> {
        if self == Suite::Golden {
            let t: Vec<Target> = golden_cases()
                .into_iter()
                .filter(|(s, _)| (s.p(), s.q()) == (sig.p(), sig.q()))
                .map(|(s, p)| Target::with_preset(s, p))
                .collect();
            if t.is_empty() {
                return Err(CliffordError::UnknownPreset {
                    preset: "paper".into(),
                    p: sig.p(),
                    q: sig.q(),
                });
            }
            return Ok(t);
        }
        if self == Suite::Theorem(3) && !(1..=5).contains(&sig.n()) {
            return Err(CliffordError::InvalidSignature {
                p: sig.p(),
                q: sig.q(),
                reason: "bracket identities are tabulated for 1 <= n <= 5".into(),
            });
        }
        Ok(vec![Target::new(sig)])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::Theorem(k) => write!(f, "{k}"),
            Suite::Golden => f.write_str("golden"),
            Suite::Unitary => f.write_str("unitary"),
            Suite::Normal => f.write_str("normal"),
            Suite::Spectral => f.write_str("spectral"),
        }
    }
}

impl FromStr for Suite {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| {
                CliffordError::Parse(format!(
                    "unknown suite `{s}`; expected 1-8, golden, unitary, normal or spectral"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Target {
    pub signature: Signature,
    pub preset: Option<Preset>,
}

impl Target {
    pub fn new(signature: Signature) -> Self {
        Target {
            signature: signature.with_field(Field::Complex),
            preset: None,
        }
    }

    pub fn with_preset(signature: Signature, preset: Preset) -> Self {
        Target {
            preset: Some(preset),
            ..Target::new(signature)
        }
    }

    pub fn label(&self) -> String {
        match self.preset {
            Some(p) => format!("{} {p}", self.signature),
            None => self.signature.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub eps: f64,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 100,
            seed: 0,
            eps: crate::DEFAULT_EPS,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseFailure {
    pub case: String,
    /// Infinite (serialized as `null`) when the case could not be evaluated.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    /// `(p,q)` for a single-signature run, `all` otherwise.
    pub signature: String,
    pub targets: Vec<String>,
    pub trials: usize,
    pub seed: u64,
    pub eps: f64,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub notes: Vec<String>,
    pub elapsed_seconds: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn pretty(&self) -> String {
        let mut s = format!(
            "suite {}  signature {}  targets {}  trials {}  seed {}  eps {:e}\n",
            self.suite,
            self.signature,
            self.targets.len(),
            self.trials,
            self.seed,
            self.eps
        );
        s += &format!(
            "{} cases, {} failures, {:.3} s\n",
            self.cases,
            self.failures.len(),
            self.elapsed_seconds
        );
        for f in &self.failures {
            s += &format!("  FAIL {}  residual {:.3e}\n", f.case, f.residual);
        }
        for n in &self.notes {
            s += &format!("  note: {n}\n");
        }
        s
    }
}

#[derive(Debug, Default)]
struct Outcome {
    cases: usize,
    failures: Vec<CaseFailure>,
    notes: Vec<String>,
}

impl Outcome {
    /// Records a case passing iff `residual <= tol`.
    fn check(&mut self, case: impl FnOnce() -> String, residual: f64, tol: f64) {
        self.cases += 1;
        if !(residual <= tol) {
            self.failures.push(CaseFailure {
                case: case(),
                residual,
            });
        }
    }

    fn error(&mut self, case: impl Into<String>, e: CliffordError) {
        self.cases += 1;
        self.failures.push(CaseFailure {
            case: format!("{}: {e}", case.into()),
            residual: f64::INFINITY,
        });
    }
}

/// Runs `suite` on `targets`.
pub fn run_suite(suite: Suite, targets: &[Target], opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let run = |t: &Target| {
        let mut rng = derived_rng(opts.seed, &format!("{suite}/{}", t.label()));
        let mut out = Outcome::default();
        if let Err(e) = run_target(suite, t, opts, &mut rng, &mut out) {
            out.error("setup", e);
        }
        out
    };
    let outcomes: Vec<Outcome> = if opts.jobs > 1 && targets.len() > 1 {
        let chunk = targets.len().div_ceil(opts.jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> = targets
                .chunks(chunk)
                .map(|c| s.spawn(move || c.iter().map(run).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("suite thread panicked"))
                .collect()
        })
    } else {
        targets.iter().map(run).collect()
    };

    let mut report = VerifyReport {
        suite: suite.to_string(),
        signature: match targets {
            [t] => t.signature.to_string(),
            _ => "all".into(),
        },
        targets: targets.iter().map(Target::label).collect(),
        trials: opts.trials,
        seed: opts.seed,
        eps: opts.eps,
        cases: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        elapsed_seconds: 0.0,
    };
    for (t, o) in targets.iter().zip(outcomes) {
        report.cases += o.cases;
        report.failures.extend(o.failures.into_iter().map(|f| CaseFailure {
            case: format!("{} {}", t.label(), f.case),
            residual: f.residual,
        }));
        for n in o.notes {
            if !report.notes.contains(&n) {
                report.notes.push(n);
            }
        }
    }
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    report
}

fn run_target(
    suite: Suite,
    t: &Target,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
    out: &mut Outcome,
) -> Result<()> {
    let sig = t.signature;
    match suite {
        Suite::Theorem(1) => bivector_suite(sig, opts, rng, out),
        Suite::Theorem(2) => support_suite(sig, out),
        Suite::Theorem(3) => bracket_suite(sig, opts, rng, out),
        Suite::Theorem(4) => nondegeneracy_suite(sig, out)?,
        Suite::Theorem(5) => contraction_suite(sig, opts, rng, out)?,
        Suite::Theorem(6) => reconstruction_suite(sig, opts, rng, out),
        Suite::Theorem(7) => dagger_suite(sig, opts, rng, out),
        Suite::Theorem(8) => idempotent_suite(sig, opts, out)?,
        Suite::Golden => golden_suite(t, opts, out)?,
        Suite::Unitary => unitary_suite(sig, opts, rng, out)?,
        Suite::Normal => normal_suite(sig, opts, rng, out)?,
        Suite::Spectral => spectral_suite(sig, opts, rng, out)?,
        Suite::Theorem(k) => {
            return Err(CliffordError::Parse(format!("unknown theorem {k}")));
        }
    }
    Ok(())
}

fn bivector_suite(sig: Signature, opts: &VerifyOptions, rng: &mut impl Rng, out: &mut Outcome) {
    let bad = bivector_commutator_violations(&sig);
    out.check(|| "blade pairs".into(), bad.len() as f64, 0.0);
    let n = sig.n();
    for k in 1..n {
        for _ in 0..opts.trials {
            let u = random_homogeneous(sig, k, rng);
            let v = random_homogeneous(sig, 2, rng);
            let c = u.commutator(&v).expect("same signature");
            let off = (&c - &c.grade_project(k).expect("k <= n")).max_abs();
            out.check(|| format!("[U{k}, V2] leaves grade {k}"), off, opts.eps);
        }
    }
}

fn support_suite(sig: Signature, out: &mut Outcome) {
    if sig.n() <= 6 {
        for (a, b, br) in exhaustive_support_violations(&sig) {
            out.check(|| format!("{br} {a} {b}"), 1.0, 0.0);
        }
        out.cases += sig.dim() * sig.dim();
        return;
    }
    for row in rank_table_comparison(&sig) {
        out.check(
            || format!("rank table ({},{}) vs formulas", row.k, row.l),
            f64::from(u8::from(!row.matches_prediction())),
            0.0,
        );
        out.check(
            || format!("rank table ({},{}) printed anticommutator", row.k, row.l),
            f64::from(u8::from(!row.matches_printed_anticommutator())),
            0.0,
        );
        if !row.matches_printed_commutator() {
            out.notes.push(format!(
                "rank table ({},{}): printed commutator {} differs from computed {}",
                row.k, row.l, row.commutator_printed, row.commutator_computed
            ));
        }
    }
}

fn bracket_suite(sig: Signature, opts: &VerifyOptions, rng: &mut impl Rng, out: &mut Outcome) {
    for line in bracket_table().iter().filter(|l| l.n == sig.n()) {
        let r = verify_line_on(line, &[sig], opts.trials, opts.eps, rng);
        out.check(|| line.to_string(), r.max_residual, opts.eps);
        if !r.verified {
            if let Some(e) = r.error {
                out.notes.push(format!("{line}: {e}"));
            }
            match fit_line(line, opts.trials.clamp(2, 10), opts.eps, rng) {
                Some(fit) => out.notes.push(format!("{line}: fitted `{fit}`")),
                None => out.notes.push(format!("{line}: no fit among candidates")),
            }
        }
    }
}

fn nondegeneracy_suite(sig: Signature, out: &mut Outcome) -> Result<()> {
    for k in 1..sig.n() {
        let r = grade2_nondegeneracy(&sig.with_field(Field::Real), k)?;
        out.check(|| format!("kernel k={k}"), r.kernel_dimension as f64, 0.0);
    }
    Ok(())
}

fn contraction_suite(
    sig: Signature,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
    out: &mut Outcome,
) -> Result<()> {
    let n = sig.n();
    for k in 0..=n {
        for _ in 0..opts.trials {
            let u = random_homogeneous(sig, k, rng);
            let r = u.generator_contraction().max_abs_diff(&contraction_prediction(&u));
            out.check(|| format!("grade {k}"), r, opts.eps);
        }
    }
    for _ in 0..opts.trials {
        let u = random_multivector(sig, rng);
        let r = u.generator_contraction().max_abs_diff(&contraction_prediction(&u));
        out.check(|| "mixed".into(), r, opts.eps);
    }
    // e^a e_a = n and e^a l e_a = (-1)^{n+1} n l
    let mut sum = Multivector::zero(sig);
    let mut vol = Multivector::zero(sig);
    let l = Multivector::volume_element(sig);
    for a in 1..=n {
        let up = Multivector::generator(sig, a)?;
        let down = Multivector::lowered_generator(sig, a)?;
        sum += &up * &down;
        vol += &(&up * &l) * &down;
    }
    out.check(
        || "e^a e_a".into(),
        sum.max_abs_diff(&Multivector::scalar(sig, n as f64)),
        opts.eps,
    );
    let s = if n % 2 == 1 { 1.0 } else { -1.0 };
    out.check(|| "e^a l e_a".into(), vol.max_abs_diff(&(l.clone() * (s * n as f64))), opts.eps);
    out.check(
        || "l^2".into(),
        (&l * &l).max_abs_diff(&volume_square_prediction(&sig)),
        opts.eps,
    );
    out.check(
        || "l e^A = (-1)^{k(n+1)} e^A l".into(),
        volume_commutation_violations(&sig).len() as f64,
        0.0,
    );
    out.check(
        || "centre".into(),
        f64::from(u8::from(central_blades(&sig) != expected_central_blades(&sig))),
        0.0,
    );
    Ok(())
}

fn reconstruction_suite(sig: Signature, opts: &VerifyOptions, rng: &mut impl Rng, out: &mut Outcome) {
    for i in 0..opts.trials {
        let b = random_multivector(sig, rng);
        let c = commutators_with_generators(&b);
        match solve_commutator_system(&c, &sig, RECONSTRUCTION_TOL) {
            Ok(r) => {
                let want = &b - &central_part(&b);
                out.check(|| format!("trial {i}"), r.b.max_abs_diff(&want), RECONSTRUCTION_TOL);
            }
            Err(e) => out.error(format!("trial {i}"), e),
        }
    }
}

fn dagger_suite(sig: Signature, opts: &VerifyOptions, rng: &mut impl Rng, out: &mut Outcome) {
    for a in 1..=sig.n() {
        let e = Multivector::generator(sig, a).expect("in range");
        let want = e.clone() * f64::from(generator_dagger_sign(&sig, a));
        out.check(|| format!("sign of e^{a}"), dagger(&e).max_abs_diff(&want), 0.0);
    }
    for _ in 0..opts.trials {
        let u = random_multivector(sig, rng);
        let d = dagger(&u);
        out.check(
            || "negative-generator form".into(),
            d.max_abs_diff(&dagger_via_negative_generators(&u)),
            opts.eps,
        );
        out.check(
            || "positive-generator form".into(),
            d.max_abs_diff(&dagger_via_positive_generators(&u)),
            opts.eps,
        );
    }
}

fn idempotent_suite(sig: Signature, opts: &VerifyOptions, out: &mut Outcome) -> Result<()> {
    let basis = standard_ideal_basis(&sig)?;
    out.check(|| "gram".into(), basis.orthonormality_residual(), opts.eps);
    out.check(|| "t^2 = t, t^dagger = t".into(), basis.idempotent_residual(), opts.eps);
    out.check(|| "tau in ideal".into(), basis.membership_residual(), opts.eps);
    let want = 0.5f64.powi((sig.n() / 2) as i32);
    out.check(|| "Tr t".into(), (basis.t.trace() - want).norm(), opts.eps);
    out.check(
        || "dimension".into(),
        (basis.dim() as f64 - (1usize << sig.n().div_ceil(2)) as f64).abs(),
        0.0,
    );
    Ok(())
}

fn golden_suite(t: &Target, opts: &VerifyOptions, out: &mut Outcome) -> Result<()> {
    let preset = t.preset.unwrap_or(Preset::Paper);
    let want = golden_matrices(&t.signature, preset)?;
    let rep = Representation::new(preset_ideal_basis(&t.signature, preset)?);
    for (a, (got, want)) in rep.generators().iter().zip(&want).enumerate() {
        let r = if got.dim() == want.dim() {
            got.max_abs_diff(want)
        } else {
            f64::INFINITY
        };
        out.check(|| format!("gamma(e^{})", a + 1), r, opts.eps);
    }
    Ok(())
}

/// Basis used for block and unitary checks: the tabulated one where it
/// exists, else `block` for odd `n` and `standard` for even `n`.
fn block_preset(sig: &Signature) -> Preset {
    if sig.n() % 2 == 0 {
        Preset::Standard
    } else if Preset::Paper.supports(sig) {
        Preset::Paper
    } else {
        Preset::Block
    }
}

fn unitary_suite(
    sig: Signature,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
    out: &mut Outcome,
) -> Result<()> {
    let report = group_dimension_check(&sig, opts.trials, rng, UNITARY_TOL)?;
    out.check(
        || "antiHermitian dimension".into(),
        (report.antihermitian_dimension as f64 - report.expected_dimension as f64).abs(),
        0.0,
    );
    out.check(|| "gamma(U) unitary".into(), report.max_unitarity_residual, UNITARY_TOL);
    out.check(|| "two blocks".into(), report.max_off_block, UNITARY_TOL);

    let rep = Representation::new(preset_ideal_basis(&sig, block_preset(&sig))?);
    for i in 0..opts.trials {
        let u = random_unitary(sig, rng);
        let v = random_unitary(sig, rng);
        out.check(|| format!("closure {i}"), unitarity_residual(&(&u * &v)), UNITARY_TOL);
        let u = UnitaryElement::new(u, UNITARY_TOL)?;
        out.check(|| format!("inverse {i}"), unitarity_residual(&u.inverse()), UNITARY_TOL);
        let t = &(u.get() * &rep.basis().t) * &u.inverse();
        let idem = (&t * &t).max_abs_diff(&t).max(dagger(&t).max_abs_diff(&t));
        out.check(|| format!("U t U^-1 idempotent {i}"), idem, UNITARY_TOL);
        // the basis changes are costly; sample a tenth of the trials
        if i % 10 == 0 {
            let bases = conjugated_bases(&rep, &u)?;
            let w = random_multivector(sig, rng);
            let r = basis_change_residuals(&rep, &bases, &u, &w)?;
            for (name, x) in ["hat", "check", "hathat"].iter().zip(r) {
                out.check(|| format!("basis change {name} {i}"), x, UNITARY_TOL);
            }
        }
    }
    Ok(())
}

fn normal_suite(
    sig: Signature,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
    out: &mut Outcome,
) -> Result<()> {
    let rep = Representation::new(standard_ideal_basis(&sig)?);
    let report = rep.is_normal(opts.eps);
    out.check(|| "dimension".into(), f64::from(u8::from(!report.dimension_ok)), 0.0);
    out.check(|| "orthonormal".into(), f64::from(u8::from(!report.orthonormal)), 0.0);
    for (case, r) in report.failures {
        out.check(|| case, r, opts.eps);
    }
    for m in 0..sig.dim() as u32 {
        let e = Multivector::basis(sig, BladeIndex(m));
        let r = rep.gamma(&dagger(&e))?.max_abs_diff(&rep.gamma(&e)?.adjoint());
        out.check(|| format!("gamma({}^dagger)", BladeIndex(m)), r, opts.eps);
    }
    // generators anticommute with factor 2
    let d = rep.dim();
    let g = rep.generators();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let anti = &(&g[a] * &g[b]) + &(&g[b] * &g[a]);
            let eta = if a == b { 2.0 * f64::from(sig.metric(a + 1)) } else { 0.0 };
            let want = ComplexMatrix::identity(d).scale(Complex64::new(eta, 0.0));
            out.check(|| format!("anticommutator ({}, {})", a + 1, b + 1), anti.max_abs_diff(&want), opts.eps);
        }
    }
    for _ in 0..opts.trials {
        let u = random_multivector(sig, rng);
        let r = (u.trace() - rep.gamma(&u)?.trace() / d as f64).norm();
        out.check(|| "Tr U = trace(gamma(U)) / d".into(), r, opts.eps);
    }
    Ok(())
}

fn relative(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn spectral_suite(
    sig: Signature,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
    out: &mut Outcome,
) -> Result<()> {
    let rep = Representation::new(standard_ideal_basis(&sig)?);
    for i in 0..opts.trials {
        let (h, _) = hermitian_split(&random_multivector(sig, rng));
        match rep.spectrum(&h, opts.eps) {
            Ok(spec) => {
                let im = spec.iter().map(|l| l.im.abs()).fold(0.0, f64::max);
                out.check(|| format!("Hermitian spectrum real {i}"), im, SPECTRAL_TOL);
            }
            Err(e) => out.error(format!("Hermitian spectrum {i}"), e),
        }

        let u = random_multivector(sig, rng);
        let v = random_multivector(sig, rng);
        let du = rep.determinant(&u)?;
        let dv = rep.determinant(&v)?;
        let duv = rep.determinant(&(&u * &v))?;
        out.check(|| format!("det multiplicative {i}"), relative(duv, du * dv), DET_REL_TOL);
        match rep.spectrum(&u, opts.eps) {
            Ok(spec) => {
                let prod: Complex64 = spec.iter().product();
                out.check(|| format!("spectrum product {i}"), relative(prod, du), DET_REL_TOL);
            }
            Err(e) => out.error(format!("spectrum {i}"), e),
        }

        let real = random_multivector(sig.with_field(Field::Real), rng).with_field(Field::Complex)?;
        let dr = rep.determinant(&real)?;
        out.check(|| format!("det real {i}"), dr.im.abs(), SPECTRAL_TOL);
    }
    Ok(())
}

/// Resolves `--all` / `--signature` into targets and runs the suite.
pub fn verify(suite: Suite, signature: Option<Signature>, opts: &VerifyOptions) -> Result<VerifyReport> {
    let targets = match signature {
        Some(sig) => suite.targets_for(sig)?,
        None => suite.all_targets(),
    };
    Ok(run_suite(suite, &targets, opts))
}
