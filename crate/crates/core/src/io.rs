//! Document formats, subcommand dispatch and the corpus runner.
//!
//! Ideals are read from JSON documents of the form
//!
//! ```json
//! {"n": 2, "generators": [[2,0],[1,1],[0,2]], "name": "m2"}
//! ```
//!
//! Reports are JSON objects tagged by `"command"`. Field order is fixed by the
//! struct definitions, so identical inputs produce byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{briancon_skoda_exponent, briancon_skoda_inclusion, certify_ideal, CertReport, Outcome, ReesValuation};
use crate::complex::{
    acyclicity_failure, build_complex, compose_zero, labels, rank_profile, taylor_complex, ComplexKind, RankProfile,
};
use crate::fan::{divisor_table, normal_fan, regularize, DivisorRow, Fan};
use crate::ideal::{Exponent, MonIdeal};
use crate::newton::{compact_facets, integral_closure, is_integrally_closed, rees_valuations, CompactFacet};
use crate::residue::{annihilator, residue_current, FormalResidue};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub n: usize,
    pub generators: Vec<Exponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonIdeal, name: Option<String>) -> Self {
        IdealDocument {
            n: ideal.dim(),
            generators: ideal.gens().to_vec(),
            name,
        }
    }

    pub fn to_ideal(&self) -> Result<MonIdeal> {
        MonIdeal::new(self.n, self.generators.iter().cloned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    /// The document with generators already minimalized.
    pub document: IdealDocument,
    pub ideal: MonIdeal,
    /// Set when redundant generators were dropped on load.
    pub notice: Option<String>,
}

pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let raw: IdealDocument =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed ideal document: {e}")))?;
    if raw.n == 0 {
        return Err(Error::ZeroDimension);
    }
    if raw.generators.is_empty() {
        return Err(Error::Input("empty generator list".into()));
    }
    let ideal = raw.to_ideal()?;
    let notice = (ideal.num_gens() != raw.generators.len()).then(|| {
        format!(
            "reduced {} listed generators to {} minimal generators",
            raw.generators.len(),
            ideal.num_gens()
        )
    });
    Ok(ParsedIdeal {
        document: IdealDocument::from_ideal(&ideal, raw.name),
        ideal,
        notice,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subcommand {
    Closure,
    Rees,
    Resolve,
    Residue,
    Certify,
    Fan,
    Bs,
}

impl FromStr for Subcommand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "closure" => Subcommand::Closure,
            "rees" => Subcommand::Rees,
            "resolve" => Subcommand::Resolve,
            "residue" => Subcommand::Residue,
            "certify" => Subcommand::Certify,
            "fan" => Subcommand::Fan,
            "bs" => Subcommand::Bs,
            other => return Err(Error::Input(format!("unknown subcommand {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub complex: ComplexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub ideal: MonIdeal,
    pub closure: MonIdeal,
    pub integrally_closed: bool,
    pub facets: Vec<CompactFacet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    pub ideal: MonIdeal,
    pub valuations: Vec<ReesValuation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolveReport {
    pub ideal: MonIdeal,
    pub complex: ComplexKind,
    pub face_counts: Vec<usize>,
    /// Labels of `K_1, ..., K_N`.
    pub labels: Vec<Vec<Exponent>>,
    pub compose_zero: bool,
    pub resolution: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acyclicity_failure: Option<Exponent>,
    pub rank_profile: RankProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub ideal: MonIdeal,
    pub complex: ComplexKind,
    pub residue: FormalResidue,
    pub annihilator: MonIdeal,
    pub duality: bool,
    pub irreducible_components: Vec<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub ideal: MonIdeal,
    pub normal_fan: Fan,
    pub regular_fan: Fan,
    pub divisors: Vec<DivisorRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BsReport {
    pub ideal: MonIdeal,
    pub nu: u32,
    pub closure: MonIdeal,
    pub holds: bool,
    /// Whether `closure ⊆ I` (the inclusion with exponent 1).
    pub closure_contained: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusCheck {
    Equivalence,
    Duality,
    Bs,
}

impl FromStr for CorpusCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "equivalence" => CorpusCheck::Equivalence,
            "duality" => CorpusCheck::Duality,
            "bs" => CorpusCheck::Bs,
            other => return Err(Error::Input(format!("unknown corpus check {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFailure {
    pub ideal: MonIdeal,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub bound: u64,
    pub check: CorpusCheck,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<CorpusFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum ReportDocument {
    Closure(ClosureReport),
    Rees(ReesReport),
    Resolve(ResolveReport),
    Residue(ResidueReport),
    Certify(CertReport),
    Fan(FanReport),
    Bs(BsReport),
    Corpus(CorpusReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub report: ReportDocument,
    /// 0 on success, 1 on a negative decision.
    pub exit_code: i32,
}

fn outcome(report: ReportDocument, positive: bool) -> RunOutcome {
    RunOutcome {
        report,
        exit_code: if positive { 0 } else { 1 },
    }
}

/// Runs one subcommand. Errors carry their own exit code
/// ([`Error::exit_code`]).
pub fn run_subcommand(sub: Subcommand, ideal: &MonIdeal, options: &Options) -> Result<RunOutcome> {
    match sub {
        Subcommand::Closure => {
            let closure = integral_closure(ideal)?;
            let report = ClosureReport {
                ideal: ideal.clone(),
                integrally_closed: closure == *ideal,
                closure,
                facets: compact_facets(ideal)?.facets,
            };
            Ok(outcome(ReportDocument::Closure(report), true))
        }
        Subcommand::Rees => {
            let valuations = rees_valuations(ideal)?
                .into_iter()
                .map(|(rho, r)| ReesValuation { rho, r })
                .collect();
            Ok(outcome(
                ReportDocument::Rees(ReesReport {
                    ideal: ideal.clone(),
                    valuations,
                }),
                true,
            ))
        }
        Subcommand::Resolve => {
            let complex = build_complex(ideal, options.complex)?;
            let composes = compose_zero(&complex);
            let failure = if composes { acyclicity_failure(&complex, ideal)? } else { None };
            let resolution = composes && failure.is_none();
            let report = ResolveReport {
                ideal: ideal.clone(),
                complex: options.complex,
                face_counts: complex.face_counts(),
                labels: (1..=complex.top_degree()).map(|k| labels(&complex, k)).collect(),
                compose_zero: composes,
                resolution,
                acyclicity_failure: failure,
                rank_profile: rank_profile(&complex)?,
            };
            Ok(outcome(ReportDocument::Resolve(report), resolution))
        }
        Subcommand::Residue => {
            let complex = build_complex(ideal, options.complex)?;
            let residue = residue_current(&complex, ideal)?;
            let ann = annihilator(&residue)?;
            let report = ResidueReport {
                ideal: ideal.clone(),
                complex: options.complex,
                duality: ann == *ideal,
                annihilator: ann,
                irreducible_components: ideal.irreducible_decomposition()?,
                residue,
            };
            let ok = report.duality;
            Ok(outcome(ReportDocument::Residue(report), ok))
        }
        Subcommand::Certify => {
            let report = certify_ideal(ideal, options.complex)?;
            let closed = report.closed;
            Ok(outcome(ReportDocument::Certify(report), closed))
        }
        Subcommand::Fan => {
            let nf = normal_fan(ideal)?;
            let regular = regularize(&nf)?;
            let report = FanReport {
                ideal: ideal.clone(),
                divisors: divisor_table(&regular, ideal)?,
                normal_fan: nf,
                regular_fan: regular,
            };
            Ok(outcome(ReportDocument::Fan(report), true))
        }
        Subcommand::Bs => {
            ideal.require_artinian()?;
            let nu = briancon_skoda_exponent(ideal);
            let closure = integral_closure(ideal)?;
            let report = BsReport {
                ideal: ideal.clone(),
                nu,
                holds: briancon_skoda_inclusion(ideal, nu)?,
                closure_contained: ideal.contains_ideal(&closure)?,
                closure,
            };
            let holds = report.holds;
            Ok(outcome(ReportDocument::Bs(report), holds))
        }
    }
}

/// Every Artinian proper monomial ideal in two variables whose minimal
/// generators lie in `[0, bound]^2`, enumerated by staircase.
///
/// A staircase is a weakly decreasing sequence of column heights
/// `h_0 >= ... >= h_{bound-1}` in `0..=bound` with `h_0 > 0`; its ideal is
/// generated by the corners `(i, h_i)` with `h_bound = 0`.
pub fn generate_corpus(n: usize, bound: u64) -> Result<Vec<IdealDocument>> {
    if n != 2 {
        return Err(Error::Input(format!("corpus generation supports n = 2 only, got {n}")));
    }
    if !(1..=6).contains(&bound) {
        return Err(Error::Input(format!("corpus bound must lie in 1..=6, got {bound}")));
    }
    let mut out = Vec::new();
    let mut heights = vec![0u64; bound as usize];
    loop {
        if heights[0] > 0 {
            let corners = heights
                .iter()
                .copied()
                .chain(std::iter::once(0))
                .enumerate()
                .map(|(i, h)| Exponent::from([i as u64, h]));
            let ideal = MonIdeal::new(2, corners)?;
            let name = format!("b{bound}-{:03}", out.len());
            out.push(IdealDocument::from_ideal(&ideal, Some(name)));
        }
        // next weakly decreasing sequence, odometer style from the right
        let mut i = heights.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            let cap = if i == 0 { bound } else { heights[i - 1] };
            if heights[i] < cap {
                heights[i] += 1;
                for h in &mut heights[i + 1..] {
                    *h = 0;
                }
                break;
            }
        }
    }
}

fn check_one(ideal: &MonIdeal, check: CorpusCheck) -> Result<Option<String>> {
    Ok(match check {
        CorpusCheck::Equivalence => {
            let report = certify_ideal(ideal, ComplexKind::Taylor)?;
            let oracle = is_integrally_closed(ideal)?;
            (report.closed != oracle).then(|| format!("certificates say {}, closure says {oracle}", report.closed))
        }
        CorpusCheck::Duality => {
            let residue = residue_current(&taylor_complex(ideal)?, ideal)?;
            let ann = annihilator(&residue)?;
            let labels: Vec<&Exponent> = residue.candidates().map(|c| &c.alpha).collect();
            let missing: Vec<Exponent> = ideal
                .irreducible_decomposition()?
                .into_iter()
                .filter(|a| !labels.contains(&a))
                .collect();
            if ann != *ideal {
                Some(format!("annihilator {ann} differs"))
            } else if !missing.is_empty() {
                Some(format!("irreducible components {} missing from support", missing.iter().join(", ")))
            } else {
                None
            }
        }
        CorpusCheck::Bs => {
            (!crate::certify::briancon_skoda_check(ideal)?).then(|| "inclusion fails".to_string())
        }
    })
}

/// Thread count from `MONRES_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("MONRES_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t: &usize| t > 0)
}

/// Runs `check` over [`generate_corpus`]`(2, bound)`, preserving corpus order.
pub fn run_corpus(bound: u64, check: CorpusCheck, threads: Option<usize>) -> Result<CorpusReport> {
    let docs = generate_corpus(2, bound)?;
    let ideals = docs.iter().map(IdealDocument::to_ideal).collect::<Result<Vec<_>>>()?;
    let work = || -> Result<Vec<Option<String>>> { ideals.par_iter().map(|i| check_one(i, check)).collect() };
    let results = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let failures: Vec<CorpusFailure> = ideals
        .iter()
        .zip(results)
        .filter_map(|(ideal, r)| r.map(|detail| CorpusFailure { ideal: ideal.clone(), detail }))
        .collect();
    Ok(CorpusReport {
        bound,
        check,
        total: ideals.len(),
        passed: ideals.len() - failures.len(),
        failures,
    })
}

pub fn emit_json(report: &ReportDocument) -> String {
    serde_json::to_string_pretty(report).expect("reports always serialize")
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed report: {e}")))
}

/// Human-readable rendering.
pub fn render_text(report: &ReportDocument) -> String {
    let mut s = String::new();
    match report {
        ReportDocument::Closure(r) => {
            let _ = writeln!(s, "ideal:     {}", r.ideal);
            let _ = writeln!(s, "closure:   {}", r.closure);
            let _ = writeln!(s, "integrally closed: {}", r.integrally_closed);
            for f in &r.facets {
                let _ = writeln!(s, "facet: <{}, a> >= {}", f.normal, f.offset);
            }
        }
        ReportDocument::Rees(r) => {
            let _ = writeln!(s, "ideal: {}", r.ideal);
            for v in &r.valuations {
                let _ = writeln!(s, "rees valuation {}  order {}", v.rho, v.r);
            }
        }
        ReportDocument::Resolve(r) => {
            let _ = writeln!(s, "ideal: {}  complex: {}", r.ideal, r.complex);
            let _ = writeln!(s, "faces per degree: {:?}", r.face_counts);
            for (k, l) in r.labels.iter().enumerate() {
                let _ = writeln!(s, "  K_{}: {}", k + 1, l.iter().join(" "));
            }
            let _ = writeln!(s, "compose zero: {}", r.compose_zero);
            let _ = writeln!(s, "cellular resolution: {}", r.resolution);
            if let Some(b) = &r.acyclicity_failure {
                let _ = writeln!(s, "acyclicity fails below {b}");
            }
            let _ = writeln!(
                s,
                "ranks: {:?}  rank-exact: {}",
                r.rank_profile.ranks, r.rank_profile.rank_exact
            );
        }
        ReportDocument::Residue(r) => {
            let _ = writeln!(s, "ideal: {}  complex: {}", r.ideal, r.complex);
            for c in &r.residue.components {
                let _ = writeln!(s, "  face {:?}  alpha {}  {:?}", c.vertices, c.alpha, c.status);
            }
            let _ = writeln!(s, "annihilator: {}", r.annihilator);
            let _ = writeln!(s, "duality: {}", r.duality);
        }
        ReportDocument::Certify(r) => {
            let _ = writeln!(s, "ideal: {}  complex: {}", r.ideal, r.complex);
            for v in &r.rees {
                let _ = writeln!(s, "rees ray {}  r = {}", v.rho, v.r);
            }
            for c in &r.components {
                match &c.outcome {
                    Outcome::Certified(cert) => {
                        let _ = writeln!(
                            s,
                            "  alpha {}  ray {}  k {}  beta {}  a = {} <= r = {}",
                            c.alpha, cert.rho, cert.k, cert.beta, cert.a, cert.r
                        );
                    }
                    Outcome::Failed(w) => {
                        let rays = w
                            .rays
                            .iter()
                            .map(|o| format!("{}: ord {} >= r {}", o.rho, o.ord_alpha_minus_one, o.r))
                            .join("; ");
                        let _ = writeln!(s, "  alpha {}  NO CERTIFICATE  ({rays})", c.alpha);
                    }
                }
            }
            let _ = writeln!(s, "provably zero components: {}", r.provably_zero);
            if let Some(e) = &r.equal_powers {
                let _ = writeln!(
                    s,
                    "equal powers l = {}: improved exponent {}, Bochner-Martinelli exponent {}",
                    e.l, e.improved, e.bochner_martinelli
                );
            }
            let _ = writeln!(s, "closed: {}", r.closed);
        }
        ReportDocument::Fan(r) => {
            let _ = writeln!(s, "ideal: {}", r.ideal);
            let _ = writeln!(s, "normal fan rays: {}", r.normal_fan.rays.iter().join(" "));
            let _ = writeln!(s, "regular fan rays: {}", r.regular_fan.rays.iter().join(" "));
            for d in &r.divisors {
                let _ = writeln!(
                    s,
                    "  {}  r = {}  ord(dz) = {}{}",
                    d.rho,
                    d.r,
                    d.ord_dz,
                    if d.is_rees { "  rees" } else { "" }
                );
            }
        }
        ReportDocument::Bs(r) => {
            let _ = writeln!(s, "ideal: {}", r.ideal);
            let _ = writeln!(s, "closure: {}", r.closure);
            let _ = writeln!(s, "closure^{} inside ideal: {}", r.nu, r.holds);
            let _ = writeln!(s, "closure inside ideal: {}", r.closure_contained);
        }
        ReportDocument::Corpus(r) => {
            let _ = writeln!(s, "corpus bound {}  check {:?}", r.bound, r.check);
            let _ = writeln!(s, "passed {}/{}", r.passed, r.total);
            for f in &r.failures {
                let _ = writeln!(s, "  FAIL {}: {}", f.ideal, f.detail);
            }
        }
    }
    s
}
