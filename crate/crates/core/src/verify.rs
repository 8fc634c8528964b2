//! Cross-checks between the closed forms, the polynomial tables and the oracle.
//!
//! [`run`] walks a fixed list of checks and records one [`CheckRecord`] per
//! comparison. Oracle calls that exceed the budget become `Skipped` records.
//! When printed formulas are compared, a mismatch is recorded as
//! `PaperDiscrepancy`; the normative value it is compared with has its own
//! oracle-backed record, which is where a genuine error would show as `Fail`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed::{self, LineFlavor, OgfReading, Variant};
use crate::gf::{is_odd_prime_power, FieldSpec, QClass, SquareClass};
use crate::oracle::{self, ClassTally, LineCounts, OracleConfig, OracleError, PosetKind};
use crate::polyq::{self, CaseReading, PolyFamilyKey, RatPoly};
use crate::quadspace::{AmbientForm, FormKind, LineType, SubspaceClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    /// A printed formula disagrees with the value it is compared against.
    PaperDiscrepancy,
    /// Not run, usually because of the enumeration budget.
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::PaperDiscrepancy => "PaperDiscrepancy",
            Status::Skipped => "Skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: String,
    pub expected: String,
    /// The computed value, or the reason for a skip.
    pub actual: String,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub paper_discrepancy: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub q_list: Vec<u64>,
    pub max_n: usize,
    /// Also evaluate the printed formulas and report where they differ.
    pub compare_paper: bool,
    pub oracle: OracleConfig,
}

impl VerifyOptions {
    pub fn new(q_list: Vec<u64>, max_n: usize) -> Self {
        VerifyOptions {
            q_list,
            max_n,
            compare_paper: true,
            oracle: OracleConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub q_list: Vec<u64>,
    pub max_n: usize,
    pub compare_paper: bool,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// Records matching a check name and an exact parameter string.
    pub fn find(&self, check: &str, params: &str) -> Option<&CheckRecord> {
        self.records
            .iter()
            .find(|r| r.check == check && r.params == params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("q = {0} is not an odd prime power")]
    InvalidQ(u64),
    #[error("no field orders given")]
    EmptyQList,
}

/// Field orders used for the ratio check, large enough for the bound to bite.
pub const RATIO_Q: [u64; 2] = [101, 1009];

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    if opts.q_list.is_empty() {
        return Err(VerifyError::EmptyQList);
    }
    if let Some(&q) = opts.q_list.iter().find(|&&q| !is_odd_prime_power(q)) {
        return Err(VerifyError::InvalidQ(q));
    }
    let start = Instant::now();
    let mut r = Runner {
        opts,
        records: Vec::new(),
        tallies: BTreeMap::new(),
        lines: BTreeMap::new(),
    };
    for &q in &opts.q_list {
        let field = FieldSpec::of_order(q).map_err(|_| VerifyError::InvalidQ(q))?;
        r.per_field(&field);
    }
    r.polynomials();
    r.ksets();
    r.ratios();

    let mut summary = Summary::default();
    for rec in &r.records {
        match rec.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::PaperDiscrepancy => summary.paper_discrepancy += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(VerifyReport {
        q_list: opts.q_list.clone(),
        max_n: opts.max_n,
        compare_paper: opts.compare_paper,
        records: r.records,
        summary,
        elapsed: start.elapsed(),
    })
}

type TallyKey = (u64, FormKind, usize);

struct Runner<'a> {
    opts: &'a VerifyOptions,
    records: Vec<CheckRecord>,
    /// Tallies for k = 0..=n, or `None` when the budget ruled them out.
    tallies: BTreeMap<TallyKey, Option<Vec<ClassTally>>>,
    lines: BTreeMap<TallyKey, Option<LineCounts>>,
}

fn holds<E: Display>(r: &Result<(), E>) -> String {
    match r {
        Ok(()) => "holds".into(),
        Err(e) => format!("violated: {e}"),
    }
}

fn flavor_line_type(f: LineFlavor) -> LineType {
    if f.is_spacelike() {
        LineType::Spacelike
    } else {
        LineType::Timelike
    }
}

fn row_text<T: Display>(row: &[T]) -> String {
    let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl Runner<'_> {
    fn cfg(&self) -> &OracleConfig {
        &self.opts.oracle
    }

    fn push(&mut self, check: &str, params: String, expected: String, actual: String, status: Status) {
        self.records.push(CheckRecord {
            check: check.into(),
            params,
            expected,
            actual,
            status,
        });
    }

    fn compare<T: PartialEq + Display>(&mut self, check: &str, params: String, expected: T, actual: T) {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(check, params, expected.to_string(), actual.to_string(), status);
    }

    fn skip(&mut self, check: &str, params: String, reason: impl Display) {
        self.push(check, params, String::new(), reason.to_string(), Status::Skipped);
    }

    fn fail(&mut self, check: &str, params: String, expected: impl Display, err: impl Display) {
        self.push(check, params, expected.to_string(), format!("error: {err}"), Status::Fail);
    }

    /// Unwraps an oracle result, recording a skip or a failure otherwise.
    fn oracle<T>(&mut self, check: &str, params: &str, r: Result<T, OracleError>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e @ OracleError::BudgetExceeded { .. }) => {
                self.skip(check, params.to_string(), e);
                None
            }
            Err(e) => {
                self.fail(check, params.to_string(), "oracle value", e);
                None
            }
        }
    }

    /// Unwraps a closed-form result, recording a failure otherwise.
    fn closed<T, E: Display>(&mut self, check: &str, params: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(check, params.to_string(), "closed-form value", e);
                None
            }
        }
    }

    fn ambient(&self, field: &FieldSpec, n: usize, kind: FormKind) -> AmbientForm {
        AmbientForm::new(field, n, kind).expect("n >= 1")
    }

    fn tallies(&mut self, field: &FieldSpec, n: usize, kind: FormKind) -> Option<Vec<ClassTally>> {
        let key = (field.q(), kind, n);
        if let Some(t) = self.tallies.get(&key) {
            return t.clone();
        }
        let ambient = self.ambient(field, n, kind);
        let computed: Result<Vec<ClassTally>, OracleError> = (0..=n)
            .map(|k| oracle::count_subspaces_by_class(&ambient, k, self.cfg()))
            .collect();
        let params = format!("q={} ambient={kind} n={n}", field.q());
        let t = self.oracle("oracle_tally", &params, computed);
        self.tallies.insert(key, t.clone());
        t
    }

    fn line_tally(&mut self, field: &FieldSpec, n: usize, kind: FormKind) -> Option<LineCounts> {
        let key = (field.q(), kind, n);
        if let Some(t) = self.lines.get(&key) {
            return *t;
        }
        let ambient = self.ambient(field, n, kind);
        let params = format!("q={} ambient={kind} n={n}", field.q());
        let r = oracle::count_lines(&ambient, self.cfg());
        let t = self.oracle("oracle_lines", &params, r);
        self.lines.insert(key, t);
        t
    }

    fn per_field(&mut self, field: &FieldSpec) {
        self.brackets(field);
        self.variants(field);
        self.identities(field);
        self.shapes(field);
        self.groups(field);
        self.posets(field);
        self.structure(field);
        self.lambda_invariance(field);
    }

    fn brackets(&mut self, field: &FieldSpec) {
        let q = field.q();
        let conv = closed::bracket(q, 0, LineFlavor::SpacelikeInDot);
        if let Some(v) = self.closed("bracket", &format!("q={q} n=0"), conv) {
            self.compare("bracket", format!("q={q} n=0"), BigUint::from(1u8), v);
        }
        for n in 1..=self.opts.max_n {
            for flavor in LineFlavor::ALL {
                let params = format!("q={q} n={n} flavor={flavor}");
                let Some(lines) = self.line_tally(field, n, flavor.ambient()) else {
                    continue;
                };
                let seen = BigUint::from(lines.get(flavor_line_type(flavor)));
                let Some(normative) = self.closed("line_count", &params, closed::line_count(q, n, flavor))
                else {
                    continue;
                };
                self.compare("line_count", params.clone(), seen.clone(), normative.clone());
                if flavor == LineFlavor::SpacelikeInDot {
                    let p = format!("q={q} n={n}");
                    if let Some(b) = self.closed("bracket", &p, closed::bracket(q, n, flavor)) {
                        self.compare("bracket", p, seen.clone(), b);
                    }
                }
                if self.opts.compare_paper {
                    let verbatim = closed::bracket_verbatim(q, n, flavor);
                    if let Some(Some(v)) = self.closed("line_count_verbatim", &params, verbatim) {
                        let seen_i = BigInt::from(seen.clone());
                        let status = if v == seen_i {
                            Status::Pass
                        } else if normative == seen {
                            Status::PaperDiscrepancy
                        } else {
                            Status::Fail
                        };
                        self.push("line_count_verbatim", params, seen.to_string(), v.to_string(), status);
                    }
                }
            }
        }
    }

    fn variants(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            for kind in [FormKind::Dot, FormKind::LambdaDot] {
                let Some(t) = self.tallies(field, n, kind) else {
                    continue;
                };
                for k in 0..=n {
                    let params = format!("q={q} ambient={kind} n={n} k={k}");
                    self.compare(
                        "gaussian_partition",
                        params.clone(),
                        closed::gaussian_binom(q, n, k),
                        BigUint::from(t[k].total()),
                    );
                    if kind == FormKind::Dot && 0 < k && k < n {
                        let proper = BigUint::from(t[k].dot) < closed::gaussian_binom(q, n, k);
                        self.compare("dot_type_proper_subset", params, true, proper);
                    }
                }
            }
            for variant in Variant::ALL {
                let Some(t) = self.tallies(field, n, variant.ambient()) else {
                    continue;
                };
                for k in 0..=n {
                    let params = format!("q={q} variant={variant} n={n} k={k}");
                    let r = closed::dot_binom_variant(q, n, k, variant);
                    if let Some(v) = self.closed("oracle_equivalence", &params, r) {
                        let seen = BigUint::from(t[k].get(variant.subspace_class()));
                        self.compare("oracle_equivalence", params, seen, v);
                    }
                }
            }
        }
    }

    fn identities(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            let r = closed::pascal_check(q, n);
            let status = if r.is_ok() { Status::Pass } else { Status::Fail };
            self.push("pascal", format!("q={q} n={n}"), "holds".into(), holds(&r), status);
        }
        for n in 0..=self.opts.max_n {
            for k in 0..=n {
                let params = format!("q={q} n={n} k={k}");
                let r = closed::quotient_identity_check(q, n, k);
                if let Some(ok) = self.closed("quotient_identity", &params, r) {
                    self.compare("quotient_identity", params, true, ok);
                }
            }
        }
        let mobius = closed::mobius_sequence(q, self.opts.max_n);
        if let Some(seq) = self.closed("mobius_recursion", &format!("q={q}"), mobius) {
            for m in 1..=self.opts.max_n {
                let sum: BigInt = (0..=m)
                    .map(|k| {
                        let c = BigInt::from(closed::dot_binom(q, m, k).unwrap_or_default());
                        if k % 2 == 0 {
                            &seq.b[k] * c
                        } else {
                            -&seq.b[k] * c
                        }
                    })
                    .sum();
                self.compare("mobius_recursion", format!("q={q} n={m}"), BigInt::default(), sum);
            }
        }
    }

    fn shapes(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            let params = format!("q={q} n={n}");
            if let Some(rep) = self.closed("shape_closed", &params, closed::shape_checks(q, n)) {
                let row = closed::pascal_row(q, n).unwrap_or_default();
                let status = if rep.holds() { Status::Pass } else { Status::Fail };
                let actual = format!("{} euclidean={:?} lorentzian={:?}", row_text(&row), rep.euclidean, rep.lorentzian);
                self.push("shape_closed", params.clone(), "symmetric, unimodal, log-concave".into(), actual, status);
            }
            let Some(t) = self.tallies(field, n, FormKind::Dot) else {
                continue;
            };
            let euclid: Vec<BigUint> = t.iter().map(|c| BigUint::from(c.dot)).collect();
            let lorentz: Vec<BigUint> = t[1..n].iter().map(|c| BigUint::from(c.lambda_dot)).collect();
            for (name, row) in [("euclidean", euclid), ("lorentzian", lorentz)] {
                let shape = closed::shape_of(&row);
                let status = if shape.holds() { Status::Pass } else { Status::Fail };
                self.push(
                    "shape_oracle",
                    format!("q={q} n={n} poset={name}"),
                    "symmetric, unimodal, log-concave".into(),
                    format!("{} {shape:?}", row_text(&row)),
                    status,
                );
            }
        }
    }

    fn groups(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            let params = format!("q={q} n={n}");
            let Some(formula) = self.closed("group_order", &params, closed::group_order(q, n)) else {
                continue;
            };
            let ambient = self.ambient(field, n, FormKind::Dot);
            let r = oracle::enumerate_orthogonal_group(&ambient, self.cfg());
            if let Some(seen) = self.oracle("group_order", &params, r) {
                self.compare("group_order", params.clone(), BigUint::from(seen), formula.clone());
            }
            if self.opts.compare_paper {
                for reading in [OgfReading::HalfDimension, OgfReading::Dimension] {
                    let p = format!("q={q} n={n} reading={reading:?}");
                    let Some(printed) = self.closed("group_order_printed", &p, closed::ogf_printed(q, n, reading))
                    else {
                        continue;
                    };
                    let want = BigInt::from(formula.clone());
                    let (actual, status) = match printed {
                        Some(v) if v == want => (v.to_string(), Status::Pass),
                        Some(v) => (v.to_string(), Status::PaperDiscrepancy),
                        None => ("undefined".to_string(), Status::PaperDiscrepancy),
                    };
                    self.push("group_order_printed", p, want.to_string(), actual, status);
                }
            }
        }
    }

    fn posets(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            // [k]_d·C(n,k)_d = [n]_d·C(n−1,k−1)_d, both sides from enumeration
            let Some(top) = self.tallies(field, n, FormKind::Dot) else {
                continue;
            };
            let below = if n > 1 {
                self.tallies(field, n - 1, FormKind::Dot)
            } else {
                Some(vec![ClassTally { dot: 1, ..Default::default() }])
            };
            if let Some(below) = below {
                for k in 1..=n {
                    let lines_k = if k == n { Some(top[1].dot) } else { self.tallies(field, k, FormKind::Dot).map(|t| t[1].dot) };
                    if let Some(lines_k) = lines_k {
                        let lhs = BigUint::from(lines_k) * top[k].dot;
                        let rhs = BigUint::from(top[1].dot) * below[k - 1].dot;
                        self.compare("flag_double_count", format!("q={q} n={n} k={k}"), lhs, rhs);
                    }
                }
            }

            for kind in [PosetKind::Euclidean, PosetKind::Lorentzian] {
                let params = format!("q={q} n={n} poset={kind:?}");
                let ambient = self.ambient(field, n, FormKind::Dot);
                let r = oracle::build_poset(&ambient, kind, self.cfg());
                let Some(snap) = self.oracle("flags", &params, r) else {
                    continue;
                };
                let flags = oracle::count_flags(&snap);
                if kind == PosetKind::Euclidean {
                    if let Some(f) = self.closed("flags", &params, closed::bracket_factorial(q, n)) {
                        self.compare("flags", params.clone(), flags.clone(), f);
                    }
                }
                if flags <= BigUint::from(self.cfg().budget) {
                    let explicit = BigUint::from(oracle::count_maximal_chains_explicit(&snap));
                    self.compare("flags_explicit", params.clone(), flags, explicit);
                } else {
                    self.skip("flags_explicit", params.clone(), "chain count over budget");
                }
                if kind == PosetKind::Euclidean {
                    let pairs = (snap.nodes().len() as u64).saturating_pow(2);
                    if pairs > self.cfg().budget {
                        self.skip("mobius", params, format!("{pairs} node pairs over budget"));
                    } else if let Some(seq) = self.closed("mobius", &params, closed::mobius_sequence(q, n)) {
                        self.compare("mobius", params, oracle::mobius_bottom(&snap), seq.mu[n].clone());
                    }
                }
            }
        }
    }

    fn structure(&mut self, field: &FieldSpec) {
        let q = field.q();
        for n in 1..=self.opts.max_n {
            let ambient = self.ambient(field, n, FormKind::Dot);
            for class in [SubspaceClass::DotType, SubspaceClass::LambdaDotType] {
                for k in 0..=n {
                    let params = format!("q={q} n={n} k={k} class={class:?}");
                    let r = oracle::perp_is_bijection(&ambient, k, class, self.cfg());
                    if let Some(ok) = self.oracle("perp_bijection", &params, r) {
                        self.compare("perp_bijection", params, true, ok);
                    }
                }
            }
            for k in 1..=n {
                let params = format!("q={q} n={n} k={k}");
                let r = oracle::dot_subspaces_through_spacelike_lines(&ambient, k, self.cfg());
                if let Some(counts) = self.oracle("transitivity", &params, r) {
                    let distinct: BTreeSet<u64> = counts.iter().copied().collect();
                    let status = if distinct.len() <= 1 { Status::Pass } else { Status::Fail };
                    let actual = format!("{} lines, counts {}", counts.len(), row_text(&distinct.into_iter().collect::<Vec<_>>()));
                    self.push("transitivity", params, "one count for every line".into(), actual, status);
                }
            }
        }
    }

    fn lambda_invariance(&mut self, field: &FieldSpec) {
        let q = field.q();
        let canonical = field.lambda();
        let other = field
            .elements()
            .find(|&a| a != canonical && field.square_class(a) == SquareClass::NonSquare);
        let Some(other) = other else {
            self.skip("lambda_invariance", format!("q={q}"), "only one non-square");
            return;
        };
        for n in 1..=self.opts.max_n {
            let params = format!("q={q} n={n}");
            let Some(base) = self.tallies(field, n, FormKind::LambdaDot) else {
                continue;
            };
            let alt = AmbientForm::lambda_dot_with(field, n, other).expect("non-square");
            let r: Result<Vec<ClassTally>, OracleError> = (0..=n)
                .map(|k| oracle::count_subspaces_by_class(&alt, k, self.cfg()))
                .collect();
            if let Some(t) = self.oracle("lambda_invariance", &params, r) {
                let fmt = |v: &[ClassTally]| {
                    row_text(&v.iter().map(|c| format!("{}/{}/{}", c.dot, c.lambda_dot, c.degenerate)).collect::<Vec<_>>())
                };
                self.compare("lambda_invariance", params, fmt(&base), fmt(&t));
            }
        }
    }

    fn polynomials(&mut self) {
        let classes: BTreeSet<QClass> = self.opts.q_list.iter().filter_map(|&q| QClass::of(q)).collect();
        let half = polyq::one_half();
        for class in classes {
            for n in 0..=self.opts.max_n {
                for k in 0..=n {
                    let key = PolyFamilyKey { q_class: class, n, k };
                    let params = format!("class={} n={n} k={k}", class.residue());
                    let Some(p) = self.closed("poly_degree", &params, polyq::dot_binom_poly(key)) else {
                        continue;
                    };
                    self.compare("poly_degree", params.clone(), key.weight().to_string(), p.degree().map_or("none".into(), |d| d.to_string()));
                    let interior = 0 < k && k < n;
                    let lead = if interior { half.clone() } else { RatPoly::one().leading() };
                    self.compare("poly_leading", params.clone(), lead, p.leading());
                    for &q in self.opts.q_list.iter().filter(|&&q| QClass::of(q) == Some(class)) {
                        let p2 = format!("{params} q={q}");
                        match polyq::eval_consistency(key, q) {
                            Ok(v) => self.push("poly_eval", p2, v.to_string(), v.to_string(), Status::Pass),
                            Err(e) => self.fail("poly_eval", p2, "closed-form value", e),
                        }
                    }
                    if !interior {
                        continue;
                    }
                    let r = polyq::limit_check(key);
                    if let Some(ok) = self.closed("poly_limit", &params, r) {
                        self.compare("poly_limit", params.clone(), true, ok);
                    }
                    self.poly_shape(key, &params);
                }
            }
        }
    }

    fn poly_shape(&mut self, key: PolyFamilyKey, params: &str) {
        let Some(fe) = self.closed("poly_sign", params, polyq::functional_equation_check(key)) else {
            return;
        };
        self.push("poly_sign", params.into(), "+ or -".into(), fe.sign.to_string(), Status::Pass);
        if !self.opts.compare_paper {
            return;
        }
        let printed = |ok: bool| if ok { Status::Pass } else { Status::PaperDiscrepancy };
        self.push(
            "poly_low_degree_printed",
            params.into(),
            fe.low_degree.to_string(),
            polyq::stated_low_degree(key).to_string(),
            printed(fe.low_degree_as_stated),
        );
        self.push(
            "poly_exponent_printed",
            params.into(),
            format!("{}/2", fe.twice_exponent),
            format!("{}/2", fe.twice_printed_exponent),
            printed(fe.exponent_as_printed()),
        );
        for (reading, sign) in [
            (CaseReading::ClassThreeOnly, fe.printed_sign_class_three_only),
            (CaseReading::BothClasses, fe.printed_sign_both_classes),
        ] {
            self.push(
                "poly_sign_printed",
                format!("{params} reading={reading:?}"),
                fe.sign.to_string(),
                sign.to_string(),
                printed(sign == fe.sign),
            );
        }
        if let Some(rep) = self.closed("poly_symmetry_printed", params, polyq::coefficient_symmetry_report(key)) {
            let actual = match rep.printed {
                Some(p) if p.twice_index % 2 == 0 => format!("{} D={}", p.sign, p.twice_index / 2),
                Some(p) => format!("{} D={}/2", p.sign, p.twice_index),
                None => "no case".into(),
            };
            let ok = rep.printed.is_some() && !rep.printed_index_conflict && !rep.printed_sign_conflict;
            self.push(
                "poly_symmetry_printed",
                params.into(),
                format!("{} D={}", rep.sign, rep.depressed_degree),
                actual,
                printed(ok),
            );
        }
    }

    fn ksets(&mut self) {
        for n in 2..=self.opts.max_n {
            for k in 1..n {
                let params = format!("n={n} k={k}");
                let r = oracle::count_symmetric_ksets(n, k);
                if let Some(seen) = self.oracle("symmetric_ksets", &params, r) {
                    self.compare("symmetric_ksets", params, BigUint::from(seen), closed::limit_value(n, k));
                }
            }
        }
    }

    fn ratios(&mut self) {
        for q in RATIO_Q {
            for n in 2..=self.opts.max_n {
                for k in 1..n {
                    let params = format!("q={q} n={n} k={k}");
                    if let Some(ok) = self.closed("asymptotic_ratio", &params, closed::asymptotic_ratio_ok(q, n, k)) {
                        let d = closed::dot_binom(q, n, k).unwrap_or_default();
                        let g = closed::gaussian_binom(q, n, k);
                        let ratio = BigRational::new(d.into(), g.into());
                        let status = if ok { Status::Pass } else { Status::Fail };
                        self.push("asymptotic_ratio", params, format!("|ratio - 1/2| < 2/{q}"), ratio.to_string(), status);
                    }
                }
            }
        }
    }
}
