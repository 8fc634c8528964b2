use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use dotbinom::closed::{self, ClosedError, LineFlavor, Variant};
use dotbinom::oracle::{self, CountReport, OracleConfig, OracleError, PosetKind};
use dotbinom::polyq::{self, PolyError, PolyFamilyKey};
use dotbinom::verify::{self, Status, VerifyError, VerifyOptions, VerifyReport};
use dotbinom::{AmbientForm, FieldSpec, FormKind, GfError, LineType, QClass, QuadError};

use crate::render::{render, Format, Table};

/// Largest triangle the `triangle` command prints.
pub const MAX_ROWS: usize = 30;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Closed(#[from] ClosedError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for anything the caller can fix by changing the arguments, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        let usage = match self {
            CliError::Usage(_) | CliError::Gf(_) | CliError::Verify(_) => true,
            CliError::Quad(e) => matches!(e, QuadError::ZeroDimension),
            CliError::Closed(e) => matches!(
                e,
                ClosedError::InvalidQ(_)
                    | ClosedError::KOutOfRange { .. }
                    | ClosedError::UnsupportedFlavor(_)
                    | ClosedError::UndefinedForParameters { .. }
            ),
            CliError::Oracle(e) => !matches!(e, OracleError::Quad(_)),
            CliError::Poly(e) => matches!(e, PolyError::KOutOfRange { .. } | PolyError::Interior { .. }),
            CliError::Io { .. } => false,
        };
        if usage {
            2
        } else {
            1
        }
    }
}

pub struct Outcome {
    pub stdout: String,
    /// Timing and other notes that would make stdout depend on the run.
    pub stderr: Option<String>,
    pub failed: bool,
}

impl Outcome {
    fn new<T: Table>(value: &T, format: Format, failed: bool) -> Self {
        Outcome {
            stdout: render(value, format),
            stderr: None,
            failed,
        }
    }
}

fn field(q: u64) -> Result<FieldSpec, CliError> {
    Ok(FieldSpec::of_order(q)?)
}

fn strs<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn opt(v: &Option<String>) -> String {
    v.clone().unwrap_or_default()
}

#[derive(Serialize)]
struct BracketOut {
    q: u64,
    n: usize,
    flavor: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verbatim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<Status>,
}

impl Table for BracketOut {
    fn plain(&self) -> String {
        let Some(status) = self.status else {
            return format!("{}\n", self.value);
        };
        let mut s = format!("normative = {}\n", self.value);
        let _ = writeln!(s, "verbatim = {}", self.verbatim.as_deref().unwrap_or("none"));
        let _ = writeln!(s, "oracle = {}", self.oracle.as_deref().unwrap_or("skipped"));
        let _ = writeln!(s, "status = {status}");
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["q", "n", "flavor", "value", "verbatim", "oracle", "status"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.q.to_string(),
            self.n.to_string(),
            self.flavor.clone(),
            self.value.clone(),
            opt(&self.verbatim),
            opt(&self.oracle),
            self.status.map(|s| s.to_string()).unwrap_or_default(),
        ]]
    }
}

pub fn bracket(
    q: u64,
    n: usize,
    flavor: LineFlavor,
    compare_paper: bool,
    cfg: &OracleConfig,
    format: Format,
) -> Result<Outcome, CliError> {
    let value = if flavor == LineFlavor::SpacelikeInDot {
        closed::bracket(q, n, flavor)?
    } else {
        closed::line_count(q, n, flavor)?
    };
    let mut out = BracketOut {
        q,
        n,
        flavor: flavor.to_string(),
        value: value.to_string(),
        verbatim: None,
        oracle: None,
        status: None,
    };
    if compare_paper {
        let verbatim = closed::bracket_verbatim(q, n, flavor)?;
        let seen = if n == 0 {
            None
        } else {
            let ambient = AmbientForm::new(&field(q)?, n, flavor.ambient())?;
            let kind = if flavor.is_spacelike() {
                LineType::Spacelike
            } else {
                LineType::Timelike
            };
            match oracle::count_lines(&ambient, cfg) {
                Ok(lines) => Some(BigUint::from(lines.get(kind))),
                Err(OracleError::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        };
        let reference = seen.clone().unwrap_or_else(|| value.clone());
        let status = match &verbatim {
            _ if reference != value => Status::Fail,
            Some(v) if *v != reference.clone().into() => Status::PaperDiscrepancy,
            _ => Status::Pass,
        };
        out.verbatim = verbatim.map(|v| v.to_string());
        out.oracle = seen.map(|v| v.to_string());
        out.status = Some(status);
    }
    let failed = out.status == Some(Status::Fail);
    Ok(Outcome::new(&out, format, failed))
}

#[derive(Serialize)]
struct TriangleOut {
    q: u64,
    rows: Vec<Vec<String>>,
}

impl Table for TriangleOut {
    fn plain(&self) -> String {
        self.rows.iter().map(|r| r.join(" ") + "\n").collect()
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "k", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push(vec![n.to_string(), k.to_string(), v.clone()]);
            }
        }
        out
    }
}

pub fn triangle(q: u64, rows: usize, format: Format) -> Result<Outcome, CliError> {
    if rows > MAX_ROWS {
        return Err(CliError::Usage(format!("--rows must be at most {MAX_ROWS}")));
    }
    let rows = (0..=rows)
        .map(|n| Ok(strs(&closed::pascal_row(q, n)?)))
        .collect::<Result<_, CliError>>()?;
    Ok(Outcome::new(&TriangleOut { q, rows }, format, false))
}

#[derive(Serialize)]
struct BinomOut {
    q: u64,
    n: usize,
    k: usize,
    variant: String,
    value: String,
}

impl Table for BinomOut {
    fn plain(&self) -> String {
        format!("{}\n", self.value)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["q", "n", "k", "variant", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.q.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.variant.clone(),
            self.value.clone(),
        ]]
    }
}

pub fn binom(q: u64, n: usize, k: usize, variant: Variant, format: Format) -> Result<Outcome, CliError> {
    let value = closed::dot_binom_variant(q, n, k, variant)?;
    let out = BinomOut {
        q,
        n,
        k,
        variant: variant.to_string(),
        value: value.to_string(),
    };
    Ok(Outcome::new(&out, format, false))
}

#[derive(Serialize)]
struct PolyCell {
    k: usize,
    poly: String,
    degree: usize,
    degree_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    low_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<String>,
    limit_point: i64,
    limit: String,
    limit_ok: bool,
}

#[derive(Serialize)]
struct PolyOut {
    class: u32,
    n: usize,
    cells: Vec<PolyCell>,
}

impl Table for PolyOut {
    fn plain(&self) -> String {
        let mut s = String::new();
        for c in &self.cells {
            let _ = writeln!(s, "p_{{{},{}}} = {}", self.n, c.k, c.poly);
            let _ = write!(s, "  degree {}", c.degree);
            if let (Some(m), Some(sign)) = (c.low_degree, &c.sign) {
                let _ = write!(s, ", lowest term q^{m}, reversal sign {sign}");
            }
            let _ = writeln!(s, ", value at q = {}: {}", c.limit_point, c.limit);
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["class", "n", "k", "poly", "degree", "low_degree", "sign", "limit"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .map(|c| {
                vec![
                    self.class.to_string(),
                    self.n.to_string(),
                    c.k.to_string(),
                    c.poly.clone(),
                    c.degree.to_string(),
                    c.low_degree.map(|m| m.to_string()).unwrap_or_default(),
                    opt(&c.sign),
                    c.limit.clone(),
                ]
            })
            .collect()
    }
}

pub fn poly(class: QClass, n: usize, k: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    let ks: Vec<usize> = match k {
        Some(k) if k > n => return Err(PolyError::KOutOfRange { n, k }.into()),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let at = class.limit_point();
    let mut cells = Vec::new();
    let mut failed = false;
    for k in ks {
        let key = PolyFamilyKey::new(class, n, k)?;
        let p = polyq::dot_binom_poly(key)?;
        let interior = 0 < k && k < n;
        let (low_degree, sign) = if interior {
            let fe = polyq::functional_equation_check(key)?;
            (Some(fe.low_degree), Some(fe.sign.to_string()))
        } else {
            (None, None)
        };
        let degree = p.degree().unwrap_or(0);
        let degree_ok = degree == key.weight();
        let limit_ok = !interior || polyq::limit_check(key)?;
        failed |= !degree_ok || !limit_ok;
        cells.push(PolyCell {
            k,
            poly: p.to_string(),
            degree,
            degree_ok,
            low_degree,
            sign,
            limit_point: at,
            limit: p.eval_int(at).to_string(),
            limit_ok,
        });
    }
    let out = PolyOut {
        class: class.residue(),
        n,
        cells,
    };
    Ok(Outcome::new(&out, format, failed))
}

#[derive(Serialize)]
struct GroupOut {
    q: u64,
    n: usize,
    order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<String>,
}

impl Table for GroupOut {
    fn plain(&self) -> String {
        match &self.enumerated {
            None => format!("{}\n", self.order),
            Some(e) => format!("formula = {}\nenumerated = {e}\n", self.order),
        }
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["q", "n", "order", "enumerated"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.q.to_string(),
            self.n.to_string(),
            self.order.clone(),
            opt(&self.enumerated),
        ]]
    }
}

pub fn group_order(q: u64, n: usize, enumerate: bool, cfg: &OracleConfig, format: Format) -> Result<Outcome, CliError> {
    let order = closed::group_order(q, n)?;
    let enumerated = if enumerate {
        let ambient = AmbientForm::dot(&field(q)?, n)?;
        Some(oracle::enumerate_orthogonal_group(&ambient, cfg)?)
    } else {
        None
    };
    let failed = enumerated.is_some_and(|e| BigUint::from(e) != order);
    let out = GroupOut {
        q,
        n,
        order: order.to_string(),
        enumerated: enumerated.map(|e| e.to_string()),
    };
    Ok(Outcome::new(&out, format, failed))
}

#[derive(Serialize)]
struct MobiusOut {
    q: u64,
    b: Vec<String>,
    mu: Vec<String>,
}

impl Table for MobiusOut {
    fn plain(&self) -> String {
        format!("b = {}\nmu = {}\n", self.b.join(" "), self.mu.join(" "))
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["k", "b", "mu"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.b
            .iter()
            .zip(&self.mu)
            .enumerate()
            .map(|(k, (b, mu))| vec![k.to_string(), b.clone(), mu.clone()])
            .collect()
    }
}

pub fn mobius(q: u64, n: usize, format: Format) -> Result<Outcome, CliError> {
    let seq = closed::mobius_sequence(q, n)?;
    let out = MobiusOut {
        q,
        b: strs(&seq.b),
        mu: strs(&seq.mu),
    };
    Ok(Outcome::new(&out, format, false))
}

#[derive(Serialize)]
struct LimitCell {
    k: usize,
    value: String,
    symmetric_ksets: u64,
}

#[derive(Serialize)]
struct LimitsOut {
    n: usize,
    cells: Vec<LimitCell>,
}

impl Table for LimitsOut {
    fn plain(&self) -> String {
        self.cells
            .iter()
            .map(|c| format!("k={} limit={} ksets={}\n", c.k, c.value, c.symmetric_ksets))
            .collect()
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "k", "limit", "symmetric_ksets"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .map(|c| vec![self.n.to_string(), c.k.to_string(), c.value.clone(), c.symmetric_ksets.to_string()])
            .collect()
    }
}

pub fn limits(n: usize, k: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    let ks: Vec<usize> = match k {
        Some(k) if k == 0 || k >= n => {
            return Err(CliError::Usage(format!("0 < k < n required, got n = {n}, k = {k}")))
        }
        Some(k) => vec![k],
        None => (1..n).collect(),
    };
    let mut cells = Vec::new();
    let mut failed = false;
    for k in ks {
        let value = closed::limit_value(n, k);
        let brute = oracle::count_symmetric_ksets(n, k)?;
        failed |= value != BigUint::from(brute);
        cells.push(LimitCell {
            k,
            value: value.to_string(),
            symmetric_ksets: brute,
        });
    }
    Ok(Outcome::new(&LimitsOut { n, cells }, format, failed))
}

#[derive(Serialize)]
#[serde(transparent)]
struct CountOut(CountReport);

impl Table for CountOut {
    fn plain(&self) -> String {
        self.0.to_key_value(false)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["k", "dot", "lambda_dot", "degenerate", "total"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .tallies
            .iter()
            .map(|t| {
                vec![
                    t.k.to_string(),
                    t.dot.to_string(),
                    t.lambda_dot.to_string(),
                    t.degenerate.to_string(),
                    t.total.to_string(),
                ]
            })
            .collect()
    }
}

pub fn oracle_count(q: u64, n: usize, ambient: FormKind, cfg: &OracleConfig, format: Format) -> Result<Outcome, CliError> {
    let space = AmbientForm::new(&field(q)?, n, ambient)?;
    let report = CountReport::build(&space, cfg)?;
    let elapsed = report.elapsed;
    let mut out = Outcome::new(&CountOut(report), format, false);
    out.stderr = Some(format!("elapsed: {} ms", elapsed.as_millis()));
    Ok(out)
}

#[derive(Serialize)]
struct PosetOut {
    q: u64,
    n: usize,
    kind: PosetKind,
    rank_sizes: Vec<usize>,
    hasse_edges: usize,
    flags: String,
}

impl Table for PosetOut {
    fn plain(&self) -> String {
        format!(
            "kind = {:?}\nrank_sizes = {}\nhasse_edges = {}\nflags = {}\n",
            self.kind,
            strs(&self.rank_sizes).join(" "),
            self.hasse_edges,
            self.flags
        )
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["rank", "size"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rank_sizes
            .iter()
            .enumerate()
            .map(|(r, s)| vec![r.to_string(), s.to_string()])
            .collect()
    }
}

pub fn oracle_poset(
    q: u64,
    n: usize,
    kind: PosetKind,
    emit_graph: Option<&Path>,
    cfg: &OracleConfig,
    format: Format,
) -> Result<Outcome, CliError> {
    let ambient = AmbientForm::dot(&field(q)?, n)?;
    let snap = oracle::build_poset(&ambient, kind, cfg)?;
    if let Some(path) = emit_graph {
        std::fs::write(path, snap.to_dot_graph()).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let out = PosetOut {
        q,
        n,
        kind,
        rank_sizes: snap.rank_sizes(),
        hasse_edges: snap.hasse_edges().len(),
        flags: oracle::count_flags(&snap).to_string(),
    };
    Ok(Outcome::new(&out, format, false))
}

#[derive(Serialize)]
struct FlagsOut {
    q: u64,
    n: usize,
    kind: PosetKind,
    flags: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    explicit: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_factorial: Option<String>,
}

impl Table for FlagsOut {
    fn plain(&self) -> String {
        let mut s = format!("flags = {}\n", self.flags);
        if let Some(e) = &self.explicit {
            let _ = writeln!(s, "explicit = {e}");
        }
        if let Some(f) = &self.bracket_factorial {
            let _ = writeln!(s, "bracket_factorial = {f}");
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["q", "n", "kind", "flags", "explicit", "bracket_factorial"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.q.to_string(),
            self.n.to_string(),
            format!("{:?}", self.kind),
            self.flags.clone(),
            opt(&self.explicit),
            opt(&self.bracket_factorial),
        ]]
    }
}

pub fn flags(q: u64, n: usize, kind: PosetKind, cfg: &OracleConfig, format: Format) -> Result<Outcome, CliError> {
    let ambient = AmbientForm::dot(&field(q)?, n)?;
    let snap = oracle::build_poset(&ambient, kind, cfg)?;
    let flags = oracle::count_flags(&snap);
    let explicit = (flags <= BigUint::from(cfg.budget))
        .then(|| BigUint::from(oracle::count_maximal_chains_explicit(&snap)));
    let factorial = match kind {
        PosetKind::Euclidean => Some(closed::bracket_factorial(q, n)?),
        PosetKind::Lorentzian => None,
    };
    let failed = explicit.as_ref().is_some_and(|e| *e != flags) || factorial.as_ref().is_some_and(|f| *f != flags);
    let out = FlagsOut {
        q,
        n,
        kind,
        flags: flags.to_string(),
        explicit: explicit.map(|e| e.to_string()),
        bracket_factorial: factorial.map(|f| f.to_string()),
    };
    Ok(Outcome::new(&out, format, failed))
}

#[derive(Serialize)]
#[serde(transparent)]
struct VerifyOut(VerifyReport);

impl Table for VerifyOut {
    fn plain(&self) -> String {
        let mut s = String::new();
        for r in &self.0.records {
            let _ = writeln!(
                s,
                "{:<16} {} [{}] expected={} actual={}",
                r.status.to_string(),
                r.check,
                r.params,
                r.expected,
                r.actual
            );
        }
        let m = &self.0.summary;
        let _ = writeln!(
            s,
            "summary: {} pass, {} fail, {} paper discrepancy, {} skipped",
            m.pass, m.fail, m.paper_discrepancy, m.skipped
        );
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["check", "params", "expected", "actual", "status"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .records
            .iter()
            .map(|r| {
                vec![
                    r.check.clone(),
                    r.params.clone(),
                    r.expected.clone(),
                    r.actual.clone(),
                    r.status.to_string(),
                ]
            })
            .collect()
    }
}

pub fn verify(q_list: Vec<u64>, max_n: usize, compare_paper: bool, cfg: &OracleConfig, format: Format) -> Result<Outcome, CliError> {
    let mut opts = VerifyOptions::new(q_list, max_n);
    opts.compare_paper = compare_paper;
    opts.oracle = *cfg;
    let report = verify::run(&opts)?;
    let failed = report.has_failures();
    let elapsed = report.elapsed;
    let mut out = Outcome::new(&VerifyOut(report), format, failed);
    out.stderr = Some(format!("elapsed: {} ms", elapsed.as_millis()));
    Ok(out)
}
