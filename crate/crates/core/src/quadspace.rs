//! Diagonal quadratic spaces over GF(q) and their subspaces.
//!
//! Subspaces are kept in reduced row echelon form, so two [`Subspace`] values
//! describe the same set exactly when their basis matrices agree entry for entry.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec, SquareClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("vector of length {got} does not fit dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected a line, got a subspace of dimension {0}")]
    NotALine(usize),
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("element {0} is not a non-square")]
    NotANonSquare(FieldElement),
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
}

/// Which of the two non-degenerate diagonal forms the ambient space carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormKind {
    /// x_1² + ... + x_n²
    Dot,
    /// x_1² + ... + x_{n-1}² + λ x_n²
    LambdaDot,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormKind::Dot => f.write_str("dot"),
            FormKind::LambdaDot => f.write_str("lambda-dot"),
        }
    }
}

/// Isometry class of a subspace with the restricted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubspaceClass {
    DotType,
    LambdaDotType,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LineType {
    Spacelike,
    Timelike,
    Lightlike,
}

impl From<SquareClass> for LineType {
    fn from(c: SquareClass) -> Self {
        match c {
            SquareClass::Square => LineType::Spacelike,
            SquareClass::NonSquare => LineType::Timelike,
            SquareClass::Zero => LineType::Lightlike,
        }
    }
}

#[derive(Debug)]
struct AmbientInner {
    field: FieldSpec,
    n: usize,
    kind: FormKind,
    gram_diag: Vec<FieldElement>,
}

/// `(GF(q)^n, dot_n)` or `(GF(q)^n, λdot_n)`.
#[derive(Debug, Clone)]
pub struct AmbientForm {
    inner: Arc<AmbientInner>,
}

impl PartialEq for AmbientForm {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.n == other.inner.n
                && self.inner.kind == other.inner.kind
                && self.inner.gram_diag == other.inner.gram_diag)
    }
}

impl Eq for AmbientForm {}

impl AmbientForm {
    pub fn new(field: &FieldSpec, n: usize, kind: FormKind) -> Result<Self, QuadError> {
        match kind {
            FormKind::Dot => Self::dot(field, n),
            FormKind::LambdaDot => Self::lambda_dot(field, n),
        }
    }

    pub fn dot(field: &FieldSpec, n: usize) -> Result<Self, QuadError> {
        Self::build(field, n, FormKind::Dot, field.one())
    }

    /// λdot_n with the field's canonical non-square.
    pub fn lambda_dot(field: &FieldSpec, n: usize) -> Result<Self, QuadError> {
        Self::build(field, n, FormKind::LambdaDot, field.lambda())
    }

    /// λdot_n with a caller-chosen non-square.
    pub fn lambda_dot_with(
        field: &FieldSpec,
        n: usize,
        nonsquare: FieldElement,
    ) -> Result<Self, QuadError> {
        if field.square_class(nonsquare) != SquareClass::NonSquare {
            return Err(QuadError::NotANonSquare(nonsquare));
        }
        Self::build(field, n, FormKind::LambdaDot, nonsquare)
    }

    fn build(
        field: &FieldSpec,
        n: usize,
        kind: FormKind,
        last: FieldElement,
    ) -> Result<Self, QuadError> {
        if n == 0 {
            return Err(QuadError::ZeroDimension);
        }
        let mut gram_diag = vec![field.one(); n];
        gram_diag[n - 1] = last;
        Ok(AmbientForm {
            inner: Arc::new(AmbientInner {
                field: field.clone(),
                n,
                kind,
                gram_diag,
            }),
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.inner.field
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn kind(&self) -> FormKind {
        self.inner.kind
    }

    pub fn gram_diag(&self) -> &[FieldElement] {
        &self.inner.gram_diag
    }

    /// Square class of the Gram determinant.
    pub fn discriminant(&self) -> SquareClass {
        let f = self.field();
        let det = self
            .gram_diag()
            .iter()
            .fold(f.one(), |acc, &d| f.mul(acc, d));
        f.square_class(det)
    }

    /// Q(v) = Σ d_i v_i².
    pub fn eval_form(&self, v: &[FieldElement]) -> Result<FieldElement, QuadError> {
        self.check_len(v)?;
        Ok(self.form_unchecked(v))
    }

    /// B(u, v) = Σ d_i u_i v_i, the bilinear form with B(v, v) = Q(v).
    pub fn bilinear(&self, u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement, QuadError> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bilinear_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn form_unchecked(&self, v: &[FieldElement]) -> FieldElement {
        self.bilinear_unchecked(v, v)
    }

    #[inline]
    pub(crate) fn bilinear_unchecked(&self, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        let f = self.field();
        let mut acc = f.zero();
        for ((&d, &x), &y) in self.gram_diag().iter().zip(u).zip(v) {
            if !x.is_zero() && !y.is_zero() {
                acc = f.add(acc, f.mul(d, f.mul(x, y)));
            }
        }
        acc
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<(), QuadError> {
        if v.len() != self.n() {
            return Err(QuadError::DimensionMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace {
            ambient: self.clone(),
            k: 0,
            basis: Vec::new(),
        }
    }

    pub fn full_space(&self) -> Subspace {
        let n = self.n();
        let f = self.field();
        let mut basis = vec![f.zero(); n * n];
        for i in 0..n {
            basis[i * n + i] = f.one();
        }
        Subspace {
            ambient: self.clone(),
            k: n,
            basis,
        }
    }
}

/// Brings `rows` (each of length `n`, stored flat) into reduced row echelon form
/// in place and returns the pivot columns. Zero rows are dropped.
pub(crate) fn rref_in_place(field: &FieldSpec, rows: &mut Vec<FieldElement>, n: usize) -> Vec<usize> {
    let m = rows.len() / n;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(pr) = (r..m).find(|&i| !rows[i * n + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..n {
                rows.swap(pr * n + j, r * n + j);
            }
        }
        let inv = field.inv(rows[r * n + c]).expect("pivot is nonzero");
        for j in 0..n {
            rows[r * n + j] = field.mul(rows[r * n + j], inv);
        }
        for i in 0..m {
            if i == r {
                continue;
            }
            let factor = rows[i * n + c];
            if factor.is_zero() {
                continue;
            }
            for j in 0..n {
                let sub = field.mul(factor, rows[r * n + j]);
                rows[i * n + j] = field.sub(rows[i * n + j], sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r * n);
    pivots
}

/// Determinant of a k×k row-major matrix, destroying `m`.
pub(crate) fn determinant_in_place(field: &FieldSpec, m: &mut [FieldElement], k: usize) -> FieldElement {
    let mut det = field.one();
    for c in 0..k {
        let Some(pr) = (c..k).find(|&i| !m[i * k + c].is_zero()) else {
            return field.zero();
        };
        if pr != c {
            for j in 0..k {
                m.swap(pr * k + j, c * k + j);
            }
            det = field.neg(det);
        }
        let pivot = m[c * k + c];
        det = field.mul(det, pivot);
        let inv = field.inv(pivot).expect("pivot is nonzero");
        for i in c + 1..k {
            let factor = field.mul(m[i * k + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..k {
                let sub = field.mul(factor, m[c * k + j]);
                m[i * k + j] = field.sub(m[i * k + j], sub);
            }
        }
    }
    det
}

/// Fills `out` with the Gram matrix of the `k` rows of `basis`.
pub(crate) fn gram_into(
    ambient: &AmbientForm,
    basis: &[FieldElement],
    k: usize,
    out: &mut Vec<FieldElement>,
) {
    let n = ambient.n();
    out.clear();
    out.resize(k * k, ambient.field().zero());
    for i in 0..k {
        for j in i..k {
            let g = ambient.bilinear_unchecked(&basis[i * n..(i + 1) * n], &basis[j * n..(j + 1) * n]);
            out[i * k + j] = g;
            out[j * k + i] = g;
        }
    }
}

/// Classification of the span of `k` independent rows; the zero space counts as dot type.
pub(crate) fn classify_rows(
    ambient: &AmbientForm,
    basis: &[FieldElement],
    k: usize,
    scratch: &mut Vec<FieldElement>,
) -> SubspaceClass {
    if k == 0 {
        return SubspaceClass::DotType;
    }
    gram_into(ambient, basis, k, scratch);
    let det = determinant_in_place(ambient.field(), scratch, k);
    match ambient.field().square_class(det) {
        SquareClass::Zero => SubspaceClass::Degenerate,
        SquareClass::Square => SubspaceClass::DotType,
        SquareClass::NonSquare => SubspaceClass::LambdaDotType,
    }
}

/// A subspace of an [`AmbientForm`], stored as its RREF basis (k rows of length n).
#[derive(Clone)]
pub struct Subspace {
    ambient: AmbientForm,
    k: usize,
    basis: Vec<FieldElement>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.basis == other.basis && self.ambient == other.ambient
    }
}

impl Eq for Subspace {}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.k.hash(state);
        self.basis.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({})", self.label())
    }
}

impl Subspace {
    /// Span of arbitrary vectors.
    pub fn span(ambient: &AmbientForm, vectors: &[Vec<FieldElement>]) -> Result<Self, QuadError> {
        let n = ambient.n();
        let mut rows = Vec::with_capacity(vectors.len() * n);
        for v in vectors {
            ambient.check_len(v)?;
            rows.extend_from_slice(v);
        }
        let pivots = rref_in_place(ambient.field(), &mut rows, n);
        Ok(Subspace {
            ambient: ambient.clone(),
            k: pivots.len(),
            basis: rows,
        })
    }

    /// Wraps a basis already known to be in RREF.
    pub(crate) fn from_rref(ambient: &AmbientForm, k: usize, basis: Vec<FieldElement>) -> Self {
        debug_assert_eq!(basis.len(), k * ambient.n());
        Subspace {
            ambient: ambient.clone(),
            k,
            basis,
        }
    }

    pub fn ambient(&self) -> &AmbientForm {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Flat row-major RREF basis.
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.basis.chunks(self.ambient.n().max(1)).take(self.k)
    }

    /// Gram matrix of the basis under the ambient bilinear form.
    pub fn gram(&self) -> Vec<Vec<FieldElement>> {
        let mut flat = Vec::new();
        gram_into(&self.ambient, &self.basis, self.k, &mut flat);
        flat.chunks(self.k.max(1))
            .take(self.k)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn gram_determinant(&self) -> FieldElement {
        let mut flat = Vec::new();
        gram_into(&self.ambient, &self.basis, self.k, &mut flat);
        determinant_in_place(self.ambient.field(), &mut flat, self.k)
    }

    pub fn classify(&self) -> SubspaceClass {
        let mut scratch = Vec::new();
        classify_rows(&self.ambient, &self.basis, self.k, &mut scratch)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.classify() != SubspaceClass::Degenerate
    }

    pub fn line_type(&self) -> Result<LineType, QuadError> {
        if self.k != 1 {
            return Err(QuadError::NotALine(self.k));
        }
        let q = self.ambient.form_unchecked(&self.basis);
        Ok(self.ambient.field().square_class(q).into())
    }

    /// {v : B(v, w) = 0 for all w in self}.
    pub fn perp(&self) -> Subspace {
        let n = self.ambient.n();
        let f = self.ambient.field();
        // rows of the system: (b_i ⊙ d), then take the null space
        let mut system: Vec<FieldElement> = self
            .rows()
            .flat_map(|row| {
                row.iter()
                    .zip(self.ambient.gram_diag())
                    .map(|(&x, &d)| f.mul(x, d))
                    .collect::<Vec<_>>()
            })
            .collect();
        let pivots = rref_in_place(f, &mut system, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut null = Vec::with_capacity(free.len() * n);
        for &fc in &free {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(system[r * n + fc]);
            }
            null.extend(v);
        }
        let pivots = rref_in_place(f, &mut null, n);
        Subspace {
            ambient: self.ambient.clone(),
            k: pivots.len(),
            basis: null,
        }
    }

    /// Whether `self ⊇ other`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, QuadError> {
        if self.ambient != other.ambient {
            return Err(QuadError::AmbientMismatch);
        }
        Ok(self.contains_unchecked(other))
    }

    pub(crate) fn contains_unchecked(&self, other: &Subspace) -> bool {
        if other.k > self.k {
            return false;
        }
        let n = self.ambient.n();
        let f = self.ambient.field();
        let pivots: Vec<usize> = self
            .rows()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("RREF rows are nonzero"))
            .collect();
        let mut v = vec![f.zero(); n];
        other.rows().all(|row| {
            v.copy_from_slice(row);
            for (r, &pc) in pivots.iter().enumerate() {
                let c = v[pc];
                if c.is_zero() {
                    continue;
                }
                for j in 0..n {
                    v[j] = f.sub(v[j], f.mul(c, self.basis[r * n + j]));
                }
            }
            v.iter().all(|x| x.is_zero())
        })
    }

    /// Intersection dimension is zero.
    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        let n = self.ambient.n();
        let mut rows = self.basis.clone();
        rows.extend_from_slice(&other.basis);
        rref_in_place(self.ambient.field(), &mut rows, n).len() == self.k + other.k
    }

    /// Rows as canonical indices joined with `|`, e.g. `[110|001]`. Entries are
    /// separated by `.` when the field has more than ten elements.
    pub fn label(&self) -> String {
        let wide = self.ambient.field().q() > 10;
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(|x| x.index().to_string()).collect();
                parts.join(if wide { "." } else { "" })
            })
            .collect();
        format!("[{}]", rows.join("|"))
    }
}
