use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{OracleConfig, OracleError};
use crate::gf::FieldElement;
use crate::quadspace::{classify_rows, AmbientForm, LineType, Subspace, SubspaceClass};

/// Number of RREF matrices handed to one rayon task.
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTally {
    pub dot: u64,
    pub lambda_dot: u64,
    pub degenerate: u64,
}

impl ClassTally {
    pub fn total(&self) -> u64 {
        self.dot + self.lambda_dot + self.degenerate
    }

    pub fn get(&self, class: SubspaceClass) -> u64 {
        match class {
            SubspaceClass::DotType => self.dot,
            SubspaceClass::LambdaDotType => self.lambda_dot,
            SubspaceClass::Degenerate => self.degenerate,
        }
    }

    fn bump(&mut self, class: SubspaceClass) {
        match class {
            SubspaceClass::DotType => self.dot += 1,
            SubspaceClass::LambdaDotType => self.lambda_dot += 1,
            SubspaceClass::Degenerate => self.degenerate += 1,
        }
    }

    fn merge(self, o: ClassTally) -> ClassTally {
        ClassTally {
            dot: self.dot + o.dot,
            lambda_dot: self.lambda_dot + o.lambda_dot,
            degenerate: self.degenerate + o.degenerate,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCounts {
    pub spacelike: u64,
    pub timelike: u64,
    pub lightlike: u64,
}

impl LineCounts {
    pub fn total(&self) -> u64 {
        self.spacelike + self.timelike + self.lightlike
    }

    pub fn get(&self, t: LineType) -> u64 {
        match t {
            LineType::Spacelike => self.spacelike,
            LineType::Timelike => self.timelike,
            LineType::Lightlike => self.lightlike,
        }
    }
}

/// All k-element subsets of `0..n` in lexicographic order.
pub fn pivot_patterns(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for c in start..=n - need {
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Free (row, column) slots of an RREF matrix with the given pivots.
fn free_slots(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                slots.push((r, c));
            }
        }
    }
    slots
}

/// Number of k-dimensional subspaces of GF(q)^n, counted pattern by pattern.
pub fn subspace_count(q: u64, n: usize, k: usize) -> BigUint {
    let qb = BigUint::from(q);
    pivot_patterns(n, k)
        .iter()
        .map(|p| qb.pow(free_slots(n, p).len() as u32))
        .sum()
}

struct Pattern {
    pivots: Vec<usize>,
    slots: Vec<(usize, usize)>,
    size: u64,
}

fn plan(ambient: &AmbientForm, k: usize, cfg: &OracleConfig) -> Result<Vec<Pattern>, OracleError> {
    let n = ambient.n();
    if k > n {
        return Err(OracleError::DimensionOutOfRange { k, n });
    }
    let q = ambient.field().q();
    cfg.check(&subspace_count(q, n, k))?;
    Ok(pivot_patterns(n, k)
        .into_iter()
        .map(|pivots| {
            let slots = free_slots(n, &pivots);
            let size = q.pow(slots.len() as u32);
            Pattern {
                pivots,
                slots,
                size,
            }
        })
        .collect())
}

/// Walks RREF matrices of one pattern, starting at a linear index.
struct Cursor<'a> {
    pattern: &'a Pattern,
    q: u32,
    n: usize,
    digits: Vec<u32>,
    basis: Vec<FieldElement>,
}

impl<'a> Cursor<'a> {
    fn new(pattern: &'a Pattern, q: u64, n: usize, start: u64) -> Self {
        let k = pattern.pivots.len();
        let mut basis = vec![FieldElement::ZERO; k * n];
        for (r, &p) in pattern.pivots.iter().enumerate() {
            basis[r * n + p] = FieldElement::ONE;
        }
        let mut digits = vec![0u32; pattern.slots.len()];
        let mut t = start;
        for (d, &(r, c)) in digits.iter_mut().zip(&pattern.slots) {
            *d = (t % q) as u32;
            t /= q;
            basis[r * n + c] = FieldElement::from_raw(*d);
        }
        Cursor {
            pattern,
            q: q as u32,
            n,
            digits,
            basis,
        }
    }

    fn advance(&mut self) {
        for (d, &(r, c)) in self.digits.iter_mut().zip(&self.pattern.slots) {
            *d += 1;
            if *d == self.q {
                *d = 0;
                self.basis[r * self.n + c] = FieldElement::ZERO;
            } else {
                self.basis[r * self.n + c] = FieldElement::from_raw(*d);
                return;
            }
        }
    }
}

/// Folds `visit` over every k-dimensional subspace in parallel. `visit` receives the
/// flat RREF basis; partial results are combined with `merge`, which should be
/// associative and commutative so the outcome does not depend on scheduling.
pub(crate) fn par_fold<T, I, V, M>(
    ambient: &AmbientForm,
    k: usize,
    cfg: &OracleConfig,
    init: I,
    visit: V,
    merge: M,
) -> Result<T, OracleError>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[FieldElement], &mut Vec<FieldElement>) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let patterns = plan(ambient, k, cfg)?;
    let q = ambient.field().q();
    let n = ambient.n();
    let units: Vec<(usize, u64, u64)> = patterns
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            (0..p.size.div_ceil(CHUNK)).map(move |c| {
                let start = c * CHUNK;
                (i, start, CHUNK.min(p.size - start))
            })
        })
        .collect();
    Ok(cfg.install(|| {
        units
            .par_iter()
            .fold(&init, |mut acc, &(pi, start, len)| {
                let mut cur = Cursor::new(&patterns[pi], q, n, start);
                let mut scratch = Vec::new();
                for step in 0..len {
                    if step > 0 {
                        cur.advance();
                    }
                    visit(&mut acc, &cur.basis, &mut scratch);
                }
                acc
            })
            .reduce(&init, &merge)
    }))
}

/// Collects the k-subspaces satisfying `keep`, sorted by basis.
pub(crate) fn collect_where<F>(
    ambient: &AmbientForm,
    k: usize,
    cfg: &OracleConfig,
    keep: F,
) -> Result<Vec<Subspace>, OracleError>
where
    F: Fn(&[FieldElement], &mut Vec<FieldElement>) -> bool + Sync + Send,
{
    let mut bases = par_fold(
        ambient,
        k,
        cfg,
        Vec::new,
        |acc: &mut Vec<Vec<FieldElement>>, b, s| {
            if keep(b, s) {
                acc.push(b.to_vec());
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    bases.sort_unstable();
    Ok(bases
        .into_iter()
        .map(|b| Subspace::from_rref(ambient, k, b))
        .collect())
}

/// Subspaces of a fixed class and dimension, sorted by basis.
pub(crate) fn collect_class(
    ambient: &AmbientForm,
    k: usize,
    class: SubspaceClass,
    cfg: &OracleConfig,
) -> Result<Vec<Subspace>, OracleError> {
    collect_where(ambient, k, cfg, |b, s| classify_rows(ambient, b, k, s) == class)
}

/// Sequential stream of k-subspaces in pattern order.
pub struct SubspaceIter {
    ambient: AmbientForm,
    patterns: Vec<Pattern>,
    pattern: usize,
    offset: u64,
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        while self.pattern < self.patterns.len() && self.offset == self.patterns[self.pattern].size {
            self.pattern += 1;
            self.offset = 0;
        }
        let p = self.patterns.get(self.pattern)?;
        let cur = Cursor::new(p, self.ambient.field().q(), self.ambient.n(), self.offset);
        self.offset += 1;
        Some(Subspace::from_rref(&self.ambient, p.pivots.len(), cur.basis))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest: u64 = self.patterns[self.pattern.min(self.patterns.len())..]
            .iter()
            .map(|p| p.size)
            .sum::<u64>()
            - self.offset;
        let rest = rest.to_usize().unwrap_or(usize::MAX);
        (rest, Some(rest))
    }
}

/// Every k-dimensional subspace exactly once.
pub fn enumerate_subspaces(
    ambient: &AmbientForm,
    k: usize,
    cfg: &OracleConfig,
) -> Result<SubspaceIter, OracleError> {
    Ok(SubspaceIter {
        ambient: ambient.clone(),
        patterns: plan(ambient, k, cfg)?,
        pattern: 0,
        offset: 0,
    })
}

pub fn count_subspaces_by_class(
    ambient: &AmbientForm,
    k: usize,
    cfg: &OracleConfig,
) -> Result<ClassTally, OracleError> {
    par_fold(
        ambient,
        k,
        cfg,
        ClassTally::default,
        |t, b, s| t.bump(classify_rows(ambient, b, k, s)),
        ClassTally::merge,
    )
}

pub fn count_lines(ambient: &AmbientForm, cfg: &OracleConfig) -> Result<LineCounts, OracleError> {
    let field = ambient.field();
    par_fold(
        ambient,
        1,
        cfg,
        LineCounts::default,
        |t, b, _| match LineType::from(field.square_class(ambient.form_unchecked(b))) {
            LineType::Spacelike => t.spacelike += 1,
            LineType::Timelike => t.timelike += 1,
            LineType::Lightlike => t.lightlike += 1,
        },
        |a, b| LineCounts {
            spacelike: a.spacelike + b.spacelike,
            timelike: a.timelike + b.timelike,
            lightlike: a.lightlike + b.lightlike,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use std::collections::HashSet;

    fn dot(q: u64, n: usize) -> AmbientForm {
        AmbientForm::dot(&FieldSpec::of_order(q).unwrap(), n).unwrap()
    }

    #[test]
    fn subspace_count_examples() {
        assert_eq!(subspace_count(3, 2, 1), BigUint::from(4u32));
        assert_eq!(subspace_count(5, 3, 1), BigUint::from(31u32));
        assert_eq!(subspace_count(3, 4, 2), BigUint::from(130u32));
        assert_eq!(subspace_count(7, 4, 0), BigUint::from(1u32));
        assert_eq!(subspace_count(7, 4, 4), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let cfg = OracleConfig::default();
        for (q, n) in [(3, 4), (5, 3), (9, 2)] {
            let a = dot(q, n);
            for k in 0..=n {
                let subs: Vec<Subspace> = enumerate_subspaces(&a, k, &cfg).unwrap().collect();
                let expected = subspace_count(q, n, k).to_usize().unwrap();
                assert_eq!(subs.len(), expected);
                let set: HashSet<&Subspace> = subs.iter().collect();
                assert_eq!(set.len(), expected);
                for s in &subs {
                    assert_eq!(s.dim(), k);
                    let re = Subspace::span(&a, &s.rows().map(|r| r.to_vec()).collect::<Vec<_>>())
                        .unwrap();
                    assert_eq!(&re, s, "not canonical RREF");
                }
            }
        }
    }

    #[test]
    fn line_count_examples() {
        let cfg = OracleConfig::default();
        let lc = |q, n| {
            let c = count_lines(&dot(q, n), &cfg).unwrap();
            (c.spacelike, c.timelike, c.lightlike)
        };
        assert_eq!(lc(5, 2), (2, 2, 2));
        assert_eq!(lc(3, 2), (2, 2, 0));
        assert_eq!(lc(3, 3), (3, 6, 4));
    }

    #[test]
    fn class_tally_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(count_subspaces_by_class(&dot(3, 3), 2, &cfg).unwrap().dot, 3);
        assert_eq!(count_subspaces_by_class(&dot(3, 4), 2, &cfg).unwrap().dot, 18);
        assert_eq!(count_subspaces_by_class(&dot(7, 3), 0, &cfg).unwrap().dot, 1);
    }

    #[test]
    fn parallel_matches_single_thread() {
        let a = dot(5, 4);
        let one = OracleConfig {
            jobs: Some(1),
            ..Default::default()
        };
        let many = OracleConfig {
            jobs: Some(4),
            ..Default::default()
        };
        for k in 0..=4 {
            assert_eq!(
                count_subspaces_by_class(&a, k, &one).unwrap(),
                count_subspaces_by_class(&a, k, &many).unwrap()
            );
        }
        let x = collect_class(&a, 2, SubspaceClass::DotType, &one).unwrap();
        let y = collect_class(&a, 2, SubspaceClass::DotType, &many).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn dimension_out_of_range() {
        assert!(matches!(
            count_subspaces_by_class(&dot(3, 2), 3, &OracleConfig::default()),
            Err(OracleError::DimensionOutOfRange { k: 3, n: 2 })
        ));
    }
}
