use num_bigint::BigUint;
use rayon::prelude::*;

use super::{OracleConfig, OracleError};
use crate::gf::FieldElement;
use crate::quadspace::AmbientForm;

/// |O(ambient)|: the number of n×n matrices M with Mᵀ·G·M = G, where G is the
/// diagonal Gram matrix. Columns are chosen one at a time; a partial choice is
/// abandoned as soon as a norm or an inner product is wrong.
pub fn enumerate_orthogonal_group(ambient: &AmbientForm, cfg: &OracleConfig) -> Result<u64, OracleError> {
    let n = ambient.n();
    let q = ambient.field().q();
    cfg.check(&BigUint::from(q).pow((n * n) as u32))?;

    let vectors = all_vectors(q, n);
    let diag = ambient.gram_diag();
    // candidates[j]: vectors whose norm equals the j-th diagonal entry
    let candidates: Vec<Vec<&[FieldElement]>> = diag
        .iter()
        .map(|&d| {
            vectors
                .chunks(n)
                .filter(|v| ambient.form_unchecked(v) == d)
                .collect()
        })
        .collect();

    let count = cfg.install(|| {
        candidates[0]
            .par_iter()
            .map(|first| {
                let mut chosen = vec![*first];
                extend(ambient, &candidates, &mut chosen)
            })
            .sum()
    });
    Ok(count)
}

fn extend<'a>(
    ambient: &AmbientForm,
    candidates: &'a [Vec<&'a [FieldElement]>],
    chosen: &mut Vec<&'a [FieldElement]>,
) -> u64 {
    let j = chosen.len();
    if j == candidates.len() {
        return 1;
    }
    let mut total = 0;
    for &v in &candidates[j] {
        if chosen
            .iter()
            .all(|u| ambient.bilinear_unchecked(u, v).is_zero())
        {
            chosen.push(v);
            total += extend(ambient, candidates, chosen);
            chosen.pop();
        }
    }
    total
}

/// Every vector of GF(q)^n, stored flat.
fn all_vectors(q: u64, n: usize) -> Vec<FieldElement> {
    let total = q.pow(n as u32);
    let mut out = Vec::with_capacity(total as usize * n);
    for mut t in 0..total {
        for _ in 0..n {
            out.push(FieldElement::from_raw((t % q) as u32));
            t /= q;
        }
    }
    out
}
