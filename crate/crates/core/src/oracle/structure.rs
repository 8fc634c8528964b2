use std::collections::HashSet;

use num_bigint::BigUint;

use super::enumerate::collect_class;
use super::{OracleConfig, OracleError};
use crate::gf::SquareClass;
use crate::quadspace::{AmbientForm, Subspace, SubspaceClass};

/// For each spacelike line, the number of dot-type k-subspaces containing it.
/// The lines are listed in canonical order.
pub fn dot_subspaces_through_spacelike_lines(
    ambient: &AmbientForm,
    k: usize,
    cfg: &OracleConfig,
) -> Result<Vec<u64>, OracleError> {
    let lines = collect_class(ambient, 1, SubspaceClass::DotType, cfg)?;
    let subs = collect_class(ambient, k, SubspaceClass::DotType, cfg)?;
    cfg.check(&(BigUint::from(lines.len()) * BigUint::from(subs.len())))?;
    Ok(lines
        .iter()
        .map(|l| subs.iter().filter(|s| s.contains_unchecked(l)).count() as u64)
        .collect())
}

/// The class of W⊥ for a nondegenerate W of class `class`: the two discriminants
/// multiply to the ambient one.
pub fn complementary_class(ambient: &AmbientForm, class: SubspaceClass) -> SubspaceClass {
    let flip = ambient.discriminant() == SquareClass::NonSquare;
    match (class, flip) {
        (SubspaceClass::Degenerate, _) => SubspaceClass::Degenerate,
        (c, false) => c,
        (SubspaceClass::DotType, true) => SubspaceClass::LambdaDotType,
        (SubspaceClass::LambdaDotType, true) => SubspaceClass::DotType,
    }
}

/// Whether W ↦ W⊥ maps the k-subspaces of `class` one-to-one onto the
/// (n−k)-subspaces of the complementary class.
pub fn perp_is_bijection(
    ambient: &AmbientForm,
    k: usize,
    class: SubspaceClass,
    cfg: &OracleConfig,
) -> Result<bool, OracleError> {
    let n = ambient.n();
    if k > n {
        return Err(OracleError::DimensionOutOfRange { k, n });
    }
    let source = collect_class(ambient, k, class, cfg)?;
    let target: HashSet<Subspace> =
        collect_class(ambient, n - k, complementary_class(ambient, class), cfg)?
            .into_iter()
            .collect();
    let image: HashSet<Subspace> = source.iter().map(Subspace::perp).collect();
    Ok(image.len() == source.len() && image == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn transitivity_on_spacelike_lines() {
        let f = FieldSpec::of_order(3).unwrap();
        let a = AmbientForm::dot(&f, 4).unwrap();
        let counts = dot_subspaces_through_spacelike_lines(&a, 2, &OracleConfig::default()).unwrap();
        assert_eq!(counts.len(), 12);
        assert!(counts.iter().all(|&c| c == counts[0]));
    }

    #[test]
    fn perp_bijection_small() {
        let f = FieldSpec::of_order(5).unwrap();
        for a in [AmbientForm::dot(&f, 3).unwrap(), AmbientForm::lambda_dot(&f, 3).unwrap()] {
            for k in 0..=3 {
                for class in [SubspaceClass::DotType, SubspaceClass::LambdaDotType] {
                    assert!(perp_is_bijection(&a, k, class, &OracleConfig::default()).unwrap());
                }
            }
        }
    }
}
