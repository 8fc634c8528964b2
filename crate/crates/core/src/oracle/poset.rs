use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::enumerate::{collect_class, subspace_count};
use super::{OracleConfig, OracleError};
use crate::quadspace::{AmbientForm, Subspace, SubspaceClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosetKind {
    /// Dot-type subspaces.
    Euclidean,
    /// λdot-type subspaces of dimensions 1..n−1.
    Lorentzian,
}

impl PosetKind {
    fn class(self) -> SubspaceClass {
        match self {
            PosetKind::Euclidean => SubspaceClass::DotType,
            PosetKind::Lorentzian => SubspaceClass::LambdaDotType,
        }
    }
}

/// A finite graded poset of subspaces with bottom (zero space) and top (whole
/// space) adjoined. Nodes are sorted by rank, then by basis.
#[derive(Debug, Clone)]
pub struct PosetSnapshot {
    ambient: AmbientForm,
    kind: PosetKind,
    nodes: Vec<Subspace>,
    /// `layers[r]` is the index range of rank-r nodes.
    layers: Vec<std::ops::Range<usize>>,
    hasse_edges: Vec<(usize, usize)>,
}

impl PosetSnapshot {
    pub fn ambient(&self) -> &AmbientForm {
        &self.ambient
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn nodes(&self) -> &[Subspace] {
        &self.nodes
    }

    pub fn rank(&self, node: usize) -> usize {
        self.nodes[node].dim()
    }

    /// Sorted (lower, upper) pairs of the covering relation.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Number of nodes of each rank, bottom first.
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|r| r.len()).collect()
    }

    pub fn layer(&self, rank: usize) -> &[Subspace] {
        &self.nodes[self.layers[rank].clone()]
    }

    /// Hasse diagram as a Graphviz digraph, one edge per line, nodes labelled by
    /// their RREF rows.
    pub fn to_dot_graph(&self) -> String {
        let mut s = String::from("digraph hasse {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  \"{}\" [rank={}];", node.label(), self.rank(i));
        }
        for &(lo, hi) in &self.hasse_edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\";",
                self.nodes[lo].label(),
                self.nodes[hi].label()
            );
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_poset(
    ambient: &AmbientForm,
    kind: PosetKind,
    cfg: &OracleConfig,
) -> Result<PosetSnapshot, OracleError> {
    let n = ambient.n();
    let q = ambient.field().q();
    let scan: BigUint = (1..n).map(|k| subspace_count(q, n, k)).sum();
    cfg.check(&scan)?;

    let mut layers_nodes: Vec<Vec<Subspace>> = vec![vec![ambient.zero_subspace()]];
    for k in 1..n {
        layers_nodes.push(collect_class(ambient, k, kind.class(), cfg)?);
    }
    layers_nodes.push(vec![ambient.full_space()]);

    let pair_work: u64 = layers_nodes
        .windows(2)
        .map(|w| (w[0].len() as u64) * (w[1].len() as u64))
        .sum();
    cfg.check(&BigUint::from(pair_work))?;

    let mut nodes = Vec::new();
    let mut layers = Vec::with_capacity(n + 1);
    for layer in layers_nodes {
        let start = nodes.len();
        nodes.extend(layer);
        layers.push(start..nodes.len());
    }

    let mut hasse_edges = Vec::new();
    for w in layers.windows(2) {
        for lo in w[0].clone() {
            for hi in w[1].clone() {
                if nodes[hi].contains_unchecked(&nodes[lo]) {
                    hasse_edges.push((lo, hi));
                }
            }
        }
    }

    Ok(PosetSnapshot {
        ambient: ambient.clone(),
        kind,
        nodes,
        layers,
        hasse_edges,
    })
}

/// Maximal chains from bottom to top, by accumulating path counts rank by rank.
pub fn count_flags(snap: &PosetSnapshot) -> BigUint {
    let mut ways = vec![BigUint::zero(); snap.nodes.len()];
    ways[snap.bottom()] = BigUint::one();
    // edges are sorted by lower index, and lower indices precede upper ones
    for &(lo, hi) in &snap.hasse_edges {
        let w = ways[lo].clone();
        ways[hi] += w;
    }
    ways[snap.top()].clone()
}

/// Maximal chains counted by walking every chain individually.
pub fn count_maximal_chains_explicit(snap: &PosetSnapshot) -> u64 {
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); snap.nodes.len()];
    for &(lo, hi) in &snap.hasse_edges {
        up[lo].push(hi);
    }
    let top = snap.top();
    let mut count = 0;
    let mut stack = vec![snap.bottom()];
    while let Some(v) = stack.pop() {
        if v == top {
            count += 1;
        } else {
            stack.extend(&up[v]);
        }
    }
    count
}

/// μ(bottom, top) from μ(x, x) = 1 and μ(x, y) = −Σ_{x ≤ z < y} μ(x, z), with the
/// order relation tested by subspace containment.
pub fn mobius_bottom(snap: &PosetSnapshot) -> BigInt {
    let m = snap.nodes.len();
    let mut mu = vec![BigInt::zero(); m];
    mu[snap.bottom()] = BigInt::one();
    for y in 1..m {
        let ry = snap.rank(y);
        let mut acc = BigInt::zero();
        for z in 0..y {
            if snap.rank(z) < ry && snap.nodes[y].contains_unchecked(&snap.nodes[z]) {
                acc += &mu[z];
            }
        }
        mu[y] = -acc;
    }
    mu[snap.top()].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn dot(q: u64, n: usize) -> AmbientForm {
        AmbientForm::dot(&FieldSpec::of_order(q).unwrap(), n).unwrap()
    }

    fn snap(q: u64, n: usize, kind: PosetKind) -> PosetSnapshot {
        build_poset(&dot(q, n), kind, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn rank_sizes_examples() {
        assert_eq!(snap(5, 2, PosetKind::Euclidean).rank_sizes(), vec![1, 2, 1]);
        assert_eq!(snap(3, 3, PosetKind::Euclidean).rank_sizes(), vec![1, 3, 3, 1]);
        assert_eq!(snap(3, 2, PosetKind::Lorentzian).rank_sizes(), vec![1, 2, 1]);
    }

    #[test]
    fn edges_join_consecutive_ranks() {
        let s = snap(3, 4, PosetKind::Euclidean);
        for &(lo, hi) in s.hasse_edges() {
            assert_eq!(s.rank(lo) + 1, s.rank(hi));
            assert!(s.nodes()[hi].contains(&s.nodes()[lo]).unwrap());
        }
    }

    #[test]
    fn flag_counts() {
        assert_eq!(count_flags(&snap(5, 2, PosetKind::Euclidean)), BigUint::from(2u32));
        assert_eq!(count_flags(&snap(3, 3, PosetKind::Euclidean)), BigUint::from(6u32));
        assert_eq!(count_flags(&snap(7, 1, PosetKind::Euclidean)), BigUint::from(1u32));
        for (q, n) in [(3, 2), (5, 2), (3, 3), (5, 3)] {
            for kind in [PosetKind::Euclidean, PosetKind::Lorentzian] {
                let s = snap(q, n, kind);
                assert_eq!(count_flags(&s), BigUint::from(count_maximal_chains_explicit(&s)));
            }
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius_bottom(&snap(3, 1, PosetKind::Euclidean)), BigInt::from(-1));
        assert_eq!(mobius_bottom(&snap(5, 2, PosetKind::Euclidean)), BigInt::from(1));
        assert_eq!(mobius_bottom(&snap(3, 3, PosetKind::Euclidean)), BigInt::from(-1));
    }

    #[test]
    fn graph_export_lists_every_edge() {
        let s = snap(5, 2, PosetKind::Euclidean);
        let g = s.to_dot_graph();
        assert!(g.starts_with("digraph hasse {\n"));
        assert!(g.ends_with("}\n"));
        assert_eq!(g.matches(" -> ").count(), s.hasse_edges().len());
        assert!(g.contains("\"[]\" -> \"[10]\";\n"));
    }
}
