use std::collections::BTreeMap;

use serde::Serialize;

use super::{abelianization_f2, count_homomorphisms, todd_coxeter, FiniteGroupTarget, GroupError};
use crate::presentation::Presentation;

/// Isomorphism invariants of a presented group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub f2_rank: usize,
    /// Homomorphism counts keyed by target name.
    pub hom_counts: BTreeMap<String, u64>,
    /// Group order, when coset enumeration finished within its budget.
    pub order: Option<usize>,
}

pub fn invariant_report(
    p: &Presentation,
    targets: &[FiniteGroupTarget],
    max_cosets: usize,
    max_nodes: usize,
) -> Result<InvariantReport, GroupError> {
    let mut hom_counts = BTreeMap::new();
    for t in targets {
        hom_counts.insert(t.name().to_string(), count_homomorphisms(p, t, max_nodes)?);
    }
    let order = match todd_coxeter(p, &[], max_cosets) {
        Ok(table) => Some(table.index()),
        Err(GroupError::CosetsExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        f2_rank: abelianization_f2(p),
        hom_counts,
        order,
    })
}
