//! Bounded exploration of mutation classes.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Quiver};
use crate::Exhausted;

/// Quivers of a mutation class up to isomorphism, keyed by canonical form.
#[derive(Clone, Debug, Default)]
pub struct MutationClass {
    members: BTreeMap<CanonicalForm, Quiver>,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, q: &Quiver) -> bool {
        self.members.contains_key(&canonical_form(q))
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.members.keys()
    }

    /// One representative per isomorphism class, in canonical-form order.
    pub fn representatives(&self) -> impl Iterator<Item = &Quiver> {
        self.members.values()
    }
}

/// Breadth-first closure of `q` under mutation at every vertex.
///
/// Each frontier is expanded in parallel; the merge into the member set is
/// sequential and ordered, so the result does not depend on scheduling.
pub fn mutation_class(q: &Quiver, max_size: usize) -> Result<MutationClass, Exhausted<MutationClass>> {
    let mut class = MutationClass::default();
    class.members.insert(canonical_form(q), q.clone());
    let mut frontier = vec![q.clone()];
    while !frontier.is_empty() {
        if class.len() > max_size {
            return Err(Exhausted {
                partial: class,
                budget: max_size,
            });
        }
        let expanded: Option<Vec<(CanonicalForm, Quiver)>> = frontier
            .par_iter()
            .flat_map_iter(|p| {
                (0..p.len()).map(move |k| {
                    // Overflowing multiplicities only occur in infinite classes.
                    let m = p.mutate(k).ok()?;
                    Some((canonical_form(&m), m))
                })
            })
            .collect();
        let Some(expanded) = expanded else {
            return Err(Exhausted {
                partial: class,
                budget: max_size,
            });
        };
        let mut next = Vec::new();
        for (form, m) in expanded {
            if let std::collections::btree_map::Entry::Vacant(e) = class.members.entry(form) {
                e.insert(m.clone());
                next.push(m);
            }
        }
        frontier = next;
    }
    if class.len() > max_size {
        return Err(Exhausted {
            partial: class,
            budget: max_size,
        });
    }
    Ok(class)
}
