//! Subgroup enumeration by closure of generator pairs.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest ambient order [`enumerate_subgroups`] accepts.
pub const SUBGROUP_SEARCH_LIMIT: usize = 64;

/// A subgroup realized as a standalone [`FiniteGroup`] together with its
/// embedding into the ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    embedding: Vec<usize>,
}

impl Subgroup {
    /// Restricts `ambient` to `elements` (sorted, closed). The subgroup's
    /// element `i` is `elements[i]` and keeps its ambient label.
    pub fn from_elements(ambient: &FiniteGroup, elements: Vec<usize>) -> Result<Self> {
        let pos = |x: usize| elements.binary_search(&x).ok();
        let mut table = Vec::with_capacity(elements.len());
        for &x in &elements {
            let row = elements
                .iter()
                .map(|&y| pos(ambient.op(x, y)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidTable("subset not closed".into()))?;
            table.push(row);
        }
        let labels = elements.iter().map(|&x| ambient.label(x).to_string()).collect();
        let group = FiniteGroup::from_table(table, labels, None)?;
        Ok(Subgroup { group: Arc::new(group), embedding: elements })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Ambient index of each subgroup element.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn order(&self) -> usize {
        self.embedding.len()
    }
}

/// All subgroups of `g`, ordered by (order, sorted element list). Includes the
/// trivial subgroup and `g` itself.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > SUBGROUP_SEARCH_LIMIT {
        return Err(Error::SearchTooLarge(format!(
            "subgroup search needs |G| <= {SUBGROUP_SEARCH_LIMIT}, got {n}"
        )));
    }
    let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for x in 0..n {
        for y in x..n {
            let s = g.closure(&[x, y]);
            found.insert((s.len(), s));
        }
    }
    found.into_iter().map(|(_, s)| Subgroup::from_elements(g, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn orders(spec: &str) -> Vec<usize> {
        let g = build_group(spec.parse().unwrap()).unwrap();
        enumerate_subgroups(&g).unwrap().iter().map(Subgroup::order).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(orders("C3"), vec![1, 3]);
        assert_eq!(orders("K4"), vec![1, 2, 2, 2, 4]);
        assert_eq!(orders("S3"), vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(orders("D4").len(), 10);
        assert_eq!(orders("S4").len(), 30);
    }

    #[test]
    fn embedding_is_homomorphic() {
        let s3 = build_group("S3".parse().unwrap()).unwrap();
        for sub in enumerate_subgroups(&s3).unwrap() {
            let h = sub.group();
            let emb = sub.embedding();
            assert_eq!(emb[h.identity()], s3.identity());
            for x in 0..h.order() {
                assert_eq!(h.label(x), s3.label(emb[x]));
                for y in 0..h.order() {
                    assert_eq!(emb[h.op(x, y)], s3.op(emb[x], emb[y]));
                }
            }
        }
    }

    #[test]
    fn guard() {
        let s5 = build_group("S5".parse().unwrap()).unwrap();
        assert!(matches!(enumerate_subgroups(&s5), Err(Error::SearchTooLarge(_))));
    }

    #[test]
    fn non_closed_subset_rejected() {
        let c3 = build_group("C3".parse().unwrap()).unwrap();
        assert!(Subgroup::from_elements(&c3, vec![0, 1]).is_err());
    }
}
