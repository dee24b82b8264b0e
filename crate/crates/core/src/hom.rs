//! Group homomorphisms as image tables, plus exhaustive enumeration.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Upper bound on `|H|^g` (candidate generator images) for [`enumerate_homs`].
pub const HOM_SEARCH_LIMIT: u128 = 10_000_000;

/// A map `G → H` given by its image table. Values built through
/// [`GroupHom::new`] are known to be multiplicative.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom").field("image", &self.image).finish()
    }
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GroupHom {
    /// Validates `image` and wraps it.
    pub fn new(domain: Arc<FiniteGroup>, codomain: Arc<FiniteGroup>, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::InvalidHom(format!(
                "image table has {} entries, domain order is {}",
                image.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= codomain.order()) {
            return Err(Error::InvalidHom(format!("image {bad} outside codomain")));
        }
        if !is_homomorphism(&domain, &codomain, &image) {
            return Err(Error::InvalidHom("multiplicativity fails".into()));
        }
        Ok(GroupHom { domain, codomain, image })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), image: (0..g.order()).collect() }
    }

    /// The constant map onto the identity of `h`.
    pub fn trivial(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Self {
        GroupHom { domain: g.clone(), codomain: h.clone(), image: vec![h.identity(); g.order()] }
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Re-runs the multiplicativity check on the stored table.
    pub fn validate(&self) -> bool {
        is_homomorphism(&self.domain, &self.codomain, &self.image)
    }

    pub fn is_identity(&self) -> bool {
        same_group(&self.domain, &self.codomain) && self.image.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn is_trivial(&self) -> bool {
        self.image.iter().all(|&y| y == self.codomain.identity())
    }
}

/// True iff `image[identity] = identity` and `image[xy] = image[x]·image[y]`
/// for every pair.
pub fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, image: &[usize]) -> bool {
    let n = g.order();
    if image.len() != n || image.iter().any(|&y| y >= h.order()) {
        return false;
    }
    if image[g.identity()] != h.identity() {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| image[g.op(x, y)] == h.op(image[x], image[y])))
}

/// `f2 ∘ f1`.
pub fn compose_homs(f2: &GroupHom, f1: &GroupHom) -> Result<GroupHom> {
    if !same_group(&f1.codomain, &f2.domain) {
        return Err(Error::DomainMismatch);
    }
    let image: Vec<usize> = f1.image.iter().map(|&y| f2.image[y]).collect();
    debug_assert!(is_homomorphism(&f1.domain, &f2.codomain, &image));
    Ok(GroupHom { domain: f1.domain.clone(), codomain: f2.codomain.clone(), image })
}

/// Greedy generating set: walk the elements in index order and keep each one
/// not already in the span of those kept.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for x in 0..g.order() {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = g.closure(&gens);
            if span.len() == g.order() {
                break;
            }
        }
    }
    gens
}

/// All homomorphisms `G → H`, sorted lexicographically by image table.
///
/// Generator images are enumerated exhaustively, each assignment is extended
/// along words in the generators, and the result is validated on the full
/// table.
pub fn enumerate_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>> {
    let gens = generating_set(g);
    let m = h.order() as u128;
    let candidates = (0..gens.len()).try_fold(1u128, |acc, _| acc.checked_mul(m).filter(|&v| v <= HOM_SEARCH_LIMIT));
    let Some(candidates) = candidates else {
        return Err(Error::SearchTooLarge(format!(
            "|H|^g = {}^{} exceeds {HOM_SEARCH_LIMIT}",
            h.order(),
            gens.len()
        )));
    };

    // Only images whose order divides the generator's order can work.
    let gen_orders: Vec<usize> = gens.iter().map(|&s| g.element_order(s)).collect();
    let options: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&k| (0..h.order()).filter(|&y| k % h.element_order(y) == 0).collect())
        .collect();
    debug_assert!(options.iter().map(|o| o.len() as u128).product::<u128>() <= candidates);

    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if options.iter().any(|o| o.is_empty()) {
        return Ok(out);
    }
    loop {
        let targets: Vec<usize> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        if let Some(image) = extend(g, h, &gens, &targets) {
            if is_homomorphism(g, h, &image) {
                out.push(GroupHom { domain: g.clone(), codomain: h.clone(), image });
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                out.sort_by(|a, b| a.image.cmp(&b.image));
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < options[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Propagates generator images along right multiplication by generators.
/// Returns `None` on a conflict.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], targets: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut image = vec![UNSET; g.order()];
    image[g.identity()] = h.identity();
    let mut queue = vec![g.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(targets) {
            let y = g.op(x, s);
            let v = h.op(image[x], t);
            if image[y] == UNSET {
                image[y] = v;
                queue.push(y);
            } else if image[y] != v {
                return None;
            }
        }
        i += 1;
    }
    if image.contains(&UNSET) {
        return None;
    }
    Some(image)
}
