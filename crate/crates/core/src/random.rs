//! Seeded random group-algebra elements for property sweeps.
//!
//! Coefficients come from `{−2, −1, −1/2, 0, 1/2, 1, 2, i, −i}` and supports
//! have at most [`MAX_SUPPORT`] elements, so runs are reproducible from the
//! seed alone.

use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraElement;
use crate::group::FiniteGroup;
use crate::scalar::Scalar;

pub const MAX_SUPPORT: usize = 5;

pub fn coefficient_pool() -> Vec<Scalar> {
    let i = Scalar::i();
    vec![
        Scalar::from_int(-2),
        Scalar::from_int(-1),
        Scalar::from_frac(-1, 2),
        Scalar::from_int(0),
        Scalar::from_frac(1, 2),
        Scalar::from_int(1),
        Scalar::from_int(2),
        i.clone(),
        -i,
    ]
}

/// Deterministic sampler of elements and scalars.
pub struct ElementSampler {
    rng: ChaCha8Rng,
    pool: Vec<Scalar>,
}

impl ElementSampler {
    pub fn new(seed: u64) -> Self {
        ElementSampler { rng: ChaCha8Rng::seed_from_u64(seed), pool: coefficient_pool() }
    }

    pub fn scalar(&mut self) -> Scalar {
        self.pool.choose(&mut self.rng).expect("non-empty pool").clone()
    }

    pub fn element(&mut self, group: &Arc<FiniteGroup>) -> AlgebraElement {
        let size = self.rng.random_range(1..=MAX_SUPPORT.min(group.order()));
        let terms: Vec<(usize, Scalar)> = (0..size)
            .map(|_| (self.rng.random_range(0..group.order()), self.scalar()))
            .collect();
        AlgebraElement::from_terms(group, terms).expect("indices drawn in range")
    }
}
