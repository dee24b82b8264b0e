//! The functor `T` from the category of Lie algebras of group algebras of the
//! subgroups of `G` to the category of their Plesken Lie algebras.
//!
//! On objects `T` sends `L_FH` to `𝓛(H)`, on elements
//! `Σ a_i g_i ↦ Σ (a_i − a_i')(g_i − g_i⁻¹)` where `a_i'` is the coefficient of
//! `g_i⁻¹`. On morphisms it sends `f̄` to `f̂`. Both hom-set families are the
//! lifts of all group homomorphisms between the subgroups, so every check in
//! this module is an exhaustive finite computation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{lift_hom_bar, AlgebraElement, BarMap};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::{compose_homs, enumerate_homs};
use crate::plesken::{canonical_basis, hat, lift_hom_hat, lift_hom_hat_with, HatMap, PleskenBasis};
use crate::scalar::Scalar;
use crate::subgroup::{enumerate_subgroups, Subgroup};

/// How the object map ranges over the index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Sum over every group element, so a single term `a·g` maps to `2a·ĝ`.
    #[default]
    Literal,
    /// Sum over one element of each pair `{g, g⁻¹}`; half of `Literal`.
    Pairwise,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Literal => "literal",
            Convention::Pairwise => "pairwise",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "literal" => Ok(Convention::Literal),
            "pairwise" => Ok(Convention::Pairwise),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

/// `Σ_i (a_i − a_i')·ĝ_i` with `a_i'` the coefficient of `g_i⁻¹` in `x`.
pub fn object_map(x: &AlgebraElement, convention: Convention) -> AlgebraElement {
    let group = x.group();
    let mut out = AlgebraElement::zero(group);
    for g in 0..group.order() {
        let inv = group.inv(g);
        if convention == Convention::Pairwise && g > inv {
            continue;
        }
        let diff = &x.coeff(g) - &x.coeff(inv);
        if diff.is_zero() {
            continue;
        }
        let h = hat(group, g).expect("index in range");
        out = out.checked_add(&h.scale(&diff)).expect("same group");
    }
    out
}

/// `T f̄ = f̂`.
pub fn morphism_map(fbar: &BarMap) -> Result<HatMap> {
    lift_hom_hat(fbar.hom())
}

/// One object `L_FH` of the category: a subgroup and the canonical basis of
/// its Plesken algebra.
#[derive(Debug, Clone)]
pub struct CategoryObject {
    subgroup: Subgroup,
    basis: Arc<PleskenBasis>,
}

impl CategoryObject {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.group()
    }

    pub fn basis(&self) -> &Arc<PleskenBasis> {
        &self.basis
    }
}

/// Objects are the subgroups of `ambient`; `hom(i, j)` holds `f̄` for every
/// group homomorphism `H_i → H_j`, sorted by image table.
#[derive(Debug, Clone)]
pub struct SubgroupCategory {
    ambient: Arc<FiniteGroup>,
    objects: Vec<CategoryObject>,
    homsets: Vec<Vec<Vec<BarMap>>>,
}

impl SubgroupCategory {
    pub fn new(ambient: &Arc<FiniteGroup>) -> Result<Self> {
        let objects: Vec<CategoryObject> = enumerate_subgroups(ambient)?
            .into_iter()
            .map(|subgroup| {
                let basis = canonical_basis(subgroup.group());
                CategoryObject { subgroup, basis }
            })
            .collect();
        let mut homsets = Vec::with_capacity(objects.len());
        for src in &objects {
            let mut row = Vec::with_capacity(objects.len());
            for dst in &objects {
                let maps = enumerate_homs(src.group(), dst.group())?
                    .iter()
                    .map(lift_hom_bar)
                    .collect::<Result<Vec<_>>>()?;
                row.push(maps);
            }
            homsets.push(row);
        }
        Ok(SubgroupCategory { ambient: ambient.clone(), objects, homsets })
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    pub fn objects(&self) -> &[CategoryObject] {
        &self.objects
    }

    pub fn homset(&self, i: usize, j: usize) -> &[BarMap] {
        &self.homsets[i][j]
    }

    pub fn morphism_count(&self) -> usize {
        self.homsets.iter().flatten().map(Vec::len).sum()
    }

    fn find(&self, i: usize, j: usize, image: &[usize]) -> Option<usize> {
        self.homsets[i][j].binary_search_by(|m| m.hom().image().cmp(image)).ok()
    }

    /// Position of the identity lift in `hom(i, i)`.
    pub fn identity_index(&self, i: usize) -> Option<usize> {
        let n = self.objects[i].group().order();
        self.find(i, i, &(0..n).collect::<Vec<_>>())
    }

    /// `T` applied to every morphism, indexed like the hom-sets.
    pub fn hat_images(&self) -> Result<Vec<Vec<Vec<HatMap>>>> {
        self.homsets
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, maps)| {
                        maps.iter()
                            .map(|m| {
                                lift_hom_hat_with(m.hom(), &self.objects[i].basis, &self.objects[j].basis)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityLaw {
    pub object: usize,
    /// The identity lift is present in `hom(i, i)`.
    pub present: bool,
    /// `T(1̄) = 1` on `𝓛(H_i)`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionLaw {
    pub source: usize,
    pub middle: usize,
    pub target: usize,
    pub pairs_checked: usize,
    /// Composable pairs whose composite is missing from `hom(source, target)`.
    pub not_closed: usize,
    /// Pairs with `T(f̄₂ ∘ f̄₁) ≠ T(f̄₂) ∘ T(f̄₁)`.
    pub failures: usize,
}

impl CompositionLaw {
    pub fn holds(&self) -> bool {
        self.not_closed == 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub identity: Vec<IdentityLaw>,
    pub composition: Vec<CompositionLaw>,
    pub all_hold: bool,
}

/// Exhaustively checks `T(1̄) = 1` for every object and
/// `T(f̄₂ ∘ f̄₁) = T f̄₂ ∘ T f̄₁` for every composable pair.
pub fn check_functor_laws(c: &SubgroupCategory) -> Result<LawReport> {
    let hats = c.hat_images()?;
    let n = c.objects.len();
    let mut identity = Vec::with_capacity(n);
    for i in 0..n {
        let (present, holds) = match c.identity_index(i) {
            Some(pos) => (true, hats[i][i][pos] == HatMap::identity(&c.objects[i].basis)),
            None => (false, false),
        };
        identity.push(IdentityLaw { object: i, present, holds });
    }

    let mut composition = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut law = CompositionLaw {
                    source: i,
                    middle: j,
                    target: k,
                    pairs_checked: 0,
                    not_closed: 0,
                    failures: 0,
                };
                for (a, f1) in c.homsets[i][j].iter().enumerate() {
                    for (b, f2) in c.homsets[j][k].iter().enumerate() {
                        law.pairs_checked += 1;
                        let composite = compose_homs(f2.hom(), f1.hom())?;
                        let Some(pos) = c.find(i, k, composite.image()) else {
                            law.not_closed += 1;
                            continue;
                        };
                        let lhs = &hats[i][k][pos];
                        let rhs = hats[j][k][b].compose(&hats[i][j][a])?;
                        if *lhs != rhs {
                            law.failures += 1;
                        }
                    }
                }
                composition.push(law);
            }
        }
    }
    let all_hold = identity.iter().all(|l| l.present && l.holds)
        && composition.iter().all(CompositionLaw::holds);
    Ok(LawReport { identity, composition, all_hold })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFullness {
    pub source: usize,
    pub target: usize,
    pub morphisms: usize,
    /// Distinct maps in `hom(T L_FH_i, T L_FH_j)`.
    pub image_maps: usize,
    /// For each distinct target map, the positions in `hom(i, j)` of its preimages.
    pub preimages: Vec<Vec<usize>>,
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullnessReport {
    pub pairs: Vec<PairFullness>,
    pub full: bool,
}

/// For each object pair, matches every induced map `f̂ : 𝓛(H_i) → 𝓛(H_j)` with
/// the bar lifts that `T` sends to it.
pub fn check_full(c: &SubgroupCategory) -> Result<FullnessReport> {
    let n = c.objects.len();
    let mut pairs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let bi = &c.objects[i].basis;
            let bj = &c.objects[j].basis;
            // The target hom-set: f̂ for every group hom, deduplicated.
            let mut targets: Vec<HatMap> = Vec::new();
            for f in enumerate_homs(c.objects[i].group(), c.objects[j].group())? {
                let m = lift_hom_hat_with(&f, bi, bj)?;
                if !targets.contains(&m) {
                    targets.push(m);
                }
            }
            let images: Vec<HatMap> = c.homsets[i][j]
                .iter()
                .map(|m| lift_hom_hat_with(m.hom(), bi, bj))
                .collect::<Result<_>>()?;
            let preimages: Vec<Vec<usize>> = targets
                .iter()
                .map(|t| (0..images.len()).filter(|&p| images[p] == *t).collect())
                .collect();
            let full = preimages.iter().all(|p| !p.is_empty());
            pairs.push(PairFullness {
                source: i,
                target: j,
                morphisms: images.len(),
                image_maps: targets.len(),
                preimages,
                full,
            });
        }
    }
    let full = pairs.iter().all(|p| p.full);
    Ok(FullnessReport { pairs, full })
}

/// Two distinct morphisms in one hom-set that `T` identifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulnessWitness {
    pub source: usize,
    pub target: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Every pair `f̄₁ ≠ f̄₂` in a common hom-set with `f̂₁ = f̂₂`, ordered by
/// (source, target, first image table, second image table).
pub fn find_faithfulness_counterexample(c: &SubgroupCategory) -> Result<Vec<FaithfulnessWitness>> {
    let hats = c.hat_images()?;
    let n = c.objects.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let maps = &c.homsets[i][j];
            for a in 0..maps.len() {
                for b in (a + 1)..maps.len() {
                    if hats[i][j][a] == hats[i][j][b] {
                        out.push(FaithfulnessWitness {
                            source: i,
                            target: j,
                            first: maps[a].hom().image().to_vec(),
                            second: maps[b].hom().image().to_vec(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `L_FH_i ↦ 𝓛(H_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectRecord {
    pub index: usize,
    pub order: usize,
    pub elements: Vec<String>,
    pub plesken_dim: usize,
    pub basis: Vec<String>,
}

/// `f̄ ↦ f̂` with `f̂` given by the coordinates of each basis image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub source: usize,
    pub target: usize,
    pub image: Vec<String>,
    /// `hat[k]` lists `(m, re, im)` for the nonzero coordinates of `f̂(ê_k)`.
    pub hat: Vec<Vec<(usize, String, String)>>,
}

/// Everything `T` does on one subgroup category, plus the verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorWitness {
    pub objects: Vec<ObjectRecord>,
    pub morphisms: Vec<MorphismRecord>,
    pub laws: LawReport,
    pub fullness: FullnessReport,
    pub counterexamples: Vec<FaithfulnessWitness>,
}

pub fn materialize(c: &SubgroupCategory) -> Result<FunctorWitness> {
    let objects = c
        .objects
        .iter()
        .enumerate()
        .map(|(index, o)| ObjectRecord {
            index,
            order: o.group().order(),
            elements: o.group().labels().to_vec(),
            plesken_dim: o.basis.dim(),
            basis: o.basis.labels(),
        })
        .collect();
    let hats = c.hat_images()?;
    let mut morphisms = Vec::with_capacity(c.morphism_count());
    for (i, row) in c.homsets.iter().enumerate() {
        for (j, maps) in row.iter().enumerate() {
            let target = c.objects[j].group();
            for (m, h) in maps.iter().zip(&hats[i][j]) {
                morphisms.push(MorphismRecord {
                    source: i,
                    target: j,
                    image: m.hom().image().iter().map(|&y| target.label(y).to_string()).collect(),
                    hat: h.columns().iter().map(coord_triples).collect(),
                });
            }
        }
    }
    Ok(FunctorWitness {
        objects,
        morphisms,
        laws: check_functor_laws(c)?,
        fullness: check_full(c)?,
        counterexamples: find_faithfulness_counterexample(c)?,
    })
}

fn coord_triples(x: &crate::plesken::PleskenElement) -> Vec<(usize, String, String)> {
    x.coords()
        .map(|(m, c): (usize, &Scalar)| {
            let (re, im) = c.to_parts();
            (m, re, im)
        })
        .collect()
}
