//! The group algebra `FG` over [`Scalar`], its commutator bracket (making it
//! the Lie algebra `L_FG`), and the maps `f̄` induced by group homomorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::{compose_homs, same_group, GroupHom};
use crate::scalar::Scalar;

/// A finitely supported combination `Σ a_g g`. Zero coefficients are never
/// stored, so structural equality is equality in `FG`.
#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

impl AlgebraElement {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        AlgebraElement { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// The basis element `g` itself.
    pub fn basis(group: &Arc<FiniteGroup>, g: usize) -> Result<Self> {
        Self::from_terms(group, [(g, Scalar::one())])
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms<I>(group: &Arc<FiniteGroup>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut x = Self::zero(group);
        for (g, c) in terms {
            if g >= group.order() {
                return Err(Error::IndexOutOfRange { index: g, order: group.order() });
            }
            x.add_term(g, &c);
        }
        Ok(x)
    }

    pub(crate) fn add_term(&mut self, g: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(g).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Nonzero coefficients in ascending element order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn coeff(&self, g: usize) -> Scalar {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coordinate vector of length `|G|`.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.group.order()];
        for (&g, c) in &self.coeffs {
            v[g] = c.clone();
        }
        v
    }

    fn same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut out = self.clone();
        for (&g, c) in &other.coeffs {
            out.add_term(g, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut out = self.clone();
        for (&g, c) in &other.coeffs {
            out.add_term(g, &-c);
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero(&self.group);
        }
        let coeffs = self.coeffs.iter().map(|(&g, c)| (g, k * c)).collect();
        AlgebraElement { group: self.group.clone(), coeffs }
    }

    /// The product in `FG`: `(Σ a_i g_i)(Σ b_j g_j) = Σ a_i b_j (g_i g_j)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut out = Self::zero(&self.group);
        for (&g, a) in &self.coeffs {
            for (&h, b) in &other.coeffs {
                out.add_term(self.group.op(g, h), &(a * b));
            }
        }
        Ok(out)
    }

    /// `[x, y] = xy − yx`.
    pub fn lie_bracket(&self, other: &Self) -> Result<Self> {
        self.convolve(other)?.checked_sub(&other.convolve(self)?)
    }
}

impl fmt::Display for AlgebraElement {
    /// `2*e + (1/2)*a - i*a^2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&g, c)) in self.coeffs.iter().enumerate() {
            let label = self.group.label(g);
            let negative = (c.im().is_zero() && c.re().is_negative())
                || (c.re().is_zero() && c.im().is_negative());
            let (neg, mag) = if negative {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{label}")?;
            } else if mag.is_real() && !mag.re().is_integer() {
                write!(f, "({mag})*{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

/// The linear map `f̄ : L_FG → L_FH`, `f̄(Σ a_i g_i) = Σ a_i f(g_i)`.
///
/// Two bar maps are equal iff they agree on every group basis element, i.e.
/// iff the underlying image tables coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarMap {
    hom: GroupHom,
}

impl BarMap {
    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !same_group(x.group(), self.hom.domain()) {
            return Err(Error::GroupMismatch);
        }
        let mut out = AlgebraElement::zero(self.hom.codomain());
        for (g, c) in x.terms() {
            out.add_term(self.hom.apply(g), c);
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &BarMap) -> Result<BarMap> {
        Ok(BarMap { hom: compose_homs(&self.hom, &first.hom)? })
    }
}

/// Lifts a group homomorphism to `f̄`, re-validating it.
pub fn lift_hom_bar(f: &GroupHom) -> Result<BarMap> {
    if !f.validate() {
        return Err(Error::InvalidHom("multiplicativity fails".into()));
    }
    Ok(BarMap { hom: f.clone() })
}
