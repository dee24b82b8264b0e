//! Plesken Lie algebras `𝓛(G) = span{ĝ = g − g⁻¹}` inside `L_FG`.
//!
//! Since `(g⁻¹)^ = −ĝ` and `ĝ = 0` for involutions, the hats of one element
//! from each pair `{g, g⁻¹}` with `g ≠ g⁻¹` form a basis. The canonical basis
//! picks the member with the smaller index.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::{is_odd_prime, FiniteGroup};
use crate::hom::{same_group, GroupHom};
use crate::scalar::Scalar;

/// `g − g⁻¹` as an element of `FG` (zero for involutions and the identity).
pub fn hat(group: &Arc<FiniteGroup>, g: usize) -> Result<AlgebraElement> {
    let inv = group.inverse(g)?;
    let mut x = AlgebraElement::zero(group);
    x.add_term(g, &Scalar::one());
    x.add_term(inv, &Scalar::from_int(-1));
    Ok(x)
}

/// Where an element's hat lands in the canonical basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Zero,
    /// `ĝ = +ê_k`
    Plus(usize),
    /// `ĝ = −ê_k` (g⁻¹ is the representative)
    Minus(usize),
}

#[derive(Debug, PartialEq, Eq)]
pub struct PleskenBasis {
    group: Arc<FiniteGroup>,
    reps: Vec<usize>,
    slots: Vec<Slot>,
}

/// The basis `{ĝ : g ≠ g⁻¹, index(g) < index(g⁻¹)}` of `𝓛(G)`.
pub fn canonical_basis(group: &Arc<FiniteGroup>) -> Arc<PleskenBasis> {
    let n = group.order();
    let mut reps = Vec::new();
    let mut slots = vec![Slot::Zero; n];
    for g in 0..n {
        let inv = group.inv(g);
        if g < inv {
            slots[g] = Slot::Plus(reps.len());
            slots[inv] = Slot::Minus(reps.len());
            reps.push(g);
        }
    }
    Arc::new(PleskenBasis { group: group.clone(), reps, slots })
}

impl PleskenBasis {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Representatives in basis order.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.reps.iter().map(|&g| self.group.label(g).to_string()).collect()
    }

    fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || (same_group(&self.group, &other.group) && self.reps == other.reps)
    }

    pub fn zero(self: &Arc<Self>) -> PleskenElement {
        PleskenElement { basis: self.clone(), coords: BTreeMap::new() }
    }

    /// The basis vector `ê_k`.
    pub fn unit(self: &Arc<Self>, k: usize) -> PleskenElement {
        assert!(k < self.dim(), "basis position {k} out of range");
        self.from_coords([(k, Scalar::one())])
    }

    /// Builds `Σ c_k ê_k`; repeated positions accumulate. Panics on a
    /// position outside the basis.
    pub fn from_coords<I>(self: &Arc<Self>, coords: I) -> PleskenElement
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut x = self.zero();
        for (k, c) in coords {
            assert!(k < self.dim(), "basis position {k} out of range");
            x.add_coord(k, &c);
        }
        x
    }

    /// `ĝ` in coordinates.
    pub fn hat_coords(self: &Arc<Self>, g: usize) -> Result<PleskenElement> {
        let slot = *self
            .slots
            .get(g)
            .ok_or(Error::IndexOutOfRange { index: g, order: self.group.order() })?;
        Ok(match slot {
            Slot::Zero => self.zero(),
            Slot::Plus(k) => self.unit(k),
            Slot::Minus(k) => self.from_coords([(k, Scalar::from_int(-1))]),
        })
    }

    /// Coordinates of `x` in this basis; `NotInSpan` if `x ∉ 𝓛(G)`.
    pub fn reduce(self: &Arc<Self>, x: &AlgebraElement) -> Result<PleskenElement> {
        if !same_group(x.group(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.zero();
        let mut residual = x.clone();
        for (k, &r) in self.reps.iter().enumerate() {
            let c = x.coeff(r);
            if c.is_zero() {
                continue;
            }
            residual.add_term(r, &-&c);
            residual.add_term(self.group.inv(r), &c);
            out.add_coord(k, &c);
        }
        if residual.is_zero() {
            Ok(out)
        } else {
            Err(Error::NotInSpan)
        }
    }

    /// `Σ c_k ĝ_k` back in `FG`.
    pub fn embed(&self, x: &PleskenElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.group);
        for (&k, c) in &x.coords {
            let r = self.reps[k];
            out.add_term(r, c);
            out.add_term(self.group.inv(r), &-c);
        }
        out
    }
}

/// An element `Σ c_k ê_k` of `𝓛(G)` in canonical coordinates.
#[derive(Clone)]
pub struct PleskenElement {
    basis: Arc<PleskenBasis>,
    coords: BTreeMap<usize, Scalar>,
}

impl PartialEq for PleskenElement {
    fn eq(&self, other: &Self) -> bool {
        self.basis.same(&other.basis) && self.coords == other.coords
    }
}

impl Eq for PleskenElement {}

impl fmt::Debug for PleskenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coords.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

impl PleskenElement {
    fn add_coord(&mut self, k: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&k);
        }
    }

    pub fn basis(&self) -> &Arc<PleskenBasis> {
        &self.basis
    }

    pub fn coord(&self, k: usize) -> Scalar {
        self.coords.get(&k).cloned().unwrap_or_default()
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn embed(&self) -> AlgebraElement {
        self.basis.embed(self)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.basis.same(&other.basis) {
            return Err(Error::BasisMismatch);
        }
        let mut out = self.clone();
        for (&k, c) in &other.coords {
            out.add_coord(k, c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.basis.zero();
        for (&k, c) in &self.coords {
            out.add_coord(k, &(s * c));
        }
        out
    }

    /// `[x, y]` computed in `L_FG` and reduced back into `𝓛(G)`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if !self.basis.same(&other.basis) {
            return Err(Error::BasisMismatch);
        }
        let b = self.embed().lie_bracket(&other.embed())?;
        self.basis.reduce(&b)
    }
}

/// Free-function form of [`PleskenElement::bracket`].
pub fn plesken_bracket(x: &PleskenElement, y: &PleskenElement) -> Result<PleskenElement> {
    x.bracket(y)
}

/// Checks `[ĝ, ĥ] = (gh)^ − (gh⁻¹)^ − (g⁻¹h)^ + (g⁻¹h⁻¹)^` exactly.
pub fn bracket_expansion_check(group: &Arc<FiniteGroup>, g: usize, h: usize) -> Result<bool> {
    let lhs = hat(group, g)?.lie_bracket(&hat(group, h)?)?;
    let gi = group.inv(g);
    let hi = group.inv(h);
    let mut rhs = AlgebraElement::zero(group);
    for (a, b, sign) in [(g, h, 1), (g, hi, -1), (gi, h, -1), (gi, hi, 1)] {
        rhs = rhs.checked_add(&hat(group, group.op(a, b))?.scale(&Scalar::from_int(sign)))?;
    }
    Ok(lhs == rhs)
}

/// `c[k][l][m]` with `[ê_k, ê_l] = Σ_m c[k][l][m] ê_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    basis: Arc<PleskenBasis>,
    table: Vec<Scalar>,
}

pub fn structure_constants(basis: &Arc<PleskenBasis>) -> StructureConstants {
    let d = basis.dim();
    let mut table = vec![Scalar::zero(); d * d * d];
    for k in 0..d {
        for l in (k + 1)..d {
            let b = basis
                .unit(k)
                .bracket(&basis.unit(l))
                .expect("Plesken algebra is closed under the bracket");
            for (m, c) in b.coords() {
                table[(k * d + l) * d + m] = c.clone();
                table[(l * d + k) * d + m] = -c;
            }
        }
    }
    StructureConstants { basis: basis.clone(), table }
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &Arc<PleskenBasis> {
        &self.basis
    }

    pub fn get(&self, k: usize, l: usize, m: usize) -> &Scalar {
        let d = self.dim();
        &self.table[(k * d + l) * d + m]
    }

    /// Nonzero entries with `k < l`, in (k, l, m) order.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, &Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for k in 0..d {
            for l in (k + 1)..d {
                for m in 0..d {
                    let c = self.get(k, l, m);
                    if !c.is_zero() {
                        out.push((k, l, m, c));
                    }
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|k| {
            (0..d).all(|l| (0..d).all(|m| *self.get(k, l, m) == -self.get(l, k, m)))
        })
    }

    /// `Σ_m c[k][l][m] c[m][q][r] + c[l][q][m] c[m][k][r] + c[q][k][m] c[m][l][r] = 0`
    /// for all `k, l, q, r`.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim();
        // Sparse rows keep this tolerable for dim ~ 60.
        let rows: Vec<Vec<(usize, &Scalar)>> = (0..d * d)
            .map(|kl| {
                (0..d)
                    .filter_map(|m| {
                        let c = &self.table[kl * d + m];
                        (!c.is_zero()).then_some((m, c))
                    })
                    .collect()
            })
            .collect();
        let row = |a: usize, b: usize| &rows[a * d + b];
        for k in 0..d {
            for l in 0..d {
                for q in 0..d {
                    let mut acc = vec![Scalar::zero(); d];
                    for (a, b, t) in [(k, l, q), (l, q, k), (q, k, l)] {
                        for &(m, c1) in row(a, b) {
                            for &(r, c2) in row(m, t) {
                                acc[r] += &(c1 * c2);
                            }
                        }
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A linear map `𝓛(G) → 𝓛(H)`, stored as the images of the domain basis.
/// Two maps are equal iff they agree on every canonical basis hat.
#[derive(Clone)]
pub struct HatMap {
    domain: Arc<PleskenBasis>,
    codomain: Arc<PleskenBasis>,
    columns: Vec<PleskenElement>,
}

impl PartialEq for HatMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain.same(&other.domain)
            && self.codomain.same(&other.codomain)
            && self.columns == other.columns
    }
}

impl Eq for HatMap {}

impl fmt::Debug for HatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.columns).finish()
    }
}

impl HatMap {
    pub fn identity(basis: &Arc<PleskenBasis>) -> Self {
        let columns = (0..basis.dim()).map(|k| basis.unit(k)).collect();
        HatMap { domain: basis.clone(), codomain: basis.clone(), columns }
    }

    pub fn zero(domain: &Arc<PleskenBasis>, codomain: &Arc<PleskenBasis>) -> Self {
        let columns = (0..domain.dim()).map(|_| codomain.zero()).collect();
        HatMap { domain: domain.clone(), codomain: codomain.clone(), columns }
    }

    pub fn domain(&self) -> &Arc<PleskenBasis> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<PleskenBasis> {
        &self.codomain
    }

    /// Image of `ê_k`.
    pub fn column(&self, k: usize) -> &PleskenElement {
        &self.columns[k]
    }

    pub fn columns(&self) -> &[PleskenElement] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(PleskenElement::is_zero)
    }

    pub fn apply(&self, x: &PleskenElement) -> Result<PleskenElement> {
        if !self.domain.same(&x.basis) {
            return Err(Error::BasisMismatch);
        }
        let mut out = self.codomain.zero();
        for (k, c) in x.coords() {
            for (m, v) in self.columns[k].coords() {
                out.add_coord(m, &(c * v));
            }
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &HatMap) -> Result<HatMap> {
        if !first.codomain.same(&self.domain) {
            return Err(Error::DomainMismatch);
        }
        let columns = first.columns.iter().map(|c| self.apply(c)).collect::<Result<_>>()?;
        Ok(HatMap { domain: first.domain.clone(), codomain: self.codomain.clone(), columns })
    }
}

/// `f̂(Σ a_i ĝ_i) = Σ a_i f(g_i)^`, with the canonical bases of both sides.
pub fn lift_hom_hat(f: &GroupHom) -> Result<HatMap> {
    lift_hom_hat_with(f, &canonical_basis(f.domain()), &canonical_basis(f.codomain()))
}

/// As [`lift_hom_hat`] but reusing already-built bases.
pub fn lift_hom_hat_with(
    f: &GroupHom,
    domain: &Arc<PleskenBasis>,
    codomain: &Arc<PleskenBasis>,
) -> Result<HatMap> {
    if !f.validate() {
        return Err(Error::InvalidHom("multiplicativity fails".into()));
    }
    if !same_group(domain.group(), f.domain()) || !same_group(codomain.group(), f.codomain()) {
        return Err(Error::DomainMismatch);
    }
    let columns = domain
        .reps()
        .iter()
        .map(|&g| codomain.hat_coords(f.apply(g)))
        .collect::<Result<_>>()?;
    Ok(HatMap { domain: domain.clone(), codomain: codomain.clone(), columns })
}

/// A 3×3 matrix over `Z_p`, entries in `0..p`.
pub type MatrixModP = [[u64; 3]; 3];

fn unitriangular(p: u64, a: u64, b: u64, c: u64) -> MatrixModP {
    [[1, a % p, b % p], [0, 1, c % p], [0, 0, 1]]
}

fn mat_inverse_mod(m: &MatrixModP, p: u64) -> Option<MatrixModP> {
    let p = p as i128;
    let e = |i: usize, j: usize| m[i][j] as i128;
    let cof = |i: usize, j: usize| {
        let (r0, r1) = match i { 0 => (1, 2), 1 => (0, 2), _ => (0, 1) };
        let (c0, c1) = match j { 0 => (1, 2), 1 => (0, 2), _ => (0, 1) };
        let minor = e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0);
        if (i + j).is_multiple_of(2) { minor } else { -minor }
    };
    let det = (0..3).map(|j| e(0, j) * cof(0, j)).sum::<i128>().rem_euclid(p);
    if det == 0 {
        return None;
    }
    // Fermat inverse of det.
    let mut inv = 1i128;
    let (mut base, mut exp) = (det, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    let mut out = [[0u64; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            // adjugate is the transposed cofactor matrix
            *v = (cof(j, i) * inv).rem_euclid(p) as u64;
        }
    }
    Some(out)
}

/// `A − A⁻¹` for the unitriangular `A = (a,b,c)`, computed directly in the
/// matrix ring over `Z_p` (inverse via the adjugate).
pub fn heisenberg_hat_direct(p: u64, a: u64, b: u64, c: u64) -> Result<MatrixModP> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let m = unitriangular(p, a, b, c);
    let inv = mat_inverse_mod(&m, p).expect("unitriangular matrices are invertible");
    let mut out = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (m[i][j] + p - inv[i][j]) % p;
        }
    }
    Ok(out)
}

/// `Â = [[0, 2a, 2b − ac], [0, 0, 2c], [0, 0, 0]]` mod `p`.
///
/// Panics if the closed form ever disagrees with [`heisenberg_hat_direct`].
pub fn heisenberg_hat_closed_form(p: u64, a: u64, b: u64, c: u64) -> Result<MatrixModP> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let (a, b, c) = ((a % p) as u128, (b % p) as u128, (c % p) as u128);
    let q = p as u128;
    let top = (2 * b + q * q - a * c) % q;
    let closed = [
        [0, (2 * a % q) as u64, top as u64],
        [0, 0, (2 * c % q) as u64],
        [0, 0, 0],
    ];
    let direct = heisenberg_hat_direct(p, a as u64, b as u64, c as u64)?;
    assert_eq!(closed, direct, "closed form disagrees with A - A^-1 for ({a},{b},{c}) mod {p}");
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn grp(s: &str) -> Arc<FiniteGroup> {
        build_group(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn hat_examples() {
        let c3 = grp("C3");
        assert!(hat(&c3, 0).unwrap().is_zero());
        let k4 = grp("K4");
        for x in 0..4 {
            assert!(hat(&k4, x).unwrap().is_zero());
        }
        let h = hat(&c3, 1).unwrap();
        assert_eq!(h.coeff(1), Scalar::one());
        assert_eq!(h.coeff(2), Scalar::from_int(-1));
        assert!(hat(&c3, 3).is_err());
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(canonical_basis(&grp("K4")).dim(), 0);
        let s3 = canonical_basis(&grp("S3"));
        assert_eq!(s3.labels(), vec!["(123)".to_string()]);
        assert_eq!(canonical_basis(&grp("S4")).dim(), 7);
        assert_eq!(canonical_basis(&grp("H3")).dim(), 13);
        assert_eq!(canonical_basis(&grp("C6")).dim(), 2);
    }

    #[test]
    fn reduce_and_embed() {
        let c3 = grp("C3");
        let b = canonical_basis(&c3);
        assert_eq!(b.reduce(&hat(&c3, 1).unwrap()).unwrap(), b.unit(0));
        assert_eq!(
            b.reduce(&hat(&c3, 2).unwrap()).unwrap(),
            b.from_coords([(0, Scalar::from_int(-1))])
        );
        assert!(b.reduce(&AlgebraElement::zero(&c3)).unwrap().is_zero());
        let e_plus_a = AlgebraElement::from_terms(&c3, [(0, Scalar::one()), (1, Scalar::one())]).unwrap();
        assert_eq!(b.reduce(&e_plus_a), Err(Error::NotInSpan));
        // a + a^2 is symmetric, not in span
        let sym = AlgebraElement::from_terms(&c3, [(1, Scalar::one()), (2, Scalar::one())]).unwrap();
        assert_eq!(b.reduce(&sym), Err(Error::NotInSpan));

        let s3 = grp("S3");
        let bs = canonical_basis(&s3);
        assert!(bs.embed(&bs.zero()).is_zero());
        let u = bs.unit(0).embed();
        assert_eq!(u.to_string(), "(123) - (132)");

        let s4 = grp("S4");
        let b4 = canonical_basis(&s4);
        let x = b4.from_coords([(0, Scalar::one()), (1, Scalar::from_int(-1))]);
        let expect = hat(&s4, b4.reps()[0]).unwrap().checked_sub(&hat(&s4, b4.reps()[1]).unwrap()).unwrap();
        assert_eq!(x.embed(), expect);
        assert_eq!(b4.reduce(&x.embed()).unwrap(), x);
    }

    #[test]
    fn s3_is_abelian_one_dimensional() {
        let b = canonical_basis(&grp("S3"));
        let x = b.unit(0).scale(&Scalar::from_int(3));
        let y = b.unit(0).scale(&"-1/2+i".parse().unwrap());
        assert!(x.bracket(&y).unwrap().is_zero());
        let sc = structure_constants(&b);
        assert_eq!(sc.dim(), 1);
        assert!(sc.get(0, 0, 0).is_zero());
        assert!(sc.nonzero().is_empty());
    }

    #[test]
    fn s4_four_cycles_bracket() {
        let s4 = grp("S4");
        let b = canonical_basis(&s4);
        let four_cycles: Vec<usize> = b
            .reps()
            .iter()
            .copied()
            .filter(|&g| s4.element_order(g) == 4)
            .collect();
        assert_eq!(four_cycles.len(), 3);
        let (g, h) = (four_cycles[0], four_cycles[1]);
        let lhs = b.hat_coords(g).unwrap().bracket(&b.hat_coords(h).unwrap()).unwrap();
        // Four-term hat expansion evaluated in coordinates.
        let (gi, hi) = (s4.inv(g), s4.inv(h));
        let mut rhs = b.zero();
        for (x, y, s) in [(g, h, 1), (g, hi, -1), (gi, h, -1), (gi, hi, 1)] {
            rhs = rhs
                .checked_add(&b.hat_coords(s4.op(x, y)).unwrap().scale(&Scalar::from_int(s)))
                .unwrap();
        }
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn expansion_check_examples() {
        let s3 = grp("S3");
        let t = s3.index_of("(12)").unwrap();
        let c = s3.index_of("(123)").unwrap();
        assert!(bracket_expansion_check(&s3, t, c).unwrap());
        assert!(bracket_expansion_check(&s3, c, c).unwrap());
        let c6 = grp("C6");
        assert!(bracket_expansion_check(&c6, 1, 2).unwrap());
    }

    #[test]
    fn basis_mismatch() {
        let a = canonical_basis(&grp("C3"));
        let b = canonical_basis(&grp("C4"));
        assert_eq!(a.unit(0).bracket(&b.unit(0)), Err(Error::BasisMismatch));
        assert_eq!(a.unit(0).checked_add(&b.unit(0)), Err(Error::BasisMismatch));
        // Two independently built canonical bases of the same group agree.
        let a2 = canonical_basis(&grp("C3"));
        assert!(a.unit(0).bracket(&a2.unit(0)).unwrap().is_zero());
    }

    #[test]
    fn hat_lifts() {
        let c3 = grp("C3");
        let k4 = grp("K4");
        let id = lift_hom_hat(&GroupHom::identity(&c3)).unwrap();
        assert_eq!(id, HatMap::identity(&canonical_basis(&c3)));
        let triv = lift_hom_hat(&GroupHom::trivial(&c3, &c3)).unwrap();
        assert!(triv.is_zero());
        let s3 = grp("S3");
        for f in crate::hom::enumerate_homs(&s3, &k4).unwrap() {
            assert!(lift_hom_hat(&f).unwrap().is_zero());
        }
        let inv = GroupHom::new(c3.clone(), c3.clone(), vec![0, 2, 1]).unwrap();
        let neg = lift_hom_hat(&inv).unwrap();
        assert_eq!(neg.column(0), &canonical_basis(&c3).from_coords([(0, Scalar::from_int(-1))]));
        assert_eq!(neg.compose(&neg).unwrap(), id);
    }

    #[test]
    fn heisenberg_closed_form_examples() {
        assert_eq!(heisenberg_hat_closed_form(5, 0, 0, 0).unwrap(), [[0; 3]; 3]);
        assert_eq!(
            heisenberg_hat_closed_form(5, 1, 0, 1).unwrap(),
            [[0, 2, 4], [0, 0, 2], [0, 0, 0]]
        );
        assert_eq!(
            heisenberg_hat_closed_form(3, 1, 1, 1).unwrap(),
            [[0, 2, 1], [0, 0, 2], [0, 0, 0]]
        );
        assert_eq!(heisenberg_hat_closed_form(2, 1, 1, 1), Err(Error::InvalidPrime(2)));
        assert_eq!(heisenberg_hat_direct(9, 1, 1, 1), Err(Error::InvalidPrime(9)));
    }

    #[test]
    fn inverse_matches_group_table() {
        let h5 = grp("H5");
        for x in [0usize, 7, 31, 124] {
            let (a, b, c) = ((x / 25) as u64, ((x / 5) % 5) as u64, (x % 5) as u64);
            let inv = mat_inverse_mod(&unitriangular(5, a, b, c), 5).unwrap();
            let y = h5.inv(x);
            let (a2, b2, c2) = ((y / 25) as u64, ((y / 5) % 5) as u64, (y % 5) as u64);
            assert_eq!(inv, unitriangular(5, a2, b2, c2));
        }
    }
}
