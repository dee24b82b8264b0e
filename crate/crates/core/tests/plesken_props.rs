mod common;

use common::{catalog_groups, element, grp};
use plesken_lab::hom::enumerate_homs;
use plesken_lab::linalg::rank;
use plesken_lab::plesken::{
    bracket_expansion_check, canonical_basis, hat, lift_hom_hat, structure_constants,
};
use plesken_lab::random::ElementSampler;
use plesken_lab::{Error, Scalar};
use proptest::prelude::*;

#[test]
fn dimension_law_against_rank_oracle() {
    for (spec, g) in catalog_groups(usize::MAX) {
        let basis = canonical_basis(&g);
        let formula = (g.order() - g.involution_count()) / 2;
        let rows: Vec<Vec<Scalar>> =
            (0..g.order()).map(|x| hat(&g, x).unwrap().to_dense()).collect();
        assert_eq!(basis.dim(), formula, "{spec}");
        assert_eq!(basis.dim(), rank(&rows), "{spec}");
    }
}

#[test]
fn basis_invariants() {
    for (_, g) in catalog_groups(usize::MAX) {
        let b = canonical_basis(&g);
        for &r in b.reps() {
            assert!(!g.is_involution(r));
            assert!(r < g.inverse(r).unwrap());
        }
        for x in 0..g.order() {
            if !g.is_involution(x) {
                let hits = b.reps().iter().filter(|&&r| r == x || r == g.inverse(x).unwrap()).count();
                assert_eq!(hits, 1);
            }
        }
    }
}

#[test]
fn bracket_closure_over_basis_pairs() {
    for (spec, g) in catalog_groups(27) {
        let b = canonical_basis(&g);
        for k in 0..b.dim() {
            for l in 0..b.dim() {
                let raw = b.unit(k).embed().lie_bracket(&b.unit(l).embed()).unwrap();
                assert!(b.reduce(&raw).is_ok(), "{spec}: [e{k}, e{l}] left the span");
            }
        }
    }
}

#[test]
fn expansion_holds_for_all_pairs() {
    for (spec, g) in catalog_groups(24) {
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert!(bracket_expansion_check(&g, x, y).unwrap(), "{spec}: ({x},{y})");
            }
        }
    }
}

#[test]
fn structure_constant_identities() {
    for (spec, g) in catalog_groups(27) {
        let sc = structure_constants(&canonical_basis(&g));
        assert!(sc.is_antisymmetric(), "{spec}");
        assert!(sc.satisfies_jacobi(), "{spec}");
    }
    let h3 = structure_constants(&canonical_basis(&grp("H3")));
    assert_eq!(h3.dim(), 13);
    assert!(!h3.nonzero().is_empty());
    assert!(structure_constants(&canonical_basis(&grp("K4"))).nonzero().is_empty());
}

/// f̂([x,y]) = [f̂x, f̂y], exhaustively over homs of catalog groups of order ≤ 8.
#[test]
fn hat_lift_preserves_brackets() {
    let groups = catalog_groups(8);
    let mut s = ElementSampler::new(99);
    for (_, g) in &groups {
        let bg = canonical_basis(g);
        for (_, h) in &groups {
            for f in enumerate_homs(g, h).unwrap() {
                let fh = lift_hom_hat(&f).unwrap();
                // f̂ agrees with pushing hats through f.
                for (k, &r) in bg.reps().iter().enumerate() {
                    let pushed = hat(h, f.apply(r)).unwrap();
                    assert_eq!(fh.column(k).embed(), pushed);
                }
                for _ in 0..20 {
                    let x = bg.from_coords((0..bg.dim()).map(|k| (k, s.scalar())));
                    let y = bg.from_coords((0..bg.dim()).map(|k| (k, s.scalar())));
                    let lhs = fh.apply(&x.bracket(&y).unwrap()).unwrap();
                    let rhs = fh.apply(&x).unwrap().bracket(&fh.apply(&y).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn reduce_rejects_symmetric_parts() {
    let g = grp("S3");
    let b = canonical_basis(&g);
    let e = plesken_lab::AlgebraElement::basis(&g, 0).unwrap();
    assert_eq!(b.reduce(&e), Err(Error::NotInSpan));
    let t = plesken_lab::AlgebraElement::basis(&g, g.index_of("(12)").unwrap()).unwrap();
    assert_eq!(b.reduce(&t), Err(Error::NotInSpan));
}

#[test]
fn heisenberg_closed_form_matches_direct_everywhere() {
    use plesken_lab::plesken::{heisenberg_hat_closed_form, heisenberg_hat_direct};
    for p in [3u64, 5, 7] {
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    assert_eq!(
                        heisenberg_hat_closed_form(p, a, b, c).unwrap(),
                        heisenberg_hat_direct(p, a, b, c).unwrap()
                    );
                }
            }
        }
    }
}

fn spanned() -> impl Strategy<Value = plesken_lab::AlgebraElement> {
    let groups: Vec<_> = catalog_groups(27).into_iter().map(|(_, g)| g).collect();
    (0..groups.len()).prop_flat_map(move |i| element(groups[i].clone()))
}

proptest! {
    #[test]
    fn round_trips(x in spanned()) {
        let g = x.group().clone();
        let b = canonical_basis(&g);
        // antisymmetrize into the span: x - x*  where * is g -> g^-1
        let star = plesken_lab::AlgebraElement::from_terms(
            &g, x.terms().map(|(h, c)| (g.inverse(h).unwrap(), c.clone()))).unwrap();
        let y = x.checked_sub(&star).unwrap();
        let c = b.reduce(&y).unwrap();
        prop_assert_eq!(c.embed(), y);
        prop_assert_eq!(b.reduce(&c.embed()).unwrap(), c);
    }
}
