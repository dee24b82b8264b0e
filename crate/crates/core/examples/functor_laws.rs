// The functor from group-algebra Lie algebras to Plesken Lie algebras on the
// subgroup category of a finite group: object map, identity and composition
// laws, and fullness.
//
// `cargo run --example functor_laws`

use plesken_lab::expr::parse_element;
use plesken_lab::functor::{check_full, check_functor_laws, object_map};
use plesken_lab::{build_group, Convention, GroupSpec, SubgroupCategory};

pub fn run_example() -> plesken_lab::Result<()> {
    let c3 = build_group(GroupSpec::Cyclic(3))?;
    let x = parse_element(&c3, "e + a + 2*a^2")?;
    println!("object map on {x}:");
    for conv in [Convention::Literal, Convention::Pairwise] {
        println!("  {conv}: {}", object_map(&x, conv));
    }

    for spec in ["C6", "K4", "S3", "D4"] {
        let g = build_group(spec.parse()?)?;
        let cat = SubgroupCategory::new(&g)?;
        let laws = check_functor_laws(&cat)?;
        let pairs: usize = laws.composition.iter().map(|l| l.pairs_checked).sum();
        let full = check_full(&cat)?;
        println!(
            "{spec}: {} objects, {} morphisms, {pairs} composable pairs, laws hold = {}, full = {}",
            cat.objects().len(),
            cat.morphism_count(),
            laws.all_hold,
            full.full
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
