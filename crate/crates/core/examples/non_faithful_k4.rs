// Every element of the Klein four-group is an involution, so its Plesken
// algebra is zero and distinct homomorphisms lift to the same zero map.
//
// `cargo run --example non_faithful_k4`

use plesken_lab::functor::{find_faithfulness_counterexample, materialize};
use plesken_lab::{build_group, GroupSpec, SubgroupCategory};

pub fn run_example() -> plesken_lab::Result<()> {
    let k4 = build_group(GroupSpec::Klein4)?;
    let cat = SubgroupCategory::new(&k4)?;
    let witnesses = find_faithfulness_counterexample(&cat)?;
    println!("{} pairs of distinct morphisms with equal images", witnesses.len());

    let top = cat.objects().len() - 1;
    let label = |img: &[usize]| img.iter().map(|&y| k4.label(y)).collect::<Vec<_>>();
    let on_top: Vec<_> = witnesses.iter().filter(|w| w.source == top && w.target == top).collect();
    println!("{} of them are endomorphism pairs of K4 itself, e.g.", on_top.len());
    let identity: Vec<usize> = (0..k4.order()).collect();
    for w in on_top.iter().filter(|w| w.second == identity).take(3) {
        println!("  {:?} and {:?}", label(&w.first), label(&w.second));
    }

    let report = materialize(&cat)?;
    let json = serde_json::to_string(&report.objects[top]).expect("serializes");
    println!("top object: {json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
