// Build catalog groups, inspect their tables, enumerate homomorphisms and
// subgroups.
//
// `cargo run --example groups`

use plesken_lab::hom::enumerate_homs;
use plesken_lab::subgroup::enumerate_subgroups;
use plesken_lab::{build_group, GroupSpec};

pub fn run_example() -> plesken_lab::Result<()> {
    for spec in ["C6", "S3", "D4", "K4", "H3"] {
        let g = build_group(spec.parse::<GroupSpec>()?)?;
        println!(
            "{spec}: order {}, {} involutions (identity included), abelian = {}",
            g.order(),
            g.involution_count(),
            g.is_abelian()
        );
    }

    let s3 = build_group(GroupSpec::Symmetric(3))?;
    let a = s3.index_of("(12)").expect("label");
    let b = s3.index_of("(123)").expect("label");
    println!("in S3: (12)(123) = {}", s3.label(s3.mul(a, b)?));
    println!("in S3: (123)^-1 = {}", s3.label(s3.inverse(b)?));

    let c2 = build_group(GroupSpec::Cyclic(2))?;
    let homs = enumerate_homs(&c2, &s3)?;
    println!("Hom(C2, S3) has {} elements:", homs.len());
    for f in &homs {
        let images: Vec<&str> = f.image().iter().map(|&y| s3.label(y)).collect();
        println!("  {images:?}");
    }

    let subs = enumerate_subgroups(&s3)?;
    println!("S3 has {} subgroups:", subs.len());
    for h in &subs {
        let elems: Vec<&str> = h.embedding().iter().map(|&x| s3.label(x)).collect();
        println!("  order {}: {elems:?}", h.order());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
