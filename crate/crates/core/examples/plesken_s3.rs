// The hat elements g - g^-1 of S3 span a one-dimensional Lie algebra.
//
// `cargo run --example plesken_s3`

use plesken_lab::plesken::{canonical_basis, hat};
use plesken_lab::{build_group, GroupSpec, Scalar};

pub fn run_example() -> plesken_lab::Result<()> {
    let s3 = build_group(GroupSpec::Symmetric(3))?;
    for g in 0..s3.order() {
        println!("hat({}) = {}", s3.label(g), hat(&s3, g)?);
    }
    let basis = canonical_basis(&s3);
    println!("dim = {}, basis hats of {:?}", basis.dim(), basis.labels());
    println!("basis vector = {}", basis.embed(&basis.unit(0)));

    // Any combination of hats reduces to coordinates in that basis.
    let x = hat(&s3, s3.index_of("(132)").expect("label"))?.scale(&Scalar::from_int(3));
    println!("3*hat((132)) = {} * basis vector", basis.reduce(&x)?.coord(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
