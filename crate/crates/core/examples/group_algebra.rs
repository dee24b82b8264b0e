// Exact arithmetic in the group algebra: convolution, the commutator
// bracket, and the linear lift of a group homomorphism.
//
// `cargo run --example group_algebra`

use plesken_lab::algebra::lift_hom_bar;
use plesken_lab::expr::parse_element;
use plesken_lab::hom::enumerate_homs;
use plesken_lab::{build_group, GroupSpec};

pub fn run_example() -> plesken_lab::Result<()> {
    let c4 = build_group(GroupSpec::Cyclic(4))?;
    let x = parse_element(&c4, "2*e + (1/2)*a - i*a^3")?;
    let y = parse_element(&c4, "a + a^2")?;
    println!("x = {x}");
    println!("y = {y}");
    println!("x*y = {}", x.convolve(&y)?);
    println!("[x, y] = {} (C4 is abelian)", x.lie_bracket(&y)?);

    let s3 = build_group(GroupSpec::Symmetric(3))?;
    let u = parse_element(&s3, "(12) + 2*(123)")?;
    let v = parse_element(&s3, "(13) - i*(132)")?;
    let b = u.lie_bracket(&v)?;
    println!("in S3: [{u}, {v}] = {b}");

    // The sign map S3 -> C2 is a homomorphism; its linear lift respects brackets.
    let c2 = build_group(GroupSpec::Cyclic(2))?;
    let sign = enumerate_homs(&s3, &c2)?
        .into_iter()
        .find(|f| !f.is_trivial())
        .expect("S3 has a nontrivial map to C2");
    let fbar = lift_hom_bar(&sign)?;
    let lhs = fbar.apply(&b)?;
    let rhs = fbar.apply(&u)?.lie_bracket(&fbar.apply(&v)?)?;
    println!("sign lift: f[u,v] = {lhs}, [fu, fv] = {rhs}, equal = {}", lhs == rhs);
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
