// The Heisenberg group over Z_p: A - A^-1 for a unitriangular matrix A has a
// closed form, checked here against the direct computation.
//
// `cargo run --example heisenberg`

use plesken_lab::plesken::{canonical_basis, heisenberg_hat_closed_form, heisenberg_hat_direct};
use plesken_lab::{build_group, GroupSpec};

pub fn run_example() -> plesken_lab::Result<()> {
    let p = 5;
    let (a, b, c) = (1, 2, 3);
    let direct = heisenberg_hat_direct(p, a, b, c)?;
    let closed = heisenberg_hat_closed_form(p, a, b, c)?;
    println!("p = {p}, (a, b, c) = ({a}, {b}, {c})");
    for (d, k) in direct.iter().zip(&closed) {
        println!("  direct {d:?}   closed form {k:?}");
    }

    for p in [3u64, 5, 7] {
        let mut agree = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    if heisenberg_hat_direct(p, a, b, c)? == heisenberg_hat_closed_form(p, a, b, c)? {
                        agree += 1;
                    }
                }
            }
        }
        println!("p = {p}: closed form agrees on {agree}/{} elements", p * p * p);
    }

    let h3 = build_group(GroupSpec::Heisenberg(3))?;
    let basis = canonical_basis(&h3);
    println!("H3: order {}, Plesken dimension {}", h3.order(), basis.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
