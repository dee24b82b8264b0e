// Structure constants of Plesken algebras and the Lie identities they obey.
//
// `cargo run --example structure_constants`

use plesken_lab::catalog::CATALOG;
use plesken_lab::plesken::{canonical_basis, structure_constants};
use plesken_lab::{build_group, GroupSpec};

pub fn run_example() -> plesken_lab::Result<()> {
    for &spec in CATALOG.iter() {
        let g = build_group(spec)?;
        let sc = structure_constants(&canonical_basis(&g));
        println!(
            "{spec}: dim {}, {} nonzero constants, antisymmetric = {}, Jacobi = {}",
            sc.dim(),
            sc.nonzero().len(),
            sc.is_antisymmetric(),
            sc.satisfies_jacobi()
        );
    }

    let h3 = build_group(GroupSpec::Heisenberg(3))?;
    let s4 = build_group(GroupSpec::Symmetric(4))?;
    for g in [s4, h3] {
        let basis = canonical_basis(&g);
        let sc = structure_constants(&basis);
        let labels = basis.labels();
        println!("nonzero brackets for {}:", g.spec().expect("catalog group"));
        for (k, l, m, c) in sc.nonzero().into_iter().take(6) {
            println!("  [hat {}, hat {}] has {c} * hat {}", labels[k], labels[l], labels[m]);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> plesken_lab::Result<()> {
    run_example()
}
