//! End-to-end acceptance criteria. Each criterion prints one
//! `[PASS]`/`[FAIL]` line with its wall time; the test fails if any does.
//!
//! Run with `cargo test -p plesken-lab --test acceptance -- --nocapture`.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::Zero;
use plesken_lab::algebra::lift_hom_bar;
use plesken_lab::catalog::{catalog_up_to, CATALOG};
use plesken_lab::cli::lie_axiom_sweep;
use plesken_lab::functor::{check_full, check_functor_laws, find_faithfulness_counterexample};
use plesken_lab::hom::enumerate_homs;
use plesken_lab::linalg::rank;
use plesken_lab::plesken::{
    bracket_expansion_check, canonical_basis, hat, heisenberg_hat_closed_form, heisenberg_hat_direct, lift_hom_hat,
};
use plesken_lab::random::ElementSampler;
use plesken_lab::{build_group, FiniteGroup, PleskenBasis, PleskenElement, Scalar, SubgroupCategory};

type Check = Result<(), String>;

fn grp(s: &str) -> Arc<FiniteGroup> {
    build_group(s.parse().unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs one criterion, prints its verdict line, and returns whether it passed.
fn criterion(id: &str, title: &str, limit: Duration, body: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let verdict = match outcome {
        Ok(()) if elapsed <= limit => Ok(()),
        Ok(()) => Err(format!("too slow: limit {limit:?}")),
        Err(e) => Err(e),
    };
    match &verdict {
        Ok(()) => println!("[PASS] {id} {title} ({elapsed:.2?})"),
        Err(e) => println!("[FAIL] {id} {title} ({elapsed:.2?}): {e}"),
    }
    verdict.is_ok()
}

fn ac1_s3_is_one_dimensional() -> Check {
    let s3 = grp("S3");
    let basis = canonical_basis(&s3);
    ensure(basis.dim() == 1, || format!("dim = {}", basis.dim()))?;
    let c3 = s3.index_of("(123)").unwrap();
    let c3i = s3.index_of("(132)").unwrap();
    let e0 = basis.embed(&basis.unit(0));
    let want = hat(&s3, c3).map_err(err)?;
    ensure(e0 == want || e0 == want.negate(), || format!("basis vector {e0}"))?;
    ensure(e0.support_len() == 2 && !e0.coeff(c3).is_zero() && !e0.coeff(c3i).is_zero(), || {
        format!("support of {e0}")
    })
}

fn ac2_k4_witness() -> Check {
    let k4 = grp("K4");
    ensure(canonical_basis(&k4).dim() == 0, || "L(K4) is not zero".into())?;
    let cat = SubgroupCategory::new(&k4).map_err(err)?;
    let top = cat.objects().len() - 1;
    ensure(cat.objects()[top].group().order() == 4, || "last object is not K4".into())?;
    let witnesses = find_faithfulness_counterexample(&cat).map_err(err)?;
    let id: Vec<usize> = (0..4).collect();
    let trivial = vec![0; 4];
    let hit = witnesses.iter().any(|w| {
        w.source == top
            && w.target == top
            && ((w.first == trivial && w.second == id) || (w.first == id && w.second == trivial))
    });
    ensure(hit, || format!("identity/trivial pair missing among {} witnesses", witnesses.len()))
}

fn ac3_bracket_expansion() -> Check {
    for spec in ["C3", "C6", "K4", "S3", "D4", "S4", "H3"] {
        let g = grp(spec);
        for x in 0..g.order() {
            for y in 0..g.order() {
                let ok = bracket_expansion_check(&g, x, y).map_err(err)?;
                ensure(ok, || format!("{spec}: fails at ({}, {})", g.label(x), g.label(y)))?;
            }
        }
    }
    Ok(())
}

fn ac4_lie_axioms() -> Check {
    for (i, &spec) in CATALOG.iter().enumerate() {
        let g = build_group(spec).map_err(err)?;
        let (jac, bil, alt) = lie_axiom_sweep(&g, 100, 1000 + i as u64).map_err(err)?;
        ensure(jac + bil + alt == 0, || format!("{spec}: jacobi {jac}, bilinear {bil}, alternating {alt}"))?;
    }
    Ok(())
}

fn ac5_dimension_formula() -> Check {
    for &spec in CATALOG.iter() {
        let g = build_group(spec).map_err(err)?;
        let dim = canonical_basis(&g).dim();
        let formula = (g.order() - g.involution_count()) / 2;
        let rows: Vec<Vec<Scalar>> = (0..g.order())
            .map(|x| hat(&g, x).map(|h| h.to_dense()))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let r = rank(&rows);
        ensure(dim == formula && dim == r, || format!("{spec}: basis {dim}, formula {formula}, rank {r}"))?;
    }
    Ok(())
}

fn random_plesken(s: &mut ElementSampler, basis: &Arc<PleskenBasis>) -> PleskenElement {
    basis.from_coords((0..basis.dim()).map(|k| (k, s.scalar())).collect::<Vec<_>>())
}

fn ac6_lifts_preserve_brackets() -> Check {
    let groups: Vec<_> = catalog_up_to(8).into_iter().map(|s| (s, build_group(s).unwrap())).collect();
    let mut sampler = ElementSampler::new(6);
    let mut homs_checked = 0;
    for (gs, g) in &groups {
        for (hs, h) in &groups {
            for f in enumerate_homs(g, h).map_err(err)? {
                let fbar = lift_hom_bar(&f).map_err(err)?;
                let fhat = lift_hom_hat(&f).map_err(err)?;
                for _ in 0..20 {
                    let x = sampler.element(g);
                    let y = sampler.element(g);
                    let lhs = fbar.apply(&x.lie_bracket(&y).map_err(err)?).map_err(err)?;
                    let rhs = fbar.apply(&x).map_err(err)?.lie_bracket(&fbar.apply(&y).map_err(err)?).map_err(err)?;
                    ensure(lhs == rhs, || format!("bar lift {gs}->{hs} {:?}", f.image()))?;

                    let u = random_plesken(&mut sampler, fhat.domain());
                    let v = random_plesken(&mut sampler, fhat.domain());
                    let lhs = fhat.apply(&u.bracket(&v).map_err(err)?).map_err(err)?;
                    let rhs = fhat.apply(&u).map_err(err)?.bracket(&fhat.apply(&v).map_err(err)?).map_err(err)?;
                    ensure(lhs == rhs, || format!("hat lift {gs}->{hs} {:?}", f.image()))?;
                }
                homs_checked += 1;
            }
        }
    }
    ensure(homs_checked > 0, || "no homomorphisms enumerated".into())
}

fn ac7_functor_laws_and_fullness() -> Check {
    for spec in ["C6", "K4", "S3", "D4"] {
        let cat = SubgroupCategory::new(&grp(spec)).map_err(err)?;
        let laws = check_functor_laws(&cat).map_err(err)?;
        ensure(laws.all_hold, || format!("{spec}: functor laws fail"))?;
        ensure(laws.identity.iter().all(|l| l.present && l.holds), || format!("{spec}: identity law"))?;
        let full = check_full(&cat).map_err(err)?;
        ensure(full.full && full.pairs.iter().all(|p| p.full), || format!("{spec}: not full"))?;
    }
    Ok(())
}

fn ac8_heisenberg_closed_form() -> Check {
    let mut cases = 0;
    for p in [3u64, 5] {
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let direct = heisenberg_hat_direct(p, a, b, c).map_err(err)?;
                    let closed = heisenberg_hat_closed_form(p, a, b, c).map_err(err)?;
                    ensure(direct == closed, || format!("p={p} ({a},{b},{c}): {direct:?} vs {closed:?}"))?;
                    cases += 1;
                }
            }
        }
    }
    ensure(cases == 27 + 125, || format!("{cases} cases"))
}

const CLI_COMMANDS: &[&[&str]] = &[
    &["plesken", "S3", "basis"],
    &["plesken", "K4", "dim"],
    &["functor", "counterexample", "--ambient", "K4"],
    &["functor", "check", "--ambient", "C6"],
    &["functor", "check", "--ambient", "K4"],
    &["functor", "check", "--ambient", "S3"],
    &["functor", "check", "--ambient", "D4"],
    &["functor", "full", "--ambient", "D4"],
    &["verify", "H3", "--samples", "100"],
    &["plesken", "H3", "sc"],
    &["bracket", "S3", "(12)", "(123)"],
];

fn ac9_cli_determinism() -> Check {
    let run = |args: &[&str]| -> Result<(Vec<u8>, Option<i32>), String> {
        let out = Command::new(env!("CARGO_BIN_EXE_plesken-lab")).args(args).output().map_err(err)?;
        Ok((out.stdout, out.status.code()))
    };
    for args in CLI_COMMANDS {
        let (a, ca) = run(args)?;
        let (b, cb) = run(args)?;
        ensure(ca == Some(0), || format!("{args:?} exited {ca:?}"))?;
        ensure(a == b && ca == cb, || format!("{args:?} differs between runs"))?;
        serde_json::from_slice::<serde_json::Value>(&a).map_err(|e| format!("{args:?}: {e}"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let secs = Duration::from_secs;
    let results = [
        criterion("AC1", "S3 Plesken algebra is one-dimensional", secs(1), ac1_s3_is_one_dimensional),
        criterion("AC2", "K4 algebra is zero; identity and trivial lifts collide", secs(1), ac2_k4_witness),
        criterion("AC3", "bracket expansion on all pairs of C3 C6 K4 S3 D4 S4 H3", secs(30), ac3_bracket_expansion),
        criterion("AC4", "Jacobi, bilinearity, alternation on 100 seeded samples per group", secs(60), ac4_lie_axioms),
        criterion("AC5", "basis size = formula = rank oracle on the catalog", secs(10), ac5_dimension_formula),
        criterion("AC6", "bar and hat lifts preserve brackets, orders <= 8", secs(60), ac6_lifts_preserve_brackets),
        criterion("AC7", "functor laws and fullness over C6 K4 S3 D4", secs(60), ac7_functor_laws_and_fullness),
        criterion("AC8", "Heisenberg closed form = direct A - A^-1, p in {3, 5}", secs(5), ac8_heisenberg_closed_form),
        criterion("AC9", "CLI acceptance commands are byte-identical across runs", secs(120), ac9_cli_determinism),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} acceptance criteria passed", results.len());
    assert_eq!(passed, results.len());
}
