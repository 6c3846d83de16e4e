//! End-to-end acceptance checks. Each criterion prints one `PASS`/`FAIL`
//! line; the test fails if any criterion fails.

use std::time::Instant;

use greend4_core::presentation::{a_seq, nf_mul, PresBase, PresElement, PresMonomial};
use greend4_core::rep_lab::{build, decompose, direct_sum, is_isomorphic, tensor};
use greend4_core::verify::{
    standard_etas, verify_associativity, verify_braiding, verify_duality, verify_presentation,
    verify_structure, verify_table, Grid, TableOptions,
};
use greend4_core::{EtaParam, GreenElement, ModuleLabel, Z2};
use num_bigint::BigInt;

const SEED: u64 = 0x5eed_d4d4;

fn report(n: u32, name: &str, ok: bool, detail: String, start: Instant) -> bool {
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "criterion {n}: {status} {name} ({detail}, {:.1}s)",
        start.elapsed().as_secs_f64()
    );
    ok
}

fn table_equivalence() -> bool {
    let start = Instant::now();
    let r = verify_table(
        &Grid::standard(),
        &TableOptions {
            seed: SEED,
            inject_fault: None,
        },
    );
    for m in &r.mismatches {
        println!(
            "  {} * {} [{}]: expected {}, found {}",
            m.left, m.right, m.case, m.expected, m.found
        );
    }
    let untouched: Vec<String> = r
        .cases
        .iter()
        .filter(|(_, t)| t.checked == 0)
        .map(|(c, _)| c.to_string())
        .collect();
    let detail = format!(
        "{} pairs, {} mismatches, cases not exercised: {:?}",
        r.pairs,
        r.mismatches.len(),
        untouched
    );
    report(
        1,
        "table matches decomposition",
        r.passed() && untouched.is_empty(),
        detail,
        start,
    )
}

fn named_identities() -> bool {
    let start = Instant::now();
    let t0 = build(&ModuleLabel::t(0));
    let tt = decompose(&tensor(&t0, &t0)).map(|ls| GreenElement::from_multiset(&ls));
    let c1 = tt == Ok(GreenElement::from_label(ModuleLabel::p(1)));

    let x = PresElement::base(PresBase::X);
    let y = PresElement::base(PresBase::Y(1));
    let z = PresElement::base(PresBase::Z(1));
    let mut one_plus = PresElement::one();
    one_plus.add_term(2, PresMonomial::new(false, PresBase::X2));
    let c2 = nf_mul(&y, &z) == one_plus;
    let mut two_x = PresElement::zero();
    two_x.add_term(2, PresMonomial::new(false, PresBase::X));
    two_x.add_term(2, PresMonomial::new(true, PresBase::X));
    let c3 = nf_mul(&nf_mul(&x, &x), &x) == two_x;

    let om = build(&ModuleLabel::omega(1, Z2::ZERO));
    let co = build(&ModuleLabel::omega(-1, Z2::ZERO));
    let p1 = build(&ModuleLabel::p(1));
    let rhs = direct_sum(&[build(&ModuleLabel::v(0)), p1.clone(), p1]);
    let c4 = is_isomorphic(&tensor(&om, &co), &rhs);
    let detail = format!("T(0)^2 {c1}, yz {c2}, x^3 {c3}, O^1 O^-1 {c4}");
    report(2, "named identities", c1 && c2 && c3 && c4, detail, start)
}

fn presentation_isomorphism() -> bool {
    let start = Instant::now();
    let etas = vec![
        EtaParam::integer(0),
        EtaParam::integer(1),
        EtaParam::Infinity,
    ];
    let round = greend4_core::verify::check_round_trips(12, &etas);
    let rest = verify_presentation(6, &etas);
    for f in round.failures.iter().chain(&rest.homomorphism.failures) {
        println!("  {f}");
    }
    let mut rel_checked = 0;
    for (family, r) in &rest.relations {
        rel_checked += r.checked;
        for f in &r.failures {
            println!("  {family}: {f}");
        }
    }
    let ok = round.passed() && rest.passed();
    let detail = format!(
        "{} round trips, {} products, {} relations",
        round.checked, rest.homomorphism.checked, rel_checked
    );
    report(3, "presentation isomorphism", ok, detail, start)
}

fn recurrence() -> bool {
    let start = Instant::now();
    let a = |n: u32| a_seq(n).expect("n >= 1");
    let mut ok = a(1) == BigInt::from(0) && a(2) == BigInt::from(1) && a(3) == BigInt::from(4);
    for n in 1..=50u32 {
        let lhs = BigInt::from(3) * a(n) - BigInt::from(n * (n - 1) / 2);
        let rhs = a(n + 1) - BigInt::from(n);
        if lhs != rhs {
            println!("  n = {n}: {lhs} != {rhs}");
            ok = false;
        }
    }
    report(4, "a_n recurrence", ok, "n = 1..50".to_string(), start)
}

fn duality() -> bool {
    let start = Instant::now();
    let r = verify_duality(&Grid::standard(), SEED);
    for f in &r.failures {
        println!("  {f}");
    }
    report(
        5,
        "duality",
        r.passed(),
        format!("{} checks", r.checked),
        start,
    )
}

fn braiding() -> bool {
    let start = Instant::now();
    let r = verify_braiding(&Grid::new(2, standard_etas()));
    for f in &r.failures {
        println!("  {f}");
    }
    report(
        6,
        "braiding",
        r.passed(),
        format!("{} pairs", r.checked),
        start,
    )
}

fn structure() -> bool {
    let start = Instant::now();
    let r = verify_structure(&Grid::standard());
    let assoc = verify_associativity(&Grid::new(2, standard_etas()).labels());
    for f in r.failures.iter().chain(&assoc.failures) {
        println!("  {f}");
    }
    let detail = format!("{} structural checks, {} triples", r.checked, assoc.checked);
    report(
        7,
        "structural invariants",
        r.passed() && assoc.passed(),
        detail,
        start,
    )
}

#[test]
fn acceptance() {
    let results = [
        table_equivalence(),
        named_identities(),
        presentation_isomorphism(),
        recurrence(),
        duality(),
        braiding(),
        structure(),
    ];
    assert!(
        results.iter().all(|ok| *ok),
        "some acceptance criteria failed"
    );
}
