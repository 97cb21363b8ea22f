//! Acceptance run. Prints one line per criterion with its time limit.
//!
//! Printed tables below are transcribed by hand from the published examples.
//! A criterion listed in `KNOWN_DEVIATIONS` may fail without failing the run,
//! but only with exactly the recorded detail; any other outcome is an error.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qwalg::axioms::ProductLaw;
use qwalg::structures::{enumerate_q_ideals, first_meander, is_filter};
use qwalg::transforms::{
    check_definitional_equivalence, derived_sum, phi, psi, to_implication, to_product,
};
use qwalg::{
    canonical_form, check_axiom, check_quantum_b, classify, enumerate, find_counterexample,
    fixtures, verify_all, AxiomId, Class, Completeness, Elem, FiniteAlgebra, OrderRelation,
    ProductAlgebra, Requirement, SearchConfig,
};

const KNOWN_DEVIATIONS: &[(&str, &str)] = &[
    (
        "1",
        "47/49 ∧ entries match; (3,3) printed 0 derived 3, (3,5) printed 0 derived 5",
    ),
    (
        "4b",
        "printed ⊕ differs from derived at example-5.5 (1,0) (1,a) (1,b) (1,c); \
     example-5.6 (b,c) (1,0) (1,a) (1,b) (1,c)",
    ),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn grid(lookup: impl Fn(&str) -> Option<Elem>, rows: &[&str]) -> Vec<Elem> {
    rows.iter()
        .flat_map(|r| r.split_whitespace())
        .map(|t| lookup(t).unwrap_or_else(|| panic!("bad token {t}")))
        .collect()
}

fn models(class: Class, max: usize) -> Vec<FiniteAlgebra> {
    (1..=max)
        .flat_map(|n| {
            let s = enumerate(&SearchConfig::new(n).satisfy([Requirement::Class(class)])).unwrap();
            assert!(s.is_complete());
            s.models.into_iter().map(|m| m.algebra)
        })
        .collect()
}

fn c1_remark_meet() -> Outcome {
    let a = fixtures::remark_3_6();
    let o = a.derive();
    let printed = grid(
        |t| a.element(t),
        &[
            "0 0 0 0 0 0 0",
            "0 1 2 3 4 5 6",
            "0 2 2 3 4 6 6",
            "0 3 2 0 4 0 6",
            "0 4 2 0 4 0 4",
            "0 5 2 2 4 5 6",
            "0 6 0 6 4 5 6",
        ],
    );
    ensure(o.leq(3, 2) && !o.leq_q(3, 2), "3 ≤ 2 but 3 ⋢_Q 2")?;
    ensure(
        o.leq_q(4, 6) && o.leq_q(6, 3) && !o.leq_q(4, 3),
        "4 ≤_Q 6 ≤_Q 3 but 4 ⋢_Q 3",
    )?;
    let bad: Vec<String> = (0..49)
        .filter(|&i| printed[i] != o.meet_table()[i])
        .map(|i| {
            format!(
                "({},{}) printed {} derived {}",
                i / 7,
                i % 7,
                printed[i],
                o.meet_table()[i]
            )
        })
        .collect();
    ensure(
        bad.is_empty(),
        format!("{}/49 ∧ entries match; {}", 49 - bad.len(), bad.join(", ")),
    )?;
    Ok("49/49 ∧ entries; 3≤2, 3⋢_Q2; 4≤_Q6≤_Q3, 4⋢_Q3".into())
}

fn c2_qw_witness() -> Outcome {
    let r = check_axiom(&fixtures::remark_3_6(), AxiomId::Qw);
    let w = r.witness.ok_or("QW holds")?;
    ensure(
        w.tuple == [2, 0, 6] && w.sides == Some((2, 3)),
        format!("witness {:?} sides {:?}", w.tuple, w.sides),
    )?;
    Ok("QW fails at (2,0,6), sides 2 vs 3".into())
}

fn c3_classification() -> Outcome {
    let a = fixtures::example_3_19();
    let c = classify(&a);
    ensure(c.is(Class::Qw), "QW does not hold")?;
    ensure(!c.is(Class::Wajsberg), "Wajsberg holds")?;
    let q = check_quantum_b(&a.derive(), OrderRelation::Leq, None).unwrap();
    ensure(!q.holds(), "commutative quantum-B holds")?;
    // c ≤ b, a → c = 1, a → b = a, 1 ≰ a
    let (aa, b, cc, one) = (1, 2, 3, 4);
    let o = a.derive();
    ensure(
        o.leq(cc, b) && o.imp(aa, cc) == one && o.imp(aa, b) == aa,
        "fixture relations",
    )?;
    let qb3 = &q.axioms[2];
    let w = qb3.witness.as_ref().ok_or("QB3 holds")?;
    ensure(
        w.tuple == [aa, cc, b] && w.sides == Some((one, aa)),
        format!("QB3 witness {:?} sides {:?}", w.tuple, w.sides),
    )?;
    Ok("QW yes, Wajsberg no, quantum-B(≤) no: QB3 at (a,c,b), 1 ≰ a".into())
}

struct Printed {
    fixture: &'static str,
    prod: [&'static str; 5],
    osum: [&'static str; 5],
}

const EXAMPLE_5_5: Printed = Printed {
    fixture: "example-5.5",
    prod: [
        "0 0 0 0 0",
        "0 b 0 0 a",
        "0 0 0 0 b",
        "0 0 0 0 c",
        "0 a b c 1",
    ],
    osum: [
        "0 a b c 1",
        "a 1 1 1 1",
        "b 1 a 1 1",
        "c 1 1 1 1",
        "0 a b c 1",
    ],
};

const EXAMPLE_5_6: Printed = Printed {
    fixture: "example-5.6",
    prod: [
        "0 0 0 0 0",
        "0 c 0 b a",
        "0 0 0 0 b",
        "0 b 0 0 c",
        "0 a b c 1",
    ],
    osum: [
        "0 a b c 1",
        "a 1 1 1 1",
        "b 1 c 1 1",
        "c 1 a 1 1",
        "0 a b c 1",
    ],
};

fn product_of(fixture: fn() -> FiniteAlgebra) -> ProductAlgebra {
    to_product(&fixture()).unwrap()
}

fn c4a_prod_tables() -> Outcome {
    for (f, printed) in [
        (fixtures::example_3_19 as fn() -> FiniteAlgebra, EXAMPLE_5_5),
        (fixtures::example_4_14, EXAMPLE_5_6),
    ] {
        let p = product_of(f);
        let want = grid(|t| p.element(t), &printed.prod);
        ensure(
            p.prod_table() == want.as_slice(),
            format!("{} ⊙ differs", printed.fixture),
        )?;
    }
    Ok("⊙ matches 25/25 on example-5.5 and example-5.6".into())
}

fn c4b_osum_tables() -> Outcome {
    let mut notes = Vec::new();
    for (f, printed) in [
        (fixtures::example_3_19 as fn() -> FiniteAlgebra, EXAMPLE_5_5),
        (fixtures::example_4_14, EXAMPLE_5_6),
    ] {
        let p = product_of(f);
        let want = grid(|t| p.element(t), &printed.osum);
        let got = derived_sum(&p);
        let bad: Vec<String> = (0..25)
            .filter(|&i| want[i] != got[i])
            .map(|i| {
                format!(
                    "({},{})",
                    p.label((i / 5) as Elem),
                    p.label((i % 5) as Elem)
                )
            })
            .collect();
        if !bad.is_empty() {
            notes.push(format!("{} {}", printed.fixture, bad.join(" ")));
        }
    }
    if notes.is_empty() {
        Ok("⊕ matches 25/25 on both".into())
    } else {
        Err(format!(
            "printed ⊕ differs from derived at {}",
            notes.join("; ")
        ))
    }
}

fn c4c_mv_prime() -> Outcome {
    let p = product_of(fixtures::example_3_19);
    let (a, c) = (1, 3);
    let lhs = p.prod(p.star(p.prod(p.star(a), c)), c);
    let rhs = p.prod(p.star(p.prod(p.star(c), a)), a);
    ensure(lhs == c && rhs == a, format!("sides {lhs} vs {rhs}"))?;
    ensure(
        ProductLaw::MvPrime.check(&p).is_some(),
        "MV' holds on example-5.5",
    )?;
    let q = product_of(fixtures::example_4_14);
    ensure(
        ProductLaw::MvPrime.check(&q).is_none(),
        "MV' fails on example-5.6",
    )?;
    // The stored product fixtures agree with the transforms.
    ensure(
        p == fixtures::example_5_5() && q == fixtures::example_5_6(),
        "stored fixtures",
    )?;
    Ok("MV' fails on example-5.5 (c ≠ a at (a,c)), holds on example-5.6".into())
}

fn c5_round_trip() -> Outcome {
    let mut count = 0;
    for a in fixtures::implication_fixtures() {
        let Ok(p) = to_product(&a) else { continue };
        ensure(psi(&p) == a && phi(&psi(&p)) == p, "fixture round trip")?;
        count += 1;
    }
    for p in [fixtures::example_5_5(), fixtures::example_5_6()] {
        let a = to_implication(&p).map_err(|e| e.to_string())?;
        ensure(
            phi(&a) == p && psi(&phi(&a)) == a,
            "product fixture round trip",
        )?;
        count += 1;
    }
    let ms = models(Class::InvolutiveBe, 4);
    for a in &ms {
        let p = phi(a);
        ensure(&psi(&p) == a && phi(&psi(&p)) == p, "model round trip")?;
    }
    Ok(format!(
        "{count} fixtures and {} involutive BE models of order ≤ 4",
        ms.len()
    ))
}

fn c6_equivalence() -> Outcome {
    let ms = models(Class::InvolutiveBe, 4);
    let mut qw = 0;
    for a in &ms {
        let r = check_definitional_equivalence(a).map_err(|e| e.to_string())?;
        ensure(
            r.holds(),
            format!("QW/Pqmv disagree on {}", canonical_form(a)),
        )?;
        qw += usize::from(r.qw.holds);
    }
    Ok(format!(
        "{} involutive BE models, {qw} QW, zero exceptions",
        ms.len()
    ))
}

fn c7_axiom_equivalences() -> Outcome {
    let ms = models(Class::InvolutiveBe, 4);
    for a in &ms {
        let c = classify(a);
        let h = |x: AxiomId| c.holds(x);
        let form = canonical_form(a);
        ensure(
            h(AxiomId::Qw) == (h(AxiomId::Qw1) && h(AxiomId::Qw2)),
            format!("QW vs QW1∧QW2 on {form}"),
        )?;
        ensure(
            (h(AxiomId::Qw) && h(AxiomId::An)) == h(AxiomId::VeeComm),
            format!("QW∧An vs ∨-comm on {form}"),
        )?;
        ensure(
            !c.is(Class::Wajsberg) || h(AxiomId::Qw),
            format!("Wajsberg ⇏ QW on {form}"),
        )?;
        ensure(
            !h(AxiomId::SelfDistributive) || h(AxiomId::VeeComm),
            format!("self-distributive ⇏ ∨-comm on {form}"),
        )?;
        ensure(
            !h(AxiomId::Qw)
                || (h(AxiomId::LeqQReflexive)
                    && h(AxiomId::LeqQAntisymmetric)
                    && h(AxiomId::LeqQTransitive)),
            format!("QW ⇏ ≤_Q partial order on {form}"),
        )?;
    }
    Ok(format!(
        "5 implications on {} models, zero exceptions",
        ms.len()
    ))
}

fn c8_theorem_suite() -> Outcome {
    let mut algebras = fixtures::implication_fixtures();
    for p in [fixtures::example_5_5(), fixtures::example_5_6()] {
        algebras.push(to_implication(&p).map_err(|e| e.to_string())?);
    }
    let fixture_count = algebras.len();
    algebras.extend(models(Class::Qw, 4));
    let mut applicable = 0;
    for a in &algebras {
        for r in verify_all(a) {
            ensure(
                !r.applicable || r.holds,
                format!("{} fails on {} at {:?}", r.id, canonical_form(a), r.witness),
            )?;
            applicable += usize::from(r.applicable);
        }
    }
    Ok(format!(
        "{fixture_count} fixtures + {} QW models, {applicable} applicable checks hold",
        algebras.len() - fixture_count
    ))
}

fn c9_rediscovery() -> Outcome {
    let qw = [Requirement::Class(Class::Qw)];
    let wajsberg = [Requirement::Class(Class::Wajsberg)];
    let mut config = SearchConfig::new(5).satisfy(qw).refute(wajsberg);
    config.time_budget = Some(Duration::from_secs(600));
    let s = enumerate(&config).unwrap();
    ensure(
        s.status == Completeness::Complete,
        "order 5 search incomplete",
    )?;
    let target = canonical_form(&fixtures::example_3_19());
    ensure(
        s.models.iter().any(|m| m.canonical == target),
        "example-3.19 not among order 5 models",
    )?;
    let c = find_counterexample(&qw, &wajsberg, 5, Some(Duration::from_secs(600))).unwrap();
    let m = c.model.ok_or("no counterexample up to order 5")?;
    ensure(
        c.status == Completeness::Complete,
        "smaller orders incomplete",
    )?;
    let smallest = m.algebra.order();
    ensure(
        c.exhausted_orders == (1..smallest).collect::<Vec<_>>(),
        "exhausted orders do not cover everything below the hit",
    )?;
    Ok(format!(
        "{} models at order 5 incl. example-3.19; smallest hit order {smallest}, \
         orders {:?} exhausted (complete)",
        s.models.len(),
        c.exhausted_orders
    ))
}

fn c10_meanders() -> Outcome {
    let p = fixtures::example_5_6();
    let ideals = enumerate_q_ideals(&p).map_err(|e| e.to_string())?;
    for s in &ideals {
        let m = first_meander(&p, s).map_err(|e| e.to_string())?;
        ensure(
            !m.is_empty() && is_filter(&p, &m).unwrap(),
            format!(
                "meander of {:?} is not a filter",
                s.iter().collect::<Vec<_>>()
            ),
        )?;
    }
    Ok(format!(
        "{} q-ideals, every first meander is a filter",
        ideals.len()
    ))
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria: &[Criterion] = &[
        ("1", "fixture fidelity (remark-3.6)", s(1), c1_remark_meet),
        ("2", "QW refutation witness", s(1), c2_qw_witness),
        (
            "3",
            "classification of example-3.19",
            s(1),
            c3_classification,
        ),
        ("4a", "transform: ⊙ tables", s(1), c4a_prod_tables),
        ("4b", "transform: ⊕ tables verbatim", s(1), c4b_osum_tables),
        ("4c", "transform: MV' verdicts", s(1), c4c_mv_prime),
        ("5", "Φ/Ψ round trip", s(60), c5_round_trip),
        ("6", "QW ⟺ Pqmv, involutive BE ≤ 4", s(120), c6_equivalence),
        (
            "7",
            "axiom equivalences, involutive BE ≤ 4",
            s(120),
            c7_axiom_equivalences,
        ),
        ("8", "theorem suite soundness", s(300), c8_theorem_suite),
        ("9", "counterexample rediscovery", s(600), c9_rediscovery),
        ("10", "meanders of q-ideals are filters", s(1), c10_meanders),
    ];
    let mut unexpected = 0;
    for &(id, title, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > limit => Err(format!("{d}; took {elapsed:?}")),
            o => o,
        };
        let known = KNOWN_DEVIATIONS
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, d)| *d);
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        println!(
            "[{tag}] {id:>3} {title} ({:.3}s, limit {}s): {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        match (&outcome, known) {
            (Ok(_), None) => {}
            (Err(d), Some(k)) if d == k => {
                println!("      known deviation, recorded in the decisions ledger")
            }
            (Ok(_), Some(_)) => {
                println!("      expected this criterion to fail; update the known deviations");
                unexpected += 1;
            }
            (Err(_), _) => unexpected += 1,
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
