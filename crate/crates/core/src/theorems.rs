//! A registry of identities and implications known to hold in the algebra
//! classes, each checked exhaustively on a concrete finite algebra.
//!
//! Entries are keyed by stable ids (`"P3.13-7"`, `"T5.1"`, ...). An entry
//! applies only when the algebra satisfies its preconditions; otherwise the
//! result is vacuously true. Statements of the form "if A then B" are
//! checked as guarded universals over all tuples.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::{
    check_quantum_b, classify_ops, first_failure, same, truth, AxiomId, Class,
    ClassificationReport, OrderRelation, ProductLaw, Requirement, Verdict, Witness,
};
use crate::ops::{DerivedOps, Phi};

type LawFn = fn(&DerivedOps, [Elem; 3]) -> Verdict;
type GlobalFn = fn(&Context<'_>) -> Result<(), Option<Witness>>;

#[derive(Clone, Copy)]
enum Check {
    /// A universally quantified statement of the given arity.
    Law(usize, LawFn),
    /// A statement about the algebra as a whole, such as an equivalence of
    /// two axioms.
    Global(GlobalFn),
}

/// Inputs shared by every entry.
pub struct Context<'a> {
    pub ops: &'a DerivedOps,
    pub classes: &'a ClassificationReport,
}

impl Context<'_> {
    fn witness(&self, axiom: AxiomId) -> Option<Witness> {
        self.classes.axioms[&axiom].witness.clone()
    }

    /// First failure among the axioms of `req`, or `None` when it holds.
    fn failure(&self, req: Requirement) -> Option<Witness> {
        req.axioms().iter().find_map(|&a| self.witness(a))
    }

    fn scan(&self, arity: usize, law: impl FnMut([Elem; 3]) -> Verdict) -> Option<Witness> {
        first_failure(self.ops.order(), arity, law)
    }
}

/// One registered statement.
pub struct TheoremEntry {
    pub id: &'static str,
    pub requires: &'static [Requirement],
    pub statement: &'static str,
    check: Check,
}

impl TheoremEntry {
    pub fn applies(&self, classes: &ClassificationReport) -> bool {
        self.requires.iter().all(|r| classes.satisfies(r))
    }

    /// Arity of the quantified statement; `None` for whole-algebra entries.
    pub fn arity(&self) -> Option<usize> {
        match self.check {
            Check::Law(arity, _) => Some(arity),
            Check::Global(_) => None,
        }
    }

    pub fn check(&self, ops: &DerivedOps, classes: &ClassificationReport) -> TheoremResult {
        let applicable = self.applies(classes);
        let failure = if applicable {
            match self.check {
                Check::Law(arity, law) => first_failure(ops.order(), arity, |t| law(ops, t)),
                Check::Global(f) => f(&Context { ops, classes }).err().map(|w| {
                    w.unwrap_or(Witness {
                        tuple: Vec::new(),
                        sides: None,
                    })
                }),
            }
        } else {
            None
        };
        TheoremResult {
            id: self.id,
            applicable,
            holds: failure.is_none(),
            witness: failure,
        }
    }

    /// Confirms a reported result: re-evaluates a law at its witness, or
    /// reruns a whole-algebra check.
    pub fn reproduces(
        &self,
        ops: &DerivedOps,
        classes: &ClassificationReport,
        result: &TheoremResult,
    ) -> bool {
        match (self.check, &result.witness) {
            (Check::Law(_, law), Some(w)) => {
                let mut t = [0; 3];
                t[..w.tuple.len()].copy_from_slice(&w.tuple);
                result.applicable && !result.holds && law(ops, t) == Verdict::Fails(w.sides)
            }
            _ => &self.check(ops, classes) == result,
        }
    }
}

/// The outcome of checking one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremResult {
    pub id: &'static str,
    /// Whether the algebra met the entry's preconditions.
    pub applicable: bool,
    pub holds: bool,
    /// First failing tuple; empty for a failed whole-algebra entry with no
    /// single counterexample.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

pub fn registry() -> &'static [TheoremEntry] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static TheoremEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

pub fn verify(algebra: &FiniteAlgebra, id: &str) -> Result<TheoremResult, UnknownTheorem> {
    let entry = lookup(id).ok_or_else(|| UnknownTheorem(id.to_string()))?;
    let ops = algebra.derive();
    Ok(entry.check(&ops, &classify_ops(&ops)))
}

/// Checks every entry, in registry order.
pub fn verify_all(algebra: &FiniteAlgebra) -> Vec<TheoremResult> {
    let ops = algebra.derive();
    verify_all_with(&ops, &classify_ops(&ops))
}

pub fn verify_all_with(ops: &DerivedOps, classes: &ClassificationReport) -> Vec<TheoremResult> {
    REGISTRY.iter().map(|e| e.check(ops, classes)).collect()
}

// Verdict helpers. Inequalities report `(l, r)` for the failing `l ≤ r`.

fn le(o: &DerivedOps, l: Elem, r: Elem) -> Verdict {
    if o.leq(l, r) {
        Verdict::Holds
    } else {
        Verdict::Fails(Some((l, r)))
    }
}

fn lq(o: &DerivedOps, l: Elem, r: Elem) -> Verdict {
    if o.leq_q(l, r) {
        Verdict::Holds
    } else {
        Verdict::Fails(Some((l, r)))
    }
}

fn lmm(o: &DerivedOps, l: Elem, r: Elem) -> Verdict {
    if o.le_mm(l, r) {
        Verdict::Holds
    } else {
        Verdict::Fails(Some((l, r)))
    }
}

fn all<const N: usize>(vs: [Verdict; N]) -> Verdict {
    vs.into_iter()
        .find(|v| !v.holds())
        .unwrap_or(Verdict::Holds)
}

fn when(guard: bool, v: Verdict) -> Verdict {
    if guard {
        v
    } else {
        Verdict::Holds
    }
}

/// Both sides hold or both fail.
fn equiv(left: Option<Witness>, right: Option<Witness>) -> Result<(), Option<Witness>> {
    match (left, right) {
        (Some(w), None) | (None, Some(w)) => Err(Some(w)),
        _ => Ok(()),
    }
}

/// When the hypothesis holds, so must the conclusion.
fn implies(hyp: Option<Witness>, concl: Option<Witness>) -> Result<(), Option<Witness>> {
    match (hyp, concl) {
        (None, Some(w)) => Err(Some(w)),
        _ => Ok(()),
    }
}

const BE: &[Requirement] = &[Requirement::Class(Class::Be)];
const BOUNDED: &[Requirement] = &[Requirement::Class(Class::BoundedBe)];
const INVOLUTIVE: &[Requirement] = &[Requirement::Class(Class::InvolutiveBe)];
const SELF_DISTRIBUTIVE: &[Requirement] = &[
    Requirement::Class(Class::InvolutiveBe),
    Requirement::Axiom(AxiomId::SelfDistributive),
];
const QW1: &[Requirement] = &[
    Requirement::Class(Class::InvolutiveBe),
    Requirement::Axiom(AxiomId::Qw1),
];
const QW1_AN: &[Requirement] = &[
    Requirement::Class(Class::InvolutiveBe),
    Requirement::Axiom(AxiomId::Qw1),
    Requirement::Axiom(AxiomId::An),
];
const QW: &[Requirement] = &[Requirement::Class(Class::Qw)];
const QW_SELF_DISTRIBUTIVE: &[Requirement] = &[
    Requirement::Class(Class::Qw),
    Requirement::Axiom(AxiomId::SelfDistributive),
];
const WAJSBERG: &[Requirement] = &[Requirement::Class(Class::Wajsberg)];
const QMV: &[Requirement] = &[Requirement::Class(Class::Qmv)];

macro_rules! law {
    ($id:literal, $req:expr, $text:literal, $arity:literal, $f:expr) => {
        TheoremEntry {
            id: $id,
            requires: $req,
            statement: $text,
            check: Check::Law($arity, $f),
        }
    };
}

macro_rules! global {
    ($id:literal, $req:expr, $text:literal, $f:expr) => {
        TheoremEntry {
            id: $id,
            requires: $req,
            statement: $text,
            check: Check::Global($f),
        }
    };
}

static REGISTRY: &[TheoremEntry] = &[
    // BE algebras.
    law!("L3.2-1", BE, "x→(y→x) = 1", 2, |o, [x, y, _]| {
        same(o.imp(x, o.imp(y, x)), o.one())
    }),
    law!("L3.2-2", BE, "x ≤ (x→y)→y", 2, |o, [x, y, _]| {
        le(o, x, o.imp(o.imp(x, y), y))
    }),
    law!("L3.2-3", BOUNDED, "x→y* = y→x*", 2, |o, [x, y, _]| {
        same(o.imp(x, o.star(y)), o.imp(y, o.star(x)))
    }),
    law!("L3.2-4", BOUNDED, "x ≤ x**", 1, |o, [x, _, _]| {
        le(o, x, o.star(o.star(x)))
    }),
    law!(
        "L3.2-5",
        INVOLUTIVE,
        "x*→y = y*→x",
        2,
        |o, [x, y, _]| { same(o.imp(o.star(x), y), o.imp(o.star(y), x)) }
    ),
    law!(
        "L3.2-6",
        INVOLUTIVE,
        "x*→y* = y→x",
        2,
        |o, [x, y, _]| { same(o.imp(o.star(x), o.star(y)), o.imp(y, x)) }
    ),
    law!(
        "L3.2-7",
        INVOLUTIVE,
        "(x*→y)*→z = x*→(y*→z)",
        3,
        |o, [x, y, z]| {
            same(
                o.imp(o.star(o.imp(o.star(x), y)), z),
                o.imp(o.star(x), o.imp(o.star(y), z)),
            )
        }
    ),
    // Involutive BE algebras.
    law!(
        "P3.3-1",
        INVOLUTIVE,
        "x ≤_Q y implies x = y∧x and y = x∨y",
        2,
        |o, [x, y, _]| {
            when(
                o.leq_q(x, y),
                all([same(o.meet(y, x), x), same(o.join(x, y), y)]),
            )
        }
    ),
    law!(
        "P3.3-2",
        INVOLUTIVE,
        "≤_Q is reflexive and antisymmetric",
        2,
        |o, [x, y, _]| {
            all([
                lq(o, x, x),
                when(o.leq_q(x, y) && o.leq_q(y, x), truth(x == y)),
            ])
        }
    ),
    law!(
        "P3.3-3",
        INVOLUTIVE,
        "x∨y = (x*∧y*)*",
        2,
        |o, [x, y, _]| { same(o.join(x, y), o.star(o.meet(o.star(x), o.star(y)))) }
    ),
    law!(
        "P3.3-4",
        INVOLUTIVE,
        "x ≤_Q y implies x ≤ y",
        2,
        |o, [x, y, _]| { when(o.leq_q(x, y), le(o, x, y)) }
    ),
    law!(
        "P3.3-5",
        INVOLUTIVE,
        "0 ≤_Q x ≤_Q 1",
        1,
        |o, [x, _, _]| { all([lq(o, o.zero(), x), lq(o, x, o.one())]) }
    ),
    law!(
        "P3.3-6",
        INVOLUTIVE,
        "0∧x = x∧0 = 0 and 1∧x = x∧1 = x",
        1,
        |o, [x, _, _]| {
            let (zero, one) = (o.zero(), o.one());
            all([
                same(o.meet(zero, x), zero),
                same(o.meet(x, zero), zero),
                same(o.meet(one, x), x),
                same(o.meet(x, one), x),
            ])
        }
    ),
    law!(
        "P3.3-7",
        INVOLUTIVE,
        "x∧(y∧x) = y∧x and x∧(x∧y) = x∧y",
        2,
        |o, [x, y, _]| {
            all([
                same(o.meet(x, o.meet(y, x)), o.meet(y, x)),
                same(o.meet(x, o.meet(x, y)), o.meet(x, y)),
            ])
        }
    ),
    law!(
        "P3.5-1",
        INVOLUTIVE,
        "(x∧y)→z = (y→x)→(y→z)",
        3,
        |o, [x, y, z]| { same(o.imp(o.meet(x, y), z), o.imp(o.imp(y, x), o.imp(y, z))) }
    ),
    law!(
        "P3.5-2",
        INVOLUTIVE,
        "z→(x∨y) = (x→y)→(z→y)",
        3,
        |o, [x, y, z]| { same(o.imp(z, o.join(x, y)), o.imp(o.imp(x, y), o.imp(z, y))) }
    ),
    law!(
        "P3.5-3",
        INVOLUTIVE,
        "x∧y ≤ x, y ≤ x∨y",
        2,
        |o, [x, y, _]| {
            let (m, j) = (o.meet(x, y), o.join(x, y));
            all([le(o, m, x), le(o, m, y), le(o, x, j), le(o, y, j)])
        }
    ),
    law!(
        "P3.5-4",
        SELF_DISTRIBUTIVE,
        "x∧y = y∧x and x∨y = y∨x",
        2,
        |o, [x, y, _]| {
            all([
                same(o.meet(x, y), o.meet(y, x)),
                same(o.join(x, y), o.join(y, x)),
            ])
        }
    ),
    law!("P3.8", QW, "x→(x∧y) = x→y", 2, |o, [x, y, _]| {
        same(o.imp(x, o.meet(x, y)), o.imp(x, y))
    }),
    law!(
        "P3.9",
        QW1,
        "(x∧y)∧(z∧x) = y∧(z∧x)",
        3,
        |o, [x, y, z]| { same(o.meet(o.meet(x, y), o.meet(z, x)), o.meet(y, o.meet(z, x))) }
    ),
    law!(
        "C3.11",
        QW,
        "x→(y∧(z∧x)) = (x→y)∧(x→z)",
        3,
        |o, [x, y, z]| {
            same(
                o.imp(x, o.meet(y, o.meet(z, x))),
                o.meet(o.imp(x, y), o.imp(x, z)),
            )
        }
    ),
    global!("T3.12", INVOLUTIVE, "QW holds iff QW1 and QW2 hold", |c| {
        let qw12 = c.witness(AxiomId::Qw1).or_else(|| c.witness(AxiomId::Qw2));
        equiv(c.witness(AxiomId::Qw), qw12)
    }),
    // Quantum-Wajsberg algebras.
    law!("P3.13-1", QW, "x→(y∧x) = x→y", 2, |o, [x, y, _]| {
        same(o.imp(x, o.meet(y, x)), o.imp(x, y))
    }),
    law!(
        "P3.13-2",
        QW,
        "x ≤_Q x*→y and x ≤_Q y→x",
        2,
        |o, [x, y, _]| { all([lq(o, x, o.imp(o.star(x), y)), lq(o, x, o.imp(y, x))]) }
    ),
    law!(
        "P3.13-3",
        QW,
        "x→y = 0 iff x = 1 and y = 0",
        2,
        |o, [x, y, _]| { truth((o.imp(x, y) == o.zero()) == (x == o.one() && y == o.zero())) }
    ),
    law!(
        "P3.13-4",
        QW,
        "(x→y)*∧x = (x→y)*",
        2,
        |o, [x, y, _]| {
            let s = o.star(o.imp(x, y));
            same(o.meet(s, x), s)
        }
    ),
    law!("P3.13-5", QW, "(x∧y)∧y = x∧y", 2, |o, [x, y, _]| {
        same(o.meet(o.meet(x, y), y), o.meet(x, y))
    }),
    law!(
        "P3.13-6",
        QW,
        "x∧y ≤_Q y ≤_Q x∨y",
        2,
        |o, [x, y, _]| { all([lq(o, o.meet(x, y), y), lq(o, y, o.join(x, y))]) }
    ),
    law!("P3.13-7", QW, "x∨(y∧x) = x", 2, |o, [x, y, _]| {
        same(o.join(x, o.meet(y, x)), x)
    }),
    law!("P3.13-8", QW, "x∧(y∨x) = x", 2, |o, [x, y, _]| {
        same(o.meet(x, o.join(y, x)), x)
    }),
    law!("P3.13-9", QW, "(x→y)→(y∧x) = x", 2, |o, [x, y, _]| {
        same(o.imp(o.imp(x, y), o.meet(y, x)), x)
    }),
    law!("P3.13-10", QW, "(x∨y)→y = x→y", 2, |o, [x, y, _]| {
        same(o.imp(o.join(x, y), y), o.imp(x, y))
    }),
    law!("P3.13-11", QW, "(x∨y)∨y = x∨y", 2, |o, [x, y, _]| {
        same(o.join(o.join(x, y), y), o.join(x, y))
    }),
    law!(
        "P3.13-12",
        QW,
        "x ≤ y iff y∧x = x",
        2,
        |o, [x, y, _]| { truth(o.leq(x, y) == (o.meet(y, x) == x)) }
    ),
    law!(
        "P3.14-1",
        QW,
        "x ≤_Q y implies y = y∨x",
        2,
        |o, [x, y, _]| { when(o.leq_q(x, y), same(o.join(y, x), y)) }
    ),
    law!(
        "P3.14-2",
        QW,
        "x ≤_Q y implies y* ≤_Q x*",
        2,
        |o, [x, y, _]| { when(o.leq_q(x, y), lq(o, o.star(y), o.star(x))) }
    ),
    law!(
        "P3.14-3",
        QW,
        "x ≤_Q y implies y→z ≤_Q x→z",
        3,
        |o, [x, y, z]| { when(o.leq_q(x, y), lq(o, o.imp(y, z), o.imp(x, z))) }
    ),
    law!(
        "P3.14-4",
        QW,
        "x ≤_Q y implies z→x ≤_Q z→y",
        3,
        |o, [x, y, z]| { when(o.leq_q(x, y), lq(o, o.imp(z, x), o.imp(z, y))) }
    ),
    law!(
        "P3.14-5",
        QW,
        "x ≤_Q y implies x∧z ≤_Q y∧z",
        3,
        |o, [x, y, z]| { when(o.leq_q(x, y), lq(o, o.meet(x, z), o.meet(y, z))) }
    ),
    law!(
        "P3.14-6",
        QW,
        "x ≤_Q y implies x∨z ≤_Q y∨z",
        3,
        |o, [x, y, z]| { when(o.leq_q(x, y), lq(o, o.join(x, z), o.join(y, z))) }
    ),
    law!(
        "P3.15-1",
        QW,
        "(x∧y)∧(y∧z) = (x∧y)∧z",
        3,
        |o, [x, y, z]| { same(o.meet(o.meet(x, y), o.meet(y, z)), o.meet(o.meet(x, y), z)) }
    ),
    law!("P3.15-2", QW, "≤_Q is transitive", 3, |o, [x, y, z]| {
        when(o.leq_q(x, y) && o.leq_q(y, z), lq(o, x, z))
    }),
    law!("P3.15-3", QW, "x∨y ≤_Q x*→y", 2, |o, [x, y, _]| {
        lq(o, o.join(x, y), o.imp(o.star(x), y))
    }),
    law!(
        "P3.15-4",
        QW,
        "(x*→y)*→(x→y*)* = x*→y",
        2,
        |o, [x, y, _]| {
            let l = o.imp(o.star(o.imp(o.star(x), y)), o.star(o.imp(x, o.star(y))));
            same(l, o.imp(o.star(x), y))
        }
    ),
    law!(
        "P3.15-5",
        QW,
        "(x→y)*→(y→x)* = x→y",
        2,
        |o, [x, y, _]| { same(o.imp(o.star(o.imp(x, y)), o.star(o.imp(y, x))), o.imp(x, y)) }
    ),
    law!(
        "P3.15-6",
        QW,
        "(y→x)→(x→y) = x→y",
        2,
        |o, [x, y, _]| { same(o.imp(o.imp(y, x), o.imp(x, y)), o.imp(x, y)) }
    ),
    law!("P3.15-7", QW, "(x→y)∨(y→x) = 1", 2, |o, [x, y, _]| {
        same(o.join(o.imp(x, y), o.imp(y, x)), o.one())
    }),
    law!(
        "P3.15-8",
        QW,
        "(z∧x)→(y∧x) = (z∧x)→y",
        3,
        |o, [x, y, z]| { same(o.imp(o.meet(z, x), o.meet(y, x)), o.imp(o.meet(z, x), y)) }
    ),
    law!(
        "C3.16",
        QW,
        "≤_Q is a partial order",
        3,
        |o, [x, y, z]| {
            all([
                lq(o, x, x),
                when(o.leq_q(x, y) && o.leq_q(y, x), truth(x == y)),
                when(o.leq_q(x, y) && o.leq_q(y, z), lq(o, x, z)),
            ])
        }
    ),
    // Wajsberg algebras.
    law!(
        "P4.4-1",
        WAJSBERG,
        "X is involutive: 0 ≤ x and x** = x",
        1,
        |o, [x, _, _]| { all([le(o, o.zero(), x), same(o.star(o.star(x)), x)]) }
    ),
    law!("P4.4-2", WAJSBERG, "x∧y = y∧x", 2, |o, [x, y, _]| {
        same(o.meet(x, y), o.meet(y, x))
    }),
    law!(
        "P4.4-3",
        WAJSBERG,
        "x ≤ y implies x ≤_Q y",
        2,
        |o, [x, y, _]| { when(o.leq(x, y), lq(o, x, y)) }
    ),
    law!(
        "P4.4-4",
        WAJSBERG,
        "≤ is transitive",
        3,
        |o, [x, y, z]| { when(o.leq(x, y) && o.leq(y, z), le(o, x, z)) }
    ),
    law!(
        "C4.5",
        WAJSBERG,
        "x ≤_Q y iff x ≤ y",
        2,
        |o, [x, y, _]| { truth(o.leq_q(x, y) == o.leq(x, y)) }
    ),
    law!(
        "P4.6-1",
        WAJSBERG,
        "(y∨x)→y = x→y",
        2,
        |o, [x, y, _]| { same(o.imp(o.join(y, x), y), o.imp(x, y)) }
    ),
    law!("P4.6-2", WAJSBERG, "x∧(x∨y) = x", 2, |o, [x, y, _]| {
        same(o.meet(x, o.join(x, y)), x)
    }),
    law!(
        "P4.6-3",
        WAJSBERG,
        "(y∨x)∨y = x∨y",
        2,
        |o, [x, y, _]| { same(o.join(o.join(y, x), y), o.join(x, y)) }
    ),
    law!(
        "P4.6-4",
        WAJSBERG,
        "(x∧y)∧z = y∧(x∧z)",
        3,
        |o, [x, y, z]| { same(o.meet(o.meet(x, y), z), o.meet(y, o.meet(x, z))) }
    ),
    law!(
        "P4.6-5",
        WAJSBERG,
        "x→((x∧y)∧x) = x→y",
        2,
        |o, [x, y, _]| { same(o.imp(x, o.meet(o.meet(x, y), x)), o.imp(x, y)) }
    ),
    law!("P4.6-6", WAJSBERG, "x∧(x*→y) = x", 2, |o, [x, y, _]| {
        same(o.meet(x, o.imp(o.star(x), y)), x)
    }),
    law!(
        "P4.6-7",
        WAJSBERG,
        "(x→y)→(x∧y) = x",
        2,
        |o, [x, y, _]| { same(o.imp(o.imp(x, y), o.meet(x, y)), x) }
    ),
    law!(
        "P4.6-8",
        WAJSBERG,
        "(z∧x)→(y∧x) = (z∧x)→y",
        3,
        |o, [x, y, z]| { same(o.imp(o.meet(z, x), o.meet(y, x)), o.imp(o.meet(z, x), y)) }
    ),
    law!(
        "P4.6-9",
        WAJSBERG,
        "(x→y)*∧x = (x→y)*",
        2,
        |o, [x, y, _]| {
            let s = o.star(o.imp(x, y));
            same(o.meet(s, x), s)
        }
    ),
    law!(
        "P4.6-10",
        WAJSBERG,
        "(x∧y)∧y = x∧y",
        2,
        |o, [x, y, _]| { same(o.meet(o.meet(x, y), y), o.meet(x, y)) }
    ),
    law!(
        "P4.6-11",
        WAJSBERG,
        "x∧y ≤_Q y ≤_Q x∨y",
        2,
        |o, [x, y, _]| { all([lq(o, o.meet(x, y), y), lq(o, y, o.join(x, y))]) }
    ),
    law!(
        "P4.6-12",
        WAJSBERG,
        "(x∧y)∧(y∧z) = (x∧y)∧z",
        3,
        |o, [x, y, z]| { same(o.meet(o.meet(x, y), o.meet(y, z)), o.meet(o.meet(x, y), z)) }
    ),
    global!(
        "T4.7",
        QW,
        "X is ∨-commutative iff x→y = (y∨x)→y and x ≤_Q x∨y",
        |c| {
            let o = c.ops;
            let b = c.scan(2, |[x, y, _]| {
                all([
                    same(o.imp(x, y), o.imp(o.join(y, x), y)),
                    lq(o, x, o.join(x, y)),
                ])
            });
            equiv(c.witness(AxiomId::VeeComm), b)
        }
    ),
    law!(
        "P4.8-1",
        WAJSBERG,
        "x ≤_Q y implies z→x ≤_Q z→y, y→z ≤_Q x→z and y* ≤_Q x*",
        3,
        |o, [x, y, z]| {
            when(
                o.leq_q(x, y),
                all([
                    lq(o, o.imp(z, x), o.imp(z, y)),
                    lq(o, o.imp(y, z), o.imp(x, z)),
                    lq(o, o.star(y), o.star(x)),
                ]),
            )
        }
    ),
    law!(
        "P4.8-2",
        WAJSBERG,
        "x ≤_Q y and x ≤_Q z imply x ≤_Q y∧z",
        3,
        |o, [x, y, z]| { when(o.leq_q(x, y) && o.leq_q(x, z), lq(o, x, o.meet(y, z))) }
    ),
    law!(
        "P4.8-3",
        WAJSBERG,
        "y ≤_Q x and z ≤_Q x imply y∨z ≤_Q x",
        3,
        |o, [x, y, z]| { when(o.leq_q(y, x) && o.leq_q(z, x), lq(o, o.join(y, z), x)) }
    ),
    law!(
        "P4.8-4",
        WAJSBERG,
        "x ≤_Q y implies x∨z ≤_Q y∨z and x∧z ≤_Q y∧z",
        3,
        |o, [x, y, z]| {
            when(
                o.leq_q(x, y),
                all([
                    lq(o, o.join(x, z), o.join(y, z)),
                    lq(o, o.meet(x, z), o.meet(y, z)),
                ]),
            )
        }
    ),
    law!(
        "P4.9",
        WAJSBERG,
        "x→(y∧z) = (x→y)∧(x→z)",
        3,
        |o, [x, y, z]| { same(o.imp(x, o.meet(y, z)), o.meet(o.imp(x, y), o.imp(x, z))) }
    ),
    law!("P4.11", WAJSBERG, "X satisfies (QW)", 3, |o, t| {
        AxiomId::Qw.eval(o, t).expect("complete tables never pend")
    }),
    global!(
        "T4.12",
        QW,
        "X is Wajsberg iff x ≤ y implies x ≤_Q y",
        |c| {
            let o = c.ops;
            let b = c.scan(2, |[x, y, _]| when(o.leq(x, y), lq(o, x, y)));
            equiv(c.failure(Requirement::Class(Class::Wajsberg)), b)
        }
    ),
    global!(
        "P4.13",
        WAJSBERG,
        "(X, ≤, →, 1) is a commutative quantum-B algebra",
        |c| {
            let report =
                check_quantum_b(c.ops, OrderRelation::Leq, None).expect("no second arrow given");
            let failure = report
                .reports()
                .find(|r| !r.holds)
                .map(|r| r.witness.clone());
            match failure {
                Some(w) => Err(w),
                None => Ok(()),
            }
        }
    ),
    // Quantum-MV algebras and the product signature.
    global!(
        "T5.1",
        INVOLUTIVE,
        "(QW) on X iff (Pqmv) on its product form",
        |c| { equiv(c.witness(AxiomId::Qw), ProductLaw::Pqmv.check(&Phi(c.ops))) }
    ),
    global!("R5.4-1", INVOLUTIVE, "(Pmv) iff (QW1)", |c| {
        equiv(c.witness(AxiomId::Pmv), c.witness(AxiomId::Qw1))
    }),
    global!("R5.4-2", INVOLUTIVE, "(Pq) iff (QW2)", |c| {
        equiv(c.witness(AxiomId::Pq), c.witness(AxiomId::Qw2))
    }),
    global!("R5.4-3", INVOLUTIVE, "(Pom) iff (OM)", |c| {
        equiv(c.witness(AxiomId::Pom), c.witness(AxiomId::Om))
    }),
    law!("P5.7", QW1_AN, "X is ∨-commutative", 2, |o, [x, y, _]| {
        same(o.join(x, y), o.join(y, x))
    }),
    global!(
        "T5.9",
        INVOLUTIVE,
        "(QW) and (An) hold iff X is ∨-commutative",
        |c| {
            let qw_an = c.witness(AxiomId::Qw).or_else(|| c.witness(AxiomId::An));
            equiv(qw_an, c.witness(AxiomId::VeeComm))
        }
    ),
    law!(
        "P5.8-1",
        QMV,
        "x⊙(x*∨y) = x⊙y and x⊙(y∨x*) = x⊙y",
        2,
        |o, [x, y, _]| {
            let sx = o.star(x);
            all([
                same(o.prod(x, o.join_m(sx, y)), o.prod(x, y)),
                same(o.prod(x, o.join_m(y, sx)), o.prod(x, y)),
            ])
        }
    ),
    law!(
        "P5.8-2",
        QMV,
        "x⊙y ≤ₘᴹ x ≤ₘᴹ x⊕y",
        2,
        |o, [x, y, _]| { all([lmm(o, o.prod(x, y), x), lmm(o, x, o.osum(x, y))]) }
    ),
    law!(
        "P5.8-3",
        QMV,
        "x⊙y = 1 iff x = y = 1, and x⊕y = 0 iff x = y = 0",
        2,
        |o, [x, y, _]| {
            let (zero, one) = (o.zero(), o.one());
            all([
                truth((o.prod(x, y) == one) == (x == one && y == one)),
                truth((o.osum(x, y) == zero) == (x == zero && y == zero)),
            ])
        }
    ),
    law!(
        "P5.8-4",
        QMV,
        "x∨(x⊙y) = x and x∧(x⊕y) = x",
        2,
        |o, [x, y, _]| {
            all([
                same(o.join_m(x, o.prod(x, y)), x),
                same(o.meet_m(x, o.osum(x, y)), x),
            ])
        }
    ),
    law!(
        "P5.8-5",
        QMV,
        "x⊙(y∨(z∨x*)) = (x⊙y)∨(x⊙z)",
        3,
        |o, [x, y, z]| {
            same(
                o.prod(x, o.join_m(y, o.join_m(z, o.star(x)))),
                o.join_m(o.prod(x, y), o.prod(x, z)),
            )
        }
    ),
    law!(
        "P5.8-6",
        QMV,
        "(x⊕y)⊕(x⊙y) = x⊕y and (x⊙y)⊙(x⊕y) = x⊙y",
        2,
        |o, [x, y, _]| {
            let (s, p) = (o.osum(x, y), o.prod(x, y));
            all([same(o.osum(s, p), s), same(o.prod(p, s), p)])
        }
    ),
    law!(
        "P5.8-7",
        QMV,
        "(x*⊕y)∨(y*⊕x) = 1 and (x⊙y*)∧(y⊙x*) = 0",
        2,
        |o, [x, y, _]| {
            let (sx, sy) = (o.star(x), o.star(y));
            all([
                same(o.join_m(o.osum(sx, y), o.osum(sy, x)), o.one()),
                same(o.meet_m(o.prod(x, sy), o.prod(y, sx)), o.zero()),
            ])
        }
    ),
    law!(
        "P5.8-8",
        QMV,
        "(z∧x)*⊕(y∧x) = (z∧x)*⊕y and (z∧x)⊙(y∧x)* = (z∧x)⊙y*",
        3,
        |o, [x, y, z]| {
            let zx = o.meet_m(z, x);
            let yx = o.meet_m(y, x);
            all([
                same(o.osum(o.star(zx), yx), o.osum(o.star(zx), y)),
                same(o.prod(zx, o.star(yx)), o.prod(zx, o.star(y))),
            ])
        }
    ),
    law!(
        "P5.9",
        QW_SELF_DISTRIBUTIVE,
        "the product form satisfies (MV′)",
        2,
        |o, t| {
            AxiomId::MvPrime
                .eval(o, t)
                .expect("complete tables never pend")
        }
    ),
    law!(
        "P5.10-1",
        QMV,
        "x ≤ₘᴹ y implies x⊕z ≤ₘᴹ y⊕z",
        3,
        |o, [x, y, z]| { when(o.le_mm(x, y), lmm(o, o.osum(x, z), o.osum(y, z))) }
    ),
    law!(
        "P5.10-2",
        QMV,
        "x ≤ₘᴹ y implies x⊙z ≤ₘᴹ y⊙z",
        3,
        |o, [x, y, z]| { when(o.le_mm(x, y), lmm(o, o.prod(x, z), o.prod(y, z))) }
    ),
    global!(
        "T5.11",
        QMV,
        "X is MV iff x ≤ₘ y implies x ≤ₘᴹ y",
        |c| {
            let o = c.ops;
            let b = c.scan(2, |[x, y, _]| when(o.le_m(x, y), lmm(o, x, y)));
            equiv(c.failure(Requirement::Class(Class::Mv)), b)
        }
    ),
    global!(
        "T5.12",
        QMV,
        "x∧(x∨y) = x and (y*∨x)⊙y = x⊙y for all x, y imply (MV′)",
        |c| {
            let o = c.ops;
            let hyp = c.scan(2, |[x, y, _]| {
                all([
                    same(o.meet_m(x, o.join_m(x, y)), x),
                    same(o.prod(o.join_m(o.star(y), x), y), o.prod(x, y)),
                ])
            });
            implies(hyp, c.witness(AxiomId::MvPrime))
        }
    ),
    global!(
        "T5.13",
        QMV,
        "x⊙(y⊙z) = (x⊙y*)*⊙(x⊙z) for all x, y, z implies (MV′)",
        |c| {
            let o = c.ops;
            let hyp = c.scan(3, |[x, y, z]| {
                same(
                    o.prod(x, o.prod(y, z)),
                    o.prod(o.star(o.prod(x, o.star(y))), o.prod(x, z)),
                )
            });
            implies(hyp, c.witness(AxiomId::MvPrime))
        }
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|e| e.id).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            verify(&FiniteAlgebra::trivial(), "P9.9"),
            Err(UnknownTheorem("P9.9".into()))
        );
    }

    #[test]
    fn trivial_algebra_satisfies_everything() {
        for r in verify_all(&FiniteAlgebra::trivial()) {
            assert!(r.applicable && r.holds, "{r:?}");
        }
    }

    #[test]
    fn registry_holds_on_implication_fixtures() {
        for alg in fixtures::implication_fixtures() {
            for r in verify_all(&alg) {
                assert!(r.holds, "{} fails: {r:?}", r.id);
            }
        }
    }

    #[test]
    fn gating_follows_classification() {
        let r = verify(&fixtures::remark_3_6(), "P3.13-2").unwrap();
        assert!(!r.applicable && r.holds && r.witness.is_none());
        let r = verify(&fixtures::example_3_19(), "P3.15-7").unwrap();
        assert!(r.applicable && r.holds);
        let r = verify(&fixtures::example_3_19(), "P4.9").unwrap();
        assert!(!r.applicable);
        let r = verify(&fixtures::example_4_14(), "P4.9").unwrap();
        assert!(r.applicable && r.holds);
    }

    #[test]
    fn ungated_law_reports_reproducible_witness() {
        // QW-only statements fail on an involutive algebra outside QW.
        let alg = fixtures::remark_3_6();
        let ops = alg.derive();
        let classes = classify_ops(&ops);
        let entry = lookup("P3.15-2").unwrap();
        let forced = TheoremEntry {
            requires: INVOLUTIVE,
            ..*entry
        };
        let r = forced.check(&ops, &classes);
        assert!(r.applicable && !r.holds);
        assert!(forced.reproduces(&ops, &classes, &r));
        let w = r.witness.unwrap();
        assert_eq!(w.tuple.len(), 3);
    }
}
