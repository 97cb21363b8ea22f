//! Axiom checking with first-failure witnesses.
//!
//! Every axiom is a universally quantified condition of arity at most three.
//! Checking scans all tuples in lexicographic order (first coordinate
//! outermost) and reports the first failing tuple, so witnesses are
//! reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{check_table, AlgebraError, Elem, FiniteAlgebra};
use crate::ops::{DerivedOps, Eval, ImplicationOps, Phi, ProductOps};

/// Outcome of evaluating a law at one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The law fails. For equations `sides` holds the two evaluated sides;
    /// for inequalities `l ≤ r` it holds `(l, r)`.
    Fails(Option<(Elem, Elem)>),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

pub(crate) fn same(l: Elem, r: Elem) -> Verdict {
    if l == r {
        Verdict::Holds
    } else {
        Verdict::Fails(Some((l, r)))
    }
}

pub(crate) fn truth(b: bool) -> Verdict {
    if b {
        Verdict::Holds
    } else {
        Verdict::Fails(None)
    }
}

fn le<O: ImplicationOps + ?Sized>(o: &O, l: Elem, r: Elem) -> Eval<Verdict> {
    Ok(if o.leq(l, r)? {
        Verdict::Holds
    } else {
        Verdict::Fails(Some((l, r)))
    })
}

/// Both verdicts must hold; the first failure is reported.
fn both(a: Verdict, b: impl FnOnce() -> Eval<Verdict>) -> Eval<Verdict> {
    if a.holds() {
        b()
    } else {
        Ok(a)
    }
}

/// A failing tuple, with the evaluated sides when the law is an equation or
/// an inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<Elem>,
    pub sides: Option<(Elem, Elem)>,
}

/// Number of tuples of the given arity over `order` elements.
fn tuple_count(order: usize, arity: usize) -> usize {
    order.pow(arity as u32)
}

/// The `index`-th tuple in lexicographic order, padded with zeros.
pub(crate) fn nth_tuple(order: usize, arity: usize, mut index: usize) -> [Elem; 3] {
    let mut t = [0; 3];
    for slot in (0..arity).rev() {
        t[slot] = (index % order) as Elem;
        index /= order;
    }
    t
}

/// Scans all tuples lexicographically and returns the first failure.
pub(crate) fn first_failure(
    order: usize,
    arity: usize,
    mut law: impl FnMut([Elem; 3]) -> Verdict,
) -> Option<Witness> {
    (0..tuple_count(order, arity)).find_map(|i| {
        let t = nth_tuple(order, arity, i);
        match law(t) {
            Verdict::Holds => None,
            Verdict::Fails(sides) => Some(Witness {
                tuple: t[..arity].to_vec(),
                sides,
            }),
        }
    })
}

macro_rules! named_enum {
    (
        $(#[$meta:meta])*
        pub enum $name:ident { $($variant:ident => $text:literal $(| $alias:literal)*,)* }
    ) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name { $($variant,)* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $text,)* }
            }

            fn lookup(s: &str) -> Option<Self> {
                $(
                    if s.eq_ignore_ascii_case($text) $(|| s.eq_ignore_ascii_case($alias))* {
                        return Some($name::$variant);
                    }
                )*
                None
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.name())
            }
        }
    };
}

named_enum! {
    /// Laws over the product signature `(X, ⊙, *, 1)`.
    pub enum ProductLaw {
        Pu => "PU",
        Pcomm => "Pcomm",
        Pass => "Pass",
        ML => "mL",
        MRe => "mRe",
        Dn => "DN",
        MAn => "mAn",
        Pqmv => "Pqmv",
        Pmv => "Pmv",
        Pq => "Pq",
        Pom => "Pom",
        MvPrime => "MVprime" | "MV'",
        S1 => "S1",
        S2 => "S2",
        S3 => "S3",
        S4 => "S4",
        S5 => "S5",
        S6 => "S6",
        S7 => "S7",
        SAntisym => "Santisym",
    }
}

impl ProductLaw {
    /// The laws of an involutive m-BE algebra.
    pub const MBE: &'static [ProductLaw] = &[
        ProductLaw::Pu,
        ProductLaw::Pcomm,
        ProductLaw::Pass,
        ProductLaw::ML,
        ProductLaw::MRe,
        ProductLaw::Dn,
    ];

    pub fn arity(self) -> usize {
        use ProductLaw::*;
        match self {
            S6 => 0,
            Pu | ML | MRe | Dn | S3 | S4 | S5 | S7 => 1,
            Pcomm | MAn | Pmv | Pom | MvPrime | S1 | SAntisym => 2,
            Pass | Pqmv | Pq | S2 => 3,
        }
    }

    pub fn formula(self) -> &'static str {
        use ProductLaw::*;
        match self {
            Pu => "1⊙x = x = x⊙1",
            Pcomm => "x⊙y = y⊙x",
            Pass => "x⊙(y⊙z) = (x⊙y)⊙z",
            ML => "x⊙0 = 0",
            MRe => "x⊙x* = 0",
            Dn => "x** = x",
            MAn => "x⊙y* = 0 and y⊙x* = 0 imply x = y",
            Pqmv => "x⊙((x*∨y)∨(z∨x*)) = (x⊙y)∨(x⊙z)",
            Pmv => "x⊙(x*∨y) = x⊙y",
            Pq => "x⊙(y∨(z∨x*)) = (x⊙y)∨(x⊙z)",
            Pom => "x∨(x⊙y) = x",
            MvPrime => "(x*⊙y)*⊙y = (y*⊙x)*⊙x",
            S1 => "x⊕y = y⊕x",
            S2 => "x⊕(y⊕z) = (x⊕y)⊕z",
            S3 => "x⊕x* = 1",
            S4 => "x⊕0 = x",
            S5 => "x** = x",
            S6 => "0* = 1",
            S7 => "x⊕1 = 1",
            SAntisym => "x ≤ₘᴹ y and y ≤ₘᴹ x imply x = y",
        }
    }

    /// Evaluates the law at `t`; `∧`, `∨` are the product-side `∧ₘ`, `∨ₘ`.
    pub fn eval<P: ProductOps + ?Sized>(self, p: &P, t: [Elem; 3]) -> Eval<Verdict> {
        use ProductLaw::*;
        let [x, y, z] = t;
        let one = p.one();
        Ok(match self {
            Pu => {
                return both(same(p.prod(one, x)?, x), || Ok(same(p.prod(x, one)?, x)));
            }
            Pcomm => same(p.prod(x, y)?, p.prod(y, x)?),
            Pass => same(p.prod(x, p.prod(y, z)?)?, p.prod(p.prod(x, y)?, z)?),
            ML => same(p.prod(x, p.zero()?)?, p.zero()?),
            MRe => same(p.prod(x, p.star(x)?)?, p.zero()?),
            Dn | S5 => same(p.star(p.star(x)?)?, x),
            MAn => {
                let zero = p.zero()?;
                if p.prod(x, p.star(y)?)? == zero && p.prod(y, p.star(x)?)? == zero {
                    truth(x == y)
                } else {
                    Verdict::Holds
                }
            }
            Pqmv => {
                let sx = p.star(x)?;
                let inner = p.join_m(p.join_m(sx, y)?, p.join_m(z, sx)?)?;
                same(p.prod(x, inner)?, p.join_m(p.prod(x, y)?, p.prod(x, z)?)?)
            }
            Pmv => same(p.prod(x, p.join_m(p.star(x)?, y)?)?, p.prod(x, y)?),
            Pq => {
                let inner = p.join_m(y, p.join_m(z, p.star(x)?)?)?;
                same(p.prod(x, inner)?, p.join_m(p.prod(x, y)?, p.prod(x, z)?)?)
            }
            Pom => same(p.join_m(x, p.prod(x, y)?)?, x),
            MvPrime => {
                let l = p.prod(p.star(p.prod(p.star(x)?, y)?)?, y)?;
                let r = p.prod(p.star(p.prod(p.star(y)?, x)?)?, x)?;
                same(l, r)
            }
            S1 => same(p.osum(x, y)?, p.osum(y, x)?),
            S2 => same(p.osum(x, p.osum(y, z)?)?, p.osum(p.osum(x, y)?, z)?),
            S3 => same(p.osum(x, p.star(x)?)?, one),
            S4 => same(p.osum(x, p.zero()?)?, x),
            S6 => same(p.star(p.zero()?)?, one),
            S7 => same(p.osum(x, one)?, one),
            SAntisym => {
                if p.le_mm(x, y)? && p.le_mm(y, x)? {
                    truth(x == y)
                } else {
                    Verdict::Holds
                }
            }
        })
    }

    /// Checks the law exhaustively over a complete product structure.
    pub fn check<P: ProductOps + ?Sized>(self, p: &P) -> Option<Witness> {
        first_failure(p.order(), self.arity(), |t| {
            self.eval(p, t).expect("complete tables never pend")
        })
    }
}

impl FromStr for ProductLaw {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::lookup(s.trim()).ok_or_else(|| UnknownName::new("product law", s))
    }
}

named_enum! {
    /// Every axiom the engine can decide.
    pub enum AxiomId {
        Be1 => "BE1",
        Be2 => "BE2",
        Be3 => "BE3",
        Be4 => "BE4",
        Bounded => "bounded",
        Involutive => "DN" | "involutive",
        Bck1 => "BCK1",
        An => "An" | "BCK4",
        SelfDistributive => "selfDistributive",
        VeeComm => "veeComm" | "W3",
        W1 => "W1",
        W2 => "W2",
        W4 => "W4",
        Qw => "QW",
        Qw1 => "QW1",
        Qw2 => "QW2",
        Om => "OM",
        SAntisym => "Santisym",
        S1 => "S1",
        S2 => "S2",
        S3 => "S3",
        S4 => "S4",
        S5 => "S5",
        S6 => "S6",
        S7 => "S7",
        MvPrime => "MVprime" | "MV'",
        Pqmv => "Pqmv",
        Pmv => "Pmv",
        Pq => "Pq",
        Pom => "Pom",
        Pu => "PU",
        Pcomm => "Pcomm",
        Pass => "Pass",
        ML => "mL",
        MRe => "mRe",
        MAn => "mAn",
        Qb1 => "QB1",
        Qb2 => "QB2",
        Qb3 => "QB3",
        Qb4 => "QB4",
        LeqTransitive => "leqTransitive",
        LeqQReflexive => "leqQReflexive",
        LeqQAntisymmetric => "leqQAntisymmetric",
        LeqQTransitive => "leqQTransitive",
    }
}

impl FromStr for AxiomId {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::lookup(s.trim()).ok_or_else(|| UnknownName::new("axiom", s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} `{name}`")]
pub struct UnknownName {
    pub kind: &'static str,
    pub name: String,
}

impl UnknownName {
    pub(crate) fn new(kind: &'static str, name: &str) -> Self {
        Self {
            kind,
            name: name.trim().to_string(),
        }
    }
}

impl AxiomId {
    /// The equivalent product-signature law, for axioms stated over `⊙`/`⊕`.
    pub fn product_law(self) -> Option<ProductLaw> {
        use AxiomId::*;
        Some(match self {
            SAntisym => ProductLaw::SAntisym,
            S1 => ProductLaw::S1,
            S2 => ProductLaw::S2,
            S3 => ProductLaw::S3,
            S4 => ProductLaw::S4,
            S5 => ProductLaw::S5,
            S6 => ProductLaw::S6,
            S7 => ProductLaw::S7,
            MvPrime => ProductLaw::MvPrime,
            Pqmv => ProductLaw::Pqmv,
            Pmv => ProductLaw::Pmv,
            Pq => ProductLaw::Pq,
            Pom => ProductLaw::Pom,
            Pu => ProductLaw::Pu,
            Pcomm => ProductLaw::Pcomm,
            Pass => ProductLaw::Pass,
            ML => ProductLaw::ML,
            MRe => ProductLaw::MRe,
            MAn => ProductLaw::MAn,
            _ => return None,
        })
    }

    pub fn arity(self) -> usize {
        use AxiomId::*;
        if let Some(law) = self.product_law() {
            return law.arity();
        }
        match self {
            Be1 | Be2 | Be3 | Bounded | Involutive | W1 | LeqQReflexive => 1,
            An | VeeComm | W4 | Qw1 | Om | LeqQAntisymmetric => 2,
            _ => 3,
        }
    }

    pub fn formula(self) -> &'static str {
        use AxiomId::*;
        if let Some(law) = self.product_law() {
            return law.formula();
        }
        match self {
            Be1 => "x→x = 1",
            Be2 => "x→1 = 1",
            Be3 | W1 => "1→x = x",
            Be4 => "x→(y→z) = y→(x→z)",
            Bounded => "0→x = 1",
            Involutive => "x** = x",
            Bck1 => "(x→y)→((y→z)→(x→z)) = 1",
            An => "x→y = 1 and y→x = 1 imply x = y",
            SelfDistributive => "x→(y→z) = (x→y)→(x→z)",
            VeeComm => "(x→y)→y = (y→x)→x",
            W2 => "(y→z)→((z→x)→(y→x)) = 1",
            W4 => "(x*→y*)→(y→x) = 1",
            Qw => "x→((x∧y)∧(z∧x)) = (x→y)∧(x→z)",
            Qw1 => "x→(x∧y) = x→y",
            Qw2 => "x→(y∧(z∧x)) = (x→y)∧(x→z)",
            Om => "x∧(y→x) = x",
            Qb1 => "y→z ≤ (x→y)→(x→z)",
            Qb2 => "y⇝z ≤ (x⇝y)⇝(x⇝z)",
            Qb3 => "y ≤ z implies x→y ≤ x→z",
            Qb4 => "x ≤ y→z iff y ≤ x⇝z",
            LeqTransitive => "x ≤ y and y ≤ z imply x ≤ z",
            LeqQReflexive => "x ≤_Q x",
            LeqQAntisymmetric => "x ≤_Q y and y ≤_Q x imply x = y",
            LeqQTransitive => "x ≤_Q y and y ≤_Q z imply x ≤_Q z",
            _ => unreachable!("product laws handled above"),
        }
    }

    /// Evaluates the axiom at `t` (unused coordinates are ignored).
    ///
    /// The quantum-B axioms use the commutative instantiation `⇝ = →` and the
    /// relation `≤`; see [`check_quantum_b`] for other choices.
    pub fn eval<O: ImplicationOps + ?Sized>(self, o: &O, t: [Elem; 3]) -> Eval<Verdict> {
        use AxiomId::*;
        if let Some(law) = self.product_law() {
            return law.eval(&Phi(o), t);
        }
        let [x, y, z] = t;
        let one = o.one();
        Ok(match self {
            Be1 => same(o.imp(x, x)?, one),
            Be2 => same(o.imp(x, one)?, one),
            Be3 | W1 => same(o.imp(one, x)?, x),
            Be4 => same(o.imp(x, o.imp(y, z)?)?, o.imp(y, o.imp(x, z)?)?),
            Bounded => same(o.imp(o.zero()?, x)?, one),
            Involutive => same(o.star(o.star(x)?)?, x),
            Bck1 => {
                let l = o.imp(x, y)?;
                let r = o.imp(o.imp(y, z)?, o.imp(x, z)?)?;
                same(o.imp(l, r)?, one)
            }
            An => {
                if o.leq(x, y)? && o.leq(y, x)? {
                    truth(x == y)
                } else {
                    Verdict::Holds
                }
            }
            SelfDistributive => same(o.imp(x, o.imp(y, z)?)?, o.imp(o.imp(x, y)?, o.imp(x, z)?)?),
            VeeComm => same(o.join(x, y)?, o.join(y, x)?),
            W2 => {
                let l = o.imp(y, z)?;
                let r = o.imp(o.imp(z, x)?, o.imp(y, x)?)?;
                same(o.imp(l, r)?, one)
            }
            W4 => {
                let l = o.imp(o.star(x)?, o.star(y)?)?;
                same(o.imp(l, o.imp(y, x)?)?, one)
            }
            Qw => {
                let inner = o.meet(o.meet(x, y)?, o.meet(z, x)?)?;
                same(o.imp(x, inner)?, o.meet(o.imp(x, y)?, o.imp(x, z)?)?)
            }
            Qw1 => same(o.imp(x, o.meet(x, y)?)?, o.imp(x, y)?),
            Qw2 => {
                let inner = o.meet(y, o.meet(z, x)?)?;
                same(o.imp(x, inner)?, o.meet(o.imp(x, y)?, o.imp(x, z)?)?)
            }
            Om => same(o.meet(x, o.imp(y, x)?)?, x),
            Qb1 | Qb2 => {
                let r = o.imp(o.imp(x, y)?, o.imp(x, z)?)?;
                le(o, o.imp(y, z)?, r)?
            }
            Qb3 => {
                if o.leq(y, z)? {
                    le(o, o.imp(x, y)?, o.imp(x, z)?)?
                } else {
                    Verdict::Holds
                }
            }
            Qb4 => truth(o.leq(x, o.imp(y, z)?)? == o.leq(y, o.imp(x, z)?)?),
            LeqTransitive => {
                if o.leq(x, y)? && o.leq(y, z)? {
                    le(o, x, z)?
                } else {
                    Verdict::Holds
                }
            }
            LeqQReflexive => same(o.meet(x, x)?, x),
            LeqQAntisymmetric => {
                if o.leq_q(x, y)? && o.leq_q(y, x)? {
                    truth(x == y)
                } else {
                    Verdict::Holds
                }
            }
            LeqQTransitive => {
                if o.leq_q(x, y)? && o.leq_q(y, z)? {
                    truth(o.leq_q(x, z)?)
                } else {
                    Verdict::Holds
                }
            }
            _ => unreachable!("product laws handled above"),
        })
    }

    /// Checks the axiom exhaustively.
    pub fn check(self, ops: &DerivedOps) -> AxiomReport {
        let witness = first_failure(ops.order(), self.arity(), |t| {
            self.eval(ops, t).expect("complete tables never pend")
        });
        AxiomReport {
            axiom: self,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// The verdict for one axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    /// Re-evaluates the axiom at the witness and confirms the recorded failure.
    pub fn reproduces(&self, ops: &DerivedOps) -> bool {
        match &self.witness {
            None => self.holds,
            Some(w) => {
                let mut t = [0; 3];
                t[..w.tuple.len()].copy_from_slice(&w.tuple);
                !self.holds && self.axiom.eval(ops, t) == Ok(Verdict::Fails(w.sides))
            }
        }
    }
}

pub fn check_axiom(algebra: &FiniteAlgebra, axiom: AxiomId) -> AxiomReport {
    axiom.check(&algebra.derive())
}

named_enum! {
    /// Composite classes, each a conjunction of axioms.
    pub enum Class {
        Be => "BE",
        BoundedBe => "boundedBE",
        InvolutiveBe => "involutiveBE",
        Bck => "BCK",
        Wajsberg => "Wajsberg",
        Qw => "QW",
        Qmv => "QMV",
        Mv => "MV",
        CommutativeQuantumB => "commutativeQuantumB" | "quantumB",
    }
}

impl FromStr for Class {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::lookup(s.trim()).ok_or_else(|| UnknownName::new("class", s))
    }
}

impl Class {
    pub fn axioms(self) -> &'static [AxiomId] {
        use AxiomId::*;
        match self {
            Class::Be => &[Be1, Be2, Be3, Be4],
            Class::BoundedBe => &[Be1, Be2, Be3, Be4, Bounded],
            Class::InvolutiveBe => &[Be1, Be2, Be3, Be4, Bounded, Involutive],
            Class::Bck => &[Be1, Be2, Be3, Be4, Bck1, An],
            Class::Wajsberg => &[W1, W2, VeeComm, W4],
            Class::Qw => &[Be1, Be2, Be3, Be4, Bounded, Involutive, Qw],
            Class::Qmv => &[Be1, Be2, Be3, Be4, Bounded, Involutive, Pqmv],
            Class::Mv => &[Be1, Be2, Be3, Be4, Bounded, Involutive, MvPrime],
            Class::CommutativeQuantumB => &[Be1, An, LeqTransitive, Qb1, Qb2, Qb3, Qb4],
        }
    }
}

/// A satisfy/refute target: a single axiom or a composite class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Requirement {
    Axiom(AxiomId),
    Class(Class),
}

impl Requirement {
    pub fn axioms(&self) -> &[AxiomId] {
        match self {
            Requirement::Axiom(a) => std::slice::from_ref(a),
            Requirement::Class(c) => c.axioms(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Requirement::Axiom(a) => a.name(),
            Requirement::Class(c) => c.name(),
        }
    }

    /// True when every constituent axiom holds according to `holds`.
    pub fn holds_by(&self, mut holds: impl FnMut(AxiomId) -> bool) -> bool {
        self.axioms().iter().all(|&a| holds(a))
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Requirement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Class names win over axiom names, so `QW` means the class.
impl FromStr for Requirement {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(c) = s.parse() {
            return Ok(Requirement::Class(c));
        }
        s.parse()
            .map(Requirement::Axiom)
            .map_err(|_| UnknownName::new("axiom or class", s))
    }
}

/// Parses a comma-separated list of requirements. Empty items are skipped.
pub fn parse_requirements(list: &str) -> Result<Vec<Requirement>, UnknownName> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

/// Every axiom verdict plus the composite classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub axioms: BTreeMap<AxiomId, AxiomReport>,
    pub classes: BTreeMap<Class, bool>,
}

impl ClassificationReport {
    pub fn holds(&self, axiom: AxiomId) -> bool {
        self.axioms[&axiom].holds
    }

    pub fn is(&self, class: Class) -> bool {
        self.classes[&class]
    }

    pub fn satisfies(&self, req: &Requirement) -> bool {
        req.holds_by(|a| self.holds(a))
    }
}

pub fn classify(algebra: &FiniteAlgebra) -> ClassificationReport {
    classify_ops(&algebra.derive())
}

pub fn classify_ops(ops: &DerivedOps) -> ClassificationReport {
    let axioms: BTreeMap<_, _> = AxiomId::ALL.iter().map(|&a| (a, a.check(ops))).collect();
    let classes = Class::ALL
        .iter()
        .map(|&c| (c, c.axioms().iter().all(|a| axioms[a].holds)))
        .collect();
    ClassificationReport { axioms, classes }
}

/// Which relation plays the partial order in a quantum-B check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrderRelation {
    /// `x ≤ y` iff `x → y = 1`
    #[serde(rename = "leq")]
    Leq,
    /// `x ≤_Q y` iff `x = x ∧ y`
    #[serde(rename = "leq_q")]
    LeqQ,
}

impl FromStr for OrderRelation {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "leq" | "<=" => Ok(OrderRelation::Leq),
            "leq_q" | "leqQ" | "<=_Q" => Ok(OrderRelation::LeqQ),
            other => Err(UnknownName::new("order relation", other)),
        }
    }
}

/// Result of checking the quantum-B axioms. The poset requirement is
/// reported alongside the four axioms rather than gating them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumBReport {
    pub order: OrderRelation,
    /// True when no second arrow was supplied (`⇝ = →`).
    pub commutative: bool,
    pub reflexive: AxiomReport,
    pub antisymmetric: AxiomReport,
    pub transitive: AxiomReport,
    /// QB1 to QB4, in order.
    pub axioms: Vec<AxiomReport>,
}

impl QuantumBReport {
    pub fn is_poset(&self) -> bool {
        self.reflexive.holds && self.antisymmetric.holds && self.transitive.holds
    }

    pub fn holds(&self) -> bool {
        self.is_poset() && self.axioms.iter().all(|r| r.holds)
    }

    pub fn reports(&self) -> impl Iterator<Item = &AxiomReport> {
        [&self.reflexive, &self.antisymmetric, &self.transitive]
            .into_iter()
            .chain(&self.axioms)
    }
}

struct QuantumBView<'a> {
    ops: &'a DerivedOps,
    order: OrderRelation,
    arrow2: Option<&'a [Elem]>,
}

impl QuantumBView<'_> {
    fn le(&self, a: Elem, b: Elem) -> bool {
        match self.order {
            OrderRelation::Leq => self.ops.leq(a, b),
            OrderRelation::LeqQ => self.ops.leq_q(a, b),
        }
    }

    fn le_verdict(&self, a: Elem, b: Elem) -> Verdict {
        if self.le(a, b) {
            Verdict::Holds
        } else {
            Verdict::Fails(Some((a, b)))
        }
    }

    fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.ops.imp(a, b)
    }

    fn imp2(&self, a: Elem, b: Elem) -> Elem {
        match self.arrow2 {
            Some(t) => t[a as usize * self.ops.order() + b as usize],
            None => self.ops.imp(a, b),
        }
    }

    fn eval(&self, axiom: AxiomId, [x, y, z]: [Elem; 3]) -> Verdict {
        use AxiomId::*;
        match axiom {
            Qb1 => self.le_verdict(self.imp(y, z), self.imp(self.imp(x, y), self.imp(x, z))),
            Qb2 => self.le_verdict(self.imp2(y, z), self.imp2(self.imp2(x, y), self.imp2(x, z))),
            Qb3 if self.le(y, z) => self.le_verdict(self.imp(x, y), self.imp(x, z)),
            Qb3 => Verdict::Holds,
            Qb4 => truth(self.le(x, self.imp(y, z)) == self.le(y, self.imp2(x, z))),
            Be1 | LeqQReflexive => truth(self.le(x, x)),
            An | LeqQAntisymmetric if self.le(x, y) && self.le(y, x) => truth(x == y),
            LeqTransitive | LeqQTransitive if self.le(x, y) && self.le(y, z) => {
                self.le_verdict(x, z)
            }
            An | LeqQAntisymmetric | LeqTransitive | LeqQTransitive => Verdict::Holds,
            other => unreachable!("{other} is not a quantum-B law"),
        }
    }

    fn check(&self, axiom: AxiomId) -> AxiomReport {
        let witness = first_failure(self.ops.order(), axiom.arity(), |t| self.eval(axiom, t));
        AxiomReport {
            axiom,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Checks QB1 to QB4 and the poset conditions for the chosen relation.
///
/// Without `second_arrow` the commutative instantiation `⇝ = →` is used.
/// `second_arrow` is a row-major table of the same order as `ops`.
pub fn check_quantum_b(
    ops: &DerivedOps,
    order: OrderRelation,
    second_arrow: Option<&[Elem]>,
) -> Result<QuantumBReport, AlgebraError> {
    if let Some(t) = second_arrow {
        check_table(ops.order(), t)?;
    }
    let view = QuantumBView {
        ops,
        order,
        arrow2: second_arrow,
    };
    let (refl, anti, trans) = match order {
        OrderRelation::Leq => (AxiomId::Be1, AxiomId::An, AxiomId::LeqTransitive),
        OrderRelation::LeqQ => (
            AxiomId::LeqQReflexive,
            AxiomId::LeqQAntisymmetric,
            AxiomId::LeqQTransitive,
        ),
    };
    Ok(QuantumBReport {
        order,
        commutative: second_arrow.is_none(),
        reflexive: view.check(refl),
        antisymmetric: view.check(anti),
        transitive: view.check(trans),
        axioms: [AxiomId::Qb1, AxiomId::Qb2, AxiomId::Qb3, AxiomId::Qb4]
            .iter()
            .map(|&a| view.check(a))
            .collect(),
    })
}
