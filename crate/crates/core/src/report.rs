//! Structured reports with a human-readable rendering.
//!
//! Every builder recomputes what it reports and re-evaluates each witness
//! against the input before handing the document back, so a
//! [`ReportDocument`] never carries a witness that does not reproduce.

use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Elem, ElementSubset, FiniteAlgebra};
use crate::axioms::{
    check_quantum_b, classify_ops, AxiomId, AxiomReport, Class, ClassificationReport,
    OrderRelation, QuantumBReport, Requirement, Witness,
};
use crate::format::{self, ParsedAlgebra};
use crate::search::{find_isomorphism, CanonicalForm, Completeness, Counterexample, ModelStream};
use crate::structures::{self, StructureError};
use crate::theorems::{self, TheoremResult, UnknownTheorem};
use crate::transforms::{self, EquivalenceReport, ProductAlgebra, TransformError};

pub const SCHEMA: &str = "qwalg-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    UnknownTheorem(#[from] UnknownTheorem),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("element `{0}` is not in the algebra")]
    UnknownElement(String),
    /// A recomputed result disagreed with the one about to be emitted.
    #[error("{0} did not reproduce on re-evaluation")]
    Unreproducible(String),
}

fn confirm(ok: bool, what: impl fmt::Display) -> Result<(), ReportError> {
    if ok {
        Ok(())
    } else {
        Err(ReportError::Unreproducible(what.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Body {
    Check(CheckReport),
    Classify(ClassifyReport),
    Derive(DeriveReport),
    Verify(VerifyReport),
    Transform(TransformReport),
    Search(SearchReport),
    Counterexample(CounterexampleReport),
    Iso(IsoReport),
    Structures(StructuresReport),
}

impl ReportDocument {
    fn new(body: Body) -> Self {
        Self {
            schema: SCHEMA,
            schema_version: SCHEMA_VERSION,
            body,
        }
    }

    /// False when the report carries a negative verdict: a checked axiom or
    /// applicable theorem failed, two algebras are not isomorphic, or no
    /// counterexample was found.
    pub fn passed(&self) -> bool {
        match &self.body {
            Body::Check(r) => r.axioms.iter().all(|a| a.holds),
            Body::Verify(r) => r.results.iter().all(|t| !t.applicable || t.holds),
            Body::Counterexample(r) => r.model.is_some(),
            Body::Iso(r) => r.isomorphic,
            Body::Classify(_)
            | Body::Derive(_)
            | Body::Transform(_)
            | Body::Search(_)
            | Body::Structures(_) => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn labels_of(a: &FiniteAlgebra) -> Vec<String> {
    a.elements().map(|e| a.label(e)).collect()
}

fn rows(table: &[Elem], n: usize) -> Vec<Vec<Elem>> {
    table.chunks(n.max(1)).map(<[Elem]>::to_vec).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub elements: Vec<String>,
    pub axioms: Vec<AxiomReport>,
}

/// Checks `axioms` (all of them when empty).
pub fn check(a: &FiniteAlgebra, axioms: &[AxiomId]) -> Result<ReportDocument, ReportError> {
    let ops = a.derive();
    let list = if axioms.is_empty() {
        AxiomId::ALL
    } else {
        axioms
    };
    let reports: Vec<AxiomReport> = list.iter().map(|x| x.check(&ops)).collect();
    for r in &reports {
        confirm(r.reproduces(&ops), r.axiom)?;
    }
    Ok(ReportDocument::new(Body::Check(CheckReport {
        elements: labels_of(a),
        axioms: reports,
    })))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub elements: Vec<String>,
    pub classification: ClassificationReport,
    /// The commutative quantum-B check for `≤` and for `≤_Q`.
    pub quantum_b: Vec<QuantumBReport>,
}

pub fn classify(a: &FiniteAlgebra) -> Result<ReportDocument, ReportError> {
    let ops = a.derive();
    let classification = classify_ops(&ops);
    for r in classification.axioms.values() {
        confirm(r.reproduces(&ops), r.axiom)?;
    }
    let quantum_b = [OrderRelation::Leq, OrderRelation::LeqQ]
        .into_iter()
        .map(|o| check_quantum_b(&ops, o, None))
        .collect::<Result<Vec<_>, _>>()?;
    for q in &quantum_b {
        confirm(
            check_quantum_b(&ops, q.order, None)? == *q,
            "quantum-B check",
        )?;
    }
    Ok(ReportDocument::new(Body::Classify(ClassifyReport {
        elements: labels_of(a),
        classification,
        quantum_b,
    })))
}

#[derive(Clone, Debug, Serialize)]
pub struct DeriveReport {
    pub elements: Vec<String>,
    pub one: Elem,
    pub zero: Elem,
    pub imp: Vec<Vec<Elem>>,
    pub star: Vec<Elem>,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub prod: Vec<Vec<Elem>>,
    pub osum: Vec<Vec<Elem>>,
    pub leq: Vec<Vec<bool>>,
    pub leq_q: Vec<Vec<bool>>,
}

pub fn derive(a: &FiniteAlgebra) -> ReportDocument {
    let o = a.derive();
    let n = o.order();
    let bools = |t: &[bool]| t.chunks(n).map(<[bool]>::to_vec).collect();
    ReportDocument::new(Body::Derive(DeriveReport {
        elements: labels_of(a),
        one: o.one(),
        zero: o.zero(),
        imp: rows(o.imp_table(), n),
        star: o.star_table().to_vec(),
        join: rows(o.join_table(), n),
        meet: rows(o.meet_table(), n),
        prod: rows(o.prod_table(), n),
        osum: rows(o.osum_table(), n),
        leq: bools(o.leq_table()),
        leq_q: bools(o.leq_q_table()),
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub elements: Vec<String>,
    pub results: Vec<TheoremResult>,
}

/// Checks the given theorem ids, or the whole registry when `ids` is empty.
pub fn verify(a: &FiniteAlgebra, ids: &[String]) -> Result<ReportDocument, ReportError> {
    let ops = a.derive();
    let classes = classify_ops(&ops);
    let entries = if ids.is_empty() {
        theorems::registry().iter().collect::<Vec<_>>()
    } else {
        ids.iter()
            .map(|id| theorems::lookup(id).ok_or_else(|| UnknownTheorem(id.clone())))
            .collect::<Result<_, _>>()?
    };
    let mut results = Vec::with_capacity(entries.len());
    for e in entries {
        let r = e.check(&ops, &classes);
        confirm(e.reproduces(&ops, &classes, &r), e.id)?;
        results.push(r);
    }
    Ok(ReportDocument::new(Body::Verify(VerifyReport {
        elements: labels_of(a),
        results,
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    Implication,
    Product,
}

impl std::str::FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "implication" => Ok(Signature::Implication),
            "product" => Ok(Signature::Product),
            other => Err(format!("unknown signature `{other}`")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransformReport {
    pub to: Signature,
    pub elements: Vec<String>,
    /// The result in the algebra file format.
    pub algebra: String,
    /// Present for implication input.
    pub equivalence: Option<EquivalenceReport>,
    /// `x ⊕ y`, derived from the product side.
    pub osum: Option<Vec<Vec<Elem>>>,
}

pub fn transform(input: &ParsedAlgebra, to: Signature) -> Result<ReportDocument, ReportError> {
    let (product, implication, equivalence) = match input {
        ParsedAlgebra::Implication(a) => {
            let p = transforms::to_product(a)?;
            let eq = transforms::check_definitional_equivalence(a)?;
            let ops = a.derive();
            confirm(eq.qw.reproduces(&ops), "QW")?;
            if let Some(w) = &eq.pqmv_witness {
                confirm(
                    crate::axioms::ProductLaw::Pqmv.check(&p).as_ref() == Some(w),
                    "Pqmv",
                )?;
            }
            (p, a.clone(), Some(eq))
        }
        ParsedAlgebra::Product(p) => {
            let a = transforms::to_implication(p)?;
            (p.clone(), a, None)
        }
    };
    confirm(transforms::psi(&product) == implication, "round trip")?;
    let n = product.order();
    let (text, elements, osum) = match to {
        Signature::Product => (
            format::write_product(&product),
            product.elements().map(|e| product.label(e)).collect(),
            Some(rows(&transforms::derived_sum(&product), n)),
        ),
        Signature::Implication => (
            format::write_algebra(&implication),
            labels_of(&implication),
            None,
        ),
    };
    Ok(ReportDocument::new(Body::Transform(TransformReport {
        to,
        elements,
        algebra: text,
        equivalence,
        osum,
    })))
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelEntry {
    pub canonical: CanonicalForm,
    pub labelings_found: u64,
    pub imp: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub order: usize,
    pub satisfy: Vec<Requirement>,
    pub refute: Vec<Requirement>,
    pub status: Completeness,
    pub nodes: u64,
    pub leaves: u64,
    pub elapsed_ms: u128,
    pub models: Vec<ModelEntry>,
}

fn confirm_model(
    a: &FiniteAlgebra,
    satisfy: &[Requirement],
    refute: &[Requirement],
) -> Result<(), ReportError> {
    let c = crate::axioms::classify(a);
    let ok = satisfy.iter().all(|r| c.satisfies(r)) && refute.iter().all(|r| !c.satisfies(r));
    confirm(ok, "search model")
}

fn model_entry(m: &crate::search::Model) -> ModelEntry {
    ModelEntry {
        canonical: m.canonical.clone(),
        labelings_found: m.labelings_found,
        imp: rows(m.algebra.table(), m.algebra.order()),
    }
}

pub fn search(
    stream: &ModelStream,
    satisfy: &[Requirement],
    refute: &[Requirement],
) -> Result<ReportDocument, ReportError> {
    for m in &stream.models {
        confirm_model(&m.algebra, satisfy, refute)?;
    }
    Ok(ReportDocument::new(Body::Search(SearchReport {
        order: stream.order,
        satisfy: satisfy.to_vec(),
        refute: refute.to_vec(),
        status: stream.status,
        nodes: stream.nodes,
        leaves: stream.leaves,
        elapsed_ms: stream.elapsed.as_millis(),
        models: stream.models.iter().map(model_entry).collect(),
    })))
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub satisfy: Vec<Requirement>,
    pub refute: Vec<Requirement>,
    pub status: Completeness,
    pub exhausted_orders: Vec<usize>,
    pub model: Option<ModelEntry>,
}

pub fn counterexample(
    c: &Counterexample,
    satisfy: &[Requirement],
    refute: &[Requirement],
) -> Result<ReportDocument, ReportError> {
    if let Some(m) = &c.model {
        confirm_model(&m.algebra, satisfy, refute)?;
    }
    Ok(ReportDocument::new(Body::Counterexample(
        CounterexampleReport {
            satisfy: satisfy.to_vec(),
            refute: refute.to_vec(),
            status: c.status,
            exhausted_orders: c.exhausted_orders.clone(),
            model: c.model.as_ref().map(model_entry),
        },
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    /// `mapping[x]` is the image in the second algebra of `x` in the first.
    pub mapping: Option<Vec<Elem>>,
    pub canonical: [CanonicalForm; 2],
}

pub fn iso(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<ReportDocument, ReportError> {
    let mapping = find_isomorphism(a, b);
    let ca = crate::search::canonical_form(a);
    let cb = crate::search::canonical_form(b);
    if let Some(f) = &mapping {
        confirm(a.relabel(f).table() == b.table(), "isomorphism")?;
    }
    confirm(mapping.is_some() == (ca == cb), "canonical forms")?;
    Ok(ReportDocument::new(Body::Iso(IsoReport {
        isomorphic: mapping.is_some(),
        mapping,
        canonical: [ca, cb],
    })))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureQuery {
    Ideals,
    Filters,
    /// The first meander of the named subset.
    Meander(Vec<String>),
}

#[derive(Clone, Debug, Serialize)]
pub struct MeanderEntry {
    pub subset: Vec<Elem>,
    pub meander: Vec<Elem>,
    pub subset_is_q_ideal: bool,
    pub meander_is_filter: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuresReport {
    pub elements: Vec<String>,
    pub query: &'static str,
    pub q_ideals: Option<Vec<Vec<Elem>>>,
    pub filters: Option<Vec<Vec<Elem>>>,
    pub meanders: Vec<MeanderEntry>,
}

fn meander_entry(p: &ProductAlgebra, s: &ElementSubset) -> Result<MeanderEntry, ReportError> {
    let m = structures::first_meander(p, s)?;
    Ok(MeanderEntry {
        subset: s.iter().collect(),
        meander: m.iter().collect(),
        subset_is_q_ideal: !s.is_empty() && structures::is_q_ideal(p, s)?,
        meander_is_filter: !m.is_empty() && structures::is_filter(p, &m)?,
    })
}

pub fn structures(
    p: &ProductAlgebra,
    query: &StructureQuery,
) -> Result<ReportDocument, ReportError> {
    let elements = p.elements().map(|e| p.label(e)).collect();
    let list = |v: &[ElementSubset]| {
        v.iter()
            .map(|s| s.iter().collect())
            .collect::<Vec<Vec<Elem>>>()
    };
    let body = match query {
        StructureQuery::Ideals => {
            let ideals = structures::enumerate_q_ideals(p)?;
            for s in &ideals {
                confirm(structures::is_q_ideal(p, s)?, "q-ideal")?;
            }
            let meanders = ideals
                .iter()
                .map(|s| meander_entry(p, s))
                .collect::<Result<_, _>>()?;
            StructuresReport {
                elements,
                query: "ideals",
                q_ideals: Some(list(&ideals)),
                filters: None,
                meanders,
            }
        }
        StructureQuery::Filters => {
            let filters = structures::enumerate_filters(p)?;
            for s in &filters {
                confirm(structures::is_filter(p, s)?, "filter")?;
            }
            StructuresReport {
                elements,
                query: "filters",
                q_ideals: None,
                filters: Some(list(&filters)),
                meanders: Vec::new(),
            }
        }
        StructureQuery::Meander(tokens) => {
            let mut s = ElementSubset::empty(p.order());
            for t in tokens {
                let e = p
                    .element(t)
                    .ok_or_else(|| ReportError::UnknownElement(t.clone()))?;
                s.insert(e);
            }
            StructuresReport {
                elements,
                query: "meander",
                q_ideals: None,
                filters: None,
                meanders: vec![meander_entry(p, &s)?],
            }
        }
    };
    Ok(ReportDocument::new(Body::Structures(body)))
}

// Human rendering.

struct Labels<'a>(&'a [String]);

impl Labels<'_> {
    fn of(&self, e: Elem) -> &str {
        self.0.get(e as usize).map_or("?", String::as_str)
    }

    fn set(&self, s: &[Elem]) -> String {
        let inner: Vec<&str> = s.iter().map(|&e| self.of(e)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    fn witness(&self, w: &Witness) -> String {
        let t: Vec<&str> = w.tuple.iter().map(|&e| self.of(e)).collect();
        let mut out = format!("({})", t.join(", "));
        if let Some((l, r)) = w.sides {
            let _ = write!(out, ": {} vs {}", self.of(l), self.of(r));
        }
        out
    }

    fn table(&self, f: &mut fmt::Formatter<'_>, name: &str, rows: &[Vec<Elem>]) -> fmt::Result {
        let width = self.0.iter().map(String::len).max().unwrap_or(1);
        write!(f, "{name:>width$} |")?;
        for l in self.0 {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for (i, row) in rows.iter().enumerate() {
            write!(f, "{:>width$} |", self.of(i as Elem))?;
            for &v in row {
                write!(f, " {:>width$}", self.of(v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axiom_line(f: &mut fmt::Formatter<'_>, l: &Labels, r: &AxiomReport) -> fmt::Result {
    match &r.witness {
        None => writeln!(f, "{:<17} holds", r.axiom.name()),
        Some(w) => writeln!(f, "{:<17} fails at {}", r.axiom.name(), l.witness(w)),
    }
}

fn requirements(r: &[Requirement]) -> String {
    let v: Vec<&str> = r.iter().map(Requirement::name).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(",")
    }
}

fn status(s: Completeness) -> &'static str {
    match s {
        Completeness::Complete => "complete",
        Completeness::BudgetExhausted => "incomplete (budget exhausted)",
    }
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Check(r) => {
                let l = Labels(&r.elements);
                for a in &r.axioms {
                    axiom_line(f, &l, a)?;
                }
                Ok(())
            }
            Body::Classify(r) => {
                let l = Labels(&r.elements);
                for (c, holds) in &r.classification.classes {
                    writeln!(f, "{:<20} {}", format!("{c}:"), yes(*holds))?;
                }
                for q in &r.quantum_b {
                    let rel = match q.order {
                        OrderRelation::Leq => "≤",
                        OrderRelation::LeqQ => "≤_Q",
                    };
                    writeln!(f, "{:<20} {}", format!("quantum-B({rel}):"), yes(q.holds()))?;
                    for a in q.reports().filter(|a| !a.holds) {
                        write!(f, "  ")?;
                        axiom_line(f, &l, a)?;
                    }
                }
                writeln!(f, "failing axioms:")?;
                for a in r.classification.axioms.values().filter(|a| !a.holds) {
                    write!(f, "  ")?;
                    axiom_line(f, &l, a)?;
                }
                Ok(())
            }
            Body::Derive(r) => {
                let l = Labels(&r.elements);
                writeln!(f, "one = {}, zero = {}", l.of(r.one), l.of(r.zero))?;
                write!(f, "star:")?;
                for (x, &s) in r.star.iter().enumerate() {
                    write!(f, " {}*={}", l.of(x as Elem), l.of(s))?;
                }
                writeln!(f)?;
                for (name, t) in [
                    ("→", &r.imp),
                    ("∨", &r.join),
                    ("∧", &r.meet),
                    ("⊙", &r.prod),
                    ("⊕", &r.osum),
                ] {
                    writeln!(f)?;
                    l.table(f, name, t)?;
                }
                Ok(())
            }
            Body::Verify(r) => {
                let l = Labels(&r.elements);
                let mut applicable = 0;
                let mut failed = 0;
                for t in &r.results {
                    let verdict = match (t.applicable, t.holds, &t.witness) {
                        (false, _, _) => "n/a".to_string(),
                        (true, true, _) => "holds".to_string(),
                        (true, false, Some(w)) => format!("FAILS at {}", l.witness(w)),
                        (true, false, None) => "FAILS".to_string(),
                    };
                    applicable += usize::from(t.applicable);
                    failed += usize::from(t.applicable && !t.holds);
                    writeln!(f, "{:<10} {verdict}", t.id)?;
                }
                writeln!(
                    f,
                    "{} entries, {applicable} applicable, {failed} failing",
                    r.results.len()
                )
            }
            Body::Transform(r) => {
                write!(f, "{}", r.algebra)?;
                if let Some(osum) = &r.osum {
                    writeln!(f, "\n# derived x ⊕ y")?;
                    Labels(&r.elements).table(f, "⊕", osum)?;
                }
                if let Some(e) = &r.equivalence {
                    writeln!(
                        f,
                        "\n# QW: {}, Pqmv on image: {}, round trips: {}",
                        yes(e.qw.holds),
                        yes(e.pqmv_holds),
                        yes(e.psi_phi_identity && e.phi_psi_identity)
                    )?;
                }
                Ok(())
            }
            Body::Search(r) => {
                writeln!(
                    f,
                    "order {}: satisfy {} refute {}",
                    r.order,
                    requirements(&r.satisfy),
                    requirements(&r.refute)
                )?;
                writeln!(
                    f,
                    "{} model(s), {}, {} nodes, {} leaves, {} ms",
                    r.models.len(),
                    status(r.status),
                    r.nodes,
                    r.leaves,
                    r.elapsed_ms
                )?;
                let labels = index_labels(r.order);
                for m in &r.models {
                    writeln!(f, "\n{}", m.canonical)?;
                    Labels(&labels).table(f, "→", &m.imp)?;
                }
                Ok(())
            }
            Body::Counterexample(r) => {
                writeln!(
                    f,
                    "satisfy {} refute {}: {}",
                    requirements(&r.satisfy),
                    requirements(&r.refute),
                    status(r.status)
                )?;
                if !r.exhausted_orders.is_empty() {
                    let o: Vec<String> = r.exhausted_orders.iter().map(usize::to_string).collect();
                    writeln!(f, "no models at order {}", o.join(", "))?;
                }
                match &r.model {
                    None => writeln!(f, "no counterexample found"),
                    Some(m) => {
                        let n = m.imp.len();
                        writeln!(f, "counterexample of order {n}: {}", m.canonical)?;
                        Labels(&index_labels(n)).table(f, "→", &m.imp)
                    }
                }
            }
            Body::Iso(r) => {
                writeln!(f, "isomorphic: {}", yes(r.isomorphic))?;
                if let Some(m) = &r.mapping {
                    let pairs: Vec<String> = m
                        .iter()
                        .enumerate()
                        .map(|(x, y)| format!("{x}->{y}"))
                        .collect();
                    writeln!(f, "mapping: {}", pairs.join(" "))?;
                }
                writeln!(f, "canonical: {} {}", r.canonical[0], r.canonical[1])
            }
            Body::Structures(r) => {
                let l = Labels(&r.elements);
                for (name, sets) in [("q-ideals", &r.q_ideals), ("filters", &r.filters)] {
                    if let Some(sets) = sets {
                        writeln!(f, "{} {name}:", sets.len())?;
                        for s in sets {
                            writeln!(f, "  {}", l.set(s))?;
                        }
                    }
                }
                for m in &r.meanders {
                    writeln!(
                        f,
                        "meander of {} = {} (q-ideal: {}, filter: {})",
                        l.set(&m.subset),
                        l.set(&m.meander),
                        yes(m.subset_is_q_ideal),
                        yes(m.meander_is_filter)
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Whether `c` is one of the composite classes reported by `classify`.
pub fn reports_class(doc: &ReportDocument, c: Class) -> Option<bool> {
    match &doc.body {
        Body::Classify(r) => Some(r.classification.is(c)),
        _ => None,
    }
}
