//! Moving between the implication signature `(X, →, *, 1)` and the product
//! signature `(X, ⊙, *, 1)`.
//!
//! `Φ` sends `→` to `x ⊙ y = (x → y*)*`; `Ψ` sends `⊙` back to
//! `x → y = (x ⊙ y*)*`. On involutive structures they are mutually inverse.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{check_names, check_order, check_table, AlgebraError, Elem, FiniteAlgebra};
use crate::axioms::{AxiomId, AxiomReport, Class, ProductLaw, Witness};
use crate::ops::{Eval, ProductOps};

/// A finite algebra `(X, ⊙, *, 1)` of type (2, 1, 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductAlgebra {
    order: usize,
    one: Elem,
    star: Vec<Elem>,
    prod: Vec<Elem>,
    names: Option<Vec<String>>,
}

impl ProductAlgebra {
    pub fn new(
        order: usize,
        one: usize,
        star: Vec<Elem>,
        prod: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        check_order(order)?;
        if one >= order {
            return Err(AlgebraError::ConstantOutOfRange { index: one, order });
        }
        if star.len() != order {
            return Err(AlgebraError::TableShape {
                expected: order,
                got: star.len(),
            });
        }
        if let Some(pos) = star.iter().position(|&v| v as usize >= order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: pos,
                col: 0,
                value: star[pos] as usize,
                order,
            });
        }
        check_table(order, &prod)?;
        Ok(Self {
            order,
            one: one as Elem,
            star,
            prod,
            names: None,
        })
    }

    pub fn with_names<S: Into<String>>(
        mut self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        check_names(self.order, &names)?;
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// `0 := 1*`.
    pub fn zero(&self) -> Elem {
        self.star[self.one as usize]
    }

    pub fn star(&self, a: Elem) -> Elem {
        self.star[a as usize]
    }

    pub fn prod(&self, a: Elem, b: Elem) -> Elem {
        self.prod[a as usize * self.order + b as usize]
    }

    pub fn star_table(&self) -> &[Elem] {
        &self.star
    }

    pub fn prod_table(&self) -> &[Elem] {
        &self.prod
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.names {
            Some(names) => names[e as usize].clone(),
            None => e.to_string(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(|e| e as Elem)
    }

    /// Looks up an element by display name or decimal index.
    pub fn element(&self, token: &str) -> Option<Elem> {
        if let Some(pos) = self.names.iter().flatten().position(|n| n == token) {
            return Some(pos as Elem);
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|&i| i < self.order)
            .map(|i| i as Elem)
    }
}

impl ProductOps for ProductAlgebra {
    fn order(&self) -> usize {
        self.order
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn star(&self, a: Elem) -> Eval<Elem> {
        Ok(self.star[a as usize])
    }

    fn prod(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(ProductAlgebra::prod(self, a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("not an involutive BE algebra: {axiom} fails at {:?}", witness.tuple)]
    NotInvolutive { axiom: AxiomId, witness: Witness },
    #[error("not an involutive m-BE algebra: {law} fails at {:?}", witness.tuple)]
    NotInvolutiveMbe { law: ProductLaw, witness: Witness },
}

/// `Φ` without precondition checks.
pub fn phi(a: &FiniteAlgebra) -> ProductAlgebra {
    let ops = a.derive();
    ProductAlgebra {
        order: a.order(),
        one: a.one(),
        star: ops.star_table().to_vec(),
        prod: ops.prod_table().to_vec(),
        names: a.names().map(<[String]>::to_vec),
    }
}

/// `Ψ` without precondition checks.
pub fn psi(p: &ProductAlgebra) -> FiniteAlgebra {
    let n = p.order;
    let mut imp = Vec::with_capacity(n * n);
    for a in p.elements() {
        for b in p.elements() {
            imp.push(p.star(p.prod(a, p.star(b))));
        }
    }
    let alg = FiniteAlgebra::new(n, p.one as usize, imp).expect("indices stay in range");
    match &p.names {
        Some(names) => alg
            .with_names(names.iter().cloned())
            .expect("names already validated"),
        None => alg,
    }
}

/// `Φ`, refusing inputs that are not involutive BE algebras.
pub fn to_product(a: &FiniteAlgebra) -> Result<ProductAlgebra, TransformError> {
    let ops = a.derive();
    for &axiom in Class::InvolutiveBe.axioms() {
        let report = axiom.check(&ops);
        if let Some(witness) = report.witness {
            return Err(TransformError::NotInvolutive { axiom, witness });
        }
    }
    Ok(phi(a))
}

/// `Ψ`, refusing inputs that are not involutive m-BE algebras.
pub fn to_implication(p: &ProductAlgebra) -> Result<FiniteAlgebra, TransformError> {
    for &law in ProductLaw::MBE {
        if let Some(witness) = law.check(p) {
            return Err(TransformError::NotInvolutiveMbe { law, witness });
        }
    }
    Ok(psi(p))
}

/// The `⊕` table, `x ⊕ y = (x* ⊙ y*)*`, row-major.
pub fn derived_sum(p: &ProductAlgebra) -> Vec<Elem> {
    p.elements()
        .flat_map(|a| {
            p.elements()
                .map(move |b| p.star(p.prod(p.star(a), p.star(b))))
        })
        .collect()
}

/// Outcome of comparing QW on an algebra with Pqmv on its `Φ`-image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub qw: AxiomReport,
    pub pqmv_holds: bool,
    pub pqmv_witness: Option<Witness>,
    /// `Ψ(Φ(a)) = a`
    pub psi_phi_identity: bool,
    /// `Φ(Ψ(Φ(a))) = Φ(a)`
    pub phi_psi_identity: bool,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.qw.holds == self.pqmv_holds
    }

    pub fn holds(&self) -> bool {
        self.agree() && self.psi_phi_identity && self.phi_psi_identity
    }
}

/// Checks QW on `a` against Pqmv evaluated on the stored product tables of
/// `Φ(a)`, plus both round-trip identities.
pub fn check_definitional_equivalence(
    a: &FiniteAlgebra,
) -> Result<EquivalenceReport, TransformError> {
    let p = to_product(a)?;
    let back = psi(&p);
    let pqmv_witness = ProductLaw::Pqmv.check(&p);
    Ok(EquivalenceReport {
        qw: AxiomId::Qw.check(&a.derive()),
        pqmv_holds: pqmv_witness.is_none(),
        pqmv_witness,
        psi_phi_identity: &back == a,
        phi_psi_identity: phi(&back) == p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn product_of_qw_fixture_matches_stored_product_form() {
        let p = to_product(&fixtures::example_3_19()).unwrap();
        assert_eq!(p, fixtures::example_5_5());
        // a ⊙ a = b
        assert_eq!(p.prod(1, 1), 2);
        let sum = derived_sum(&p);
        // b ⊕ b = a
        assert_eq!(sum[2 * 5 + 2], 1);
    }

    #[test]
    fn product_of_wajsberg_fixture() {
        let p = to_product(&fixtures::example_4_14()).unwrap();
        assert_eq!(p, fixtures::example_5_6());
        assert_eq!(p.prod(1, 1), 3);
        assert_eq!(derived_sum(&p)[2 * 5 + 2], 3);
    }

    #[test]
    fn round_trips_on_fixtures() {
        for a in fixtures::implication_fixtures() {
            let p = to_product(&a).unwrap();
            assert_eq!(to_implication(&p).unwrap(), a);
        }
        for p in [fixtures::example_5_5(), fixtures::example_5_6()] {
            assert_eq!(to_product(&to_implication(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn trivial_algebra_transforms() {
        let p = to_product(&FiniteAlgebra::trivial()).unwrap();
        assert_eq!(p.order(), 1);
        assert_eq!(to_implication(&p).unwrap(), FiniteAlgebra::trivial());
        let eq = check_definitional_equivalence(&FiniteAlgebra::trivial()).unwrap();
        assert!(eq.qw.holds && eq.pqmv_holds && eq.holds());
    }

    #[test]
    fn non_involutive_input_is_refused() {
        // Two least elements: 0 is resolved to 1 and boundedness fails.
        let a = FiniteAlgebra::from_rows(2, &[[2u8, 2, 2], [2, 2, 2], [0, 1, 2]]).unwrap();
        assert!(matches!(
            to_product(&a),
            Err(TransformError::NotInvolutive {
                axiom: AxiomId::Bounded,
                ..
            })
        ));
        let p = ProductAlgebra::new(2, 1, vec![1, 0], vec![0, 0, 0, 0]).unwrap();
        assert!(matches!(
            to_implication(&p),
            Err(TransformError::NotInvolutiveMbe {
                law: ProductLaw::Pu,
                ..
            })
        ));
    }

    #[test]
    fn equivalence_on_fixtures() {
        let eq = check_definitional_equivalence(&fixtures::example_3_19()).unwrap();
        assert!(eq.qw.holds && eq.pqmv_holds && eq.holds());
        let eq = check_definitional_equivalence(&fixtures::remark_3_6()).unwrap();
        assert!(!eq.qw.holds && !eq.pqmv_holds && eq.holds());
    }

    #[test]
    fn product_constructor_validates() {
        assert!(ProductAlgebra::new(2, 1, vec![1], vec![0; 4]).is_err());
        assert!(ProductAlgebra::new(2, 1, vec![1, 5], vec![0; 4]).is_err());
        assert!(ProductAlgebra::new(2, 1, vec![1, 0], vec![0; 3]).is_err());
    }
}
