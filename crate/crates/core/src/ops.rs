//! Derived operations and relations.
//!
//! Two views are provided. [`ImplicationOps`] and [`ProductOps`] are
//! evaluation traits whose lookups may be *pending* (a table cell that the
//! model search has not assigned yet); laws are written once against these
//! traits and run unchanged on complete tables and on partial ones.
//! [`DerivedOps`] is the eager, fully materialised form used everywhere else.
//!
//! With `0` the resolved least element:
//!
//! ```text
//! x* = x → 0            x ∨ y = (x → y) → y       x ∧ y = (x* ∨ y*)*
//! x ⊙ y = (x → y*)*     x ⊕ y = (x* ⊙ y*)*
//! x ≤ y   iff x → y = 1
//! x ≤_Q y iff x = x ∧ y
//! ```
//!
//! On the product side `x ∧ₘ y = (x* ⊙ y)* ⊙ y`, `x ∨ₘ y = (x* ∧ₘ y*)*`,
//! `x ≤ₘ y iff x ⊙ y* = 0` and `x ≤ₘᴹ y iff x = x ∧ₘ y`.

use crate::algebra::{Elem, FiniteAlgebra};

/// A lookup that hit an unassigned table cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pending(pub u32);

impl Pending {
    /// Blocked on something only known once the whole table is filled
    /// (the least element, when it is not fixed in advance).
    pub const COMPLETE_TABLE: Pending = Pending(u32::MAX);
}

pub type Eval<T> = Result<T, Pending>;

/// Operations of the implication signature `(X, →, *, 1)`.
pub trait ImplicationOps {
    fn order(&self) -> usize;
    fn one(&self) -> Elem;
    fn zero(&self) -> Eval<Elem>;
    fn imp(&self, a: Elem, b: Elem) -> Eval<Elem>;

    fn star(&self, a: Elem) -> Eval<Elem> {
        self.imp(a, self.zero()?)
    }

    fn join(&self, a: Elem, b: Elem) -> Eval<Elem> {
        self.imp(self.imp(a, b)?, b)
    }

    fn meet(&self, a: Elem, b: Elem) -> Eval<Elem> {
        let j = self.join(self.star(a)?, self.star(b)?)?;
        self.star(j)
    }

    fn prod(&self, a: Elem, b: Elem) -> Eval<Elem> {
        self.star(self.imp(a, self.star(b)?)?)
    }

    fn osum(&self, a: Elem, b: Elem) -> Eval<Elem> {
        self.star(self.prod(self.star(a)?, self.star(b)?)?)
    }

    fn leq(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(self.imp(a, b)? == self.one())
    }

    fn leq_q(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(self.meet(a, b)? == a)
    }
}

/// Operations of the product signature `(X, ⊙, *, 1)`.
pub trait ProductOps {
    fn order(&self) -> usize;
    fn one(&self) -> Elem;
    fn star(&self, a: Elem) -> Eval<Elem>;
    fn prod(&self, a: Elem, b: Elem) -> Eval<Elem>;

    fn zero(&self) -> Eval<Elem> {
        self.star(self.one())
    }

    fn osum(&self, a: Elem, b: Elem) -> Eval<Elem> {
        self.star(self.prod(self.star(a)?, self.star(b)?)?)
    }

    fn meet_m(&self, a: Elem, b: Elem) -> Eval<Elem> {
        let t = self.star(self.prod(self.star(a)?, b)?)?;
        self.prod(t, b)
    }

    fn join_m(&self, a: Elem, b: Elem) -> Eval<Elem> {
        let m = self.meet_m(self.star(a)?, self.star(b)?)?;
        self.star(m)
    }

    /// `a ≤ₘ b`, i.e. `a ⊙ b* = 0`.
    fn le_m(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(self.prod(a, self.star(b)?)? == self.zero()?)
    }

    /// `a ≤ₘᴹ b`, i.e. `a = a ∧ₘ b`.
    fn le_mm(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(self.meet_m(a, b)? == a)
    }
}

/// The product-signature view of an implication algebra, `x ⊙ y := (x → y*)*`.
///
/// Every product operation is recomputed from `⊙` and `*` alone, so laws
/// evaluated through this view take the product route rather than reusing
/// implication-side tables.
pub struct Phi<'a, O: ?Sized>(pub &'a O);

impl<O: ImplicationOps + ?Sized> ProductOps for Phi<'_, O> {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn one(&self) -> Elem {
        self.0.one()
    }

    fn star(&self, a: Elem) -> Eval<Elem> {
        self.0.star(a)
    }

    fn prod(&self, a: Elem, b: Elem) -> Eval<Elem> {
        self.0.prod(a, b)
    }
}

/// Materialised derived tables of a finite algebra.
///
/// Immutable once built; cheap O(1) lookups for every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOps {
    order: usize,
    one: Elem,
    zero: Elem,
    imp: Vec<Elem>,
    star: Vec<Elem>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    prod: Vec<Elem>,
    osum: Vec<Elem>,
    leq: Vec<bool>,
    leq_q: Vec<bool>,
}

/// Computes every derived table of `algebra`.
pub fn derive(algebra: &FiniteAlgebra) -> DerivedOps {
    let n = algebra.order();
    let one = algebra.one();
    let zero = algebra.zero();
    let imp = algebra.table().to_vec();
    let at = |a: Elem, b: Elem| a as usize * n + b as usize;
    let elems = || (0..n).map(|e| e as Elem);

    let star: Vec<Elem> = elems().map(|a| imp[at(a, zero)]).collect();
    let mut join = vec![0; n * n];
    let mut prod = vec![0; n * n];
    let mut leq = vec![false; n * n];
    for a in elems() {
        for b in elems() {
            join[at(a, b)] = imp[at(imp[at(a, b)], b)];
            prod[at(a, b)] = star[imp[at(a, star[b as usize])] as usize];
            leq[at(a, b)] = imp[at(a, b)] == one;
        }
    }
    let mut meet = vec![0; n * n];
    let mut osum = vec![0; n * n];
    let mut leq_q = vec![false; n * n];
    for a in elems() {
        let sa = star[a as usize];
        for b in elems() {
            let sb = star[b as usize];
            let m = star[join[at(sa, sb)] as usize];
            meet[at(a, b)] = m;
            osum[at(a, b)] = star[prod[at(sa, sb)] as usize];
            leq_q[at(a, b)] = m == a;
        }
    }
    DerivedOps {
        order: n,
        one,
        zero,
        imp,
        star,
        join,
        meet,
        prod,
        osum,
        leq,
        leq_q,
    }
}

impl FiniteAlgebra {
    pub fn derive(&self) -> DerivedOps {
        derive(self)
    }
}

impl DerivedOps {
    #[inline]
    fn at(&self, a: Elem, b: Elem) -> usize {
        a as usize * self.order + b as usize
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(|e| e as Elem)
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[self.at(a, b)]
    }

    #[inline]
    pub fn star(&self, a: Elem) -> Elem {
        self.star[a as usize]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[self.at(a, b)]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[self.at(a, b)]
    }

    #[inline]
    pub fn prod(&self, a: Elem, b: Elem) -> Elem {
        self.prod[self.at(a, b)]
    }

    #[inline]
    pub fn osum(&self, a: Elem, b: Elem) -> Elem {
        self.osum[self.at(a, b)]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[self.at(a, b)]
    }

    #[inline]
    pub fn leq_q(&self, a: Elem, b: Elem) -> bool {
        self.leq_q[self.at(a, b)]
    }

    /// `a ∧ₘ b = (a* ⊙ b)* ⊙ b`, computed from `⊙` and `*`.
    pub fn meet_m(&self, a: Elem, b: Elem) -> Elem {
        self.prod(self.star(self.prod(self.star(a), b)), b)
    }

    pub fn join_m(&self, a: Elem, b: Elem) -> Elem {
        self.star(self.meet_m(self.star(a), self.star(b)))
    }

    pub fn le_m(&self, a: Elem, b: Elem) -> bool {
        self.prod(a, self.star(b)) == self.zero
    }

    pub fn le_mm(&self, a: Elem, b: Elem) -> bool {
        self.meet_m(a, b) == a
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn star_table(&self) -> &[Elem] {
        &self.star
    }

    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }

    pub fn meet_table(&self) -> &[Elem] {
        &self.meet
    }

    pub fn prod_table(&self) -> &[Elem] {
        &self.prod
    }

    pub fn osum_table(&self) -> &[Elem] {
        &self.osum
    }

    pub fn leq_table(&self) -> &[bool] {
        &self.leq
    }

    pub fn leq_q_table(&self) -> &[bool] {
        &self.leq_q
    }
}

impl ImplicationOps for DerivedOps {
    fn order(&self) -> usize {
        self.order
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn zero(&self) -> Eval<Elem> {
        Ok(self.zero)
    }

    fn imp(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(DerivedOps::imp(self, a, b))
    }

    fn star(&self, a: Elem) -> Eval<Elem> {
        Ok(DerivedOps::star(self, a))
    }

    fn join(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(DerivedOps::join(self, a, b))
    }

    fn meet(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(DerivedOps::meet(self, a, b))
    }

    fn prod(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(DerivedOps::prod(self, a, b))
    }

    fn osum(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(DerivedOps::osum(self, a, b))
    }

    fn leq(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(DerivedOps::leq(self, a, b))
    }

    fn leq_q(&self, a: Elem, b: Elem) -> Eval<bool> {
        Ok(DerivedOps::leq_q(self, a, b))
    }
}

impl ImplicationOps for FiniteAlgebra {
    fn order(&self) -> usize {
        FiniteAlgebra::order(self)
    }

    fn one(&self) -> Elem {
        FiniteAlgebra::one(self)
    }

    fn zero(&self) -> Eval<Elem> {
        Ok(FiniteAlgebra::zero(self))
    }

    fn imp(&self, a: Elem, b: Elem) -> Eval<Elem> {
        Ok(FiniteAlgebra::imp(self, a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn star_table_of_qw_fixture() {
        let ops = fixtures::example_3_19().derive();
        // 0 a b c 1
        assert_eq!(ops.star_table(), &[4, 2, 1, 3, 0]);
        assert_eq!(ops.zero(), 0);
        assert_eq!(ops.star(ops.one()), ops.zero());
        assert_eq!(ops.star(ops.zero()), ops.one());
    }

    #[test]
    fn seven_element_fixture_meet_lookups() {
        let ops = fixtures::remark_3_6().derive();
        assert_eq!(ops.meet(3, 2), 2);
        assert_eq!(ops.meet(4, 3), 0);
        assert!(ops.leq_q(4, 6));
        assert!(ops.leq_q(6, 3));
        assert!(!ops.leq_q(4, 3));
        assert!(ops.leq(3, 2));
        assert!(!ops.leq_q(3, 2));
    }

    #[test]
    fn derive_is_deterministic() {
        let a = fixtures::remark_3_6();
        assert_eq!(a.derive(), a.derive());
    }

    #[test]
    fn trait_route_agrees_with_tables() {
        for alg in fixtures::implication_fixtures() {
            let ops = alg.derive();
            for x in ops.elements() {
                for y in ops.elements() {
                    let raw: &dyn ImplicationOps = &alg;
                    assert_eq!(raw.meet(x, y), Ok(ops.meet(x, y)));
                    assert_eq!(raw.osum(x, y), Ok(ops.osum(x, y)));
                    assert_eq!(raw.leq_q(x, y), Ok(ops.leq_q(x, y)));
                    assert_eq!(Phi(&ops).meet_m(x, y), Ok(ops.meet_m(x, y)));
                    assert_eq!(Phi(&ops).le_m(x, y), Ok(ops.le_m(x, y)));
                }
            }
        }
    }

    #[test]
    fn trivial_algebra_collapses() {
        let ops = FiniteAlgebra::trivial().derive();
        assert_eq!(ops.zero(), ops.one());
        assert_eq!(ops.meet(0, 0), 0);
        assert!(ops.leq_q(0, 0));
    }
}
