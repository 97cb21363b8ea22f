//! Ideals, filters and first meanders over the product signature.
//!
//! With `≤_Q` read as `≤ₘᴹ` and `∧` as `∧ₘ`:
//!
//! - q-ideal: nonempty, `x ∈ I ⇒ x ⊙ y ∈ I`, and `x, y ∈ I ⇒ x ⊕ y ∈ I`;
//! - p-ideal: a q-ideal with `x ∈ I ⇒ x ∧ y ∈ I`;
//! - filter: `x, y ∈ F ⇒ x ⊙ y ∈ F`, and `x ∈ F, x ≤_Q y ⇒ y ∈ F`;
//! - first meander: `F¹ = {x | ∀y. x ⊕ y ∈ F ⇒ y ∈ F}`.
//!
//! The definitions are meant for quantum-MV algebras but are evaluated as
//! written on any product structure.

use thiserror::Error;

use crate::algebra::{Elem, ElementSubset};
use crate::ops::{Eval, ProductOps};

/// Largest order accepted by the power-set enumerations.
pub const MAX_SCAN_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the subset is empty")]
    EmptySubset,
    #[error("subset is over {got} elements but the algebra has {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("power-set scan needs order at most {MAX_SCAN_ORDER}, got {0}")]
    TooLarge(usize),
}

fn ev<T>(e: Eval<T>) -> T {
    e.expect("complete tables never pend")
}

fn elems<P: ProductOps + ?Sized>(p: &P) -> impl Iterator<Item = Elem> + Clone {
    (0..p.order()).map(|e| e as Elem)
}

fn check_subset<P: ProductOps + ?Sized>(
    p: &P,
    s: &ElementSubset,
    nonempty: bool,
) -> Result<(), StructureError> {
    if s.order() != p.order() {
        return Err(StructureError::OrderMismatch {
            expected: p.order(),
            got: s.order(),
        });
    }
    if nonempty && s.is_empty() {
        return Err(StructureError::EmptySubset);
    }
    Ok(())
}

fn closed_under<P: ProductOps + ?Sized>(p: &P, s: &ElementSubset) -> bool {
    s.iter().all(|x| {
        elems(p).all(|y| s.contains(ev(p.prod(x, y))))
            && s.iter().all(|y| s.contains(ev(p.osum(x, y))))
    })
}

pub fn is_q_ideal<P: ProductOps + ?Sized>(
    p: &P,
    s: &ElementSubset,
) -> Result<bool, StructureError> {
    check_subset(p, s, true)?;
    Ok(closed_under(p, s))
}

pub fn is_p_ideal<P: ProductOps + ?Sized>(
    p: &P,
    s: &ElementSubset,
) -> Result<bool, StructureError> {
    check_subset(p, s, true)?;
    Ok(closed_under(p, s)
        && s.iter()
            .all(|x| elems(p).all(|y| s.contains(ev(p.meet_m(x, y))))))
}

pub fn is_filter<P: ProductOps + ?Sized>(p: &P, s: &ElementSubset) -> Result<bool, StructureError> {
    check_subset(p, s, true)?;
    Ok(s.iter().all(|x| {
        s.iter().all(|y| s.contains(ev(p.prod(x, y))))
            && elems(p).all(|y| !ev(p.le_mm(x, y)) || s.contains(y))
    }))
}

pub fn first_meander<P: ProductOps + ?Sized>(
    p: &P,
    s: &ElementSubset,
) -> Result<ElementSubset, StructureError> {
    check_subset(p, s, false)?;
    Ok(ElementSubset::from_elems(
        p.order(),
        elems(p).filter(|&x| elems(p).all(|y| !s.contains(ev(p.osum(x, y))) || s.contains(y))),
    ))
}

fn scan<P: ProductOps + ?Sized>(
    p: &P,
    keep: impl Fn(&ElementSubset) -> Result<bool, StructureError>,
) -> Result<Vec<ElementSubset>, StructureError> {
    let n = p.order();
    if n > MAX_SCAN_ORDER {
        return Err(StructureError::TooLarge(n));
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let s = ElementSubset::from_mask(n, mask);
        if keep(&s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Every q-ideal, by scanning all nonempty subsets in mask order.
pub fn enumerate_q_ideals<P: ProductOps + ?Sized>(
    p: &P,
) -> Result<Vec<ElementSubset>, StructureError> {
    scan(p, |s| is_q_ideal(p, s))
}

/// Every filter, by scanning all nonempty subsets in mask order.
pub fn enumerate_filters<P: ProductOps + ?Sized>(
    p: &P,
) -> Result<Vec<ElementSubset>, StructureError> {
    scan(p, |s| is_filter(p, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_and_carrier_are_q_ideals() {
        let p = fixtures::example_5_6();
        let zero = ElementSubset::from_elems(5, [p.zero()]);
        assert!(is_q_ideal(&p, &zero).unwrap());
        let all = ElementSubset::full(5);
        assert!(is_q_ideal(&p, &all).unwrap());
        assert_eq!(first_meander(&p, &all).unwrap(), all);
    }

    #[test]
    fn empty_subset_is_rejected() {
        let p = fixtures::example_5_6();
        let empty = ElementSubset::empty(5);
        assert_eq!(is_q_ideal(&p, &empty), Err(StructureError::EmptySubset));
        assert_eq!(is_filter(&p, &empty), Err(StructureError::EmptySubset));
        assert!(first_meander(&p, &empty).is_ok());
        assert!(matches!(
            is_q_ideal(&p, &ElementSubset::full(3)),
            Err(StructureError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn meanders_of_q_ideals_are_filters() {
        for p in [fixtures::example_5_5(), fixtures::example_5_6()] {
            let ideals = enumerate_q_ideals(&p).unwrap();
            assert!(!ideals.is_empty());
            for ideal in ideals {
                let m = first_meander(&p, &ideal).unwrap();
                assert!(is_filter(&p, &m).unwrap(), "{ideal:?} -> {m:?}");
            }
        }
    }

    #[test]
    fn unit_filter() {
        let p = fixtures::example_5_6();
        let top = ElementSubset::from_elems(5, [p.one()]);
        assert!(is_filter(&p, &top).unwrap());
        assert!(!is_q_ideal(&p, &top).unwrap());
    }
}
