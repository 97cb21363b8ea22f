//! Finite implication algebras `(X, →, 1)` stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. The table is the only source of truth:
//! every other operation is derived from it (see [`crate::ops`]), and no axiom
//! is assumed at construction time beyond well-formedness.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// An element of a finite carrier, as a dense index.
pub type Elem = u8;

/// Largest supported carrier size. Indices must fit in an [`Elem`].
pub const MAX_ORDER: usize = 255;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order must be between 1 and {MAX_ORDER}, got {0}")]
    InvalidOrder(usize),
    #[error("distinguished element {index} is out of range for order {order}")]
    ConstantOutOfRange { index: usize, order: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
}

pub(crate) fn check_order(order: usize) -> Result<(), AlgebraError> {
    if order == 0 || order > MAX_ORDER {
        return Err(AlgebraError::InvalidOrder(order));
    }
    Ok(())
}

pub(crate) fn check_table(order: usize, table: &[Elem]) -> Result<(), AlgebraError> {
    if table.len() != order * order {
        return Err(AlgebraError::TableShape {
            expected: order * order,
            got: table.len(),
        });
    }
    if let Some(pos) = table.iter().position(|&v| v as usize >= order) {
        return Err(AlgebraError::EntryOutOfRange {
            row: pos / order,
            col: pos % order,
            value: table[pos] as usize,
            order,
        });
    }
    Ok(())
}

pub(crate) fn check_names(order: usize, names: &[String]) -> Result<(), AlgebraError> {
    if names.len() != order {
        return Err(AlgebraError::NameCount {
            expected: order,
            got: names.len(),
        });
    }
    let mut seen = HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(AlgebraError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

/// A finite algebra `(X, →, 1)` of type (2, 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    order: usize,
    one: Elem,
    imp: Vec<Elem>,
    names: Option<Vec<String>>,
}

impl FiniteAlgebra {
    /// Builds an algebra from a row-major implication table.
    pub fn new(order: usize, one: usize, imp: Vec<Elem>) -> Result<Self, AlgebraError> {
        check_order(order)?;
        if one >= order {
            return Err(AlgebraError::ConstantOutOfRange { index: one, order });
        }
        check_table(order, &imp)?;
        Ok(Self {
            order,
            one: one as Elem,
            imp,
            names: None,
        })
    }

    /// Builds an algebra from table rows; `rows[a][b]` is `a → b`.
    pub fn from_rows<R: AsRef<[Elem]>>(one: usize, rows: &[R]) -> Result<Self, AlgebraError> {
        let order = rows.len();
        let mut imp = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(AlgebraError::TableShape {
                    expected: order * order,
                    got: order * (order - 1) + row.len(),
                });
            }
            imp.extend_from_slice(row);
        }
        Self::new(order, one, imp)
    }

    /// The one-element algebra, where `1 = 0`.
    pub fn trivial() -> Self {
        Self {
            order: 1,
            one: 0,
            imp: vec![0],
            names: None,
        }
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

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a as usize * self.order + b as usize]
    }

    /// The flattened row-major implication table.
    pub fn table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `e`: its name when names are present, otherwise its index.
    pub fn label(&self, e: Elem) -> String {
        match &self.names {
            Some(names) => names[e as usize].clone(),
            None => e.to_string(),
        }
    }

    /// Looks up an element by display name or, failing that, by decimal index.
    pub fn element(&self, token: &str) -> Option<Elem> {
        if let Some(names) = &self.names {
            if let Some(pos) = names.iter().position(|n| n == token) {
                return Some(pos as Elem);
            }
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|&i| i < self.order)
            .map(|i| i as Elem)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(|e| e as Elem)
    }

    /// Elements `z` with `z → x = 1` for every `x`.
    pub fn least_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.imp(z, x) == self.one))
            .collect()
    }

    /// The constant `0`: the unique least element when there is exactly one,
    /// otherwise `1`. With the fallback, `x* = x → 1` and boundedness fails
    /// (for order above one), so the choice never makes a non-bounded
    /// algebra look bounded.
    pub fn zero(&self) -> Elem {
        match self.least_elements().as_slice() {
            [z] => *z,
            _ => self.one,
        }
    }

    /// Applies a relabeling: element `a` becomes `perm[a]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[Elem]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation has wrong length");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(
                !std::mem::replace(&mut seen[p as usize], true),
                "not a permutation"
            );
        }
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                imp[perm[a] as usize * n + perm[b] as usize] = perm[self.imp[a * n + b] as usize];
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut out = vec![String::new(); n];
            for (a, name) in names.iter().enumerate() {
                out[perm[a] as usize] = name.clone();
            }
            out
        });
        Self {
            order: n,
            one: perm[self.one as usize],
            imp,
            names,
        }
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_algebra(self))
    }
}

/// A subset of the carrier `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    bits: FixedBitSet,
}

impl ElementSubset {
    pub fn empty(order: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        Self { bits }
    }

    /// # Panics
    /// If an element is out of range.
    pub fn from_elems(order: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(order);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Subset whose members are the set bits of `mask`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        Self::from_elems(
            order,
            (0..order.min(64))
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i as Elem),
        )
    }

    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e as usize)
    }

    pub fn insert(&mut self, e: Elem) {
        assert!((e as usize) < self.bits.len(), "element {e} out of range");
        self.bits.insert(e as usize);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(|i| i as Elem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean() -> FiniteAlgebra {
        FiniteAlgebra::from_rows(1, &[[1u8, 1], [0, 1]]).unwrap()
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(
            FiniteAlgebra::new(0, 0, vec![]),
            Err(AlgebraError::InvalidOrder(0))
        );
        assert_eq!(
            FiniteAlgebra::new(2, 2, vec![1, 1, 0, 1]),
            Err(AlgebraError::ConstantOutOfRange { index: 2, order: 2 })
        );
        assert_eq!(
            FiniteAlgebra::new(2, 1, vec![1, 1, 0]),
            Err(AlgebraError::TableShape {
                expected: 4,
                got: 3
            })
        );
        assert!(matches!(
            FiniteAlgebra::new(2, 1, vec![1, 1, 2, 1]),
            Err(AlgebraError::EntryOutOfRange { row: 1, col: 0, .. })
        ));
        assert!(FiniteAlgebra::from_rows(0, &[vec![0u8, 0], vec![0]]).is_err());
    }

    #[test]
    fn zero_is_unique_least_element() {
        assert_eq!(boolean().zero(), 0);
        assert_eq!(FiniteAlgebra::trivial().zero(), 0);
        // Two least elements: fall back to the unit.
        let a = FiniteAlgebra::from_rows(2, &[[2u8, 2, 2], [2, 2, 2], [0, 1, 2]]).unwrap();
        assert_eq!(a.least_elements(), vec![0, 1]);
        assert_eq!(a.zero(), 2);
    }

    #[test]
    fn relabel_moves_names_and_unit() {
        let a = boolean().with_names(["0", "1"]).unwrap();
        let b = a.relabel(&[1, 0]);
        assert_eq!(b.one(), 0);
        assert_eq!(b.label(0), "1");
        // old 0 → 1 = 1 becomes 1 → 0 = 0
        assert_eq!(b.imp(1, 0), 0);
        assert_eq!(b.imp(0, 1), 1);
        assert_eq!(b.relabel(&[1, 0]), a);
    }

    #[test]
    fn names_must_be_unique() {
        assert_eq!(
            boolean().with_names(["x", "x"]),
            Err(AlgebraError::DuplicateName("x".into()))
        );
        assert!(boolean().with_names(["x"]).is_err());
    }

    #[test]
    fn element_lookup_prefers_names() {
        let a = boolean().with_names(["1", "0"]).unwrap();
        assert_eq!(a.element("1"), Some(0));
        assert_eq!(a.element("0"), Some(1));
        assert_eq!(boolean().element("1"), Some(1));
        assert_eq!(boolean().element("7"), None);
    }

    #[test]
    fn subset_basics() {
        let s = ElementSubset::from_mask(5, 0b10101);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.len(), 3);
        assert!(ElementSubset::empty(3).is_empty());
        assert_eq!(ElementSubset::full(3).len(), 3);
    }
}
