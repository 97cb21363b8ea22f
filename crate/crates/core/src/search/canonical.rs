//! Canonical forms and isomorphism testing.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{Elem, FiniteAlgebra};

/// The lexicographically smallest row-major implication table over all
/// relabelings that send `1` to the last index and, when there is a unique
/// least element other than `1`, send it to index `0`.
///
/// The bytes are themselves a valid table (with `one = order - 1`), so the
/// form doubles as a canonical representative. Two algebras are isomorphic
/// iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<Elem>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[Elem] {
        &self.0
    }

    pub fn order(&self) -> usize {
        (self.0.len() as f64).sqrt() as usize
    }

    /// The canonical representative, without names.
    pub fn to_algebra(&self) -> FiniteAlgebra {
        let n = self.order();
        FiniteAlgebra::new(n, n - 1, self.0.clone()).expect("canonical bytes form a valid table")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Visits every permutation of `items` (Heap's algorithm).
fn for_each_permutation(items: &mut [Elem], mut f: impl FnMut(&[Elem])) {
    let k = items.len();
    let mut c = vec![0usize; k];
    f(items);
    let mut i = 1;
    while i < k {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            items.swap(j, i);
            f(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The canonical form together with a relabeling that achieves it
/// (`perm[old] = new`).
///
/// Runs over `(n - 1)!` or `(n - 2)!` relabelings, so it is meant for the
/// small orders the search works with.
pub fn canonical_labeling(a: &FiniteAlgebra) -> (CanonicalForm, Vec<Elem>) {
    let n = a.order();
    let one = a.one();
    let zero = a.zero();
    let table = a.table();
    let fixed_zero = zero != one;

    // Old elements that are free to land on the middle positions.
    let mut rest: Vec<Elem> = a
        .elements()
        .filter(|&e| e != one && !(fixed_zero && e == zero))
        .collect();
    let offset = usize::from(fixed_zero);

    let mut best: Option<Vec<Elem>> = None;
    let mut best_perm = Vec::new();
    let mut inv = vec![0 as Elem; n];
    let mut perm = vec![0 as Elem; n];
    let mut candidate = vec![0 as Elem; n * n];

    for_each_permutation(&mut rest, |order| {
        // inv[new] = old
        if fixed_zero {
            inv[0] = zero;
        }
        for (k, &old) in order.iter().enumerate() {
            inv[offset + k] = old;
        }
        inv[n - 1] = one;
        for (new, &old) in inv.iter().enumerate() {
            perm[old as usize] = new as Elem;
        }
        // Build the relabeled table, abandoning it once it exceeds the best.
        let mut less = best.is_none();
        for a2 in 0..n {
            let row = inv[a2] as usize * n;
            for b2 in 0..n {
                let v = perm[table[row + inv[b2] as usize] as usize];
                let pos = a2 * n + b2;
                if !less {
                    let cur = best.as_ref().unwrap()[pos];
                    if v > cur {
                        return;
                    }
                    if v < cur {
                        less = true;
                    }
                }
                candidate[pos] = v;
            }
        }
        if less {
            best = Some(candidate.clone());
            best_perm = perm.clone();
        }
    });
    (
        CanonicalForm(best.expect("at least one relabeling")),
        best_perm,
    )
}

pub fn canonical_form(a: &FiniteAlgebra) -> CanonicalForm {
    canonical_labeling(a).0
}

/// Finds an isomorphism `f` (`f[x]` in `b` for `x` in `a`) by backtracking.
///
/// Independent of [`canonical_form`], which makes it useful as a cross-check.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    const UNSET: Elem = Elem::MAX;
    let mut f = vec![UNSET; n];
    let mut used = vec![false; n];
    f[a.one() as usize] = b.one();
    used[b.one() as usize] = true;

    fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[Elem]) -> bool {
        let n = a.order();
        for x in 0..n {
            if f[x] == UNSET {
                continue;
            }
            for y in 0..n {
                if f[y] == UNSET {
                    continue;
                }
                let r = a.imp(x as Elem, y as Elem);
                let image = f[r as usize];
                if image != UNSET && image != b.imp(f[x], f[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        f: &mut [Elem],
        used: &mut [bool],
        x: usize,
    ) -> bool {
        let n = a.order();
        if x == n {
            return consistent(a, b, f);
        }
        if f[x] != UNSET {
            return go(a, b, f, used, x + 1);
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            f[x] = y as Elem;
            used[y] = true;
            if consistent(a, b, f) && go(a, b, f, used, x + 1) {
                return true;
            }
            used[y] = false;
            f[x] = UNSET;
        }
        false
    }

    if !consistent(a, b, &f) {
        return None;
    }
    go(a, b, &mut f, &mut used, 0).then_some(f)
}

pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_form_is_one_byte() {
        assert_eq!(canonical_form(&FiniteAlgebra::trivial()).as_bytes(), &[0]);
    }

    #[test]
    fn form_is_a_fixed_point() {
        for a in fixtures::implication_fixtures() {
            let c = canonical_form(&a);
            let rep = c.to_algebra();
            assert_eq!(canonical_form(&rep), c);
            assert!(is_isomorphic(&a, &rep));
        }
    }

    #[test]
    fn labeling_reproduces_form() {
        let a = fixtures::remark_3_6();
        let (c, perm) = canonical_labeling(&a);
        assert_eq!(a.relabel(&perm).table(), c.as_bytes());
    }

    #[test]
    fn distinct_fixtures_are_not_isomorphic() {
        let a = fixtures::example_3_19();
        let b = fixtures::example_4_14();
        assert_ne!(canonical_form(&a), canonical_form(&b));
        assert!(!is_isomorphic(&a, &b));
        assert!(is_isomorphic(&a, &a));
    }

    #[test]
    fn relabeling_preserves_form() {
        let a = fixtures::example_3_19();
        let b = a.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let f = find_isomorphism(&a, &b).unwrap();
        assert_eq!(a.relabel(&f).table(), b.table());
    }

    #[test]
    fn heap_visits_all_permutations() {
        let mut items = [0, 1, 2, 3];
        let mut seen = std::collections::BTreeSet::new();
        for_each_permutation(&mut items, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
        let mut none: [Elem; 0] = [];
        let mut count = 0;
        for_each_permutation(&mut none, |_| count += 1);
        assert_eq!(count, 1);
    }
}
