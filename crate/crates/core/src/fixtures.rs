//! Named reference tables shipped with the crate.
//!
//! The sources live in `fixtures/*.alg` and are embedded at build time, so
//! they are available to the CLI by name as well as to tests.

use crate::algebra::FiniteAlgebra;
use crate::format::{parse, ParsedAlgebra};
use crate::transforms::ProductAlgebra;

/// `(name, file contents)` for every bundled fixture.
pub const SOURCES: &[(&str, &str)] = &[
    ("remark-3.6", include_str!("../fixtures/remark-3.6.alg")),
    ("example-3.19", include_str!("../fixtures/example-3.19.alg")),
    ("example-4.14", include_str!("../fixtures/example-4.14.alg")),
    ("example-5.5", include_str!("../fixtures/example-5.5.alg")),
    ("example-5.6", include_str!("../fixtures/example-5.6.alg")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(name, _)| *name)
}

pub fn source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".alg").unwrap_or(name);
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses a bundled fixture.
///
/// # Panics
/// If `name` is unknown or the bundled file does not parse.
pub fn load(name: &str) -> ParsedAlgebra {
    let src = source(name).unwrap_or_else(|| panic!("unknown fixture `{name}`"));
    parse(src).unwrap_or_else(|e| panic!("fixture `{name}` is malformed: {e}"))
}

fn implication(name: &str) -> FiniteAlgebra {
    match load(name) {
        ParsedAlgebra::Implication(a) => a,
        ParsedAlgebra::Product(_) => panic!("fixture `{name}` is in product form"),
    }
}

fn product(name: &str) -> ProductAlgebra {
    match load(name) {
        ParsedAlgebra::Product(p) => p,
        ParsedAlgebra::Implication(_) => panic!("fixture `{name}` is in implication form"),
    }
}

pub fn remark_3_6() -> FiniteAlgebra {
    implication("remark-3.6")
}

pub fn example_3_19() -> FiniteAlgebra {
    implication("example-3.19")
}

pub fn example_4_14() -> FiniteAlgebra {
    implication("example-4.14")
}

pub fn example_5_5() -> ProductAlgebra {
    product("example-5.5")
}

pub fn example_5_6() -> ProductAlgebra {
    product("example-5.6")
}

/// The three fixtures stored in implication form.
pub fn implication_fixtures() -> Vec<FiniteAlgebra> {
    vec![remark_3_6(), example_3_19(), example_4_14()]
}
