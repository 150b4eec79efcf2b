#![allow(dead_code)]

pub mod corpus;
pub mod oracle;

use germlab_core::{parse_polynomial, Budget, Element, Germ, Module, Poly, RingSpec};

pub fn ring(vars: &[&str]) -> RingSpec {
    RingSpec::new(vars).unwrap()
}

pub fn poly(r: &RingSpec, s: &str) -> Poly {
    parse_polynomial(s, r).unwrap()
}

pub fn polys(r: &RingSpec, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|t| poly(r, t)).collect()
}

pub fn ideal(r: &RingSpec, s: &[&str]) -> Module {
    Module::ideal(r.nvars(), polys(r, s))
}

pub fn vector(r: &RingSpec, s: &[&str]) -> Element {
    Element::new(polys(r, s))
}

pub fn germ(vars: &[&str], gens: &[&str]) -> Germ {
    let r = ring(vars);
    let g = polys(&r, gens);
    Germ::new(r, g, Budget::default()).unwrap()
}

/// Two-way membership of generators, in the local ring.
pub fn same_module(a: &Module, b: &Module) -> bool {
    let sa = germlab_core::ops::std_top(a, Budget::default()).unwrap();
    let sb = germlab_core::ops::std_top(b, Budget::default()).unwrap();
    a.generators().iter().all(|g| sb.contains(g).unwrap()) && b.generators().iter().all(|g| sa.contains(g).unwrap())
}

pub fn contained_in(a: &Module, b: &Module) -> bool {
    let sb = germlab_core::ops::std_top(b, Budget::default()).unwrap();
    a.generators().iter().all(|g| sb.contains(g).unwrap())
}
