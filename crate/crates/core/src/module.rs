//! Elements and finitely generated submodules of free modules `O^m`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;
use crate::monomial::{ModuleOrder, Monomial};
use crate::polynomial::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Coefficient;

/// A vector `(p_1, ..., p_m)` in `O^m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleElement<F> {
    components: Vec<Polynomial<F>>,
}

/// Lead term of a module element: monomial, component index and coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadTerm<F> {
    pub monomial: Monomial,
    pub component: usize,
    pub coefficient: F,
}

impl<F: Coefficient> ModuleElement<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Self {
        debug_assert!(components.windows(2).all(|w| w[0].nvars() == w[1].nvars()));
        ModuleElement { components }
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        ModuleElement { components: vec![Polynomial::zero(nvars); rank] }
    }

    /// The `i`-th unit vector `e_i`.
    pub fn unit(nvars: usize, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(nvars, rank);
        v.components[i] = Polynomial::one(nvars);
        v
    }

    /// `p * e_i`.
    pub fn single(rank: usize, i: usize, p: Polynomial<F>) -> Self {
        let mut v = Self::zero(p.nvars(), rank);
        v.components[i] = p;
        v
    }

    /// Rank-1 element wrapping a polynomial.
    pub fn from_poly(p: Polynomial<F>) -> Self {
        ModuleElement { components: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components.first().map_or(0, |p| p.nvars())
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial<F> {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial<F>> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn lead_term(&self, order: ModuleOrder) -> Option<LeadTerm<F>> {
        let mut best: Option<(usize, &Monomial, &F)> = None;
        for (i, p) in self.components.iter().enumerate() {
            if let Some((m, c)) = p.lead() {
                let better = match best {
                    None => true,
                    Some((j, bm, _)) => order.compare(m, i, bm, j) == Ordering::Greater,
                };
                if better {
                    best = Some((i, m, c));
                }
            }
        }
        best.map(|(component, m, c)| LeadTerm { monomial: m.clone(), component, coefficient: c.clone() })
    }

    /// Largest total degree of any term.
    pub fn max_degree(&self) -> u64 {
        self.components.iter().map(Polynomial::max_degree).max().unwrap_or(0)
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_degree(mut self, bound: u64) -> Self {
        for p in &mut self.components {
            p.truncate_degree(bound);
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        ModuleElement { components: self.components.iter().map(Polynomial::neg).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleElement { components: self.components.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        ModuleElement { components: self.components.iter().map(|q| q.mul(p)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        ModuleElement { components: self.components.iter().map(|q| q.mul_term(m, c)).collect() }
    }

    /// `self + c * m * other`.
    pub fn add_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.add_mul_term(c, m, b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Polynomial<F>, &Polynomial<F>) -> Polynomial<F>) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleElement { components: self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect() }
    }

    /// Components `range` as a new element.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        ModuleElement { components: self.components[range].to_vec() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        ModuleElement { components }
    }

    /// `Σ a_i g_i` for scalars-from-the-ring `a_i`.
    pub fn combination(coeffs: &[Polynomial<F>], gens: &[ModuleElement<F>], nvars: usize, rank: usize) -> Self {
        assert_eq!(coeffs.len(), gens.len());
        coeffs.iter().zip(gens).fold(Self::zero(nvars, rank), |acc, (a, g)| acc.add(&g.mul_poly(a)))
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> DisplayElement<'a, F> {
        DisplayElement { elem: self, ring }
    }
}

pub struct DisplayElement<'a, F> {
    elem: &'a ModuleElement<F>,
    ring: &'a RingSpec,
}

impl<F: Coefficient> fmt::Display for DisplayElement<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.rank() == 1 {
            return write!(f, "{}", self.elem.components[0].display(self.ring));
        }
        f.write_str("[")?;
        for (i, p) in self.elem.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", p.display(self.ring))?;
        }
        f.write_str("]")
    }
}

/// A submodule of `O^m` given by generators. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Submodule<F> {
    nvars: usize,
    rank: usize,
    generators: Vec<ModuleElement<F>>,
}

impl<F: Coefficient> Submodule<F> {
    pub fn new(nvars: usize, rank: usize, generators: Vec<ModuleElement<F>>) -> Result<Self, Error> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: g.rank() });
            }
        }
        Ok(Submodule { nvars, rank, generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        Submodule { nvars, rank, generators: Vec::new() }
    }

    /// The whole free module `O^m`.
    pub fn free(nvars: usize, rank: usize) -> Self {
        Submodule { nvars, rank, generators: (0..rank).map(|i| ModuleElement::unit(nvars, rank, i)).collect() }
    }

    /// An ideal of `O`, as a rank-1 submodule.
    pub fn ideal(nvars: usize, generators: impl IntoIterator<Item = Polynomial<F>>) -> Self {
        Submodule {
            nvars,
            rank: 1,
            generators: generators.into_iter().filter(|p| !p.is_zero()).map(ModuleElement::from_poly).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement<F>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators of a rank-1 submodule as polynomials.
    pub fn ideal_generators(&self) -> Vec<Polynomial<F>> {
        assert_eq!(self.rank, 1, "not an ideal");
        self.generators.iter().map(|g| g.component(0).clone()).collect()
    }

    pub fn push(&mut self, g: ModuleElement<F>) {
        assert_eq!(g.rank(), self.rank);
        if !g.is_zero() {
            self.generators.push(g);
        }
    }
}
