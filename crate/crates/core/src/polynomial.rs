//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;

use crate::monomial::{LocalOrder, Monomial};
use crate::ring::RingSpec;
use crate::scalar::Coefficient;

/// A polynomial in `nvars` variables.
///
/// Terms are kept strictly decreasing with respect to [`LocalOrder`], so the
/// first term is the lead term and the last one has the largest total degree.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: Vec<(Monomial, F)>,
}

impl<F: Coefficient> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(m, c)] }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::variable(nvars, i), F::one())
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut terms: Vec<(Monomial, F)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| LocalOrder.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.clone() + c;
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((m, c)),
            }
        }
        Polynomial { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    /// Largest total degree of a term (0 for the zero polynomial).
    pub fn max_degree(&self) -> u64 {
        self.terms.last().map_or(0, |(m, _)| m.degree())
    }

    /// Smallest total degree of a term, i.e. the order of vanishing at 0.
    pub fn min_degree(&self) -> u64 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_degree(&mut self, bound: u64) {
        // terms are sorted by increasing degree
        let keep = self.terms.partition_point(|(m, _)| m.degree() < bound);
        self.terms.truncate(keep);
    }

    pub fn constant_term(&self) -> F {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => F::zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.iter().find(|(t, _)| t == m).map_or_else(F::zero, |(_, c)| c.clone())
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    /// `self + c * m * other`, merging in one pass.
    pub fn add_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), x.clone() * c.clone())).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match LocalOrder.compare(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca.clone() + cb;
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_mul_term(&F::one(), &Monomial::one(self.nvars), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_mul_term(&-F::one(), &Monomial::one(self.nvars), other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(self.nvars);
        for (m, c) in &small.terms {
            acc = acc.add_mul_term(c, m, large);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index {i} out of range");
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponent(i);
                m.lower(i).map(|lm| (lm, c.clone() * F::from_integer(i64::from(e))))
            }),
        )
    }

    /// Multiplies by the inverse of the lead coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, c)) if !c.is_one() => self.scale(&(F::one() / c.clone())),
            _ => self.clone(),
        }
    }

    /// All monomials share one weighted degree under `weights`.
    pub fn is_weighted_homogeneous(&self, weights: &[F]) -> bool {
        let deg = |m: &Monomial| {
            m.exponents()
                .iter()
                .zip(weights)
                .fold(F::zero(), |acc, (&e, w)| acc + w.clone() * F::from_integer(i64::from(e)))
        };
        let mut it = self.terms.iter();
        match it.next() {
            None => true,
            Some((m0, _)) => {
                let d0 = deg(m0);
                it.all(|(m, _)| deg(m) == d0)
            }
        }
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> DisplayPoly<'a, F> {
        DisplayPoly { poly: self, ring }
    }
}

/// Renders a polynomial in the input grammar, e.g. `2/3*x*y - y^3`.
pub struct DisplayPoly<'a, F> {
    poly: &'a Polynomial<F>,
    ring: &'a RingSpec,
}

impl<F: Coefficient> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let (num, den) = c.to_fraction_strings();
            let (neg, num) = match num.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, num),
            };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit_coeff = num == "1" && den == "1";
            if !unit_coeff || m.is_one() {
                f.write_str(&num)?;
                if den != "1" {
                    write!(f, "/{den}")?;
                }
                if !m.is_one() {
                    f.write_str("*")?;
                }
            }
            if !m.is_one() {
                m.write_with(self.ring.variables(), f)?;
            }
        }
        Ok(())
    }
}
