//! Monomials and the local monomial orders used throughout the crate.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u32;

/// A dense exponent vector `x_1^a_1 ... x_n^a_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial { exps: other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable if this is a pure power `x_i^e`, `e >= 1`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Derivative index bookkeeping: `x^a -> x^(a - e_i)`, `None` when `a_i = 0`.
    pub(crate) fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: Exponent) {
        self.exps[i] = e;
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn write_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Negative-degree reverse-lexicographic order: `x^a ≻ x^b` iff `|a| < |b|`,
/// or `|a| = |b|` and the rightmost nonzero entry of `a - b` is negative.
///
/// `1` is the largest monomial, which makes this a local order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LocalOrder;

impl LocalOrder {
    /// `Greater` means `a ≻ b`.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match b.degree().cmp(&a.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
            if x != y {
                // rightmost nonzero of a - b negative  =>  a ≻ b
                return if x < y { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

/// Orders on terms `x^a e_i` of a free module `O^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Compare monomials first; on ties the smaller component index wins.
    TermOverPosition,
    /// Every term in a component `< leading` beats every term in a component
    /// `>= leading`; inside a block, term-over-position.
    Block { leading: usize },
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder::TermOverPosition
    }
}

impl ModuleOrder {
    pub fn base(&self) -> LocalOrder {
        LocalOrder
    }

    /// `Greater` means `(a, i) ≻ (b, j)`.
    pub fn compare(&self, a: &Monomial, i: usize, b: &Monomial, j: usize) -> Ordering {
        if let ModuleOrder::Block { leading } = *self {
            let (ba, bb) = (i < leading, j < leading);
            if ba != bb {
                return if ba { Ordering::Greater } else { Ordering::Less };
            }
        }
        match LocalOrder.compare(a, b) {
            Ordering::Equal => j.cmp(&i),
            ord => ord,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn local_order_examples() {
        let o = LocalOrder;
        assert_eq!(o.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn module_orders() {
        let top = ModuleOrder::TermOverPosition;
        assert_eq!(top.compare(&m(&[0]), 1, &m(&[1]), 0), Ordering::Greater);
        assert_eq!(top.compare(&m(&[1]), 0, &m(&[1]), 1), Ordering::Greater);
        let blk = ModuleOrder::Block { leading: 1 };
        assert_eq!(blk.compare(&m(&[5]), 0, &m(&[0]), 1), Ordering::Greater);
        assert_eq!(blk.compare(&m(&[0]), 2, &m(&[0]), 1), Ordering::Less);
    }

    fn monomial3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 3).prop_map(|v| m(&v))
    }

    proptest! {
        #[test]
        fn order_axioms(a in monomial3(), b in monomial3(), c in monomial3()) {
            let o = LocalOrder;
            // totality / antisymmetry
            prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
            prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
            // transitivity
            if o.compare(&a, &b) == Ordering::Greater && o.compare(&b, &c) == Ordering::Greater {
                prop_assert_eq!(o.compare(&a, &c), Ordering::Greater);
            }
            // multiplicativity
            prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
            // 1 is maximal
            if !a.is_one() {
                prop_assert_eq!(o.compare(&Monomial::one(3), &a), Ordering::Greater);
            }
        }
    }
}
