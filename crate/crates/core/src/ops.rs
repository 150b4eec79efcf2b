//! Syzygies, intersections, products and subquotient dimensions.
//!
//! Everything reduces to one kernel: a standard basis of the graph module
//! `{g_i ⊕ e_i}` under a block order that eliminates the value part.

use crate::error::Error;
use crate::module::{ModuleElement, Submodule};
use crate::monomial::ModuleOrder;
use crate::polynomial::Polynomial;
use crate::scalar::Coefficient;
use crate::stdbasis::{standard_basis, Budget, Colength, StandardBasis};

fn push_unique<F: Coefficient>(out: &mut Vec<ModuleElement<F>>, v: ModuleElement<F>, order: ModuleOrder) {
    if v.is_zero() {
        return;
    }
    // compare up to scalars by normalising the lead coefficient
    let lc = v.lead_term(order).map(|l| l.coefficient).unwrap_or_else(F::one);
    let v = v.scale(&(F::one() / lc));
    if !out.contains(&v) {
        out.push(v);
    }
}

/// Generators of `{a ∈ O^r : Σ a_i g_i = 0}`.
pub fn syzygies<F: Coefficient>(
    gens: &[ModuleElement<F>],
    nvars: usize,
    rank: usize,
    budget: Budget,
) -> Result<Submodule<F>, Error> {
    let r = gens.len();
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: g.rank() });
        }
    }
    let graph: Vec<ModuleElement<F>> =
        gens.iter().enumerate().map(|(i, g)| g.concat(&ModuleElement::unit(nvars, r, i))).collect();
    let order = ModuleOrder::Block { leading: rank };
    let std = standard_basis(&Submodule::new(nvars, rank + r, graph)?, order, budget)?;
    let mut out = Vec::new();
    for e in std.elements() {
        if e.components()[..rank].iter().all(Polynomial::is_zero) {
            push_unique(&mut out, e.slice(rank..rank + r), ModuleOrder::TermOverPosition);
        }
    }
    Submodule::new(nvars, r, out)
}

/// Generators of `M ∩ N`.
pub fn intersect<F: Coefficient>(m: &Submodule<F>, n: &Submodule<F>, budget: Budget) -> Result<Submodule<F>, Error> {
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch { expected: m.rank(), found: n.rank() });
    }
    let (nvars, rank) = (m.nvars(), m.rank());
    if m.is_zero() || n.is_zero() {
        return Ok(Submodule::zero(nvars, rank));
    }
    let mut combined = m.generators().to_vec();
    combined.extend(n.generators().iter().cloned());
    let syz = syzygies(&combined, nvars, rank, budget)?;
    let r = m.generators().len();
    let mut out = Vec::new();
    for s in syz.generators() {
        let v = ModuleElement::combination(&s.components()[..r], m.generators(), nvars, rank);
        push_unique(&mut out, v, ModuleOrder::TermOverPosition);
    }
    Submodule::new(nvars, rank, out)
}

/// The product ideal `I·J`.
pub fn product<F: Coefficient>(i: &Submodule<F>, j: &Submodule<F>) -> Submodule<F> {
    assert!(i.rank() == 1 && j.rank() == 1, "product is defined for ideals");
    let gi = i.ideal_generators();
    let gj = j.ideal_generators();
    Submodule::ideal(i.nvars(), gi.iter().flat_map(|a| gj.iter().map(move |b| a.mul(b))))
}

/// `M + N`, concatenating generator lists.
pub fn module_sum<F: Coefficient>(m: &Submodule<F>, n: &Submodule<F>) -> Result<Submodule<F>, Error> {
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch { expected: m.rank(), found: n.rank() });
    }
    let mut gens = m.generators().to_vec();
    gens.extend(n.generators().iter().cloned());
    Submodule::new(m.nvars(), m.rank(), gens)
}

fn determinant<F: Coefficient>(rows: &[Vec<Polynomial<F>>], nvars: usize) -> Polynomial<F> {
    match rows.len() {
        0 => Polynomial::one(nvars),
        1 => rows[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(nvars);
            for col in 0..k {
                if rows[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial<F>>> = rows[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = rows[0][col].mul(&determinant(&minor, nvars));
                acc = if col % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal of the `k×k` minors of the Jacobian matrix `(∂f_r/∂x_i)` of the
/// first `k` polynomials of `f`. Zero minors are dropped.
pub fn jacobian_minors<F: Coefficient>(f: &[Polynomial<F>], k: usize, nvars: usize) -> Result<Submodule<F>, Error> {
    if k > nvars {
        return Err(Error::MinorSize { k, n: nvars });
    }
    let jac: Vec<Vec<Polynomial<F>>> =
        f[..k].iter().map(|p| (0..nvars).map(|i| p.partial_derivative(i)).collect()).collect();
    let minors = combinations(nvars, k).into_iter().map(|cols| {
        let rows: Vec<Vec<Polynomial<F>>> =
            jac.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        determinant(&rows, nvars)
    });
    Ok(Submodule::ideal(nvars, minors))
}

/// `dim M/N` for `N ⊆ M`, as the colength in `O^r` of
/// `K = {a : Σ a_i g_i ∈ N}` where `g_1..g_r` generate `M`.
pub fn subquotient_dimension<F: Coefficient>(
    m: &Submodule<F>,
    n: &Submodule<F>,
    budget: Budget,
) -> Result<Colength, Error> {
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch { expected: m.rank(), found: n.rank() });
    }
    let std_m = standard_basis(m, ModuleOrder::TermOverPosition, budget)?;
    for (i, g) in n.generators().iter().enumerate() {
        if !std_m.contains(g)? {
            return Err(Error::NotContained(i));
        }
    }
    let r = m.generators().len();
    if r == 0 {
        return Ok(Colength::Finite(0));
    }
    let mut combined = m.generators().to_vec();
    combined.extend(n.generators().iter().cloned());
    let syz = syzygies(&combined, m.nvars(), m.rank(), budget)?;
    let k: Vec<ModuleElement<F>> = syz.generators().iter().map(|s| s.slice(0..r)).collect();
    let k = Submodule::new(m.nvars(), r, k)?;
    Ok(standard_basis(&k, ModuleOrder::TermOverPosition, budget)?.colength())
}

/// Standard basis under term-over-position, the order used for colengths.
pub fn std_top<F: Coefficient>(m: &Submodule<F>, budget: Budget) -> Result<StandardBasis<F>, Error> {
    standard_basis(m, ModuleOrder::TermOverPosition, budget)
}

/// `dim O^m / M`.
pub fn colength_of<F: Coefficient>(m: &Submodule<F>, budget: Budget) -> Result<Colength, Error> {
    Ok(std_top(m, budget)?.colength())
}
