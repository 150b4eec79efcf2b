//! Brute-force linear-algebra oracles, independent of the standard-basis code.
//!
//! `O/(M + m^D)` is computed as the quotient of the span of all terms
//! `x^a e_c` with `|a| < D` by the span of the truncated products
//! `x^b g` (`|b| < D`). Once two consecutive truncation degrees agree,
//! Nakayama's lemma gives `m^D ⊆ M` and the value is the true colength.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use germlab_core::{Monomial, Poly, Rational};
use num_traits::{One, Zero};

pub type Row = BTreeMap<usize, Rational>;

/// Incremental exact row echelon form over the rationals.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: Row) -> bool {
        loop {
            let Some((&col, _)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(p) => {
                    let factor = row[&col].clone();
                    for (c, v) in p {
                        let nv = row.get(c).cloned().unwrap_or_else(Rational::zero) - factor.clone() * v.clone();
                        if nv.is_zero() {
                            row.remove(c);
                        } else {
                            row.insert(*c, nv);
                        }
                    }
                }
                None => {
                    let inv = Rational::one() / row[&col].clone();
                    for v in row.values_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduced form of `row` against the current pivots.
    pub fn reduce(&self, mut row: Row) -> Row {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for col in cols {
            if let Some(factor) = row.get(&col).cloned() {
                for (c, v) in &self.pivots[&col] {
                    let nv = row.get(c).cloned().unwrap_or_else(Rational::zero) - factor.clone() * v.clone();
                    if nv.is_zero() {
                        row.remove(c);
                    } else {
                        row.insert(*c, nv);
                    }
                }
            }
        }
        row
    }
}

/// All exponent vectors in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn monomials_below(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

fn shift(m: &Monomial, by: &[u32]) -> Vec<u32> {
    m.exponents().iter().zip(by).map(|(a, b)| a + b).collect()
}

/// `dim O^r / (M + m^D O^r)` for `M` generated by `gens` (each a vector of
/// `r` polynomials).
pub fn truncated_colength(gens: &[Vec<Poly>], nvars: usize, rank: usize, d: u32) -> usize {
    let basis = monomials_below(nvars, d);
    let index: HashMap<(Vec<u32>, usize), usize> =
        basis.iter().flat_map(|m| (0..rank).map(move |c| (m.clone(), c))).enumerate().map(|(i, k)| (k, i)).collect();
    let mut ech = Echelon::default();
    for g in gens {
        for b in &basis {
            let mut row = Row::new();
            for (c, p) in g.iter().enumerate() {
                for (m, coeff) in p.terms() {
                    let e = shift(m, b);
                    if e.iter().sum::<u32>() < d {
                        row.insert(index[&(e, c)], coeff.clone());
                    }
                }
            }
            ech.insert(row);
        }
    }
    index.len() - ech.rank()
}

/// Stabilised truncated colength; `None` if no two consecutive degrees up
/// to `max_degree` agree.
pub fn oracle_colength(gens: &[Vec<Poly>], nvars: usize, rank: usize, max_degree: u32) -> Option<usize> {
    let mut prev = truncated_colength(gens, nvars, rank, 1);
    let mut agreed = 0;
    for d in 2..=max_degree {
        let v = truncated_colength(gens, nvars, rank, d);
        if v == prev {
            agreed += 1;
            if agreed == 2 {
                return Some(v);
            }
        } else {
            agreed = 0;
        }
        prev = v;
    }
    None
}

/// Convenience for ideals.
pub fn oracle_ideal_colength(gens: &[Poly], nvars: usize, max_degree: u32) -> Option<usize> {
    let gens: Vec<Vec<Poly>> = gens.iter().map(|g| vec![g.clone()]).collect();
    oracle_colength(&gens, nvars, 1, max_degree)
}

/// Basis of the homogeneous solutions `(a_1, ..., a_r)` of
/// `Σ a_i g_i = 0` where every `g_i` is homogeneous and `a_i` has degree
/// `e - deg g_i` (negative degrees force `a_i = 0`).
pub fn homogeneous_syzygies(gens: &[Poly], nvars: usize, e: u32) -> Vec<Vec<Poly>> {
    let unknowns: Vec<(usize, Vec<u32>)> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            let dg = g.min_degree() as u32;
            let mons = if e >= dg { monomials_of_degree(nvars, e - dg) } else { vec![] };
            mons.into_iter().map(move |m| (i, m))
        })
        .collect();
    solve_homogeneous(gens.len(), nvars, &unknowns, |(i, m)| {
        gens[*i].terms().iter().map(|(t, c)| (shift(t, m), c.clone())).collect()
    })
}

/// Vector fields with homogeneous components of degree `e` tangent to the
/// hypersurface `h = 0` of a homogeneous `h`: `ξ(h) = λ h`.
pub fn homogeneous_tangent_fields(h: &Poly, nvars: usize, e: u32) -> Vec<Vec<Poly>> {
    let partials: Vec<Poly> = (0..nvars).map(|i| h.partial_derivative(i)).collect();
    // slots 0..n: ξ components; slot n: -λ multiplying h
    let mut gens = partials;
    gens.push(h.clone());
    let unknowns: Vec<(usize, Vec<u32>)> = (0..nvars)
        .flat_map(|i| monomials_of_degree(nvars, e).into_iter().map(move |m| (i, m)))
        .chain(if e >= 1 { monomials_of_degree(nvars, e - 1) } else { vec![] }.into_iter().map(|m| (nvars, m)))
        .collect();
    let sols = solve_homogeneous(nvars + 1, nvars, &unknowns, |(i, m)| {
        gens[*i].terms().iter().map(|(t, c)| (shift(t, m), c.clone())).collect()
    });
    sols.into_iter()
        .map(|mut v| {
            v.truncate(nvars);
            v
        })
        .collect()
}

fn solve_homogeneous(
    slots: usize,
    nvars: usize,
    unknowns: &[(usize, Vec<u32>)],
    image: impl Fn(&(usize, Vec<u32>)) -> Vec<(Vec<u32>, Rational)>,
) -> Vec<Vec<Poly>> {
    // columns = unknowns, rows = monomials of the image; find the kernel
    let mut row_index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut rows: Vec<Row> = Vec::new();
    for (j, u) in unknowns.iter().enumerate() {
        for (m, c) in image(u) {
            let len = row_index.len();
            let r = *row_index.entry(m).or_insert(len);
            if r == rows.len() {
                rows.push(Row::new());
            }
            let v = rows[r].get(&j).cloned().unwrap_or_else(Rational::zero) + c;
            if v.is_zero() {
                rows[r].remove(&j);
            } else {
                rows[r].insert(j, v);
            }
        }
    }
    let mut ech = Echelon::default();
    for r in rows {
        ech.insert(r);
    }
    // fully reduce pivot rows, then read off the kernel
    let pivot_cols: Vec<usize> = ech.pivots.keys().copied().collect();
    let mut reduced: BTreeMap<usize, Row> = ech.pivots.clone();
    // back substitution: process pivots from the right
    let mut cols_desc = pivot_cols.clone();
    cols_desc.reverse();
    for (k, &pc) in cols_desc.iter().enumerate() {
        let row = reduced[&pc].clone();
        for &other in &cols_desc[k + 1..] {
            let orow = reduced.get_mut(&other).unwrap();
            if let Some(f) = orow.get(&pc).cloned() {
                for (c, v) in &row {
                    let nv = orow.get(c).cloned().unwrap_or_else(Rational::zero) - f.clone() * v.clone();
                    if nv.is_zero() {
                        orow.remove(c);
                    } else {
                        orow.insert(*c, nv);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for free in (0..unknowns.len()).filter(|c| !reduced.contains_key(c)) {
        let mut values: HashMap<usize, Rational> = HashMap::new();
        values.insert(free, Rational::one());
        for (&pc, row) in &reduced {
            if let Some(v) = row.get(&free) {
                values.insert(pc, -v.clone());
            }
        }
        let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); slots];
        for (j, v) in values {
            let (slot, m) = &unknowns[j];
            comps[*slot].push((Monomial::from_exponents(m), v));
        }
        out.push(comps.into_iter().map(|t| Poly::from_terms(nvars, t)).collect());
    }
    out
}
