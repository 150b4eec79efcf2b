//! Mora normal form and standard bases over the local ring.
//!
//! All computations use polynomial representatives. A standard basis under a
//! local order describes the submodule generated in the localisation at the
//! origin, which for inputs of finite colength agrees with the analytic
//! local algebra.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::Error;
use crate::module::{LeadTerm, ModuleElement, Submodule};
use crate::monomial::{ModuleOrder, Monomial};
use crate::polynomial::Polynomial;
use crate::scalar::Coefficient;

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

/// Reduction-step cap for one standard-basis run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: DEFAULT_MAX_STEPS }
    }
}

impl Budget {
    pub fn new(max_steps: u64) -> Self {
        Budget { max_steps }
    }
}

/// Dimension of a quotient over the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn is_finite(&self) -> bool {
        matches!(self, Colength::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(*v),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug)]
struct Reducer<F> {
    elem: ModuleElement<F>,
    lead: LeadTerm<F>,
    ecart: u64,
}

impl<F: Coefficient> Reducer<F> {
    /// `None` for the zero element. The stored element is scaled to lead coefficient 1.
    fn new(elem: ModuleElement<F>, order: ModuleOrder) -> Option<(Self, F)> {
        let lead = elem.lead_term(order)?;
        let inv = F::one() / lead.coefficient.clone();
        let elem = if inv.is_one() { elem } else { elem.scale(&inv) };
        let ecart = elem.max_degree() - lead.monomial.degree();
        let lead = LeadTerm { coefficient: F::one(), ..lead };
        Some((Reducer { elem, lead, ecart }, inv))
    }
}

/// Records `h = a*f - Σ b_i g_i` while reducing `f` by `g_1..g_r`.
#[derive(Clone, Debug)]
struct Tracking<F> {
    a: Polynomial<F>,
    b: Vec<Polynomial<F>>,
}

impl<F: Coefficient> Tracking<F> {
    fn scale(&self, c: &F) -> Self {
        Tracking { a: self.a.scale(c), b: self.b.iter().map(|p| p.scale(c)).collect() }
    }
}

/// Certificate for a normal form: `unit * f = Σ quotients_i * g_i + remainder`
/// with `unit(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormCertificate<F> {
    pub unit: Polynomial<F>,
    pub quotients: Vec<Polynomial<F>>,
}

struct StepCounter {
    steps: u64,
    limit: u64,
}

impl StepCounter {
    fn tick(&mut self) -> Result<(), Error> {
        self.steps += 1;
        if self.steps > self.limit {
            Err(Error::StepLimit(self.limit))
        } else {
            Ok(())
        }
    }
}

/// Picks the reducer with minimal ecart among those whose lead divides `lead`,
/// earliest position first on ties. Fixed reducers precede the ones collected
/// during the reduction.
fn pick_reducer<'a, F: Coefficient>(
    fixed: &'a [Reducer<F>],
    extra: &'a [Reducer<F>],
    lead: &LeadTerm<F>,
) -> Option<(usize, &'a Reducer<F>)> {
    let mut best: Option<(usize, &Reducer<F>)> = None;
    for (i, r) in fixed.iter().chain(extra.iter()).enumerate() {
        if r.lead.component == lead.component && r.lead.monomial.divides(&lead.monomial) {
            if best.map_or(true, |(_, b)| r.ecart < b.ecart) {
                best = Some((i, r));
                if r.ecart == 0 {
                    break;
                }
            }
        }
    }
    best
}

/// Mora's weak normal form with ecart-driven reducer selection.
fn mora_reduce<F: Coefficient>(
    f: ModuleElement<F>,
    fixed: &[Reducer<F>],
    order: ModuleOrder,
    counter: &mut StepCounter,
    mut track: Option<&mut Tracking<F>>,
    noether: Option<u64>,
) -> Result<ModuleElement<F>, Error> {
    let mut h = f;
    if let Some(bound) = noether {
        h = h.truncate_degree(bound);
    }
    let mut extra: Vec<Reducer<F>> = Vec::new();
    let mut extra_tracks: Vec<Tracking<F>> = Vec::new();
    loop {
        let Some(lead) = h.lead_term(order) else {
            return Ok(h);
        };
        let Some((idx, g)) = pick_reducer(fixed, &extra, &lead) else {
            return Ok(h);
        };
        let ecart_h = h.max_degree() - lead.monomial.degree();
        let g = g.clone();
        if g.ecart > ecart_h {
            if let Some((r, inv)) = Reducer::new(h.clone(), order) {
                if let Some(t) = track.as_deref() {
                    extra_tracks.push(t.scale(&inv));
                }
                extra.push(r);
            }
        }
        let m = g.lead.monomial.quotient_of(&lead.monomial);
        let c = -lead.coefficient.clone();
        h = h.add_mul_term(&c, &m, &g.elem);
        if let Some(bound) = noether {
            h = h.truncate_degree(bound);
        }
        if let Some(t) = track.as_deref_mut() {
            if idx < fixed.len() {
                // h - c' m g_idx  =>  b_idx += c' m  (here c = -c')
                t.b[idx] = t.b[idx].add_mul_term(&-c.clone(), &m, &Polynomial::one(t.a.nvars()));
            } else {
                let other = &extra_tracks[idx - fixed.len()];
                t.a = t.a.add_mul_term(&c, &m, &other.a);
                for (bi, oi) in t.b.iter_mut().zip(&other.b) {
                    *bi = bi.add_mul_term(&c, &m, oi);
                }
            }
        }
        counter.tick()?;
    }
}

/// Weak normal form of `f` with respect to `gens`, with a certificate
/// `u*f = Σ q_i g_i + r`, `u(0) != 0`, and no lead term of `r` divisible by a
/// lead term of `gens` in the same component.
///
/// `gens` need not be a standard basis; the remainder is then only a weak
/// normal form with respect to the listed elements.
pub fn mora_normal_form<F: Coefficient>(
    f: &ModuleElement<F>,
    gens: &[ModuleElement<F>],
    order: ModuleOrder,
) -> Result<(ModuleElement<F>, NormalFormCertificate<F>), Error> {
    let nvars = f.nvars();
    let mut fixed = Vec::new();
    let mut scales = Vec::new();
    let mut positions = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.rank() != f.rank() {
            return Err(Error::RankMismatch { expected: f.rank(), found: g.rank() });
        }
        if let Some((r, inv)) = Reducer::new(g.clone(), order) {
            fixed.push(r);
            scales.push(inv);
            positions.push(i);
        }
    }
    let mut track = Tracking { a: Polynomial::one(nvars), b: vec![Polynomial::zero(nvars); fixed.len()] };
    let mut counter = StepCounter { steps: 0, limit: DEFAULT_MAX_STEPS };
    let rem = mora_reduce(f.clone(), &fixed, order, &mut counter, Some(&mut track), None)?;
    // reducers were scaled by `inv`; fold that back into the quotients
    let mut quotients = vec![Polynomial::zero(nvars); gens.len()];
    for ((b, inv), pos) in track.b.into_iter().zip(scales).zip(positions) {
        quotients[pos] = b.scale(&inv);
    }
    Ok((rem, NormalFormCertificate { unit: track.a, quotients }))
}

/// A standard basis of a submodule with respect to a module order.
#[derive(Clone, Debug)]
pub struct StandardBasis<F> {
    input: Submodule<F>,
    order: ModuleOrder,
    elements: Vec<Reducer<F>>,
    noether: Option<u64>,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: Reverse<u64>,
    seq: Reverse<u64>,
    i: usize,
    j: usize,
}

fn s_element<F: Coefficient>(a: &Reducer<F>, b: &Reducer<F>) -> ModuleElement<F> {
    let l = a.lead.monomial.lcm(&b.lead.monomial);
    let ma = a.lead.monomial.quotient_of(&l);
    let mb = b.lead.monomial.quotient_of(&l);
    a.elem.mul_term(&ma, &F::one()).add_mul_term(&-F::one(), &mb, &b.elem)
}

/// Computes a standard basis by the Buchberger–Mora algorithm. Critical
/// pairs are processed by increasing lcm degree, then creation order.
pub fn standard_basis<F: Coefficient>(
    module: &Submodule<F>,
    order: ModuleOrder,
    budget: Budget,
) -> Result<StandardBasis<F>, Error> {
    let mut counter = StepCounter { steps: 0, limit: budget.max_steps };
    let mut basis: Vec<Reducer<F>> = Vec::new();
    let mut pairs: BinaryHeap<PairKey> = BinaryHeap::new();
    let mut seq = 0u64;
    let ideal = module.rank() == 1;
    // terms of degree >= noether lie in the module; only usable for
    // degree-compatible orders
    let degree_compatible = order == ModuleOrder::TermOverPosition;
    let mut noether: Option<u64> = None;

    let mut add = |h: ModuleElement<F>, basis: &mut Vec<Reducer<F>>, pairs: &mut BinaryHeap<PairKey>| -> bool {
        let Some((r, _)) = Reducer::new(h, order) else {
            return false;
        };
        let j = basis.len();
        for (i, s) in basis.iter().enumerate() {
            if s.lead.component != r.lead.component {
                continue;
            }
            if ideal && s.lead.monomial.is_coprime(&r.lead.monomial) {
                continue;
            }
            let degree = s.lead.monomial.lcm(&r.lead.monomial).degree();
            pairs.push(PairKey { degree: Reverse(degree), seq: Reverse(seq), i, j });
            seq += 1;
        }
        basis.push(r);
        true
    };

    let nvars = module.nvars();
    let rank = module.rank();
    for g in module.generators() {
        let h = mora_reduce(g.clone(), &basis, order, &mut counter, None, noether)?;
        if add(h, &mut basis, &mut pairs) && degree_compatible {
            noether = noether_bound(&basis, nvars, rank).or(noether);
        }
    }
    while let Some(PairKey { i, j, .. }) = pairs.pop() {
        if let Some(bound) = noether {
            // both leads at or past the bound: the pair lives inside m^bound
            if basis[i].lead.monomial.lcm(&basis[j].lead.monomial).degree() >= bound {
                continue;
            }
        }
        let s = s_element(&basis[i], &basis[j]);
        counter.tick()?;
        let h = mora_reduce(s, &basis, order, &mut counter, None, noether)?;
        if add(h, &mut basis, &mut pairs) && degree_compatible {
            noether = noether_bound(&basis, nvars, rank).or(noether);
        }
    }
    Ok(StandardBasis { input: module.clone(), order, elements: basis, noether })
}

fn minimal_monomials(mut leads: Vec<Monomial>) -> Vec<Monomial> {
    leads.sort_by_key(|m| m.degree());
    leads.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in leads {
        if !minimal.iter().any(|g| g.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal
}

/// Smallest `D` with every monomial of degree `D` in the lead module, in
/// every component; `None` while some component has infinite colength.
fn noether_bound<F: Coefficient>(basis: &[Reducer<F>], nvars: usize, rank: usize) -> Option<u64> {
    let mut bound = 0;
    for c in 0..rank {
        let leads = minimal_monomials(
            basis.iter().filter(|r| r.lead.component == c).map(|r| r.lead.monomial.clone()).collect(),
        );
        let (_, max_deg) = staircase(&leads, nvars)?;
        bound = bound.max(max_deg.map_or(0, |d| d + 1));
    }
    Some(bound)
}

/// Number of standard monomials and their largest degree (`None` if there
/// are none); `None` overall if the staircase is infinite.
fn staircase(leads: &[Monomial], nvars: usize) -> Option<(u64, Option<u64>)> {
    if leads.iter().any(Monomial::is_one) {
        return Some((0, None));
    }
    let mut has_power = vec![false; nvars];
    for m in leads {
        if let Some(i) = m.pure_power_variable() {
            has_power[i] = true;
        }
    }
    if has_power.iter().any(|h| !h) {
        return None;
    }
    let mut exps = vec![0u32; nvars];
    let mut max_deg = None;
    let count = count_standard(leads, &mut exps, 0, &mut max_deg);
    Some((count, max_deg))
}

impl<F: Coefficient> StandardBasis<F> {
    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.input.rank()
    }

    pub fn nvars(&self) -> usize {
        self.input.nvars()
    }

    /// The submodule this basis was computed from.
    pub fn input(&self) -> &Submodule<F> {
        &self.input
    }

    pub fn elements(&self) -> impl Iterator<Item = &ModuleElement<F>> {
        self.elements.iter().map(|r| &r.elem)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead_terms(&self) -> impl Iterator<Item = (&Monomial, usize)> {
        self.elements.iter().map(|r| (&r.lead.monomial, r.lead.component))
    }

    /// Minimal generators of the lead-term module in component `c`.
    pub fn minimal_leads(&self, c: usize) -> Vec<Monomial> {
        minimal_monomials(
            self.elements.iter().filter(|r| r.lead.component == c).map(|r| r.lead.monomial.clone()).collect(),
        )
    }

    /// Degree from which every term lies in the module, when known.
    pub fn noether_bound(&self) -> Option<u64> {
        self.noether
    }

    /// Weak normal form of `f` against the basis.
    pub fn normal_form(&self, f: &ModuleElement<F>) -> Result<ModuleElement<F>, Error> {
        if f.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: f.rank() });
        }
        let mut counter = StepCounter { steps: 0, limit: DEFAULT_MAX_STEPS };
        mora_reduce(f.clone(), &self.elements, self.order, &mut counter, None, self.noether)
    }

    pub fn contains(&self, f: &ModuleElement<F>) -> Result<bool, Error> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_poly(&self, f: &Polynomial<F>) -> Result<bool, Error> {
        self.contains(&ModuleElement::from_poly(f.clone()))
    }

    /// Dimension of `O^m / M` over the ground field: the number of terms
    /// `x^a e_c` outside the lead-term module.
    pub fn colength(&self) -> Colength {
        let mut total = 0u64;
        for c in 0..self.rank() {
            match staircase(&self.minimal_leads(c), self.nvars()) {
                Some((count, _)) => total += count,
                None => return Colength::Infinite,
            }
        }
        Colength::Finite(total)
    }

    /// Krull dimension of `O / I` for an ideal: the size of a largest set of
    /// variables that supports no lead monomial. Returns 0 for the unit ideal.
    pub fn krull_dimension(&self) -> usize {
        assert_eq!(self.rank(), 1, "krull_dimension is defined for ideals only");
        let n = self.nvars();
        let leads = self.minimal_leads(0);
        if leads.iter().any(Monomial::is_one) {
            return 0;
        }
        let supports: Vec<u32> = leads
            .iter()
            .map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |acc, (i, _)| acc | (1 << i)))
            .collect();
        (0u32..(1 << n))
            .filter(|&set| supports.iter().all(|&s| s & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Counts exponent vectors not divisible by any of `leads`, walking the
/// staircase one variable at a time. Standard monomials form an order ideal,
/// so a divisible prefix ends the scan in that direction.
fn count_standard(leads: &[Monomial], exps: &mut Vec<u32>, k: usize, max_deg: &mut Option<u64>) -> u64 {
    let n = exps.len();
    let mut total = 0;
    let mut e = 0u32;
    loop {
        exps[k] = e;
        let m = Monomial::from_exponents(exps);
        if leads.iter().any(|l| l.divides(&m)) {
            break;
        }
        total += if k + 1 == n {
            let d = m.degree();
            *max_deg = Some(max_deg.map_or(d, |x| x.max(d)));
            1
        } else {
            count_standard(leads, exps, k + 1, max_deg)
        };
        e += 1;
    }
    exps[k] = 0;
    total
}
