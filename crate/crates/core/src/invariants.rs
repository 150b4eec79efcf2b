//! Milnor and Tjurina numbers of complete intersections, generic linear
//! slices, weight detection, and the report of derived invariants.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derlog::{mu_br, mu_br_rel, tau_br, VarietyGerm};
use crate::error::{Error, IcisViolation};
use crate::linalg::kernel;
use crate::module::{ModuleElement, Submodule};
use crate::ops::{colength_of, intersect, jacobian_minors, module_sum, product, std_top, subquotient_dimension};
use crate::polynomial::Polynomial;
use crate::scalar::Coefficient;
use crate::stdbasis::{Budget, Colength};

pub const GENERIC_COEFFICIENT_RANGE: i64 = 100;
pub const GENERIC_ATTEMPTS: usize = 32;

fn finite_or(c: Colength, what: impl Into<String>) -> Result<u64, Error> {
    c.finite().ok_or_else(|| Error::InfiniteColength(what.into()))
}

/// Milnor number of a hypersurface germ: `dim O / Jf`.
pub fn milnor_hypersurface<F: Coefficient>(f: &Polynomial<F>, budget: Budget) -> Result<Colength, Error> {
    let n = f.nvars();
    colength_of(&Submodule::ideal(n, (0..n).map(|i| f.partial_derivative(i))), budget)
}

/// Tjurina number of a hypersurface germ: `dim O / (Jf + ⟨f⟩)`.
pub fn tjurina_hypersurface<F: Coefficient>(f: &Polynomial<F>, budget: Budget) -> Result<Colength, Error> {
    let n = f.nvars();
    let gens = (0..n).map(|i| f.partial_derivative(i)).chain(std::iter::once(f.clone()));
    colength_of(&Submodule::ideal(n, gens), budget)
}

/// Checks that `gens` define an ICIS of dimension `n - k`; returns that dimension.
pub fn verify_icis<F: Coefficient>(gens: &[Polynomial<F>], nvars: usize, budget: Budget) -> Result<usize, Error> {
    let k = gens.len();
    if k == 0 {
        return Err(Error::IcisViolation(IcisViolation::Empty));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() || !g.constant_term().is_zero() {
            return Err(Error::IcisViolation(IcisViolation::NotVanishing(i + 1)));
        }
    }
    let ideal = Submodule::ideal(nvars, gens.iter().cloned());
    let found = std_top(&ideal, budget)?.krull_dimension();
    let expected = nvars.saturating_sub(k);
    if k > nvars || found != expected {
        return Err(Error::IcisViolation(IcisViolation::Dimension { found, expected }));
    }
    let singular = module_sum(&ideal, &jacobian_minors(gens, k, nvars)?)?;
    if !colength_of(&singular, budget)?.is_finite() {
        return Err(Error::IcisViolation(IcisViolation::NonIsolated { k }));
    }
    Ok(expected)
}

/// Milnor number of the ICIS defined by `f_1..f_k`, by the Lê–Greuel
/// recursion `μ_j + μ_{j-1} = dim O/⟨f_1..f_{j-1}, J_j(f_1..f_j)⟩`, `μ_0 = 0`.
pub fn milnor_icis<F: Coefficient>(gens: &[Polynomial<F>], nvars: usize, budget: Budget) -> Result<u64, Error> {
    let k = gens.len();
    if k == 0 {
        return Err(Error::IcisViolation(IcisViolation::Empty));
    }
    let mut prev = 0u64;
    for j in 1..=k {
        if let Err(e) = verify_icis(&gens[..j], nvars, budget) {
            return Err(match e {
                Error::IcisViolation(v) if j < k => Error::IcisViolation(IcisViolation::Truncation(j, Box::new(v))),
                other => other,
            });
        }
        let base = Submodule::ideal(nvars, gens[..j - 1].iter().cloned());
        let ideal = module_sum(&base, &jacobian_minors(&gens[..j], j, nvars)?)?;
        let total = finite_or(colength_of(&ideal, budget)?, format!("Lê–Greuel colength at step {j}"))?;
        prev = total
            .checked_sub(prev)
            .ok_or_else(|| Error::Precondition(format!("Lê–Greuel step {j} produced a negative Milnor number")))?;
    }
    Ok(prev)
}

/// Tjurina number `dim O^k / (⟨df(e_i)⟩ + I·O^k)` of an ICIS; 0 for `C^n`.
pub fn tjurina_icis<F: Coefficient>(x: &VarietyGerm<F>) -> Result<u64, Error> {
    if x.is_ambient() {
        return Ok(0);
    }
    let n = x.nvars();
    let gens = x.generators();
    let k = gens.len();
    let mut elems: Vec<ModuleElement<F>> =
        (0..n).map(|i| ModuleElement::new(gens.iter().map(|g| g.partial_derivative(i)).collect())).collect();
    for g in gens {
        for l in 0..k {
            elems.push(ModuleElement::single(k, l, g.clone()));
        }
    }
    let m = Submodule::new(n, k, elems)?;
    finite_or(colength_of(&m, x.budget())?, "Tjurina module")
}

/// Milnor number of `X`; 0 for `C^n`.
pub fn milnor_of_germ<F: Coefficient>(x: &VarietyGerm<F>) -> Result<u64, Error> {
    if x.is_ambient() {
        return Ok(0);
    }
    milnor_icis(x.generators(), x.nvars(), x.budget())
}

/// Milnor number of `X ∩ g^{-1}(0)`, the ICIS `I(X,0) + ⟨g⟩`.
pub fn milnor_of_slice<F: Coefficient>(x: &VarietyGerm<F>, g: &Polynomial<F>) -> Result<u64, Error> {
    let mut gens = x.generators().to_vec();
    gens.push(g.clone());
    milnor_icis(&gens, x.nvars(), x.budget())
}

/// A linear form accepted as generic with respect to `X`, together with
/// `μ(X ∩ p^{-1}(0))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericSlice<F> {
    pub form: Polynomial<F>,
    pub coefficients: Vec<i64>,
    pub slice_milnor: u64,
    pub attempts: usize,
}

/// Accepts `p` iff `I(X,0) + ⟨p⟩` is an ICIS with finite Milnor number.
pub fn accept_linear_form<F: Coefficient>(x: &VarietyGerm<F>, p: &Polynomial<F>) -> Result<Option<u64>, Error> {
    match milnor_of_slice(x, p) {
        Ok(mu) => Ok(Some(mu)),
        Err(Error::IcisViolation(_)) | Err(Error::InfiniteColength(_)) | Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Draws `p = Σ c_i x_i` with `c_i` uniform in `[-100, 100]` from a seeded
/// ChaCha stream, redrawing until the slice is accepted (at most 32 draws).
pub fn generic_linear_form<F: Coefficient>(x: &VarietyGerm<F>, seed: u64) -> Result<GenericSlice<F>, Error> {
    if x.dimension() < 1 {
        return Err(Error::Precondition("generic slices need dim(X,0) >= 1".into()));
    }
    let n = x.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=GENERIC_ATTEMPTS {
        let coefficients: Vec<i64> =
            (0..n).map(|_| rng.gen_range(-GENERIC_COEFFICIENT_RANGE..=GENERIC_COEFFICIENT_RANGE)).collect();
        if coefficients.iter().all(|&c| c == 0) {
            continue;
        }
        let form = coefficients
            .iter()
            .enumerate()
            .fold(Polynomial::zero(n), |acc, (i, &c)| acc.add(&Polynomial::variable(n, i).scale(&F::from_integer(c))));
        if let Some(slice_milnor) = accept_linear_form(x, &form)? {
            return Ok(GenericSlice { form, coefficients, slice_milnor, attempts: attempt });
        }
    }
    Err(Error::GenericityExhausted(GENERIC_ATTEMPTS))
}

const WEIGHT_SWEEP_LIMIT: usize = 200_000;

/// Positive weights making `f` and every generator of `X` weighted
/// homogeneous, scaled to a primitive integer vector; `None` if the weight
/// system has no positive solution (within a bounded search).
pub fn detect_quasihomogeneous<F: Coefficient>(f: &Polynomial<F>, x: &VarietyGerm<F>) -> Option<Vec<F>> {
    let n = x.nvars();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for p in std::iter::once(f).chain(x.generators()) {
        let mut terms = p.terms().iter();
        let Some((m0, _)) = terms.next() else { continue };
        for (m, _) in terms {
            rows.push(
                m.exponents()
                    .iter()
                    .zip(m0.exponents())
                    .map(|(&a, &b)| F::from_integer(i64::from(a) - i64::from(b)))
                    .collect(),
            );
        }
    }
    let basis = kernel(&rows, n);
    if basis.is_empty() {
        return None;
    }
    let dim = basis.len();
    let positive = |coeffs: &[i64]| -> Option<Vec<F>> {
        let w: Vec<F> = (0..n)
            .map(|i| basis.iter().zip(coeffs).fold(F::zero(), |acc, (b, &c)| acc + b[i].clone() * F::from_integer(c)))
            .collect();
        w.iter().all(Coefficient::is_positive_value).then_some(w)
    };
    // sweep integer combinations of the kernel basis by growing max-norm
    let mut bound = 1i64;
    let mut visited = 0usize;
    while visited < WEIGHT_SWEEP_LIMIT {
        let side = (2 * bound + 1) as usize;
        let total = side.checked_pow(dim as u32).unwrap_or(usize::MAX);
        if total > WEIGHT_SWEEP_LIMIT {
            break;
        }
        let mut coeffs = vec![0i64; dim];
        for idx in 0..total {
            let mut r = idx;
            for c in coeffs.iter_mut() {
                *c = (r % side) as i64 - bound;
                r /= side;
            }
            if coeffs.iter().map(|c| c.abs()).max() != Some(bound) {
                continue;
            }
            visited += 1;
            if let Some(w) = positive(&coeffs) {
                return Some(primitive_integer_vector(&w));
            }
        }
        bound += 1;
    }
    None
}

/// Rescales a positive rational vector to coprime integers.
fn primitive_integer_vector<F: Coefficient>(w: &[F]) -> Vec<F> {
    use num_bigint::BigInt;
    let parsed: Vec<(BigInt, BigInt)> = w
        .iter()
        .map(|c| {
            let (n, d) = c.to_fraction_strings();
            (n.parse().expect("integer numerator"), d.parse().expect("integer denominator"))
        })
        .collect();
    let lcm = parsed.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
    let ints: Vec<BigInt> = parsed.iter().map(|(n, d)| n * (&lcm / d)).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| {
            let v = (v / &gcd).abs();
            F::from_integer_literal(&v.to_string()).unwrap_or_else(|| panic!("weight {v} not representable"))
        })
        .collect()
}

/// One identity evaluated with exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// All invariants of a pair `(X, f)` and the identities relating them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport<F> {
    /// `dim (X,0)`.
    pub d: usize,
    /// Number of defining equations of `X` (0 for `C^n`).
    pub k: usize,
    pub mu_f: Option<i64>,
    pub mu_x: i64,
    pub tau_x: i64,
    pub mu_x_f: i64,
    pub mu_x_p: i64,
    pub generic_form: Vec<i64>,
    /// `None` when infinite (f not R_X-finitely determined).
    pub mu_br: Option<i64>,
    pub mu_br_rel: i64,
    /// `None` when infinite.
    pub tau_br: Option<i64>,
    pub gsv: i64,
    pub eu_x: i64,
    pub eu_fx: i64,
    pub brasselet: i64,
    pub polar_md: i64,
    pub c1: Option<i64>,
    pub c2: Option<i64>,
    pub weights: Option<Vec<F>>,
    pub checks: Vec<IdentityCheck>,
}

fn sign(d: usize) -> i64 {
    if d % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<F: Coefficient> InvariantReport<F> {
    /// `true` when every identity holds.
    pub fn is_consistent(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    /// Re-evaluates every identity from the stored values.
    pub fn recompute_checks(&mut self) {
        self.checks = self.evaluate_checks();
    }

    /// The five equivalent expressions for the relative Bruce–Roberts number,
    /// evaluated at the stored values.
    pub fn relative_expressions(&self) -> [i64; 5] {
        let s = sign(self.d);
        [
            self.gsv - self.tau_x,
            self.mu_x_f + self.polar_md + s * (self.eu_x - 1) - self.tau_x,
            self.mu_x + self.mu_x_p + s * self.eu_fx - self.tau_x,
            self.polar_md + s * self.eu_fx - self.tau_x,
            self.mu_x - s * (self.brasselet - 1) - self.tau_x,
        ]
    }

    fn evaluate_checks(&self) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        out.push(IdentityCheck {
            name: "relative_br_formula",
            lhs: self.mu_br_rel,
            rhs: self.mu_x_f + self.mu_x - self.tau_x,
        });
        let rel_names = [
            "relative_br_via_gsv",
            "relative_br_via_euler_obstruction",
            "relative_br_via_function_obstruction",
            "relative_br_via_polar_multiplicity",
            "relative_br_via_brasselet",
        ];
        let rel = self.relative_expressions();
        for (name, value) in rel_names.iter().zip(rel) {
            out.push(IdentityCheck { name, lhs: self.mu_br_rel, rhs: value });
        }
        if let (Some(mu_br), Some(mu_f), Some(c1), Some(c2)) = (self.mu_br, self.mu_f, self.c1, self.c2) {
            let correction = mu_f - c1 + c2;
            out.push(IdentityCheck {
                name: "absolute_br_formula",
                lhs: mu_br,
                rhs: mu_f + self.mu_x_f + self.mu_x - self.tau_x - c1 + c2,
            });
            let abs_names = [
                "absolute_br_via_gsv",
                "absolute_br_via_euler_obstruction",
                "absolute_br_via_function_obstruction",
                "absolute_br_via_polar_multiplicity",
                "absolute_br_via_brasselet",
            ];
            for (name, value) in abs_names.iter().zip(rel) {
                out.push(IdentityCheck { name, lhs: mu_br, rhs: value + correction });
            }
            if self.k == 1 {
                out.push(IdentityCheck { name: "hypersurface_cancellation", lhs: c1, rhs: c2 });
            }
        }
        out.push(IdentityCheck { name: "brasselet_relation", lhs: self.brasselet, rhs: self.eu_x - self.eu_fx });
        if let (Some(_), Some(mu_br), Some(tau_br)) = (&self.weights, self.mu_br, self.tau_br) {
            out.push(IdentityCheck { name: "quasihomogeneous_br_tjurina", lhs: mu_br, rhs: tau_br });
        }
        out
    }
}

fn as_i64(v: u64) -> i64 {
    i64::try_from(v).expect("invariant exceeds i64")
}

/// Computes every invariant of `(X, f)` and checks all identities.
///
/// Requires `X` to be an ICIS (or `C^n`) of dimension at least 3, `f(0) = 0`,
/// `X ∩ f^{-1}(0)` an ICIS and the relative Bruce–Roberts number finite.
/// `μ(f)`, `c1`, `c2` and the absolute identities are skipped when `f` has a
/// non-isolated singularity in the ambient space.
pub fn derived_invariants<F: Coefficient>(
    x: &VarietyGerm<F>,
    f: &Polynomial<F>,
    seed: u64,
) -> Result<InvariantReport<F>, Error> {
    let n = x.nvars();
    let budget = x.budget();
    if !f.constant_term().is_zero() {
        return Err(Error::Precondition("f must vanish at the origin".into()));
    }
    let d = if x.is_ambient() { n } else { verify_icis(x.generators(), n, budget)? };
    if d < 3 {
        return Err(Error::Precondition(format!("dimension {d} < 3; the identities require d > 2")));
    }
    let mu_x = milnor_of_germ(x)?;
    let tau_x = tjurina_icis(x)?;
    let mu_x_f = milnor_of_slice(x, f).map_err(|e| match e {
        Error::IcisViolation(v) => Error::Precondition(format!("X ∩ f^-1(0) is not an ICIS: {v}")),
        other => other,
    })?;
    let slice = generic_linear_form(x, seed)?;
    let mu_x_p = slice.slice_milnor;

    let mu_br_rel = finite_or(mu_br_rel(f, x)?, "relative Bruce–Roberts number (f is not isolated on X)")?;
    let mu_br = mu_br(f, x)?.finite().map(as_i64);
    let tau_br = tau_br(f, x)?.finite().map(as_i64);

    let (mu_f, c1, c2) = match milnor_hypersurface(f, budget)? {
        Colength::Infinite => (None, None, None),
        Colength::Finite(mu_f) => {
            let jf = Submodule::ideal(n, (0..n).map(|i| f.partial_derivative(i)));
            let ideal = x.ideal();
            let c1 = finite_or(colength_of(&module_sum(&jf, &ideal)?, budget)?, "dim O/(Jf + I)")?;
            let c2 = if ideal.is_zero() {
                0
            } else {
                let cap = intersect(&ideal, &jf, budget)?;
                finite_or(subquotient_dimension(&cap, &product(&ideal, &jf), budget)?, "dim (I ∩ Jf)/(I Jf)")?
            };
            (Some(as_i64(mu_f)), Some(as_i64(c1)), Some(as_i64(c2)))
        }
    };

    let (mu_x, tau_x, mu_x_f, mu_x_p) = (as_i64(mu_x), as_i64(tau_x), as_i64(mu_x_f), as_i64(mu_x_p));
    let s = sign(d);
    let mut report = InvariantReport {
        d,
        k: x.generators().len(),
        mu_f,
        mu_x,
        tau_x,
        mu_x_f,
        mu_x_p,
        generic_form: slice.coefficients,
        mu_br,
        mu_br_rel: as_i64(mu_br_rel),
        tau_br,
        gsv: mu_x + mu_x_f,
        polar_md: mu_x + mu_x_p,
        eu_x: 1 - s * mu_x_p,
        eu_fx: s * (mu_x_f - mu_x_p),
        brasselet: 1 - s * mu_x_f,
        c1,
        c2,
        weights: detect_quasihomogeneous(f, x),
        checks: Vec::new(),
    };
    report.recompute_checks();
    Ok(report)
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {} [{}]", self.name, self.lhs, self.rhs, if self.passed() { "PASS" } else { "FAIL" })
    }
}
