//! Vector fields tangent to a variety germ and the Bruce–Roberts numbers.

use std::sync::OnceLock;

use crate::error::Error;
use crate::module::{ModuleElement, Submodule};
use crate::monomial::ModuleOrder;
use crate::ops::{colength_of, intersect, module_sum, std_top, syzygies};
use crate::polynomial::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Coefficient;
use crate::stdbasis::{Budget, Colength, StandardBasis};

/// A germ `(X,0) ⊂ (C^n,0)` given by generators of its ideal, or the whole
/// space `C^n`.
///
/// Reducedness of the ideal is not checked; the tangent module is only
/// meaningful for reduced presentations.
#[derive(Debug)]
pub struct VarietyGerm<F> {
    ring: RingSpec,
    generators: Option<Vec<Polynomial<F>>>,
    budget: Budget,
    ideal_std: Option<StandardBasis<F>>,
    theta: OnceLock<TangentModule<F>>,
}

impl<F: Coefficient> VarietyGerm<F> {
    /// Validates the generators (nonzero, vanishing at 0) and caches a
    /// standard basis of the ideal.
    pub fn new(ring: RingSpec, generators: Vec<Polynomial<F>>, budget: Budget) -> Result<Self, Error> {
        if generators.is_empty() {
            return Err(Error::Precondition(
                "a variety needs at least one generator; use the ambient germ for C^n".into(),
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::Precondition(format!("generator {} is zero", i + 1)));
            }
            if g.is_unit() || !g.constant_term().is_zero() {
                return Err(Error::Precondition(format!("generator {} does not vanish at the origin", i + 1)));
            }
        }
        let ideal = Submodule::ideal(ring.nvars(), generators.iter().cloned());
        let ideal_std = std_top(&ideal, budget)?;
        Ok(VarietyGerm {
            ring,
            generators: Some(generators),
            budget,
            ideal_std: Some(ideal_std),
            theta: OnceLock::new(),
        })
    }

    /// `X = C^n`, with `Θ_X = O^n`.
    pub fn ambient(ring: RingSpec, budget: Budget) -> Self {
        VarietyGerm { ring, generators: None, budget, ideal_std: None, theta: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn is_ambient(&self) -> bool {
        self.generators.is_none()
    }

    /// Defining equations; empty for the ambient germ.
    pub fn generators(&self) -> &[Polynomial<F>] {
        self.generators.as_deref().unwrap_or(&[])
    }

    pub fn ideal(&self) -> Submodule<F> {
        Submodule::ideal(self.nvars(), self.generators().iter().cloned())
    }

    pub fn ideal_std(&self) -> Option<&StandardBasis<F>> {
        self.ideal_std.as_ref()
    }

    /// `dim (X,0)`.
    pub fn dimension(&self) -> usize {
        self.ideal_std.as_ref().map_or(self.nvars(), StandardBasis::krull_dimension)
    }

    /// `Θ_X`, computed on first use.
    pub fn theta(&self) -> Result<&TangentModule<F>, Error> {
        if let Some(t) = self.theta.get() {
            return Ok(t);
        }
        let t = theta_x(self)?;
        Ok(self.theta.get_or_init(|| t))
    }
}

/// The module `Θ_X ⊆ O^n` of vector fields tangent to `X`.
#[derive(Clone, Debug)]
pub struct TangentModule<F> {
    pub theta: Submodule<F>,
}

/// Derivative of `f` along the field `xi`: `Σ ξ_i ∂f/∂x_i`.
pub fn apply_field<F: Coefficient>(xi: &ModuleElement<F>, f: &Polynomial<F>) -> Polynomial<F> {
    xi.components()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(f.nvars()), |acc, (i, c)| acc.add(&c.mul(&f.partial_derivative(i))))
}

/// Drops generators that lie in the module spanned by the remaining ones.
fn interreduce<F: Coefficient>(m: Submodule<F>, budget: Budget) -> Result<Submodule<F>, Error> {
    let mut gens = m.generators().to_vec();
    // try the largest generators first; they are the likeliest to be redundant
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    idx.sort_by_key(|&i| {
        std::cmp::Reverse((gens[i].max_degree(), gens[i].components().iter().map(|p| p.len()).sum::<usize>()))
    });
    let mut removed = vec![false; gens.len()];
    for &i in &idx {
        let others: Vec<ModuleElement<F>> =
            gens.iter().enumerate().filter(|(j, _)| *j != i && !removed[*j]).map(|(_, g)| g.clone()).collect();
        if others.is_empty() {
            continue;
        }
        let std = std_top(&Submodule::new(m.nvars(), m.rank(), others)?, budget)?;
        if std.contains(&gens[i])? {
            removed[i] = true;
        }
    }
    let mut k = 0;
    gens.retain(|_| {
        let keep = !removed[k];
        k += 1;
        keep
    });
    Submodule::new(m.nvars(), m.rank(), gens)
}

/// Computes `Θ_X` as `⋂_r π_n(syz(∂f_r/∂x_1, …, ∂f_r/∂x_n, f_1, …, f_k))`,
/// where `π_n` keeps the first `n` coordinates.
pub fn theta_x<F: Coefficient>(x: &VarietyGerm<F>) -> Result<TangentModule<F>, Error> {
    let n = x.nvars();
    let budget = x.budget;
    if x.is_ambient() {
        return Ok(TangentModule { theta: Submodule::free(n, n) });
    }
    let gens = x.generators();
    let mut acc: Option<Submodule<F>> = None;
    for fr in gens {
        let row: Vec<ModuleElement<F>> = (0..n)
            .map(|i| fr.partial_derivative(i))
            .chain(gens.iter().cloned())
            .map(ModuleElement::from_poly)
            .collect();
        let t_r = syzygies(&row, n, 1, budget)?;
        let projected: Vec<ModuleElement<F>> = t_r.generators().iter().map(|s| s.slice(0..n)).collect();
        let t_rn = Submodule::new(n, n, projected)?;
        acc = Some(match acc {
            None => t_rn,
            Some(prev) => intersect(&prev, &t_rn, budget)?,
        });
    }
    let theta = interreduce(acc.expect("at least one generator"), budget)?;
    Ok(TangentModule { theta })
}

/// The ideal `df(Θ_X)`.
pub fn df_theta<F: Coefficient>(f: &Polynomial<F>, t: &TangentModule<F>) -> Submodule<F> {
    Submodule::ideal(f.nvars(), t.theta.generators().iter().map(|xi| apply_field(xi, f)))
}

fn require_vanishing<F: Coefficient>(f: &Polynomial<F>) -> Result<(), Error> {
    if f.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition("f must vanish at the origin".into()))
    }
}

/// `μ_BR(f, X) = dim O / df(Θ_X)`.
pub fn mu_br<F: Coefficient>(f: &Polynomial<F>, x: &VarietyGerm<F>) -> Result<Colength, Error> {
    require_vanishing(f)?;
    colength_of(&df_theta(f, x.theta()?), x.budget)
}

/// Relative Bruce–Roberts number `dim O / (df(Θ_X) + I(X,0))`.
pub fn mu_br_rel<F: Coefficient>(f: &Polynomial<F>, x: &VarietyGerm<F>) -> Result<Colength, Error> {
    require_vanishing(f)?;
    let m = module_sum(&df_theta(f, x.theta()?), &x.ideal())?;
    colength_of(&m, x.budget)
}

/// Bruce–Roberts Tjurina number `dim O / (df(Θ_X) + ⟨f⟩)`.
pub fn tau_br<F: Coefficient>(f: &Polynomial<F>, x: &VarietyGerm<F>) -> Result<Colength, Error> {
    require_vanishing(f)?;
    let m = module_sum(&df_theta(f, x.theta()?), &Submodule::ideal(f.nvars(), [f.clone()]))?;
    colength_of(&m, x.budget)
}

impl<F: Coefficient> TangentModule<F> {
    pub fn std(&self, budget: Budget) -> Result<StandardBasis<F>, Error> {
        crate::stdbasis::standard_basis(&self.theta, ModuleOrder::TermOverPosition, budget)
    }

    /// Checks that every generator maps each defining equation of `x` back
    /// into the ideal.
    pub fn is_tangent_to(&self, x: &VarietyGerm<F>) -> Result<bool, Error> {
        let Some(istd) = x.ideal_std() else {
            return Ok(true);
        };
        for xi in self.theta.generators() {
            for g in x.generators() {
                if !istd.contains_poly(&apply_field(xi, g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
