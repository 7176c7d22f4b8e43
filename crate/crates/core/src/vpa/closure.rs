use super::VpaContext;
use crate::arith::{MonomialOrder, Polynomial, VarId};
use crate::diffalg::{jet_ideal_from_parts, weight_window_closure, JetIdeal};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, GroebnerBasis};

pub const DEFAULT_CLOSURE_CAP: usize = 64;

/// Smallest ideal of the base ring containing `gens` and stable under
/// `{x^a, -}` for every generator.
pub fn poisson_closure(ctx: &VpaContext, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    poisson_closure_with_cap(ctx, gens, DEFAULT_CLOSURE_CAP)
}

pub fn poisson_closure_with_cap(ctx: &VpaContext, gens: &[Polynomial], max_rounds: usize) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| g.max_level() > 1) {
        return Err(Error::NotBaseLevel);
    }
    let r = ctx.num_generators();
    let vars: Vec<VarId> = (1..=r).map(VarId::base).collect();
    let order = MonomialOrder::default();
    let mut gb = buchberger_in(vars.iter().copied(), gens, &order);
    for _ in 0..max_rounds {
        let mut fresh = Vec::new();
        for g in gb.basis() {
            for &x in &vars {
                let br = ctx.bracket(&Polynomial::var(x), g)?;
                let nf = gb.normal_form(&br);
                if !nf.is_zero() && !fresh.contains(&nf) {
                    fresh.push(nf);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(gb);
        }
        let mut all = gb.basis().to_vec();
        all.extend(fresh);
        gb = buchberger_in(vars.iter().copied(), &all, &order);
    }
    Err(Error::NonTermination(max_rounds))
}

/// Weight-`w` window of the smallest `T`-stable ideal containing `gens`.
pub fn differential_closure(ctx: &VpaContext, gens: &[Polynomial], w: u32) -> Result<JetIdeal> {
    let needed = gens.iter().filter_map(Polynomial::weight).max().unwrap_or(0);
    if w < needed {
        return Err(Error::WindowBelowRelations { window: w, weight: needed });
    }
    let closed = weight_window_closure(ctx.ring(), gens, w);
    Ok(jet_ideal_from_parts(ctx.ring().clone(), w, closed))
}
