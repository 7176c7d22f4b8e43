//! Differential polynomial rings and jet-scheme ideals.
//!
//! For an affine presentation `R = Q[x^1..x^r] / <f_1..f_s>` the jet ring of
//! order `m` has variables `x^j_(-i)` for `1 <= i <= m+1` and the derivation
//! `T x^j_(-i) = i x^j_(-i-1)`, with `T` killing level `m+1`. The `m`-jet
//! ideal is generated by `T^k f_i` for `0 <= k <= m`, computed with the
//! truncated `T`. The arc space is approached through weight windows instead:
//! untruncated `T`, keeping every `T^k f_i` of weight at most `w`.

use std::collections::BTreeSet;

use crate::arith::{int, parse_polynomial, Polynomial, VarId, VarNames};
use crate::error::{Error, Result};

/// `R = Q[x^1..x^r] / <relations>`, relations in level-1 variables only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    num_generators: u32,
    relations: Vec<Polynomial>,
    names: VarNames,
}

impl Presentation {
    pub fn new(num_generators: u32, relations: Vec<Polynomial>) -> Result<Self> {
        assert!(num_generators >= 1, "a presentation needs at least one generator");
        for f in &relations {
            for v in f.variables() {
                if v.level != 1 {
                    return Err(Error::RelationNotBase(f.clone()));
                }
                if v.generator > num_generators {
                    return Err(Error::GeneratorOutOfRange { index: v.generator, count: num_generators });
                }
            }
        }
        Ok(Presentation { num_generators, relations, names: VarNames::default() })
    }

    /// Affine space of dimension `r`.
    pub fn affine_space(num_generators: u32) -> Self {
        Presentation::new(num_generators, Vec::new()).expect("no relations to check")
    }

    /// Parses relations written in the text grammar.
    pub fn parse(num_generators: u32, names: VarNames, relations: &[&str]) -> Result<Self> {
        let rels = relations
            .iter()
            .enumerate()
            .map(|(i, r)| parse_polynomial(r, &names).map_err(|e| e.at(i + 1, 0)))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(num_generators, rels)?.with_names(names)
    }

    pub fn with_names(mut self, names: VarNames) -> Result<Self> {
        if !names.is_empty() && names.len() != self.num_generators as usize {
            return Err(Error::InvalidName(format!(
                "{} names given for {} generators",
                names.len(),
                self.num_generators
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn num_generators(&self) -> u32 {
        self.num_generators
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn max_relation_weight(&self) -> u32 {
        self.relations.iter().filter_map(Polynomial::weight).max().unwrap_or(0)
    }
}

/// A jet polynomial ring with its derivation `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialRing {
    presentation: Presentation,
    truncation: Option<u32>,
}

impl DifferentialRing {
    /// The jet ring of order `m`: variables of levels `1..=m+1`.
    pub fn truncated(presentation: Presentation, m: u32) -> Self {
        DifferentialRing { presentation, truncation: Some(m) }
    }

    pub fn unbounded(presentation: Presentation) -> Self {
        DifferentialRing { presentation, truncation: None }
    }

    /// The untruncated jet ring of affine `r`-space.
    pub fn free(num_generators: u32) -> Self {
        Self::unbounded(Presentation::affine_space(num_generators))
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn num_generators(&self) -> u32 {
        self.presentation.num_generators
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    /// `T` on a single variable.
    pub fn derive_var(&self, v: VarId) -> Polynomial {
        match self.truncation {
            Some(m) if v.level > m => Polynomial::zero(),
            _ => Polynomial::var(v.raised()).scale(&int(v.level as i64)),
        }
    }

    /// `T(p)`, extended from the variables by linearity and Leibniz.
    pub fn derive(&self, p: &Polynomial) -> Polynomial {
        p.apply_derivation(|v| self.derive_var(v))
    }

    pub fn derive_n(&self, p: &Polynomial, n: u32) -> Polynomial {
        let mut out = p.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = self.derive(&out);
        }
        out
    }
}

/// Which slice of the jet tower a [`JetIdeal`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetWindow {
    /// Jet scheme of order `m`, truncated derivation.
    Order(u32),
    /// Untruncated derivation, generators of weight at most `w`.
    Weight(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetIdeal {
    ring: DifferentialRing,
    window: JetWindow,
    generators: Vec<Polynomial>,
}

impl JetIdeal {
    pub fn ring(&self) -> &DifferentialRing {
        &self.ring
    }

    pub fn window(&self) -> JetWindow {
        self.window
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_level(&self) -> u32 {
        match self.window {
            JetWindow::Order(m) => m + 1,
            JetWindow::Weight(w) => w,
        }
    }

    /// Every variable of the ambient polynomial ring, levels `1..=max_level`.
    pub fn variables(&self) -> BTreeSet<VarId> {
        let r = self.ring.num_generators();
        (1..=self.max_level())
            .flat_map(|i| (1..=r).map(move |j| VarId::new(j, i)))
            .collect()
    }
}

/// The defining ideal of the `m`-th jet scheme.
pub fn jet_ideal(pres: &Presentation, m: u32) -> JetIdeal {
    let ring = DifferentialRing::truncated(pres.clone(), m);
    let mut generators = Vec::new();
    for f in pres.relations() {
        let mut g = f.clone();
        for _ in 0..=m {
            if g.is_zero() {
                break;
            }
            generators.push(g.clone());
            g = ring.derive(&g);
        }
    }
    JetIdeal { ring, window: JetWindow::Order(m), generators }
}

/// All `T^k g` of weight at most `w`, untruncated `T`, for each `g` in `gens`.
pub(crate) fn weight_window_closure(ring: &DifferentialRing, gens: &[Polynomial], w: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for f in gens {
        let mut g = f.clone();
        while !g.is_zero() && g.weight().unwrap_or(0) <= w {
            out.push(g.clone());
            g = ring.derive(&g);
        }
    }
    out
}

/// Weight-`w` window of the arc-space ideal `<T^k f_i ; k >= 0>`.
///
/// This is an approximation of the infinite jet ideal: it contains exactly
/// the derivatives whose weight does not exceed `w`, sitting in the
/// polynomial ring on levels `1..=w`.
pub fn arc_ideal_truncation(pres: &Presentation, w: u32) -> Result<JetIdeal> {
    let needed = pres.max_relation_weight();
    if w < needed {
        return Err(Error::WindowBelowRelations { window: w, weight: needed });
    }
    let ring = DifferentialRing::unbounded(pres.clone());
    let generators = weight_window_closure(&ring, pres.relations(), w);
    Ok(JetIdeal { ring, window: JetWindow::Weight(w), generators })
}

pub(crate) fn jet_ideal_from_parts(ring: DifferentialRing, w: u32, generators: Vec<Polynomial>) -> JetIdeal {
    JetIdeal { ring, window: JetWindow::Weight(w), generators }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rising;

    fn x(j: u32, i: u32) -> Polynomial {
        Polynomial::x(j, i)
    }

    #[test]
    fn derive_examples() {
        let ring = DifferentialRing::free(1);
        assert_eq!(ring.derive(&x(1, 1)), x(1, 2));
        assert!(ring.derive(&Polynomial::constant(int(7))).is_zero());
        assert_eq!(ring.derive(&x(1, 1).pow(2)), (&x(1, 1) * &x(1, 2)).scale(&int(2)));
        let t1 = DifferentialRing::truncated(Presentation::affine_space(1), 1);
        assert!(t1.derive(&x(1, 2)).is_zero());
        assert_eq!(t1.derive(&x(1, 1)), x(1, 2));
    }

    #[test]
    fn derive_n_of_square() {
        // T(x^2) = 2 x x_2 ; T again = 2 x_2^2 + 2 x (2 x_3)
        let ring = DifferentialRing::free(1);
        let want = &x(1, 2).pow(2).scale(&int(2)) + &(&x(1, 1) * &x(1, 3)).scale(&int(4));
        assert_eq!(ring.derive_n(&x(1, 1).pow(2), 2), want);
        assert_eq!(ring.derive_n(&x(1, 1).pow(2), 0), x(1, 1).pow(2));
    }

    #[test]
    fn closed_form_on_variables() {
        let ring = DifferentialRing::free(2);
        for i in 1..4 {
            for n in 0..5 {
                let want = x(2, i + n).scale(&rising(i, n));
                assert_eq!(ring.derive_n(&x(2, i), n), want);
            }
        }
    }

    #[test]
    fn jet_ideal_examples() {
        let line = Presentation::affine_space(1);
        let j = jet_ideal(&line, 2);
        assert!(j.generators().is_empty());
        assert_eq!(j.variables().len(), 3);

        let point = Presentation::new(1, vec![x(1, 1)]).unwrap();
        assert_eq!(jet_ideal(&point, 1).generators(), &[x(1, 1), x(1, 2)]);

        let double = Presentation::new(1, vec![x(1, 1).pow(2)]).unwrap();
        let g = jet_ideal(&double, 1);
        assert_eq!(g.generators(), &[x(1, 1).pow(2), (&x(1, 1) * &x(1, 2)).scale(&int(2))]);
    }

    #[test]
    fn truncated_derivatives_vanish_past_the_top_level() {
        // <x> at order 0: T x = 0 in the order-0 ring, so only x survives
        let point = Presentation::new(1, vec![x(1, 1)]).unwrap();
        assert_eq!(jet_ideal(&point, 0).generators(), &[x(1, 1)]);
    }

    #[test]
    fn arc_window_examples() {
        let point = Presentation::new(1, vec![x(1, 1)]).unwrap();
        let a = arc_ideal_truncation(&point, 3).unwrap();
        assert_eq!(a.generators(), &[x(1, 1), x(1, 2), x(1, 3).scale(&int(2))]);
        assert!(arc_ideal_truncation(&Presentation::affine_space(2), 4).unwrap().generators().is_empty());
        let sq = Presentation::new(1, vec![x(1, 1).pow(2)]).unwrap();
        assert!(arc_ideal_truncation(&sq, 1).is_err());
        for g in arc_ideal_truncation(&sq, 5).unwrap().generators() {
            assert!(g.weight().unwrap() <= 5);
        }
    }

    #[test]
    fn relations_must_be_base_level() {
        assert!(Presentation::new(1, vec![x(1, 2)]).is_err());
        assert!(Presentation::new(1, vec![x(2, 1)]).is_err());
    }
}
