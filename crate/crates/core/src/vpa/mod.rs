//! The level-0 vertex Poisson algebra structure on the arc-space ring of a
//! Poisson polynomial ring.
//!
//! For base elements `u, v` (level-1 polynomials) the structure is fixed by
//! `u_(0) v = {u, v}` and `u_(n) v = 0` for `n > 0`. Each `u_(n)` acts on the
//! jet ring as a derivation with
//!
//! ```text
//! u_(n) (T^l v) = l! / (l-n)! * T^(l-n) {u, v}     (l >= n, else 0)
//! ```
//!
//! and a general element `a` acts through the singular part
//! `a_-(z) T^k u = Sing(e^{zT} (-d/dz)^k u_-(-z) a)`. Expanding that series
//! gives, for every `n >= 0`,
//!
//! ```text
//! a_(n) (T^k u) = sum_{m >= max(0, n-k)} (-1)^(m+1) (m+1)...(m+k) / (m+k-n)!
//!                                          * T^(m+k-n) (u_(m) a)
//! ```
//!
//! which is finite because `u_(m)` kills every variable of level `<= m`.

mod axioms;
mod closure;
mod radical;

pub use axioms::{check_vpa_axioms, Axiom, AxiomFailure, AxiomReport};
pub use closure::{differential_closure, poisson_closure, poisson_closure_with_cap, DEFAULT_CLOSURE_CAP};
pub use radical::{exact_division, polynomial_gcd, radical_principal};

use std::collections::BTreeMap;


use crate::arith::{factorial, rising, Polynomial, VarId};
use crate::diffalg::DifferentialRing;
use crate::error::{Error, Result};

/// Bracket table `{x^a, x^b}` on base generators, extended by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    num_generators: u32,
    table: BTreeMap<(u32, u32), Polynomial>,
    validated: bool,
}

impl PoissonStructure {
    /// Builds an unvalidated table. Entries `{a, b}` with `a > b` are stored
    /// as `-{b, a}`; omitted pairs are zero.
    pub fn new(num_generators: u32, entries: impl IntoIterator<Item = (u32, u32, Polynomial)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (a, b, p) in entries {
            let r = num_generators;
            if a == 0 || b == 0 || a > r || b > r {
                return Err(Error::BracketOutOfRange(a, b, r));
            }
            if p.variables().iter().any(|v| v.level != 1 || v.generator > r) {
                return Err(Error::BracketNotBase(a, b, r));
            }
            if a == b {
                if !p.is_zero() {
                    return Err(Error::InvalidLieAlgebra(format!("{{x{a}, x{a}}} must vanish")));
                }
                continue;
            }
            let (key, val) = if a < b { ((a, b), p) } else { ((b, a), -p) };
            if val.is_zero() {
                table.remove(&key);
            } else {
                table.insert(key, val);
            }
        }
        Ok(PoissonStructure { num_generators, table, validated: false })
    }

    /// The zero bracket; always valid.
    pub fn trivial(num_generators: u32) -> Self {
        PoissonStructure { num_generators, table: BTreeMap::new(), validated: true }
    }

    pub fn num_generators(&self) -> u32 {
        self.num_generators
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Nonzero table entries `(a, b, {x^a, x^b})` with `a < b`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Polynomial)> {
        self.table.iter().map(|(&(a, b), p)| (a, b, p))
    }

    /// Marks the table valid without checking Jacobi. Only for building
    /// deliberately broken structures as negative controls.
    pub fn assume_valid(mut self) -> Self {
        self.validated = true;
        self
    }

    pub fn generator_bracket(&self, a: u32, b: u32) -> Polynomial {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Polynomial::zero(),
            std::cmp::Ordering::Less => self.table.get(&(a, b)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self.table.get(&(b, a)).map(|p| -p).unwrap_or_default(),
        }
    }

    fn bracket_unchecked(&self, u: &Polynomial, v: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        let uv = u.variables();
        let vv = v.variables();
        for a in &uv {
            let du = u.partial(*a);
            for b in &vv {
                let ab = self.generator_bracket(a.generator, b.generator);
                if ab.is_zero() {
                    continue;
                }
                let dv = v.partial(*b);
                out = &out + &(&(&du * &dv) * &ab);
            }
        }
        out
    }

    /// `{u, v}` for level-1 polynomials, by bilinearity and Leibniz.
    pub fn bracket(&self, u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
        if u.max_level() > 1 || v.max_level() > 1 {
            return Err(Error::NotBaseLevel);
        }
        Ok(self.bracket_unchecked(u, v))
    }
}

/// Checks the Jacobi identity on every triple of generators.
pub fn validate_poisson(ps: PoissonStructure) -> Result<PoissonStructure> {
    let r = ps.num_generators;
    let x = |i: u32| Polynomial::var(VarId::base(i));
    for a in 1..=r {
        for b in a + 1..=r {
            for c in b + 1..=r {
                let jac = |p: u32, q: u32, s: u32| ps.bracket_unchecked(&x(p), &ps.generator_bracket(q, s));
                let residual = &(&jac(a, b, c) + &jac(b, c, a)) + &jac(c, a, b);
                if !residual.is_zero() {
                    return Err(Error::JacobiViolation { triple: (a, b, c), residual });
                }
            }
        }
    }
    Ok(PoissonStructure { validated: true, ..ps })
}

/// An untruncated jet ring together with a validated Poisson structure on
/// its base ring.
#[derive(Clone, Debug)]
pub struct VpaContext {
    ring: DifferentialRing,
    poisson: PoissonStructure,
}

impl VpaContext {
    pub fn new(ring: DifferentialRing, poisson: PoissonStructure) -> Result<Self> {
        if ring.truncation().is_some() {
            return Err(Error::TruncatedRing);
        }
        if ring.num_generators() != poisson.num_generators {
            return Err(Error::GeneratorMismatch { poisson: poisson.num_generators, ring: ring.num_generators() });
        }
        if !poisson.validated {
            return Err(Error::NotValidated);
        }
        Ok(VpaContext { ring, poisson })
    }

    /// Context on the free jet ring of the structure's generators.
    pub fn free(poisson: PoissonStructure) -> Result<Self> {
        Self::new(DifferentialRing::free(poisson.num_generators), poisson)
    }

    pub fn ring(&self) -> &DifferentialRing {
        &self.ring
    }

    pub fn poisson(&self) -> &PoissonStructure {
        &self.poisson
    }

    pub fn num_generators(&self) -> u32 {
        self.poisson.num_generators
    }

    pub fn derive(&self, p: &Polynomial) -> Polynomial {
        self.ring.derive(p)
    }

    pub fn bracket(&self, u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
        self.poisson.bracket(u, v)
    }

    /// `u_(n)` applied to a jet-ring element, for level-1 `u`.
    pub fn nth_product_base(&self, u: &Polynomial, n: u32, target: &Polynomial) -> Result<Polynomial> {
        if u.max_level() > 1 {
            return Err(Error::NotBaseLevel);
        }
        Ok(self.base_product(u, n, target))
    }

    fn base_product(&self, u: &Polynomial, n: u32, target: &Polynomial) -> Polynomial {
        target.apply_derivation(|v| self.base_product_on_var(u, n, v))
    }

    // x^b_(-L) = T^(L-1) x^b / (L-1)!, so u_(n) sends it to
    // T^(L-1-n) {u, x^b} / (L-1-n)!.
    fn base_product_on_var(&self, u: &Polynomial, n: u32, v: VarId) -> Polynomial {
        let l = v.level - 1;
        if l < n {
            return Polynomial::zero();
        }
        let br = self.poisson.bracket_unchecked(u, &Polynomial::var(VarId::base(v.generator)));
        self.ring.derive_n(&br, l - n).scale(&factorial(l - n).recip())
    }

    /// Coefficients `(n, a_(n)(T^k u))`, `n >= 0`, of the singular part
    /// `Sing(e^{zT} (-d/dz)^k u_-(-z) a)`; zero coefficients are omitted.
    pub fn minus_field(&self, a: &Polynomial, k: u32, u: &Polynomial) -> Result<Vec<(u32, Polynomial)>> {
        if u.max_level() > 1 {
            return Err(Error::NotBaseLevel);
        }
        let products = self.products_on(u, a);
        let top = products.len() as u32 + k;
        Ok((0..top)
            .filter_map(|n| {
                let c = self.singular_coefficient(&products, k, n);
                (!c.is_zero()).then_some((n, c))
            })
            .collect())
    }

    // u_(m) a for m = 0..=maxlevel(a)-1; higher m vanish.
    fn products_on(&self, u: &Polynomial, a: &Polynomial) -> Vec<Polynomial> {
        let top = a.max_level();
        (0..top).map(|m| self.base_product(u, m, a)).collect()
    }

    fn singular_coefficient(&self, products: &[Polynomial], k: u32, n: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, um_a) in products.iter().enumerate() {
            let m = m as u32;
            if m + k < n || um_a.is_zero() {
                continue;
            }
            let j = m + k - n;
            let sign = if m.is_multiple_of(2) { -1 } else { 1 };
            let coeff = rising(m + 1, k) / factorial(j) * crate::arith::int(sign);
            out = &out + &self.ring.derive_n(um_a, j).scale(&coeff);
        }
        out
    }

    /// `a_(n) b` for arbitrary jet-ring elements.
    pub fn nth_product(&self, a: &Polynomial, n: u32, b: &Polynomial) -> Polynomial {
        if a.max_level() <= 1 {
            return self.base_product(a, n, b);
        }
        self.product_via_singular_part(a, n, b)
    }

    /// `a_(n) b` computed through the singular-part formula only, even when
    /// `a` is a base element.
    pub fn product_via_singular_part(&self, a: &Polynomial, n: u32, b: &Polynomial) -> Polynomial {
        let mut cache: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
        b.apply_derivation(|v| {
            let products = cache
                .entry(v.generator)
                .or_insert_with(|| self.products_on(&Polynomial::var(VarId::base(v.generator)), a));
            let k = v.level - 1;
            self.singular_coefficient(products, k, n).scale(&factorial(k).recip())
        })
    }
}
