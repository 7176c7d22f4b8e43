//! Randomized exact checks of the vertex Poisson algebra identities.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VpaContext;
use crate::arith::{binomial, factorial, int, Monomial, Polynomial, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `(Ta)_(n) = -n a_(n-1)`
    Translation,
    /// `a_(n) b = sum_j (-1)^(n+j+1) / j! T^j (b_(n+j) a)`
    SkewSymmetry,
    /// `[a_(m), b_(n)] = sum_j binom(m, j) (a_(j) b)_(m+n-j)`
    Commutator,
    /// `a_(n) (b c) = (a_(n) b) c + b (a_(n) c)`
    Leibniz,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Translation, Axiom::SkewSymmetry, Axiom::Commutator, Axiom::Leibniz];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Translation => "translation",
            Axiom::SkewSymmetry => "skew-symmetry",
            Axiom::Commutator => "commutator",
            Axiom::Leibniz => "leibniz",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Option<Polynomial>,
    pub m: u32,
    pub n: u32,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub samples: usize,
    pub seed: u64,
    pub max_weight: u32,
    pub checks: usize,
    pub failure_count: usize,
    /// First counterexample found for each failing axiom.
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const MAX_MODE: u32 = 3;

/// Draws `samples` random triples of weight at most `max_weight` and checks
/// every identity exactly, with modes `m, n <= 3`.
pub fn check_vpa_axioms(ctx: &VpaContext, samples: usize, seed: u64, max_weight: u32) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport { samples, seed, max_weight, checks: 0, failure_count: 0, failures: Vec::new() };
    let r = ctx.num_generators();
    for _ in 0..samples {
        let a = random_element(&mut rng, r, max_weight);
        let b = random_element(&mut rng, r, max_weight);
        let c = random_element(&mut rng, r, max_weight);
        let m = rng.random_range(0..=MAX_MODE);
        let n = rng.random_range(0..=MAX_MODE);

        let (lhs, rhs) = translation(ctx, &a, n, &b);
        record(&mut report, Axiom::Translation, &a, &b, None, 0, n, lhs, rhs);
        let (lhs, rhs) = skew(ctx, &a, n, &b);
        record(&mut report, Axiom::SkewSymmetry, &a, &b, None, 0, n, lhs, rhs);
        let (lhs, rhs) = commutator(ctx, &a, m, &b, n, &c);
        record(&mut report, Axiom::Commutator, &a, &b, Some(&c), m, n, lhs, rhs);
        let (lhs, rhs) = leibniz(ctx, &a, n, &b, &c);
        record(&mut report, Axiom::Leibniz, &a, &b, Some(&c), 0, n, lhs, rhs);
    }
    report
}

#[allow(clippy::too_many_arguments)]
fn record(
    report: &mut AxiomReport,
    axiom: Axiom,
    a: &Polynomial,
    b: &Polynomial,
    c: Option<&Polynomial>,
    m: u32,
    n: u32,
    lhs: Polynomial,
    rhs: Polynomial,
) {
    report.checks += 1;
    if lhs == rhs {
        return;
    }
    report.failure_count += 1;
    if report.failures.iter().all(|f| f.axiom != axiom) {
        report.failures.push(AxiomFailure { axiom, a: a.clone(), b: b.clone(), c: c.cloned(), m, n, lhs, rhs });
    }
}

pub(crate) fn translation(ctx: &VpaContext, a: &Polynomial, n: u32, b: &Polynomial) -> (Polynomial, Polynomial) {
    let lhs = ctx.nth_product(&ctx.derive(a), n, b);
    let rhs = if n == 0 {
        Polynomial::zero()
    } else {
        ctx.nth_product(a, n - 1, b).scale(&int(-(n as i64)))
    };
    (lhs, rhs)
}

pub(crate) fn skew(ctx: &VpaContext, a: &Polynomial, n: u32, b: &Polynomial) -> (Polynomial, Polynomial) {
    let lhs = ctx.nth_product(a, n, b);
    // b_(p) a vanishes once p exceeds maxlevel(a) + maxlevel(b) - 2
    let bound = a.max_level() + b.max_level();
    let mut rhs = Polynomial::zero();
    for j in 0..=bound.saturating_sub(n) {
        let t = ctx.nth_product(b, n + j, a);
        if t.is_zero() {
            continue;
        }
        let sign = if (n + j + 1).is_multiple_of(2) { 1 } else { -1 };
        let coeff = factorial(j).recip() * int(sign);
        rhs = &rhs + &ctx.ring().derive_n(&t, j).scale(&coeff);
    }
    (lhs, rhs)
}

pub(crate) fn commutator(
    ctx: &VpaContext,
    a: &Polynomial,
    m: u32,
    b: &Polynomial,
    n: u32,
    c: &Polynomial,
) -> (Polynomial, Polynomial) {
    let lhs = &ctx.nth_product(a, m, &ctx.nth_product(b, n, c)) - &ctx.nth_product(b, n, &ctx.nth_product(a, m, c));
    let mut rhs = Polynomial::zero();
    for j in 0..=m {
        let ab = ctx.nth_product(a, j, b);
        if ab.is_zero() {
            continue;
        }
        rhs = &rhs + &ctx.nth_product(&ab, m + n - j, c).scale(&binomial(m, j));
    }
    (lhs, rhs)
}

pub(crate) fn leibniz(
    ctx: &VpaContext,
    a: &Polynomial,
    n: u32,
    b: &Polynomial,
    c: &Polynomial,
) -> (Polynomial, Polynomial) {
    let lhs = ctx.nth_product(a, n, &(b * c));
    let rhs = &(&ctx.nth_product(a, n, b) * c) + &(b * &ctx.nth_product(a, n, c));
    (lhs, rhs)
}

/// A random jet-ring element: one to three terms, each a monomial of weight
/// at most `max_weight` with a small nonzero integer coefficient.
pub(crate) fn random_element(rng: &mut impl Rng, generators: u32, max_weight: u32) -> Polynomial {
    let terms = rng.random_range(1..=3);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let mut remaining = rng.random_range(0..=max_weight);
        let mut exps = Vec::new();
        while remaining > 0 {
            let level = rng.random_range(1..=remaining);
            let generator = rng.random_range(1..=generators);
            exps.push((VarId::new(generator, level), 1));
            remaining -= level;
        }
        let mut coeff = rng.random_range(-3..=3i64);
        if coeff == 0 {
            coeff = 1;
        }
        p.add_term(Monomial::from_exponents(exps), int(coeff));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vpa::{validate_poisson, PoissonStructure};

    fn sl2_structure() -> PoissonStructure {
        PoissonStructure::new(
            3,
            [
                (2, 1, Polynomial::x(1, 1).scale(&int(2))),
                (2, 3, Polynomial::x(3, 1).scale(&int(-2))),
                (1, 3, Polynomial::x(2, 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trivial_bracket_passes() {
        let ctx = VpaContext::free(PoissonStructure::trivial(2)).unwrap();
        let rep = check_vpa_axioms(&ctx, 30, 1, 4);
        assert!(rep.passed());
        assert_eq!(rep.checks, 120);
    }

    #[test]
    fn sl2_passes_small_run() {
        let ctx = VpaContext::free(validate_poisson(sl2_structure()).unwrap()).unwrap();
        let rep = check_vpa_axioms(&ctx, 25, 7, 3);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn corrupted_table_fails() {
        // {e,f} = h + e breaks Jacobi
        let bad = PoissonStructure::new(
            3,
            [
                (2, 1, Polynomial::x(1, 1).scale(&int(2))),
                (2, 3, Polynomial::x(3, 1).scale(&int(-2))),
                (1, 3, &Polynomial::x(2, 1) + &Polynomial::x(1, 1)),
            ],
        )
        .unwrap();
        assert!(validate_poisson(bad.clone()).is_err());
        let ctx = VpaContext::free(bad.assume_valid()).unwrap();
        let rep = check_vpa_axioms(&ctx, 40, 0, 3);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.axiom == Axiom::Commutator));
    }

    #[test]
    fn random_elements_respect_weight_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let p = random_element(&mut rng, 3, 4);
            assert!(p.weight().unwrap_or(0) <= 4);
        }
    }
}
