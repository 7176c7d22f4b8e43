//! Squarefree parts of principal ideals, via multivariate gcd.
//!
//! The gcd comes from the lcm: `<f> ∩ <g> = <lcm(f, g)>`, and the
//! intersection is the `t`-free part of `<t f, (1 - t) g>` under a lex order
//! with `t` ranked first.

use crate::arith::{MonomialOrder, OrderKind, Polynomial, Scalar, VarId};
use crate::error::{Error, Result};
use crate::groebner::buchberger;

/// Quotient `f / g` when `g` divides `f` exactly.
pub fn exact_division(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let order = MonomialOrder::default();
    let (glm, glc) = g.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
    let mut q = Polynomial::zero();
    let mut r = f.clone();
    while let Some((lm, lc)) = r.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
        let mono = glm.quotient_of(&lm)?;
        let c: Scalar = lc / &glc;
        q.add_term(mono.clone(), c.clone());
        r = &r - &g.mul_monomial(&mono, &c);
    }
    Some(q)
}

/// Monic (default order) greatest common divisor; `gcd(0, 0) = 0`.
pub fn polynomial_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let order = MonomialOrder::default();
    if f.is_zero() {
        return g.monic(&order);
    }
    if g.is_zero() {
        return f.monic(&order);
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one();
    }
    let top = f.variables().iter().chain(g.variables().iter()).map(|v| v.generator).max().unwrap_or(0);
    let t = VarId::base(top + 1);
    let tp = Polynomial::var(t);
    let elim = MonomialOrder::with_ranking(OrderKind::Lex, vec![t]);
    let gens = [&tp * f, &(&Polynomial::one() - &tp) * g];
    let gb = buchberger(&gens, &elim);
    let lcm = gb
        .basis()
        .iter()
        .find(|p| p.variables().iter().all(|v| *v != t))
        .expect("the intersection of two nonzero principal ideals is nonzero")
        .clone();
    exact_division(&(f * g), &lcm).expect("lcm divides f*g").monic(&order)
}

/// Generator of the radical of `<p>`: `p / gcd(p, dp/dx_1, ..., dp/dx_n)`,
/// normalized to be monic.
pub fn radical_principal(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let order = MonomialOrder::default();
    if p.is_constant() {
        return Ok(Polynomial::one());
    }
    let mut g = p.clone();
    for v in p.variables() {
        g = polynomial_gcd(&g, &p.partial(v));
        if g.is_constant() {
            break;
        }
    }
    let sqfree = exact_division(p, &g).expect("gcd divides p");
    Ok(sqfree.monic(&order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn x() -> Polynomial {
        Polynomial::x(1, 1)
    }
    fn y() -> Polynomial {
        Polynomial::x(2, 1)
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_principal(&x().pow(3)).unwrap(), x());
        assert_eq!(radical_principal(&(&x().pow(2) * &y())).unwrap(), &x() * &y());
        let sq = &(&x() * &y()) + &Polynomial::one();
        assert_eq!(radical_principal(&sq.scale(&int(3))).unwrap(), sq);
        assert_eq!(radical_principal(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn radical_of_mixed_powers() {
        let a = &x() + &y();
        let b = &x() - &Polynomial::one();
        let p = &(&a.pow(3) * &b.pow(2)) * &y();
        let want = (&(&a * &b) * &y()).monic(&MonomialOrder::default());
        assert_eq!(radical_principal(&p).unwrap(), want);
    }

    #[test]
    fn gcd_and_division() {
        let a = &x() + &y();
        let f = &a.pow(2) * &x();
        let g = &a * &y();
        assert_eq!(polynomial_gcd(&f, &g), a.monic(&MonomialOrder::default()));
        assert_eq!(exact_division(&f, &a).unwrap(), &a * &x());
        assert!(exact_division(&x(), &y()).is_none());
    }
}
