//! Reduced Gröbner bases by Buchberger's algorithm, and what they decide:
//! ideal membership, Krull dimension, zero-dimensionality and standard
//! monomial bases of zero-dimensional quotients.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::arith::{Monomial, MonomialOrder, Polynomial, Scalar, VarId};
use crate::diffalg::JetIdeal;
use crate::error::{Error, Result};

// Terms sorted from largest to smallest monomial.
type Sorted = Vec<(Monomial, Scalar)>;

fn to_sorted(p: &Polynomial, order: &MonomialOrder) -> Sorted {
    p.sorted_terms(order)
}

fn from_sorted(s: &[(Monomial, Scalar)]) -> Polynomial {
    Polynomial::from_terms(s.iter().cloned())
}

/// `p - c * m * g`, all inputs and the output sorted descending.
fn sub_scaled(p: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, g: &[(Monomial, Scalar)], order: &MonomialOrder) -> Sorted {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(n, a)| (n.mul(m), a * c)).peekable();
    let mut pi = p.iter().cloned().peekable();
    loop {
        let ord = match (pi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
        };
        match ord {
            Ordering::Greater => out.push(pi.next().unwrap()),
            Ordering::Less => {
                let (n, a) = gi.next().unwrap();
                out.push((n, -a));
            }
            Ordering::Equal => {
                let (n, a) = pi.next().unwrap();
                let (_, b) = gi.next().unwrap();
                let d = a - b;
                if !d.is_zero() {
                    out.push((n, d));
                }
            }
        }
    }
    out
}

/// Full reduction of `f` against `basis` (each element monic).
fn reduce(f: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut rem: Sorted = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = &p[start];
        let divisor = basis.iter().find(|g| g[0].0.divides(lm));
        match divisor {
            Some(g) => {
                let q = g[0].0.quotient_of(lm).expect("divisor divides");
                let c = lc / &g[0].1;
                p = sub_scaled(&p[start..], &c, &q, g, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn make_monic(mut s: Sorted) -> Sorted {
    if let Some((_, lc)) = s.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in s.iter_mut() {
                *c *= &inv;
            }
        }
    }
    s
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&lcm).unwrap();
    let mg = g[0].0.quotient_of(&lcm).unwrap();
    // f, g are monic
    let fm: Sorted = f.iter().map(|(n, a)| (n.mul(&mf), a.clone())).collect();
    sub_scaled(&fm, &Scalar::one(), &mg, g, order)
}

/// A reduced, monic Gröbner basis together with the variables of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Sorted>,
    variables: BTreeSet<VarId>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis && self.variables == other.variables
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn variables(&self) -> &BTreeSet<VarId> {
        &self.variables
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|g| g[0].0.is_one())
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|g| &g[0].0)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        from_sorted(&reduce(to_sorted(p, &self.order), &self.sorted, &self.order))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// The same basis viewed in a larger polynomial ring.
    pub fn with_variables(mut self, vars: impl IntoIterator<Item = VarId>) -> Self {
        self.variables.extend(vars);
        self
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`, in the ring
/// on the variables they mention.
pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    buchberger_in(std::iter::empty(), generators, order)
}

/// Like [`buchberger`], over a ring that has at least the variables `vars`.
pub fn buchberger_in(
    vars: impl IntoIterator<Item = VarId>,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> GroebnerBasis {
    let mut variables: BTreeSet<VarId> = vars.into_iter().collect();
    for g in generators {
        variables.extend(g.variables());
    }
    let sorted = compute(generators, order);
    let basis = sorted.iter().map(|s| from_sorted(s)).collect();
    GroebnerBasis { order: order.clone(), basis, sorted, variables }
}

/// Basis of a jet ideal in its full ambient ring.
pub fn jet_basis(ideal: &JetIdeal, order: &MonomialOrder) -> GroebnerBasis {
    buchberger_in(ideal.variables(), ideal.generators(), order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn compute(generators: &[Polynomial], order: &MonomialOrder) -> Vec<Sorted> {
    let mut basis: Vec<Sorted> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let unit = || vec![vec![(Monomial::one(), Scalar::one())]];

    let mut pending: Vec<Sorted> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(to_sorted(g, order)))
        .collect();
    // smallest leading monomials first keeps the early reductions cheap
    pending.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    let add = |basis: &mut Vec<Sorted>, pairs: &mut Vec<Pair>, g: Sorted| {
        let k = basis.len();
        for (i, h) in basis.iter().enumerate() {
            pairs.push(Pair { i, j: k, lcm: h[0].0.lcm(&g[0].0) });
        }
        basis.push(g);
    };

    for g in pending {
        let r = reduce(g, &basis, order);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return unit();
        }
        add(&mut basis, &mut pairs, make_monic(r));
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        done.insert((i, j));

        // coprime leading monomials: the S-polynomial reduces to zero
        if basis[i][0].0.is_coprime(&basis[j][0].0) {
            continue;
        }
        // chain criterion
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(s, &basis, order);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return unit();
        }
        add(&mut basis, &mut pairs, make_monic(r));
    }

    interreduce(basis, order)
}

fn interreduce(basis: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Sorted> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let head = minimal[i][0].clone();
        let tail = reduce(minimal[i][1..].to_vec(), &others, order);
        let mut g = vec![head];
        g.extend(tail);
        reduced.push(make_monic(g));
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    reduced
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// True iff every polynomial of `gens_b` lies in the ideal of `gb_a`.
pub fn ideal_contains(gb_a: &GroebnerBasis, gens_b: &[Polynomial]) -> bool {
    gens_b.iter().all(|p| gb_a.contains(p))
}

/// Whether two bases describe the same ideal (mutual containment).
pub fn same_ideal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    ideal_contains(a, b.basis()) && ideal_contains(b, a.basis())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    /// `-1` for the unit ideal.
    pub krull_dimension: i64,
    pub zero_dimensional: bool,
    /// Number of standard monomials; present iff zero-dimensional.
    pub quotient_dimension: Option<u64>,
    /// A maximum-size set of variables independent modulo the leading-term
    /// ideal; empty unless the dimension is positive.
    pub independent_set: Vec<VarId>,
}

pub fn krull_dimension(gb: &GroebnerBasis) -> DimensionReport {
    if gb.is_unit() {
        return DimensionReport {
            krull_dimension: -1,
            zero_dimensional: false,
            quotient_dimension: None,
            independent_set: Vec::new(),
        };
    }
    let vars: Vec<VarId> = gb.variables.iter().copied().collect();
    let hitting = min_hitting_set(&vars, gb.leading_monomials());
    let independent: Vec<VarId> = vars.iter().copied().filter(|v| !hitting.contains(v)).collect();
    let dim = independent.len() as i64;
    debug_assert_eq!(dim == 0, has_pure_powers(gb));
    let quotient_dimension = (dim == 0).then(|| quotient_basis(gb).map(|b| b.len() as u64).unwrap_or(0));
    DimensionReport { krull_dimension: dim, zero_dimensional: dim == 0, quotient_dimension, independent_set: independent }
}

fn has_pure_powers(gb: &GroebnerBasis) -> bool {
    gb.variables.iter().all(|v| pure_power_bound(gb, *v).is_some())
}

fn pure_power_bound(gb: &GroebnerBasis, v: VarId) -> Option<u32> {
    gb.leading_monomials()
        .filter(|m| m.exponents().len() == 1 && m.exponents()[0].0 == v)
        .map(|m| m.exponents()[0].1)
        .min()
}

// A variable set is independent iff it contains no leading monomial's support,
// so a largest independent set is the complement of a smallest set meeting
// every support.
fn min_hitting_set<'a>(vars: &[VarId], lms: impl Iterator<Item = &'a Monomial>) -> BTreeSet<VarId> {
    let mut edges: Vec<BTreeSet<VarId>> = lms.map(|m| m.variables().collect()).collect();
    edges.sort_by_key(|e| e.len());
    edges.dedup();
    let mut minimal: Vec<BTreeSet<VarId>> = Vec::new();
    for e in edges {
        if !minimal.iter().any(|f| f.is_subset(&e)) {
            minimal.push(e);
        }
    }

    let mut best: BTreeSet<VarId> = vars.iter().copied().collect();
    let mut current = BTreeSet::new();
    search(&minimal, &mut current, &mut best);
    best
}

fn search(edges: &[BTreeSet<VarId>], current: &mut BTreeSet<VarId>, best: &mut BTreeSet<VarId>) {
    let open = edges
        .iter()
        .filter(|e| e.is_disjoint(current))
        .min_by_key(|e| e.len());
    match open {
        None => {
            if current.len() < best.len() || (current.len() == best.len() && *current < *best) {
                *best = current.clone();
            }
        }
        Some(e) => {
            if current.len() + 1 > best.len() {
                return;
            }
            for &v in e {
                current.insert(v);
                search(edges, current, best);
                current.remove(&v);
            }
        }
    }
}

/// Standard monomials of a zero-dimensional ideal, ascending in the order.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if gb.is_unit() {
        return Err(Error::NotZeroDimensional);
    }
    let vars: Vec<VarId> = gb.variables.iter().copied().collect();
    let mut bounds = Vec::with_capacity(vars.len());
    for v in &vars {
        bounds.push(pure_power_bound(gb, *v).ok_or(Error::NotZeroDimensional)?);
    }
    let lms: Vec<&Monomial> = gb.leading_monomials().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    enumerate_standard(&vars, &bounds, &lms, 0, &mut exps, &mut out);
    out.sort_by(|a, b| gb.order.cmp(a, b));
    Ok(out)
}

fn enumerate_standard(
    vars: &[VarId],
    bounds: &[u32],
    lms: &[&Monomial],
    k: usize,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if k == vars.len() {
        out.push(Monomial::from_exponents(vars.iter().copied().zip(exps.iter().copied())));
        return;
    }
    for e in 0..bounds[k] {
        exps[k] = e;
        // prefix monomial; once it is a multiple of a leading monomial, every
        // larger exponent is too
        let m = Monomial::from_exponents(vars[..=k].iter().copied().zip(exps[..=k].iter().copied()));
        if lms.iter().any(|l| l.divides(&m)) {
            break;
        }
        enumerate_standard(vars, bounds, lms, k + 1, exps, out);
    }
    exps[k] = 0;
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
    fn buchberger_examples() {
        let lex = MonomialOrder::lex();
        let gb = buchberger(&[x().pow(2), &x() * &y()], &lex);
        assert_eq!(gb.basis(), &[&x() * &y(), x().pow(2)]);
        let gb = buchberger(&[x(), y()], &lex);
        assert_eq!(gb.basis(), &[y(), x()]);
        let gb = buchberger(&[&x() - &Polynomial::one(), x()], &lex);
        assert_eq!(gb.basis(), &[Polynomial::one()]);
        assert!(buchberger(&[], &lex).is_zero_ideal());
    }

    #[test]
    fn reduced_basis_is_monic_and_interreduced() {
        let o = MonomialOrder::degrevlex();
        // twisted cubic-like ideal
        let z = Polynomial::x(3, 1);
        let gens = [&y().scale(&int(2)) - &x().pow(2), &z - &x().pow(3)];
        let gb = buchberger(&gens, &o);
        for (k, g) in gb.basis().iter().enumerate() {
            assert_eq!(g.leading_term(&o).unwrap().1, &int(1));
            for (l, h) in gb.basis().iter().enumerate() {
                if k != l {
                    let lm = h.leading_monomial(&o).unwrap();
                    assert!(g.terms().all(|(m, _)| !lm.divides(m)));
                }
            }
        }
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn normal_form_examples() {
        let o = MonomialOrder::default();
        let gx = buchberger(&[x()], &o);
        assert!(normal_form(&x().pow(2), &gx).is_zero());
        assert_eq!(normal_form(&y(), &gx), y());
        let gx2 = buchberger(&[x().pow(2)], &o);
        assert_eq!(normal_form(&(&(&x().pow(2) * &y()) + &y()), &gx2), y());
    }

    #[test]
    fn membership_examples() {
        let o = MonomialOrder::default();
        assert!(ideal_contains(&buchberger(&[x()], &o), &[x().pow(2)]));
        assert!(!ideal_contains(&buchberger(&[x().pow(2)], &o), &[x()]));
        assert!(ideal_contains(&buchberger(&[&x() + &y(), y()], &o), &[x()]));
    }

    #[test]
    fn dimension_examples() {
        let o = MonomialOrder::default();
        let d = krull_dimension(&buchberger(&[x().pow(2), &x() * &y()], &o));
        assert_eq!(d.krull_dimension, 1);
        assert_eq!(d.independent_set, vec![VarId::base(2)]);
        assert!(!d.zero_dimensional && d.quotient_dimension.is_none());

        let d = krull_dimension(&buchberger(&[x(), y()], &o));
        assert_eq!((d.krull_dimension, d.quotient_dimension), (0, Some(1)));

        let vars = (1..=4).map(VarId::base);
        let d = krull_dimension(&buchberger_in(vars, &[], &o));
        assert_eq!(d.krull_dimension, 4);

        let d = krull_dimension(&buchberger(&[x().pow(3)], &o));
        assert_eq!((d.krull_dimension, d.quotient_dimension), (0, Some(3)));

        let d = krull_dimension(&buchberger(&[Polynomial::one()], &o));
        assert_eq!(d.krull_dimension, -1);
        assert!(!d.zero_dimensional);
    }

    #[test]
    fn quotient_basis_examples() {
        let o = MonomialOrder::default();
        let mono = |p: Polynomial| p.leading_monomial(&o).unwrap().clone();
        assert_eq!(
            quotient_basis(&buchberger(&[x().pow(2), y()], &o)).unwrap(),
            vec![Monomial::one(), mono(x())]
        );
        assert_eq!(quotient_basis(&buchberger(&[x(), y()], &o)).unwrap(), vec![Monomial::one()]);
        assert_eq!(
            quotient_basis(&buchberger(&[x().pow(3)], &o)).unwrap(),
            vec![Monomial::one(), mono(x()), mono(x().pow(2))]
        );
        assert_eq!(quotient_basis(&buchberger(&[x().pow(2), &x() * &y()], &o)), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn deterministic_output() {
        let o = MonomialOrder::default();
        let gens = [&x().pow(2) - &y(), &(&x() * &y()) - &Polynomial::one()];
        assert_eq!(buchberger(&gens, &o), buchberger(&gens, &o));
        let rev = [gens[1].clone(), gens[0].clone()];
        assert_eq!(buchberger(&gens, &o), buchberger(&rev, &o));
    }
}
