//! Independent reference computations used by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use lisse_core::arith::{factorial, int, ratio, Monomial, Polynomial, Scalar, VarId};
use lisse_core::{Matrix, VpaContext};
use num_traits::Zero;
use rand::Rng;

/// Vacuum expectation values `<0| L_{w_1} ... L_{w_k} |0>` of the Virasoro
/// algebra, by bubble-sorting the word into non-decreasing mode order.
pub struct VacuumWords {
    c: Scalar,
    memo: HashMap<Vec<i64>, Scalar>,
}

impl VacuumWords {
    pub fn new(c: Scalar) -> Self {
        VacuumWords { c, memo: HashMap::new() }
    }

    pub fn expectation(&mut self, word: &[i64]) -> Scalar {
        if word.is_empty() {
            return int(1);
        }
        if *word.last().unwrap() >= -1 || word[0] <= 1 {
            return Scalar::zero();
        }
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let i = (0..word.len() - 1).find(|&i| word[i] > word[i + 1]).expect("unsorted word");
        let (p, q) = (word[i], word[i + 1]);
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut total = self.expectation(&swapped);
        let mut merged = word[..i].to_vec();
        merged.push(p + q);
        merged.extend_from_slice(&word[i + 2..]);
        total += int(p - q) * self.expectation(&merged);
        if p + q == 0 {
            let mut dropped = word[..i].to_vec();
            dropped.extend_from_slice(&word[i + 2..]);
            total += ratio(p * p * p - p, 12) * &self.c * self.expectation(&dropped);
        }
        self.memo.insert(word.to_vec(), total.clone());
        total
    }

    /// `<L_{-u} 0, L_{-v} 0>` for partitions `u`, `v`.
    pub fn pairing(&mut self, u: &[u32], v: &[u32]) -> Scalar {
        let mut word: Vec<i64> = u.iter().rev().map(|&m| m as i64).collect();
        word.extend(v.iter().map(|&m| -(m as i64)));
        self.expectation(&word)
    }

    pub fn gram(&mut self, basis: &[Vec<u32>]) -> Matrix {
        let rows = basis.iter().map(|u| basis.iter().map(|v| self.pairing(u, v)).collect()).collect();
        Matrix::from_rows(rows)
    }
}

/// `a_(n)(T^k u)` for base `u`, through skew-symmetry and translation only:
/// `a_(n) b = sum_j (-1)^(n+j+1) / j! T^j (b_(n+j) a)` with
/// `(T^k u)_(p) = (-1)^k p (p-1) ... (p-k+1) u_(p-k)`.
pub fn singular_coefficient_via_skew(ctx: &VpaContext, a: &Polynomial, k: u32, u: &Polynomial, n: u32) -> Polynomial {
    let top = a.max_level() + k + 1;
    let mut out = Polynomial::zero();
    for j in 0..=top {
        let p = n + j;
        if p < k {
            continue;
        }
        let falling: Scalar = (0..k).fold(int(1), |acc, i| acc * int((p - i) as i64));
        let inner = ctx.nth_product_base(u, p - k, a).unwrap();
        if inner.is_zero() {
            continue;
        }
        let sign = if (n + j + 1 + k).is_multiple_of(2) { 1 } else { -1 };
        let coeff = falling * int(sign) / factorial(j);
        out = &out + &ctx.ring().derive_n(&inner, j).scale(&coeff);
    }
    out
}

/// Random jet polynomial: 1..=3 terms of weight `<= max_weight`.
pub fn random_jet_element(rng: &mut impl Rng, generators: u32, max_weight: u32) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..rng.random_range(1..=3) {
        let mut exps = Vec::new();
        let mut left = rng.random_range(0..=max_weight);
        while left > 0 {
            let level = rng.random_range(1..=left);
            exps.push((VarId::new(rng.random_range(1..=generators), level), 1));
            left -= level;
        }
        p.add_term(Monomial::from_exponents(exps), nonzero(rng));
    }
    p
}

pub fn nonzero(rng: &mut impl Rng) -> Scalar {
    let c = rng.random_range(1..=3i64);
    int(if rng.random_bool(0.5) { c } else { -c })
}

/// All monomials of total degree `d` in the level-1 variables `1..=nvars`.
pub fn monomials_of_degree(nvars: u32, d: u32) -> Vec<Monomial> {
    fn go(v: u32, nvars: u32, left: u32, acc: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
        if v > nvars {
            if left == 0 {
                out.push(Monomial::from_exponents(acc.clone()));
            }
            return;
        }
        for e in 0..=left {
            if e > 0 {
                acc.push((VarId::base(v), e));
            }
            go(v + 1, nvars, left - e, acc, out);
            if e > 0 {
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, nvars, d, &mut Vec::new(), &mut out);
    out
}

/// Nonzero random homogeneous polynomial of degree `d` in `nvars` base variables.
pub fn random_homogeneous(rng: &mut impl Rng, nvars: u32, d: u32) -> Polynomial {
    let monos = monomials_of_degree(nvars, d);
    loop {
        let mut p = Polynomial::zero();
        for _ in 0..rng.random_range(1..=3) {
            let m = monos[rng.random_range(0..monos.len())].clone();
            p.add_term(m, nonzero(rng));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Membership of a homogeneous `target` in the ideal of homogeneous `gens`,
/// decided by linear algebra inside the degree-`deg(target)` component.
pub fn homogeneous_member(nvars: u32, gens: &[Polynomial], target: &Polynomial) -> bool {
    if target.is_zero() {
        return true;
    }
    let d = target.degree().unwrap();
    let window = monomials_of_degree(nvars, d);
    let index: HashMap<&Monomial, usize> = window.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - gd) {
            let prod = g.mul_monomial(&m, &int(1));
            let mut col = vec![Scalar::zero(); window.len()];
            for (mono, c) in prod.terms() {
                col[index[mono]] = c.clone();
            }
            columns.push(col);
        }
    }
    let mut rhs = vec![Scalar::zero(); window.len()];
    for (mono, c) in target.terms() {
        rhs[index[mono]] = c.clone();
    }
    if columns.is_empty() {
        return false;
    }
    let mut m = Matrix::zeros(window.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m[(i, j)] = v.clone();
        }
    }
    m.column_span_contains(&rhs)
}
