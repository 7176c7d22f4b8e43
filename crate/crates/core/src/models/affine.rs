use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{int, Monomial, Polynomial, Scalar, VarId};
use crate::error::{Error, Result};
use crate::groebner::{ideal_contains, GroebnerBasis};
use crate::vpa::{poisson_closure, radical_principal, validate_poisson, PoissonStructure, VpaContext};

/// A finite-dimensional Lie algebra by structure constants
/// `[x_i, x_j] = sum_k c^k_ij x_k`, 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    dimension: u32,
    names: Vec<String>,
    /// Level of the affine vertex algebra; carried along, never read by the
    /// jet-ring computations.
    pub level: Option<Scalar>,
    constants: BTreeMap<(u32, u32), BTreeMap<u32, Scalar>>,
}

impl LieAlgebraData {
    /// Builds from triples `(i, j, k, c^k_ij)`. The antisymmetric partner is
    /// filled in; an explicit partner must agree. Jacobi is checked exactly.
    pub fn new(
        dimension: u32,
        names: Vec<String>,
        constants: impl IntoIterator<Item = (u32, u32, u32, Scalar)>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidLieAlgebra("dimension must be positive".into()));
        }
        if names.len() != dimension as usize {
            return Err(Error::InvalidLieAlgebra(format!("{} names for dimension {dimension}", names.len())));
        }
        let mut explicit: BTreeMap<(u32, u32, u32), Scalar> = BTreeMap::new();
        for (i, j, k, c) in constants {
            for idx in [i, j, k] {
                if idx == 0 || idx > dimension {
                    return Err(Error::InvalidLieAlgebra(format!("index {idx} out of range 1..={dimension}")));
                }
            }
            if i == j && !c.is_zero() {
                return Err(Error::InvalidLieAlgebra(format!("[x{i}, x{i}] must vanish")));
            }
            if let Some(prev) = explicit.insert((i, j, k), c.clone()) {
                if prev != c {
                    return Err(Error::InvalidLieAlgebra(format!("conflicting values for c^{k}_{i}{j}")));
                }
            }
        }
        let mut table: BTreeMap<(u32, u32), BTreeMap<u32, Scalar>> = BTreeMap::new();
        for (&(i, j, k), c) in &explicit {
            if let Some(partner) = explicit.get(&(j, i, k)) {
                if *partner != -c.clone() {
                    return Err(Error::InvalidLieAlgebra(format!("c^{k}_{i}{j} and c^{k}_{j}{i} are not antisymmetric")));
                }
            }
            if c.is_zero() || i == j {
                continue;
            }
            table.entry((i, j)).or_default().insert(k, c.clone());
            table.entry((j, i)).or_default().insert(k, -c.clone());
        }
        let data = LieAlgebraData { dimension, names, level: None, constants: table };
        data.check_jacobi()?;
        Ok(data)
    }

    pub fn abelian(dimension: u32) -> Self {
        let names = (1..=dimension).map(|i| format!("a{i}")).collect();
        LieAlgebraData { dimension, names, level: None, constants: BTreeMap::new() }
    }

    /// Basis `(e, h, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let names = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        LieAlgebraData::new(3, names, [(2, 1, 1, int(2)), (2, 3, 3, int(-2)), (1, 3, 2, int(1))])
            .expect("sl2 data is valid")
    }

    pub fn with_level(mut self, level: Scalar) -> Self {
        self.level = Some(level);
        self
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<u32> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|p| p as u32 + 1)
            .ok_or_else(|| Error::UnknownBasisName(name.to_string()))
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket(&self, i: u32, j: u32) -> BTreeMap<u32, Scalar> {
        self.constants.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn bracket_vec(&self, v: &BTreeMap<u32, Scalar>, j: u32) -> BTreeMap<u32, Scalar> {
        let mut out: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (&i, a) in v {
            for (k, c) in self.bracket(i, j) {
                *out.entry(k).or_insert_with(Scalar::zero) += a * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dimension;
        for i in 1..=d {
            for j in i + 1..=d {
                for k in j + 1..=d {
                    // [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj]
                    let mut sum: BTreeMap<u32, Scalar> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (idx, v) in self.bracket_vec(&self.bracket(a, b), c) {
                            *sum.entry(idx).or_insert_with(Scalar::zero) += v;
                        }
                    }
                    if sum.values().any(|v| !v.is_zero()) {
                        return Err(Error::InvalidLieAlgebra(format!("Jacobi identity fails on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The linear Poisson bracket `{x^i, x^j} = sum_k c^k_ij x^k`, validated.
pub fn kirillov_kostant(data: &LieAlgebraData) -> Result<PoissonStructure> {
    let mut entries = Vec::new();
    for (&(i, j), row) in &data.constants {
        if i < j {
            let p = row.iter().fold(Polynomial::zero(), |acc, (&k, c)| &acc + &Polynomial::x(k, 1).scale(c));
            entries.push((i, j, p));
        }
    }
    validate_poisson(PoissonStructure::new(data.dimension, entries)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCheck {
    pub root_index: u32,
    pub power: u32,
    pub radical: Polynomial,
    pub closure: GroebnerBasis,
    pub contains_all_generators: bool,
}

impl ClosureCheck {
    /// The zero locus of the closure is the origin.
    pub fn variety_is_origin(&self) -> bool {
        self.contains_all_generators && !self.closure.is_unit()
    }
}

/// Radical of `<x_alpha^n>`, then its Poisson closure; reports whether the
/// closure is the augmentation ideal.
pub fn integrable_closure_check(data: &LieAlgebraData, root_index: u32, power: u32) -> Result<ClosureCheck> {
    if root_index == 0 || root_index > data.dimension {
        return Err(Error::GeneratorOutOfRange { index: root_index, count: data.dimension });
    }
    let ctx = VpaContext::free(kirillov_kostant(data)?)?;
    let radical = radical_principal(&Polynomial::x(root_index, 1).pow(power.max(1)))?;
    let closure = poisson_closure(&ctx, std::slice::from_ref(&radical))?;
    let gens: Vec<Polynomial> = (1..=data.dimension).map(|j| Polynomial::x(j, 1)).collect();
    let contains_all_generators = ideal_contains(&closure, &gens);
    Ok(ClosureCheck { root_index, power, radical, closure, contains_all_generators })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimRow {
    pub weight: u32,
    pub jet_count: u128,
    pub pbw_count: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub rows: Vec<GradedDimRow>,
}

impl GradedDims {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.jet_count == r.pbw_count)
    }
}

/// Weight-by-weight comparison of jet-ring monomial counts (by enumeration)
/// with the coefficients of `prod_n (1 - q^n)^(-dim)`.
pub fn graded_dims_jet_vs_pbw(data: &LieAlgebraData, max_weight: u32) -> GradedDims {
    let d = data.dimension;
    let pbw = colored_partition_counts(d, max_weight);
    let rows = (0..=max_weight)
        .map(|w| GradedDimRow { weight: w, jet_count: jet_monomials(d, w).len() as u128, pbw_count: pbw[w as usize] })
        .collect();
    GradedDims { rows }
}

/// Every monomial of weight exactly `w` in the jet variables of `d` generators.
pub fn jet_monomials(d: u32, w: u32) -> Vec<Monomial> {
    let vars: Vec<VarId> = (1..=w).flat_map(|l| (1..=d).map(move |g| VarId::new(g, l))).collect();
    let mut out = Vec::new();
    let mut exps = Vec::new();
    enumerate(&vars, 0, w, &mut exps, &mut out);
    out
}

fn enumerate(vars: &[VarId], k: usize, remaining: u32, exps: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
    if remaining == 0 {
        out.push(Monomial::from_exponents(exps.clone()));
        return;
    }
    if k == vars.len() {
        return;
    }
    let v = vars[k];
    for e in 0..=remaining / v.level {
        if e > 0 {
            exps.push((v, e));
        }
        enumerate(vars, k + 1, remaining - e * v.level, exps, out);
        if e > 0 {
            exps.pop();
        }
    }
}

fn colored_partition_counts(colors: u32, max_weight: u32) -> Vec<u128> {
    let len = max_weight as usize + 1;
    let mut series = vec![0u128; len];
    series[0] = 1;
    for n in 1..len {
        // multiply by 1/(1 - q^n) once per color
        for _ in 0..colors {
            for i in n..len {
                series[i] += series[i - n];
            }
        }
    }
    series
}
