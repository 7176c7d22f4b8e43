use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{int, ratio, MonomialOrder, Polynomial, Scalar, VarId};
use crate::diffalg::{jet_ideal, Presentation};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, jet_basis, krull_dimension, GroebnerBasis};
use crate::linalg::Matrix;
use crate::vpa::radical_principal;

/// Central charge, optionally remembering the minimal-series pair it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirasoroParams {
    pub central_charge: Scalar,
    pub minimal_pair: Option<(i64, i64)>,
}

impl VirasoroParams {
    pub fn new(central_charge: Scalar) -> Self {
        VirasoroParams { central_charge, minimal_pair: None }
    }

    pub fn minimal(p: i64, q: i64) -> Result<Self> {
        Ok(VirasoroParams { central_charge: minimal_central_charge(p, q)?, minimal_pair: Some((p, q)) })
    }
}

/// `1 - 6 (p - q)^2 / (p q)` for coprime `p, q >= 2`.
pub fn minimal_central_charge(p: i64, q: i64) -> Result<Scalar> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::InvalidMinimalPair { p, q });
    }
    Ok(int(1) - ratio(6 * (p - q) * (p - q), p * q))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Quotient of the vacuum Verma module by `L_{-1}` of the vacuum.
    Vacuum,
    /// Verma module with `L_0 = h` on the highest-weight vector.
    HighestWeight(Scalar),
}

/// PBW monomial `L_{-n_1} ... L_{-n_k} v`, stored as `[n_1, ..., n_k]` with
/// `n_1 >= ... >= n_k`.
pub type Partition = Vec<u32>;

type Vector = BTreeMap<Partition, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirasoroModule {
    pub params: VirasoroParams,
    pub kind: ModuleKind,
    pub cutoff: u32,
}

impl VirasoroModule {
    pub fn vacuum(params: VirasoroParams, cutoff: u32) -> Self {
        VirasoroModule { params, kind: ModuleKind::Vacuum, cutoff }
    }

    pub fn highest_weight(params: VirasoroParams, h: Scalar, cutoff: u32) -> Self {
        VirasoroModule { params, kind: ModuleKind::HighestWeight(h), cutoff }
    }

    fn min_part(&self) -> u32 {
        match self.kind {
            ModuleKind::Vacuum => 2,
            ModuleKind::HighestWeight(_) => 1,
        }
    }

    fn top_weight(&self) -> Scalar {
        match &self.kind {
            ModuleKind::Vacuum => Scalar::zero(),
            ModuleKind::HighestWeight(h) => h.clone(),
        }
    }

    /// Ordered PBW basis of the given level.
    pub fn basis(&self, level: u32) -> Vec<Partition> {
        partitions(level, self.min_part())
    }
}

/// Partitions of `n` into parts `>= min_part`, non-increasing parts, listed
/// in decreasing lexicographic order.
pub fn partitions(n: u32, min_part: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, min: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (min..=max.min(n)).rev() {
            prefix.push(first);
            go(n - first, first, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// Vacuum-module bases for levels `0..=n`.
pub fn vacuum_basis(n: u32) -> Vec<Vec<Partition>> {
    (0..=n).map(|d| partitions(d, 2)).collect()
}

/// Memoized action of the modes `L_n` on PBW monomials.
struct Action<'a> {
    module: &'a VirasoroModule,
    memo: HashMap<(i64, Partition), Vector>,
}

impl<'a> Action<'a> {
    fn new(module: &'a VirasoroModule) -> Self {
        Action { module, memo: HashMap::new() }
    }

    fn apply(&mut self, n: i64, mono: &[u32]) -> Vector {
        if n == 0 {
            let level: u32 = mono.iter().sum();
            let w = self.module.top_weight() + int(level as i64);
            return scaled(mono, w);
        }
        if mono.is_empty() {
            return if n > 0 || (-n as u32) < self.module.min_part() {
                Vector::new()
            } else {
                scaled(&[-n as u32], Scalar::one())
            };
        }
        let first = mono[0] as i64;
        if n < 0 && -n >= first {
            let mut out = vec![-n as u32];
            out.extend_from_slice(mono);
            return scaled(&out, Scalar::one());
        }
        let key = (n, mono.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // L_n L_{-m} w = L_{-m} L_n w + (n + m) L_{n-m} w + delta_{n,m} (n^3 - n)/12 c w
        let rest = &mono[1..];
        let mut out = Vector::new();
        for (p, c) in self.apply(n, rest) {
            let v = self.apply(-first, &p);
            axpy(&mut out, &c, &v);
        }
        if n + first != 0 {
            let v = self.apply(n - first, rest);
            axpy(&mut out, &int(n + first), &v);
        }
        if n == first {
            let central = ratio(n * n * n - n, 12) * &self.module.params.central_charge;
            axpy(&mut out, &central, &scaled(rest, Scalar::one()));
        }
        self.memo.insert(key, out.clone());
        out
    }

    /// `<u, v>` with `L_{-n}` adjoint to `L_n` and the top vector of norm 1.
    fn pairing(&mut self, u: &[u32], v: &[u32]) -> Scalar {
        let mut vec = scaled(v, Scalar::one());
        for &m in u {
            let mut next = Vector::new();
            for (p, c) in vec {
                let w = self.apply(m as i64, &p);
                axpy(&mut next, &c, &w);
            }
            vec = next;
        }
        vec.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero)
    }

    fn gram(&mut self, level: u32) -> Matrix {
        let basis = self.module.basis(level);
        let n = basis.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let e = self.pairing(&basis[i], &basis[j]);
                m[(j, i)] = e.clone();
                m[(i, j)] = e;
            }
        }
        m
    }
}

fn scaled(mono: &[u32], c: Scalar) -> Vector {
    let mut v = Vector::new();
    if !c.is_zero() {
        v.insert(mono.to_vec(), c);
    }
    v
}

fn axpy(acc: &mut Vector, c: &Scalar, v: &Vector) {
    for (p, x) in v {
        let e = acc.entry(p.clone()).or_insert_with(Scalar::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(p);
        }
    }
}

/// Shapovalov form on the PBW basis of `level`.
pub fn gram_matrix(module: &VirasoroModule, level: u32) -> Result<Matrix> {
    if level > module.cutoff {
        return Err(Error::LevelAboveCutoff { level, cutoff: module.cutoff });
    }
    Ok(Action::new(module).gram(level))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLevel {
    pub level: u32,
    pub basis: Vec<Partition>,
    /// Kernel vectors of the Gram matrix, coordinates in `basis`.
    pub kernel: Vec<Vec<Scalar>>,
}

/// Levels `<= cutoff` whose Gram matrix is degenerate, with kernel bases.
pub fn singular_levels(module: &VirasoroModule) -> Vec<SingularLevel> {
    let mut action = Action::new(module);
    (0..=module.cutoff)
        .filter_map(|level| {
            let kernel = action.gram(level).kernel();
            (!kernel.is_empty()).then(|| SingularLevel { level, basis: module.basis(level), kernel })
        })
        .collect()
}

/// Image of the degenerate subspace in `C[x] = V / C_2(V)`, with `x` the
/// class of `L_{-2}`: only the coefficient of `L_{-2}^k` survives.
pub fn c2_image(module: &VirasoroModule) -> GroebnerBasis {
    c2_image_of(&singular_levels(module))
}

pub fn c2_image_of(levels: &[SingularLevel]) -> GroebnerBasis {
    let x = VarId::base(1);
    let mut images = Vec::new();
    for sl in levels {
        if sl.level % 2 != 0 {
            continue;
        }
        let k = sl.level / 2;
        let Some(idx) = sl.basis.iter().position(|p| p.len() == k as usize && p.iter().all(|&q| q == 2)) else {
            continue;
        };
        for v in &sl.kernel {
            if !v[idx].is_zero() {
                images.push(Polynomial::var(x).pow(k).scale(&v[idx]));
            }
        }
    }
    buchberger_in([x], &images, &MonomialOrder::default())
}

pub const NON_REDUCED_CAVEAT: &str = "finite-order jet dimensions of a non-reduced scheme can be positive; \
     the verdict rests on the base dimension, jet dimensions are diagnostics only";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetDiagnostic {
    pub order: u32,
    pub krull_dimension: i64,
    /// Same computation for the radical, when it is available.
    pub reduced_krull_dimension: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LisseReport {
    pub krull_dimension: i64,
    pub quotient_dimension: Option<u64>,
    pub lisse: bool,
    pub jet_diagnostics: Vec<JetDiagnostic>,
    pub caveat: &'static str,
}

/// Decides zero-dimensionality of the base quotient and attaches jet
/// diagnostics at each requested order.
pub fn lisse_verdict(r_ideal: &GroebnerBasis, jet_orders: &[u32]) -> Result<LisseReport> {
    let base = krull_dimension(r_ideal);
    let r = r_ideal.variables().iter().map(|v| v.generator).max().unwrap_or(1);
    let pres = Presentation::new(r, r_ideal.basis().to_vec())?;
    let reduced = reduced_presentation(r_ideal, r)?;
    let mut jet_diagnostics = Vec::new();
    for &m in jet_orders {
        let jet_dim = |p: &Presentation| krull_dimension(&jet_basis(&jet_ideal(p, m), &MonomialOrder::default())).krull_dimension;
        jet_diagnostics.push(JetDiagnostic {
            order: m,
            krull_dimension: jet_dim(&pres),
            reduced_krull_dimension: reduced.as_ref().map(jet_dim),
        });
    }
    Ok(LisseReport {
        krull_dimension: base.krull_dimension,
        quotient_dimension: base.quotient_dimension,
        lisse: base.krull_dimension == 0,
        jet_diagnostics,
        caveat: NON_REDUCED_CAVEAT,
    })
}

// Radical of a principal ideal, or the ideal itself when it is generated by
// linear forms.
fn reduced_presentation(gb: &GroebnerBasis, r: u32) -> Result<Option<Presentation>> {
    let basis = gb.basis();
    if basis.iter().all(|p| p.degree().unwrap_or(0) <= 1) {
        return Ok(Some(Presentation::new(r, basis.to_vec())?));
    }
    if basis.len() == 1 {
        return Ok(Some(Presentation::new(r, vec![radical_principal(&basis[0])?])?));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vac(c: Scalar, cutoff: u32) -> VirasoroModule {
        VirasoroModule::vacuum(VirasoroParams::new(c), cutoff)
    }

    #[test]
    fn minimal_charges() {
        assert_eq!(minimal_central_charge(2, 3).unwrap(), int(0));
        assert_eq!(minimal_central_charge(3, 4).unwrap(), ratio(1, 2));
        assert_eq!(minimal_central_charge(2, 5).unwrap(), ratio(-22, 5));
        assert_eq!(minimal_central_charge(2, 4), Err(Error::InvalidMinimalPair { p: 2, q: 4 }));
        assert!(minimal_central_charge(1, 3).is_err());
    }

    #[test]
    fn bases() {
        let b = vacuum_basis(6);
        assert_eq!(b[0], vec![Vec::<u32>::new()]);
        assert!(b[1].is_empty());
        assert_eq!(b[2], vec![vec![2]]);
        assert_eq!(b[6], vec![vec![6], vec![4, 2], vec![3, 3], vec![2, 2, 2]]);
        assert_eq!(partitions(4, 1).len(), 5);
    }

    #[test]
    fn low_level_grams() {
        let m = vac(int(0), 4);
        assert_eq!(gram_matrix(&m, 0).unwrap(), Matrix::identity(1));
        assert_eq!(gram_matrix(&m, 2).unwrap(), Matrix::from_rows(vec![vec![int(0)]]));
        assert_eq!(gram_matrix(&vac(int(1), 2), 2).unwrap(), Matrix::from_rows(vec![vec![ratio(1, 2)]]));
        assert!(gram_matrix(&m, 5).is_err());
        // level 4: <L-4,L-4> = 5c, <L-4,L-2^2> = 3c, <L-2^2,L-2^2> = c(8+c)/2
        let c = ratio(7, 3);
        let g = gram_matrix(&vac(c.clone(), 4), 4).unwrap();
        let want = Matrix::from_rows(vec![
            vec![int(5) * &c, int(3) * &c],
            vec![int(3) * &c, &c * (int(8) + &c) / int(2)],
        ]);
        assert_eq!(g, want);
    }

    #[test]
    fn verma_level_two_matches_kac() {
        let (c, h) = (ratio(3, 7), ratio(-2, 5));
        let m = VirasoroModule::highest_weight(VirasoroParams::new(c.clone()), h.clone(), 2);
        let det = gram_matrix(&m, 2).unwrap().determinant();
        let h2 = &h * &h;
        let want = int(2) * &h * (int(16) * &h2 + int(2) * &h * (&c - int(5)) + &c);
        assert_eq!(det, want);
    }

    #[test]
    fn c_zero_pipeline() {
        let m = VirasoroModule::vacuum(VirasoroParams::minimal(2, 3).unwrap(), 4);
        let levels = singular_levels(&m);
        assert_eq!(levels[0].level, 2);
        let img = c2_image_of(&levels);
        assert_eq!(img.basis(), &[Polynomial::x(1, 1)]);
        assert!(lisse_verdict(&img, &[]).unwrap().lisse);
    }

    #[test]
    fn lee_yang_kernel_at_level_four() {
        let m = VirasoroModule::vacuum(VirasoroParams::minimal(2, 5).unwrap(), 4);
        let levels = singular_levels(&m);
        assert_eq!(levels.iter().map(|s| s.level).collect::<Vec<_>>(), vec![4]);
        assert_eq!(c2_image_of(&levels).basis(), &[Polynomial::x(1, 1).pow(2)]);
    }

    #[test]
    fn generic_charge_has_no_kernel() {
        let m = vac(int(1), 6);
        assert!(singular_levels(&m).is_empty());
        let img = c2_image(&m);
        assert!(img.is_zero_ideal());
        let rep = lisse_verdict(&img, &[]).unwrap();
        assert_eq!(rep.krull_dimension, 1);
        assert!(!rep.lisse);
    }

    #[test]
    fn verdict_examples() {
        let x = VarId::base(1);
        let o = MonomialOrder::default();
        let cube = buchberger_in([x], &[Polynomial::var(x).pow(3)], &o);
        let rep = lisse_verdict(&cube, &[1]).unwrap();
        assert!(rep.lisse);
        assert_eq!(rep.quotient_dimension, Some(3));
        let sq = buchberger_in([x], &[Polynomial::var(x).pow(2)], &o);
        let rep = lisse_verdict(&sq, &[1]).unwrap();
        assert!(rep.lisse);
        assert_eq!(rep.jet_diagnostics[0], JetDiagnostic { order: 1, krull_dimension: 1, reduced_krull_dimension: Some(0) });
    }
}
