use std::cmp::Ordering;
use std::fmt;

/// The jet variable `x^j_(-i)`, written `x{j}_{i}` in text.
///
/// Variables are ranked by level first and generator second, so
/// `x1_1 > x2_1 > ... > x1_2 > x2_2 > ...`. `Ord` on `VarId` lists the
/// higher-ranked variable first (`x1_1 < x2_1` as `Ord`), which is the order
/// exponent vectors are stored in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarId {
    pub generator: u32,
    pub level: u32,
}

impl VarId {
    pub fn new(generator: u32, level: u32) -> Self {
        assert!(generator >= 1 && level >= 1, "jet variables are 1-indexed");
        VarId { generator, level }
    }

    /// The base-ring coordinate `x^j = x^j_(-1)`.
    pub fn base(generator: u32) -> Self {
        VarId::new(generator, 1)
    }

    pub fn weight(self) -> u32 {
        self.level
    }

    /// The same generator one level up; `T` maps `x_(-i)` onto a multiple of it.
    pub fn raised(self) -> Self {
        VarId::new(self.generator, self.level + 1)
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.generator).cmp(&(other.level, other.generator))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.generator, self.level)
    }
}

/// A power product with strictly positive exponents, sorted by `VarId`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    degree: u32,
    weight: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::from_exponents([(v, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables are merged and zero exponents dropped.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, acc)) if *w == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Self::from_sorted(merged)
    }

    fn from_sorted(exps: Vec<(VarId, u32)>) -> Self {
        let degree = exps.iter().map(|&(_, e)| e).sum();
        let weight = exps.iter().map(|&(v, e)| v.level * e).sum();
        Monomial { exps, degree, weight }
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn max_level(&self) -> u32 {
        self.exps.iter().map(|(v, _)| v.level).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out, degree: self.degree + other.degree, weight: self.weight + other.weight }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .filter_map(|&(v, f)| {
                let e = f - self.exponent(v);
                (e > 0).then_some((v, e))
            })
            .collect();
        Some(Self::from_sorted(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1.max(b.1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Self::from_sorted(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// Removes one factor of `v`, returning the exponent it had.
    pub fn without_one(&self, v: VarId) -> Option<(u32, Monomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(w, f)| {
                if w == v {
                    (f > 1).then_some((w, f - 1))
                } else {
                    Some((w, f))
                }
            })
            .collect();
        Some((e, Self::from_sorted(exps)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(j: u32, i: u32) -> VarId {
        VarId::new(j, i)
    }

    #[test]
    fn weight_and_degree_are_cached() {
        let m = Monomial::from_exponents([(x(1, 2), 2), (x(2, 1), 1), (x(1, 2), 1)]);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.weight(), 7);
        assert_eq!(m.exponent(x(1, 2)), 3);
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = Monomial::from_exponents([(x(1, 1), 1), (x(2, 1), 2)]);
        let b = Monomial::from_exponents([(x(1, 1), 3), (x(2, 1), 2), (x(1, 3), 1)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        let q = a.quotient_of(&b).unwrap();
        assert_eq!(q.mul(&a), b);
        assert_eq!(a.lcm(&b), b);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(x(3, 1)).is_coprime(&a));
    }

    #[test]
    fn zero_exponents_are_dropped() {
        let m = Monomial::from_exponents([(x(1, 1), 0)]);
        assert!(m.is_one());
        assert_eq!(m, Monomial::one());
    }
}
