use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::{Monomial, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Weight (sum of levels) first, then degrevlex.
    WeightedDegRevLex,
}

/// A monomial order: a kind plus a variable ranking.
///
/// Without an explicit ranking variables rank as in [`VarId`]. An explicit
/// ranking lists variables from most to least significant; unlisted variables
/// rank below all listed ones, in their default order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    ranking: Option<Arc<[VarId]>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::weighted_degrevlex()
    }
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, ranking: None }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    pub fn weighted_degrevlex() -> Self {
        Self::new(OrderKind::WeightedDegRevLex)
    }

    pub fn with_ranking(kind: OrderKind, ranking: Vec<VarId>) -> Self {
        MonomialOrder { kind, ranking: Some(ranking.into()) }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::WeightedDegRevLex {
            let w = a.weight().cmp(&b.weight());
            if w != Ordering::Equal {
                return w;
            }
        }
        if self.kind != OrderKind::Lex {
            let d = a.degree().cmp(&b.degree());
            if d != Ordering::Equal {
                return d;
            }
        }
        match &self.ranking {
            None => self.tie_break(a.exponents(), b.exponents()),
            Some(rank) => {
                let ka = keyed(a, rank);
                let kb = keyed(b, rank);
                self.tie_break(&ka, &kb)
            }
        }
    }

    fn tie_break<K: Ord + Copy>(&self, a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
        match self.kind {
            OrderKind::Lex => lex(a, b),
            OrderKind::DegRevLex | OrderKind::WeightedDegRevLex => revlex(a, b),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn keyed(m: &Monomial, rank: &[VarId]) -> Vec<((usize, VarId), u32)> {
    let mut out: Vec<_> = m
        .exponents()
        .iter()
        .map(|&(v, e)| {
            let pos = rank.iter().position(|&w| w == v).unwrap_or(rank.len());
            ((pos, v), e)
        })
        .collect();
    out.sort_by_key(|&(k, _)| k);
    out
}

// Slices are sorted by key, most significant variable first.
fn lex<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(ka, ea)), Some(&(kb, eb))) => match ka.cmp(&kb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

// Reverse lexicographic tie-break for monomials of equal degree: look at the
// least significant variable where exponents differ; smaller exponent wins.
fn revlex<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i.checked_sub(1).map(|k| a[k]), j.checked_sub(1).map(|k| b[k])) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((ka, ea)), Some((kb, eb))) => match ka.cmp(&kb) {
                // a has a less significant variable that b lacks
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            },
        }
    }
}
