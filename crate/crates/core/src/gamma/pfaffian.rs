use crate::error::{Error, Result};

/// Minimal commutative-ring surface needed to expand a Pfaffian.
pub trait PfRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

/// Pfaffian of the skew matrix whose strict upper triangle is `m[i][j]`, `i < j`.
/// Odd size gives zero; `unit` fixes the ring (flavor etc.) of the result.
pub fn pfaffian<R: PfRing>(m: &[Vec<R>], unit: &R) -> R {
    let idx: Vec<usize> = (0..m.len()).collect();
    expand(m, &idx, unit)
}

fn expand<R: PfRing>(m: &[Vec<R>], idx: &[usize], unit: &R) -> R {
    if idx.is_empty() {
        return unit.one_like();
    }
    if idx.len() % 2 == 1 {
        return unit.zero_like();
    }
    let first = idx[0];
    let mut acc = unit.zero_like();
    for k in 1..idx.len() {
        let a = &m[first][idx[k]];
        if a.ring_is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&j| j != idx[k]).collect();
        let term = a.ring_mul(&expand(m, &rest, unit));
        acc = if k % 2 == 1 {
            acc.ring_add(&term)
        } else {
            acc.ring_add(&term.ring_neg())
        };
    }
    acc
}

/// Checks `m[j][i] = -m[i][j]` for every `i < j`.
pub fn check_skew<R: PfRing + PartialEq>(m: &[Vec<R>]) -> Result<()> {
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[j][i] != m[i][j].ring_neg() {
                return Err(Error::NotSkewSymmetric(i, j));
            }
        }
    }
    Ok(())
}

impl PfRing for crate::poly::ZPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}
