//! Factorial Schur Q and P functions with a parameter sequence `a`.
//!
//! `P_λ(x|a)` is the limit over an even number of variables of
//! `1/(n-r)! Σ_{w∈S_n} w( Π_{i≤r} (x_i|a)^{λ_i} Π_{i≤r, i<j≤n} (x_i+x_j)/(x_i-x_j) )`
//! and `Q_λ(x|a) = 2^{ℓ(λ)} P_λ(x|0, a)`. Both are Pfaffians of their two-row
//! pieces, which are computed from the defining formula in two variables.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::pfaffian::{check_skew, pfaffian};
use super::{expand_in_basis, Flavor, GammaElement};
use crate::error::{Error, Result};
use crate::partition::StrictPartition;
use crate::poly::{elementary_symmetric, factorial_power, vandermonde, Var, ZPoly};
use crate::util::permutations;
use crate::weyl::{Family, SignedPermutation};

/// How a [`ParamSequence`] continues past its explicit prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    Zero,
    /// `t_s, t_{s+1}, ...`
    T(u16),
}

/// An infinite sequence of linear forms `a_1, a_2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSequence {
    prefix: Vec<ZPoly>,
    tail: Tail,
}

impl ParamSequence {
    pub fn new(prefix: Vec<ZPoly>, tail: Tail) -> Result<Self> {
        if let Some(bad) = prefix.iter().find(|a| a.degree().is_some_and(|d| d > 1)) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("parameter {bad} is not linear"),
            });
        }
        Ok(ParamSequence { prefix, tail })
    }

    /// `(t_1, t_2, ...)`.
    pub fn t() -> Self {
        ParamSequence {
            prefix: Vec::new(),
            tail: Tail::T(1),
        }
    }

    /// `(0, t_1, t_2, ...)`.
    pub fn zero_then_t() -> Self {
        Self::t().prepend_zero()
    }

    pub fn zeros() -> Self {
        ParamSequence {
            prefix: Vec::new(),
            tail: Tail::Zero,
        }
    }

    /// `(t_1, -z_1, t_2, -z_2, ..., t_m, -z_m, 0, 0, ...)`.
    pub fn interleaved(m: u16) -> Self {
        let prefix = (1..=m).flat_map(|i| [ZPoly::t(i), -ZPoly::z(i)]).collect();
        ParamSequence {
            prefix,
            tail: Tail::Zero,
        }
    }

    pub fn finite(prefix: Vec<ZPoly>) -> Result<Self> {
        Self::new(prefix, Tail::Zero)
    }

    pub fn prepend_zero(&self) -> Self {
        let mut prefix = vec![ZPoly::zero()];
        prefix.extend(self.prefix.iter().cloned());
        ParamSequence {
            prefix,
            tail: self.tail,
        }
    }

    /// `a_i`, 1-based.
    pub fn get(&self, i: usize) -> ZPoly {
        if i <= self.prefix.len() {
            return self.prefix[i - 1].clone();
        }
        match self.tail {
            Tail::Zero => ZPoly::zero(),
            Tail::T(s) => ZPoly::t(s + (i - self.prefix.len() - 1) as u16),
        }
    }

    pub fn take(&self, k: usize) -> Vec<ZPoly> {
        (1..=k).map(|i| self.get(i)).collect()
    }
}

/// `P^{(n)}_λ(x_1..x_n | a)` straight from the defining symmetrization.
pub fn definition_polynomial(lambda: &StrictPartition, a: &[ZPoly], n: usize) -> Result<ZPoly> {
    let r = lambda.len();
    if r > n {
        return Ok(ZPoly::zero());
    }
    let xs: Vec<ZPoly> = (1..=n as u16).map(ZPoly::x).collect();
    let mut g = ZPoly::one();
    for i in 0..r {
        g = &g * &factorial_power(&xs[i], a, lambda.parts()[i] as usize)?;
        for j in i + 1..n {
            g = &g * &(&xs[i] + &xs[j]);
        }
    }
    for i in r..n {
        for j in i + 1..n {
            g = &g * &(&xs[i] - &xs[j]);
        }
    }
    let mut alt = ZPoly::zero();
    for (perm, sign) in permutations(n) {
        let moved = g.rename(|v| match v {
            Var::X(i) => Var::X(perm[i as usize - 1] as u16 + 1),
            other => other,
        });
        if sign > 0 {
            alt += &moved;
        } else {
            alt -= &moved;
        }
    }
    let fact: BigInt = (1..=(n - r) as u64).product::<u64>().into();
    alt.div_exact(&vandermonde(&xs))?.div_scalar_exact(&fact)
}

type Key = (Flavor, u32, u32, Vec<ZPoly>);
static TWO_ROW: LazyLock<RwLock<HashMap<Key, Arc<GammaElement>>>> = LazyLock::new(Default::default);
static FULL: LazyLock<RwLock<HashMap<(Flavor, StrictPartition, Vec<ZPoly>), Arc<GammaElement>>>> =
    LazyLock::new(Default::default);

fn pair(k: u32, l: u32) -> StrictPartition {
    StrictPartition::new(vec![k, l]).expect("k > l")
}

/// `Q_{(k,l)}(x|a)` or `P_{(k,l)}(x|a)` for `k > l >= 0`.
pub fn two_row(flavor: Flavor, k: u32, l: u32, a: &ParamSequence) -> Result<Arc<GammaElement>> {
    let needed = a.take(k as usize);
    let key = (flavor, k, l, needed.clone());
    if let Some(v) = TWO_ROW.read().expect("memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let lam = pair(k, l);
    let value = match flavor {
        Flavor::Q => {
            let b = a.prepend_zero().take(k as usize);
            let p = expand_in_basis(&definition_polynomial(&lam, &b, 2)?, 2, Flavor::P)?;
            p.scale_int(&(BigInt::one() << lam.len()))
                .to_flavor(Flavor::Q)?
        }
        Flavor::P => {
            let poly = definition_polynomial(&lam, &needed, 2)?;
            if !needed.first().is_none_or(ZPoly::is_zero) {
                // only even alphabets stabilize when a_1 != 0
                let four = definition_polynomial(&lam, &needed, 4)?.substitute(|v| match v {
                    Var::X(3) | Var::X(4) => Some(ZPoly::zero()),
                    _ => None,
                });
                if four != poly {
                    return Err(Error::Unstable(format!("P{lam} between 2 and 4 variables")));
                }
            }
            expand_in_basis(&poly, 2, Flavor::P)?
        }
    };
    let v = Arc::new(value);
    Ok(TWO_ROW
        .write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(v)
        .clone())
}

fn pfaffian_of_two_rows(
    flavor: Flavor,
    lambda: &StrictPartition,
    a: &ParamSequence,
) -> Result<GammaElement> {
    let key = (flavor, lambda.clone(), a.take(lambda.part(1) as usize));
    if let Some(v) = FULL.read().expect("memo poisoned").get(&key) {
        return Ok((**v).clone());
    }
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let value = if r == 0 {
        GammaElement::one(flavor)
    } else if r == 2 {
        (*two_row(flavor, parts[0], parts[1], a)?).clone()
    } else {
        let mut m = vec![vec![GammaElement::zero(flavor); r]; r];
        for i in 0..r {
            for j in i + 1..r {
                m[i][j] = (*two_row(flavor, parts[i], parts[j], a)?).clone();
            }
        }
        pfaffian(&m, &GammaElement::one(flavor))
    };
    FULL.write()
        .expect("memo poisoned")
        .insert(key, Arc::new(value.clone()));
    Ok(value)
}

/// Factorial Schur Q function `Q_λ(x|a)`; depends on `a_1 .. a_{λ_1 - 1}`.
pub fn factorial_q(lambda: &StrictPartition, a: &ParamSequence) -> Result<GammaElement> {
    pfaffian_of_two_rows(Flavor::Q, lambda, a)
}

/// Factorial Schur P function `P_λ(x|a)`; depends on `a_1 .. a_{λ_1}`.
pub fn factorial_p(lambda: &StrictPartition, a: &ParamSequence) -> Result<GammaElement> {
    pfaffian_of_two_rows(Flavor::P, lambda, a)
}

/// `Q^{(l)}_k(x|a)`: coefficient of `u^k` in `(Σ_m Q_m u^m) Π_{j<l} (1 - a_j u)`.
pub fn q_shifted(k: u32, l: u32, a: &ParamSequence) -> GammaElement {
    let params = a.take(l.saturating_sub(1) as usize);
    let mut out = GammaElement::zero(Flavor::Q);
    for i in 0..=k.min(l.saturating_sub(1)) {
        let e = elementary_symmetric(i as usize, &params);
        let e = if i % 2 == 1 { -e } else { e };
        let basis = StrictPartition::new(vec![k - i]).expect("one row");
        out.add_term(basis, &e);
    }
    out
}

/// Pfaffian of `c^{(i),(j)}_{λ_i,λ_j} = c^{(i)}_{λ_i} c^{(j)}_{λ_j}
/// + 2 Σ_{k=1}^{λ_j} (-1)^k c^{(i)}_{λ_i+k} c^{(j)}_{λ_j-k}`
/// for sequences `c[i][m]` indexed by row and degree.
pub fn multi_pfaffian(lambda: &StrictPartition, c: &[Vec<GammaElement>]) -> Result<GammaElement> {
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    if c.len() < r {
        return Err(Error::InsufficientParameters {
            needed: r,
            available: c.len(),
        });
    }
    let flavor = c
        .iter()
        .flatten()
        .next()
        .map_or(Flavor::Q, GammaElement::flavor);
    let get = |i: usize, m: i64| -> Result<GammaElement> {
        if m < 0 {
            return Ok(GammaElement::zero(flavor));
        }
        c[i].get(m as usize)
            .cloned()
            .ok_or(Error::InsufficientParameters {
                needed: m as usize + 1,
                available: c[i].len(),
            })
    };
    let entry = |i: usize, j: usize| -> Result<GammaElement> {
        let (a, b) = (parts[i] as i64, parts[j] as i64);
        let mut acc = &get(i, a)? * &get(j, b)?;
        for k in 1..=b {
            let sign = if k % 2 == 1 { -2 } else { 2 };
            let term = (&get(i, a + k)? * &get(j, b - k)?).scale_int(&BigInt::from(sign));
            acc = &acc + &term;
        }
        Ok(acc)
    };
    let mut m = vec![vec![GammaElement::zero(flavor); r]; r];
    for i in 0..r {
        for j in 0..r {
            if i != j {
                m[i][j] = entry(i, j)?;
            }
        }
    }
    check_skew(&m)?;
    Ok(pfaffian(&m, &GammaElement::one(flavor)))
}

fn t_bar(k: i32) -> ZPoly {
    let t = ZPoly::t(k.unsigned_abs() as u16);
    if k < 0 {
        -t
    } else {
        t
    }
}

/// `Π_{(i,j) ∈ shifted diagram} (t_{-w_λ(i)} + t_{-w_λ(j)})` for the type C Grassmannian element.
pub fn h_lambda(lambda: &StrictPartition) -> ZPoly {
    let w = SignedPermutation::from_strict_partition(lambda, Family::BC);
    lambda
        .shifted_boxes()
        .iter()
        .fold(ZPoly::one(), |acc, &(i, j)| {
            &acc * &(t_bar(-w.get(i as i32)) + t_bar(-w.get(j as i32)))
        })
}

/// `Π (t_{-w'_λ(i)} + t_{-w'_λ(j+1)})` for the type D Grassmannian element.
pub fn h_prime_lambda(lambda: &StrictPartition) -> ZPoly {
    let w = SignedPermutation::from_strict_partition(lambda, Family::D);
    lambda
        .shifted_boxes()
        .iter()
        .fold(ZPoly::one(), |acc, &(i, j)| {
            &acc * &(t_bar(-w.get(i as i32)) + t_bar(-w.get(j as i32 + 1)))
        })
}

/// `t_μ = (t_{μ_1}, ..., t_{μ_r})`.
pub fn t_point(mu: &StrictPartition) -> Vec<ZPoly> {
    mu.parts().iter().map(|&m| ZPoly::t(m as u16)).collect()
}

/// `t'_μ = (t_{μ_1+1}, ..., t_{μ_r+1})`, followed by `t_1` when `r` is odd.
pub fn t_prime_point(mu: &StrictPartition) -> Vec<ZPoly> {
    let mut v: Vec<ZPoly> = mu.parts().iter().map(|&m| ZPoly::t(m as u16 + 1)).collect();
    if v.len() % 2 == 1 {
        v.push(ZPoly::t(1));
    }
    v
}
