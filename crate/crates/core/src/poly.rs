//! Exact multivariate polynomials over the integers.
//!
//! Variables come in four families: the equivariant `z` and `t` families, plus
//! `x` and `y` which are only used as scratch alphabets (evaluation, peeling,
//! alphabet shifts). Monomials are ordered graded-lexicographically with
//! `z1 > z2 > ... > t1 > t2 > ... > x1 > ... > y1 > ...`; the canonical text
//! form lists terms from the largest monomial down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::util::permutations;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z(u16),
    T(u16),
    X(u16),
    Y(u16),
}

impl Var {
    pub fn index(self) -> u16 {
        match self {
            Var::Z(i) | Var::T(i) | Var::X(i) | Var::Y(i) => i,
        }
    }

    fn letter(self) -> char {
        match self {
            Var::Z(_) => 'z',
            Var::T(_) => 't',
            Var::X(_) => 'x',
            Var::Y(_) => 'y',
        }
    }

    /// Parses names like `z3` or `t12`.
    pub fn parse(s: &str) -> Option<Var> {
        let mut chars = s.chars();
        let head = chars.next()?;
        let idx: u16 = chars.as_str().parse().ok()?;
        if idx == 0 {
            return None;
        }
        match head {
            'z' => Some(Var::Z(idx)),
            't' => Some(Var::T(idx)),
            'x' => Some(Var::X(idx)),
            'y' => Some(Var::Y(idx)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.index())
    }
}

/// A power product of variables, kept sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    factors: SmallVec<[(Var, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let mut factors = SmallVec::new();
        factors.push((v, exp));
        Monomial {
            degree: exp,
            factors,
        }
    }

    pub fn from_factors(it: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Self::one();
        for (v, e) in it {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let d = other.factors[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => factors.push((v, e - d)),
                }
            } else {
                factors.push((v, e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            factors,
        })
    }

    /// Splits off the factors selected by `pred`: returns (selected, rest).
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut sel = Monomial::one();
        let mut rest = Monomial::one();
        for &(v, e) in &self.factors {
            let target = if pred(v) { &mut sel } else { &mut rest };
            target.factors.push((v, e));
            target.degree += e;
        }
        (sel, rest)
    }

    fn write_plain(&self, out: &mut String) {
        for &(v, e) in &self.factors {
            let _ = write!(out, "{v}");
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
    }

    fn write_latex(&self, out: &mut String) {
        for &(v, e) in &self.factors {
            let _ = write!(out, "{}_{{{}}}", v.letter(), v.index());
            if e > 1 {
                let _ = write!(out, "^{{{e}}}");
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.factors.iter().zip(other.factors.iter()) {
                if a.0 != b.0 {
                    // the side carrying the more significant variable wins
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        self.write_plain(&mut s);
        f.write_str(&s)
    }
}

/// Polynomial with integer coefficients; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c.into())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), BigInt::one())
    }

    pub fn z(i: u16) -> Self {
        Self::var(Var::Z(i))
    }

    pub fn t(i: u16) -> Self {
        Self::var(Var::T(i))
    }

    pub fn x(i: u16) -> Self {
        Self::var(Var::X(i))
    }

    pub fn y(i: u16) -> Self {
        Self::var(Var::Y(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Largest index of a variable accepted by `family`, or 0.
    pub fn max_index(&self, family: impl Fn(Var) -> bool) -> u16 {
        self.vars()
            .into_iter()
            .filter(|&v| family(v))
            .map(Var::index)
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides every coefficient by `c`, failing unless each division is exact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<ZPoly> {
        if c.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        let mut out = ZPoly::zero();
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!("{a} by {c}")));
            }
            out.terms.insert(m.clone(), q);
        }
        Ok(out)
    }

    /// Exact polynomial division; errors if `d` does not divide `self` in Z[vars].
    pub fn div_exact(&self, d: &ZPoly) -> Result<ZPoly> {
        let (lm, lc) = d
            .leading_term()
            .ok_or_else(|| Error::NonExactDivision("division by zero polynomial".into()))?;
        if d.len() == 1 {
            let mut out = ZPoly::zero();
            for (m, a) in &self.terms {
                let q = m.checked_div(lm).ok_or_else(|| self.not_divisible(d))?;
                let (c, r) = a.div_rem(lc);
                if !r.is_zero() {
                    return Err(self.not_divisible(d));
                }
                out.terms.insert(q, c);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = ZPoly::zero();
        while let Some((m, a)) = rem.leading_term() {
            let qm = m.checked_div(lm).ok_or_else(|| self.not_divisible(d))?;
            let (qc, r) = a.div_rem(lc);
            if !r.is_zero() {
                return Err(self.not_divisible(d));
            }
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    fn not_divisible(&self, d: &ZPoly) -> Error {
        let shown = self.to_string();
        let shown = if shown.len() > 80 {
            format!("{}...", &shown[..80])
        } else {
            shown
        };
        Error::NonExactDivision(format!("({shown}) by ({d})"))
    }

    /// Ring homomorphism sending each variable `v` to `f(v)` (or itself when `None`).
    pub fn substitute(&self, f: impl Fn(Var) -> Option<ZPoly>) -> ZPoly {
        let mut images: HashMap<Var, Option<ZPoly>> = HashMap::new();
        let mut powers: HashMap<(Var, u32), ZPoly> = HashMap::new();
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = ZPoly::one();
            for &(v, e) in m.factors() {
                let img = images.entry(v).or_insert_with(|| f(v));
                match img {
                    None => kept = kept.mul(&Monomial::var(v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        acc = &acc * &*pw;
                    }
                }
            }
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&kept), ac * c);
            }
        }
        out
    }

    /// Renames variables monomial by monomial (`f` must be injective on the support).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            let nm = Monomial::from_factors(m.factors().iter().map(|&(v, e)| (f(v), e)));
            out.add_term(nm, c.clone());
        }
        out
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> ZPoly {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    pub fn negate_var(&self, a: Var) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(a) % 2 == 1 {
                out.terms.insert(m.clone(), -c);
            } else {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Groups terms by the part of the monomial selected by `pred`.
    pub fn collect_by(&self, pred: impl Fn(Var) -> bool) -> BTreeMap<Monomial, ZPoly> {
        let mut out: BTreeMap<Monomial, ZPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(&pred);
            out.entry(sel).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Compact text without spaces, as used inside parentheses.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, spaced, neg) {
                (0, _, true) => out.push('-'),
                (0, _, false) => {}
                (_, true, true) => out.push_str(" - "),
                (_, true, false) => out.push_str(" + "),
                (_, false, true) => out.push('-'),
                (_, false, false) => out.push('+'),
            }
            let a = c.abs();
            if m.is_one() {
                let _ = write!(out, "{a}");
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{a}");
                }
                m.write_plain(&mut out);
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let a = c.abs();
            if m.is_one() {
                let _ = write!(out, "{a}");
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{a}");
                }
                m.write_latex(&mut out);
            }
        }
        out
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl From<i64> for ZPoly {
    fn from(c: i64) -> Self {
        ZPoly::constant(c)
    }
}

impl From<BigInt> for ZPoly {
    fn from(c: BigInt) -> Self {
        ZPoly::constant(c)
    }
}

impl AddAssign<&ZPoly> for ZPoly {
    fn add_assign(&mut self, rhs: &ZPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&ZPoly> for ZPoly {
    fn sub_assign(&mut self, rhs: &ZPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl MulAssign<&ZPoly> for ZPoly {
    fn mul_assign(&mut self, rhs: &ZPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = ZPoly::zero();
        for (m, c) in &small.terms {
            for (k, a) in &big.terms {
                out.add_term(m.mul(k), c * a);
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $f(self, rhs: ZPoly) -> ZPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $f(self, rhs: &ZPoly) -> ZPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    monomial: BTreeMap<String, u32>,
    coefficient: String,
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(m, c)| {
            TermRepr {
                monomial: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| (v.to_string(), e))
                    .collect(),
                coefficient: c.to_string(),
            }
        }))
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TermRepr>::deserialize(d)?;
        let mut p = ZPoly::zero();
        for t in raw {
            let mut m = Monomial::one();
            for (name, e) in t.monomial {
                let v = Var::parse(&name)
                    .ok_or_else(|| D::Error::custom(format!("bad variable {name}")))?;
                m = m.mul(&Monomial::var(v, e));
            }
            let c: BigInt = t
                .coefficient
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {}", t.coefficient)))?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// `e_j` of the given values.
pub fn elementary_symmetric(j: usize, values: &[ZPoly]) -> ZPoly {
    let mut e = vec![ZPoly::zero(); j + 1];
    e[0] = ZPoly::one();
    for v in values {
        for k in (1..=j).rev() {
            let add = &e[k - 1] * v;
            e[k] += &add;
        }
    }
    e.swap_remove(j)
}

/// `h_j` of the given values.
pub fn complete_homogeneous(j: usize, values: &[ZPoly]) -> ZPoly {
    let mut h = vec![ZPoly::zero(); j + 1];
    h[0] = ZPoly::one();
    for v in values {
        for k in 1..=j {
            let add = &h[k - 1] * v;
            h[k] += &add;
        }
    }
    h.swap_remove(j)
}

/// `(x|a)^k = (x - a_1)...(x - a_k)`.
pub fn factorial_power(x: &ZPoly, a: &[ZPoly], k: usize) -> Result<ZPoly> {
    if a.len() < k {
        return Err(Error::InsufficientParameters {
            needed: k,
            available: a.len(),
        });
    }
    let mut acc = ZPoly::one();
    for ai in &a[..k] {
        acc = &acc * &(x - ai);
    }
    Ok(acc)
}

pub fn vandermonde(xs: &[ZPoly]) -> ZPoly {
    let mut acc = ZPoly::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            acc = &acc * &(&xs[i] - &xs[j]);
        }
    }
    acc
}

/// Factorial Schur polynomial `det((x_j|a)^{λ_i+n-i}) / Π_{i<j}(x_i - x_j)` in `n = xs.len()` variables.
pub fn factorial_schur(lambda: &[u32], xs: &[ZPoly], a: &[ZPoly]) -> Result<ZPoly> {
    let n = xs.len();
    if lambda.len() > n {
        return Ok(ZPoly::zero());
    }
    let exps: Vec<usize> = (0..n)
        .map(|i| lambda.get(i).copied().unwrap_or(0) as usize + n - 1 - i)
        .collect();
    let mut entries = vec![vec![ZPoly::zero(); n]; n];
    for (i, &e) in exps.iter().enumerate() {
        for (j, x) in xs.iter().enumerate() {
            entries[i][j] = factorial_power(x, a, e)?;
        }
    }
    let mut det = ZPoly::zero();
    for (perm, sign) in permutations(n) {
        let mut prod = ZPoly::constant(sign);
        for (i, &p) in perm.iter().enumerate() {
            prod = &prod * &entries[i][p];
        }
        det += &prod;
    }
    det.div_exact(&vandermonde(xs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(i: u16) -> ZPoly {
        ZPoly::z(i)
    }
    fn t(i: u16) -> ZPoly {
        ZPoly::t(i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(z(1) - t(1)) * &(z(1) + t(1));
        assert_eq!(p.to_string(), "z1^2 - t1^2");
    }

    #[test]
    fn canonical_order() {
        let p = t(1) + z(2) + z(1).pow(2) + ZPoly::constant(3) + &z(1) * &t(1);
        assert_eq!(p.to_string(), "z1^2 + z1t1 + z2 + t1 + 3");
        assert_eq!((-p).to_compact_string(), "-z1^2-z1t1-z2-t1-3");
    }

    #[test]
    fn exact_division() {
        let a = &(z(1) - t(2)) * &(z(2) + t(1));
        let q = (&a * &(z(1) + z(2))).div_exact(&(z(1) + z(2))).unwrap();
        assert_eq!(q, a);
        assert!(z(1).div_exact(&z(2)).is_err());
        assert!(ZPoly::constant(3).div_exact(&ZPoly::constant(2)).is_err());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let p = &(z(1) - t(1)).pow(2) * &z(2);
        let img = p.substitute(|v| (v == Var::Z(1)).then(|| t(3) + ZPoly::one()));
        let expect = &(t(3) + ZPoly::one() - t(1)).pow(2) * &z(2);
        assert_eq!(img, expect);
    }

    #[test]
    fn factorial_schur_one_box() {
        // s_1(x1,x2|a) = x1 + x2 - a1 - a2
        let xs = [ZPoly::x(1), ZPoly::x(2)];
        let a = [t(1), t(2), t(3)];
        let s = factorial_schur(&[1], &xs, &a).unwrap();
        assert_eq!(s, ZPoly::x(1) + ZPoly::x(2) - t(1) - t(2));
    }

    #[test]
    fn symmetric_functions() {
        let v = [z(1), z(2), z(3)];
        assert_eq!(elementary_symmetric(3, &v), &(&z(1) * &z(2)) * &z(3));
        assert_eq!(complete_homogeneous(1, &v), z(1) + z(2) + z(3));
        assert_eq!(complete_homogeneous(2, &v[..1]), z(1).pow(2));
    }

    #[test]
    fn json_round_trip() {
        let p = &(z(1) - t(1)).pow(3) + &ZPoly::constant(-7);
        let s = serde_json::to_string(&p).unwrap();
        let back: ZPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = ZPoly> {
        proptest::collection::vec((0u16..3, 1u16..3, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
            let mut p = ZPoly::zero();
            for (fam, i, e, c) in ts {
                let v = if fam == 0 {
                    Var::Z(i)
                } else if fam == 1 {
                    Var::T(i)
                } else {
                    Var::X(i)
                };
                p.add_term(Monomial::var(v, e), c.into());
            }
            p
        })
    }

    proptest! {
        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let q = (&a * &b).div_exact(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }
    }
}
