//! Signed permutations and the hyperoctahedral groups of types B/C and D.
//!
//! A signed permutation is stored by its one-line images `w(1), ..., w(n)`
//! with trailing fixed points trimmed, so equal group elements compare equal
//! regardless of the rank they were written in.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::StrictPartition;
use crate::poly::{Var, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Signed permutations (types B and C).
    BC,
    /// Signed permutations with an even number of sign changes.
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    B,
    C,
    D,
}

impl CartanType {
    pub fn family(self) -> Family {
        match self {
            CartanType::B | CartanType::C => Family::BC,
            CartanType::D => Family::D,
        }
    }

    /// Multiplicity of the sign-change term in the transition recursion.
    pub fn chi(self) -> i64 {
        match self {
            CartanType::B => 2,
            CartanType::C => 1,
            CartanType::D => 0,
        }
    }

    /// Simple generators that can act nontrivially within rank `n`.
    pub fn generators(self, n: u32) -> Vec<Generator> {
        let first = match self {
            CartanType::D => Generator::SHat,
            _ => Generator::S0,
        };
        std::iter::once(first)
            .chain((1..n).map(Generator::S))
            .collect()
    }

    pub fn accepts(self, g: Generator) -> bool {
        match g {
            Generator::S0 => self != CartanType::D,
            Generator::SHat => self == CartanType::D,
            Generator::S(i) => i >= 1,
        }
    }

    pub fn check(self, g: Generator) -> Result<()> {
        if self.accepts(g) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                gen: g.to_string(),
                ty: self.to_string(),
            })
        }
    }

    /// The simple root of `g` as a linear form in the t-variables.
    pub fn simple_root(self, g: Generator) -> ZPoly {
        match g {
            Generator::S0 if self == CartanType::C => ZPoly::t(1).scale(&2.into()),
            Generator::S0 => ZPoly::t(1),
            Generator::SHat => ZPoly::t(1) + ZPoly::t(2),
            Generator::S(i) => ZPoly::t(i as u16 + 1) - ZPoly::t(i as u16),
        }
    }

    pub fn positive_roots(self, n: u32) -> Vec<Root> {
        let mut out = Vec::new();
        if self != CartanType::D {
            out.extend((1..=n).map(Root::Sign));
        }
        for j in 1..=n {
            for i in 1..j {
                out.push(Root::Diff(i, j));
                out.push(Root::Sum(i, j));
            }
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        })
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown type {s}"),
            }),
        }
    }
}

/// Simple reflections. `SHat` is the extra type D generator `s0 s1 s0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    S0,
    SHat,
    S(u32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S0 => f.write_str("s0"),
            Generator::SHat => f.write_str("shat"),
            Generator::S(i) => write!(f, "s{i}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "shat" {
            return Ok(Generator::SHat);
        }
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("bad generator {s}"),
        };
        let idx: u32 = s
            .strip_prefix('s')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        Ok(if idx == 0 {
            Generator::S0
        } else {
            Generator::S(idx)
        })
    }
}

/// Positive roots: `t_i` (or `2t_i`), `t_j - t_i` and `t_j + t_i` for `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Sign(u32),
    Diff(u32, u32),
    Sum(u32, u32),
}

impl Root {
    pub fn form(self, ty: CartanType) -> ZPoly {
        match self {
            Root::Sign(i) if ty == CartanType::C => ZPoly::t(i as u16).scale(&2.into()),
            Root::Sign(i) => ZPoly::t(i as u16),
            Root::Diff(i, j) => ZPoly::t(j as u16) - ZPoly::t(i as u16),
            Root::Sum(i, j) => ZPoly::t(j as u16) + ZPoly::t(i as u16),
        }
    }

    pub fn reflection(self, family: Family) -> Result<SignedPermutation> {
        match self {
            Root::Sign(i) => SignedPermutation::sign_reflection(i, family),
            Root::Diff(i, j) => Ok(SignedPermutation::transposition(i, j, family)),
            Root::Sum(i, j) => Ok(SignedPermutation::signed_transposition(i, j, family)),
        }
    }

    /// Coefficients of the coroot in the `t` basis, scaled by 2 to stay integral.
    pub fn coroot_doubled(self, ty: CartanType) -> Vec<(u32, i64)> {
        match self {
            Root::Sign(i) if ty == CartanType::C => vec![(i, 2)],
            Root::Sign(i) => vec![(i, 4)],
            Root::Diff(i, j) => vec![(j, 2), (i, -2)],
            Root::Sum(i, j) => vec![(j, 2), (i, 2)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermRepr", into = "PermRepr")]
pub struct SignedPermutation {
    family: Family,
    images: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    family: Family,
    images: Vec<i32>,
}

impl TryFrom<PermRepr> for SignedPermutation {
    type Error = Error;
    fn try_from(r: PermRepr) -> Result<Self> {
        Self::new(r.images, r.family)
    }
}

impl From<SignedPermutation> for PermRepr {
    fn from(w: SignedPermutation) -> Self {
        PermRepr {
            family: w.family,
            images: w.images,
        }
    }
}

impl SignedPermutation {
    pub fn new(mut images: Vec<i32>, family: Family) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[a] = true;
        }
        while images.last().is_some_and(|&v| v == images.len() as i32) {
            images.pop();
        }
        let w = SignedPermutation { family, images };
        if family == Family::D && w.sign_changes() % 2 == 1 {
            return Err(Error::ParityViolation(w.to_string()));
        }
        Ok(w)
    }

    fn raw(images: Vec<i32>, family: Family) -> Self {
        let mut images = images;
        while images.last().is_some_and(|&v| v == images.len() as i32) {
            images.pop();
        }
        SignedPermutation { family, images }
    }

    pub fn identity(family: Family) -> Self {
        SignedPermutation {
            family,
            images: Vec::new(),
        }
    }

    /// Accepts `-2 -1 3`, `-2,-1,3` or, for single digits, `213`.
    pub fn parse(s: &str, family: Family) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let bad = || Error::InvalidPermutation(s.to_string());
        let images: Vec<i32> = if tokens.len() == 1 && tokens[0].chars().all(|c| c.is_ascii_digit())
        {
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).unwrap() as i32)
                .collect()
        } else {
            tokens
                .iter()
                .map(|t| t.parse::<i32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(bad());
        }
        Self::new(images, family)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(&self, family: Family) -> Result<Self> {
        Self::new(self.images.clone(), family)
    }

    /// One-line images; trailing fixed points are trimmed.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Smallest `n` with the element in the rank-`n` group.
    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    /// `w(i)` for signed `i`.
    pub fn get(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        let v = if a <= self.images.len() {
            self.images[a - 1]
        } else {
            a as i32
        };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn images_padded(&self, n: usize) -> Vec<i32> {
        (1..=n.max(self.images.len()))
            .map(|i| self.get(i as i32))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn sign_changes(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            inv[a - 1] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self::raw(inv, self.family)
    }

    /// `self ∘ other`. A D element composed with a BC element gives BC.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.images.len().max(other.images.len());
        let images = (1..=n as i32).map(|i| self.get(other.get(i))).collect();
        let family = if self.family == Family::D && other.family == Family::D {
            Family::D
        } else {
            Family::BC
        };
        Self::raw(images, family)
    }

    pub fn generator(g: Generator, family: Family) -> Self {
        let images = match g {
            Generator::S0 => vec![-1],
            Generator::SHat => vec![-2, -1],
            Generator::S(i) => {
                let i = i as i32;
                let mut v: Vec<i32> = (1..=i + 1).collect();
                v.swap(i as usize - 1, i as usize);
                v
            }
        };
        // s0 is not in type D, so it drags the element into BC
        let family = if g == Generator::S0 {
            Family::BC
        } else {
            family
        };
        Self::raw(images, family)
    }

    pub fn mul_gen_right(&self, g: Generator) -> Self {
        self.compose(&Self::generator(g, self.family))
    }

    pub fn mul_gen_left(&self, g: Generator) -> Self {
        Self::generator(g, self.family).compose(self)
    }

    /// Transposition `t_ij` of positions.
    pub fn transposition(i: u32, j: u32, family: Family) -> Self {
        let n = i.max(j) as usize;
        let mut v: Vec<i32> = (1..=n as i32).collect();
        v.swap(i as usize - 1, j as usize - 1);
        Self::raw(v, family)
    }

    /// `s_ij`: sends `i -> -j` and `j -> -i`.
    pub fn signed_transposition(i: u32, j: u32, family: Family) -> Self {
        let n = i.max(j) as usize;
        let mut v: Vec<i32> = (1..=n as i32).collect();
        v[i as usize - 1] = -(j as i32);
        v[j as usize - 1] = -(i as i32);
        Self::raw(v, family)
    }

    /// `s_ii`: flips the sign of `i`. Not an element of type D.
    pub fn sign_reflection(i: u32, family: Family) -> Result<Self> {
        if family == Family::D {
            return Err(Error::NoSignReflection(i));
        }
        let mut v: Vec<i32> = (1..=i as i32).collect();
        v[i as usize - 1] = -(i as i32);
        Ok(Self::raw(v, family))
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn length(&self) -> usize {
        let neg: usize = self
            .images
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| match self.family {
                Family::BC => v.unsigned_abs() as usize,
                Family::D => v.unsigned_abs() as usize - 1,
            })
            .sum();
        self.inversions() + neg
    }

    pub fn is_right_descent(&self, g: Generator) -> bool {
        match g {
            Generator::S0 => self.get(1) < 0,
            Generator::SHat => self.get(1) + self.get(2) < 0,
            Generator::S(i) => self.get(i as i32) > self.get(i as i32 + 1),
        }
    }

    fn own_generators(&self) -> Vec<Generator> {
        let ty = match self.family {
            Family::BC => CartanType::C,
            Family::D => CartanType::D,
        };
        ty.generators(self.rank().max(2))
    }

    /// Word `g1 ... gk` with `w = s_{g1} ... s_{gk}`, built by stripping the
    /// smallest right descent first.
    pub fn reduced_word(&self) -> Vec<Generator> {
        let gens = self.own_generators();
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let g = *gens
                .iter()
                .find(|&&g| w.is_right_descent(g))
                .expect("non-identity element has a right descent");
            word.push(g);
            w = w.mul_gen_right(g);
        }
        word.reverse();
        word
    }

    pub fn from_word(word: &[Generator], family: Family) -> Self {
        word.iter()
            .fold(Self::identity(family), |w, &g| w.mul_gen_right(g))
    }

    /// Largest `r` with `w(r) > w(r+1)`.
    pub fn last_descent(&self) -> Option<u32> {
        (1..self.images.len() as i32)
            .rev()
            .find(|&r| self.get(r) > self.get(r + 1))
            .map(|r| r as u32)
    }

    /// Increasing one-line notation, i.e. minimal in its coset modulo the symmetric group.
    pub fn is_grassmannian(&self) -> bool {
        self.last_descent().is_none()
    }

    pub fn to_strict_partition(&self) -> Result<StrictPartition> {
        if !self.is_grassmannian() {
            return Err(Error::NotGrassmannian(self.to_string()));
        }
        let shift = u32::from(self.family == Family::D);
        let parts = self
            .images
            .iter()
            .take_while(|&&v| v < 0)
            .map(|&v| v.unsigned_abs() - shift)
            .collect();
        StrictPartition::new(parts)
    }

    /// Grassmannian element of a strict partition. In type D the partition is
    /// padded with a zero part when needed to make the number of sign changes even.
    pub fn from_strict_partition(lambda: &StrictPartition, family: Family) -> Self {
        let mut neg: Vec<u32> = match family {
            Family::BC => lambda.parts().to_vec(),
            Family::D => lambda.parts().iter().map(|&p| p + 1).collect(),
        };
        if family == Family::D && neg.len() % 2 == 1 {
            neg.push(1);
        }
        let n = neg.first().copied().unwrap_or(0) as usize;
        let mut images: Vec<i32> = neg.iter().map(|&p| -(p as i32)).collect();
        images.extend((1..=n as i32).filter(|v| !neg.contains(&(*v as u32))));
        Self::raw(images, family)
    }

    /// Subword criterion, peeling the reduced word of `w` from the right.
    pub fn bruhat_leq(&self, w: &Self) -> bool {
        let family = if self.family == w.family {
            self.family
        } else {
            Family::BC
        };
        let mut v = Self::raw(self.images.clone(), family);
        let mut w = Self::raw(w.images.clone(), family);
        loop {
            if v == w {
                return true;
            }
            if v.length() >= w.length() {
                return false;
            }
            let g = *w.reduced_word().last().expect("w is not the identity");
            if v.is_right_descent(g) {
                v = v.mul_gen_right(g);
            }
            w = w.mul_gen_right(g);
        }
    }

    /// `w(t_i) = t_{w(i)}` with `t_{-k} = -t_k`, extended multiplicatively.
    pub fn act_on_t(&self, form: &ZPoly) -> ZPoly {
        form.substitute(|v| match v {
            Var::T(i) => Some(self.t_image(i as i32)),
            _ => None,
        })
    }

    /// `t_{w(i)}` as a signed linear form.
    pub fn t_image(&self, i: i32) -> ZPoly {
        let v = self.get(i);
        let t = ZPoly::t(v.unsigned_abs() as u16);
        if v < 0 {
            -t
        } else {
            t
        }
    }

    /// Every element of the rank-`n` group of the family.
    pub fn elements(family: Family, n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for (perm, _) in crate::util::permutations(n as usize) {
            for mask in 0u32..(1 << n) {
                if family == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let images = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| {
                        let v = p as i32 + 1;
                        if mask >> i & 1 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect();
                out.push(Self::raw(images, family));
            }
        }
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        out
    }

    /// Longest element of the rank-`n` group.
    pub fn longest(family: Family, n: u32) -> Self {
        let mut images: Vec<i32> = (1..=n as i32).map(|i| -i).collect();
        if family == Family::D && n % 2 == 1 {
            images[0] = 1;
        }
        Self::raw(images, family)
    }

    pub fn to_latex(&self) -> String {
        let imgs = self.images_padded(1);
        let sep = if imgs.iter().any(|v| v.abs() >= 10) {
            "\\,"
        } else {
            ""
        };
        imgs.iter()
            .map(|&v| {
                if v < 0 {
                    format!("\\bar{{{}}}", -v)
                } else {
                    v.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs = self.images_padded(1);
        let parts: Vec<String> = imgs.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Breadth-first search in the Cayley graph; lengths by graph distance. Test oracle.
pub fn cayley_lengths(
    family: Family,
    n: u32,
) -> std::collections::HashMap<SignedPermutation, usize> {
    let ty = if family == Family::D {
        CartanType::D
    } else {
        CartanType::C
    };
    let gens = ty.generators(n);
    let mut dist = std::collections::HashMap::new();
    let e = SignedPermutation::identity(family);
    dist.insert(e.clone(), 0);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for &g in &gens {
            let u = w.mul_gen_right(g);
            if !dist.contains_key(&u) {
                dist.insert(u.clone(), d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Bruhat order by brute force over all subwords of one reduced word. Test oracle.
pub fn subword_products(w: &SignedPermutation) -> HashSet<SignedPermutation> {
    let word = w.reduced_word();
    let mut reach = HashSet::from([SignedPermutation::identity(w.family())]);
    for &g in &word {
        let next: Vec<_> = reach.iter().map(|u| u.mul_gen_right(g)).collect();
        reach.extend(next);
    }
    reach
}
