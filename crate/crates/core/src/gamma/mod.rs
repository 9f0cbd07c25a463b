//! The ring `Γ ⊗ Z[z, t]` with Schur Q or P functions as basis.

pub mod factorial;
pub mod pfaffian;
pub mod straighten;

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::StrictPartition;
use crate::poly::{Var, ZPoly};
use crate::weyl::CartanType;
use pfaffian::{pfaffian, PfRing};

/// Which Schur basis a [`GammaElement`] is written in. `Q_λ = 2^{ℓ(λ)} P_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    Q,
    P,
}

impl Flavor {
    pub fn letter(self) -> char {
        match self {
            Flavor::Q => 'Q',
            Flavor::P => 'P',
        }
    }
}

impl CartanType {
    /// Type C uses Schur Q functions, types B and D use Schur P functions.
    pub fn flavor(self) -> Flavor {
        match self {
            CartanType::C => Flavor::Q,
            CartanType::B | CartanType::D => Flavor::P,
        }
    }
}

fn two_pow(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Finite sum `Σ c_λ F_λ` with `F = Q` or `P` and polynomial coefficients in z, t.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaElement {
    flavor: Flavor,
    #[serde(with = "term_list")]
    terms: BTreeMap<StrictPartition, ZPoly>,
}

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Term {
        partition: StrictPartition,
        coefficient: ZPoly,
    }

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<StrictPartition, ZPoly>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter().rev().map(|(p, c)| Term {
            partition: p.clone(),
            coefficient: c.clone(),
        }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<StrictPartition, ZPoly>, D::Error> {
        let raw = Vec::<Term>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for t in raw {
            if !t.coefficient.is_zero() {
                out.insert(t.partition, t.coefficient);
            }
        }
        Ok(out)
    }
}

impl GammaElement {
    pub fn zero(flavor: Flavor) -> Self {
        GammaElement {
            flavor,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(flavor: Flavor) -> Self {
        Self::scalar(flavor, ZPoly::one())
    }

    pub fn scalar(flavor: Flavor, c: ZPoly) -> Self {
        Self::monomial(flavor, StrictPartition::empty(), c)
    }

    /// The basis element `Q_λ` or `P_λ`.
    pub fn basis(flavor: Flavor, lambda: StrictPartition) -> Self {
        Self::monomial(flavor, lambda, ZPoly::one())
    }

    pub fn monomial(flavor: Flavor, lambda: StrictPartition, c: ZPoly) -> Self {
        let mut g = Self::zero(flavor);
        g.add_term(lambda, &c);
        g
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: larger `|λ|` first, then decreasing lexicographic.
    pub fn terms(&self) -> Vec<(&StrictPartition, &ZPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn coefficient(&self, lambda: &StrictPartition) -> ZPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Coefficient of the empty partition.
    pub fn scalar_part(&self) -> ZPoly {
        self.coefficient(&StrictPartition::empty())
    }

    pub fn add_term(&mut self, lambda: StrictPartition, c: &ZPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn scale(&self, c: &ZPoly) -> Self {
        let mut out = Self::zero(self.flavor);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), &(a * c));
        }
        out
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ZPoly) -> ZPoly) -> Self {
        let mut out = Self::zero(self.flavor);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), &f(a));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&ZPoly) -> Result<ZPoly>) -> Result<Self> {
        let mut out = Self::zero(self.flavor);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), &f(a)?);
        }
        Ok(out)
    }

    pub fn substitute(&self, f: impl Fn(Var) -> Option<ZPoly>) -> Self {
        self.map_coeffs(|a| a.substitute(&f))
    }

    /// Rewrites the element in the other basis; P to Q can fail on integrality.
    pub fn to_flavor(&self, target: Flavor) -> Result<Self> {
        if target == self.flavor {
            return Ok(self.clone());
        }
        let mut out = Self::zero(target);
        for (p, a) in &self.terms {
            let c = match target {
                Flavor::P => a.scale(&two_pow(p.len())),
                Flavor::Q => a.div_scalar_exact(&two_pow(p.len())).map_err(|_| {
                    Error::Integrality(format!(
                        "P{p} coefficient {a} is not divisible by 2^{}",
                        p.len()
                    ))
                })?,
            };
            out.add_term(p.clone(), &c);
        }
        Ok(out)
    }

    /// Total degree with `deg Q_λ = |λ|`, if the element is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (p, a) in &self.terms {
            let d = a.degree()? + p.size();
            if !a.is_homogeneous_of(d - p.size()) || deg.is_some_and(|e| e != d) {
                return None;
            }
            deg = Some(d);
        }
        deg.or(Some(0))
    }

    /// Largest index of a variable of the given family in any coefficient.
    pub fn max_index(&self, family: impl Fn(Var) -> bool + Copy) -> u16 {
        self.terms
            .values()
            .map(|a| a.max_index(family))
            .max()
            .unwrap_or(0)
    }

    fn check_flavor(&self, other: &Self) {
        assert_eq!(
            self.flavor, other.flavor,
            "mixing Q and P flavored elements"
        );
    }

    /// Γ-product; structure constants come from the Pieri rule.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_flavor(other);
        let mut out = Self::zero(self.flavor);
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                let c = a * b;
                for (nu, k) in structure_constants(self.flavor, l, m).iter() {
                    out.add_term(nu.clone(), &c.scale(k));
                }
            }
        }
        out
    }

    /// Value in the alphabet `xs` (stability lets trailing zeros be dropped).
    pub fn evaluate(&self, xs: &[ZPoly]) -> ZPoly {
        let max_part = self.terms.keys().map(|p| p.part(1)).max().unwrap_or(0);
        let gens = one_row_values(xs, 2 * max_part as usize);
        let mut out = ZPoly::zero();
        for (p, a) in &self.terms {
            out += &(a * &basis_value(self.flavor, p, &gens));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for (k, (p, a)) in self.terms().into_iter().enumerate() {
            let basis = if p.is_empty() {
                String::new()
            } else {
                format!("{}_{{{}}}", self.flavor.letter(), p.to_latex())
            };
            let body = if p.is_empty() {
                a.to_latex()
            } else if a.is_one() {
                basis
            } else if a.len() == 1 && a.as_constant().is_some_and(|c| c == -BigInt::one()) {
                format!("-{basis}")
            } else if a.len() == 1 {
                format!("{}{}", a.to_latex(), basis)
            } else {
                format!("{basis}({})", a.to_latex())
            };
            if k > 0 && !body.starts_with('-') {
                out.push('+');
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Formats `Σ c_k · label_k` in the shared canonical style.
pub(crate) fn render_sum<'a>(items: impl IntoIterator<Item = (String, &'a ZPoly)>) -> String {
    let mut out = String::new();
    for (label, c) in items {
        let (neg, body) = render_term(&label, c);
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// Returns (negative?, text without leading sign).
fn render_term(label: &str, c: &ZPoly) -> (bool, String) {
    if c.len() == 1 {
        let (m, k) = c.leading_term().expect("nonzero");
        let neg = k < &BigInt::zero();
        let abs = if neg { -k } else { k.clone() };
        let body = if m.is_one() {
            if abs.is_one() {
                label.to_string()
            } else {
                format!("{abs}*{label}")
            }
        } else {
            let coef = ZPoly::term(m.clone(), abs).to_compact_string();
            format!("{coef}*{label}")
        };
        return (neg, body);
    }
    let neg = c.leading_term().is_some_and(|(_, k)| k < &BigInt::zero());
    let shown = if neg { -c } else { c.clone() };
    (neg, format!("{label}*({})", shown.to_compact_string()))
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.flavor.letter();
        let mut items = Vec::new();
        let mut scalar = None;
        for (p, a) in self.terms() {
            if p.is_empty() {
                scalar = Some(a);
            } else {
                items.push((format!("{letter}{p}"), a));
            }
        }
        let mut s = render_sum(items);
        if let Some(a) = scalar {
            let tail = a.to_string();
            if s == "0" {
                s = tail;
            } else if let Some(rest) = tail.strip_prefix('-') {
                let _ = write!(s, " - {rest}");
            } else {
                let _ = write!(s, " + {tail}");
            }
        }
        f.write_str(&s)
    }
}

impl Add for &GammaElement {
    type Output = GammaElement;
    fn add(self, rhs: &GammaElement) -> GammaElement {
        self.check_flavor(rhs);
        let mut out = self.clone();
        for (p, a) in &rhs.terms {
            out.add_term(p.clone(), a);
        }
        out
    }
}

impl Sub for &GammaElement {
    type Output = GammaElement;
    fn sub(self, rhs: &GammaElement) -> GammaElement {
        self + &(-rhs)
    }
}

impl Neg for &GammaElement {
    type Output = GammaElement;
    fn neg(self) -> GammaElement {
        self.map_coeffs(|a| -a)
    }
}

impl Mul for &GammaElement {
    type Output = GammaElement;
    fn mul(self, rhs: &GammaElement) -> GammaElement {
        GammaElement::mul(self, rhs)
    }
}

impl PfRing for GammaElement {
    fn zero_like(&self) -> Self {
        GammaElement::zero(self.flavor)
    }
    fn one_like(&self) -> Self {
        GammaElement::one(self.flavor)
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

/// Coefficients of `F_λ F_μ` in the basis of the given flavor.
pub fn structure_constants(
    flavor: Flavor,
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Arc<straighten::Expansion> {
    let q = straighten::q_product(lambda, mu);
    match flavor {
        Flavor::Q => q,
        Flavor::P => {
            // P_λ P_μ = 2^{-ℓ(λ)-ℓ(μ)} Σ f Q_ν = Σ f 2^{ℓ(ν)-ℓ(λ)-ℓ(μ)} P_ν
            let shift = lambda.len() + mu.len();
            Arc::new(
                q.iter()
                    .map(|(nu, f)| {
                        let num = f * two_pow(nu.len());
                        let den = two_pow(shift);
                        assert!((&num % &den).is_zero(), "P structure constant not integral");
                        (nu.clone(), num / den)
                    })
                    .collect(),
            )
        }
    }
}

/// `Q_0, Q_1, ..., Q_m` in the alphabet `xs`, from `Π (1 + x u)/(1 - x u)`.
pub fn one_row_values(xs: &[ZPoly], m: usize) -> Vec<ZPoly> {
    let mut series = vec![ZPoly::zero(); m + 1];
    series[0] = ZPoly::one();
    for x in xs {
        if x.is_zero() {
            continue;
        }
        let powers: Vec<ZPoly> = {
            let mut v = vec![ZPoly::one()];
            for k in 1..=m {
                let next = &v[k - 1] * x;
                v.push(next);
            }
            v
        };
        let mut next = series.clone();
        for (k, slot) in next.iter_mut().enumerate() {
            for j in 1..=k {
                let add = (&series[k - j] * &powers[j]).scale(&BigInt::from(2));
                *slot += &add;
            }
        }
        series = next;
    }
    series
}

/// `F_λ` evaluated from precomputed one-row values (`Q_k` for `k <= 2 λ_1`).
pub fn basis_value(flavor: Flavor, lambda: &StrictPartition, q: &[ZPoly]) -> ZPoly {
    let get = |k: i64| -> ZPoly {
        if k < 0 {
            ZPoly::zero()
        } else {
            q.get(k as usize).cloned().unwrap_or_default()
        }
    };
    let two_row = |i: u32, j: u32| -> ZPoly {
        let mut acc = &get(i as i64) * &get(j as i64);
        for k in 1..=j as i64 {
            let term = (&get(i as i64 + k) * &get(j as i64 - k)).scale(&BigInt::from(2));
            if k % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        acc
    };
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let mut m = vec![vec![ZPoly::zero(); r]; r];
    for i in 0..r {
        for j in i + 1..r {
            m[i][j] = two_row(parts[i], parts[j]);
        }
    }
    let v = pfaffian(&m, &ZPoly::one());
    match flavor {
        Flavor::Q => v,
        Flavor::P => v
            .div_scalar_exact(&two_pow(lambda.len()))
            .expect("Q_λ is divisible by 2^ℓ(λ)"),
    }
}

/// Recovers `Σ c_λ F_λ` from a polynomial symmetric in `x_1..x_n` by peeling
/// leading monomials. Fails if the input is not in the span.
pub fn expand_in_basis(poly: &ZPoly, n: u16, flavor: Flavor) -> Result<GammaElement> {
    let is_x = |v: Var| matches!(v, Var::X(_));
    if poly.vars().iter().any(|v| matches!(v, Var::X(i) if *i > n)) {
        return Err(Error::NotInSpan(format!("variables beyond x{n}")));
    }
    let xs: Vec<ZPoly> = (1..=n).map(ZPoly::x).collect();
    let mut cache: HashMap<StrictPartition, ZPoly> = HashMap::new();
    let mut q_values: Vec<ZPoly> = Vec::new();
    let mut rem = poly.clone();
    let mut out = GammaElement::zero(flavor);
    loop {
        let groups = rem.collect_by(is_x);
        let Some((lead, coeff)) = groups.into_iter().next_back() else {
            return Ok(out);
        };
        let exps: Vec<u32> = (1..=n).map(|i| lead.exponent(Var::X(i))).collect();
        let k = exps.iter().take_while(|&&e| e > 0).count();
        let strict = exps[..k].windows(2).all(|w| w[0] > w[1]) && exps[k..].iter().all(|&e| e == 0);
        if !strict {
            return Err(Error::NotInSpan(lead.to_string()));
        }
        let mu = StrictPartition::new(exps[..k].to_vec())?;
        let c = match flavor {
            Flavor::Q => coeff
                .div_scalar_exact(&two_pow(mu.len()))
                .map_err(|_| Error::NotInSpan(lead.to_string()))?,
            Flavor::P => coeff,
        };
        let need = 2 * mu.part(1) as usize;
        if q_values.len() <= need {
            q_values = one_row_values(&xs, need.max(2 * q_values.len()));
        }
        let value = cache
            .entry(mu.clone())
            .or_insert_with(|| basis_value(flavor, &mu, &q_values));
        rem -= &(&c * value);
        out.add_term(mu, &c);
    }
}

static SHIFTED: LazyLock<RwLock<HashMap<(Flavor, StrictPartition), Arc<GammaElement>>>> =
    LazyLock::new(Default::default);

/// `F_λ(y1, x)`: the basis element with one extra variable `y1` prepended to
/// the alphabet, expanded in `F_μ(x)` with coefficients in `y1`.
pub fn prepend_variable(flavor: Flavor, lambda: &StrictPartition) -> Arc<GammaElement> {
    let key = (flavor, lambda.clone());
    if let Some(v) = SHIFTED.read().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let y = ZPoly::y(1);
    let image = |k: u32| -> GammaElement {
        // Q_k(y, x) = Q_k + 2 Σ_{j>=1} y^j Q_{k-j}
        let mut g = GammaElement::basis(Flavor::Q, one_row(k));
        for j in 1..=k {
            g.add_term(one_row(k - j), &y.pow(j).scale(&BigInt::from(2)));
        }
        g
    };
    let two_row = |i: u32, j: u32| -> GammaElement {
        let mut acc = &image(i) * &image(j);
        for k in 1..=j {
            let sign = if k % 2 == 1 { -2 } else { 2 };
            let term = (&image(i + k) * &image(j - k)).scale_int(&BigInt::from(sign));
            acc = &acc + &term;
        }
        acc
    };
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let mut m = vec![vec![GammaElement::zero(Flavor::Q); r]; r];
    for i in 0..r {
        for j in i + 1..r {
            m[i][j] = two_row(parts[i], parts[j]);
        }
    }
    let q_image = pfaffian(&m, &GammaElement::one(Flavor::Q));
    let result = match flavor {
        Flavor::Q => q_image,
        Flavor::P => q_image
            .to_flavor(Flavor::P)
            .and_then(|g| g.try_map_coeffs(|a| a.div_scalar_exact(&two_pow(lambda.len()))))
            .expect("P_λ(y, x) has integral P expansion"),
    };
    let v = Arc::new(result);
    SHIFTED
        .write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(v)
        .clone()
}

fn one_row(k: u32) -> StrictPartition {
    StrictPartition::new(vec![k]).expect("one-row partition")
}
