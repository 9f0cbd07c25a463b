//! Double Schubert polynomials of types B, C, D and the operations built on them.
//!
//! `𝔖_w` is computed by the transition recursion on the last descent of `w`,
//! bottoming out at Grassmannian elements whose polynomials are factorial
//! Schur Q/P functions. Results are memoized per engine.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::Digest;

use crate::divdiff::{delta_perm, partial};
use crate::error::{Error, Result};
use crate::gamma::factorial::{factorial_p, factorial_q, ParamSequence};
use crate::gamma::{Flavor, GammaElement};
use crate::partition::StrictPartition;
use crate::poly::{Var, ZPoly};
use crate::weyl::{CartanType, Family, Generator, Root, SignedPermutation};

/// Bumped whenever a change could alter stored results.
pub const ENGINE_VERSION: &str = concat!("eqschubert-", env!("CARGO_PKG_VERSION"), "/1");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Transition,
    LongestElement,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub perm: SignedPermutation,
    pub provenance: Provenance,
    pub poly: Arc<GammaElement>,
}

/// Memo table of computed polynomials for one Cartan type.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchubertTable {
    pub cartan_type: CartanType,
    pub version: String,
    entries: Vec<TableEntry>,
}

impl SchubertTable {
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries for elements of rank at most `n`.
    pub fn restricted(&self, n: u32) -> SchubertTable {
        SchubertTable {
            cartan_type: self.cartan_type,
            version: self.version.clone(),
            entries: self
                .entries
                .iter()
                .filter(|e| e.perm.rank() <= n)
                .cloned()
                .collect(),
        }
    }

    /// SHA-256 of the canonical JSON form, for comparing tables.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(self).expect("tables serialize");
        hex::encode(sha2::Sha256::digest(&json))
    }
}

pub struct SchubertEngine {
    ty: CartanType,
    memo: RwLock<HashMap<SignedPermutation, (Provenance, Arc<GammaElement>)>>,
}

impl SchubertEngine {
    pub fn new(ty: CartanType) -> Self {
        SchubertEngine {
            ty,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// Seeds the memo from a stored table; refuses other types or versions.
    pub fn load(&self, table: SchubertTable) -> Result<()> {
        if table.cartan_type != self.ty || table.version != ENGINE_VERSION {
            return Err(Error::Cache(format!(
                "table for {} / {} does not match {} / {}",
                table.cartan_type, table.version, self.ty, ENGINE_VERSION
            )));
        }
        let mut memo = self.memo.write().expect("memo poisoned");
        for e in table.entries {
            memo.insert(e.perm, (e.provenance, e.poly));
        }
        Ok(())
    }

    pub fn snapshot(&self) -> SchubertTable {
        let memo = self.memo.read().expect("memo poisoned");
        let mut entries: Vec<TableEntry> = memo
            .iter()
            .map(|(w, (p, g))| TableEntry {
                perm: w.clone(),
                provenance: *p,
                poly: g.clone(),
            })
            .collect();
        entries.sort_by(|a, b| a.perm.cmp(&b.perm));
        SchubertTable {
            cartan_type: self.ty,
            version: ENGINE_VERSION.to_string(),
            entries,
        }
    }

    fn check_member(&self, w: &SignedPermutation) -> Result<SignedPermutation> {
        w.with_family(self.ty.family())
    }

    /// `𝔖_w` for this engine's type.
    pub fn double_schubert(&self, w: &SignedPermutation) -> Result<Arc<GammaElement>> {
        let w = self.check_member(w)?;
        let cap = w.length() * (w.rank() as usize + 1).pow(2) + 8;
        self.lookup(&w, 0, cap)
    }

    fn lookup(&self, w: &SignedPermutation, depth: usize, cap: usize) -> Result<Arc<GammaElement>> {
        if let Some((_, g)) = self.memo.read().expect("memo poisoned").get(w) {
            return Ok(g.clone());
        }
        if depth > cap {
            return Err(Error::RecursionLimit(w.to_string()));
        }
        let value = Arc::new(match w.last_descent() {
            None => self.grassmannian(w)?,
            Some(r) => self.transition(w, r, depth, cap)?,
        });
        let mut memo = self.memo.write().expect("memo poisoned");
        let entry = memo
            .entry(w.clone())
            .or_insert((Provenance::Transition, value));
        Ok(entry.1.clone())
    }

    fn grassmannian(&self, w: &SignedPermutation) -> Result<GammaElement> {
        let lambda = w.to_strict_partition()?;
        match self.ty {
            CartanType::C => factorial_q(&lambda, &ParamSequence::t()),
            CartanType::B => factorial_p(&lambda, &ParamSequence::zero_then_t()),
            CartanType::D => factorial_p(&lambda, &ParamSequence::t()),
        }
    }

    fn transition(
        &self,
        w: &SignedPermutation,
        r: u32,
        depth: usize,
        cap: usize,
    ) -> Result<GammaElement> {
        let fam = self.ty.family();
        let len = w.length();
        let wr = w.get(r as i32);
        let s = (r + 1..=w.rank())
            .rev()
            .find(|&j| w.get(j as i32) < wr)
            .expect("r is a descent");
        let v = w.compose(&SignedPermutation::transposition(r, s, fam));
        debug_assert_eq!(v.length() + 1, len);

        let factor = ZPoly::z(r as u16) - v.t_image(r as i32);
        let mut out = self.lookup(&v, depth + 1, cap)?.scale(&factor);

        let mut add = |u: SignedPermutation, mult: i64| -> Result<()> {
            if u.length() != len {
                return Ok(());
            }
            if !precedes_ld(&u, w) {
                return Err(Error::RecursionLimit(format!("{u} does not precede {w}")));
            }
            let g = self.lookup(&u, depth + 1, cap)?;
            out = &out + &g.scale_int(&BigInt::from(mult));
            Ok(())
        };
        for i in 1..r {
            add(v.compose(&SignedPermutation::transposition(i, r, fam)), 1)?;
        }
        let bound = w.rank() + len as u32 + 1;
        for i in (1..=bound).filter(|&i| i != r) {
            let u = v.compose(&SignedPermutation::signed_transposition(i, r, fam));
            if i == bound && u.length() == len {
                return Err(Error::WindowExceeded(w.to_string()));
            }
            add(u, 1)?;
        }
        let chi = self.ty.chi();
        if chi > 0 {
            add(v.compose(&SignedPermutation::sign_reflection(r, fam)?), chi)?;
        }
        Ok(out)
    }

    /// `𝔖_w` obtained instead by lowering from the longest element of rank `n`.
    pub fn double_schubert_via_longest(
        &self,
        w: &SignedPermutation,
        n: u32,
    ) -> Result<GammaElement> {
        let w = self.check_member(w)?;
        let w0 = SignedPermutation::longest(self.ty.family(), n);
        let top = longest_element(self.ty, n)?;
        delta_perm(self.ty, &w.compose(&w0), &top)
    }

    /// Stores a polynomial produced by another route, keeping an existing entry.
    pub fn record(&self, w: &SignedPermutation, g: GammaElement, provenance: Provenance) {
        let mut memo = self.memo.write().expect("memo poisoned");
        memo.entry(w.clone()).or_insert((provenance, Arc::new(g)));
    }

    /// `Φ_v(𝔖_w)`.
    pub fn localize(&self, w: &SignedPermutation, v: &SignedPermutation) -> Result<ZPoly> {
        let v = self.check_member(v)?;
        Ok(localize_element(&*self.double_schubert(w)?, &v))
    }

    /// Coefficients `c_w ∈ Z[t]` with `f = Σ c_w 𝔖_w`.
    pub fn expand(&self, f: &GammaElement) -> Result<Vec<(SignedPermutation, ZPoly)>> {
        if f.flavor() != self.ty.flavor() {
            return Err(Error::FlavorMismatch(format!(
                "type {} needs {:?}",
                self.ty,
                self.ty.flavor()
            )));
        }
        let e = SignedPermutation::identity(self.ty.family());
        let mut seen: HashMap<SignedPermutation, ()> = HashMap::from([(e.clone(), ())]);
        let mut queue = VecDeque::from([(e, f.clone())]);
        let mut out = Vec::new();
        while let Some((w, g)) = queue.pop_front() {
            let c = at_identity(&g);
            if !c.is_zero() {
                out.push((w.clone(), c));
            }
            let reach = g.max_index(|v| matches!(v, Var::Z(_))) as u32;
            for gen in self.ty.generators(reach + 1) {
                let u = w.mul_gen_left(gen);
                if u.length() <= w.length() || seen.contains_key(&u) {
                    continue;
                }
                let h = partial(self.ty, gen, &g)?;
                if h.is_zero() {
                    continue;
                }
                seen.insert(u.clone(), ());
                queue.push_back((u, h));
            }
        }
        out.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.cmp(&b.0)));
        Ok(out)
    }

    /// `𝔖_u 𝔖_v = Σ c^w_{uv} 𝔖_w`.
    pub fn structure_constants(
        &self,
        u: &SignedPermutation,
        v: &SignedPermutation,
    ) -> Result<Vec<(SignedPermutation, ZPoly)>> {
        let prod = &*self.double_schubert(u)? * &*self.double_schubert(v)?;
        self.expand(&prod)
    }

    /// Single Schubert polynomial `𝔖_w(z; x)`: all `t` set to zero.
    pub fn billey_haiman(&self, w: &SignedPermutation) -> Result<GammaElement> {
        Ok(self
            .double_schubert(w)?
            .substitute(|v| matches!(v, Var::T(_)).then(ZPoly::zero)))
    }

    /// Type B/C/D Stanley symmetric function: `z` and `t` set to zero.
    pub fn stanley(&self, w: &SignedPermutation) -> Result<GammaElement> {
        Ok(self
            .double_schubert(w)?
            .substitute(|v| matches!(v, Var::Z(_) | Var::T(_)).then(ZPoly::zero)))
    }
}

fn last_descent_key(w: &SignedPermutation) -> Option<(u32, i32)> {
    w.last_descent().map(|r| (r, w.get(r as i32)))
}

/// `u` strictly precedes `w`: an earlier last descent, or the same one with a
/// smaller value there. Elements without descents are minimal.
fn precedes_ld(u: &SignedPermutation, w: &SignedPermutation) -> bool {
    match (last_descent_key(u), last_descent_key(w)) {
        (None, Some(_)) => true,
        (_, None) => false,
        (Some(ku), Some(kw)) => ku < kw,
    }
}

/// Text form `2*S[-2 1 3] + 2t1*S[-1 2 3]`, permutations padded to `width`.
pub fn render_expansion(items: &[(SignedPermutation, ZPoly)], width: usize) -> String {
    let width = items
        .iter()
        .map(|(w, _)| w.rank() as usize)
        .max()
        .unwrap_or(0)
        .max(width);
    let labels: Vec<(String, &ZPoly)> = items
        .iter()
        .map(|(w, c)| {
            let entries: Vec<String> = w.images_padded(width).iter().map(i32::to_string).collect();
            (format!("S[{}]", entries.join(" ")), c)
        })
        .collect();
    crate::gamma::render_sum(labels)
}

/// `Φ_e`: drop the alphabet and send `z_i ↦ t_i`.
fn at_identity(g: &GammaElement) -> ZPoly {
    g.scalar_part().substitute(|v| {
        if let Var::Z(i) = v {
            Some(ZPoly::t(i))
        } else {
            None
        }
    })
}

/// `Φ_v(f)`: `x ↦ t_v` (the `t_k` with `-k` among the values of `v`), `z_i ↦ t_{v(i)}`.
pub fn localize_element(f: &GammaElement, v: &SignedPermutation) -> ZPoly {
    let xs: Vec<ZPoly> = v
        .images()
        .iter()
        .filter(|&&k| k < 0)
        .map(|&k| ZPoly::t(k.unsigned_abs() as u16))
        .collect();
    let g = f.substitute(|var| match var {
        Var::Z(i) => Some(v.t_image(i as i32)),
        _ => None,
    });
    g.evaluate(&xs)
}

/// Top polynomial of rank `n`, from a single factorial Q or P function.
pub fn longest_element(ty: CartanType, n: u32) -> Result<GammaElement> {
    let m = n.saturating_sub(1);
    let params = ParamSequence::interleaved(m as u16);
    let stair = StrictPartition::staircase(m);
    match ty {
        CartanType::C => factorial_q(&StrictPartition::staircase(n).plus(&stair), &params),
        CartanType::D => factorial_p(&stair.plus(&stair), &params),
        CartanType::B => {
            let c = longest_element(CartanType::C, n)?.to_flavor(Flavor::P)?;
            c.try_map_coeffs(|a| a.div_scalar_exact(&(BigInt::one() << n)))
        }
    }
}

/// `Π β` over positive roots `β` with `w^{-1} β < 0`.
pub fn inversion_root_product(ty: CartanType, w: &SignedPermutation) -> ZPoly {
    let winv = w.inverse();
    ty.positive_roots(w.rank())
        .into_iter()
        .map(|b| b.form(ty))
        .filter(|f| !is_positive_form(&winv.act_on_t(f)))
        .fold(ZPoly::one(), |acc, f| &acc * &f)
}

/// Sign of a root written in the t basis: that of its highest-index term.
fn is_positive_form(f: &ZPoly) -> bool {
    f.terms()
        .max_by_key(|(m, _)| m.factors().first().map(|&(v, _)| v.index()))
        .is_some_and(|(_, c)| c > &BigInt::zero())
}

/// Fundamental weight of `g`, doubled, as coefficients of `t_1 .. t_n`.
fn fundamental_weight_doubled(ty: CartanType, g: Generator, n: u32) -> Vec<i64> {
    (1..=n)
        .map(|k| match (ty, g) {
            (CartanType::C, Generator::S0) => 2,
            (CartanType::B, Generator::S0) | (CartanType::D, Generator::SHat) => 1,
            (CartanType::D, Generator::S(1)) => {
                if k == 1 {
                    -1
                } else {
                    1
                }
            }
            (_, Generator::S(i)) => {
                if k > i {
                    2
                } else {
                    0
                }
            }
            _ => 0,
        })
        .collect()
}

/// Equivariant Chevalley rule for `𝔖_{s_g} 𝔖_w`, as an independent check on
/// products and interpolation.
pub fn chevalley(
    ty: CartanType,
    g: Generator,
    w: &SignedPermutation,
) -> Result<Vec<(SignedPermutation, ZPoly)>> {
    ty.check(g)?;
    let idx = match g {
        Generator::S(i) => i + 1,
        _ => 2,
    };
    let n = w.rank().max(idx) + 2;
    let omega = fundamental_weight_doubled(ty, g, n);
    let mut out: BTreeMap<SignedPermutation, ZPoly> = BTreeMap::new();
    for root in ty.positive_roots(n) {
        let u = w.compose(&root.reflection(ty.family())?);
        if u.length() != w.length() + 1 {
            continue;
        }
        let pairing: i64 = root
            .coroot_doubled(ty)
            .iter()
            .map(|&(k, c)| omega[k as usize - 1] * c)
            .sum();
        if pairing % 4 != 0 {
            return Err(Error::Integrality(format!("pairing with {root:?}")));
        }
        if pairing != 0 {
            *out.entry(u).or_default() += &ZPoly::constant(pairing / 4);
        }
    }
    let mut diag = ZPoly::zero();
    for (k, &c) in omega.iter().enumerate() {
        let t = ZPoly::t(k as u16 + 1);
        diag += &(&t - &w.act_on_t(&t)).scale(&BigInt::from(c));
    }
    let diag = diag.div_scalar_exact(&BigInt::from(2))?;
    if !diag.is_zero() {
        *out.entry(w.clone()).or_default() += &diag;
    }
    let mut v: Vec<_> = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.cmp(&b.0)));
    Ok(v)
}

/// Type A double Schubert polynomial of a permutation (no sign changes).
pub fn type_a_double_schubert(w: &SignedPermutation) -> Result<ZPoly> {
    if w.sign_changes() > 0 {
        return Err(Error::InvalidPermutation(format!(
            "{w} is not in a symmetric group"
        )));
    }
    let n = w.rank().max(1);
    let mut top = ZPoly::one();
    for i in 1..=n {
        for j in 1..=n - i {
            top = &top * &(ZPoly::z(i as u16) - ZPoly::t(j as u16));
        }
    }
    let w0 = SignedPermutation::new((1..=n as i32).rev().collect(), Family::BC)?;
    let u = w.with_family(Family::BC)?.inverse().compose(&w0);
    u.reduced_word().iter().rev().try_fold(top, |acc, g| {
        let Generator::S(i) = *g else {
            unreachable!("permutations have no sign generators")
        };
        let (a, b) = (Var::Z(i as u16), Var::Z(i as u16 + 1));
        (&acc - &acc.swap_vars(a, b)).div_exact(&(ZPoly::var(a) - ZPoly::var(b)))
    })
}

/// The sequence `(t_1, -z_1, ..., t_{n-1}, -z_{n-1})` used by [`longest_element`].
pub fn longest_parameters(n: u32) -> ParamSequence {
    ParamSequence::interleaved(n.saturating_sub(1) as u16)
}

/// Root list re-exported for callers checking GKM conditions.
pub fn positive_roots(ty: CartanType, n: u32) -> Vec<Root> {
    ty.positive_roots(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, fam: Family) -> SignedPermutation {
        SignedPermutation::parse(s, fam).unwrap()
    }

    #[test]
    fn first_transitions() {
        let c = SchubertEngine::new(CartanType::C);
        let w = perm("2 1", Family::BC);
        assert_eq!(c.double_schubert(&w).unwrap().to_string(), "Q[1] + z1 - t1");
        let d = SchubertEngine::new(CartanType::D);
        let w = perm("1 3 2", Family::D);
        assert_eq!(
            d.double_schubert(&w).unwrap().to_string(),
            "2*P[1] + z1 + z2 - t1 - t2"
        );
        let b = SchubertEngine::new(CartanType::B);
        let w = perm("2 1", Family::BC);
        assert_eq!(
            b.double_schubert(&w).unwrap().to_string(),
            "2*P[1] + z1 - t1"
        );
    }

    #[test]
    fn grassmannian_base_case() {
        let c = SchubertEngine::new(CartanType::C);
        let w = perm("-2 1", Family::BC);
        assert_eq!(c.double_schubert(&w).unwrap().to_string(), "Q[2] - t1*Q[1]");
        let d = SchubertEngine::new(CartanType::D);
        let w = perm("-2 -1", Family::D);
        assert_eq!(d.double_schubert(&w).unwrap().to_string(), "P[1]");
    }

    #[test]
    fn type_a_small() {
        let w = perm("2 1", Family::BC);
        assert_eq!(
            type_a_double_schubert(&w).unwrap(),
            ZPoly::z(1) - ZPoly::t(1)
        );
        let w = perm("1 3 2", Family::BC);
        let expect = ZPoly::z(1) + ZPoly::z(2) - ZPoly::t(1) - ZPoly::t(2);
        assert_eq!(type_a_double_schubert(&w).unwrap(), expect);
    }

    #[test]
    fn longest_small() {
        assert_eq!(
            longest_element(CartanType::C, 1).unwrap().to_string(),
            "Q[1]"
        );
        assert_eq!(longest_element(CartanType::D, 1).unwrap().to_string(), "1");
        assert_eq!(
            longest_element(CartanType::B, 1).unwrap().to_string(),
            "P[1]"
        );
    }

    #[test]
    fn expansion_of_z1() {
        // z1 = 𝔖_{s1} - 𝔖_{s0} + t1 in type C
        let c = SchubertEngine::new(CartanType::C);
        let f = GammaElement::scalar(Flavor::Q, ZPoly::z(1));
        let got = c.expand(&f).unwrap();
        let shown: Vec<String> = got.iter().map(|(w, k)| format!("{w}:{k}")).collect();
        assert_eq!(shown, vec!["-1:-1", "2 1:1", "1:t1"]);
    }

    #[test]
    fn expansion_text() {
        let c = SchubertEngine::new(CartanType::C);
        let q1 = GammaElement::basis(Flavor::Q, StrictPartition::new(vec![1]).unwrap());
        let got = c.expand(&(&q1 * &q1)).unwrap();
        assert_eq!(render_expansion(&got, 3), "2*S[-2 1 3] + 2t1*S[-1 2 3]");
        assert_eq!(render_expansion(&[], 3), "0");
    }

    #[test]
    fn root_products() {
        let w = perm("-1", Family::BC);
        assert_eq!(
            inversion_root_product(CartanType::C, &w),
            ZPoly::t(1).scale(&2.into())
        );
        assert_eq!(inversion_root_product(CartanType::B, &w), ZPoly::t(1));
        let w = perm("2 1", Family::BC);
        assert_eq!(
            inversion_root_product(CartanType::C, &w),
            ZPoly::t(2) - ZPoly::t(1)
        );
    }

    #[test]
    fn table_snapshot_round_trip() {
        let c = SchubertEngine::new(CartanType::C);
        c.double_schubert(&perm("3 1 2", Family::BC)).unwrap();
        let snap = c.snapshot();
        let json = serde_json::to_string(&snap).unwrap();
        let back: SchubertTable = serde_json::from_str(&json).unwrap();
        let fresh = SchubertEngine::new(CartanType::C);
        fresh.load(back).unwrap();
        assert_eq!(fresh.snapshot().len(), snap.len());
        let d = SchubertEngine::new(CartanType::D);
        assert!(d.load(snap).is_err());
    }
}
