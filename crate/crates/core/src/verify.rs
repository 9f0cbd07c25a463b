//! Self-check suites run by `eqschubert verify` and the acceptance tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::divdiff::{act_t, act_z, delta, omega, partial};
use crate::error::{Error, Result};
use crate::gamma::factorial::{
    definition_polynomial, factorial_p, factorial_q, h_lambda, h_prime_lambda, multi_pfaffian,
    q_shifted, t_point, t_prime_point, ParamSequence,
};
use crate::gamma::{Flavor, GammaElement};
use crate::golden::GoldenTable;
use crate::partition::StrictPartition;
use crate::poly::{Var, ZPoly};
use crate::schubert::{
    inversion_root_product, localize_element, longest_element, type_a_double_schubert,
    SchubertEngine,
};
use crate::weyl::{CartanType, Family, Generator, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    GoldenC3,
    GoldenD3,
    Divdiff,
    Symmetry,
    Positivity,
    Localization,
    Longest,
    Pfaffian,
    TypeA,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::GoldenC3,
        Suite::GoldenD3,
        Suite::Divdiff,
        Suite::Symmetry,
        Suite::Positivity,
        Suite::Localization,
        Suite::Longest,
        Suite::Pfaffian,
        Suite::TypeA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GoldenC3 => "golden-c3",
            Suite::GoldenD3 => "golden-d3",
            Suite::Divdiff => "divdiff",
            Suite::Symmetry => "symmetry",
            Suite::Positivity => "positivity",
            Suite::Localization => "localization",
            Suite::Longest => "longest",
            Suite::Pfaffian => "pfaffian",
            Suite::TypeA => "typeA",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown suite '{s}'"),
            })
    }
}

/// Pass/fail tally for one named family of checks.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: 0,
            total: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(detail());
        }
    }

    /// Like `record`, but an error counts as a failure.
    fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.checks
            .iter()
            .find_map(|c| c.first_failure.as_deref().map(|f| (c.name.as_str(), f)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let noun = if matches!(self.suite, Suite::GoldenC3 | Suite::GoldenD3) {
                "rows match"
            } else {
                "checks pass"
            };
            writeln!(f, "{}: {}/{} {noun}", c.name, c.passed, c.total)?;
        }
        if let Some((name, detail)) = self.first_failure() {
            writeln!(f, "first failure in {name}: {detail}")?;
        }
        Ok(())
    }
}

/// One engine per Cartan type, shared across suites.
pub struct Engines {
    pub b: SchubertEngine,
    pub c: SchubertEngine,
    pub d: SchubertEngine,
}

impl Default for Engines {
    fn default() -> Self {
        Engines {
            b: SchubertEngine::new(CartanType::B),
            c: SchubertEngine::new(CartanType::C),
            d: SchubertEngine::new(CartanType::D),
        }
    }
}

impl Engines {
    pub fn get(&self, ty: CartanType) -> &SchubertEngine {
        match ty {
            CartanType::B => &self.b,
            CartanType::C => &self.c,
            CartanType::D => &self.d,
        }
    }
}

const TYPES: [CartanType; 3] = [CartanType::C, CartanType::B, CartanType::D];

fn group(ty: CartanType, n: u32) -> Vec<SignedPermutation> {
    SignedPermutation::elements(ty.family(), n)
}

/// Runs `suite`; `n` bounds the rank for the suites that enumerate a group.
pub fn run(suite: Suite, n: u32, engines: &Engines) -> Result<Vec<Report>> {
    if suite == Suite::All {
        return Suite::EACH
            .into_iter()
            .map(|s| run_one(s, n, engines))
            .collect();
    }
    Ok(vec![run_one(suite, n, engines)?])
}

fn run_one(suite: Suite, n: u32, engines: &Engines) -> Result<Report> {
    let checks = match suite {
        Suite::GoldenC3 => vec![golden(CartanType::C, engines)?],
        Suite::GoldenD3 => vec![golden(CartanType::D, engines)?],
        Suite::Divdiff => defining_equations(n, engines),
        Suite::Symmetry => symmetry(n, engines),
        Suite::Positivity => positivity(n, engines),
        Suite::Localization => localization(n, engines),
        Suite::Longest => longest(n, engines),
        Suite::Pfaffian => pfaffians(),
        Suite::TypeA => type_a(n, engines),
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(Report { suite, checks })
}

fn golden(ty: CartanType, engines: &Engines) -> Result<Check> {
    let table = GoldenTable::load(ty)?;
    let mut c = Check::new(format!("golden-{}3", ty.to_string().to_lowercase()));
    for row in &table.rows {
        let got = engines.get(ty).double_schubert(&row.perm);
        c.record_result(got.map(|g| *g == row.expected), || {
            format!("{}: expected {}", row.perm, row.expected)
        });
    }
    Ok(c)
}

/// `∂_g 𝔖_w = 𝔖_{w s_g}` and `δ_g 𝔖_w = 𝔖_{s_g w}` when the length drops, else 0;
/// the constant term of `𝔖_w` is 1 only for the identity.
pub fn defining_equations(n: u32, engines: &Engines) -> Vec<Check> {
    let mut out = Vec::new();
    for ty in TYPES {
        let eng = engines.get(ty);
        let mut dz = Check::new(format!("partial {ty}{n}"));
        let mut dt = Check::new(format!("delta {ty}{n}"));
        let mut ct = Check::new(format!("constant term {ty}{n}"));
        for w in group(ty, n) {
            let Ok(s) = eng.double_schubert(&w) else {
                dz.record(false, || format!("{w}: transition failed"));
                continue;
            };
            for g in ty.generators(n + 1) {
                for (side, check) in [(0, &mut dz), (1, &mut dt)] {
                    let (u, got) = if side == 0 {
                        (w.mul_gen_right(g), partial(ty, g, &s))
                    } else {
                        (w.mul_gen_left(g), delta(ty, g, &s))
                    };
                    let expect = if u.length() < w.length() {
                        eng.double_schubert(&u).map(|x| (*x).clone())
                    } else {
                        Ok(GammaElement::zero(ty.flavor()))
                    };
                    let r = got.and_then(|a| expect.map(|b| a == b));
                    check.record_result(r, || format!("w={w}, {g}"));
                }
            }
            let constant = s.scalar_part().constant_term();
            let want = if w.is_identity() {
                BigInt::one()
            } else {
                BigInt::default()
            };
            ct.record(constant == want, || {
                format!("w={w}: constant term {constant}")
            });
        }
        out.extend([dz, dt, ct]);
    }
    out
}

/// Symmetry under `ω`, the type D hat symmetry and the B/C scaling.
pub fn symmetry(n: u32, engines: &Engines) -> Vec<Check> {
    let mut out = Vec::new();
    for ty in TYPES {
        let eng = engines.get(ty);
        let mut c = Check::new(format!("omega {ty}{n}"));
        for w in group(ty, n) {
            let r = eng
                .double_schubert(&w)
                .and_then(|s| Ok(omega(&s) == *eng.double_schubert(&w.inverse())?));
            c.record_result(r, || format!("w={w}"));
        }
        out.push(c);
    }
    let mut hat = Check::new(format!("hat D{n}"));
    let s0 = SignedPermutation::generator(Generator::S0, Family::BC);
    for w in group(CartanType::D, n) {
        let w_hat = s0.compose(&w).compose(&s0).with_family(Family::D);
        let r = w_hat.and_then(|wh| {
            let s = engines.d.double_schubert(&w)?;
            Ok(act_z(Generator::S0, &act_t(Generator::S0, &s))
                == *engines.d.double_schubert(&wh)?)
        });
        hat.record_result(r, || format!("w={w}"));
    }
    out.push(hat);
    let mut bc = Check::new(format!("B = 2^-s C, rank {n}"));
    for w in group(CartanType::C, n) {
        let r = (|| {
            let c = engines.c.double_schubert(&w)?.to_flavor(Flavor::P)?;
            let d = BigInt::one() << w.sign_changes();
            let scaled = c.try_map_coeffs(|p| p.div_scalar_exact(&d))?;
            Ok(scaled == *engines.b.double_schubert(&w)?)
        })();
        bc.record_result(r, || format!("w={w}"));
    }
    out.push(bc);
    out
}

/// Every coefficient lies in `N[z, -t]`.
pub fn positivity(n: u32, engines: &Engines) -> Vec<Check> {
    TYPES
        .into_iter()
        .map(|ty| {
            let mut c = Check::new(format!("positivity {ty}{n}"));
            for w in group(ty, n) {
                let r = engines.get(ty).double_schubert(&w).map(|s| is_positive(&s));
                c.record_result(r, || format!("w={w}"));
            }
            c
        })
        .collect()
}

pub fn is_positive(g: &GammaElement) -> bool {
    g.terms().iter().all(|(_, c)| {
        c.substitute(|v| matches!(v, Var::T(_)).then(|| -ZPoly::var(v)))
            .coefficients_nonnegative()
    })
}

/// Support, normalization and GKM conditions for `Φ_v(𝔖_w)`.
pub fn localization(n: u32, engines: &Engines) -> Vec<Check> {
    let mut out = Vec::new();
    for ty in TYPES {
        let eng = engines.get(ty);
        let elems = group(ty, n);
        let mut support = Check::new(format!("vanishing {ty}{n}"));
        let mut norm = Check::new(format!("normalization {ty}{n}"));
        let mut gkm = Check::new(format!("GKM {ty}{n}"));
        let roots: Vec<_> = ty
            .positive_roots(n)
            .into_iter()
            .filter_map(|r| r.reflection(ty.family()).ok().map(|s| (r.form(ty), s)))
            .collect();
        for w in &elems {
            let Ok(s) = eng.double_schubert(w) else {
                support.record(false, || format!("{w}: transition failed"));
                continue;
            };
            for v in &elems {
                let val = localize_element(&s, v);
                if !w.bruhat_leq(v) {
                    support.record(val.is_zero(), || format!("w={w}, v={v}: {val}"));
                }
                if v == w {
                    let expect = inversion_root_product(ty, w);
                    norm.record(val == expect, || format!("w={w}: {val} vs {expect}"));
                }
                for (form, refl) in &roots {
                    let other = localize_element(&s, &refl.compose(v));
                    let ok = (&val - &other).div_exact(form).is_ok();
                    gkm.record(ok, || format!("w={w}, v={v}, root {form}"));
                }
            }
        }
        out.extend([support, norm, gkm]);
    }
    out
}

/// The closed formula for the top element, and lowering from it to every element.
pub fn longest(n: u32, engines: &Engines) -> Vec<Check> {
    let mut out = Vec::new();
    for ty in TYPES {
        let eng = engines.get(ty);
        let lo = if ty == CartanType::D { 2 } else { 1 };
        let mut top = Check::new(format!("top {ty}, rank {lo}..={}", n.max(lo)));
        for m in lo..=n.max(lo) {
            let w0 = SignedPermutation::longest(ty.family(), m);
            let r = longest_element(ty, m).and_then(|k| Ok(k == *eng.double_schubert(&w0)?));
            top.record_result(r, || format!("rank {m}"));
        }
        let mut down = Check::new(format!("lowering {ty}{n}"));
        for w in group(ty, n) {
            let r = eng
                .double_schubert_via_longest(&w, n)
                .and_then(|k| Ok(k == *eng.double_schubert(&w)?));
            down.record_result(r, || format!("w={w}"));
        }
        out.extend([top, down]);
    }
    out
}

/// Multi-Schur Pfaffians, the definition of factorial functions, and their
/// vanishing and normalization properties.
pub fn pfaffians() -> Vec<Check> {
    let t = ParamSequence::t();
    let mut multi = Check::new("multi-Pfaffian |λ| <= 8");
    for lam in StrictPartition::up_to_size(8)
        .into_iter()
        .filter(|l| l.len() <= 4)
    {
        let r = multi_pfaffian_of(&lam, &t).and_then(|pf| Ok(pf == factorial_q(&lam, &t)?));
        multi.record_result(r, || format!("λ={lam}"));
    }
    let mut def = Check::new("Pfaffian = definition |λ| <= 6");
    for lam in StrictPartition::up_to_size(6) {
        let r = definition_agrees(&lam);
        def.record_result(r, || format!("λ={lam}"));
    }
    let top = StrictPartition::new(vec![4, 3, 2, 1]).expect("strict");
    let subs = top.subpartitions();
    let mut vanish = Check::new("vanishing and normalization λ, μ ⊆ (4,3,2,1)");
    for lam in &subs {
        let q = factorial_q(lam, &t);
        let p = factorial_p(lam, &t);
        for mu in &subs {
            let r = (|| {
                let (q, p) = (
                    q.as_ref().map_err(clone_err)?,
                    p.as_ref().map_err(clone_err)?,
                );
                let qv = q.evaluate(&t_point(mu));
                let pv = p.evaluate(&t_prime_point(mu));
                Ok(if lam == mu {
                    qv == h_lambda(lam) && pv == h_prime_lambda(lam)
                } else if !mu.contains(lam) {
                    qv.is_zero() && pv.is_zero()
                } else {
                    true
                })
            })();
            vanish.record_result(r, || format!("λ={lam}, μ={mu}"));
        }
    }
    vec![multi, def, vanish]
}

fn clone_err(e: &Error) -> Error {
    Error::Unstable(e.to_string())
}

pub fn multi_pfaffian_of(lam: &StrictPartition, a: &ParamSequence) -> Result<GammaElement> {
    let width = lam.part(1) as usize * 2 + 2;
    let mut rows: Vec<u32> = lam.parts().to_vec();
    if rows.len() % 2 == 1 {
        rows.push(0);
    }
    let c: Vec<Vec<GammaElement>> = rows
        .iter()
        .map(|&l| (0..width as u32).map(|k| q_shifted(k, l, a)).collect())
        .collect();
    multi_pfaffian(lam, &c)
}

/// `P_λ(x|t)` and `Q_λ(x|t)` against the defining symmetrization in
/// `ℓ(λ)+2` (even) variables.
fn definition_agrees(lam: &StrictPartition) -> Result<bool> {
    let nvars = lam.len() + 2 - lam.len() % 2;
    let xs: Vec<ZPoly> = (1..=nvars as u16).map(ZPoly::x).collect();
    let t = ParamSequence::t();
    let k = lam.part(1) as usize;
    let p = definition_polynomial(lam, &t.take(k), nvars)?;
    let q = definition_polynomial(lam, &t.prepend_zero().take(k), nvars)?
        .scale(&(BigInt::one() << lam.len()));
    Ok(factorial_p(lam, &t)?.evaluate(&xs) == p && factorial_q(lam, &t)?.evaluate(&xs) == q)
}

/// The constant part is the type A polynomial, and the decomposition through
/// type A single Schubert and Billey-Haiman polynomials holds.
pub fn type_a(n: u32, engines: &Engines) -> Vec<Check> {
    let mut proj = Check::new(format!("x=0 projection C{n}"));
    let mut dec = Check::new(format!("type A decomposition C{n}"));
    let perms: Vec<SignedPermutation> = group(CartanType::C, n)
        .into_iter()
        .filter(|w| w.sign_changes() == 0)
        .collect();
    let single: Vec<(SignedPermutation, ZPoly)> = perms
        .iter()
        .filter_map(|u| {
            let a = type_a_double_schubert(&u.inverse()).ok()?;
            let a = a.substitute(|v| match v {
                Var::T(_) => Some(ZPoly::zero()),
                Var::Z(i) => Some(-ZPoly::t(i)),
                _ => None,
            });
            Some((u.clone(), a))
        })
        .collect();
    for w in group(CartanType::C, n) {
        let r = (|| {
            let s = engines.c.double_schubert(&w)?;
            let expect = if w.sign_changes() == 0 {
                type_a_double_schubert(&w)?
            } else {
                ZPoly::zero()
            };
            Ok(s.scalar_part() == expect)
        })();
        proj.record_result(r, || format!("w={w}"));
        let r = (|| {
            let mut sum = GammaElement::zero(Flavor::Q);
            for (u, a) in &single {
                let v = u.inverse().compose(&w);
                if u.length() + v.length() == w.length() {
                    sum = &sum + &engines.c.billey_haiman(&v)?.scale(a);
                }
            }
            Ok(sum == *engines.c.double_schubert(&w)?)
        })();
        dec.record_result(r, || format!("w={w}"));
    }
    vec![proj, dec]
}
