//! Weyl group actions on `Γ ⊗ Z[z, t]` and the divided difference operators
//! `∂_i` (acting on z) and `δ_i` (acting on t).
//!
//! `s_i` for `i >= 1` swaps `z_i, z_{i+1}` (resp. `t_i, t_{i+1}`). The sign
//! change `s0` negates `z_1` and moves it into the alphabet: `F(x) ↦ F(z_1, x)`;
//! on the t side it negates `t_1` and maps `F(x) ↦ F(-t_1, x)`.

use crate::error::Result;
use crate::gamma::{prepend_variable, GammaElement};
use crate::poly::{Var, ZPoly};
use crate::weyl::{CartanType, Generator, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Z,
    T,
}

fn var(side: Side, i: u16) -> Var {
    match side {
        Side::Z => Var::Z(i),
        Side::T => Var::T(i),
    }
}

fn act(side: Side, g: Generator, f: &GammaElement) -> GammaElement {
    match g {
        Generator::S(i) => {
            let (a, b) = (var(side, i as u16), var(side, i as u16 + 1));
            f.map_coeffs(|c| c.swap_vars(a, b))
        }
        Generator::S0 => {
            let v = var(side, 1);
            let y_image = match side {
                Side::Z => ZPoly::z(1),
                Side::T => -ZPoly::t(1),
            };
            let mut out = GammaElement::zero(f.flavor());
            for (lam, c) in f.terms() {
                let shifted = prepend_variable(f.flavor(), lam).substitute(|w| match w {
                    Var::Y(1) => Some(y_image.clone()),
                    _ => None,
                });
                out = &out + &shifted.scale(&c.negate_var(v));
            }
            out
        }
        Generator::SHat => {
            let once = act(side, Generator::S0, f);
            let twice = act(side, Generator::S(1), &once);
            act(side, Generator::S0, &twice)
        }
    }
}

/// Left action `s^z_g` on the z-variables (and the alphabet, for `s0`).
pub fn act_z(g: Generator, f: &GammaElement) -> GammaElement {
    act(Side::Z, g, f)
}

/// Left action `s^t_g` on the t-variables (and the alphabet, for `s0`).
pub fn act_t(g: Generator, f: &GammaElement) -> GammaElement {
    act(Side::T, g, f)
}

/// The involution exchanging `z_i ↔ -t_i`, fixing every `Q_λ` / `P_λ`.
pub fn omega_poly(p: &ZPoly) -> ZPoly {
    p.substitute(|v| match v {
        Var::Z(i) => Some(-ZPoly::t(i)),
        Var::T(i) => Some(-ZPoly::z(i)),
        _ => None,
    })
}

pub fn omega(f: &GammaElement) -> GammaElement {
    f.map_coeffs(omega_poly)
}

/// `∂_g f = (f - s^z_g f) / ω(α_g)`.
pub fn partial(ty: CartanType, g: Generator, f: &GammaElement) -> Result<GammaElement> {
    ty.check(g)?;
    let diff = f - &act_z(g, f);
    let root = omega_poly(&ty.simple_root(g));
    diff.try_map_coeffs(|c| c.div_exact(&root))
}

/// `δ_g f = (f - s^t_g f) / α_g`.
pub fn delta(ty: CartanType, g: Generator, f: &GammaElement) -> Result<GammaElement> {
    ty.check(g)?;
    let diff = f - &act_t(g, f);
    let root = ty.simple_root(g);
    diff.try_map_coeffs(|c| c.div_exact(&root))
}

/// `∂_{g_1} ... ∂_{g_k} f` (the last letter acts first).
pub fn partial_word(ty: CartanType, word: &[Generator], f: &GammaElement) -> Result<GammaElement> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &g| partial(ty, g, &acc))
}

pub fn delta_word(ty: CartanType, word: &[Generator], f: &GammaElement) -> Result<GammaElement> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &g| delta(ty, g, &acc))
}

/// `∂_w` along the canonical reduced word of `w`.
pub fn partial_perm(
    ty: CartanType,
    w: &SignedPermutation,
    f: &GammaElement,
) -> Result<GammaElement> {
    partial_word(ty, &w.reduced_word(), f)
}

pub fn delta_perm(ty: CartanType, w: &SignedPermutation, f: &GammaElement) -> Result<GammaElement> {
    delta_word(ty, &w.reduced_word(), f)
}
