//! Automorphisms of `G = Hol(C_n)` and the isomorphism `ψ: Aut(G) → G`.
//!
//! Every automorphism of `G` sends `x` to a power of `x` and `y` to some
//! `x^c y`, so it is pinned down by a pair `(c, j)` with
//! `α(x) = y^j(x) = x^{k^j}` and `α(y) = x^c y`. The map `ψ(α) = x^c y^j`
//! is a group isomorphism when composition is read right to left
//! (`α∘β` applies `β` first).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holomorph::{HolContext, HolElem};
use crate::numtheory::{add_mod, mul_mod};

/// An automorphism `α` of `Hol(C_n)` with `α(x) = x^{k^j}` and `α(y) = x^c y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AutData {
    c: u64,
    j: u64,
}

impl AutData {
    /// Builds `(c mod n, j mod φ(n))`.
    pub fn new(ctx: &HolContext, c: i64, j: i64) -> Self {
        let g = ctx.elem(c, j);
        Self { c: g.a(), j: g.b() }
    }

    pub fn identity() -> Self {
        Self { c: 0, j: 0 }
    }

    pub fn c(self) -> u64 {
        self.c
    }

    pub fn j(self) -> u64 {
        self.j
    }
}

impl fmt::Display for AutData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α[c={}, j={}]", self.c, self.j)
    }
}

/// `α(x^a y^b) = x^{a·k^j}·(x^c y)^b`.
pub fn apply(ctx: &HolContext, alpha: AutData, g: HolElem) -> HolElem {
    let image_of_x_power = ctx.elem_unsigned(mul_mod(g.a(), ctx.k_pow(alpha.j), ctx.n()), 0);
    let image_of_y = ctx.elem_unsigned(alpha.c, 1);
    ctx.mul(image_of_x_power, ctx.power(image_of_y, g.b()))
}

/// `α∘β` (β first): `(c + d·k^j, j + m)` for `α = (c, j)`, `β = (d, m)`.
pub fn compose(ctx: &HolContext, alpha: AutData, beta: AutData) -> AutData {
    let n = ctx.n();
    AutData {
        c: add_mod(alpha.c, mul_mod(beta.c, ctx.k_pow(alpha.j), n), n),
        j: (alpha.j + beta.j) % ctx.phi(),
    }
}

/// `ψ(α) = x^c y^j`.
pub fn psi(ctx: &HolContext, alpha: AutData) -> HolElem {
    ctx.elem_unsigned(alpha.c, alpha.j)
}

/// The unique `α` with `ψ(α) = g`.
pub fn psi_inverse(_ctx: &HolContext, g: HolElem) -> AutData {
    AutData { c: g.a(), j: g.b() }
}

/// The three hypotheses under which `x ↦ x^{k^j}`, `y ↦ x^c y` extends to an
/// automorphism of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionCheck {
    /// `x^{k^j}` has order `n`.
    GeneratorImage,
    /// `(x^c y)^{φ(n)} = 1`.
    CosetPower,
    /// `α(y x^i y^{-1}) = (x^c y)·α(x^i)·(x^c y)^{-1}` for every `i`.
    ConjugationCompatibility,
}

impl fmt::Display for ExtensionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::GeneratorImage => "generator image has order n",
            Self::CosetPower => "(x^c y)^φ(n) = 1",
            Self::ConjugationCompatibility => "conjugation compatibility",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationOutcome {
    Pass,
    Fail {
        check: ExtensionCheck,
        witness: String,
    },
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass)
    }
}

/// Checks that the images of `x` and `y` under `α` extend to an automorphism:
/// `α(x)` has order `n`, `α(y)^φ(n) = 1`, and conjugation by `α(y)` acts on
/// `⟨α(x)⟩` as conjugation by `y` acts on `⟨x⟩`.
pub fn validate_automorphism(ctx: &HolContext, alpha: AutData) -> VerificationOutcome {
    let n = ctx.n();
    let x_image = ctx.elem_unsigned(ctx.k_pow(alpha.j), 0);
    let order = ctx.element_order(x_image);
    if order != n {
        return VerificationOutcome::Fail {
            check: ExtensionCheck::GeneratorImage,
            witness: format!("α(x) = {x_image} has order {order}"),
        };
    }

    let coset_rep = ctx.elem_unsigned(alpha.c, 1);
    let top = ctx.power(coset_rep, ctx.phi());
    if top != ctx.identity() {
        return VerificationOutcome::Fail {
            check: ExtensionCheck::CosetPower,
            witness: format!("(x^{} y)^{} = {top}", alpha.c, ctx.phi()),
        };
    }

    let coset_rep_inv = ctx.inverse(coset_rep);
    let y_inv = ctx.inverse(ctx.y());
    for i in 0..n {
        let xi = ctx.elem_unsigned(i, 0);
        let lhs = apply(ctx, alpha, ctx.mul(ctx.mul(ctx.y(), xi), y_inv));
        let rhs = ctx.mul(ctx.mul(coset_rep, apply(ctx, alpha, xi)), coset_rep_inv);
        if lhs != rhs {
            return VerificationOutcome::Fail {
                check: ExtensionCheck::ConjugationCompatibility,
                witness: format!("i = {i}: {lhs} ≠ {rhs}"),
            };
        }
    }
    VerificationOutcome::Pass
}

/// The `(c, j)` of `h ↦ g h g^{-1}`, read off from the conjugates of `x` and `y`.
pub fn inner_automorphism(ctx: &HolContext, g: HolElem) -> Result<AutData> {
    let g_inv = ctx.inverse(g);
    let conj = |h| ctx.mul(ctx.mul(g, h), g_inv);

    let x_image = conj(ctx.x());
    if x_image.b() != 0 {
        return Err(Error::Consistency(format!(
            "{g}·x·{g}⁻¹ = {x_image} is not a power of x"
        )));
    }
    let j = ctx
        .k_log(x_image.a())
        .ok_or_else(|| Error::Consistency(format!("{x_image} is not y^j(x) for any j")))?;

    let y_image = conj(ctx.y());
    if y_image.b() != 1 {
        return Err(Error::Consistency(format!(
            "{g}·y·{g}⁻¹ = {y_image} is not of the form x^c y"
        )));
    }
    Ok(AutData { c: y_image.a(), j })
}

/// All `n·φ(n)` automorphisms, ordered to match [`HolContext::elements`].
pub fn enumerate_aut(ctx: &HolContext) -> Vec<AutData> {
    ctx.elements().map(|g| psi_inverse(ctx, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64) -> HolContext {
        HolContext::new(n, None).unwrap()
    }

    #[test]
    fn apply_examples() {
        let c = ctx(18);
        for g in c.elements() {
            assert_eq!(apply(&c, AutData::identity(), g), g);
        }
        assert_eq!(apply(&c, AutData::new(&c, 0, 1), c.x()), c.elem(5, 0));
        assert_eq!(apply(&c, AutData::new(&c, 2, 0), c.y()), c.elem(2, 1));
    }

    #[test]
    fn apply_power_path_matches_repeated_mul() {
        let c = ctx(18);
        for alpha in enumerate_aut(&c) {
            let y_image = c.elem(alpha.c() as i64, 1);
            for g in c.elements() {
                let x_part = c.elem((g.a() * c.k_pow(alpha.j())) as i64, 0);
                let y_part = (0..g.b()).fold(c.identity(), |acc, _| c.mul(acc, y_image));
                assert_eq!(apply(&c, alpha, g), c.mul(x_part, y_part));
            }
        }
    }

    #[test]
    fn compose_examples() {
        let c = ctx(18);
        let a = AutData::new(&c, 2, 1);
        assert_eq!(compose(&c, a, AutData::identity()), a);
        assert_eq!(
            compose(&c, a, AutData::new(&c, 3, 2)),
            AutData::new(&c, 17, 3)
        );
        let c6 = ctx(6);
        let b = AutData::new(&c6, 1, 1);
        assert_eq!(compose(&c6, b, b), AutData::identity());
    }

    #[test]
    fn compose_matches_pointwise_exhaustively() {
        for n in [6, 10] {
            let c = ctx(n);
            let auts = enumerate_aut(&c);
            for &a in &auts {
                for &b in &auts {
                    let ab = compose(&c, a, b);
                    for g in c.elements() {
                        assert_eq!(apply(&c, ab, g), apply(&c, a, apply(&c, b, g)));
                    }
                }
            }
        }
    }

    #[test]
    fn psi_is_a_homomorphism_exhaustively() {
        for n in [6, 10, 18] {
            let c = ctx(n);
            let auts = enumerate_aut(&c);
            for &a in &auts {
                for &b in &auts {
                    assert_eq!(psi(&c, compose(&c, a, b)), c.mul(psi(&c, a), psi(&c, b)));
                }
            }
        }
    }

    #[test]
    fn psi_round_trips() {
        let c = ctx(18);
        assert_eq!(psi(&c, AutData::identity()), c.identity());
        assert_eq!(psi(&c, AutData::new(&c, 14, 0)), c.elem(14, 0));
        assert_eq!(psi_inverse(&c, c.elem(9, 3)), AutData::new(&c, 9, 3));
        for g in c.elements() {
            assert_eq!(psi(&c, psi_inverse(&c, g)), g);
        }
    }

    #[test]
    fn every_pair_passes_validation() {
        for n in [6, 10, 18] {
            let c = ctx(n);
            for alpha in enumerate_aut(&c) {
                assert!(validate_automorphism(&c, alpha).passed(), "n={n} {alpha}");
            }
        }
        let c = ctx(18);
        assert!(validate_automorphism(&c, AutData::new(&c, 7, 2)).passed());
    }

    #[test]
    fn validation_reports_failures() {
        // k = 7 has order 3 mod 18: the coset x^c y no longer has order φ(n)
        // unless 3 | c.
        let c = HolContext::unchecked(18, 7);
        match validate_automorphism(&c, AutData { c: 1, j: 0 }) {
            VerificationOutcome::Fail { check, witness } => {
                assert_eq!(check, ExtensionCheck::CosetPower);
                assert_eq!(witness, "(x^1 y)^6 = x^6 y^0");
            }
            VerificationOutcome::Pass => panic!("expected a failure"),
        }
        assert!(validate_automorphism(&c, AutData { c: 3, j: 0 }).passed());
    }

    #[test]
    fn inner_automorphism_examples() {
        let c = ctx(18);
        assert_eq!(
            inner_automorphism(&c, c.identity()).unwrap(),
            AutData::identity()
        );
        assert_eq!(
            inner_automorphism(&c, c.x()).unwrap(),
            AutData::new(&c, 14, 0)
        );
        assert_eq!(
            inner_automorphism(&c, c.y()).unwrap(),
            AutData::new(&c, 0, 1)
        );
    }

    #[test]
    fn inner_automorphisms_form_a_homomorphism_with_central_kernel() {
        for n in [6, 10, 18] {
            let c = ctx(n);
            let mut kernel = Vec::new();
            for g in c.elements() {
                let ig = inner_automorphism(&c, g).unwrap();
                if ig == AutData::identity() {
                    kernel.push(g);
                }
                for h in c.elements() {
                    let ih = inner_automorphism(&c, h).unwrap();
                    assert_eq!(
                        inner_automorphism(&c, c.mul(g, h)).unwrap(),
                        compose(&c, ig, ih)
                    );
                }
            }
            assert_eq!(kernel, c.center());
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_aut(&ctx(6)).len(), 12);
        assert_eq!(enumerate_aut(&ctx(18)).len(), 108);
        assert_eq!(enumerate_aut(&ctx(50)).len(), 1000);
    }

    #[test]
    fn every_apply_is_a_bijective_homomorphism_small() {
        for n in [6, 10] {
            let c = ctx(n);
            let all: Vec<_> = c.elements().collect();
            for alpha in enumerate_aut(&c) {
                let mut hit = vec![false; all.len()];
                for &g in &all {
                    hit[c.index_of(apply(&c, alpha, g))] = true;
                    for &h in &all {
                        assert_eq!(
                            apply(&c, alpha, c.mul(g, h)),
                            c.mul(apply(&c, alpha, g), apply(&c, alpha, h))
                        );
                    }
                }
                assert!(hit.into_iter().all(|b| b));
            }
        }
    }
}
