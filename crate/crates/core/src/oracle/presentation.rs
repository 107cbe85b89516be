use std::fmt;

use crate::error::{Error, Result};
use crate::holomorph::HolContext;
use crate::numtheory;

use super::CayleyGroup;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Self {
            generator,
            inverted: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Self {
            generator,
            inverted: true,
        }
    }
}

pub type Word = Vec<Letter>;

fn repeat(letter: Letter, times: u64) -> Word {
    vec![letter; times as usize]
}

/// Generators and relators, plus the order of the group they present when it
/// is known from a normal-form count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
    expected_order: Option<usize>,
}

impl Presentation {
    pub fn new(
        generator_count: usize,
        relators: Vec<Word>,
        expected_order: Option<usize>,
    ) -> Result<Self> {
        if relators.is_empty() {
            return Err(Error::Domain(
                "a presentation needs at least one relator".into(),
            ));
        }
        if let Some(l) = relators
            .iter()
            .flatten()
            .find(|l| l.generator >= generator_count)
        {
            return Err(Error::Domain(format!(
                "relator uses unknown generator {}",
                l.generator
            )));
        }
        Ok(Self {
            generator_count,
            relators,
            expected_order,
        })
    }

    /// `⟨x, y | x^n, y^φ(n), y x y⁻¹ x^{-k}⟩`, of order `n·φ(n)`.
    pub fn holomorph(ctx: &HolContext) -> Self {
        let (x, y) = (0, 1);
        let mut conj = vec![Letter::gen(y), Letter::gen(x), Letter::inv(y)];
        conj.extend(repeat(Letter::inv(x), ctx.k()));
        Self {
            generator_count: 2,
            relators: vec![
                repeat(Letter::gen(x), ctx.n()),
                repeat(Letter::gen(y), ctx.phi()),
                conj,
            ],
            expected_order: Some(ctx.group_order() as usize),
        }
    }

    /// Presentation of `Hol(C_n)` for any `n ≥ 2` on generators
    /// `x, u_1, …, u_r`, where the `u_i` act as the unit-group basis from
    /// [`numtheory::unit_group_basis`]: `x^n`, `u_i^{o_i}`, `[u_i, u_j]` and
    /// `u_i x u_i⁻¹ x^{-g_i}`. Every word reduces to `x^a u_1^{b_1}…u_r^{b_r}`,
    /// so the order is at most `n·φ(n)`.
    pub fn general_holomorph(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("n must be at least 2, got {n}")));
        }
        let basis = numtheory::unit_group_basis(n)?;
        let x = 0;
        let mut relators = vec![repeat(Letter::gen(x), n)];
        for (i, &(g, order)) in basis.iter().enumerate() {
            let u = i + 1;
            relators.push(repeat(Letter::gen(u), order));
            let mut conj = vec![Letter::gen(u), Letter::gen(x), Letter::inv(u)];
            conj.extend(repeat(Letter::inv(x), g));
            relators.push(conj);
            for v in 1..u {
                relators.push(vec![
                    Letter::gen(u),
                    Letter::gen(v),
                    Letter::inv(u),
                    Letter::inv(v),
                ]);
            }
        }
        Ok(Self {
            generator_count: basis.len() + 1,
            relators,
            expected_order: Some((n * numtheory::totient(n)?) as usize),
        })
    }

    /// `⟨r, s | r^n, s², (s r)²⟩`, of order `2n`.
    pub fn dihedral(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "dihedral groups need n ≥ 3, got {n}"
            )));
        }
        let (r, s) = (0, 1);
        Ok(Self {
            generator_count: 2,
            relators: vec![
                repeat(Letter::gen(r), n),
                repeat(Letter::gen(s), 2),
                vec![
                    Letter::gen(s),
                    Letter::gen(r),
                    Letter::gen(s),
                    Letter::gen(r),
                ],
            ],
            expected_order: Some(2 * n as usize),
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn expected_order(&self) -> Option<usize> {
        self.expected_order
    }

    /// Evaluates `word` in `group` with generator `i` sent to `images[i]`.
    pub fn evaluate(group: &CayleyGroup, images: &[usize], word: &[Letter]) -> usize {
        word.iter().fold(group.identity(), |acc, l| {
            let g = images[l.generator];
            group.mul(acc, if l.inverted { group.inverse(g) } else { g })
        })
    }

    /// Whether every relator evaluates to the identity under `images`.
    pub fn relators_hold(&self, group: &CayleyGroup, images: &[usize]) -> bool {
        self.relators
            .iter()
            .all(|w| Self::evaluate(group, images, w) == group.identity())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{} generators | {} relators⟩",
            self.generator_count,
            self.relators.len()
        )
    }
}
