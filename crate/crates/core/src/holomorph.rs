//! The holomorph `G = Hol(C_n) = C_n ⋊ Aut(C_n)` for `n = 2p^e`.
//!
//! `x` generates `C_n` and `y` generates `Aut(C_n)` with `y(x) = x^k`, so every
//! element has a unique normal form `x^a y^b` with `0 ≤ a < n` and
//! `0 ≤ b < φ(n)`. The defining relations are `x^n = 1`, `y^φ(n) = 1` and
//! `y x y^{-1} = x^k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{self, add_mod, mul_mod};

/// The data fixing one holomorph `Hol(C_n)` with chosen generators `x`, `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolContext {
    n: u64,
    p: u64,
    e: u32,
    phi: u64,
    k: u64,
    /// `k^b mod n` for `0 ≤ b < φ(n)`.
    k_powers: Vec<u64>,
}

/// An element `x^a y^b` of `Hol(C_n)` in canonical normal form.
///
/// Only a [`HolContext`] can create one, and it always reduces `a` modulo `n`
/// and `b` modulo `φ(n)`, so two elements are equal exactly when their fields are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HolElem {
    a: u64,
    b: u64,
}

impl HolElem {
    /// Exponent of `x`.
    pub fn a(self) -> u64 {
        self.a
    }

    /// Exponent of `y`.
    pub fn b(self) -> u64 {
        self.b
    }

    pub fn pair(self) -> (u64, u64) {
        (self.a, self.b)
    }
}

impl fmt::Display for HolElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} y^{}", self.a, self.b)
    }
}

impl HolContext {
    /// Builds the context for `n = 2p^e`, using the least primitive root
    /// modulo `n` when `k` is not given.
    pub fn new(n: u64, k: Option<u64>) -> Result<Self> {
        let (p, e) = numtheory::twice_odd_prime_power(n)?;
        let phi = numtheory::totient(n)?;
        let k = match k {
            None => numtheory::least_primitive_root(n)?,
            Some(k) => {
                let reject = |reason: String| Error::Generator { k, n, reason };
                if k <= 1 || k >= n {
                    return Err(reject(format!("k must lie strictly between 1 and {n}")));
                }
                if numtheory::gcd(k, n) != 1 {
                    return Err(reject("k is not a unit".into()));
                }
                let order = numtheory::multiplicative_order(k as i64, n)?;
                if order != phi {
                    return Err(reject(format!("k has order {order}, not φ(n) = {phi}")));
                }
                k
            }
        };
        let k_powers = std::iter::successors(Some(1u64), |&v| Some(mul_mod(v, k, n)))
            .take(phi as usize)
            .collect();
        Ok(Self {
            n,
            p,
            e,
            phi,
            k,
            k_powers,
        })
    }

    /// A context with an arbitrary `k`, for exercising failure paths.
    #[cfg(test)]
    pub(crate) fn unchecked(n: u64, k: u64) -> Self {
        let (p, e) = numtheory::twice_odd_prime_power(n).unwrap();
        let phi = numtheory::totient(n).unwrap();
        let k_powers = std::iter::successors(Some(1u64), |&v| Some(mul_mod(v, k, n)))
            .take(phi as usize)
            .collect();
        Self {
            n,
            p,
            e,
            phi,
            k,
            k_powers,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `|G| = n·φ(n)`.
    pub fn group_order(&self) -> u64 {
        self.n * self.phi
    }

    /// `x^a y^b`, reduced into normal form.
    pub fn elem(&self, a: i64, b: i64) -> HolElem {
        HolElem {
            a: numtheory::reduce(a, self.n),
            b: numtheory::reduce(b, self.phi),
        }
    }

    pub(crate) fn elem_unsigned(&self, a: u64, b: u64) -> HolElem {
        HolElem {
            a: a % self.n,
            b: b % self.phi,
        }
    }

    pub fn identity(&self) -> HolElem {
        HolElem { a: 0, b: 0 }
    }

    pub fn x(&self) -> HolElem {
        self.elem_unsigned(1, 0)
    }

    pub fn y(&self) -> HolElem {
        self.elem_unsigned(0, 1)
    }

    /// The unique involution `x^{n/2}` of `C_n`.
    pub fn involution(&self) -> HolElem {
        self.elem_unsigned(self.n / 2, 0)
    }

    /// `k^b mod n`, for any `b ≥ 0`.
    pub fn k_pow(&self, b: u64) -> u64 {
        self.k_powers[(b % self.phi) as usize]
    }

    /// The `j < φ(n)` with `k^j ≡ unit (mod n)`, if `unit` is a unit.
    pub fn k_log(&self, unit: u64) -> Option<u64> {
        let unit = unit % self.n;
        self.k_powers
            .iter()
            .position(|&v| v == unit)
            .map(|j| j as u64)
    }

    /// `(a₁ + a₂·k^{b₁}, b₁ + b₂)`: the semidirect product law.
    pub fn mul(&self, g: HolElem, h: HolElem) -> HolElem {
        HolElem {
            a: add_mod(g.a, mul_mod(h.a, self.k_pow(g.b), self.n), self.n),
            b: (g.b + h.b) % self.phi,
        }
    }

    /// `(-a·k^{-b}, -b)`.
    pub fn inverse(&self, g: HolElem) -> HolElem {
        let b_inv = (self.phi - g.b) % self.phi;
        let a = mul_mod(g.a, self.k_pow(b_inv), self.n);
        HolElem {
            a: (self.n - a) % self.n,
            b: b_inv,
        }
    }

    /// The exponent of `y^b x^a y^{-b} = x^{a·k^b}`.
    ///
    /// Uses a fresh modular exponentiation rather than the cached powers of `k`
    /// that [`mul`](Self::mul) reads, so the two can check each other.
    pub fn conjugate_by_y_power(&self, a: u64, b: u64) -> u64 {
        let kb = numtheory::pow_residue(self.k, b, self.n);
        mul_mod(a % self.n, kb, self.n)
    }

    /// `(x^a y^b)^m = x^{a(1 + k^b + … + k^{b(m-1)})} y^{bm}`.
    ///
    /// The geometric sum is accumulated term by term over one period of
    /// `k^b` and then scaled by the number of whole periods in `m`; it is never
    /// formed by dividing by `k^b - 1`.
    pub fn power(&self, g: HolElem, m: u64) -> HolElem {
        let n = self.n;
        let ratio = self.k_pow(g.b);
        let mut period_sum = 0;
        let mut period = 0u64;
        let mut term = 1 % n;
        loop {
            period_sum = add_mod(period_sum, term, n);
            period += 1;
            term = mul_mod(term, ratio, n);
            if term == 1 % n || period == m {
                break;
            }
        }
        let sum = if m == 0 {
            0
        } else if m <= period {
            period_sum
        } else {
            let whole = mul_mod((m / period) % n, period_sum, n);
            let tail = numtheory::geometric_sum_mod(ratio, m % period, n);
            add_mod(whole, tail, n)
        };
        HolElem {
            a: mul_mod(g.a, sum, n),
            b: mul_mod(g.b, m % self.phi, self.phi),
        }
    }

    /// Least `t ≥ 1` with `g^t = 1`, by walking successive products.
    pub fn element_order(&self, g: HolElem) -> u64 {
        let identity = self.identity();
        let mut acc = g;
        let mut t = 1;
        while acc != identity {
            acc = self.mul(acc, g);
            t += 1;
        }
        t
    }

    /// All `n·φ(n)` elements in lexicographic `(a, b)` order.
    pub fn elements(&self) -> impl Iterator<Item = HolElem> + '_ {
        (0..self.n).flat_map(move |a| (0..self.phi).map(move |b| HolElem { a, b }))
    }

    /// Position of `g` in [`elements`](Self::elements).
    pub fn index_of(&self, g: HolElem) -> usize {
        (g.a * self.phi + g.b) as usize
    }

    pub fn element_at(&self, index: usize) -> HolElem {
        let index = index as u64;
        self.elem_unsigned(index / self.phi, index % self.phi)
    }

    /// The center, found by testing every element against every other.
    pub fn center(&self) -> Vec<HolElem> {
        let all: Vec<HolElem> = self.elements().collect();
        all.iter()
            .copied()
            .filter(|&g| all.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64) -> HolContext {
        HolContext::new(n, None).unwrap()
    }

    fn naive_power(ctx: &HolContext, g: HolElem, m: u64) -> HolElem {
        (0..m).fold(ctx.identity(), |acc, _| ctx.mul(acc, g))
    }

    #[test]
    fn context_construction() {
        let c = ctx(18);
        assert_eq!((c.n(), c.p(), c.e(), c.phi(), c.k()), (18, 3, 2, 6, 5));
        assert_eq!(HolContext::new(18, Some(11)).unwrap().k(), 11);
        assert!(matches!(
            HolContext::new(12, None),
            Err(Error::Shape { .. })
        ));
        for k in [7, 3, 1, 18, 19, 0] {
            assert!(
                matches!(HolContext::new(18, Some(k)), Err(Error::Generator { .. })),
                "k={k}"
            );
        }
    }

    #[test]
    fn shape_errors_name_the_factorization() {
        let err = HolContext::new(12, None).unwrap_err().to_string();
        assert!(err.contains("2^2·3"), "{err}");
    }

    #[test]
    fn mul_examples() {
        let c = ctx(18);
        assert_eq!(c.mul(c.elem(2, 1), c.elem(3, 2)), c.elem(17, 3));
        assert_eq!(c.mul(c.elem(1, 1), c.elem(7, 5)), c.identity());
        let g = c.elem(11, 4);
        assert_eq!(c.mul(c.identity(), g), g);
    }

    #[test]
    fn normal_form_is_canonical() {
        let c = ctx(18);
        assert_eq!(c.elem(-1, -1), c.elem(17, 5));
        assert_eq!(c.elem(36 + 4, 12 + 2), c.elem(4, 2));
    }

    #[test]
    fn inverse_examples() {
        let c = ctx(18);
        assert_eq!(c.inverse(c.identity()), c.identity());
        assert_eq!(c.inverse(c.elem(1, 1)), c.elem(7, 5));
        let c6 = ctx(6);
        assert_eq!(c6.inverse(c6.elem(3, 0)), c6.elem(3, 0));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(ctx(18).conjugate_by_y_power(1, 0), 1);
        assert_eq!(ctx(18).conjugate_by_y_power(2, 2), 14);
        assert_eq!(ctx(10).conjugate_by_y_power(4, 3), 8);
    }

    #[test]
    fn power_examples() {
        let c = ctx(18);
        let g = c.elem(13, 4);
        assert_eq!(c.power(g, 1), g);
        assert_eq!(c.power(g, 0), c.identity());
        assert_eq!(c.power(c.elem(1, 1), 3), c.elem(13, 3));
        assert_eq!(c.power(c.x(), 18), c.identity());
    }

    #[test]
    fn power_matches_repeated_mul_exhaustively() {
        for n in [6, 10, 18] {
            let c = ctx(n);
            let limit = 2 * c.group_order();
            for g in c.elements() {
                let mut acc = c.identity();
                for m in 0..=limit {
                    assert_eq!(c.power(g, m), acc, "n={n} g={g} m={m}");
                    acc = c.mul(acc, g);
                }
            }
        }
    }

    #[test]
    fn power_with_huge_exponent() {
        let c = ctx(50);
        let g = c.elem(7, 3);
        let order = c.element_order(g);
        let m = u64::MAX - (u64::MAX % order) + 3;
        assert_eq!(c.power(g, m), naive_power(&c, g, m % order));
    }

    #[test]
    fn conjugation_by_y_powers_exhaustive() {
        for n in [6, 10, 18] {
            let c = ctx(n);
            for a in 0..n {
                for b in 0..2 * c.phi() {
                    let yb = naive_power(&c, c.y(), b);
                    let conj = c.mul(yb, c.mul(c.elem(a as i64, 0), c.inverse(yb)));
                    assert_eq!(conj, c.elem(c.conjugate_by_y_power(a, b) as i64, 0));
                }
            }
        }
    }

    #[test]
    fn defining_relations() {
        for n in [6, 10, 14, 18, 22, 50, 54] {
            let c = ctx(n);
            assert_eq!(naive_power(&c, c.x(), n), c.identity());
            assert_eq!(naive_power(&c, c.y(), c.phi()), c.identity());
            let yxy = c.mul(c.mul(c.y(), c.x()), c.inverse(c.y()));
            assert_eq!(yxy, c.elem(c.k() as i64, 0));
        }
    }

    #[test]
    fn order_examples() {
        let c = ctx(18);
        assert_eq!(c.element_order(c.identity()), 1);
        assert_eq!(c.element_order(c.x()), 18);
        assert_eq!(c.element_order(c.y()), 6);
    }

    #[test]
    fn center_is_identity_and_involution() {
        for n in [6, 10, 14, 18, 22] {
            let c = ctx(n);
            assert_eq!(
                c.center(),
                vec![c.identity(), c.elem(n as i64 / 2, 0)],
                "n={n}"
            );
        }
    }

    #[test]
    fn inversion_is_a_power_of_y() {
        for n in [6, 10, 14, 18, 22, 26, 34, 38, 50, 54, 98] {
            let c = ctx(n);
            assert_eq!(
                numtheory::mod_pow(c.k() as i64, c.phi() / 2, n).unwrap(),
                n - 1
            );
        }
    }

    #[test]
    fn enumeration() {
        let c = ctx(6);
        let all: Vec<_> = c.elements().collect();
        assert_eq!(all.len(), 12);
        assert_eq!(&all[..3], &[c.elem(0, 0), c.elem(0, 1), c.elem(1, 0)]);
        assert_eq!(ctx(18).elements().count(), 108);
        assert_eq!(ctx(50).elements().count(), 1000);
        for (i, g) in all.iter().enumerate() {
            assert_eq!(c.index_of(*g), i);
            assert_eq!(c.element_at(i), *g);
        }
    }

    #[test]
    fn associativity_small_exhaustive() {
        for n in [6, 10] {
            let c = ctx(n);
            let all: Vec<_> = c.elements().collect();
            for &g in &all {
                for &h in &all {
                    for &l in &all {
                        assert_eq!(c.mul(c.mul(g, h), l), c.mul(g, c.mul(h, l)));
                    }
                }
            }
        }
    }

    #[test]
    fn k_log_inverts_k_pow() {
        let c = ctx(54);
        for j in 0..c.phi() {
            assert_eq!(c.k_log(c.k_pow(j)), Some(j));
        }
        assert_eq!(c.k_log(3), None);
    }
}
