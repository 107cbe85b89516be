//! Integer and modular arithmetic on `u64` residues.
//!
//! Products are formed in `u128` before reduction, so every modulus up to
//! `u64::MAX` is safe. Factorization is by trial division and is bounded by
//! [`FACTORIZE_LIMIT`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest integer accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = 1 << 40;

/// Prime factorization as `(prime, exponent)` pairs, ascending by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn exponent_of(&self, prime: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(p, _)| p == prime)
            .map_or(0, |&(_, e)| e)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors `m` by trial division. `factorize(1)` is the empty product.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m == 0 || m > FACTORIZE_LIMIT {
        return Err(Error::OutOfRange {
            value: m,
            min: 1,
            max: FACTORIZE_LIMIT,
        });
    }
    let mut rest = m;
    let mut pairs = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m).is_ok_and(|f| f.pairs() == [(m, 1)])
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduces a signed integer into `[0, modulus)`.
pub fn reduce(value: i64, modulus: u64) -> u64 {
    (value as i128).rem_euclid(modulus as i128) as u64
}

#[inline]
pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 + b as u128) % modulus as u128) as u64
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn mod_pow(base: i64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::Domain(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    Ok(pow_residue(reduce(base, modulus), exp, modulus))
}

/// Square-and-multiply on an already reduced base; `modulus` must be ≥ 1.
pub(crate) fn pow_residue(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

/// Euler's totient, computed from the factorization of `m`.
pub fn totient(m: u64) -> Result<u64> {
    let f = factorize(m)?;
    Ok(f.pairs()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product())
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    let f = factorize(m)?;
    let mut out = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Least `t ≥ 1` with `k^t ≡ 1 (mod m)`, found among the divisors of `φ(m)`.
pub fn multiplicative_order(k: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    let residue = reduce(k, m);
    if gcd(residue, m) != 1 {
        return Err(Error::NotAUnit { k, modulus: m });
    }
    let phi = totient(m)?;
    let order = divisors(phi)?
        .into_iter()
        .find(|&d| pow_residue(residue, d, m) == 1)
        .expect("k^φ(m) ≡ 1 for every unit k");
    Ok(order)
}

/// Splits `n = 2·p^e` (p an odd prime, e ≥ 1) into `(p, e)`.
pub fn twice_odd_prime_power(n: u64) -> Result<(u64, u32)> {
    let f = factorize(n)?;
    match f.pairs() {
        [(2, 1), (p, e)] => Ok((*p, *e)),
        _ => Err(Error::Shape {
            n,
            factorization: f.to_string(),
        }),
    }
}

/// Least `k` in `(1, m)` whose multiplicative order modulo `m = 2p^e` is `φ(m)`.
pub fn least_primitive_root(m: u64) -> Result<u64> {
    twice_odd_prime_power(m)?;
    let phi = totient(m)?;
    (2..m)
        .filter(|&k| gcd(k, m) == 1)
        .find(|&k| multiplicative_order(k as i64, m).is_ok_and(|t| t == phi))
        .ok_or_else(|| Error::Consistency(format!("no primitive root found modulo {m}")))
}

/// `1 + r + r² + … + r^{terms-1} (mod modulus)`, accumulated term by term.
///
/// Never divides by `r - 1`, which is usually not invertible modulo `modulus`.
pub fn geometric_sum_mod(ratio: u64, terms: u64, modulus: u64) -> u64 {
    let ratio = ratio % modulus;
    let mut sum = 0;
    let mut term = 1 % modulus;
    for _ in 0..terms {
        sum = add_mod(sum, term, modulus);
        term = mul_mod(term, ratio, modulus);
    }
    sum
}

/// Whether `k^{p^{e-1}} ≡ 1 (mod p^e)`, for `k ≡ 1 (mod p)`.
///
/// This always holds; the predicate exists so the congruence can be checked
/// over whole ranges of `k`, `p` and `e`.
pub fn power_congruence_holds(k: i64, p: u64, e: u32) -> Result<bool> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    if e == 0 {
        return Err(Error::Domain("exponent e must be positive".into()));
    }
    if reduce(k, p) != 1 {
        return Err(Error::Domain(format!(
            "{k} is not congruent to 1 modulo {p}"
        )));
    }
    let pe = p
        .checked_pow(e)
        .filter(|&pe| pe <= FACTORIZE_LIMIT)
        .ok_or_else(|| Error::Domain(format!("{p}^{e} is too large")))?;
    Ok(mod_pow(k, p.pow(e - 1), pe)? == 1)
}

/// Divisibility facts about a primitive root `k` modulo `n = 2p^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimitiveRootProfile {
    pub p_divides_k_minus_1: bool,
    pub gcd_n_k_minus_1: u64,
    /// `1 + k + … + k^{φ(n)-1} mod n`.
    pub geometric_sum_mod_n: u64,
}

impl PrimitiveRootProfile {
    /// The profile every primitive root modulo `2p^e` has.
    pub const EXPECTED: Self = Self {
        p_divides_k_minus_1: false,
        gcd_n_k_minus_1: 2,
        geometric_sum_mod_n: 0,
    };
}

/// Computes the [`PrimitiveRootProfile`] of `k` modulo `n = 2p^e`.
pub fn primitive_root_profile(k: i64, n: u64) -> Result<PrimitiveRootProfile> {
    let (p, _) = twice_odd_prime_power(n)?;
    let phi = totient(n)?;
    let order = multiplicative_order(k, n)?;
    if order != phi {
        return Err(Error::Domain(format!(
            "{k} has order {order} modulo {n}, not φ({n}) = {phi}"
        )));
    }
    let k_minus_1 = reduce(k - 1, n);
    Ok(PrimitiveRootProfile {
        p_divides_k_minus_1: k_minus_1.is_multiple_of(p),
        gcd_n_k_minus_1: gcd(n, k_minus_1),
        geometric_sum_mod_n: geometric_sum_mod(reduce(k, n), phi, n),
    })
}

/// Generators of `(Z/nZ)^*` as a direct product of cyclic groups, each given
/// as `(generator, order)`. Trivial factors are omitted, so `n ≤ 2` yields an
/// empty basis.
///
/// One factor per odd prime power (a lifted primitive root), plus `-1` and
/// `5` for the 2-part when `8 | n`.
pub fn unit_group_basis(n: u64) -> Result<Vec<(u64, u64)>> {
    let f = factorize(n)?;
    let mut basis = Vec::new();
    for &(p, e) in f.pairs() {
        let q = p.pow(e);
        let cofactor = n / q;
        let mut local: Vec<(u64, u64)> = Vec::new();
        if p == 2 {
            match e {
                1 => {}
                2 => local.push((3, 2)),
                _ => {
                    local.push((q - 1, 2));
                    local.push((5, q / 4));
                }
            }
        } else {
            let phi_q = q / p * (p - 1);
            let g = (2..q)
                .find(|&g| {
                    gcd(g, q) == 1 && multiplicative_order(g as i64, q).is_ok_and(|t| t == phi_q)
                })
                .expect("odd prime powers have primitive roots");
            local.push((g, phi_q));
        }
        for (g, order) in local {
            basis.push((crt_lift(g, q, cofactor), order));
        }
    }
    Ok(basis)
}

/// The residue modulo `q·cofactor` that is `≡ g (mod q)` and `≡ 1 (mod cofactor)`.
fn crt_lift(g: u64, q: u64, cofactor: u64) -> u64 {
    if cofactor == 1 {
        return g % q;
    }
    let inv = mod_inverse(cofactor % q, q).expect("coprime prime-power parts");
    let t = mul_mod(reduce(g as i64 - 1, q), inv, q);
    1 + cofactor * t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_totient(m: u64) -> u64 {
        (1..=m).filter(|&t| gcd(t, m) == 1).count() as u64
    }

    fn brute_order(k: u64, m: u64) -> u64 {
        let mut t = 1;
        let mut v = k % m;
        while v != 1 {
            v = v * k % m;
            t += 1;
        }
        t
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(18).unwrap().pairs(), &[(2, 1), (3, 2)]);
        assert_eq!(factorize(54).unwrap().pairs(), &[(2, 1), (3, 3)]);
        assert_eq!(factorize(18).unwrap().to_string(), "2·3^2");
    }

    #[test]
    fn factorize_range() {
        assert!(matches!(factorize(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            factorize(FACTORIZE_LIMIT + 1),
            Err(Error::OutOfRange { .. })
        ));
        let big = (1u64 << 32) + 15; // 4294967311 is prime
        assert_eq!(factorize(big).unwrap().pairs(), &[(big, 1)]);
        assert_eq!(factorize(1 << 32).unwrap().pairs(), &[(2, 32)]);
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(5, 0, 18).unwrap(), 1);
        assert_eq!(mod_pow(5, 3, 18).unwrap(), 17);
        assert_eq!(mod_pow(4, 3, 9).unwrap(), 1);
        assert_eq!(mod_pow(-1, 3, 18).unwrap(), 17);
        assert!(matches!(mod_pow(3, 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(18).unwrap(), 6);
        assert_eq!(totient(50).unwrap(), 20);
    }

    #[test]
    fn totient_matches_unit_count_up_to_ten_thousand() {
        for m in 1..=10_000 {
            assert_eq!(totient(m).unwrap(), brute_totient(m), "m = {m}");
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(1, 18).unwrap(), 1);
        assert_eq!(multiplicative_order(5, 18).unwrap(), 6);
        assert_eq!(multiplicative_order(7, 18).unwrap(), 3);
        assert!(matches!(
            multiplicative_order(4, 18),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn order_divides_totient_for_twice_odd_prime_powers() {
        for n in (6..=1000).filter(|&n| twice_odd_prime_power(n).is_ok()) {
            let phi = totient(n).unwrap();
            for k in (1..n).filter(|&k| gcd(k, n) == 1) {
                let t = multiplicative_order(k as i64, n).unwrap();
                assert_eq!(phi % t, 0);
                if n <= 200 {
                    assert_eq!(t, brute_order(k, n));
                }
            }
        }
    }

    #[test]
    fn least_primitive_root_examples() {
        assert_eq!(least_primitive_root(6).unwrap(), 5);
        assert_eq!(least_primitive_root(18).unwrap(), 5);
        assert_eq!(least_primitive_root(10).unwrap(), 3);
        assert!(matches!(least_primitive_root(12), Err(Error::Shape { .. })));
        assert!(matches!(least_primitive_root(9), Err(Error::Shape { .. })));
    }

    #[test]
    fn least_primitive_root_postcondition() {
        for n in (6..=2000).filter(|&n| twice_odd_prime_power(n).is_ok()) {
            let k = least_primitive_root(n).unwrap();
            assert!(1 < k && k < n);
            assert_eq!(brute_order(k, n), totient(n).unwrap());
            assert!((2..k).all(|s| gcd(s, n) != 1 || brute_order(s, n) != totient(n).unwrap()));
        }
    }

    #[test]
    fn shape_parsing() {
        assert_eq!(twice_odd_prime_power(54).unwrap(), (3, 3));
        assert_eq!(twice_odd_prime_power(6).unwrap(), (3, 1));
        for bad in [2, 4, 8, 12, 16, 20, 30, 9, 1] {
            assert!(
                matches!(twice_odd_prime_power(bad), Err(Error::Shape { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn power_congruence_examples() {
        assert!(power_congruence_holds(1, 3, 5).unwrap());
        assert!(power_congruence_holds(4, 3, 2).unwrap());
        assert!(power_congruence_holds(8, 7, 2).unwrap());
        assert!(matches!(
            power_congruence_holds(2, 3, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            power_congruence_holds(1, 9, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            power_congruence_holds(1, 2, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn power_congruence_over_small_primes() {
        for p in [3u64, 5, 7, 11] {
            for e in 1..=4 {
                for k in (1..p.pow(e)).step_by(p as usize) {
                    assert!(
                        power_congruence_holds(k as i64, p, e).unwrap(),
                        "k={k} p={p} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn profile_examples() {
        for (k, n) in [(5, 6), (5, 18), (3, 10)] {
            assert_eq!(
                primitive_root_profile(k, n).unwrap(),
                PrimitiveRootProfile::EXPECTED
            );
        }
        assert!(matches!(
            primitive_root_profile(7, 18),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            primitive_root_profile(3, 18),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn profile_for_all_primitive_roots_up_to_500() {
        for n in (6..=500).filter(|&n| twice_odd_prime_power(n).is_ok()) {
            let phi = totient(n).unwrap();
            for k in (2..n).filter(|&k| gcd(k, n) == 1 && brute_order(k, n) == phi) {
                assert_eq!(
                    primitive_root_profile(k as i64, n).unwrap(),
                    PrimitiveRootProfile::EXPECTED,
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn geometric_sum_by_hand() {
        // 1+5+7+17+13+11 = 54
        assert_eq!(geometric_sum_mod(5, 6, 18), 0);
        assert_eq!(geometric_sum_mod(5, 3, 18), 13);
        assert_eq!(geometric_sum_mod(3, 0, 10), 0);
    }

    #[test]
    fn mod_inverse_cases() {
        assert_eq!(mod_inverse(5, 18), Some(11));
        assert_eq!(mod_inverse(4, 18), None);
        assert_eq!(mod_inverse(1, 1), None);
    }

    #[test]
    fn unit_basis_generates_independently() {
        for n in 2..=120u64 {
            let basis = unit_group_basis(n).unwrap();
            let product: u64 = basis.iter().map(|&(_, o)| o).product();
            assert_eq!(product, totient(n).unwrap(), "n = {n}");
            // every unit has exactly one expression as ∏ g_i^{e_i}
            let mut seen = std::collections::BTreeSet::new();
            let mut exps = vec![0u64; basis.len()];
            loop {
                let v = basis.iter().zip(&exps).fold(1 % n, |acc, (&(g, _), &e)| {
                    mul_mod(acc, pow_residue(g, e, n), n)
                });
                assert!(seen.insert(v), "n = {n}: repeated {v}");
                let mut i = 0;
                while i < basis.len() {
                    exps[i] += 1;
                    if exps[i] < basis[i].1 {
                        break;
                    }
                    exps[i] = 0;
                    i += 1;
                }
                if i == basis.len() {
                    break;
                }
            }
            assert_eq!(seen.len() as u64, totient(n).unwrap());
        }
    }
}
