use crate::error::{Error, Result};
use crate::holomorph::HolContext;
use crate::numtheory::{self, gcd, mul_mod};

use super::CayleyGroup;

/// Largest `n` accepted by [`build_general_holomorph`].
pub const GENERAL_HOLOMORPH_MAX_N: u64 = 60;

/// The Cayley table of `Hol(C_n)` from [`HolContext::mul`], indexed like
/// [`HolContext::elements`], with generators `[x, y]`.
pub fn build_holomorph_table(ctx: &HolContext) -> CayleyGroup {
    let elems: Vec<_> = ctx.elements().collect();
    let size = elems.len();
    let mut table = Vec::with_capacity(size * size);
    for &g in &elems {
        table.extend(elems.iter().map(|&h| ctx.index_of(ctx.mul(g, h))));
    }
    let labels = elems.iter().map(|g| g.to_string()).collect();
    let generators = vec![ctx.index_of(ctx.x()), ctx.index_of(ctx.y())];
    CayleyGroup::new(
        size,
        table,
        ctx.index_of(ctx.identity()),
        generators,
        Some(labels),
    )
    .expect("the semidirect product law defines a group")
}

/// The dihedral group of order `2n` on elements `r^i s^f`, indexed `f·n + i`,
/// with generators `[r, s]`.
pub fn build_dihedral(n: u64) -> Result<CayleyGroup> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "dihedral groups need n ≥ 3, got {n}"
        )));
    }
    let n = n as usize;
    let size = 2 * n;
    let split = |idx: usize| (idx % n, idx / n);
    let mut table = Vec::with_capacity(size * size);
    for g in 0..size {
        let (i1, f1) = split(g);
        for h in 0..size {
            let (i2, f2) = split(h);
            let i = if f1 == 0 {
                (i1 + i2) % n
            } else {
                (i1 + n - i2) % n
            };
            table.push((f1 ^ f2) * n + i);
        }
    }
    let labels = (0..size)
        .map(|idx| match split(idx) {
            (i, 0) => format!("r^{i}"),
            (i, _) => format!("r^{i} s"),
        })
        .collect();
    CayleyGroup::new(size, table, 0, vec![1, n], Some(labels))
}

/// `Hol(C_n) = C_n ⋊ (Z/nZ)^*` for any `2 ≤ n ≤ 60`, with the full unit group
/// acting by multiplication: `(a, u)(b, v) = (a + u·b, u·v)`.
///
/// Elements are indexed `a·φ(n) + i` where `i` is the position of `u` among
/// the units in ascending order. Generators are `x = (1, 1)` followed by
/// `(0, g)` for each `g` in [`numtheory::unit_group_basis`], matching
/// [`Presentation::general_holomorph`](super::Presentation::general_holomorph).
pub fn build_general_holomorph(n: u64) -> Result<CayleyGroup> {
    if !(2..=GENERAL_HOLOMORPH_MAX_N).contains(&n) {
        return Err(Error::OutOfRange {
            value: n,
            min: 2,
            max: GENERAL_HOLOMORPH_MAX_N,
        });
    }
    let units: Vec<u64> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    let phi = units.len();
    let unit_pos = |u: u64| units.binary_search(&u).expect("product of units is a unit");
    let size = n as usize * phi;
    let mut table = Vec::with_capacity(size * size);
    for g in 0..size {
        let (a1, u1) = ((g / phi) as u64, units[g % phi]);
        for h in 0..size {
            let (a2, u2) = ((h / phi) as u64, units[h % phi]);
            let a = (a1 + mul_mod(u1, a2, n)) % n;
            table.push(a as usize * phi + unit_pos(mul_mod(u1, u2, n)));
        }
    }
    let labels = (0..size)
        .map(|idx| format!("x^{} [u={}]", idx / phi, units[idx % phi]))
        .collect();
    let identity = unit_pos(1);
    let mut generators = vec![phi + identity];
    for (g, _) in numtheory::unit_group_basis(n)? {
        generators.push(unit_pos(g));
    }
    CayleyGroup::new(size, table, identity, generators, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holomorph_table_matches_mul() {
        let ctx = HolContext::new(6, None).unwrap();
        let g = build_holomorph_table(&ctx);
        assert_eq!(g.size(), 12);
        assert_eq!(g.identity(), 0);
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(
                    g.mul(ctx.index_of(a), ctx.index_of(b)),
                    ctx.index_of(ctx.mul(a, b))
                );
            }
        }
        assert_eq!(g.label(ctx.index_of(ctx.elem(3, 1))), "x^3 y^1");
    }

    #[test]
    fn dihedral_examples() {
        let d3 = build_dihedral(3).unwrap();
        assert_eq!(d3.size(), 6);
        assert!(!d3.is_abelian());
        let d5 = build_dihedral(5).unwrap();
        let involutions = (0..10).filter(|&g| g != d5.identity() && d5.mul(g, g) == d5.identity());
        assert_eq!(involutions.count(), 5);
        assert_eq!(build_dihedral(9).unwrap().size(), 18);
        assert!(build_dihedral(2).is_err());
    }

    #[test]
    fn general_holomorph_sizes() {
        assert_eq!(build_general_holomorph(5).unwrap().size(), 20);
        assert_eq!(build_general_holomorph(9).unwrap().size(), 54);
        assert_eq!(build_general_holomorph(8).unwrap().size(), 32);
        assert_eq!(build_general_holomorph(2).unwrap().size(), 2);
        assert!(build_general_holomorph(1).is_err());
        assert!(build_general_holomorph(61).is_err());
    }

    #[test]
    fn general_holomorph_generators_generate() {
        for n in 2..=30 {
            let g = build_general_holomorph(n).unwrap();
            assert_eq!(g.closure(g.generators()).len(), g.size(), "n = {n}");
        }
    }
}
