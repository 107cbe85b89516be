use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::CayleyGroup;

/// Sources up to this size get an exhaustive homomorphism check.
pub const EXHAUSTIVE_HOM_LIMIT: usize = 200;
/// Random pairs checked for larger sources.
pub const SAMPLED_HOM_PAIRS: usize = 4096;

/// A homomorphism between two Cayley groups, as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    mapping: Vec<usize>,
    target_size: usize,
}

impl GroupHom {
    /// Checks `mapping(1) = 1` and `mapping(gh) = mapping(g)·mapping(h)`,
    /// on every pair for small sources and on a fixed-seed sample otherwise.
    pub fn new(source: &CayleyGroup, target: &CayleyGroup, mapping: Vec<usize>) -> Result<Self> {
        if mapping.len() != source.size() {
            return Err(Error::Consistency(format!(
                "mapping has {} entries for a source of size {}",
                mapping.len(),
                source.size()
            )));
        }
        if let Some(&v) = mapping.iter().find(|&&v| v >= target.size()) {
            return Err(Error::Consistency(format!("image {v} out of range")));
        }
        if mapping[source.identity()] != target.identity() {
            return Err(Error::Consistency(
                "identity is not mapped to identity".into(),
            ));
        }
        let respects =
            |a: usize, b: usize| mapping[source.mul(a, b)] == target.mul(mapping[a], mapping[b]);
        let n = source.size();
        let violation = if n <= EXHAUSTIVE_HOM_LIMIT {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| !respects(a, b))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..SAMPLED_HOM_PAIRS)
                .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
                .find(|&(a, b)| !respects(a, b))
        };
        if let Some((a, b)) = violation {
            return Err(Error::Consistency(format!(
                "not a homomorphism at ({}, {})",
                source.label(a),
                source.label(b)
            )));
        }
        Ok(Self {
            mapping,
            target_size: target.size(),
        })
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn into_mapping(self) -> Vec<usize> {
        self.mapping
    }

    #[inline]
    pub fn image(&self, a: usize) -> usize {
        self.mapping[a]
    }

    pub fn is_bijective(&self) -> bool {
        if self.mapping.len() != self.target_size {
            return false;
        }
        let mut hit = vec![false; self.target_size];
        self.mapping
            .iter()
            .all(|&v| !std::mem::replace(&mut hit[v], true))
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| i == v)
    }
}
