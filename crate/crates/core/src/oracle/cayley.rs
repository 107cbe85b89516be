use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables up to this size get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 200;
/// Number of random triples checked above [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`].
pub const SAMPLED_TRIPLES: usize = 100_000;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..size`. Construction rejects anything that is
/// not a group: the identity row and column must be the identity permutation,
/// every row and column must be a permutation, and the product must be
/// associative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CayleyGroupJson", into = "CayleyGroupJson")]
pub struct CayleyGroup {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    inverses: Vec<usize>,
}

/// Wire form: `{size, identity, generators, table (row-major), labels}`.
#[derive(Serialize, Deserialize)]
struct CayleyGroupJson {
    size: usize,
    identity: usize,
    generators: Vec<usize>,
    table: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<CayleyGroupJson> for CayleyGroup {
    type Error = Error;

    fn try_from(raw: CayleyGroupJson) -> Result<Self> {
        CayleyGroup::new(
            raw.size,
            raw.table,
            raw.identity,
            raw.generators,
            raw.labels,
        )
    }
}

impl From<CayleyGroup> for CayleyGroupJson {
    fn from(g: CayleyGroup) -> Self {
        Self {
            size: g.size,
            identity: g.identity,
            generators: g.generators,
            table: g.table,
            labels: g.labels,
        }
    }
}

impl CayleyGroup {
    /// Validates and wraps a row-major table where `table[a * size + b] = a·b`.
    pub fn new(
        size: usize,
        table: Vec<usize>,
        identity: usize,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::Consistency(msg));
        if size == 0 {
            return bad("a group has at least one element".into());
        }
        if table.len() != size * size {
            return bad(format!(
                "table has {} entries, expected {}",
                table.len(),
                size * size
            ));
        }
        if identity >= size {
            return bad(format!("identity {identity} out of range"));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= size) {
            return bad(format!("generator {g} out of range"));
        }
        if labels.as_ref().is_some_and(|l| l.len() != size) {
            return bad("labels must name every element".into());
        }
        if let Some(&v) = table.iter().find(|&&v| v >= size) {
            return bad(format!("table entry {v} out of range"));
        }
        for a in 0..size {
            if table[identity * size + a] != a || table[a * size + identity] != a {
                return bad(format!("{identity} is not a two-sided identity for {a}"));
            }
        }
        let mut seen = vec![usize::MAX; size];
        for a in 0..size {
            for b in 0..size {
                let v = table[a * size + b];
                if seen[v] == a {
                    return bad(format!("row {a} repeats {v}"));
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..size {
            for a in 0..size {
                let v = table[a * size + b];
                if seen[v] == b {
                    return bad(format!("column {b} repeats {v}"));
                }
                seen[v] = b;
            }
        }

        let inverses = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| table[a * size + b] == identity)
                    .expect("Latin square row")
            })
            .collect();
        let group = Self {
            size,
            table,
            identity,
            generators,
            labels,
            inverses,
        };
        if let Some((a, b, c)) = group.associativity_violation() {
            return bad(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})"));
        }
        Ok(group)
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let fails = |a, b, c| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        let n = self.size;
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if fails(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..SAMPLED_TRIPLES)
                .map(|_| {
                    (
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                    )
                })
                .find(|&(a, b, c)| fails(a, b, c))
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("#{a}"),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, m: usize) -> usize {
        (0..m).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut t = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            t += 1;
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`, as a sorted index list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen: HashSet<usize> = HashSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if seen.insert(b) {
                    frontier.push(b);
                }
            }
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Replaces the designated generators.
    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self> {
        if let Some(&g) = generators.iter().find(|&&g| g >= self.size) {
            return Err(Error::Consistency(format!("generator {g} out of range")));
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
