//! Exhaustive homomorphism search driven by a group presentation.
//!
//! If a presentation is complete for the source group (the group it presents
//! has exactly `|source|` elements), any assignment of generator images that
//! kills every relator extends to a unique homomorphism. The search therefore
//! only enumerates generator images, filters them through the relators, and
//! extends survivors along a breadth-first spanning tree of the Cayley graph.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::{CayleyGroup, GroupHom, Presentation};

/// Breadth-first spanning tree of the Cayley graph over the designated
/// generators: each non-identity element is `parent · generator`.
struct SpanningTree {
    order: Vec<usize>,
    parent: Vec<(usize, usize)>,
}

impl SpanningTree {
    fn build(group: &CayleyGroup) -> Result<Self> {
        let size = group.size();
        let mut parent = vec![(usize::MAX, usize::MAX); size];
        let mut seen = vec![false; size];
        seen[group.identity()] = true;
        let mut order = Vec::with_capacity(size);
        let mut head = 0;
        let mut queue = vec![group.identity()];
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for (slot, &g) in group.generators().iter().enumerate() {
                let b = group.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = (a, slot);
                    order.push(b);
                    queue.push(b);
                }
            }
        }
        if order.len() + 1 != size {
            return Err(Error::Consistency(format!(
                "designated generators span {} of {} elements",
                order.len() + 1,
                size
            )));
        }
        Ok(Self { order, parent })
    }

    /// The homomorphism determined by generator images.
    fn extend(&self, source: &CayleyGroup, target: &CayleyGroup, images: &[usize]) -> Vec<usize> {
        let mut mapping = vec![0; source.size()];
        mapping[source.identity()] = target.identity();
        for &b in &self.order {
            let (a, slot) = self.parent[b];
            mapping[b] = target.mul(mapping[a], images[slot]);
        }
        mapping
    }
}

/// Checks that `group`'s designated generators realize `pres` and that the
/// presentation is certified complete for it.
fn certify(group: &CayleyGroup, pres: &Presentation) -> Result<SpanningTree> {
    if pres.generator_count() != group.generators().len() {
        return Err(Error::Consistency(format!(
            "presentation has {} generators, group designates {}",
            pres.generator_count(),
            group.generators().len()
        )));
    }
    if !pres.relators_hold(group, group.generators()) {
        return Err(Error::Consistency(
            "the group's generators do not satisfy the relators".into(),
        ));
    }
    match pres.expected_order() {
        Some(order) if order == group.size() => {}
        Some(order) => {
            return Err(Error::Consistency(format!(
                "presentation has order {order}, group has order {}",
                group.size()
            )))
        }
        None => {
            return Err(Error::Consistency(
                "presentation order unknown; completeness cannot be certified".into(),
            ))
        }
    }
    SpanningTree::build(group)
}

struct Search<'a> {
    source: &'a CayleyGroup,
    target: &'a CayleyGroup,
    pres: &'a Presentation,
    tree: SpanningTree,
    candidates: Vec<Vec<usize>>,
    /// Relators whose highest generator index is `level`, checked as soon as
    /// that generator has an image.
    relators_at_level: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(
        source: &'a CayleyGroup,
        target: &'a CayleyGroup,
        pres: &'a Presentation,
    ) -> Result<Self> {
        let tree = certify(source, pres)?;
        let target_orders: Vec<usize> = (0..target.size())
            .map(|a| target.element_order(a))
            .collect();
        let candidates = source
            .generators()
            .iter()
            .map(|&g| {
                let order = source.element_order(g);
                (0..target.size())
                    .filter(|&t| target_orders[t] == order)
                    .collect()
            })
            .collect();
        let mut relators_at_level = vec![Vec::new(); pres.generator_count()];
        for (i, word) in pres.relators().iter().enumerate() {
            if let Some(top) = word.iter().map(|l| l.generator).max() {
                relators_at_level[top].push(i);
            }
        }
        Ok(Self {
            source,
            target,
            pres,
            tree,
            candidates,
            relators_at_level,
        })
    }

    fn level_ok(&self, level: usize, images: &[usize]) -> bool {
        self.relators_at_level[level].iter().all(|&r| {
            Presentation::evaluate(self.target, images, &self.pres.relators()[r])
                == self.target.identity()
        })
    }

    /// Depth-first over generator images in ascending order; returns `true`
    /// once `first_only` has a hit.
    fn dfs(&self, images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, first_only: bool) -> bool {
        let level = images.len();
        if level == self.candidates.len() {
            let mapping = self.tree.extend(self.source, self.target, images);
            if is_bijection(&mapping, self.target.size()) {
                out.push(mapping);
                return first_only;
            }
            return false;
        }
        for &c in &self.candidates[level] {
            images.push(c);
            if self.level_ok(level, images) && self.dfs(images, out, first_only) {
                images.pop();
                return true;
            }
            images.pop();
        }
        false
    }

    fn run(&self, first_only: bool) -> Vec<Vec<usize>> {
        let Some(first) = self.candidates.first() else {
            // trivial source: the only map sends the identity to the identity
            let mapping = vec![self.target.identity(); self.source.size()];
            return if is_bijection(&mapping, self.target.size()) {
                vec![mapping]
            } else {
                vec![]
            };
        };
        let branch = |&c: &usize| {
            let mut images = vec![c];
            let mut out = Vec::new();
            if self.level_ok(0, &images) {
                self.dfs(&mut images, &mut out, first_only);
            }
            out
        };
        if first_only {
            first
                .par_iter()
                .find_map_first(|c| branch(c).into_iter().next())
                .into_iter()
                .collect()
        } else {
            first.par_iter().flat_map_iter(branch).collect()
        }
    }
}

fn is_bijection(mapping: &[usize], target_size: usize) -> bool {
    if mapping.len() != target_size {
        return false;
    }
    let mut hit = vec![false; target_size];
    mapping
        .iter()
        .all(|&v| !std::mem::replace(&mut hit[v], true))
}

/// Every automorphism of `group`, found by searching generator images that
/// satisfy `pres` and extend to bijections. Results are ordered by the images
/// of the generators, ascending.
pub fn enumerate_automorphisms_bruteforce(
    group: &CayleyGroup,
    pres: &Presentation,
) -> Result<Vec<GroupHom>> {
    Search::new(group, group, pres)?
        .run(false)
        .into_iter()
        .map(|m| GroupHom::new(group, group, m))
        .collect()
}

/// The first isomorphism `source → target` in search order, if one exists.
pub fn find_isomorphism(
    source: &CayleyGroup,
    target: &CayleyGroup,
    source_pres: &Presentation,
) -> Result<Option<GroupHom>> {
    if source.size() != target.size() {
        return Err(Error::Domain(format!(
            "groups of orders {} and {} cannot be isomorphic",
            source.size(),
            target.size()
        )));
    }
    Search::new(source, target, source_pres)?
        .run(true)
        .into_iter()
        .next()
        .map(|m| GroupHom::new(source, target, m))
        .transpose()
}

/// The multiplication table of `auts` under composition, where entry
/// `(i, j)` is the index of `auts[i] ∘ auts[j]` (`auts[j]` applied first).
pub fn aut_group_table(group: &CayleyGroup, auts: &[GroupHom]) -> Result<CayleyGroup> {
    let size = auts.len();
    // Automorphisms are pinned down by the images of a generating set.
    let spans =
        !group.generators().is_empty() && group.closure(group.generators()).len() == group.size();
    let key_points: Vec<usize> = if spans {
        group.generators().to_vec()
    } else {
        (0..group.size()).collect()
    };
    let key = |f: &dyn Fn(usize) -> usize| key_points.iter().map(|&p| f(p)).collect::<Vec<_>>();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::with_capacity(size);
    for (i, a) in auts.iter().enumerate() {
        if index.insert(key(&|p| a.image(p)), i).is_some() {
            return Err(Error::Consistency(format!(
                "automorphism {i} is listed twice"
            )));
        }
    }
    let identity = auts
        .iter()
        .position(GroupHom::is_identity)
        .ok_or_else(|| Error::Consistency("identity automorphism missing".into()))?;
    let mut table = Vec::with_capacity(size * size);
    for a in auts {
        for b in auts {
            let composed = key(&|p| a.image(b.image(p)));
            let &idx = index.get(&composed).ok_or_else(|| {
                Error::Consistency("automorphisms not closed under composition".into())
            })?;
            table.push(idx);
        }
    }
    CayleyGroup::new(size, table, identity, Vec::new(), None)
}

/// Elements commuting with every element, ascending.
pub fn center_bruteforce(group: &CayleyGroup) -> Vec<usize> {
    let n = group.size();
    (0..n)
        .filter(|&g| (0..n).all(|h| group.mul(g, h) == group.mul(h, g)))
        .collect()
}

/// The distinct conjugation maps `h ↦ g h g⁻¹`, ascending.
pub fn inner_automorphisms(group: &CayleyGroup) -> Vec<Vec<usize>> {
    let n = group.size();
    let mut maps: Vec<Vec<usize>> = (0..n)
        .map(|g| {
            let g_inv = group.inverse(g);
            (0..n).map(|h| group.mul(group.mul(g, h), g_inv)).collect()
        })
        .collect();
    maps.sort_unstable();
    maps.dedup();
    maps
}
