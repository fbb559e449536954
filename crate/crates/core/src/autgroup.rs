//! The automorphism group of GQ(2,4), generated by the 36 orthogonal
//! transvections of the ambient O⁻(6,2) action and closed by breadth-first
//! composition; orbit computations on points, hyperplanes and spreads.
//!
//! Elements are stored as explicit length-27 image arrays (51840 x 27
//! bytes), so no stabilizer-chain machinery is needed at this scale.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::incidence::PointLineGeometry;
use crate::models::QuadricModel;
use crate::pointset::PointSet;
use crate::{Error, Result};

/// Abort closure if the element set grows past this; a modeling bug would
/// otherwise exhaust memory before failing.
pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;

/// A permutation of the points of a fixed geometry, kept as an image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPermutation {
    images: Vec<u8>,
}

impl PointPermutation {
    /// Build and verify: must be a bijection mapping every line of `g` onto
    /// a line of `g`.
    pub fn new(g: &PointLineGeometry, images: Vec<u8>) -> Result<PointPermutation> {
        let n = g.point_count();
        if images.len() != n {
            return Err(Error::NotAnAutomorphism);
        }
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::NotAnAutomorphism);
            }
            seen[img] = true;
        }
        let perm = PointPermutation { images };
        if !perm.preserves_lines(g) {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(perm)
    }

    pub fn identity(n: usize) -> PointPermutation {
        PointPermutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn apply_set(&self, set: PointSet) -> PointSet {
        PointSet::from_indices(set.iter().map(|p| self.apply(p)))
    }

    /// self after other: (self ∘ other)(p) = self(other(p)).
    pub fn compose(&self, other: &PointPermutation) -> PointPermutation {
        PointPermutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> PointPermutation {
        let mut images = vec![0u8; self.images.len()];
        for (p, &img) in self.images.iter().enumerate() {
            images[img as usize] = p as u8;
        }
        PointPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &img)| p == img as usize)
    }

    pub fn preserves_lines(&self, g: &PointLineGeometry) -> bool {
        g.lines().iter().all(|line| g.is_line(self.apply_set(*line)))
    }
}

/// One orthogonal transvection x ↦ x + b(x,v)·v per off-quadric vector v
/// (Q(v) = 1), restricted to the 27 quadric points; each is a verified
/// involutory automorphism of the geometry.
pub fn transvection_generators(model: &QuadricModel) -> Result<Vec<PointPermutation>> {
    let duals = crate::fflinalg::enumerate_projective_points(6, 2)?;
    let mut generators = Vec::new();
    for v in duals {
        if model.form.evaluate(&v) == 0 {
            continue;
        }
        let images: Vec<u8> = model
            .point_vectors
            .iter()
            .map(|x| {
                let image = if model.polar.evaluate(x, &v) == 1 {
                    x.add(&v)
                } else {
                    x.clone()
                };
                model
                    .point_of_vector(&image)
                    .map(|i| i as u8)
                    .ok_or(Error::MissingDictionary)
            })
            .collect::<Result<_>>()?;
        generators.push(PointPermutation::new(&model.geometry, images)?);
    }
    Ok(generators)
}

/// The closure of a generator set under composition, with a deterministic
/// final ordering.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    elements: Vec<PointPermutation>,
    generators: Vec<PointPermutation>,
}

impl PermutationGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[PointPermutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[PointPermutation] {
        &self.generators
    }

    pub fn contains(&self, perm: &PointPermutation) -> bool {
        self.elements.binary_search(perm).is_ok()
    }

    /// Identity and inverse membership, re-checked from the element list.
    pub fn verify_group_axioms(&self) -> bool {
        let n = self.elements.first().map_or(0, |e| e.len());
        self.contains(&PointPermutation::identity(n))
            && self.elements.iter().all(|e| self.contains(&e.inverse()))
    }

    pub fn orbit_of_point(&self, p: usize) -> PointSet {
        PointSet::from_indices(self.elements.iter().map(|e| e.apply(p)))
    }

    pub fn orbit_of_set(&self, set: PointSet) -> Vec<PointSet> {
        let mut orbit: Vec<PointSet> =
            self.elements.iter().map(|e| e.apply_set(set)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// Elements fixing point `p`.
    pub fn point_stabilizer_order(&self, p: usize) -> usize {
        self.elements.iter().filter(|e| e.apply(p) == p).count()
    }
}

/// Breadth-first closure of the generators under composition. Errors if
/// the element count exceeds `bound`.
pub fn group_closure(
    generators: &[PointPermutation],
    bound: usize,
) -> Result<PermutationGroup> {
    let n = generators
        .first()
        .map(|g| g.len())
        .expect("nonempty generator list");
    let identity = PointPermutation::identity(n);
    let mut seen: HashSet<PointPermutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(current) = queue.pop_front() {
        for gen in generators {
            let next = gen.compose(&current);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= bound {
                return Err(Error::ClosureBoundExceeded(bound));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let mut elements: Vec<PointPermutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(PermutationGroup {
        elements,
        generators: generators.to_vec(),
    })
}

/// Orbit partition of a family of point sets under the group generated by
/// `generators`; returns sorted index lists, ordered by smallest member.
pub fn set_orbits(generators: &[PointPermutation], sets: &[PointSet]) -> Vec<Vec<usize>> {
    let index: HashMap<PointSet, usize> =
        sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut assigned = vec![false; sets.len()];
    let mut orbits = Vec::new();
    for start in 0..sets.len() {
        if assigned[start] {
            continue;
        }
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut queue = VecDeque::from([sets[start]]);
        while let Some(current) = queue.pop_front() {
            for gen in generators {
                let image = gen.apply_set(current);
                let &i = index
                    .get(&image)
                    .expect("the family is closed under the group action");
                if !assigned[i] {
                    assigned[i] = true;
                    orbit.push(i);
                    queue.push_back(image);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Spread orbit partition, with the orbit containing the classical
/// reference spread tagged.
#[derive(Debug, Clone)]
pub struct SpreadOrbits {
    /// Spread indices per orbit (each sorted), ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    /// Index into `orbits` of the classical orbit.
    pub classical_orbit: usize,
}

/// Partition `spreads` (line-index lists into `g`) into orbits by applying
/// every group element to each spread's canonical form (the sorted list of
/// line masks). Exactly two orbits must appear, and `classical` (a spread
/// given as line masks, e.g. the Payne spread carried over by an
/// isomorphism) must land in one of them.
pub fn spread_orbits(
    group: &PermutationGroup,
    g: &PointLineGeometry,
    spreads: &[Vec<usize>],
    classical: &[PointSet],
) -> Result<SpreadOrbits> {
    let canonical = |mut masks: Vec<PointSet>| -> Vec<PointSet> {
        masks.sort_unstable();
        masks
    };
    let as_masks: Vec<Vec<PointSet>> = spreads
        .iter()
        .map(|s| canonical(s.iter().map(|&i| g.line(i)).collect()))
        .collect();
    let index: HashMap<&[PointSet], usize> = as_masks
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();

    let mut orbit_of = vec![usize::MAX; spreads.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..spreads.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let orbit_id = orbits.len();
        let mut members = Vec::new();
        for element in group.elements() {
            let image = canonical(
                as_masks[start]
                    .iter()
                    .map(|&line| element.apply_set(line))
                    .collect(),
            );
            let &i = index.get(image.as_slice()).ok_or_else(|| {
                Error::ClassificationConflict(
                    "group element maps a spread outside the enumerated family".into(),
                )
            })?;
            if orbit_of[i] == usize::MAX {
                orbit_of[i] = orbit_id;
                members.push(i);
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }

    if orbits.len() != 2 {
        return Err(Error::ClassificationConflict(format!(
            "expected exactly 2 spread orbits, found {}",
            orbits.len()
        )));
    }
    let classical_key = canonical(classical.to_vec());
    let &classical_idx = index.get(classical_key.as_slice()).ok_or_else(|| {
        Error::ClassificationConflict("classical spread not among enumerated spreads".into())
    })?;
    Ok(SpreadOrbits {
        classical_orbit: orbit_of[classical_idx],
        orbits,
    })
}
