//! The bitangent route: E7 positive roots acting on 56 weights, the 28
//! bitangents, Steiner complexes and the 2-(28,12,11) design they form,
//! syzygetic/azygetic structure, the derived families D_p and D'_p, and the
//! induced 27-point geometry whose hyperplane family reproduces that of
//! GQ(2,4).
//!
//! Everything is exact integer arithmetic: weights are the 56 vectors
//! ±(3,3,-1,-1,-1,-1,-1,-1) (all positions of the two 3s), roots are kept
//! in doubled coordinates so the bipartition roots ½(Σ_A - Σ_B) are exact,
//! and all distance conditions become integer equality tests (squared
//! distances 32/64/96 standing for sides 1, √2, √3 in suitable units).

use std::collections::{BTreeSet, HashMap};

use crate::graphs::{srg_parameters, SimpleGraph};
use crate::hyperplanes::enumerate_hyperplanes_search;
use crate::incidence::{verify_gq_axioms, GQOrder, PointLineGeometry};
use crate::pointset::PointSet;
use crate::veldkamp::{LineType, VeldkampSpace};
use crate::{Error, Result};

pub const WEIGHT_COUNT: usize = 56;
pub const ROOT_COUNT: usize = 63;
pub const BITANGENT_COUNT: usize = 28;

/// A weight of the 56-dimensional representation: an integer 8-tuple with
/// zero coordinate sum and squared norm 24.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub coords: [i32; 8],
}

impl WeightVector {
    pub fn dot(&self, other: &WeightVector) -> i32 {
        (0..8).map(|i| self.coords[i] * other.coords[i]).sum()
    }

    pub fn squared_distance(&self, other: &WeightVector) -> i32 {
        (0..8)
            .map(|i| {
                let d = self.coords[i] - other.coords[i];
                d * d
            })
            .sum()
    }

    pub fn negated(&self) -> WeightVector {
        WeightVector {
            coords: self.coords.map(|c| -c),
        }
    }
}

/// Whether a positive root is of the form e_i - e_j or a balanced
/// bipartition half-sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    Transposition,
    Bipartition,
}

/// A positive root in doubled integer coordinates (squared norm 8), so the
/// half-integer bipartition roots are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub doubled: [i32; 8],
    pub kind: RootKind,
}

impl RootVector {
    pub fn dot(&self, other: &RootVector) -> i32 {
        (0..8).map(|i| self.doubled[i] * other.doubled[i]).sum()
    }

    pub fn is_orthogonal_to(&self, other: &RootVector) -> bool {
        self.dot(other) == 0
    }
}

/// A bitangent: a duad {i,j} of {0..8} standing for the weight pair
/// ±v_{ij}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bitangent {
    pub duad: (usize, usize),
    /// Index of +v_{ij} in the weight list; the negative is at +28.
    pub positive_weight: usize,
}

/// The full coordinate model: 56 weights, 63 positive roots, 28 bitangents.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    pub weights: Vec<WeightVector>,
    pub roots: Vec<RootVector>,
    pub bitangents: Vec<Bitangent>,
    weight_index: HashMap<[i32; 8], usize>,
}

/// Build the coordinate model and verify its structure: 28 duads in
/// lexicographic order give weights 0..28 (positives) and 28..56
/// (negatives); the 63 positive roots are the 28 transpositions e_i - e_j
/// (i < j) and the 35 balanced bipartitions with 0 on the positive side;
/// squared distances between distinct weights are exactly {32, 64, 96},
/// with 96 attained precisely by opposite pairs.
pub fn build_weights_and_roots() -> Result<WeightSystem> {
    let mut weights = Vec::with_capacity(WEIGHT_COUNT);
    let mut bitangents = Vec::with_capacity(BITANGENT_COUNT);
    for i in 0..8 {
        for j in i + 1..8 {
            let mut coords = [-1i32; 8];
            coords[i] = 3;
            coords[j] = 3;
            bitangents.push(Bitangent {
                duad: (i, j),
                positive_weight: weights.len(),
            });
            weights.push(WeightVector { coords });
        }
    }
    let negatives: Vec<WeightVector> = weights.iter().map(|w| w.negated()).collect();
    weights.extend(negatives);

    for w in &weights {
        let sum: i32 = w.coords.iter().sum();
        if sum != 0 || w.dot(w) != 24 {
            return Err(Error::NotAWeight(format!("bad weight {:?}", w.coords)));
        }
    }

    let mut roots = Vec::with_capacity(ROOT_COUNT);
    for i in 0..8 {
        for j in i + 1..8 {
            let mut doubled = [0i32; 8];
            doubled[i] = 2;
            doubled[j] = -2;
            roots.push(RootVector {
                doubled,
                kind: RootKind::Transposition,
            });
        }
    }
    // balanced bipartitions {A|B}, |A| = 4, normalized by 0 ∈ A
    for a in 1..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                let mut doubled = [-1i32; 8];
                for k in [0, a, b, c] {
                    doubled[k] = 1;
                }
                roots.push(RootVector {
                    doubled,
                    kind: RootKind::Bipartition,
                });
            }
        }
    }
    debug_assert_eq!(roots.len(), ROOT_COUNT);
    for r in &roots {
        let norm: i32 = r.doubled.iter().map(|c| c * c).sum();
        if norm != 8 {
            return Err(Error::NotAWeight(format!("bad root norm {:?}", r.doubled)));
        }
        // positivity convention: first nonzero doubled coordinate positive
        let first = r.doubled.iter().find(|&&c| c != 0);
        if first.is_none_or(|&c| c < 0) {
            return Err(Error::NotAWeight(format!(
                "non-positive root {:?}",
                r.doubled
            )));
        }
    }

    // distance spectrum over all distinct weight pairs
    let mut spectrum = BTreeSet::new();
    for (i, u) in weights.iter().enumerate() {
        for (k, v) in weights.iter().enumerate().skip(i + 1) {
            let d = u.squared_distance(v);
            spectrum.insert(d);
            let opposite = k == i + BITANGENT_COUNT;
            if opposite != (d == 96) {
                return Err(Error::NotAWeight(format!(
                    "distance {d} between weights {i} and {k} contradicts opposition"
                )));
            }
        }
    }
    if spectrum != BTreeSet::from([32, 64, 96]) {
        return Err(Error::NotAWeight(format!(
            "weight distance spectrum is {spectrum:?}, expected {{32, 64, 96}}"
        )));
    }

    let weight_index = weights
        .iter()
        .enumerate()
        .map(|(i, w)| (w.coords, i))
        .collect();
    Ok(WeightSystem {
        weights,
        roots,
        bitangents,
        weight_index,
    })
}

/// The reflection w ↦ w - (2 w·r / r·r) r in exact integers (doubled root
/// coordinates). Errors if the result is not integral.
pub fn reflect_vector(root: &RootVector, w: &WeightVector) -> Result<WeightVector> {
    let num = 2 * (0..8).map(|i| w.coords[i] * root.doubled[i]).sum::<i32>();
    let den = root.dot(root);
    if num % den != 0 {
        return Err(Error::NotAWeight(format!(
            "reflection coefficient {num}/{den} is not integral"
        )));
    }
    let c = num / den;
    let mut coords = w.coords;
    for (x, &r) in coords.iter_mut().zip(&root.doubled) {
        *x -= c * r;
    }
    Ok(WeightVector { coords })
}

impl WeightSystem {
    pub fn weight_of(&self, coords: &[i32; 8]) -> Option<usize> {
        self.weight_index.get(coords).copied()
    }

    /// Bitangent index of the pair {w, -w} containing weight `w`.
    pub fn bitangent_of_weight(&self, weight: usize) -> usize {
        weight % BITANGENT_COUNT
    }

    /// Apply a reflection to a weight, verifying the image is a weight.
    pub fn reflect_weight(&self, root: usize, weight: usize) -> Result<usize> {
        let image = reflect_vector(&self.roots[root], &self.weights[weight])?;
        self.weight_of(&image.coords).ok_or_else(|| {
            Error::NotAWeight(format!(
                "reflection of weight {weight} by root {root} left the weight set"
            ))
        })
    }

    /// The induced action on bitangents (weight pairs).
    pub fn reflect_bitangent(&self, root: usize, bitangent: usize) -> Result<usize> {
        let image = self.reflect_weight(root, bitangent)?;
        Ok(self.bitangent_of_weight(image))
    }

    /// Number of disjoint transpositions one reflection induces on the 56
    /// weights (also verifies it is an involution there).
    pub fn reflection_transpositions(&self, root: usize) -> Result<usize> {
        let mut moved = 0usize;
        for w in 0..WEIGHT_COUNT {
            let image = self.reflect_weight(root, w)?;
            if image != w {
                if self.reflect_weight(root, image)? != w {
                    return Err(Error::NotAWeight(format!(
                        "reflection by root {root} is not an involution at weight {w}"
                    )));
                }
                moved += 1;
            }
        }
        Ok(moved / 2)
    }
}

/// A Steiner complex: the 12 bitangents moved by one reflection, with its
/// canonical decomposition into six pairs.
#[derive(Debug, Clone)]
pub struct SteinerComplex {
    pub root: usize,
    pub members: PointSet,
    pub pairs: Vec<(usize, usize)>,
}

impl SteinerComplex {
    /// The bitangent paired with `b`, if `b` is in the complex.
    pub fn partner(&self, b: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(x, y)| match b {
            _ if b == x => Some(y),
            _ if b == y => Some(x),
            _ => None,
        })
    }
}

/// Relation between two distinct Steiner complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyRelation {
    /// |Sα ∩ Sβ| = 4; the companion is the unique Sγ syzygetic to both
    /// with Sα ∪ Sβ ∪ Sγ = X.
    Syzygetic,
    /// |Sα ∩ Sβ| = 6; the companion is Sδ = Sα Δ Sβ with δ = α + β.
    Azygetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyzygyOutcome {
    pub relation: SyzygyRelation,
    /// Complex index of the companion (γ or δ).
    pub companion: usize,
}

/// Build the complex of a single root: the bitangents its reflection
/// moves, paired by the transposition structure.
pub fn steiner_complex(system: &WeightSystem, root: usize) -> Result<SteinerComplex> {
    let mut members = PointSet::EMPTY;
    let mut pairs = Vec::new();
    for b in 0..BITANGENT_COUNT {
        let image = system.reflect_bitangent(root, b)?;
        if image != b {
            members.insert(b);
            if b < image {
                pairs.push((b, image));
            }
        }
    }
    if members.len() != 12 || pairs.len() != 6 {
        return Err(Error::ClassificationConflict(format!(
            "root {root} moves {} bitangents in {} pairs, expected 12 in 6",
            members.len(),
            pairs.len()
        )));
    }
    Ok(SteinerComplex {
        root,
        members,
        pairs,
    })
}

/// The 63 Steiner complexes with their fully verified pairwise relation
/// table.
#[derive(Debug, Clone)]
pub struct ComplexFamily {
    pub system: WeightSystem,
    pub complexes: Vec<SteinerComplex>,
    mask_index: HashMap<PointSet, usize>,
    relations: Vec<Vec<Option<SyzygyOutcome>>>,
}

impl ComplexFamily {
    /// Build all 63 complexes and the verified syzygy table. Every pair of
    /// distinct complexes must meet in 4 or 6 bitangents; syzygetic pairs
    /// get their unique third complex (checked against the root-level
    /// orthogonality characterization), azygetic pairs their symmetric
    /// difference (checked to be the complex of the root sum α + β).
    pub fn build() -> Result<ComplexFamily> {
        let system = build_weights_and_roots()?;
        let complexes: Vec<SteinerComplex> = (0..ROOT_COUNT)
            .map(|r| steiner_complex(&system, r))
            .collect::<Result<_>>()?;
        let mask_index: HashMap<PointSet, usize> = complexes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.members, i))
            .collect();
        if mask_index.len() != ROOT_COUNT {
            return Err(Error::ClassificationConflict(
                "the 63 roots do not give 63 distinct complexes".into(),
            ));
        }

        let mut family = ComplexFamily {
            system,
            complexes,
            mask_index,
            relations: vec![vec![None; ROOT_COUNT]; ROOT_COUNT],
        };
        for a in 0..ROOT_COUNT {
            for b in a + 1..ROOT_COUNT {
                let outcome = family.classify_pair(a, b)?;
                family.relations[a][b] = Some(outcome);
                family.relations[b][a] = Some(outcome);
            }
        }
        Ok(family)
    }

    pub fn complex_of_mask(&self, mask: PointSet) -> Option<usize> {
        self.mask_index.get(&mask).copied()
    }

    fn classify_pair(&self, a: usize, b: usize) -> Result<SyzygyOutcome> {
        let sa = self.complexes[a].members;
        let sb = self.complexes[b].members;
        let meet = sa.intersection(sb).len();
        // the relation is mirrored at the root level: syzygetic pairs have
        // orthogonal roots, azygetic pairs do not
        let orthogonal = self.system.roots[a].is_orthogonal_to(&self.system.roots[b]);
        if orthogonal != (meet == 4) {
            return Err(Error::ClassificationConflict(format!(
                "pair ({a},{b}): intersection {meet} conflicts with root orthogonality {orthogonal}"
            )));
        }
        match meet {
            4 => {
                let full = PointSet::full(BITANGENT_COUNT);
                let candidates: Vec<usize> = (0..ROOT_COUNT)
                    .filter(|&c| {
                        c != a
                            && c != b
                            && self.complexes[c].members.intersection(sa).len() == 4
                            && self.complexes[c].members.intersection(sb).len() == 4
                            && sa.union(sb).union(self.complexes[c].members) == full
                    })
                    .collect();
                let [gamma] = candidates[..] else {
                    return Err(Error::ClassificationConflict(format!(
                        "syzygetic pair ({a},{b}) has {} covering companions",
                        candidates.len()
                    )));
                };
                // root-level characterization: γ is the unique member of
                // S_{α,β} (the roots orthogonal to both) orthogonal to all
                // other members
                let roots = &self.system.roots;
                let sab: Vec<usize> = (0..ROOT_COUNT)
                    .filter(|&c| {
                        roots[c].is_orthogonal_to(&roots[a])
                            && roots[c].is_orthogonal_to(&roots[b])
                    })
                    .collect();
                let central: Vec<usize> = sab
                    .iter()
                    .copied()
                    .filter(|&c| {
                        sab.iter()
                            .all(|&d| d == c || roots[c].is_orthogonal_to(&roots[d]))
                    })
                    .collect();
                if central != vec![gamma] {
                    return Err(Error::ClassificationConflict(format!(
                        "root-level companion of ({a},{b}) is {central:?}, complexes gave {gamma}"
                    )));
                }
                Ok(SyzygyOutcome {
                    relation: SyzygyRelation::Syzygetic,
                    companion: gamma,
                })
            }
            6 => {
                let delta_mask = sa.symmetric_difference(sb);
                let delta = self.complex_of_mask(delta_mask).ok_or_else(|| {
                    Error::ClassificationConflict(format!(
                        "symmetric difference of azygetic pair ({a},{b}) is not a complex"
                    ))
                })?;
                // δ = α + β once α and β are given suitable signs: each
                // reflection stands for a root pair {±r}, so the sum is
                // one of α+β, α-β, β-α (whichever is the positive root)
                let ra = self.system.roots[a].doubled;
                let rb = self.system.roots[b].doubled;
                let signed_sums = [
                    std::array::from_fn::<i32, 8, _>(|i| ra[i] + rb[i]),
                    std::array::from_fn::<i32, 8, _>(|i| ra[i] - rb[i]),
                    std::array::from_fn::<i32, 8, _>(|i| rb[i] - ra[i]),
                ];
                if !signed_sums.contains(&self.system.roots[delta].doubled) {
                    return Err(Error::ClassificationConflict(format!(
                        "azygetic pair ({a},{b}): companion root is not a signed sum α + β"
                    )));
                }
                Ok(SyzygyOutcome {
                    relation: SyzygyRelation::Azygetic,
                    companion: delta,
                })
            }
            other => Err(Error::BadComplexIntersection(other)),
        }
    }

    /// Relation and companion of a pair of distinct complexes.
    pub fn syzygy(&self, a: usize, b: usize) -> Result<SyzygyOutcome> {
        if a == b {
            return Err(Error::ClassificationConflict(
                "syzygy relation needs two distinct complexes".into(),
            ));
        }
        Ok(self.relations[a][b].expect("table is complete"))
    }

    /// The GF(2) value B(Aα, Aβ): 0 for syzygetic pairs, 1 for azygetic.
    pub fn b_value(&self, a: usize, b: usize) -> Result<u8> {
        Ok(match self.syzygy(a, b)?.relation {
            SyzygyRelation::Syzygetic => 0,
            SyzygyRelation::Azygetic => 1,
        })
    }
}

/// Design-theoretic certificate of the complex family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignCertificate {
    pub points: usize,
    pub blocks: usize,
    pub block_size: usize,
    pub point_replication: usize,
    pub pair_lambda: usize,
}

/// Verify the 2-design structure: uniform block size, uniform per-point
/// replication, uniform per-pair count.
pub fn design_parameters(complexes: &[SteinerComplex]) -> Result<DesignCertificate> {
    let block_size = complexes
        .first()
        .map(|c| c.members.len())
        .ok_or_else(|| Error::ClassificationConflict("no blocks".into()))?;
    if complexes.iter().any(|c| c.members.len() != block_size) {
        return Err(Error::ClassificationConflict("mixed block sizes".into()));
    }
    let mut per_point = [0usize; BITANGENT_COUNT];
    let mut per_pair = vec![vec![0usize; BITANGENT_COUNT]; BITANGENT_COUNT];
    for c in complexes {
        let pts = c.members.to_vec();
        for (i, &x) in pts.iter().enumerate() {
            per_point[x] += 1;
            for &y in pts.iter().skip(i + 1) {
                per_pair[x][y] += 1;
            }
        }
    }
    let point_replication = per_point[0];
    if per_point.iter().any(|&r| r != point_replication) {
        return Err(Error::ClassificationConflict(
            "non-uniform point replication".into(),
        ));
    }
    let pair_lambda = per_pair[0][1];
    for (x, row) in per_pair.iter().enumerate() {
        for (y, &count) in row.iter().enumerate().skip(x + 1) {
            if count != pair_lambda {
                return Err(Error::ClassificationConflict(format!(
                    "pair ({x},{y}) lies in {count} blocks, expected {pair_lambda}"
                )));
            }
        }
    }
    Ok(DesignCertificate {
        points: BITANGENT_COUNT,
        blocks: complexes.len(),
        block_size,
        point_replication,
        pair_lambda,
    })
}

/// The derived hyperplane family at a bitangent p: D_p on X (blocks
/// through p plus complements of the others) and D'_p on X \ {p}.
#[derive(Debug, Clone)]
pub struct DerivedFamily {
    pub base: usize,
    /// 63 subsets of X, all containing p; sizes 12 (27 of them) and 16
    /// (36 of them). Entry i derives from complex i.
    pub dp: Vec<PointSet>,
    /// The same sets minus p, reindexed to 0..27; sizes 11 and 15.
    pub d_prime: Vec<PointSet>,
    /// d_prime point index -> bitangent index.
    pub point_map: Vec<usize>,
}

impl DerivedFamily {
    /// Counts of the size-12 and size-16 members of D_p.
    pub fn size_census(&self) -> (usize, usize) {
        let small = self.dp.iter().filter(|s| s.len() == 12).count();
        let large = self.dp.iter().filter(|s| s.len() == 16).count();
        (small, large)
    }
}

/// Build D_p and D'_p from the complexes and verify Veldkamp-sum closure
/// of D'_p within X \ {p}.
pub fn build_dp(family: &ComplexFamily, p: usize) -> Result<DerivedFamily> {
    if p >= BITANGENT_COUNT {
        return Err(Error::PointOutOfRange(p, BITANGENT_COUNT));
    }
    let full = PointSet::full(BITANGENT_COUNT);
    let dp: Vec<PointSet> = family
        .complexes
        .iter()
        .map(|c| {
            if c.members.contains(p) {
                c.members
            } else {
                full.difference(c.members)
            }
        })
        .collect();
    for (i, s) in dp.iter().enumerate() {
        if !s.contains(p) || (s.len() != 12 && s.len() != 16) {
            return Err(Error::ClassificationConflict(format!(
                "derived set {i} at base {p} has size {} or misses the base",
                s.len()
            )));
        }
    }

    let point_map: Vec<usize> = (0..BITANGENT_COUNT).filter(|&q| q != p).collect();
    let mut new_index = [usize::MAX; BITANGENT_COUNT];
    for (new, &old) in point_map.iter().enumerate() {
        new_index[old] = new;
    }
    let d_prime: Vec<PointSet> = dp
        .iter()
        .map(|s| PointSet::from_indices(s.iter().filter(|&q| q != p).map(|q| new_index[q])))
        .collect();

    // closure under A1 * A2 = complement of the symmetric difference
    let known: std::collections::HashSet<PointSet> = d_prime.iter().copied().collect();
    let n = BITANGENT_COUNT - 1;
    for i in 0..d_prime.len() {
        for j in i + 1..d_prime.len() {
            let sum = d_prime[i].symmetric_difference(d_prime[j]).complement(n);
            if !known.contains(&sum) {
                return Err(Error::ClassificationConflict(format!(
                    "D'_{p} is not closed under the Veldkamp sum at pair ({i},{j})"
                )));
            }
        }
    }
    Ok(DerivedFamily {
        base: p,
        dp,
        d_prime,
        point_map,
    })
}

/// For every pair of complexes, check the parity of p-membership over the
/// associated triple: odd for syzygetic triples (and Sγ = Sα * Sβ), even
/// for azygetic ones (and Sδ = Sα Δ Sβ). Returns the number of pairs
/// checked.
pub fn parity_rules_check(family: &ComplexFamily, p: usize) -> Result<usize> {
    if p >= BITANGENT_COUNT {
        return Err(Error::PointOutOfRange(p, BITANGENT_COUNT));
    }
    let full = PointSet::full(BITANGENT_COUNT);
    let mut checked = 0;
    for a in 0..ROOT_COUNT {
        for b in a + 1..ROOT_COUNT {
            let outcome = family.syzygy(a, b)?;
            let sa = family.complexes[a].members;
            let sb = family.complexes[b].members;
            let sc = family.complexes[outcome.companion].members;
            let membership = [sa, sb, sc].iter().filter(|s| s.contains(p)).count();
            match outcome.relation {
                SyzygyRelation::Syzygetic => {
                    if membership % 2 == 0 {
                        return Err(Error::ParityViolation(format!(
                            "syzygetic triple ({a},{b}) holds {p} an even number of times"
                        )));
                    }
                    if sc != full.difference(sa.symmetric_difference(sb)) {
                        return Err(Error::ParityViolation(format!(
                            "syzygetic triple ({a},{b}): Sγ is not Sα * Sβ"
                        )));
                    }
                }
                SyzygyRelation::Azygetic => {
                    if membership % 2 == 1 {
                        return Err(Error::ParityViolation(format!(
                            "azygetic triple ({a},{b}) holds {p} an odd number of times"
                        )));
                    }
                    if sc != sa.symmetric_difference(sb) {
                        return Err(Error::ParityViolation(format!(
                            "azygetic triple ({a},{b}): Sδ is not Sα Δ Sβ"
                        )));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Which equilateral-triangle condition a bitangent triple satisfies: some
/// sign choice of the three weight pairs forms a triangle with all squared
/// sides 32 (side 1) or all 64 (side √2); exactly one must hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleSide {
    One,
    SqrtTwo,
}

/// Decide the triangle condition for a triple of distinct bitangents,
/// erroring unless exactly one of the two conditions holds.
pub fn triangle_condition(
    system: &WeightSystem,
    p: usize,
    q: usize,
    r: usize,
) -> Result<TriangleSide> {
    let reps = |b: usize| [system.weights[b], system.weights[b + BITANGENT_COUNT]];
    let (wp, wq, wr) = (reps(p), reps(q), reps(r));
    let mut side_one = false;
    let mut side_sqrt2 = false;
    for a in &wp {
        for b in &wq {
            for c in &wr {
                let d1 = a.squared_distance(b);
                let d2 = a.squared_distance(c);
                let d3 = b.squared_distance(c);
                if d1 == 32 && d2 == 32 && d3 == 32 {
                    side_one = true;
                }
                if d1 == 64 && d2 == 64 && d3 == 64 {
                    side_sqrt2 = true;
                }
            }
        }
    }
    match (side_one, side_sqrt2) {
        (true, false) => Ok(TriangleSide::One),
        (false, true) => Ok(TriangleSide::SqrtTwo),
        other => Err(Error::TriangleCondition(format!(
            "triple ({p},{q},{r}) has (side-1, side-√2) = {other:?}"
        ))),
    }
}

/// Exhaustively verify the side-1 / side-√2 dichotomy over all C(28,3)
/// bitangent triples and every sign choice; returns the number of triples.
pub fn verify_triangle_dichotomy(system: &WeightSystem) -> Result<usize> {
    let mut checked = 0;
    for p in 0..BITANGENT_COUNT {
        for q in p + 1..BITANGENT_COUNT {
            for r in q + 1..BITANGENT_COUNT {
                triangle_condition(system, p, q, r)?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// The 27-point geometry induced at a base bitangent, with its hyperplane
/// family D'_p and the adjacency convention that produced it.
#[derive(Debug, Clone)]
pub struct InducedModel {
    pub base: usize,
    pub geometry: PointLineGeometry,
    pub family: DerivedFamily,
    /// The triangle side whose graph turned out to be the collinearity
    /// graph SRG(27,10,1,5) with 45 triangles (recorded, not presumed).
    pub collinearity_side: TriangleSide,
    /// Hyperplane point set -> root/complex index.
    pub hyperplane_roots: HashMap<PointSet, usize>,
}

/// Build the induced geometry at bitangent p: compute both the side-1 and
/// side-√2 graphs on X \ {p}, take the one that is SRG(27,10,1,5) with
/// exactly 45 triangles, use its triangles as lines, and verify that the
/// hyperplane family of the resulting GQ(2,4) equals D'_p and that the
/// 11-sets are the perps of the points paired with p.
pub fn build_induced_geometry(family: &ComplexFamily, p: usize) -> Result<InducedModel> {
    let derived = build_dp(family, p)?;
    let system = &family.system;
    let n = BITANGENT_COUNT - 1;

    let mut edges_one = Vec::new();
    let mut edges_sqrt2 = Vec::new();
    for qi in 0..n {
        for ri in qi + 1..n {
            let side =
                triangle_condition(system, p, derived.point_map[qi], derived.point_map[ri])?;
            match side {
                TriangleSide::One => edges_one.push((qi, ri)),
                TriangleSide::SqrtTwo => edges_sqrt2.push((qi, ri)),
            }
        }
    }
    let graph_one = SimpleGraph::new(n, &edges_one);
    let graph_sqrt2 = SimpleGraph::new(n, &edges_sqrt2);

    let is_collinearity =
        |g: &SimpleGraph| srg_parameters(g) == Some((27, 10, 1, 5)) && g.triangles().len() == 45;
    let (collinearity_side, graph) =
        match (is_collinearity(&graph_one), is_collinearity(&graph_sqrt2)) {
            (true, false) => (TriangleSide::One, graph_one),
            (false, true) => (TriangleSide::SqrtTwo, graph_sqrt2),
            other => {
                return Err(Error::TriangleCondition(format!(
                    "neither or both adjacency conventions give SRG(27,10,1,5): {other:?}"
                )))
            }
        };

    let lines: Vec<Vec<usize>> = graph.triangles().iter().map(|t| t.to_vec()).collect();
    let geometry = PointLineGeometry::new(n, lines)?;
    let report = verify_gq_axioms(&geometry, GQOrder::new(2, 4));
    if !report.all_pass() {
        return Err(Error::ClassificationConflict(format!(
            "induced geometry at base {p} fails the GQ axioms: {:?}",
            report.first_failure()
        )));
    }

    // the hyperplane family must be exactly D'_p
    let mut computed: Vec<PointSet> = enumerate_hyperplanes_search(&geometry)
        .iter()
        .map(|h| h.points())
        .collect();
    computed.sort_unstable();
    let mut expected = derived.d_prime.clone();
    expected.sort_unstable();
    if computed != expected {
        return Err(Error::ClassificationConflict(format!(
            "hyperplane family at base {p} differs from D'_p"
        )));
    }

    // 11-sets are perps: B \ {p} is the perp of the point paired with p
    let mut new_index = [usize::MAX; BITANGENT_COUNT];
    for (new, &old) in derived.point_map.iter().enumerate() {
        new_index[old] = new;
    }
    for (i, complex) in family.complexes.iter().enumerate() {
        if !complex.members.contains(p) {
            continue;
        }
        let q = complex
            .partner(p)
            .expect("p is in the complex, so it is paired");
        if geometry.perp_of_point(new_index[q]) != derived.d_prime[i] {
            return Err(Error::ClassificationConflict(format!(
                "block of root {i} minus {p} is not the perp of its partner {q}"
            )));
        }
    }

    let hyperplane_roots: HashMap<PointSet, usize> = derived
        .d_prime
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    Ok(InducedModel {
        base: p,
        geometry,
        family: derived,
        collinearity_side,
        hyperplane_roots,
    })
}

/// Census of the Veldkamp lines by the syzygy-based symplectic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicCensus {
    pub isotropic: usize,
    pub non_isotropic: usize,
    /// Line types carried by isotropic lines (must be {I, III}).
    pub isotropic_types: BTreeSet<LineType>,
    pub non_isotropic_types: BTreeSet<LineType>,
}

/// Classify every Veldkamp line of the induced geometry as isotropic (its
/// three complexes are pairwise syzygetic) or not, verifying per line that
/// isotropy coincides with type I/III membership; this compares the
/// syzygy-based split against the quadric polarity split through line type
/// tags alone, with no bijection between the two models involved.
pub fn isotropic_line_census(
    induced: &InducedModel,
    family: &ComplexFamily,
    space: &VeldkampSpace,
) -> Result<IsotropicCensus> {
    let mut census = IsotropicCensus {
        isotropic: 0,
        non_isotropic: 0,
        isotropic_types: BTreeSet::new(),
        non_isotropic_types: BTreeSet::new(),
    };
    for (idx, line) in space.lines().iter().enumerate() {
        let roots: Vec<usize> = line
            .members
            .iter()
            .map(|&m| {
                induced
                    .hyperplane_roots
                    .get(&space.hyperplanes()[m].points())
                    .copied()
                    .ok_or(Error::MissingDictionary)
            })
            .collect::<Result<_>>()?;
        let [a, b, c] = roots[..] else {
            return Err(Error::ClassificationConflict(format!(
                "Veldkamp line {idx} does not have 3 members"
            )));
        };
        let isotropic = family.b_value(a, b)? == 0
            && family.b_value(a, c)? == 0
            && family.b_value(b, c)? == 0;
        let line_type = line
            .line_type
            .ok_or_else(|| Error::ClassificationConflict(format!("line {idx} has no type tag")))?;
        let expected = matches!(line_type, LineType::I | LineType::III);
        if isotropic != expected {
            return Err(Error::ClassificationConflict(format!(
                "line {idx}: syzygy isotropy {isotropic} conflicts with type {line_type:?}"
            )));
        }
        if isotropic {
            census.isotropic += 1;
            census.isotropic_types.insert(line_type);
        } else {
            census.non_isotropic += 1;
            census.non_isotropic_types.insert(line_type);
        }
    }
    Ok(census)
}

/// Exhaustively check that B is additive in its second argument wherever
/// the sum is defined: B(α, β+γ) = B(α,β) + B(α,γ) for all triples with
/// β + γ a positive root and α distinct from β, γ and β+γ. Returns the
/// number of identities checked.
pub fn verify_b_bilinearity(family: &ComplexFamily) -> Result<usize> {
    let mut checked = 0;
    for b in 0..ROOT_COUNT {
        for c in b + 1..ROOT_COUNT {
            let outcome = family.syzygy(b, c)?;
            if outcome.relation != SyzygyRelation::Azygetic {
                continue; // β + γ is a root only for azygetic pairs
            }
            let d = outcome.companion;
            for a in 0..ROOT_COUNT {
                if a == b || a == c || a == d {
                    continue;
                }
                let lhs = family.b_value(a, d)?;
                let rhs = (family.b_value(a, b)? + family.b_value(a, c)?) % 2;
                if lhs != rhs {
                    return Err(Error::ClassificationConflict(format!(
                        "B is not bilinear at (α,β,γ) = ({a},{b},{c})"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
