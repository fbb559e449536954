//! The Veldkamp space of a point-line geometry: points are geometric
//! hyperplanes, lines are maximal families with constant pairwise
//! intersection.
//!
//! For GQ(2,4) this certifies V(GQ(2,4)) ≅ PG(5,2): 63 points, 651
//! three-element lines falling into four types (45/216/270/120), split
//! 315/336 by the ambient symplectic polarity. For GQ(2,2) it certifies
//! V ≅ PG(4,2) with 31 points and 155 lines.

use std::collections::HashMap;

use crate::fflinalg::{gf_rank, FieldVector};
use crate::hyperplanes::{GeometricHyperplane, HyperplaneKind, QuadricSection};
use crate::incidence::PointLineGeometry;
use crate::models::QuadricModel;
use crate::pointset::PointSet;
use crate::{Error, Result};

/// Table-1 line types of V(GQ(2,4)), by hyperplane composition and common
/// intersection: I = 3 perps meeting in a line, II = 2 perps + 1 doily
/// meeting in an ovoid of that doily, III = 1 perp + 2 doilies meeting in a
/// doily perp-set, IV = 3 doilies meeting in a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    I,
    II,
    III,
    IV,
}

/// One Veldkamp line: hyperplanes with identical pairwise intersections.
#[derive(Debug, Clone)]
pub struct VeldkampLine {
    /// Sorted indices into the space's hyperplane list.
    pub members: Vec<usize>,
    /// The common pairwise intersection.
    pub intersection: PointSet,
    /// Table-1 type, once classified (GQ(2,4) only).
    pub line_type: Option<LineType>,
}

/// The Veldkamp space of a geometry: its hyperplanes in canonical bitmask
/// order and the lines they span.
#[derive(Debug, Clone)]
pub struct VeldkampSpace {
    geometry: PointLineGeometry,
    hyperplanes: Vec<GeometricHyperplane>,
    lines: Vec<VeldkampLine>,
}

/// Complement of the symmetric difference; the GF(2) addition of the
/// Veldkamp vector space. Summing a hyperplane with itself would give the
/// full point set (the zero element), which is not a hyperplane.
pub fn veldkamp_sum(
    g: &PointLineGeometry,
    h1: &GeometricHyperplane,
    h2: &GeometricHyperplane,
) -> Result<GeometricHyperplane> {
    if !h1.belongs_to(g) || !h2.belongs_to(g) {
        return Err(Error::GeometryMismatch);
    }
    if h1.points() == h2.points() {
        return Err(Error::ZeroVeldkampSum);
    }
    let sum = h1
        .points()
        .symmetric_difference(h2.points())
        .complement(g.point_count());
    GeometricHyperplane::new(g, sum)
}

/// Build the Veldkamp space from a complete hyperplane census: for every
/// unordered pair the line is found by scanning all hyperplanes for equal
/// pairwise intersections; the family must partition the pairs and be
/// closed under the Veldkamp sum, else the census was incomplete.
pub fn build_veldkamp_space(
    g: &PointLineGeometry,
    hyperplanes: Vec<GeometricHyperplane>,
) -> Result<VeldkampSpace> {
    let mut hyperplanes = hyperplanes;
    hyperplanes.sort_unstable();
    if hyperplanes.iter().any(|h| !h.belongs_to(g)) {
        return Err(Error::GeometryMismatch);
    }
    let by_points: HashMap<PointSet, usize> = hyperplanes
        .iter()
        .enumerate()
        .map(|(i, h)| (h.points(), i))
        .collect();
    if by_points.len() != hyperplanes.len() {
        return Err(Error::ClassificationConflict(
            "duplicate hyperplanes in census".into(),
        ));
    }

    // closure under the sum detects an incomplete census before line-building
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            let sum = veldkamp_sum(g, &hyperplanes[i], &hyperplanes[j])?;
            if !by_points.contains_key(&sum.points()) {
                return Err(Error::ClassificationConflict(format!(
                    "census not closed under Veldkamp sum: {} missing",
                    sum.points()
                )));
            }
        }
    }

    let n = hyperplanes.len();
    let mut lines: Vec<VeldkampLine> = Vec::new();
    let mut pair_line = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if pair_line[i][j] != usize::MAX {
                continue;
            }
            let common = hyperplanes[i].points().intersection(hyperplanes[j].points());
            let members: Vec<usize> = (0..n)
                .filter(|&k| {
                    k == i
                        || k == j
                        || (hyperplanes[k].points().intersection(hyperplanes[i].points())
                            == common
                            && hyperplanes[k].points().intersection(hyperplanes[j].points())
                                == common)
                })
                .collect();
            let line_idx = lines.len();
            for (a, &x) in members.iter().enumerate() {
                for &y in members.iter().skip(a + 1) {
                    if pair_line[x][y] != usize::MAX {
                        return Err(Error::ClassificationConflict(format!(
                            "hyperplane pair ({x},{y}) lies on two Veldkamp lines"
                        )));
                    }
                    pair_line[x][y] = line_idx;
                }
            }
            lines.push(VeldkampLine {
                members,
                intersection: common,
                line_type: None,
            });
        }
    }

    Ok(VeldkampSpace {
        geometry: g.clone(),
        hyperplanes,
        lines,
    })
}

impl VeldkampSpace {
    pub fn geometry(&self) -> &PointLineGeometry {
        &self.geometry
    }

    pub fn hyperplanes(&self) -> &[GeometricHyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane_index(&self, points: PointSet) -> Option<usize> {
        self.hyperplanes
            .binary_search_by_key(&points, |h| h.points())
            .ok()
    }

    pub fn lines(&self) -> &[VeldkampLine] {
        &self.lines
    }

    pub fn point_count(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Every unordered hyperplane pair must lie on exactly one line.
    pub fn pair_partition_holds(&self) -> bool {
        let pairs: usize = self
            .lines
            .iter()
            .map(|l| l.members.len() * (l.members.len() - 1) / 2)
            .sum();
        pairs == self.point_count() * (self.point_count() - 1) / 2
    }
}

/// The GF(2)-vector-space certificate for a Veldkamp space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCertificate {
    /// Number of Veldkamp points (nonzero vectors).
    pub vectors: usize,
    /// GF(2)-rank of the complement indicator vectors.
    pub rank: usize,
    /// Every Veldkamp line is a triple {a, b, a+b}.
    pub lines_are_sum_triples: bool,
}

impl DimensionCertificate {
    /// The certified projective dimension (rank - 1).
    pub fn projective_dimension(&self) -> usize {
        self.rank - 1
    }
}

/// Map every hyperplane H to the GF(2) indicator vector of its complement
/// P∖H, verify additive closure (with the full set as zero), compute the
/// rank, and verify that Veldkamp lines are exactly the {a, b, a+b}
/// triples. Closure failure falsifies the vector-space claim and is a hard
/// error.
pub fn certify_projective_space(space: &VeldkampSpace) -> Result<DimensionCertificate> {
    let v = space.geometry.point_count();
    let indicators: Vec<FieldVector> = space
        .hyperplanes
        .iter()
        .map(|h| {
            let complement = h.points().complement(v);
            let coords: Vec<u8> = (0..v).map(|p| u8::from(complement.contains(p))).collect();
            FieldVector::new(2, &coords)
        })
        .collect::<Result<_>>()?;

    let known: std::collections::HashSet<&FieldVector> = indicators.iter().collect();
    let zero = FieldVector::zero(2, v)?;
    for i in 0..indicators.len() {
        for j in i + 1..indicators.len() {
            let sum = indicators[i].add(&indicators[j]);
            if sum != zero && !known.contains(&sum) {
                return Err(Error::ClassificationConflict(format!(
                    "indicator vectors not additively closed at pair ({i},{j})"
                )));
            }
        }
    }

    let rank = gf_rank(&indicators)?;

    let mut lines_are_sum_triples = true;
    for line in &space.lines {
        if line.members.len() != 3 {
            lines_are_sum_triples = false;
            break;
        }
        let [a, b, c] = [line.members[0], line.members[1], line.members[2]];
        if indicators[a].add(&indicators[b]) != indicators[c] {
            lines_are_sum_triples = false;
            break;
        }
    }

    Ok(DimensionCertificate {
        vectors: indicators.len(),
        rank,
        lines_are_sum_triples,
    })
}

/// Line-type tally for V(GQ(2,4)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LineTypeCensus {
    pub type_i: usize,
    pub type_ii: usize,
    pub type_iii: usize,
    pub type_iv: usize,
}

/// Assign a Table-1 type to every line of V(GQ(2,4)), requiring the
/// hyperplane composition and the common-intersection structure to match
/// the same row; any mismatch is a hard error. Hyperplane kinds must be
/// classified beforehand.
pub fn classify_lines(space: &mut VeldkampSpace) -> Result<LineTypeCensus> {
    let g = space.geometry.clone();
    let mut census = LineTypeCensus::default();
    let kinds: Vec<HyperplaneKind> = space.hyperplanes.iter().map(|h| h.kind()).collect();
    let doilies: Vec<usize> = (0..kinds.len())
        .filter(|&i| matches!(kinds[i], HyperplaneKind::Subquadrangle { .. }))
        .collect();

    for idx in 0..space.lines.len() {
        let line = &space.lines[idx];
        if line.members.len() != 3 {
            return Err(Error::ClassificationConflict(format!(
                "Veldkamp line {idx} has {} members, expected 3",
                line.members.len()
            )));
        }
        let mut perps = Vec::new();
        let mut line_doilies = Vec::new();
        for &m in &line.members {
            match kinds[m] {
                HyperplaneKind::Perp { .. } => perps.push(m),
                HyperplaneKind::Subquadrangle { .. } => line_doilies.push(m),
                other => {
                    return Err(Error::ClassificationConflict(format!(
                        "line {idx} contains a hyperplane of kind {other:?}"
                    )))
                }
            }
        }
        let common = line.intersection;
        let line_type = match (perps.len(), line_doilies.len()) {
            (3, 0) => {
                if common.len() != 3 || !g.is_line(common) {
                    return Err(Error::ClassificationConflict(format!(
                        "type I line {idx}: intersection {common} is not a line of the GQ"
                    )));
                }
                LineType::I
            }
            (2, 1) => {
                check_ovoid_of_doily(&g, &space.hyperplanes[line_doilies[0]], common, idx)?;
                LineType::II
            }
            (1, 2) => {
                for &d in &line_doilies {
                    check_perpset_of_doily(&g, &space.hyperplanes[d], common, idx)?;
                }
                LineType::III
            }
            (0, 3) => {
                check_grid(&g, common, idx)?;
                LineType::IV
            }
            other => {
                return Err(Error::ClassificationConflict(format!(
                    "line {idx} has composition {other:?}"
                )))
            }
        };
        match line_type {
            LineType::I => census.type_i += 1,
            LineType::II => census.type_ii += 1,
            LineType::III => census.type_iii += 1,
            LineType::IV => census.type_iv += 1,
        }
        space.lines[idx].line_type = Some(line_type);
    }

    // Type II bookkeeping: an ovoid sits in a unique doily
    for (idx, line) in space.lines.iter().enumerate() {
        if line.line_type != Some(LineType::II) {
            continue;
        }
        let parents = doilies
            .iter()
            .filter(|&&d| line.intersection.is_subset_of(space.hyperplanes[d].points()))
            .count();
        if parents != 1 {
            return Err(Error::ClassificationConflict(format!(
                "type II intersection of line {idx} lies in {parents} doilies, expected 1"
            )));
        }
    }
    Ok(census)
}

/// The intersection must be a 5-point ovoid of the doily: inside it, and
/// meeting every line of the induced GQ(2,2) exactly once; its points are
/// pairwise non-collinear in the ambient GQ.
fn check_ovoid_of_doily(
    g: &PointLineGeometry,
    doily: &GeometricHyperplane,
    common: PointSet,
    idx: usize,
) -> Result<()> {
    let pts = common.to_vec();
    let pairwise_ok = pts
        .iter()
        .enumerate()
        .all(|(a, &x)| pts.iter().skip(a + 1).all(|&y| !g.collinear(x, y)));
    if common.len() != 5 || !common.is_subset_of(doily.points()) || !pairwise_ok {
        return Err(Error::ClassificationConflict(format!(
            "type II line {idx}: intersection is not a 5-cap inside the doily"
        )));
    }
    let (induced, old) = g.induced(doily.points());
    let mapped = map_into(common, &old);
    if !induced.is_ovoid(mapped) {
        return Err(Error::ClassificationConflict(format!(
            "type II line {idx}: intersection is not an ovoid of the doily"
        )));
    }
    Ok(())
}

/// The intersection must be the perp-set of some point of the doily.
fn check_perpset_of_doily(
    g: &PointLineGeometry,
    doily: &GeometricHyperplane,
    common: PointSet,
    idx: usize,
) -> Result<()> {
    if common.len() != 7 || !common.is_subset_of(doily.points()) {
        return Err(Error::ClassificationConflict(format!(
            "type III line {idx}: intersection is not a 7-set inside the doily"
        )));
    }
    let (induced, old) = g.induced(doily.points());
    let mapped = map_into(common, &old);
    let is_perpset = (0..induced.point_count()).any(|x| induced.perp_of_point(x) == mapped);
    if !is_perpset {
        return Err(Error::ClassificationConflict(format!(
            "type III line {idx}: intersection is not a perp-set of the doily"
        )));
    }
    Ok(())
}

/// The intersection must induce a 9-point grid with 6 internal lines.
fn check_grid(g: &PointLineGeometry, common: PointSet, idx: usize) -> Result<()> {
    if common.len() != 9 {
        return Err(Error::ClassificationConflict(format!(
            "type IV line {idx}: intersection has {} points, expected 9",
            common.len()
        )));
    }
    let (induced, _) = g.induced(common);
    let report =
        crate::incidence::verify_gq_axioms(&induced, crate::incidence::GQOrder::new(2, 1));
    if induced.line_count() != 6 || !report.all_pass() {
        return Err(Error::ClassificationConflict(format!(
            "type IV line {idx}: intersection does not induce a GQ(2,1)"
        )));
    }
    Ok(())
}

/// Express `set` (in parent indices) in the coordinates of an induced
/// geometry given its new-to-old point map.
fn map_into(set: PointSet, old: &[usize]) -> PointSet {
    PointSet::from_indices(
        old.iter()
            .enumerate()
            .filter(|(_, &o)| set.contains(o))
            .map(|(new, _)| new),
    )
}

/// The 315/336 polarity split of the Veldkamp lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolaritySplit {
    pub isotropic: Vec<usize>,
    pub hyperbolic: Vec<usize>,
}

/// Split the lines of V(GQ(2,4)) by the ambient symplectic polarity: a line
/// {H_u, H_v, H_{u+v}} is isotropic iff b(u,v) = 0 under the polarized
/// elliptic form. Verifies that isotropic lines are exactly Types I and III
/// (odd perp count). Requires lines to be classified first.
pub fn polarity_split(
    space: &VeldkampSpace,
    model: &QuadricModel,
    sections: &[QuadricSection],
) -> Result<PolaritySplit> {
    let vector_of: HashMap<PointSet, &FieldVector> = sections
        .iter()
        .map(|s| (s.hyperplane.points(), &s.vector))
        .collect();
    let mut isotropic = Vec::new();
    let mut hyperbolic = Vec::new();
    for (idx, line) in space.lines.iter().enumerate() {
        let u = vector_of
            .get(&space.hyperplanes[line.members[0]].points())
            .ok_or(Error::MissingDictionary)?;
        let v = vector_of
            .get(&space.hyperplanes[line.members[1]].points())
            .ok_or(Error::MissingDictionary)?;
        let is_isotropic = model.polar.evaluate(u, v) == 0;
        let expected_isotropic = match line.line_type {
            Some(LineType::I) | Some(LineType::III) => true,
            Some(LineType::II) | Some(LineType::IV) => false,
            None => {
                return Err(Error::ClassificationConflict(format!(
                    "line {idx} has no type; classify lines first"
                )))
            }
        };
        if is_isotropic != expected_isotropic {
            return Err(Error::ClassificationConflict(format!(
                "line {idx}: isotropy {is_isotropic} conflicts with type {:?}",
                line.line_type
            )));
        }
        if is_isotropic {
            isotropic.push(idx);
        } else {
            hyperbolic.push(idx);
        }
    }
    Ok(PolaritySplit {
        isotropic,
        hyperbolic,
    })
}

/// The 27/36 split of Veldkamp points by the quadric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricPointSplit {
    pub on_quadric: Vec<usize>,
    pub off_quadric: Vec<usize>,
}

/// Partition Veldkamp points by Q(v): on-quadric vectors must be tagged
/// tangent and classified as perps (the section equals the perp of the
/// tangency point), off-quadric ones as doilies.
pub fn quadric_point_split(
    space: &VeldkampSpace,
    model: &QuadricModel,
    sections: &[QuadricSection],
) -> Result<QuadricPointSplit> {
    let mut on_quadric = Vec::new();
    let mut off_quadric = Vec::new();
    for section in sections {
        let idx = space
            .hyperplane_index(section.hyperplane.points())
            .ok_or(Error::MissingDictionary)?;
        let kind = space.hyperplanes[idx].kind();
        match (model.form.evaluate(&section.vector), section.tangent_at) {
            (0, Some(p)) => {
                if !matches!(kind, HyperplaneKind::Perp { center } if center == p) {
                    return Err(Error::ClassificationConflict(format!(
                        "tangent section at {p} is not the perp of {p}"
                    )));
                }
                if model.geometry.perp_of_point(p) != section.hyperplane.points() {
                    return Err(Error::ClassificationConflict(format!(
                        "tangent section at {p} differs from perp({p})"
                    )));
                }
                on_quadric.push(idx);
            }
            (_, None) => {
                if !matches!(kind, HyperplaneKind::Subquadrangle { .. }) {
                    return Err(Error::ClassificationConflict(
                        "non-tangent section is not a doily".into(),
                    ));
                }
                off_quadric.push(idx);
            }
            (q, tangent) => {
                return Err(Error::ClassificationConflict(format!(
                    "inconsistent section tag: Q(v) = {q}, tangent_at = {tangent:?}"
                )))
            }
        }
    }
    on_quadric.sort_unstable();
    off_quadric.sort_unstable();
    Ok(QuadricPointSplit {
        on_quadric,
        off_quadric,
    })
}

/// The counting identities behind the Table-1 totals, computed from the
/// doily hyperplanes directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingIdentities {
    /// Ovoids of doilies, counted over all doilies (36 x 6 = 216).
    pub doily_ovoids_total: usize,
    /// Every doily ovoid lies in exactly one doily.
    pub ovoid_parent_unique: bool,
    /// Distinct doily perp-sets (36 x 15 / 2 = 270).
    pub perpsets_distinct: usize,
    /// Every doily perp-set is shared by exactly this many doilies (2).
    pub perpset_multiplicity: usize,
    /// Distinct grids arising as doily hyperplanes (36 x 10 / 3 = 120).
    pub grids_distinct: usize,
    /// Every grid lies in exactly this many doilies (3).
    pub grid_multiplicity: usize,
}

/// Verify the counting identities: 216 doily ovoids each with a unique
/// parent doily, 270 perp-sets each shared by two doilies, 120 grids each
/// shared by three.
pub fn counting_identities(space: &VeldkampSpace) -> Result<CountingIdentities> {
    let g = &space.geometry;
    let doilies: Vec<&GeometricHyperplane> = space
        .hyperplanes
        .iter()
        .filter(|h| matches!(h.kind(), HyperplaneKind::Subquadrangle { .. }))
        .collect();

    let mut ovoid_count: HashMap<PointSet, usize> = HashMap::new();
    let mut perpset_count: HashMap<PointSet, usize> = HashMap::new();
    let mut grid_count: HashMap<PointSet, usize> = HashMap::new();
    for doily in &doilies {
        let (induced, old) = g.induced(doily.points());
        for ovoid in induced.find_ovoids() {
            let ambient = PointSet::from_indices(ovoid.iter().map(|p| old[p]));
            *ovoid_count.entry(ambient).or_insert(0) += 1;
        }
        for x in 0..induced.point_count() {
            let ambient =
                PointSet::from_indices(induced.perp_of_point(x).iter().map(|p| old[p]));
            *perpset_count.entry(ambient).or_insert(0) += 1;
        }
        let mut sub_hyperplanes = crate::hyperplanes::enumerate_hyperplanes_search(&induced);
        crate::hyperplanes::classify_all(&induced, &mut sub_hyperplanes)?;
        for h in &sub_hyperplanes {
            if matches!(h.kind(), HyperplaneKind::Subquadrangle { .. }) {
                let ambient = PointSet::from_indices(h.points().iter().map(|p| old[p]));
                *grid_count.entry(ambient).or_insert(0) += 1;
            }
        }
    }

    let uniform = |counts: &HashMap<PointSet, usize>| -> Option<usize> {
        let mut values = counts.values();
        let first = *values.next()?;
        values.all(|&c| c == first).then_some(first)
    };
    let perpset_multiplicity = uniform(&perpset_count).ok_or_else(|| {
        Error::ClassificationConflict("doily perp-sets have mixed multiplicities".into())
    })?;
    let grid_multiplicity = uniform(&grid_count).ok_or_else(|| {
        Error::ClassificationConflict("grids have mixed multiplicities".into())
    })?;

    Ok(CountingIdentities {
        doily_ovoids_total: ovoid_count.values().sum(),
        ovoid_parent_unique: ovoid_count.values().all(|&c| c == 1),
        perpsets_distinct: perpset_count.len(),
        perpset_multiplicity,
        grids_distinct: grid_count.len(),
        grid_multiplicity,
    })
}
