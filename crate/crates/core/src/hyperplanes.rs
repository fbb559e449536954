//! Geometric hyperplanes: point sets meeting every line in one or all of
//! its points.
//!
//! Two independent enumerations are provided for cross-validation: an
//! exhaustive depth-first search with constraint propagation (works for any
//! geometry here), and, for the quadric model of GQ(2,4), the hyperplane
//! sections of PG(5,2). A third brute-force filter over all 2^v subsets
//! serves as the oracle for small geometries.

use crate::fflinalg::FieldVector;
use crate::incidence::{verify_gq_axioms, GQOrder, PointLineGeometry};
use crate::models::QuadricModel;
use crate::pointset::PointSet;
use crate::{Error, Result};

/// Structural classification of a geometric hyperplane of a GQ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperplaneKind {
    /// The perp-set of a point.
    Perp { center: usize },
    /// A full subquadrangle of order (s, t') with t' < t.
    Subquadrangle { order: GQOrder },
    /// Meets every line in exactly one point.
    Ovoid,
    Unclassified,
}

/// A geometric hyperplane of a specific parent geometry. The parent's
/// fingerprint is carried so hyperplanes from different models cannot be
/// silently mixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricHyperplane {
    points: PointSet,
    kind: HyperplaneKind,
    parent: u64,
}

impl GeometricHyperplane {
    /// Validate `points` against the hyperplane definition and wrap it.
    pub fn new(g: &PointLineGeometry, points: PointSet) -> Result<GeometricHyperplane> {
        if let Some(witness) = hyperplane_violation(g, points) {
            return Err(Error::NotAHyperplane(witness));
        }
        Ok(GeometricHyperplane {
            points,
            kind: HyperplaneKind::Unclassified,
            parent: g.fingerprint(),
        })
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn kind(&self) -> HyperplaneKind {
        self.kind
    }

    pub fn set_kind(&mut self, kind: HyperplaneKind) {
        self.kind = kind;
    }

    pub fn belongs_to(&self, g: &PointLineGeometry) -> bool {
        self.parent == g.fingerprint()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Why `points` fails the hyperplane definition, or None if it is one.
fn hyperplane_violation(g: &PointLineGeometry, points: PointSet) -> Option<String> {
    if points == PointSet::full(g.point_count()) {
        return Some("the full point set is not a proper subset".into());
    }
    for (idx, line) in g.lines().iter().enumerate() {
        let met = line.intersection(points).len();
        if met != 1 && met != line.len() {
            return Some(format!("line {idx} meets the set in {met} points"));
        }
    }
    None
}

pub fn is_geometric_hyperplane(g: &PointLineGeometry, points: PointSet) -> bool {
    hyperplane_violation(g, points).is_none()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Undecided,
    In,
    Out,
}

/// Exhaustive enumeration of all geometric hyperplanes by depth-first
/// search over point memberships with constraint propagation. A line must
/// end up with exactly one or all of its points inside, which forces:
/// with any point out and one in, the rest out; with any point out and all
/// but one undecided-or-out, the last one in; with two in, all in.
/// Branches on the lowest-index undecided point; results are returned in
/// canonical bitmask order.
pub fn enumerate_hyperplanes_search(g: &PointLineGeometry) -> Vec<GeometricHyperplane> {
    let mut status = vec![Status::Undecided; g.point_count()];
    let mut found = Vec::new();
    search(g, &mut status, &mut found);
    found.sort_unstable();
    debug_assert!(found.windows(2).all(|w| w[0] != w[1]));
    found
        .into_iter()
        .map(|points| GeometricHyperplane {
            points,
            kind: HyperplaneKind::Unclassified,
            parent: g.fingerprint(),
        })
        .collect()
}

fn search(g: &PointLineGeometry, status: &mut [Status], found: &mut Vec<PointSet>) {
    let mut trail = Vec::new();
    if !propagate(g, status, &mut trail) {
        unwind(status, &trail);
        return;
    }
    match status.iter().position(|&s| s == Status::Undecided) {
        None => {
            let points =
                PointSet::from_indices((0..status.len()).filter(|&p| status[p] == Status::In));
            // propagation guarantees the line condition; keep proper subsets
            if points != PointSet::full(g.point_count()) {
                debug_assert!(is_geometric_hyperplane(g, points));
                found.push(points);
            }
        }
        Some(p) => {
            for decision in [Status::In, Status::Out] {
                status[p] = decision;
                search(g, status, found);
                status[p] = Status::Undecided;
            }
        }
    }
    unwind(status, &trail);
}

fn unwind(status: &mut [Status], trail: &[usize]) {
    for &p in trail {
        status[p] = Status::Undecided;
    }
}

/// Apply forced assignments until a fixed point; false on contradiction.
/// Every point this sets is recorded on `trail` for the caller to undo.
fn propagate(g: &PointLineGeometry, status: &mut [Status], trail: &mut Vec<usize>) -> bool {
    let mut queue: Vec<usize> = (0..g.line_count()).collect();
    while let Some(idx) = queue.pop() {
        let line = g.line(idx);
        let mut ins = 0;
        let mut outs = 0;
        let mut undecided = Vec::new();
        for p in line.iter() {
            match status[p] {
                Status::In => ins += 1,
                Status::Out => outs += 1,
                Status::Undecided => undecided.push(p),
            }
        }
        let force = |val: Status,
                     points: &[usize],
                     status: &mut [Status],
                     trail: &mut Vec<usize>,
                     queue: &mut Vec<usize>| {
            for &p in points {
                status[p] = val;
                trail.push(p);
                queue.extend_from_slice(g.lines_through(p));
            }
        };
        if outs == 0 {
            if ins >= 2 && !undecided.is_empty() {
                // cannot be "exactly one", so it must be "all"
                force(Status::In, &undecided, status, trail, &mut queue);
            }
        } else {
            // some point is out, so the line must carry exactly one
            match (ins, undecided.len()) {
                (0, 0) => return false,
                (0, 1) => force(Status::In, &undecided, status, trail, &mut queue),
                (1, _) if !undecided.is_empty() => {
                    force(Status::Out, &undecided, status, trail, &mut queue)
                }
                (i, _) if i >= 2 => return false,
                _ => {}
            }
        }
    }
    true
}

/// Brute-force oracle: filter all 2^v subsets by the definition. Only for
/// desk-scale geometries (v <= 20).
pub fn enumerate_hyperplanes_bruteforce(g: &PointLineGeometry) -> Vec<PointSet> {
    let v = g.point_count();
    assert!(v <= 20, "brute force is an oracle for small geometries only");
    let mut out = Vec::new();
    for mask in 0..(1u64 << v) {
        let points = PointSet(mask);
        if is_geometric_hyperplane(g, points) {
            out.push(points);
        }
    }
    out
}

/// One hyperplane section of the quadric model: the trace on the quadric of
/// a hyperplane H_v = {x : b(v,x) = 0} of PG(5,2).
#[derive(Debug, Clone)]
pub struct QuadricSection {
    /// The dual vector v defining the hyperplane of PG(5,2).
    pub vector: FieldVector,
    pub hyperplane: GeometricHyperplane,
    /// The tangency point (a geometry point index) iff Q(v) = 0.
    pub tangent_at: Option<usize>,
}

/// Enumerate the geometric hyperplanes of the quadric model as sections by
/// the 63 hyperplanes of PG(5,2): tangent sections (Q(v) = 0) are cones and
/// equal the perp of the tangency point, non-tangent sections are parabolic
/// quadrics with 15 points.
pub fn enumerate_hyperplanes_quadric(model: &QuadricModel) -> Result<Vec<QuadricSection>> {
    let g = &model.geometry;
    let duals = crate::fflinalg::enumerate_projective_points(6, 2)?;
    let mut sections = Vec::with_capacity(duals.len());
    for v in duals {
        let points = PointSet::from_indices(
            model
                .point_vectors
                .iter()
                .enumerate()
                .filter(|(_, x)| model.polar.evaluate(&v, x) == 0)
                .map(|(i, _)| i),
        );
        let tangent_at = if model.form.evaluate(&v) == 0 {
            let p = model.point_of_vector(&v).ok_or(Error::MissingDictionary)?;
            if g.perp_of_point(p) != points {
                return Err(Error::ClassificationConflict(format!(
                    "tangent section at point {p} does not equal its perp"
                )));
            }
            Some(p)
        } else {
            None
        };
        sections.push(QuadricSection {
            vector: v,
            hyperplane: GeometricHyperplane::new(g, points)?,
            tangent_at,
        });
    }
    Ok(sections)
}

/// Structurally classify a hyperplane of a GQ: a perp-set, a full
/// subquadrangle of smaller second parameter, or an ovoid.
pub fn classify_hyperplane(
    g: &PointLineGeometry,
    h: &GeometricHyperplane,
) -> Result<HyperplaneKind> {
    if !h.belongs_to(g) {
        return Err(Error::GeometryMismatch);
    }
    if let Some(witness) = hyperplane_violation(g, h.points()) {
        return Err(Error::NotAHyperplane(witness));
    }
    for x in h.points().iter() {
        if g.perp_of_point(x) == h.points() {
            return Ok(HyperplaneKind::Perp { center: x });
        }
    }
    // subquadrangle of order (s, t'): derive t' from the point count
    let s = g.line(0).len() - 1;
    let t = g.lines_through(0).len() - 1;
    let n = h.len();
    if n.is_multiple_of(s + 1) {
        let st1 = n / (s + 1);
        if (st1 - 1).is_multiple_of(s) {
            let t_sub = (st1 - 1) / s;
            if t_sub >= 1 && t_sub < t {
                let (induced, _) = g.induced(h.points());
                if verify_gq_axioms(&induced, GQOrder::new(s, t_sub)).all_pass() {
                    return Ok(HyperplaneKind::Subquadrangle {
                        order: GQOrder::new(s, t_sub),
                    });
                }
            }
        }
    }
    if g.lines()
        .iter()
        .all(|line| line.intersection(h.points()).len() == 1)
    {
        return Ok(HyperplaneKind::Ovoid);
    }
    Ok(HyperplaneKind::Unclassified)
}

/// Classify every hyperplane in place.
pub fn classify_all(
    g: &PointLineGeometry,
    hyperplanes: &mut [GeometricHyperplane],
) -> Result<()> {
    for h in hyperplanes.iter_mut() {
        let kind = classify_hyperplane(g, h)?;
        h.set_kind(kind);
    }
    Ok(())
}

/// Tally of hyperplane kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KindCensus {
    pub perps: usize,
    pub subquadrangles: usize,
    pub ovoids: usize,
    pub unclassified: usize,
}

pub fn kind_census(hyperplanes: &[GeometricHyperplane]) -> KindCensus {
    let mut census = KindCensus::default();
    for h in hyperplanes {
        match h.kind() {
            HyperplaneKind::Perp { .. } => census.perps += 1,
            HyperplaneKind::Subquadrangle { .. } => census.subquadrangles += 1,
            HyperplaneKind::Ovoid => census.ovoids += 1,
            HyperplaneKind::Unclassified => census.unclassified += 1,
        }
    }
    census
}

impl PartialOrd for GeometricHyperplane {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeometricHyperplane {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.points.cmp(&other.points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn gq24_has_63_hyperplanes() {
        let model = models::build_gq24_quadric();
        let mut hs = enumerate_hyperplanes_search(&model.geometry);
        assert_eq!(hs.len(), 63);
        classify_all(&model.geometry, &mut hs).unwrap();
        let census = kind_census(&hs);
        assert_eq!(census.perps, 27);
        assert_eq!(census.subquadrangles, 36);
        assert_eq!(census.ovoids, 0);
        assert_eq!(census.unclassified, 0);
        // sizes: perps 11, doilies 15
        for h in &hs {
            match h.kind() {
                HyperplaneKind::Perp { .. } => assert_eq!(h.len(), 11),
                HyperplaneKind::Subquadrangle { order } => {
                    assert_eq!(h.len(), 15);
                    assert_eq!((order.s, order.t), (2, 2));
                }
                other => panic!("unexpected kind {other:?}"),
            }
        }
    }

    #[test]
    fn doily_has_31_hyperplanes() {
        let doily = models::build_gq22();
        let mut hs = enumerate_hyperplanes_search(&doily);
        assert_eq!(hs.len(), 31);
        classify_all(&doily, &mut hs).unwrap();
        let census = kind_census(&hs);
        assert_eq!((census.perps, census.subquadrangles, census.ovoids), (15, 10, 6));
    }

    #[test]
    fn search_matches_bruteforce_on_small_geometries() {
        for g in [models::build_grid(), models::build_gq22()] {
            let search: Vec<PointSet> = enumerate_hyperplanes_search(&g)
                .iter()
                .map(|h| h.points())
                .collect();
            let brute = enumerate_hyperplanes_bruteforce(&g);
            assert_eq!(search, brute);
        }
    }

    #[test]
    fn grid_census() {
        let grid = models::build_grid();
        let mut hs = enumerate_hyperplanes_search(&grid);
        assert_eq!(hs.len(), 15);
        classify_all(&grid, &mut hs).unwrap();
        let census = kind_census(&hs);
        // 9 perps (crosses) and 6 ovoids (transversals)
        assert_eq!((census.perps, census.subquadrangles, census.ovoids), (9, 0, 6));
    }

    #[test]
    fn quadric_sections() {
        let model = models::build_gq24_quadric();
        let sections = enumerate_hyperplanes_quadric(&model).unwrap();
        assert_eq!(sections.len(), 63);
        let tangent: Vec<_> = sections.iter().filter(|s| s.tangent_at.is_some()).collect();
        assert_eq!(tangent.len(), 27);
        assert!(tangent.iter().all(|s| s.hyperplane.len() == 11));
        let non_tangent: Vec<_> = sections.iter().filter(|s| s.tangent_at.is_none()).collect();
        assert_eq!(non_tangent.len(), 36);
        assert!(non_tangent.iter().all(|s| s.hyperplane.len() == 15));
        // pairwise distinct
        let mut sets: Vec<PointSet> = sections.iter().map(|s| s.hyperplane.points()).collect();
        sets.sort_unstable();
        sets.dedup();
        assert_eq!(sets.len(), 63);
    }

    #[test]
    fn two_enumerations_agree() {
        let model = models::build_gq24_quadric();
        let mut search: Vec<PointSet> = enumerate_hyperplanes_search(&model.geometry)
            .iter()
            .map(|h| h.points())
            .collect();
        let mut sections: Vec<PointSet> = enumerate_hyperplanes_quadric(&model)
            .unwrap()
            .iter()
            .map(|s| s.hyperplane.points())
            .collect();
        search.sort_unstable();
        sections.sort_unstable();
        assert_eq!(search, sections);
    }

    #[test]
    fn classify_rejects_foreign_hyperplane() {
        let doily = models::build_gq22();
        let model = models::build_gq24_quadric();
        let h = enumerate_hyperplanes_search(&doily).remove(0);
        assert!(matches!(
            classify_hyperplane(&model.geometry, &h),
            Err(Error::GeometryMismatch)
        ));
    }

    #[test]
    fn rejects_non_hyperplane() {
        let doily = models::build_gq22();
        let bad = PointSet::from_indices([0, 1]);
        assert!(GeometricHyperplane::new(&doily, bad).is_err());
        let full = PointSet::full(15);
        assert!(GeometricHyperplane::new(&doily, full).is_err());
    }
}
