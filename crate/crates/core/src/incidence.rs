//! Point-line incidence structures and the generalized-quadrangle
//! vocabulary: axioms, collinearity, perp-sets, hyperbolic lines, triads,
//! ovoids and spreads.
//!
//! Geometries are immutable after construction; the per-point line lists
//! and the collinearity adjacency rows are built eagerly.

use std::collections::BTreeMap;
use std::collections::HashSet;

use crate::pointset::PointSet;
use crate::{Error, Result};

/// The order (s, t) of a generalized quadrangle: s+1 points per line,
/// t+1 lines per point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GQOrder {
    pub s: usize,
    pub t: usize,
}

impl GQOrder {
    pub fn new(s: usize, t: usize) -> GQOrder {
        assert!(s >= 1 && t >= 1);
        GQOrder { s, t }
    }

    /// (s+1)(st+1), the point count forced by the axioms.
    pub fn point_count(self) -> usize {
        (self.s + 1) * (self.s * self.t + 1)
    }

    /// (t+1)(st+1), the line count forced by the axioms.
    pub fn line_count(self) -> usize {
        (self.t + 1) * (self.s * self.t + 1)
    }
}

/// A finite point-line incidence structure with points `0..v` and lines
/// stored as point sets, plus eagerly derived collinearity data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointLineGeometry {
    v: usize,
    lines: Vec<PointSet>,
    lines_through: Vec<Vec<usize>>,
    adjacency: Vec<PointSet>,
    fingerprint: u64,
}

impl PointLineGeometry {
    /// Build from explicit lines. Lines are canonically sorted by bitmask;
    /// duplicates, short lines and out-of-range indices are rejected.
    pub fn new(v: usize, lines: Vec<Vec<usize>>) -> Result<PointLineGeometry> {
        if v > 64 {
            return Err(Error::DimensionOutOfRange(v));
        }
        let mut masks = Vec::with_capacity(lines.len());
        let mut seen = HashSet::new();
        for line in &lines {
            if let Some(&bad) = line.iter().find(|&&p| p >= v) {
                return Err(Error::PointOutOfRange(bad, v));
            }
            let mask = PointSet::from_indices(line.iter().copied());
            if mask.len() < 2 {
                return Err(Error::NotAHyperplane(format!(
                    "line {mask} has fewer than 2 points"
                )));
            }
            if !seen.insert(mask) {
                return Err(Error::ClassificationConflict(format!(
                    "repeated line {mask}"
                )));
            }
            masks.push(mask);
        }
        masks.sort();

        let mut lines_through = vec![Vec::new(); v];
        let mut adjacency = vec![PointSet::EMPTY; v];
        for (idx, line) in masks.iter().enumerate() {
            for p in line.iter() {
                lines_through[p].push(idx);
                adjacency[p] = adjacency[p].union(*line);
            }
        }
        for (p, row) in adjacency.iter_mut().enumerate() {
            row.remove(p); // zero-diagonal convention
        }

        let mut g = PointLineGeometry {
            v,
            lines: masks,
            lines_through,
            adjacency,
            fingerprint: 0,
        };
        g.fingerprint = g.compute_fingerprint();
        Ok(g)
    }

    fn compute_fingerprint(&self) -> u64 {
        // FNV-1a over the canonical line list; stable across runs
        let mut h: u64 = 0xcbf29ce484222325;
        let mut mix = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        mix(self.v as u64);
        for line in &self.lines {
            mix(line.0);
        }
        h
    }

    /// Stable identity of this geometry's incidence data, used to detect
    /// accidental mixing of hyperplanes across different models.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn point_count(&self) -> usize {
        self.v
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    pub fn line(&self, idx: usize) -> PointSet {
        self.lines[idx]
    }

    pub fn line_index(&self, line: PointSet) -> Option<usize> {
        self.lines.binary_search(&line).ok()
    }

    pub fn is_line(&self, set: PointSet) -> bool {
        self.line_index(set).is_some()
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.lines_through[p]
    }

    /// Points collinear with `p`, excluding `p` itself.
    pub fn neighbors(&self, p: usize) -> PointSet {
        self.adjacency[p]
    }

    pub fn collinear(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].contains(y)
    }

    /// The perp-set of A: all points collinear with (or equal to) every
    /// member of A. Errors on empty A.
    pub fn perp(&self, a: PointSet) -> Result<PointSet> {
        if a.is_empty() {
            return Err(Error::EmptyPerpArgument);
        }
        let mut acc = PointSet::full(self.v);
        for x in a.iter() {
            let closed = self.adjacency[x].union(PointSet::singleton(x));
            acc = acc.intersection(closed);
        }
        Ok(acc)
    }

    pub fn perp_of_point(&self, x: usize) -> PointSet {
        self.adjacency[x].union(PointSet::singleton(x))
    }

    /// The hyperbolic line {x,y}^⊥⊥ through two non-collinear points.
    pub fn hyperbolic_line(&self, x: usize, y: usize) -> Result<PointSet> {
        if x >= self.v {
            return Err(Error::PointOutOfRange(x, self.v));
        }
        if y >= self.v {
            return Err(Error::PointOutOfRange(y, self.v));
        }
        if x == y || self.collinear(x, y) {
            return Err(Error::CollinearPoints(x, y));
        }
        let pair = PointSet::from_indices([x, y]);
        self.perp(self.perp(pair)?)
    }

    /// Histogram center-count -> number of triads (pairwise non-collinear
    /// triples).
    pub fn triad_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for x in 0..self.v {
            for y in x + 1..self.v {
                if self.collinear(x, y) {
                    continue;
                }
                for z in y + 1..self.v {
                    if self.collinear(x, z) || self.collinear(y, z) {
                        continue;
                    }
                    let centers = self
                        .perp(PointSet::from_indices([x, y, z]))
                        .expect("nonempty triple")
                        .len();
                    *census.entry(centers).or_insert(0) += 1;
                }
            }
        }
        census
    }

    /// Number of pairwise non-collinear triples, counted directly from the
    /// adjacency rows (independent of the census bucketing).
    pub fn triad_count(&self) -> usize {
        let mut count = 0;
        for x in 0..self.v {
            for y in x + 1..self.v {
                if self.collinear(x, y) {
                    continue;
                }
                let both = self.adjacency[x]
                    .union(self.adjacency[y])
                    .union(PointSet::from_indices([x, y]))
                    .complement(self.v);
                count += both.iter().filter(|&z| z > y).count();
            }
        }
        count
    }

    pub fn is_ovoid(&self, set: PointSet) -> bool {
        self.lines
            .iter()
            .all(|line| line.intersection(set).len() == 1)
    }

    /// Exhaustive enumeration of all ovoids (point sets meeting every line
    /// exactly once), by branching on the smallest unhit line.
    pub fn find_ovoids(&self) -> Vec<PointSet> {
        let mut out = Vec::new();
        let mut chosen = PointSet::EMPTY;
        self.ovoid_search(&mut chosen, &mut out);
        debug_assert!(out.iter().all(|&o| self.is_ovoid(o)));
        out
    }

    fn ovoid_search(&self, chosen: &mut PointSet, out: &mut Vec<PointSet>) {
        // smallest line not yet hit by a chosen point
        let next = self
            .lines
            .iter()
            .position(|line| line.intersection(*chosen).is_empty());
        let Some(line_idx) = next else {
            if self.is_ovoid(*chosen) {
                out.push(*chosen);
            }
            return;
        };
        // closed neighborhood of the chosen set: no ovoid point may fall here
        let mut blocked = *chosen;
        for x in chosen.iter() {
            blocked = blocked.union(self.adjacency[x]);
        }
        for p in self.lines[line_idx].iter() {
            if blocked.contains(p) {
                continue;
            }
            chosen.insert(p);
            self.ovoid_search(chosen, out);
            chosen.remove(p);
        }
    }

    pub fn is_spread(&self, line_indices: &[usize]) -> bool {
        let mut covered = PointSet::EMPTY;
        for &idx in line_indices {
            let line = self.lines[idx];
            if !covered.is_disjoint(line) {
                return false;
            }
            covered = covered.union(line);
        }
        covered == PointSet::full(self.v)
    }

    /// Exhaustive enumeration of all spreads (partitions of the point set
    /// into pairwise disjoint lines), by branching on the smallest
    /// uncovered point. Returned as sorted line-index vectors.
    pub fn find_spreads(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut picked = Vec::new();
        self.spread_search(PointSet::EMPTY, &mut picked, &mut out);
        debug_assert!(out.iter().all(|s| self.is_spread(s)));
        out
    }

    fn spread_search(
        &self,
        covered: PointSet,
        picked: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(point) = covered.complement(self.v).min() else {
            out.push(picked.clone());
            return;
        };
        for &idx in &self.lines_through[point] {
            if self.lines[idx].is_disjoint(covered) {
                picked.push(idx);
                self.spread_search(covered.union(self.lines[idx]), picked, out);
                picked.pop();
            }
        }
    }

    /// The substructure induced on `points`: only lines fully inside the
    /// set survive, reindexed. Returns the geometry and the new-to-old
    /// point map.
    pub fn induced(&self, points: PointSet) -> (PointLineGeometry, Vec<usize>) {
        let old: Vec<usize> = points.to_vec();
        let mut new_index = vec![usize::MAX; self.v];
        for (new, &o) in old.iter().enumerate() {
            new_index[o] = new;
        }
        let lines: Vec<Vec<usize>> = self
            .lines
            .iter()
            .filter(|line| line.is_subset_of(points))
            .map(|line| line.iter().map(|p| new_index[p]).collect())
            .collect();
        let g = PointLineGeometry::new(old.len(), lines)
            .expect("induced lines are valid by construction");
        (g, old)
    }
}

/// Result of checking one axiom, with a human-readable witness on failure.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub pass: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    fn pass() -> AxiomCheck {
        AxiomCheck {
            pass: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> AxiomCheck {
        AxiomCheck {
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Per-axiom report for a claimed GQ order. Failures are reported, never
/// thrown.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub order: GQOrder,
    pub point_count: AxiomCheck,
    pub line_count: AxiomCheck,
    pub points_on_lines: AxiomCheck,
    pub lines_on_points: AxiomCheck,
    pub antiflag: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.point_count.pass
            && self.line_count.pass
            && self.points_on_lines.pass
            && self.lines_on_points.pass
            && self.antiflag.pass
    }

    pub fn first_failure(&self) -> Option<&str> {
        [
            &self.point_count,
            &self.line_count,
            &self.points_on_lines,
            &self.lines_on_points,
            &self.antiflag,
        ]
        .into_iter()
        .find(|c| !c.pass)
        .and_then(|c| c.witness.as_deref())
    }
}

/// Check the generalized-quadrangle axioms for `g` against a claimed order:
/// (i) every point on exactly 1+t lines, two points on at most one common
/// line; (ii) every line with exactly 1+s points, two lines sharing at most
/// one point; (iii) unique collinear projection for every anti-flag; plus
/// the derived counts |P| = (s+1)(st+1) and |B| = (t+1)(st+1).
pub fn verify_gq_axioms(g: &PointLineGeometry, order: GQOrder) -> AxiomReport {
    let (s, t) = (order.s, order.t);

    let point_count = if g.point_count() == order.point_count() {
        AxiomCheck::pass()
    } else {
        AxiomCheck::fail(format!(
            "|P| = {} but (s+1)(st+1) = {}",
            g.point_count(),
            order.point_count()
        ))
    };
    let line_count = if g.line_count() == order.line_count() {
        AxiomCheck::pass()
    } else {
        AxiomCheck::fail(format!(
            "|B| = {} but (t+1)(st+1) = {}",
            g.line_count(),
            order.line_count()
        ))
    };

    let mut points_on_lines = AxiomCheck::pass();
    for p in 0..g.point_count() {
        if g.lines_through(p).len() != t + 1 {
            points_on_lines = AxiomCheck::fail(format!(
                "point {p} lies on {} lines, expected {}",
                g.lines_through(p).len(),
                t + 1
            ));
            break;
        }
    }
    if points_on_lines.pass {
        'pairs: for x in 0..g.point_count() {
            for y in x + 1..g.point_count() {
                let common = g
                    .lines_through(x)
                    .iter()
                    .filter(|idx| g.line(**idx).contains(y))
                    .count();
                if common > 1 {
                    points_on_lines = AxiomCheck::fail(format!(
                        "points {x},{y} lie on {common} common lines"
                    ));
                    break 'pairs;
                }
            }
        }
    }

    let mut lines_on_points = AxiomCheck::pass();
    for (idx, line) in g.lines().iter().enumerate() {
        if line.len() != s + 1 {
            lines_on_points = AxiomCheck::fail(format!(
                "line {idx} has {} points, expected {}",
                line.len(),
                s + 1
            ));
            break;
        }
    }
    if lines_on_points.pass {
        'lines: for i in 0..g.line_count() {
            for j in i + 1..g.line_count() {
                let common = g.line(i).intersection(g.line(j)).len();
                if common > 1 {
                    lines_on_points = AxiomCheck::fail(format!(
                        "lines {i},{j} share {common} points"
                    ));
                    break 'lines;
                }
            }
        }
    }

    let mut antiflag = AxiomCheck::pass();
    'antiflags: for x in 0..g.point_count() {
        for (idx, line) in g.lines().iter().enumerate() {
            if line.contains(x) {
                continue;
            }
            let projections = line.intersection(g.neighbors(x)).len();
            if projections != 1 {
                antiflag = AxiomCheck::fail(format!(
                    "anti-flag (point {x}, line {idx}) has {projections} collinear projections"
                ));
                break 'antiflags;
            }
        }
    }

    AxiomReport {
        order,
        point_count,
        line_count,
        points_on_lines,
        lines_on_points,
        antiflag,
    }
}

/// Three pairwise non-collinear points together with their common perp.
#[derive(Debug, Clone)]
pub struct Triad {
    pub points: [usize; 3],
    pub centers: PointSet,
}

impl Triad {
    pub fn new(g: &PointLineGeometry, x: usize, y: usize, z: usize) -> Result<Triad> {
        for &(a, b) in &[(x, y), (x, z), (y, z)] {
            if a == b || g.collinear(a, b) {
                return Err(Error::CollinearPoints(a, b));
            }
        }
        let centers = g.perp(PointSet::from_indices([x, y, z]))?;
        Ok(Triad {
            points: [x, y, z],
            centers,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn gq24_axioms_and_counts() {
        let model = models::build_gq24_quadric();
        let report = verify_gq_axioms(&model.geometry, GQOrder::new(2, 4));
        assert!(report.all_pass(), "{:?}", report.first_failure());
        assert_eq!(model.geometry.point_count(), 27);
        assert_eq!(model.geometry.line_count(), 45);
    }

    #[test]
    fn w3_axioms() {
        let w3 = models::build_w3();
        let report = verify_gq_axioms(&w3, GQOrder::new(3, 3));
        assert!(report.all_pass(), "{:?}", report.first_failure());
        assert_eq!(w3.point_count(), 40);
        assert_eq!(w3.line_count(), 40);
    }

    #[test]
    fn broken_doily_fails_with_witness() {
        let doily = models::build_gq22();
        let lines: Vec<Vec<usize>> = doily
            .lines()
            .iter()
            .skip(1)
            .map(|l| l.to_vec())
            .collect();
        let broken = PointLineGeometry::new(15, lines).unwrap();
        let report = verify_gq_axioms(&broken, GQOrder::new(2, 2));
        assert!(!report.all_pass());
        assert!(!report.points_on_lines.pass);
        assert!(report.points_on_lines.witness.is_some());
    }

    #[test]
    fn perp_sizes() {
        let model = models::build_gq24_quadric();
        let g = &model.geometry;
        for x in 0..g.point_count() {
            assert_eq!(g.perp_of_point(x).len(), 11); // 1 + s + st = 11
        }
        let doily = models::build_gq22();
        for x in 0..doily.point_count() {
            assert_eq!(doily.perp_of_point(x).len(), 7);
        }
        assert!(matches!(
            g.perp(PointSet::EMPTY),
            Err(Error::EmptyPerpArgument)
        ));
    }

    #[test]
    fn perp_of_collinear_pair_is_their_line() {
        let model = models::build_gq24_quadric();
        let g = &model.geometry;
        for line in g.lines() {
            let pts = line.to_vec();
            let pair = PointSet::from_indices([pts[0], pts[1]]);
            assert_eq!(g.perp(pair).unwrap(), *line);
        }
    }

    #[test]
    fn perp_is_antitone_and_expansive() {
        let doily = models::build_gq22();
        // A ⊆ B ⇒ perp(B) ⊆ perp(A), and A ⊆ perp(perp(A))
        for x in 0..doily.point_count() {
            for y in 0..doily.point_count() {
                if x == y {
                    continue;
                }
                let a = PointSet::singleton(x);
                let b = PointSet::from_indices([x, y]);
                let pa = doily.perp(a).unwrap();
                let pb = doily.perp(b).unwrap();
                assert!(pb.is_subset_of(pa));
                assert!(b.is_subset_of(doily.perp(pb).unwrap()));
            }
        }
    }

    #[test]
    fn hyperbolic_lines() {
        let doily = models::build_gq22();
        let mut found = None;
        for x in 0..15 {
            for y in x + 1..15 {
                if !doily.collinear(x, y) {
                    let h = doily.hyperbolic_line(x, y).unwrap();
                    assert_eq!(h.len(), 3);
                    assert!(h.contains(x) && h.contains(y));
                    found = Some((x, y));
                }
            }
        }
        assert!(found.is_some());

        let w3 = models::build_w3();
        for x in 0..40 {
            for y in x + 1..40 {
                if !w3.collinear(x, y) {
                    let h = w3.hyperbolic_line(x, y).unwrap();
                    assert_eq!(h.len(), 4);
                    assert!(h.contains(x) && h.contains(y));
                }
            }
        }

        // collinear input is rejected
        let line = doily.line(0).to_vec();
        assert!(matches!(
            doily.hyperbolic_line(line[0], line[1]),
            Err(Error::CollinearPoints(_, _))
        ));
    }

    #[test]
    fn triad_construction() {
        let model = models::build_gq24_quadric();
        let g = &model.geometry;
        let census = g.triad_census();
        // pick any pairwise non-collinear triple and check the center set
        'outer: for x in 0..g.point_count() {
            for y in x + 1..g.point_count() {
                for z in y + 1..g.point_count() {
                    if let Ok(triad) = Triad::new(g, x, y, z) {
                        assert_eq!(triad.centers.len(), 3); // tricentric
                        assert_eq!(
                            triad.centers,
                            g.perp(PointSet::from_indices(triad.points)).unwrap()
                        );
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(census.keys().copied().collect::<Vec<_>>(), vec![3]);
        // collinear inputs are rejected
        let line = g.line(0).to_vec();
        assert!(matches!(
            Triad::new(g, line[0], line[1], line[2]),
            Err(Error::CollinearPoints(_, _))
        ));
    }

    #[test]
    fn triad_censuses() {
        let model = models::build_gq24_quadric();
        let census = model.geometry.triad_census();
        assert_eq!(census, BTreeMap::from([(3, 720)])); // only tricentric
        assert_eq!(model.geometry.triad_count(), 720);

        let doily = models::build_gq22();
        let census = doily.triad_census();
        assert_eq!(census.keys().copied().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(census.values().sum::<usize>(), doily.triad_count());

        let grid = models::build_grid();
        let census = grid.triad_census();
        assert_eq!(census, BTreeMap::from([(0, 6)])); // all acentric
    }

    #[test]
    fn ovoids() {
        let model = models::build_gq24_quadric();
        assert!(model.geometry.find_ovoids().is_empty());

        let doily = models::build_gq22();
        let ovoids = doily.find_ovoids();
        assert_eq!(ovoids.len(), 6);
        assert!(ovoids.iter().all(|o| o.len() == 5));

        let grid = models::build_grid();
        let ovoids = grid.find_ovoids();
        assert_eq!(ovoids.len(), 6); // transversals of the 3x3 grid
        assert!(ovoids.iter().all(|o| o.len() == 3));
    }

    #[test]
    fn spreads() {
        let doily = models::build_gq22();
        let spreads = doily.find_spreads();
        assert_eq!(spreads.len(), 6); // self-dual to its 6 ovoids
        assert!(spreads.iter().all(|s| s.len() == 5));

        let grid = models::build_grid();
        assert_eq!(grid.find_spreads().len(), 2); // rows and columns

        let model = models::build_gq24_quadric();
        let spreads = model.geometry.find_spreads();
        assert_eq!(spreads.len(), 200);
        assert!(spreads.iter().all(|s| s.len() == 9));
        assert!(spreads.iter().all(|s| model.geometry.is_spread(s)));
    }

    #[test]
    fn induced_substructure() {
        let doily = models::build_gq22();
        let perp = doily.perp_of_point(0);
        let (sub, old) = doily.induced(perp);
        assert_eq!(sub.point_count(), 7);
        assert_eq!(old.len(), 7);
        // perp of a point contains its 3 full lines
        assert_eq!(sub.line_count(), 3);
    }
}
