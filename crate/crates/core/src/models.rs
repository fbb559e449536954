//! Concrete constructions of the geometries in play: the doily GQ(2,2),
//! GQ(2,4) as the elliptic quadric Q⁻(5,2), the symplectic quadrangle W(3)
//! over GF(3), the Payne derivation of GQ(2,4) at a point of W(3), and a
//! backtracking isomorphism test between models.

use std::collections::HashMap;

use crate::fflinalg::{
    enumerate_projective_points, polarize, standard_elliptic_form, BilinearForm,
    FieldVector, QuadraticForm,
};
use crate::incidence::PointLineGeometry;
use crate::pointset::PointSet;
use crate::{Error, Result};

/// GQ(2,4) as the point-line structure of the elliptic quadric Q⁻(5,2),
/// together with the dictionary between geometry points and their
/// PG(5,2) coordinates.
#[derive(Debug, Clone)]
pub struct QuadricModel {
    pub geometry: PointLineGeometry,
    /// Coordinates of point i of the geometry.
    pub point_vectors: Vec<FieldVector>,
    pub form: QuadraticForm,
    /// Polarized form of `form`; the ambient symplectic structure.
    pub polar: BilinearForm,
    index: HashMap<FieldVector, usize>,
}

impl QuadricModel {
    /// Geometry point carrying the given coordinate vector, if on the
    /// quadric.
    pub fn point_of_vector(&self, v: &FieldVector) -> Option<usize> {
        self.index.get(&v.projective_rep()).copied()
    }

    /// A projective plane of PG(5,2) fully contained in the quadric, if one
    /// exists (it must not, for an elliptic quadric); returned as a basis.
    pub fn plane_on_quadric(&self) -> Option<[FieldVector; 3]> {
        let g = &self.geometry;
        for p in 0..g.point_count() {
            let through = g.lines_through(p);
            for (a, &la) in through.iter().enumerate() {
                for &lb in through.iter().skip(a + 1) {
                    let pv = &self.point_vectors[p];
                    let av = self.other_point_on(la, p);
                    let bv = self.other_point_on(lb, p);
                    if self.span_on_quadric(pv, &av, &bv) {
                        return Some([pv.clone(), av, bv]);
                    }
                }
            }
        }
        None
    }

    fn other_point_on(&self, line_idx: usize, not: usize) -> FieldVector {
        let q = self
            .geometry
            .line(line_idx)
            .iter()
            .find(|&x| x != not)
            .expect("lines have 3 points");
        self.point_vectors[q].clone()
    }

    fn span_on_quadric(&self, a: &FieldVector, b: &FieldVector, c: &FieldVector) -> bool {
        let combos = [
            a.clone(),
            b.clone(),
            c.clone(),
            a.add(b),
            a.add(c),
            b.add(c),
            a.add(b).add(c),
        ];
        combos.iter().all(|v| self.point_of_vector(v).is_some())
    }
}

/// The unique GQ(2,2): 15 points of PG(3,2), 15 totally isotropic lines of
/// a nondegenerate alternating form on GF(2)^4.
pub fn build_gq22() -> PointLineGeometry {
    symplectic_quadrangle(2)
}

/// The symplectic quadrangle W(3): 40 points of PG(3,3), 40 totally
/// isotropic lines of a nondegenerate alternating form on GF(3)^4.
pub fn build_w3() -> PointLineGeometry {
    symplectic_quadrangle(3)
}

fn symplectic_quadrangle(p: u8) -> PointLineGeometry {
    let b = BilinearForm::standard_symplectic(p, 4).expect("p in {2,3}");
    let points = enumerate_projective_points(4, p).expect("p in {2,3}");
    let index: HashMap<FieldVector, usize> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut lines = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate().skip(i + 1) {
            if b.evaluate(x, y) != 0 {
                continue;
            }
            // the projective line through x and y
            let mut line = vec![i, j];
            for lambda in 1..p {
                let z = x.add(&y.scale(lambda)).projective_rep();
                line.push(index[&z]);
            }
            line.sort_unstable();
            if seen.insert(line.clone()) {
                lines.push(line);
            }
        }
    }
    PointLineGeometry::new(points.len(), lines).expect("isotropic lines are valid")
}

/// GQ(2,4) from the standard elliptic quadric: points are the 27 projective
/// zeros of Q, lines the 45 projective lines fully on the zero set.
pub fn build_gq24_quadric() -> QuadricModel {
    let form = standard_elliptic_form();
    let polar = polarize(&form).expect("characteristic 2");
    let point_vectors = form.projective_zero_points();
    let index: HashMap<FieldVector, usize> = point_vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut lines = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, x) in point_vectors.iter().enumerate() {
        for (j, y) in point_vectors.iter().enumerate().skip(i + 1) {
            let z = x.add(y);
            let Some(k) = index.get(&z) else {
                continue;
            };
            let mut line = vec![i, j, *k];
            line.sort_unstable();
            if seen.insert(line.clone()) {
                lines.push(line);
            }
        }
    }
    let geometry =
        PointLineGeometry::new(point_vectors.len(), lines).expect("quadric lines are valid");
    QuadricModel {
        geometry,
        point_vectors,
        form,
        polar,
        index,
    }
}

/// The 3x3 grid GQ(2,1): point (r,c) is index 3r+c, lines are the three
/// rows and three columns.
pub fn build_grid() -> PointLineGeometry {
    let mut lines = Vec::new();
    for r in 0..3 {
        lines.push(vec![3 * r, 3 * r + 1, 3 * r + 2]);
    }
    for c in 0..3 {
        lines.push(vec![c, c + 3, c + 6]);
    }
    PointLineGeometry::new(9, lines).expect("grid lines are valid")
}

/// The Payne derivation of GQ(2,4) at a point of W(3).
#[derive(Debug, Clone)]
pub struct PayneModel {
    pub geometry: PointLineGeometry,
    /// Indices (into `geometry`) of the nine lines coming from hyperbolic
    /// lines of W(3) through the base point; a classical spread.
    pub spread: Vec<usize>,
    /// Point i of `geometry` is this point of W(3).
    pub point_map: Vec<usize>,
    pub base_point: usize,
}

/// Derive GQ(2,4) at point `x` of W(3): points are the 27 points of W(3)
/// not collinear with x; lines are the W(3) lines not through x (restricted)
/// together with the nine hyperbolic lines through x minus x itself.
pub fn build_gq24_payne(w3: &PointLineGeometry, x: usize) -> Result<PayneModel> {
    if x >= w3.point_count() {
        return Err(Error::PointOutOfRange(x, w3.point_count()));
    }
    let far = w3.perp_of_point(x).complement(w3.point_count());
    let point_map: Vec<usize> = far.to_vec();
    let mut new_index = vec![usize::MAX; w3.point_count()];
    for (new, &old) in point_map.iter().enumerate() {
        new_index[old] = new;
    }

    let mut lines: Vec<Vec<usize>> = Vec::new();
    for line in w3.lines() {
        if line.contains(x) {
            continue;
        }
        let restricted: Vec<usize> = line
            .iter()
            .filter(|&p| far.contains(p))
            .map(|p| new_index[p])
            .collect();
        lines.push(restricted);
    }

    let mut hyperbolic_masks = std::collections::BTreeSet::new();
    for y in far.iter() {
        let h = w3.hyperbolic_line(x, y)?;
        hyperbolic_masks.insert(h);
    }
    let mut spread_masks = Vec::new();
    for h in hyperbolic_masks {
        let pts: Vec<usize> = h
            .iter()
            .filter(|&p| p != x)
            .map(|p| new_index[p])
            .collect();
        spread_masks.push(PointSet::from_indices(pts.iter().copied()));
        lines.push(pts);
    }

    let geometry = PointLineGeometry::new(point_map.len(), lines)?;
    let spread: Vec<usize> = spread_masks
        .iter()
        .map(|m| {
            geometry
                .line_index(*m)
                .expect("hyperbolic image is a line of the derived geometry")
        })
        .collect();
    Ok(PayneModel {
        geometry,
        spread,
        point_map,
        base_point: x,
    })
}

/// Does `map` (point i of g1 -> map[i] of g2) carry every line of g1 onto a
/// line of g2, bijectively?
pub fn is_geometry_isomorphism(
    g1: &PointLineGeometry,
    g2: &PointLineGeometry,
    map: &[usize],
) -> bool {
    if g1.point_count() != g2.point_count()
        || g1.line_count() != g2.line_count()
        || map.len() != g1.point_count()
    {
        return false;
    }
    let mut used = vec![false; g2.point_count()];
    for &img in map {
        if img >= g2.point_count() || used[img] {
            return false;
        }
        used[img] = true;
    }
    let mut images: Vec<PointSet> = g1
        .lines()
        .iter()
        .map(|line| PointSet::from_indices(line.iter().map(|p| map[p])))
        .collect();
    images.sort_unstable();
    images.dedup();
    images.len() == g2.line_count() && images.iter().all(|l| g2.is_line(*l))
}

/// Backtracking search for an isomorphism g1 -> g2 (a point bijection
/// mapping lines onto lines). Candidate images are pruned by line-degree
/// and by collinearity consistency with everything already mapped; a
/// complete assignment is accepted only after re-checking line
/// preservation.
pub fn find_isomorphism(g1: &PointLineGeometry, g2: &PointLineGeometry) -> Option<Vec<usize>> {
    let v = g1.point_count();
    if v != g2.point_count() || g1.line_count() != g2.line_count() {
        return None;
    }
    let mut sizes1: Vec<usize> = g1.lines().iter().map(|l| l.len()).collect();
    let mut sizes2: Vec<usize> = g2.lines().iter().map(|l| l.len()).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return None;
    }
    if v == 0 {
        return Some(Vec::new());
    }

    let deg1: Vec<usize> = (0..v).map(|p| g1.lines_through(p).len()).collect();
    let deg2: Vec<usize> = (0..v).map(|p| g2.lines_through(p).len()).collect();
    {
        let mut d1 = deg1.clone();
        let mut d2 = deg2.clone();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return None;
        }
    }

    let mut map = vec![usize::MAX; v];
    let mut used = PointSet::EMPTY;
    let mut mapped = PointSet::EMPTY;
    if extend_isomorphism(g1, g2, &deg1, &deg2, &mut map, &mut used, &mut mapped) {
        Some(map)
    } else {
        None
    }
}

fn extend_isomorphism(
    g1: &PointLineGeometry,
    g2: &PointLineGeometry,
    deg1: &[usize],
    deg2: &[usize],
    map: &mut Vec<usize>,
    used: &mut PointSet,
    mapped: &mut PointSet,
) -> bool {
    let v = g1.point_count();
    if mapped.len() == v {
        return is_geometry_isomorphism(g1, g2, map);
    }
    // most-constrained next point: maximal mapped neighborhood
    let next = (0..v)
        .filter(|&p| !mapped.contains(p))
        .max_by_key(|&p| (g1.neighbors(p).intersection(*mapped).len(), std::cmp::Reverse(p)))
        .expect("some point unmapped");

    let mapped_neighbors: Vec<usize> = g1.neighbors(next).intersection(*mapped).to_vec();
    let mapped_non_neighbors: Vec<usize> = mapped
        .difference(g1.neighbors(next))
        .iter()
        .filter(|&p| p != next)
        .collect();

    for cand in 0..v {
        if used.contains(cand) || deg2[cand] != deg1[next] {
            continue;
        }
        let ok = mapped_neighbors
            .iter()
            .all(|&p| g2.collinear(map[p], cand))
            && mapped_non_neighbors
                .iter()
                .all(|&p| !g2.collinear(map[p], cand));
        if !ok {
            continue;
        }
        map[next] = cand;
        used.insert(cand);
        mapped.insert(next);
        if extend_isomorphism(g1, g2, deg1, deg2, map, used, mapped) {
            return true;
        }
        mapped.remove(next);
        used.remove(cand);
        map[next] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{verify_gq_axioms, GQOrder};

    #[test]
    fn doily_counts_and_axioms() {
        let doily = build_gq22();
        assert_eq!(doily.point_count(), 15);
        assert_eq!(doily.line_count(), 15);
        assert!(doily.lines().iter().all(|l| l.len() == 3));
        assert!((0..15).all(|p| doily.lines_through(p).len() == 3));
        assert!(verify_gq_axioms(&doily, GQOrder::new(2, 2)).all_pass());
    }

    #[test]
    fn quadric_model_counts() {
        let model = build_gq24_quadric();
        assert_eq!(model.geometry.point_count(), 27);
        assert_eq!(model.geometry.line_count(), 45);
        assert!(model.geometry.lines().iter().all(|l| l.len() == 3));
        assert!((0..27).all(|p| model.geometry.lines_through(p).len() == 5));
        assert!(verify_gq_axioms(&model.geometry, GQOrder::new(2, 4)).all_pass());
    }

    #[test]
    fn no_plane_on_the_elliptic_quadric() {
        let model = build_gq24_quadric();
        assert_eq!(model.plane_on_quadric(), None);
    }

    #[test]
    fn quadric_dictionary_roundtrip() {
        let model = build_gq24_quadric();
        for (i, v) in model.point_vectors.iter().enumerate() {
            assert_eq!(model.point_of_vector(v), Some(i));
            assert_eq!(model.form.evaluate(v), 0);
        }
    }

    #[test]
    fn w3_counts() {
        let w3 = build_w3();
        assert_eq!(w3.point_count(), 40);
        assert_eq!(w3.line_count(), 40);
        assert!(w3.lines().iter().all(|l| l.len() == 4));
        assert!((0..40).all(|p| w3.lines_through(p).len() == 4));
    }

    #[test]
    fn payne_model_from_first_point() {
        let w3 = build_w3();
        let payne = build_gq24_payne(&w3, 0).unwrap();
        assert_eq!(payne.geometry.point_count(), 27); // 40 - 1 - 12
        assert_eq!(payne.geometry.line_count(), 45); // 36 + 9
        assert_eq!(payne.spread.len(), 9);
        assert!(payne.geometry.is_spread(&payne.spread));
        assert!(verify_gq_axioms(&payne.geometry, GQOrder::new(2, 4)).all_pass());

        assert!(matches!(
            build_gq24_payne(&w3, 40),
            Err(Error::PointOutOfRange(40, 40))
        ));
    }

    #[test]
    fn quadric_and_payne_models_isomorphic() {
        let model = build_gq24_quadric();
        let w3 = build_w3();
        let payne = build_gq24_payne(&w3, 7).unwrap();
        let iso = find_isomorphism(&payne.geometry, &model.geometry)
            .expect("the GQ(2,4) is unique");
        assert!(is_geometry_isomorphism(&payne.geometry, &model.geometry, &iso));
    }

    #[test]
    fn payne_and_quadric_share_all_invariants() {
        let model = build_gq24_quadric();
        let w3 = build_w3();
        let payne = build_gq24_payne(&w3, 11).unwrap();
        let degrees = |g: &PointLineGeometry| {
            let mut d: Vec<usize> = (0..g.point_count())
                .map(|p| g.lines_through(p).len())
                .collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degrees(&payne.geometry), degrees(&model.geometry));
        assert_eq!(
            payne.geometry.triad_census(),
            model.geometry.triad_census()
        );
        assert_eq!(
            payne.geometry.find_spreads().len(),
            model.geometry.find_spreads().len()
        );
    }

    #[test]
    fn identity_isomorphism_accepted() {
        let doily = build_gq22();
        let iso = find_isomorphism(&doily, &doily).unwrap();
        assert!(is_geometry_isomorphism(&doily, &doily, &iso));
    }

    #[test]
    fn size_mismatch_yields_none() {
        let doily = build_gq22();
        let model = build_gq24_quadric();
        assert_eq!(find_isomorphism(&doily, &model.geometry), None);
    }

    #[test]
    fn grid_is_gq21() {
        let grid = build_grid();
        assert!(verify_gq_axioms(&grid, GQOrder::new(2, 1)).all_pass());
    }
}
