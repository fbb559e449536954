//! Graph-theoretic certificates: strongly regular parameter checks,
//! hyperplane complements (Clebsch graph with its Petersen subgraphs, the
//! Schläfli double-six), disjoint grid triples, and the Gray 27₃
//! configuration, plus DOT and graph6 serialization.

use crate::hyperplanes::{classify_hyperplane, GeometricHyperplane, HyperplaneKind};
use crate::incidence::PointLineGeometry;
use crate::pointset::PointSet;
use crate::{Error, Result};

/// An undirected loop-free graph on vertices `0..n`, adjacency stored as
/// bitmask rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<PointSet>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        assert!(n <= 64);
        let mut adj = vec![PointSet::EMPTY; n];
        for &(a, b) in edges {
            assert!(a < n && b < n && a != b, "edge ({a},{b}) invalid");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        SimpleGraph { n, adj }
    }

    /// The collinearity (point) graph of a geometry.
    pub fn collinearity_of(g: &PointLineGeometry) -> SimpleGraph {
        SimpleGraph {
            n: g.point_count(),
            adj: (0..g.point_count()).map(|p| g.neighbors(p)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> PointSet {
        self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = PointSet::full(self.n);
        SimpleGraph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| {
                    let mut row = full.difference(self.adj[v]);
                    row.remove(v);
                    row
                })
                .collect(),
        }
    }

    /// The subgraph induced on `vertices`, relabelled; also returns the
    /// new-to-old vertex map.
    pub fn induced(&self, vertices: PointSet) -> (SimpleGraph, Vec<usize>) {
        let old: Vec<usize> = vertices.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (new, &o) in old.iter().enumerate() {
            new_index[o] = new;
        }
        let adj = old
            .iter()
            .map(|&o| {
                PointSet::from_indices(
                    self.adj[o]
                        .intersection(vertices)
                        .iter()
                        .map(|w| new_index[w]),
                )
            })
            .collect();
        (SimpleGraph { n: old.len(), adj }, old)
    }

    /// All triangles, each as a sorted vertex triple.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                for c in self.adj[a]
                    .intersection(self.adj[b])
                    .iter()
                    .filter(|&c| c > b)
                {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Two-coloring if the graph is bipartite, as the set of one side.
    pub fn bipartition(&self) -> Option<PointSet> {
        let mut color = vec![None; self.n];
        let mut side = PointSet::EMPTY;
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                if !cv {
                    side.insert(v);
                }
                for w in self.adj[v].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = PointSet::singleton(0);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Length of a shortest cycle, or None for a forest. BFS from every
    /// vertex; a non-tree edge at depths (d1, d2) closes a cycle of length
    /// at most d1 + d2 + 1.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for start in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let cycle = dist[v] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// graph6 encoding (n <= 62: single-byte size, then the upper triangle
    /// in column order packed into 6-bit groups offset by 63).
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "short graph6 form covers n <= 62");
        let mut bits: Vec<bool> = Vec::with_capacity(self.n * (self.n.max(1) - 1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.adjacent(i, j));
            }
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut value = 0u8;
            for (k, &bit) in chunk.iter().enumerate() {
                if bit {
                    value |= 1 << (5 - k);
                }
            }
            out.push((value + 63) as char);
        }
        out
    }

    /// DOT serialization with deterministic vertex and edge order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for a in 0..self.n {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push_str(&format!("  {a} -- {b};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Exact strongly-regular parameter check: returns (v, k, lambda, mu) when
/// the graph is k-regular with uniform common-neighbor counts over all
/// adjacent and all non-adjacent pairs (both kinds of pairs must exist).
pub fn srg_parameters(g: &SimpleGraph) -> Option<(usize, usize, usize, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (1..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for a in 0..n {
        for b in a + 1..n {
            let common = g.neighbors(a).intersection(g.neighbors(b)).len();
            let slot = if g.adjacent(a, b) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x == common => {}
                Some(_) => return None,
            }
        }
    }
    Some((n, k, lambda?, mu?))
}

/// Certificate for the complement of a perp: the induced collinearity graph
/// is the Clebsch graph SRG(16,5,0,2), and the non-neighbors of every
/// vertex induce a Petersen graph SRG(10,3,0,1).
#[derive(Debug, Clone)]
pub struct ClebschCertificate {
    pub srg: (usize, usize, usize, usize),
    pub petersen: (usize, usize, usize, usize),
    pub graph: SimpleGraph,
}

pub fn clebsch_certificate(
    g: &PointLineGeometry,
    h: &GeometricHyperplane,
) -> Result<ClebschCertificate> {
    if !matches!(classify_hyperplane(g, h)?, HyperplaneKind::Perp { .. }) {
        return Err(Error::ClassificationConflict(
            "complement certificate requires a perp hyperplane".into(),
        ));
    }
    let collinearity = SimpleGraph::collinearity_of(g);
    let (graph, _) = collinearity.induced(h.points().complement(g.point_count()));
    let srg = srg_parameters(&graph).ok_or_else(|| {
        Error::ClassificationConflict("perp complement is not strongly regular".into())
    })?;
    if srg != (16, 5, 0, 2) {
        return Err(Error::ClassificationConflict(format!(
            "perp complement has SRG parameters {srg:?}, expected (16,5,0,2)"
        )));
    }
    let mut petersen = None;
    for v in 0..graph.vertex_count() {
        let mut non_neighbors = graph.neighbors(v).complement(graph.vertex_count());
        non_neighbors.remove(v);
        let (sub, _) = graph.induced(non_neighbors);
        let params = srg_parameters(&sub).ok_or_else(|| {
            Error::ClassificationConflict(format!(
                "non-neighbors of vertex {v} are not strongly regular"
            ))
        })?;
        if params != (10, 3, 0, 1) {
            return Err(Error::ClassificationConflict(format!(
                "non-neighbor subgraph at {v} has parameters {params:?}"
            )));
        }
        petersen = Some(params);
    }
    Ok(ClebschCertificate {
        srg,
        petersen: petersen.expect("16 vertices checked"),
        graph,
    })
}

/// Certificate for the complement of a doily: a 5-regular bipartite graph
/// on 6+6 vertices whose missing cross-edges form a perfect matching
/// (K6,6 minus a perfect matching), with each external point tracing an
/// ovoid on the doily.
#[derive(Debug, Clone)]
pub struct DoubleSixCertificate {
    pub vertices: usize,
    pub degree: usize,
    pub parts: (usize, usize),
    pub matching_is_perfect: bool,
    pub traces_are_ovoids: bool,
    pub graph: SimpleGraph,
}

pub fn double_six_certificate(
    g: &PointLineGeometry,
    h: &GeometricHyperplane,
) -> Result<DoubleSixCertificate> {
    if !matches!(
        classify_hyperplane(g, h)?,
        HyperplaneKind::Subquadrangle { .. }
    ) {
        return Err(Error::ClassificationConflict(
            "double-six certificate requires a doily hyperplane".into(),
        ));
    }
    let complement = h.points().complement(g.point_count());
    let collinearity = SimpleGraph::collinearity_of(g);
    let (graph, _) = collinearity.induced(complement);
    if graph.vertex_count() != 12 || (0..12).any(|v| graph.degree(v) != 5) {
        return Err(Error::ClassificationConflict(
            "doily complement is not 5-regular on 12 vertices".into(),
        ));
    }
    let side = graph
        .bipartition()
        .ok_or_else(|| Error::ClassificationConflict("doily complement is not bipartite".into()))?;
    let parts = (side.len(), 12 - side.len());
    if parts != (6, 6) {
        return Err(Error::ClassificationConflict(format!(
            "doily complement has parts {parts:?}, expected (6,6)"
        )));
    }
    // across the parts each vertex misses exactly one partner, and the
    // missing pairs form an involution: K6,6 minus a perfect matching
    let mut partner = [usize::MAX; 12];
    for (v, slot) in partner.iter_mut().enumerate() {
        let other_side = if side.contains(v) {
            side.complement(12)
        } else {
            side
        };
        let missing: Vec<usize> = other_side.difference(graph.neighbors(v)).to_vec();
        let [unique] = missing[..] else {
            return Err(Error::ClassificationConflict(format!(
                "vertex {v} misses {} cross-vertices, expected 1",
                missing.len()
            )));
        };
        *slot = unique;
    }
    let matching_is_perfect = (0..12).all(|v| partner[partner[v]] == v);

    // each double-six point is collinear with exactly 5 doily points
    // forming an ovoid of the doily
    let (doily_geom, doily_old) = g.induced(h.points());
    let mut traces_are_ovoids = true;
    for c in complement.iter() {
        let trace = g.neighbors(c).intersection(h.points());
        let mapped = PointSet::from_indices(
            doily_old
                .iter()
                .enumerate()
                .filter(|(_, &o)| trace.contains(o))
                .map(|(new, _)| new),
        );
        if trace.len() != 5 || !doily_geom.is_ovoid(mapped) {
            traces_are_ovoids = false;
            break;
        }
    }
    Ok(DoubleSixCertificate {
        vertices: 12,
        degree: 5,
        parts,
        matching_is_perfect,
        traces_are_ovoids,
        graph,
    })
}

/// All 9-point grid substructures (GQ(2,1) with 6 internal lines), found
/// from pairs of disjoint lines and their cross-lines rather than by
/// scanning 9-subsets.
pub fn find_grids(g: &PointLineGeometry) -> Vec<PointSet> {
    let mut grids = std::collections::BTreeSet::new();
    for i in 0..g.line_count() {
        for j in i + 1..g.line_count() {
            let (l1, l2) = (g.line(i), g.line(j));
            if !l1.is_disjoint(l2) {
                continue;
            }
            let mut thirds = PointSet::EMPTY;
            let mut ok = true;
            for x in l1.iter() {
                // the unique projection of x onto l2 and its joining line
                let ys: Vec<usize> = l2.intersection(g.neighbors(x)).to_vec();
                let [y] = ys[..] else {
                    ok = false;
                    break;
                };
                let cross = g
                    .lines_through(x)
                    .iter()
                    .map(|&m| g.line(m))
                    .find(|m| m.contains(y))
                    .expect("x and y are collinear");
                for z in cross.iter() {
                    if z != x && z != y {
                        thirds.insert(z);
                    }
                }
            }
            if ok && thirds.len() == 3 && g.is_line(thirds) {
                grids.insert(l1.union(l2).union(thirds));
            }
        }
    }
    let grids: Vec<PointSet> = grids.into_iter().collect();
    debug_assert!(grids.iter().all(|&grid| {
        let (induced, _) = g.induced(grid);
        induced.line_count() == 6
    }));
    grids
}

/// All unordered triples of pairwise disjoint grids partitioning the point
/// set of GQ(2,4).
pub fn disjoint_grid_triples(g: &PointLineGeometry) -> Vec<[PointSet; 3]> {
    let grids = find_grids(g);
    let full = PointSet::full(g.point_count());
    let mut triples = Vec::new();
    for i in 0..grids.len() {
        for j in i + 1..grids.len() {
            if !grids[i].is_disjoint(grids[j]) {
                continue;
            }
            let rest = full.difference(grids[i].union(grids[j]));
            if let Ok(k) = grids.binary_search(&rest) {
                if k > j {
                    triples.push([grids[i], grids[j], grids[k]]);
                }
            }
        }
    }
    triples
}

/// Certificate for the 27₃ configuration left after removing a disjoint
/// grid triple's 18 lines, and its 54-vertex point-line incidence graph
/// (the Gray graph).
#[derive(Debug, Clone)]
pub struct GrayCertificate {
    pub configuration_points: usize,
    pub configuration_lines: usize,
    pub points_per_line: usize,
    pub lines_per_point: usize,
    pub cubic: bool,
    pub bipartite: bool,
    pub connected: bool,
    pub girth: usize,
    pub incidence_graph: SimpleGraph,
}

pub fn gray_configuration(
    g: &PointLineGeometry,
    triple: &[PointSet; 3],
) -> Result<GrayCertificate> {
    let covered = triple[0].union(triple[1]).union(triple[2]);
    if covered != PointSet::full(g.point_count())
        || triple.iter().any(|grid| grid.len() != 9)
    {
        return Err(Error::ClassificationConflict(
            "grid triple does not partition the point set".into(),
        ));
    }
    // drop the 6 internal lines of each grid
    let keep: Vec<PointSet> = g
        .lines()
        .iter()
        .filter(|line| !triple.iter().any(|grid| line.is_subset_of(*grid)))
        .copied()
        .collect();
    let points = g.point_count();
    let lines = keep.len();

    let mut per_point = vec![0usize; points];
    let mut edges = Vec::new();
    for (slot, line) in keep.iter().enumerate() {
        for p in line.iter() {
            per_point[p] += 1;
            edges.push((p, points + slot));
        }
    }
    let points_per_line = keep.first().map_or(0, |l| l.len());
    if keep.iter().any(|l| l.len() != points_per_line) {
        return Err(Error::ClassificationConflict(
            "remaining lines have mixed sizes".into(),
        ));
    }
    let lines_per_point = per_point[0];
    if per_point.iter().any(|&d| d != lines_per_point) {
        return Err(Error::ClassificationConflict(
            "remaining configuration is not point-regular".into(),
        ));
    }

    let incidence_graph = SimpleGraph::new(points + lines, &edges);
    let cubic = (0..incidence_graph.vertex_count()).all(|v| incidence_graph.degree(v) == 3);
    let bipartite = incidence_graph.bipartition().is_some();
    let connected = incidence_graph.is_connected();
    let girth = incidence_graph.girth().unwrap_or(0);
    Ok(GrayCertificate {
        configuration_points: points,
        configuration_lines: lines,
        points_per_line,
        lines_per_point,
        cubic,
        bipartite,
        connected,
        girth,
        incidence_graph,
    })
}

/// Backtracking graph isomorphism with degree pruning and adjacency
/// consistency, the graph analog of `models::find_isomorphism`.
pub fn graph_isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = PointSet::EMPTY;
    let mut mapped = PointSet::EMPTY;
    if extend_graph_iso(a, b, &mut map, &mut used, &mut mapped) {
        Some(map)
    } else {
        None
    }
}

fn extend_graph_iso(
    a: &SimpleGraph,
    b: &SimpleGraph,
    map: &mut Vec<usize>,
    used: &mut PointSet,
    mapped: &mut PointSet,
) -> bool {
    let n = a.vertex_count();
    if mapped.len() == n {
        return true;
    }
    let next = (0..n)
        .filter(|&v| !mapped.contains(v))
        .max_by_key(|&v| {
            (
                a.neighbors(v).intersection(*mapped).len(),
                std::cmp::Reverse(v),
            )
        })
        .expect("some vertex unmapped");
    let nbrs: Vec<usize> = a.neighbors(next).intersection(*mapped).to_vec();
    let non_nbrs: Vec<usize> = mapped
        .difference(a.neighbors(next))
        .iter()
        .filter(|&v| v != next)
        .collect();
    for cand in 0..n {
        if used.contains(cand) || b.degree(cand) != a.degree(next) {
            continue;
        }
        if nbrs.iter().all(|&v| b.adjacent(map[v], cand))
            && non_nbrs.iter().all(|&v| !b.adjacent(map[v], cand))
        {
            map[next] = cand;
            used.insert(cand);
            mapped.insert(next);
            if extend_graph_iso(a, b, map, used, mapped) {
                return true;
            }
            mapped.remove(next);
            used.remove(cand);
            map[next] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperplanes::{classify_all, enumerate_hyperplanes_search};
    use crate::models;

    fn classified_hyperplanes(g: &PointLineGeometry) -> Vec<GeometricHyperplane> {
        let mut hs = enumerate_hyperplanes_search(g);
        classify_all(g, &mut hs).unwrap();
        hs
    }

    #[test]
    fn collinearity_graph_is_srg_27_10_1_5() {
        let model = models::build_gq24_quadric();
        let graph = SimpleGraph::collinearity_of(&model.geometry);
        assert_eq!(srg_parameters(&graph), Some((27, 10, 1, 5)));
        // λ = 1 forces triangle = line
        assert_eq!(graph.triangles().len(), 45);
    }

    #[test]
    fn complement_is_schlafli_graph() {
        let model = models::build_gq24_quadric();
        let graph = SimpleGraph::collinearity_of(&model.geometry).complement();
        assert_eq!(srg_parameters(&graph), Some((27, 16, 10, 8)));
    }

    #[test]
    fn doily_collinearity_parameters() {
        let doily = models::build_gq22();
        let graph = SimpleGraph::collinearity_of(&doily);
        assert_eq!(srg_parameters(&graph), Some((15, 6, 1, 3)));
    }

    #[test]
    fn path_graph_is_not_srg() {
        let path = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(srg_parameters(&path), None);
    }

    #[test]
    fn clebsch_and_petersen() {
        let model = models::build_gq24_quadric();
        let hs = classified_hyperplanes(&model.geometry);
        let perp = hs
            .iter()
            .find(|h| matches!(h.kind(), HyperplaneKind::Perp { .. }))
            .unwrap();
        let cert = clebsch_certificate(&model.geometry, perp).unwrap();
        assert_eq!(cert.srg, (16, 5, 0, 2));
        assert_eq!(cert.petersen, (10, 3, 0, 1));

        // a doily is rejected
        let doily = hs
            .iter()
            .find(|h| matches!(h.kind(), HyperplaneKind::Subquadrangle { .. }))
            .unwrap();
        assert!(clebsch_certificate(&model.geometry, doily).is_err());
    }

    #[test]
    fn all_perp_complements_isomorphic() {
        let model = models::build_gq24_quadric();
        let hs = classified_hyperplanes(&model.geometry);
        let collinearity = SimpleGraph::collinearity_of(&model.geometry);
        let complements: Vec<SimpleGraph> = hs
            .iter()
            .filter(|h| matches!(h.kind(), HyperplaneKind::Perp { .. }))
            .map(|h| collinearity.induced(h.points().complement(27)).0)
            .collect();
        assert_eq!(complements.len(), 27);
        for other in &complements[1..] {
            assert!(graph_isomorphism(&complements[0], other).is_some());
        }
    }

    #[test]
    fn all_doily_complements_isomorphic() {
        let model = models::build_gq24_quadric();
        let hs = classified_hyperplanes(&model.geometry);
        let collinearity = SimpleGraph::collinearity_of(&model.geometry);
        let complements: Vec<SimpleGraph> = hs
            .iter()
            .filter(|h| matches!(h.kind(), HyperplaneKind::Subquadrangle { .. }))
            .map(|h| collinearity.induced(h.points().complement(27)).0)
            .collect();
        assert_eq!(complements.len(), 36);
        for other in &complements[1..] {
            assert!(graph_isomorphism(&complements[0], other).is_some());
        }
    }

    #[test]
    fn double_six() {
        let model = models::build_gq24_quadric();
        let hs = classified_hyperplanes(&model.geometry);
        let doily = hs
            .iter()
            .find(|h| matches!(h.kind(), HyperplaneKind::Subquadrangle { .. }))
            .unwrap();
        let cert = double_six_certificate(&model.geometry, doily).unwrap();
        assert_eq!(cert.parts, (6, 6));
        assert!(cert.matching_is_perfect);
        assert!(cert.traces_are_ovoids);

        // reference model: K6,6 minus a perfect matching
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                if a != b {
                    edges.push((a, 6 + b));
                }
            }
        }
        let reference = SimpleGraph::new(12, &edges);
        assert!(graph_isomorphism(&cert.graph, &reference).is_some());
    }

    #[test]
    fn grid_triples_number_40() {
        let model = models::build_gq24_quadric();
        let grids = find_grids(&model.geometry);
        assert_eq!(grids.len(), 120);
        let triples = disjoint_grid_triples(&model.geometry);
        assert_eq!(triples.len(), 40);
        for t in &triples {
            assert!(t[0].is_disjoint(t[1]) && t[0].is_disjoint(t[2]) && t[1].is_disjoint(t[2]));
            assert_eq!(t[0].union(t[1]).union(t[2]), PointSet::full(27));
            for grid in t {
                let (induced, _) = model.geometry.induced(*grid);
                assert_eq!(induced.point_count(), 9);
                assert_eq!(induced.line_count(), 6);
            }
        }
    }

    #[test]
    fn gray_graph_certificate() {
        let model = models::build_gq24_quadric();
        let triples = disjoint_grid_triples(&model.geometry);
        let cert = gray_configuration(&model.geometry, &triples[0]).unwrap();
        assert_eq!(cert.configuration_points, 27);
        assert_eq!(cert.configuration_lines, 27);
        assert_eq!(cert.points_per_line, 3);
        assert_eq!(cert.lines_per_point, 3);
        assert!(cert.cubic && cert.bipartite && cert.connected);
        assert_eq!(cert.girth, 8);
        assert_eq!(cert.incidence_graph.vertex_count(), 54);
    }

    #[test]
    fn all_grid_triples_give_the_same_certificate() {
        let model = models::build_gq24_quadric();
        let triples = disjoint_grid_triples(&model.geometry);
        for t in &triples {
            let cert = gray_configuration(&model.geometry, t).unwrap();
            assert!(cert.cubic && cert.bipartite && cert.connected);
            assert_eq!(cert.girth, 8);
        }
    }

    #[test]
    fn graph6_small_examples() {
        // reference encodings cross-checked against networkx
        let k4 = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.to_graph6(), "C~");
        let c5 = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5.to_graph6(), "Dhc");
        let p4 = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.to_graph6(), "Ch");
    }

    #[test]
    fn dot_output_is_deterministic() {
        let g = SimpleGraph::new(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            g.to_dot("path3"),
            "graph path3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn girth_examples() {
        let c5 = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5.girth(), Some(5));
        let tree = SimpleGraph::new(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(tree.girth(), None);
        let k4 = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.girth(), Some(3));
    }
}
