//! `gq24 export`: deterministic serialization of the constructed graphs
//! (DOT, graph6, JSON edge lists) and of the classified Veldkamp lines.

use anyhow::{bail, Result};
use serde::Serialize;

use gq24::graphs::{disjoint_grid_triples, gray_configuration, SimpleGraph};
use gq24::hyperplanes::{classify_all, enumerate_hyperplanes_search, HyperplaneKind};
use gq24::models::{build_gq22, build_gq24_quadric, build_grid};
use gq24::veldkamp::{build_veldkamp_space, classify_lines, LineType};

use crate::verify::GeometryChoice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Selector {
    /// Collinearity graph of the chosen geometry.
    CollinearityGraph,
    /// Complement of the GQ(2,4) collinearity graph, SRG(27,16,10,8).
    Schlafli,
    /// Complement of the first perp of GQ(2,4), SRG(16,5,0,2).
    Clebsch,
    /// Incidence graph of the 27_3 configuration from the first grid triple.
    Gray,
    /// The 651 classified Veldkamp lines of GQ(2,4) (JSON only).
    VeldkampLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Graph6,
}

#[derive(Serialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct VeldkampLineRecord {
    index: usize,
    line_type: &'static str,
    /// Indices into the canonical hyperplane order.
    hyperplanes: Vec<usize>,
    /// Kinds of the three member hyperplanes.
    kinds: Vec<String>,
    /// The common intersection as geometry point indices.
    intersection: Vec<usize>,
}

fn graph_json(g: &SimpleGraph) -> String {
    let mut edges = Vec::new();
    for a in 0..g.vertex_count() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            edges.push((a, b));
        }
    }
    let mut out = serde_json::to_string_pretty(&GraphJson {
        vertices: g.vertex_count(),
        edges,
    })
    .expect("graph serializes");
    out.push('\n');
    out
}

fn render_graph(g: &SimpleGraph, name: &str, format: Format) -> String {
    match format {
        Format::Json => graph_json(g),
        Format::Dot => g.to_dot(name),
        Format::Graph6 => {
            let mut line = g.to_graph6();
            line.push('\n');
            line
        }
    }
}

pub fn run_export(selector: Selector, format: Format, geometry: GeometryChoice) -> Result<String> {
    match selector {
        Selector::CollinearityGraph => {
            let g = match geometry {
                GeometryChoice::Gq21 => build_grid(),
                GeometryChoice::Gq22 => build_gq22(),
                GeometryChoice::Gq24 => build_gq24_quadric().geometry,
            };
            Ok(render_graph(
                &SimpleGraph::collinearity_of(&g),
                "collinearity",
                format,
            ))
        }
        Selector::Schlafli => {
            let model = build_gq24_quadric();
            let graph = SimpleGraph::collinearity_of(&model.geometry).complement();
            Ok(render_graph(&graph, "schlafli", format))
        }
        Selector::Clebsch => {
            let model = build_gq24_quadric();
            let mut hs = enumerate_hyperplanes_search(&model.geometry);
            classify_all(&model.geometry, &mut hs)?;
            let perp = hs
                .iter()
                .find(|h| matches!(h.kind(), HyperplaneKind::Perp { .. }))
                .expect("GQ(2,4) has perps");
            let collinearity = SimpleGraph::collinearity_of(&model.geometry);
            let (graph, _) =
                collinearity.induced(perp.points().complement(model.geometry.point_count()));
            Ok(render_graph(&graph, "clebsch", format))
        }
        Selector::Gray => {
            let model = build_gq24_quadric();
            let triples = disjoint_grid_triples(&model.geometry);
            let cert = gray_configuration(&model.geometry, &triples[0])?;
            Ok(render_graph(&cert.incidence_graph, "gray", format))
        }
        Selector::VeldkampLines => {
            if format != Format::Json {
                bail!("veldkamp-lines supports only --format json");
            }
            let model = build_gq24_quadric();
            let mut hs = enumerate_hyperplanes_search(&model.geometry);
            classify_all(&model.geometry, &mut hs)?;
            let mut space = build_veldkamp_space(&model.geometry, hs)?;
            classify_lines(&mut space)?;
            let records: Vec<VeldkampLineRecord> = space
                .lines()
                .iter()
                .enumerate()
                .map(|(index, line)| VeldkampLineRecord {
                    index,
                    line_type: match line.line_type.expect("lines are classified") {
                        LineType::I => "I",
                        LineType::II => "II",
                        LineType::III => "III",
                        LineType::IV => "IV",
                    },
                    hyperplanes: line.members.clone(),
                    kinds: line
                        .members
                        .iter()
                        .map(|&m| match space.hyperplanes()[m].kind() {
                            HyperplaneKind::Perp { center } => format!("perp({center})"),
                            HyperplaneKind::Subquadrangle { .. } => "doily".to_string(),
                            HyperplaneKind::Ovoid => "ovoid".to_string(),
                            HyperplaneKind::Unclassified => "unclassified".to_string(),
                        })
                        .collect(),
                    intersection: line.intersection.to_vec(),
                })
                .collect();
            let mut out =
                serde_json::to_string_pretty(&records).expect("records serialize");
            out.push('\n');
            Ok(out)
        }
    }
}
