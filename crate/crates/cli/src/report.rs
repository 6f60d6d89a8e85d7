//! Analysis reports for the `approx` command: one structured record per
//! computed rough pair, serializable as versioned JSON and printable as a
//! stable text layout.

use serde::Serialize;

use rough_cayley::approx::is_definable;
use rough_cayley::graph::{ConnectionSet, Graph};
use rough_cayley::group::{ElementSet, FiniteGroup};
use rough_cayley::rough::{
    is_definable_by_orbit, is_edge_rough_generating, is_edge_rough_optimal, is_rough_generating,
    is_rough_optimal, is_vertex_rough_generating, is_vertex_rough_optimal, Family, RoughGraphPair,
    Side,
};

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: GroupDescriptor,
    pub family: String,
    pub configuration: Configuration,
    pub lower: GraphReport,
    pub upper: GraphReport,
    pub predicates: Predicates,
}

#[derive(Serialize)]
pub struct GroupDescriptor {
    pub spec: String,
    pub order: usize,
}

#[derive(Serialize)]
pub struct Configuration {
    pub modulus: Vec<String>,
    pub connection: Vec<String>,
    pub vertices: Option<Vec<String>>,
    pub strict: bool,
}

#[derive(Serialize)]
pub struct GraphReport {
    pub vertices: Vec<String>,
    pub connection: Vec<String>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: Option<bool>,
    pub min_degree: Option<usize>,
    pub edge_connectivity: Option<usize>,
    pub optimal_connected: bool,
}

#[derive(Serialize)]
pub struct Predicates {
    pub lower: SidePredicates,
    pub upper: SidePredicates,
    pub definable: Option<bool>,
    pub orbit_definable: Option<bool>,
}

#[derive(Serialize)]
pub struct SidePredicates {
    pub generating: bool,
    pub optimal: bool,
}

fn labels_of(group: &FiniteGroup, set: ElementSet) -> Vec<String> {
    set.iter().map(|v| group.label(v).to_string()).collect()
}

fn graph_report(group: &FiniteGroup, graph: &Graph, connection: ElementSet) -> GraphReport {
    GraphReport {
        vertices: labels_of(group, graph.vertices()),
        connection: labels_of(group, connection),
        vertex_count: graph.vertex_count(),
        edge_count: graph.edge_count(),
        connected: graph.is_connected().ok(),
        min_degree: graph.min_degree(),
        edge_connectivity: graph.edge_connectivity().ok(),
        optimal_connected: graph.is_optimal_connected(),
    }
}

pub struct ReportInputs<'a> {
    pub group: &'a FiniteGroup,
    pub spec: &'a str,
    pub modulus: ElementSet,
    pub connection: &'a ConnectionSet,
    pub vertices: Option<ElementSet>,
    pub strict: bool,
}

pub fn build(inputs: &ReportInputs, pair: &RoughGraphPair) -> Result<AnalysisReport, String> {
    let group = inputs.group;
    let n = inputs.modulus;
    let side_predicates = |side: Side| -> Result<SidePredicates, String> {
        let (generating, optimal) = match (pair.family, inputs.vertices) {
            (Family::Edge, _) => (
                is_edge_rough_generating(group, n, inputs.connection, side),
                is_edge_rough_optimal(group, n, inputs.connection, side),
            ),
            (Family::Vertex, Some(r)) => (
                is_vertex_rough_generating(group, n, r, inputs.connection, side),
                is_vertex_rough_optimal(group, n, r, inputs.connection, side),
            ),
            (Family::Full, Some(r)) => (
                is_rough_generating(group, n, r, inputs.connection, side),
                is_rough_optimal(group, n, r, inputs.connection, side),
            ),
            (_, None) => return Err("vertex set required for this family".to_string()),
        };
        Ok(SidePredicates {
            generating: generating.map_err(|err| err.to_string())?,
            optimal: optimal.map_err(|err| err.to_string())?,
        })
    };

    let definable = match inputs.vertices {
        Some(r) => Some(is_definable(group, n, r).map_err(|err| err.to_string())?),
        None => None,
    };
    let orbit_definable = match inputs.vertices {
        Some(r) => Some(
            is_definable_by_orbit(group, n, r, inputs.connection).map_err(|err| err.to_string())?,
        ),
        None => None,
    };

    Ok(AnalysisReport {
        schema: 1,
        group: GroupDescriptor {
            spec: inputs.spec.to_string(),
            order: group.order(),
        },
        family: pair.family.to_string(),
        configuration: Configuration {
            modulus: labels_of(group, n),
            connection: labels_of(group, inputs.connection.members()),
            vertices: inputs.vertices.map(|r| labels_of(group, r)),
            strict: inputs.strict,
        },
        lower: graph_report(group, &pair.lower, pair.lower_connection),
        upper: graph_report(group, &pair.upper, pair.upper_connection),
        predicates: Predicates {
            lower: side_predicates(Side::Lower)?,
            upper: side_predicates(Side::Upper)?,
            definable,
            orbit_definable,
        },
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    /// Stable multi-line text rendering for stdout.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, text: String| {
            out.push_str(&text);
            out.push('\n');
        };
        line(
            &mut out,
            format!(
                "group {} (order {}), family {}",
                self.group.spec, self.group.order, self.family
            ),
        );
        line(
            &mut out,
            format!(
                "modulus N = {{{}}}, connection S = {{{}}}{}",
                self.configuration.modulus.join(", "),
                self.configuration.connection.join(", "),
                match &self.configuration.vertices {
                    Some(r) => format!(", vertices R = {{{}}}", r.join(", ")),
                    None => String::new(),
                }
            ),
        );
        for (name, side, preds) in [
            ("lower", &self.lower, &self.predicates.lower),
            ("upper", &self.upper, &self.predicates.upper),
        ] {
            line(
                &mut out,
                format!(
                    "{name}: vertices {{{}}} ({}), connection {{{}}}, {} edges",
                    side.vertices.join(", "),
                    side.vertex_count,
                    side.connection.join(", "),
                    side.edge_count
                ),
            );
            line(
                &mut out,
                format!(
                    "{name}: connected={} min_degree={} edge_connectivity={} optimal_connected={} generating={} optimal={}",
                    render_option(side.connected),
                    render_option(side.min_degree),
                    render_option(side.edge_connectivity),
                    side.optimal_connected,
                    preds.generating,
                    preds.optimal
                ),
            );
        }
        if let Some(definable) = self.predicates.definable {
            line(
                &mut out,
                format!(
                    "definable={} orbit_definable={}",
                    definable,
                    render_option(self.predicates.orbit_definable)
                ),
            );
        }
        out
    }
}

fn render_option<T: std::fmt::Display>(value: Option<T>) -> String {
    match value {
        Some(value) => value.to_string(),
        None => "-".to_string(),
    }
}
