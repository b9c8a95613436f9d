//! A validated domain together with its decompositions and distance table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{horizontal_decomposition, validate, vertical_decomposition, Decomposition, Domain, Point};
use crate::graph::{DistanceMatrix, GraphSummary, OrientedGraph};
use crate::metrics::{
    diameter_edge_scan, diameter_fast, diameter_matmul, point_distance, radius_edge_scan, radius_matmul,
    small_case_fallback, DiameterResult, FallbackResult, RadiusResult, Which, VALIDITY_THRESHOLD,
};
use crate::oracle::GridModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiameterAlgo {
    EdgeScan,
    Matmul,
    Fast,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusAlgo {
    EdgeScan,
    Matmul,
    Oracle,
}

/// Engine output plus whether the request was answered by the fallback
/// because the oriented value was below the validity threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Routed<T> {
    #[serde(flatten)]
    pub result: T,
    pub routed_to_fallback: bool,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub domain: Domain,
    pub horizontal: Decomposition,
    pub vertical: Decomposition,
    pub graph: OrientedGraph,
    pub distances: DistanceMatrix,
    pub summary: GraphSummary,
}

impl Instance {
    pub fn new(domain: Domain) -> Result<Self> {
        let report = validate(&domain);
        if !report.is_ok() {
            return Err(Error::Invalid(report));
        }
        let horizontal = horizontal_decomposition(&domain);
        let vertical = vertical_decomposition(&domain);
        let graph = OrientedGraph::build(&horizontal, &vertical);
        let distances = graph.all_pairs()?;
        let summary = distances.summarize();
        Ok(Instance { domain, horizontal, vertical, graph, distances, summary })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Domain::parse(text)?)
    }

    pub fn grid(&self) -> GridModel {
        GridModel::build_grid(&self.domain)
    }

    pub fn point_distance(&self, p: Point, q: Point) -> Result<u32> {
        point_distance(&self.domain, &self.horizontal, &self.vertical, &self.distances, p, q)
    }

    pub fn diameter(&self, algo: DiameterAlgo) -> Result<Routed<DiameterResult>> {
        let (g, dm) = (&self.graph, &self.distances);
        if algo == DiameterAlgo::Oracle {
            return Ok(Routed { result: self.grid().oracle_diameter(), routed_to_fallback: false });
        }
        if self.summary.ordiam < VALIDITY_THRESHOLD {
            let FallbackResult::Diameter(result) = small_case_fallback(g, dm, Which::Diameter) else {
                unreachable!()
            };
            return Ok(Routed { result, routed_to_fallback: true });
        }
        let result = match algo {
            DiameterAlgo::EdgeScan => diameter_edge_scan(g, dm)?,
            DiameterAlgo::Matmul => diameter_matmul(g, dm)?,
            DiameterAlgo::Fast => diameter_fast(g, dm)?,
            DiameterAlgo::Oracle => unreachable!(),
        };
        Ok(Routed { result, routed_to_fallback: false })
    }

    pub fn radius(&self, algo: RadiusAlgo) -> Result<Routed<RadiusResult>> {
        let (g, dm) = (&self.graph, &self.distances);
        if algo == RadiusAlgo::Oracle {
            return Ok(Routed { result: self.grid().oracle_radius(), routed_to_fallback: false });
        }
        if self.summary.orrad < VALIDITY_THRESHOLD {
            let FallbackResult::Radius(result) = small_case_fallback(g, dm, Which::Radius) else {
                unreachable!()
            };
            return Ok(Routed { result, routed_to_fallback: true });
        }
        let result = match algo {
            RadiusAlgo::EdgeScan => radius_edge_scan(g, dm)?,
            RadiusAlgo::Matmul => radius_matmul(g, dm)?,
            RadiusAlgo::Oracle => unreachable!(),
        };
        Ok(Routed { result, routed_to_fallback: false })
    }
}
