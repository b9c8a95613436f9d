//! Rectilinear link distance in rectilinear domains with holes.
//!
//! A domain is decomposed into maximal horizontal and vertical rectangles;
//! the graph of oriented distances between them determines link distances,
//! the link diameter and the link radius. See [`instance::Instance`] for
//! the usual entry point.

pub mod error;
pub mod generator;
pub mod geometry;
pub mod graph;
pub mod instance;
pub mod metrics;
pub mod oracle;
pub mod report;
pub mod store;

pub use error::{Error, Result};
pub use instance::{DiameterAlgo, Instance, RadiusAlgo, Routed};
