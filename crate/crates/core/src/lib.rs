//! Irredundance, IR-sets and IR-graphs of small simple graphs.
//!
//! Graphs have at most 128 vertices; vertex sets are `u128` bitmasks.

pub mod constructions;
pub mod emit;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod input;
pub mod irredundance;
pub mod iso;
pub mod reconfig;
pub mod vertex_set;

pub use constructions::{build_disconnected_source, fixture, DisconnectedSource, DisconnectedSourceSpec, Fixture};
pub use error::{Error, Graph6Error, Result};
pub use family::{build_family, FamilySpec};
pub use graph::{Distance, Graph};
pub use harness::{check_theorems, probe_target, scan_census, Caps, CheckId, Finding, ProbeResult, ScanReport, Verdict};
pub use graph6::{emit_graph6, parse_graph6, read_graph6_stream, StreamEntry};
pub use irredundance::{
    enumerate_flip_sets, flip_set, is_irredundant, is_maximal_irredundant, lower_irredundance,
    private_neighbors, upper_irredundance, upper_irredundance_number, FlipChoice, FlipSets,
    IrredundanceReport,
};
pub use input::parse_graph_arg;
pub use iso::{are_isomorphic, find_isomorphism};
pub use reconfig::{build_ir_graph, IrGraph};
pub use vertex_set::{Vertex, VertexSet, MAX_VERTICES};
