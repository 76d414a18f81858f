//! Page turning, collapse certificates, homotopy groups and base change.

pub mod basechange;
pub mod engine;
pub mod pi;

pub use engine::{run, turn_page, CertKind, CollapseCertificate, EngineError, RunResult, RunStatus};
pub use pi::{assemble_pi, cell_string, extension_rules, ExtKind, ExtensionRule, PiCell, PiEntry, PiTable};
pub use basechange::{coefficient_map, compare, places, ComparisonReport};
