//! Canonical proximities between walks: evaluation, weight recovery, the
//! average-proximity construction, nearest-reference classification and
//! the exact inequality suite.

mod checks;
mod model;
mod pipeline;
mod recover;
mod sampling;
mod weights;

pub use checks::{
    check_concavity_witness, check_domination, concavity_witness_report, domination_report, pseudometric_report,
    CheckReport, CheckRow, Sample,
};
pub use model::{EvaluationRecord, ModelRecord, ProximityModel};
pub use pipeline::{
    build_average_proximity, progress_evaluation, visited_vertices, AverageProximity, PipelineConfig,
};
pub use recover::{recover_weights, SingletonProximity, SingletonTable};
pub use sampling::{enumerate_simple_paths, sample_paths};
pub use weights::{average_weights, WeightSequence};
