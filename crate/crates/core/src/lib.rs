//! Classification of phonetic segments (place of articulation) from raw
//! ultrasound tongue image frames.
//!
//! The crate covers the full experiment pipeline:
//!
//! - [`corpus`]: frame/utterance/speaker types, on-disk ingestion (`.ult`
//!   raw frames, alignment TSVs, speaker metadata) and a deterministic
//!   synthetic corpus generator for desk-scale experiments.
//! - [`dataset`]: utterance-level splits, mid-phone example extraction,
//!   window oversampling, sampling scores, and the four scenario layouts
//!   (dependent, multi-speaker, independent, adapted).
//! - [`features`]: mean-variance normalization, eigentongue PCA, truncated
//!   2D DCT, speaker means, and model-input assembly.
//! - [`nn`]: dense/convolutional network kernels with exact backpropagation,
//!   SGD, gradient checking, and binary checkpoints.
//! - [`training`]: epoch loop with best-epoch retention, fine-tuning
//!   adaptation, and leave-one-out scenario orchestration.
//! - [`evaluation`]: accuracy, correlation analyses, results tables,
//!   adaptation-size curves, and pairwise scatter statistics.

pub mod corpus;
pub mod dataset;
pub mod evaluation;
pub mod features;
pub(crate) mod linalg;
pub mod nn;
pub mod training;
pub mod variant;

pub use corpus::{ArticulationClass, Corpus, PhoneAlignment, Speaker, UltrasoundFrame, Utterance};
pub use dataset::{CorpusSplits, LabeledExample, Provenance, ScenarioSpec, SplitSpec};
pub use features::{FittedPipeline, ModelInput, PipelineConfig};
pub use nn::{Network, SgdConfig};
pub use training::{HyperProfile, ScenarioKind, TrainReport};
pub use variant::ModelVariant;
