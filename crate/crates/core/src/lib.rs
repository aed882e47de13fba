//! Differentially private temporal ensembles over drifting data streams.
//!
//! A fixed-capacity ensemble of black-box DP models is maintained over a
//! chunked stream: each update trains one new model on the newest chunk,
//! re-weights members with Laplace-noised validation statistics, and evicts
//! either the oldest or the lowest-weight member. Training subsets are
//! disjoint and every validation subset is queried a bounded number of
//! times, so the history-level privacy guarantee stays constant no matter
//! how many ensembles are released.
//!
//! Modules:
//! - [`privacy`]: Laplace sampling, sensitivity constants, budget
//!   calibration, and the [`privacy::BudgetLedger`] audit structure.
//! - [`weights`]: noisy model weights for the general-classification,
//!   focused-classification, and regression settings.
//! - [`ensemble`]: weighted prediction and the oldest/worst update rule.
//! - [`learners`]: clipped-gradient DP training of linear models and small
//!   fully connected networks, with freeze-prefix transfer learning.
//! - [`streams`]: drifting hyperplane generator, CSV ingestion, chunk
//!   splitting, and feature preprocessing.
//! - [`harness`]: the six benchmark methods, metrics, repeated runs, and
//!   result/audit emission.

pub mod ensemble;
pub mod harness;
pub mod learners;
pub mod privacy;
pub mod rng;
pub mod streams;
pub mod weights;

pub use ensemble::{Ensemble, EnsembleMember};
pub use learners::{LearnerSpec, ModelTrainer, TrainedModel};
pub use privacy::{BudgetLedger, PrivacyParams, UpdateMode};
pub use rng::{Lineage, SeedPair};
pub use streams::{DataChunk, Sample, Target};
pub use weights::{NoisyWeight, WeightScheme};
