//! Verification harness for the `hamcycle` library: reproducible random
//! corpora, campaign runners for the soundness properties that back the
//! degree-sum theorems, and the JSON report schema used by the CLI.

pub mod campaign;
pub mod corpus;
pub mod io;
pub mod report;

pub use campaign::{implication_scan, verify_lemmas, verify_main_theorem, CampaignResult, Violation};
pub use corpus::CorpusSpec;
