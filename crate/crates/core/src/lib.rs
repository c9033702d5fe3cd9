//! Decision procedures for PDF0L systems: factor languages, minimal
//! interpretations, weak and strong synchronization, circularity thresholds,
//! unbounded-repetitiveness certificates and injectivity collisions.
//!
//! ```
//! use df0l::{catalog, circularity::{weak_threshold, ThresholdStatus}};
//!
//! let tm = catalog::thue_morse();
//! let report = weak_threshold(&tm, 10).unwrap();
//! assert_eq!(report.status, ThresholdStatus::Found(3));
//! ```

pub mod catalog;
pub mod circularity;
pub mod cli;
pub mod error;
pub mod format;
pub mod injectivity;
pub mod interpretations;
pub mod language;
pub mod repetitiveness;
pub mod report;
pub mod system;
pub mod words;

pub use error::{Error, Result};
pub use interpretations::{Interpretation, Interpreter, PairSplit};
pub use language::FactorSet;
pub use system::{Morphism, System};
pub use words::{Alphabet, Letter, Word};
