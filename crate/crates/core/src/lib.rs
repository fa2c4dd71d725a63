pub mod campaigns;
pub mod cli;
pub mod coreq;
pub mod counting;
pub mod error;
pub mod fixed;
pub mod format;
pub mod jdt;
pub mod partition;
pub mod rsk;
pub mod stabilize;
pub mod tableau;
pub mod word;

pub use error::{Result, TableauError};
pub use partition::Partition;
pub use tableau::{SkewShape, SkewTableau};
pub use word::Word;
