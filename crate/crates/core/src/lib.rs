pub mod error;
pub mod exactlinalg;

pub use error::{Error, Result};
pub mod framework;
pub mod fanbuild;
pub mod chow;
pub mod multiframe;
pub mod cli;
pub mod corpus;
