pub mod casimir;
pub mod error;
pub mod numerics;
pub mod polder;
pub mod sheet;
pub mod sphere;
pub mod sweep;

pub use error::{Error, Result};
