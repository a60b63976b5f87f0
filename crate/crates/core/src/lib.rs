pub mod asymptotics;
pub mod bigmath;
pub mod cli;
pub mod error;
pub mod genfun;
pub mod oracles;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
