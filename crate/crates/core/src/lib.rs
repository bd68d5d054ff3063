pub mod asymptotics;
pub mod charfn;
pub mod density;
pub mod distributions;
pub mod error;
pub mod moments;
pub mod montecarlo;
pub mod oracle;
pub mod quadrature;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
