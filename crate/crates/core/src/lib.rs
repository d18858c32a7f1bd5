pub mod analytic;
pub mod cli;
pub mod error;
pub mod fd;
pub mod modal;
pub mod oracle;
pub mod params;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
pub use modal::{Evaluation, Method, ModalProfile, RadialShape};
pub use params::{FlowConfig, FluidParams};
