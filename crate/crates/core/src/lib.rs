//! Hybrid neural-numerical forecasting engine for sparsely observed
//! continental-scale transport processes.
//!
//! The engine discretizes the continuity equation with a finite-volume
//! scheme on an arbitrary tessellation (hexagonal grid or Voronoi diagram),
//! parameterizes velocities and source/sink terms with small learned
//! networks, maps between sparse sensor space and cell space, and trains
//! the whole pipeline end-to-end against sensor observations.
//!
//! Module map:
//! - [`tessellation`]: hexagonal / Voronoi tessellations, dual graphs, geometry
//! - [`obsmap`]: sensor-to-cell interpolation and cell-to-sensor observation operators
//! - [`autodiff`]: tape-based reverse-mode differentiation over dense arrays
//! - [`fvm`]: differentiable finite-volume kernels (upwind flux, continuity update)
//! - [`nets`]: MLP, LSTM cell, graph attention, dropout
//! - [`model`]: the full encoder/decoder forecast model
//! - [`synth`]: synthetic ground-truth generation by fine-grid simulation
//! - [`train`]: loss, horizon curriculum, Adam, sequence construction, spatial CV
//! - [`eval`]: forecast metrics, baselines, cross-validation analysis
//! - [`data`]: file formats, dataset container, value scaling

pub mod autodiff;
pub mod data;
pub mod error;
pub mod eval;
pub mod fvm;
pub mod model;
pub mod nets;
pub mod obsmap;
pub mod rng;
pub mod synth;
pub mod tessellation;
pub mod train;

pub use error::{Error, Result};
pub use tessellation::{Domain, Tessellation};
