//! Simulation and analysis of distributed attack-resilient secondary control
//! for DC microgrids.
//!
//! A bank of droop-controlled converters feeds a resistive line/load network.
//! Each converter's secondary layer integrates a cooperative control input
//! computed from neighborhood relative information over a directed
//! communication graph, while an adaptive gain chain lets the loop reject
//! input-channel injections whose magnitude grows polynomially in time.
//!
//! Layout:
//! - [`graph`] — communication digraph, Laplacian/pinning matrices, spectral
//!   quantities.
//! - [`plant`] — converter bank, resistive network nodal solve, reduced
//!   consensus dynamics.
//! - [`controller`] — neighborhood error, adaptive/static control laws,
//!   attack signal generators and envelope checks.
//! - [`sim`] — scenario assembly and deterministic fixed-step RK4 closed-loop
//!   integration producing a [`sim::Trace`].
//! - [`analysis`] — regulation-error metrics, ultimate-bound reports, and the
//!   stability-monitor quantities.
//! - [`scenarios`] — bundled case-study scenario builders.

pub mod analysis;
pub mod controller;
pub mod graph;
pub mod ode;
pub mod plant;
pub mod scenarios;
pub mod sim;

pub use graph::CommGraph;
pub use plant::{ConverterBank, NetworkModel};
pub use sim::{Scenario, Trace};
