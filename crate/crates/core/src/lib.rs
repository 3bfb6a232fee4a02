//! Narrowband multipath channel simulation for antennas that counter-move
//! against their platform.
//!
//! An antenna mounted on a moving platform normally drags its channel through
//! the surrounding multipath interference pattern. If the antenna instead slides
//! backwards on its platform at the platform's speed, its absolute position, and
//! with it the channel, stays put. This crate simulates that setup:
//!
//! - [`geometry`]: positions, carrier, complex gains
//! - [`propagation`]: line-of-sight and single-bounce paths, channel gain, Doppler
//! - [`motion`]: stepped platform trajectory, antenna rail, compensation modes, hold-time budget
//! - [`scenario`]: seeded environments and the fixed / compensated / stationary runs
//! - [`metrics`]: amplitude span, unwrapped phase excursion, in-motion Doppler
//! - [`config`], [`io`], [`cli`]: text configuration, CSV/JSON output, command entry points
//!
//! ```
//! use channel_static::{metrics, scenario};
//!
//! let trip = scenario::run_triplet(&scenario::office_scenario(7)).unwrap();
//! assert!(metrics::amplitude_span_db(&trip.fixed) > 0.0);
//! assert_eq!(metrics::amplitude_span_db(&trip.compensated), 0.0);
//! ```
//!
//! The `examples/` directory has one runnable program per capability
//! (`cargo run --example <name>`): `anechoic_triplet`, `office_fading`,
//! `parasitic_residual`, `rail_saturation`, `null_spacing`,
//! `doppler_compensation`, `hold_time_budget`, `config_to_csv` and
//! `seed_sweep`.

pub mod cli;
pub mod config;
pub mod error;
pub mod geometry;
pub mod io;
pub mod metrics;
pub mod motion;
pub mod propagation;
pub mod rng;
pub mod scenario;

pub use error::{Error, Result};
pub use geometry::{Carrier, ComplexGain, Vec3};
pub use metrics::TraceSummary;
pub use motion::{CompensationMode, Rail, SteppedTrajectory};
pub use propagation::{Environment, Scatterer};
pub use scenario::{ChannelTrace, Parasitic, Scenario, Triplet};
