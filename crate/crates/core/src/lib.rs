//! Solve real quintic equations with a two-simultaneous-fold origami
//! construction.
//!
//! Given `t^5 + α t^4 + β t^3 + γ t^2 + δ t + ε`, [`foldconfig::build_config`]
//! places two points and three lines so that a fold `xi`, carrying `Q` onto
//! `m` while aligning `n` with a second fold `chi` that carries `P` onto `l`,
//! crosses the x-axis at a root `t`. [`foldsolve::solve_all`] rebuilds both
//! folds for every real root and checks each incidence numerically.
//!
//! ```
//! use quintic_fold::{build_config, solve_all, Branch, Quintic, SolveOptions};
//!
//! let q = Quintic::monic(1.0, -4.0, -3.0, 3.0, 1.0);
//! let cfg = build_config(&q, None, Branch::Plus).unwrap();
//! assert_eq!((cfg.k, cfg.p, cfg.q), (-1.5, -2.5, -3.0));
//!
//! let out = solve_all(&cfg, &q, &SolveOptions::default()).unwrap();
//! assert_eq!(out.solutions.len(), 5);
//! assert!(out.all_accepted());
//! ```

pub mod cli;
pub mod error;
pub mod foldconfig;
pub mod foldsolve;
pub mod geometry;
pub mod polynomial;
pub mod render;

pub use error::{Error, Result};
pub use foldconfig::{build_config, Branch, FoldConfig, FoldParams, NishimuraReport};
pub use foldsolve::{solve_all, FoldSolution, IncidenceResiduals, SolveOptions, SolveOutcome};
pub use geometry::{Line, Point};
pub use polynomial::{Quintic, Root};
