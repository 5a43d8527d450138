//! Scenario files, verification reports, SVG figures and sweeps for
//! regular polygon pairs.

pub mod app;
pub mod report;
pub mod scenario;
pub mod svg;
pub mod sweep;

pub use report::{exit_code, run_scenario, Report};
pub use scenario::{parse_scenario, Scenario, ScenarioError};
pub use svg::render_svg;
