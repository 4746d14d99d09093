//! Syzygies, free resolutions, Betti tables, Ext modules and depth.

mod ext;
mod matrix;
mod resolution;
mod syzygy;

pub use ext::{depth_at_point, ext_family, ExtFamily, ExtModule};
pub use matrix::FreeModuleMap;
pub use resolution::{free_resolution, graded_depth, BettiTable, ResolutionData};
pub use syzygy::{module_contains, module_quotient, syzygies, syzygies_of};
