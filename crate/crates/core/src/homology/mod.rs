//! Projective covers, minimal resolutions, Ext groups and global dimension.

mod ext;
mod gldim;
mod resolution;

pub use ext::{ext, ext_dim, ext_from_resolution, ExtGroup};
pub use gldim::{
    cartan_matrix, euler_form, global_dimension_probe, probe_simples, verdict, GlobalDimension, SimpleProbe,
    DEFAULT_PROBE_BOUND,
};
pub use resolution::{
    cached_resolution, map_from_generators, minimal_resolution, projective_cover, ProjTerm, Resolution,
};
