//! Temperley-Lieb algebra, Jones-Wenzl projectors and bracket evaluation.

pub mod fusion;
pub mod jw;
pub mod program;
pub mod slicer;
pub mod state_sum;
pub mod sweep;
pub mod tl;

pub use fusion::{fusion_coefficient, fusion_expand, FusionExpansion, FusionTerm};
pub use jw::{jones_wenzl, Projector};
pub use program::{Mark, Slice, SliceProgram};
pub use slicer::{slice_diagram, to_slice_program, twist_regions, TwistRegion};
pub use state_sum::bracket_state_sum;
pub use sweep::{bracket_sweep, bracket_sweep_poly, SweepConfig};
pub use tl::{Matching, TLElement};
