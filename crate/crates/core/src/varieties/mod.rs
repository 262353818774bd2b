//! Point counts of the named varieties and fixed-point traces on the
//! compactified surface.

mod count;
mod dickson;
mod fixed_points;
mod spec;
mod traces;

pub use count::{count_points, work_estimate, CountOptions, CountRow, DEFAULT_BUDGET};
pub use dickson::{dickson_invariants, dickson_quotient_count, QuotientKind};
pub use fixed_points::{fixed_points_surface, EndoSpec, FixedPoint, FixedPointReport};
pub use spec::{VarietyKind, VarietySpec};
pub use traces::{
    closed_form_fixed_points, fixed_point_grid, nu_weighted_trace, prop433_discrepancy,
    prop433_expected, sheaf_trace_a2, GridRow,
};
