//! Closed formulas for γ_sp on families where the value is known exactly.

mod closed;
mod spec;

pub use closed::{
    cartesian_parity_bounds, corona_formula, gamma_sp_formula, half_order_rule, half_order_value, Interval,
    LinearFactor,
};
pub use spec::FamilySpec;
