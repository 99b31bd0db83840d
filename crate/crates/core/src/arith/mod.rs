//! Exact scalars: rationals, quadratic and biquadratic numbers, and the
//! integer-point solver for lines `r + nu*s + beta = 0`.

mod composite;
mod line;
mod quadratic;
mod rational;

pub use composite::{composite_sqrt, CompositeNumber, EmbedField};
pub use line::{rational_progression, solve_line_integer_points, IntegerPoints, Progression};
pub use quadratic::QuadraticNumber;
pub use rational::{
    format_rational, int, is_integer, normalize_radical, parse_rational, rat, rational_sqrt,
    squarefree_split, Rational,
};
