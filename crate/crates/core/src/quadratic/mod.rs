//! Quadratic fields `Q(sqrt m)`: elements, ideals and divisors, form
//! class groups, fundamental units, norm equations and Hilbert 90 for
//! ideals.

mod field;
mod forms;
mod ideal;
mod norm_eq;
mod principal;
mod unit;

pub use field::{build_field, FieldElement, QuadraticField};
pub use forms::{
    class_group, count_reduced_definite, ideal_form, narrow_class_group, BinaryForm, ClassGroup,
    MAX_DISC,
};
pub use ideal::{
    div, divisor_hilbert90, element_valuation, first_root, ideal_factor, ideal_hilbert90,
    prime_ideal, primes_above, split_type, Divisor, FieldIdeal, FieldPrime, IdealFactorization,
    PrimeKind, SplitType,
};
pub use norm_eq::{is_local_norm_everywhere, solve_conic, solve_norm_equation, SignCondition};
pub use principal::{is_unit, principal_generator, totally_positive_generator};
pub use unit::{fundamental_unit, fundamental_unit_norm};
