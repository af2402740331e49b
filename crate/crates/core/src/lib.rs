//! Exact truncated q-series arithmetic, theta-type sums, generating functions
//! for restricted partition counts, and a small expression language for
//! writing and checking identities between them.

pub mod dsl;
pub mod partitions;
pub mod series;
pub mod suite;
pub mod theta;

pub use num_bigint::BigInt;

pub use dsl::{check, eval, eval_str, parse, CheckOutcome, DslError, EvalError, Expr, ParseError};
pub use partitions::{
    count_by_enumeration, gf_series, table, FunctionId, OracleCaps, PartitionError,
};
pub use series::{pochhammer, Coefficient, Mismatch, Modulus, Series, SeriesError, Sign};
pub use suite::{
    bundled_manifest, parse_manifest, run_oracle_suite, run_suite, IdentityRecord, SuiteReport,
};
pub use theta::{named_theta, theta_series, Domain, NamedTheta, QuadExp, ThetaError, WeightKind};
