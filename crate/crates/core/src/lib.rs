//! Ternary relations and the lattice polytopes they generate.
//!
//! A ternary relation is a finite set of elements together with a family of
//! unordered triples of distinct elements.  Every triple `[i, j, k]`
//! contributes the three signed indicator points `1_i + 1_j - 1_k`,
//! `1_i - 1_j + 1_k` and `-1_i + 1_j + 1_k`; their convex hull is the
//! polytope of the relation.  Relations are built from graphs (one triple
//! per edge, over vertices ⊔ edges), from ±-symmetric vector configurations
//! such as the classical A/B/D root systems, and from 2-dimensional
//! simplicial posets (one triple per triangle, over the edge set).
//!
//! Everything downstream of the constructors is exact: facets are
//! enumerated as extreme rays of the dual cone by the double description
//! method over arbitrary-precision integers, markings of posets are matched
//! to Z₂ 1-cocycles, and edge metrics are certified extreme through the
//! rank of their tight constraint system.  No floating point is used
//! anywhere in the math core.
//!
//! The numeric kernels ([`linalg`], [`lp`], [`cone`], [`polytope`]) are
//! generic over an integer [`num::Scalar`]; the domain layer uses the
//! crate-root aliases [`Int`] and [`Rat`].

pub mod cone;
pub mod linalg;
pub mod lp;
// pub mod markings;
// pub mod metrics;
pub mod num;
pub mod polytope;
pub mod poset;
pub mod relation;
pub mod z2;

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Default exact rational scalar.
pub type Rat = num_rational::Ratio<Int>;

pub use cone::{ConeError, ExtremeRays, RationalCone};
//X pub use markings::{Corner, Marking, MarkingError, Z2Complex};
//X pub use metrics::{IcColoring, MetricContext, MetricError, PosetMetric, Walk};
pub use polytope::{LatticePolytope, PolytopeError};
pub use poset::{PosetError, RootSystemKind, SimplicialPoset2, VectorConfiguration, Violation};
pub use relation::{GeneratorPoint, RelationError, TernaryRelation};
