//! Elimination theory for free partially commutative structures.
//!
//! * [`alphabet`]: independence alphabets `(A, θ)` and derived relations `θ_X`.
//! * [`trace`]: the trace monoid `M(A, θ)` in lexicographic normal form.
//! * [`series`]: trace polynomials, the Möbius polynomial, truncated
//!   characteristic series and graded Lie dimensions.
//! * [`elimination`]: bisections `M(A,θ) = M(B,θ_B)·⟨β_Z(B)⟩` and the decision
//!   procedure for transitively factorizing subalphabets (TFSA).
//! * [`factorization`]: elimination plans, ordered factorizations and their
//!   verification.
//! * [`lie`]: the free partially commutative Lie algebra inside trace
//!   polynomials, and bases obtained by bracketing elimination plans.
//! * [`group`]: reduced traces, the word problem and elimination in free
//!   partially commutative groups.
//! * [`verify`]: bounded verification suites used by the CLI and tests.
//!
//! All arithmetic is exact. Every infinite object (generator sets, series)
//! is truncated at an explicit length or degree bound.

pub mod alphabet;
pub mod elimination;
pub mod error;
pub mod factorization;
pub mod graphs;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod series;
pub mod trace;
pub mod verify;

pub use alphabet::{derived_independence, DerivedAlphabet, IndependenceAlphabet, Letter, LetterSet};
pub use error::{Error, Result};
pub use trace::Trace;
