//! Exact linear algebra over finite sums of cyclic 2-groups and free summands.

pub mod group;
pub mod hom;
pub mod mat;
pub mod monomial;

pub use group::{group_string, order_profile, GroupWindow, Order, Range, Summand, TriDeg, Window};
pub use hom::{homology, hom_kernel_cokernel, AlgError, Graded, Hom, Subquotient};
pub use mat::{snf, snf_exact, BigMat, Entry, Lattice, Mat, Matrix, Smith};
pub use monomial::{Label, Monomial, Unit};
