//! Effective slice spectral sequences for `kq` and `L = fib(psi^3 - 1)` over
//! algebraically closed fields, finite fields, p-adic fields, the reals and the rationals.

pub mod cli_io;
pub mod diffrules;
pub mod emcoeffs;
pub mod gradedalg;
pub mod numthy;
pub mod sliceassembly;
pub mod ssengine;
