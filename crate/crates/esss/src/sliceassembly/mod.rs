//! Slice decompositions of kq and L and their E_1 pages.

pub mod page;
pub mod slices;

pub use page::{d_shift, e1_groups, e1_kq, e1_l, e1_page, Page, Spectrum, IOTA};
pub use slices::{kc_families, psi3_on_slices, slices_kq, slices_l, KcFamily, KcKind, SliceSummand};
