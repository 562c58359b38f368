//! Exact Lie-theory engine: Chevalley bases, highest-weight modules, the
//! principal nilpotent centralizer, truncated enveloping algebras, Peterson
//! varieties and graded coordinate rings of centralizer closures.

pub mod chevrep;
pub mod cli;
pub mod coordring;
pub mod error;
pub mod lab;
pub mod linalg;
pub mod peterson;
pub mod poly;
pub mod principal;
pub mod rational;
pub mod rootdata;
pub mod uea;

pub use error::{Error, Result};
pub use lab::Lab;
