//! Exact-rational toolkit for tilings of the unit square by smaller squares.
//!
//! The crate measures the total side length of a tiling, evaluates the
//! vertical-line counting profile whose integral equals that total, builds
//! the tilings that minimise it for every admissible tile count, and
//! enumerates grid tilings exhaustively to cross-check the closed form.
//!
//! All geometric quantities are [`Rational`] values backed by arbitrary
//! precision integers; no floating point is used outside of rendering.

pub mod constructions;
pub mod enumeration;
mod error;
pub mod format;
pub mod lemmas;
pub mod profile;
pub mod rational;
pub mod render;
pub mod symmetry;
pub mod tiling;

pub use error::{Error, Result};
pub use rational::Rational;
pub use symmetry::D4;
pub use tiling::{Tile, Tiling, ValidationReport, Violation};
