//! Special matchings of lower Bruhat intervals in Coxeter groups.

pub mod bruhat;
pub mod coxeter;
pub mod io;
pub mod matchings;
pub mod systems;
pub mod verify;
mod error;

pub use error::{Error, Result};
