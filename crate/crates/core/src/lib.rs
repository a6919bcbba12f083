pub mod catalog;
pub mod embed;
pub mod eval;
pub mod error;
pub mod extract;
pub mod generate;
pub mod index;
pub mod llm;
pub mod project;
pub mod prompt;
pub mod reference;
pub mod retrieve;
pub mod text;
pub mod tokens;
pub mod usage;

pub use error::{Error, Result};
