//! Normed series algebras over Banach rings at exact truncated scale:
//! strictness certificates for diagonal division, homotopy-epimorphism
//! checks through diagonal Koszul resolutions, derived localizations and
//! Hochschild homology.

pub mod algebra;
pub mod campaign;
pub mod cli;
pub mod complexes;
pub mod division;
pub mod error;
pub mod hepi;
pub mod hochschild;
pub mod linalg;
pub mod localization;
pub mod matrix;
pub mod parse;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod series;
