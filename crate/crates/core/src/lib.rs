//! Square-tiled surfaces (origamis) encoded as permutation pairs.
pub mod canonical;
pub mod census_file;
pub mod classify;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod holonomy;
pub mod origami;
pub mod perm;
pub mod sl2z;
pub mod topology;
