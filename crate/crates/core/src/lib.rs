pub mod algebra;
pub mod cli;
pub mod complex;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod gm;
pub mod io;
pub mod lattice;
pub mod ring;
