pub mod canon;
pub mod drawing;
pub mod embed;
pub mod error;
pub mod gp;
pub mod graph;
pub mod io;
pub mod repro;
pub mod solver;
pub mod svg;
