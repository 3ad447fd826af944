pub mod decimal;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod metric;
pub mod spectra;
