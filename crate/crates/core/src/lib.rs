pub mod series;
pub mod ratfunc;
pub mod berkovich;
pub mod classifier;
pub mod instances;
