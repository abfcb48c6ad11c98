pub mod betti;
pub mod compare;
pub mod persist;
pub mod preprocess;
pub mod sample;
