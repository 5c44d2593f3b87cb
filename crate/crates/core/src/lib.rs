pub mod cli;
pub mod colorings;
pub mod diagram;
pub mod library;
pub mod linalg;
pub mod shading;
