pub mod catalog;
pub mod field;
pub mod modular;
pub mod series;
pub mod theta;
