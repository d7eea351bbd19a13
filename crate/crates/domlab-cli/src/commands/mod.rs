pub mod hereditary;
pub mod reduce;
pub mod scan;
pub mod solve;
pub mod validate;
