//! Exact rational scalars, dense matrices, rank-3 tensors and row reduction.

pub mod matrix;
pub mod rational;
pub mod tensor;
pub mod vector;

pub use matrix::Matrix;
pub use rational::{q, Rational};
pub use tensor::Tensor3;
pub use vector::Vector;
