#![allow(dead_code)]

use nalgebra::DMatrix;
use proptest::prelude::*;
use pulsega::spin::{spin_operator, Axis, DensityDeviation, Operator, C64};

pub fn op(axis: Axis, spin: usize) -> Operator {
    spin_operator(axis, spin, 2).unwrap()
}

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Hermitian matrix from `dim²` real and `dim²` imaginary draws.
pub fn hermitian_from(dim: usize, re: &[f64], im: &[f64]) -> Operator {
    let a = DMatrix::from_fn(dim, dim, |r, k| C64::new(re[r * dim + k], im[r * dim + k]));
    Operator::from_matrix((&a + a.adjoint()) * C64::new(0.5, 0.0)).unwrap()
}

pub fn hermitian(dim: usize, scale: f64) -> impl Strategy<Value = Operator> {
    let n = dim * dim;
    (prop::collection::vec(-scale..scale, n), prop::collection::vec(-scale..scale, n))
        .prop_map(move |(re, im)| hermitian_from(dim, &re, &im))
}

pub fn deviation(dim: usize) -> impl Strategy<Value = DensityDeviation> {
    hermitian(dim, 1.0).prop_map(|h| DensityDeviation::from_traceful(h).unwrap())
}

pub fn max_abs_diff(a: &Operator, b: &Operator) -> f64 {
    a.matrix().iter().zip(b.matrix().iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
