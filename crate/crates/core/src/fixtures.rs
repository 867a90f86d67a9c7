//! The worked example used throughout the documentation and tests: a shifted
//! tableau of shape (9,7,6,2,1) over rank 5 together with its images as a
//! sign matrix, a μ-UASM and an ice configuration, plus a small ordinary
//! tableau.

use crate::combinat::{Partition, StrictPartition};
use crate::ice::{ConfigMatrix, VertexType};
use crate::tableaux::{levels, OrdinaryTableau, ShiftedTableau};
use crate::uasm::{MuUasm, SignatureMatrix};

pub fn running_mu() -> StrictPartition {
    StrictPartition::new(vec![9, 7, 6, 2, 1]).expect("strict")
}

pub fn running_tableau() -> ShiftedTableau {
    let rows: [&[i32]; 5] = [
        &[-1, 1, -2, 2, -3, -3, -4, 4, 5],
        &[-2, -2, 2, 3, -4, -4, 4],
        &[3, -4, 4, 4, 4, 4],
        &[4, 4],
        &[-5],
    ];
    let rows = rows.iter().map(|r| levels(r).expect("levels")).collect();
    ShiftedTableau::new(running_mu(), 5, rows).expect("valid tableau")
}

pub fn running_uasm_cells() -> Vec<Vec<i8>> {
    vec![
        vec![0, 0, 0, 0, 0, 0, 0, -1, 1],
        vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 1, 0],
        vec![-1, 1, 0, -1, 0, 0, 1, 0, 0],
        vec![1, 0, -1, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, -1, 0, 1, 0, 0, 0],
        vec![0, -1, 0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 0, 0, 0],
        vec![-1, 1, 0, 0, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]
}

pub fn running_uasm() -> MuUasm {
    MuUasm::new(running_mu(), 5, running_uasm_cells()).expect("valid uasm")
}

pub fn running_signature() -> SignatureMatrix {
    SignatureMatrix::from_strs(&[
        "--------+",
        "+--------",
        "++++++++-",
        "-+--+++--",
        "+--+-----",
        "----++---",
        "--++-----",
        "+++------",
        "-+-------",
        "+--------",
    ])
    .expect("signs")
}

pub fn running_cm_cells() -> Vec<Vec<VertexType>> {
    let rows = [
        "NW NW SW SW SW NW NW NS WE",
        "WE NW SW SW SW NW NW NW SW",
        "SE NE SE SE SE NE NE WE SW",
        "NS WE SW NS SE NE WE SW SW",
        "WE SW NS WE SW NW SW SW SW",
        "SW SW NW NS SE WE SW SW SW",
        "SW NS NE WE SW SW SW SW SW",
        "SE NE WE SW SW SW SW SW SW",
        "NS WE SW SW SW SW SW SW SW",
        "WE SW SW SW SW SW SW SW SW",
    ];
    rows.iter()
        .map(|r| r.split_whitespace().map(|v| v.parse().expect("vertex")).collect())
        .collect()
}

pub fn running_cm() -> ConfigMatrix {
    ConfigMatrix::new(running_mu(), 5, running_cm_cells()).expect("valid configuration")
}

/// Shape (4,3,3) over rank 5.
pub fn ordinary_tableau() -> OrdinaryTableau {
    let rows: [&[i32]; 3] = [&[-1, -1, 1, 5], &[2, 2, 4], &[4, -5, -5]];
    let rows = rows.iter().map(|r| levels(r).expect("levels")).collect();
    OrdinaryTableau::new(Partition::new(vec![4, 3, 3]).expect("partition"), 5, rows).expect("valid tableau")
}
