#![allow(dead_code)]

use bqfare::biquandle::FiniteBiquandle;
use bqfare::fare::{FareKind, FareTable};
use bqfare::zmodlinalg::{CoeffGroup, GroupElement};

pub fn bq(under: &[[usize; 3]], over: &[[usize; 3]]) -> FiniteBiquandle {
    let u: Vec<Vec<usize>> = under.iter().map(|r| r.to_vec()).collect();
    let o: Vec<Vec<usize>> = over.iter().map(|r| r.to_vec()).collect();
    FiniteBiquandle::from_tables(&u, &o).unwrap()
}

pub fn bq4(under: &[[usize; 4]], over: &[[usize; 4]]) -> FiniteBiquandle {
    let u: Vec<Vec<usize>> = under.iter().map(|r| r.to_vec()).collect();
    let o: Vec<Vec<usize>> = over.iter().map(|r| r.to_vec()).collect();
    FiniteBiquandle::from_tables(&u, &o).unwrap()
}

fn transpose4(t: &[[usize; 4]; 4]) -> [[usize; 4]; 4] {
    let mut r = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] = t[j][i];
        }
    }
    r
}

/// Three-element biquandle of the trefoil counting example.
pub fn trefoil_bq() -> FiniteBiquandle {
    bq(&[[2, 2, 2], [1, 1, 1], [3, 3, 3]], &[[2, 3, 1], [3, 1, 2], [1, 2, 3]])
}

/// Three-element biquandle of the Z_2 1-fare example, also used for the
/// complete Z_5 link table.
pub fn z2_bq() -> FiniteBiquandle {
    bq(&[[2, 2, 1], [1, 1, 2], [3, 3, 3]], &[[2, 2, 2], [1, 1, 1], [3, 3, 3]])
}

pub fn klein_bq() -> FiniteBiquandle {
    bq(&[[3, 1, 3], [2, 2, 2], [1, 3, 1]], &[[3, 3, 3], [2, 2, 2], [1, 1, 1]])
}

pub fn two_bq() -> FiniteBiquandle {
    let t = vec![vec![2, 2], vec![1, 1]];
    FiniteBiquandle::from_tables(&t, &t).unwrap()
}

/// Four-element quandle of the figure-eight through-fare example.
pub fn quandle4_bq() -> FiniteBiquandle {
    bq4(
        &[[1, 3, 4, 2], [4, 2, 1, 3], [2, 4, 3, 1], [3, 1, 2, 4]],
        &[[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3], [4, 4, 4, 4]],
    )
}

/// Four-element biquandle of the Z_6 knot table. The printed over table
/// has row 3 = (2,2,2,3), which is not a bijection in the first argument;
/// the constant row (2,2,2,2) is the unique completion to a biquandle.
pub fn z6_bq() -> FiniteBiquandle {
    bq4(
        &[[1, 3, 4, 2], [2, 4, 3, 1], [3, 1, 2, 4], [4, 2, 1, 3]],
        &[[1, 1, 1, 1], [4, 4, 4, 4], [2, 2, 2, 2], [3, 3, 3, 3]],
    )
}

pub const CROOKED_PRINTED: [[usize; 4]; 4] = [[1, 3, 4, 2], [2, 4, 1, 3], [1, 3, 2, 4], [4, 2, 3, 1]];

/// The crooked-example table read literally, for both operations.
/// It fails the biquandle axioms.
pub fn crooked_printed_bq() -> FiniteBiquandle {
    bq4(&CROOKED_PRINTED, &CROOKED_PRINTED)
}

/// The crooked-example table with rows and columns exchanged, for both
/// operations; this reading is a biquandle.
pub fn crooked_bq() -> FiniteBiquandle {
    let t = transpose4(&CROOKED_PRINTED);
    bq4(&t, &t)
}

pub fn cyc1(m: u64, v: &[u64]) -> FareTable {
    FareTable::new(1, FareKind::Plain, CoeffGroup::cyclic(m), v.len(), v.iter().map(|&x| GroupElement(vec![x])).collect()).unwrap()
}

pub fn cyc2(kind: FareKind, m: u64, rows: &[Vec<u64>]) -> FareTable {
    FareTable::from_rows(kind, m, rows).unwrap()
}

pub fn klein_fare() -> FareTable {
    let g: CoeffGroup = "2x2".parse().unwrap();
    let v = vec![GroupElement(vec![1, 0]), GroupElement(vec![0, 1]), GroupElement(vec![1, 0])];
    FareTable::new(1, FareKind::Plain, g, 3, v).unwrap()
}

pub fn two_complete_fare() -> FareTable {
    cyc2(FareKind::Complete, 5, &[vec![0, 4], vec![4, 2]])
}

pub fn z2_complete_fare() -> FareTable {
    cyc2(FareKind::Complete, 5, &[vec![0, 0, 3], vec![0, 0, 3], vec![1, 1, 0]])
}

pub fn quandle4_through_fare() -> FareTable {
    cyc2(FareKind::Through, 5, &[vec![0, 0, 3, 0], vec![0, 0, 3, 0], vec![2, 2, 0, 2], vec![0, 0, 3, 0]])
}

pub fn z6_through_fare() -> FareTable {
    cyc2(FareKind::Through, 6, &[vec![3, 1, 4, 1], vec![5, 0, 3, 3], vec![2, 3, 0, 0], vec![5, 3, 0, 3]])
}

pub const CROOKED_FARE_PRINTED: [[u64; 4]; 4] = [[1, 3, 4, 2], [3, 1, 1, 0], [0, 2, 4, 2], [1, 4, 3, 4]];

/// The crooked-example fare with the same row/column exchange as
/// [`crooked_bq`].
pub fn crooked_fare() -> FareTable {
    let rows: Vec<Vec<u64>> = (0..4).map(|j| (0..4).map(|k| CROOKED_FARE_PRINTED[k][j]).collect()).collect();
    cyc2(FareKind::Crooked, 5, &rows)
}
