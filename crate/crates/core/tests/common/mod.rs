#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use softdecide::decision::{Cell, DecisionTable};
use softdecide::{GreyNumber, NeutrosophicTriplet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn ids(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

pub fn nt(t: f64, i: f64, f: f64) -> NeutrosophicTriplet {
    NeutrosophicTriplet::new(t, i, f).unwrap()
}

pub fn gn(a: f64, b: f64) -> GreyNumber {
    GreyNumber::new(a, b).unwrap()
}

/// A value `k / 100` with `k` in `0..=100`, returned as the hundredths
/// count so that oracles can work on exact rationals.
pub fn hundredths(rng: &mut impl Rng) -> i64 {
    rng.gen_range(0..=100)
}

pub fn random_triplet_hundredths(rng: &mut impl Rng) -> [i64; 3] {
    [hundredths(rng), hundredths(rng), hundredths(rng)]
}

pub fn triplet_from_hundredths(h: [i64; 3]) -> NeutrosophicTriplet {
    nt(h[0] as f64 / 100.0, h[1] as f64 / 100.0, h[2] as f64 / 100.0)
}

pub fn random_dims(rng: &mut impl Rng, max_rows: usize, max_cols: usize) -> (usize, usize) {
    (rng.gen_range(1..=max_rows), rng.gen_range(1..=max_cols))
}

pub fn random_bits(rng: &mut impl Rng, rows: usize, cols: usize) -> Vec<Vec<bool>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_bool(0.5)).collect())
        .collect()
}

pub fn binary_table(bits: &[Vec<bool>]) -> DecisionTable {
    let cells = bits
        .iter()
        .map(|r| r.iter().map(|&b| Cell::Bin(b)).collect())
        .collect();
    DecisionTable::new(ids("P", bits.len()), ids("e", bits[0].len()), cells).unwrap()
}

pub const GRADES: [&str; 5] = ["A", "B", "C", "D", "F"];

/// Random Bin / Grade / Grey cell with two-decimal grey endpoints.
pub fn random_grey_cell(rng: &mut impl Rng) -> Cell {
    match rng.gen_range(0..3) {
        0 => Cell::Bin(rng.gen_bool(0.5)),
        1 => Cell::Grade(GRADES.choose(rng).unwrap().to_string()),
        _ => {
            let a = hundredths(rng);
            let b = hundredths(rng);
            let (lo, hi) = (a.min(b), a.max(b));
            Cell::Grey(gn(lo as f64 / 100.0, hi as f64 / 100.0))
        }
    }
}

pub fn random_neutro_cell(rng: &mut impl Rng) -> Cell {
    if rng.gen_bool(0.3) {
        Cell::Bin(rng.gen_bool(0.5))
    } else {
        Cell::Neutro(triplet_from_hundredths(random_triplet_hundredths(rng)))
    }
}

pub fn random_table<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    mut cell: impl FnMut(&mut R) -> Cell,
) -> DecisionTable {
    let cells = (0..rows)
        .map(|_| (0..cols).map(|_| cell(&mut *rng)).collect())
        .collect();
    DecisionTable::new(ids("P", rows), ids("e", cols), cells).unwrap()
}

/// Reorders rows by `rows` and columns by `cols`, carrying identifiers.
pub fn permute(table: &DecisionTable, rows: &[usize], cols: &[usize]) -> DecisionTable {
    let candidates = rows.iter().map(|&r| table.candidates()[r].clone()).collect();
    let parameters = cols.iter().map(|&c| table.parameters()[c].clone()).collect();
    let cells = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| table.rows()[r][c].clone()).collect())
        .collect();
    DecisionTable::new(candidates, parameters, cells).unwrap()
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
