//! Reference values vendored in `fixtures/expected.toml`.

use std::sync::OnceLock;

use serde::Deserialize;

const SOURCE: &str = include_str!("../fixtures/expected.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Fixtures {
    pub fishburn_213: Vec<TableRow>,
    pub modinv: Counts,
    pub worked: Vec<Worked>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TableRow {
    pub d: usize,
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Counts {
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Worked {
    pub map: String,
    pub d: Option<usize>,
    pub input: String,
    pub output: String,
}

impl Fixtures {
    /// Counts of 213-avoiding d-Fishburn permutations for this `d`, if vendored.
    pub fn fishburn_213_row(&self, d: usize) -> Option<&[u64]> {
        self.fishburn_213
            .iter()
            .find(|r| r.d == d)
            .map(|r| &r.counts[..])
    }
}

pub fn fixtures() -> &'static Fixtures {
    static CELL: OnceLock<Fixtures> = OnceLock::new();
    CELL.get_or_init(|| toml::from_str(SOURCE).expect("vendored fixtures parse"))
}
