//! Counts of 213-avoiding d-Fishburn permutations, from the series and,
//! optionally, by direct enumeration.

use clap::ValueEnum;
use serde_json::json;

use fishlab_core::fishburn::is_d_fishburn;
use fishlab_core::perm::avoiders;
use fishlab_core::series::fishburn_213_counts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum TableFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub d: usize,
    pub n: usize,
    pub count: u64,
    pub enumerated: Option<u64>,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.enumerated.is_none_or(|e| e == self.count)
    }
}

/// Rows ordered by `d`, then `n`.
pub fn table(n_max: usize, d_max: usize, cross_check: bool) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for d in 0..=d_max {
        let counts = fishburn_213_counts(d, n_max);
        for (n, c) in counts.iter().enumerate() {
            let enumerated = cross_check.then(|| {
                avoiders(n, &[&[2, 1, 3]])
                    .iter()
                    .filter(|p| is_d_fishburn(p, d))
                    .count() as u64
            });
            rows.push(TableRow {
                d,
                n,
                count: u64::try_from(c).expect("count fits in u64"),
                enumerated,
            });
        }
    }
    rows
}

pub fn render(rows: &[TableRow], format: TableFormat) -> Vec<String> {
    match format {
        TableFormat::Json => rows
            .iter()
            .map(|r| {
                let mut v = json!({ "d": r.d, "n": r.n, "count": r.count });
                if let Some(e) = r.enumerated {
                    v["enumerated"] = json!(e);
                }
                v.to_string()
            })
            .collect(),
        TableFormat::Csv => {
            let cross = rows.iter().any(|r| r.enumerated.is_some());
            let header = if cross {
                "d,n,count,enumerated"
            } else {
                "d,n,count"
            };
            std::iter::once(header.to_owned())
                .chain(rows.iter().map(|r| match r.enumerated {
                    Some(e) => format!("{},{},{},{e}", r.d, r.n, r.count),
                    None => format!("{},{},{}", r.d, r.n, r.count),
                }))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = table(4, 1, true);
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(TableRow::matches));
        let csv = render(&rows[..2], TableFormat::Csv);
        assert_eq!(csv, ["d,n,count,enumerated", "0,0,1,1", "0,1,1,1"]);
        let json = render(&table(1, 0, false), TableFormat::Json);
        assert_eq!(json[1], r#"{"count":1,"d":0,"n":1}"#);
    }
}
