//! Expected table rows and the diff against computed records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{search_solvable_factorizations, targeted_factorization, two_solvable_search, FactorizationRecord};
use crate::error::{Error, Result};
use crate::perm::named::{m11, psl, psl2, psp};
use crate::perm::PermGroup;

const DATASET: &str = include_str!("../../data/tables.tsv");

pub const TABLE_IDS: [&str; 5] = ["tab4", "tab1", "tab2", "tab8", "tab9"];

/// Random witness attempts per targeted row alternative.
const TARGETED_ATTEMPTS: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowMode {
    Both,
    Solvable,
    Targeted,
    OutOfScope,
}

impl FromStr for RowMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "both" => RowMode::Both,
            "solvable" => RowMode::Solvable,
            "targeted" => RowMode::Targeted,
            "out-of-scope" => RowMode::OutOfScope,
            _ => return Err(format!("unknown mode {s:?}")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KSignature {
    Any,
    Simple,
    Nonsolvable,
    DerivedLength(usize),
}

impl KSignature {
    pub fn admits(&self, r: &FactorizationRecord) -> bool {
        let s = &r.k_signature;
        match *self {
            KSignature::Any => true,
            KSignature::Simple => s.simple,
            KSignature::Nonsolvable => !s.solvable,
            KSignature::DerivedLength(n) => s.derived_length == Some(n),
        }
    }
}

impl FromStr for KSignature {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "-" => Ok(KSignature::Any),
            "simple" => Ok(KSignature::Simple),
            "nonsolvable" => Ok(KSignature::Nonsolvable),
            _ => s
                .strip_prefix("dl=")
                .and_then(|n| n.parse().ok())
                .map(KSignature::DerivedLength)
                .ok_or_else(|| format!("bad K signature {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table_id: String,
    pub row: u32,
    pub group_id: String,
    /// Acceptable `|H|` values.
    pub h_orders: Vec<u64>,
    /// Acceptable `|K|` values.
    pub k_orders: Vec<u64>,
    pub h_solvable: Option<bool>,
    pub k_solvable: Option<bool>,
    pub k_signature: KSignature,
    pub mode: RowMode,
    pub anchor: String,
}

impl TableRow {
    pub fn matches(&self, r: &FactorizationRecord) -> bool {
        r.factorizes
            && r.group_id == self.group_id
            && self.h_orders.contains(&r.h_order)
            && self.k_orders.contains(&r.k_order)
            && self.h_solvable.is_none_or(|b| b == r.h_solvable)
            && self.k_solvable.is_none_or(|b| b == r.k_solvable)
            && self.k_signature.admits(r)
    }
}

fn parse_flag(s: &str) -> std::result::Result<Option<bool>, String> {
    match s {
        "yes" => Ok(Some(true)),
        "no" => Ok(Some(false)),
        "-" => Ok(None),
        _ => Err(format!("bad flag {s:?}")),
    }
}

fn parse_orders(s: &str) -> std::result::Result<Vec<u64>, String> {
    s.split('|').map(|x| x.parse().map_err(|_| format!("bad order {x:?}"))).collect()
}

/// Parses the dataset format; blank lines and `#` comments are skipped.
pub fn parse_table_rows(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 10 {
            return Err(Error::parse(line_no, format!("expected 10 fields, found {}", f.len())));
        }
        let row = (|| -> std::result::Result<TableRow, String> {
            Ok(TableRow {
                table_id: f[0].to_string(),
                row: f[1].parse().map_err(|_| format!("bad row {:?}", f[1]))?,
                group_id: f[2].to_string(),
                h_orders: parse_orders(f[3])?,
                k_orders: parse_orders(f[4])?,
                h_solvable: parse_flag(f[5])?,
                k_solvable: parse_flag(f[6])?,
                k_signature: f[7].parse()?,
                mode: f[8].parse()?,
                anchor: f[9].to_string(),
            })
        })()
        .map_err(|m| Error::parse(line_no, m))?;
        rows.push(row);
    }
    Ok(rows)
}

/// The shipped rows of one table, in dataset order.
pub fn expected_rows(table_id: &str) -> Result<Vec<TableRow>> {
    if !TABLE_IDS.contains(&table_id) {
        return Err(Error::InvalidParameters(format!("unknown table {table_id:?}")));
    }
    Ok(parse_table_rows(DATASET)?.into_iter().filter(|r| r.table_id == table_id).collect())
}

/// The permutation representation used for a tabulated group.
pub fn desk_group(group_id: &str) -> Result<PermGroup> {
    match group_id {
        "M11" => Ok(m11()),
        "PSL3(3)" => psl(3, 3),
        "PSp4(3)" => psp(4, 3),
        _ => {
            let q = group_id
                .strip_prefix("PSL2(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidParameters(format!("no desk representation for {group_id}")))?;
            psl2(q)
        }
    }
}

/// Runs the computations each row's mode calls for: one scan per
/// (group, mode) for scanned rows, and a witness search per alternative for
/// targeted rows. Records are sorted by group then signature.
pub fn compute_for_rows(rows: &[TableRow], seed: u64) -> Result<Vec<FactorizationRecord>> {
    let mut groups: BTreeMap<&str, PermGroup> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.mode != RowMode::OutOfScope) {
        if !groups.contains_key(r.group_id.as_str()) {
            groups.insert(&r.group_id, desk_group(&r.group_id)?);
        }
    }
    let mut out = Vec::new();
    for (id, g) in &groups {
        let wants = |m: RowMode| rows.iter().any(|r| r.group_id == *id && r.mode == m);
        if wants(RowMode::Both) {
            out.extend(two_solvable_search(id, g)?);
        }
        if wants(RowMode::Solvable) {
            out.extend(search_solvable_factorizations(id, g)?);
        }
        for r in rows.iter().filter(|r| r.group_id == *id && r.mode == RowMode::Targeted) {
            'row: for &h in &r.h_orders {
                for &k in &r.k_orders {
                    if let Some(rec) = targeted_factorization(id, g, h, k, TARGETED_ATTEMPTS, seed)? {
                        let hit = rec.factorizes;
                        out.push(rec);
                        if hit {
                            break 'row;
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.group_id, a.signature()).cmp(&(&b.group_id, b.signature())));
    out.dedup_by(|a, b| a.group_id == b.group_id && a.signature() == b.signature() && a.factorizes == b.factorizes);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Matched,
    Missing,
    Skipped,
}

#[derive(Clone, Debug)]
pub struct TableDiff {
    pub table_id: String,
    pub rows: Vec<(TableRow, RowStatus)>,
    /// Factorizing records for the table's groups that match no row.
    pub findings: Vec<FactorizationRecord>,
}

impl TableDiff {
    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|(_, s)| *s == RowStatus::Matched).count()
    }

    /// Rows that were checked (everything not out of scope).
    pub fn expected(&self) -> usize {
        self.rows.iter().filter(|(_, s)| *s != RowStatus::Skipped).count()
    }

    pub fn missing(&self) -> Vec<&TableRow> {
        self.rows.iter().filter(|(_, s)| *s == RowStatus::Missing).map(|(r, _)| r).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.matched() == self.expected()
    }
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, s) in &self.rows {
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join("|");
            let status = match s {
                RowStatus::Matched => "matched",
                RowStatus::Missing => "MISSING",
                RowStatus::Skipped => "skipped",
            };
            writeln!(
                f,
                "# {} row {}\t{}\t{}\t{}\t{}\t{}",
                r.table_id,
                r.row,
                r.group_id,
                join(&r.h_orders),
                join(&r.k_orders),
                status,
                r.anchor
            )?;
        }
        for x in &self.findings {
            writeln!(f, "# finding\t{}\t{}", x.group_id, x)?;
        }
        write!(f, "MATCHED {}/{} EXPECTED", self.matched(), self.expected())
    }
}

/// Matches computed records against a table's rows.
pub fn check_table(table_id: &str, computed: &[FactorizationRecord]) -> Result<TableDiff> {
    let rows = expected_rows(table_id)?;
    let rows: Vec<(TableRow, RowStatus)> = rows
        .into_iter()
        .map(|r| {
            let status = if r.mode == RowMode::OutOfScope {
                RowStatus::Skipped
            } else if computed.iter().any(|c| r.matches(c)) {
                RowStatus::Matched
            } else {
                RowStatus::Missing
            };
            (r, status)
        })
        .collect();
    let findings = computed
        .iter()
        .filter(|c| c.factorizes && rows.iter().any(|(r, _)| r.group_id == c.group_id))
        .filter(|c| !rows.iter().any(|(r, _)| r.matches(c)))
        .cloned()
        .collect();
    Ok(TableDiff { table_id: table_id.to_string(), rows, findings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_parses_and_orders_divide() {
        for t in TABLE_IDS {
            let rows = expected_rows(t).unwrap();
            assert!(!rows.is_empty(), "{t}");
            for r in rows.iter().filter(|r| r.mode != RowMode::OutOfScope) {
                let n = desk_group(&r.group_id).unwrap().order_u64();
                assert!(r.h_orders.iter().chain(&r.k_orders).all(|o| n.is_multiple_of(*o)), "{r:?}");
            }
        }
        assert!(expected_rows("tab7").is_err());
        assert!(parse_table_rows("tab4\t1\tM11\t55\n").is_err());
    }

    #[test]
    fn empty_computed_misses_everything() {
        let diff = check_table("tab8", &[]).unwrap();
        assert_eq!(diff.matched(), 0);
        assert_eq!(diff.missing().len(), diff.expected());
    }

    #[test]
    fn tab4_psl2_7() {
        let rows: Vec<_> = expected_rows("tab4").unwrap().into_iter().filter(|r| r.group_id == "PSL2(7)").collect();
        let recs = compute_for_rows(&rows, 0).unwrap();
        let diff = check_table("tab4", &recs).unwrap();
        let missing: Vec<_> = diff.missing().into_iter().filter(|r| r.group_id == "PSL2(7)").collect();
        assert!(missing.is_empty());
    }
}
