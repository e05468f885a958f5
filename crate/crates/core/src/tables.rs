//! Canonical CSV renderings and the shipped reference tables.
//!
//! Canonical formatting: LF line endings, a trailing newline, decimal
//! integers without padding or separators. Fields that contain a comma or a
//! space are wrapped in double quotes.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::f2geometry::{self, ThetaCharacteristic};
use crate::hilbert::HilbertCoefficients;
use crate::pipeline::LevelValue;

/// Reference table `n,P_n` for rank 4, genus 2, `n = 1..8`.
pub const GOLDEN_P_TABLE: &str = include_str!("../data/p_table.csv");

/// Reference table `k,alpha_k` for `k = 7..15`.
pub const GOLDEN_ALPHA_TABLE: &str = include_str!("../data/alpha_table.csv");

pub const P_HEADER: &str = "n,P_n";
pub const ALPHA_HEADER: &str = "k,alpha_k";
pub const SSETS_HEADER: &str = "kappa,parity,s_set";

pub fn p_table_csv(values: &[LevelValue]) -> String {
    let mut out = format!("{P_HEADER}\n");
    for lv in values {
        writeln!(out, "{},{}", lv.n, lv.value).unwrap();
    }
    out
}

/// Rows `k = offset ..= dimension`; the coefficients below the offset vanish.
pub fn alpha_table_csv(coeffs: &HilbertCoefficients) -> String {
    let mut out = format!("{ALPHA_HEADER}\n");
    for (k, a) in coeffs.alpha.iter().enumerate().skip(coeffs.offset) {
        writeln!(out, "{k},{a}").unwrap();
    }
    out
}

fn quoted(field: &str) -> String {
    if field.contains(',') || field.contains(' ') {
        format!("\"{field}\"")
    } else {
        field.to_string()
    }
}

/// Braced, space-separated list of canonical encodings, e.g. `{} {1,2}`.
pub fn braced_list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|a| format!("{{{a}}}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn ssets_csv(kappas: &[ThetaCharacteristic]) -> String {
    let mut out = format!("{SSETS_HEADER}\n");
    for &kappa in kappas {
        let s = f2geometry::s_set(kappa);
        writeln!(
            out,
            "{},{},{}",
            quoted(&kappa.to_string()),
            kappa.parity(),
            quoted(&braced_list(s.iter()))
        )
        .unwrap();
    }
    out
}

/// Parses a two-column integer table with the given header.
pub fn parse_table(text: &str, header: &str) -> Result<Vec<(i64, BigInt)>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == header => {}
        other => return Err(format!("expected header {header:?}, found {other:?}")),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let (a, b) = line
                .split_once(',')
                .ok_or_else(|| format!("line {}: missing comma", i + 2))?;
            let a = a.parse::<i64>().map_err(|e| format!("line {}: {e}", i + 2))?;
            let b = b.parse::<BigInt>().map_err(|e| format!("line {}: {e}", i + 2))?;
            Ok((a, b))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_parse() {
        let p = parse_table(GOLDEN_P_TABLE, P_HEADER).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.first().unwrap().0, 1);
        let a = parse_table(GOLDEN_ALPHA_TABLE, ALPHA_HEADER).unwrap();
        assert_eq!(a.len(), 9);
        assert_eq!(a.first().unwrap().0, 7);
        assert!(parse_table(GOLDEN_P_TABLE, ALPHA_HEADER).is_err());
        assert!(parse_table("n,P_n\n1;2\n", P_HEADER).is_err());
    }

    #[test]
    fn ssets_rows() {
        let k1: ThetaCharacteristic = "1".parse().unwrap();
        let k123: ThetaCharacteristic = "1,2,3".parse().unwrap();
        let csv = ssets_csv(&[k1, k123]);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], SSETS_HEADER);
        assert_eq!(lines[1], "1,odd,\"{} {1,2} {1,3} {1,4} {1,5} {2,3,4,5}\"");
        assert_eq!(
            lines[2],
            "\"1,2,3\",even,\"{1,2} {1,2,3,4} {1,2,3,5} {1,3} {2,3} {4,5}\""
        );
        assert!(csv.ends_with('\n'));
    }
}
