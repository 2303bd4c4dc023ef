//! Plain CSV: header of labels, comma separators, LF endings.

use std::io::{self, Write};

use openph_core::numcore::Table;

/// Default significant digits.
pub const DEFAULT_PRECISION: usize = 12;

/// Formats `v` rounded to `precision` significant digits, then printed with
/// the shortest digits that round-trip. Plain notation is used for decimal
/// exponents in `-5..16`, scientific (`1.5e-7`) otherwise.
pub fn format_value(v: f64, precision: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let precision = precision.clamp(1, 17);
    let rounded: f64 = format!("{:.*e}", precision - 1, v)
        .parse()
        .expect("float formatting round-trips");
    let sci = format!("{rounded:e}");
    let exponent: i32 = sci
        .split_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("LowerExp output carries an exponent");
    if (-5..16).contains(&exponent) {
        format!("{rounded}")
    } else {
        sci
    }
}

/// Writes `table` and returns the number of bytes written.
pub fn write_csv<W: Write + ?Sized>(
    table: &Table,
    precision: usize,
    sink: &mut W,
) -> io::Result<usize> {
    let mut out = String::new();
    out.push_str(&table.labels().join(","));
    out.push('\n');
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|&v| format_value(v, precision)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    sink.write_all(out.as_bytes())?;
    Ok(out.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_table() {
        let mut t = Table::new(["t", "x"]).unwrap();
        t.push(vec![0.0, 1.0]).unwrap();
        t.push(vec![1.0, 0.5]).unwrap();
        let mut buf = Vec::new();
        let n = write_csv(&t, 12, &mut buf).unwrap();
        assert_eq!(buf, b"t,x\n0,1\n1,0.5\n");
        assert_eq!(n, buf.len());
    }

    #[test]
    fn header_only() {
        let t = Table::new(["a", "b", "c"]).unwrap();
        let mut buf = Vec::new();
        write_csv(&t, 12, &mut buf).unwrap();
        assert_eq!(buf, b"a,b,c\n");
    }

    #[test]
    fn formatting_rules() {
        assert_eq!(format_value(-0.0, 12), "0");
        assert_eq!(format_value(f64::INFINITY, 12), "inf");
        assert_eq!(format_value(2.0678338482, 5), "2.0678");
        assert_eq!(format_value(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_value(1.5e15, 12), "1500000000000000");
        assert_eq!(format_value(1.5e16, 12), "1.5e16");
        assert_eq!(format_value(6.62607015e-34, 12), "6.62607015e-34");
        assert_eq!(format_value(-0.00001234, 3), "-0.0000123");
        assert_eq!(format_value(6.123233995736766e-17, 12), "6.12323399574e-17");
        assert_eq!(format_value(0.1 + 0.2, 12), "0.3");
        assert_eq!(format_value(0.1 + 0.2, 17), "0.30000000000000004");
    }

    proptest! {
        #[test]
        fn parses_back_within_precision(v in prop::num::f64::NORMAL, p in 1usize..=17) {
            let s = format_value(v, p);
            let back: f64 = s.parse().unwrap();
            let tol = 0.5 * 10f64.powi(1 - p as i32) * v.abs() * (1.0 + 1e-15);
            prop_assert!((back - v).abs() <= tol, "{v} -> {s}");
            prop_assert!(!s.contains(','));
        }
    }
}
