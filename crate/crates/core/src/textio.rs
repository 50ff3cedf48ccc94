//! Shared text-format helpers. All floating-point values in the plain-text
//! interchange formats are printed with 17 significant digits so that
//! parse -> emit -> parse round-trips bit-identically.

use crate::{Error, Result};

/// Format with 17 significant digits (enough to recover the exact f64).
pub fn g17(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad float {s:?}")))
}

pub fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

pub fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// Split `key=value`, trimming whitespace around both parts.
pub fn split_kv(line: &str) -> Result<(&str, &str)> {
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected key=value, got {line:?}")))?;
    Ok((k.trim(), v.trim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_round_trips_exactly() {
        for &x in &[
            0.1,
            -1.0 / 3.0,
            6.02214076e23,
            5e-324,
            1.7976931348623157e308,
            0.0,
        ] {
            let back = parse_f64(&g17(x)).unwrap();
            assert_eq!(back.to_bits(), x.to_bits());
        }
    }
}
