//! Parsing of coefficient lists and degree ranges.
//!
//! Over the prime field (`m = 1`) coefficients are a comma-separated
//! list `a_0,a_1,..,a_d`. Over an extension each `a_i` is itself a
//! comma-separated coefficient vector on the power basis, and the
//! `a_i` are separated by semicolons: `1,0;2,1;0,1`. Entries may be
//! negative; they are reduced mod `p`.

use cartier_core::field::{Fq, FqElem};

/// Parses `a_0..a_d` for the given field; the count must be `d + 1`.
pub fn parse_coeffs(s: &str, field: &Fq, d: u64) -> Result<Vec<FqElem>, String> {
    let groups: Vec<&str> = if field.m() == 1 {
        s.split([',', ';']).collect()
    } else {
        s.split(';').collect()
    };
    let expected = (d + 1) as usize;
    if groups.len() != expected {
        return Err(format!(
            "expected {expected} coefficients a_0..a_{d}, got {}",
            groups.len()
        ));
    }
    let p = field.p() as i64;
    let mut out = Vec::with_capacity(expected);
    for (idx, group) in groups.iter().enumerate() {
        let entries: Result<Vec<u64>, String> = group
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map(|v| v.rem_euclid(p) as u64)
                    .map_err(|_| format!("coefficient a_{idx}: bad integer {tok:?}"))
            })
            .collect();
        let entries = entries?;
        let elem = field
            .from_coeffs(&entries)
            .map_err(|e| format!("coefficient a_{idx}: {e}"))?;
        out.push(elem);
    }
    Ok(out)
}

/// Parses a degree or an inclusive degree range: `18` or `2..8`.
pub fn parse_d_range(s: &str) -> Result<(u64, u64), String> {
    let parse_one = |tok: &str| {
        tok.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad degree {tok:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let d = parse_one(s)?;
            (d, d)
        }
    };
    if lo < 1 {
        return Err("degrees start at 1".to_string());
    }
    if lo > hi {
        return Err(format!("empty degree range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_coeffs() {
        let f = Fq::new(5, 1, 0).unwrap();
        let coeffs = parse_coeffs("0,0,1", &f, 2).unwrap();
        assert_eq!(coeffs, vec![f.from_int(0), f.from_int(0), f.from_int(1)]);
        let coeffs = parse_coeffs("-1,7,1", &f, 2).unwrap();
        assert_eq!(coeffs[0], f.from_int(4));
        assert_eq!(coeffs[1], f.from_int(2));
        assert!(parse_coeffs("1,2", &f, 2).is_err());
        assert!(parse_coeffs("1,x,3", &f, 2).is_err());
    }

    #[test]
    fn extension_coeffs() {
        let f = Fq::new(3, 2, 0).unwrap();
        let coeffs = parse_coeffs("1,0;2,1;0,1", &f, 2).unwrap();
        assert_eq!(coeffs[0], f.from_coeffs(&[1, 0]).unwrap());
        assert_eq!(coeffs[1], f.from_coeffs(&[2, 1]).unwrap());
        assert_eq!(coeffs[2], f.from_coeffs(&[0, 1]).unwrap());
        // short vectors are padded
        let coeffs = parse_coeffs("1;2;1", &f, 2).unwrap();
        assert_eq!(coeffs[2], f.from_int(1));
        // too many entries per element
        assert!(parse_coeffs("1,0,0;2;1", &f, 2).is_err());
    }

    #[test]
    fn d_ranges() {
        assert_eq!(parse_d_range("18").unwrap(), (18, 18));
        assert_eq!(parse_d_range("2..8").unwrap(), (2, 8));
        assert!(parse_d_range("8..2").is_err());
        assert!(parse_d_range("0..2").is_err());
        assert!(parse_d_range("x").is_err());
    }
}
