// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Angle flags: decimal radians, or `pi`, `pi/INT`, `INT*pi`, `INT*pi/INT`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, PI};

pub fn parse_angle(input: &str) -> Result<f64, String> {
    let s = input.trim().to_ascii_lowercase().replace('π', "pi");
    let value = if let Ok(v) = s.parse::<f64>() {
        v
    } else {
        parse_pi_fraction(&s).ok_or_else(|| {
            format!("invalid angle `{input}`: expected a number or pi, pi/INT, INT*pi/INT")
        })?
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("invalid angle `{input}`: not finite"))
    }
}

fn parse_pi_fraction(s: &str) -> Option<f64> {
    let (numer, rest) = match s.split_once('*') {
        Some((n, rest)) => (n.trim().parse::<i64>().ok()?, rest.trim()),
        None => (1, s),
    };
    let denom = match rest.strip_prefix("pi")? {
        "" => 1,
        d => d
            .strip_prefix('/')?
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&d| d != 0)?,
    };
    // `PI / 3.0` is one ulp off the nearest double to π/3; prefer the
    // correctly rounded constants where they exist.
    let unit = match (numer.abs(), denom) {
        (1, 1) => PI,
        (1, 2) => FRAC_PI_2,
        (1, 3) => FRAC_PI_3,
        (1, 4) => FRAC_PI_4,
        (1, 6) => FRAC_PI_6,
        (1, 8) => FRAC_PI_8,
        _ => return Some(numer as f64 * PI / denom as f64),
    };
    Some(numer.signum() as f64 * unit)
}

/// A comma-separated list of angles.
pub fn parse_angle_list(input: &str) -> Result<Vec<f64>, String> {
    input.split(',').map(parse_angle).collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_angle("1.0"), Ok(1.0));
        assert_eq!(parse_angle(" 0.3 "), Ok(0.3));
        assert_eq!(parse_angle("pi"), Ok(PI));
        assert_eq!(parse_angle("pi/3"), Ok(FRAC_PI_3));
        assert_eq!(parse_angle("PI/2"), Ok(FRAC_PI_2));
        assert_eq!(parse_angle("2*pi/3"), Ok(2.0 * PI / 3.0));
        assert_eq!(parse_angle("3*pi"), Ok(3.0 * PI));
        assert_eq!(parse_angle("π/3"), Ok(FRAC_PI_3));
        assert_eq!(parse_angle("1e-3"), Ok(1e-3));
    }

    #[test]
    fn rejects() {
        for bad in [
            "", "pie", "pi/0", "pi/x", "2pi", "x*pi", "inf", "nan", "pi/3/2", "1.5*pi",
        ] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lists() {
        assert_eq!(
            parse_angle_list("0.3,1.0,pi/3"),
            Ok(vec![0.3, 1.0, FRAC_PI_3])
        );
        assert!(parse_angle_list("0.3,,1").is_err());
    }
}
