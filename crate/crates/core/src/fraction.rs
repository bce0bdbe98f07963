// Copyright 2026 The fpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact fixed-point fractions.
//!
//! Support and confidence thresholds are user-facing decimals such as `0.05`
//! or `0.55`. Holding them as integer millionths keeps threshold arithmetic
//! (support schedules, floor-to-count conversion, confidence cross-multiplication)
//! free of binary floating point drift.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Number of fractional units per whole.
pub const SCALE: i64 = 1_000_000;
const SCALE_DIGITS: usize = 6;

/// A signed decimal with six fractional digits, stored as integer millionths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction(i64);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FractionError {
    #[error("`{0}` is not a decimal number")]
    Malformed(String),
    #[error("`{0}` has more than {SCALE_DIGITS} fractional digits")]
    TooPrecise(String),
    #[error("`{0}` is out of range")]
    OutOfRange(String),
}

impl Fraction {
    pub const ZERO: Fraction = Fraction(0);
    pub const ONE: Fraction = Fraction(SCALE);

    pub const fn from_millionths(units: i64) -> Self {
        Fraction(units)
    }

    pub const fn millionths(self) -> i64 {
        self.0
    }

    /// Nearest representable fraction to `value`.
    pub fn from_f64(value: f64) -> Self {
        Fraction((value * SCALE as f64).round() as i64)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }

    pub fn is_unit_interval(self) -> bool {
        (0..=SCALE).contains(&self.0)
    }

    /// `floor(self * n)`, clamped at zero.
    pub fn floor_times(self, n: u64) -> u64 {
        if self.0 <= 0 {
            return 0;
        }
        (self.0 as u128 * n as u128 / SCALE as u128) as u64
    }

    /// Renders the shortest decimal form: `0.5`, `1`, `0.05`.
    pub fn to_shortest(self) -> String {
        render_units(self.0, SCALE_DIGITS, false)
    }

    /// Renders like Java's `Double.toString` for short decimals: `1.0`, `0.5`, `-1.0`.
    pub fn to_java(self) -> String {
        render_units(self.0, SCALE_DIGITS, true)
    }

    /// Rounds half away from zero to two decimals and renders the shortest form.
    pub fn to_two_places(self) -> String {
        let step = SCALE / 100;
        let mag = (self.0.abs() + step / 2) / step;
        render_units(mag * self.0.signum(), 2, false)
    }
}

/// Renders `numerator / denominator` rounded half-up to two decimals with
/// trailing zeros (and a trailing point) stripped: 11/15 -> `0.73`, 1 -> `1`.
pub fn ratio_two_places(numerator: u64, denominator: u64) -> String {
    assert!(denominator > 0, "ratio with zero denominator");
    let (p, q) = (numerator as u128, denominator as u128);
    let hundredths = (200 * p + q) / (2 * q);
    render_units(hundredths as i64, 2, false)
}

fn render_units(units: i64, digits: usize, keep_point: bool) -> String {
    let scale = 10i64.pow(digits as u32);
    let sign = if units < 0 { "-" } else { "" };
    let abs = units.unsigned_abs();
    let whole = abs / scale as u64;
    let frac = abs % scale as u64;
    let mut frac_str = format!("{frac:0digits$}");
    while frac_str.ends_with('0') {
        frac_str.pop();
    }
    if frac_str.is_empty() {
        if keep_point {
            format!("{sign}{whole}.0")
        } else {
            format!("{sign}{whole}")
        }
    } else {
        format!("{sign}{whole}.{frac_str}")
    }
}

impl FromStr for Fraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let malformed = || FractionError::Malformed(s.to_string());
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(malformed());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(whole) || !all_digits(frac) {
            return Err(malformed());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > SCALE_DIGITS {
            return Err(FractionError::TooPrecise(s.to_string()));
        }
        let whole: i64 = if whole.is_empty() {
            0
        } else {
            whole
                .parse()
                .map_err(|_| FractionError::OutOfRange(s.to_string()))?
        };
        let frac_units: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse::<i64>().map_err(|_| malformed())?
                * 10i64.pow((SCALE_DIGITS - frac.len()) as u32)
        };
        let units = whole
            .checked_mul(SCALE)
            .and_then(|w| w.checked_add(frac_units))
            .ok_or_else(|| FractionError::OutOfRange(s.to_string()))?;
        Ok(Fraction(if negative { -units } else { units }))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_shortest())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(frac("0.05").millionths(), 50_000);
        assert_eq!(frac("1.0"), Fraction::ONE);
        assert_eq!(frac(".5").millionths(), 500_000);
        assert_eq!(frac("-1.0").millionths(), -SCALE);
        assert_eq!(frac("0.550000").millionths(), 550_000);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!("abc".parse::<Fraction>(), Err(FractionError::Malformed(_))));
        assert!(matches!("".parse::<Fraction>(), Err(FractionError::Malformed(_))));
        assert!(matches!("1e-3".parse::<Fraction>(), Err(FractionError::Malformed(_))));
        assert!(matches!(
            "0.0000001".parse::<Fraction>(),
            Err(FractionError::TooPrecise(_))
        ));
    }

    #[test]
    fn renders() {
        assert_eq!(frac("1").to_java(), "1.0");
        assert_eq!(frac("0.05").to_java(), "0.05");
        assert_eq!(frac("-1").to_java(), "-1.0");
        assert_eq!(frac("0.5").to_shortest(), "0.5");
        assert_eq!(frac("1").to_shortest(), "1");
        assert_eq!(frac("0.555").to_two_places(), "0.56");
        assert_eq!(frac("0.5").to_two_places(), "0.5");
    }

    #[test]
    fn floor_times_is_exact() {
        // 0.29 * 100 is 28.999999999999996 in binary floating point.
        assert_eq!(frac("0.29").floor_times(100), 29);
        assert_eq!(frac("0.5").floor_times(15), 7);
        assert_eq!(frac("0.55").floor_times(15), 8);
        assert_eq!(frac("-0.5").floor_times(15), 0);
    }

    #[test]
    fn ratio_rendering() {
        assert_eq!(ratio_two_places(11, 15), "0.73");
        assert_eq!(ratio_two_places(1, 1), "1");
        assert_eq!(ratio_two_places(7, 10), "0.7");
        assert_eq!(ratio_two_places(7, 9), "0.78");
        assert_eq!(ratio_two_places(1, 8), "0.13");
        assert_eq!(ratio_two_places(999, 1000), "1");
    }
}
