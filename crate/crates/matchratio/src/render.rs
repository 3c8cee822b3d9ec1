//! Numeric rendering shared by the library and CLI: exact rationals as
//! `p/q` strings, floats at fixed significant-digit counts, and a rational →
//! f64 conversion that stays accurate for arbitrarily large terms.

use num::{BigRational, ToPrimitive};

/// Render an exact rational as `numerator/denominator` (always reduced, the
/// denominator always present and positive).
pub fn rational_str(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Convert to f64 with ~1 ulp accuracy regardless of the bit length of the
/// numerator and denominator; saturates to ±∞ only when the value itself
/// overflows.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let shift_n = x.numer().bits().saturating_sub(96);
    let shift_d = x.denom().bits().saturating_sub(96);
    let n = (x.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    let exp = (shift_n as i64 - shift_d as i64).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
    n / d * 2f64.powi(exp)
}

/// Scientific notation with 17 significant digits — round-trips every f64.
pub fn decimal_full(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Human-oriented rendering at `sig` significant digits: plain decimal for
/// moderate magnitudes, scientific otherwise, trailing zeros trimmed.
pub fn significant(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..sig as i32 + 2).contains(&exp) {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let plain = format!("{:.*}", decimals, x);
        trim_zeros(plain)
    } else {
        format!("{}e{}", trim_zeros(mant.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}
