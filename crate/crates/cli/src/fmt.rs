//! Deterministic, locale-independent text rendering of the numeric types:
//! rationals as `p/q`, reals with 12 significant digits (round-half-even),
//! braid words as signed integer lists.

use braidwalk_core::walk::LimitValue;
use braidwalk_core::BigRational;

/// Renders a real with 12 significant digits. Trailing zeros are trimmed;
/// positional notation is used for exponents in `[-4, 12)`, scientific
/// otherwise. Rust's formatter rounds half-way cases to even.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let sign = if negative { "-" } else { "" };
    if !(-4..12).contains(&exp) {
        let rest = &digits[1..];
        return if rest.is_empty() {
            format!("{sign}{}e{exp}", &digits[..1])
        } else {
            format!("{sign}{}.{rest}e{exp}", &digits[..1])
        };
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    let point = exp as usize + 1;
    if digits.len() <= point {
        let zeros = "0".repeat(point - digits.len());
        format!("{sign}{digits}{zeros}")
    } else {
        format!("{sign}{}.{}", &digits[..point], &digits[point..])
    }
}

/// Renders an exact rational as `p/q` (or `p` when the denominator is 1,
/// which is how the rational type prints itself).
pub fn fmt_rational(r: &BigRational) -> String {
    r.to_string()
}

/// Renders a limit value: one token when the parities agree, otherwise
/// the even and odd limits separated by a space.
pub fn fmt_limit(value: &LimitValue) -> String {
    if value.is_flat() {
        fmt_rational(value.even_value())
    } else {
        format!(
            "{} {}",
            fmt_rational(value.even_value()),
            fmt_rational(value.odd_value())
        )
    }
}

/// Renders a braid word as a compact signed integer list, e.g.
/// `[1,-2,4,4,6]`.
pub fn fmt_braid_ints(ints: &[i64]) -> String {
    let body: Vec<String> = ints.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(","))
}
