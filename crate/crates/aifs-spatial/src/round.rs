//! Four-decimal rounding used when matching reference table values.

/// Half-up rounding to 4 decimals, with a small guard so values that are
/// an exact .5 tick in decimal (but sit a hair below it in binary) still
/// round upward.
pub fn round4(x: f64) -> f64 {
    (x * 10000.0 + 0.5 + 1e-9).floor() / 10000.0
}

/// Banker's rounding to 4 decimals, used to flag cells where the two
/// conventions disagree.
pub fn round4_half_even(x: f64) -> f64 {
    let scaled = x * 10000.0;
    let fl = scaled.floor();
    let frac = scaled - fl;
    if (frac - 0.5).abs() < 1e-9 {
        let fl = fl as i64;
        let even = if fl % 2 == 0 { fl } else { fl + 1 };
        return even as f64 / 10000.0;
    }
    (scaled + 0.5).floor() / 10000.0
}

/// Renders a value with exactly four decimal places.
pub fn format4(x: f64) -> String {
    format!("{:.4}", round4(x))
}
