//! Small shared helpers for report formatting.

/// Rounds to 15 significant digits so JSON floats are stable across runs
/// and platforms.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn round_vec(v: &[f64]) -> Vec<f64> {
    v.iter().map(|&x| round_sig(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_fifteen_digits() {
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(5.828427124746190097), 5.82842712474619);
    }
}
