//! Locale-free number formatting with 17 significant digits.

use serde_json::value::RawValue;

/// `d.dddddddddddddddde±x`: 17 significant digits, round-trips any `f64`.
pub fn fmt_num(x: f64) -> String {
    // fold -0.0 into 0.0 so identical values print identically
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// A JSON number token in [`fmt_num`] format.
pub fn json_num(x: f64) -> Box<RawValue> {
    RawValue::from_string(fmt_num(x)).expect("formatted finite float is valid JSON")
}

pub fn json_nums(xs: &[f64]) -> Vec<Box<RawValue>> {
    xs.iter().map(|&x| json_num(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_num(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_num(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_num(17.0 / 47.0), "3.6170212765957449e-1");
        for x in [1.0 / 3.0, 0.1, 2.5e-300, 123456.789] {
            assert_eq!(fmt_num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_tokens_parse_back() {
        let v: f64 = serde_json::from_str(json_num(0.1).get()).unwrap();
        assert_eq!(v, 0.1);
    }
}
