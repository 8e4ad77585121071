use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use submaj::io::format_f64;

/// Float serialized with 17 significant digits; non-finite values become `null`.
#[derive(Debug, Clone, Copy)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn f17s(v: &[f64]) -> Vec<F17> {
    v.iter().copied().map(F17).collect()
}

pub const SCHEMA: u32 = 1;

pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// `x` with 6 significant digits; whole numbers keep a trailing `.0`.
pub fn human(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        let s = format!("{x:.5e}");
        let (mantissa, exp) = s.split_once('e').expect("scientific format");
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (5 - mag).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}"))
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return format!("{s}.0");
    }
    let t = s.trim_end_matches('0');
    if t.ends_with('.') {
        format!("{t}0")
    } else {
        t.to_string()
    }
}

pub fn human_list(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| human(*x)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "VIOLATED"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_format() {
        assert_eq!(human(2.0000000000000004), "2.0");
        assert_eq!(human(std::f64::consts::FRAC_PI_4), "0.785398");
        assert_eq!(human(std::f64::consts::SQRT_2), "1.41421");
        assert_eq!(human(-3.5), "-3.5");
        assert_eq!(human(0.0), "0.0");
        assert_eq!(human(1.5e-12), "1.5e-12");
        assert_eq!(human(123456.0), "123456.0");
        assert_eq!(human(2.5e7), "2.5e7");
    }

    #[test]
    fn f17_is_lossless() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23] {
            let s = serde_json::to_string(&F17(x)).unwrap();
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
        assert_eq!(serde_json::to_string(&F17(f64::INFINITY)).unwrap(), "null");
    }
}
