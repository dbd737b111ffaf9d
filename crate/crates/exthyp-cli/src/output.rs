//! Fixed 17-significant-digit number formatting for JSON and CSV output.

use serde::Serialize;
use std::io;

/// `{:.16e}` for finite values, `nan`/`inf`/`-inf` otherwise.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// JSON formatter writing floats as [`num`]. Non-finite floats are emitted
/// as `null` by the serializer before they reach the formatter.
struct FixedFloats;

impl serde_json::ser::Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(num(v).as_bytes())
    }
}

/// Compact JSON with fixed-precision floats and declaration-order keys.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloats);
    value
        .serialize(&mut ser)
        .expect("serializing plain structs cannot fail");
    String::from_utf8(buf).expect("JSON output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Sample {
        b: f64,
        a: f64,
        c: Option<f64>,
        ok: bool,
    }

    #[test]
    fn fixed_precision_and_order() {
        assert_eq!(num(0.5), "5.0000000000000000e-1");
        assert_eq!(num(f64::NAN), "nan");
        let s = to_json(&Sample {
            b: 2.0f64.ln() * 2.0,
            a: 1.0,
            c: None,
            ok: true,
        });
        assert_eq!(
            s,
            r#"{"b":1.3862943611198906e0,"a":1.0000000000000000e0,"c":null,"ok":true}"#
        );
        let parsed: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["b"].as_f64().unwrap(), 2.0f64.ln() * 2.0);
        assert!(to_json(&f64::NAN) == "null");
    }
}
