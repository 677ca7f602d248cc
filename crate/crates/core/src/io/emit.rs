//! Deterministic JSON output: keys sorted, floats in fixed scientific
//! notation with 17 significant digits.

use std::io;

use num_complex::Complex;
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", fmt_float(value))
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// `{:.16e}`, with negative zero folded into zero.
pub fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Serializes `value` through a `Value` (so object keys come out sorted)
/// and appends a trailing newline.
pub fn to_json<S: Serialize>(value: &S) -> String {
    let tree: Value = serde_json::to_value(value).expect("serializable document");
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats);
    tree.serialize(&mut ser).expect("writing to memory");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// `[re, im]`.
pub fn complex(z: Complex<f64>) -> [f64; 2] {
    [z.re, z.im]
}
