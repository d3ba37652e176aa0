//! Numeric literals on the command line and in reports.

use num_complex::Complex64;
use speiser_core::ExtendedComplex;

/// Parse `re`, `imi`, or `re+imi` (also `re-imi`).
pub fn parse_complex(text: &str) -> Option<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return s
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| -> Option<f64> {
        match t {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => t.parse::<f64>().ok(),
        }
    };
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().ok()?, imag(&body[k..])?),
        None => (0.0, imag(body)?),
    };
    (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
}

/// `inf` or a complex literal.
pub fn parse_extended(text: &str) -> Option<ExtendedComplex> {
    if text.trim() == "inf" {
        Some(ExtendedComplex::Infinity)
    } else {
        parse_complex(text).map(ExtendedComplex::Finite)
    }
}

/// `x` with `digits` significant digits, in the style of C's `%g`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn fmt_complex_g(z: Complex64, digits: usize) -> String {
    let im = fmt_g(z.im.abs(), digits);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_g(z.re, digits), sign, im)
}

pub fn fmt_extended_g(z: ExtendedComplex, digits: usize) -> String {
    match z {
        ExtendedComplex::Infinity => "inf".into(),
        ExtendedComplex::Finite(z) => fmt_complex_g(z, digits),
    }
}
