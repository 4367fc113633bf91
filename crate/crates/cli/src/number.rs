//! Fixed 15-significant-digit rendering, in the style of C's `%.15g`.
//!
//! Rounding is half away from zero on the exact decimal expansion of the
//! double, so output does not depend on the platform's `printf`.

/// Digits kept.
const SIG: usize = 15;

pub fn g15(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }

    // 60 digits are enough to decide the rounding direction at digit 16.
    let wide = format!("{:.60e}", x.abs());
    let (mantissa, exp) = wide.split_once('e').expect("exponent form");
    let mut exp: i32 = exp.parse().expect("integer exponent");
    let all: Vec<u8> = mantissa
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    let mut digits = all[..SIG].to_vec();
    if all[SIG] >= 5 {
        let mut i = SIG;
        loop {
            if i == 0 {
                digits.insert(0, 1);
                digits.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    let text: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
    let sign = if x < 0.0 { "-" } else { "" };

    if exp < -4 || exp >= SIG as i32 {
        let (head, tail) = text.split_at(1);
        let frac = if tail.is_empty() {
            String::new()
        } else {
            format!(".{tail}")
        };
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{head}{frac}e{esign}{:02}", exp.abs());
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("{sign}0.{zeros}{text}");
    }
    let point = exp as usize + 1;
    if text.len() <= point {
        format!("{sign}{text}{}", "0".repeat(point - text.len()))
    } else {
        format!("{sign}{}.{}", &text[..point], &text[point..])
    }
}
