//! Argument grammars: complex numbers, s-grids, and integer lists.

use spectral_zeta::identities::rectangular_grid;
use spectral_zeta::ComplexScalar;

/// Parses `a`, `bi`, `a+bi` or `a-bi`; `i` alone means 1i.
pub fn complex(text: &str) -> Result<ComplexScalar, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number '{text}' (expected a+bi)");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return match t.parse::<f64>() {
            Ok(re) if re.is_finite() => Ok(ComplexScalar::new(re, 0.0)),
            _ => Err(bad()),
        };
    };
    // split before the last sign that is not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(ComplexScalar::new(re, im))
}

fn range(text: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || format!("cannot parse range '{text}' (expected start:end:step)");
    let [a, b, h] = parts.as_slice() else {
        return Err(bad());
    };
    let (a, b, h): (f64, f64, f64) = (
        a.parse().map_err(|_| bad())?,
        b.parse().map_err(|_| bad())?,
        h.parse().map_err(|_| bad())?,
    );
    if !a.is_finite() || !b.is_finite() || h.is_nan() || h <= 0.0 || b < a {
        return Err(format!("range '{text}' needs start ≤ end and a positive step"));
    }
    if (b - a) / h > 1e6 {
        return Err(format!("range '{text}' has too many points"));
    }
    Ok((a, b, h))
}

/// `re_start:re_end:re_step[,im_start:im_end:im_step]`, Re major; a single
/// complex number is a one-point grid.
pub fn grid(text: &str) -> Result<Vec<ComplexScalar>, String> {
    if !text.contains(':') {
        return complex(text).map(|s| vec![s]);
    }
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (range(re)?, range(im)?),
        None => (range(text)?, (0.0, 0.0, 1.0)),
    };
    Ok(rectangular_grid(re, im))
}

/// Comma-separated integers or inclusive ranges `a..b`.
pub fn integers(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let bad = || format!("cannot parse integer list '{text}'");
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b): (u64, u64) = (
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                );
                if a > b || b - a > 1_000_000 {
                    return Err(format!("bad range '{part}'"));
                }
                out.extend(a..=b);
            }
            None => out.push(part.trim().parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}
