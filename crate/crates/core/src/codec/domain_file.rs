//! Plain-text domain parameters, one `key = value` per line:
//!
//! ```text
//! # comment
//! p = 7
//! genus = 2
//! f = 1,3,0,0,0,1
//! h = 0
//! R = 0200010101
//! r = 13
//! ```
//!
//! `f` and `h` list coefficients constant term first, in decimal. `R` is the
//! hex of the divisor encoding. Unknown and repeated keys are rejected.

use num_bigint::BigUint;

use super::{decode_divisor, encode_divisor, CodecError};
use crate::field::PrimeField;
use crate::jacobian::{CurveParams, DomainParams};
use crate::poly::Polynomial;

const KEYS: [&str; 6] = ["p", "genus", "f", "h", "R", "r"];

fn err(line: usize, msg: impl Into<String>) -> CodecError {
    CodecError::DomainFile {
        line,
        msg: msg.into(),
    }
}

fn parse_uint(line: usize, s: &str) -> Result<BigUint, CodecError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("`{s}` is not a decimal integer")));
    }
    Ok(s.parse().expect("digits only"))
}

fn parse_poly(line: usize, field: &PrimeField, s: &str) -> Result<Polynomial, CodecError> {
    let mut coeffs = Vec::new();
    for part in s.split(',') {
        let c = parse_uint(line, part.trim())?;
        coeffs.push(
            field
                .try_element(&c)
                .map_err(|e| err(line, e.to_string()))?,
        );
    }
    Ok(Polynomial::from_elements(field, &coeffs).expect("same field"))
}

fn format_poly(p: &Polynomial) -> String {
    let coeffs = p.coefficients();
    if coeffs.is_empty() {
        return "0".into();
    }
    coeffs
        .iter()
        .map(|c| c.value().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn read_domain_file(text: &str) -> Result<DomainParams, CodecError> {
    let mut values: [Option<(usize, &str)>; 6] = [None; 6];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| err(line, "expected `key = value`"))?;
        let key = key.trim();
        let slot = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| err(line, format!("unknown key `{key}`")))?;
        if values[slot].is_some() {
            return Err(err(line, format!("duplicate key `{key}`")));
        }
        values[slot] = Some((line, value.trim()));
    }
    let get = |i: usize| values[i].ok_or(CodecError::MissingKey(KEYS[i]));

    let (line, p) = get(0)?;
    let field = PrimeField::new(parse_uint(line, p)?).map_err(|e| err(line, e.to_string()))?;

    let (line, genus) = get(1)?;
    let genus: usize = genus
        .parse()
        .map_err(|_| err(line, format!("`{genus}` is not a genus")))?;

    let (fline, f) = get(2)?;
    let f = parse_poly(fline, &field, f)?;
    let (hline, h) = get(3)?;
    let h = parse_poly(hline, &field, h)?;
    let curve = CurveParams::new(field, genus, f, h).map_err(|e| err(fline, e.to_string()))?;

    let (line, base) = get(4)?;
    let bytes = hex::decode(base).map_err(|_| err(line, "R is not valid hex"))?;
    let base = decode_divisor(&bytes, &curve).map_err(|e| err(line, e.to_string()))?;

    let (line, r) = get(5)?;
    let r = parse_uint(line, r)?;
    DomainParams::new(curve, base, r).map_err(|e| err(line, e.to_string()))
}

pub fn write_domain_file(dp: &DomainParams) -> String {
    let c = dp.curve();
    format!(
        "p = {}\ngenus = {}\nf = {}\nh = {}\nR = {}\nr = {}\n",
        c.field().modulus(),
        c.genus(),
        format_poly(c.f()),
        format_poly(c.h()),
        hex::encode(encode_divisor(dp.base())),
        dp.order(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const DEMO64: &str = include_str!("../../tests/fixtures/demo64.dom");

    #[test]
    fn demo_domain_parses_and_roundtrips() {
        let dp = read_domain_file(DEMO64).unwrap();
        assert_eq!(dp.curve().genus(), 2);
        assert_eq!(dp.order().bits(), 119);
        let text = write_domain_file(&dp);
        assert_eq!(read_domain_file(&text).unwrap(), dp);
    }

    #[test]
    fn rejects_bad_files() {
        let good = "p = 7\ngenus = 2\nf = 1,3,0,0,0,1\nh = 0\nR = 020001010\nr = 13\n";
        assert!(matches!(
            read_domain_file(good),
            Err(CodecError::DomainFile { line: 5, .. })
        ));
        let unknown = "p = 7\nq = 1\n";
        assert!(matches!(
            read_domain_file(unknown),
            Err(CodecError::DomainFile { line: 2, .. })
        ));
        let dup = "p = 7\np = 7\n";
        assert!(matches!(
            read_domain_file(dup),
            Err(CodecError::DomainFile { line: 2, .. })
        ));
        assert_eq!(
            read_domain_file("# nothing\n"),
            Err(CodecError::MissingKey("p"))
        );
        let composite = "p = 9\ngenus = 2\nf = 1\nh = 0\nR = 00\nr = 3\n";
        assert!(matches!(
            read_domain_file(composite),
            Err(CodecError::DomainFile { line: 1, .. })
        ));
    }
}
