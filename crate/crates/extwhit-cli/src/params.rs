//! `name=value` parameter parsing with complex literals.
//!
//! Complex literals are single tokens of the form `a+bi` / `a-bi` (no
//! whitespace), pure-imaginary `bi`, or bare reals. Greek parameter names
//! are accepted as aliases for their ASCII spellings.

use std::collections::BTreeMap;

use extwhit::ComplexScalar;

/// Map Greek aliases onto the canonical ASCII parameter names.
pub fn canonical_name(name: &str) -> &str {
    match name {
        "\u{3ba}" => "kappa",
        "\u{3bc}" => "mu",
        "\u{3bd}" => "nu",
        "\u{3c1}" => "rho",
        "\u{3b1}" => "alpha",
        "\u{3b2}" => "beta",
        other => other,
    }
}

/// Parse a decimal or `a+bi` complex literal.
pub fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let bad = || format!("cannot parse '{s}' as a real or a+bi complex literal");
    let body = s.trim();
    if body.is_empty() {
        return Err(bad());
    }
    if let Some(im_part) = body.strip_suffix(['i', 'I']) {
        // find the sign splitting re and im, skipping a leading sign and
        // exponent signs
        let bytes = im_part.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&im_part[..idx], &im_part[idx..]),
            None => ("0", im_part),
        };
        let re: f64 = if re_str.is_empty() { 0.0 } else { re_str.parse().map_err(|_| bad())? };
        let im: f64 = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse().map_err(|_| bad())?,
        };
        return Ok(ComplexScalar::new(re, im));
    }
    let re: f64 = body.parse().map_err(|_| bad())?;
    Ok(ComplexScalar::new(re, 0.0))
}

/// Named parameters collected from the command line.
#[derive(Debug, Clone, Default)]
pub struct ParamMap {
    values: BTreeMap<String, ComplexScalar>,
}

impl ParamMap {
    pub fn parse(tokens: &[String]) -> Result<Self, String> {
        let mut map = Self::default();
        for token in tokens {
            let (name, value) = token
                .split_once('=')
                .ok_or_else(|| format!("parameter '{token}' must look like name=value"))?;
            map.values
                .insert(canonical_name(name).to_string(), parse_complex(value)?);
        }
        Ok(map)
    }

    pub fn set(&mut self, name: &str, value: ComplexScalar) {
        self.values.insert(canonical_name(name).to_string(), value);
    }

    pub fn complex(&self, name: &str) -> Result<ComplexScalar, String> {
        self.values
            .get(name)
            .copied()
            .ok_or_else(|| format!("missing parameter '{name}'"))
    }

    /// First present name among the aliases.
    pub fn complex_any(&self, names: &[&str]) -> Result<ComplexScalar, String> {
        for name in names {
            if let Ok(v) = self.complex(name) {
                return Ok(v);
            }
        }
        Err(format!("missing parameter '{}'", names[0]))
    }

    pub fn real(&self, name: &str) -> Result<f64, String> {
        let v = self.complex(name)?;
        if v.im != 0.0 {
            return Err(format!("parameter '{name}' must be real, got {v}"));
        }
        Ok(v.re)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&String, &ComplexScalar)> {
        self.values.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5").unwrap(), ComplexScalar::new(1.5, 0.0));
        assert_eq!(parse_complex("-2").unwrap(), ComplexScalar::new(-2.0, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), ComplexScalar::new(1.0, 2.0));
        assert_eq!(parse_complex("1.5-0.5i").unwrap(), ComplexScalar::new(1.5, -0.5));
        assert_eq!(parse_complex("2i").unwrap(), ComplexScalar::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), ComplexScalar::new(0.0, -1.0));
        assert_eq!(
            parse_complex("1e-3+2.5e2i").unwrap(),
            ComplexScalar::new(1e-3, 250.0)
        );
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2").is_err());
    }

    #[test]
    fn greek_aliases() {
        let map = ParamMap::parse(&[
            "\u{3ba}=0.5".to_string(),
            "\u{3bc}=1".to_string(),
            "\u{3bd}=2".to_string(),
        ])
        .unwrap();
        assert_eq!(map.real("kappa").unwrap(), 0.5);
        assert_eq!(map.real("mu").unwrap(), 1.0);
        assert_eq!(map.real("nu").unwrap(), 2.0);
    }

    #[test]
    fn missing_and_malformed() {
        assert!(ParamMap::parse(&["novalue".to_string()]).is_err());
        let map = ParamMap::parse(&["x=1".to_string()]).unwrap();
        assert!(map.complex("y").is_err());
        assert!(map.real("x").is_ok());
    }
}
