use crate::specfun::C64;
use std::fmt;
use std::str::FromStr;

/// Every free symbol an identity can use. Unused fields keep their defaults.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct IdentityParameters {
    pub m: C64,
    pub s: C64,
    pub v: C64,
    /// Log power. Integer for most entries.
    pub k: f64,
    /// Pole order. Integer except for the half-integer Kölbig entry.
    pub n: f64,
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub beta: C64,
    pub gamma: C64,
    pub alpha: f64,
    pub theta: f64,
}

impl Default for IdentityParameters {
    fn default() -> Self {
        let one = C64::new(1.0, 0.0);
        Self {
            m: C64::new(0.5, 0.0),
            s: C64::new(0.5, 0.0),
            v: C64::new(0.5, 0.0),
            k: 0.0,
            n: 1.0,
            a: one,
            b: one,
            c: one,
            beta: one,
            gamma: one,
            alpha: 1.0,
            theta: 0.0,
        }
    }
}

/// Parameter names in canonical order.
pub const PARAM_NAMES: [&str; 12] = ["m", "s", "v", "k", "n", "a", "b", "c", "beta", "gamma", "alpha", "theta"];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("unknown parameter '{0}' (expected one of m, s, v, k, n, a, b, c, beta, gamma, alpha, theta)")]
    Unknown(String),
    #[error("cannot parse '{0}' as a number (use re or re+imI)")]
    Syntax(String),
    #[error("parameter '{name}' must be real, got {value}")]
    NotReal { name: String, value: String },
}

impl IdentityParameters {
    pub fn get(&self, name: &str) -> Result<C64, ParamError> {
        let r = |x: f64| C64::new(x, 0.0);
        Ok(match name {
            "m" => self.m,
            "s" => self.s,
            "v" => self.v,
            "k" => r(self.k),
            "n" => r(self.n),
            "a" => self.a,
            "b" => self.b,
            "c" => self.c,
            "beta" | "β" => self.beta,
            "gamma" | "γ" => self.gamma,
            "alpha" | "α" => r(self.alpha),
            "theta" | "θ" => r(self.theta),
            _ => return Err(ParamError::Unknown(name.to_string())),
        })
    }

    pub fn set(&mut self, name: &str, value: C64) -> Result<(), ParamError> {
        let real = |v: C64| {
            if v.im == 0.0 {
                Ok(v.re)
            } else {
                Err(ParamError::NotReal { name: name.to_string(), value: format_complex(v) })
            }
        };
        match name {
            "m" => self.m = value,
            "s" => self.s = value,
            "v" => self.v = value,
            "k" => self.k = real(value)?,
            "n" => self.n = real(value)?,
            "a" => self.a = value,
            "b" => self.b = value,
            "c" => self.c = value,
            "beta" | "β" => self.beta = value,
            "gamma" | "γ" => self.gamma = value,
            "alpha" | "α" => self.alpha = real(value)?,
            "theta" | "θ" => self.theta = real(value)?,
            _ => return Err(ParamError::Unknown(name.to_string())),
        }
        Ok(())
    }

    /// Applies a `name=value` assignment.
    pub fn assign(&mut self, assignment: &str) -> Result<(), ParamError> {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| ParamError::Syntax(assignment.to_string()))?;
        self.set(name.trim(), parse_complex(value.trim())?)
    }

    /// `name=value` pairs for the listed names, in the given order.
    pub fn encode(&self, names: &[String]) -> String {
        names
            .iter()
            .filter_map(|n| self.get(n).ok().map(|v| format!("{n}={}", format_complex(v))))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses `re`, `imI` or `re±imI` (`i` also accepted).
pub fn parse_complex(text: &str) -> Result<C64, ParamError> {
    let err = || ParamError::Syntax(text.to_string());
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix(['I', 'i']) else {
        return f64::from_str(&t).map(|x| C64::new(x, 0.0)).map_err(|_| err());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let parse_im = |s: &str| -> Result<f64, ParamError> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => f64::from_str(s).map_err(|_| err()),
        }
    };
    match split {
        Some(i) => {
            let re = f64::from_str(&body[..i]).map_err(|_| err())?;
            Ok(C64::new(re, parse_im(&body[i..])?))
        }
        None => Ok(C64::new(0.0, parse_im(body)?)),
    }
}

/// Shortest round-trip form accepted by [`parse_complex`].
pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}I", z.im)
    } else if z.im < 0.0 {
        format!("{}{}I", z.re, z.im)
    } else {
        format!("{}+{}I", z.re, z.im)
    }
}

impl fmt::Display for IdentityParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = PARAM_NAMES.iter().map(|s| s.to_string()).collect();
        f.write_str(&self.encode(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("2").unwrap(), C64::new(2.0, 0.0));
        assert_eq!(parse_complex("0.4+0.3I").unwrap(), C64::new(0.4, 0.3));
        assert_eq!(parse_complex("2-0.5I").unwrap(), C64::new(2.0, -0.5));
        assert_eq!(parse_complex("0.5i").unwrap(), C64::new(0.0, 0.5));
        assert_eq!(parse_complex("-I").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e-4I").unwrap(), C64::new(1e-3, 2e-4));
        assert_eq!(parse_complex("-1.5e+2-3E-1I").unwrap(), C64::new(-150.0, -0.3));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
        for z in [C64::new(0.1, -0.7), C64::new(0.0, 2.0), C64::new(-3.0, 0.0), C64::new(1e-20, 5e30)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }

    #[test]
    fn assignment() {
        let mut p = IdentityParameters::default();
        p.assign("m=0.4+0.3I").unwrap();
        p.assign("gamma=5").unwrap();
        assert_eq!(p.m, C64::new(0.4, 0.3));
        assert_eq!(p.gamma, C64::new(5.0, 0.0));
        assert!(p.assign("k=1+1I").is_err());
        assert!(p.assign("q=1").is_err());
    }
}
