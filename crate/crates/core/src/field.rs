//! Coefficient field selection for exact homology.

use std::fmt;

use thiserror::Error;

/// The field over which ranks and Betti numbers are computed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    /// Exact rational arithmetic (fraction-free integer elimination).
    Rationals,
    /// The prime field `F_p`.
    Prime(u64),
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl FieldSpec {
    /// Build a prime-field spec, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Short machine token: `q`, `f2`, `f5`, ...
    pub fn token(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("f{p}"),
        }
    }

    /// Parse the token format accepted on the command line.
    pub fn parse_token(s: &str) -> Result<FieldSpec, FieldError> {
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let body = s
            .strip_prefix('f')
            .or_else(|| s.strip_prefix('F'))
            .unwrap_or("");
        match body.parse::<u64>() {
            Ok(p) => FieldSpec::prime(p),
            Err(_) => Err(FieldError::NotPrime(0)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3u64;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}
