//! Driven N-level systems: validated specifications, generator
//! construction, and structural probes.
//!
//! A system is `H(t) = H0 + f(t)·H1` with `H0 = diag(E_1, …, E_N)` (energies
//! listed in non-decreasing order) and nearest-neighbour coupling
//! `H1 = Σ_n d_n (e_{n,n+1} + e_{n+1,n})`.  The algebra generators are the
//! skew-Hermitian matrices `iH0′` (traceless part of `iH0`) and `iH1`.
//!
//! [`SystemInput`] is the serialization-friendly form: dipoles may be plain
//! numbers or tokens such as `"sqrt(2)"` and `"3*sqrt(5)"`, so exact surd
//! couplings survive a round trip through JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{C64, ComplexMatrix};

/// Validated description of a driven N-level system.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemSpec {
    energies: Vec<f64>,
    dipoles: Vec<f64>,
}

impl SystemSpec {
    /// Validates and stores a system.
    ///
    /// Requirements: at least two levels, exactly `N − 1` dipoles, all
    /// values finite, and energies non-decreasing.  Zero dipoles are
    /// accepted (they are reported by [`Self::decomposability_flags`]
    /// rather than rejected).
    pub fn new(energies: Vec<f64>, dipoles: Vec<f64>) -> Result<Self> {
        if energies.len() < 2 {
            return Err(Error::InvalidSystem(format!(
                "a system needs at least 2 levels, got {}",
                energies.len()
            )));
        }
        if dipoles.len() + 1 != energies.len() {
            return Err(Error::DimensionMismatch {
                expected: energies.len() - 1,
                found: dipoles.len(),
            });
        }
        if !energies.iter().all(|e| e.is_finite()) {
            return Err(Error::NonFinite("energies"));
        }
        if !dipoles.iter().all(|d| d.is_finite()) {
            return Err(Error::NonFinite("dipoles"));
        }
        if energies.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSystem(
                "energies must be listed in non-decreasing order".into(),
            ));
        }
        Ok(Self { energies, dipoles })
    }

    /// Number of levels `N`.
    pub fn n_levels(&self) -> usize {
        self.energies.len()
    }

    /// Energy levels in non-decreasing order.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Nearest-neighbour dipole moments `d_1, …, d_{N−1}`.
    pub fn dipoles(&self) -> &[f64] {
        &self.dipoles
    }

    /// The drift generator `iH0 = i·diag(E_1, …, E_N)`.
    pub fn build_h0(&self) -> ComplexMatrix {
        ComplexMatrix::from_diag_imag(&self.energies)
    }

    /// The traceless drift generator `iH0′ = i·diag(E_n − Ē)`.
    pub fn build_h0_prime(&self) -> ComplexMatrix {
        let mean = self.energies.iter().sum::<f64>() / self.energies.len() as f64;
        let shifted: Vec<f64> = self.energies.iter().map(|e| e - mean).collect();
        ComplexMatrix::from_diag_imag(&shifted)
    }

    /// The drive generator `iH1 = Σ_n d_n · i(e_{n,n+1} + e_{n+1,n})`.
    pub fn build_h1(&self) -> ComplexMatrix {
        let n = self.n_levels();
        let mut m = ComplexMatrix::zeros(n);
        for (k, &d) in self.dipoles.iter().enumerate() {
            m.set_entry(k, k + 1, C64::new(0.0, d));
            m.set_entry(k + 1, k, C64::new(0.0, d));
        }
        m
    }

    /// Transition gaps `μ_n = E_{n+1} − E_n` for `n = 1, …, N−1`.
    pub fn transition_gaps(&self) -> Vec<f64> {
        self.energies.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Detects the symmetric-coupling condition `μ_n = μ_{N−n}` and
    /// `d_n = d_{N−n}` for all `n`.
    ///
    /// Comparisons are relative: gaps against the largest gap magnitude and
    /// dipoles against the largest dipole magnitude, so the answer is
    /// invariant under overall energy shifts and insensitive to scale.
    pub fn detect_symmetric_coupling(&self, tolerance: f64) -> bool {
        let gaps = self.transition_gaps();
        let k = gaps.len();
        let gap_scale = gaps.iter().fold(0.0_f64, |a, g| a.max(g.abs())).max(1e-300);
        let dip_scale = self.dipoles.iter().fold(0.0_f64, |a, d| a.max(d.abs())).max(1e-300);
        for n in 0..k {
            let mirror = k - 1 - n;
            if (gaps[n] - gaps[mirror]).abs() > tolerance * gap_scale {
                return false;
            }
            if (self.dipoles[n] - self.dipoles[mirror]).abs() > tolerance * dip_scale {
                return false;
            }
        }
        true
    }

    /// 1-based indices of vanishing dipoles.  A nonempty answer means the
    /// system decomposes into independent blocks and the dynamical algebra
    /// cannot act irreducibly.
    pub fn decomposability_flags(&self, tolerance: f64) -> Vec<usize> {
        let dip_scale = self.dipoles.iter().fold(0.0_f64, |a, d| a.max(d.abs()));
        self.dipoles
            .iter()
            .enumerate()
            .filter(|(_, d)| d.abs() <= tolerance * dip_scale)
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// A dipole moment as written in an input file: a number or a surd token.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DipoleValue {
    Number(f64),
    Expression(String),
}

impl DipoleValue {
    /// Numeric value, parsing surd tokens as needed.
    pub fn value(&self) -> Result<f64> {
        match self {
            DipoleValue::Number(v) => Ok(*v),
            DipoleValue::Expression(s) => parse_dipole_token(s),
        }
    }
}

/// Parses a dipole token: a decimal number, `sqrt(k)`, or `c*sqrt(k)`
/// with decimal `c` and non-negative decimal `k`; an optional leading
/// sign is allowed on any form.
pub fn parse_dipole_token(token: &str) -> Result<f64> {
    let fail = |reason: &str| Error::ParseToken { token: token.to_string(), reason: reason.into() };
    let mut s = token.trim();
    let mut sign = 1.0;
    if let Some(rest) = s.strip_prefix('-') {
        sign = -1.0;
        s = rest.trim_start();
    } else if let Some(rest) = s.strip_prefix('+') {
        s = rest.trim_start();
    }
    if s.is_empty() {
        return Err(fail("empty token"));
    }

    let parse_number = |text: &str, what: &str| -> Result<f64> {
        let v: f64 = text
            .trim()
            .parse()
            .map_err(|_| fail(&format!("cannot parse {what} `{}` as a number", text.trim())))?;
        if !v.is_finite() {
            return Err(fail(&format!("{what} must be finite")));
        }
        Ok(v)
    };

    let parse_sqrt = |text: &str| -> Result<f64> {
        let inner = text
            .strip_prefix("sqrt(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| fail("expected a number, sqrt(k), or c*sqrt(k)"))?;
        let k = parse_number(inner, "radicand")?;
        if k < 0.0 {
            return Err(fail("radicand must be non-negative"));
        }
        Ok(k.sqrt())
    };

    let value = if let Some(pos) = s.find("*sqrt(") {
        let coeff = parse_number(&s[..pos], "coefficient")?;
        coeff * parse_sqrt(s[pos + 1..].trim())?
    } else if s.starts_with("sqrt(") {
        parse_sqrt(s)?
    } else {
        parse_number(s, "value")?
    };
    Ok(sign * value)
}

/// Serialization-friendly system description, as read from input files.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemInput {
    pub energies: Vec<f64>,
    pub dipoles: Vec<DipoleValue>,
    /// Optional per-file override of the working tolerance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl SystemInput {
    /// Resolves tokens and validates, returning the system together with
    /// the per-file tolerance override, if any.
    pub fn resolve(&self) -> Result<(SystemSpec, Option<f64>)> {
        let dipoles: Vec<f64> =
            self.dipoles.iter().map(DipoleValue::value).collect::<Result<_>>()?;
        let spec = SystemSpec::new(self.energies.clone(), dipoles)?;
        if let Some(tol) = self.tolerance {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Error::InvalidSystem(format!(
                    "tolerance must be a positive finite number, got {tol}"
                )));
            }
        }
        Ok((spec, self.tolerance))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{GenLabel, GeneratorTable};

    fn spec(e: &[f64], d: &[f64]) -> SystemSpec {
        SystemSpec::new(e.to_vec(), d.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_malformed_systems() {
        assert!(SystemSpec::new(vec![1.0], vec![]).is_err());
        assert!(SystemSpec::new(vec![1.0, 2.0], vec![1.0, 2.0]).is_err());
        assert!(SystemSpec::new(vec![2.0, 1.0], vec![1.0]).is_err());
        assert!(SystemSpec::new(vec![1.0, f64::NAN], vec![1.0]).is_err());
        assert!(SystemSpec::new(vec![1.0, 2.0], vec![f64::INFINITY]).is_err());
        // Degenerate energies and zero dipoles are allowed.
        assert!(SystemSpec::new(vec![1.0, 1.0, 2.0], vec![0.0, 1.0]).is_ok());
    }

    #[test]
    fn generator_construction() {
        let s = spec(&[1.0, 2.0, 4.0], &[1.0, 2.0]);

        let h0 = s.build_h0();
        assert_eq!(h0.entry(0, 0), C64::new(0.0, 1.0));
        assert_eq!(h0.entry(2, 2), C64::new(0.0, 4.0));

        // Traceless part subtracts the mean 7/3.
        let h0p = s.build_h0_prime();
        assert!(h0p.trace().norm() <= 1e-12 * h0p.norm());
        assert!((h0p.entry(0, 0).im - (1.0 - 7.0 / 3.0)).abs() < 1e-15);

        let h1 = s.build_h1();
        assert_eq!(h1.entry(0, 1), C64::new(0.0, 1.0));
        assert_eq!(h1.entry(1, 0), C64::new(0.0, 1.0));
        assert_eq!(h1.entry(1, 2), C64::new(0.0, 2.0));
        assert_eq!(h1.entry(0, 2), C64::new(0.0, 0.0));
        assert!(h1.is_skew_hermitian(1e-14));

        // iH1 = Σ d_m y_{m,m+1} in the su(N) table.
        let table = GeneratorTable::su_basis(3).unwrap();
        let want = &table.complex(&GenLabel::YPair(1, 2)).unwrap()
            + &table.complex(&GenLabel::YPair(2, 3)).unwrap().scaled(2.0);
        assert_eq!(h1.distance(&want), 0.0);
    }

    #[test]
    fn gaps_and_symmetry() {
        let s = spec(&[1.0, 2.0, 4.0, 7.0], &[1.0, 1.0, 1.0]);
        assert_eq!(s.transition_gaps(), vec![1.0, 2.0, 3.0]);
        assert!(!s.detect_symmetric_coupling(1e-9));

        // Symmetric gaps and dipoles; invariant under an energy shift.
        let s = spec(&[0.0, 1.0, 3.0, 4.0], &[1.0, 2.0, 1.0]);
        assert!(s.detect_symmetric_coupling(1e-9));
        let shifted = spec(&[10.0, 11.0, 13.0, 14.0], &[1.0, 2.0, 1.0]);
        assert!(shifted.detect_symmetric_coupling(1e-9));

        // Asymmetric dipoles break it.
        let s = spec(&[0.0, 1.0, 3.0, 4.0], &[1.0, 2.0, 1.5]);
        assert!(!s.detect_symmetric_coupling(1e-9));
    }

    #[test]
    fn decomposability() {
        let s = spec(&[0.0, 1.0, 2.0, 3.0], &[1.0, 0.0, 1.0]);
        assert_eq!(s.decomposability_flags(1e-12), vec![2]);
        let s = spec(&[0.0, 1.0], &[1.0]);
        assert!(s.decomposability_flags(1e-12).is_empty());
    }

    #[test]
    fn dipole_tokens() {
        assert_eq!(parse_dipole_token("2"), Ok(2.0));
        assert_eq!(parse_dipole_token("-2.25"), Ok(-2.25));
        assert_eq!(parse_dipole_token(" sqrt(4) "), Ok(2.0));
        assert_eq!(parse_dipole_token("sqrt(2)"), Ok(2.0_f64.sqrt()));
        assert_eq!(parse_dipole_token("-sqrt(5)"), Ok(-(5.0_f64.sqrt())));
        assert_eq!(parse_dipole_token("3*sqrt(5)"), Ok(3.0 * 5.0_f64.sqrt()));
        assert_eq!(parse_dipole_token("1.5*sqrt(2)"), Ok(1.5 * 2.0_f64.sqrt()));
        assert_eq!(parse_dipole_token("+sqrt(9)"), Ok(3.0));

        for bad in ["", "sqr(2)", "sqrt(2", "sqrt(-1)", "two", "2*sqrt(-3)", "sqrt()"] {
            assert!(parse_dipole_token(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn input_resolution() {
        let json = r#"{"energies": [-5.0, -4.0, -2.0],
                       "dipoles": ["sqrt(2)", 1.0],
                       "tolerance": 1e-10}"#;
        let input: SystemInput = serde_json::from_str(json).unwrap();
        let (spec, tol) = input.resolve().unwrap();
        assert_eq!(spec.n_levels(), 3);
        assert!((spec.dipoles()[0] - 2.0_f64.sqrt()).abs() < 1e-15);
        assert_eq!(tol, Some(1e-10));

        // Unknown fields are rejected so typos do not silently change runs.
        let bad = r#"{"energies": [0.0, 1.0], "dipoles": [1.0], "tol": 1e-9}"#;
        assert!(serde_json::from_str::<SystemInput>(bad).is_err());

        // A malformed tolerance is rejected at resolution time.
        let bad_tol = r#"{"energies": [0.0, 1.0], "dipoles": [1.0], "tolerance": -1.0}"#;
        let input: SystemInput = serde_json::from_str(bad_tol).unwrap();
        assert!(input.resolve().is_err());
    }
}
