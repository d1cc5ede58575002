//! Numerical commutator closure.
//!
//! [`lie_closure`] computes an orthonormal basis of the smallest real Lie
//! algebra containing the given skew-Hermitian generators.  New directions
//! are discovered by bracketing basis elements pairwise in a fixed
//! first-in-first-out schedule and accepting a bracket exactly when its
//! component orthogonal to the current span is larger than
//! `tolerance × ‖bracket‖`; the procedure is therefore deterministic for a
//! given input.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, OrthoBasis};

/// Floor below which a bracket is treated as numerically zero outright,
/// independent of the relative tolerance.
const BRACKET_FLOOR: f64 = 1e-12;

/// Relative threshold for considering a generator traceless.
const TRACE_TOLERANCE: f64 = 1e-12;

/// Result of a commutator-closure run.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    /// Orthonormal basis of the computed span, in discovery order.
    pub basis: OrthoBasis,
    /// Dimension of the computed span.
    pub dim: usize,
    /// True when the computed span is the full closure: the bracket
    /// schedule drained, or the dimension reached the ambient bound beyond
    /// which no skew-Hermitian algebra can grow.
    pub converged: bool,
    /// True when the run stopped because the dimension cap was reached.
    pub hit_max_dim: bool,
    /// Number of commutators evaluated.
    pub brackets_evaluated: usize,
    /// Validated copies of the input generators, in input order.
    pub generator_copies: Vec<ComplexMatrix>,
}

impl ClosureResult {
    /// Membership test against the computed span: returns whether the
    /// element lies in the span together with its orthogonal residual norm.
    /// The zero matrix is a member with residual zero.
    pub fn membership(&self, element: &ComplexMatrix) -> Result<(bool, f64)> {
        let residual = self.basis.residual_norm(element)?;
        let member = residual <= self.basis.tolerance() * element.norm();
        Ok((member, residual))
    }
}

/// Computes the commutator closure of skew-Hermitian generators.
///
/// `tolerance` is the relative rank threshold (see [`OrthoBasis`]); when
/// `max_dim` is `None` the cap defaults to the ambient bound `N²−1` when
/// every generator is traceless and `N²` otherwise.  Generators with
/// nonzero trace are accepted: the closure then lives in `u(N)` rather
/// than `su(N)`, and the bound adapts.
///
/// Errors: empty input, mismatched dimensions, non-finite entries,
/// generators that are not skew-Hermitian.
pub fn lie_closure(
    generators: &[ComplexMatrix],
    tolerance: f64,
    max_dim: Option<usize>,
) -> Result<ClosureResult> {
    if generators.is_empty() {
        return Err(Error::EmptyInput("lie_closure requires at least one generator"));
    }
    let n = generators[0].dim();
    let mut all_traceless = true;
    for g in generators {
        if g.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
        }
        if !g.is_finite() {
            return Err(Error::NonFinite("closure generator"));
        }
        let norm = g.norm();
        let deviation = g.skew_deviation();
        if deviation > 1e-9 * norm.max(1.0) {
            return Err(Error::NotSkewHermitian {
                deviation: if norm > 0.0 { deviation / norm } else { deviation },
            });
        }
        if g.trace().norm() > TRACE_TOLERANCE * norm.max(1.0) {
            all_traceless = false;
        }
    }

    let ambient_bound = if all_traceless { n * n - 1 } else { n * n };
    let cap = max_dim.unwrap_or(ambient_bound);
    if cap == 0 {
        return Err(Error::InvalidSystem("max_dim must be at least 1".into()));
    }

    let mut basis = OrthoBasis::new(tolerance)?;
    let mut brackets_evaluated = 0usize;
    let mut hit_max_dim = false;

    'seed: for g in generators {
        basis.try_extend(g)?;
        if basis.len() >= cap {
            hit_max_dim = true;
            break 'seed;
        }
    }

    if !hit_max_dim {
        // FIFO pair schedule: bracket each new element against everything
        // discovered before it.
        let mut k = 1;
        'schedule: while k < basis.len() {
            for i in 0..k {
                let bracket = basis.elements()[i].commutator(&basis.elements()[k])?;
                brackets_evaluated += 1;
                if bracket.norm() <= BRACKET_FLOOR {
                    continue;
                }
                basis.try_extend(&bracket)?;
                if basis.len() >= cap {
                    hit_max_dim = true;
                    break 'schedule;
                }
            }
            k += 1;
        }
    }

    let dim = basis.len();
    let converged = !hit_max_dim || cap >= ambient_bound;
    Ok(ClosureResult {
        basis,
        dim,
        converged,
        hit_max_dim,
        brackets_evaluated,
        generator_copies: generators.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::SystemSpec;
    use crate::linalg::C64;

    fn two_level() -> Vec<ComplexMatrix> {
        let s = SystemSpec::new(vec![-0.5, 0.5], vec![1.0]).unwrap();
        vec![s.build_h0_prime(), s.build_h1()]
    }

    #[test]
    fn two_level_closure_is_su2() {
        let result = lie_closure(&two_level(), 1e-9, None).unwrap();
        assert_eq!(result.dim, 3);
        assert!(result.converged);
        assert!(result.brackets_evaluated > 0);
        assert_eq!(result.generator_copies.len(), 2);
    }

    #[test]
    fn single_generator_closure_is_one_dimensional() {
        let x = ComplexMatrix::from_diag_imag(&[1.0, -1.0]);
        let result = lie_closure(&[x], 1e-9, None).unwrap();
        assert_eq!(result.dim, 1);
        assert!(result.converged);
        assert!(!result.hit_max_dim);
    }

    #[test]
    fn duplicate_generators_are_deduplicated() {
        let gens = two_level();
        let doubled = vec![gens[0].clone(), gens[0].clone(), gens[1].clone(), gens[1].clone()];
        let result = lie_closure(&doubled, 1e-9, None).unwrap();
        assert_eq!(result.dim, 3);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(lie_closure(&[], 1e-9, None), Err(Error::EmptyInput(_))));

        let a = ComplexMatrix::from_diag_imag(&[1.0, -1.0]);
        let b = ComplexMatrix::from_diag_imag(&[1.0, 0.0, -1.0]);
        assert!(matches!(
            lie_closure(&[a.clone(), b], 1e-9, None),
            Err(Error::DimensionMismatch { .. })
        ));

        let hermitian = ComplexMatrix::from_diag_real(&[1.0, -1.0]);
        assert!(matches!(
            lie_closure(&[hermitian], 1e-9, None),
            Err(Error::NotSkewHermitian { .. })
        ));

        let mut bad = ComplexMatrix::zeros(2);
        bad.set_entry(0, 0, C64::new(0.0, f64::NAN));
        assert!(matches!(lie_closure(&[bad], 1e-9, None), Err(Error::NonFinite(_))));
    }

    #[test]
    fn max_dim_cap_reports_non_convergence() {
        // A 3-level ladder system generates all of su(3); capping at 5
        // stops the run early and the result says so.
        let s = SystemSpec::new(vec![1.0, 2.0, 4.0], vec![1.0, 1.0]).unwrap();
        let gens = vec![s.build_h0_prime(), s.build_h1()];
        let capped = lie_closure(&gens, 1e-9, Some(5)).unwrap();
        assert_eq!(capped.dim, 5);
        assert!(capped.hit_max_dim);
        assert!(!capped.converged);

        let full = lie_closure(&gens, 1e-9, None).unwrap();
        assert_eq!(full.dim, 8);
        assert!(full.converged);
    }

    #[test]
    fn generous_max_dim_does_not_affect_convergence() {
        let s = SystemSpec::new(vec![1.0, 2.0, 4.0], vec![1.0, 1.0]).unwrap();
        let gens = vec![s.build_h0_prime(), s.build_h1()];
        let result = lie_closure(&gens, 1e-9, Some(50)).unwrap();
        assert_eq!(result.dim, 8);
        assert!(result.converged);
        assert!(!result.hit_max_dim);
    }

    #[test]
    fn traceful_generators_extend_the_bound_to_u_n() {
        // iH0 (with trace) plus the drive closes in u(2): dimension 4.
        let s = SystemSpec::new(vec![1.0, 3.0], vec![1.0]).unwrap();
        let gens = vec![s.build_h0(), s.build_h1()];
        let result = lie_closure(&gens, 1e-9, None).unwrap();
        assert_eq!(result.dim, 4);
        assert!(result.converged);
    }

    #[test]
    fn membership_of_brackets_and_non_members() {
        let gens = two_level();
        let result = lie_closure(&gens, 1e-9, None).unwrap();

        let bracket = gens[0].commutator(&gens[1]).unwrap();
        let (member, residual) = result.membership(&bracket).unwrap();
        assert!(member);
        assert!(residual <= 1e-9 * bracket.norm());

        // i·identity is skew-Hermitian but outside su(2).
        let outside = ComplexMatrix::from_diag_imag(&[1.0, 1.0]);
        let (member, residual) = result.membership(&outside).unwrap();
        assert!(!member);
        assert!(residual > 0.5 * outside.norm());

        // The zero matrix is always a member.
        let (member, residual) = result.membership(&ComplexMatrix::zeros(2)).unwrap();
        assert!(member);
        assert_eq!(residual, 0.0);
    }

    #[test]
    fn closure_is_deterministic() {
        let s = SystemSpec::new(vec![1.0, 2.0, 4.0, 7.0], vec![1.0, 1.0, 1.0]).unwrap();
        let gens = vec![s.build_h0_prime(), s.build_h1()];
        let a = lie_closure(&gens, 1e-9, None).unwrap();
        let b = lie_closure(&gens, 1e-9, None).unwrap();
        assert_eq!(a.dim, b.dim);
        assert_eq!(a.brackets_evaluated, b.brackets_evaluated);
        for (x, y) in a.basis.elements().iter().zip(b.basis.elements()) {
            assert_eq!(x.distance(y), 0.0);
        }
    }
}
