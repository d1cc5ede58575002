//! Exact verification of the canonical commutation rules.
//!
//! The constructive procedures in [`crate::criteria`] lean on a small set of
//! bracket identities among the canonical generators of the odd orthogonal
//! and symplectic families.  This module replays every identity, for every
//! admissible index combination, in exact Gaussian-integer arithmetic.
//! Formally written labels (swapped indices) are resolved through
//! [`GeneratorTable::resolve`], so the rule set is confirmed for all ordered
//! index pairs, not only the canonical `m < n` instances.
//!
//! Per family and rank `ℓ` the checked count is `10ℓ(ℓ−1) + ℓ`: ten
//! two-index rules over all ordered pairs plus one single-index rule per
//! root index.

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::tables::{Family, GenLabel, GeneratorTable, Root};

/// Outcome of replaying a family's rule set.
#[derive(Debug, Clone)]
pub struct RuleReport {
    pub family: Family,
    pub rank: usize,
    /// Number of rule instances evaluated.
    pub rules_checked: usize,
    /// Human-readable descriptions of any failing instances (empty on
    /// success).
    pub failures: Vec<String>,
}

impl RuleReport {
    /// True when every instance held exactly.
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

fn resolved(table: &GeneratorTable, label: &GenLabel) -> IntMatrix {
    let (sign, matrix) = table
        .resolve(label)
        .unwrap_or_else(|| panic!("rule references unknown generator {label}"));
    matrix.scaled(sign)
}

fn check(
    table: &GeneratorTable,
    report: &mut RuleReport,
    name: &str,
    a: GenLabel,
    b: GenLabel,
    rhs: &[(i64, GenLabel)],
) {
    let lhs = resolved(table, &a).commutator(&resolved(table, &b));
    let mut want = IntMatrix::zeros(table.ambient_dim());
    for (coeff, label) in rhs {
        want = &want + &resolved(table, label).scaled(*coeff);
    }
    report.rules_checked += 1;
    if lhs != want {
        report.failures.push(format!("{name}: [{a}, {b}] does not match the stated combination"));
    }
}

/// Replays the odd orthogonal rule set on `so(2ℓ+1)`.
///
/// For all ordered pairs `m ≠ n` and all `m`:
///
/// 1. `[x_{ε_m}, x_{ε_m−ε_n}] = −x_{ε_n}`
/// 2. `[x_{ε_m}, y_{ε_m−ε_n}] = y_{ε_n}`
/// 3. `[x_{ε_m}, x_{ε_n}] = x_{ε_m−ε_n} − x_{ε_m+ε_n}`
/// 4. `[x_{ε_m}, y_{ε_n}] = −(y_{ε_m−ε_n} + y_{ε_m+ε_n})`
/// 5. `[x_{ε_m}, y_{ε_m}] = −2h_m`
/// 6. `[x_{ε_m±ε_n}, y_{ε_m±ε_n}] = −2(h_m ± h_n)`
/// 7. `[h_m, x_{ε_m±ε_n}] = −y_{ε_m±ε_n}`
/// 8. `[h_m, y_{ε_m±ε_n}] = x_{ε_m±ε_n}`
pub fn verify_so_odd_rules(l: usize) -> Result<RuleReport> {
    if l < 1 {
        return Err(Error::InvalidRank { family: "so_odd", reason: "requires rank >= 1".into() });
    }
    let table = GeneratorTable::so_odd_basis(l)?;
    let mut report =
        RuleReport { family: Family::SoOdd, rank: l, rules_checked: 0, failures: Vec::new() };

    for m in 1..=l {
        check(
            &table,
            &mut report,
            "rule 5",
            GenLabel::X(Root::Single(m)),
            GenLabel::Y(Root::Single(m)),
            &[(-2, GenLabel::H(m))],
        );
        for n in 1..=l {
            if n == m {
                continue;
            }
            check(
                &table,
                &mut report,
                "rule 1",
                GenLabel::X(Root::Single(m)),
                GenLabel::X(Root::Minus(m, n)),
                &[(-1, GenLabel::X(Root::Single(n)))],
            );
            check(
                &table,
                &mut report,
                "rule 2",
                GenLabel::X(Root::Single(m)),
                GenLabel::Y(Root::Minus(m, n)),
                &[(1, GenLabel::Y(Root::Single(n)))],
            );
            check(
                &table,
                &mut report,
                "rule 3",
                GenLabel::X(Root::Single(m)),
                GenLabel::X(Root::Single(n)),
                &[(1, GenLabel::X(Root::Minus(m, n))), (-1, GenLabel::X(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 4",
                GenLabel::X(Root::Single(m)),
                GenLabel::Y(Root::Single(n)),
                &[(-1, GenLabel::Y(Root::Minus(m, n))), (-1, GenLabel::Y(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 6+",
                GenLabel::X(Root::Plus(m, n)),
                GenLabel::Y(Root::Plus(m, n)),
                &[(-2, GenLabel::H(m)), (-2, GenLabel::H(n))],
            );
            check(
                &table,
                &mut report,
                "rule 6-",
                GenLabel::X(Root::Minus(m, n)),
                GenLabel::Y(Root::Minus(m, n)),
                &[(-2, GenLabel::H(m)), (2, GenLabel::H(n))],
            );
            check(
                &table,
                &mut report,
                "rule 7+",
                GenLabel::H(m),
                GenLabel::X(Root::Plus(m, n)),
                &[(-1, GenLabel::Y(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 7-",
                GenLabel::H(m),
                GenLabel::X(Root::Minus(m, n)),
                &[(-1, GenLabel::Y(Root::Minus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 8+",
                GenLabel::H(m),
                GenLabel::Y(Root::Plus(m, n)),
                &[(1, GenLabel::X(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 8-",
                GenLabel::H(m),
                GenLabel::Y(Root::Minus(m, n)),
                &[(1, GenLabel::X(Root::Minus(m, n)))],
            );
        }
    }
    Ok(report)
}

/// Replays the symplectic rule set on `sp(ℓ)`.
///
/// For all ordered pairs `m ≠ n` and all `m`:
///
/// 1. `[x_{2ε_n}, x_{ε_m−ε_n}] = x_{ε_m+ε_n}`
/// 2. `[x_{2ε_n}, y_{ε_m−ε_n}] = y_{ε_m+ε_n}`
/// 3. `[x_{ε_m+ε_n}, x_{ε_m−ε_n}] = 2(x_{2ε_m} − x_{2ε_n})`
/// 4. `[x_{ε_m+ε_n}, y_{ε_m−ε_n}] = 2(y_{2ε_m} + y_{2ε_n})`
/// 5. `[x_{2ε_m}, y_{2ε_m}] = −2h_m`
/// 6. `[x_{ε_m±ε_n}, y_{ε_m±ε_n}] = −2(h_m ± h_n)`
/// 7. `[h_m, x_{ε_m±ε_n}] = −y_{ε_m±ε_n}`
/// 8. `[h_m, y_{ε_m±ε_n}] = x_{ε_m±ε_n}`
pub fn verify_sp_rules(l: usize) -> Result<RuleReport> {
    if l < 1 {
        return Err(Error::InvalidRank { family: "sp", reason: "requires rank >= 1".into() });
    }
    let table = GeneratorTable::sp_basis(l)?;
    let mut report =
        RuleReport { family: Family::Sp, rank: l, rules_checked: 0, failures: Vec::new() };

    for m in 1..=l {
        check(
            &table,
            &mut report,
            "rule 5",
            GenLabel::X(Root::Double(m)),
            GenLabel::Y(Root::Double(m)),
            &[(-2, GenLabel::H(m))],
        );
        for n in 1..=l {
            if n == m {
                continue;
            }
            check(
                &table,
                &mut report,
                "rule 1",
                GenLabel::X(Root::Double(n)),
                GenLabel::X(Root::Minus(m, n)),
                &[(1, GenLabel::X(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 2",
                GenLabel::X(Root::Double(n)),
                GenLabel::Y(Root::Minus(m, n)),
                &[(1, GenLabel::Y(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 3",
                GenLabel::X(Root::Plus(m, n)),
                GenLabel::X(Root::Minus(m, n)),
                &[(2, GenLabel::X(Root::Double(m))), (-2, GenLabel::X(Root::Double(n)))],
            );
            check(
                &table,
                &mut report,
                "rule 4",
                GenLabel::X(Root::Plus(m, n)),
                GenLabel::Y(Root::Minus(m, n)),
                &[(2, GenLabel::Y(Root::Double(m))), (2, GenLabel::Y(Root::Double(n)))],
            );
            check(
                &table,
                &mut report,
                "rule 6+",
                GenLabel::X(Root::Plus(m, n)),
                GenLabel::Y(Root::Plus(m, n)),
                &[(-2, GenLabel::H(m)), (-2, GenLabel::H(n))],
            );
            check(
                &table,
                &mut report,
                "rule 6-",
                GenLabel::X(Root::Minus(m, n)),
                GenLabel::Y(Root::Minus(m, n)),
                &[(-2, GenLabel::H(m)), (2, GenLabel::H(n))],
            );
            check(
                &table,
                &mut report,
                "rule 7+",
                GenLabel::H(m),
                GenLabel::X(Root::Plus(m, n)),
                &[(-1, GenLabel::Y(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 7-",
                GenLabel::H(m),
                GenLabel::X(Root::Minus(m, n)),
                &[(-1, GenLabel::Y(Root::Minus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 8+",
                GenLabel::H(m),
                GenLabel::Y(Root::Plus(m, n)),
                &[(1, GenLabel::X(Root::Plus(m, n)))],
            );
            check(
                &table,
                &mut report,
                "rule 8-",
                GenLabel::H(m),
                GenLabel::Y(Root::Minus(m, n)),
                &[(1, GenLabel::X(Root::Minus(m, n)))],
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_odd_rules_hold_exactly() {
        for l in 1..=4 {
            let report = verify_so_odd_rules(l).unwrap();
            assert!(report.all_hold(), "failures at rank {l}: {:?}", report.failures);
            assert_eq!(report.rules_checked, 10 * l * (l - 1) + l);
        }
    }

    #[test]
    fn sp_rules_hold_exactly() {
        for l in 1..=4 {
            let report = verify_sp_rules(l).unwrap();
            assert!(report.all_hold(), "failures at rank {l}: {:?}", report.failures);
            assert_eq!(report.rules_checked, 10 * l * (l - 1) + l);
        }
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert!(verify_so_odd_rules(0).is_err());
        assert!(verify_sp_rules(0).is_err());
    }

    #[test]
    fn derived_cartan_ladder_relations() {
        // Relations used by the constructive procedures but not part of the
        // printed rule set: the action of each Cartan element on the ladder.
        for l in 1..=3 {
            let table = GeneratorTable::so_odd_basis(l).unwrap();
            for j in 1..=l {
                let h = table.cartan(j).unwrap();
                // Ladder site 1 is the single root ε_1.
                let x1 = table.ladder_x(1).unwrap();
                let y1 = table.ladder_y(1).unwrap();
                let c1 = if j == 1 { 1 } else { 0 };
                assert_eq!(h.commutator(x1), y1.scaled(-c1));
                assert_eq!(h.commutator(y1), x1.scaled(c1));
                // Ladder sites m ≥ 2 are the differences ε_{m−1} − ε_m.
                for m in 2..=l {
                    let xm = table.ladder_x(m).unwrap();
                    let ym = table.ladder_y(m).unwrap();
                    let c = i64::from(j == m - 1) - i64::from(j == m);
                    assert_eq!(h.commutator(xm), ym.scaled(-c));
                    assert_eq!(h.commutator(ym), xm.scaled(c));
                }
            }
        }
        for l in 1..=3 {
            let table = GeneratorTable::sp_basis(l).unwrap();
            for j in 1..=l {
                let h = table.cartan(j).unwrap();
                for m in 1..l {
                    let xm = table.ladder_x(m).unwrap();
                    let ym = table.ladder_y(m).unwrap();
                    let c = i64::from(j == m) - i64::from(j == m + 1);
                    assert_eq!(h.commutator(xm), ym.scaled(-c));
                    assert_eq!(h.commutator(ym), xm.scaled(c));
                }
                // The long root 2ε_ℓ couples with weight 2 to h_ℓ.
                let xl = table.ladder_x(l).unwrap();
                let yl = table.ladder_y(l).unwrap();
                let c = 2 * i64::from(j == l);
                assert_eq!(h.commutator(xl), yl.scaled(-c));
                assert_eq!(h.commutator(yl), xl.scaled(c));
            }
        }
    }
}
