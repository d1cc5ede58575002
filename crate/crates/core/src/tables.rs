//! Canonical generator tables for the compact classical families.
//!
//! Each family comes with an explicit basis of skew-Hermitian matrices with
//! Gaussian-integer entries:
//!
//! * `su(N)`: off-diagonal pairs `x_{m,n}`, `y_{m,n}` and Cartan elements
//!   `h_m` built from adjacent diagonal differences;
//! * `so(2ℓ+1)` (odd orthogonal): Cartan `h_m`, single-root pairs
//!   `x_{ε_m}`, `y_{ε_m}` coupling to the distinguished first coordinate,
//!   and sum/difference root pairs;
//! * `sp(ℓ)` (symplectic): Cartan `h_m`, double-root pairs `x_{2ε_m}`,
//!   `y_{2ε_m}`, and sum/difference root pairs;
//! * `so(2ℓ)` (even orthogonal): Cartan `h_m` and sum/difference root
//!   pairs only.
//!
//! The tables carry the information the rest of the crate needs: label
//! lookup, resolution of formally swapped root labels to signed canonical
//! generators, the distinguished ladder elements used by the constructive
//! procedures, and the exact bilinear form each orthogonal/symplectic
//! family preserves.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::linalg::ComplexMatrix;

/// The classification families handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Special unitary `su(N)`.
    Su,
    /// Odd orthogonal `so(2ℓ+1)`.
    SoOdd,
    /// Symplectic `sp(ℓ)` acting on `C^{2ℓ}`.
    Sp,
    /// Even orthogonal `so(2ℓ)`.
    SoEven,
}

impl Family {
    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            Family::Su => "su",
            Family::SoOdd => "so_odd",
            Family::Sp => "sp",
            Family::SoEven => "so_even",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "su" => Ok(Family::Su),
            "so_odd" => Ok(Family::SoOdd),
            "sp" => Ok(Family::Sp),
            "so_even" => Ok(Family::SoEven),
            other => Err(Error::ParseToken {
                token: other.to_string(),
                reason: "expected one of su, so_odd, sp, so_even".to_string(),
            }),
        }
    }
}

/// Root label for the orthogonal and symplectic families (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Root {
    /// `ε_m` (odd orthogonal only).
    Single(usize),
    /// `2ε_m` (symplectic only).
    Double(usize),
    /// `ε_m + ε_n`.
    Plus(usize, usize),
    /// `ε_m − ε_n`.
    Minus(usize, usize),
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Single(m) => write!(f, "e{m}"),
            Root::Double(m) => write!(f, "2e{m}"),
            Root::Plus(m, n) => write!(f, "e{m}+e{n}"),
            Root::Minus(m, n) => write!(f, "e{m}-e{n}"),
        }
    }
}

/// Label of a canonical generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenLabel {
    /// Cartan element `h_m` (1-based).
    H(usize),
    /// `su(N)` generator `x_{m,n}` (1-based, canonical when `m < n`).
    XPair(usize, usize),
    /// `su(N)` generator `y_{m,n}`.
    YPair(usize, usize),
    /// Root generator `x_α`.
    X(Root),
    /// Root generator `y_α`.
    Y(Root),
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::H(m) => write!(f, "h_{{{m}}}"),
            GenLabel::XPair(m, n) => write!(f, "x_{{{m},{n}}}"),
            GenLabel::YPair(m, n) => write!(f, "y_{{{m},{n}}}"),
            GenLabel::X(r) => write!(f, "x_{{{r}}}"),
            GenLabel::Y(r) => write!(f, "y_{{{r}}}"),
        }
    }
}

/// A labelled exact generator.
#[derive(Debug, Clone)]
pub struct Generator {
    pub label: GenLabel,
    pub matrix: IntMatrix,
}

/// JSON-exportable view of a generator: the label plus integer real and
/// imaginary parts, row by row.
#[derive(Debug, Clone, Serialize)]
pub struct TableRecord {
    pub label: String,
    pub real_part: Vec<Vec<i64>>,
    pub imag_part: Vec<Vec<i64>>,
}

/// Complete canonical basis of one family at one size.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    family: Family,
    /// Family parameter: `N` for `su(N)`, the rank `ℓ` otherwise.
    param: usize,
    /// Ambient matrix side length.
    n: usize,
    generators: Vec<Generator>,
    index: HashMap<GenLabel, usize>,
}

fn elem(n: usize, r: usize, c: usize) -> IntMatrix {
    IntMatrix::elementary(n, r, c)
}

/// `x(a, b) = e_{ab} − e_{ba}` with 0-based indices.
fn x_of(n: usize, a: usize, b: usize) -> IntMatrix {
    &elem(n, a, b) - &elem(n, b, a)
}

/// `y(a, b) = i(e_{ab} + e_{ba})` with 0-based indices.
fn y_of(n: usize, a: usize, b: usize) -> IntMatrix {
    (&elem(n, a, b) + &elem(n, b, a)).times_i()
}

// ---------------------------------------------------------------------------
// Raw formula builders.  These accept index pairs in either order so that
// the unit tests can confirm the formal swap signs directly against the
// defining formulas; the canonical tables only store the `m < n` instances.
// ---------------------------------------------------------------------------

mod formulas {
    use super::*;

    // Odd orthogonal so(2ℓ+1): ambient side n = 2ℓ + 1, the distinguished
    // coordinate sits at row 0 and root index m occupies rows m and m + ℓ.

    pub fn so_odd_h(l: usize, m: usize) -> IntMatrix {
        let n = 2 * l + 1;
        (&elem(n, m, m) - &elem(n, m + l, m + l)).times_i()
    }

    pub fn so_odd_x_single(l: usize, m: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &x_of(n, 0, m) - &x_of(n, m + l, 0)
    }

    pub fn so_odd_y_single(l: usize, m: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &y_of(n, 0, m) - &y_of(n, m + l, 0)
    }

    pub fn so_odd_x_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &x_of(n, m + l, n_idx) - &x_of(n, n_idx + l, m)
    }

    pub fn so_odd_y_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &y_of(n, m + l, n_idx) - &y_of(n, n_idx + l, m)
    }

    pub fn so_odd_x_minus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &x_of(n, n_idx, m) - &x_of(n, m + l, n_idx + l)
    }

    pub fn so_odd_y_minus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l + 1;
        &y_of(n, n_idx, m) - &y_of(n, m + l, n_idx + l)
    }

    // Symplectic sp(ℓ): ambient side n = 2ℓ, root index m occupies rows
    // m − 1 and m + ℓ − 1.

    pub fn sp_h(l: usize, m: usize) -> IntMatrix {
        let n = 2 * l;
        (&elem(n, m - 1, m - 1) - &elem(n, m + l - 1, m + l - 1)).times_i()
    }

    pub fn sp_x_double(l: usize, m: usize) -> IntMatrix {
        x_of(2 * l, m + l - 1, m - 1)
    }

    pub fn sp_y_double(l: usize, m: usize) -> IntMatrix {
        y_of(2 * l, m + l - 1, m - 1)
    }

    pub fn sp_x_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &x_of(n, m + l - 1, n_idx - 1) + &x_of(n, n_idx + l - 1, m - 1)
    }

    pub fn sp_y_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &y_of(n, m + l - 1, n_idx - 1) + &y_of(n, n_idx + l - 1, m - 1)
    }

    pub fn sp_x_minus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &x_of(n, n_idx - 1, m - 1) - &x_of(n, m + l - 1, n_idx + l - 1)
    }

    pub fn sp_y_minus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &y_of(n, n_idx - 1, m - 1) - &y_of(n, m + l - 1, n_idx + l - 1)
    }

    // Even orthogonal so(2ℓ): same ambient layout as sp(ℓ); the Cartan and
    // difference roots coincide with the symplectic ones, while the sum
    // roots differ by the relative sign between the two halves.

    pub fn so_even_x_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &x_of(n, m + l - 1, n_idx - 1) - &x_of(n, n_idx + l - 1, m - 1)
    }

    pub fn so_even_y_plus(l: usize, m: usize, n_idx: usize) -> IntMatrix {
        let n = 2 * l;
        &y_of(n, m + l - 1, n_idx - 1) - &y_of(n, n_idx + l - 1, m - 1)
    }
}

impl GeneratorTable {
    fn build(family: Family, param: usize, n: usize, generators: Vec<Generator>) -> Self {
        let mut index = HashMap::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            let previous = index.insert(g.label, k);
            debug_assert!(previous.is_none(), "duplicate generator label {}", g.label);
        }
        Self { family, param, n, generators, index }
    }

    /// Canonical basis of `su(N)` for `N ≥ 2`.
    ///
    /// Order: `h_1, …, h_{N−1}`, then for each `m < n` the pair
    /// `x_{m,n}, y_{m,n}` in lexicographic order.
    pub fn su_basis(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank { family: "su", reason: "requires N >= 2".into() });
        }
        let mut gens = Vec::with_capacity(n * n - 1);
        for m in 1..n {
            gens.push(Generator {
                label: GenLabel::H(m),
                matrix: (&elem(n, m - 1, m - 1) - &elem(n, m, m)).times_i(),
            });
        }
        for m in 1..=n {
            for k in (m + 1)..=n {
                gens.push(Generator { label: GenLabel::XPair(m, k), matrix: x_of(n, m - 1, k - 1) });
                gens.push(Generator { label: GenLabel::YPair(m, k), matrix: y_of(n, m - 1, k - 1) });
            }
        }
        Ok(Self::build(Family::Su, n, n, gens))
    }

    /// Canonical basis of `so(2ℓ+1)` for `ℓ ≥ 1`.
    ///
    /// Order: `h_1, …, h_ℓ`; single roots `x_{ε_m}, y_{ε_m}`; then for each
    /// `m < n` the pairs `x_{ε_m−ε_n}, y_{ε_m−ε_n}, x_{ε_m+ε_n}, y_{ε_m+ε_n}`.
    pub fn so_odd_basis(l: usize) -> Result<Self> {
        if l < 1 {
            return Err(Error::InvalidRank { family: "so_odd", reason: "requires rank >= 1".into() });
        }
        let n = 2 * l + 1;
        let mut gens = Vec::with_capacity(l * (2 * l + 1));
        for m in 1..=l {
            gens.push(Generator { label: GenLabel::H(m), matrix: formulas::so_odd_h(l, m) });
        }
        for m in 1..=l {
            gens.push(Generator {
                label: GenLabel::X(Root::Single(m)),
                matrix: formulas::so_odd_x_single(l, m),
            });
            gens.push(Generator {
                label: GenLabel::Y(Root::Single(m)),
                matrix: formulas::so_odd_y_single(l, m),
            });
        }
        for m in 1..=l {
            for k in (m + 1)..=l {
                gens.push(Generator {
                    label: GenLabel::X(Root::Minus(m, k)),
                    matrix: formulas::so_odd_x_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Minus(m, k)),
                    matrix: formulas::so_odd_y_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::X(Root::Plus(m, k)),
                    matrix: formulas::so_odd_x_plus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Plus(m, k)),
                    matrix: formulas::so_odd_y_plus(l, m, k),
                });
            }
        }
        Ok(Self::build(Family::SoOdd, l, n, gens))
    }

    /// Canonical basis of `sp(ℓ)` for `ℓ ≥ 1`.
    ///
    /// Order: `h_1, …, h_ℓ`; double roots `x_{2ε_m}, y_{2ε_m}`; then for
    /// each `m < n` the pairs `x_{ε_m−ε_n}, y_{ε_m−ε_n}, x_{ε_m+ε_n},
    /// y_{ε_m+ε_n}`.
    pub fn sp_basis(l: usize) -> Result<Self> {
        if l < 1 {
            return Err(Error::InvalidRank { family: "sp", reason: "requires rank >= 1".into() });
        }
        let n = 2 * l;
        let mut gens = Vec::with_capacity(l * (2 * l + 1));
        for m in 1..=l {
            gens.push(Generator { label: GenLabel::H(m), matrix: formulas::sp_h(l, m) });
        }
        for m in 1..=l {
            gens.push(Generator {
                label: GenLabel::X(Root::Double(m)),
                matrix: formulas::sp_x_double(l, m),
            });
            gens.push(Generator {
                label: GenLabel::Y(Root::Double(m)),
                matrix: formulas::sp_y_double(l, m),
            });
        }
        for m in 1..=l {
            for k in (m + 1)..=l {
                gens.push(Generator {
                    label: GenLabel::X(Root::Minus(m, k)),
                    matrix: formulas::sp_x_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Minus(m, k)),
                    matrix: formulas::sp_y_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::X(Root::Plus(m, k)),
                    matrix: formulas::sp_x_plus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Plus(m, k)),
                    matrix: formulas::sp_y_plus(l, m, k),
                });
            }
        }
        Ok(Self::build(Family::Sp, l, n, gens))
    }

    /// Canonical basis of `so(2ℓ)` for `ℓ ≥ 2`.
    ///
    /// Order: `h_1, …, h_ℓ`; then for each `m < n` the pairs
    /// `x_{ε_m−ε_n}, y_{ε_m−ε_n}, x_{ε_m+ε_n}, y_{ε_m+ε_n}`.  Rank 1 is
    /// rejected: `so(2)` is abelian and offers no ladder.
    pub fn so_even_basis(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidRank {
                family: "so_even",
                reason: "requires rank >= 2".into(),
            });
        }
        let n = 2 * l;
        let mut gens = Vec::with_capacity(l * (2 * l - 1));
        for m in 1..=l {
            gens.push(Generator { label: GenLabel::H(m), matrix: formulas::sp_h(l, m) });
        }
        for m in 1..=l {
            for k in (m + 1)..=l {
                gens.push(Generator {
                    label: GenLabel::X(Root::Minus(m, k)),
                    matrix: formulas::sp_x_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Minus(m, k)),
                    matrix: formulas::sp_y_minus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::X(Root::Plus(m, k)),
                    matrix: formulas::so_even_x_plus(l, m, k),
                });
                gens.push(Generator {
                    label: GenLabel::Y(Root::Plus(m, k)),
                    matrix: formulas::so_even_y_plus(l, m, k),
                });
            }
        }
        Ok(Self::build(Family::SoEven, l, n, gens))
    }

    /// Builds the table for a family code and parameter (`N` for `su`,
    /// rank `ℓ` otherwise).
    pub fn for_family(family: Family, param: usize) -> Result<Self> {
        match family {
            Family::Su => Self::su_basis(param),
            Family::SoOdd => Self::so_odd_basis(param),
            Family::Sp => Self::sp_basis(param),
            Family::SoEven => Self::so_even_basis(param),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Family parameter: `N` for `su(N)`, rank `ℓ` otherwise.
    pub fn param(&self) -> usize {
        self.param
    }

    /// Ambient matrix side length.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Number of basis elements.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// All generators in canonical order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Lookup by canonical label.
    pub fn get(&self, label: &GenLabel) -> Option<&IntMatrix> {
        self.index.get(label).map(|&k| &self.generators[k].matrix)
    }

    /// Cartan element `h_m` (1-based).
    pub fn cartan(&self, m: usize) -> Option<&IntMatrix> {
        self.get(&GenLabel::H(m))
    }

    /// Canonicalizes a formally written label, returning the sign picked up
    /// when swapping root indices into canonical (`m < n`) order.
    ///
    /// Across every family the difference-root `x` is antisymmetric and the
    /// difference-root `y` symmetric under index exchange.  Sum roots are
    /// antisymmetric (both `x` and `y`) in the orthogonal families and
    /// symmetric in the symplectic family.  The `su(N)` pairs behave like
    /// difference roots.
    pub fn canonicalize(&self, label: &GenLabel) -> Option<(i64, GenLabel)> {
        let plus_swap_sign = match self.family {
            Family::SoOdd | Family::SoEven => -1,
            Family::Sp => 1,
            Family::Su => return match label {
                GenLabel::H(_) => Some((1, *label)),
                GenLabel::XPair(m, n) if m < n => Some((1, *label)),
                GenLabel::XPair(m, n) if m > n => Some((-1, GenLabel::XPair(*n, *m))),
                GenLabel::YPair(m, n) if m < n => Some((1, *label)),
                GenLabel::YPair(m, n) if m > n => Some((1, GenLabel::YPair(*n, *m))),
                _ => None,
            },
        };
        match label {
            GenLabel::H(_) => Some((1, *label)),
            GenLabel::X(Root::Single(_)) | GenLabel::Y(Root::Single(_)) => Some((1, *label)),
            GenLabel::X(Root::Double(_)) | GenLabel::Y(Root::Double(_)) => Some((1, *label)),
            GenLabel::X(Root::Minus(m, n)) if m < n => Some((1, *label)),
            GenLabel::X(Root::Minus(m, n)) if m > n => Some((-1, GenLabel::X(Root::Minus(*n, *m)))),
            GenLabel::Y(Root::Minus(m, n)) if m < n => Some((1, *label)),
            GenLabel::Y(Root::Minus(m, n)) if m > n => Some((1, GenLabel::Y(Root::Minus(*n, *m)))),
            GenLabel::X(Root::Plus(m, n)) if m < n => Some((1, *label)),
            GenLabel::X(Root::Plus(m, n)) if m > n => {
                Some((plus_swap_sign, GenLabel::X(Root::Plus(*n, *m))))
            }
            GenLabel::Y(Root::Plus(m, n)) if m < n => Some((1, *label)),
            GenLabel::Y(Root::Plus(m, n)) if m > n => {
                Some((plus_swap_sign, GenLabel::Y(Root::Plus(*n, *m))))
            }
            _ => None,
        }
    }

    /// Resolves a formally written label to a signed canonical generator.
    pub fn resolve(&self, label: &GenLabel) -> Option<(i64, &IntMatrix)> {
        let (sign, canonical) = self.canonicalize(label)?;
        self.get(&canonical).map(|m| (sign, m))
    }

    /// Label of the `m`-th ladder element `x_m` (1-based), when the family
    /// has a ladder (all except `su`).
    pub fn ladder_x_label(&self, m: usize) -> Option<GenLabel> {
        let l = self.param;
        if m == 0 || m > l {
            return None;
        }
        match self.family {
            Family::Su => None,
            Family::SoOdd => Some(if m == 1 {
                GenLabel::X(Root::Single(1))
            } else {
                GenLabel::X(Root::Minus(m - 1, m))
            }),
            Family::Sp => Some(if m == l {
                GenLabel::X(Root::Double(l))
            } else {
                GenLabel::X(Root::Minus(m, m + 1))
            }),
            Family::SoEven => Some(if m == l {
                GenLabel::X(Root::Plus(l - 1, l))
            } else {
                GenLabel::X(Root::Minus(m, m + 1))
            }),
        }
    }

    /// Label of the `m`-th ladder element `y_m` (1-based).
    pub fn ladder_y_label(&self, m: usize) -> Option<GenLabel> {
        self.ladder_x_label(m).map(|label| match label {
            GenLabel::X(root) => GenLabel::Y(root),
            other => other,
        })
    }

    /// The `m`-th ladder element `x_m`.
    pub fn ladder_x(&self, m: usize) -> Option<&IntMatrix> {
        self.ladder_x_label(m).and_then(|label| self.get(&label))
    }

    /// The `m`-th ladder element `y_m`.
    pub fn ladder_y(&self, m: usize) -> Option<&IntMatrix> {
        self.ladder_y_label(m).and_then(|label| self.get(&label))
    }

    /// The exact bilinear form preserved by the family: `XᵀS + SX = 0` for
    /// every generator `X`.  Symmetric for the orthogonal families,
    /// antisymmetric for the symplectic family; `None` for `su`.
    pub fn invariant_form(&self) -> Option<IntMatrix> {
        let l = self.param;
        match self.family {
            Family::Su => None,
            Family::SoOdd => {
                let n = 2 * l + 1;
                let mut s = elem(n, 0, 0);
                for m in 1..=l {
                    s = &s + &(&elem(n, m, m + l) + &elem(n, m + l, m));
                }
                Some(s)
            }
            Family::Sp => {
                let n = 2 * l;
                let mut j = IntMatrix::zeros(n);
                for m in 1..=l {
                    j = &j + &(&elem(n, m - 1, m + l - 1) - &elem(n, m + l - 1, m - 1));
                }
                Some(j)
            }
            Family::SoEven => {
                let n = 2 * l;
                let mut s = IntMatrix::zeros(n);
                for m in 1..=l {
                    s = &s + &(&elem(n, m - 1, m + l - 1) + &elem(n, m + l - 1, m - 1));
                }
                Some(s)
            }
        }
    }

    /// Generators converted to dense complex matrices, in canonical order.
    pub fn complex_elements(&self) -> Vec<ComplexMatrix> {
        self.generators.iter().map(|g| g.matrix.to_complex()).collect()
    }

    /// A labelled generator as a dense complex matrix.
    pub fn complex(&self, label: &GenLabel) -> Option<ComplexMatrix> {
        self.get(label).map(IntMatrix::to_complex)
    }

    /// Exportable records in canonical order.
    pub fn export_records(&self) -> Vec<TableRecord> {
        self.generators
            .iter()
            .map(|g| TableRecord {
                label: g.label.to_string(),
                real_part: g.matrix.rows_re(),
                imag_part: g.matrix.rows_im(),
            })
            .collect()
    }
}
