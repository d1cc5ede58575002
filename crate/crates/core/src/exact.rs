//! Exact matrices over the Gaussian integers.
//!
//! Every canonical generator in this crate has entries in `{0, ±1, ±2, ±i,
//! ±2i}`, so generator tables and their commutation relations can be built
//! and verified without floating point.  [`IntMatrix`] stores real and
//! imaginary integer parts separately and supports the ring operations plus
//! commutators; [`IntMatrix::to_complex`] hands a matrix over to the
//! numerical layer.

use crate::linalg::{C64, ComplexMatrix};

/// Square matrix with Gaussian-integer entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    re: Vec<i64>,
    im: Vec<i64>,
}

impl IntMatrix {
    /// The zero matrix of side `n`.
    pub fn zeros(n: usize) -> Self {
        Self { n, re: vec![0; n * n], im: vec![0; n * n] }
    }

    /// The identity matrix of side `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.re[k * n + k] = 1;
        }
        m
    }

    /// Elementary matrix with a single 1 at 0-based row `r`, column `c`.
    pub fn elementary(n: usize, r: usize, c: usize) -> Self {
        assert!(r < n && c < n, "elementary index out of range");
        let mut m = Self::zeros(n);
        m.re[r * n + c] = 1;
        m
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (row, column) as a (real, imaginary) pair.
    pub fn entry(&self, r: usize, c: usize) -> (i64, i64) {
        (self.re[r * self.n + c], self.im[r * self.n + c])
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.re.iter().all(|&v| v == 0) && self.im.iter().all(|&v| v == 0)
    }

    /// Multiplication by the imaginary unit: `A ↦ iA`.
    pub fn times_i(&self) -> Self {
        Self {
            n: self.n,
            re: self.im.iter().map(|&v| -v).collect(),
            im: self.re.clone(),
        }
    }

    /// Scaling by an integer.
    pub fn scaled(&self, k: i64) -> Self {
        Self {
            n: self.n,
            re: self.re.iter().map(|&v| k * v).collect(),
            im: self.im.iter().map(|&v| k * v).collect(),
        }
    }

    /// Transpose (no conjugation).
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                t.re[c * n + r] = self.re[r * n + c];
                t.im[c * n + r] = self.im[r * n + c];
            }
        }
        t
    }

    /// Conjugate transpose `A†`.
    pub fn adjoint(&self) -> Self {
        let mut t = self.transpose();
        for v in &mut t.im {
            *v = -*v;
        }
        t
    }

    /// Matrix trace as a (real, imaginary) pair.
    pub fn trace(&self) -> (i64, i64) {
        let mut re = 0;
        let mut im = 0;
        for k in 0..self.n {
            re += self.re[k * self.n + k];
            im += self.im[k * self.n + k];
        }
        (re, im)
    }

    /// Commutator `[A, B] = AB − BA`, computed exactly.
    pub fn commutator(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "commutator requires equal dimensions");
        &(self * other) - &(other * self)
    }

    /// Real parts as nested rows.
    pub fn rows_re(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|r| self.re[r * self.n..(r + 1) * self.n].to_vec()).collect()
    }

    /// Imaginary parts as nested rows.
    pub fn rows_im(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|r| self.im[r * self.n..(r + 1) * self.n].to_vec()).collect()
    }

    /// Conversion to the dense floating-point carrier.
    pub fn to_complex(&self) -> ComplexMatrix {
        let n = self.n;
        ComplexMatrix::from_fn(n, |r, c| {
            C64::new(self.re[r * n + c] as f64, self.im[r * n + c] as f64)
        })
    }
}

impl std::ops::Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "add requires equal dimensions");
        IntMatrix {
            n: self.n,
            re: self.re.iter().zip(&rhs.re).map(|(a, b)| a + b).collect(),
            im: self.im.iter().zip(&rhs.im).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "sub requires equal dimensions");
        IntMatrix {
            n: self.n,
            re: self.re.iter().zip(&rhs.re).map(|(a, b)| a - b).collect(),
            im: self.im.iter().zip(&rhs.im).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        self.scaled(-1)
    }
}

impl std::ops::Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "mul requires equal dimensions");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let (ar, ai) = (self.re[r * n + k], self.im[r * n + k]);
                if ar == 0 && ai == 0 {
                    continue;
                }
                for c in 0..n {
                    let (br, bi) = (rhs.re[k * n + c], rhs.im[k * n + c]);
                    out.re[r * n + c] += ar * br - ai * bi;
                    out.im[r * n + c] += ar * bi + ai * br;
                }
            }
        }
        out
    }
}
