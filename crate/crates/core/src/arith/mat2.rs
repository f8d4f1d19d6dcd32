use std::fmt;
use std::ops::Mul;

use super::int::ext_gcd;

/// Integer 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

impl Mat2 {
    pub const fn new(a: i128, b: i128, c: i128, d: i128) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub const IDENTITY: Mat2 = Mat2::new(1, 0, 0, 1);
    pub const SIGMA: Mat2 = Mat2::new(0, -1, 1, 0);
    pub const TAU: Mat2 = Mat2::new(-1, 1, -1, 0);
    pub const ETA: Mat2 = Mat2::new(-1, 0, 0, 1);

    pub const fn t(n: i128) -> Mat2 {
        Mat2::new(1, n, 0, 1)
    }

    pub fn det(&self) -> i128 {
        self.a * self.d - self.b * self.c
    }

    /// Adjugate `[[d, -b], [-c, a]]`; the inverse when the determinant is 1.
    pub fn adj(&self) -> Mat2 {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// Equality in `PSL_2`.
    pub fn eq_up_to_sign(&self, other: &Mat2) -> bool {
        self == other || *self == other.neg()
    }

    /// A matrix of `SL_2(Z)` sending infinity to `a/c` (coprime).
    pub fn from_cusp(a: i128, c: i128) -> Mat2 {
        let (g, x, y) = ext_gcd(a, c);
        debug_assert_eq!(g, 1);
        // a x + c y = 1
        Mat2::new(a, -y, c, x)
    }

    /// Image of the cusp `p/q` as a reduced pair with nonnegative denominator.
    pub fn act_cusp(&self, p: i128, q: i128) -> (i128, i128) {
        normalize_cusp(self.a * p + self.b * q, self.c * p + self.d * q)
    }
}

/// Coprime pair with `q >= 0` and infinity written `(1, 0)`.
pub fn normalize_cusp(p: i128, q: i128) -> (i128, i128) {
    let g = super::int::gcd(p, q);
    let (mut p, mut q) = (p / g, q / g);
    if q < 0 || (q == 0 && p < 0) {
        p = -p;
        q = -q;
    }
    (p, q)
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
