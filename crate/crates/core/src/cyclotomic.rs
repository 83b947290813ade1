//! Exact arithmetic in Z[zeta] with zeta = exp(i pi / 4), so zeta^4 = -1.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `c0 + c1 zeta + c2 zeta^2 + c3 zeta^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CyclotomicInt(pub [i64; 4]);

impl CyclotomicInt {
    pub const ZERO: Self = Self([0; 4]);
    pub const ONE: Self = Self([1, 0, 0, 0]);
    pub const ZETA: Self = Self([0, 1, 0, 0]);

    pub fn from_int(n: i64) -> Self {
        Self([n, 0, 0, 0])
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        Self(c)
    }

    /// Multiplication by zeta: `(c0, c1, c2, c3) -> (-c3, c0, c1, c2)`.
    pub fn mul_zeta(self) -> Self {
        let [a, b, c, d] = self.0;
        Self([-d, a, b, c])
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    /// Complex conjugate (zeta -> zeta^-1 = -zeta^3).
    pub fn conj(self) -> Self {
        let [a, b, c, d] = self.0;
        Self([a, -d, -c, -b])
    }

    /// `|z|^2` as `(p, q)` meaning `p + q sqrt(2)`.
    pub fn norm_sqr(self) -> (i64, i64) {
        let [p, x, _, y] = (self * self.conj()).0;
        // a real element of Z[zeta] is p + x (zeta - zeta^3)
        debug_assert_eq!(x, -y);
        (p, x)
    }

    /// `|z|` when it is a rational integer.
    pub fn integer_magnitude(self) -> Option<u64> {
        let (p, q) = self.norm_sqr();
        if q != 0 || p < 0 {
            return None;
        }
        let r = (p as f64).sqrt().round() as u64;
        (r.checked_mul(r) == Some(p as u64)).then_some(r)
    }

    pub fn to_complex(self) -> (f64, f64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.0.map(|x| x as f64);
        (a + h * b - h * d, h * b + c + h * d)
    }
}

impl Add for CyclotomicInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl AddAssign for CyclotomicInt {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for CyclotomicInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CyclotomicInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl Mul for CyclotomicInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                let p = self.0[i] * o.0[j];
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        Self(out)
    }
}

impl Mul<i64> for CyclotomicInt {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self(self.0.map(|x| x * k))
    }
}

impl Sum for CyclotomicInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "z", "z^2", "z^3"];
        let mut wrote = false;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let m = c.unsigned_abs();
            match (i, m) {
                (0, _) => write!(f, "{m}")?,
                (_, 1) => write!(f, "{}", names[i])?,
                _ => write!(f, "{m}*{}", names[i])?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
