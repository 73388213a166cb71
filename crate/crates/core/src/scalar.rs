//! Scalar abstraction for the floating-point side of the engine.
//!
//! Everything exact (the `h` function, comparisons) stays in integer
//! rationals; everything after a square root is generic over [`Real`]
//! so the index sums and closed-form bounds work at `f32` or `f64`.
//! The crate-root aliases pin the default precision to `f64`.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + std::fmt::Debug {}

impl<T> Real for T where T: Float + FromPrimitive + std::fmt::Debug {}

/// Lossy conversion from a small unsigned integer (degrees, orders).
#[inline]
pub fn from_usize<T: Real>(v: usize) -> T {
    T::from_usize(v).expect("usize representable in scalar")
}

/// Lossy conversion from a signed integer (rational numerators).
#[inline]
pub fn from_i64<T: Real>(v: i64) -> T {
    T::from_i64(v).expect("i64 representable in scalar")
}

/// Compensated (Kahan) summation, so edge sums are order-independent
/// to roughly one ulp.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<T: Real> {
    sum: T,
    compensation: T,
}

impl<T: Real> KahanSum<T> {
    pub fn new() -> Self {
        KahanSum {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, value: T) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> T {
        self.sum
    }
}

impl<T: Real> Default for KahanSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> FromIterator<T> for KahanSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        // Naive f32 summation of 1.0 + 1e7 * 1e-7 drifts; Kahan holds tight.
        let mut acc = KahanSum::<f32>::new();
        acc.add(1.0);
        for _ in 0..10_000_000 {
            acc.add(1e-7);
        }
        assert!((acc.total() - 2.0).abs() < 1e-3);
    }

    #[test]
    fn generic_over_f32_and_f64() {
        fn twice<T: Real>(x: T) -> T {
            x + x
        }
        assert_eq!(twice(1.5f32), 3.0f32);
        assert_eq!(twice(1.5f64), 3.0f64);
    }
}
