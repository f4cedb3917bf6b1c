//! Neumaier-compensated summation.
//!
//! Every statistic that feeds a published number accumulates in index order
//! through this type, so results are reproducible bit for bit and immune to
//! the usual cancellation in long sums.

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::CompensatedSum;

    #[test]
    fn recovers_cancelled_terms() {
        let mut s = CompensatedSum::new();
        for &x in &[1e16, 1.0, -1e16] {
            s.add(x);
        }
        assert_eq!(s.value(), 1.0, "naive summation would lose the 1.0");
    }

    #[test]
    fn matches_exact_sum_of_small_ints() {
        let mut s = CompensatedSum::new();
        for k in 1..=1000 {
            s.add(f64::from(k));
        }
        assert_eq!(s.value(), 500_500.0);
    }
}
