//! Dense `[batch, variate, time]` storage used for forecasting windows.

use std::fmt;

/// Row-major `[batch, variate, time]` array of `f64`.
///
/// Every `(batch, variate)` pair owns one contiguous series of length
/// `time`, so most kernels treat the tensor as `batch * variates` rows.
#[derive(Clone, PartialEq)]
pub struct SeriesTensor {
    batch: usize,
    variates: usize,
    time: usize,
    data: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("tensor data has {got} elements, shape [{batch}, {variates}, {time}] needs {expected}")]
pub struct ShapeError {
    pub batch: usize,
    pub variates: usize,
    pub time: usize,
    pub expected: usize,
    pub got: usize,
}

impl SeriesTensor {
    pub fn zeros(batch: usize, variates: usize, time: usize) -> Self {
        Self {
            batch,
            variates,
            time,
            data: vec![0.0; batch * variates * time],
        }
    }

    pub fn from_vec(
        batch: usize,
        variates: usize,
        time: usize,
        data: Vec<f64>,
    ) -> Result<Self, ShapeError> {
        let expected = batch * variates * time;
        if data.len() != expected {
            return Err(ShapeError {
                batch,
                variates,
                time,
                expected,
                got: data.len(),
            });
        }
        Ok(Self {
            batch,
            variates,
            time,
            data,
        })
    }

    /// Builds a tensor by evaluating `f(b, n, t)` at every index.
    pub fn from_fn(
        batch: usize,
        variates: usize,
        time: usize,
        mut f: impl FnMut(usize, usize, usize) -> f64,
    ) -> Self {
        let mut data = Vec::with_capacity(batch * variates * time);
        for b in 0..batch {
            for n in 0..variates {
                for t in 0..time {
                    data.push(f(b, n, t));
                }
            }
        }
        Self {
            batch,
            variates,
            time,
            data,
        }
    }

    pub fn batch(&self) -> usize {
        self.batch
    }

    pub fn variates(&self) -> usize {
        self.variates
    }

    pub fn time(&self) -> usize {
        self.time
    }

    pub fn shape(&self) -> [usize; 3] {
        [self.batch, self.variates, self.time]
    }

    /// Number of independent series (`batch * variates`).
    pub fn rows(&self) -> usize {
        self.batch * self.variates
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn get(&self, b: usize, n: usize, t: usize) -> f64 {
        self.data[(b * self.variates + n) * self.time + t]
    }

    pub fn set(&mut self, b: usize, n: usize, t: usize, value: f64) {
        self.data[(b * self.variates + n) * self.time + t] = value;
    }

    /// The series at flat row index `row = b * variates + n`.
    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.time..(row + 1) * self.time]
    }

    pub fn row_mut(&mut self, row: usize) -> &mut [f64] {
        &mut self.data[row * self.time..(row + 1) * self.time]
    }

    pub fn series(&self) -> std::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.time.max(1))
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl fmt::Debug for SeriesTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesTensor")
            .field("shape", &self.shape())
            .field("data", &self.data)
            .finish()
    }
}
