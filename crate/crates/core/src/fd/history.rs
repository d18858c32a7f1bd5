//! Exact Grünwald–Letnikov history sums by blocked FFT convolution.
//!
//! For every channel c the sum `H[n] = sum_{k=1}^{n} w_k x[n-k]` is needed
//! once per step, with x growing by one sample each step. Lags below
//! `DIRECT_LAGS` are summed directly. Lags in [B, 2B), for B = DIRECT_LAGS,
//! 2 DIRECT_LAGS, ..., are added to an accumulator in bulk: when step pB is
//! reached, the contribution of samples [(p-2)B, pB) to outputs
//! [pB, (p+1)B) is one circular convolution of length 2B. The cost per step
//! is O(log^2 n) per channel and no lag is dropped.

use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

pub(crate) const DIRECT_LAGS: usize = 64;

struct Level {
    block: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    kernel: Vec<Complex<f64>>,
}

pub(crate) struct HistorySum {
    channels: usize,
    capacity: usize,
    weights: Vec<f64>,
    levels: Vec<Level>,
    acc: Vec<f64>,
    buf: Vec<Complex<f64>>,
    scratch: Vec<Complex<f64>>,
}

impl HistorySum {
    /// `weights` holds w_0..w_capacity; outputs H[n] are available for
    /// n <= capacity.
    pub(crate) fn new(weights: Vec<f64>, channels: usize) -> Self {
        let capacity = weights.len() - 1;
        let mut planner = FftPlanner::new();
        let mut levels = Vec::new();
        let mut block = DIRECT_LAGS;
        let mut scratch_len = 0;
        while block <= capacity {
            let n = 2 * block;
            let forward = planner.plan_fft_forward(n);
            let inverse = planner.plan_fft_inverse(n);
            let scale = 1.0 / n as f64;
            let mut kernel: Vec<Complex<f64>> = (0..n)
                .map(|e| {
                    let lag = block + e;
                    if e < block && lag <= capacity {
                        Complex::new(weights[lag] * scale, 0.0)
                    } else {
                        Complex::new(0.0, 0.0)
                    }
                })
                .collect();
            forward.process(&mut kernel);
            scratch_len = scratch_len
                .max(forward.get_inplace_scratch_len())
                .max(inverse.get_inplace_scratch_len());
            levels.push(Level {
                block,
                forward,
                inverse,
                kernel,
            });
            block *= 2;
        }
        let max_fft = levels.last().map_or(0, |l| 2 * l.block);
        HistorySum {
            channels,
            capacity,
            weights,
            levels,
            acc: vec![0.0; (capacity + 1) * channels],
            buf: vec![Complex::new(0.0, 0.0); max_fft],
            scratch: vec![Complex::new(0.0, 0.0); scratch_len],
        }
    }

    /// Writes H[n] for every channel into `out`, where `history` holds the
    /// samples x[0..n) row by row (row m = all channels at step m).
    pub(crate) fn sum(&mut self, history: &[f64], n: usize, out: &mut [f64]) {
        let ch = self.channels;
        debug_assert!(n <= self.capacity && history.len() >= n * ch);
        for li in 0..self.levels.len() {
            let b = self.levels[li].block;
            if n >= b && n % b == 0 {
                self.flush_level(li, history, n);
            }
        }
        out.copy_from_slice(&self.acc[n * ch..(n + 1) * ch]);
        for k in 1..DIRECT_LAGS.min(n + 1) {
            let w = self.weights[k];
            let row = &history[(n - k) * ch..(n - k + 1) * ch];
            for (o, x) in out.iter_mut().zip(row) {
                *o += w * x;
            }
        }
    }

    fn flush_level(&mut self, li: usize, history: &[f64], n: usize) {
        let ch = self.channels;
        let level = &self.levels[li];
        let b = level.block;
        let len = 2 * b;
        let buf = &mut self.buf[..len];
        let start = n as isize - 2 * b as isize;
        let outputs = b.min(self.capacity + 1 - n);
        let mut c = 0;
        while c < ch {
            let pair = c + 1 < ch;
            for (i, z) in buf.iter_mut().enumerate() {
                let m = start + i as isize;
                *z = if m < 0 {
                    Complex::new(0.0, 0.0)
                } else {
                    let row = m as usize * ch;
                    Complex::new(history[row + c], if pair { history[row + c + 1] } else { 0.0 })
                };
            }
            level.forward.process_with_scratch(buf, &mut self.scratch);
            for (z, k) in buf.iter_mut().zip(&level.kernel) {
                *z *= k;
            }
            level.inverse.process_with_scratch(buf, &mut self.scratch);
            for q in 0..outputs {
                let z = buf[b + q];
                let row = (n + q) * ch;
                self.acc[row + c] += z.re;
                if pair {
                    self.acc[row + c + 1] += z.im;
                }
            }
            c += 2;
        }
    }
}
