//! Deterministic RNG, the bounded worker pool, and exact reference
//! evaluation of the symmetry operators used by the grid checks.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_traits::One;

use crate::arith::Rational;
use crate::means::PreciseMean;

/// SplitMix64: tiny, seedable, and stable forever — reports generated with
/// the same seed must stay byte-identical across dependency bumps.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

pub type Job<T> = Box<dyn FnOnce() -> T + Send>;

/// Runs jobs on up to `threads` workers, returning results in job order.
pub fn run_jobs<T: Send>(jobs: Vec<Job<T>>, threads: usize) -> Vec<T> {
    let n = jobs.len();
    if n == 0 {
        return Vec::new();
    }
    let threads = threads.clamp(1, n);
    if threads == 1 {
        return jobs.into_iter().map(|j| j()).collect();
    }
    let slots: Vec<Mutex<Option<Job<T>>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let results: Vec<Mutex<Option<T>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let job = slots[i].lock().unwrap().take().unwrap();
                *results[i].lock().unwrap() = Some(job());
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap().unwrap())
        .collect()
}

/// Thread cap: `MEANFORGE_THREADS` when set, available parallelism otherwise.
pub fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("MEANFORGE_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Exact group symmetry `S_{M0}(M1)` at one point from high-precision mean
/// values; everything after the square roots is rational arithmetic.
pub fn precise_group_symmetry(
    m0: &PreciseMean,
    m1: &PreciseMean,
    a: &Rational,
    b: &Rational,
    digits: u32,
) -> Rational {
    let u = m0.eval(a, b, digits);
    let v = m1.eval(a, b, digits);
    let ub = &u - b;
    let ua = &u - a;
    let num = a * (&v - a) * &ub * &ub - b * &ua * &ua * (&v - b);
    let den = (&v - a) * &ub * &ub - &ua * &ua * (&v - b);
    num / den
}

/// Exact functional symmetry with respect to `L_c` (closed form) at one
/// point: `σ = L((1+2c)M - 2(1+c)L) / (2cM - (1+2c)L)`.
pub fn precise_sigma_lc(
    c: &Rational,
    m1: &PreciseMean,
    a: &Rational,
    b: &Rational,
    digits: u32,
) -> Rational {
    let l = PreciseMean::Lc(c.clone()).eval(a, b, digits);
    let m = m1.eval(a, b, digits);
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let num = &l * ((&one + &two * c) * &m - &two * (&one + c) * &l);
    let den = &two * c * &m - (&one + &two * c) * &l;
    num / den
}
