//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection and
//! eigenvectors by inverse iteration.

#[derive(Clone, Debug)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    /// `off[i]` couples rows `i` and `i + 1`.
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1));
        SymTridiagonal { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.len() {
            let coupling = if i > 0 {
                self.off[i - 1] * self.off[i - 1] / q
            } else {
                0.0
            };
            q = self.diag[i] - x - coupling;
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.len());
        let (mut lo, mut hi) = self.gershgorin();
        let pad = f64::EPSILON * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE;
        lo -= pad;
        hi += pad;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Unit eigenvector for an (accurate) eigenvalue `lambda`.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let scale = self
            .diag
            .iter()
            .chain(&self.off)
            .fold(0.0f64, |m, x| m.max(x.abs()))
            .max(1.0);
        let shift = lambda + 8.0 * f64::EPSILON * scale;
        let lu = ShiftedLu::new(self, shift);
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64 / 13.0).collect();
        for _ in 0..4 {
            v = lu.solve(v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }

    /// `‖T v − λ v‖₂`
    pub fn residual(&self, lambda: f64, v: &[f64]) -> f64 {
        self.matvec(v)
            .iter()
            .zip(v)
            .map(|(tv, x)| (tv - lambda * x).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// LU factorization with partial pivoting of `T − σ I`.
struct ShiftedLu {
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    l: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn new(t: &SymTridiagonal, sigma: f64) -> Self {
        let n = t.len();
        let tiny = f64::EPSILON * t.diag.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let mut d: Vec<f64> = t.diag.iter().map(|x| x - sigma).collect();
        let mut up = t.off.clone();
        let low = t.off.clone();
        let mut u2 = vec![0.0; n.saturating_sub(2)];
        let mut l = vec![0.0; n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= low[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                l[i] = low[i] / d[i];
                d[i + 1] -= l[i] * up[i];
            } else {
                swapped[i] = true;
                l[i] = d[i] / low[i];
                d[i] = low[i];
                let tmp = up[i];
                up[i] = d[i + 1];
                d[i + 1] = tmp - l[i] * d[i + 1];
                if i + 2 < n {
                    u2[i] = up[i + 1];
                    up[i + 1] *= -l[i];
                }
            }
        }
        if let Some(last) = d.last_mut() {
            if *last == 0.0 {
                *last = tiny;
            }
        }
        ShiftedLu {
            u0: d,
            u1: up,
            u2,
            l,
            swapped,
        }
    }

    fn solve(&self, mut b: Vec<f64>) -> Vec<f64> {
        let n = b.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                b.swap(i, i + 1);
                b[i + 1] -= self.l[i] * b[i];
            } else {
                b[i + 1] -= self.l[i] * b[i];
            }
        }
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= self.u1[i] * b[i + 1];
            }
            if i + 2 < n {
                s -= self.u2[i] * b[i + 2];
            }
            b[i] = s / self.u0[i];
        }
        b
    }
}
