use crate::sampler::CountVectors;

/// The six conditions of adaptedness, checked on a finite prefix. The
/// limit conditions 2–4 pass when the last term is within `tol` of the
/// limit; conditions 1, 5 and 6 are checked exactly on every term.
#[derive(Debug, Clone, PartialEq)]
pub struct AdaptedReport {
    pub conditions: [bool; 6],
    /// Largest deviation from the limits at the last term.
    pub last_deviation: f64,
}

impl AdaptedReport {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }
}

/// `seq` holds `(n, (m⃗_n, u⃗_n))` pairs in increasing `n`.
pub fn check_adapted(seq: &[(usize, CountVectors)], dvec: &[Vec<f64>], q: &[f64], tol: f64) -> AdaptedReport {
    let mut conditions = [true; 6];
    for (n, cv) in seq {
        let n = *n as u64;
        if cv.edge_total() > n * n.saturating_sub(1) / 2 || cv.vertex_total() != n {
            conditions[0] = false;
        }
        for (x, row) in cv.m().iter().enumerate() {
            for (y, &c) in row.iter().enumerate() {
                let d = dvec.get(x).and_then(|r| r.get(y)).copied().unwrap_or(0.0);
                if d == 0.0 && c > 0 {
                    conditions[4] = false;
                }
            }
        }
        for (t, &c) in cv.u().iter().enumerate() {
            if q.get(t).copied().unwrap_or(0.0) == 0.0 && c > 0 {
                conditions[5] = false;
            }
        }
    }
    let mut last_deviation = 0.0f64;
    if let Some((n, cv)) = seq.last() {
        let n = *n as f64;
        let k = cv.xi_len().max(dvec.len());
        let at = |x: usize, y: usize| cv.m().get(x).and_then(|r| r.get(y)).copied().unwrap_or(0) as f64 / n;
        for x in 0..k {
            for y in 0..k {
                let d = dvec.get(x).and_then(|r| r.get(y)).copied().unwrap_or(0.0);
                let (dev, cond) = if x == y { ((at(x, x) - d / 2.0).abs(), 1) } else { ((at(x, y) - d).abs(), 2) };
                last_deviation = last_deviation.max(dev);
                if dev > tol {
                    conditions[cond] = false;
                }
            }
        }
        for t in 0..cv.theta_len().max(q.len()) {
            let u = cv.u().get(t).copied().unwrap_or(0) as f64 / n;
            let dev = (u - q.get(t).copied().unwrap_or(0.0)).abs();
            last_deviation = last_deviation.max(dev);
            if dev > tol {
                conditions[3] = false;
            }
        }
    } else {
        conditions = [false; 6];
    }
    AdaptedReport { conditions, last_deviation }
}
