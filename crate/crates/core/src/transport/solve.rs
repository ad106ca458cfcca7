use super::matrix::{DegreeMatrix, TargetDegrees};
use crate::{Error, Result};

/// Output of [`transport_general`] with the change count and its budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportOutcome {
    pub matrix: DegreeMatrix,
    /// Columns where the output differs from the input.
    pub changed_columns: Vec<usize>,
    /// `s = |I|`, the number of columns where `β` disagrees with `deg A`.
    pub disagreements: usize,
    pub bound: u64,
}

impl TransportOutcome {
    pub fn within_bound(&self) -> bool {
        self.changed_columns.len() as u64 <= self.bound
    }
}

/// `(p + m)((2L + M)(s + 1) + s + 2)`.
pub fn change_bound(p: usize, m: usize, l: u64, big_m: u64, s: usize) -> u64 {
    let s = s as u64;
    (p + m) as u64 * ((2 * l + big_m) * (s + 1) + s + 2)
}

fn check_len(a: &DegreeMatrix, beta: &TargetDegrees) -> Result<()> {
    if a.n() != beta.len() {
        return Err(Error::invalid(format!("matrix has {} columns but target has {}", a.n(), beta.len())));
    }
    Ok(())
}

fn disagreement_set(alpha: &[u64], beta: &[u64]) -> Vec<usize> {
    (0..alpha.len()).filter(|&j| alpha[j] != beta[j]).collect()
}

/// A single diagonal row: the answer is `β` itself.
pub fn transport_case_p1(a: &DegreeMatrix, beta: &TargetDegrees) -> Result<DegreeMatrix> {
    if a.p() != 1 || a.m() != 0 {
        return Err(Error::invalid("case p1 needs exactly one diagonal row"));
    }
    check_len(a, beta)?;
    Ok(DegreeMatrix::from_parts(1, 0, a.n(), vec![beta.as_slice().to_vec()]))
}

/// One conjugate pair. The first column outside `I` is used as the pivot.
pub fn transport_case_m1(a: &DegreeMatrix, beta: &TargetDegrees) -> Result<DegreeMatrix> {
    if a.p() != 0 || a.m() != 1 {
        return Err(Error::invalid("case m1 needs exactly one conjugate pair"));
    }
    check_len(a, beta)?;
    let beta = beta.as_slice();
    let alpha = a.column_degrees();
    let disagree = disagreement_set(&alpha, beta);
    if disagree.is_empty() {
        return Ok(a.clone());
    }
    let Some(pivot) = (0..a.n()).find(|&j| alpha[j] == beta[j]) else {
        return Err(Error::Infeasible("every column disagrees with the target; no pivot column".into()));
    };
    let mut top = a.rows()[0].clone();
    let mut bottom = a.rows()[1].clone();

    // Step 1: route the excess of I ∪ {pivot} into the pivot column.
    let mut excess_top = beta[pivot];
    let mut excess_bottom = 0;
    for &k in disagree.iter().chain(std::iter::once(&pivot)) {
        excess_top += a.get(0, k);
        excess_bottom += a.get(1, k) + beta[k];
    }
    for &j in &disagree {
        top[j] = beta[j];
        bottom[j] = 0;
    }
    top[pivot] = excess_top;
    bottom[pivot] = excess_bottom;
    let r = excess_top + excess_bottom - beta[pivot];
    debug_assert_eq!(r % 2, 0);

    // Step 2: take r/2 pairs out of the pivot column, keeping row sums equal.
    for _ in 0..r / 2 {
        let (hi, lo) = if top[pivot] >= bottom[pivot] {
            (&mut top, &mut bottom)
        } else {
            (&mut bottom, &mut top)
        };
        if hi[pivot] >= lo[pivot] + 2 {
            let Some(k) = (0..lo.len()).find(|&k| k != pivot && lo[k] >= 1) else {
                return Err(Error::Infeasible("no column to shift a unit between the conjugate rows".into()));
            };
            hi[pivot] -= 2;
            hi[k] += 1;
            lo[k] -= 1;
        } else {
            if lo[pivot] == 0 {
                return Err(Error::Infeasible("pivot column exhausted before the excess was removed".into()));
            }
            hi[pivot] -= 1;
            lo[pivot] -= 1;
        }
    }
    let out = DegreeMatrix::from_parts(0, 1, a.n(), vec![top, bottom]);
    debug_assert_eq!(out.column_degrees(), beta);
    Ok(out)
}

struct Block {
    first: usize,
    rows: usize,
}

/// Splits `A` into its singleton and conjugate-pair blocks, solves each one
/// and reassembles.
pub fn transport_general(a: &DegreeMatrix, beta: &TargetDegrees) -> Result<TransportOutcome> {
    check_len(a, beta)?;
    a.check_membership()?;
    let n = a.n();
    let alpha = a.column_degrees();
    let target = beta.as_slice();
    let disagree = disagreement_set(&alpha, target);
    let mut in_i = vec![false; n];
    for &j in &disagree {
        in_i[j] = true;
    }
    let bound = change_bound(a.p(), a.m(), a.max_entry(), beta.max(), disagree.len());

    let blocks: Vec<Block> = (0..a.p())
        .map(|i| Block { first: i, rows: 1 })
        .chain((0..a.m()).map(|k| Block { first: a.p() + 2 * k, rows: 2 }))
        .collect();
    if blocks.is_empty() {
        if target.iter().any(|&b| b != 0) {
            return Err(Error::Infeasible("matrix has no rows but the target is nonzero".into()));
        }
        return Ok(TransportOutcome { matrix: a.clone(), changed_columns: vec![], disagreements: 0, bound });
    }

    // Targets for every block after the first; the first takes the residual.
    let mut targets: Vec<Vec<u64>> = Vec::with_capacity(blocks.len());
    let mut residual = target.to_vec();
    for (idx, block) in blocks.iter().enumerate().skip(1) {
        let mut t: Vec<u64> = (0..n)
            .map(|j| if in_i[j] { 0 } else { (0..block.rows).map(|r| a.get(block.first + r, j)).sum() })
            .collect();
        if t.iter().sum::<u64>() % 2 == 1 {
            let Some(js) = (0..n).find(|&j| !in_i[j] && t[j] > 0) else {
                return Err(Error::Infeasible(format!("no column available for the parity fix of block {}", idx + 1)));
            };
            t[js] -= 1;
        }
        for j in 0..n {
            residual[j] = residual[j].checked_sub(t[j]).ok_or_else(|| {
                Error::Infeasible(format!("residual target of the first block is negative at column {}", j + 1))
            })?;
        }
        targets.push(t);
    }
    targets.insert(0, residual);

    let mut rows = Vec::with_capacity(a.rows().len());
    for (block, t) in blocks.iter().zip(targets) {
        let t = TargetDegrees::new(t)?;
        let solved = if block.rows == 1 {
            transport_case_p1(&a.sub(block.first, 1, 1, 0), &t)?
        } else {
            transport_case_m1(&a.sub(block.first, 2, 0, 1), &t)?
        };
        rows.extend(solved.rows().iter().cloned());
    }
    let matrix = DegreeMatrix::from_parts(a.p(), a.m(), n, rows);
    debug_assert!(matrix.check_membership().is_ok());
    debug_assert_eq!(matrix.column_degrees(), target);
    let changed_columns = a.changed_columns(&matrix);
    let outcome = TransportOutcome { matrix, changed_columns, disagreements: disagree.len(), bound };
    debug_assert!(outcome.within_bound());
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn dm(p: usize, m: usize, rows: Vec<Vec<u64>>) -> DegreeMatrix {
        DegreeMatrix::new(p, m, rows).unwrap()
    }

    fn tg(b: Vec<u64>) -> TargetDegrees {
        TargetDegrees::new(b).unwrap()
    }

    #[test]
    fn p1_example() {
        let a = dm(1, 0, vec![vec![2, 4, 2]]);
        let out = transport_case_p1(&a, &tg(vec![2, 2, 2])).unwrap();
        assert_eq!(out.rows(), &[vec![2, 2, 2]]);
        assert_eq!(a.changed_columns(&out), vec![1]);
        let general = transport_general(&a, &tg(vec![2, 2, 2])).unwrap();
        assert_eq!(general.matrix, out);
    }

    #[test]
    fn m1_worked_example() {
        let a = dm(0, 1, vec![vec![1, 1], vec![1, 1]]);
        let out = transport_case_m1(&a, &tg(vec![2, 4])).unwrap();
        assert_eq!(out.rows(), &[vec![1, 2], vec![1, 2]]);
        assert!(out.check_membership().is_ok());
    }

    #[test]
    fn identity_when_on_target() {
        let a = dm(1, 1, vec![vec![2, 0, 2], vec![1, 2, 0], vec![0, 1, 2]]);
        let beta = tg(a.column_degrees());
        assert_eq!(transport_case_m1(&a.sub(1, 2, 0, 1), &tg(vec![1, 3, 2])).unwrap(), a.sub(1, 2, 0, 1));
        let out = transport_general(&a, &beta).unwrap();
        assert_eq!(out.matrix, a);
        assert!(out.changed_columns.is_empty());
    }

    #[test]
    fn no_pivot_is_infeasible() {
        let a = dm(0, 1, vec![vec![1], vec![1]]);
        assert!(matches!(transport_case_m1(&a, &tg(vec![4])), Err(Error::Infeasible(_))));
    }

    #[test]
    fn crafted_p1_m1_n6() {
        let a = dm(1, 1, vec![vec![1, 1, 0, 2, 0, 0], vec![1, 0, 1, 0, 1, 1], vec![0, 1, 1, 1, 1, 0]]);
        let beta = tg(vec![2, 2, 2, 3, 2, 3]);
        let out = transport_general(&a, &beta).unwrap();
        assert!(out.matrix.check_membership().is_ok());
        assert_eq!(out.matrix.column_degrees(), beta.as_slice());
        assert!(out.within_bound());
    }

    #[test]
    fn random_instances() {
        let mut rng = crate::seeded_rng(7);
        for _ in 0..300 {
            let p = rng.gen_range(0..3);
            let m = rng.gen_range(0..3);
            if p + m == 0 {
                continue;
            }
            let n = rng.gen_range(8..40);
            let mut rows = vec![vec![0u64; n]; p + 2 * m];
            for row in rows.iter_mut() {
                for x in row.iter_mut() {
                    *x = rng.gen_range(0..3);
                }
            }
            for i in 0..p {
                if rows[i].iter().sum::<u64>() % 2 == 1 {
                    rows[i][0] += 1;
                }
            }
            for k in 0..m {
                let (s1, s2): (u64, u64) = (rows[p + 2 * k].iter().sum(), rows[p + 2 * k + 1].iter().sum());
                if s1 < s2 {
                    rows[p + 2 * k][0] += s2 - s1;
                } else {
                    rows[p + 2 * k + 1][0] += s1 - s2;
                }
            }
            let a = dm(p, m, rows);
            let mut beta = a.column_degrees();
            for _ in 0..rng.gen_range(0..3) {
                let j = rng.gen_range(0..n);
                beta[j] = rng.gen_range(0..6);
            }
            if beta.iter().sum::<u64>() % 2 == 1 {
                beta[n - 1] += 1;
            }
            let beta = tg(beta);
            let out = transport_general(&a, &beta).unwrap();
            assert!(out.matrix.check_membership().is_ok());
            assert_eq!(out.matrix.column_degrees(), beta.as_slice());
            assert!(out.matrix.max_entry() <= beta.max());
            assert!(out.within_bound(), "{} > {}", out.changed_columns.len(), out.bound);
        }
    }
}
