//! Smith normal form over the integers.
//!
//! Two engines share one contract. The dense engine carries the unimodular
//! transforms and always pivots on an entry of least absolute value. The
//! sparse engine only produces the diagonal: it strips unit pivots from a
//! sparse copy with checked machine arithmetic and hands whatever core is
//! left to the dense engine.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntegerMatrix;

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, its diagonal
/// entries nonnegative and forming a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.nonzero_diagonal().len()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut engine = Dense::new(m, true, true);
    engine.run();
    let (rows, cols) = (m.rows(), m.cols());
    SmithForm {
        d: engine.matrix(),
        u: to_matrix(rows, rows, engine.u.expect("tracked")),
        v: to_matrix(cols, cols, engine.v.expect("tracked")),
    }
}

/// Nonzero diagonal of the Smith form plus the right transform `V`.
pub(crate) fn smith_with_right_transform(m: &IntegerMatrix) -> (Vec<BigInt>, IntegerMatrix) {
    let mut engine = Dense::new(m, false, true);
    engine.run();
    let diag = engine.nonzero_diagonal();
    (
        diag,
        to_matrix(m.cols(), m.cols(), engine.v.expect("tracked")),
    )
}

/// Nonzero diagonal of the Smith form, no transforms.
pub fn smith_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    match Sparse::from_matrix(m) {
        Some(sparse) => sparse.diagonal(),
        None => dense_diagonal(m),
    }
}

/// Nonzero Smith diagonal of a matrix given as sparse rows of
/// `(column, entry)` pairs. Duplicate columns within a row are summed.
pub fn smith_diagonal_sparse(cols: usize, rows: &[Vec<(usize, i64)>]) -> Vec<BigInt> {
    let mut sparse = Sparse {
        rows: Vec::with_capacity(rows.len()),
        col_rows: vec![BTreeSet::new(); cols],
        cols,
    };
    for (i, input) in rows.iter().enumerate() {
        let mut row: BTreeMap<usize, i64> = BTreeMap::new();
        for &(j, x) in input {
            assert!(j < cols, "column {j} out of range");
            *row.entry(j).or_insert(0) += x;
        }
        row.retain(|_, x| *x != 0);
        for &j in row.keys() {
            sparse.col_rows[j].insert(i);
        }
        sparse.rows.push(row);
    }
    sparse.diagonal()
}

fn dense_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut engine = Dense::new(m, false, false);
    engine.run();
    engine.nonzero_diagonal()
}

fn to_matrix(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> IntegerMatrix {
    IntegerMatrix::from_entries(rows, cols, data.into_iter().flatten().collect())
        .expect("shape is consistent")
}

struct Dense {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

impl Dense {
    fn new(m: &IntegerMatrix, track_u: bool, track_v: bool) -> Self {
        Dense {
            a: (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
            rows: m.rows(),
            cols: m.cols(),
            u: track_u.then(|| identity_rows(m.rows())),
            v: track_v.then(|| identity_rows(m.cols())),
        }
    }

    fn from_rows(a: Vec<Vec<BigInt>>, cols: usize) -> Self {
        Dense {
            rows: a.len(),
            cols,
            a,
            u: None,
            v: None,
        }
    }

    fn matrix(&self) -> IntegerMatrix {
        to_matrix(self.rows, self.cols, self.a.clone())
    }

    fn nonzero_diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.a[i][i].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in v {
                    row.swap(i, j);
                }
            }
        }
    }

    /// `row[target] += k · row[src]`
    fn add_row_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], target: usize, src: usize, k: &BigInt) {
            let (t, s) = if target < src {
                let (lo, hi) = m.split_at_mut(src);
                (&mut lo[target], &hi[0])
            } else {
                let (lo, hi) = m.split_at_mut(target);
                (&mut hi[0], &lo[src])
            };
            for (x, y) in t.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x += k * y;
                }
            }
        }
        apply(&mut self.a, target, src, k);
        if let Some(u) = &mut self.u {
            apply(u, target, src, k);
        }
    }

    /// `col[target] += k · col[src]`
    fn add_col_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], target: usize, src: usize, k: &BigInt) {
            for row in m {
                if !row[src].is_zero() {
                    let delta = k * &row[src];
                    row[target] += delta;
                }
            }
        }
        apply(&mut self.a, target, src, k);
        if let Some(v) = &mut self.v {
            apply(v, target, src, k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn min_abs_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let abs = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                    let unit = abs.is_one();
                    best = Some((i, j, abs));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        for t in 0..self.rows.min(self.cols) {
            let Some((i, j)) = self.min_abs_in_block(t) else {
                break;
            };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_row_multiple(i, t, &-q);
                    }
                    dirty |= !self.a[i][t].is_zero();
                }
                if dirty {
                    let i = (t..self.rows)
                        .filter(|&i| !self.a[i][t].is_zero())
                        .min_by_key(|&i| self.a[i][t].abs())
                        .expect("column has a nonzero entry");
                    self.swap_rows(t, i);
                    continue;
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    if !q.is_zero() {
                        self.add_col_multiple(j, t, &-q);
                    }
                    dirty |= !self.a[t][j].is_zero();
                }
                if dirty {
                    let j = (t..self.cols)
                        .filter(|&j| !self.a[t][j].is_zero())
                        .min_by_key(|&j| self.a[t][j].abs())
                        .expect("row has a nonzero entry");
                    self.swap_cols(t, j);
                    continue;
                }
                let pivot = self.a[t][t].clone();
                let offender = (t + 1..self.rows).find(|&i| {
                    self.a[i][t + 1..]
                        .iter()
                        .any(|x| !x.is_zero() && !(x % &pivot).is_zero())
                });
                match offender {
                    Some(i) => self.add_row_multiple(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Sparse rows with machine integers; `None` entries never stored.
struct Sparse {
    rows: Vec<BTreeMap<usize, i64>>,
    col_rows: Vec<BTreeSet<usize>>,
    cols: usize,
}

impl Sparse {
    fn from_matrix(m: &IntegerMatrix) -> Option<Self> {
        let mut rows = Vec::with_capacity(m.rows());
        let mut col_rows = vec![BTreeSet::new(); m.cols()];
        for i in 0..m.rows() {
            let mut row = BTreeMap::new();
            for (j, x) in m.row(i).iter().enumerate() {
                if !x.is_zero() {
                    row.insert(j, x.to_i64()?);
                    col_rows[j].insert(i);
                }
            }
            rows.push(row);
        }
        Some(Sparse {
            rows,
            col_rows,
            cols: m.cols(),
        })
    }

    fn find_unit_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() || best.is_some_and(|(len, _, _, _)| row.len() >= len) {
                continue;
            }
            let pick = row
                .iter()
                .filter(|(_, &x)| x == 1 || x == -1)
                .map(|(&j, _)| (self.col_rows[j].len(), j))
                .min();
            if let Some((count, j)) = pick {
                best = Some((row.len(), count, i, j));
            }
        }
        best.map(|(_, _, i, j)| (i, j))
    }

    /// Eliminates column `pc` with the unit at row `pr`, then drops both.
    /// Returns `false` (state untouched) on machine-integer overflow.
    fn eliminate(&mut self, pr: usize, pc: usize) -> bool {
        let pivot = self.rows[pr][&pc];
        let pivot_row: Vec<(usize, i64)> = self.rows[pr].iter().map(|(&j, &x)| (j, x)).collect();
        let targets: Vec<usize> = self.col_rows[pc]
            .iter()
            .copied()
            .filter(|&r| r != pr)
            .collect();
        let mut updated = Vec::with_capacity(targets.len());
        for &r in &targets {
            let factor = self.rows[r][&pc] * pivot;
            let mut row = self.rows[r].clone();
            for &(j, x) in &pivot_row {
                let Some(delta) = factor.checked_mul(x) else {
                    return false;
                };
                let entry = row.entry(j).or_insert(0);
                let Some(v) = entry.checked_sub(delta) else {
                    return false;
                };
                *entry = v;
            }
            updated.push((r, row));
        }
        for (r, row) in updated {
            for &(j, _) in &pivot_row {
                if row.get(&j).is_some_and(|&x| x == 0) {
                    self.col_rows[j].remove(&r);
                } else {
                    self.col_rows[j].insert(r);
                }
            }
            self.rows[r] = row.into_iter().filter(|&(_, x)| x != 0).collect();
        }
        for &(j, _) in &pivot_row {
            self.col_rows[j].remove(&pr);
        }
        self.rows[pr].clear();
        true
    }

    fn diagonal(mut self) -> Vec<BigInt> {
        let mut units = 0usize;
        while let Some((pr, pc)) = self.find_unit_pivot() {
            if !self.eliminate(pr, pc) {
                break;
            }
            units += 1;
        }
        let live_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| !self.col_rows[j].is_empty())
            .collect();
        let core: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .filter(|row| !row.is_empty())
            .map(|row| {
                live_cols
                    .iter()
                    .map(|j| BigInt::from(row.get(j).copied().unwrap_or(0)))
                    .collect()
            })
            .collect();
        let mut diag = vec![BigInt::one(); units];
        if !core.is_empty() {
            let mut dense = Dense::from_rows(core, live_cols.len());
            dense.run();
            diag.extend(dense.nonzero_diagonal());
        }
        diag
    }
}
