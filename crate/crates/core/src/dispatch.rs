//! AGV-to-destination assignment.
//!
//! [`solve_assignment`] runs the shortest-augmenting-path (Jonker-Volgenant
//! style) form of the Hungarian method in O(n³), then canonicalizes the
//! result: among all optimal assignments it returns the lexicographically
//! smallest mapping (lowest row first, each row taking the lowest column it
//! can). [`brute_force_assignment`] enumerates permutations in lexicographic
//! order and keeps the first strict minimum, so both routes agree whenever
//! the optimum is unique and on exact ties such as integer matrices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DispatchError;

/// Largest square matrix the brute-force oracle will enumerate.
pub const ORACLE_MAX_N: usize = 10;

/// Dense, non-negative, finite cost matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, DispatchError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        if n_rows == 0 || n_cols == 0 {
            return Err(DispatchError::Empty);
        }
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(DispatchError::Ragged {
                    row: i,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_flat(n_rows, n_cols, data)
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, DispatchError> {
        if rows == 0 || cols == 0 {
            return Err(DispatchError::Empty);
        }
        assert_eq!(data.len(), rows * cols, "flat data does not match shape");
        for (k, &x) in data.iter().enumerate() {
            let (row, col) = (k / cols, k % cols);
            if !x.is_finite() {
                return Err(DispatchError::NonFinite { row, col });
            }
            if x < 0.0 {
                return Err(DispatchError::Negative { row, col });
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Parses a comma-separated numeric grid, one matrix row per line.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn from_csv_str(text: &str) -> Result<Self, DispatchError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| DispatchError::Grid {
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            let row = record
                .iter()
                .map(|cell| {
                    cell.parse::<f64>().map_err(|_| DispatchError::Grid {
                        line,
                        message: format!("`{cell}` is not a number"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_entry(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }
}

impl Serialize for CostMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CostMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(deserializer)?;
        Self::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `mapping[i]` is the column given to row `i`, or `None` when the row was
/// paired with padding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    pub mapping: Vec<Option<usize>>,
    pub total_cost: f64,
}

impl Assignment {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mapping
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (i, c)))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.mapping.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            match c {
                Some(c) => write!(f, "{i}\u{2192}{c}")?,
                None => write!(f, "{i}\u{2192}unassigned")?,
            }
        }
        write!(f, "; total {}", self.total_cost)
    }
}

/// Sum of the selected entries, in row order.
pub fn assignment_cost(
    matrix: &CostMatrix,
    mapping: &[Option<usize>],
) -> Result<f64, DispatchError> {
    if mapping.len() > matrix.rows() {
        return Err(DispatchError::MappingTooLong {
            rows: matrix.rows(),
            found: mapping.len(),
        });
    }
    let mut owner: Vec<Option<usize>> = vec![None; matrix.cols()];
    let mut total = 0.0;
    for (row, col) in mapping.iter().enumerate() {
        let Some(col) = *col else { continue };
        if col >= matrix.cols() {
            return Err(DispatchError::ColumnOutOfRange {
                row,
                col,
                cols: matrix.cols(),
            });
        }
        if let Some(first) = owner[col] {
            return Err(DispatchError::DuplicateColumn {
                col,
                first,
                second: row,
            });
        }
        owner[col] = Some(row);
        total += matrix.get(row, col);
    }
    Ok(total)
}

/// Minimum-cost assignment. Rectangular inputs are padded to square with a
/// sentinel of `(max entry + 1) * max(rows, cols)`; rows matched to padding
/// come back as `None`.
pub fn solve_assignment(matrix: &CostMatrix) -> Assignment {
    let square = Square::padded(matrix);
    let (raw, duals) = square.shortest_augmenting_paths();
    let canonical = square.lexicographic_optimum(raw.clone(), &duals);

    let to_assignment = |row_to_col: &[usize]| {
        let mapping: Vec<Option<usize>> = (0..matrix.rows())
            .map(|i| Some(row_to_col[i]).filter(|&c| c < matrix.cols()))
            .collect();
        let total_cost =
            assignment_cost(matrix, &mapping).expect("solver output is a valid injection");
        Assignment {
            mapping,
            total_cost,
        }
    };

    let canonical = to_assignment(&canonical);
    let raw = to_assignment(&raw);
    // A near-tie misread as tight could in principle cost optimality.
    if canonical.total_cost <= raw.total_cost {
        canonical
    } else {
        raw
    }
}

/// Exhaustive search over all n! permutations, for verification.
pub fn brute_force_assignment(matrix: &CostMatrix) -> Result<Assignment, DispatchError> {
    if !matrix.is_square() {
        return Err(DispatchError::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    let n = matrix.rows();
    if n > ORACLE_MAX_N {
        return Err(DispatchError::OracleSizeLimit(n));
    }

    struct Search<'a> {
        matrix: &'a CostMatrix,
        used: Vec<bool>,
        current: Vec<usize>,
        best: Option<(f64, Vec<usize>)>,
    }

    impl Search<'_> {
        fn descend(&mut self, row: usize, partial: f64) {
            let n = self.matrix.rows();
            if row == n {
                if self.best.as_ref().is_none_or(|(b, _)| partial < *b) {
                    self.best = Some((partial, self.current.clone()));
                }
                return;
            }
            for col in 0..n {
                if !self.used[col] {
                    self.used[col] = true;
                    self.current.push(col);
                    self.descend(row + 1, partial + self.matrix.get(row, col));
                    self.current.pop();
                    self.used[col] = false;
                }
            }
        }
    }

    let mut search = Search {
        matrix,
        used: vec![false; n],
        current: Vec::with_capacity(n),
        best: None,
    };
    search.descend(0, 0.0);
    let (total_cost, cols) = search.best.expect("n >= 1 has at least one permutation");
    Ok(Assignment {
        mapping: cols.into_iter().map(Some).collect(),
        total_cost,
    })
}

struct Square {
    n: usize,
    data: Vec<f64>,
}

struct Duals {
    row: Vec<f64>,
    col: Vec<f64>,
}

impl Square {
    fn padded(matrix: &CostMatrix) -> Self {
        let n = matrix.rows().max(matrix.cols());
        if matrix.is_square() {
            return Self {
                n,
                data: matrix.data.clone(),
            };
        }
        let sentinel = (matrix.max_entry() + 1.0) * n as f64;
        let mut data = vec![sentinel; n * n];
        for i in 0..matrix.rows() {
            data[i * n..i * n + matrix.cols()].copy_from_slice(matrix.row(i));
        }
        Self { n, data }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Row-by-row shortest augmenting paths with dual potentials. Returns the
    /// row-to-column matching and the optimal duals.
    fn shortest_augmenting_paths(&self) -> (Vec<usize>, Duals) {
        let n = self.n;
        // Index 0 is a virtual column used as the root of each search.
        let mut u = vec![0.0; n + 1];
        let mut v = vec![0.0; n + 1];
        let mut row_of = vec![0usize; n + 1];
        let mut way = vec![0usize; n + 1];
        let mut min_slack = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];

        for i in 1..=n {
            row_of[0] = i;
            let mut j0 = 0;
            min_slack.fill(f64::INFINITY);
            used.fill(false);
            loop {
                used[j0] = true;
                let i0 = row_of[j0];
                let mut delta = f64::INFINITY;
                let mut j1 = 0;
                for j in 1..=n {
                    if used[j] {
                        continue;
                    }
                    let slack = self.get(i0 - 1, j - 1) - u[i0] - v[j];
                    if slack < min_slack[j] {
                        min_slack[j] = slack;
                        way[j] = j0;
                    }
                    if min_slack[j] < delta {
                        delta = min_slack[j];
                        j1 = j;
                    }
                }
                for j in 0..=n {
                    if used[j] {
                        u[row_of[j]] += delta;
                        v[j] -= delta;
                    } else {
                        min_slack[j] -= delta;
                    }
                }
                j0 = j1;
                if row_of[j0] == 0 {
                    break;
                }
            }
            loop {
                let j1 = way[j0];
                row_of[j0] = row_of[j1];
                j0 = j1;
                if j0 == 0 {
                    break;
                }
            }
        }

        let mut row_to_col = vec![0; n];
        for j in 1..=n {
            row_to_col[row_of[j] - 1] = j - 1;
        }
        let duals = Duals {
            row: u[1..].to_vec(),
            col: v[1..].to_vec(),
        };
        (row_to_col, duals)
    }

    /// Rewrites an optimal matching into the lexicographically smallest one.
    ///
    /// Every optimal matching uses only edges with zero reduced cost under
    /// the optimal duals, and every perfect matching on those edges is
    /// optimal. Row by row, the smallest admissible column is the smallest
    /// tight column whose owner can shift along an alternating path of
    /// tight edges (through later rows only) into the column being vacated.
    fn lexicographic_optimum(&self, mut col_of: Vec<usize>, duals: &Duals) -> Vec<usize> {
        let n = self.n;
        let scale = self.data.iter().copied().fold(1.0, f64::max);
        let eps = 64.0 * f64::EPSILON * scale * n as f64;
        let tight = |i: usize, j: usize| self.get(i, j) - duals.row[i] - duals.col[j] <= eps;

        let mut row_of = vec![0; n];
        for (i, &c) in col_of.iter().enumerate() {
            row_of[c] = i;
        }

        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for i in 0..n {
            let vacated = col_of[i];
            if vacated == 0 {
                continue;
            }
            parent.fill(usize::MAX);
            queue.clear();
            queue.push_back(vacated);
            while let Some(c) = queue.pop_front() {
                for r in i + 1..n {
                    if parent[r] == usize::MAX && tight(r, c) {
                        parent[r] = c;
                        queue.push_back(col_of[r]);
                    }
                }
            }

            let better = (0..vacated).find(|&j| {
                let owner = row_of[j];
                owner > i && parent[owner] != usize::MAX && tight(i, j)
            });
            let Some(j) = better else { continue };

            let mut moves = Vec::new();
            let mut r = row_of[j];
            loop {
                let target = parent[r];
                moves.push((r, target));
                if target == vacated {
                    break;
                }
                r = row_of[target];
            }
            for (r, c) in moves {
                col_of[r] = c;
                row_of[c] = r;
            }
            col_of[i] = j;
            row_of[j] = i;
        }
        col_of
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn yangshan_agv() -> CostMatrix {
        CostMatrix::from_rows(&[
            [420.0, 350.0, 450.0],
            [450.0, 400.0, 280.0],
            [420.0, 360.0, 390.0],
        ])
        .unwrap()
    }

    fn some(cols: &[usize]) -> Vec<Option<usize>> {
        cols.iter().copied().map(Some).collect()
    }

    /// Every permutation of 0..n in lexicographic order, with its row-order cost.
    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for c in 0..n {
                if !cur.contains(&c) {
                    cur.push(c);
                    go(n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn yangshan_agv_permutation_costs() {
        // 3! enumeration, written out.
        let m = yangshan_agv();
        let costs: Vec<f64> = all_permutations(3)
            .iter()
            .map(|p| assignment_cost(&m, &some(p)).unwrap())
            .collect();
        assert_eq!(costs, vec![1210.0, 1060.0, 1190.0, 1050.0, 1260.0, 1270.0]);
    }

    #[test]
    fn yangshan_agv_solves_to_1050() {
        let a = solve_assignment(&yangshan_agv());
        assert_eq!(a.mapping, some(&[1, 2, 0]));
        assert_eq!(a.total_cost, 1050.0);
        assert_eq!(
            a.to_string(),
            "0\u{2192}1, 1\u{2192}2, 2\u{2192}0; total 1050"
        );
    }

    #[test]
    fn zero_matrix_gives_identity() {
        for n in 1..=6 {
            let m = CostMatrix::from_flat(n, n, vec![0.0; n * n]).unwrap();
            let a = solve_assignment(&m);
            assert_eq!(a.mapping, some(&(0..n).collect::<Vec<_>>()));
            assert_eq!(a.total_cost, 0.0);
        }
    }

    #[test]
    fn node_distance_matrix_gives_identity() {
        let m = CostMatrix::from_rows(&[[0.0, 35.0, 40.0], [35.0, 0.0, 20.0], [40.0, 20.0, 0.0]])
            .unwrap();
        let a = solve_assignment(&m);
        assert_eq!(a.mapping, some(&[0, 1, 2]));
        assert_eq!(a.total_cost, 0.0);
    }

    #[test]
    fn constant_rows_tie_break_is_lexicographic() {
        let m =
            CostMatrix::from_rows(&[[5.0, 5.0, 1.0], [5.0, 5.0, 5.0], [1.0, 5.0, 5.0]]).unwrap();
        let a = solve_assignment(&m);
        assert_eq!(a, brute_force_assignment(&m).unwrap());
        assert_eq!(a.mapping, some(&[2, 1, 0]));
    }

    #[test]
    fn wide_matrix_leaves_columns_free() {
        let m = CostMatrix::from_rows(&[[9.0, 1.0, 5.0, 7.0], [1.0, 8.0, 5.0, 7.0]]).unwrap();
        let a = solve_assignment(&m);
        assert_eq!(a.mapping, some(&[1, 0]));
        assert_eq!(a.total_cost, 2.0);
    }

    #[test]
    fn tall_matrix_reports_unassigned_rows() {
        let m = CostMatrix::from_rows(&[[4.0, 9.0], [1.0, 9.0], [9.0, 2.0]]).unwrap();
        let a = solve_assignment(&m);
        assert_eq!(a.mapping, vec![None, Some(0), Some(1)]);
        assert_eq!(a.total_cost, 3.0);
        assert!(a.to_string().starts_with("0\u{2192}unassigned"));
    }

    #[test]
    fn single_cell() {
        let m = CostMatrix::from_rows(&[[7.5]]).unwrap();
        assert_eq!(solve_assignment(&m).total_cost, 7.5);
        assert_eq!(brute_force_assignment(&m).unwrap().total_cost, 7.5);
    }

    #[test]
    fn oracle_yangshan_agv() {
        let a = brute_force_assignment(&yangshan_agv()).unwrap();
        assert_eq!(a.total_cost, 1050.0);
        assert_eq!(a.mapping, some(&[1, 2, 0]));
    }

    #[test]
    fn oracle_finds_forced_diagonal() {
        // Zero diagonal, off-diagonal costs increasing with distance.
        let n: usize = 6;
        let data = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                if i == j {
                    0.0
                } else {
                    (1 + i.abs_diff(j)) as f64 * 10.0
                }
            })
            .collect();
        let m = CostMatrix::from_flat(n, n, data).unwrap();
        let a = brute_force_assignment(&m).unwrap();
        assert_eq!(a.mapping, some(&(0..n).collect::<Vec<_>>()));
        assert_eq!(a.total_cost, 0.0);
    }

    #[test]
    fn oracle_rejects_bad_shapes() {
        let m = CostMatrix::from_flat(11, 11, vec![1.0; 121]).unwrap();
        assert_eq!(
            brute_force_assignment(&m),
            Err(DispatchError::OracleSizeLimit(11))
        );
        let m = CostMatrix::from_rows(&[[1.0, 2.0]]).unwrap();
        assert!(matches!(
            brute_force_assignment(&m),
            Err(DispatchError::NotSquare { .. })
        ));
    }

    #[test]
    fn assignment_cost_examples_and_errors() {
        let m = yangshan_agv();
        assert_eq!(assignment_cost(&m, &some(&[1, 2, 0])).unwrap(), 1050.0);
        assert_eq!(assignment_cost(&m, &some(&[0, 1, 2])).unwrap(), 1210.0);
        assert_eq!(assignment_cost(&m, &[]).unwrap(), 0.0);
        assert_eq!(assignment_cost(&m, &[None, Some(2)]).unwrap(), 280.0);
        assert!(matches!(
            assignment_cost(&m, &some(&[1, 1])),
            Err(DispatchError::DuplicateColumn {
                col: 1,
                first: 0,
                second: 1
            })
        ));
        assert!(matches!(
            assignment_cost(&m, &some(&[3])),
            Err(DispatchError::ColumnOutOfRange { .. })
        ));
        assert!(matches!(
            assignment_cost(&m, &some(&[0, 1, 2, 0])),
            Err(DispatchError::MappingTooLong { .. })
        ));
    }

    #[test]
    fn matrix_construction_errors() {
        assert_eq!(
            CostMatrix::from_rows::<Vec<f64>>(&[]),
            Err(DispatchError::Empty)
        );
        assert_eq!(
            CostMatrix::from_rows(&[Vec::<f64>::new()]),
            Err(DispatchError::Empty)
        );
        assert!(matches!(
            CostMatrix::from_rows(&[vec![1.0, f64::NAN]]),
            Err(DispatchError::NonFinite { row: 0, col: 1 })
        ));
        assert!(matches!(
            CostMatrix::from_rows(&[vec![f64::INFINITY]]),
            Err(DispatchError::NonFinite { .. })
        ));
        assert!(matches!(
            CostMatrix::from_rows(&[vec![1.0], vec![-1.0]]),
            Err(DispatchError::Negative { row: 1, col: 0 })
        ));
    }

    #[test]
    fn csv_grid_parsing() {
        let m = CostMatrix::from_csv_str(
            "# yard distances\n420,350,450\n450, 400 ,280\n\n420,360,390\n",
        )
        .unwrap();
        assert_eq!(m, yangshan_agv());
        assert!(matches!(
            CostMatrix::from_csv_str("1,2\n3,x\n"),
            Err(DispatchError::Grid { line: 2, .. })
        ));
        assert!(matches!(
            CostMatrix::from_csv_str("1,2\n3\n"),
            Err(DispatchError::Ragged { row: 1, .. })
        ));
        assert_eq!(CostMatrix::from_csv_str(""), Err(DispatchError::Empty));
    }

    fn square_matrix(max_n: usize, max_cost: u32) -> impl Strategy<Value = CostMatrix> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(0..=max_cost, n * n).prop_map(move |v| {
                CostMatrix::from_flat(n, n, v.into_iter().map(f64::from).collect()).unwrap()
            })
        })
    }

    fn optimal_set(m: &CostMatrix) -> (f64, Vec<Vec<usize>>) {
        let perms = all_permutations(m.rows());
        let costs: Vec<f64> = perms
            .iter()
            .map(|p| assignment_cost(m, &some(p)).unwrap())
            .collect();
        let best = costs.iter().copied().fold(f64::INFINITY, f64::min);
        let set = perms
            .into_iter()
            .zip(costs)
            .filter(|(_, c)| *c == best)
            .map(|(p, _)| p)
            .collect();
        (best, set)
    }

    proptest! {
        // Small integer costs force many ties, which exercises the
        // canonicalization path much harder than continuous entries.
        #[test]
        fn matches_oracle_with_ties(m in square_matrix(6, 4)) {
            let a = solve_assignment(&m);
            let o = brute_force_assignment(&m).unwrap();
            prop_assert_eq!(a, o);
        }

        #[test]
        fn output_is_a_permutation(m in square_matrix(7, 1000)) {
            let a = solve_assignment(&m);
            let mut seen = vec![false; m.cols()];
            for c in a.mapping.iter() {
                let c = c.expect("square input leaves no row unassigned");
                prop_assert!(!seen[c]);
                seen[c] = true;
            }
            prop_assert_eq!(a.total_cost, assignment_cost(&m, &a.mapping).unwrap());
        }

        #[test]
        fn rectangular_matches_padded_oracle(
            (r, c) in (1usize..=5, 1usize..=5),
            seed in proptest::collection::vec(0u32..20, 25)
        ) {
            let data: Vec<f64> = seed[..r * c].iter().map(|&x| f64::from(x)).collect();
            let m = CostMatrix::from_flat(r, c, data).unwrap();
            let a = solve_assignment(&m);
            prop_assert_eq!(a.pairs().count(), r.min(c));
            // Best over all injections of the smaller side.
            let n = r.max(c);
            let best = all_permutations(n)
                .iter()
                .map(|p| {
                    p.iter()
                        .enumerate()
                        .filter(|&(i, &j)| i < r && j < c)
                        .map(|(i, &j)| m.get(i, j))
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min);
            prop_assert_eq!(a.total_cost, best);
        }

        #[test]
        fn row_and_column_shifts_preserve_optimal_set(
            m in square_matrix(5, 50), k in 0.0..100.0f64, line in 0usize..10
        ) {
            let n = m.rows();
            let (best, set) = optimal_set(&m);
            let mut rows = m.to_rows();
            let (is_row, idx) = (line % 2 == 0, (line / 2) % n);
            for (i, row) in rows.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    if (is_row && i == idx) || (!is_row && j == idx) {
                        *x += k;
                    }
                }
            }
            let shifted = CostMatrix::from_rows(&rows).unwrap();
            let (shifted_best, _) = optimal_set(&shifted);
            prop_assert!((shifted_best - (best + k)).abs() <= 1e-9 * shifted_best.max(1.0));
            // Same optimal mappings, up to rounding in the shifted sums.
            let shifted_set: Vec<Vec<usize>> = all_permutations(n)
                .into_iter()
                .filter(|p| {
                    let c = assignment_cost(&shifted, &some(p)).unwrap();
                    (c - shifted_best).abs() <= 1e-9 * shifted_best.max(1.0)
                })
                .collect();
            prop_assert_eq!(&shifted_set, &set);
            let solved = solve_assignment(&shifted);
            prop_assert!((solved.total_cost - (best + k)).abs() <= 1e-9 * solved.total_cost.max(1.0));
            prop_assert!(set.contains(&solved.mapping.iter().map(|c| c.unwrap()).collect()));
        }
    }
}
