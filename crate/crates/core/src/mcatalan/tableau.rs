use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::{MDyckPath, McatError};
use crate::arrangement::{
    feasible, ArrangementKind, ArrangementSpec, DifferenceConstraint, Region,
};
use crate::dyck::{dyck_tuple, is_permutation, tuple_feasible, DyckPath, DyckTuple};
use crate::exactnum::Rational;

/// Young tableau inside an `(n - 1) x m` grid with entries in `2..=n`.
/// Rows and columns are 0-based here; entry values are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    n: usize,
    m: usize,
    cells: Vec<Option<usize>>,
}

impl YoungTableau {
    pub fn empty(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            cells: vec![None; n.saturating_sub(1) * m],
        }
    }

    /// Builds a tableau from rows of entries, checking shape and order.
    pub fn from_rows(n: usize, m: usize, rows: &[Vec<usize>]) -> Result<Self, McatError> {
        let mut t = Self::empty(n, m);
        if rows.len() > t.rows() {
            return Err(McatError::Malformed("too many rows".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() > m {
                return Err(McatError::Malformed("row longer than m".into()));
            }
            for (c, &v) in row.iter().enumerate() {
                t.cells[r * m + c] = Some(v);
            }
        }
        if !t.is_valid() {
            return Err(McatError::Malformed(
                "not a Young tableau with entries in 2..=n".into(),
            ));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.n.saturating_sub(1)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if row < self.rows() && col < self.m {
            self.cells[row * self.m + col]
        } else {
            None
        }
    }

    fn set(&mut self, row: usize, col: usize, v: Option<usize>) {
        self.cells[row * self.m + col] = v;
    }

    /// Row-major grid with `None` for empty cells.
    pub fn grid(&self) -> Vec<Vec<Option<usize>>> {
        self.cells
            .chunks(self.m.max(1))
            .map(|c| c.to_vec())
            .take(self.rows())
            .collect()
    }

    /// Filled entries of a column, top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..self.rows()).map_while(|r| self.get(r, col)).collect()
    }

    /// All entries, sorted.
    pub fn entries(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.cells.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    /// Empty cells whose upper and left neighbours are filled or outside
    /// the grid, top to bottom.
    pub fn outer_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows() {
            for c in 0..self.m {
                if self.get(r, c).is_none()
                    && (r == 0 || self.get(r - 1, c).is_some())
                    && (c == 0 || self.get(r, c - 1).is_some())
                {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Filled cells form a top-left justified diagram, rows and columns
    /// weakly increase, and entries lie in `2..=n`.
    pub fn is_valid(&self) -> bool {
        for r in 0..self.rows() {
            for c in 0..self.m {
                let Some(v) = self.get(r, c) else { continue };
                if v < 2 || v > self.n {
                    return false;
                }
                if r > 0 && self.get(r - 1, c).is_none_or(|u| u > v) {
                    return false;
                }
                if c > 0 && self.get(r, c - 1).is_none_or(|u| u > v) {
                    return false;
                }
            }
        }
        true
    }

    /// Row `k - 1` holds `h_{k,1..n}`: entries `<= j` in column `m - k`
    /// (0-based), so the last column feeds `D_1`.
    pub fn height_matrix(&self) -> Vec<Vec<usize>> {
        (1..=self.m)
            .map(|k| {
                let col = self.column(self.m - k);
                (1..=self.n)
                    .map(|j| col.iter().filter(|&&v| v <= j).count())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.m)
                .map(|c| {
                    self.get(r, c)
                        .map_or_else(|| ".".into(), |v| alloc::format!("{v}"))
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Corner picked by the scan rule: start at the first corner and
/// move to corner `p` unless `T(i, j - j_p) = i_p` (1-based indices).
fn scan_rule(t: &YoungTableau, corners: &[(usize, usize)]) -> usize {
    let mut pick = 0;
    for p in 1..corners.len() {
        let (i, j) = (corners[pick].0 + 1, corners[pick].1 + 1);
        let (ip, jp) = (corners[p].0 + 1, corners[p].1 + 1);
        let held = j
            .checked_sub(jp)
            .filter(|&c| c >= 1)
            .and_then(|c| t.get(i - 1, c - 1));
        if held != Some(ip) {
            pick = p;
        }
    }
    pick
}

/// Constraints on `y_0 > ... > y_{n-1}` forced by the filled cells, plus
/// upper bounds on rows whose cell in a column is still empty given that
/// every later entry is at least `next` (`n + 1` once done). `None` if a
/// filled cell already breaks the Dyck condition.
fn partial_constraints(t: &YoungTableau, next: usize) -> Option<Vec<DifferenceConstraint>> {
    let n = t.n;
    let mut cs = Vec::new();
    for r in 1..n {
        cs.push(DifferenceConstraint::greater_than(
            r - 1,
            r,
            Rational::zero(),
        ));
    }
    for r in 0..t.rows() {
        for c in 0..t.m {
            // column c carries offset a_{m-c} = c + 1
            let a = Rational::from_integer((c as i64 + 1).into());
            match t.get(r, c) {
                Some(w) => {
                    if w < r + 2 {
                        return None;
                    }
                    cs.push(DifferenceConstraint::greater_than(r, w - 1, a.clone()));
                    if w - 2 > r {
                        cs.push(DifferenceConstraint::less_than(r, w - 2, a));
                    }
                }
                None => {
                    if next >= 2 && next - 2 > r && next - 2 < n {
                        cs.push(DifferenceConstraint::less_than(r, next - 2, a));
                    }
                }
            }
        }
    }
    Some(cs)
}

fn consistent(t: &YoungTableau, next: usize) -> bool {
    partial_constraints(t, next).is_some_and(|cs| feasible(&cs, t.n).is_ok())
}

/// Inserts the multiset of `path` in nondecreasing order. Each value goes
/// to the corner chosen by the scan rule when that keeps the tableau
/// region-feasible; otherwise the other corners are tried top to bottom.
pub fn tableau_insert(path: &MDyckPath) -> Result<YoungTableau, McatError> {
    let multiset = path.multiset();
    let mut t = YoungTableau::empty(path.n(), path.m());
    if place(&mut t, &multiset, 0) {
        Ok(t)
    } else {
        Err(McatError::NoFeasibleTableau(path.heights().to_vec()))
    }
}

fn place(t: &mut YoungTableau, multiset: &[usize], idx: usize) -> bool {
    if idx == multiset.len() {
        return true;
    }
    let v = multiset[idx];
    let next = multiset.get(idx + 1).copied().unwrap_or(t.n + 1);
    let corners = t.outer_corners();
    if corners.is_empty() {
        return false;
    }
    let first = scan_rule(t, &corners);
    let order = core::iter::once(first).chain((0..corners.len()).filter(|&p| p != first));
    for p in order {
        let (r, c) = corners[p];
        t.set(r, c, Some(v));
        if consistent(t, next) && place(t, multiset, idx + 1) {
            return true;
        }
        t.set(r, c, None);
    }
    false
}

/// The unlabeled tuple `(D_1, ..., D_m)` read from the columns, returned
/// with the identity label. Row `r` of `D_k` has plus count `n + 1 - w`
/// where `w` is the entry in row `r` of column `m - k`, or `0` if empty.
pub fn tableau_to_tuple(t: &YoungTableau) -> Result<DyckTuple, McatError> {
    if !t.is_valid() {
        return Err(McatError::Malformed(
            "not a Young tableau with entries in 2..=n".into(),
        ));
    }
    let n = t.n;
    let paths = (1..=t.m)
        .map(|k| {
            let col = t.column(t.m - k);
            let alphas = (0..n)
                .map(|r| col.get(r).map_or(0, |&w| n + 1 - w))
                .collect();
            DyckPath::new(alphas)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DyckTuple::new((0..n).collect(), paths)?)
}

/// Region of `C_{n,[m]}` assigned to `(pi, path)`.
pub fn m_dyck_to_region(path: &MDyckPath, pi: &[usize]) -> Result<Region, McatError> {
    if pi.len() != path.n() || !is_permutation(pi) {
        return Err(McatError::Malformed(
            "label is not a permutation of the right length".into(),
        ));
    }
    let t = tableau_insert(path)?;
    let mut tuple = tableau_to_tuple(&t)?;
    tuple.label = pi.to_vec();
    let spec = ArrangementSpec::integer_range(path.n(), path.m(), ArrangementKind::Catalan)
        .map_err(|e| McatError::Malformed(alloc::format!("{e}")))?;
    Ok(tuple_feasible(&spec, &tuple)?)
}

/// Inverse of [`m_dyck_to_region`]: the tableau read off the region's
/// Dyck tuple, its content as heights, and the label.
pub fn region_to_m_dyck(region: &Region) -> Result<(MDyckPath, Vec<usize>), McatError> {
    let spec = region.spec();
    let m = spec.m();
    if spec.kind() != ArrangementKind::Catalan
        || *spec
            != ArrangementSpec::integer_range(spec.n(), m, ArrangementKind::Catalan)
                .map_err(|e| McatError::Malformed(alloc::format!("{e}")))?
    {
        return Err(McatError::Malformed(
            "region is not in an m-Catalan arrangement with offsets m..1".into(),
        ));
    }
    let tuple = dyck_tuple(region);
    let n = spec.n();
    let mut t = YoungTableau::empty(n, m);
    for (k, path) in tuple.paths.iter().enumerate() {
        let col = m - 1 - k;
        for (r, &a) in path.alphas().iter().enumerate().take(t.rows()) {
            if a > 0 {
                t.set(r, col, Some(n + 1 - a));
            }
        }
    }
    if !t.is_valid() {
        return Err(McatError::Malformed(
            "region's tuple is not a tableau".into(),
        ));
    }
    let entries = t.entries();
    let heights = (1..=n)
        .map(|j| entries.iter().filter(|&&v| v <= j).count())
        .collect();
    Ok((MDyckPath::new(m, heights)?, tuple.label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::enumerate_regions;
    use crate::dyck::{all_words, parse_word};
    use crate::exactnum::rat;
    use crate::mcatalan::enumerate_m_dyck;
    use alloc::collections::BTreeSet;

    fn height_example() -> MDyckPath {
        MDyckPath::new(6, vec![0, 2, 4, 5, 6, 12]).unwrap()
    }

    fn reference_tableau() -> YoungTableau {
        YoungTableau::from_rows(
            6,
            6,
            &[
                vec![2, 2, 3, 4, 6, 6],
                vec![3, 5, 6],
                vec![6],
                vec![6],
                vec![6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn reference_height_matrix() {
        assert_eq!(
            reference_tableau().height_matrix(),
            vec![
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 1, 1],
                vec![0, 0, 1, 1, 1, 2],
                vec![0, 1, 1, 1, 2, 2],
                vec![0, 1, 2, 2, 2, 5],
            ]
        );
    }

    #[test]
    fn reference_tableau_has_no_region() {
        // T(1,6) = 6 needs y1 - y6 > 6, but T(1,4) = 4 gives y1 - y3 < 4
        // and the empty T(3,2) gives y3 - y6 < 2
        let cs = partial_constraints(&reference_tableau(), 7).unwrap();
        let cycle = feasible(&cs, 6).unwrap_err().cycle;
        let mut found: Vec<String> = cycle.iter().map(|&i| alloc::format!("{}", cs[i])).collect();
        found.sort();
        assert_eq!(found, ["x1 - x3 < 4", "x3 - x6 < 2", "x6 - x1 < -6"]);
    }

    #[test]
    fn insertion_of_height_example() {
        let t = tableau_insert(&height_example()).unwrap();
        let expected = YoungTableau::from_rows(
            6,
            6,
            &[
                vec![2, 2, 3, 4, 6],
                vec![3, 5, 6],
                vec![6, 6],
                vec![6],
                vec![6],
            ],
        )
        .unwrap();
        assert_eq!(t, expected, "\n{t}");
        // one cell away from the reference tableau: the last 6 sits at
        // T(3,2) instead of T(1,6)
        let reference = reference_tableau();
        let diff: Vec<_> = (0..5)
            .flat_map(|r| (0..6).map(move |c| (r, c)))
            .filter(|&(r, c)| t.get(r, c) != reference.get(r, c))
            .collect();
        assert_eq!(diff, [(0, 5), (2, 1)]);
    }

    #[test]
    fn scan_rule_places_first_entries() {
        // the scan rule alone places the first ten entries as in the reference
        let m = height_example().multiset();
        let mut t = YoungTableau::empty(6, 6);
        let mut placed = Vec::new();
        for &v in &m[..10] {
            let corners = t.outer_corners();
            let (r, c) = corners[scan_rule(&t, &corners)];
            t.set(r, c, Some(v));
            placed.push((r + 1, c + 1));
        }
        assert_eq!(
            placed[..8],
            [
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 1),
                (1, 4),
                (2, 2),
                (3, 1),
                (1, 5)
            ]
        );
        let cells: BTreeSet<_> = placed[8..].iter().copied().collect();
        assert_eq!(cells, [(2, 3), (4, 1)].into_iter().collect());
    }

    #[test]
    fn reference_point_region() {
        let pi = parse_word("543261").unwrap();
        let x = [
            rat(61, 10),
            rat(1253, 100),
            rat(1345, 100),
            rat(1451, 100),
            rat(166, 10),
            rat(1249, 100),
        ];
        let region = m_dyck_to_region(&height_example(), &pi).unwrap();
        assert!(!region.contains(&x));
        // the point's region comes from a different m-Dyck path
        let spec = ArrangementSpec::integer_range(6, 6, ArrangementKind::Catalan).unwrap();
        let there = crate::arrangement::region_of_point(&spec, &x).unwrap();
        let (path, label) = region_to_m_dyck(&there).unwrap();
        assert_eq!(label, pi);
        assert_eq!(path.heights(), [0, 2, 4, 5, 6, 30]);
        assert_eq!(m_dyck_to_region(&path, &label).unwrap(), there);
    }

    #[test]
    fn trivial_inputs() {
        let zero = MDyckPath::new(2, vec![0, 0, 0]).unwrap();
        let t = tableau_insert(&zero).unwrap();
        assert!(t.entries().is_empty());
        let tuple = tableau_to_tuple(&t).unwrap();
        assert!(tuple
            .paths
            .iter()
            .all(|p| p.alphas().iter().all(|&a| a == 0)));
        let region = m_dyck_to_region(&zero, &[0, 1, 2]).unwrap();
        assert!(region.in_fundamental_chamber());

        let one = MDyckPath::new(2, vec![0, 0, 1]).unwrap();
        assert_eq!(tableau_insert(&one).unwrap().grid()[0], vec![Some(3), None]);
    }

    #[test]
    fn invariants_over_small_cases() {
        for (n, m) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3)] {
            for p in enumerate_m_dyck(n, m).unwrap() {
                let t = tableau_insert(&p).unwrap();
                assert!(t.is_valid());
                assert_eq!(t.entries(), p.multiset());
                let sizes: usize = (0..m).map(|c| t.column(c).len()).sum();
                assert_eq!(sizes, p.heights()[n - 1]);
                assert!(tableau_to_tuple(&t).unwrap().is_nested());
            }
        }
    }

    /// Every tableau with the path's content, by brute force.
    fn all_feasible_tableaux(p: &MDyckPath) -> Vec<YoungTableau> {
        fn rec(t: &mut YoungTableau, ms: &[usize], i: usize, out: &mut Vec<YoungTableau>) {
            if i == ms.len() {
                if consistent(t, t.n + 1) && !out.contains(t) {
                    out.push(t.clone());
                }
                return;
            }
            for (r, c) in t.outer_corners() {
                t.set(r, c, Some(ms[i]));
                rec(t, ms, i + 1, out);
                t.set(r, c, None);
            }
        }
        let mut out = Vec::new();
        rec(
            &mut YoungTableau::empty(p.n(), p.m()),
            &p.multiset(),
            0,
            &mut out,
        );
        out
    }

    #[test]
    fn feasible_tableau_is_unique() {
        for (n, m) in [(3, 1), (4, 1), (3, 2), (4, 2), (3, 3)] {
            for p in enumerate_m_dyck(n, m).unwrap() {
                let all = all_feasible_tableaux(&p);
                assert_eq!(all.len(), 1, "{p:?}");
                assert_eq!(all[0], tableau_insert(&p).unwrap());
            }
        }
    }

    #[test]
    fn bijection_onto_regions() {
        for (n, m) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)] {
            let spec = ArrangementSpec::integer_range(n, m, ArrangementKind::Catalan).unwrap();
            let regions: BTreeSet<Region> = enumerate_regions(&spec).unwrap().into_iter().collect();
            let mut image = BTreeSet::new();
            let paths = enumerate_m_dyck(n, m).unwrap();
            for pi in all_words(&(0..n).collect::<Vec<_>>()) {
                for p in &paths {
                    let region = m_dyck_to_region(p, &pi).unwrap();
                    let t = tableau_insert(p).unwrap();
                    assert_eq!(
                        crate::dyck::level(&region).unwrap(),
                        tableau_to_tuple(&t).unwrap().paths[0].prime_components()
                    );
                    assert_eq!(region_to_m_dyck(&region).unwrap(), (p.clone(), pi.clone()));
                    assert!(image.insert(region));
                }
            }
            assert_eq!(image, regions, "n={n} m={m}");
        }
    }
}
