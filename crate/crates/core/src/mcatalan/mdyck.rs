use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::McatError;

const MAX_PATHS: usize = 5_000_000;

/// m-Dyck path stored by its height sequence `h_1 <= ... <= h_n` with
/// `0 <= h_i <= m(i - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MDyckPath {
    m: usize,
    heights: Vec<usize>,
}

impl MDyckPath {
    pub fn new(m: usize, heights: Vec<usize>) -> Result<Self, McatError> {
        if heights.is_empty() {
            return Err(McatError::Malformed("empty height sequence".into()));
        }
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(McatError::Malformed(format!(
                "heights {heights:?} are not nondecreasing"
            )));
        }
        if let Some(i) = (0..heights.len()).find(|&i| heights[i] > m * i) {
            return Err(McatError::Malformed(format!(
                "h_{} = {} exceeds {}",
                i + 1,
                heights[i],
                m * i
            )));
        }
        Ok(Self { m, heights })
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// The multiset `{2^{d_2}, ..., n^{d_n}}` in nondecreasing order, values
    /// 1-based.
    pub fn multiset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(*self.heights.last().unwrap());
        for i in 1..self.n() {
            out.extend(core::iter::repeat_n(
                i + 1,
                self.heights[i] - self.heights[i - 1],
            ));
        }
        out
    }

    /// Step string with `E` for east and `S` for south, starting at `(0, mn)`.
    pub fn steps(&self) -> alloc::string::String {
        let n = self.n();
        let mut out = alloc::string::String::new();
        let mut y = self.m * n;
        for &h in &self.heights {
            // the east step at x = i - 1/2 sits at y = mn - h
            while y > self.m * n - h {
                out.push('S');
                y -= 1;
            }
            out.push('E');
        }
        out.extend(core::iter::repeat_n('S', y));
        out
    }
}

/// All m-Dyck paths of size `n`, heights in lexicographic order.
pub fn enumerate_m_dyck(n: usize, m: usize) -> Result<Vec<MDyckPath>, McatError> {
    if n == 0 {
        return Err(McatError::Malformed("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut h = vec![0usize; n];
    fn rec(
        i: usize,
        m: usize,
        h: &mut Vec<usize>,
        out: &mut Vec<MDyckPath>,
    ) -> Result<(), McatError> {
        if i == h.len() {
            if out.len() == MAX_PATHS {
                return Err(McatError::ResourceLimit(MAX_PATHS));
            }
            out.push(MDyckPath {
                m,
                heights: h.clone(),
            });
            return Ok(());
        }
        for v in h[i - 1]..=m * i {
            h[i] = v;
            rec(i + 1, m, h, out)?;
        }
        Ok(())
    }
    rec(1, m, &mut h, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{raney, Rational};

    #[test]
    fn small_lists() {
        let p = enumerate_m_dyck(2, 2).unwrap();
        let hs: Vec<_> = p.iter().map(|p| p.heights().to_vec()).collect();
        assert_eq!(hs, vec![vec![0, 0], vec![0, 1], vec![0, 2]]);
        assert_eq!(enumerate_m_dyck(1, 3).unwrap().len(), 1);
    }

    #[test]
    fn counts_match_raney() {
        for n in 1..=5u64 {
            for m in 1..=3u64 {
                let c = enumerate_m_dyck(n as usize, m as usize).unwrap().len();
                assert_eq!(
                    Rational::from_integer(c.into()),
                    raney(n, m, 1).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn multiset_and_steps() {
        let p = MDyckPath::new(6, vec![0, 2, 4, 5, 6, 12]).unwrap();
        assert_eq!(p.multiset(), vec![2, 2, 3, 3, 4, 5, 6, 6, 6, 6, 6, 6]);
        let s = p.steps();
        assert_eq!(s.len(), 7 * 6);
        assert_eq!(s.matches('S').count(), 36);
        assert!(MDyckPath::new(1, vec![0, 2]).is_err());
        assert!(MDyckPath::new(2, vec![0, 2, 1]).is_err());
    }
}
