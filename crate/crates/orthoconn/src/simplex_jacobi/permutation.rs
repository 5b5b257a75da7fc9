use std::fmt;

use crate::error::{Error, Result};

/// Element of the symmetric group on `{1, ..., m}`, stored 0-based.
///
/// The action on tuples is `(tau v)_i = v_{tau(i)}`, and [`compose`](Self::compose)
/// follows function composition, so `a.compose(&b)` applies `b` first. With
/// these conventions the connection coefficients satisfy the convolution
/// identity `c^{t1 t2}(k) = c^{t2}(t1 k) c^{t1}(k)` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self { img: (0..m).collect() }
    }

    /// Builds from a 0-based image array, rejecting non-bijections.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let m = img.len();
        let mut seen = vec![false; m];
        for &i in &img {
            if i >= m || seen[i] {
                return Err(Error::InvalidParameter(format!("{img:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { img })
    }

    /// Parses cycle notation on `{1, ..., m}` such as `(123)`, `(1 3)(2 4)`,
    /// `(1,2,10)` or `(1)`. Within a cycle, each symbol maps to the next.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let err = || Error::Parse { what: "permutation", input: s.to_string() };
        let mut img: Vec<usize> = (0..m).collect();
        let mut seen = vec![false; m];
        let t = s.trim();
        if t.is_empty() || t == "id" || t == "e" {
            return Ok(Self { img });
        }
        let mut rest = t;
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(err)?;
            let close = body_start.find(')').ok_or_else(err)?;
            let body = &body_start[..close];
            rest = body_start[close + 1..].trim_start();
            let syms: Vec<usize> = if body.contains(',') || body.contains(' ') {
                body.split([',', ' '])
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| err()))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|v| v as usize).ok_or_else(err))
                    .collect::<Result<_>>()?
            };
            if syms.is_empty() {
                return Err(err());
            }
            for &v in &syms {
                if v == 0 || v > m || seen[v - 1] {
                    return Err(err());
                }
                seen[v - 1] = true;
            }
            for (i, &v) in syms.iter().enumerate() {
                img[v - 1] = syms[(i + 1) % syms.len()] - 1;
            }
        }
        Ok(Self { img })
    }

    /// Number of points acted on, `d + 1` for the simplex.
    pub fn size(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// `tau(i)` on 0-based points.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0; self.size()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Self { img }
    }

    /// `(tau v)_i = v_{tau(i)}`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.size());
        self.img.iter().map(|&i| v[i].clone()).collect()
    }

    /// Largest 0-based point that is moved, if any.
    pub fn max_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().rev().find(|(i, v)| i != *v).map(|(i, _)| i)
    }

    /// Smallest 0-based point that is moved, if any.
    pub fn min_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().find(|(i, v)| i != *v).map(|(i, _)| i)
    }

    /// Restriction to `{0, ..., k-1}`; the caller guarantees invariance.
    pub fn truncate(&self, k: usize) -> Self {
        debug_assert!(self.img[..k].iter().all(|&v| v < k));
        Self { img: self.img[..k].to_vec() }
    }

    /// Restriction to `{j, ..., m-1}`, relabelled from 0.
    pub fn drop_prefix(&self, j: usize) -> Self {
        debug_assert!(self.img[j..].iter().all(|&v| v >= j));
        Self { img: self.img[j..].iter().map(|&v| v - j).collect() }
    }

    /// Transposition of two 0-based points in `S_m`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut img: Vec<usize> = (0..m).collect();
        img.swap(a, b);
        Self { img }
    }

    /// The cycle `(1 2 ... k)` in `S_m`.
    pub fn cycle_prefix(m: usize, k: usize) -> Self {
        let mut img: Vec<usize> = (0..m).collect();
        for (i, v) in img.iter_mut().enumerate().take(k) {
            *v = (i + 1) % k;
        }
        Self { img }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for s in 0..self.size() {
            if seen[s] || self.img[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut i = self.img[s];
            while i != s {
                seen[i] = true;
                c.push(i);
                i = self.img[i];
            }
            out.push(c);
        }
        out
    }

    /// All permutations of `S_m` in lexicographic order of image arrays.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            out.push(Self { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        let sep = if self.size() > 9 { "," } else { "" };
        for c in cycles {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["(1)", "(12)", "(123)", "(13)(24)", "(1342)"] {
            let p = Permutation::parse(s, 4).unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!(Permutation::parse("(1 3)", 3).unwrap(), Permutation::parse("(13)", 3).unwrap());
        assert!(Permutation::parse("(15)", 4).is_err());
        assert!(Permutation::parse("(121)", 4).is_err());
    }

    #[test]
    fn cycle_maps_forward() {
        let p = Permutation::parse("(123)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
        assert_eq!(p.act(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
    }

    #[test]
    fn composition_and_inverse() {
        let a = Permutation::parse("(12)", 3).unwrap();
        let b = Permutation::parse("(23)", 3).unwrap();
        assert_eq!(a.compose(&b), Permutation::parse("(123)", 3).unwrap());
        let c = Permutation::parse("(1342)", 4).unwrap();
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
