//! Compositions, permutations of their entries, and orbit data.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of `N^n`. Partitions are the weakly decreasing compositions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `|lambda|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `l(lambda)`: the largest index (1-based) of a nonzero part, 0 if none.
    pub fn length(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_antipartition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn require_partition(&self) -> Result<()> {
        if self.is_partition() {
            Ok(())
        } else {
            Err(Error::NotAPartition(self.0.clone()))
        }
    }

    /// `lambda^+`, the decreasing rearrangement.
    pub fn dominant(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    /// `lambda^-`, the increasing rearrangement.
    pub fn antidominant(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable();
        Composition(v)
    }

    /// `s_i(lambda)` for 1-based `i`.
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    pub fn exponent(&self) -> Vec<i32> {
        self.0.iter().map(|&x| x as i32).collect()
    }

    pub fn from_exponent(e: &[i32]) -> Option<Composition> {
        e.iter().map(|&x| u32::try_from(x).ok()).collect::<Option<Vec<_>>>().map(Composition)
    }

    /// `m_i(lambda)` for `i = 0..=max part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut m = vec![0; max + 1];
        for &x in &self.0 {
            m[x as usize] += 1;
        }
        m
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&x| x == value).count()
    }

    /// `L(lambda) = #{(i,j) : i < j, lambda_i < lambda_j}`, the length of
    /// the shortest permutation sorting `lambda^+` into `lambda`.
    pub fn inversion_length(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] < v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `lambda* = (lambda_m - 1, lambda_1, ..., lambda_{m-1}, 0, ..., 0)` with
    /// `m = l(lambda)`; one box fewer than `lambda`.
    pub fn star(&self) -> Result<Composition> {
        let m = self.length();
        if m == 0 {
            return Err(Error::ZeroComposition);
        }
        let mut v = Vec::with_capacity(self.n());
        v.push(self.0[m - 1] - 1);
        v.extend_from_slice(&self.0[..m - 1]);
        v.resize(self.n(), 0);
        Ok(Composition(v))
    }

    /// The chain `lambda, lambda*, lambda**, ..., 0`.
    pub fn star_chain(&self) -> Vec<Composition> {
        let mut chain = vec![self.clone()];
        while let Ok(next) = chain.last().unwrap().star() {
            chain.push(next);
        }
        chain
    }

    pub fn split_at(&self, m: usize) -> (&[u32], &[u32]) {
        self.0.split_at(m)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if trimmed.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        trimmed
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

/// All compositions of `size` into `n` parts, in increasing lexicographic order.
pub fn compositions(n: usize, size: u32) -> Vec<Composition> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(n, left - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if size == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, size, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `size` with at most `n` parts, padded with zeros to
/// length `n`, in decreasing lexicographic order (a linear extension of
/// dominance, largest first).
pub fn partitions(size: u32, n: usize) -> Vec<Composition> {
    fn rec(n: usize, left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if left == 0 {
            let mut v = prefix.clone();
            v.resize(n, 0);
            out.push(Composition(v));
            return;
        }
        if prefix.len() == n {
            return;
        }
        for x in (1..=max.min(left)).rev() {
            prefix.push(x);
            rec(n, left - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, size, &mut Vec::new(), &mut out);
    out
}

/// A permutation of `{1..n}`, stored 0-based: `w(j) = images[j]`.
///
/// It acts on compositions by moving the entry in position `j` to position
/// `w(j)`, so that `(v w)(lambda) = v(w(lambda))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::PreconditionViolated(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple transposition `s_i` (1-based) in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (j, &w) in self.images.iter().enumerate() {
            inv[w] = j;
        }
        Permutation { images: inv }
    }

    pub fn act(&self, lambda: &Composition) -> Composition {
        let mut out = vec![0; lambda.n()];
        for (j, &x) in lambda.parts().iter().enumerate() {
            out[self.images[j]] = x;
        }
        Composition(out)
    }

    /// A reduced word `[i_1, ..., i_k]` (1-based) with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with
        // l(w s_i) = l(w) - 1.
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Bruhat order via the rank-matrix criterion:
    /// `v <= w` iff `#{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k}` for all `i, k`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.n();
        assert_eq!(n, other.n());
        for k in 0..n {
            let (mut rv, mut rw) = (0usize, 0usize);
            for i in 0..n {
                if self.images[i] >= k {
                    rv += 1;
                }
                if other.images[i] >= k {
                    rw += 1;
                }
                if rv > rw {
                    return false;
                }
            }
        }
        true
    }

    /// Every permutation of `S_n`.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, used: &mut Vec<bool>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if prefix.len() == n {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(n, used, prefix, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut vec![false; n], &mut Vec::new(), &mut out);
        out
    }
}

/// `lambda^+`, `lambda^-` and the shortest permutations reaching `lambda`
/// from them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitData {
    pub lambda_plus: Composition,
    pub lambda_minus: Composition,
    /// Shortest `w` with `w(lambda^+) = lambda`.
    pub w_min: Permutation,
    /// Shortest `w` with `w(lambda^-) = lambda`.
    pub w_tilde: Permutation,
}

pub fn orbit_data(lambda: &Composition) -> OrbitData {
    let v = lambda.parts();
    // Stable sorts keep tied entries in place, which adds no inversions.
    let mut dec: Vec<usize> = (0..v.len()).collect();
    dec.sort_by(|&a, &b| v[b].cmp(&v[a]));
    let mut inc: Vec<usize> = (0..v.len()).collect();
    inc.sort_by(|&a, &b| v[a].cmp(&v[b]));
    OrbitData {
        lambda_plus: lambda.dominant(),
        lambda_minus: lambda.antidominant(),
        w_min: Permutation { images: dec },
        w_tilde: Permutation { images: inc },
    }
}
