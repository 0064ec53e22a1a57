//! Bit-packed vectors and matrices over GF(2), plus Hamming-ball geometry.
//!
//! The public contracts are index based (bit `i` of a length-`n` word);
//! the 64-bit packing is an internal detail. Everything here is immutable
//! after construction and safe to share across threads.

use crate::numerics::binomial_u128;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A length-`n` vector over GF(2). Storage bits beyond `n - 1` are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    n: usize,
    words: Vec<u64>,
}

impl BitWord {
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "BitWord length must be positive");
        Self {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn ones(n: usize) -> Self {
        let mut w = Self::zeros(n);
        for i in 0..w.words.len() {
            w.words[i] = !0;
        }
        w.mask_tail();
        w
    }

    /// Word with ones exactly at the given bit positions.
    pub fn from_indices(n: usize, ones: &[usize]) -> Self {
        let mut w = Self::zeros(n);
        for &i in ones {
            w.set(i, true);
        }
        w
    }

    /// Word whose bit `i` is bit `i` of `value`; requires `n <= 64`.
    pub fn from_u64(n: usize, value: u64) -> Self {
        assert!(n <= 64);
        assert!(n == 64 || value < (1u64 << n), "value exceeds n bits");
        let mut w = Self::zeros(n);
        w.words[0] = value;
        w
    }

    /// Word for a table index (bit `i` of `atom` is coordinate `i`).
    pub fn from_atom(n: usize, atom: usize) -> Self {
        Self::from_u64(n, atom as u64)
    }

    /// Table index of this word; requires `n <= 63`.
    #[inline]
    pub fn atom(&self) -> usize {
        assert!(self.n <= 63);
        self.words[0] as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // length is always positive
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.n);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        assert!(i < self.n);
        let (w, b) = (i / 64, i % 64);
        if v {
            self.words[w] |= 1u64 << b;
        } else {
            self.words[w] &= !(1u64 << b);
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.n);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the AND of two words: the GF(2) inner product.
    #[inline]
    pub fn and_parity(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    /// Hamming distance.
    #[inline]
    pub fn distance(&self, other: &Self) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Positions of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i)).collect()
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.n;
        if extra > 0 {
            let last = self.words.len() - 1;
            self.words[last] &= !0u64 >> extra;
        }
    }
}

/// Order words by their integer value (bit `i` weighted `2^i`).
impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// An `m x n` matrix over GF(2), stored as `m` bit-packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    ncols: usize,
    rows: Vec<BitWord>,
}

impl Gf2Matrix {
    pub fn from_rows(ncols: usize, rows: Vec<BitWord>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols));
        Self { ncols, rows }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..m).map(|_| BitWord::zeros(n)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..n).map(|i| BitWord::from_indices(n, &[i])).collect(),
        }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                what: "vstack columns",
                expected: self.ncols,
                got: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            ncols: self.ncols,
            rows,
        })
    }

    /// `M v`: bit `i` of the result is the inner product of row `i` with `v`.
    pub fn matvec(&self, v: &BitWord) -> Result<BitWord> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                what: "matvec",
                expected: self.ncols,
                got: v.len(),
            });
        }
        let m = self.nrows().max(1);
        let mut out = BitWord::zeros(m);
        for (i, row) in self.rows.iter().enumerate() {
            if row.and_parity(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// The columns re-packed as length-`m` words; `(Mv) = XOR of columns in supp(v)`.
    pub fn columns_as_words(&self) -> Vec<BitWord> {
        let m = self.nrows().max(1);
        (0..self.ncols)
            .map(|j| {
                let mut col = BitWord::zeros(m);
                for (i, row) in self.rows.iter().enumerate() {
                    if row.get(j) {
                        col.set(i, true);
                    }
                }
                col
            })
            .collect()
    }

    /// Rank by Gaussian elimination over GF(2).
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// A basis of `ker M`: `n - rank` independent words annihilated by `M`.
    pub fn kernel_basis(&self) -> Vec<BitWord> {
        let n = self.ncols;
        let mut rows = self.rows.clone();
        let mut pivots: Vec<usize> = Vec::new(); // pivot column of reduced row i
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let is_pivot = {
            let mut mark = vec![false; n];
            for &c in &pivots {
                mark[c] = true;
            }
            mark
        };
        let mut basis = Vec::with_capacity(n - rank);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = BitWord::zeros(n);
            v.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if rows[r].get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Plain text form: first line `m n`, then `m` lines of '0'/'1' where
    /// the `i`-th character of a line is bit `i` of that row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.ncols);
        for row in &self.rows {
            for i in 0..self.ncols {
                s.push(if row.get(i) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParameter(format!("bad matrix header: {e}")))?;
        let [m, n] = dims[..] else {
            return Err(Error::InvalidParameter(
                "matrix header must be 'm n'".into(),
            ));
        };
        let mut rows = Vec::with_capacity(m);
        for r in 0..m {
            let line = lines.next().ok_or_else(|| {
                Error::InvalidParameter(format!("matrix text ends at row {r} of {m}"))
            })?;
            if line.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "row {r} has {} characters, expected {n}",
                    line.len()
                )));
            }
            let mut row = BitWord::zeros(n);
            for (i, c) in line.chars().enumerate() {
                match c {
                    '1' => row.set(i, true),
                    '0' => {}
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "row {r} column {i}: unexpected character {other:?}"
                        )))
                    }
                }
            }
            rows.push(row);
        }
        Ok(Self::from_rows(n, rows))
    }
}

/// Visit every word in the span of `basis` exactly once, starting from zero.
///
/// Gray-code order: each step flips in a single basis vector, so enumerating
/// a `2^k`-element code costs one XOR per codeword.
pub fn for_each_in_span(n: usize, basis: &[BitWord], mut f: impl FnMut(&BitWord)) {
    let k = basis.len();
    assert!(k < 48, "span enumeration of 2^{k} elements is not sensible");
    debug_assert!(basis.iter().all(|b| b.len() == n));
    let mut cur = BitWord::zeros(n);
    f(&cur);
    for j in 1u64..(1u64 << k) {
        cur.xor_assign(&basis[j.trailing_zeros() as usize]);
        f(&cur);
    }
}

/// All words in the span of `basis`, in Gray-code order.
pub fn span_vectors(n: usize, basis: &[BitWord]) -> Vec<BitWord> {
    let mut out = Vec::with_capacity(1usize << basis.len());
    for_each_in_span(n, basis, |w| out.push(w.clone()));
    out
}

/// Volume of a radius-`t` Hamming ball in `{0,1}^n` (any center).
pub fn ball_volume(n: usize, t: usize) -> Result<u128> {
    if n > 64 {
        return Err(Error::SizeCap {
            what: "exact ball volume length",
            limit: 64,
            requested: n,
        });
    }
    if t > n {
        return Err(Error::InvalidParameter(format!(
            "ball radius {t} exceeds length {n}"
        )));
    }
    Ok((0..=t).map(|i| binomial_u128(n, i)).sum())
}

/// Size of the shell at exact distance `t`.
pub fn shell_size(n: usize, t: usize) -> Result<u128> {
    if t > n {
        return Err(Error::InvalidParameter(format!(
            "shell radius {t} exceeds length {n}"
        )));
    }
    Ok(binomial_u128(n, t))
}

/// `|B_t(x) union B_t(x + 1...1)|`: the two balls are disjoint when `n > 2t`,
/// otherwise the overlap `sum_{i=n-t}^{t} C(n,i)` is removed.
pub fn gamma_size(n: usize, t: usize) -> Result<u128> {
    let nu = ball_volume(n, t)?;
    if n > 2 * t {
        Ok(2 * nu)
    } else {
        let overlap: u128 = ((n - t)..=t).map(|i| binomial_u128(n, i)).sum();
        Ok(2 * nu - overlap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    fn rows(n: usize, spec: &[&str]) -> Gf2Matrix {
        let rows = spec
            .iter()
            .map(|s| {
                let mut w = BitWord::zeros(n);
                for (i, c) in s.chars().enumerate() {
                    if c == '1' {
                        w.set(i, true);
                    }
                }
                w
            })
            .collect();
        Gf2Matrix::from_rows(n, rows)
    }

    fn random_word(n: usize, rng: &mut rand_chacha::ChaCha12Rng) -> BitWord {
        let mut w = BitWord::zeros(n);
        for i in 0..n {
            if seeds::gen_bool(rng, 0.5) {
                w.set(i, true);
            }
        }
        w
    }

    #[test]
    fn matvec_identity_and_zero() {
        let v = rows(4, &["1010"]).row(0).clone();
        let id = Gf2Matrix::identity(4);
        assert_eq!(id.matvec(&v).unwrap(), v);
        let z = Gf2Matrix::zero(3, 4);
        assert!(z.matvec(&v).unwrap().is_zero());
    }

    #[test]
    fn matvec_block_parity_rows() {
        // rows {1100, 0011}: per-block parity check
        let f = rows(4, &["1100", "0011"]);
        let v = rows(4, &["1100"]).row(0).clone();
        assert!(f.matvec(&v).unwrap().is_zero());
        let u = rows(4, &["1000"]).row(0).clone();
        let s = f.matvec(&u).unwrap();
        assert!(s.get(0) && !s.get(1));
    }

    #[test]
    fn matvec_dimension_mismatch() {
        let f = rows(4, &["1100"]);
        let v = BitWord::zeros(5);
        assert!(f.matvec(&v).is_err());
    }

    #[test]
    fn matvec_is_linear() {
        let mut rng = seeds::rng_from(11);
        for _ in 0..50 {
            let m = rows(
                80,
                &(0..7)
                    .map(|_| {
                        (0..80)
                            .map(|_| if seeds::gen_bool(&mut rng, 0.5) { '1' } else { '0' })
                            .collect::<String>()
                    })
                    .collect::<Vec<_>>()
                    .iter()
                    .map(String::as_str)
                    .collect::<Vec<_>>(),
            );
            let u = random_word(80, &mut rng);
            let v = random_word(80, &mut rng);
            let lhs = m.matvec(&u.xor(&v)).unwrap();
            let rhs = m.matvec(&u).unwrap().xor(&m.matvec(&v).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rank_cases() {
        assert_eq!(Gf2Matrix::identity(6).rank(), 6);
        assert_eq!(rows(4, &["1011", "1011"]).rank(), 1);
        assert_eq!(rows(4, &["1100", "0011"]).rank(), 2);
        assert_eq!(Gf2Matrix::zero(3, 5).rank(), 0);
    }

    #[test]
    fn kernel_basis_cases() {
        assert!(Gf2Matrix::identity(5).kernel_basis().is_empty());
        assert_eq!(Gf2Matrix::zero(1, 6).kernel_basis().len(), 6);

        let f = rows(4, &["1100", "0011"]);
        let basis = f.kernel_basis();
        assert_eq!(basis.len(), 2);
        let span: std::collections::BTreeSet<Vec<usize>> = span_vectors(4, &basis)
            .iter()
            .map(|w| w.support())
            .collect();
        let expect: std::collections::BTreeSet<Vec<usize>> =
            [vec![], vec![0, 1], vec![2, 3], vec![0, 1, 2, 3]]
                .into_iter()
                .collect();
        assert_eq!(span, expect);
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_counted() {
        let mut rng = seeds::rng_from(3);
        for trial in 0..30 {
            let n = 6 + (trial % 5);
            let m = 2 + (trial % 4);
            let mat = Gf2Matrix::from_rows(
                n,
                (0..m).map(|_| random_word(n, &mut rng)).collect(),
            );
            let basis = mat.kernel_basis();
            assert_eq!(basis.len(), n - mat.rank());
            let mut count = 0usize;
            for_each_in_span(n, &basis, |w| {
                assert!(mat.matvec(w).unwrap().is_zero());
                count += 1;
            });
            assert_eq!(count, 1usize << (n - mat.rank()));
        }
    }

    #[test]
    fn ball_geometry() {
        assert_eq!(ball_volume(4, 1).unwrap(), 5);
        assert_eq!(gamma_size(4, 1).unwrap(), 10); // balls at 0 and 1111 disjoint
        assert_eq!(ball_volume(10, 10).unwrap(), 1024);
        assert_eq!(ball_volume(64, 64).unwrap(), 1u128 << 64);
        assert!(ball_volume(4, 5).is_err());
        // overlapping case via inclusion-exclusion: n = 4, t = 2
        // |B_2(0) u B_2(1111)| = 2*11 - C(4,2) = 16
        assert_eq!(gamma_size(4, 2).unwrap(), 16);
        // nu_t strictly increases until n, and shells sum to the ball
        let mut prev = 0u128;
        let mut acc = 0u128;
        for t in 0..=10 {
            let nu = ball_volume(10, t).unwrap();
            assert!(nu > prev);
            acc += shell_size(10, t).unwrap();
            assert_eq!(acc, nu);
            prev = nu;
        }
    }

    #[test]
    fn text_round_trip() {
        let m = rows(5, &["10110", "01001", "00000"]);
        let text = m.to_text();
        assert!(text.starts_with("3 5\n"));
        assert_eq!(Gf2Matrix::from_text(&text).unwrap(), m);
        assert!(Gf2Matrix::from_text("2 3\n101\n1x1\n").is_err());
        assert!(Gf2Matrix::from_text("2 3\n101\n").is_err());
    }

    #[test]
    fn word_order_is_integer_value_order() {
        let a = BitWord::from_u64(10, 5);
        let b = BitWord::from_u64(10, 6);
        assert!(a < b);
        // beyond one storage word: bit 70 dominates low bits
        let mut hi = BitWord::zeros(80);
        hi.set(70, true);
        let mut lo = BitWord::ones(80);
        lo.set(70, false);
        for i in 64..80 {
            lo.set(i, false);
        }
        assert!(lo < hi);
    }

    #[test]
    fn weight_and_ones() {
        assert_eq!(BitWord::zeros(9).weight(), 0);
        assert_eq!(BitWord::ones(9).weight(), 9);
        assert_eq!(BitWord::ones(130).weight(), 130);
    }
}
