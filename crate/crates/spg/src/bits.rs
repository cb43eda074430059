//! Plain bit sequences with rank/select, and fixed-width packed integers.
//!
//! Rank directory: one absolute 64-bit count per 512-bit superblock
//! (12.5% overhead); select samples every 4096-th bit of each kind and
//! binary-searches the superblocks in between.

use crate::error::{Error, Result};
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

const SB_WORDS: usize = 8;
const SB_BITS: usize = SB_WORDS * 64;
const SAMPLE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BitSeq {
    len: usize,
    words: Vec<u64>,
    sb: Vec<u64>,
    samples1: Vec<u32>,
    samples0: Vec<u32>,
}

/// Index of the `r`-th (0-based) set bit of `w`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, mut r: u32) -> u32 {
    let mut shift = 0;
    loop {
        let c = (w & 0xff).count_ones();
        if r < c {
            break;
        }
        r -= c;
        w >>= 8;
        shift += 8;
    }
    loop {
        if w & 1 == 1 {
            if r == 0 {
                return shift;
            }
            r -= 1;
        }
        w >>= 1;
        shift += 1;
    }
}

impl BitSeq {
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if len % 64 != 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % 64)) - 1;
        }
        let mut b = BitSeq { len, words, ..Default::default() };
        b.build_dirs();
        b
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if bit {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        Self::from_words(words, len)
    }

    /// Bit sequence of length `len` with ones exactly at the given 0-based positions.
    pub fn from_positions(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        for p in ones {
            assert!(p < len);
            words[p / 64] |= 1 << (p % 64);
        }
        Self::from_words(words, len)
    }

    fn build_dirs(&mut self) {
        let nsb = self.words.len().div_ceil(SB_WORDS);
        self.sb = Vec::with_capacity(nsb + 1);
        let mut acc = 0u64;
        for chunk in self.words.chunks(SB_WORDS) {
            self.sb.push(acc);
            acc += chunk.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        }
        self.sb.push(acc);
        let ones = acc as usize;
        let zeros = self.len - ones;
        self.samples1 = (0..ones.div_ceil(SAMPLE))
            .map(|s| self.sb_containing(s * SAMPLE + 1, true) as u32)
            .collect();
        self.samples0 = (0..zeros.div_ceil(SAMPLE))
            .map(|s| self.sb_containing(s * SAMPLE + 1, false) as u32)
            .collect();
    }

    #[inline]
    fn sb_count(&self, b: usize, bit: bool) -> usize {
        if bit {
            self.sb[b] as usize
        } else {
            (b * SB_BITS).min(self.len) - self.sb[b] as usize
        }
    }

    /// Superblock holding the `k`-th bit of kind `bit`, by binary search.
    fn sb_containing(&self, k: usize, bit: bool) -> usize {
        let (mut lo, mut hi) = (0, self.sb.len() - 1);
        if bit {
            let s = (k - 1) / SAMPLE;
            if s < self.samples1.len() {
                lo = self.samples1[s] as usize;
                if s + 1 < self.samples1.len() {
                    hi = self.samples1[s + 1] as usize + 1;
                }
            }
        } else {
            let s = (k - 1) / SAMPLE;
            if s < self.samples0.len() {
                lo = self.samples0[s] as usize;
                if s + 1 < self.samples0.len() {
                    hi = self.samples0[s + 1] as usize + 1;
                }
            }
        }
        hi = hi.min(self.sb.len() - 1);
        // largest b in [lo, hi) with count(b) < k
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.sb_count(mid, bit) < k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 0-based position `pos`.
    #[inline]
    pub fn get(&self, pos: usize) -> bool {
        debug_assert!(pos < self.len);
        (self.words[pos / 64] >> (pos % 64)) & 1 == 1
    }

    /// Bit at 1-based index `i`.
    pub fn access(&self, i: usize) -> Result<bool> {
        crate::error::check_vertex(i, self.len)?;
        Ok(self.get(i - 1))
    }

    /// Number of ones among the first `i` bits (`0 <= i <= len`).
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.len, "rank {i} > {}", self.len);
        let w = i / 64;
        let b = w / SB_WORDS;
        let mut r = self.sb[b] as usize;
        for &x in &self.words[b * SB_WORDS..w] {
            r += x.count_ones() as usize;
        }
        if i % 64 != 0 {
            r += (self.words[w] & ((1u64 << (i % 64)) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    pub fn rank(&self, i: usize, bit: bool) -> Result<usize> {
        if i > self.len {
            return Err(Error::OutOfRange { index: i, n: self.len });
        }
        Ok(if bit { self.rank1(i) } else { self.rank0(i) })
    }

    pub fn count_ones(&self) -> usize {
        *self.sb.last().unwrap() as usize
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    /// Smallest `i` with `rank(i) == k` (the 1-based index of the `k`-th bit of kind `bit`).
    #[inline]
    pub fn select(&self, k: usize, bit: bool) -> Option<usize> {
        let total = if bit { self.count_ones() } else { self.count_zeros() };
        if k == 0 || k > total {
            return None;
        }
        let b = self.sb_containing(k, bit);
        let mut rem = k - self.sb_count(b, bit);
        let mut w = b * SB_WORDS;
        loop {
            let word = if bit { self.words[w] } else { !self.words[w] };
            let c = word.count_ones() as usize;
            if rem <= c {
                return Some(w * 64 + select_in_word(word, (rem - 1) as u32) as usize + 1);
            }
            rem -= c;
            w += 1;
        }
    }

    #[inline]
    pub fn select1(&self, k: usize) -> Option<usize> {
        self.select(k, true)
    }

    #[inline]
    pub fn select0(&self, k: usize) -> Option<usize> {
        self.select(k, false)
    }

    /// Exact size in bits: payload words plus directories.
    pub fn report_bits(&self) -> usize {
        64 * (self.words.len() + self.sb.len()) + 32 * (self.samples1.len() + self.samples0.len())
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |p| self.get(p))
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, self.len as u64)?;
        for &x in &self.words {
            write_u64(w, x)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let len = read_u64(r)? as usize;
        let nw = len.div_ceil(64);
        let mut words = Vec::with_capacity(nw);
        for _ in 0..nw {
            words.push(read_u64(r)?);
        }
        Ok(Self::from_words(words, len))
    }
}

/// Fixed-width unsigned integers packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PackedInts {
    len: usize,
    width: u32,
    words: Vec<u64>,
}

/// Bits needed to store values in `0..n` (i.e. ⌈lg n⌉, 0 for n <= 1).
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

impl PackedInts {
    pub fn new(len: usize, width: u32) -> Self {
        assert!(width <= 64);
        PackedInts { len, width, words: vec![0; (len * width as usize).div_ceil(64)] }
    }

    pub fn from_slice(values: &[u64], width: u32) -> Self {
        let mut p = Self::new(values.len(), width);
        for (i, &v) in values.iter().enumerate() {
            p.set(i, v);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    pub fn set(&mut self, i: usize, v: u64) {
        assert!(i < self.len);
        if self.width == 0 {
            debug_assert_eq!(v, 0);
            return;
        }
        debug_assert!(v <= self.mask());
        let bit = i * self.width as usize;
        let (w, o) = (bit / 64, bit % 64);
        let m = self.mask();
        self.words[w] = (self.words[w] & !(m << o)) | (v << o);
        if o + self.width as usize > 64 {
            let hi = 64 - o;
            self.words[w + 1] = (self.words[w + 1] & !(m >> hi)) | (v >> hi);
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        if self.width == 0 {
            return 0;
        }
        let bit = i * self.width as usize;
        let (w, o) = (bit / 64, bit % 64);
        let mut v = self.words[w] >> o;
        if o + self.width as usize > 64 {
            v |= self.words[w + 1] << (64 - o);
        }
        v & self.mask()
    }

    /// Payload bits, `len * width` rounded up to whole words.
    pub fn report_bits(&self) -> usize {
        64 * self.words.len()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, self.len as u64)?;
        write_u64(w, self.width as u64)?;
        for &x in &self.words {
            write_u64(w, x)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let len = read_u64(r)? as usize;
        let width = read_u64(r)? as u32;
        if width > 64 {
            return Err(Error::Format(format!("packed width {width}")));
        }
        let nw = (len * width as usize).div_ceil(64);
        let mut words = Vec::with_capacity(nw);
        for _ in 0..nw {
            words.push(read_u64(r)?);
        }
        Ok(PackedInts { len, width, words })
    }
}
