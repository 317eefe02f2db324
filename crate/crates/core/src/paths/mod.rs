//! Brute-force Dyck-path combinatorics: enumeration, peak/valley statistics,
//! avoidance filtering and the peak-height bijection.
//!
//! This module is the independent oracle for everything the generating
//! function modules compute, so it stays deliberately naive: exhaustive
//! enumeration with a desk-scale guard, no clever counting.

mod bijection;
mod heightset;

pub use bijection::{bijection_forward, bijection_inverse, BijectionError};
pub use heightset::HeightSet;

use std::fmt;

use thiserror::Error;

/// Guard for exhaustive enumeration (`C_14` is about 2.7 million paths).
pub const MAX_ENUM_SEMILENGTH: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathsError {
    #[error("semilength {0} exceeds the enumeration guard {MAX_ENUM_SEMILENGTH}")]
    AboveGuard(usize),
    #[error("invalid step character {0:?} (expected 'U' or 'D')")]
    BadStepChar(char),
    #[error("step sequence is not a Dyck path")]
    NotDyck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path stored as a bit sequence: bit `i` set means step `i` is an
/// up-step. Paths of semilength up to 31 fit.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    bits: u64,
    len: u8,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { bits: 0, len: 0 }
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self, PathsError> {
        assert!(
            steps.len() <= 62,
            "path too long for the bit representation"
        );
        let mut bits = 0u64;
        for (i, s) in steps.iter().enumerate() {
            if matches!(s, Step::Up) {
                bits |= 1 << i;
            }
        }
        let p = DyckPath {
            bits,
            len: steps.len() as u8,
        };
        if !p.is_valid() {
            return Err(PathsError::NotDyck);
        }
        Ok(p)
    }

    pub fn parse(s: &str) -> Result<Self, PathsError> {
        let steps: Vec<Step> = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(PathsError::BadStepChar(other)),
            })
            .collect::<Result<_, _>>()?;
        Self::from_steps(&steps)
    }

    fn is_valid(&self) -> bool {
        let mut h = 0i32;
        for i in 0..self.len as usize {
            h += if self.bits >> i & 1 == 1 { 1 } else { -1 };
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// Number of steps (`2n`).
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn semilength(&self) -> usize {
        self.len as usize / 2
    }

    pub fn step(&self, i: usize) -> Step {
        debug_assert!(i < self.len as usize);
        if self.bits >> i & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len as usize).map(move |i| self.step(i))
    }

    /// Height after each step.
    pub fn heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len as usize);
        let mut h = 0i32;
        for s in self.steps() {
            h += if matches!(s, Step::Up) { 1 } else { -1 };
            out.push(h as u32);
        }
        out
    }

    /// Heights of all `UD` factors, in path order.
    pub fn peak_heights(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut h = 0i32;
        for i in 0..self.len as usize {
            let up = self.bits >> i & 1 == 1;
            h += if up { 1 } else { -1 };
            if up && i + 1 < self.len as usize && self.bits >> (i + 1) & 1 == 0 {
                out.push(h as u32);
            }
        }
        out
    }

    /// Heights of all `DU` factors, in path order.
    pub fn valley_heights(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut h = 0i32;
        for i in 0..self.len as usize {
            let up = self.bits >> i & 1 == 1;
            h += if up { 1 } else { -1 };
            if !up && i + 1 < self.len as usize && self.bits >> (i + 1) & 1 == 1 {
                out.push(h as u32);
            }
        }
        out
    }

    /// True when no peak height lies in the avoidance set.
    pub fn avoids(&self, set: &HeightSet) -> bool {
        self.peak_heights().iter().all(|&h| !set.contains(h))
    }

    /// True when every peak height is a multiple of `m`.
    pub fn is_m_peaks(&self, m: u32) -> bool {
        debug_assert!(m >= 1);
        self.peak_heights().iter().all(|&h| h % m == 0)
    }

    /// True when the path touches the x-axis only at its endpoints.
    pub fn returns_only_at_end(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut h = 0i32;
        for i in 0..self.len as usize - 1 {
            h += if self.bits >> i & 1 == 1 { 1 } else { -1 };
            if h == 0 {
                return false;
            }
        }
        true
    }

    /// Split a nonempty path at the first return to the x-axis.
    pub fn first_return_split(&self) -> Option<(DyckPath, DyckPath)> {
        if self.is_empty() {
            return None;
        }
        let mut h = 0i32;
        for i in 0..self.len as usize {
            h += if self.bits >> i & 1 == 1 { 1 } else { -1 };
            if h == 0 {
                return Some((self.slice(0, i + 1), self.slice(i + 1, self.len as usize)));
            }
        }
        unreachable!("a Dyck path ends on the x-axis");
    }

    /// Steps `[from, to)` as a raw (not necessarily balanced) fragment.
    fn slice(&self, from: usize, to: usize) -> DyckPath {
        debug_assert!(from <= to && to <= self.len as usize);
        let width = to - from;
        let bits = if width == 0 {
            0
        } else {
            (self.bits >> from) & ((1u64 << width) - 1)
        };
        DyckPath {
            bits,
            len: width as u8,
        }
    }

    fn concat(parts: &[DyckPath]) -> DyckPath {
        let mut bits = 0u64;
        let mut len = 0usize;
        for p in parts {
            bits |= p.bits << len;
            len += p.len as usize;
        }
        assert!(len <= 62);
        DyckPath {
            bits,
            len: len as u8,
        }
    }

    fn run(step: Step, count: usize) -> DyckPath {
        let bits = if matches!(step, Step::Up) && count > 0 {
            (1u64 << count) - 1
        } else {
            0
        };
        DyckPath {
            bits,
            len: count as u8,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(if matches!(s, Step::Up) { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

/// Visit every Dyck path of the given semilength in lexicographic step order
/// (D before U at each position).
fn for_each_dyck(n: usize, f: &mut impl FnMut(&DyckPath)) {
    fn rec(bits: u64, pos: usize, h: i32, total: usize, f: &mut impl FnMut(&DyckPath)) {
        if pos == total {
            f(&DyckPath {
                bits,
                len: total as u8,
            });
            return;
        }
        let remaining = (total - pos) as i32;
        // Down first keeps lexicographic order with D < U.
        if h > 0 {
            rec(bits, pos + 1, h - 1, total, f);
        }
        // Going up must leave enough steps to come back down to zero.
        if h < remaining - 1 {
            rec(bits | 1 << pos, pos + 1, h + 1, total, f);
        }
    }
    rec(0, 0, 0, 2 * n, f);
}

/// All Dyck paths of semilength `n` (guarded).
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>, PathsError> {
    if n > MAX_ENUM_SEMILENGTH {
        return Err(PathsError::AboveGuard(n));
    }
    let mut out = Vec::new();
    for_each_dyck(n, &mut |p| out.push(*p));
    Ok(out)
}

/// Number of `n`-Dyck paths with no peak height in `set`, by exhaustive
/// enumeration.
pub fn count_avoiding(n: usize, set: &HeightSet) -> Result<u64, PathsError> {
    if n > MAX_ENUM_SEMILENGTH {
        return Err(PathsError::AboveGuard(n));
    }
    let mut count = 0u64;
    for_each_dyck(n, &mut |p| {
        if p.avoids(set) {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_are_catalan() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate_dyck(n).unwrap().len() as u64, c, "n = {n}");
        }
    }

    #[test]
    fn enumeration_guard() {
        assert_eq!(enumerate_dyck(15), Err(PathsError::AboveGuard(15)));
    }

    #[test]
    fn peak_and_valley_statistics() {
        let p = DyckPath::parse("UDUD").unwrap();
        assert_eq!(p.peak_heights(), vec![1, 1]);
        assert_eq!(p.valley_heights(), vec![0]);

        let p = DyckPath::parse("UUDD").unwrap();
        assert_eq!(p.peak_heights(), vec![2]);
        assert!(p.valley_heights().is_empty());

        let p = DyckPath::parse("UUDUDD").unwrap();
        assert_eq!(p.peak_heights(), vec![2, 2]);
        assert_eq!(p.valley_heights(), vec![1]);
    }

    #[test]
    fn invalid_paths_rejected() {
        assert_eq!(DyckPath::parse("DU"), Err(PathsError::NotDyck));
        assert_eq!(DyckPath::parse("UUD"), Err(PathsError::NotDyck));
        assert_eq!(DyckPath::parse("UX"), Err(PathsError::BadStepChar('X')));
    }

    #[test]
    fn m_peaks_membership() {
        assert!(DyckPath::parse("UUDD").unwrap().is_m_peaks(2));
        assert!(!DyckPath::parse("UDUD").unwrap().is_m_peaks(2));
        assert!(DyckPath::empty().is_m_peaks(2));
        assert!(DyckPath::empty().is_m_peaks(7));
    }

    #[test]
    fn counting_with_empty_set_is_catalan() {
        let empty = HeightSet::finite([]);
        assert_eq!(count_avoiding(4, &empty).unwrap(), 14);
    }

    #[test]
    fn avoiding_odd_heights_gives_riordan() {
        // Peaks restricted to even heights.
        let odd = HeightSet::periodic(2, [1]).unwrap();
        let riordan = [1u64, 0, 1, 1, 3, 6];
        for (n, &e) in riordan.iter().enumerate() {
            assert_eq!(count_avoiding(n, &odd).unwrap(), e, "n = {n}");
        }
    }

    #[test]
    fn avoiding_even_heights_gives_shifted_motzkin() {
        let even = HeightSet::periodic(2, [2]).unwrap();
        let shifted_motzkin = [1u64, 1, 1, 2, 4, 9];
        for (n, &e) in shifted_motzkin.iter().enumerate() {
            assert_eq!(count_avoiding(n, &even).unwrap(), e, "n = {n}");
        }
    }

    #[test]
    fn non_positive_elements_are_ignored() {
        for n in 0..=7 {
            let with_junk = HeightSet::finite([-3, 0, 2]);
            let clean = HeightSet::finite([2]);
            assert_eq!(
                count_avoiding(n, &with_junk).unwrap(),
                count_avoiding(n, &clean).unwrap()
            );
        }
    }

    #[test]
    fn first_return_split_parts() {
        let p = DyckPath::parse("UUDDUD").unwrap();
        let (head, tail) = p.first_return_split().unwrap();
        assert_eq!(head.to_string(), "UUDD");
        assert_eq!(tail.to_string(), "UD");
        assert!(DyckPath::empty().first_return_split().is_none());
    }
}
