//! The peak-height bijection between m-peaks paths and marked m-peaks paths.
//!
//! Forward direction: an m-peaks path `M` of semilength `n - k` together with
//! an offset `1 <= k <= m-1` maps to an m-peaks path `N` of semilength `n`
//! that returns to the x-axis only at its last step and whose rightmost
//! valley under level `m` sits at height exactly `m - k`.
//!
//! Construction: split `M = M' M1` at the first return, write `M' = M2 D^m`
//! (an m-peaks first-return block must finish with at least `m` down-steps),
//! and emit `N = M2 D^k U^k M1 D^m`.

use thiserror::Error;

use super::{DyckPath, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("path is not m-peaks for m = {0}")]
    NotMPeaks(u32),
    #[error("offset {k} outside 1..={}", m - 1)]
    OffsetOutOfRange { k: u32, m: u32 },
    #[error("the empty path has no first-return block")]
    EmptyPath,
    #[error("path returns to the x-axis before its last step")]
    ReturnsEarly,
    #[error("path has no valley under level {0}")]
    NoValleyBelowLevel(u32),
}

pub fn bijection_forward(m_path: &DyckPath, m: u32, k: u32) -> Result<DyckPath, BijectionError> {
    if k == 0 || k >= m {
        return Err(BijectionError::OffsetOutOfRange { k, m });
    }
    if m_path.is_empty() {
        return Err(BijectionError::EmptyPath);
    }
    if !m_path.is_m_peaks(m) {
        return Err(BijectionError::NotMPeaks(m));
    }

    let (block, rest) = m_path.first_return_split().expect("path is nonempty");
    // A nonempty m-peaks first-return block descends from its last peak
    // (height at least m) straight to the axis.
    debug_assert!(
        block.len() >= m as usize
            && (block.len() - m as usize..block.len()).all(|i| matches!(block.step(i), Step::Down))
    );
    let head = block.slice(0, block.len() - m as usize);

    let n = DyckPath::concat(&[
        head,
        DyckPath::run(Step::Down, k as usize),
        DyckPath::run(Step::Up, k as usize),
        rest,
        DyckPath::run(Step::Down, m as usize),
    ]);
    debug_assert!(n.is_m_peaks(m));
    debug_assert!(n.returns_only_at_end());
    debug_assert_eq!(rightmost_valley_below(&n, m).map(|(_, h)| h), Some(m - k));
    Ok(n)
}

pub fn bijection_inverse(n_path: &DyckPath, m: u32) -> Result<(DyckPath, u32), BijectionError> {
    if n_path.is_empty() {
        return Err(BijectionError::EmptyPath);
    }
    if !n_path.is_m_peaks(m) {
        return Err(BijectionError::NotMPeaks(m));
    }
    if !n_path.returns_only_at_end() {
        return Err(BijectionError::ReturnsEarly);
    }
    let (pos, h) =
        rightmost_valley_below(n_path, m).ok_or(BijectionError::NoValleyBelowLevel(m))?;
    // The valley cannot touch the axis (that would be an early return), so
    // its height determines an offset in 1..=m-1.
    debug_assert!(h >= 1 && h < m);
    let k = m - h;

    // `pos` is the index of the down-step ending at the valley bottom. The
    // k steps descending from level m are forced to be consecutive downs:
    // any up-step inside the descent would create a peak below level m.
    let len = n_path.len();
    debug_assert!((pos + 1 - k as usize..=pos).all(|i| matches!(n_path.step(i), Step::Down)));
    debug_assert!((pos + 1..=pos + k as usize).all(|i| matches!(n_path.step(i), Step::Up)));

    let before = n_path.slice(0, pos + 1 - k as usize);
    let after = n_path.slice(pos + 1 + k as usize, len);
    debug_assert!(
        after.len() >= m as usize
            && (after.len() - m as usize..after.len()).all(|i| matches!(after.step(i), Step::Down))
    );
    let tail_block = after.slice(0, after.len() - m as usize);

    let m_path = DyckPath::concat(&[before, DyckPath::run(Step::Down, m as usize), tail_block]);
    debug_assert!(m_path.is_m_peaks(m));
    Ok((m_path, k))
}

/// Rightmost valley strictly below `level`: returns the index of the
/// down-step reaching the valley bottom and the bottom height.
fn rightmost_valley_below(p: &DyckPath, level: u32) -> Option<(usize, u32)> {
    let mut best = None;
    let mut h = 0i64;
    for i in 0..p.len() {
        h += if matches!(p.step(i), Step::Up) { 1 } else { -1 };
        if matches!(p.step(i), Step::Down)
            && i + 1 < p.len()
            && matches!(p.step(i + 1), Step::Up)
            && (h as u32) < level
        {
            best = Some((i, h as u32));
        }
    }
    best
}
