//! Peak-height avoidance sets, either finite or periodic.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightSetError {
    #[error("periodic modulus must be at least 2, got {0}")]
    ModulusTooSmall(u32),
    #[error("residue {0} outside 1..={1}")]
    ResidueOutOfRange(u32, u32),
}

/// A set of peak heights to avoid.
///
/// The periodic kind `(m, V)` stands for `V + mZ` intersected with the
/// positive integers, `V` a subset of `{1..m}`. A residue of 0 is
/// represented as `m`, so heights `m, 2m, ...` test the residue `m`.
/// Finite sets may contain non-positive elements; membership only ever
/// asks about positive heights, so those elements are inert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeightSet {
    Finite(BTreeSet<i64>),
    Periodic {
        modulus: u32,
        residues: BTreeSet<u32>,
    },
}

impl HeightSet {
    pub fn finite(values: impl IntoIterator<Item = i64>) -> Self {
        HeightSet::Finite(values.into_iter().collect())
    }

    pub fn periodic(
        modulus: u32,
        residues: impl IntoIterator<Item = u32>,
    ) -> Result<Self, HeightSetError> {
        if modulus < 2 {
            return Err(HeightSetError::ModulusTooSmall(modulus));
        }
        let residues: BTreeSet<u32> = residues.into_iter().collect();
        for &v in &residues {
            if v == 0 || v > modulus {
                return Err(HeightSetError::ResidueOutOfRange(v, modulus));
            }
        }
        Ok(HeightSet::Periodic { modulus, residues })
    }

    /// The set `[m] \ {r}`: all residues modulo `m` except `r`.
    pub fn all_residues_except(modulus: u32, r: u32) -> Result<Self, HeightSetError> {
        if r == 0 || r > modulus {
            return Err(HeightSetError::ResidueOutOfRange(r, modulus));
        }
        HeightSet::periodic(modulus, (1..=modulus).filter(|&v| v != r))
    }

    /// Membership of a positive height.
    pub fn contains(&self, h: u32) -> bool {
        if h == 0 {
            return false;
        }
        match self {
            HeightSet::Finite(s) => s.contains(&(h as i64)),
            HeightSet::Periodic { modulus, residues } => {
                let rem = h % modulus;
                let mapped = if rem == 0 { *modulus } else { rem };
                residues.contains(&mapped)
            }
        }
    }

    /// The shifted set `S - 1` (peak heights seen one level up).
    pub fn shift_down_one(&self) -> Self {
        self.shifted(-1)
    }

    /// The translated set `S + k`.
    pub fn shifted(&self, k: i64) -> Self {
        match self {
            HeightSet::Finite(s) => HeightSet::Finite(s.iter().map(|&v| v + k).collect()),
            HeightSet::Periodic { modulus, residues } => {
                let m = *modulus as i64;
                let shifted = residues
                    .iter()
                    .map(|&v| {
                        let t = (v as i64 + k).rem_euclid(m);
                        if t == 0 {
                            *modulus
                        } else {
                            t as u32
                        }
                    })
                    .collect();
                HeightSet::Periodic {
                    modulus: *modulus,
                    residues: shifted,
                }
            }
        }
    }

    /// For finite sets: is the positive part empty (so the set is inert)?
    pub fn positive_part_empty(&self) -> bool {
        match self {
            HeightSet::Finite(s) => s.iter().all(|&v| v <= 0),
            HeightSet::Periodic { residues, .. } => residues.is_empty(),
        }
    }

    /// Largest positive element of a finite set, if any.
    pub fn max_positive(&self) -> Option<i64> {
        match self {
            HeightSet::Finite(s) => s.iter().rev().find(|&&v| v > 0).copied(),
            HeightSet::Periodic { .. } => None,
        }
    }

    /// Insert a single positive height (finite sets only).
    pub fn with_inserted(&self, h: i64) -> Option<Self> {
        match self {
            HeightSet::Finite(s) => {
                let mut s = s.clone();
                s.insert(h);
                Some(HeightSet::Finite(s))
            }
            HeightSet::Periodic { .. } => {
                if self.contains(h.max(0) as u32) {
                    Some(self.clone())
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for HeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightSet::Finite(s) => {
                write!(f, "{{")?;
                for (i, v) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}}")
            }
            HeightSet::Periodic { modulus, residues } => {
                write!(f, "({modulus},{{")?;
                for (i, v) in residues.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_membership_maps_zero_residue_to_modulus() {
        let s = HeightSet::periodic(3, [3]).unwrap();
        assert!(s.contains(3));
        assert!(s.contains(6));
        assert!(!s.contains(1));
        assert!(!s.contains(2));
        assert!(!s.contains(0));
    }

    #[test]
    fn shifting_periodic_sets_wraps_residues() {
        let s = HeightSet::periodic(5, [1, 2, 4]).unwrap();
        assert_eq!(s.shifted(2), HeightSet::periodic(5, [1, 3, 4]).unwrap());
        assert_eq!(
            s.shifted(2).shifted(1),
            HeightSet::periodic(5, [2, 4, 5]).unwrap()
        );
    }

    #[test]
    fn shift_down_agrees_with_membership() {
        let s = HeightSet::periodic(4, [2, 4]).unwrap();
        let t = s.shift_down_one();
        for h in 1..=20 {
            assert_eq!(t.contains(h), s.contains(h + 1), "h = {h}");
        }
        let s = HeightSet::finite([1, 5]);
        let t = s.shift_down_one();
        for h in 1..=8 {
            assert_eq!(t.contains(h), s.contains(h + 1), "h = {h}");
        }
    }

    #[test]
    fn residue_complements() {
        let s = HeightSet::all_residues_except(4, 2).unwrap();
        assert_eq!(s, HeightSet::periodic(4, [1, 3, 4]).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(HeightSet::periodic(1, [1]).is_err());
        assert!(HeightSet::periodic(4, [0]).is_err());
        assert!(HeightSet::periodic(4, [5]).is_err());
    }
}
