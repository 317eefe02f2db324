//! Eventual-periodicity detection for exact sequences.

use std::fmt;

/// Outcome of a periodicity scan.
///
/// `Confirmed` means the observed window equals
/// `preperiod ++ word ++ word ++ ...` exactly, with at least two full
/// repetitions of the word after the preperiod. The reported pair is
/// lexicographically minimal: smallest preperiod, then smallest period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity<T> {
    Confirmed { preperiod: usize, word: Vec<T> },
    Inconclusive,
}

impl<T> Periodicity<T> {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Periodicity::Confirmed { .. })
    }

    pub fn period(&self) -> Option<usize> {
        match self {
            Periodicity::Confirmed { word, .. } => Some(word.len()),
            Periodicity::Inconclusive => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Periodicity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Periodicity::Confirmed { preperiod, word } => {
                if *preperiod > 0 {
                    write!(f, "preperiod {preperiod}, ")?;
                }
                write!(f, "(")?;
                for (i, w) in word.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ")*")
            }
            Periodicity::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Minimal eventually-periodic structure of the observed window.
pub fn detect_periodicity<T: Clone + PartialEq>(seq: &[T]) -> Periodicity<T> {
    let len = seq.len();
    for preperiod in 0..len {
        let tail = len - preperiod;
        for period in 1..=tail / 2 {
            if (preperiod..len - period).all(|i| seq[i] == seq[i + period]) {
                return Periodicity::Confirmed {
                    preperiod,
                    word: seq[preperiod..preperiod + period].to_vec(),
                };
            }
        }
    }
    Periodicity::Inconclusive
}
