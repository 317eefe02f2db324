//! Textual specs for height sets and series.
//!
//! Height sets: `finite:1,3,5` (empty list allowed: `finite:`) or
//! `periodic:m=5,V=1,2,4`. Series: `fmr:m=5,r=3` for the one-residue-class
//! family, or `set:<height-set-spec>` for any avoidance set.

use dyck_hankel::paths::HeightSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSpec {
    Residue { m: u32, r: u32 },
    Set(HeightSet),
}

pub fn parse_height_set(text: &str) -> Result<HeightSet, String> {
    if let Some(rest) = text.strip_prefix("finite:") {
        let mut values = Vec::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| format!("bad height {part:?} in finite set"))?;
            values.push(v);
        }
        return Ok(HeightSet::finite(values));
    }
    if let Some(rest) = text.strip_prefix("periodic:") {
        let mut modulus: Option<u32> = None;
        let mut residues: Vec<u32> = Vec::new();
        let mut saw_v = false;
        for part in rest.split(',') {
            let part = part.trim();
            if let Some(m) = part.strip_prefix("m=") {
                modulus = Some(
                    m.parse()
                        .map_err(|_| format!("bad modulus {m:?} in periodic set"))?,
                );
            } else if let Some(v) = part.strip_prefix("V=") {
                saw_v = true;
                if !v.is_empty() {
                    residues.push(
                        v.parse()
                            .map_err(|_| format!("bad residue {v:?} in periodic set"))?,
                    );
                }
            } else if saw_v && !part.is_empty() {
                residues.push(
                    part.parse()
                        .map_err(|_| format!("bad residue {part:?} in periodic set"))?,
                );
            } else if !part.is_empty() {
                return Err(format!("unexpected token {part:?} in periodic set"));
            }
        }
        let modulus = modulus.ok_or("periodic set needs m=<modulus>")?;
        return HeightSet::periodic(modulus, residues).map_err(|e| e.to_string());
    }
    Err(format!(
        "height set must start with `finite:` or `periodic:`, got {text:?}"
    ))
}

pub fn parse_series(text: &str) -> Result<SeriesSpec, String> {
    if let Some(rest) = text.strip_prefix("fmr:") {
        let mut m: Option<u32> = None;
        let mut r: Option<u32> = None;
        for part in rest.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("m=") {
                m = Some(v.parse().map_err(|_| format!("bad m {v:?}"))?);
            } else if let Some(v) = part.strip_prefix("r=") {
                r = Some(v.parse().map_err(|_| format!("bad r {v:?}"))?);
            } else if !part.is_empty() {
                return Err(format!("unexpected token {part:?} in series spec"));
            }
        }
        return Ok(SeriesSpec::Residue {
            m: m.ok_or("series spec needs m=<modulus>")?,
            r: r.ok_or("series spec needs r=<residue>")?,
        });
    }
    if let Some(rest) = text.strip_prefix("set:") {
        return Ok(SeriesSpec::Set(parse_height_set(rest)?));
    }
    Err(format!(
        "series must start with `fmr:` or `set:`, got {text:?}"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_sets() {
        assert_eq!(parse_height_set("finite:").unwrap(), HeightSet::finite([]));
        assert_eq!(
            parse_height_set("finite:1,3,5").unwrap(),
            HeightSet::finite([1, 3, 5])
        );
    }

    #[test]
    fn periodic_sets() {
        assert_eq!(
            parse_height_set("periodic:m=5,V=1,2,4").unwrap(),
            HeightSet::periodic(5, [1, 2, 4]).unwrap()
        );
        assert_eq!(
            parse_height_set("periodic:m=3,V=").unwrap(),
            HeightSet::periodic(3, []).unwrap()
        );
    }

    #[test]
    fn series_specs() {
        assert_eq!(
            parse_series("fmr:m=5,r=3").unwrap(),
            SeriesSpec::Residue { m: 5, r: 3 }
        );
        assert!(matches!(
            parse_series("set:periodic:m=2,V=1").unwrap(),
            SeriesSpec::Set(_)
        ));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_height_set("finite:x").is_err());
        assert!(parse_height_set("periodic:V=1").is_err());
        assert!(parse_height_set("junk:1").is_err());
        assert!(parse_series("fmr:m=5").is_err());
    }
}
