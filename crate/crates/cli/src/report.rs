//! Serializable report records and their plain/CSV renderings.
//!
//! Exact integers and rationals are rendered as decimal strings (`p/q`,
//! with `/q` omitted when the denominator is 1) so consumers never face
//! 64-bit overflow.

use serde::Serialize;

use dyck_hankel::hankel::Periodicity;
use dyck_hankel::tau::{ChainReport, Cycle};
use dyck_hankel::verify::{CaseStatus, SuiteEntry, TheoremCase};
use dyck_hankel::{QRatFun, Rat};

pub fn rat_str(v: &Rat) -> String {
    v.to_string()
}

fn coeff_strings(f: &QRatFun) -> (Vec<String>, Vec<String>) {
    let num = f.num().coeffs().iter().map(rat_str).collect();
    let den = f.den().coeffs().iter().map(rat_str).collect();
    (num, den)
}

#[derive(Serialize)]
pub struct CountReport {
    pub n: usize,
    pub set: String,
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<String>>,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum PeriodicityDto {
    Confirmed {
        preperiod: usize,
        period: usize,
        word: Vec<String>,
    },
    Inconclusive,
}

impl PeriodicityDto {
    pub fn from_core(p: &Periodicity<Rat>) -> Self {
        match p {
            Periodicity::Confirmed { preperiod, word } => PeriodicityDto::Confirmed {
                preperiod: *preperiod,
                period: word.len(),
                word: word.iter().map(rat_str).collect(),
            },
            Periodicity::Inconclusive => PeriodicityDto::Inconclusive,
        }
    }

    pub fn plain(&self) -> String {
        match self {
            PeriodicityDto::Confirmed {
                preperiod,
                period,
                word,
            } => {
                let star = format!("({})*", word.join(","));
                if *preperiod == 0 {
                    format!("period={period} word={star}")
                } else {
                    format!("period={period} preperiod={preperiod} word={star}")
                }
            }
            PeriodicityDto::Inconclusive => "period=inconclusive".to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct HankelReport {
    pub series: String,
    pub k: usize,
    pub n_max: usize,
    pub values: Vec<String>,
    pub periodicity: PeriodicityDto,
}

#[derive(Serialize)]
pub struct RelationDto {
    pub drop: usize,
    pub sign: String,
    pub scale: String,
}

#[derive(Serialize)]
pub struct EquationDto {
    pub d: usize,
    pub k: usize,
    pub u_num: Vec<String>,
    pub u_den: Vec<String>,
    pub v_num: Vec<String>,
    pub v_den: Vec<String>,
}

#[derive(Serialize)]
pub struct StepDto {
    pub step: usize,
    pub case: String,
    #[serde(flatten)]
    pub equation: EquationDto,
    pub relation: RelationDto,
}

#[derive(Serialize)]
pub struct TauChainDto {
    /// Total index drop around the detected cycle, absent when no cycle
    /// was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_start: Option<usize>,
    pub initial: EquationDto,
    pub steps: Vec<StepDto>,
}

pub fn equation_dto(eq: &dyck_hankel::QQuadEq) -> EquationDto {
    let (u_num, u_den) = coeff_strings(eq.u());
    let (v_num, v_den) = coeff_strings(eq.v());
    EquationDto {
        d: eq.d(),
        k: eq.k(),
        u_num,
        u_den,
        v_num,
        v_den,
    }
}

pub fn chain_dto(chain: &ChainReport<Rat>) -> TauChainDto {
    let steps = chain
        .relations
        .iter()
        .zip(&chain.kinds)
        .enumerate()
        .map(|(i, (rel, kind))| StepDto {
            step: i + 1,
            case: kind.label().to_string(),
            equation: equation_dto(&chain.equations[i + 1]),
            relation: RelationDto {
                drop: rel.drop,
                sign: rel.sign.to_string(),
                scale: rat_str(&rel.scale),
            },
        })
        .collect();
    let cycle: Option<&Cycle> = chain.cycle.as_ref();
    TauChainDto {
        delta: cycle.map(|c| c.delta),
        sigma: cycle.map(|c| c.sigma.to_string()),
        cycle_start: cycle.map(|c| c.start),
        initial: equation_dto(&chain.equations[0]),
        steps,
    }
}

#[derive(Serialize)]
pub struct TauReport {
    pub m: u32,
    pub r: u32,
    #[serde(flatten)]
    pub chain: TauChainDto,
}

#[derive(Serialize)]
pub struct TheoremCaseDto {
    pub m: u32,
    pub r: u32,
    pub n_max: usize,
    pub predicted: Vec<String>,
    pub computed: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau_chain: Option<TauChainDto>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn theorem_case_dto(case: &TheoremCase) -> TheoremCaseDto {
    let (status, detail) = match &case.status {
        CaseStatus::Pass => ("pass".to_string(), None),
        CaseStatus::Fail { detail } => ("fail".to_string(), Some(detail.clone())),
    };
    TheoremCaseDto {
        m: case.m,
        r: case.r,
        n_max: case.n_max,
        predicted: case.predicted.iter().map(|v| v.to_string()).collect(),
        computed: case
            .computed
            .as_ref()
            .map(|seq| seq.iter().map(rat_str).collect())
            .unwrap_or_default(),
        tau_chain: case.chain.as_ref().map(chain_dto),
        status,
        first_mismatch: case.first_mismatch,
        detail,
    }
}

#[derive(Serialize)]
pub struct CheckDto {
    pub check: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn check_dto(entry: &SuiteEntry) -> CheckDto {
    let (status, detail) = match &entry.status {
        CaseStatus::Pass => ("pass".to_string(), None),
        CaseStatus::Fail { detail } => ("fail".to_string(), Some(detail.clone())),
    };
    CheckDto {
        check: entry.name.clone(),
        status,
        detail,
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub scope: String,
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<TheoremCaseDto>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckDto>,
}

/// Quote a CSV field when it contains separators.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
