//! The three-case quadratic transformation on canonical equations
//! `F = x^d / (u + x^k v F)` and the chain iteration that turns it into a
//! Hankel determinant recurrence.
//!
//! Case selection:
//! * `u(0) != 1` — rescale `G = u(0) F`; determinants pick up `u(0)^n`.
//! * `u(0) = 1, k = 1` — form the transfer equation for `G`, strip its
//!   constant term (`tau(F) = (G - G(0)) / x`) and recanonicalize; the
//!   Hankel index drops by `d + 1` with sign `(-1)^{binom(d+1,2)}`.
//! * `u(0) = 1, k >= 2` — same drop and sign, with `tau(F) = G` directly.
//!
//! Iterating until an equation structurally repeats yields
//! `H_n(F_a) = sigma * H_{n - Delta}(F_a)` for the cycling equation, which
//! [`recurrence_to_sequence`] unwinds back to the original series.

use num_traits::One;
use thiserror::Error;

use crate::coeff::Coeff;
use crate::exact::{
    canonicalize_linear_fractional, moebius_solve, solve_quadratic, ExactError, Poly, QuadEq,
    RatFun, Series,
};
use crate::hankel::{hankel_det, HankelError, HankelSpec};
use crate::{QSeries, Rat};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TauError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("no cycle found within {0} steps")]
    NoCycle(usize),
    #[error("a rescale step inside the cycle has scale {0}; drop/sign recurrences need scale 1")]
    ScaledCycle(String),
    #[error("initial values too short: need {needed}, got {got}")]
    MissingInit { needed: usize, got: usize },
    #[error("index {0} of the original sequence reaches below the chain start")]
    IndexUnderflow(i64),
    #[error(transparent)]
    Hankel(#[from] HankelError),
    #[error("determinant relation fails at step {step}, n = {n}: {lhs} vs {rhs}")]
    StepRelation {
        step: usize,
        n: usize,
        lhs: Box<Rat>,
        rhs: Box<Rat>,
    },
}

/// Which of the three transformation cases fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Rescale,
    ShiftSingle,
    ShiftHigher,
}

impl StepKind {
    pub fn label(&self) -> &'static str {
        match self {
            StepKind::Rescale => "rescale",
            StepKind::ShiftSingle => "shift-k1",
            StepKind::ShiftHigher => "shift-k2",
        }
    }
}

/// Index bookkeeping for one step:
/// `H_n(F) = sign * scale^{-n} * H_{n - drop}(tau(F))`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRelation<C: Coeff> {
    pub drop: usize,
    pub sign: i64,
    pub scale: C,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauStep<C: Coeff> {
    pub next: QuadEq<C>,
    pub relation: StepRelation<C>,
    pub kind: StepKind,
}

/// Unique split `u = u_L + x^{d+2} u_H` with `deg u_L <= d + 1`.
pub fn decompose_u<C: Coeff>(u: &RatFun<C>, d: usize) -> Result<(Poly<C>, RatFun<C>), ExactError> {
    let low = u.series(d + 1)?;
    let u_l = Poly::new(low.coeffs().to_vec());
    let diff = u - &RatFun::from_poly(u_l.clone());
    debug_assert!(diff.is_zero() || diff.valuation().unwrap() >= d as i64 + 2);
    let u_h = diff.mul_xpow(-(d as i64 + 2));
    Ok((u_l, u_h))
}

fn parity_sign(d: usize) -> i64 {
    // (-1)^{binom(d+1, 2)}
    if ((d + 1) * d / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn x_pow<C: Coeff>(e: usize) -> RatFun<C> {
    RatFun::from_poly(Poly::monomial(C::one(), e))
}

/// Apply one transformation step.
pub fn tau_step<C: Coeff>(eq: &QuadEq<C>) -> Result<TauStep<C>, ExactError> {
    let u0 = eq.u0();
    if !u0.is_one() {
        // Case: rescale. G = u(0) F satisfies
        // G = x^d / (u(0)^{-1} u + x^k u(0)^{-2} v G).
        let inv = C::one() / u0.clone();
        let u = eq.u() * &RatFun::constant(inv.clone());
        let v = eq.v() * &RatFun::constant(inv.clone() * inv);
        let next = QuadEq::new(eq.d(), eq.k(), u, v)?;
        return Ok(TauStep {
            next,
            relation: StepRelation {
                drop: 0,
                sign: 1,
                scale: u0,
            },
            kind: StepKind::Rescale,
        });
    }

    let d = eq.d();
    let (u_l, u_h) = decompose_u(eq.u(), d)?;
    let u_l = RatFun::from_poly(u_l);
    let w = &u_l - &u_h.mul_xpow(d as i64 + 2);
    let relation = StepRelation {
        drop: d + 1,
        sign: parity_sign(d),
        scale: C::one(),
    };

    if eq.k() == 1 {
        // Transfer equation G = (-v - x u_L u_H) / (W - x^{d+1} G); strip
        // the constant term via G = x T + g0 and clear denominators:
        //   x^{d+3} T^2 + (2 g0 x^{d+2} - x W) T
        //     - (g0 W - g0^2 x^{d+1} + v + x u_L u_H) = 0
        // so T = num / (den + coef * T) with the pieces below.
        let g0 = -(eq.v().eval0()?) / u_l.eval0()?;
        let g0_rf = RatFun::constant(g0.clone());
        let num = &(&(&g0_rf * &w) - &(&g0_rf * &g0_rf).mul_xpow(d as i64 + 1))
            + &(eq.v() + &(&u_l * &u_h).mul_xpow(1));
        let two_g0 = RatFun::constant(C::from_int(2) * g0);
        let den = &(&two_g0 * &x_pow(d + 2)) - &w.mul_xpow(1);
        let coef = x_pow(d + 3);
        let next = canonicalize_linear_fractional(&num, &den, &coef)?;
        Ok(TauStep {
            next,
            relation,
            kind: StepKind::ShiftSingle,
        })
    } else {
        // G = (-x^{k-2} v - u_L u_H) / (W - x^{d+2} G).
        let num = &(-&eq.v().mul_xpow(eq.k() as i64 - 2)) - &(&u_l * &u_h);
        let den = w;
        let coef = -&x_pow(d + 2);
        let next = canonicalize_linear_fractional(&num, &den, &coef)?;
        Ok(TauStep {
            next,
            relation,
            kind: StepKind::ShiftHigher,
        })
    }
}

/// Series of `tau(F)`, computed from the raw transfer equation rather than
/// from the recanonicalized result, so the two can be compared.
pub fn tau_series_direct<C: Coeff>(eq: &QuadEq<C>, order: usize) -> Result<Series<C>, ExactError> {
    let u0 = eq.u0();
    if !u0.is_one() {
        return Ok(solve_quadratic(eq, order)?.scale(&u0));
    }
    let d = eq.d();
    let (u_l, u_h) = decompose_u(eq.u(), d)?;
    let u_l = RatFun::from_poly(u_l);
    let w = &u_l - &u_h.mul_xpow(d as i64 + 2);
    if eq.k() == 1 {
        // G = (-v - x u_L u_H) / (W - x^{d+1} G), tau(F) = (G - G(0)) / x.
        let num = -&(eq.v() + &(&u_l * &u_h).mul_xpow(1));
        let coef = -&x_pow(d + 1);
        let g = moebius_solve(&num, &w, &coef, order)?;
        let g0 = -(eq.v().eval0()?) / u_l.eval0()?;
        debug_assert!(g.coeff(0) == g0);
        let centered = g.sub(&Series::monomial(g0, 0, order))?;
        Ok(centered.div_monomial(1))
    } else {
        let num = &(-&eq.v().mul_xpow(eq.k() as i64 - 2)) - &(&u_l * &u_h);
        let coef = -&x_pow(d + 2);
        moebius_solve(&num, &w, &coef, order)
    }
}

/// A structural repeat in the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    /// Index of the equation the chain returns to.
    pub start: usize,
    /// Total index drop around the cycle.
    pub delta: usize,
    /// Product of signs around the cycle.
    pub sigma: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport<C: Coeff> {
    /// `equations[0]` is the input; `equations[i+1] = tau(equations[i])`.
    pub equations: Vec<QuadEq<C>>,
    pub relations: Vec<StepRelation<C>>,
    pub kinds: Vec<StepKind>,
    pub cycle: Option<Cycle>,
}

impl<C: Coeff> ChainReport<C> {
    pub fn steps_taken(&self) -> usize {
        self.relations.len()
    }
}

/// Iterate the transformation, comparing each new equation against all
/// previous ones (structural equality of normalized rational functions).
/// Stops at the first repeat; reports no cycle if `max_steps` is exhausted.
pub fn tau_chain<C: Coeff>(eq0: QuadEq<C>, max_steps: usize) -> Result<ChainReport<C>, TauError> {
    let mut report = ChainReport {
        equations: vec![eq0],
        relations: Vec::new(),
        kinds: Vec::new(),
        cycle: None,
    };
    for _ in 0..max_steps {
        let step = tau_step(report.equations.last().unwrap())?;
        report.relations.push(step.relation);
        report.kinds.push(step.kind);
        let repeat = report.equations.iter().position(|e| *e == step.next);
        report.equations.push(step.next);
        if let Some(start) = repeat {
            let mut delta = 0usize;
            let mut sigma = 1i64;
            for rel in &report.relations[start..] {
                delta += rel.drop;
                sigma *= rel.sign;
                if !rel.scale.is_one() {
                    return Err(TauError::ScaledCycle(format!("{}", rel.scale)));
                }
            }
            report.cycle = Some(Cycle {
                start,
                delta,
                sigma,
            });
            break;
        }
    }
    Ok(report)
}

/// Extend the cycle recurrence and map it back through the pre-cycle steps.
///
/// `init` supplies `H_0 .. H_{Delta-1}` of the cycling equation; the output
/// is `H_1 .. H_{n_max}` of the original equation.
pub fn recurrence_to_sequence<C: Coeff>(
    report: &ChainReport<C>,
    init: &[C],
    n_max: usize,
) -> Result<Vec<C>, TauError> {
    let cycle = report
        .cycle
        .clone()
        .ok_or(TauError::NoCycle(report.steps_taken()))?;
    if init.len() < cycle.delta {
        return Err(TauError::MissingInit {
            needed: cycle.delta,
            got: init.len(),
        });
    }
    let value_in_cycle = |idx: usize| -> C {
        let q = idx / cycle.delta;
        let j = idx % cycle.delta;
        let flip = cycle.sigma < 0 && q % 2 == 1;
        if flip {
            -init[j].clone()
        } else {
            init[j].clone()
        }
    };
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut idx = n as i64;
        let mut acc = C::one();
        for rel in &report.relations[..cycle.start] {
            if rel.sign < 0 {
                acc = -acc;
            }
            if !rel.scale.is_one() {
                // H_n(F) = sign * scale^{-n} * H_{n-drop}(next)
                let mut p = C::one();
                for _ in 0..idx {
                    p = p * rel.scale.clone();
                }
                acc = acc / p;
            }
            idx -= rel.drop as i64;
            if idx < 0 {
                return Err(TauError::IndexUnderflow(idx));
            }
        }
        out.push(acc * value_in_cycle(idx as usize));
    }
    Ok(out)
}

/// Numeric check of the per-step determinant relation on solved series:
/// `H_n(F) = sign * scale^{-n} * H_{n - drop}(tau F)` for all feasible
/// `1 <= n <= n_max`, with `H_0 = 1` by convention.
pub fn check_step_determinants(
    f_cur: &QSeries,
    f_next: &QSeries,
    relation: &StepRelation<Rat>,
    step: usize,
    n_max: usize,
) -> Result<(), TauError> {
    let h = |s: &QSeries, n: usize| -> Result<Rat, HankelError> {
        hankel_det(&HankelSpec {
            series: s,
            shift: 0,
            n,
        })
    };
    for n in 1..=n_max {
        if n < relation.drop {
            continue;
        }
        let lhs = h(f_cur, n)?;
        let mut rhs = h(f_next, n - relation.drop)?;
        if relation.sign < 0 {
            rhs = -rhs;
        }
        if !relation.scale.is_one() {
            let mut p = crate::rat(1);
            for _ in 0..n {
                p *= &relation.scale;
            }
            rhs /= p;
        }
        if lhs != rhs {
            return Err(TauError::StepRelation {
                step,
                n,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            });
        }
    }
    Ok(())
}
