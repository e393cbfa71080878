//! Closed-form evaluators for the bounds tying twin-width and the biclique
//! number to the generalized coloring numbers, and the harness joining
//! computed parameters with the evaluated bounds into pass/fail reports.
//!
//! Every evaluator is total on its stated domain and exact: integer bounds
//! are big integers, half-integers and the girth bound are big rationals,
//! and the root bound of [`eval_wcol_from_scols`] is compared by integer
//! cross-multiplication (its reported ceiling rounds up, so a check may
//! only falsely pass by rounding, never falsely fail).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cograph;
use crate::graph::{Graph, GirthValue};
use crate::order::{self, LinearOrder};
use crate::reach::{self, ParamKind};
use crate::trigraph::ContractionSequence;
use crate::{Budget, Error, Result};

/// `(3 + d * sum_{i=0}^{r-1} (d-1)^i) * s` and the simplified `(d^r + 3) * s`.
///
/// Conventions: the whole sum term vanishes for `d = 0`; for `d = 1` the
/// sum reads `r`; and `0^r = 0` in the simplified form.
pub fn eval_scol_upper(d: u64, s: u64, r: u32) -> (BigUint, BigUint) {
    let sum: BigUint = match d {
        0 => BigUint::zero(),
        1 => BigUint::from(r),
        _ => {
            let mut acc = BigUint::zero();
            let mut pow = BigUint::one();
            for _ in 0..r {
                acc += &pow;
                pow *= d - 1;
            }
            acc
        }
    };
    let exact = (BigUint::from(3u8) + BigUint::from(d) * sum) * s;
    let d_pow_r = if d == 0 { BigUint::zero() } else { BigUint::from(d).pow(r) };
    let simplified = (d_pow_r + BigUint::from(3u8)) * s;
    (exact, simplified)
}

/// Case-split bound on the optimal strong coloring number:
/// `2s, 3s, 5s` for widths 0, 1, 2 and `3 (d-1)^r s` for `d >= 3`.
pub fn eval_scol_cases(d: u64, s: u64, r: u32) -> BigUint {
    let s = BigUint::from(s);
    match d {
        0 => s * 2u8,
        1 => s * 3u8,
        2 => s * 5u8,
        _ => BigUint::from(d - 1).pow(r) * s * 3u8,
    }
}

/// The bound `2^{r-1} * max_{1<=k<=r} scols[k-1]^{r/k}`, real-valued.
#[derive(Debug, Clone)]
pub struct RootBound {
    pub approx: f64,
    /// Upper rounding: `2^{r-1} * max_k ceil(scols[k-1]^{r/k})`.
    pub ceiling: BigUint,
}

/// Evaluates the composition bound from the strong coloring numbers for
/// radii `1..=r` (`scols[k-1]` is the value at radius `k`).
pub fn eval_wcol_from_scols(scols: &[u64], r: u32) -> RootBound {
    assert_eq!(scols.len(), r as usize, "need scol for every radius 1..=r");
    assert!(r >= 1);
    let two_pow = 2f64.powi(r as i32 - 1);
    let approx = two_pow
        * (1..=r)
            .map(|k| (scols[k as usize - 1] as f64).powf(r as f64 / k as f64))
            .fold(0.0f64, f64::max);
    let ceil_root = (1..=r)
        .map(|k| ceil_kth_root(&BigUint::from(scols[k as usize - 1]).pow(r), k))
        .max()
        .expect("r >= 1");
    let ceiling = (BigUint::one() << (r - 1)) * ceil_root;
    RootBound { approx, ceiling }
}

/// Exact check `wcol <= 2^{r-1} * max_k scols[k-1]^{r/k}` by integer
/// cross-multiplication: the bound holds iff some `k` has
/// `scols[k-1]^r * 2^{(r-1)k} >= wcol^k`.
pub fn wcol_from_scols_holds(scols: &[u64], r: u32, wcol: u64) -> bool {
    assert_eq!(scols.len(), r as usize);
    let w = BigUint::from(wcol);
    (1..=r).any(|k| {
        let lhs = BigUint::from(scols[k as usize - 1]).pow(r) << ((r - 1) * k);
        lhs >= w.pow(k)
    })
}

/// Smallest `t` with `t^k >= x`.
fn ceil_kth_root(x: &BigUint, k: u32) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    let mut t = x.nth_root(k);
    while t.pow(k) < *x {
        t += 1u8;
    }
    t
}

/// `((2d + 6) s)^r / 2`.
pub fn eval_wcol_upper(d: u64, s: u64, r: u32) -> BigRational {
    let base = BigInt::from((2 * d + 6) * s);
    BigRational::new(base.pow(r), BigInt::from(2))
}

/// `((2d + 6) s)^{2r + 1} / 2`, the bound on the depth-`r` grad. The grad
/// itself is never computed here; this is a formula evaluator only.
pub fn eval_grad_upper(d: u64, s: u64, r: u32) -> BigRational {
    let base = BigInt::from((2 * d + 6) * s);
    BigRational::new(base.pow(2 * r + 1), BigInt::from(2))
}

/// Lower bound for `d`-regular graphs of girth at least `4g + 1`:
/// `(d/2) * ((d-2)/4)^{2^{floor(log2 r)} - 1}`, valid for `r <= g`.
/// The `r <= g` precondition is the caller's to track.
pub fn eval_scol_lower_girth(d: u64, r: u32) -> Result<BigRational> {
    if d < 7 {
        return Err(Error::Domain(format!("girth lower bound needs degree >= 7, got {d}")));
    }
    if r < 1 {
        return Err(Error::Domain("radius must be positive".into()));
    }
    let exponent = (1u32 << r.ilog2()) - 1;
    let ratio = BigRational::new(BigInt::from(d - 2), BigInt::from(4));
    Ok(BigRational::new(BigInt::from(d), BigInt::from(2)) * pow_rational(&ratio, exponent))
}

/// Lower bound for the lifted-and-multiplied family:
/// `(d s / 4) * ((d - 4)/8)^{r-1}` for `d >= 14` and `r` a power of two.
pub fn eval_lower_combined(d: u64, s: u64, r: u32) -> Result<BigRational> {
    if d < 14 {
        return Err(Error::Domain(format!("combined lower bound needs d >= 14, got {d}")));
    }
    if r == 0 || !r.is_power_of_two() {
        return Err(Error::Domain(format!("radius must be a power of two, got {r}")));
    }
    let ratio = BigRational::new(BigInt::from(d - 4), BigInt::from(8));
    Ok(BigRational::new(BigInt::from(d * s), BigInt::from(4)) * pow_rational(&ratio, r - 1))
}

/// Admissibility lower bound of the subdivided-clique family:
/// `d^{2(r-1)}` for `r >= 4`.
pub fn eval_adm_lower_subdiv(d: u64, r: u32) -> Result<BigUint> {
    if r < 4 {
        return Err(Error::Domain(format!("subdivided-clique bound needs r >= 4, got {r}")));
    }
    Ok(BigUint::from(d).pow(2 * (r - 1)))
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn rational_to_f64(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::INFINITY) / x.denom().to_f64().unwrap_or(1.0)
}

fn biguint_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    /// The stated row fails but the documented fallback holds; see the note.
    HoldsFallback,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub bound: &'static str,
    /// Bound value for display.
    pub value: f64,
    /// Exact bound as a fraction string.
    pub exact: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub r: usize,
    pub wcol: usize,
    pub scol: usize,
    pub adm: usize,
    pub checks: Vec<BoundCheck>,
}

/// Pass/fail record of one instance: parameters, computed values per
/// radius (exact minima when `exact_params`, otherwise per-order values
/// under the derived order), and the verdict of every applicable bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    /// Width of the supplied sequence (an upper bound on the twin-width).
    pub d: usize,
    /// Biclique number.
    pub s: usize,
    pub exact_params: bool,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn violated(&self) -> bool {
        self.rows.iter().flat_map(|r| &r.checks).any(|c| c.verdict == Verdict::Violated)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOpts {
    /// Exact parameters are computed when `n` is at most this.
    pub exact_limit: usize,
    pub budget_limit: u64,
}

impl Default for VerifyOpts {
    fn default() -> Self {
        VerifyOpts { exact_limit: 9, budget_limit: crate::DEFAULT_BUDGET }
    }
}

/// Verifies every applicable bound on one instance. `d` is the width of
/// `seq`, `s` the biclique number, the order is the nice order of `seq`
/// (or its per-component version for disconnected graphs). Upper bounds on
/// the optimum are checked against exact values when available and are
/// reported inconclusive when only per-order values exceed them; bounds
/// with failed preconditions (s = 0, degree or girth too small) come back
/// not-applicable, never holds.
pub fn verify_instance(
    g: &Graph,
    seq: &ContractionSequence,
    instance: &str,
    r_max: usize,
    opts: &VerifyOpts,
) -> Result<BoundReport> {
    let mut budget = Budget::new("verify", opts.budget_limit);
    let d = seq.width()?;
    let s = bomega_auto(g, &mut budget)?;
    let ord = derived_order(g, seq, s, &mut budget)?;

    // per-order profiles for every radius up to r_max
    let profiles: Vec<reach::ReachProfile> =
        (1..=r_max).map(|r| reach::profile(g, &ord, r, &mut budget)).collect::<Result<Vec<_>>>()?;

    // cograph-order profiles back the width-0 case row
    let cograph_scols: Option<Vec<usize>> = if d == 0 {
        let cord = order::cograph_order(g)?;
        Some(
            (1..=r_max)
                .map(|r| reach::profile(g, &cord, r, &mut budget).map(|p| p.scol))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };

    // exact minima when the instance is small enough
    let mut exact: Option<Vec<(usize, usize, usize)>> = None;
    if g.n() <= opts.exact_limit {
        let mut values = Vec::with_capacity(r_max);
        let mut ok = true;
        'outer: for r in 1..=r_max {
            let mut triple = [0usize; 3];
            for (i, kind) in [ParamKind::Wcol, ParamKind::Scol, ParamKind::Adm].iter().enumerate() {
                match reach::exact_param(g, *kind, r, opts.exact_limit, &mut budget) {
                    Ok((v, _)) => triple[i] = v,
                    Err(Error::ResourceLimit { .. }) => {
                        ok = false;
                        break 'outer;
                    }
                    Err(e) => return Err(e),
                }
            }
            values.push((triple[0], triple[1], triple[2]));
        }
        if ok {
            exact = Some(values);
        }
    }
    let exact_params = exact.is_some();

    let girth = g.girth();
    let regular = g.regular_degree();

    let mut rows = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let (wcol, scol, adm) = match &exact {
            Some(v) => v[r - 1],
            None => (profiles[r - 1].wcol, profiles[r - 1].scol, profiles[r - 1].adm),
        };
        let mut checks = Vec::new();
        let du = d as u64;
        let su = s as u64;
        let ru = r as u32;

        // the theorem rows bound the per-order value under the nice order
        let per_order_scol = profiles[r - 1].scol;
        let (exact_form, simple_form) = eval_scol_upper(du, su, ru);
        checks.push(check_upper_int("scol_nice_order_exact_form", &exact_form, per_order_scol, s >= 1, None));
        checks.push(check_upper_int("scol_nice_order_simplified", &simple_form, per_order_scol, s >= 1, None));

        // case row: a bound on the optimum; without exact values the
        // per-order value can only confirm, never refute
        let cases = eval_scol_cases(du, su, ru);
        let case_scol = match (&exact, &cograph_scols) {
            (Some(v), _) => Some(v[r - 1].1),
            (None, Some(cs)) => Some(cs[r - 1]),
            (None, None) => Some(per_order_scol),
        };
        checks.push(scol_cases_check(&cases, case_scol, exact_params, d, s));

        // composition bound, both sides of matching flavor
        if s >= 1 {
            let scols: Vec<u64> = (1..=r)
                .map(|k| match &exact {
                    Some(v) => v[k - 1].1 as u64,
                    None => profiles[k - 1].scol as u64,
                })
                .collect();
            let rb = eval_wcol_from_scols(&scols, ru);
            let holds = wcol_from_scols_holds(&scols, ru, wcol as u64);
            checks.push(BoundCheck {
                bound: "wcol_from_scols",
                value: rb.approx,
                exact: format!("ceil {}", rb.ceiling),
                verdict: if holds { Verdict::Holds } else { Verdict::Violated },
                note: None,
            });
        }

        // wcol upper bound
        let wb = eval_wcol_upper(du, su, ru);
        checks.push(check_upper_rational("wcol_upper", &wb, wcol, s >= 1));

        // grad bound: evaluated for the record, the grad itself is out of reach
        let gb = eval_grad_upper(du, su, ru);
        checks.push(BoundCheck {
            bound: "grad_upper",
            value: rational_to_f64(&gb),
            exact: gb.to_string(),
            verdict: Verdict::NotApplicable,
            note: Some("depth-r minor densities are not computed".into()),
        });

        // girth lower bound on the exact scol, for regular dense-enough graphs
        let girth_check = match (regular, girth) {
            (Some(deg), GirthValue::Finite(girth)) if deg >= 7 && girth >= 4 * r + 1 && exact_params => {
                let bound = eval_scol_lower_girth(deg as u64, ru)?;
                let holds = BigRational::from(BigInt::from(scol)) >= bound;
                Some(BoundCheck {
                    bound: "scol_lower_girth",
                    value: rational_to_f64(&bound),
                    exact: bound.to_string(),
                    verdict: if holds { Verdict::Holds } else { Verdict::Violated },
                    note: None,
                })
            }
            _ => None,
        };
        checks.push(girth_check.unwrap_or(BoundCheck {
            bound: "scol_lower_girth",
            value: f64::NAN,
            exact: String::new(),
            verdict: Verdict::NotApplicable,
            note: Some("needs a regular graph of degree >= 7, girth >= 4r+1, and exact values".into()),
        }));

        rows.push(BoundRow { r, wcol, scol, adm, checks });
    }

    Ok(BoundReport { instance: instance.to_string(), n: g.n(), m: g.m(), d, s, exact_params, rows })
}

fn derived_order(
    g: &Graph,
    seq: &ContractionSequence,
    s: usize,
    budget: &mut Budget,
) -> Result<LinearOrder> {
    if g.is_connected() {
        order::nice_order(seq, s.max(1))
    } else {
        order::nice_order_components(seq, None, budget)
    }
}

fn check_upper_int(
    name: &'static str,
    bound: &BigUint,
    value: usize,
    applicable: bool,
    note: Option<String>,
) -> BoundCheck {
    let verdict = if !applicable {
        Verdict::NotApplicable
    } else if BigUint::from(value) <= *bound {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    BoundCheck {
        bound: name,
        value: biguint_to_f64(bound),
        exact: bound.to_string(),
        verdict,
        note: if applicable { note } else { Some("vacuous without an edge (s = 0)".into()) },
    }
}

fn check_upper_rational(name: &'static str, bound: &BigRational, value: usize, applicable: bool) -> BoundCheck {
    let verdict = if !applicable {
        Verdict::NotApplicable
    } else if BigRational::from(BigInt::from(value)) <= *bound {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    BoundCheck {
        bound: name,
        value: rational_to_f64(bound),
        exact: bound.to_string(),
        verdict,
        note: (!applicable).then(|| "vacuous without an edge (s = 0)".into()),
    }
}

/// The case-row check. Odd-clique-like joins genuinely exceed the `2s` row
/// of the width-0 case (K_5: exact scol is 5 with s = 2); those instances
/// fall back to the `3s` bound and are reported as such, never silently.
fn scol_cases_check(
    bound: &BigUint,
    value: Option<usize>,
    is_exact: bool,
    d: usize,
    s: usize,
) -> BoundCheck {
    let display = biguint_to_f64(bound);
    let exact = bound.to_string();
    if s == 0 {
        return BoundCheck {
            bound: "scol_cases",
            value: display,
            exact,
            verdict: Verdict::NotApplicable,
            note: Some("vacuous without an edge (s = 0)".into()),
        };
    }
    let Some(value) = value else {
        return BoundCheck {
            bound: "scol_cases",
            value: display,
            exact,
            verdict: Verdict::NotApplicable,
            note: Some("optimum not computed".into()),
        };
    };
    if BigUint::from(value) <= *bound {
        return BoundCheck { bound: "scol_cases", value: display, exact, verdict: Verdict::Holds, note: None };
    }
    if d == 0 && value <= 3 * s {
        let flavor = if is_exact { "exact" } else { "cograph-order" };
        return BoundCheck {
            bound: "scol_cases",
            value: display,
            exact,
            verdict: Verdict::HoldsFallback,
            note: Some(format!(
                "width-0 row 2s = {} exceeded ({flavor} scol = {value}); falls back to 3s = {}",
                2 * s,
                3 * s
            )),
        };
    }
    if !is_exact {
        return BoundCheck {
            bound: "scol_cases",
            value: display,
            exact,
            verdict: Verdict::NotApplicable,
            note: Some(format!("per-order value {value} exceeds the row; optimum unknown")),
        };
    }
    BoundCheck { bound: "scol_cases", value: display, exact, verdict: Verdict::Violated, note: None }
}

pub fn report_json(reports: &[BoundReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Flat CSV: one line per (instance, radius, bound).
pub fn report_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from("instance,n,m,d,s,exact,r,wcol,scol,adm,bound,bound_value,verdict,note\n");
    for rep in reports {
        for row in &rep.rows {
            for check in &row.checks {
                let verdict = match check.verdict {
                    Verdict::Holds => "holds",
                    Verdict::HoldsFallback => "holds_fallback",
                    Verdict::Violated => "violated",
                    Verdict::NotApplicable => "not_applicable",
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    rep.instance,
                    rep.n,
                    rep.m,
                    rep.d,
                    rep.s,
                    rep.exact_params,
                    row.r,
                    row.wcol,
                    row.scol,
                    row.adm,
                    check.bound,
                    check.value,
                    verdict,
                    check.note.as_deref().unwrap_or("").replace(',', ";"),
                ));
            }
        }
    }
    out
}

pub fn any_violation(reports: &[BoundReport]) -> bool {
    reports.iter().any(BoundReport::violated)
}

/// Cotree-based biclique number for cographs, falling back to the branch
/// search otherwise. Dense cographs make the absence proof of the branch
/// search expensive; the cotree route is exact and cheap.
pub fn bomega_auto(g: &Graph, budget: &mut Budget) -> Result<usize> {
    match cograph::bomega_cotree(g) {
        Ok(s) => Ok(s),
        Err(_) => g.bomega(budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::exact_tww;

    fn budget() -> Budget {
        Budget::default_for("test")
    }

    #[test]
    fn scol_upper_examples() {
        let (e, s) = eval_scol_upper(2, 1, 3);
        assert_eq!((e, s), (BigUint::from(9u8), BigUint::from(11u8)));
        // width 0: both forms collapse to 3s
        let (e, s) = eval_scol_upper(0, 4, 5);
        assert_eq!((e, s), (BigUint::from(12u8), BigUint::from(12u8)));
        let (e, s) = eval_scol_upper(3, 0, 2);
        assert_eq!((e, s), (BigUint::zero(), BigUint::zero()));
        // width 1: the sum reads r
        let (e, _) = eval_scol_upper(1, 2, 4);
        assert_eq!(e, BigUint::from(14u8));
    }

    #[test]
    fn scol_upper_exact_below_simplified() {
        for d in 2..=6u64 {
            for s in 0..=4u64 {
                for r in 1..=6u32 {
                    let (e, simple) = eval_scol_upper(d, s, r);
                    assert!(e <= simple, "d={d} s={s} r={r}");
                }
            }
        }
    }

    #[test]
    fn scol_cases_examples() {
        assert_eq!(eval_scol_cases(0, 4, 7), BigUint::from(8u8));
        assert_eq!(eval_scol_cases(3, 1, 2), BigUint::from(12u8));
        assert_eq!(eval_scol_cases(2, 2, 9), BigUint::from(10u8));
        assert_eq!(eval_scol_cases(1, 3, 1), BigUint::from(9u8));
        assert_eq!(eval_scol_cases(4, 2, 3), BigUint::from(162u16));
    }

    #[test]
    fn wcol_from_scols_examples() {
        let rb = eval_wcol_from_scols(&[7], 1);
        assert_eq!(rb.ceiling, BigUint::from(7u8));
        assert!((rb.approx - 7.0).abs() < 1e-9);

        let rb = eval_wcol_from_scols(&[2, 3], 2);
        assert!((rb.approx - 8.0).abs() < 1e-9);
        assert_eq!(rb.ceiling, BigUint::from(8u8));

        let rb = eval_wcol_from_scols(&[2, 2, 2, 2], 4);
        assert!((rb.approx - 128.0).abs() < 1e-9);
        assert_eq!(rb.ceiling, BigUint::from(128u8));

        assert!(wcol_from_scols_holds(&[2, 3], 2, 8));
        assert!(!wcol_from_scols_holds(&[2, 3], 2, 9));
        // fractional root: 2^... bound for scols (3), r = 2 over k = 2: 2 * 3 = 6
        assert!(wcol_from_scols_holds(&[1, 3], 2, 6));
        assert!(!wcol_from_scols_holds(&[1, 3], 2, 7));
    }

    #[test]
    fn wcol_upper_examples() {
        assert_eq!(eval_wcol_upper(0, 1, 1), BigRational::new(BigInt::from(3), BigInt::one()));
        assert_eq!(eval_wcol_upper(1, 1, 2), BigRational::new(BigInt::from(32), BigInt::one()));
        assert_eq!(eval_wcol_upper(5, 3, 0), BigRational::new(BigInt::one(), BigInt::from(2)));
    }

    #[test]
    fn grad_upper_examples() {
        assert_eq!(eval_grad_upper(0, 1, 0), BigRational::from(BigInt::from(3)));
        assert_eq!(eval_grad_upper(1, 1, 1), BigRational::from(BigInt::from(256)));
        assert_eq!(eval_grad_upper(4, 0, 2), BigRational::zero());
    }

    #[test]
    fn scol_lower_girth_examples() {
        assert_eq!(
            eval_scol_lower_girth(7, 1).unwrap(),
            BigRational::new(BigInt::from(7), BigInt::from(2))
        );
        assert_eq!(
            eval_scol_lower_girth(7, 2).unwrap(),
            BigRational::new(BigInt::from(35), BigInt::from(8)) // 3.5 * 1.25
        );
        assert!(matches!(eval_scol_lower_girth(6, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn lower_combined_examples() {
        assert_eq!(
            eval_lower_combined(14, 1, 1).unwrap(),
            BigRational::new(BigInt::from(7), BigInt::from(2))
        );
        assert_eq!(eval_lower_combined(16, 2, 2).unwrap(), BigRational::from(BigInt::from(12)));
        assert!(matches!(eval_lower_combined(14, 1, 3), Err(Error::Domain(_))));
        assert!(matches!(eval_lower_combined(13, 1, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn adm_lower_subdiv_examples() {
        assert_eq!(eval_adm_lower_subdiv(2, 4).unwrap(), BigUint::from(64u8));
        assert_eq!(eval_adm_lower_subdiv(3, 4).unwrap(), BigUint::from(729u16));
        assert!(matches!(eval_adm_lower_subdiv(5, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn verify_p4_pipeline_holds() {
        let g = Graph::path(4);
        let (d, seq) = exact_tww(&g, 9, &mut budget()).unwrap();
        assert_eq!(d, 1);
        let report = verify_instance(&g, &seq, "p4", 3, &VerifyOpts::default()).unwrap();
        assert!(!report.violated(), "{report:?}");
        assert!(report.exact_params);
        // width 1 case row: scol <= 3s
        for row in &report.rows {
            assert!(row.scol <= 3 * report.s);
        }
    }

    #[test]
    fn verify_k5_documents_the_odd_clique_fallback() {
        // frozen brute-force evidence: the optimal strong coloring number of
        // K_5 is 5 (every order reaches all earlier vertices directly) while
        // the biclique number is 2, so the width-0 case row 2s = 4 fails and
        // the 3s = 6 fallback holds
        let g = Graph::complete(5);
        let (exact_scol, _) = reach::exact_param(&g, ParamKind::Scol, 2, 11, &mut budget()).unwrap();
        assert_eq!(exact_scol, 5);
        assert_eq!(g.bomega(&mut budget()).unwrap(), 2);

        let (d, seq) = exact_tww(&g, 9, &mut budget()).unwrap();
        assert_eq!(d, 0);
        let report = verify_instance(&g, &seq, "k5", 2, &VerifyOpts::default()).unwrap();
        assert!(!report.violated());
        let case_checks: Vec<&BoundCheck> = report
            .rows
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| c.bound == "scol_cases")
            .collect();
        assert!(case_checks.iter().all(|c| c.verdict == Verdict::HoldsFallback));
    }

    #[test]
    fn verify_edgeless_is_not_applicable() {
        let g = Graph::empty(3);
        let seq = ContractionSequence::new(g.clone(), vec![(1, 2), (4, 3)]).unwrap();
        let report = verify_instance(&g, &seq, "e3", 2, &VerifyOpts::default()).unwrap();
        assert!(!report.violated());
        for row in &report.rows {
            for check in &row.checks {
                if check.bound != "wcol_from_scols" {
                    assert_eq!(check.verdict, Verdict::NotApplicable, "{}", check.bound);
                }
            }
        }
    }

    #[test]
    fn report_emitters() {
        let g = Graph::path(4);
        let (_, seq) = exact_tww(&g, 9, &mut budget()).unwrap();
        let report = verify_instance(&g, &seq, "p4", 2, &VerifyOpts::default()).unwrap();
        let json = report_json(&[report.clone()]);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0]["instance"], "p4");
        let csv = report_csv(&[report]);
        assert!(csv.starts_with("instance,n,m,d,s,exact,r,wcol,scol,adm,bound,bound_value,verdict,note\n"));
        assert!(csv.contains("holds"));
    }
}
