//! The mod-p coefficient algebra of the covering formula for Seiberg-Witten
//! invariants: the mu coefficients, the general degree-p formula, the
//! partition-consistency engine, dimension bounds, and the specialized p = 2
//! case analyses for spheres and projective planes.

use crate::error::{Error, Result};
use crate::exactmath::gen_binomial;
use crate::exactmath::modp::ModP;
use crate::exactmath::rational::{rat, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// A monomial class in the mod-p equivariant cohomology of a point, known
/// up to the multiplicative unit `e` when `unit_flag` is set. The
/// cohomological degree is `2 * v_power + u_flag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    pub coeff: ModP,
    pub degree: u32,
    /// True when the value is only determined up to a unit in Z_p^*.
    /// Vanishing and non-vanishing are unaffected.
    pub unit_flag: bool,
}

impl EquivariantClass {
    pub fn v_power(&self) -> u32 {
        self.degree / 2
    }

    pub fn u_flag(&self) -> u32 {
        self.degree % 2
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

/// The coefficient `mu_j(n; n_0, ..., n_(p-1))`: the sum over nonnegative
/// integer tuples `(k_i)_(i != j)` with `sum k_i = n - n_j` of
/// `prod_(i != j) binom(n_i, k_i) (i - j)^(n_i - k_i)`, reduced mod p.
/// Exponents `n_i - k_i` may be negative; `(i - j)` is invertible mod p.
/// By the extension rule the value is zero when `n` is not an integer.
pub fn mu(p: u64, n: &Rational, n_vec: &[i64], j: usize) -> Result<ModP> {
    let zero = ModP::zero(p)?;
    if n_vec.len() != p as usize {
        return Err(Error::DimensionMismatch(p as usize, n_vec.len()));
    }
    if j >= p as usize {
        return Err(Error::OutOfRange(j as i64, 0, p as i64 - 1));
    }
    if !n.is_integer() {
        return Ok(zero);
    }
    let n_int = n
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Domain("mu argument overflow".into()))?;
    let target = n_int - n_vec[j];
    if target < 0 {
        return Ok(zero);
    }
    let others: Vec<usize> = (0..p as usize).filter(|&i| i != j).collect();
    let mut total = zero;
    let mut ks = vec![0i64; others.len()];
    sum_over_compositions(target, 0, &mut ks, &mut |ks| {
        let mut term = ModP::reduce(1, p);
        for (slot, &i) in others.iter().enumerate() {
            let k = ks[slot];
            let binom = gen_binomial(n_vec[i], k);
            let reduced = binom.mod_floor(&(p as i64).into()).to_i64().unwrap();
            let base = ModP::reduce(i as i64 - j as i64, p);
            term = term * ModP::reduce(reduced, p) * base.pow(n_vec[i] - k);
        }
        total = total + term;
    });
    Ok(total)
}

/// Visits every tuple of nonnegative integers summing to `target`.
fn sum_over_compositions(
    target: i64,
    slot: usize,
    ks: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    if slot + 1 == ks.len() {
        ks[slot] = target;
        visit(ks);
        return;
    }
    if ks.is_empty() {
        if target == 0 {
            visit(ks);
        }
        return;
    }
    for k in 0..=target {
        ks[slot] = k;
        sum_over_compositions(target - k, slot + 1, ks, visit);
    }
}

/// The covering formula evaluated at one choice of `m_0, ..., m_(p-1)`:
/// `SW(cover_0) = e * sum_j mu(-(b0+1)/2; m - d) SW(X_0, s_j) (mod p)`.
/// For `p = 2` the unit is 1 and `unit_flag` is not set.
pub fn sw_cover_general(
    p: u64,
    m_vec: &[i64],
    d_vec: &[i64],
    b0: i64,
    sw_vec: &[ModP],
) -> Result<EquivariantClass> {
    let zero = ModP::zero(p)?;
    if m_vec.len() != p as usize || d_vec.len() != p as usize || sw_vec.len() != p as usize {
        return Err(Error::DimensionMismatch(p as usize, m_vec.len()));
    }
    for sw in sw_vec {
        if sw.prime() != p {
            return Err(Error::ModulusMismatch(p, sw.prime()));
        }
    }
    let n = rat(-(b0 + 1), 2);
    let n_vec: Vec<i64> = m_vec.iter().zip(d_vec).map(|(m, d)| m - d).collect();
    let mut total = zero;
    for j in 0..p as usize {
        if sw_vec[j].is_zero() {
            continue;
        }
        total = total + (mu(p, &n, &n_vec, j)? * sw_vec[j]);
    }
    Ok(EquivariantClass {
        coeff: total,
        degree: 0,
        unit_flag: p != 2,
    })
}

/// Outcome of evaluating the covering formula over every composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionOutcome {
    /// All compositions produce this common value.
    Consistent(ModP),
    /// Two compositions disagree: the scenario described by the inputs is
    /// impossible.
    Contradiction {
        first: (Vec<u64>, ModP),
        second: (Vec<u64>, ModP),
    },
}

/// Evaluates the covering formula over all compositions of `m` into p
/// nonnegative parts. The value must not depend on the choice; a
/// disagreement witnesses that the input scenario cannot exist.
pub fn partition_consistency(
    p: u64,
    m: u64,
    d_vec: &[i64],
    b0: i64,
    sw_vec: &[ModP],
) -> Result<PartitionOutcome> {
    let mut first: Option<(Vec<u64>, ModP)> = None;
    let mut outcome = None;
    let mut parts = vec![0i64; p as usize];
    let mut compositions = Vec::new();
    sum_over_compositions(m as i64, 0, &mut parts, &mut |ks| {
        compositions.push(ks.to_vec());
    });
    for comp in compositions {
        let value = sw_cover_general(p, &comp, d_vec, b0, sw_vec)?.coeff;
        let comp_u: Vec<u64> = comp.iter().map(|&k| k as u64).collect();
        match &first {
            None => first = Some((comp_u, value)),
            Some((c0, v0)) => {
                if *v0 != value && outcome.is_none() {
                    outcome = Some(PartitionOutcome::Contradiction {
                        first: (c0.clone(), *v0),
                        second: (comp_u, value),
                    });
                }
            }
        }
    }
    Ok(outcome.unwrap_or(PartitionOutcome::Consistent(
        first.map(|(_, v)| v).unwrap_or(ModP::zero(p)?),
    )))
}

/// Dimension-bound verdicts for the cover, from the count `k` of family
/// members with nonvanishing SW mod p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimBoundOutcome {
    Ok,
    /// `k > 0` but `d(cover) > 2k - 2`: impossible.
    ViolatesBound,
    /// `d(cover) = 2k - 2` with `k > 1`: the cover cannot have simple type.
    NonSimpleType,
}

pub fn dim_bound_check(k: u64, d_cover: i64) -> DimBoundOutcome {
    if k > 0 && d_cover > 2 * k as i64 - 2 {
        DimBoundOutcome::ViolatesBound
    } else if k > 1 && d_cover == 2 * k as i64 - 2 {
        DimBoundOutcome::NonSimpleType
    } else {
        DimBoundOutcome::Ok
    }
}

/// Case report for the branched double cover over spheres, classifying by
/// `T = sum c_i - sum n_i` against the bound `T <= 4 - 2r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Report {
    pub t: i64,
    pub d_cover: i64,
    pub outcome: P2Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P2Outcome {
    /// `T > 4 - 2r`: contradicts the double-cover bound.
    Obstructed { bound: i64 },
    /// `T = -2r`: the cover has `d = 0` and
    /// `SW(cover) = SW(X, s) + SW(X, L tensor s)`.
    DimZero { sw_cover: ModP },
    /// `T = 4 - 2r`: forces `r >= 4`, `sum c = 2r - 4`, `sum n = 4r - 8`,
    /// both base invariants odd, `SW(cover) = 1` at `d = 2`; the cover is
    /// not of simple type. `conflicts` lists any supplied data that
    /// contradicts the forced values.
    NonSimpleType {
        sw_cover: ModP,
        conflicts: Vec<String>,
    },
    /// `T = 4 - 2r` with `r < 4`: impossible by the parity argument.
    Impossible { reason: String },
    /// `-2r < T < 4 - 2r`: odd-dimensional moduli space, no formula.
    NoStatement,
    /// `T < -2r`: the cover invariant vanishes.
    Vanishes,
}

/// The double-cover case analysis for `r` spheres with pairings `c_i >= 0`
/// and even self-intersections `-n_i`, given `SW(X, s)` and
/// `SW(X, L tensor s)` mod 2.
pub fn sw_p2_cases(c: &[i64], n: &[u64], sw_s: ModP, sw_ls: ModP) -> Result<P2Report> {
    if c.len() != n.len() {
        return Err(Error::DimensionMismatch(n.len(), c.len()));
    }
    if sw_s.prime() != 2 || sw_ls.prime() != 2 {
        return Err(Error::ModulusMismatch(2, sw_s.prime().max(sw_ls.prime())));
    }
    let r = c.len() as i64;
    for (i, (&ci, &ni)) in c.iter().zip(n).enumerate() {
        if ni % 2 != 0 {
            return Err(Error::ParityViolation { c: ci, n: ni as i64 });
        }
        if ci < 0 {
            return Err(Error::Domain(format!(
                "pairing c_{i} = {ci} must be normalized to be nonnegative"
            )));
        }
        if (ci - ni as i64) % 2 != 0 {
            return Err(Error::ParityViolation { c: ci, n: ni as i64 });
        }
    }
    let sum_c: i64 = c.iter().sum();
    let sum_n: i64 = n.iter().map(|&x| x as i64).sum();
    let t = sum_c - sum_n;
    let d_cover = r + t / 2;
    let bound = 4 - 2 * r;
    let one = ModP::new(1, 2)?;
    let outcome = if t > bound {
        P2Outcome::Obstructed { bound }
    } else if t == bound {
        if r < 4 {
            P2Outcome::Impossible {
                reason: format!(
                    "T = 4 - 2r needs r >= 4 (8 - 4r = [S]^2 <= -2r fails at r = {r})"
                ),
            }
        } else {
            let mut conflicts = Vec::new();
            if sum_c != 2 * r - 4 {
                conflicts.push(format!("sum of pairings {} != 2r - 4 = {}", sum_c, 2 * r - 4));
            }
            if sw_s.is_zero() {
                conflicts.push("SW(X, s) = 0 contradicts the forced value 1".into());
            }
            if sw_ls.is_zero() {
                conflicts.push("SW(X, L tensor s) = 0 contradicts the forced value 1".into());
            }
            P2Outcome::NonSimpleType {
                sw_cover: one,
                conflicts,
            }
        }
    } else if t == -2 * r {
        P2Outcome::DimZero {
            sw_cover: sw_s + sw_ls,
        }
    } else if t < -2 * r {
        P2Outcome::Vanishes
    } else {
        P2Outcome::NoStatement
    };
    Ok(P2Report { t, d_cover, outcome })
}

/// The double-cover formula for a configuration of projective planes, in
/// the two residue cases of `n + 2r` mod 8. Returns the value of
/// `SW(cover_0)` (degree 0) or the coefficient of `u` (degree 1),
/// evaluated at the supplied composition `(m0, m1)`.
#[allow(clippy::too_many_arguments)]
pub fn sw_rp2_cases(
    n_vec: &[i64],
    eps_vec: &[i64],
    b_plus_x0: i64,
    d_x0: i64,
    sw_s: ModP,
    sw_as: ModP,
    m0: i64,
    m1: i64,
) -> Result<EquivariantClass> {
    let data = rp2_dimension_data(n_vec, eps_vec, b_plus_x0, d_x0)?;
    let m = m0 + m1;
    if m0 < 0 || m1 < 0 || m != data.m {
        return Err(Error::Domain(format!(
            "composition ({m0}, {m1}) does not sum to m = {}",
            data.m
        )));
    }
    Ok(rp2_formula_at(&data, sw_s, sw_as, m0, m1))
}

/// Shared dimension bookkeeping for the projective-plane double cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rp2Dimensions {
    pub n: i64,
    pub eps: i64,
    pub delta0: i64,
    pub delta1: i64,
    pub d0: i64,
    pub d1: i64,
    pub d_cover: i64,
    /// Compositions of this value feed the binomial formula.
    pub m: i64,
    /// Cohomological degree of the output class (0 or 1).
    pub degree: u32,
}

pub fn rp2_dimension_data(
    n_vec: &[i64],
    eps_vec: &[i64],
    b_plus_x0: i64,
    d_x0: i64,
) -> Result<Rp2Dimensions> {
    if n_vec.len() != eps_vec.len() {
        return Err(Error::DimensionMismatch(n_vec.len(), eps_vec.len()));
    }
    let r = n_vec.len() as i64;
    for &e in eps_vec {
        if e != 1 && e != -1 {
            return Err(Error::Domain(format!("epsilon label {e} must be +-1")));
        }
    }
    for &ni in n_vec {
        if ni % 2 != 0 {
            return Err(Error::ParityViolation { c: ni, n: ni });
        }
    }
    let n: i64 = n_vec.iter().sum();
    let eps: i64 = eps_vec.iter().sum();
    if (eps - n / 2).rem_euclid(4) != 0 {
        return Err(Error::IntegralityViolation(format!(
            "epsilon = {eps} must be congruent to n/2 = {} mod 4",
            n / 2
        )));
    }
    if (n + 2 * r).rem_euclid(4) != 0 {
        return Err(Error::IntegralityViolation(format!(
            "n + 2r = {} must be divisible by 4",
            n + 2 * r
        )));
    }
    if d_x0 < 0 || d_x0 % 2 != 0 {
        return Err(Error::IntegralityViolation(format!(
            "d(X_0, s_0) = {d_x0} must be even and nonnegative"
        )));
    }
    if b_plus_x0 % 2 != 1 {
        return Err(Error::IntegralityViolation(format!(
            "b_+(X_0) = {b_plus_x0} must be odd for integral APS indices"
        )));
    }
    let delta0 = d_x0 / 2;
    let delta1 = delta0 + (n - 2 * eps) / 8;
    let half = (b_plus_x0 + 1) / 2;
    let d0 = delta0 + half;
    let d1 = delta1 + half;
    let d_cover = 2 * d_x0 + (r + n - eps) / 2;
    let (m, degree) = if (n + 2 * r).rem_euclid(8) == 0 {
        if d_cover < 0 {
            return Err(Error::Domain(format!(
                "d(cover) = {d_cover} is negative; the formula needs d >= 0"
            )));
        }
        (d_cover / 2, 0)
    } else {
        if d_cover <= 0 {
            return Err(Error::Domain(format!(
                "d(cover) = {d_cover} must be positive in the n + 2r = 4 mod 8 case"
            )));
        }
        ((d_cover + 1) / 2, 1)
    };
    Ok(Rp2Dimensions {
        n,
        eps,
        delta0,
        delta1,
        d0,
        d1,
        d_cover,
        m,
        degree,
    })
}

fn binom_mod2(a: i64, k: i64) -> ModP {
    let b = gen_binomial(a, k);
    ModP::reduce(b.mod_floor(&2.into()).to_i64().unwrap(), 2)
}

fn rp2_formula_at(
    data: &Rp2Dimensions,
    sw_s: ModP,
    sw_as: ModP,
    m0: i64,
    m1: i64,
) -> EquivariantClass {
    let coeff = binom_mod2(m1 - data.d1, data.delta0 - m0) * sw_s
        + binom_mod2(m0 - data.d0, data.delta1 - m1) * sw_as;
    EquivariantClass {
        coeff,
        degree: data.degree,
        unit_flag: false,
    }
}

/// Evaluates the projective-plane formula at every composition of `m`,
/// checking that the value is composition independent.
pub fn rp2_consistency(
    data: &Rp2Dimensions,
    sw_s: ModP,
    sw_as: ModP,
) -> Result<PartitionOutcome> {
    let mut first: Option<(Vec<u64>, ModP)> = None;
    for m0 in 0..=data.m {
        let m1 = data.m - m0;
        let value = rp2_formula_at(data, sw_s, sw_as, m0, m1).coeff;
        let comp = vec![m0 as u64, m1 as u64];
        match &first {
            None => first = Some((comp, value)),
            Some((c0, v0)) => {
                if *v0 != value {
                    return Ok(PartitionOutcome::Contradiction {
                        first: (c0.clone(), *v0),
                        second: (comp, value),
                    });
                }
            }
        }
    }
    Ok(PartitionOutcome::Consistent(
        first.map(|(_, v)| v).unwrap_or(ModP::zero(2)?),
    ))
}
