//! Cyclic branched covers of prime degree branched over spheres: existence
//! checks, transfer of topological invariants to the cover, the lifted
//! pairings and per-sphere dimension contributions, sharp spin-c extension
//! counts, and the APS indices of the associated spin-c family.

use crate::error::{Error, Result};
use crate::exactmath::modp::{modp_rank, ModP};
use crate::exactmath::rational::{rat, rat_int, Rational};
use crate::spherical::rho_lens_cover;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// One branch sphere: self-intersection `-n`, normal weight `phi` in
/// `Z_p \ {0}`, and the mod-p coordinates of its dual class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSphere {
    pub n: u64,
    pub phi: u64,
    pub class_mod_p: Vec<i64>,
}

/// A disjoint configuration of branch spheres for a degree-`p` cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereConfig {
    pub p: u64,
    pub spheres: Vec<BranchSphere>,
}

impl SphereConfig {
    pub fn new(p: u64, spheres: Vec<BranchSphere>) -> Result<Self> {
        ModP::zero(p)?; // validates that p is prime
        let width = spheres.first().map_or(0, |s| s.class_mod_p.len());
        for s in &spheres {
            if s.n == 0 {
                return Err(Error::Domain(
                    "branch spheres must have negative self-intersection".into(),
                ));
            }
            if s.phi % p == 0 {
                return Err(Error::Domain(format!(
                    "normal weight {} vanishes mod {p}",
                    s.phi
                )));
            }
            if s.class_mod_p.len() != width {
                return Err(Error::DimensionMismatch(width, s.class_mod_p.len()));
            }
        }
        Ok(SphereConfig { p, spheres })
    }

    pub fn r(&self) -> usize {
        self.spheres.len()
    }
}

/// Result of the branched-cover existence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverExistence {
    /// Whether `sum_i phi_i [S_i] = 0` in Z_p, the necessary and sufficient
    /// condition for the cover to exist with the given normal weights.
    pub exists: bool,
    /// The weighted class sum, reduced mod p.
    pub class_sum: Vec<u64>,
    /// Whether the `b_1(cover) = 0` guarantee applies: `H_1(X;Z)` coprime to
    /// p together with any `r-1` of the classes linearly independent.
    pub b1_zero_guarantee: bool,
    pub reason: String,
}

/// Tests existence of the degree-p cyclic cover branched over the
/// configuration, and whether the vanishing-`b_1` criterion applies.
pub fn cover_exists(config: &SphereConfig, h1_coprime_p: bool) -> Result<CoverExistence> {
    let p = config.p;
    let width = config
        .spheres
        .first()
        .map_or(0, |s| s.class_mod_p.len());
    let mut class_sum = vec![0u64; width];
    for s in &config.spheres {
        if s.class_mod_p.len() != width {
            return Err(Error::DimensionMismatch(width, s.class_mod_p.len()));
        }
        for (acc, &coord) in class_sum.iter_mut().zip(&s.class_mod_p) {
            let term = (s.phi as i64 * coord).rem_euclid(p as i64) as u64;
            *acc = (*acc + term) % p;
        }
    }
    let exists = class_sum.iter().all(|&v| v == 0);
    let classes: Vec<Vec<i64>> = config.spheres.iter().map(|s| s.class_mod_p.clone()).collect();
    let r = classes.len();
    let mut independent = true;
    for leave_out in 0..r {
        let subset: Vec<Vec<i64>> = classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != leave_out)
            .map(|(_, v)| v.clone())
            .collect();
        if modp_rank(&subset, p)? != r - 1 {
            independent = false;
            break;
        }
    }
    let b1_zero_guarantee = exists && h1_coprime_p && independent;
    let reason = if !exists {
        format!(
            "weighted class sum is ({}) != 0 mod {p}",
            class_sum
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    } else if b1_zero_guarantee {
        "weighted class sum vanishes; H_1 coprime to p and any r-1 classes independent".into()
    } else if !h1_coprime_p {
        "cover exists; b_1 = 0 not guaranteed (H_1 not known coprime to p)".into()
    } else {
        "cover exists; b_1 = 0 not guaranteed (some r-1 classes are dependent)".into()
    };
    Ok(CoverExistence {
        exists,
        class_sum,
        b1_zero_guarantee,
        reason,
    })
}

/// Reduces a pairing into the canonical window `(-n, n]` mod `2n`.
pub fn normalize_pairing(n: u64, c: i64) -> i64 {
    let two_n = 2 * n as i64;
    let mut r = c.rem_euclid(two_n);
    if r > n as i64 {
        r -= two_n;
    }
    r
}

/// The lifted pairing: the unique `ct` with `-n/p < ct <= n/p` and
/// `(c + n)/(2n/p) - (ct + n/p)/(2n/p)` an integer. Exact for any `n >= 1`;
/// an integer whenever `p | n`. Requires `c = n (mod 2)`.
pub fn ctilde(n: u64, p: u64, c: i64) -> Result<Rational> {
    if n == 0 || p == 0 {
        return Err(Error::Domain("ctilde needs n, p >= 1".into()));
    }
    let c = normalize_pairing(n, c);
    if (c - n as i64) % 2 != 0 {
        return Err(Error::ParityViolation { c, n: n as i64 });
    }
    // With t = c + n in (0, 2n] and w = 2n/p, the congruence condition says
    // ct + n/p = t - w u for an integer u, and the window condition pins
    // t - w u into (0, w], i.e. u = ceil(t/w) - 1 = ceil(t p / 2n) - 1.
    let t = c + n as i64;
    let u = Integer::div_ceil(&(t * p as i64), &(2 * n as i64)) - 1;
    Ok(rat_int(t) - rat(2 * n as i64, p as i64) * rat_int(u) - rat(n as i64, p as i64))
}

/// Per-sphere contribution to the expected dimension of the cover:
/// `nu = (p-1) + ((c^2 - n^2) - (ct^2 - (n/p)^2)) / (4n/p)`.
pub fn nu(p: u64, n: u64, c: i64) -> Result<Rational> {
    let c = normalize_pairing(n, c);
    let ct = ctilde(n, p, c)?;
    let n_over_p = rat(n as i64, p as i64);
    let num = rat_int(c * c - (n * n) as i64)
        - (ct.clone() * ct - n_over_p.clone() * n_over_p.clone());
    Ok(rat_int(p as i64 - 1) + num / (rat_int(4) * n_over_p))
}

/// `delta(L(n,1), s)` for the spin-c structure restricting with pairing `c`:
/// `-c^2/(8n) + 1/8`.
pub fn delta_lens_restriction(n: u64, c: i64) -> Rational {
    rat(-c * c, 8 * n as i64) + rat(1, 8)
}

/// Expected dimension of the cover:
/// `d(cover) = p d(X_0, s_0) + sum_i nu_i`. Fails with
/// `NonIntegralDimension` when the exact value is fractional, which signals
/// inconsistent input (for instance `p` not dividing some `n_i`).
pub fn cover_dimension(p: u64, d_x0: i64, pairs: &[(u64, i64)]) -> Result<i64> {
    let mut total = rat_int(p as i64 * d_x0);
    for &(n, c) in pairs {
        total += nu(p, n, c)?;
    }
    if !total.is_integer() {
        return Err(Error::NonIntegralDimension {
            value: total.to_string(),
        });
    }
    Ok(total.to_integer().to_i64().unwrap())
}

/// Transfer of signature and b_+ to the cover, via the unbranched covering
/// of the sphere complement. All values are exact rationals; fractional
/// entries indicate that the configuration is not realizable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverTopology {
    /// Number of boundary components of the complement (one lens space per
    /// branch sphere); unchanged in the cover.
    pub boundary_components: usize,
    /// Rho invariant of the boundary covering, `sum_i rho(L(n_i,1))`.
    pub rho: Rational,
    /// `sigma(X_0) = sigma(X) + r`.
    pub sigma_x0: i64,
    /// `sigma(cover_0) = p sigma(X_0) + rho`.
    pub sigma_cover0: Rational,
    /// `sigma(cover) = sigma(cover_0) - r` after refilling the disc bundles.
    pub sigma_cover: Rational,
    /// `b_+(X_0) = b_+(X)`; attaching negative definite pieces along
    /// rational homology spheres does not change b_+.
    pub b_plus_x0: i64,
    /// `b_+(cover_0) = p b_+(X_0) + (p-1) + (r - p r)/2 + rho/2`.
    pub b_plus_cover0: Rational,
}

/// Applies the unbranched-cover transfer rules to the sphere complement.
/// Requires `p | n_i` for every sphere.
pub fn cover_topology(
    p: u64,
    sigma_x: i64,
    b_plus_x: i64,
    ns: &[u64],
) -> Result<CoverTopology> {
    let r = ns.len();
    let mut rho = Rational::zero();
    for &n in ns {
        rho += rho_lens_cover(n, p)?;
    }
    let sigma_x0 = sigma_x + r as i64;
    let sigma_cover0 = rat_int(p as i64 * sigma_x0) + rho.clone();
    let sigma_cover = sigma_cover0.clone() - rat_int(r as i64);
    let b_plus_cover0 = rat_int(p as i64 * b_plus_x + p as i64 - 1)
        + rat(r as i64 - (p as i64) * r as i64, 2)
        + rho.clone() / rat_int(2);
    Ok(CoverTopology {
        boundary_components: r,
        rho,
        sigma_x0,
        sigma_cover0,
        sigma_cover,
        b_plus_x0: b_plus_x,
        b_plus_cover0,
    })
}

/// Enumerates the sign choices for sharp extensions of a spin-c structure
/// on the complement: `e_i` ranges over `{0, 1}` when `c_i = n_i`, over
/// `{0, -1}` when `c_i = -n_i`, and is `0` otherwise. The count is
/// `2^k` with `k` the number of borderline pairings.
pub fn sharp_extensions(c: &[i64], n: &[u64]) -> Result<Vec<Vec<i8>>> {
    if c.len() != n.len() {
        return Err(Error::DimensionMismatch(n.len(), c.len()));
    }
    let mut options: Vec<Vec<i8>> = Vec::with_capacity(c.len());
    for (i, (&ci, &ni)) in c.iter().zip(n).enumerate() {
        if ci.unsigned_abs() > ni {
            return Err(Error::NotSharp { i, c: ci, n: ni as i64 });
        }
        options.push(if ci == ni as i64 {
            vec![0, 1]
        } else if ci == -(ni as i64) {
            vec![0, -1]
        } else {
            vec![0]
        });
    }
    let mut tuples = vec![Vec::new()];
    for opts in options {
        tuples = tuples
            .into_iter()
            .flat_map(|prefix: Vec<i8>| {
                opts.iter().map(move |&e| {
                    let mut next = prefix.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    Ok(tuples)
}

/// The spin-c family data on the complement for a degree-p cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCFamily {
    /// Pairings `<c(s), [S_i]>`, normalized into `(-n_i, n_i]`.
    pub c: Vec<i64>,
    /// Moduli dimension `d(X, s)` (even, >= 0 for the sharp structure).
    pub d_x: i64,
    /// `b_+(X) > 1`.
    pub b_plus: i64,
    /// User-supplied `SW(X, alpha_j + s) mod p` for `j = 0..p-1`.
    pub sw_mod_p: Vec<ModP>,
}

/// APS indices `d_j = ind_APS(X_0, s_j)` of the spin-c family `{s_j}`:
/// `d_0 = (d_X + b_+ + 1)/2`, and for `j >= 1` the index shifts by the
/// change in boundary delta invariants under twisting, with the twisted
/// pairing `c_i - 2 j phi_i n_i / p` reduced into `(-n_i, n_i]`.
/// A fractional index signals inconsistent input.
pub fn family_indices(p: u64, config: &SphereConfig, family: &SpinCFamily) -> Result<Vec<i64>> {
    if config.p != p {
        return Err(Error::Domain(format!(
            "config is a mod-{} configuration, not mod-{p}",
            config.p
        )));
    }
    if family.c.len() != config.r() {
        return Err(Error::DimensionMismatch(config.r(), family.c.len()));
    }
    let two_d0 = family.d_x + family.b_plus + 1;
    if two_d0 % 2 != 0 {
        return Err(Error::NonIntegralIndex {
            j: 0,
            value: rat(two_d0, 2).to_string(),
        });
    }
    let d0 = two_d0 / 2;
    let mut indices = vec![d0];
    for j in 1..p {
        let mut shift = Rational::zero();
        for (s, &c) in config.spheres.iter().zip(&family.c) {
            if s.n % p != 0 {
                return Err(Error::Domain(format!(
                    "sphere self-intersection -{} is not divisible by p = {p}",
                    s.n
                )));
            }
            let c = normalize_pairing(s.n, c);
            let twisted = normalize_pairing(
                s.n,
                c - 2 * j as i64 * s.phi as i64 * (s.n / p) as i64,
            );
            shift += delta_lens_restriction(s.n, twisted) - delta_lens_restriction(s.n, c);
        }
        let dj = rat_int(d0) + shift;
        if !dj.is_integer() {
            return Err(Error::NonIntegralIndex {
                j: j as usize,
                value: dj.to_string(),
            });
        }
        indices.push(dj.to_integer().to_i64().unwrap());
    }
    Ok(indices)
}
