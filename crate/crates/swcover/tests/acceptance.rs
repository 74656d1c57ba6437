//! Acceptance suite: one test per criterion, each printing a pass line
//! (run with `--nocapture` to see them). Every comparison is exact; the
//! stated runtime budgets are asserted.

use std::collections::BTreeSet;
use std::time::Instant;

use swcover::constraints::{
    evaluate_scenario, BasicClass, FourManifold, Rp2Entry, Scenario, Status, Surfaces,
};
use swcover::cover::{
    cover_dimension, family_indices, nu, BranchSphere, SphereConfig, SpinCFamily,
};
use swcover::error::Error;
use swcover::exactmath::modp::ModP;
use swcover::exactmath::rational::{rat, rat_int};
use swcover::exactmath::rootsum::{alpha_sum, beta_sum};
use swcover::exactmath::{dedekind_sum, gen_binomial};
use swcover::plumbing::{cusp_boundary_data, cusp_matching_solutions, cusp_sharpness_obstruction};
use swcover::spherical::{
    delta_group_sum, lens_delta, lens_eta, prism_invariants, rho_lens_cover, CharacterLabel,
    Manifold3, SphericalGroup,
};
use swcover::swcalc::{
    mu, partition_consistency, sw_p2_cases, P2Outcome, PartitionOutcome,
};

fn pass(criterion: u32, what: &str, started: Instant, budget_secs: Option<f64>) {
    let elapsed = started.elapsed().as_secs_f64();
    if let Some(budget) = budget_secs {
        assert!(
            elapsed < budget,
            "criterion {criterion} exceeded its {budget} s budget ({elapsed:.2} s)"
        );
    }
    println!("PASS criterion {criterion}: {what} ({elapsed:.2} s)");
}

#[test]
fn criterion_01_root_sum_closed_forms() {
    let started = Instant::now();
    for n in 2..=50u64 {
        for u in 0..n {
            let alpha = alpha_sum(u, n).unwrap();
            assert_eq!(alpha, rat(n as i64 - 1, 2) - rat_int(u as i64), "alpha({u},{n})");
            let beta = beta_sum(u, n).unwrap();
            let (ni, ui) = (n as i64, u as i64);
            assert_eq!(
                beta,
                rat(-(ni - 1) * (ni - 5), 12) + rat(ui * (ni - ui - 2), 2),
                "beta({u},{n})"
            );
        }
    }
    pass(1, "alpha/beta closed forms for 2 <= n <= 50, all u", started, Some(10.0));
}

#[test]
fn criterion_02_lens_deltas() {
    let started = Instant::now();
    for p in 1..=30i64 {
        for u in 0..p {
            assert_eq!(
                lens_delta(p as u64, 1, u as u64).unwrap(),
                rat(-(2 * u + 2 - p) * (2 * u + 2 - p), 8 * p) + rat(1, 8),
                "delta(L({p},1), s_{u})"
            );
        }
    }
    assert_eq!(lens_delta(2, 1, 0).unwrap(), rat(1, 8));
    assert_eq!(lens_delta(2, 1, 1).unwrap(), rat(-1, 8));
    pass(2, "lens delta closed form for q = 1, p <= 30", started, Some(5.0));
}

#[test]
fn criterion_03_prism_suite_two_code_paths() {
    let started = Instant::now();
    for n in 1..=30i64 {
        assert_eq!(
            prism_invariants(n, 0, 0).unwrap().eta_sig,
            rat(2 * n * n + 1, 6 * n),
            "eta_sig(Y({n}))"
        );
        for u in 0..2u8 {
            let sign = if u == 0 { 1 } else { -1 };
            let direct0 = prism_invariants(n, u, 0).unwrap().delta;
            assert_eq!(direct0, rat(n + 2 * sign, 8));
            let direct1 = prism_invariants(n, u, 1).unwrap().delta;
            assert_eq!(direct1, rat_int(0));
            for v in 0..2u8 {
                let group = delta_group_sum(
                    &SphericalGroup::BinaryDihedral { n: n as u64 },
                    CharacterLabel::Dihedral(u, v),
                )
                .unwrap();
                assert_eq!(
                    group,
                    prism_invariants(n, u, v).unwrap().delta,
                    "group sum vs formulas at Y({n}), ({u},{v})"
                );
            }
        }
    }
    pass(3, "prism invariants via formulas and group sums, n <= 30", started, Some(10.0));
}

#[test]
fn criterion_04_consistency_triangle() {
    let started = Instant::now();
    fn gcd(a: i64, b: i64) -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    for p in 1..=20u64 {
        for q in 1..=p.max(1) as i64 {
            if gcd(p as i64, q) != 1 {
                continue;
            }
            for u in 0..p.max(1) {
                let (sig, dir) = lens_eta(p, q, u).unwrap();
                assert_eq!(
                    lens_delta(p, q, u).unwrap(),
                    -dir / rat_int(2) + sig / rat_int(8),
                    "triangle at L({p},{q}), u = {u}"
                );
            }
        }
    }
    for n in 1..=20i64 {
        for u in 0..2u8 {
            for v in 0..2u8 {
                let inv = prism_invariants(n, u, v).unwrap();
                assert_eq!(
                    inv.delta,
                    -inv.eta_dir.clone() / rat_int(2) + inv.eta_sig.clone() / rat_int(8),
                    "triangle at Y({n}), ({u},{v})"
                );
            }
        }
    }
    pass(4, "delta = -eta_dir/2 + eta_sig/8 for lens (p <= 20) and prism (n <= 20)", started, None);
}

#[test]
fn criterion_05_rho_suite() {
    let started = Instant::now();
    for p in [2u64, 3] {
        for k in 1..=(48 / p) {
            let n = p * k;
            let eta_cover = lens_eta(n / p, 1, 0).unwrap().0;
            let eta_base = lens_eta(n, 1, 0).unwrap().0;
            assert_eq!(
                rho_lens_cover(n, p).unwrap(),
                eta_cover - rat_int(p as i64) * eta_base,
                "rho of L({},1) -> L({n},1)",
                n / p
            );
        }
    }
    for m in (2..=40i64).step_by(2) {
        let top = Manifold3::prism(m / 2).eta_sig().unwrap();
        let base = Manifold3::prism(m).eta_sig().unwrap();
        assert_eq!(top - rat_int(2) * base, rat(-m, 2), "rho of Y({}) -> Y({m})", m / 2);
    }
    pass(5, "rho invariants match eta differences for lens and prism covers", started, None);
}

#[test]
fn criterion_06_dedekind_reciprocity() {
    let started = Instant::now();
    fn gcd(a: i64, b: i64) -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    for p in 2..=40i64 {
        for q in 1..p {
            if gcd(q, p) != 1 {
                continue;
            }
            let lhs = dedekind_sum(q, p).unwrap() + dedekind_sum(p, q).unwrap();
            let rhs = rat(-1, 4)
                + (rat(p, q) + rat(q, p) + rat(1, p * q)) / rat_int(12);
            assert_eq!(lhs, rhs, "reciprocity at ({q},{p})");
        }
    }
    for m in 1..=40i64 {
        assert_eq!(
            dedekind_sum(1, m).unwrap(),
            rat((m - 1) * (m - 2), 12 * m),
            "s(1,{m})"
        );
    }
    pass(6, "Dedekind reciprocity for q < p <= 40 and the s(1,m) closed form", started, None);
}

#[test]
fn criterion_07_nu_trichotomy_and_bound() {
    let started = Instant::now();
    for p in [2u64, 3, 5] {
        for n in (1..=(60 / p)).map(|k| k * p) {
            for c in (-(n as i64) + 1..=n as i64).filter(|c| (c - n as i64) % 2 == 0) {
                let v = nu(p, n, c).unwrap();
                // Trichotomy.
                if c == n as i64 {
                    assert_eq!(v, rat_int(p as i64 - 1));
                } else if c.abs() == n as i64 - 2 {
                    assert_eq!(v, rat_int(0), "p={p} n={n} c={c}");
                } else {
                    assert!(v < rat_int(0), "p={p} n={n} c={c}");
                }
                // Lower bound with its equality window.
                let bound =
                    rat_int(p as i64 - 1) + rat(p as i64 - 1, 2) * rat_int(c - n as i64);
                assert!(v >= bound, "p={p} n={n} c={c}");
                assert_eq!(
                    v == bound,
                    c >= n as i64 - 2 * (n / p) as i64,
                    "equality window at p={p} n={n} c={c}"
                );
            }
        }
    }
    pass(7, "nu trichotomy and lower bound, p in {2,3,5}, n = pk <= 60", started, Some(30.0));
}

/// Small deterministic generator for the random mu instances.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

#[test]
fn criterion_08_mu_properties() {
    let started = Instant::now();
    let mut rng = Lcg(0x5ee );
    let primes = [2u64, 3, 5];
    for trial in 0..1000 {
        let p = primes[(rng.next() % 3) as usize];
        let n_vec: Vec<i64> = (0..p).map(|_| rng.in_range(-6, 6)).collect();
        let j = (rng.next() % p) as usize;
        // (a) n = n_j: the only composition is zero and mu is a product of
        // nonzero factors.
        let got = mu(p, &rat_int(n_vec[j]), &n_vec, j).unwrap();
        assert!(!got.is_zero(), "trial {trial}: property (a) at p={p} {n_vec:?} j={j}");
        // (b) n < n_j: no compositions.
        let delta = rng.in_range(1, 4);
        let got = mu(p, &rat_int(n_vec[j] - delta), &n_vec, j).unwrap();
        assert!(got.is_zero(), "trial {trial}: property (b) at p={p}");
    }
    // p = 2 closed form on the full grid.
    for n in -10..=10i64 {
        for n0 in -10..=10i64 {
            for n1 in -10..=10i64 {
                let got = mu(2, &rat_int(n), &[n0, n1], 0).unwrap();
                let expect = gen_binomial(n1, n - n0);
                let expect = ((expect % 2i64) + 2i64) % 2i64;
                assert_eq!(rat_int(got.value() as i64), rat_int(expect.try_into().unwrap()));
            }
        }
    }
    pass(8, "mu support properties (1000 random instances) and p = 2 closed form grid", started, None);
}

#[test]
fn criterion_09_cusp_obstruction() {
    let started = Instant::now();
    for p in 1..=7u64 {
        assert!(cusp_sharpness_obstruction(p).unwrap(), "obstruction at p = {p}");
        let mut sols = cusp_matching_solutions(p).unwrap();
        sols.sort();
        assert_eq!(sols, vec![-(p as i64), p as i64], "solution set at p = {p}");
        assert_eq!(
            cusp_boundary_data(p).unwrap().filling.b2(),
            (9 - p) as usize,
            "b_2(W_{p})"
        );
    }
    pass(9, "cusp matching solutions are exactly {-p, p} and b_2(W_p) = 9 - p", started, Some(1.0));
}

fn borderline_family(p: u64, n: u64, b_plus: i64) -> (SphereConfig, SpinCFamily) {
    let config = SphereConfig::new(
        p,
        vec![BranchSphere {
            n,
            phi: 1,
            class_mod_p: vec![0],
        }],
    )
    .unwrap();
    let mut sw = vec![ModP::new(1, p).unwrap()];
    sw.extend((1..p).map(|_| ModP::new(0, p).unwrap()));
    let family = SpinCFamily {
        c: vec![n as i64],
        d_x: 0,
        b_plus,
        sw_mod_p: sw,
    };
    (config, family)
}

#[test]
fn criterion_10_theorem_mechanism_regressions() {
    let started = Instant::now();

    // (i) Borderline single sphere: partition contradiction at p = 2, 3, 5.
    for (p, n) in [(2u64, 8u64), (3, 9), (5, 25)] {
        let (config, family) = borderline_family(p, n, 3);
        let d_vec = family_indices(p, &config, &family).unwrap();
        let d_cover = cover_dimension(p, 0, &[(n, n as i64)]).unwrap();
        assert_eq!(d_cover, p as i64 - 1);
        let m = d_cover.div_euclid(2) + d_cover.rem_euclid(2); // ceil(d/2)
        let outcome =
            partition_consistency(p, m as u64, &d_vec, family.b_plus, &family.sw_mod_p)
                .unwrap();
        assert!(
            matches!(outcome, PartitionOutcome::Contradiction { .. }),
            "no contradiction at p = {p}"
        );
    }

    // (ii) Four (-2)-spheres with pairings summing to 2r - 4: the double
    // cover is not of simple type and its invariant is odd.
    let report = sw_p2_cases(
        &[2, 2, 0, 0],
        &[2, 2, 2, 2],
        ModP::new(1, 2).unwrap(),
        ModP::new(1, 2).unwrap(),
    )
    .unwrap();
    assert_eq!(report.d_cover, 2);
    match report.outcome {
        P2Outcome::NonSimpleType { sw_cover, conflicts } => {
            assert_eq!(sw_cover.value(), 1);
            assert!(conflicts.is_empty());
        }
        other => panic!("expected the non-simple-type case, got {other:?}"),
    }

    // (iii) One projective plane with e = 6: SW(cover_0) = 1 (mod 2) and a
    // non-simple-type construction.
    let scenario = rp2_scenario(5);
    let verdicts = evaluate_scenario(&scenario).unwrap();
    let rp2 = verdicts.iter().find(|v| v.check == "rp2-euler-bound").unwrap();
    assert!(
        matches!(rp2.status, Status::NonSimpleTypeConstruction(_)),
        "expected a construction, got {:?}",
        rp2.status
    );
    assert!(
        rp2.notes.iter().any(|n| n.contains("SW(cover_0) = 1 (mod 2)")),
        "missing SW value note: {:?}",
        rp2.notes
    );

    // (iv) The same scenario with b_+ = 3 mod 4 is obstructed.
    let scenario = rp2_scenario(7);
    let verdicts = evaluate_scenario(&scenario).unwrap();
    let rp2 = verdicts.iter().find(|v| v.check == "rp2-euler-bound").unwrap();
    assert!(rp2.status.is_obstructed(), "expected obstructed, got {:?}", rp2.status);

    pass(10, "theorem-mechanism regressions (partition contradiction, p = 2 case 3, e = 6 plane)", started, Some(5.0));
}

fn rp2_scenario(b_plus: i64) -> Scenario {
    Scenario::new(
        FourManifold {
            b_plus,
            sigma: -8,
            simple_type: true,
            h1_coprime: BTreeSet::from([2]),
        },
        Surfaces::Rp2(vec![Rp2Entry {
            euler: 6,
            class_mod_2: vec![0],
            eps: None,
            is_w2: false,
        }]),
        vec![BasicClass {
            pairings: vec![0],
            sw_mod_p: 1,
            sw_family: None,
            d: 0,
        }],
        None,
    )
    .unwrap()
}

#[test]
fn criterion_11_integrality_sentinels() {
    let started = Instant::now();

    // Deliberately inconsistent: the index shifts are fractional.
    for (p, n) in [(2u64, 4u64), (3, 3), (5, 5), (2, 6)] {
        let (config, family) = borderline_family(p, n, 3);
        assert!(
            matches!(
                family_indices(p, &config, &family),
                Err(Error::NonIntegralIndex { .. })
            ),
            "expected NonIntegralIndex at p = {p}, n = {n}"
        );
    }
    // Deliberately inconsistent: p does not divide a self-intersection, so
    // the exact dimension is fractional.
    for (p, pair) in [(3u64, (4u64, 0i64)), (5, (4, 0)), (3, (2, 0))] {
        assert!(
            matches!(
                cover_dimension(p, 0, &[pair]),
                Err(Error::NonIntegralDimension { .. })
            ),
            "expected NonIntegralDimension at p = {p}, pair = {pair:?}"
        );
    }

    // Consistent corpus: no sentinel fires.
    for (p, n) in [(2u64, 8u64), (3, 9), (5, 25), (2, 16), (3, 18)] {
        let (config, family) = borderline_family(p, n, 3);
        family_indices(p, &config, &family).unwrap();
        cover_dimension(p, 0, &[(n, n as i64)]).unwrap();
    }
    // The four-sphere case (ii) and a two-sphere mixed configuration.
    let config = SphereConfig::new(
        2,
        vec![
            BranchSphere { n: 8, phi: 1, class_mod_p: vec![0] },
            BranchSphere { n: 8, phi: 1, class_mod_p: vec![0] },
        ],
    )
    .unwrap();
    let family = SpinCFamily {
        c: vec![8, 0],
        d_x: 0,
        b_plus: 3,
        sw_mod_p: vec![ModP::new(1, 2).unwrap(), ModP::new(0, 2).unwrap()],
    };
    family_indices(2, &config, &family).unwrap();
    cover_dimension(2, 0, &[(8, 8), (8, 0)]).unwrap();

    pass(11, "integrality sentinels fire exactly on the inconsistent corpus", started, None);
}
