//! Acceptance suite: one test per numbered criterion, each printing a
//! `[PASS]`/`[FAIL]` line with its elapsed time. Criterion 6's catalogued
//! non-GRS clause is implemented faithfully and fails: on that evaluation
//! set the generator is entrywise a Reed-Solomon generator (see the assert
//! message), so the suite reports it red rather than weakening the check.

use std::time::{Duration, Instant};

use mdsforge::codes::{DEFAULT_CODEWORD_BUDGET, DEFAULT_SUBSET_BUDGET};
use mdsforge::construct::{reproduce, ClaimStatus, Family, LiftSpec};
use mdsforge::error::Error;
use mdsforge::family1::Family1Spec;
use mdsforge::family2::Family2Spec;
use mdsforge::gf::FieldCtx;
use mdsforge::symfun::EvalSet;

struct Criterion {
    label: &'static str,
    start: Instant,
    budget: Duration,
}

impl Criterion {
    fn new(label: &'static str, budget: Duration) -> Self {
        Criterion {
            label,
            start: Instant::now(),
            budget,
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed();
        println!("[PASS] {} ({:.2?})", self.label, elapsed);
        assert!(
            elapsed < self.budget,
            "{} exceeded its runtime budget: {:.2?} >= {:.2?}",
            self.label,
            elapsed,
            self.budget
        );
    }

    fn fail(self, detail: &str) -> ! {
        println!("[FAIL] {} ({:.2?})", self.label, self.start.elapsed());
        panic!("{}: {detail}", self.label);
    }
}

fn assert_catalog_claims(c: &Criterion, id: &str, required: &[&str]) {
    let rep = reproduce(id).unwrap_or_else(|e| c_fail(c, &format!("reproduce({id}): {e}")));
    for name in required {
        let claim = rep
            .claims
            .iter()
            .find(|cl| cl.name == *name)
            .unwrap_or_else(|| c_fail(c, &format!("{id}: claim {name:?} missing")));
        if claim.status != ClaimStatus::Pass {
            c_fail(
                c,
                &format!(
                    "{id}: claim {name:?} is {:?}: {}",
                    claim.status, claim.detail
                ),
            );
        }
    }
}

fn c_fail(c: &Criterion, detail: &str) -> ! {
    println!("[FAIL] {} ({:.2?})", c.label, c.start.elapsed());
    panic!("{}: {detail}", c.label);
}

fn battery() -> Vec<FieldCtx> {
    vec![
        FieldCtx::new(7, 1, None).unwrap(),
        FieldCtx::new(11, 1, None).unwrap(),
        FieldCtx::new(2, 4, None).unwrap(),
        FieldCtx::new(17, 1, None).unwrap(),
        FieldCtx::new(2, 5, None).unwrap(),
        FieldCtx::new(5, 2, None).unwrap(),
    ]
}

#[test]
fn criterion_01_gf17_family1_nongrs_mds() {
    let c = Criterion::new(
        "criterion 1: GF(17) family-1 instance is non-GRS MDS with Schur dimension 6",
        Duration::from_secs(1),
    );
    let f = FieldCtx::new(17, 1, None).unwrap();
    let pts = [0u64, 2, 3, 4, 5, 7, 9, 10].map(|x| f.elem(x));
    let lam = EvalSet::new(&f, pts.to_vec()).unwrap();
    let spec = Family1Spec::new(lam, 3, 1, None).unwrap();
    let mds = spec.is_mds_cross_checked(DEFAULT_SUBSET_BUDGET).unwrap();
    if !mds.verdict {
        c.fail("instance must be MDS by both the subset criterion and the minors oracle");
    }
    let nongrs = spec.is_nongrs(DEFAULT_SUBSET_BUDGET).unwrap();
    if !nongrs.verdict || nongrs.dimension() != Some(6) {
        c.fail(&format!(
            "expected non-GRS with Schur-square dimension exactly 6, got {nongrs:?}"
        ));
    }
    c.finish();
}

#[test]
fn criterion_02_gf32_self_orthogonal_amds() {
    let c = Criterion::new(
        "criterion 2: GF(32) self-orthogonal [11,5,6] instance with exact u, v and distance",
        Duration::from_secs(120),
    );
    assert_catalog_claims(
        &c,
        "f1-gf32-so",
        &[
            "dual weights u match",
            "v with v_i^2 = u_i a_i matches",
            "all certificate conditions hold for f(x) = x",
            "G_v G_v^T = 0",
            "parameters [11,5,6]",
            "AMDS label",
            "catalogued generator matrix matches",
        ],
    );
    c.finish();
}

#[test]
fn criterion_03_gf16_gf25_self_dual() {
    let c = Criterion::new(
        "criterion 3: GF(16) and GF(25) self-dual instances with matching weight lists",
        Duration::from_secs(2),
    );
    assert_catalog_claims(
        &c,
        "f1-gf16-sd",
        &[
            "S_1 = S_2 = S_3 = 0",
            "dual weights u match",
            "self-duality certified",
            "v with v_i^2 = u_i matches",
            "G_v G_v^T = 0 and n = 2k",
            "catalogued generator matrix matches",
        ],
    );
    assert_catalog_claims(
        &c,
        "f1-gf25-sd",
        &[
            "S_1 = S_2 = S_3 = 0",
            "dual weights u match",
            "self-duality certified",
            "catalogued v satisfies v_i^2 = u_i",
            "computed v matches catalogued v up to sign per coordinate",
            "our certificate gives a self-dual code",
            "catalogued v gives a self-dual code",
            "catalogued generator matrix matches",
        ],
    );
    c.finish();
}

#[test]
fn criterion_04_gf23_so_and_gf17_k4_sd() {
    let c = Criterion::new(
        "criterion 4: GF(23) self-orthogonal instance and GF(17) k=4 self-dual instance",
        Duration::from_secs(2),
    );
    assert_catalog_claims(
        &c,
        "f1-gf23-so",
        &[
            "dual weights u match",
            "S_1 = 0, S_2 = 2, S_3 = 5",
            "u_i f(a_i) values match",
            "catalogued v satisfies v_i^2 = u_i f(a_i)",
            "certificate conditions hold",
            "G_v G_v^T = 0",
            "catalogued generator matrix matches",
        ],
    );
    assert_catalog_claims(
        &c,
        "f1-gf17-k4-sd",
        &[
            "S_1 = S_2 = S_3 = 0",
            "dual weights u match",
            "scale 3 works: all 3 u_i are squares",
            "catalogued v satisfies v_i^2 = 3 u_i",
            "self-duality certified",
            "catalogued v gives a self-dual code",
            "catalogued generator matrix matches",
        ],
    );
    c.finish();
}

#[test]
fn criterion_05_gf19_family2_so() {
    let c = Criterion::new(
        "criterion 5: GF(19) family-2 self-orthogonal instance with the window identity",
        Duration::from_secs(1),
    );
    assert_catalog_claims(
        &c,
        "f2-gf19-so",
        &[
            "dual weights u match",
            "S_1 = 8 and S_2 = 3",
            "window condition 2*8 + 3 = 0 (mod 19)",
            "u_i f(a_i) values match",
            "catalogued v satisfies v_i^2 = u_i f(a_i)",
            "certificate conditions hold",
            "G_v G_v^T = 0",
            "catalogued generator matrix matches",
        ],
    );
    c.finish();
}

#[test]
fn criterion_06_gf37_high_offset_instance() {
    let c = Criterion::new(
        "criterion 6: GF(37) h=21 instance: MDS, catalogued non-GRS claim, e_4 extension",
        Duration::from_secs(5),
    );
    let f = FieldCtx::new(37, 1, None).unwrap();
    let lam = mdsforge::construct::geom_lambda(&f, f.elem(3), 18).unwrap();
    let spec = Family2Spec::new(lam, 4, 21, None).unwrap();

    // MDS by the S_18 subset scan, cross-checked against the minors oracle.
    let mds = spec.is_mds_cross_checked(DEFAULT_SUBSET_BUDGET).unwrap();
    if !mds.verdict {
        c.fail("C(18,4) subset scan must confirm MDS");
    }

    // The e_4-extended [19,4] code is MDS by the minors oracle.
    let mut e4 = vec![f.zero(); 4];
    e4[3] = f.one();
    let ext = spec.generator().unwrap().extend_columns(&[e4]).unwrap();
    let ext_mds = ext.is_mds_minors(DEFAULT_SUBSET_BUDGET).unwrap();
    if !(ext.n() == 19 && ext_mds.verdict) {
        c.fail("the e_4-extended [19,4] code must be MDS by the minors oracle");
    }

    // Published claim, implemented faithfully: non-GRS with Schur-square
    // dimension >= 8. This FAILS: ord(3) = 18 in GF(37), so x^21 = x^3 on
    // the evaluation set and the generator is entrywise the RS(18,4)
    // generator; the Schur-square dimension is 7 = 2k-1 and the code is GRS
    // by the exact Schur criterion (it is a Reed-Solomon code).
    match spec.is_nongrs(DEFAULT_SUBSET_BUDGET) {
        Ok(rep) if rep.verdict && rep.dimension().unwrap_or(0) >= 8 => c.finish(),
        outcome => {
            let dim = spec
                .generator()
                .unwrap()
                .schur_square_dim()
                .dimension()
                .unwrap_or(0);
            c.fail(&format!(
                "catalogued non-GRS claim is machine-refuted: outcome {outcome:?}; \
                 computed Schur-square dimension {dim} = 2k-1, and the generator equals \
                 the RS(18,4) generator entrywise because x^21 = x^3 on the order-18 \
                 subgroup generated by 3 in GF(37). The code is a Reed-Solomon (hence GRS) \
                 code; the MDS and extension clauses of this criterion pass."
            ));
        }
    }
}

#[test]
fn criterion_07_gf128_full_field_and_extension() {
    let c = Criterion::new(
        "criterion 7: GF(128) h=16 full-field instance MDS both routes; [130,3] extension MDS",
        Duration::from_secs(30),
    );
    let f = FieldCtx::new(2, 7, None).unwrap();
    let lam = EvalSet::new(&f, f.elements().collect()).unwrap();
    let spec = Family2Spec::new(lam, 3, 16, None).unwrap();
    let mds = spec.is_mds(DEFAULT_SUBSET_BUDGET).unwrap();
    if !mds.verdict {
        c.fail("S_14 must be nonzero on all C(128,3) triples");
    }
    let minors = spec
        .generator()
        .unwrap()
        .is_mds_minors(DEFAULT_SUBSET_BUDGET)
        .unwrap();
    if !minors.verdict {
        c.fail("the minors oracle must confirm the S_14 scan");
    }
    let nongrs = spec.is_nongrs(DEFAULT_SUBSET_BUDGET).unwrap();
    if !nongrs.verdict {
        c.fail("the full-field instance is non-GRS (k = 3 high-offset range)");
    }
    let e2 = vec![f.zero(), f.one(), f.zero()];
    let e3 = vec![f.zero(), f.zero(), f.one()];
    let ext = spec.generator().unwrap().extend_columns(&[e2, e3]).unwrap();
    let ext_mds = ext.is_mds_minors(DEFAULT_SUBSET_BUDGET).unwrap();
    if !(ext.n() == 130 && ext_mds.verdict) {
        c.fail("the [130,3] extension must pass all 357760 minors");
    }
    c.finish();
}

#[test]
fn criterion_08_table_rows() {
    let c = Criterion::new(
        "criterion 8: table rows 1-3 MDS by full scan with verified ranges; rows 4-6 structural",
        Duration::from_secs(600),
    );
    for id in ["f2-table1-row1", "f2-table1-row2", "f2-table1-row3"] {
        assert_catalog_claims(
            &c,
            id,
            &[
                "generator built with full rank",
                "non-GRS hypothesis range verified",
                "MDS by full subset scan",
                "implied distance matches the table",
                "minors oracle spot-check",
            ],
        );
    }
    // Rows 4-6 exceed the subset budget: structural reproduction only, with
    // an explicit SKIPPED scan.
    for id in ["f2-table1-row4", "f2-table1-row5", "f2-table1-row6"] {
        let rep = reproduce(id).unwrap();
        let skipped = rep
            .claims
            .iter()
            .any(|cl| cl.name == "MDS full subset scan" && cl.status == ClaimStatus::Skipped);
        if !skipped {
            c_fail(&c, &format!("{id} must skip its MDS scan explicitly"));
        }
        for name in [
            "generator built with full rank",
            "non-GRS hypothesis range verified",
        ] {
            let ok = rep
                .claims
                .iter()
                .any(|cl| cl.name == name && cl.status == ClaimStatus::Pass);
            if !ok {
                c_fail(&c, &format!("{id}: structural claim {name:?} must pass"));
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_09_gf8_self_dual_q_even() {
    let c = Criterion::new(
        "criterion 9: GF(8) full-field h=k=4 gives a self-dual non-MDS [8,4,4] code",
        Duration::from_secs(1),
    );
    assert_catalog_claims(
        &c,
        "f2-gf8-sd",
        &[
            "S_1 = 0 over the full field",
            "self-duality certified (r = 1, q even)",
            "scaled code is self-dual",
            "not MDS",
            "parameters [8,4,4]",
        ],
    );
    c.finish();
}

#[test]
fn criterion_11_lift_constructions() {
    let c = Criterion::new(
        "criterion 11: lift constructions over GF(2^9) and GF(2^17) pass full MDS scans",
        Duration::from_secs(60),
    );
    let spec = LiftSpec {
        p: 2,
        m: 9,
        family: Family::Two,
        k: 5,
        n: 11,
    };
    let (_, lam) = spec.build().unwrap();
    let f2 = Family2Spec::new(lam, 5, spec.h(), None).unwrap();
    let mds = f2.is_mds_cross_checked(DEFAULT_SUBSET_BUDGET).unwrap();
    if !mds.verdict {
        c.fail("family-two lift (2^9, k=5, n=11) must be MDS");
    }

    let spec = LiftSpec {
        p: 2,
        m: 17,
        family: Family::One,
        k: 6,
        n: 14,
    };
    let (_, lam) = spec.build().unwrap();
    let f1 = Family1Spec::new(lam, 6, 1, None).unwrap();
    let mds = f1.is_mds_cross_checked(DEFAULT_SUBSET_BUDGET).unwrap();
    if !mds.verdict {
        c.fail("family-one lift (2^17, k=6, n=14) must be MDS");
    }
    c.finish();
}

// --- criterion 10: property suites (a)-(g), each >= 200 randomized cases ---

mod properties {
    use super::*;
    use mdsforge::gf::FieldElem;
    use mdsforge::matgf::MatGF;
    use mdsforge::symfun::{
        complete_s, newton_residual, schur_poly, schur_poly_bialternant, schur_poly_sigma_form,
        sigma, Partition,
    };
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn distinct_points(f: &FieldCtx, n: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElem> {
        let mut pts = Vec::new();
        while pts.len() < n {
            let e = f.random_elem(rng);
            if !pts.contains(&e) {
                pts.push(e);
            }
        }
        pts
    }

    fn random_f1_spec(f: &FieldCtx, rng: &mut ChaCha8Rng) -> Family1Spec {
        let q = f.order() as usize;
        loop {
            let max_n = q.min(11);
            let n = 5 + (rng.next_u64() as usize) % (max_n - 4);
            if n < 5 {
                continue;
            }
            let k = 3 + (rng.next_u64() as usize) % (n - 4).max(1);
            if k + 2 > n {
                continue;
            }
            let r = 1 + (rng.next_u64() as usize) % (k - 1);
            let lam = EvalSet::new(f, distinct_points(f, n, rng)).unwrap();
            if let Ok(spec) = Family1Spec::new(lam, k, r, None) {
                return spec;
            }
        }
    }

    fn random_f2_spec(f: &FieldCtx, rng: &mut ChaCha8Rng, bounded_r: bool) -> Family2Spec {
        let q = f.order() as usize;
        loop {
            let max_n = q.min(11);
            let n = 5 + (rng.next_u64() as usize) % (max_n - 4);
            if n < 5 {
                continue;
            }
            let k = 3 + (rng.next_u64() as usize) % (n - 4).max(1);
            if k + 2 > n {
                continue;
            }
            let r_max = if bounded_r { n - k } else { q - k - 1 };
            if r_max == 0 {
                continue;
            }
            let r = 1 + (rng.next_u64() as usize) % r_max;
            let h = k - 1 + r;
            if h > q - 2 {
                continue;
            }
            let lam = EvalSet::new(f, distinct_points(f, n, rng)).unwrap();
            if let Ok(spec) = Family2Spec::new(lam, k, h, None) {
                return spec;
            }
        }
    }

    #[test]
    fn criterion_10a_parity_check_theorems() {
        let c = Criterion::new(
            "criterion 10a: closed-form parity checks satisfy G H^T = 0 and rank n-k (both families)",
            Duration::from_secs(120),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for f in battery() {
            for _ in 0..200 {
                let spec = random_f1_spec(&f, &mut rng);
                if spec.r() == 1 {
                    // parity_check verifies both contract halves internally
                    // and errors loudly otherwise.
                    if let Err(e) = spec.parity_check() {
                        c_fail(&c, &format!("family-1 parity contract failed: {e}"));
                    }
                }
                let spec = random_f2_spec(&f, &mut rng, true);
                if spec.n() >= spec.k() + spec.r() {
                    if let Err(e) = spec.parity_check() {
                        c_fail(&c, &format!("family-2 parity contract failed: {e}"));
                    }
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10b_mds_oracle_equivalence() {
        let c = Criterion::new(
            "criterion 10b: family MDS criteria match the minors oracle verdict and witness",
            Duration::from_secs(300),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for f in battery() {
            for _ in 0..40 {
                let spec = random_f1_spec(&f, &mut rng);
                if let Err(e) = spec.is_mds_cross_checked(100_000) {
                    if !matches!(e, Error::BudgetExceeded { .. }) {
                        c_fail(&c, &format!("family-1 oracle mismatch: {e}"));
                    }
                }
                let spec = random_f2_spec(&f, &mut rng, false);
                if let Err(e) = spec.is_mds_cross_checked(100_000) {
                    if !matches!(e, Error::BudgetExceeded { .. }) {
                        c_fail(&c, &format!("family-2 oracle mismatch: {e}"));
                    }
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10c_newton_residual() {
        let c = Criterion::new(
            "criterion 10c: the alternating sigma/S convolution vanishes identically",
            Duration::from_secs(60),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        for f in battery() {
            for _ in 0..200 {
                let n = 2 + (rng.next_u64() as usize) % 7;
                let n = n.min(f.order() as usize);
                let xs: Vec<FieldElem> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
                for big_n in 1..=2 * n {
                    if !f.is_zero(newton_residual(&f, big_n, &xs)) {
                        c_fail(&c, &format!("residual nonzero at N = {big_n}, n = {n}"));
                    }
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10d_generalized_vandermonde_determinants() {
        let c = Criterion::new(
            "criterion 10d: generalized Vandermonde closed form equals the direct determinant",
            Duration::from_secs(120),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for f in battery() {
            for _ in 0..200 {
                let max_n = (f.order() as usize).min(8);
                let n = 2 + (rng.next_u64() as usize) % (max_n - 1);
                let pts = distinct_points(&f, n, &mut rng);
                let es = EvalSet::new(&f, pts.clone()).unwrap();
                for h in (n - 1)..=(n + 6) {
                    let mut exps: Vec<usize> = (0..n - 1).collect();
                    exps.push(h);
                    let direct = MatGF::power_rows(&f, &pts, &exps).det().unwrap();
                    if es.gvdm_det(h).unwrap() != direct {
                        c_fail(&c, &format!("mismatch at n = {n}, h = {h}"));
                    }
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10e_schur_three_routes() {
        let c = Criterion::new(
            "criterion 10e: Schur polynomial via both Jacobi-Trudi forms and the bialternant",
            Duration::from_secs(120),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(104);
        for f in battery() {
            for _ in 0..200 {
                let max_n = (f.order() as usize).min(8);
                let n = 2 + (rng.next_u64() as usize) % (max_n - 1);
                let pts = distinct_points(&f, n, &mut rng);
                let mut parts = Vec::new();
                let mut budget = 6u64;
                let mut cap = 4u64;
                while parts.len() < n && budget > 0 {
                    let next = rng.next_u64() % (cap.min(budget) + 1);
                    if next == 0 {
                        break;
                    }
                    parts.push(next as usize);
                    cap = next;
                    budget -= next;
                }
                let lam = Partition::new(&parts).unwrap();
                let a = schur_poly(&f, &lam, &pts).unwrap();
                let b = schur_poly_sigma_form(&f, &lam, &pts).unwrap();
                let d = schur_poly_bialternant(&f, &lam, &pts).unwrap();
                if a != b || a != d {
                    c_fail(
                        &c,
                        &format!("route disagreement for lambda = {:?}", lam.parts()),
                    );
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10f_so_certificates_match_gram_tests() {
        let c = Criterion::new(
            "criterion 10f: certificate conditions match direct Gram tests in iff regimes",
            Duration::from_secs(300),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(105);
        let mut f1_cases = 0usize;
        let mut f2_cases = 0usize;

        // Family 1 (k >= 5 iff regime): GF(16) and GF(32) make every value a
        // square, odd q contributes through rejection sampling.
        let fields = battery();
        'outer_f1: while f1_cases < 200 {
            for f in &fields {
                let q = f.order() as usize;
                if q < 11 {
                    continue;
                }
                let k = 5;
                let max_n = q.min(2 * k + 3);
                if max_n < 2 * k {
                    continue;
                }
                let n = 2 * k + (rng.next_u64() as usize) % (max_n - 2 * k + 1);
                let lam = EvalSet::new(f, distinct_points(f, n, &mut rng)).unwrap();
                let spec = match Family1Spec::new(lam.clone(), k, 1, None) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let d = n - 2 * k;
                // Random f of admissible degree, or a window-solved one on
                // even iterations so both verdicts appear.
                let coeffs: Vec<FieldElem> = if f1_cases.is_multiple_of(2) {
                    match spec.so_search(1 << 12).ok().flatten() {
                        Some((coeffs, _)) => coeffs,
                        None => (0..=d).map(|_| f.random_elem(&mut rng)).collect(),
                    }
                } else {
                    (0..=d).map(|_| f.random_elem(&mut rng)).collect()
                };
                if coeffs.iter().all(|&x| f.is_zero(x)) {
                    continue;
                }
                let mut v = Vec::with_capacity(n);
                let mut ok = true;
                for (&a, &u) in lam.points().iter().zip(lam.weights()) {
                    let w = f.mul(u, f.poly_eval(&coeffs, a));
                    if f.is_zero(w) || !f.is_square(w) {
                        ok = false;
                        break;
                    }
                    v.push(f.sqrt(w).unwrap());
                }
                if !ok {
                    continue;
                }
                let rep = match spec.so_check(&coeffs, &v) {
                    Ok(rep) => rep,
                    Err(e) => c_fail(&c, &format!("family-1 so_check errored: {e}")),
                };
                let direct = spec
                    .generator()
                    .unwrap()
                    .scale_columns(&v)
                    .unwrap()
                    .is_self_orthogonal();
                if rep.verdict != direct.verdict {
                    c_fail(
                        &c,
                        "family-1 certificate verdict disagrees with the Gram test",
                    );
                }
                f1_cases += 1;
                if f1_cases >= 200 {
                    break 'outer_f1;
                }
            }
        }

        // Family 2 (k >= 3, both regimes are iff).
        'outer_f2: while f2_cases < 200 {
            for f in &fields {
                let spec = random_f2_spec(f, &mut rng, false);
                let lam = spec.lambda().clone();
                let dbound = spec.n() as i64 - 2 * spec.k() as i64
                    + if spec.r() <= spec.k() - 2 {
                        1 - spec.r() as i64
                    } else {
                        2
                    };
                if dbound < 0 {
                    continue;
                }
                let coeffs: Vec<FieldElem> = if f2_cases.is_multiple_of(2) {
                    match spec.so_search(1 << 12).ok().flatten() {
                        Some((coeffs, _)) => coeffs,
                        None => (0..=dbound as usize)
                            .map(|_| f.random_elem(&mut rng))
                            .collect(),
                    }
                } else {
                    (0..=dbound as usize)
                        .map(|_| f.random_elem(&mut rng))
                        .collect()
                };
                if coeffs.iter().all(|&x| f.is_zero(x)) {
                    continue;
                }
                let mut v = Vec::with_capacity(spec.n());
                let mut ok = true;
                for (&a, &u) in lam.points().iter().zip(lam.weights()) {
                    let w = f.mul(u, f.poly_eval(&coeffs, a));
                    if f.is_zero(w) || !f.is_square(w) {
                        ok = false;
                        break;
                    }
                    v.push(f.sqrt(w).unwrap());
                }
                if !ok {
                    continue;
                }
                let rep = match spec.so_check(&coeffs, &v) {
                    Ok(rep) => rep,
                    Err(e) => c_fail(&c, &format!("family-2 so_check errored: {e}")),
                };
                let direct = spec
                    .generator()
                    .unwrap()
                    .scale_columns(&v)
                    .unwrap()
                    .is_self_orthogonal();
                if rep.verdict != direct.verdict {
                    c_fail(
                        &c,
                        "family-2 certificate verdict disagrees with the Gram test",
                    );
                }
                f2_cases += 1;
                if f2_cases >= 200 {
                    break 'outer_f2;
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10g_family1_distance_window() {
        let c = Criterion::new(
            "criterion 10g: family-1 distances lie in {n-k-1, n-k, n-k+1}",
            Duration::from_secs(300),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(106);
        let mut cases = 0usize;
        let fields = battery();
        while cases < 200 {
            for f in &fields {
                let spec = random_f1_spec(f, &mut rng);
                let q = f.order() as u128;
                let classes: u128 = (0..spec.k())
                    .map(|j| q.pow((spec.k() - 1 - j) as u32))
                    .sum();
                if classes > 60_000 {
                    continue;
                }
                let code = spec.generator().unwrap();
                let d = code
                    .min_distance(DEFAULT_CODEWORD_BUDGET)
                    .unwrap()
                    .distance()
                    .unwrap();
                let (n, k) = (spec.n(), spec.k());
                if !(d == n - k - 1 || d == n - k || d == n - k + 1) {
                    c_fail(
                        &c,
                        &format!(
                            "distance {d} outside the window for [{n},{k}], r = {}",
                            spec.r()
                        ),
                    );
                }
                cases += 1;
                if cases >= 200 {
                    break;
                }
            }
        }
        c.finish();
    }

    #[test]
    fn criterion_10_sigma_window_equals_s_window() {
        // Folded into suite (b) semantics but cheap and worth pinning: the
        // r = 1 subset criterion's two algebraic forms agree everywhere.
        let c = Criterion::new(
            "criterion 10 (extra): sigma-form and S-form of the r=1 window agree",
            Duration::from_secs(60),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for f in battery() {
            for _ in 0..200 {
                let n = 3 + (rng.next_u64() as usize) % 5;
                let n = n.min(f.order() as usize);
                let pts = distinct_points(&f, n, &mut rng);
                let s1 = complete_s(&f, 1, &pts);
                let s2 = complete_s(&f, 2, &pts);
                let s3 = complete_s(&f, 3, &pts);
                let s_form = f.sub(f.mul(s2, s2), f.mul(s1, s3));
                let g1 = sigma(&f, 1, &pts);
                let g2 = sigma(&f, 2, &pts);
                let g3 = sigma(&f, 3, &pts);
                let sig_form = f.sub(f.mul(g2, g2), f.mul(g1, g3));
                if s_form != sig_form {
                    c_fail(&c, "window forms disagree");
                }
            }
        }
        c.finish();
    }
}
