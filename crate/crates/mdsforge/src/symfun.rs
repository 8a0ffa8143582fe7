//! Symmetric polynomial evaluation over finite fields.
//!
//! Elementary and complete homogeneous symmetric polynomials drive every
//! structural criterion in this crate: determinants of generalized
//! Vandermonde matrices factor through them, the dual weights u_i turn
//! Vandermonde rows into parity checks, and Schur polynomials tie the two
//! families of symmetric functions together via the Jacobi-Trudi
//! determinants.
//!
//! ```
//! use mdsforge::gf::FieldCtx;
//! use mdsforge::symfun::{sigma, complete_s};
//!
//! let f = FieldCtx::new(7, 1, None).unwrap();
//! let xs: Vec<_> = [1u64, 2, 3].iter().map(|&v| f.elem(v)).collect();
//! // sigma_2 = 1*2 + 1*3 + 2*3 = 11 = 4 (mod 7)
//! assert_eq!(sigma(&f, 2, &xs), f.elem(4));
//! // S_2 counts monomials with repetition: 1+4+9+2+3+6 = 25 = 4 (mod 7)
//! assert_eq!(complete_s(&f, 2, &xs), f.elem(4));
//! ```

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::matgf::MatGF;

/// Ordered evaluation set with cached dual weights
/// u_i = prod_{j != i} (alpha_i - alpha_j)^(-1).
#[derive(Clone)]
pub struct EvalSet {
    field: FieldCtx,
    points: Vec<FieldElem>,
    weights: Vec<FieldElem>,
}

impl EvalSet {
    /// Validates distinctness and caches the weights.
    pub fn new(field: &FieldCtx, points: Vec<FieldElem>) -> Result<Self> {
        for (i, &a) in points.iter().enumerate() {
            if !field.owns(a) {
                return Err(Error::FieldMismatch);
            }
            for (j, &b) in points.iter().enumerate().take(i) {
                if a == b {
                    return Err(Error::DuplicatePoints(j, i));
                }
            }
        }
        let weights = dual_weights_of(field, &points);
        Ok(EvalSet {
            field: field.clone(),
            points,
            weights,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[FieldElem] {
        &self.points
    }

    /// The cached dual weights, in point order.
    pub fn weights(&self) -> &[FieldElem] {
        &self.weights
    }

    /// sum_i u_i alpha_i^h. Equals 0 for h <= n-2 and S_{h-n+1} for h >= n-1.
    pub fn weighted_power_sum(&self, h: usize) -> FieldElem {
        let f = &self.field;
        let mut acc = f.zero();
        for (&a, &u) in self.points.iter().zip(&self.weights) {
            acc = f.add(acc, f.mul(u, f.pow(a, h as i64)));
        }
        acc
    }

    /// Determinant of the generalized Vandermonde matrix whose last row
    /// exponent is `h` (the rest being 0..n-2), via the closed form
    /// S_{h-n+1} * det(Vandermonde). Requires h >= n-1.
    pub fn gvdm_det(&self, h: usize) -> Result<FieldElem> {
        let n = self.len();
        if h + 1 < n {
            return Err(Error::BadDimension(format!(
                "generalized Vandermonde needs h >= n-1 (h = {h}, n = {n})"
            )));
        }
        let f = &self.field;
        let s = complete_s(f, (h + 1 - n) as i64, &self.points);
        Ok(f.mul(s, vandermonde_det(f, &self.points)))
    }
}

fn dual_weights_of(field: &FieldCtx, points: &[FieldElem]) -> Vec<FieldElem> {
    let n = points.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut prod = field.one();
        for j in 0..n {
            if j != i {
                prod = field.mul(prod, field.sub(points[i], points[j]));
            }
        }
        out.push(field.inv(prod));
    }
    out
}

/// Product formula for the Vandermonde determinant on the given points.
pub fn vandermonde_det(field: &FieldCtx, points: &[FieldElem]) -> FieldElem {
    let mut acc = field.one();
    for j in 0..points.len() {
        for i in 0..j {
            acc = field.mul(acc, field.sub(points[j], points[i]));
        }
    }
    acc
}

/// Elementary symmetric polynomial sigma_t: one pass over the product
/// expansion of prod (1 + x_i z), keeping coefficients up to degree t.
/// sigma_0 = 1 and sigma_t = 0 for t > n or t < 0.
pub fn sigma(field: &FieldCtx, t: i64, xs: &[FieldElem]) -> FieldElem {
    if t < 0 {
        return field.zero();
    }
    let t = t as usize;
    if t > xs.len() {
        return field.zero();
    }
    let mut coeffs = vec![field.zero(); t + 1];
    coeffs[0] = field.one();
    for (i, &x) in xs.iter().enumerate() {
        let hi = t.min(i + 1);
        for d in (1..=hi).rev() {
            coeffs[d] = field.add(coeffs[d], field.mul(coeffs[d - 1], x));
        }
    }
    coeffs[t]
}

/// Complete homogeneous symmetric polynomial S_t via the recurrence
/// S_t(x_1..x_j) = S_t(x_1..x_{j-1}) + x_j * S_{t-1}(x_1..x_j).
/// S_0 = 1 and S_t = 0 for t < 0.
pub fn complete_s(field: &FieldCtx, t: i64, xs: &[FieldElem]) -> FieldElem {
    if t < 0 {
        return field.zero();
    }
    let t = t as usize;
    if t == 0 {
        return field.one();
    }
    if xs.is_empty() {
        return field.zero();
    }
    // table[d] = S_d(x_1..x_j) as j advances
    let mut table = vec![field.zero(); t + 1];
    table[0] = field.one();
    for &x in xs {
        for d in 1..=t {
            table[d] = field.add(table[d], field.mul(x, table[d - 1]));
        }
    }
    table[t]
}

/// The alternating convolution sum_{t=0}^{N} (-1)^t sigma_t S_{N-t}, which is
/// identically zero for N >= 1. Exposed as a self-test hook.
pub fn newton_residual(field: &FieldCtx, n_deg: usize, xs: &[FieldElem]) -> FieldElem {
    assert!(n_deg >= 1, "the identity is stated for N >= 1");
    let mut acc = field.zero();
    for t in 0..=n_deg {
        let term = field.mul(
            sigma(field, t as i64, xs),
            complete_s(field, (n_deg - t) as i64, xs),
        );
        acc = if t % 2 == 0 {
            field.add(acc, term)
        } else {
            field.sub(acc, term)
        };
    }
    acc
}

/// Integer partition with weakly decreasing parts; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadDimension(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// (2, 2, ..., 2) with `reps` twos; the shape behind the deleted-rows
    /// minors criteria.
    pub fn rectangle_two(reps: usize) -> Self {
        Partition {
            parts: vec![2; reps],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition by column counting.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<usize> = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }
}

/// Schur polynomial evaluation via the Jacobi-Trudi determinant in complete
/// symmetric functions: det(S_{lambda_i - i + j}).
pub fn schur_poly(field: &FieldCtx, lambda: &Partition, xs: &[FieldElem]) -> Result<FieldElem> {
    if lambda.len() > xs.len() {
        // More parts than variables: the Schur polynomial vanishes.
        return Ok(field.zero());
    }
    if lambda.is_empty() {
        return Ok(field.one());
    }
    let l = lambda.len();
    let mut data = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            let t = lambda.parts()[i] as i64 - i as i64 + j as i64;
            data.push(complete_s(field, t, xs));
        }
    }
    MatGF::new(field, l, l, data)?.det()
}

/// Dual Jacobi-Trudi route: det(sigma_{lambda'_i - i + j}) over the conjugate
/// partition. Used to cross-check [`schur_poly`].
pub fn schur_poly_sigma_form(
    field: &FieldCtx,
    lambda: &Partition,
    xs: &[FieldElem],
) -> Result<FieldElem> {
    if lambda.len() > xs.len() {
        return Ok(field.zero());
    }
    if lambda.is_empty() {
        return Ok(field.one());
    }
    let conj = lambda.conjugate();
    let l = conj.len();
    let mut data = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            let t = conj.parts()[i] as i64 - i as i64 + j as i64;
            data.push(sigma(field, t, xs));
        }
    }
    MatGF::new(field, l, l, data)?.det()
}

/// Bialternant route: det(A_{lambda+delta}) / det(A_delta) with
/// delta = (n-1, ..., 1, 0). Requires pairwise distinct points.
pub fn schur_poly_bialternant(
    field: &FieldCtx,
    lambda: &Partition,
    xs: &[FieldElem],
) -> Result<FieldElem> {
    let n = xs.len();
    if lambda.len() > n {
        return Ok(field.zero());
    }
    let mut padded = lambda.parts().to_vec();
    padded.resize(n, 0);
    // Ascending row exponents, matching the Vandermonde convention in the
    // denominator so the permutation signs cancel.
    let exps: Vec<usize> = (0..n).map(|i| padded[n - 1 - i] + i).collect();
    let num = MatGF::power_rows(field, xs, &exps).det()?;
    let den = MatGF::vandermonde(field, xs).det()?;
    if field.is_zero(den) {
        return Err(Error::DuplicatePoints(0, 0));
    }
    Ok(field.div(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p, 1, None).unwrap()
    }

    fn elems(f: &FieldCtx, vs: &[u64]) -> Vec<FieldElem> {
        vs.iter().map(|&v| f.elem(v)).collect()
    }

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

    /// Direct subset-product oracle for sigma_t (exponential, tests only).
    fn sigma_oracle(f: &FieldCtx, t: usize, xs: &[FieldElem]) -> FieldElem {
        fn rec(
            f: &FieldCtx,
            xs: &[FieldElem],
            start: usize,
            left: usize,
            prod: FieldElem,
            acc: &mut FieldElem,
        ) {
            if left == 0 {
                *acc = f.add(*acc, prod);
                return;
            }
            for i in start..xs.len() {
                rec(f, xs, i + 1, left - 1, f.mul(prod, xs[i]), acc);
            }
        }
        let mut acc = f.zero();
        rec(f, xs, 0, t, f.one(), &mut acc);
        acc
    }

    /// Direct monomial oracle for S_t (exponential, tests only).
    fn complete_oracle(f: &FieldCtx, t: usize, xs: &[FieldElem]) -> FieldElem {
        fn rec(
            f: &FieldCtx,
            xs: &[FieldElem],
            idx: usize,
            left: usize,
            prod: FieldElem,
            acc: &mut FieldElem,
        ) {
            if idx == xs.len() {
                if left == 0 {
                    *acc = f.add(*acc, prod);
                }
                return;
            }
            if idx == xs.len() - 1 {
                *acc = f.add(*acc, f.mul(prod, f.pow(xs[idx], left as i64)));
                return;
            }
            let mut p = prod;
            for used in 0..=left {
                if used > 0 {
                    p = f.mul(p, xs[idx]);
                }
                rec(f, xs, idx + 1, left - used, p, acc);
            }
        }
        let mut acc = f.zero();
        rec(f, xs, 0, t, f.one(), &mut acc);
        acc
    }

    #[test]
    fn sigma_small_cases() {
        let f = gf(7);
        let xs = elems(&f, &[1, 2, 3]);
        assert_eq!(sigma_oracle(&f, 2, &xs), f.elem(4)); // frozen: 11 mod 7
        assert_eq!(sigma(&f, 2, &xs), f.elem(4));
        assert_eq!(sigma(&f, 0, &xs), f.one());
        assert_eq!(sigma(&f, 4, &xs), f.zero()); // t > n
        assert_eq!(sigma(&f, -1, &xs), f.zero());
    }

    #[test]
    fn sigma_dp_equals_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for f in [gf(7), gf(17), FieldCtx::new(2, 5, None).unwrap()] {
            for _ in 0..50 {
                let n = 1 + (rng.next_u64() % 12) as usize;
                let n = n.min(f.order() as usize);
                let xs: Vec<FieldElem> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
                for t in 0..=n {
                    assert_eq!(sigma(&f, t as i64, &xs), sigma_oracle(&f, t, &xs));
                }
            }
        }
    }

    #[test]
    fn complete_s_small_cases() {
        let f = gf(7);
        // S_2(a, b) = a^2 + ab + b^2 by definition at n = 2.
        let (a, b) = (f.elem(3), f.elem(5));
        let expect = f.add(f.add(f.mul(a, a), f.mul(a, b)), f.mul(b, b));
        assert_eq!(complete_s(&f, 2, &[a, b]), expect);
        assert_eq!(complete_s(&f, 0, &[a, b]), f.one());
        assert_eq!(complete_s(&f, -3, &[a, b]), f.zero());
    }

    #[test]
    fn complete_s_dp_equals_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for f in [gf(7), gf(17)] {
            for _ in 0..40 {
                let n = 1 + (rng.next_u64() % 5) as usize;
                let xs: Vec<FieldElem> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
                for t in 0..=6 {
                    assert_eq!(complete_s(&f, t as i64, &xs), complete_oracle(&f, t, &xs));
                }
            }
        }
    }

    #[test]
    fn newton_identity_holds() {
        let f = gf(7);
        let xs = elems(&f, &[1, 2, 3]);
        assert_eq!(newton_residual(&f, 1, &xs), f.zero());
        assert_eq!(newton_residual(&f, 2, &xs), f.zero());
        let f31 = gf(31);
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..1000 {
            let pts = distinct_points(&f31, 8, &mut rng);
            for n_deg in 1..=16 {
                assert_eq!(newton_residual(&f31, n_deg, &pts), f31.zero());
            }
        }
    }

    #[test]
    fn dual_weights_tiny_case() {
        let f = gf(7);
        let es = EvalSet::new(&f, elems(&f, &[0, 1])).unwrap();
        // u_1 = (0-1)^(-1) = -1 = 6, u_2 = (1-0)^(-1) = 1.
        assert_eq!(es.weights(), &[f.elem(6), f.elem(1)]);
    }

    #[test]
    fn dual_weights_reject_duplicates() {
        let f = gf(7);
        assert!(matches!(
            EvalSet::new(&f, elems(&f, &[1, 3, 1])),
            Err(Error::DuplicatePoints(0, 2))
        ));
    }

    #[test]
    fn dual_weights_solve_vandermonde_system() {
        // The weights are the unique solution of M_Lambda x = (0,...,0,1).
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for f in [gf(17), FieldCtx::new(2, 4, None).unwrap()] {
            for _ in 0..50 {
                let n = 2 + (rng.next_u64() % 5) as usize;
                let pts = distinct_points(&f, n, &mut rng);
                let es = EvalSet::new(&f, pts.clone()).unwrap();
                let m = MatGF::vandermonde(&f, &pts);
                let x = MatGF::new(&f, n, 1, es.weights().to_vec()).unwrap();
                let rhs = m.mat_mul(&x).unwrap();
                for r in 0..n - 1 {
                    assert!(f.is_zero(rhs.get(r, 0)));
                }
                assert_eq!(rhs.get(n - 1, 0), f.one());
            }
        }
    }

    #[test]
    fn weighted_power_sum_cases() {
        let f = gf(7);
        let es = EvalSet::new(&f, elems(&f, &[1, 2, 3])).unwrap();
        let n = es.len();
        assert_eq!(es.weighted_power_sum(n - 2), f.zero());
        assert_eq!(es.weighted_power_sum(n - 1), f.one()); // S_0 = 1
                                                           // h = n+1 gives S_2; direct sum oracle agrees with complete_s.
        assert_eq!(es.weighted_power_sum(n + 1), f.elem(4));
        assert_eq!(complete_s(&f, 2, es.points()), f.elem(4));
    }

    #[test]
    fn weighted_power_sum_matches_closed_form_randomized() {
        // sum u_i a_i^h = 0 for h <= n-2 and S_(h-n+1) for h >= n-1,
        // swept over 0 <= h <= 3n on random point sets.
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        for f in [gf(7), gf(17), FieldCtx::new(2, 4, None).unwrap()] {
            for _ in 0..60 {
                let n = 2 + (rng.next_u64() % 5) as usize;
                let pts = distinct_points(&f, n, &mut rng);
                let es = EvalSet::new(&f, pts).unwrap();
                for h in 0..=3 * n {
                    let got = es.weighted_power_sum(h);
                    let expect = if h + 2 <= n + 1 && h < n - 1 {
                        f.zero()
                    } else {
                        complete_s(&f, h as i64 - n as i64 + 1, es.points())
                    };
                    assert_eq!(got, expect, "n = {n}, h = {h}");
                }
            }
        }
    }

    #[test]
    fn gvdm_det_small_cases() {
        let f = gf(7);
        // n = 2: det = S_1 * (b - a) = (a+b)(b-a).
        let (a, b) = (f.elem(2), f.elem(6));
        let es = EvalSet::new(&f, vec![a, b]).unwrap();
        let expect = f.mul(f.add(a, b), f.sub(b, a));
        assert_eq!(es.gvdm_det(2).unwrap(), expect);

        // n = 3, {1,2,3}, h = 4: S_2 * D = 4 * 2 = 1 (mod 7); matgf oracle.
        let es = EvalSet::new(&f, elems(&f, &[1, 2, 3])).unwrap();
        assert_eq!(es.gvdm_det(4).unwrap(), f.elem(1));
        let direct = MatGF::power_rows(&f, es.points(), &[0, 1, 4])
            .det()
            .unwrap();
        assert_eq!(direct, f.elem(1));

        // h = n-1 degenerates to the plain Vandermonde determinant.
        assert_eq!(
            es.gvdm_det(2).unwrap(),
            MatGF::vandermonde(&f, es.points()).det().unwrap()
        );
    }

    #[test]
    fn gvdm_closed_form_matches_direct_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for f in [gf(7), gf(17), FieldCtx::new(2, 5, None).unwrap()] {
            for _ in 0..60 {
                let n = 2 + (rng.next_u64() % 6) as usize;
                let pts = distinct_points(&f, n, &mut rng);
                let es = EvalSet::new(&f, pts.clone()).unwrap();
                for h in (n - 1)..(n + 6) {
                    let mut exps: Vec<usize> = (0..n - 1).collect();
                    exps.push(h);
                    let direct = MatGF::power_rows(&f, &pts, &exps).det().unwrap();
                    assert_eq!(es.gvdm_det(h).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn partition_conjugation() {
        let p = Partition::new(&[2, 2]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 2]);
        let p = Partition::new(&[2, 2, 2]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 3]);
        let p = Partition::new(&[4, 2, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[4, 2, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
    }

    #[test]
    fn schur_22_is_the_quadratic_criterion() {
        // s_(2,2) = S_2^2 - S_1 S_3 = sigma_2^2 - sigma_1 sigma_3.
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for f in [gf(7), gf(17), FieldCtx::new(5, 2, None).unwrap()] {
            for _ in 0..100 {
                let n = 2 + (rng.next_u64() % 5) as usize;
                let xs: Vec<FieldElem> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
                let lam = Partition::rectangle_two(2);
                let s = schur_poly(&f, &lam, &xs).unwrap();
                let s2 = complete_s(&f, 2, &xs);
                let s1 = complete_s(&f, 1, &xs);
                let s3 = complete_s(&f, 3, &xs);
                assert_eq!(s, f.sub(f.mul(s2, s2), f.mul(s1, s3)));
                let g2 = sigma(&f, 2, &xs);
                let g1 = sigma(&f, 1, &xs);
                let g3 = sigma(&f, 3, &xs);
                assert_eq!(s, f.sub(f.mul(g2, g2), f.mul(g1, g3)));
            }
        }
    }

    #[test]
    fn schur_rectangle_matches_sigma_window() {
        // s_(2^(r+1)) = sigma_{r+1}^2 - sigma_r sigma_{r+2}.
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let f = gf(17);
        for _ in 0..100 {
            let n = 3 + (rng.next_u64() % 4) as usize;
            let r = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
            let xs: Vec<FieldElem> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
            let lam = Partition::rectangle_two(r + 1);
            if lam.len() > n {
                continue;
            }
            let s = schur_poly(&f, &lam, &xs).unwrap();
            let a = sigma(&f, r as i64 + 1, &xs);
            let b = sigma(&f, r as i64, &xs);
            let c = sigma(&f, r as i64 + 2, &xs);
            assert_eq!(s, f.sub(f.mul(a, a), f.mul(b, c)));
        }
    }

    #[test]
    fn schur_three_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for f in [gf(7), gf(17), FieldCtx::new(2, 4, None).unwrap()] {
            for _ in 0..60 {
                let n = 2 + (rng.next_u64() % 7) as usize;
                let n = n.min(f.order() as usize - 1);
                let pts = distinct_points(&f, n, &mut rng);
                // Random partition of weight <= 6 with at most n parts.
                let mut parts: Vec<usize> = Vec::new();
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
                let c = schur_poly_bialternant(&f, &lam, &pts).unwrap();
                assert_eq!(a, b, "S-form vs sigma-form, lambda = {:?}", lam.parts());
                assert_eq!(a, c, "S-form vs bialternant, lambda = {:?}", lam.parts());
            }
        }
    }
}
