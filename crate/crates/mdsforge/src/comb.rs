//! Lexicographic k-combination iteration with unranking, so subset scans can
//! be chunked across workers while keeping first-witness determinism.

/// Binomial coefficient as u128, saturating at u128::MAX.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The combination of rank `rank` (lexicographic order) among k-subsets of
/// 0..n.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut c = 0;
    for i in 0..k {
        loop {
            let count = binomial(n - 1 - c, k - 1 - i);
            if rank < count {
                break;
            }
            rank -= count;
            c += 1;
        }
        out.push(c);
        c += 1;
    }
    out
}

/// Advances `indices` to the next combination in lexicographic order.
/// Returns false once the last combination has been passed.
pub fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(18, 4), 3060);
        assert_eq!(binomial(128, 3), 341_376);
        assert_eq!(binomial(130, 3), 357_760);
        assert_eq!(binomial(26, 11), 7_726_160);
        assert_eq!(binomial(30, 13), 119_759_850);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn unrank_agrees_with_stepping() {
        let (n, k) = (9, 4);
        let mut cur: Vec<usize> = (0..k).collect();
        let mut rank = 0u128;
        loop {
            assert_eq!(unrank(n, k, rank), cur);
            if !next_combination(&mut cur, n) {
                break;
            }
            rank += 1;
        }
        assert_eq!(rank + 1, binomial(n, k));
    }
}
