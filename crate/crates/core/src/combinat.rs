//! Small combinatorial helpers over subsets of `[n]` encoded as `u64` masks.

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// All `k`-subsets of `[n]` in increasing numeric order (Gosper's hack).
pub fn layer(n: u32, k: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(binomial(n as u64, k as u64) as usize);
    if k == 0 {
        out.push(0);
        return out;
    }
    if k > n {
        return out;
    }
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut x: u64 = (1u64 << k) - 1;
    loop {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if n < 64 && x >= limit {
            break;
        }
    }
    out
}

/// Position of `mask` among the `popcount(mask)`-subsets in numeric order.
pub fn rank_in_layer(mask: u64) -> u64 {
    let mut rank = 0;
    let mut rest = mask;
    let mut i = 1;
    while rest != 0 {
        let pos = rest.trailing_zeros() as u64;
        rank += binomial(pos, i);
        rest &= rest - 1;
        i += 1;
    }
    rank
}

/// Inverse of [`rank_in_layer`] for `k`-subsets of `[n]`.
pub fn unrank_in_layer(n: u32, k: u32, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut top = n as u64;
    for i in (1..=k as u64).rev() {
        // largest c < top with C(c, i) <= rank
        let mut c = top - 1;
        while binomial(c, i) > rank {
            c -= 1;
        }
        mask |= 1u64 << c;
        rank -= binomial(c, i);
        top = c;
    }
    mask
}

/// Submasks of `mask`, excluding `0` and `mask` itself.
pub fn proper_nonempty_submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    std::iter::from_fn(move || {
        if sub == 0 {
            return None;
        }
        sub = (sub - 1) & mask;
        if sub == 0 {
            None
        } else {
            Some(sub)
        }
    })
}

/// Renders a subset of `[n]` with 1-based indices, e.g. `1,2,4`.
pub fn subset_label(mask: u64) -> String {
    let mut parts = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        parts.push((rest.trailing_zeros() + 1).to_string());
        rest &= rest - 1;
    }
    parts.join(",")
}
