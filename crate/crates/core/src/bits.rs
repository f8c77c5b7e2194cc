//! Bitmask helpers for subsets of a ground set of at most [`MAX_ELEMENTS`]
//! elements. Element `i` is bit `1 << i`.

/// A subset of the ground set.
pub type Mask = u32;

/// Largest ground set any matroid in this crate may have.
pub const MAX_ELEMENTS: usize = 16;

/// The full set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= 31);
    (1u32 << n) - 1
}

#[inline]
pub fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Builds a mask from element indices.
pub fn mask_of<I: IntoIterator<Item = usize>>(elems: I) -> Mask {
    elems.into_iter().fold(0, |m, e| m | (1 << e))
}

/// Iterates the elements of `m` in increasing order.
pub fn elements(m: Mask) -> impl Iterator<Item = usize> {
    let mut rest = m;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(e)
        }
    })
}

/// All `k`-element subsets of `{0, .., n-1}` in increasing numeric order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit: u64 = 1 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as Mask)
    })
}

/// All submasks of `m`, starting with `m` itself and ending with `0`.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Packs the bits of `m` that lie in `keep` into the low bits, preserving
/// order. This is how restriction relabels a subset densely.
#[inline]
pub fn compress(m: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    let mut j = 0;
    for e in elements(keep) {
        if m & (1 << e) != 0 {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `m` onto the elements
/// of `onto`.
#[inline]
pub fn expand(m: Mask, onto: Mask) -> Mask {
    let mut out = 0;
    for (j, e) in elements(onto).enumerate() {
        if m & (1 << j) != 0 {
            out |= 1 << e;
        }
    }
    out
}

/// Fills `table[x] = f(expand(x, onto))` for every subset `x` of a dense
/// ground set of size `|onto|`, in one pass.
pub fn pull_back<T: Copy>(onto: Mask, f: impl Fn(Mask) -> T, zero: T) -> Vec<T> {
    let n = size(onto);
    let spots: Vec<Mask> = elements(onto).map(|e| 1 << e).collect();
    let mut image = vec![0 as Mask; 1 << n];
    let mut out = vec![zero; 1 << n];
    out[0] = f(0);
    for x in 1usize..(1 << n) {
        let low = x.trailing_zeros() as usize;
        image[x] = image[x & (x - 1)] | spots[low];
        out[x] = f(image[x]);
    }
    out
}

/// Formats a mask as `{0,3,5}`.
pub fn fmt_mask(m: Mask) -> String {
    let parts: Vec<String> = elements(m).map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn k_subsets_counts_and_order() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let all: Vec<Mask> = k_subsets(n, k).collect();
                let expected = if k > n { 0 } else { binom(n, k) };
                assert_eq!(all.len(), expected, "n={n} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|&m| size(m) == k && m <= full(n)));
            }
        }
    }

    #[test]
    fn k_subsets_of_sixteen() {
        assert_eq!(k_subsets(16, 8).count(), 12870);
        assert_eq!(k_subsets(16, 16).collect::<Vec<_>>(), vec![0xffff]);
    }

    #[test]
    fn submasks_cover_powerset() {
        let m = 0b1011_0100;
        let subs: Vec<Mask> = submasks(m).collect();
        assert_eq!(subs.len(), 16);
        assert_eq!(subs[0], m);
        assert_eq!(*subs.last().unwrap(), 0);
        assert!(subs.iter().all(|&s| s & !m == 0));
    }

    #[test]
    fn compress_expand_inverse() {
        let keep = 0b1101_0110;
        for x in 0..(1 << size(keep)) {
            assert_eq!(compress(expand(x, keep), keep), x);
        }
        assert_eq!(compress(0b0100_0100, keep), 0b1010);
    }

    #[test]
    fn pull_back_matches_expand() {
        let keep = 0b1010_0011;
        let table = pull_back(keep, |m| m, 0);
        for (x, &v) in table.iter().enumerate() {
            assert_eq!(v, expand(x as Mask, keep));
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_mask(0), "{}");
        assert_eq!(fmt_mask(0b1001), "{0,3}");
        assert_eq!(mask_of([0, 3]), 0b1001);
    }
}
