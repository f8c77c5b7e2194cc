//! The connectivity function and the separations it measures.

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A value of the connectivity function together with the set realising it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityValue {
    pub value: usize,
    pub argument: Mask,
}

/// `λ(X) = r(X) + r(E - X) - r(E)`.
pub fn lambda(m: &Matroid, x: Mask) -> ConnectivityValue {
    let x = x & m.ground();
    let value = m.rank_of(x) + m.rank_of(m.ground() & !x) - m.rank();
    debug_assert_eq!(value, lambda_by_definition(m, x));
    ConnectivityValue { value, argument: x }
}

/// `r(X) + r*(X) - |X|`, the defining form.
pub fn lambda_by_definition(m: &Matroid, x: Mask) -> usize {
    m.rank_of(x) + m.corank_of(x) - bits::size(x)
}

/// `κ(X, Y) = min { λ(S) : X ⊆ S ⊆ E - Y }`, by exhausting every admissible
/// `S`. The smallest minimising `S` (by mask) is returned.
pub fn kappa(m: &Matroid, x: Mask, y: Mask) -> Result<ConnectivityValue> {
    if x & y != 0 {
        return Err(Error::Precondition(format!(
            "{} and {} are not disjoint",
            bits::fmt_mask(x),
            bits::fmt_mask(y)
        )));
    }
    if (x | y) & !m.ground() != 0 {
        return Err(Error::Precondition("sets leave the ground set".into()));
    }
    let free = m.ground() & !(x | y);
    let mut best: Option<ConnectivityValue> = None;
    for s in bits::submasks(free) {
        let v = lambda(m, x | s);
        let better = match best {
            None => true,
            Some(b) => v.value < b.value || (v.value == b.value && v.argument < b.argument),
        };
        if better {
            best = Some(v);
        }
    }
    Ok(best.expect("the empty extension is always admissible"))
}

/// A `j`-separation with `j < k`, if one exists: a set `X` with
/// `min(|X|, |E - X|) >= j` and `λ(X) < j`.
pub fn separation_below(m: &Matroid, k: usize) -> Option<(usize, Mask)> {
    let n = m.n();
    for j in 1..k {
        for x in 0..=m.ground() {
            let small = bits::size(x).min(n - bits::size(x));
            if small >= j && lambda(m, x).value < j {
                return Some((j, x));
            }
        }
    }
    None
}

/// Tutte `k`-connectivity: no `j`-separation for any `j < k`.
pub fn is_connected_k(m: &Matroid, k: usize) -> bool {
    separation_below(m, k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::mask_of;

    fn k5() -> Matroid {
        let edges: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        Matroid::from_graph(&edges).unwrap()
    }

    #[test]
    fn lambda_trivia() {
        let m = k5();
        assert_eq!(lambda(&m, 0).value, 0);
        assert_eq!(lambda(&m, m.ground()).value, 0);
        for x in [0b1, 0b1011, 0b11_0101_0110] {
            assert_eq!(lambda(&m, x).value, lambda(&m, m.ground() & !x).value);
        }
    }

    #[test]
    fn kappa_bounds() {
        let m = k5();
        let x = mask_of([0, 1]);
        assert_eq!(kappa(&m, x, 0).unwrap().value, 0);
        let y = mask_of([7, 8, 9]);
        let k = kappa(&m, x, y).unwrap();
        assert!(k.value <= lambda(&m, x).value);
        assert_eq!(k.argument & x, x);
        assert_eq!(k.argument & y, 0);
        assert!(kappa(&m, x, x).is_err());
    }

    /// Oracle: 3-connectivity of K5 by exhausting all splits directly from
    /// the definition form of λ.
    #[test]
    fn k5_is_three_connected() {
        let m = k5();
        let mut worst = usize::MAX;
        for x in 0..=m.ground() {
            let s = bits::size(x).min(10 - bits::size(x));
            if s >= 2 {
                worst = worst.min(lambda_by_definition(&m, x));
            }
        }
        assert!(worst >= 2);
        assert!(is_connected_k(&m, 3));
    }

    #[test]
    fn direct_sum_is_disconnected() {
        // Two coloops: U_{1,1} ⊕ U_{1,1}.
        let m = Matroid::uniform(2, 2).unwrap();
        assert!(!is_connected_k(&m, 2));
        assert_eq!(separation_below(&m, 2), Some((1, 0b01)));
        assert!(is_connected_k(&Matroid::uniform(2, 4).unwrap(), 3));
    }
}
