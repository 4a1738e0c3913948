use num_integer::Integer;

use crate::error::{Error, Result};

/// `[[b, c], [p/d, r/d]]` with `d = gcd(p, r)` and `br − cp = d`.
///
/// Precomposing a torus with index `(0, 2d)` by this automorphism gives
/// index `(2p, 2r)`.
pub fn sl2_realizer(p: i64, r: i64) -> Result<[[i64; 2]; 2]> {
    if p == 0 && r == 0 {
        return Err(Error::InvalidArgument(
            "(p, r) = (0, 0) has no realizer".into(),
        ));
    }
    let e = r.extended_gcd(&p);
    let (d, b, c) = if e.gcd < 0 {
        (-e.gcd, -e.x, e.y)
    } else {
        (e.gcd, e.x, -e.y)
    };
    Ok([[b, c], [p / d, r / d]])
}

pub fn gcd(p: i64, r: i64) -> i64 {
    p.gcd(&r)
}
