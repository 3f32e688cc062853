//! Greatest common divisors in `Q[q,t]` via primitive polynomial remainder
//! sequences.
//!
//! The bivariate input is viewed as a polynomial in a main variable (the one
//! of lower degree) with coefficients in `Z[y]`, where `y` is the other
//! variable. Contents are removed with the univariate gcd in `Z[y]`, and the
//! remainder sequence is kept primitive at every step. No interpolation and
//! no randomness is involved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::qtpoly::QtPoly;

/// Dense univariate polynomial over `Z`, lowest degree first, trimmed.
type UPoly = Vec<BigInt>;

fn utrim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn ucontent(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uscale(p: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    utrim(&mut out);
    out
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let len = a.len().max(b.len());
    let mut out: UPoly = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    utrim(&mut out);
    out
}

/// Exact quotient over `Z`, `None` if the division leaves a remainder.
fn uexact_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lb = b.last().unwrap();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = &rem[k + b.len() - 1];
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[k + j] -= &c * y;
            }
        }
        quo[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    utrim(&mut quo);
    Some(quo)
}

fn uprimitive(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = ucontent(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next = uscale(&r, &lb);
        for (j, y) in b.iter().enumerate() {
            next[shift + j] -= &lr * y;
        }
        utrim(&mut next);
        r = next;
    }
    r
}

/// Primitive gcd over `Q[y]`, normalized to integer content one and a
/// positive leading coefficient. `gcd(0, 0) = 0`.
fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = uprimitive(a);
    let mut y = uprimitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.is_empty() {
            return x;
        }
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = uprem(&x, &y);
        x = y;
        y = uprimitive(&r);
    }
}

/// Bivariate polynomial as a dense vector (main variable) of `Z[y]`.
type BPoly = Vec<UPoly>;

fn btrim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn to_bpoly(p: &QtPoly, main_is_q: bool) -> BPoly {
    let mut out: BPoly = Vec::new();
    for ((a, b), c) in p.terms() {
        let (x, y) = if main_is_q { (*a, *b) } else { (*b, *a) };
        let (x, y) = (x as usize, y as usize);
        if out.len() <= x {
            out.resize(x + 1, Vec::new());
        }
        if out[x].len() <= y {
            out[x].resize(y + 1, BigInt::zero());
        }
        out[x][y] = c.clone();
    }
    btrim(&mut out);
    out
}

fn from_bpoly(p: &BPoly, main_is_q: bool) -> QtPoly {
    let mut terms = Vec::new();
    for (x, coeff) in p.iter().enumerate() {
        for (y, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                let e = if main_is_q { (x as u32, y as u32) } else { (y as u32, x as u32) };
                terms.push((e, c.clone()));
            }
        }
    }
    QtPoly::from_terms(terms)
}

fn bcontent(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { uprimitive(c) } else { ugcd(&g, c) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

/// Divides out both the `Z[y]` content and the integer content.
fn bprimitive(p: &BPoly) -> BPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let cont = bcontent(p);
    let mut out: BPoly = if cont.len() <= 1 {
        p.clone()
    } else {
        p.iter().map(|c| uexact_div(c, &cont).expect("content divides every coefficient")).collect()
    };
    let mut ic = BigInt::zero();
    for c in &out {
        ic = ic.gcd(&ucontent(c));
    }
    if !ic.is_one() && !ic.is_zero() {
        for c in out.iter_mut() {
            for x in c.iter_mut() {
                *x = &*x / &ic;
            }
        }
    }
    out
}

fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next: BPoly = r.iter().map(|c| umul(c, &lb)).collect();
        for (j, y) in b.iter().enumerate() {
            next[shift + j] = usub(&next[shift + j], &umul(&lr, y));
        }
        btrim(&mut next);
        r = next;
    }
    r
}

/// Normalizes to integer content one with a positive leading coefficient.
pub(crate) fn normalize_primitive(p: &QtPoly) -> QtPoly {
    if p.is_zero() {
        return QtPoly::zero();
    }
    let mut c = p.content();
    if p.leading().unwrap().1.is_negative() {
        c = -c;
    }
    p.div_int_exact(&c)
}

/// gcd over `Q[q,t]`, returned primitive over `Z` with positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn qt_gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() {
        return normalize_primitive(b);
    }
    if b.is_zero() {
        return normalize_primitive(a);
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    if a.is_monomial() || b.is_monomial() {
        return QtPoly::monomial(BigInt::one(), mono.0, mono.1);
    }
    let a1 = a.unshift(ma.0, ma.1);
    let b1 = b.unshift(mb.0, mb.1);
    if a1.is_constant() || b1.is_constant() {
        return QtPoly::monomial(BigInt::one(), mono.0, mono.1);
    }
    if normalize_primitive(&a1) == normalize_primitive(&b1) {
        return normalize_primitive(&a1).shift(mono.0, mono.1);
    }
    let deg_q = a1.degree_q().max(b1.degree_q());
    let deg_t = a1.degree_t().max(b1.degree_t());
    // The main variable is the one of lower degree; ties go to q.
    let main_is_q = deg_q <= deg_t;
    let pa = to_bpoly(&a1, main_is_q);
    let pb = to_bpoly(&b1, main_is_q);
    let cont = ugcd(&bcontent(&pa), &bcontent(&pb));
    let mut x = bprimitive(&pa);
    let mut y = bprimitive(&pb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.is_empty() {
            break x;
        }
        if y.len() == 1 {
            break vec![vec![BigInt::one()]];
        }
        let r = bprem(&x, &y);
        x = y;
        y = bprimitive(&r);
    };
    let g: BPoly = g.iter().map(|c| umul(c, &cont)).collect();
    normalize_primitive(&from_bpoly(&g, main_is_q)).shift(mono.0, mono.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = QtPoly::one_minus(1, 1);
        let g = QtPoly::one_minus(0, 1);
        let h = QtPoly::one_minus(2, 3);
        let a = &(&f * &g) * &g;
        let b = &(&f * &h) * &QtPoly::constant(6);
        assert_eq!(qt_gcd(&a, &b), normalize_primitive(&f));
        assert_eq!(qt_gcd(&g, &h), QtPoly::one());
    }

    #[test]
    fn gcd_with_monomial_factors() {
        let a = p(&[((1, 2), 2), ((2, 2), 4)]);
        let b = p(&[((1, 1), 3), ((2, 1), 6)]);
        // 2qt^2(1+2q) and 3qt(1+2q)
        assert_eq!(qt_gcd(&a, &b), p(&[((1, 1), 1), ((2, 1), 2)]));
    }

    #[test]
    fn gcd_is_sign_normalized() {
        let a = -QtPoly::one_minus(1, 1);
        let g = qt_gcd(&a, &a);
        assert_eq!(g.leading_sign(), std::cmp::Ordering::Greater);
        assert_eq!(g, p(&[((0, 0), -1), ((1, 1), 1)]));
    }

    #[test]
    fn univariate_helpers() {
        let a: UPoly = vec![BigInt::from(-1), BigInt::zero(), BigInt::one()];
        let b: UPoly = vec![BigInt::from(-1), BigInt::one()];
        assert_eq!(uexact_div(&a, &b), Some(vec![BigInt::one(), BigInt::one()]));
        assert_eq!(ugcd(&a, &b), b);
    }
}
