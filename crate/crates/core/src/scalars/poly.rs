//! Dense polynomials over F_p, low degree first. Used only to validate and
//! apply field moduli.

pub fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn inv_mod_p(a: u32, p: u32) -> u32 {
    let (a, p) = (a as u64 % p as u64, p as u64);
    let mut acc = 1u64;
    let mut base = a;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    acc as u32
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut m = m.to_vec();
    trim(&mut m);
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p) as u64;
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = *r.last().unwrap() as u64 * lead_inv % p as u64;
        for (i, &mi) in m.iter().enumerate() {
            let t = (c * mi as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn powmod(base: &[u32], mut k: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(base, m, p);
    while k > 0 {
        if k & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        k >>= 1;
    }
    acc
}

fn eval(f: &[u32], x: u32, p: u32) -> u32 {
    f.iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of a monic polynomial over F_p. Degrees up to three are
/// decided by looking for roots; larger degrees use Rabin's test built on
/// x^{p^e} − x.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let e = f.len().saturating_sub(1) as u32;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    if e <= 3 {
        return (0..p).all(|x| eval(&f, x, p) != 0);
    }
    let x = vec![0, 1];
    // x^{p^k} mod f for k = 0..=e
    let mut frob = vec![rem(&x, &f, p)];
    for _ in 0..e {
        let next = powmod(frob.last().unwrap(), p as u64, &f, p);
        frob.push(next);
    }
    if !sub(&frob[e as usize], &x, p).is_empty() {
        return false;
    }
    prime_divisors(e).into_iter().all(|r| {
        let g = gcd(&f, &sub(&frob[(e / r) as usize], &x, p), p);
        g.len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|x| eval(f, x, p) == 0)
    }

    #[test]
    fn small_degree_matches_root_search() {
        // x^2 + 1 over F_3 and F_5
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(!has_root(&[1, 0, 1], 3));
    }

    #[test]
    fn rabin_on_degree_four() {
        // x^4 + x + 1 irreducible over F_2; x^4 + x^2 + 1 = (x^2+x+1)^2 is not
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // (x^2+1)(x^2+x+2) over F_3 has no roots but factors
        let f = mul(&[1, 0, 1], &[2, 1, 1], 3);
        assert!(!has_root(&f, 3));
        assert!(!is_irreducible(&f, 3));
    }

    #[test]
    fn exhaustive_degree_four_over_f2() {
        // exactly three irreducible quartics over F_2
        let count = (0u32..16)
            .filter(|bits| {
                let mut f: Vec<u32> = (0..4).map(|i| (bits >> i) & 1).collect();
                f.push(1);
                is_irreducible(&f, 2)
            })
            .count();
        assert_eq!(count, 3);
    }
}
