//! Exact arithmetic in the cyclotomic ring `Z[ζ_N]`.
//!
//! Only used while enumerating a Coxeter group: the reflection matrices of the
//! canonical representation have entries `2cos(π/m)`, which are algebraic
//! integers in `Z[ζ_{2L}]` for `L = lcm(m)`. Elements are stored in the power
//! basis `1, ζ, …, ζ^{φ(N)-1}` reduced modulo the cyclotomic polynomial, so
//! equality is coefficientwise.

/// Integer polynomial, coefficient `i` multiplies `x^i`.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Division by a monic polynomial. Returns `(quotient, remainder)`.
pub fn divrem_monic(a: &[i64], b: &[i64]) -> (IntPoly, IntPoly) {
    assert_eq!(b.last(), Some(&1), "divisor must be monic");
    let db = b.len() - 1;
    let mut r: IntPoly = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (vec![0], r);
    }
    let mut q = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i - db + j] -= c * bj;
        }
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// The `n`-th cyclotomic polynomial, obtained from `x^n - 1` by dividing out
/// every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut table: Vec<Option<IntPoly>> = vec![None; n + 1];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut p = vec![0i64; d + 1];
        p[0] = -1;
        p[d] = 1;
        for e in 1..d {
            if d % e == 0 {
                let phi_e = table[e].as_ref().expect("divisors visited in order");
                let (q, r) = divrem_monic(&p, phi_e);
                debug_assert!(r.iter().all(|&c| c == 0));
                p = q;
            }
        }
        table[d] = Some(p);
    }
    table[n].take().unwrap()
}

/// An element of `Z[ζ_N]`; the canonical representation only ever produces
/// real elements, hence the name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactReal {
    pub coeffs: Vec<i64>,
}

/// Ring context: the conductor `N` and the reduction modulus `Φ_N`.
#[derive(Debug, Clone)]
pub struct CyclotomicRing {
    conductor: usize,
    modulus: IntPoly,
}

impl CyclotomicRing {
    pub fn new(conductor: usize) -> Self {
        CyclotomicRing {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    fn reduce(&self, p: IntPoly) -> ExactReal {
        let (_, r) = divrem_monic(&p, &self.modulus);
        let mut coeffs = vec![0; self.degree()];
        for (i, c) in r.into_iter().enumerate() {
            coeffs[i] = c;
        }
        ExactReal { coeffs }
    }

    pub fn zero(&self) -> ExactReal {
        ExactReal {
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn integer(&self, n: i64) -> ExactReal {
        let mut z = self.zero();
        z.coeffs[0] = n;
        z
    }

    pub fn one(&self) -> ExactReal {
        self.integer(1)
    }

    /// `ζ_N^e` for any integer exponent.
    pub fn zeta_pow(&self, e: i64) -> ExactReal {
        let n = self.conductor as i64;
        let e = e.rem_euclid(n) as usize;
        let mut p = vec![0; e + 1];
        p[e] = 1;
        self.reduce(p)
    }

    /// `2cos(π/m)`, requiring `2m | N`.
    pub fn two_cos_pi_over(&self, m: usize) -> ExactReal {
        assert!(
            self.conductor.is_multiple_of(2 * m),
            "conductor {} does not support cos(pi/{m})",
            self.conductor
        );
        let e = (self.conductor / (2 * m)) as i64;
        self.add(&self.zeta_pow(e), &self.zeta_pow(-e))
    }

    pub fn add(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        ExactReal {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        ExactReal {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn mul(&self, a: &ExactReal, b: &ExactReal) -> ExactReal {
        let d = self.degree();
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut p = vec![0i64; 2 * d];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        self.reduce(p)
    }
}

impl ExactReal {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_30 has degree φ(30) = 8
        assert_eq!(cyclotomic_polynomial(30).len(), 9);
    }

    #[test]
    fn golden_ratio_relation() {
        // φ = 2cos(π/5) satisfies φ² = φ + 1
        let ring = CyclotomicRing::new(10);
        let phi = ring.two_cos_pi_over(5);
        assert_eq!(ring.mul(&phi, &phi), ring.add(&phi, &ring.one()));
    }

    #[test]
    fn known_cosines() {
        let ring = CyclotomicRing::new(24);
        // 2cos(π/2) = 0, 2cos(π/3) = 1, 2cos(π) = -2
        assert!(ring.two_cos_pi_over(2).is_zero());
        assert_eq!(ring.two_cos_pi_over(3), ring.one());
        assert_eq!(ring.two_cos_pi_over(1), ring.integer(-2));
        // (2cos(π/4))² = 2, (2cos(π/6))² = 3
        let r2 = ring.two_cos_pi_over(4);
        assert_eq!(ring.mul(&r2, &r2), ring.integer(2));
        let r3 = ring.two_cos_pi_over(6);
        assert_eq!(ring.mul(&r3, &r3), ring.integer(3));
    }
}
