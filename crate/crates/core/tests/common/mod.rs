//! Independent oracles for the integration tests. Nothing here uses the
//! library's normal forms: divisibility, equality, joins and meets of
//! positive words are decided by right subword reversing on the braid
//! relations alone.

#![allow(dead_code)]

use artin_core::{build_system, ArtinElement, CoxeterMatrix, Garside, DEFAULT_CAP};
use rand::Rng;

pub fn garside(m: CoxeterMatrix) -> Garside {
    Garside::new(build_system(m, DEFAULT_CAP).unwrap())
}

pub fn a2() -> Garside {
    garside(CoxeterMatrix::type_a(2))
}

pub fn a3() -> Garside {
    garside(CoxeterMatrix::type_a(3))
}

pub fn i2(m: u32) -> Garside {
    garside(CoxeterMatrix::dihedral(m))
}

/// `s t s ...` with `len` letters.
fn alternating(s: usize, t: usize, len: usize) -> Vec<usize> {
    (0..len).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Letter {
    Pos(usize),
    Neg(usize),
}

/// Braid relations of a Coxeter matrix, used for word reversing.
pub struct Reversing {
    m: Vec<Vec<u32>>,
}

impl Reversing {
    pub fn new(matrix: &CoxeterMatrix) -> Self {
        let n = matrix.rank();
        Reversing {
            m: (0..n).map(|s| (0..n).map(|t| matrix.m(s, t)).collect()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Right reversing of `u⁻¹v` to `v' u'⁻¹`; returns `(v', u')` with
    /// `u·v' = v·u'` equal to the least common multiple.
    pub fn reverse(&self, u: &[usize], v: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut w: Vec<Letter> = u.iter().rev().map(|&s| Letter::Neg(s)).collect();
        w.extend(v.iter().map(|&s| Letter::Pos(s)));
        let mut i = 0;
        while i + 1 < w.len() {
            if let (Letter::Neg(s), Letter::Pos(t)) = (w[i], w[i + 1]) {
                let replacement: Vec<Letter> = if s == t {
                    Vec::new()
                } else {
                    let k = self.m[s][t] as usize - 1;
                    let mut r: Vec<Letter> = alternating(t, s, k).into_iter().map(Letter::Pos).collect();
                    r.extend(alternating(s, t, k).into_iter().rev().map(Letter::Neg));
                    r
                };
                w.splice(i..i + 2, replacement);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        let vp = w.iter().filter_map(|l| if let Letter::Pos(s) = l { Some(*s) } else { None }).collect();
        let up = w
            .iter()
            .rev()
            .filter_map(|l| if let Letter::Neg(s) = l { Some(*s) } else { None })
            .collect();
        (vp, up)
    }

    /// `u` left-divides `v`.
    pub fn divides(&self, u: &[usize], v: &[usize]) -> bool {
        self.reverse(v, u).0.is_empty()
    }

    pub fn equal(&self, u: &[usize], v: &[usize]) -> bool {
        u.len() == v.len() && self.divides(u, v) && self.divides(v, u)
    }

    pub fn join(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let (vp, _) = self.reverse(u, v);
        u.iter().chain(&vp).copied().collect()
    }

    /// `u⁻¹v` for `u | v`.
    pub fn cancel(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        self.reverse(u, v).0
    }

    /// Greatest common divisor, by searching candidate words longest first.
    pub fn meet(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let max = u.len().min(v.len());
        for len in (0..=max).rev() {
            for w in words_of_length(self.rank(), len) {
                if self.divides(&w, u) && self.divides(&w, v) {
                    return w;
                }
            }
        }
        unreachable!("the empty word divides everything")
    }
}

pub fn words_of_length(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(rank: usize, len: usize) -> Vec<Vec<usize>> {
    (0..=len).flat_map(|l| words_of_length(rank, l)).collect()
}

/// Generator word of a positive element's normal form (atom words joined).
pub fn word_of(g: &Garside, x: &artin_core::PositiveElement) -> Vec<usize> {
    x.atoms()
        .iter()
        .flat_map(|a| g.system().word(a.element()).iter().map(|&s| s as usize))
        .collect()
}

pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

/// A random element `Δ^k · (atoms)` with `k ∈ [-2, 2]` and up to
/// `max_atoms` random atoms.
pub fn random_element(g: &Garside, rng: &mut impl Rng, max_atoms: usize) -> ArtinElement {
    let atoms: Vec<_> = g.atoms().collect();
    let n = rng.gen_range(0..=max_atoms);
    let word: Vec<_> = (0..n).map(|_| atoms[rng.gen_range(0..atoms.len())]).collect();
    g.canonical(rng.gen_range(-2..=2), &word)
}
