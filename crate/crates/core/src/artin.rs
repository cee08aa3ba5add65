//! Canonical forms `Δ^k·x` in the Artin group `A`, the quotient
//! `G = A/⟨Δ²⟩`, and the vertex set `V = A/⟨Δ⟩` of the complex.

use crate::coxeter::Element;
use crate::garside::{Atom, Garside, PositiveElement};

/// `Δ^k · pos` with `pos` a `Δ`-free normal form; every element of `A` has
/// exactly one such form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArtinElement {
    k: i64,
    pos: PositiveElement,
}

impl ArtinElement {
    pub fn identity() -> Self {
        ArtinElement::default()
    }

    pub fn delta_power(k: i64) -> Self {
        ArtinElement {
            k,
            pos: PositiveElement::identity(),
        }
    }

    /// Exponent of `Δ`.
    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn pos(&self) -> &PositiveElement {
        &self.pos
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.pos.is_empty()
    }

    /// Whether the element is trivial in `G = A/⟨Δ²⟩`.
    pub fn is_trivial_in_g(&self) -> bool {
        self.k.rem_euclid(2) == 0 && self.pos.is_empty()
    }

    /// Atom count of the `Δ`-free part.
    pub fn atomnorm(&self) -> usize {
        self.pos.len()
    }

    /// Representative of the image in `G` with `k ∈ {0, 1}`.
    pub fn reduce_mod_delta_squared(&self) -> ArtinElement {
        ArtinElement {
            k: self.k.rem_euclid(2),
            pos: self.pos.clone(),
        }
    }
}

/// A vertex of `X(G)`, stored as its special representative: the `Δ`-free
/// normal form of its coset. The empty form is the basepoint `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GVertex {
    pos: PositiveElement,
}

impl GVertex {
    pub fn base() -> Self {
        GVertex::default()
    }

    pub fn pos(&self) -> &PositiveElement {
        &self.pos
    }

    pub fn is_base(&self) -> bool {
        self.pos.is_empty()
    }

    /// `|v|`, the atom count of the special representative.
    pub fn atomnorm(&self) -> usize {
        self.pos.len()
    }
}

impl Garside {
    /// Canonical form of `Δ^k · A₁A₂⋯A_n`.
    pub fn canonical(&self, k: i64, atoms: &[Atom]) -> ArtinElement {
        self.absorb_deltas(k, self.normalize(atoms))
    }

    fn absorb_deltas(&self, k: i64, nf: PositiveElement) -> ArtinElement {
        let j = self.delta_prefix(&nf);
        ArtinElement {
            k: k + j as i64,
            pos: nf.suffix_from(j),
        }
    }

    pub fn artin_from_positive(&self, x: &PositiveElement) -> ArtinElement {
        self.absorb_deltas(0, x.clone())
    }

    pub fn artin_generator(&self, s: usize) -> ArtinElement {
        self.canonical(0, &[self.generator(s)])
    }

    pub fn artin_atom(&self, a: Atom) -> ArtinElement {
        self.canonical(0, &[a])
    }

    /// Product of a word in the generators.
    pub fn artin_from_generators(&self, word: &[usize]) -> ArtinElement {
        self.artin_from_positive(&self.from_generators(word))
    }

    fn bar_pow(&self, x: &PositiveElement, k: i64) -> PositiveElement {
        if k.rem_euclid(2) == 1 {
            self.bar_positive(x)
        } else {
            x.clone()
        }
    }

    /// Canonical product, using `p·Δ^b = Δ^b·bar^b(p)`.
    pub fn mul(&self, x: &ArtinElement, y: &ArtinElement) -> ArtinElement {
        let p = self.bar_pow(&x.pos, y.k);
        let nf = self.multiply(&p, &y.pos);
        self.absorb_deltas(x.k + y.k, nf)
    }

    /// Group inverse. With `C_i B_i = Δ` one has `B_i⁻¹ = Δ⁻¹C_i`, and the
    /// `Δ⁻¹` factors are commuted to the front through bar.
    pub fn inv(&self, x: &ArtinElement) -> ArtinElement {
        let m = x.pos.len();
        let atoms: Vec<Atom> = x
            .pos
            .atoms()
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &b)| self.bar_atom_pow(self.left_complement(b), i as i64 + x.k))
            .collect();
        self.canonical(-(m as i64) - x.k, &atoms)
    }

    pub fn pow(&self, x: &ArtinElement, n: u32) -> ArtinElement {
        let mut acc = ArtinElement::identity();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `h·g·h⁻¹`.
    pub fn conjugate(&self, g: &ArtinElement, h: &ArtinElement) -> ArtinElement {
        self.mul(&self.mul(h, g), &self.inv(h))
    }

    /// Equality in `G = A/⟨Δ²⟩`.
    pub fn eq_in_g(&self, x: &ArtinElement, y: &ArtinElement) -> bool {
        (x.k - y.k).rem_euclid(2) == 0 && x.pos == y.pos
    }

    /// The special representative of the coset `x⟨Δ⟩`.
    pub fn to_vertex(&self, x: &ArtinElement) -> GVertex {
        GVertex {
            pos: self.bar_pow(&x.pos, x.k),
        }
    }

    /// The vertex `x(*)` for a positive element.
    pub fn vertex_of_positive(&self, x: &PositiveElement) -> GVertex {
        self.to_vertex(&self.artin_from_positive(x))
    }

    /// Representative with `k = 0`.
    pub fn lift(&self, v: &GVertex) -> ArtinElement {
        ArtinElement {
            k: 0,
            pos: v.pos.clone(),
        }
    }

    /// Left action of `A` (and `G`) on vertices.
    pub fn act(&self, g: &ArtinElement, v: &GVertex) -> GVertex {
        self.to_vertex(&self.mul(g, &self.lift(v)))
    }

    /// The neighbour `v·B` of `v`.
    pub fn vertex_step(&self, v: &GVertex, b: Atom) -> GVertex {
        let nf = self.multiply(&v.pos, &self.from_atom(b));
        self.vertex_of_positive(&nf)
    }

    /// `‖v‖`, the word length of the special representative.
    pub fn wordnorm(&self, v: &GVertex) -> usize {
        self.word_length(&v.pos)
    }

    /// The length homomorphism `A → Z`.
    pub fn length_hom(&self, x: &ArtinElement) -> i64 {
        x.k * self.delta_length() as i64 + self.word_length(&x.pos) as i64
    }

    /// Length in `Z/2δ`, the homomorphism induced on `G`.
    pub fn length_mod_2delta(&self, x: &ArtinElement) -> usize {
        self.length_hom(x).rem_euclid(2 * self.delta_length() as i64) as usize
    }

    /// Image under `π: A → W`.
    pub fn project(&self, x: &ArtinElement) -> Element {
        let sys = self.system();
        let start = if x.k.rem_euclid(2) == 1 { sys.delta() } else { Element::IDENTITY };
        x.pos.atoms().iter().fold(start, |acc, a| sys.mul(acc, a.element()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, CoxeterMatrix, DEFAULT_CAP};

    fn a2() -> Garside {
        Garside::new(build_system(CoxeterMatrix::type_a(2), DEFAULT_CAP).unwrap())
    }

    #[test]
    fn mul_examples() {
        let g = a2();
        let a = g.artin_generator(0);
        let ba = g.artin_from_generators(&[1, 0]);
        assert_eq!(g.mul(&a, &ba), ArtinElement::delta_power(1));
        let x = g.artin_from_generators(&[0, 0, 1]);
        assert_eq!(g.mul(&x, &ArtinElement::identity()), x);
        assert!(g.mul(&ArtinElement::delta_power(-1), &ArtinElement::delta_power(1)).is_identity());
    }

    #[test]
    fn inv_examples() {
        let g = a2();
        let a = g.artin_generator(0);
        let ia = g.inv(&a);
        assert!(g.mul(&ia, &a).is_identity());
        assert_eq!(ia.k(), -1);
        assert_eq!(ia.pos(), &g.from_generators(&[0, 1]));
        assert!(g.inv(&ArtinElement::identity()).is_identity());
        assert_eq!(g.inv(&ArtinElement::delta_power(1)), ArtinElement::delta_power(-1));
    }

    #[test]
    fn to_vertex_examples() {
        let g = a2();
        let aab = g.from_generators(&[0, 0, 1]);
        let x = g.mul(&ArtinElement::delta_power(1), &g.artin_from_positive(&aab));
        assert_eq!(g.to_vertex(&x).pos(), &g.from_generators(&[1, 1, 0]));
        let y = g.artin_from_positive(&aab);
        assert_eq!(g.to_vertex(&y).pos(), &aab);
        let z = g.mul(&ArtinElement::delta_power(2), &y);
        assert_eq!(g.to_vertex(&z).pos(), &aab);
    }

    #[test]
    fn act_examples() {
        let g = a2();
        let a = g.artin_generator(0);
        assert_eq!(g.act(&a, &GVertex::base()).pos(), &g.from_generators(&[0]));
        let va = g.to_vertex(&a);
        assert_eq!(g.act(&ArtinElement::delta_power(1), &va).pos(), &g.from_generators(&[1]));
    }

    #[test]
    fn length_examples() {
        let g = a2();
        assert_eq!(g.length_hom(&ArtinElement::delta_power(1)), 3);
        assert_eq!(g.length_hom(&ArtinElement::identity()), 0);
        assert_eq!(g.length_hom(&g.artin_from_generators(&[0, 0, 1])), 3);
        assert_eq!(g.length_mod_2delta(&ArtinElement::delta_power(-1)), 3);
    }
}
