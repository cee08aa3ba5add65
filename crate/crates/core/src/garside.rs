//! The positive monoid `A⁺`: atoms, the left-greedy normal form and the
//! divisibility lattice.
//!
//! Atoms are the elements of `W` seen as simple elements of `A⁺`. Divisibility
//! between atoms is the prefix order of `W`; a pair `A·B` is left-greedy
//! exactly when every generator that can start `B` already ends `A`, i.e.
//! `right_descents(A) ⊇ left_descents(B)`.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::coxeter::{CoxeterSystem, Element};

/// An element of `W` viewed as a simple element of `A⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(pub Element);

impl Atom {
    pub const IDENTITY: Atom = Atom(Element::IDENTITY);

    #[inline]
    pub fn element(self) -> Element {
        self.0
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == Element::IDENTITY
    }
}

/// A left-greedy normal form `A₁·A₂·…·A_k` with no identity atoms. Any `Δ`
/// atoms form a prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PositiveElement {
    atoms: Vec<Atom>,
}

impl PositiveElement {
    pub fn identity() -> Self {
        PositiveElement { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Number of atoms in the normal form.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn first(&self) -> Atom {
        self.atoms.first().copied().unwrap_or(Atom::IDENTITY)
    }

    /// First `n` atoms; a prefix of a normal form is a normal form.
    pub fn prefix(&self, n: usize) -> PositiveElement {
        PositiveElement {
            atoms: self.atoms[..n.min(self.atoms.len())].to_vec(),
        }
    }

    pub fn suffix_from(&self, n: usize) -> PositiveElement {
        PositiveElement {
            atoms: self.atoms[n.min(self.atoms.len())..].to_vec(),
        }
    }

    pub(crate) fn from_normal_atoms(atoms: Vec<Atom>) -> Self {
        PositiveElement { atoms }
    }
}

/// Garside structure of the Artin monoid attached to an enumerated Coxeter
/// system. Holds the memoized prefix-order down-sets used for atom meets.
#[derive(Debug)]
pub struct Garside {
    sys: CoxeterSystem,
    down_sets: Vec<OnceLock<FixedBitSet>>,
}

impl Garside {
    pub fn new(sys: CoxeterSystem) -> Self {
        let down_sets = (0..sys.order()).map(|_| OnceLock::new()).collect();
        Garside { sys, down_sets }
    }

    #[inline]
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    #[inline]
    pub fn delta(&self) -> Atom {
        Atom(self.sys.delta())
    }

    /// `δ = length(Δ)`.
    pub fn delta_length(&self) -> usize {
        self.sys.delta_length()
    }

    pub fn generator(&self, s: usize) -> Atom {
        Atom(self.sys.generator(s))
    }

    /// All atoms in index order (identity first, `Δ` last).
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.sys.elements().map(Atom)
    }

    /// Atoms other than `1` and `Δ`.
    pub fn proper_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        let delta = self.delta();
        self.atoms().filter(move |&a| !a.is_identity() && a != delta)
    }

    #[inline]
    pub fn atom_length(&self, a: Atom) -> usize {
        self.sys.length(a.0)
    }

    /// Word length of a positive element.
    pub fn word_length(&self, x: &PositiveElement) -> usize {
        x.atoms.iter().map(|&a| self.atom_length(a)).sum()
    }

    /// Number of leading `Δ` atoms.
    pub fn delta_prefix(&self, x: &PositiveElement) -> usize {
        let d = self.delta();
        x.atoms.iter().take_while(|&&a| a == d).count()
    }

    // ---- atom level -------------------------------------------------------

    /// Set of prefixes of `w` in the weak order, computed once per element.
    pub fn down_set(&self, w: Element) -> &FixedBitSet {
        self.down_sets[w.index()].get_or_init(|| {
            let mut set = FixedBitSet::with_capacity(self.sys.order());
            let mut stack = vec![w];
            set.insert(w.index());
            while let Some(x) = stack.pop() {
                for s in self.sys.right_descents(x).iter() {
                    let y = self.sys.mul_gen(x, s);
                    if !set.put(y.index()) {
                        stack.push(y);
                    }
                }
            }
            set
        })
    }

    /// `a < b` in `A⁺` (left divisibility), for atoms.
    #[inline]
    pub fn atom_divides(&self, a: Atom, b: Atom) -> bool {
        self.down_set(b.0).contains(a.0.index())
    }

    /// Greatest common left divisor of two atoms. Indices refine length, so
    /// the largest common prefix is the highest set bit.
    pub fn atom_meet(&self, a: Atom, b: Atom) -> Atom {
        let mut common = self.down_set(a.0).clone();
        common.intersect_with(self.down_set(b.0));
        let top = common.ones().next_back().expect("identity is a common prefix");
        Atom(Element(top as u32))
    }

    /// Least common right multiple of two atoms. Right multiplication by the
    /// longest element reverses the prefix order, turning joins into meets.
    pub fn atom_join(&self, a: Atom, b: Atom) -> Atom {
        let w0 = self.sys.delta();
        let am = Atom(self.sys.mul(a.0, w0));
        let bm = Atom(self.sys.mul(b.0, w0));
        Atom(self.sys.mul(self.atom_meet(am, bm).0, w0))
    }

    /// `A*` with `A·A* = Δ`.
    pub fn right_complement(&self, a: Atom) -> Atom {
        Atom(self.sys.mul(self.sys.inverse(a.0), self.sys.delta()))
    }

    /// `*A` with `*A·A = Δ`.
    pub fn left_complement(&self, a: Atom) -> Atom {
        Atom(self.sys.mul(self.sys.delta(), self.sys.inverse(a.0)))
    }

    #[inline]
    pub fn bar_atom(&self, a: Atom) -> Atom {
        Atom(self.sys.bar(a.0))
    }

    /// `bar` applied `k` times (only the parity matters).
    #[inline]
    pub fn bar_atom_pow(&self, a: Atom, k: i64) -> Atom {
        if k.rem_euclid(2) == 1 {
            self.bar_atom(a)
        } else {
            a
        }
    }

    /// The reverse of an atom, i.e. the inverse element of `W`.
    #[inline]
    pub fn reverse_atom(&self, a: Atom) -> Atom {
        Atom(self.sys.inverse(a.0))
    }

    /// Whether `A·B` is left-greedy: `right_descents(A) ⊇ left_descents(B)`.
    #[inline]
    pub fn is_normal_pair(&self, a: Atom, b: Atom) -> bool {
        self.sys
            .right_descents(a.0)
            .is_superset(self.sys.left_descents(b.0))
    }

    /// Moves generators from the front of `q` to the back of `p` until the
    /// pair is normal. Returns whether anything moved.
    fn slide(&self, p: &mut Element, q: &mut Element) -> bool {
        let mut moved = false;
        loop {
            let movable = self.sys.left_descents(*q).0 & !self.sys.right_descents(*p).0;
            if movable == 0 {
                return moved;
            }
            let s = movable.trailing_zeros() as usize;
            *p = self.sys.mul_gen(*p, s);
            *q = self.sys.gen_mul(s, *q);
            moved = true;
        }
    }

    // ---- normal forms -----------------------------------------------------

    /// Left-greedy normal form of a product of atoms, by repeated local
    /// sliding over adjacent pairs until every pair is normal.
    pub fn normalize(&self, word: &[Atom]) -> PositiveElement {
        let mut v: Vec<Element> = word.iter().map(|a| a.0).filter(|&e| e != Element::IDENTITY).collect();
        self.normalize_in_place(&mut v, 0);
        PositiveElement {
            atoms: v.into_iter().map(Atom).collect(),
        }
    }

    /// Normalizes `v` assuming `v[..start]` is already a normal form (pass
    /// 0 when nothing is known).
    fn normalize_in_place(&self, v: &mut Vec<Element>, start: usize) {
        let mut lo = start.saturating_sub(1);
        loop {
            let mut changed = false;
            let mut first_change = usize::MAX;
            for i in lo..v.len().saturating_sub(1) {
                let (left, right) = v.split_at_mut(i + 1);
                if self.slide(&mut left[i], &mut right[0]) {
                    if !changed {
                        first_change = i;
                    }
                    changed = true;
                }
            }
            v.retain(|&e| e != Element::IDENTITY);
            if !changed {
                return;
            }
            // sliding at position i can only break the pair (i-1, i)
            lo = first_change.saturating_sub(1);
        }
    }

    /// Normal form of `x·y` for positive elements.
    pub fn multiply(&self, x: &PositiveElement, y: &PositiveElement) -> PositiveElement {
        let mut v: Vec<Element> = x.atoms.iter().chain(&y.atoms).map(|a| a.0).collect();
        self.normalize_in_place(&mut v, x.len());
        PositiveElement {
            atoms: v.into_iter().map(Atom).collect(),
        }
    }

    /// Normal form of a word in the generators.
    pub fn from_generators(&self, word: &[usize]) -> PositiveElement {
        let atoms: Vec<Atom> = word.iter().map(|&s| self.generator(s)).collect();
        self.normalize(&atoms)
    }

    pub fn from_atom(&self, a: Atom) -> PositiveElement {
        self.normalize(&[a])
    }

    pub fn delta_power(&self, k: usize) -> PositiveElement {
        PositiveElement {
            atoms: vec![self.delta(); k],
        }
    }

    /// The largest atom left-dividing the product.
    pub fn alpha(&self, word: &[Atom]) -> Atom {
        self.normalize(word).first()
    }

    /// `d⁻¹x` when `d` left-divides `x`.
    pub fn left_cancel_atom(&self, x: &PositiveElement, d: Atom) -> Option<PositiveElement> {
        if d.is_identity() {
            return Some(x.clone());
        }
        let head = x.first();
        if !self.atom_divides(d, head) {
            return None;
        }
        let rest = self.sys.mul(self.sys.inverse(d.0), head.0);
        let mut v: Vec<Element> = Vec::with_capacity(x.len());
        v.push(rest);
        v.extend(x.atoms[1..].iter().map(|a| a.0));
        v.retain(|&e| e != Element::IDENTITY);
        self.normalize_in_place(&mut v, 0);
        Some(PositiveElement {
            atoms: v.into_iter().map(Atom).collect(),
        })
    }

    /// `b⁻¹x` when `b` left-divides `x`.
    pub fn left_cancel(&self, x: &PositiveElement, b: &PositiveElement) -> Option<PositiveElement> {
        let mut cur = x.clone();
        for &a in &b.atoms {
            cur = self.left_cancel_atom(&cur, a)?;
        }
        Some(cur)
    }

    /// Left divisibility `x < y`.
    pub fn divides(&self, x: &PositiveElement, y: &PositiveElement) -> bool {
        self.left_cancel(y, x).is_some()
    }

    /// Greatest common left divisor.
    pub fn meet(&self, x: &PositiveElement, y: &PositiveElement) -> PositiveElement {
        let (mut x, mut y) = (x.clone(), y.clone());
        let mut acc = Vec::new();
        loop {
            let d = self.atom_meet(x.first(), y.first());
            if d.is_identity() {
                break;
            }
            acc.push(d);
            x = self.left_cancel_atom(&x, d).unwrap();
            y = self.left_cancel_atom(&y, d).unwrap();
        }
        self.normalize(&acc)
    }

    /// `x̃` with `x·x̃ = Δ^k`; requires `x` to have at most `k` atoms.
    pub fn complement_power(&self, x: &PositiveElement, k: usize) -> PositiveElement {
        assert!(x.len() <= k, "x has more than {k} atoms");
        let terms: Vec<Atom> = (0..k)
            .rev()
            .map(|i| {
                let a = x.atoms.get(i).copied().unwrap_or(Atom::IDENTITY);
                self.bar_atom_pow(self.right_complement(a), (k - 1 - i) as i64)
            })
            .collect();
        self.normalize(&terms)
    }

    /// Image under the letter-reversal anti-automorphism.
    pub fn reverse(&self, x: &PositiveElement) -> PositiveElement {
        let atoms: Vec<Atom> = x.atoms.iter().rev().map(|&a| self.reverse_atom(a)).collect();
        self.normalize(&atoms)
    }

    /// Conjugation by `Δ`, atomwise; normality is preserved.
    pub fn bar_positive(&self, x: &PositiveElement) -> PositiveElement {
        PositiveElement {
            atoms: x.atoms.iter().map(|&a| self.bar_atom(a)).collect(),
        }
    }

    /// Least common right multiple. With `x, y < Δ^k` and complements
    /// `x x̃ = y ỹ = Δ^k`, divisibility of `x` into `y` is equivalent to
    /// `reverse(ỹ) < reverse(x̃)`; the join is therefore the left complement
    /// of the reverse of `reverse(x̃) ∧ reverse(ỹ)`.
    pub fn join(&self, x: &PositiveElement, y: &PositiveElement) -> PositiveElement {
        let k = x.len().max(y.len());
        if k == 0 {
            return PositiveElement::identity();
        }
        let xt = self.reverse(&self.complement_power(x, k));
        let yt = self.reverse(&self.complement_power(y, k));
        let m = self.meet(&xt, &yt);
        self.reverse(&self.complement_power(&m, k))
    }

    /// The atom `C` with `A < b·u ⇔ C < u` for all positive `u`: writing
    /// `A ∨ b = b·c`, the element `c` is an atom.
    pub fn complement_under(&self, a: Atom, b: &PositiveElement) -> Atom {
        let j = self.join(&self.from_atom(a), b);
        let c = self.left_cancel(&j, b).expect("b divides the join");
        debug_assert!(c.len() <= 1);
        c.first()
    }
}
