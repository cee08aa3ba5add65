//! The Charney graph, the boundary action on itineraries, torsion and
//! translation lengths.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;
use petgraph::algo::{astar, tarjan_scc};
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::EdgeRef;

use crate::artin::{ArtinElement, GVertex};
use crate::error::{Error, Result};
use crate::garside::{Atom, Garside, PositiveElement};
use crate::notation::Itinerary;

/// Directed graph on the proper atoms with an edge `x → y` whenever `x·y`
/// is a normal form. Δ-free normal forms are exactly its finite paths.
#[derive(Debug, Clone)]
pub struct CharneyGraph {
    pub graph: DiGraph<Atom, ()>,
    node_of: HashMap<Atom, NodeIndex>,
    components: Vec<Vec<NodeIndex>>,
}

impl CharneyGraph {
    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.graph.node_weights().copied()
    }

    pub fn has_edge(&self, x: Atom, y: Atom) -> bool {
        match (self.node_of.get(&x), self.node_of.get(&y)) {
            (Some(&i), Some(&j)) => self.graph.contains_edge(i, j),
            _ => false,
        }
    }

    pub fn successors(&self, x: Atom) -> Vec<Atom> {
        let mut out: Vec<Atom> = self
            .node_of
            .get(&x)
            .map(|&i| self.graph.neighbors(i).map(|j| self.graph[j]).collect())
            .unwrap_or_default();
        out.sort();
        out
    }

    /// Strongly connected components, as sorted atom lists.
    pub fn components(&self) -> Vec<Vec<Atom>> {
        let mut out: Vec<Vec<Atom>> = self
            .components
            .iter()
            .map(|c| {
                let mut v: Vec<Atom> = c.iter().map(|&i| self.graph[i]).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// A shortest directed path from `from` to `to` with at least
    /// `min_edges` edges (0 or 1).
    fn path(&self, from: Atom, to: Atom, min_edges: usize) -> Option<Vec<Atom>> {
        let (&s, &t) = (self.node_of.get(&from)?, self.node_of.get(&to)?);
        if min_edges == 0 && s == t {
            return Some(vec![from]);
        }
        // start from each successor so the path has at least one edge
        self.graph
            .neighbors(s)
            .filter_map(|n| {
                astar(&self.graph, n, |x| x == t, |_| 1usize, |_| 0)
            })
            .min_by_key(|(cost, p)| (*cost, p.iter().map(|&i| self.graph[i]).collect::<Vec<_>>()))
            .map(|(_, p)| {
                std::iter::once(from)
                    .chain(p.into_iter().map(|i| self.graph[i]))
                    .collect()
            })
    }
}

/// A stable prefix of the image of an itinerary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItineraryPrefix {
    pub atoms: Vec<Atom>,
    /// Number of leading atoms known to agree with the infinite image.
    pub guaranteed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionKind {
    /// Generated by an atom `B` with `Bᵐ = Δ`; order `2m`.
    Type1,
    /// Generated by `BΔ` with `m` odd and `(B·B̄)^{(m-1)/2}·B = Δ`; order `m`.
    Type2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionClass {
    pub kind: TorsionKind,
    pub b: Atom,
    pub m: usize,
    pub order: usize,
    /// `c` with `⟨g⟩ = c·⟨γ⟩·c⁻¹`, where `γ` is `B` or `BΔ`.
    pub conjugator: ArtinElement,
    /// The invariant simplex on which `⟨g⟩` acts transitively, in cyclic order.
    pub simplex: Vec<GVertex>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TranslationBounds {
    /// `a_n = d_wd(*, gⁿ(*))` for `n = 1..=N`.
    pub values: Vec<usize>,
    /// `min a_n / n`; an upper bound for the translation length.
    pub inf_ratio: Ratio<u64>,
}

impl Garside {
    pub fn charney_graph(&self) -> CharneyGraph {
        let mut atoms: Vec<Atom> = self.proper_atoms().collect();
        atoms.sort_by_key(|&a| self.atom_sort_key(a));
        let mut graph = DiGraph::with_capacity(atoms.len(), 0);
        let node_of: HashMap<Atom, NodeIndex> = atoms.iter().map(|&a| (a, graph.add_node(a))).collect();
        for &x in &atoms {
            for &y in &atoms {
                if self.is_normal_pair(x, y) {
                    graph.add_edge(node_of[&x], node_of[&y], ());
                }
            }
        }
        let components = tarjan_scc(&graph);
        CharneyGraph {
            graph,
            node_of,
            components,
        }
    }

    /// A shortest directed path from `x` to `y` in the Charney graph.
    pub fn connect_atoms(&self, cg: &CharneyGraph, x: Atom, y: Atom) -> Result<Vec<Atom>> {
        cg.path(x, y, 0).ok_or_else(|| self.not_connected(x, y))
    }

    fn not_connected(&self, x: Atom, y: Atom) -> Error {
        Error::NotConnected {
            from: self.render_atom(x),
            to: self.render_atom(y),
        }
    }

    /// Image of an itinerary prefix `x₁⋯x_k` under `g`. The first `k` atoms
    /// of the normal form of `g⁺·x₁⋯x_k` do not change when the itinerary is
    /// extended; leading `Δ`'s among them are pushed to infinity (with a bar
    /// when their total with `g`'s own power is odd), leaving `k - j` stable
    /// atoms.
    pub fn act_prefix(&self, g: &ArtinElement, x: &[Atom]) -> ItineraryPrefix {
        let k = x.len();
        let word = PositiveElement::from_normal_atoms(x.to_vec());
        let nf = self.multiply(g.pos(), &word);
        let stable = nf.prefix(k);
        let j = self.delta_prefix(&stable);
        let atoms: Vec<Atom> = stable.atoms()[j..]
            .iter()
            .map(|&a| self.bar_atom_pow(a, g.k() + j as i64))
            .collect();
        ItineraryPrefix {
            guaranteed: atoms.len(),
            atoms,
        }
    }

    /// Acts on an itinerary, extending it to `len` atoms first.
    pub fn act_itinerary(&self, g: &ArtinElement, x: &Itinerary, len: usize) -> Result<ItineraryPrefix> {
        Ok(self.act_prefix(g, &x.take(len)?))
    }

    /// Order in `G`. A torsion element lies outside the torsion-free kernel
    /// of `length mod 2δ` together with all its nontrivial powers, so its
    /// order is at most `2δ`.
    pub fn order_in_g(&self, g: &ArtinElement) -> Order {
        let bound = 2 * self.delta_length();
        let mut p = ArtinElement::identity();
        for n in 1..=bound {
            p = self.mul(&p, g);
            if p.is_trivial_in_g() {
                return Order::Finite(n);
            }
        }
        Order::Infinite
    }

    /// The orbit `{gⁱ(v)}` of a vertex under a finite-order element.
    pub fn orbit(&self, g: &ArtinElement, v: &GVertex) -> Vec<GVertex> {
        let mut out = vec![v.clone()];
        let mut cur = self.act(g, v);
        while &cur != v {
            out.push(cur.clone());
            cur = self.act(g, &cur);
        }
        out
    }

    /// Elements of `⟨g⟩` in `G`, normalized to `k ∈ {0, 1}`.
    pub fn cyclic_subgroup(&self, g: &ArtinElement) -> BTreeSet<ArtinElement> {
        let mut out = BTreeSet::new();
        let mut p = ArtinElement::identity();
        loop {
            if !out.insert(p.reduce_mod_delta_squared()) {
                return out;
            }
            p = self.mul(&p, g);
        }
    }

    /// Classifies the finite cyclic subgroup `⟨g⟩`: locate an invariant
    /// simplex through the centers of the orbit of `*`, conjugate one of its
    /// vertices to `*`, and read off the rotation generator.
    pub fn classify_torsion(&self, g: &ArtinElement) -> Result<TorsionClass> {
        let order = match self.order_in_g(g) {
            Order::Finite(n) if n > 1 => n,
            _ => return Err(Error::NotTorsion),
        };
        let orbit = self.orbit(g, &GVertex::base());
        let (_, centers) = self.centers(&orbit)?;
        let c = self.lift(&centers[0]);
        let gc = self.mul(&self.mul(&self.inv(&c), g), &c);
        let mut face = self.orbit(&gc, &GVertex::base());
        face.sort_by_key(|v| (self.wordnorm(v), v.clone()));
        let m = face.len();
        let simplex: Vec<GVertex> = face.iter().map(|v| self.act(&c, v)).collect();
        if m == 1 {
            // ⟨g⟩ fixes the center, so it is ⟨Δ⟩
            return Ok(TorsionClass {
                kind: TorsionKind::Type1,
                b: self.delta(),
                m: 1,
                order,
                conjugator: c,
                simplex,
            });
        }
        let b1 = &face[1];
        let b = b1.pos().first();
        let mut h = gc.clone();
        while &self.to_vertex(&h) != b1 {
            h = self.mul(&h, &gc);
        }
        let kind = if h.k().rem_euclid(2) == 0 || m.is_multiple_of(2) {
            TorsionKind::Type1
        } else {
            TorsionKind::Type2
        };
        Ok(TorsionClass {
            kind,
            b,
            m,
            order,
            conjugator: c,
            simplex,
        })
    }

    /// The generator `γ` of the normalized subgroup: `B` or `BΔ`.
    pub fn torsion_generator(&self, t: &TorsionClass) -> ArtinElement {
        let b = self.artin_atom(t.b);
        match t.kind {
            TorsionKind::Type1 => b,
            TorsionKind::Type2 => self.mul(&b, &ArtinElement::delta_power(1)),
        }
    }

    /// Checks the defining identity of the class: `Bᵐ = Δ` (Type 1) or
    /// `(B·B̄)^{(m-1)/2}·B = Δ` (Type 2).
    pub fn torsion_identity_holds(&self, t: &TorsionClass) -> bool {
        let b = self.from_atom(t.b);
        let word = match t.kind {
            TorsionKind::Type1 => (0..t.m).fold(PositiveElement::identity(), |acc, _| self.multiply(&acc, &b)),
            TorsionKind::Type2 => {
                let bb = self.multiply(&b, &self.bar_positive(&b));
                let half = (0..(t.m - 1) / 2).fold(PositiveElement::identity(), |acc, _| self.multiply(&acc, &bb));
                self.multiply(&half, &b)
            }
        };
        word == self.from_atom(self.delta())
    }

    /// `a_n = ‖gⁿ(*)‖` for `n ≤ N` and the least ratio `a_n/n`.
    pub fn translation_bounds(&self, g: &ArtinElement, n: usize) -> TranslationBounds {
        let mut values = Vec::with_capacity(n);
        let mut p = ArtinElement::identity();
        for _ in 0..n {
            p = self.mul(&p, g);
            values.push(self.wordnorm(&self.to_vertex(&p)));
        }
        let inf_ratio = values
            .iter()
            .enumerate()
            .map(|(i, &a)| Ratio::new(a as u64, i as u64 + 1))
            .min()
            .unwrap_or_else(|| Ratio::from_integer(0));
        TranslationBounds { values, inf_ratio }
    }

    /// An element sending every itinerary that starts with `head` to one
    /// that starts with `target`: the target followed by the interior of a
    /// Charney path from its last atom to `head`.
    pub fn density_witness(&self, cg: &CharneyGraph, target: &[Atom], head: Atom) -> Result<ArtinElement> {
        let last = *target.last().ok_or(Error::EmptyInput)?;
        let path = cg.path(last, head, 1).ok_or_else(|| self.not_connected(last, head))?;
        let mut word = target.to_vec();
        word.extend_from_slice(&path[1..path.len() - 1]);
        Ok(self.canonical(0, &word))
    }

    /// For an element acting nontrivially on itineraries, a generator `s`
    /// whose constant itinerary `s^∞` is visibly moved, with the image
    /// prefix. Returns `None` when no such witness is found.
    pub fn faithfulness_witness(&self, g: &ArtinElement) -> Option<(usize, ItineraryPrefix)> {
        let len = g.atomnorm() + 3;
        (0..self.system().rank()).find_map(|s| {
            let a = self.generator(s);
            let img = self.act_prefix(g, &vec![a; len]);
            img.atoms.iter().any(|&x| x != a).then_some((s, img))
        })
    }

    pub fn charney_to_dot(&self, cg: &CharneyGraph) -> String {
        let mut out = String::from("digraph charney {\n");
        for i in cg.graph.node_indices() {
            let _ = writeln!(out, "  n{} [label=\"{}\"];", i.index(), self.render_atom(cg.graph[i]));
        }
        for e in cg.graph.edge_references() {
            let _ = writeln!(out, "  n{} -> n{};", e.source().index(), e.target().index());
        }
        out.push_str("}\n");
        out
    }
}
