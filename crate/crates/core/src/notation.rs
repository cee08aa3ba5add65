//! Text syntax for atoms, normal forms, group elements and itineraries.
//!
//! Elements are written `D^k . w1 . w2 ...`: dot-separated segments, each a
//! word in generator names, with `D` (optionally `D^k`) standing for `Δ`. The
//! segments need not be atoms; the product is normalized. A trailing `^-1`
//! inverts the whole element. `1` and the empty string denote the identity,
//! and `*` the basepoint vertex.

use crate::artin::{ArtinElement, GVertex};
use crate::error::{Error, Result};
use crate::garside::{Atom, Garside, PositiveElement};

/// One token of the element syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Gen(usize),
    Delta(i64),
}

/// An infinite itinerary given by a finite prefix, optionally continued by
/// repeating its final atom forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Itinerary {
    pub atoms: Vec<Atom>,
    pub periodic: bool,
}

impl Itinerary {
    /// The first `n` atoms; fails when the itinerary is finite and too short.
    pub fn take(&self, n: usize) -> Result<Vec<Atom>> {
        if n <= self.atoms.len() {
            return Ok(self.atoms[..n].to_vec());
        }
        if !self.periodic || self.atoms.is_empty() {
            return Err(Error::InvalidItinerary(format!(
                "prefix has {} atoms, {n} requested",
                self.atoms.len()
            )));
        }
        let last = *self.atoms.last().unwrap();
        let mut out = self.atoms.clone();
        out.resize(n, last);
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

impl Garside {
    // ---- rendering --------------------------------------------------------

    pub fn render_atom(&self, a: Atom) -> String {
        self.system().render(a.element())
    }

    /// Dot-separated atoms; the identity renders as `1`.
    pub fn render_positive(&self, x: &PositiveElement) -> String {
        if x.is_empty() {
            return "1".into();
        }
        self.join_atoms(x.atoms())
    }

    fn join_atoms(&self, atoms: &[Atom]) -> String {
        atoms
            .iter()
            .map(|&a| self.render_atom(a))
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn render_artin(&self, x: &ArtinElement) -> String {
        let delta = match x.k() {
            0 => None,
            1 => Some("D".to_string()),
            k => Some(format!("D^{k}")),
        };
        match (delta, x.pos().is_empty()) {
            (None, _) => self.render_positive(x.pos()),
            (Some(d), true) => d,
            (Some(d), false) => format!("{d}.{}", self.render_positive(x.pos())),
        }
    }

    /// Vertices render as their special representative, the basepoint as `*`.
    pub fn render_vertex(&self, v: &GVertex) -> String {
        if v.is_base() {
            "*".into()
        } else {
            self.render_positive(v.pos())
        }
    }

    pub fn render_itinerary(&self, x: &Itinerary) -> String {
        let mut s = self.join_atoms(&x.atoms);
        if x.periodic {
            s.push_str("...");
        }
        s
    }

    /// Deterministic ordering key for atoms: length, then rendered word.
    pub fn atom_sort_key(&self, a: Atom) -> (usize, String) {
        (self.atom_length(a), self.render_atom(a))
    }

    // ---- parsing ----------------------------------------------------------

    fn tokenize(&self, segment: &str) -> Result<Vec<Token>> {
        let names = self.system().matrix().generators();
        let mut out = Vec::new();
        let mut rest = segment;
        while !rest.is_empty() {
            let best = names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            if let Some((s, n)) = best {
                out.push(Token::Gen(s));
                rest = &rest[n.len()..];
            } else if let Some(after) = rest.strip_prefix('D') {
                if let Some(exp) = after.strip_prefix('^') {
                    let end = exp
                        .char_indices()
                        .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
                        .map_or(exp.len(), |(i, _)| i);
                    let k: i64 = exp[..end]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{segment}`")))?;
                    out.push(Token::Delta(k));
                    rest = &exp[end..];
                } else {
                    out.push(Token::Delta(1));
                    rest = after;
                }
            } else {
                let c = rest.chars().next().unwrap();
                return Err(Error::Parse(format!("unknown symbol `{c}` in `{segment}`")));
            }
        }
        Ok(out)
    }

    /// Parses the element syntax described in the module docs.
    pub fn parse_element(&self, text: &str) -> Result<ArtinElement> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, invert) = match compact.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (compact.as_str(), false),
        };
        let mut acc = ArtinElement::identity();
        if !(body.is_empty() || body == "1") {
            for segment in body.split('.') {
                if segment.is_empty() {
                    return Err(Error::Parse(format!("empty segment in `{text}`")));
                }
                if segment == "1" {
                    continue;
                }
                let mut gens = Vec::new();
                for tok in self.tokenize(segment)? {
                    match tok {
                        Token::Gen(s) => gens.push(s),
                        Token::Delta(k) => {
                            acc = self.mul(&acc, &self.artin_from_generators(&gens));
                            gens.clear();
                            acc = self.mul(&acc, &ArtinElement::delta_power(k));
                        }
                    }
                }
                acc = self.mul(&acc, &self.artin_from_generators(&gens));
            }
        }
        Ok(if invert { self.inv(&acc) } else { acc })
    }

    /// A vertex: `*` for the basepoint, otherwise any element, reduced to
    /// the special representative of its coset.
    pub fn parse_vertex(&self, text: &str) -> Result<GVertex> {
        if text.trim() == "*" {
            return Ok(GVertex::base());
        }
        Ok(self.to_vertex(&self.parse_element(text)?))
    }

    /// A single atom written as a reduced word in the generators.
    pub fn parse_atom(&self, text: &str) -> Result<Atom> {
        let word = text.trim();
        if word == "1" {
            return Ok(Atom::IDENTITY);
        }
        if word == "D" {
            return Ok(self.delta());
        }
        let mut gens = Vec::new();
        for tok in self.tokenize(word)? {
            match tok {
                Token::Gen(s) => gens.push(s),
                Token::Delta(_) => return Err(Error::Parse(format!("`{word}` is not an atom"))),
            }
        }
        if gens.is_empty() {
            return Err(Error::Parse("empty atom".into()));
        }
        let w = self.system().from_word(&gens);
        if self.system().length(w) != gens.len() {
            return Err(Error::Parse(format!("`{word}` is not a reduced word")));
        }
        Ok(Atom(w))
    }

    /// Dot-separated proper atoms forming a directed path in the Charney
    /// graph, with an optional `...` suffix repeating the final atom.
    pub fn parse_itinerary(&self, text: &str) -> Result<Itinerary> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, periodic) = match compact.strip_suffix("...") {
            Some(b) => (b, true),
            None => (compact.as_str(), false),
        };
        if body.is_empty() {
            return Err(Error::InvalidItinerary("no atoms".into()));
        }
        let mut atoms = Vec::new();
        for seg in body.split('.') {
            let a = self
                .parse_atom(seg)
                .map_err(|e| Error::InvalidItinerary(e.to_string()))?;
            if a.is_identity() || a == self.delta() {
                return Err(Error::InvalidItinerary(format!("`{seg}` is 1 or D")));
            }
            atoms.push(a);
        }
        let it = Itinerary { atoms, periodic };
        self.check_itinerary(&it)?;
        Ok(it)
    }

    /// Consecutive atoms must form normal pairs; a periodic tail must be
    /// normal with itself.
    pub fn check_itinerary(&self, it: &Itinerary) -> Result<()> {
        for w in it.atoms.windows(2) {
            if !self.is_normal_pair(w[0], w[1]) {
                return Err(Error::InvalidItinerary(format!(
                    "{}.{} is not a normal pair",
                    self.render_atom(w[0]),
                    self.render_atom(w[1])
                )));
            }
        }
        if let (true, Some(&last)) = (it.periodic, it.atoms.last()) {
            if !self.is_normal_pair(last, last) {
                return Err(Error::InvalidItinerary(format!(
                    "{} cannot repeat",
                    self.render_atom(last)
                )));
            }
        }
        Ok(())
    }
}
