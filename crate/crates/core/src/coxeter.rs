//! Finite Coxeter groups: the Coxeter matrix, finite-type classification and
//! table-driven enumeration of `W`.
//!
//! Enumeration realizes each generator as a reflection matrix of the canonical
//! representation over `Z[ζ_{2L}]` and runs a breadth-first search on right
//! multiplication. Elements are interned as dense indices in BFS order, so
//! index order refines length order: the identity is index 0 and the longest
//! element is the last index.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::cyclotomic::{CyclotomicRing, ExactReal};
use crate::error::{Error, Result};

/// Sentinel for `m(s,t) = ∞`.
pub const INFINITE: u32 = 0;

/// Default bound on `|W|`.
pub const DEFAULT_CAP: usize = 200_000;

/// Dense index of an element of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of generators as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    #[inline]
    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    #[inline]
    pub fn is_superset(self, other: GenSet) -> bool {
        other.0 & !self.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Symmetric Coxeter matrix on named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    m: Vec<Vec<u32>>,
}

fn valid_generator_name(name: &str) -> bool {
    !name.is_empty()
        && name != "D"
        && name != "1"
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !".^*,#-".contains(c))
}

impl CoxeterMatrix {
    /// Builds a matrix from generator names and the pairs with `m ≠ 2`.
    /// Omitted pairs default to 2; `INFINITE` marks a missing relation.
    pub fn new(generators: Vec<String>, pairs: &[(usize, usize, u32)]) -> Result<Self> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::GroupFile("no generators".into()));
        }
        if n > 64 {
            return Err(Error::GroupFile("more than 64 generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if !valid_generator_name(g) {
                return Err(Error::GroupFile(format!("invalid generator name {g:?}")));
            }
            if generators[..i].contains(g) {
                return Err(Error::GroupFile(format!("duplicate generator {g}")));
            }
        }
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t, k) in pairs {
            if s >= n || t >= n {
                return Err(Error::GroupFile(format!("generator index out of range in pair ({s},{t})")));
            }
            if s == t {
                return Err(Error::GroupFile(format!("m({0},{0}) must be 1", generators[s])));
            }
            if k != INFINITE && k < 2 {
                return Err(Error::GroupFile(format!(
                    "m({},{}) = {k} must be at least 2",
                    generators[s], generators[t]
                )));
            }
            m[s][t] = k;
            m[t][s] = k;
        }
        Ok(CoxeterMatrix { generators, m })
    }

    /// Convenience constructor from string names.
    pub fn from_names(names: &[&str], pairs: &[(&str, &str, u32)]) -> Result<Self> {
        let gens: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |name: &str| {
            gens.iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::GroupFile(format!("unknown generator {name}")))
        };
        let mut resolved = Vec::with_capacity(pairs.len());
        for &(s, t, k) in pairs {
            resolved.push((idx(s)?, idx(t)?, k));
        }
        CoxeterMatrix::new(gens, &resolved)
    }

    /// Parses the plain-text group file format:
    ///
    /// ```text
    /// # comment
    /// generators: a b
    /// m: a b 3
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators: Option<Vec<String>> = None;
        let mut pairs: Vec<(String, String, u32, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::GroupFile(format!("line {lineno}: expected `key: value`")))?;
            match key.trim() {
                "generators" => {
                    if generators.is_some() {
                        return Err(Error::GroupFile(format!("line {lineno}: generators given twice")));
                    }
                    if !pairs.is_empty() {
                        return Err(Error::GroupFile(format!(
                            "line {lineno}: generators must precede relations"
                        )));
                    }
                    generators = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                "m" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 3 {
                        return Err(Error::GroupFile(format!("line {lineno}: expected `m: s t k`")));
                    }
                    let k = match parts[2] {
                        "inf" | "∞" => INFINITE,
                        v => v.parse::<u32>().map_err(|_| {
                            Error::GroupFile(format!("line {lineno}: bad exponent {v:?}"))
                        })?,
                    };
                    pairs.push((parts[0].to_string(), parts[1].to_string(), k, lineno));
                }
                other => {
                    return Err(Error::GroupFile(format!("line {lineno}: unknown key {other:?}")));
                }
            }
        }
        let generators = generators.ok_or_else(|| Error::GroupFile("missing `generators:` line".into()))?;
        let mut resolved = Vec::new();
        for (s, t, k, lineno) in pairs {
            let find = |name: &str| {
                generators
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| Error::GroupFile(format!("line {lineno}: unknown generator {name}")))
            };
            resolved.push((find(&s)?, find(&t)?, k));
        }
        CoxeterMatrix::new(generators, &resolved)
    }

    /// Type `A_n` on generators `a, b, c, …` in a chain.
    pub fn type_a(n: usize) -> Self {
        let names = letter_names(n);
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i, 3)).collect();
        CoxeterMatrix::new(names, &pairs).unwrap()
    }

    /// Type `B_n`: chain with `m = 4` on the first edge.
    pub fn type_b(n: usize) -> Self {
        let names = letter_names(n);
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i, if i == 1 { 4 } else { 3 })).collect();
        CoxeterMatrix::new(names, &pairs).unwrap()
    }

    /// Type `H_3`.
    pub fn type_h3() -> Self {
        CoxeterMatrix::new(letter_names(3), &[(0, 1, 5), (1, 2, 3)]).unwrap()
    }

    /// Dihedral type `I_2(m)` on generators `a, b`.
    pub fn dihedral(m: u32) -> Self {
        CoxeterMatrix::new(letter_names(2), &[(0, 1, m)]).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// `m(s,t)`; `INFINITE` encodes ∞.
    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.m[s][t]
    }

    /// Connected components of the Coxeter diagram (edges where `m ≥ 3`).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let s = comp[i];
                for t in 0..n {
                    if !seen[t] && t != s && self.m[s][t] != 2 {
                        seen[t] = true;
                        comp.push(t);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Classifies every component of the diagram, failing on the first one
    /// outside the finite-type list.
    pub fn classify(&self) -> Result<Vec<DiagramType>> {
        self.components()
            .iter()
            .map(|comp| classify_component(self, comp))
            .collect()
    }

    fn lcm_of_entries(&self) -> usize {
        let mut l = 1usize;
        for row in &self.m {
            for &k in row {
                if k != INFINITE {
                    l = lcm(l, k as usize);
                }
            }
        }
        l
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(" "))?;
        let n = self.rank();
        for s in 0..n {
            for t in s + 1..n {
                match self.m[s][t] {
                    2 => {}
                    INFINITE => writeln!(f, "m: {} {} inf", self.generators[s], self.generators[t])?,
                    k => writeln!(f, "m: {} {} {k}", self.generators[s], self.generators[t])?,
                }
            }
        }
        Ok(())
    }
}

fn letter_names(n: usize) -> Vec<String> {
    assert!(n <= 26);
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Irreducibility of `W` together with the partition of the generators.
pub fn is_irreducible(matrix: &CoxeterMatrix) -> (bool, Vec<Vec<usize>>) {
    let comps = matrix.components();
    (comps.len() == 1, comps)
}

/// Finite irreducible Coxeter types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::A(n) => write!(f, "A{n}"),
            DiagramType::B(n) => write!(f, "B{n}"),
            DiagramType::D(n) => write!(f, "D{n}"),
            DiagramType::E(n) => write!(f, "E{n}"),
            DiagramType::F4 => write!(f, "F4"),
            DiagramType::H(n) => write!(f, "H{n}"),
            DiagramType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

fn classify_component(matrix: &CoxeterMatrix, comp: &[usize]) -> Result<DiagramType> {
    let names = |c: &[usize]| {
        c.iter()
            .map(|&s| matrix.generators[s].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let fail = |why: &str| Err(Error::NotFiniteType(format!("component {{{}}}: {why}", names(comp))));
    let n = comp.len();
    let mut edges = Vec::new();
    for (i, &s) in comp.iter().enumerate() {
        for &t in &comp[i + 1..] {
            let k = matrix.m[s][t];
            if k == INFINITE {
                return fail("infinite edge label");
            }
            if k >= 3 {
                edges.push((s, t, k));
            }
        }
    }
    match n {
        1 => return Ok(DiagramType::A(1)),
        2 => {
            return Ok(match edges[0].2 {
                3 => DiagramType::A(2),
                4 => DiagramType::B(2),
                k => DiagramType::I2(k),
            })
        }
        _ => {}
    }
    if edges.len() != n - 1 {
        return fail("diagram contains a cycle");
    }
    if edges.iter().any(|e| e.2 > 5) {
        return fail("edge label above 5 in rank at least 3");
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 >= 4).collect();
    if heavy.len() > 1 {
        return fail("more than one edge label above 3");
    }
    let neighbours = |s: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == s {
                    Some(b)
                } else if b == s {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    let degree = |s: usize| neighbours(s).len();
    let max_degree = comp.iter().map(|&s| degree(s)).max().unwrap();
    if let Some(&&(s, t, k)) = heavy.first() {
        if max_degree > 2 {
            return fail("branched diagram with a heavy edge");
        }
        let at_end = degree(s) == 1 || degree(t) == 1;
        return match (k, at_end, n) {
            (4, true, _) => Ok(DiagramType::B(n)),
            (4, false, 4) => Ok(DiagramType::F4),
            (5, true, 3) | (5, true, 4) => Ok(DiagramType::H(n)),
            _ => fail("heavy edge in a position outside the finite list"),
        };
    }
    if max_degree <= 2 {
        return Ok(DiagramType::A(n));
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&s| degree(s) >= 3).collect();
    if branch.len() > 1 || max_degree > 3 {
        return fail("diagram has more than one branch point");
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = neighbours(centre)
        .into_iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [] => break len,
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => unreachable!("single branch point"),
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(DiagramType::D(n)),
        [1, 2, 2] => Ok(DiagramType::E(6)),
        [1, 2, 3] => Ok(DiagramType::E(7)),
        [1, 2, 4] => Ok(DiagramType::E(8)),
        _ => fail("branch arms outside the D/E list"),
    }
}

/// An enumerated finite Coxeter group with all tables populated.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    types: Vec<DiagramType>,
    rank: usize,
    order: usize,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    length: Vec<u32>,
    left_desc: Vec<GenSet>,
    right_desc: Vec<GenSet>,
    inverse: Vec<u32>,
    bar_perm: Vec<u32>,
    words: Vec<Vec<u8>>,
    delta: Element,
    components: Vec<Vec<usize>>,
}

type Matrix = Vec<ExactReal>;

fn flatten(m: &Matrix) -> Vec<i64> {
    m.iter().flat_map(|e| e.coeffs.iter().copied()).collect()
}

/// Enumerates `W` for a finite-type Coxeter matrix.
pub fn build_system(matrix: CoxeterMatrix, cap: usize) -> Result<CoxeterSystem> {
    let types = matrix.classify()?;
    let n = matrix.rank();
    let ring = CyclotomicRing::new(2 * matrix.lcm_of_entries());
    // c[s][t] = 2cos(π/m(s,t)); generator s acts by I + e_s c_s^T
    let c: Vec<Vec<ExactReal>> = (0..n)
        .map(|s| (0..n).map(|t| ring.two_cos_pi_over(matrix.m(s, t) as usize)).collect())
        .collect();

    let mut identity: Matrix = vec![ring.zero(); n * n];
    for i in 0..n {
        identity[i * n + i] = ring.one();
    }
    let mut mats: Vec<Matrix> = vec![identity.clone()];
    let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
    index.insert(flatten(&identity), 0);
    let mut right_mul: Vec<u32> = Vec::new();
    let mut length: Vec<u32> = vec![0];
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        right_mul.resize((w + 1) * n, u32::MAX);
        for s in 0..n {
            let m = &mats[w];
            let mut prod = m.clone();
            for i in 0..n {
                let pivot = &m[i * n + s];
                if pivot.is_zero() {
                    continue;
                }
                for t in 0..n {
                    if c[s][t].is_zero() {
                        continue;
                    }
                    let delta = ring.mul(pivot, &c[s][t]);
                    prod[i * n + t] = ring.add(&prod[i * n + t], &delta);
                }
            }
            let key = flatten(&prod);
            let next = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = mats.len();
                    if id >= cap {
                        return Err(Error::CapExceeded { what: "|W|", cap });
                    }
                    index.insert(key, id as u32);
                    mats.push(prod);
                    length.push(length[w] + 1);
                    queue.push_back(id);
                    id as u32
                }
            };
            right_mul[w * n + s] = next;
        }
    }
    let order = mats.len();

    let mut left_mul = vec![0u32; order * n];
    for (w, m) in mats.iter().enumerate() {
        for s in 0..n {
            let mut prod = m.clone();
            for t in 0..n {
                let mut acc = prod[s * n + t].clone();
                for u in 0..n {
                    if !c[s][u].is_zero() && !m[u * n + t].is_zero() {
                        acc = ring.add(&acc, &ring.mul(&c[s][u], &m[u * n + t]));
                    }
                }
                prod[s * n + t] = acc;
            }
            left_mul[w * n + s] = index[&flatten(&prod)];
        }
    }
    drop(index);
    drop(mats);

    let mut left_desc = vec![GenSet::EMPTY; order];
    let mut right_desc = vec![GenSet::EMPTY; order];
    for w in 0..order {
        for s in 0..n {
            if length[right_mul[w * n + s] as usize] < length[w] {
                right_desc[w].insert(s);
            }
            if length[left_mul[w * n + s] as usize] < length[w] {
                left_desc[w].insert(s);
            }
        }
    }

    // lexicographically least reduced words, comparing generators by name
    let mut by_name: Vec<usize> = (0..n).collect();
    by_name.sort_by(|&a, &b| matrix.generators[a].cmp(&matrix.generators[b]));
    let mut words: Vec<Vec<u8>> = vec![Vec::new(); order];
    for w in 1..order {
        let s = *by_name.iter().find(|&&s| left_desc[w].contains(s)).unwrap();
        let rest = left_mul[w * n + s] as usize;
        let mut word = Vec::with_capacity(length[w] as usize);
        word.push(s as u8);
        word.extend_from_slice(&words[rest]);
        words[w] = word;
    }

    let delta = Element((order - 1) as u32);
    let components = matrix.components();
    let mut sys = CoxeterSystem {
        matrix,
        types,
        rank: n,
        order,
        right_mul,
        left_mul,
        length,
        left_desc,
        right_desc,
        inverse: Vec::new(),
        bar_perm: Vec::new(),
        words,
        delta,
        components,
    };
    sys.inverse = (0..order)
        .map(|w| {
            let mut x = Element::IDENTITY;
            for &s in sys.words[w].iter().rev() {
                x = sys.mul_gen(x, s as usize);
            }
            x.0
        })
        .collect();
    sys.bar_perm = (0..order)
        .map(|w| sys.mul(sys.mul(delta, Element(w as u32)), delta).0)
        .collect();
    Ok(sys)
}

impl CoxeterSystem {
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn types(&self) -> &[DiagramType] {
        &self.types
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator_name(&self, s: usize) -> &str {
        &self.matrix.generators[s]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order as u32).map(Element)
    }

    /// The element represented by generator `s`.
    pub fn generator(&self, s: usize) -> Element {
        Element(self.right_mul[s])
    }

    #[inline]
    pub fn mul_gen(&self, w: Element, s: usize) -> Element {
        Element(self.right_mul[w.index() * self.rank + s])
    }

    #[inline]
    pub fn gen_mul(&self, s: usize, w: Element) -> Element {
        Element(self.left_mul[w.index() * self.rank + s])
    }

    /// Product in `W`, walking the reduced word of `v`.
    pub fn mul(&self, u: Element, v: Element) -> Element {
        self.words[v.index()]
            .iter()
            .fold(u, |acc, &s| self.mul_gen(acc, s as usize))
    }

    /// Product of a word of generators.
    pub fn from_word(&self, word: &[usize]) -> Element {
        word.iter()
            .fold(Element::IDENTITY, |acc, &s| self.mul_gen(acc, s))
    }

    #[inline]
    pub fn length(&self, w: Element) -> usize {
        self.length[w.index()] as usize
    }

    #[inline]
    pub fn inverse(&self, w: Element) -> Element {
        Element(self.inverse[w.index()])
    }

    #[inline]
    pub fn descents(&self, w: Element, side: Side) -> GenSet {
        match side {
            Side::Left => self.left_desc[w.index()],
            Side::Right => self.right_desc[w.index()],
        }
    }

    #[inline]
    pub fn left_descents(&self, w: Element) -> GenSet {
        self.left_desc[w.index()]
    }

    #[inline]
    pub fn right_descents(&self, w: Element) -> GenSet {
        self.right_desc[w.index()]
    }

    /// Conjugation by the longest element.
    #[inline]
    pub fn bar(&self, w: Element) -> Element {
        Element(self.bar_perm[w.index()])
    }

    /// The generator `Δ s Δ`.
    pub fn bar_generator(&self, s: usize) -> usize {
        let b = self.bar(self.generator(s));
        self.words[b.index()][0] as usize
    }

    pub fn delta(&self) -> Element {
        self.delta
    }

    /// `δ`, the length of the longest element.
    pub fn delta_length(&self) -> usize {
        self.length(self.delta)
    }

    pub fn irreducible_components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Lexicographically least reduced word (by generator name).
    pub fn word(&self, w: Element) -> &[u8] {
        &self.words[w.index()]
    }

    /// `u ≤ w` in the prefix (weak) order: some reduced word of `w` begins
    /// with a reduced word of `u`.
    #[inline]
    pub fn is_prefix(&self, u: Element, w: Element) -> bool {
        let rest = self.mul(self.inverse(u), w);
        self.length(u) + self.length(rest) == self.length(w)
    }

    /// Reduced word rendered with generator names; the identity is `1`.
    pub fn render(&self, w: Element) -> String {
        if w == Element::IDENTITY {
            return "1".into();
        }
        self.words[w.index()]
            .iter()
            .map(|&s| self.generator_name(s as usize))
            .collect()
    }

    /// Number of elements of each length.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.delta_length() + 1];
        for &l in &self.length {
            out[l as usize] += 1;
        }
        out
    }
}
