//! Local geometry of `X(G)`: the two distances, geodesics, balls, simplices,
//! Morse links, centers and minsets.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::artin::{ArtinElement, GVertex};
use crate::error::{Error, Result};
use crate::garside::{Atom, Garside};
use crate::homology::{flag_homology, HomologyProfile};

/// Default vertex cap for ball construction.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

/// All vertices within atomdistance `radius` of `center`, with the edges of
/// `X(G)` among them oriented by increasing wordnorm.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: GVertex,
    pub radius: usize,
    /// BFS order; `vertices[0]` is the center.
    pub vertices: Vec<GVertex>,
    /// `d_at` from the center.
    pub depth: Vec<usize>,
    /// Directed edges `(u, v)` with `‖u‖ < ‖v‖`, sorted.
    pub edges: Vec<(usize, usize)>,
    index: HashMap<GVertex, usize>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &GVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &GVertex) -> bool {
        self.index.contains_key(v)
    }

    /// Whether `v` lies strictly inside, so that all its neighbours are in
    /// the ball too.
    pub fn is_interior(&self, v: &GVertex) -> bool {
        self.index_of(v).is_some_and(|i| self.depth[i] < self.radius)
    }
}

/// Ascending or descending link at a vertex, on the poset of proper atoms.
#[derive(Debug, Clone)]
pub struct LinkComplex {
    pub ascending: bool,
    pub pivot: Atom,
    /// Atoms `B` standing for the neighbours `v·B`, sorted by atom key.
    pub atoms: Vec<Atom>,
    /// Edges as index pairs into `atoms`, `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl LinkComplex {
    pub fn homology(&self) -> HomologyProfile {
        flag_homology(self.atoms.len(), &self.edges)
    }

    /// The poset minimum, when the link is a cone on one of its vertices.
    pub fn cone_point(&self) -> Option<usize> {
        let n = self.atoms.len();
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in &self.edges {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        (0..n).find(|&c| (0..n).all(|j| j == c || adj[c][j]))
    }

    /// Number of connected components of the underlying graph.
    pub fn components(&self) -> usize {
        let n = self.atoms.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = n;
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }
}

/// Result of a ball-restricted optimization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub realizers: Vec<GVertex>,
    /// Every realizer lies strictly inside the search ball.
    pub interior: bool,
}

impl Garside {
    /// `v⁻¹w`, reduced to a vertex.
    pub fn relative(&self, v: &GVertex, w: &GVertex) -> GVertex {
        let x = self.mul(&self.inv(&self.lift(v)), &self.lift(w));
        self.to_vertex(&x)
    }

    /// Atomdistance.
    pub fn d_at(&self, v: &GVertex, w: &GVertex) -> usize {
        self.relative(v, w).atomnorm()
    }

    /// Worddistance; not symmetric.
    pub fn d_wd(&self, v: &GVertex, w: &GVertex) -> usize {
        self.wordnorm(&self.relative(v, w))
    }

    /// The geodesic from `v` to `w`: translate `v` to `*`, walk the prefixes
    /// of the special representative, translate back.
    pub fn geodesic(&self, v: &GVertex, w: &GVertex) -> Vec<GVertex> {
        let r = self.relative(v, w);
        let lv = self.lift(v);
        (0..=r.atomnorm())
            .map(|i| {
                let p = self.vertex_of_positive(&r.pos().prefix(i));
                self.act(&lv, &p)
            })
            .collect()
    }

    /// Neighbours `v·B` for the proper atoms `B`, in atom index order.
    pub fn neighbours(&self, v: &GVertex) -> Vec<GVertex> {
        self.proper_atoms().map(|b| self.vertex_step(v, b)).collect()
    }

    /// Breadth-first ball; fails once more than `cap` vertices are found.
    pub fn ball(&self, center: &GVertex, radius: usize, cap: usize) -> Result<Ball> {
        let mut vertices = vec![center.clone()];
        let mut depth = vec![0];
        let mut index = HashMap::from([(center.clone(), 0usize)]);
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let d = depth[i];
            for w in self.neighbours(&vertices[i]) {
                let j = match index.get(&w) {
                    Some(&j) => j,
                    None => {
                        if d == radius {
                            continue;
                        }
                        if vertices.len() == cap {
                            return Err(Error::CapExceeded { what: "ball vertices", cap });
                        }
                        let j = vertices.len();
                        index.insert(w.clone(), j);
                        vertices.push(w);
                        depth.push(d + 1);
                        adjacency.push(Vec::new());
                        queue.push_back(j);
                        j
                    }
                };
                adjacency[i].push(j);
            }
        }
        let norms: Vec<usize> = vertices.iter().map(|v| self.wordnorm(v)).collect();
        let mut edges: Vec<(usize, usize)> = adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| norms[i] < norms[j])
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Ball {
            center: center.clone(),
            radius,
            vertices,
            depth,
            edges,
            index,
        })
    }

    /// Pairwise atomdistance 1 (a single vertex is a simplex).
    pub fn is_simplex(&self, vs: &[GVertex]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, v)| vs[i + 1..].iter().all(|w| v == w || self.d_at(v, w) == 1))
    }

    /// The cyclic order of the vertices of a simplex: translate the first
    /// vertex to `*` and sort by wordnorm. The result starts with `vs[0]`.
    pub fn cyclic_order(&self, vs: &[GVertex]) -> Result<Vec<GVertex>> {
        if vs.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !self.is_simplex(vs) {
            return Err(Error::NotASimplex);
        }
        let v0 = &vs[0];
        let mut keyed: Vec<(usize, GVertex)> = vs
            .iter()
            .map(|v| (self.d_wd(v0, v), v.clone()))
            .collect();
        keyed.sort();
        keyed.dedup();
        Ok(keyed.into_iter().map(|(_, v)| v).collect())
    }

    /// Ascending and descending links at `v`, split by the pivot atom
    /// `C = complement_under(Δ, v)`: the neighbour `v·B` lies below `v`
    /// exactly when `C < B`.
    pub fn links(&self, v: &GVertex) -> (LinkComplex, LinkComplex) {
        let pivot = self.complement_under(self.delta(), v.pos());
        let mut atoms: Vec<Atom> = self.proper_atoms().collect();
        atoms.sort_by_key(|&a| self.atom_sort_key(a));
        let (down, up): (Vec<Atom>, Vec<Atom>) =
            atoms.into_iter().partition(|&b| self.atom_divides(pivot, b));
        let build = |ascending: bool, atoms: Vec<Atom>| {
            let nbrs: Vec<GVertex> = atoms.iter().map(|&b| self.vertex_step(v, b)).collect();
            let mut edges = Vec::new();
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if self.d_at(&nbrs[i], &nbrs[j]) == 1 {
                        edges.push((i, j));
                    }
                }
            }
            LinkComplex {
                ascending,
                pivot,
                atoms,
                edges,
            }
        };
        (build(true, up), build(false, down))
    }

    /// `max_t d_wd(t, z)`.
    pub fn circumradius_at(&self, targets: &[GVertex], z: &GVertex) -> usize {
        targets.iter().map(|t| self.d_wd(t, z)).max().unwrap_or(0)
    }

    /// Exhaustive center search over a ball.
    pub fn center_in(&self, targets: &[GVertex], search: &Ball) -> Result<SearchResult> {
        if targets.is_empty() {
            return Err(Error::EmptyInput);
        }
        self.minimize_in(search, |z| self.circumradius_at(targets, z))
    }

    fn minimize_in(&self, search: &Ball, f: impl Fn(&GVertex) -> usize) -> Result<SearchResult> {
        let values: Vec<usize> = search.vertices.iter().map(&f).collect();
        let value = *values.iter().min().ok_or(Error::EmptyInput)?;
        let mut realizers: Vec<GVertex> = search
            .vertices
            .iter()
            .zip(&values)
            .filter(|&(_, &x)| x == value)
            .map(|(v, _)| v.clone())
            .collect();
        realizers.sort_by_key(|v| (self.wordnorm(v), v.clone()));
        let interior = realizers.iter().all(|v| search.is_interior(v));
        Ok(SearchResult {
            value,
            realizers,
            interior,
        })
    }

    /// Global centers of a finite vertex set. Starting anywhere, move to a
    /// neighbour with smaller circumradius while one exists: if `z` is not a
    /// center, the vertex after `z` on a geodesic towards a center is
    /// strictly better by the convexity of `d_wd`. Distinct centers are
    /// adjacent, so the rest lie among the neighbours of the first.
    pub fn centers(&self, targets: &[GVertex]) -> Result<(usize, Vec<GVertex>)> {
        let start = targets.first().ok_or(Error::EmptyInput)?;
        let mut z = start.clone();
        let mut fz = self.circumradius_at(targets, &z);
        loop {
            let better = self
                .neighbours(&z)
                .into_iter()
                .map(|w| (self.circumradius_at(targets, &w), w))
                .filter(|(f, _)| *f < fz)
                .min();
            match better {
                Some((f, w)) => {
                    fz = f;
                    z = w;
                }
                None => break,
            }
        }
        let mut out: Vec<GVertex> = self
            .neighbours(&z)
            .into_iter()
            .filter(|w| self.circumradius_at(targets, w) == fz)
            .collect();
        out.push(z);
        out.sort_by_key(|v| (self.wordnorm(v), v.clone()));
        out.dedup();
        Ok((fz, out))
    }

    /// `d_wd(v, g(v))`.
    pub fn displacement(&self, g: &ArtinElement, v: &GVertex) -> usize {
        self.d_wd(v, &self.act(g, v))
    }

    /// Minimal displacement over a ball and the vertices realizing it.
    pub fn minset_in(&self, g: &ArtinElement, search: &Ball) -> Result<SearchResult> {
        self.minimize_in(search, |v| self.displacement(g, v))
    }

    /// DOT rendering of a ball, edges oriented by wordnorm.
    pub fn ball_to_dot(&self, ball: &Ball) -> String {
        let mut out = String::from("digraph ball {\n");
        for (i, v) in ball.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", self.render_vertex(v));
        }
        for &(i, j) in &ball.edges {
            let _ = writeln!(out, "  v{i} -> v{j};");
        }
        out.push_str("}\n");
        out
    }

    /// CSV of `d_at` and both orders of `d_wd` over all ordered pairs.
    pub fn ball_to_csv(&self, ball: &Ball) -> String {
        let mut out = String::from("from,to,d_at,d_wd\n");
        for v in &ball.vertices {
            let sv = self.render_vertex(v);
            for w in &ball.vertices {
                let r = self.relative(v, w);
                let _ = writeln!(
                    out,
                    "{sv},{},{},{}",
                    self.render_vertex(w),
                    r.atomnorm(),
                    self.wordnorm(&r)
                );
            }
        }
        out
    }
}
