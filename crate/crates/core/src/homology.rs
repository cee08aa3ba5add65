//! Reduced integral homology of flag complexes via Smith normal form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Reduced homology `H̃_n` for `n = 0..=dim`, plus the degree `-1` group
/// that is nonzero only for the empty complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    /// Reduced Betti numbers, indexed by degree.
    pub betti: Vec<usize>,
    /// Torsion coefficients (invariant factors > 1), indexed by degree.
    pub torsion: Vec<Vec<BigInt>>,
    /// The complex has no vertices, so `H̃_{-1} = Z`.
    pub empty: bool,
}

impl HomologyProfile {
    /// All reduced groups vanish, as for a point.
    pub fn is_acyclic(&self) -> bool {
        !self.empty && self.betti.iter().all(|&b| b == 0) && self.torsion.iter().all(Vec::is_empty)
    }

    /// The reduced homology of `S^n`: a single free `Z` in degree `n`.
    pub fn is_sphere(&self, n: usize) -> bool {
        !self.empty
            && self.torsion.iter().all(Vec::is_empty)
            && self
                .betti
                .iter()
                .enumerate()
                .all(|(i, &b)| b == usize::from(i == n))
            && self.betti.get(n) == Some(&1)
    }
}

/// All cliques of a graph, grouped by size (`cliques[k]` has `k+1` vertices),
/// each sorted ascending.
pub fn cliques(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Vec<usize>>> {
    let mut adj = vec![vec![false; n]; n];
    for &(i, j) in edges {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for c in &layer {
            let last = *c.last().unwrap();
            for v in last + 1..n {
                if c.iter().all(|&u| adj[u][v]) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        out.push(layer);
        layer = next;
    }
    out
}

/// Diagonal of the Smith normal form (nonzero entries only), each dividing
/// the next.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // pivot: entry of least absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let p = m[t][t].clone();
        let mut clean = true;
        for i in t + 1..rows {
            let q = &m[i][t] / &p;
            if !q.is_zero() {
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
            }
            clean &= m[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = &m[t][j] / &p;
            if !q.is_zero() {
                for i in t..rows {
                    let d = &q * &m[i][t];
                    m[i][j] -= d;
                }
            }
            clean &= m[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // enforce divisibility of the rest of the block by the pivot
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &p).is_zero()));
        if let Some(i) = bad {
            for j in t..cols {
                let x = m[i][j].clone();
                m[t][j] += x;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Reduced homology of the flag complex of a graph on `n` vertices.
pub fn flag_homology(n: usize, edges: &[(usize, usize)]) -> HomologyProfile {
    if n == 0 {
        return HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
            empty: true,
        };
    }
    let simplices = cliques(n, edges);
    let dim = simplices.len() - 1;
    // boundary[k] : C_k -> C_{k-1}, with C_{-1} = Z (augmentation) at k = 0
    let mut ranks = Vec::with_capacity(dim + 2);
    let mut torsion_of = Vec::with_capacity(dim + 2);
    for k in 0..=dim + 1 {
        let diag = if k == 0 {
            vec![BigInt::one()]
        } else if k > dim {
            Vec::new()
        } else {
            let faces = &simplices[k - 1];
            let index: std::collections::HashMap<&[usize], usize> =
                faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
            let mut m = vec![vec![BigInt::zero(); simplices[k].len()]; faces.len()];
            for (j, s) in simplices[k].iter().enumerate() {
                for drop in 0..s.len() {
                    let face: Vec<usize> =
                        s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    m[index[face.as_slice()]][j] = BigInt::from(sign);
                }
            }
            smith_diagonal(m)
        };
        ranks.push(diag.len());
        torsion_of.push(diag.into_iter().filter(|d| !d.is_one()).collect::<Vec<_>>());
    }
    let betti = (0..=dim)
        .map(|k| simplices[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    let torsion = (0..=dim).map(|k| torsion_of[k + 1].clone()).collect();
    HomologyProfile {
        betti,
        torsion,
        empty: false,
    }
}
