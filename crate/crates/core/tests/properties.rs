mod common;

use std::collections::BTreeSet;

use artin_core::{
    build_system, ArtinElement, Atom, CoxeterMatrix, Garside, GVertex, Order, PositiveElement, DEFAULT_BALL_CAP,
    DEFAULT_CAP,
};
use common::{a2, a3, garside, i2, Reversing};
use proptest::prelude::*;

fn systems() -> Vec<Garside> {
    vec![
        a2(),
        i2(4),
        i2(5),
        a3(),
        garside(CoxeterMatrix::type_b(3)),
        garside(CoxeterMatrix::type_h3()),
    ]
}

fn atom_word(g: &Garside, a: Atom) -> Vec<usize> {
    g.system().word(a.element()).iter().map(|&s| s as usize).collect()
}

// ---- coxeter ---------------------------------------------------------------

#[test]
fn coxeter_tables_are_consistent() {
    for g in systems() {
        let sys = g.system();
        let delta = sys.delta();
        let top = sys.delta_length();
        assert_eq!(sys.length_profile()[top], 1, "unique longest element");
        assert_eq!(sys.mul(delta, delta), artin_core::Element::IDENTITY);
        for w in sys.elements() {
            for s in 0..sys.rank() {
                let ws = sys.mul_gen(w, s);
                assert_eq!(sys.length(ws).abs_diff(sys.length(w)), 1);
                assert_eq!(sys.right_descents(w).contains(s), sys.length(ws) < sys.length(w));
                let sw = sys.gen_mul(s, w);
                assert_eq!(sys.left_descents(w).contains(s), sys.length(sw) < sys.length(w));
            }
            assert_eq!(sys.bar(sys.bar(w)), w);
            assert_eq!(sys.length(sys.bar(w)), sys.length(w));
        }
        let gens: BTreeSet<_> = (0..sys.rank()).map(|s| sys.generator(s)).collect();
        let barred: BTreeSet<_> = gens.iter().map(|&x| sys.bar(x)).collect();
        assert_eq!(gens, barred, "bar permutes the generators");
        // δ is the number of reflections: conjugates of generators
        let reflections: BTreeSet<_> = sys
            .elements()
            .flat_map(|w| (0..sys.rank()).map(move |s| (w, s)))
            .map(|(w, s)| sys.mul(sys.mul(w, sys.generator(s)), sys.inverse(w)))
            .collect();
        assert_eq!(reflections.len(), top);
    }
}

#[test]
fn enumeration_is_independent_of_generator_order() {
    let a = CoxeterMatrix::from_names(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 3)]).unwrap();
    let b = CoxeterMatrix::from_names(&["c", "b", "a"], &[("c", "b", 3), ("b", "a", 4)]).unwrap();
    let (x, y) = (build_system(a, DEFAULT_CAP).unwrap(), build_system(b, DEFAULT_CAP).unwrap());
    assert_eq!(x.order(), y.order());
    assert_eq!(x.length_profile(), y.length_profile());
    let stats = |s: &artin_core::CoxeterSystem| {
        let mut v: Vec<(usize, usize, usize)> = s
            .elements()
            .map(|w| (s.length(w), s.left_descents(w).len(), s.right_descents(w).len()))
            .collect();
        v.sort();
        v
    };
    assert_eq!(stats(&x), stats(&y));
}

// ---- garside ---------------------------------------------------------------

/// Normality against the definition: `A·B` is normal iff no atom longer
/// than `A` divides the product, decided by word reversing.
#[test]
fn descent_normality_matches_largest_prefix_oracle() {
    for g in [a2(), i2(4), i2(5), a3()] {
        let rev = Reversing::new(g.system().matrix());
        let atoms: Vec<Atom> = g.atoms().collect();
        let cg = g.charney_graph();
        for &x in &atoms {
            for &y in &atoms {
                let product: Vec<usize> = atom_word(&g, x).into_iter().chain(atom_word(&g, y)).collect();
                let greedy = !atoms
                    .iter()
                    .any(|&z| g.atom_length(z) > g.atom_length(x) && rev.divides(&atom_word(&g, z), &product));
                assert_eq!(g.is_normal_pair(x, y), greedy);
                let proper = |a: Atom| !a.is_identity() && a != g.delta();
                if proper(x) && proper(y) {
                    assert_eq!(cg.has_edge(x, y), greedy);
                }
            }
        }
    }
}

#[test]
fn atom_lattice_laws() {
    for g in [a2(), i2(5), a3()] {
        let atoms: Vec<Atom> = g.atoms().collect();
        for &x in &atoms {
            assert_eq!(g.atom_meet(x, x), x);
            assert_eq!(g.atom_join(x, x), x);
            assert_eq!(g.right_complement(g.left_complement(x)), x);
            assert_eq!(g.left_complement(g.right_complement(x)), x);
            for &y in &atoms {
                let (m, j) = (g.atom_meet(x, y), g.atom_join(x, y));
                assert_eq!(m, g.atom_meet(y, x));
                assert_eq!(j, g.atom_join(y, x));
                assert_eq!(g.atom_meet(x, j), x, "absorption");
                assert_eq!(g.atom_join(x, m), x, "absorption");
                for &z in &atoms {
                    assert_eq!(g.atom_meet(m, z), g.atom_meet(x, g.atom_meet(y, z)));
                    assert_eq!(g.atom_join(j, z), g.atom_join(x, g.atom_join(y, z)));
                }
            }
        }
    }
}

#[test]
fn complements_multiply_to_delta() {
    for g in systems() {
        let delta = g.from_atom(g.delta());
        for a in g.atoms() {
            let x = g.from_atom(a);
            assert_eq!(g.multiply(&x, &g.from_atom(g.right_complement(a))), delta);
            assert_eq!(g.multiply(&g.from_atom(g.left_complement(a)), &x), delta);
        }
    }
}

fn arb_atoms(order: usize, max: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..order as u32, 0..=max)
}

fn to_atoms(xs: &[u32]) -> Vec<Atom> {
    xs.iter().map(|&i| Atom(artin_core::Element(i))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn prefix_stability(x in arb_atoms(24, 4), y in arb_atoms(24, 6)) {
        let g = a3();
        let (x, y) = (g.normalize(&to_atoms(&x)), g.normalize(&to_atoms(&y)));
        let full = g.multiply(&x, &y);
        for i in 0..=y.len() {
            let part = g.multiply(&x, &y.prefix(i));
            prop_assert_eq!(part.prefix(i), full.prefix(i));
        }
    }

    #[test]
    fn complement_sequence_is_normal(x in arb_atoms(24, 6)) {
        let g = a3();
        let x = g.normalize(&to_atoms(&x));
        let k = x.len();
        let terms: Vec<Atom> = (0..k)
            .rev()
            .map(|i| g.bar_atom_pow(g.right_complement(x.atoms()[i]), (k - 1 - i) as i64))
            .filter(|a| !a.is_identity())
            .collect();
        prop_assert!(terms.windows(2).all(|p| g.is_normal_pair(p[0], p[1])));
        prop_assert_eq!(g.multiply(&x, &g.normalize(&terms)), g.delta_power(k));
    }

    #[test]
    fn bar_and_reverse_are_involutions(x in arb_atoms(24, 6)) {
        let g = a3();
        let x = g.normalize(&to_atoms(&x));
        prop_assert_eq!(g.bar_positive(&g.bar_positive(&x)), x.clone());
        prop_assert_eq!(g.reverse(&g.reverse(&x)), x);
    }

    #[test]
    fn meet_and_join_bound_their_inputs(x in arb_atoms(24, 4), y in arb_atoms(24, 4)) {
        let g = a3();
        let (x, y) = (g.normalize(&to_atoms(&x)), g.normalize(&to_atoms(&y)));
        let (m, j) = (g.meet(&x, &y), g.join(&x, &y));
        prop_assert!(g.divides(&m, &x) && g.divides(&m, &y));
        prop_assert!(g.divides(&x, &j) && g.divides(&y, &j));
        prop_assert_eq!(g.divides(&x, &y), m == x);
    }
}

// ---- artin -----------------------------------------------------------------

fn element(g: &Garside, k: i64, xs: &[u32]) -> ArtinElement {
    let order = g.system().order() as u32;
    let atoms: Vec<Atom> = xs.iter().map(|&i| Atom(artin_core::Element(i % order))).collect();
    g.canonical(k, &atoms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_laws(which in 0usize..3, ks in prop::array::uniform3(-2i64..=2), xs in prop::array::uniform3(arb_atoms(24, 3))) {
        let g = [a2(), i2(4), a3()].into_iter().nth(which).unwrap();
        let [x, y, z] = [0, 1, 2].map(|i| element(&g, ks[i], &xs[i]));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert!(g.mul(&x, &g.inv(&x)).is_identity());
        prop_assert!(g.mul(&g.inv(&x), &x).is_identity());
        prop_assert_eq!(g.length_hom(&g.mul(&x, &y)), g.length_hom(&x) + g.length_hom(&y));
        let sys = g.system();
        prop_assert_eq!(g.project(&g.mul(&x, &y)), sys.mul(g.project(&x), g.project(&y)));
        // vertices are cosets x<Δ>, so Δ acts on the right; on the left
        // only even powers are invisible
        for i in -2..=2 {
            let shifted = g.mul(&x, &ArtinElement::delta_power(i));
            prop_assert_eq!(g.to_vertex(&shifted), g.to_vertex(&x));
            if i % 2 == 0 {
                let left = g.mul(&ArtinElement::delta_power(i), &x);
                prop_assert_eq!(g.to_vertex(&left), g.to_vertex(&x));
            }
        }
        let v = g.to_vertex(&y);
        prop_assert_eq!(g.act(&x, &g.act(&g.inv(&x), &v)), v);
        let text = g.render_artin(&x);
        prop_assert_eq!(g.parse_element(&text).unwrap(), x);
    }
}

// ---- complex ---------------------------------------------------------------

#[test]
fn quasi_symmetry_and_dimension() {
    for g in [a2(), i2(4), i2(5), a3()] {
        let ball = g.ball(&GVertex::base(), 2, DEFAULT_BALL_CAP).unwrap();
        let delta = g.delta_length();
        for v in &ball.vertices {
            for w in &ball.vertices {
                let (at, vw, wv) = (g.d_at(v, w), g.d_wd(v, w), g.d_wd(w, v));
                assert!(at <= vw && vw <= delta * at);
                assert!(wv <= delta * vw);
            }
        }
        // largest simplex through *: a maximal chain of proper atoms
        let nbrs = g.neighbours(&GVertex::base());
        let mut best = 1;
        let mut stack: Vec<Vec<GVertex>> = vec![vec![GVertex::base()]];
        while let Some(s) = stack.pop() {
            best = best.max(s.len());
            for w in &nbrs {
                if s.last().is_some_and(|l| g.wordnorm(w) > g.wordnorm(l)) && s.iter().all(|u| g.d_at(u, w) == 1) {
                    let mut t = s.clone();
                    t.push(w.clone());
                    stack.push(t);
                }
            }
        }
        assert_eq!(best - 1, delta - 1, "dimension of X(G)");
    }
}

#[test]
fn wordnorm_decreases_then_increases_along_geodesics() {
    for g in [a2(), i2(5), a3()] {
        let ball = g.ball(&GVertex::base(), 2, DEFAULT_BALL_CAP).unwrap();
        let step = (ball.len() / 40).max(1);
        let sample: Vec<&GVertex> = ball.vertices.iter().step_by(step).collect();
        for v in &sample {
            for w in &sample {
                for u in &sample {
                    let norms: Vec<usize> = g.geodesic(v, w).iter().map(|p| g.d_wd(u, p)).collect();
                    let turn = norms.windows(2).position(|p| p[1] > p[0]).unwrap_or(norms.len());
                    assert!(norms[..turn].windows(2).all(|p| p[1] < p[0]));
                    assert!(norms[turn..].windows(2).all(|p| p[1] > p[0]));
                }
            }
        }
    }
}

#[test]
fn geodesics_extend_in_both_directions() {
    for g in [a2(), i2(5), a3()] {
        let ball = g.ball(&GVertex::base(), 2, DEFAULT_BALL_CAP).unwrap();
        let star = GVertex::base();
        for w in &ball.vertices {
            if w.is_base() {
                continue;
            }
            let d = g.d_at(&star, w);
            // forward: some neighbour of w is one step further from *
            assert!(g.neighbours(w).iter().any(|x| g.d_at(&star, x) == d + 1));
            // backward: some neighbour of * is one step further from w
            assert!(g.neighbours(&star).iter().any(|x| g.d_at(x, w) == d + 1));
        }
    }
}

#[test]
fn minsets_are_convex_and_displacements_congruent() {
    let g = a2();
    let ball = g.ball(&GVertex::base(), 3, DEFAULT_BALL_CAP).unwrap();
    for text in ["a", "ab", "aD", "abb", "D.a.a", "b.ba.a"] {
        let x = g.parse_element(text).unwrap();
        let res = g.minset_in(&x, &ball).unwrap();
        let residue = g.displacement(&x, &GVertex::base()) % g.delta_length();
        for v in &ball.vertices {
            assert_eq!(g.displacement(&x, v) % g.delta_length(), residue);
        }
        for v in &res.realizers {
            for w in &res.realizers {
                for p in g.geodesic(v, w) {
                    if ball.contains(&p) {
                        assert_eq!(g.displacement(&x, &p), res.value, "{text}");
                    }
                }
            }
        }
    }
}

#[test]
fn link_profiles_in_other_types() {
    for g in [i2(4), i2(5), i2(6)] {
        let d = g.system().rank() - 1;
        let ball = g.ball(&GVertex::base(), 1, DEFAULT_BALL_CAP).unwrap();
        for v in &ball.vertices {
            let (up, down) = g.links(v);
            let h = up.homology();
            assert!(h.is_acyclic() || h.is_sphere(d - 1));
            if !v.is_base() {
                assert!(down.cone_point().is_some());
            }
        }
    }
}

// ---- dynamics --------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn action_is_continuous(k in -2i64..=2, xs in arb_atoms(6, 3), split in 1usize..8, tail in prop::collection::vec(0usize..4, 10)) {
        let g = a2();
        let x = element(&g, k, &xs);
        let cg = g.charney_graph();
        let start: Vec<Atom> = cg.atoms().collect();
        // two itineraries sharing `split` atoms
        let walk = |choices: &[usize]| {
            let mut out = vec![start[0]];
            for &c in choices {
                let next = cg.successors(*out.last().unwrap());
                out.push(next[c % next.len()]);
            }
            out
        };
        let p = walk(&tail);
        let mut other: Vec<usize> = tail.clone();
        for c in other.iter_mut().skip(split) {
            *c += 1;
        }
        let q = walk(&other);
        let common = p.iter().zip(&q).take_while(|(a, b)| a == b).count();
        let (ip, iq) = (g.act_prefix(&x, &p[..common]), g.act_prefix(&x, &q[..common]));
        prop_assert_eq!(&ip, &iq);
        let ifull = g.act_prefix(&x, &p);
        prop_assert_eq!(&ifull.atoms[..ip.guaranteed], &ip.atoms[..]);
    }
}

#[test]
fn action_is_faithful_modulo_center() {
    for g in [a2(), i2(5), a3()] {
        let atoms: Vec<Atom> = g.atoms().collect();
        for k in 0..2 {
            for &x in &atoms {
                for &y in &atoms {
                    let e = g.canonical(k, &[x, y]);
                    if e.is_trivial_in_g() {
                        continue;
                    }
                    assert!(g.faithfulness_witness(&e).is_some(), "{} fixes every s^∞", g.render_artin(&e));
                }
            }
        }
    }
}

#[test]
fn torsion_orders_divide_two_delta() {
    for g in [i2(4), i2(5), a3()] {
        let two_delta = 2 * g.delta_length();
        for k in 0..2 {
            for a in g.atoms() {
                if let Order::Finite(n) = g.order_in_g(&g.canonical(k, &[a])) {
                    assert_eq!(two_delta % n, 0);
                    if n > 1 {
                        let t = g.classify_torsion(&g.canonical(k, &[a])).unwrap();
                        assert!(g.torsion_identity_holds(&t));
                        assert!(g.is_simplex(&t.simplex));
                    }
                }
            }
        }
    }
}

#[test]
fn identity_is_the_empty_positive() {
    let g = a2();
    assert_eq!(g.normalize(&[]), PositiveElement::identity());
}
