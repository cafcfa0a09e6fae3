//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p coxeter-quotients --test acceptance`. Every
//! criterion is exact; the tolerance column says so explicitly.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxeter_quotients::data;
use coxeter_quotients::groupcheck::{
    abelianization_f2, check_homomorphism, count_homomorphisms, tits_matrices, todd_coxeter, FiniteGroupTarget,
    MatrixEvaluator,
};
use coxeter_quotients::presentation::{
    apply_substitution, mutation_substitution, mutation_substitution_with, presentation_of, presentation_of_quiver,
    Convention, CoxeterMatrix, Word,
};
use coxeter_quotients::quiver::{mutation_class, Quiver};
use coxeter_quotients::surface::{
    canonical_key, disc_triangulation, loop_free_flip_graph, punctured_disc_triangulation, regluing_reaches_opposite,
    removal_confluence, standard_triangulation, unoriented_key, AssociateOptions, FlipGraph, PolygonGluing,
    SurfaceSignature, Triangulation,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

const MAX_COSETS: usize = 200_000;
const MAX_HOM_NODES: usize = 50_000_000;

// ---------------------------------------------------------------- C1

/// Closure of the permutation group generated by `gens` (one-line notation).
fn closure_order(gens: &[Vec<usize>]) -> usize {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q: Vec<usize> = (0..n).map(|i| g[p[i]]).collect();
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

/// Independent check for the A3 class: search transposition images in the
/// symmetric group on four letters satisfying every relator and report the
/// largest generated subgroup, built by word closure.
fn a3_brute_force_order(q: &Quiver) -> usize {
    let p = presentation_of_quiver(q).unwrap();
    let transpositions: Vec<Vec<usize>> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut v: Vec<usize> = (0..4).collect();
            v.swap(a, b);
            v
        })
        .collect();
    let mut best = 0;
    let n = q.len();
    for code in 0..transpositions.len().pow(n as u32) {
        let imgs: Vec<&Vec<usize>> = (0..n)
            .map(|i| &transpositions[(code / transpositions.len().pow(i as u32)) % transpositions.len()])
            .collect();
        let ok = p.words().all(|w| {
            let mut x: Vec<usize> = (0..4).collect();
            for &g in w.letters() {
                x = (0..4).map(|i| imgs[g][x[i]]).collect();
            }
            x == (0..4).collect::<Vec<_>>()
        });
        if ok {
            let gens: Vec<Vec<usize>> = imgs.into_iter().cloned().collect();
            best = best.max(closure_order(&gens));
        }
    }
    best
}

fn c1() -> Outcome {
    let a3 = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
    let d4 = Quiver::from_arrows(4, &[(0, 1, 1), (2, 1, 1), (3, 1, 1)]).unwrap();
    let mut details = Vec::new();
    let mut pass = true;
    for (name, q, expected) in [("A3", &a3, 24usize), ("D4", &d4, 192)] {
        let class = mutation_class(q, 1000).unwrap();
        let mut orders = BTreeSet::new();
        for m in class.representatives() {
            let p = presentation_of_quiver(m).unwrap();
            match todd_coxeter(&p, &[], MAX_COSETS) {
                Ok(t) => {
                    orders.insert(t.index());
                }
                Err(_) => {
                    orders.insert(0);
                }
            }
            if name == "A3" {
                let bf = a3_brute_force_order(m);
                if bf != expected {
                    pass = false;
                    details.push(format!("A3 brute force gave {bf}"));
                }
            }
        }
        pass &= orders == BTreeSet::from([expected]);
        details.push(format!("{name}: {} quivers, orders {orders:?}", class.len()));
    }
    outcome(pass, details.join("; "))
}

// ---------------------------------------------------------------- C2

fn c2() -> Outcome {
    let q = data::punctured_annulus_quiver();
    let p = presentation_of_quiver(&q).unwrap();
    // Affine D4 with centre s2 (index 1).
    let w = CoxeterMatrix::from_edges(5, &[(1, 0), (1, 2), (1, 3), (1, 4)]);
    let eval = MatrixEvaluator(tits_matrices(&w).unwrap());
    let phi = vec![
        Word::new([0]),
        Word::new([1]),
        Word::new([2]),
        Word::new([2, 1, 3, 1, 2]),
        Word::new([3, 1, 4, 1, 3]),
    ];
    let report = check_homomorphism(&p, &phi, &eval);
    let kernel = Word::new([0, 4, 2, 3, 2, 4]).pow(2);
    let kernel_report = check_homomorphism(
        &coxeter_quotients::presentation::Presentation::new(
            5,
            vec![coxeter_quotients::presentation::Relator {
                word: kernel,
                kind: coxeter_quotients::presentation::RelatorKind::R3,
                note: "kernel element".into(),
            }],
        )
        .unwrap(),
        &phi,
        &eval,
    );
    let r3 = p
        .relators()
        .iter()
        .filter(|r| r.kind == coxeter_quotients::presentation::RelatorKind::R3)
        .count();
    outcome(
        report.passes() && kernel_report.passes() && p.relators().len() == 11 && r3 == 1,
        format!(
            "{} relators ({} cycle), {} failing; kernel element trivial: {}",
            p.relators().len(),
            r3,
            report.failures().count(),
            kernel_report.passes()
        ),
    )
}

// ---------------------------------------------------------------- C3, C4, C6

fn s04_graph() -> FlipGraph {
    loop_free_flip_graph(&standard_triangulation(0, 4).unwrap(), 10_000).expect("S_{0,4} graph fits the budget")
}

/// Every loop-free triangulation of the four-punctured sphere up to
/// orientation-preserving equivalence, by brute force over all gluings of
/// four triangles.
fn all_loop_free_s04() -> BTreeSet<Vec<u32>> {
    fn matchings(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut BTreeSet<Vec<u32>>) {
        let Some((&a, tail)) = rest.split_first() else {
            if let Ok(t) = Triangulation::from_pairs(4, acc) {
                if t.surface_signature() == (SurfaceSignature { g: 0, b: 0, p: 4, m_b: 0 }) && t.is_loop_free() {
                    out.insert(canonical_key(&t));
                }
            }
            return;
        };
        for i in 0..tail.len() {
            let b = tail[i];
            let r: Vec<usize> = tail.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            acc.push((a, b));
            matchings(&r, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    matchings(&(0..12).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

fn c3(g: &FlipGraph) -> Outcome {
    let found: BTreeSet<Vec<u32>> = g.keys.iter().cloned().collect();
    let all = all_loop_free_s04();
    let targets = FiniteGroupTarget::builtin();
    let mut invariants = BTreeSet::new();
    for t in &g.nodes {
        let p = presentation_of(&t.quiver_of()).unwrap();
        let counts: Vec<u64> = targets
            .iter()
            .map(|x| count_homomorphisms(&p, x, MAX_HOM_NODES).unwrap())
            .collect();
        invariants.insert((abelianization_f2(&p), counts));
    }
    let inv = invariants.iter().next().cloned();
    outcome(
        found == all && invariants.len() == 1,
        format!(
            "{} nodes, {} edges, {} loop-free classes by brute force; invariants (f2 rank, S3/S4/D8 counts) {:?}",
            g.node_count(),
            g.edges.len(),
            all.len(),
            inv
        ),
    )
}

fn c4(g: &FlipGraph) -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for t in &g.nodes {
        let q = t.plain_quiver();
        for arc in 0..t.arc_count() {
            let Ok(f) = t.flip_tracked(arc) else { continue };
            let mutated = q.mutate(arc).unwrap();
            // arc_map sends each arc of t to its arc in the flipped
            // triangulation.
            let relabelled = mutated.relabel(&f.arc_map);
            checked += 1;
            if relabelled != f.triangulation.plain_quiver() {
                bad += 1;
            }
        }
    }
    outcome(bad == 0 && checked > 0, format!("{checked} flips, {bad} mismatches"))
}

fn c6(g: &FlipGraph, decagon: &[Triangulation]) -> Outcome {
    let mut bad = 0;
    let mut count = 0;
    for t in g.nodes.iter().chain(decagon) {
        if t.is_loop_free() {
            count += 1;
            if t.plain_quiver().max_multiplicity() > 1 {
                bad += 1;
            }
        }
    }
    let annulus = data::annulus_two_points();
    let exception = annulus.is_loop_free() && annulus.plain_quiver().max_multiplicity() == 2;
    outcome(
        bad == 0 && exception,
        format!("{count} loop-free triangulations, {bad} with multiple arrows; annulus exception: {exception}"),
    )
}

// ---------------------------------------------------------------- C5

fn c5() -> (Outcome, Vec<Triangulation>) {
    let gluings = PolygonGluing::enumerate(2);
    let mut classes: BTreeMap<Vec<u32>, (Triangulation, bool)> = BTreeMap::new();
    for g in &gluings {
        let t = g.realize();
        let key = unoriented_key(&t);
        classes.entry(key).or_insert_with(|| (t, g.is_opposite()));
    }
    let all_rigid = classes.values().all(|(t, _)| t.loop_free_flips().is_empty() && t.is_loop_free());
    let sig_ok = classes
        .values()
        .all(|(t, _)| t.surface_signature() == SurfaceSignature { g: 2, b: 0, p: 3, m_b: 0 });
    let ts: Vec<Triangulation> = classes.values().map(|(t, _)| t.clone()).collect();
    (
        outcome(
            classes.len() >= 2 && all_rigid && sig_ok,
            format!(
                "{} gluings up to rotation, {} inequivalent triangulations, all without loop-free flips: {all_rigid}",
                gluings.len(),
                classes.len()
            ),
        ),
        ts,
    )
}

// ---------------------------------------------------------------- C7

fn random_flips(t: &Triangulation, steps: usize, rng: &mut ChaCha8Rng) -> Triangulation {
    let mut cur = t.clone();
    for _ in 0..steps {
        let flips = cur.loop_free_flips();
        let Some(&a) = flips.choose(rng) else { break };
        cur = cur.flip(a).unwrap();
    }
    cur
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let starts = [
        standard_triangulation(0, 5).unwrap(),
        standard_triangulation(0, 6).unwrap(),
        standard_triangulation(1, 4).unwrap(),
        standard_triangulation(1, 5).unwrap(),
        standard_triangulation(2, 4).unwrap(),
    ];
    let mut samples = 0;
    let mut attempts = 0;
    let mut failures = 0;
    let mut states = 0;
    while samples < 100 && attempts < 100_000 {
        attempts += 1;
        let start = &starts[rng.gen_range(0..starts.len())];
        let steps = rng.gen_range(1..12);
        let t = random_flips(start, steps, &mut rng);
        if t.find_digons().len() < 2 {
            continue;
        }
        samples += 1;
        let report = removal_confluence(&t, AssociateOptions::default());
        states += report.states;
        if !report.is_confluent() {
            failures += 1;
        }
    }
    outcome(
        samples == 100 && failures == 0,
        format!("{samples} samples from {attempts} walks, {states} states explored, {failures} non-confluent"),
    )
}

// ---------------------------------------------------------------- C8

fn c8() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for g in [1, 2] {
        let r = regluing_reaches_opposite(g);
        let reached = r.values().filter(|&&b| b).count();
        pass &= reached == r.len();
        details.push(format!("g={g}: {reached}/{} gluings reach the opposite one", r.len()));
    }
    outcome(pass, details.join("; "))
}

// ---------------------------------------------------------------- C9

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let starts = [
        disc_triangulation(5).unwrap(),
        disc_triangulation(6).unwrap(),
        disc_triangulation(7).unwrap(),
        punctured_disc_triangulation(3).unwrap(),
        punctured_disc_triangulation(4).unwrap(),
        punctured_disc_triangulation(5).unwrap(),
    ];
    let mut samples = 0;
    let mut relators = 0;
    let mut bad = 0;
    let mut orders = BTreeSet::new();
    while samples < 50 {
        let start = &starts[rng.gen_range(0..starts.len())];
        let steps = rng.gen_range(0..6);
        let t = random_flips(start, steps, &mut rng);
        let flips = t.loop_free_flips();
        let Some(&k) = flips.choose(&mut rng) else { continue };
        samples += 1;
        let q = t.plain_quiver();
        let mutated = q.mutate(k).unwrap();
        let table = todd_coxeter(&presentation_of_quiver(&q).unwrap(), &[], MAX_COSETS).unwrap();
        orders.insert(table.index());
        let target = presentation_of_quiver(&mutated).unwrap();
        for convention in [Convention::Incoming, Convention::Outgoing] {
            let sigma = mutation_substitution_with(&q, k, convention);
            for r in target.words() {
                relators += 1;
                if !table.acts_trivially(&apply_substitution(r, &sigma)) {
                    bad += 1;
                }
            }
        }
        // The two conventions differ by conjugation by s_k in the group.
        let inc = mutation_substitution(&q, k);
        let out = mutation_substitution_with(&q, k, Convention::Outgoing);
        let sk = Word::new([k]);
        for (a, b) in inc.images.iter().zip(&out.images) {
            if !table.acts_trivially(&sk.conjugate(a).concat(&b.inverse())) {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{samples} (Q, k) pairs, {relators} substituted relators, {bad} nontrivial; group orders {orders:?}"),
    )
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut report = |id: &str, name: &str, start: Instant, o: Outcome| {
        all_pass &= o.pass;
        println!(
            "{} {id} {name} [tolerance: exact] ({}) {:.2}s",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    };
    let t = Instant::now();
    report("C1", "finite-type orders", t, c1());
    let t = Instant::now();
    report("C2", "affine D4 homomorphism", t, c2());
    let t = Instant::now();
    let graph = s04_graph();
    report("C3", "flip-graph invariants on S_{0,4}", t, c3(&graph));
    let t = Instant::now();
    report("C4", "flip/mutation commutation", t, c4(&graph));
    let t = Instant::now();
    let (o5, decagon) = c5();
    report("C5", "genus-2 three-point triangulations", t, o5);
    let t = Instant::now();
    report("C6", "no multiple arrows", t, c6(&graph, &decagon));
    let t = Instant::now();
    report("C7", "digon-removal confluence", t, c7());
    let t = Instant::now();
    report("C8", "regluing reachability", t, c8());
    let t = Instant::now();
    report("C9", "substitution soundness", t, c9());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
