//! Acceptance checks 1-12. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line, in order.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mpdr::autgroup::{automorphisms, stabilizer_criterion_check, AutOptions};
use mpdr::constructions::{
    cyclic_2pdr, cyclic_mpdr, drr_to_2pdr, find_valency2_orr, two_generated_mpdr,
};
use mpdr::mcayley::verify_semiregular;
use mpdr::search::{
    exhaust_2partite_valency3, exhaust_z2_m3_valency3, trivial_aut_3regular_search, RigidMode,
    RigidSearch, Verdict, Z2Family,
};
use mpdr::{
    automorphism_group, brute_force_automorphisms, is_pdr, ConnectionSpec, Digraph, FiniteGroup,
    MCayleyDigraph, Permutation,
};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn a5() -> FiniteGroup {
    FiniteGroup::from_permutations(
        5,
        &[
            Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap(),
            Permutation::parse_cycles(5, "(0 1 2)").unwrap(),
        ],
    )
    .unwrap()
}

fn two_generated_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("S3", FiniteGroup::symmetric(3).unwrap()),
        ("D4", FiniteGroup::dihedral(4).unwrap()),
        ("Q8", FiniteGroup::quaternion().unwrap()),
        ("Z2xZ4", FiniteGroup::cyclic_product(2, 4).unwrap()),
    ]
}

/// Every construction from criteria 1-8, labelled.
fn corpus() -> Vec<(String, MCayleyDigraph)> {
    let mut out = Vec::new();
    let mut push = |name: String, g: &FiniteGroup, s: &ConnectionSpec| {
        out.push((name, MCayleyDigraph::build(g, s).unwrap()));
    };
    for n in 5..=12 {
        push(
            format!("cyclic_2pdr({n})"),
            &FiniteGroup::cyclic(n).unwrap(),
            &cyclic_2pdr(n).unwrap(),
        );
    }
    for n in [3, 4] {
        let g = FiniteGroup::cyclic(n).unwrap();
        for e in exhaust_2partite_valency3(&g).unwrap() {
            let s = ConnectionSpec::new(2, n)
                .unwrap()
                .with(0, 1, &e.t01)
                .unwrap()
                .with(1, 0, &e.t10)
                .unwrap();
            push(format!("Z{n} {:?}/{:?}", e.t01, e.t10), &g, &s);
        }
    }
    let z2 = FiniteGroup::cyclic(2).unwrap();
    for e in exhaust_z2_m3_valency3().unwrap() {
        push(
            format!("Z2 m=3 {:?} {:?}", e.family, e.assignment),
            &z2,
            &e.spec,
        );
    }
    for (n, m) in cyclic_mpdr_cases() {
        push(
            format!("cyclic_mpdr({n},{m})"),
            &FiniteGroup::cyclic(n).unwrap(),
            &cyclic_mpdr(n, m).unwrap(),
        );
    }
    for (name, g) in two_generated_groups() {
        let (x, y) = (g.generators()[0], g.generators()[1]);
        for m in 3..=5 {
            push(
                format!("{name} m={m}"),
                &g,
                &two_generated_mpdr(&g, x, y, m).unwrap(),
            );
        }
    }
    let g = a5();
    let r = find_valency2_orr(&g).unwrap().unwrap();
    push("A5 drr-extend".into(), &g, &drr_to_2pdr(&g, &r).unwrap());
    out
}

fn cyclic_mpdr_cases() -> Vec<(usize, usize)> {
    let mut cases = vec![(2, 4)];
    cases.extend((5..=8).map(|m| (2, m)));
    for n in 3..=8 {
        cases.extend((3..=6).map(|m| (n, m)));
    }
    cases
}

fn criterion_1() -> Check {
    for n in 5..=12 {
        let g = FiniteGroup::cyclic(n).unwrap();
        let r = is_pdr(&g, &cyclic_2pdr(n).unwrap()).unwrap();
        ensure!(r.color_blind, "n={n}: report not colour-blind");
        ensure!(
            r.aut_order == big(n) && r.is_pdr,
            "n={n}: aut_order {}",
            r.aut_order
        );
    }
    Ok("aut_order = n for n = 5..12".into())
}

fn criterion_2() -> Check {
    for (n, expected) in [(3, 1), (4, 16)] {
        let g = FiniteGroup::cyclic(n).unwrap();
        let entries = exhaust_2partite_valency3(&g).unwrap();
        ensure!(entries.len() == expected, "Z{n}: {} specs", entries.len());
        for e in &entries {
            ensure!(
                e.aut_order > big(n),
                "Z{n} {:?}/{:?}: aut_order {}",
                e.t01,
                e.t10,
                e.aut_order
            );
            if n == 4 {
                let y = e
                    .translate
                    .ok_or(format!("Z4 {:?}/{:?}: no translate", e.t01, e.t10))?;
                ensure!(
                    g.left_translate(y, &e.t01) == e.t10,
                    "Z4: translate {y} is wrong"
                );
            }
        }
    }
    Ok("Z3: 1 spec, Z4: 16 specs, all aut_order > n; all Z4 pairs are translates".into())
}

fn criterion_3() -> Check {
    for n in 9..=11 {
        let x = MCayleyDigraph::build(&FiniteGroup::cyclic(n).unwrap(), &cyclic_2pdr(n).unwrap())
            .unwrap();
        let d = x.digraph();
        let n0 = d.k_step_out_neighborhood(x.vertex(0, 0), 3).unwrap();
        let n1 = d.k_step_out_neighborhood(x.vertex(0, 1), 3).unwrap();
        ensure!(
            n0.len() == 8 && n1.len() == 9,
            "n={n}: sizes {} and {}",
            n0.len(),
            n1.len()
        );
        ensure!(
            n0 == (0..8).map(|g| x.vertex(g, 1)).collect::<Vec<_>>(),
            "n={n}: Γ+3(1_0) = {n0:?}"
        );
        ensure!(
            n1 == (0..9).map(|g| x.vertex(g, 0)).collect::<Vec<_>>(),
            "n={n}: Γ+3(1_1) = {n1:?}"
        );
    }
    Ok("|Γ+3(1_0)| = 8, |Γ+3(1_1)| = 9 for n = 9, 10, 11".into())
}

fn criterion_4() -> Check {
    let x =
        MCayleyDigraph::build(&FiniteGroup::cyclic(5).unwrap(), &cyclic_2pdr(5).unwrap()).unwrap();
    let cycles = x.digraph().directed_hamiltonian_oriented_cycles().unwrap();
    ensure!(cycles.len() == 1, "{} cycles", cycles.len());
    // 1_0, x_1, x^2_0, x^3_1, x^4_0, 1_1, x_0, x^2_1, x^3_0, x^4_1
    let expected: Vec<usize> = (0..10).map(|k| x.vertex(k % 5, k % 2)).collect();
    let c = &cycles[0];
    ensure!(c.len() == 10, "cycle length {}", c.len());
    let matches = (0..10).any(|r| (0..10).all(|k| c[(k + r) % 10] == expected[k]));
    ensure!(matches, "cycle {c:?} is not a rotation of {expected:?}");
    Ok("exactly one oriented Hamiltonian cycle, length 10, matching up to rotation".into())
}

fn criterion_5() -> Check {
    let entries = exhaust_z2_m3_valency3().unwrap();
    let forced: Vec<_> = entries
        .iter()
        .filter(|e| e.family == Z2Family::Forced)
        .collect();
    ensure!(forced.len() == 8, "{} forced assignments", forced.len());
    for e in &forced {
        ensure!(
            e.aut_order == big(6),
            "{:?}: aut_order {}",
            e.assignment,
            e.aut_order
        );
    }
    let mirror_ok = entries.iter().all(|e| e.aut_order == big(6));
    Ok(format!(
        "8 assignments, aut_order 6 each (mirror family also 6: {mirror_ok})"
    ))
}

fn criterion_6() -> Check {
    for (n, m) in cyclic_mpdr_cases() {
        let g = FiniteGroup::cyclic(n).unwrap();
        let r = is_pdr(&g, &cyclic_mpdr(n, m).unwrap()).unwrap();
        ensure!(
            r.aut_order == big(n),
            "(n,m)=({n},{m}): aut_order {}",
            r.aut_order
        );
        ensure!(
            r.valency == Some(3),
            "(n,m)=({n},{m}): valency {:?}",
            r.valency
        );
    }
    Ok(format!(
        "{} (n,m) pairs, aut_order = n",
        cyclic_mpdr_cases().len()
    ))
}

fn criterion_7() -> Check {
    for (name, g) in two_generated_groups() {
        let (x, y) = (g.generators()[0], g.generators()[1]);
        for m in 3..=5 {
            let r = is_pdr(&g, &two_generated_mpdr(&g, x, y, m).unwrap()).unwrap();
            ensure!(
                r.is_pdr && r.aut_order == big(g.order()),
                "{name} m={m}: aut_order {}",
                r.aut_order
            );
        }
    }
    Ok("S3, D4, Q8, Z2xZ4 with m = 3, 4, 5: aut_order = |G|".into())
}

fn criterion_8() -> Check {
    let g = a5();
    ensure!(g.order() == 60, "A5 has order {}", g.order());
    let r = find_valency2_orr(&g)
        .unwrap()
        .ok_or("no valency-2 ORR found")?;
    let spec = drr_to_2pdr(&g, &r).unwrap();
    let x = MCayleyDigraph::build(&g, &spec).unwrap();
    ensure!(
        x.digraph().order() == 120,
        "{} vertices",
        x.digraph().order()
    );
    ensure!(spec.valency() == Some(3), "valency {:?}", spec.valency());
    let report = is_pdr(&g, &spec).unwrap();
    ensure!(
        report.aut_order == big(60),
        "aut_order {}",
        report.aut_order
    );
    Ok(format!(
        "ORR {{{}, {}}}, T10 = {:?}, aut_order 60 on 120 vertices",
        g.label(r[0]),
        g.label(r[1]),
        spec.get(1, 0)
    ))
}

fn random_digraph(rng: &mut ChaCha8Rng) -> Digraph {
    let n = rng.gen_range(1..=7);
    let density: f64 = rng.gen_range(0.1..0.9);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    let d = Digraph::new(n, &arcs).unwrap();
    if rng.gen_bool(0.3) {
        let colors = (0..n).map(|_| rng.gen_range(0..2)).collect();
        d.with_colors(colors).unwrap()
    } else {
        d
    }
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut count = 0;
    for i in 0..600 {
        let d = random_digraph(&mut rng);
        let fast = automorphism_group(&d).unwrap().order();
        let slow = brute_force_automorphisms(&d).unwrap().order();
        ensure!(
            fast == slow,
            "random digraph #{i}: {fast} vs {slow}\n{}",
            d.to_text()
        );
        count += 1;
    }
    let mut constructed = 0;
    for (name, x) in corpus() {
        if x.digraph().order() > 9 {
            continue;
        }
        for d in [x.digraph().clone(), x.digraph().uncolored()] {
            let fast = automorphism_group(&d).unwrap().order();
            let slow = brute_force_automorphisms(&d).unwrap().order();
            ensure!(fast == slow, "{name}: {fast} vs {slow}");
        }
        constructed += 1;
    }
    Ok(format!(
        "{count} random and {constructed} constructed digraphs agree with brute force"
    ))
}

fn criterion_10() -> Check {
    let corpus = corpus();
    for (name, x) in &corpus {
        let n = x.group().order();
        let aut = automorphisms(x.digraph(), AutOptions::color_blind())
            .unwrap()
            .group;
        for g in 0..n {
            let r = x.right_translation(g).unwrap();
            ensure!(aut.contains(&r), "{name}: R({g}) is not an automorphism");
        }
        let (semiregular, orbits) = verify_semiregular(&x.right_regular_group());
        ensure!(semiregular, "{name}: R(G) is not semiregular");
        let parts: Vec<Vec<usize>> = (0..x.m()).map(|i| x.part(i)).collect();
        ensure!(orbits == parts, "{name}: orbits of R(G) are not the parts");
        ensure!(
            &aut.order() % big(n) == BigUint::default(),
            "{name}: |G| does not divide {}",
            aut.order()
        );
        if x.spec().is_partite() {
            for (i, p) in parts.iter().enumerate() {
                let (sub, _) = x.digraph().induced_subdigraph(p).unwrap();
                ensure!(sub.arc_count() == 0, "{name}: part {i} has arcs");
            }
        }
    }
    Ok(format!("{} constructed digraphs", corpus.len()))
}

fn criterion_11() -> Check {
    let mut with_hypotheses = 0;
    let corpus = corpus();
    for (name, x) in &corpus {
        let u: Vec<usize> = (0..x.m()).map(|i| x.vertex(0, i)).collect();
        let r = stabilizer_criterion_check(x, &u).unwrap();
        ensure!(
            r.consistent(),
            "{name}: hypotheses hold but aut_order != |G|"
        );
        with_hypotheses += r.hypotheses_hold as usize;
    }
    Ok(format!(
        "{} digraphs, hypotheses held on {with_hypotheses}, no counterexample",
        corpus.len()
    ))
}

fn criterion_12() -> Check {
    let k4 = automorphism_group(
        &Digraph::new(
            4,
            &(0..4)
                .flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        )
        .unwrap(),
    )
    .unwrap();
    ensure!(
        k4.order() == big(24),
        "complete digraph K4 has aut_order {}",
        k4.order()
    );
    let r4 = trivial_aut_3regular_search(&RigidSearch::exhaustive(4)).unwrap();
    ensure!(r4.verdict == Verdict::NoneExists, "m=4: {:?}", r4.verdict);
    let randomized = RigidSearch {
        mode: RigidMode::Randomized {
            budget: 200,
            seed: 7,
        },
        ..RigidSearch::exhaustive(4)
    };
    let r4r = trivial_aut_3regular_search(&randomized).unwrap();
    ensure!(
        r4r.verdict != Verdict::Found,
        "m=4 randomized: {:?}",
        r4r.verdict
    );

    let mut summary = vec!["m=4 none-exists".to_string()];
    for m in [5, 6] {
        let runs: Vec<_> = [1, 1, 4, 4]
            .iter()
            .map(|&jobs| {
                trivial_aut_3regular_search(&RigidSearch {
                    jobs,
                    ..RigidSearch::exhaustive(m)
                })
                .unwrap()
            })
            .collect();
        for r in &runs[1..] {
            ensure!(r.verdict == runs[0].verdict, "m={m}: verdicts differ");
            ensure!(r.witness == runs[0].witness, "m={m}: witnesses differ");
            ensure!(
                r.nodes_explored == runs[0].nodes_explored,
                "m={m}: node counts differ"
            );
        }
        if let Some(w) = &runs[0].witness {
            let d = w.to_digraph().unwrap();
            ensure!(d.is_k_regular(3), "m={m}: witness not 3-regular");
            ensure!(
                automorphism_group(&d).unwrap().is_trivial(),
                "m={m}: witness not rigid"
            );
        }
        summary.push(format!(
            "m={m} {}",
            serde_json::to_value(&runs[0].verdict)
                .unwrap()
                .as_str()
                .unwrap()
        ));
    }
    Ok(format!(
        "{} (stable over two runs and jobs 1/4)",
        summary.join(", ")
    ))
}

fn main() {
    let criteria: [(u32, fn() -> Check); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failed = 0;
    for (id, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {id:>2}: PASS  {msg} [{secs:.2}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {msg} [{secs:.2}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
