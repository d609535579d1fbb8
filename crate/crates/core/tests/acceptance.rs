//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Integer results must match exactly; the only tolerances are the pinned
//! wall-clock limits below. The process exits 0 once every criterion has
//! been reported, so that the rest of `cargo test` still runs; set
//! `FRANK_STRICT=1` to exit 1 when any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use frank::certificate::verify_certificate;
use frank::constructions::family_certificate;
use frank::fixtures::{fixture_dir, load_certificate, SNARKS};
use frank::graph::{
    build_graph, edge_connectivity, enumerate_cubic_3ec, find_triangles, generate_family,
    is_isomorphic, FamilySpec, Graph,
};
use frank::orientation::Orientation;
use frank::solver::{
    check_conjectures, cover_search, frank_number_exact, orientation_classes, Budget,
    OrientationSpace, ScanOptions, SearchOptions,
};
use frank::transforms::{
    contract_triangle, glued_k4_pair, good_matching, lift_certificate, local_cubic_modification,
    truncate, TransformError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MINUTE: u64 = 60;

type Check = Result<String, String>;

/// Number, name, wall-clock limit in seconds and the check itself.
type Criterion = (u8, &'static str, u64, fn() -> Check);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn exact(g: &Graph) -> Result<usize, String> {
    let report = frank_number_exact(g, 4, &Budget::default()).map_err(|e| e.to_string())?;
    report
        .frank_number
        .exact()
        .ok_or_else(|| "no exact value".to_string())
}

fn c1_petersen_headline() -> Check {
    let g = generate_family(&FamilySpec::Petersen).unwrap();
    let report = frank_number_exact(&g, 3, &Budget::default()).map_err(|e| e.to_string())?;
    ensure(report.frank_number.exact() == Some(3), || {
        format!("F = {:?}", report.frank_number)
    })?;
    let c = report.certificate.as_ref().ok_or("no certificate")?;
    ensure(c.claimed_k == 3 && verify_certificate(&g, c).valid, || {
        "certificate does not verify".into()
    })?;
    ensure(report.lower_bound.no_cover_of_size == Some(2), || {
        format!("lower bound evidence {:?}", report.lower_bound)
    })?;
    ensure(report.stats.orientations_scanned == 1 << 14, || {
        format!("{} orientations scanned", report.stats.orientations_scanned)
    })?;
    Ok(format!(
        "F = 3, certificate verifies, no 2-cover among {} maximal sets, 2^14 orientations",
        report.stats.maximal_deletable_sets
    ))
}

fn c2_petersen_structure() -> Check {
    let g = generate_family(&FamilySpec::Petersen).unwrap();
    let classes = orientation_classes(&g, false).map_err(|e| e.to_string())?;
    ensure(classes.count() == 18, || {
        format!("(a) {} classes", classes.count())
    })?;

    let space = OrientationSpace::new(&g).unwrap();
    let all = space
        .sc_orientations(&ScanOptions {
            fix_first_edge: false,
            prune: false,
            max_edges: 15,
        })
        .unwrap();
    let max = all.iter().map(|&(_, d)| d.count_ones()).max().unwrap_or(0);
    ensure(all.len() == 1920 && max == 8, || {
        format!("(b) {} SC orientations, max deletable {max}", all.len())
    })?;

    for &(bits, _) in &all {
        let colors = Orientation::from_u64(&g, bits).color_vertices();
        ensure(colors.red.len() == 5 && colors.green.len() == 5, || {
            format!("(c) orientation {bits:b}")
        })?;
    }

    let big: Vec<_> = classes
        .classes
        .iter()
        .filter(|c| c.deletable_count() >= 7)
        .collect();
    let touching = big
        .iter()
        .filter(|c| {
            (0..g.n()).all(|v| {
                g.incident_edges(v)
                    .iter()
                    .any(|&e| c.deletable >> e & 1 == 1)
            })
        })
        .count();
    ensure(big.len() == 8 && touching == 4, || {
        format!("(d) {} classes with >= 7, {touching} touching", big.len())
    })?;
    Ok("(a) 18 classes under Aut(P), no reversal quotient; (b) max 8; (c) 5 red / 5 green; (d) 8 and 4".into())
}

fn c3_small_sweep() -> Check {
    let petersen = generate_family(&FamilySpec::Petersen).unwrap();
    let mut summary = Vec::new();
    for (n, expected) in [(6, 2), (8, 4), (10, 14)] {
        let graphs = enumerate_cubic_3ec(n).map_err(|e| e.to_string())?;
        ensure(graphs.len() == expected, || {
            format!("n = {n}: {} graphs", graphs.len())
        })?;
        for g in &graphs {
            let f = exact(g)?;
            let want = if is_isomorphic(g, &petersen) { 3 } else { 2 };
            ensure(f == want, || format!("n = {n}: F = {f}, expected {want}"))?;
        }
        summary.push(format!("n = {n}: {expected}"));
    }
    Ok(format!(
        "{}; F = 2 except the Petersen graph (F = 3)",
        summary.join(", ")
    ))
}

fn c4_constructions() -> Check {
    let specs: Vec<FamilySpec> = (3..=12)
        .map(FamilySpec::Wheel)
        .chain((4..=16).step_by(2).map(FamilySpec::Mobius))
        .chain((3..=12).map(FamilySpec::Prism))
        .chain((3..=8).map(|s| FamilySpec::GeneralizedPetersen { n: 2 * s + 1, k: s }))
        .collect();
    let mut exact_checked = 0;
    for spec in &specs {
        let c = family_certificate(spec)
            .ok_or_else(|| format!("{spec}: no construction"))?
            .map_err(|e| format!("{spec}: {e}"))?;
        let g = generate_family(spec).unwrap();
        ensure(c.claimed_k == 2 && verify_certificate(&g, &c).valid, || {
            format!("{spec} does not verify")
        })?;
        // reduced space 2^(m-1) <= 2^22
        if g.m() <= 23 {
            let f = exact(&g)?;
            ensure(f == 2, || format!("{spec}: exact F = {f}"))?;
            exact_checked += 1;
        }
    }
    Ok(format!(
        "{} certificates verify with k = 2; exact F = 2 on {exact_checked} of them",
        specs.len()
    ))
}

fn c5_snarks() -> Check {
    let mut found = Vec::new();
    for spec in &SNARKS {
        let g = generate_family(spec).unwrap();
        let out = cover_search(
            &g,
            &SearchOptions {
                k: 2,
                seed: 0,
                time_limit: Some(Duration::from_secs(15 * MINUTE)),
                ..SearchOptions::default()
            },
        )
        .map_err(|e| e.to_string())?;
        let c = out
            .certificate
            .ok_or_else(|| format!("{spec}: nothing found in 15 min"))?;
        ensure(verify_certificate(&g, &c).valid, || {
            format!("{spec}: search result does not verify")
        })?;
        let frozen = load_certificate(&fixture_dir(), spec).map_err(|e| e.to_string())?;
        ensure(verify_certificate(&g, &frozen).valid, || {
            format!("{spec}: fixture does not verify")
        })?;
        found.push(format!("{spec} ({:.2} s)", out.seconds));
    }
    let j3 = generate_family(&FamilySpec::Flower(3)).unwrap();
    let f = exact(&j3)?;
    ensure(f == 2, || {
        format!(
            "seed-0 certificates verify for {}, but exact F(flower:3) = {f}, expected 2 (J_3 is Tietze's graph)",
            found.join(", ")
        )
    })?;
    Ok(format!("{}; flower:3 F = 2", found.join(", ")))
}

fn c6_petersen_truncations() -> Check {
    let mut g = generate_family(&FamilySpec::Petersen).unwrap();
    let mut c = frank_number_exact(&g, 3, &Budget::default())
        .unwrap()
        .certificate
        .unwrap();
    let mut lines = Vec::new();
    for (step, limit, space) in [(1, 5 * MINUTE, 17), (2, 30 * MINUTE, 20)] {
        let (h, trace) = truncate(&g, 0).map_err(|e| e.to_string())?;
        let (lifted, _) = lift_certificate(&g, &c, &trace).map_err(|e| e.to_string())?;
        ensure(
            lifted.claimed_k == 3 && verify_certificate(&h, &lifted).valid,
            || format!("step {step}: lifted certificate does not verify"),
        )?;
        let started = Instant::now();
        let report = frank_number_exact(&h, 3, &Budget::default()).map_err(|e| e.to_string())?;
        let seconds = started.elapsed().as_secs_f64();
        ensure(report.frank_number.exact() == Some(3), || {
            format!("step {step}: F = {:?}", report.frank_number)
        })?;
        ensure(report.stats.orientations_scanned == 1 << space, || {
            format!(
                "step {step}: {} orientations",
                report.stats.orientations_scanned
            )
        })?;
        ensure(seconds < limit as f64, || {
            format!("step {step}: {seconds:.1} s over {limit} s")
        })?;
        lines.push(format!(
            "n = {}: lifted k = 3 verifies, exact F = 3 over 2^{space} ({seconds:.2} s)",
            h.n()
        ));
        g = h;
        c = lifted;
    }
    Ok(lines.join("; "))
}

fn cut_vertex_corpus() -> Vec<Graph> {
    let mut edges = Vec::new();
    for o in [1, 4, 7] {
        edges.extend([
            (0, o),
            (0, o + 1),
            (0, o + 2),
            (o, o + 1),
            (o, o + 2),
            (o + 1, o + 2),
        ]);
    }
    vec![glued_k4_pair(), build_graph(10, &edges).unwrap()]
}

fn c7_transform_laws() -> Check {
    let graphs: Vec<Graph> = (4..=10)
        .step_by(2)
        .flat_map(|n| enumerate_cubic_3ec(n).unwrap())
        .collect();
    let (mut truncations, mut contractions, mut matchings) = (0, 0, 0);
    for g in &graphs {
        let f = exact(g)?;
        for v in 0..g.n() {
            let (h, _) = truncate(g, v).map_err(|e| e.to_string())?;
            let fh = exact(&h)?;
            ensure(fh == f, || format!("truncating {v}: {f} -> {fh}"))?;
            truncations += 1;
        }
        for t in find_triangles(g) {
            match contract_triangle(g, t) {
                Ok((h, _)) => {
                    let fh = exact(&h)?;
                    ensure(fh == f, || format!("contracting {t:?}: {f} -> {fh}"))?;
                    contractions += 1;
                }
                Err(TransformError::WouldCreateMultiedge(_)) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    let mut corpus = cut_vertex_corpus();
    corpus.extend(graphs);
    corpus.push(generate_family(&FamilySpec::Wheel(7)).unwrap());
    for g in &corpus {
        for v in 0..g.n() {
            let m = good_matching(g, v).map_err(|e| e.to_string())?;
            let (h, _) = local_cubic_modification(g, &m).map_err(|e| e.to_string())?;
            ensure(edge_connectivity(&h) >= 3, || {
                format!("good matching at {v} loses 3-edge-connectivity")
            })?;
            matchings += 1;
        }
    }
    Ok(format!(
        "{truncations} truncations and {contractions} contractions keep F; {matchings} good matchings keep 3EC"
    ))
}

fn c8_oracles() -> Check {
    let corpus = common::small_corpus();
    let mut sc = 0;
    for (name, g) in &corpus {
        let space = OrientationSpace::new(g).unwrap();
        for bits in 0..1u64 << g.m() {
            let expected = common::oracle_deletable(g, bits);
            ensure(space.deletable(bits, true) == expected, || {
                format!("{name}: {bits:b}")
            })?;
            if let Some(set) = expected {
                sc += 1;
                let o = Orientation::from_u64(g, bits);
                let reversed = o
                    .reverse()
                    .deletable_set()
                    .map_err(|e| e.to_string())?
                    .to_u64();
                ensure(reversed == set, || {
                    format!("{name}: reversal changes {bits:b}")
                })?;
                for e in 0..g.m() {
                    ensure(
                        o.is_deletable(e, false).unwrap() == (set >> e & 1 == 1),
                        || format!("{name}: {bits:b} {e}"),
                    )?;
                }
            }
        }
    }

    let graphs: Vec<Graph> = enumerate_cubic_3ec(10)
        .unwrap()
        .into_iter()
        .chain(enumerate_cubic_3ec(12).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut circuits = 0;
    while circuits < 1000 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let o = Orientation::from_u64(g, rng.gen::<u64>() & ((1 << g.m()) - 1));
        if !o.is_strongly_connected() {
            continue;
        }
        let mut position = vec![usize::MAX; g.n()];
        let mut walk = Vec::new();
        let mut x = rng.gen_range(0..g.n());
        while position[x] == usize::MAX {
            position[x] = walk.len();
            walk.push(x);
            let out = o.out_neighbors(x);
            x = out[rng.gen_range(0..out.len())];
        }
        let circuit = walk.split_off(position[x]);
        let len = circuit.len();
        let set = o.deletable_set().unwrap();
        let mut chords = 0;
        for (i, &a) in circuit.iter().enumerate() {
            for (j, &b) in circuit.iter().enumerate().skip(i + 1) {
                if j != i + 1 && !(i == 0 && j == len - 1) {
                    if let Some(e) = g.edge_index(a, b) {
                        ensure(set.contains(e), || format!("chord {a}-{b} not deletable"))?;
                        chords += 1;
                    }
                }
            }
        }
        if chords > 0 {
            circuits += 1;
        }
    }

    let mut frank_checked = 0;
    for (name, g) in common::three_edge_connected(corpus.clone()) {
        let fixed = frank_number_exact(&g, 3, &Budget::default()).map_err(|e| e.to_string())?;
        let free = frank_number_exact(
            &g,
            3,
            &Budget {
                fix_first_edge: false,
                ..Budget::default()
            },
        )
        .map_err(|e| e.to_string())?;
        ensure(fixed.frank_number == free.frank_number, || {
            format!("{name}: fixed bit changes F")
        })?;
        frank_checked += 1;
    }
    Ok(format!(
        "{sc} SC orientations of {} graphs match the SCC oracle and reversal; 1000 circuits with chords; fixed bit agrees on {frank_checked} graphs",
        corpus.len()
    ))
}

fn c9_conjectures() -> Check {
    let small: Vec<Graph> = (4..=10)
        .step_by(2)
        .flat_map(|n| enumerate_cubic_3ec(n).unwrap())
        .collect();
    let report = check_conjectures(&small, &[1, 2, 3]).map_err(|e| e.to_string())?;
    for c in 1..=3 {
        let (holds, fails, _) = report.tally(c);
        ensure(fails == 0 && holds == small.len(), || {
            format!("conjecture {c}: {holds} hold, {fails} fail")
        })?;
    }
    let all: Vec<Graph> = (4..=12)
        .step_by(2)
        .flat_map(|n| enumerate_cubic_3ec(n).unwrap())
        .collect();
    let report = check_conjectures(&all, &[4]).map_err(|e| e.to_string())?;
    let (holds, fails, skipped) = report.tally(4);
    ensure(fails == 0, || {
        format!("conjecture 4 fails on {fails} graphs")
    })?;
    Ok(format!(
        "conjectures 1-3 hold on all {} graphs with n <= 10; conjecture 4 holds on {holds} Hamiltonian graphs with n <= 12 ({skipped} non-Hamiltonian skipped)",
        small.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "Petersen headline", MINUTE, c1_petersen_headline),
        (2, "Petersen structure", 10 * MINUTE, c2_petersen_structure),
        (3, "small-graph sweep", 10 * MINUTE, c3_small_sweep),
        (
            4,
            "constructive certificates",
            15 * MINUTE,
            c4_constructions,
        ),
        (5, "snarks", 4 * 15 * MINUTE + 5 * MINUTE, c5_snarks),
        (
            6,
            "Petersen truncations",
            35 * MINUTE,
            c6_petersen_truncations,
        ),
        (7, "transform laws", 30 * MINUTE, c7_transform_laws),
        (8, "oracle equivalences", 30 * MINUTE, c8_oracles),
        (9, "conjectures", 60 * MINUTE, c9_conjectures),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, check) in criteria {
        let started = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let seconds = started.elapsed().as_secs_f64();
        let result = result.and_then(|detail| {
            if seconds < limit as f64 {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {seconds:.1} s, limit {limit} s"))
            }
        });
        match result {
            Ok(detail) => println!("PASS {id} {name}: {detail} [{seconds:.2} s < {limit} s]"),
            Err(reason) => {
                println!("FAIL {id} {name}: {reason} [{seconds:.2} s]");
                failed.push(id);
            }
        }
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed.len());
    if !failed.is_empty() && std::env::var_os("FRANK_STRICT").is_some_and(|v| v == "1") {
        std::process::exit(1);
    }
}
