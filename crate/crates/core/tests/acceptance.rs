//! Acceptance criteria, one line each on stderr.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mixgraph::convexity::{convex_hull, is_convex};
use mixgraph::decision::{complete_chi_s, decide_chi_s_two, is_simple_clique};
use mixgraph::families::{
    cayley_2ec_clique, cayley_oriented_clique, directed_cycle, enumerate_2ec_complete, enumerate_tournaments, g_n, h_n,
    random_mixed_with, transitive_tournament,
};
use mixgraph::format::{canonical, parse, serialize};
use mixgraph::search::{
    brute_chi_s, brute_simple_two_colouring, compose, enumerate_min_simple_colourings, enumerate_simple_colourings_with,
    find_surjective_simple_homomorphism, is_simple_colouring, is_simple_homomorphism, quotient_by, SearchConfig,
};
use mixgraph::twotree::{
    colour_2ec_2tree, colour_oriented_2tree, derive_2ec_table, derive_oriented_table, oriented_target, random_2tree,
    red_cycle_target, table_is_sound, TwoTreeKind,
};
use mixgraph::{Execution, MixedGraph, Partition};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn random_graph(rng: &mut ChaCha8Rng, m: u32, n: u32, max_order: usize) -> MixedGraph {
    let order = rng.random_range(1..=max_order);
    let p = rng.random_range(0.2..0.9);
    random_mixed_with(m, n, order, p, rng).unwrap()
}

fn complete_corpus() -> Vec<MixedGraph> {
    enumerate_tournaments(5).unwrap().chain(enumerate_2ec_complete(4).unwrap()).collect()
}

fn triangles() -> Outcome {
    let t3 = transitive_tournament(3).unwrap();
    let c3 = directed_cycle(3).unwrap();
    let decided = decide_chi_s_two(&t3).answer;
    let (bt, bc) = (brute_chi_s(&t3).unwrap().k, brute_chi_s(&c3).unwrap().k);
    let cycle_two = decide_chi_s_two(&c3).answer;
    outcome(
        decided && bt == 2 && bc == 3 && !cycle_two,
        format!("T3: decide={decided} brute={bt}; C3: decide={cycle_two} brute={bc}"),
    )
}

fn tournaments_on_four() -> Outcome {
    let all: Vec<MixedGraph> = enumerate_tournaments(4).unwrap().collect();
    let max = all.iter().map(|g| brute_chi_s(g).unwrap().k).max().unwrap();
    let cliques = all.iter().filter(|g| is_simple_clique(g)).count();
    outcome(all.len() == 64 && max <= 3 && cliques == 0, format!("{} tournaments, max chi_s {max}, {cliques} simple cliques", all.len()))
}

fn coloured_triangles() -> Outcome {
    let all: Vec<MixedGraph> = enumerate_2ec_complete(3).unwrap().collect();
    let max = all.iter().map(|g| brute_chi_s(g).unwrap().k).max().unwrap();
    outcome(all.len() == 8 && max <= 2, format!("{} colourings, max chi_s {max}", all.len()))
}

fn clique_families() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |name: String, g: MixedGraph| {
        checked += 1;
        if !is_simple_clique(&g) {
            failures.push(name);
        }
    };
    for n in [5, 7, 9, 11] {
        check(format!("cayley_oriented({n})"), cayley_oriented_clique(n).unwrap());
    }
    for n in [5, 6, 7, 8] {
        check(format!("cayley_2ec({n})"), cayley_2ec_clique(n).unwrap());
    }
    for n in [3, 4, 5, 6] {
        check(format!("h_n({n})"), h_n(n).unwrap());
        check(format!("g_n({n})"), g_n(n).unwrap());
    }
    let c5 = brute_chi_s(&cayley_oriented_clique(5).unwrap()).unwrap().k;
    let h3 = brute_chi_s(&h_n(3).unwrap()).unwrap().k;
    let detail = format!(
        "{}/{checked} simple cliques{}; brute chi_s: cayley_oriented(5)={c5}, h_n(3)={h3}",
        checked - failures.len(),
        if failures.is_empty() { String::new() } else { format!(", not simple cliques: {}", failures.join(" ")) }
    );
    outcome(failures.is_empty() && c5 == 5 && h3 == 6, detail)
}

fn oracle_equivalence() -> Outcome {
    let corpus = complete_corpus();
    let complete_mismatch = corpus
        .iter()
        .filter(|g| complete_chi_s(g).unwrap().k != brute_chi_s(g).unwrap().k)
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut two_mismatch = 0;
    for _ in 0..500 {
        let g = random_graph(&mut rng, 1, 1, 8);
        let oracle = brute_simple_two_colouring(&g).unwrap().is_some();
        if decide_chi_s_two(&g).answer != oracle {
            two_mismatch += 1;
        }
    }
    outcome(
        corpus.len() == 1088 && complete_mismatch == 0 && two_mismatch == 0,
        format!("complete vs brute: {complete_mismatch}/{} mismatches; two-colour test: {two_mismatch}/500 mismatches", corpus.len()),
    )
}

fn mask(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn members(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn hull_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut failures = Vec::new();
    let (mut hulls, mut colourings) = (0usize, 0usize);
    let config = SearchConfig { budget: 10, exec: Execution::Parallel };
    for instance in 0..300 {
        let g = random_graph(&mut rng, 1, 1, 10);
        let n = g.order();
        let convex: Vec<u32> = (1u32..1 << n).filter(|&m| is_convex(&g, &members(n, m))).collect();
        for x in (1u32..1 << n).filter(|m| m.count_ones() <= 3) {
            hulls += 1;
            let set = members(n, x);
            let h = mask(convex_hull(&g, &set).unwrap().final_set());
            if !convex.contains(&h) {
                failures.push(format!("#{instance}: hull of {set:?} not convex"));
            }
            if convex.iter().any(|&c| c & x == x && c & h != h) {
                failures.push(format!("#{instance}: hull of {set:?} not the least convex superset"));
            }
            let larger = x | 1 << rng.random_range(0..n);
            let bigger = mask(convex_hull(&g, &members(n, larger)).unwrap().final_set());
            if bigger & h != h {
                failures.push(format!("#{instance}: hull of {set:?} not monotone"));
            }
        }
        for p in enumerate_simple_colourings_with(&g, &config).unwrap() {
            colourings += 1;
            if p.len() > 1 && !p.blocks().iter().all(|b| is_convex(&g, b)) {
                failures.push(format!("#{instance}: colour class of {p} not convex"));
            }
        }
    }
    let detail = format!("300 instances, {hulls} hulls, {colourings} simple colourings, {} failures", failures.len());
    outcome(failures.is_empty(), if failures.is_empty() { detail } else { format!("{detail}: {}", failures[0]) })
}

fn uniqueness() -> Outcome {
    let mut above_two = 0;
    let mut non_unique = 0;
    for g in complete_corpus() {
        if brute_chi_s(&g).unwrap().k > 2 {
            above_two += 1;
            if enumerate_min_simple_colourings(&g).unwrap().len() != 1 {
                non_unique += 1;
            }
        }
    }
    outcome(non_unique == 0, format!("{above_two} complete instances with chi_s > 2, {non_unique} with several minimum colourings"))
}

fn composition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let config = SearchConfig::default();
    let (mut triples, mut attempts, mut invalid) = (0, 0, 0);
    while triples < 100 && attempts < 10_000 {
        attempts += 1;
        let order = rng.random_range(5..=7);
        let g = random_mixed_with(1, 1, order, 0.6, &mut rng).unwrap();
        let chi = brute_chi_s(&g).unwrap().k;
        let finer: Vec<Partition> =
            enumerate_simple_colourings_with(&g, &config).unwrap().into_iter().filter(|p| p.len() > chi).collect();
        if finer.is_empty() {
            continue;
        }
        let (h, _) = quotient_by(&g, &finer[rng.random_range(0..finer.len())]).unwrap();
        let coarse = brute_chi_s(&h).unwrap();
        if coarse.k == h.order() {
            continue;
        }
        let (j, _) = quotient_by(&h, &coarse.witness).unwrap();
        let (Some(phi), Some(beta)) =
            (find_surjective_simple_homomorphism(&g, &h), find_surjective_simple_homomorphism(&h, &j))
        else {
            continue;
        };
        triples += 1;
        let c = compose(&phi, &beta).unwrap();
        if !(is_simple_homomorphism(&g, &j, &c) && c.is_surjective()) {
            invalid += 1;
        }
    }
    outcome(triples == 100 && invalid == 0, format!("{triples} triples from {attempts} attempts, {invalid} invalid composites"))
}

fn two_trees() -> Outcome {
    let mut problems = Vec::new();
    let mut small = 0;
    for i in 0..200u64 {
        let order = 3 + (i as usize * 197) / 199;
        for (kind, bound) in [(TwoTreeKind::Oriented, 3), (TwoTreeKind::TwoEdgeColoured, 5)] {
            let g = random_2tree(order, kind, 0x5eed_0009 + i).unwrap();
            let (map, target) = match kind {
                TwoTreeKind::Oriented => (colour_oriented_2tree(&g).unwrap(), oriented_target()),
                TwoTreeKind::TwoEdgeColoured => (colour_2ec_2tree(&g).unwrap(), red_cycle_target()),
            };
            let valid = is_simple_homomorphism(&g, &target, &map)
                && is_simple_colouring(&g, &Partition::from_map(&map)).unwrap()
                && map.image_size() <= bound;
            if !valid {
                problems.push(format!("{kind:?} order {order} seed {i}: invalid colouring"));
            }
            if order <= 10 {
                small += 1;
                let k = brute_chi_s(&g).unwrap().k;
                if k > bound {
                    problems.push(format!("{kind:?} order {order}: brute chi_s {k}"));
                }
            }
        }
    }
    let tables = table_is_sound(&derive_oriented_table()) && table_is_sound(&derive_2ec_table());
    if !tables {
        problems.push("extension table failed verification".into());
    }
    outcome(
        problems.is_empty(),
        format!("400 2-trees of order 3..200, {small} brute-checked, tables sound: {tables}, {} problems", problems.len()),
    )
}

/// The canonical text with lines shuffled and comments sprinkled in.
fn scrambled(text: &str, rng: &mut ChaCha8Rng) -> String {
    let lines: Vec<&str> = text.lines().collect();
    let (header, body) = lines.split_at(4);
    let mut body: Vec<String> = body.iter().map(|l| l.to_string()).collect();
    for i in (1..body.len()).rev() {
        body.swap(i, rng.random_range(0..=i));
    }
    let mut out = String::from("# scrambled\n");
    for l in header {
        out.push_str(l);
        out.push('\n');
    }
    for l in body {
        out.push_str(&l.replace(' ', "  "));
        out.push_str("   # note\n");
    }
    out
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut bad = 0;
    for i in 0..100 {
        let (m, n) = [(1, 0), (0, 2), (1, 1), (2, 3)][i % 4];
        let mut g = random_graph(&mut rng, m, n, 12);
        if i % 3 == 0 {
            let labels = g.vertices().map(|v| (v % 2 == 0).then(|| format!("v{v}"))).collect();
            g = g.with_labels(labels).unwrap();
        }
        let text = serialize(&g);
        let ok = canonical(&text).as_deref() == Ok(text.as_str())
            && parse(&text).as_ref() == Ok(&g)
            && canonical(&scrambled(&text, &mut rng)).as_deref() == Ok(text.as_str());
        if !ok {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("100 graphs, {bad} round-trip mismatches"))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "chi_s of T3 is 2, of the directed 3-cycle 3", limit: Some(Duration::from_millis(1)), check: triangles },
    Criterion { id: 2, name: "tournaments on 4 vertices have chi_s <= 3", limit: Some(Duration::from_secs(1)), check: tournaments_on_four },
    Criterion { id: 3, name: "2-edge-coloured triangles have chi_s <= 2", limit: Some(Duration::from_secs(1)), check: coloured_triangles },
    Criterion { id: 4, name: "generated families are simple cliques", limit: Some(Duration::from_secs(30)), check: clique_families },
    Criterion { id: 5, name: "polynomial procedures match brute force", limit: Some(Duration::from_secs(60)), check: oracle_equivalence },
    Criterion { id: 6, name: "convex hull properties", limit: None, check: hull_properties },
    Criterion { id: 7, name: "unique minimum colouring when chi_s > 2", limit: None, check: uniqueness },
    Criterion { id: 8, name: "composition of surjective simple homomorphisms", limit: None, check: composition },
    Criterion { id: 9, name: "2-tree colourings at scale", limit: Some(Duration::from_secs(30)), check: two_trees },
    Criterion { id: 10, name: "format round trip", limit: None, check: round_trip },
];

#[test]
fn acceptance() {
    // Start the worker pool outside the timed sections.
    Execution::Parallel.map_range(64, |i| i);
    let mut failed = Vec::new();
    let mut stderr = std::io::stderr().lock();
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|limit| elapsed < limit);
        let pass = result.pass && in_time;
        let timing = match c.limit {
            Some(limit) => format!("{elapsed:.2?} < {limit:?}"),
            None => format!("{elapsed:.2?}"),
        };
        writeln!(
            stderr,
            "[{}] {:02} {}: {} ({timing})",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            result.detail
        )
        .unwrap();
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
