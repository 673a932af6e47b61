//! Acceptance suite: one test per criterion, each printing a pass line when
//! its assertions hold (run with `--nocapture` to see them).
//!
//! Expected values here are frozen from independent computations: the naive
//! filters and fold checks in this file enumerate raw table spaces directly
//! and never call the search engine they are checking.

use std::process::{Command, Output};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use narylab::audit::{assess, audit, TheoremId};
use narylab::properties::{is_monotone, is_nondecreasing, neutral_elements, Verdict, Witness};
use narylab::reduction::Strategy;
use narylab::table::derive;
use narylab::{
    ackerman_witness, candidate_binary, count, enumerate, extremal_witness, oracle_reduce, reduce,
    ClassSpec, Dedup, ExtremalMode, Limits, OpTable, ReductionResult,
};

fn pass(criterion: usize, what: &str) {
    println!("ACCEPTANCE criterion {criterion}: PASS ({what})");
}

fn ain() -> ClassSpec {
    "a,i,d".parse().unwrap()
}

fn table(m: usize, n: usize, values: &[usize]) -> OpTable {
    OpTable::from_values(m, n, values.to_vec()).unwrap()
}

fn xor3() -> OpTable {
    table(2, 3, &[0, 1, 1, 0, 1, 0, 0, 1])
}

// ───────────────────────── independent oracles ─────────────────────────

/// Every binary table on the m-chain, by raw odometer.
fn all_binary_tables(m: usize) -> Vec<OpTable> {
    let cells = m * m;
    let mut values = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        out.push(table(m, 2, &values));
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < m {
                break;
            }
            values[pos] = 0;
        }
    }
}

fn assoc_binary_direct(g: &OpTable) -> bool {
    let m = g.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let xy = g.apply(&[x, y]);
                let yz = g.apply(&[y, z]);
                if g.apply(&[xy, z]) != g.apply(&[x, yz]) {
                    return false;
                }
            }
        }
    }
    true
}

fn fold_equals(g: &OpTable, f: &OpTable) -> bool {
    let m = f.size();
    let n = f.arity();
    let mut t = vec![0usize; n];
    loop {
        let folded = t[1..].iter().fold(t[0], |acc, &x| g.apply(&[acc, x]));
        if folded != f.apply(&t) {
            return false;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < m {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// The naive reduction filter over every binary table.
fn naive_reductions(f: &OpTable, binaries: &[OpTable]) -> Vec<OpTable> {
    binaries
        .iter()
        .filter(|g| assoc_binary_direct(g) && fold_equals(g, f))
        .cloned()
        .collect()
}

/// Every ternary table on the 2-chain, by raw odometer.
fn all_ternary_tables_on_two() -> Vec<OpTable> {
    let mut out = Vec::new();
    for bits in 0u32..256 {
        let values: Vec<usize> = (0..8).map(|i| ((bits >> i) & 1) as usize).collect();
        out.push(table(2, 3, &values));
    }
    out
}

// ───────────────────────────── criteria ─────────────────────────────

/// Main reduction audit: zero violations, exact instance count, within the
/// stated wall-clock bounds.
#[test]
fn criterion_1_main_theorem_audit() {
    let limits = Limits::default();

    let start = Instant::now();
    let small = audit(TheoremId::T49, 2, 3, &limits).unwrap();
    let small_elapsed = start.elapsed();
    assert!(small.applicable && small.violations.is_empty());
    assert_eq!(
        small.instances, 4,
        "the class has exactly 4 members at m=2, n=3"
    );
    assert!(
        small_elapsed.as_secs_f64() < 1.0,
        "m=2 audit took {small_elapsed:?}, bound is 1 s"
    );

    let start = Instant::now();
    let medium = audit(TheoremId::T49, 3, 3, &limits).unwrap();
    let medium_elapsed = start.elapsed();
    assert!(medium.applicable && medium.violations.is_empty());
    assert!(
        medium_elapsed.as_secs_f64() < 120.0,
        "m=3 audit took {medium_elapsed:?}, bound is 120 s"
    );

    let wide = audit(TheoremId::T49, 2, 4, &limits).unwrap();
    assert!(wide.applicable && wide.violations.is_empty());

    // candidate-reduction and the exact fold round trip, table by table
    for (m, n) in [(2, 3), (3, 3), (2, 4)] {
        for f in enumerate(m, n, &ain(), Dedup::None, &limits).unwrap() {
            let g = candidate_binary(&f).unwrap();
            assert_eq!(derive(&g, n).unwrap(), f);
        }
    }
    pass(
        1,
        "T49 clean at (2,3), (3,3), (2,4); 4 instances at (2,3); within time bounds",
    );
}

/// The supporting lemma audits are all clean on the same grids.
#[test]
fn criterion_2_lemma_suite() {
    let limits = Limits::default();
    let suite = [
        TheoremId::L41,
        TheoremId::R42,
        TheoremId::L42G,
        TheoremId::L46,
        TheoremId::C47,
        TheoremId::L48,
        TheoremId::T45,
    ];
    for id in suite {
        for (m, n) in [(2, 3), (3, 3), (2, 4)] {
            let report = audit(id, m, n, &limits).unwrap();
            if !report.applicable {
                assert_eq!(
                    id,
                    TheoremId::T45,
                    "only the ternary-specific fact may skip a grid"
                );
                continue;
            }
            assert!(
                report.violations.is_empty(),
                "{} at ({m},{n}): {:?}",
                id.code(),
                report.violations
            );
        }
    }
    pass(
        2,
        "L41, R42, L42G, L46, C47, L48, T45 clean (exact integer checks)",
    );
}

/// The class size is independent of the arity, with the derivation and the
/// candidate as mutually inverse maps.
#[test]
fn criterion_3_bijection_counts() {
    let limits = Limits::default();
    for (m, ns) in [(2usize, vec![2usize, 3, 4]), (3, vec![2, 3])] {
        let binary = enumerate(m, 2, &ain(), Dedup::None, &limits).unwrap();
        for n in ns {
            assert_eq!(
                count(m, n, &ain(), &limits).unwrap(),
                binary.len() as u64,
                "count must match at m={m}, n={n}"
            );
            let nary = enumerate(m, n, &ain(), Dedup::None, &limits).unwrap();
            for g in &binary {
                let f = derive(g, n).unwrap();
                assert!(nary.contains(&f));
                assert_eq!(
                    candidate_binary(&f).unwrap(),
                    *g,
                    "candidate inverts derive"
                );
            }
            for f in &nary {
                let g = candidate_binary(f).unwrap();
                assert!(binary.contains(&g));
                assert_eq!(derive(&g, n).unwrap(), *f, "derive inverts the candidate");
            }
        }
    }
    pass(
        3,
        "count(m,n,{a,i,d}) = count(m,2,{a,i,d}) with derive/candidate inverse on both sides",
    );
}

/// Quasitrivial theorems: the symmetric construction with its extremal form,
/// and oracle reducibility for the asymmetric class.
#[test]
fn criterion_4_quasitrivial_theorems() {
    let limits = Limits::default();
    for m in 2..=3 {
        let symmetric = audit(TheoremId::T33QS, m, 3, &limits).unwrap();
        assert!(symmetric.violations.is_empty(), "T33QS at ({m},3)");
        let general = audit(TheoremId::T38QA, m, 3, &limits).unwrap();
        assert!(general.violations.is_empty(), "T38QA at ({m},3)");
    }
    pass(4, "T33QS and T38QA clean for m ≤ 3, n = 3");
}

/// The backtracking oracle agrees with the naive filter everywhere it is
/// checked: all 256 ternary tables at m = 2, and 100 sampled associative
/// ternary tables at m = 3 against all 19683 binary tables.
#[test]
fn criterion_5_oracle_exactness() {
    let start = Instant::now();
    let limits = Limits::default();

    let binaries2 = all_binary_tables(2);
    for f in all_ternary_tables_on_two() {
        let fast = oracle_reduce(&f, &ClassSpec::any(), &limits).unwrap();
        let slow = naive_reductions(&f, &binaries2);
        assert_eq!(fast.tables, slow, "disagreement at {:?}", f.values());
    }

    let assoc: ClassSpec = "a".parse().unwrap();
    let pool = enumerate(3, 3, &assoc, Dedup::None, &limits).unwrap();
    assert!(
        pool.len() >= 100,
        "need at least 100 associative ternary tables, got {}",
        pool.len()
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    let sample: Vec<&OpTable> = pool.choose_multiple(&mut rng, 100).collect();
    let binaries3 = all_binary_tables(3);
    for f in sample {
        let fast = oracle_reduce(f, &ClassSpec::any(), &limits).unwrap();
        let slow = naive_reductions(f, &binaries3);
        assert_eq!(fast.tables, slow, "disagreement at {:?}", f.values());
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "oracle exactness took {elapsed:?}, bound is 60 s"
    );
    pass(
        5,
        "oracle = naive filter on all 256 tables (m=2) and 100 sampled associative tables (m=3)",
    );
}

/// Certificates for the ternary parity table, each checked against direct
/// evaluation or exhaustive search.
#[test]
fn criterion_6_known_instance_certificates() {
    let limits = Limits::default();
    let parity = xor3();

    let w = ackerman_witness(&parity).expect("parity pair exists");
    assert_eq!((w.b1, w.b2), (0, 1));

    // Exhaustive search over all 16 binary tables: both parity generators
    // fold to the ternary table (the complemented one reaches it because the
    // two complements cancel across three arguments).
    let unrestricted = oracle_reduce(&parity, &ClassSpec::any(), &limits).unwrap();
    let naive = naive_reductions(&parity, &all_binary_tables(2));
    assert_eq!(
        unrestricted.tables, naive,
        "oracle must equal the exhaustive filter"
    );
    assert_eq!(
        unrestricted.tables,
        vec![table(2, 2, &[0, 1, 1, 0]), table(2, 2, &[1, 0, 0, 1])]
    );

    // the idempotent-by-implication quasitrivial restriction leaves nothing
    let quasitrivial: ClassSpec = "q".parse().unwrap();
    let restricted = oracle_reduce(&parity, &quasitrivial, &limits).unwrap();
    assert!(restricted.tables.is_empty());

    match is_nondecreasing(&parity) {
        Verdict::Fails(Witness::Nondecreasing {
            tuple,
            coordinate,
            value,
            bumped,
        }) => {
            assert_eq!(tuple, vec![1, 0, 0]);
            assert_eq!(coordinate, 2);
            assert_eq!((value, bumped), (1, 0));
        }
        other => panic!("expected the pinned nondecreasing witness, got {other:?}"),
    }
    assert!(is_monotone(&parity).holds());
    assert_eq!(neutral_elements(&parity), vec![0, 1]);

    // the verified ladder still reduces it, producing the lex-least generator
    match reduce(&parity, &limits).unwrap() {
        ReductionResult::Reduced(r) => {
            assert_eq!(r.binary, table(2, 2, &[0, 1, 1, 0]));
            assert!(r.verified);
            assert_eq!(r.strategy, Strategy::Neutral(0));
        }
        other => panic!("parity reduces, got {other:?}"),
    }
    pass(6, "parity certificates: ackerman (0,1), generators {xor,xnor}, q-restricted ∅, pinned witness, neutral {0,1}");
}

/// Report-only audits match the shipped expected-discrepancy list exactly.
#[test]
fn criterion_7_expected_discrepancy_audit() {
    let limits = Limits::default();
    let parity = xor3();
    for id in [
        TheoremId::C410,
        TheoremId::P35,
        TheoremId::C35ND,
        TheoremId::T37AKK,
    ] {
        let report = audit(id, 2, 3, &limits).unwrap();
        let assessment = assess(&report);
        assert!(
            assessment.unexpected.is_empty(),
            "{}: unexpected {:?}",
            id.code(),
            assessment.unexpected
        );
        assert!(
            assessment.missing.is_empty(),
            "{}: missing expected entries {:?}",
            id.code(),
            assessment.missing
        );
        assert_eq!(assessment.expected.len(), 1, "{}", id.code());
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].table, parity);
    }
    pass(
        7,
        "C410, P35, C35ND, T37AKK at (2,3) report exactly the shipped parity entries",
    );
}

/// Extremality: the projection has no witness in either mode, the minimum
/// does, and the single-instance audit is clean.
#[test]
fn criterion_8_extremality() {
    let limits = Limits::default();
    let projection = OpTable::from_fn(3, 3, |t| t[0]).unwrap();
    assert_eq!(extremal_witness(&projection, ExtremalMode::Either), None);
    assert_eq!(
        extremal_witness(&projection, ExtremalMode::GlobalMinMax),
        None
    );

    let min3 = OpTable::from_fn(3, 3, |t| *t.iter().min().unwrap()).unwrap();
    let min2 = OpTable::from_fn(3, 2, |t| t[0].min(t[1])).unwrap();
    assert_eq!(
        extremal_witness(&min3, ExtremalMode::GlobalMinMax),
        Some(min2)
    );

    let report = audit(TheoremId::D51Proj, 3, 3, &limits).unwrap();
    assert!(report.applicable && report.violations.is_empty());
    pass(
        8,
        "projection fails both modes at m=3; min passes global-minmax with its binary form",
    );
}

/// Byte-identical reports for every subcommand, whatever the worker count.
#[test]
fn criterion_9_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, contents: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path.to_str().unwrap().to_string()
    };
    let xor3 = write("xor3.json", r#"{"m":2,"n":3,"table":[0,1,1,0,1,0,0,1]}"#);
    let min2 = write("min2.json", r#"{"m":2,"n":2,"table":[0,0,0,1]}"#);
    let min3 = write("min3.txt", "2 3\n0 0 0 0 0 0 0 1\n");
    let min3_on3 = write(
        "min3_on3.txt",
        "3 3\n0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 0 0 0 0 1 1 0 1 2\n",
    );

    let cases: Vec<Vec<String>> = vec![
        vec!["check".into(), xor3.clone()],
        vec![
            "check".into(),
            min3.clone(),
            "--props".into(),
            "a,i,d".into(),
        ],
        vec!["reduce".into(), xor3.clone()],
        vec![
            "reduce".into(),
            xor3.clone(),
            "--strategy".into(),
            "adjoin".into(),
        ],
        vec!["derive".into(), min2.clone(), "--arity".into(), "3".into()],
        vec!["arity-reduce".into(), min3.clone()],
        vec![
            "extremal".into(),
            min3_on3.clone(),
            "--mode".into(),
            "global".into(),
        ],
        vec![
            "enumerate".into(),
            "--m".into(),
            "3".into(),
            "--n".into(),
            "3".into(),
            "--class".into(),
            "a,i,d".into(),
        ],
        vec![
            "enumerate".into(),
            "--m".into(),
            "3".into(),
            "--n".into(),
            "3".into(),
            "--class".into(),
            "a".into(),
            "--count-only".into(),
        ],
        vec!["oracle".into(), xor3.clone()],
        vec![
            "oracle".into(),
            xor3.clone(),
            "--g-class".into(),
            "q".into(),
        ],
        vec![
            "audit".into(),
            "--all".into(),
            "--m".into(),
            "2".into(),
            "--n".into(),
            "3".into(),
        ],
        vec![
            "audit".into(),
            "--theorem".into(),
            "T49".into(),
            "--m".into(),
            "3".into(),
            "--n".into(),
            "3".into(),
        ],
    ];

    let run = |args: &[String], threads: &str, format: &str| -> Output {
        Command::new(env!("CARGO_BIN_EXE_narylab"))
            .args(args)
            .args(["--threads", threads, "--format", format])
            .env_remove("NARYLAB_THREADS")
            .output()
            .expect("binary runs")
    };
    for case in &cases {
        for format in ["json", "text"] {
            let one = run(case, "1", format);
            let again = run(case, "1", format);
            let eight = run(case, "8", format);
            assert_eq!(
                one.stdout, again.stdout,
                "repeated run differs for {case:?}"
            );
            assert_eq!(
                one.stdout, eight.stdout,
                "stdout differs for {case:?} with format {format}"
            );
            assert_eq!(one.status.code(), eight.status.code(), "{case:?}");
        }
    }
    pass(
        9,
        "all subcommands byte-identical across repeats and between --threads 1 and 8",
    );
}
