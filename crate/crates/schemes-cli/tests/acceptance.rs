//! Acceptance suite: one test per shipped-behavior criterion, each printing
//! a single pass/fail line and enforcing its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use schemes::effects::{mcata, mhylo, EffectSig, LToR, LogEff, Logged};
use schemes::extra::{cata_via_para, para, para_via_cata, zygo};
use schemes::fix::{construct, destructure, Fuel, FuelExhausted, FunctorSig, Mu};
use schemes::functors::{conv_list, ListF, ListSig};
use schemes::gallery;
use schemes::laws::{hylo_uniq_sweep, run_law_suite, CaseGenerator};
use schemes::oracles;

/// Run one criterion body, print its pass/fail line, and enforce the budget.
fn criterion(n: usize, label: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("criterion {n} ({label}): PASS ({} ms)", elapsed.as_millis());
        }
        Ok(()) => {
            println!(
                "criterion {n} ({label}): FAIL over budget ({} ms > {} ms)",
                elapsed.as_millis(),
                budget.as_millis()
            );
            panic!("criterion {n} exceeded its time budget");
        }
        Err(cause) => {
            println!("criterion {n} ({label}): FAIL");
            std::panic::resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_1_worked_example_values() {
    criterion(1, "worked-example values", Duration::from_secs(1), || {
        let p1 = gallery::demo_program("p1").unwrap();
        assert_eq!(
            schemes::effects::interp(p1, gallery::demo_store()),
            Ok(100)
        );
        assert_eq!(gallery::lis(&[1, 6, -5, 4, 2, 3, 9]), 4);
        assert_eq!(gallery::qsort(&[], Fuel(100)).unwrap(), Vec::<i64>::new());
        assert_eq!(gallery::factorial(0), 1);
        assert_eq!(gallery::fib(0), 0);
        assert_eq!(gallery::fib(1), 1);
    });
}

#[test]
fn criterion_2_law_suite() {
    criterion(2, "randomized law suite", Duration::from_secs(30), || {
        let reports = run_law_suite(42, 500);
        assert!(reports.len() >= 7);
        for report in &reports {
            assert!(report.passed(), "{}", report.line());
        }
    });
}

#[test]
fn criterion_3_uniqueness_sweep() {
    criterion(3, "exhaustive uniqueness sweep", Duration::from_secs(60), || {
        let report = hylo_uniq_sweep();
        assert!(report.passed(), "{}", report.line());
        assert_eq!(report.cases, 14_348_907);
    });
}

#[test]
fn criterion_4_oracle_agreement() {
    criterion(4, "oracle agreement", Duration::from_secs(120), || {
        // LIS against the exponential brute force, lengths up to 12.
        let mut gen = CaseGenerator::new(4);
        for len in 0..=12usize {
            for _ in 0..5 {
                let xs: Vec<i64> = (0..len).map(|_| gen.small_i64() % 20).collect();
                assert_eq!(gallery::lis(&xs), oracles::lis_brute(&xs), "lis of {xs:?}");
            }
        }

        // LCS against the quadratic table, exhaustively over {a,b} strings
        // of length at most 6.
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        for len in 1..=6usize {
            for code in 0..(1u32 << len) {
                words.push(
                    (0..len)
                        .map(|b| if (code >> b) & 1 == 0 { b'a' } else { b'b' })
                        .collect(),
                );
            }
        }
        for a in &words {
            for b in &words {
                assert_eq!(gallery::lcs(a, b), oracles::lcs_dp(a, b));
            }
        }

        // Numeric encodings: 200 random expressions of depth at most 4 must
        // decode back to themselves.
        assert_eq!(gallery::godel_roundtrip(42, 200, 4), Ok(200));

        // Run-length decoding against direct expansion.
        for _ in 0..200 {
            let pairs: Vec<(u64, char)> = (0..gen.seed_u64(6))
                .map(|_| (gen.seed_u64(5), if gen.seed_u64(1) == 0 { 'x' } else { 'y' }))
                .collect();
            assert_eq!(gallery::rld(&pairs), oracles::rld_expand(&pairs));
        }

        // Sorting against the standard library.
        for _ in 0..200 {
            let xs = gen.list(30);
            assert_eq!(gallery::qsort(&xs, Fuel(10_000)).unwrap(), oracles::sort_oracle(&xs));
        }

        // Ackermann over the full small grid, including the fixed values.
        for m in 0..=3u64 {
            for n in 0..=3u64 {
                assert_eq!(gallery::ack(m, n), oracles::ack_oracle(m, n));
            }
        }
        assert_eq!(gallery::ack(2, 3), 9);
        assert_eq!(gallery::ack(3, 3), 61);
    });
}

#[test]
fn criterion_5_zeno_exhausts_fuel() {
    criterion(5, "divergent unfold exhausts fuel", Duration::from_secs(5), || {
        for seed in [0u64, 1, 2, 7, 99, 123_456, u64::MAX] {
            assert_eq!(
                gallery::zeno(seed, Fuel(100_000)),
                Err(FuelExhausted { steps: 100_000 })
            );
        }
        assert_eq!(
            gallery::zeno(1, Fuel(1_000_000)),
            Err(FuelExhausted { steps: 1_000_000 })
        );
    });
}

#[test]
fn criterion_6_lis_complexity() {
    criterion(6, "memo-table LIS is quadratic", Duration::from_secs(30), || {
        // Probe counts at n = 8, 16, 32 must fit c·n² within a factor of 2
        // of each other, and stay below 2n² outright.
        let mut ratios = Vec::new();
        for n in [8usize, 16, 32] {
            let xs: Vec<i64> = (0..n as i64).map(|i| (i * 37) % 19).collect();
            let (_, probes) = gallery::lis_counted(&xs);
            assert!(
                probes <= 2 * (n as u64) * (n as u64),
                "{probes} probes at n = {n}"
            );
            ratios.push(probes as f64 / (n * n) as f64);
        }
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        assert!(
            max / min <= 2.0,
            "probe counts are not c·n² within factor 2: ratios {ratios:?}"
        );

        // The naive recursion blows past 10^4 calls already at n = 20.
        let xs: Vec<i64> = (0..20).collect();
        let (_, calls) = gallery::lis_naive_counted(&xs, 20_000);
        assert!(calls > 10_000, "only {calls} naive calls");
    });
}

#[test]
fn criterion_7_sequencing_properties() {
    criterion(7, "sequencing purity and its limits", Duration::from_secs(1), || {
        // Purity holds for every shipped sequencing.
        let purity = schemes::laws::seq_purity_law(7, 500);
        assert!(purity.passed(), "{}", purity.line());
        // Join compatibility fails on branching shapes with exactly the
        // predicted interleaving (checked inside the report).
        let cex = schemes::laws::join_compat_counterexample();
        assert!(cex.passed(), "{}", cex.line());
    });
}

#[test]
fn criterion_8_interdefinability() {
    criterion(8, "scheme interdefinability", Duration::from_secs(30), || {
        let cases = 500u64;

        // cata through para and back.
        let mut gen = CaseGenerator::new(8);
        let length = |layer: ListF<i64, u64>| match layer {
            ListF::Nil => 0u64,
            ListF::Cons(_, n) => n + 1,
        };
        for _ in 0..cases {
            let m = gen.mu_list(25);
            assert_eq!(
                cata_via_para(length, m.clone()),
                schemes::basic::cata(length, m)
            );
        }
        let tail_sum = |layer: ListF<i64, (Mu<ListSig<i64>>, i64)>| match layer {
            ListF::Nil => 0i64,
            ListF::Cons(a, (rest, acc)) => {
                a + acc + schemes::functors::conv_list_inv(&rest).len() as i64
            }
        };
        for _ in 0..cases {
            let m = gen.mu_list(25);
            assert_eq!(para_via_cata(tail_sum, m.clone()), para(tail_sum, m));
        }

        // para through zygo with the rebuilding auxiliary fold.
        for _ in 0..cases {
            let m = gen.mu_list(25);
            let via_para = para(tail_sum, m.clone());
            let via_zygo = zygo(
                move |layer: ListF<i64, (i64, Mu<ListSig<i64>>)>| {
                    tail_sum(ListSig::<i64>::map(layer, |(a, b)| (b, a)))
                },
                |layer: ListF<i64, Mu<ListSig<i64>>>| construct(layer),
                m,
            );
            assert_eq!(via_para, via_zygo);
        }

        // cata through hylo with structural tear-down.
        for _ in 0..cases {
            let m = gen.mu_list(25);
            assert_eq!(
                schemes::basic::cata_via_hylo(length, m.clone()),
                schemes::basic::cata(length, m)
            );
        }

        // Accumulation as the uncurried fold: the left fold it induces
        // agrees with direct iteration.
        for _ in 0..cases {
            let xs = gen.list(25);
            let e = gen.small_i64();
            assert_eq!(
                schemes::extra::foldl_prime(|b, a| b - a, conv_list(&xs), e),
                xs.iter().fold(e, |b, a| b - a)
            );
        }

        // The effectful fold as the effectful refold over structural
        // tear-down, comparing both the value and the emitted log.
        let logging_alg = |layer: ListF<i64, i64>| -> Logged<i64> {
            match layer {
                ListF::Nil => Logged {
                    log: vec!["nil".to_string()],
                    value: 0,
                },
                ListF::Cons(a, acc) => Logged {
                    log: vec![format!("cons {a}")],
                    value: a + acc,
                },
            }
        };
        for _ in 0..cases {
            let m = gen.mu_list(15);
            let direct: Logged<i64> =
                mcata::<ListSig<i64>, LogEff, LToR, i64>(logging_alg, m.clone());
            let routed: Logged<Result<i64, FuelExhausted>> =
                mhylo::<ListSig<i64>, LogEff, LToR, i64, Mu<ListSig<i64>>>(
                    logging_alg,
                    |m| LogEff::unit(destructure(m)),
                    m,
                    Fuel(1_000),
                );
            assert_eq!(routed.value, Ok(direct.value));
            assert_eq!(routed.log, direct.log);
        }
    });
}

#[test]
fn criterion_9_cli_contract() {
    criterion(9, "command-line contract", Duration::from_secs(10), || {
        let bin = env!("CARGO_BIN_EXE_schemes");

        let out = Command::new(bin).args(["qsort", "3", "1", "2"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8_lossy(&out.stdout), "1 2 3\n");
        assert_eq!(String::from_utf8_lossy(&out.stderr), "");

        let out = Command::new(bin)
            .args(["zeno", "1", "--fuel", "1000"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2));
        assert_eq!(String::from_utf8_lossy(&out.stdout), "");
        assert_eq!(
            String::from_utf8_lossy(&out.stderr),
            "error: fuel exhausted after 1000 steps\n"
        );

        let out = Command::new(bin)
            .args(["lis", "1", "6", "-5", "4", "2", "3", "9"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8_lossy(&out.stdout), "4\n");
        assert_eq!(String::from_utf8_lossy(&out.stderr), "");
    });
}
