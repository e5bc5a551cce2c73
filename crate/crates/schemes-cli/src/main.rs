//! Command-line front end for the worked-example gallery and the law suite.
//!
//! Usage: `schemes <subcommand> [args...] [--fuel N] [--seed N] [--depth N]`
//!
//! Exit codes: 0 success, 1 invalid input data, 2 fuel exhausted, 3 usage.
//! Errors are reported as a single `error: ...` line on stderr.

use std::process::ExitCode;

use schemes::gallery::{find, registry, RunCtx};
use schemes::laws::run_law_suite;

const DEFAULT_FUEL: u64 = 1_000_000;
const DEFAULT_SEED: u64 = 42;
const DEFAULT_DEPTH: u64 = 20;
const LAW_CASES: u64 = 500;

fn fail(msg: &str, code: u8) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn known_subcommands() -> String {
    let mut names: Vec<&str> = registry().iter().map(|e| e.name).collect();
    names.push("laws");
    names.sort_unstable();
    names.join(", ")
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut ctx = RunCtx {
        fuel: DEFAULT_FUEL,
        seed: DEFAULT_SEED,
        depth: DEFAULT_DEPTH,
    };

    // Flags may appear anywhere; everything else stays positional (including
    // negative numbers and the `--` list separator).
    let mut positional: Vec<String> = Vec::new();
    let mut i = 0;
    while i < argv.len() {
        let arg = &argv[i];
        match arg.as_str() {
            "--fuel" | "--seed" | "--depth" => {
                let Some(v) = argv.get(i + 1) else {
                    return fail(&format!("{arg} requires a value"), 3);
                };
                let Ok(n) = v.parse::<u64>() else {
                    return fail(&format!("invalid value '{v}' for {arg}"), 3);
                };
                match arg.as_str() {
                    "--fuel" => ctx.fuel = n,
                    "--seed" => ctx.seed = n,
                    _ => ctx.depth = n,
                }
                i += 2;
            }
            _ => {
                positional.push(arg.clone());
                i += 1;
            }
        }
    }

    let Some((cmd, rest)) = positional.split_first() else {
        return fail(
            &format!("missing subcommand; known: {}", known_subcommands()),
            3,
        );
    };

    match cmd.as_str() {
        "help" => {
            println!("usage: schemes <subcommand> [args...] [--fuel N] [--seed N] [--depth N]");
            println!("subcommands:");
            for entry in registry() {
                println!("  {:<16} [{}] {}", entry.name, entry.scheme, entry.summary);
            }
            println!("  {:<16} run the law suite and print one line per law", "laws");
            ExitCode::SUCCESS
        }
        "laws" => {
            for report in run_law_suite(ctx.seed, LAW_CASES) {
                println!("{}", report.line());
            }
            ExitCode::SUCCESS
        }
        _ => match find(cmd) {
            None => fail(
                &format!("unknown subcommand '{cmd}'; known: {}", known_subcommands()),
                3,
            ),
            Some(entry) => match (entry.run)(rest, &ctx) {
                Ok(out) => {
                    println!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e.to_string(), e.exit_code() as u8),
            },
        },
    }
}
