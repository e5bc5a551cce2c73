//! The worked-example gallery: one entry per algorithm, each implemented
//! with the scheme it showcases, exposed both as plain functions (for tests
//! and cross-checking against `oracles`) and as a name-keyed registry of
//! runnable entries for the command-line front end.

use std::cell::Cell;
use std::rc::Rc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basic::{ana, cata, hylo};
use crate::course::{dyna, extract, futu, histo, index, offset, Cofree, Free};
use crate::effects::{interp, splitmix64, Prog, Store};
use crate::extra::{accu, apo, para, zygo, AccuFn, ApoStep};
use crate::fix::{construct, nu_to_mu, observe, Fuel, FuelExhausted, Mu, Nu};
use crate::functors::{
    conv_colist, conv_nat, take_colist, ListF, ListSig, NatF, NatSig, ProgF, TreeF, TreeSig,
};
use crate::godel::{decode_expr, encode_expr_checked, Expr, Term, DEFAULT_MAX_BITS};

/// Shared run parameters for gallery entries.
#[derive(Clone, Copy, Debug)]
pub struct RunCtx {
    pub fuel: u64,
    pub seed: u64,
    pub depth: u64,
}

/// Failure modes of a gallery run, each mapped to a process exit code by the
/// command-line front end.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GalleryError {
    /// Invalid input data (exit code 1).
    #[error("{0}")]
    Domain(String),
    /// The fuel budget ran out (exit code 2).
    #[error("{0}")]
    Fuel(FuelExhausted),
    /// Malformed arguments (exit code 3).
    #[error("{0}")]
    Usage(String),
}

impl From<FuelExhausted> for GalleryError {
    fn from(e: FuelExhausted) -> Self {
        GalleryError::Fuel(e)
    }
}

impl GalleryError {
    pub fn exit_code(&self) -> i32 {
        match self {
            GalleryError::Domain(_) => 1,
            GalleryError::Fuel(_) => 2,
            GalleryError::Usage(_) => 3,
        }
    }
}

/// One runnable worked example.
pub struct GalleryEntry {
    pub name: &'static str,
    /// Which scheme the entry showcases.
    pub scheme: &'static str,
    pub summary: &'static str,
    pub run: fn(&[String], &RunCtx) -> Result<String, GalleryError>,
}

// ---------------------------------------------------------------------------
// Algorithms.
// ---------------------------------------------------------------------------

/// Quicksort as a refold: unfold the input into a pivot tree, fold the tree
/// back into a sorted list — without materializing the tree.
pub fn qsort(xs: &[i64], fuel: Fuel) -> Result<Vec<i64>, FuelExhausted> {
    hylo::<TreeSig<i64>, Vec<i64>, Vec<i64>>(
        |layer: TreeF<i64, Vec<i64>>| match layer {
            TreeF::Empty => Vec::new(),
            TreeF::Node(mut l, p, r) => {
                l.push(p);
                l.extend(r);
                l
            }
        },
        |xs: Vec<i64>| match xs.split_first() {
            None => TreeF::Empty,
            Some((&p, rest)) => {
                let less: Vec<i64> = rest.iter().copied().filter(|&x| x < p).collect();
                let geq: Vec<i64> = rest.iter().copied().filter(|&x| x >= p).collect();
                TreeF::Node(less, p, geq)
            }
        },
        xs.to_vec(),
        fuel,
    )
}

type LisTable = Cofree<ListSig<i64>, (usize, usize)>;

/// Best increasing-subsequence length starting at any element of the table's
/// suffix that is strictly greater than `x`. Each call counts one probe.
fn find_next(x: i64, table: &LisTable, probes: &Cell<u64>) -> usize {
    probes.set(probes.get() + 1);
    match table.tail() {
        ListF::Nil => extract(table).0,
        ListF::Cons(y, t2) => {
            if x < *y {
                extract(table).0.max(find_next(x, t2, probes))
            } else {
                find_next(x, t2, probes)
            }
        }
    }
}

/// Longest strictly increasing subsequence via a histomorphism, returning
/// the answer together with the number of table probes performed.
pub fn lis_counted(xs: &[i64]) -> (usize, u64) {
    let probes = Rc::new(Cell::new(0u64));
    let probes_alg = Rc::clone(&probes);
    let alg = move |layer: ListF<i64, LisTable>| -> (usize, usize) {
        match layer {
            ListF::Nil => (0, 0),
            ListF::Cons(x, table) => {
                let a = 1 + find_next(x, &table, &probes_alg);
                let b = a.max(extract(&table).1);
                (a, b)
            }
        }
    };
    let (_, best) = histo(alg, crate::functors::conv_list(xs));
    (best, probes.get())
}

/// Longest strictly increasing subsequence length.
pub fn lis(xs: &[i64]) -> usize {
    lis_counted(xs).0
}

/// The naive exponential recursion for the same problem, with a call counter
/// and an early cutoff: once the counter passes `cutoff` the result is
/// abandoned (`None`) but the counter keeps its value.
pub fn lis_naive_counted(xs: &[i64], cutoff: u64) -> (Option<usize>, u64) {
    fn go(prev: Option<i64>, xs: &[i64], calls: &mut u64, cutoff: u64) -> Option<usize> {
        *calls += 1;
        if *calls > cutoff {
            return None;
        }
        match xs.split_first() {
            None => Some(0),
            Some((&x, rest)) => {
                let skip = go(prev, rest, calls, cutoff)?;
                if prev.map_or(true, |p| p < x) {
                    let take = 1 + go(Some(x), rest, calls, cutoff)?;
                    Some(skip.max(take))
                } else {
                    Some(skip)
                }
            }
        }
    }
    let mut calls = 0;
    let r = go(None, xs, &mut calls, cutoff);
    (r, calls)
}

/// Longest common subsequence via a dynamorphism: the coalgebra enumerates
/// every pair of suffixes in a fixed order, and the algebra reads earlier
/// subproblems back out of the memo-table with [`offset`].
pub fn lcs(a: &[u8], b: &[u8]) -> usize {
    type Pair = (Vec<u8>, Vec<u8>);
    let b_full = b.to_vec();
    let len2 = b.len();
    let coalg = move |(x, y): Pair| -> ListF<Pair, Pair> {
        if x.is_empty() && y.is_empty() {
            ListF::Nil
        } else if y.is_empty() {
            ListF::Cons((x.clone(), y), (x[1..].to_vec(), b_full.clone()))
        } else {
            ListF::Cons((x.clone(), y.clone()), (x, y[1..].to_vec()))
        }
    };
    let alg = move |layer: ListF<Pair, Cofree<ListSig<Pair>, usize>>| -> usize {
        match layer {
            ListF::Nil => 0,
            ListF::Cons((x, y), table) => {
                if x.is_empty() || y.is_empty() {
                    0
                } else if x[0] == y[0] {
                    index(&table, offset(1, 1, len2)).expect("subproblem is in the table") + 1
                } else {
                    let drop_x = index(&table, offset(1, 0, len2))
                        .expect("subproblem is in the table");
                    let drop_y = index(&table, offset(0, 1, len2))
                        .expect("subproblem is in the table");
                    drop_x.max(drop_y)
                }
            }
        }
    };
    let fuel = Fuel(((a.len() as u64) + 1) * ((b.len() as u64) + 1) + 1);
    dyna::<ListSig<Pair>, usize, Pair>(alg, coalg, (a.to_vec(), b.to_vec()), fuel)
        .expect("the suffix-pair enumeration is finite")
}

/// Run-length decoding via a futumorphism: one coalgebra step per run, which
/// batches the whole run's characters at once. Zero-count runs are skipped.
pub fn rld(pairs: &[(u64, char)]) -> String {
    type Seed = Vec<(u64, char)>;
    let coalg = |xs: Seed| -> ListF<char, Free<ListSig<char>, Seed>> {
        let mut xs = xs;
        while matches!(xs.first(), Some(&(0, _))) {
            xs.remove(0);
        }
        match xs.split_first() {
            None => ListF::Nil,
            Some((&(n, c), rest)) => {
                let mut cont: Free<ListSig<char>, Seed> = Free::Ret(rest.to_vec());
                for _ in 0..(n - 1) {
                    cont = Free::op(ListF::Cons(c, cont));
                }
                ListF::Cons(c, cont)
            }
        }
    };
    let out = futu::<ListSig<char>, Seed>(coalg, pairs.to_vec());
    let total: u64 = pairs.iter().map(|p| p.0).sum();
    take_colist(&out, total as usize + 1).into_iter().collect()
}

/// Fibonacci via a histomorphism over unary naturals, reading the table at
/// depths one and two.
pub fn fib(n: u64) -> u64 {
    histo(
        |layer: NatF<Cofree<NatSig, u64>>| match layer {
            NatF::Zero => 0,
            NatF::Succ(table) => match table.tail() {
                NatF::Zero => 1,
                NatF::Succ(prev) => extract(&table) + extract(prev),
            },
        },
        conv_nat(n),
    )
}

/// Factorial via a paramorphism: the algebra multiplies by the predecessor
/// itself, not just by a recursive result.
pub fn factorial(n: u64) -> u64 {
    para(
        |layer: NatF<(Mu<NatSig>, u64)>| match layer {
            NatF::Zero => 1,
            NatF::Succ((pred, acc)) => (crate::functors::nat_value(&pred) + 1) * acc,
        },
        conv_nat(n),
    )
}

/// Ackermann via two nested folds over unary naturals: the outer fold builds
/// the function `ack(m, ·)` as its carrier, the inner fold iterates it.
pub fn ack(m: u64, n: u64) -> u64 {
    type Fun = Rc<dyn Fn(u64) -> u64>;
    let ack_m: Fun = cata::<NatSig, Fun>(
        |layer: NatF<Fun>| match layer {
            NatF::Zero => Rc::new(|k: u64| k + 1) as Fun,
            NatF::Succ(a) => {
                let outer = Rc::new(move |k: u64| {
                    let base = Rc::clone(&a);
                    let step = Rc::clone(&a);
                    cata::<NatSig, u64>(
                        move |l: NatF<u64>| match l {
                            NatF::Zero => base(1),
                            NatF::Succ(r) => step(r),
                        },
                        conv_nat(k),
                    )
                });
                outer as Fun
            }
        },
        conv_nat(m),
    );
    ack_m(n)
}

/// The divergent geometric unfold: summing `1/n + 1/2n + 1/4n + …` never
/// produces the base case, so any finite fuel budget is exhausted.
pub fn zeno(start: u64, fuel: Fuel) -> Result<f64, FuelExhausted> {
    hylo::<ListSig<f64>, f64, u64>(
        |layer: ListF<f64, f64>| match layer {
            ListF::Nil => 0.0,
            ListF::Cons(x, acc) => x + acc,
        },
        |n: u64| ListF::Cons(1.0 / (n as f64), n.saturating_mul(2)),
        start,
        fuel,
    )
}

/// Word count via a paramorphism over the character list: a word ends at a
/// non-space character followed by a space (or the end of input).
pub fn wc(s: &str) -> usize {
    let chars: Vec<char> = s.chars().collect();
    para::<ListSig<char>, usize>(
        |layer: ListF<char, (Mu<ListSig<char>>, usize)>| match layer {
            ListF::Nil => 0,
            ListF::Cons(c, (rest, count)) => {
                let next_is_space = match rest.layer() {
                    ListF::Nil => true,
                    ListF::Cons(c2, _) => c2.is_whitespace(),
                };
                let is_word_end = !c.is_whitespace() && next_is_space;
                count + usize::from(is_word_end)
            }
        },
        crate::functors::conv_list(&chars),
    )
}

/// Merge two sorted sequences as one unfold over the pair of remainders.
pub fn merge_sorted(xs: &[i64], ys: &[i64]) -> Vec<i64> {
    type Pair = (Nu<ListSig<i64>>, Nu<ListSig<i64>>);
    let out = ana::<ListSig<i64>, Pair>(
        |(x, y): Pair| match (observe(&x), observe(&y)) {
            (ListF::Nil, ListF::Nil) => ListF::Nil,
            (ListF::Cons(a, xt), ListF::Nil) => ListF::Cons(a, (xt, y)),
            (ListF::Nil, ListF::Cons(b, yt)) => ListF::Cons(b, (x, yt)),
            (ListF::Cons(a, xt), ListF::Cons(b, _)) if a <= b => ListF::Cons(a, (xt, y)),
            (_, ListF::Cons(b, yt)) => ListF::Cons(b, (x, yt)),
        },
        (conv_colist(xs.to_vec()), conv_colist(ys.to_vec())),
    );
    take_colist(&out, xs.len() + ys.len() + 1)
}

/// Insert into a sorted sequence via an apomorphism: once the slot is found,
/// the untouched remainder is spliced in rather than re-unfolded.
pub fn insert_sorted(y: i64, xs: &[i64]) -> Vec<i64> {
    let out = apo::<ListSig<i64>, Nu<ListSig<i64>>>(
        move |s: Nu<ListSig<i64>>| match observe(&s) {
            ListF::Nil => ListF::Cons(y, ApoStep::Done(conv_colist(vec![]))),
            ListF::Cons(x, rest) => {
                if y <= x {
                    ListF::Cons(y, ApoStep::Done(s.clone()))
                } else {
                    ListF::Cons(x, ApoStep::More(rest))
                }
            }
        },
        conv_colist(xs.to_vec()),
    );
    take_colist(&out, xs.len() + 2)
}

/// Is the tree perfect? A zygomorphism: the main fold checks balance while
/// yoked to an auxiliary height fold.
pub fn is_perfect(t: Mu<TreeSig<i64>>) -> bool {
    zygo(
        |layer: TreeF<i64, (bool, u64)>| match layer {
            TreeF::Empty => true,
            TreeF::Node((pl, dl), _, (pr, dr)) => pl && pr && dl == dr,
        },
        |layer: TreeF<i64, u64>| match layer {
            TreeF::Empty => 0,
            TreeF::Node(dl, _, dr) => 1 + dl.max(dr),
        },
        t,
    )
}

/// Replace every label by the sum of the labels on its root path — an
/// accumulation whose carrier is a function of the running sum.
pub fn sum_path(t: Mu<TreeSig<i64>>, seed: i64) -> Mu<TreeSig<i64>> {
    type T = Mu<TreeSig<i64>>;
    type Arrow = AccuFn<i64, T>;
    accu::<TreeSig<i64>, T, i64>(
        |layer: TreeF<i64, Arrow>| match layer {
            TreeF::Empty => Rc::new(|_| construct(TreeF::Empty)),
            TreeF::Node(l, e, r) => Rc::new(move |s: i64| {
                let s2 = s + e;
                construct(TreeF::Node(l(s2), s2, r(s2)))
            }),
        },
        t,
        seed,
    )
}

/// Build a binary search tree by repeated insertion.
pub fn bst_from(values: &[i64]) -> Mu<TreeSig<i64>> {
    fn insert(t: Mu<TreeSig<i64>>, v: i64) -> Mu<TreeSig<i64>> {
        match t.layer().clone() {
            TreeF::Empty => construct(TreeF::Node(
                construct(TreeF::Empty),
                v,
                construct(TreeF::Empty),
            )),
            TreeF::Node(l, e, r) => {
                if v < e {
                    construct(TreeF::Node(insert(l, v), e, r))
                } else {
                    construct(TreeF::Node(l, e, insert(r, v)))
                }
            }
        }
    }
    values
        .iter()
        .fold(construct(TreeF::Empty), |t, &v| insert(t, v))
}

/// In-order labels of a tree.
pub fn inorder(t: Mu<TreeSig<i64>>) -> Vec<i64> {
    cata(
        |layer: TreeF<i64, Vec<i64>>| match layer {
            TreeF::Empty => Vec::new(),
            TreeF::Node(mut l, e, r) => {
                l.push(e);
                l.extend(r);
                l
            }
        },
        t,
    )
}

/// A full random-labelled binary tree of the given depth, unfolded from a
/// `(depth, generator state)` seed and then fully materialized under fuel.
pub fn random_tree(depth: u64, seed: u64, fuel: Fuel) -> Result<Mu<TreeSig<i64>>, FuelExhausted> {
    const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
    let n = ana::<TreeSig<i64>, (u64, u64)>(
        |(d, s): (u64, u64)| {
            if d == 0 {
                TreeF::Empty
            } else {
                let (bits, s1) = splitmix64(s);
                let label = (bits % 100) as i64;
                let (_, left) = splitmix64(s1);
                let (_, right) = splitmix64(s1.wrapping_add(GOLDEN));
                TreeF::Node((d - 1, left), label, (d - 1, right))
            }
        },
        (depth, seed),
    );
    nu_to_mu(&n, fuel)
}

/// Generate `count` random expressions of bounded depth, encode each one as
/// a number, decode it back, and require the round trip to be the identity.
/// Expressions whose encoding exceeds the size bound are re-drawn. Returns
/// the number of successful round trips.
pub fn godel_roundtrip(seed: u64, count: usize, depth: u64) -> Result<usize, String> {
    fn gen_term(rng: &mut ChaCha8Rng, depth: u64) -> Term {
        if depth == 0 {
            Term::Lit(rng.gen_range(-3..=3))
        } else {
            match rng.gen_range(0..3) {
                0 => Term::Lit(rng.gen_range(-3..=3)),
                1 => Term::Neg(Box::new(gen_term(rng, depth - 1))),
                _ => Term::Paren(Box::new(gen_expr(rng, depth - 1))),
            }
        }
    }
    fn gen_expr(rng: &mut ChaCha8Rng, depth: u64) -> Expr {
        if depth == 0 {
            Expr::FromT(Box::new(Term::Lit(rng.gen_range(-3..=3))))
        } else {
            match rng.gen_range(0..3) {
                0 => Expr::Add(
                    Box::new(gen_expr(rng, depth - 1)),
                    Box::new(gen_term(rng, depth - 1)),
                ),
                1 => Expr::Minus(
                    Box::new(gen_expr(rng, depth - 1)),
                    Box::new(gen_term(rng, depth - 1)),
                ),
                _ => Expr::FromT(Box::new(gen_term(rng, depth - 1))),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < count {
        attempts += 1;
        if attempts > count * 1000 {
            return Err(format!(
                "gave up after {attempts} attempts ({done} round trips done)"
            ));
        }
        let e = gen_expr(&mut rng, depth);
        let n = match encode_expr_checked(&e, DEFAULT_MAX_BITS) {
            Ok(n) => n,
            Err(_) => continue, // too big to encode; redraw
        };
        match decode_expr(&n) {
            Ok(back) if back == e => done += 1,
            Ok(back) => {
                return Err(format!("round trip changed {e:?} into {back:?}"));
            }
            Err(err) => {
                return Err(format!("failed to decode the encoding of {e:?}: {err}"));
            }
        }
    }
    Ok(done)
}

/// The demonstration store programs runnable by name.
pub fn demo_program(name: &str) -> Option<Prog> {
    match name {
        // get 0 (λs. put 0 (s+1) (ret s))
        "p1" => Some(construct(ProgF::get(0, |s: i64| {
            construct(ProgF::put(0, s + 1, construct(ProgF::Ret(s))))
        }))),
        // put 1 7 (get 1 (λs. ret (2·s)))
        "p2" => Some(construct(ProgF::put(
            1,
            7,
            construct(ProgF::get(1, |s: i64| construct(ProgF::Ret(s * 2)))),
        ))),
        // get 0 (λs. put 1 (s+s) (get 1 (λt. ret (t+1))))
        "p3" => Some(construct(ProgF::get(0, |s: i64| {
            construct(ProgF::put(
                1,
                s + s,
                construct(ProgF::get(1, |t: i64| construct(ProgF::Ret(t + 1)))),
            ))
        }))),
        _ => None,
    }
}

/// The demonstration store: address 0 holds 100.
pub fn demo_store() -> Store {
    let mut store = Store::new();
    store.insert(0, 100);
    store
}

// ---------------------------------------------------------------------------
// Argument parsing helpers and runnable entries.
// ---------------------------------------------------------------------------

fn parse_i64(s: &str) -> Result<i64, GalleryError> {
    s.parse::<i64>()
        .map_err(|_| GalleryError::Usage(format!("expected an integer, got '{s}'")))
}

fn parse_u64(s: &str) -> Result<u64, GalleryError> {
    s.parse::<u64>()
        .map_err(|_| GalleryError::Usage(format!("expected a non-negative integer, got '{s}'")))
}

fn parse_i64s(args: &[String]) -> Result<Vec<i64>, GalleryError> {
    args.iter().map(|s| parse_i64(s)).collect()
}

fn join_i64s(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_qsort(args: &[String], ctx: &RunCtx) -> Result<String, GalleryError> {
    let xs = parse_i64s(args)?;
    Ok(join_i64s(&qsort(&xs, Fuel(ctx.fuel))?))
}

fn run_lis(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let xs = parse_i64s(args)?;
    Ok(lis(&xs).to_string())
}

fn run_lcs(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let [a, b] = args else {
        return Err(GalleryError::Usage("lcs takes exactly two words".into()));
    };
    Ok(lcs(a.as_bytes(), b.as_bytes()).to_string())
}

fn run_rld(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let mut pairs = Vec::new();
    for arg in args {
        let (n, c) = arg
            .split_once(':')
            .ok_or_else(|| GalleryError::Usage(format!("expected count:char, got '{arg}'")))?;
        let count = parse_u64(n)?;
        let mut chars = c.chars();
        let (Some(ch), None) = (chars.next(), chars.next()) else {
            return Err(GalleryError::Usage(format!(
                "expected a single character after ':', got '{c}'"
            )));
        };
        pairs.push((count, ch));
    }
    Ok(rld(&pairs))
}

fn run_fib(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let [n] = args else {
        return Err(GalleryError::Usage("fib takes exactly one number".into()));
    };
    let n = parse_u64(n)?;
    if n > 92 {
        return Err(GalleryError::Domain(format!("fib({n}) overflows")));
    }
    Ok(fib(n).to_string())
}

fn run_factorial(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let [n] = args else {
        return Err(GalleryError::Usage(
            "factorial takes exactly one number".into(),
        ));
    };
    let n = parse_u64(n)?;
    if n > 20 {
        return Err(GalleryError::Domain(format!("factorial({n}) overflows")));
    }
    Ok(factorial(n).to_string())
}

fn run_ack(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let [m, n] = args else {
        return Err(GalleryError::Usage("ack takes exactly two numbers".into()));
    };
    let (m, n) = (parse_u64(m)?, parse_u64(n)?);
    if m > 3 || n > 10 {
        return Err(GalleryError::Domain(format!(
            "ack({m}, {n}) is out of the supported range (m <= 3, n <= 10)"
        )));
    }
    Ok(ack(m, n).to_string())
}

fn run_interp(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let [name] = args else {
        return Err(GalleryError::Usage(
            "interp takes one program name (p1, p2 or p3)".into(),
        ));
    };
    let p = demo_program(name)
        .ok_or_else(|| GalleryError::Usage(format!("unknown program '{name}'")))?;
    let v = interp(p, demo_store()).map_err(|e| GalleryError::Domain(e.to_string()))?;
    Ok(v.to_string())
}

fn split_on_dashes(args: &[String]) -> Result<(Vec<i64>, Vec<i64>), GalleryError> {
    let pos = args
        .iter()
        .position(|a| a == "--")
        .ok_or_else(|| GalleryError::Usage("expected two lists separated by --".into()))?;
    Ok((parse_i64s(&args[..pos])?, parse_i64s(&args[pos + 1..])?))
}

fn run_merge(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let (xs, ys) = split_on_dashes(args)?;
    Ok(join_i64s(&merge_sorted(&xs, &ys)))
}

fn run_insert(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let Some((x, rest)) = args.split_first() else {
        return Err(GalleryError::Usage(
            "insert takes a value followed by a sorted list".into(),
        ));
    };
    Ok(join_i64s(&insert_sorted(parse_i64(x)?, &parse_i64s(rest)?)))
}

fn run_wc(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    Ok(wc(&args.join(" ")).to_string())
}

fn run_perfect(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let t = bst_from(&parse_i64s(args)?);
    Ok(is_perfect(t).to_string())
}

fn run_sumpath(args: &[String], _ctx: &RunCtx) -> Result<String, GalleryError> {
    let t = bst_from(&parse_i64s(args)?);
    Ok(join_i64s(&inorder(sum_path(t, 0))))
}

fn run_godel_roundtrip(args: &[String], ctx: &RunCtx) -> Result<String, GalleryError> {
    if !args.is_empty() {
        return Err(GalleryError::Usage(
            "godel-roundtrip takes no positional arguments".into(),
        ));
    }
    // Deep expressions almost always blow the encoding size bound.
    let depth = ctx.depth.min(4);
    let n = godel_roundtrip(ctx.seed, 20, depth).map_err(GalleryError::Domain)?;
    Ok(format!("{n} expressions round-tripped"))
}

fn run_rantree(args: &[String], ctx: &RunCtx) -> Result<String, GalleryError> {
    let depth = match args {
        [] => ctx.depth,
        [d] => parse_u64(d)?,
        _ => {
            return Err(GalleryError::Usage(
                "rantree takes at most one depth argument".into(),
            ))
        }
    };
    let t = random_tree(depth, ctx.seed, Fuel(ctx.fuel))?;
    Ok(join_i64s(&inorder(t)))
}

fn run_zeno(args: &[String], ctx: &RunCtx) -> Result<String, GalleryError> {
    let start = match args {
        [] => 1,
        [s] => parse_u64(s)?,
        _ => {
            return Err(GalleryError::Usage(
                "zeno takes at most one start argument".into(),
            ))
        }
    };
    let total = zeno(start, Fuel(ctx.fuel))?;
    Ok(total.to_string())
}

/// All runnable gallery entries, keyed by name.
pub fn registry() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "qsort",
            scheme: "hylo",
            summary: "sort integers through an unmaterialized pivot tree",
            run: run_qsort,
        },
        GalleryEntry {
            name: "lis",
            scheme: "histo",
            summary: "longest strictly increasing subsequence length",
            run: run_lis,
        },
        GalleryEntry {
            name: "lcs",
            scheme: "dyna",
            summary: "longest common subsequence length of two words",
            run: run_lcs,
        },
        GalleryEntry {
            name: "rld",
            scheme: "futu",
            summary: "run-length decoding of count:char pairs",
            run: run_rld,
        },
        GalleryEntry {
            name: "fib",
            scheme: "histo",
            summary: "Fibonacci numbers from a depth-two memo-table",
            run: run_fib,
        },
        GalleryEntry {
            name: "factorial",
            scheme: "para",
            summary: "factorial using the predecessor directly",
            run: run_factorial,
        },
        GalleryEntry {
            name: "ack",
            scheme: "cata",
            summary: "Ackermann function from two nested folds",
            run: run_ack,
        },
        GalleryEntry {
            name: "interp",
            scheme: "cata",
            summary: "interpret a named demo store program (p1, p2, p3)",
            run: run_interp,
        },
        GalleryEntry {
            name: "merge",
            scheme: "ana",
            summary: "merge two sorted lists (separated by --)",
            run: run_merge,
        },
        GalleryEntry {
            name: "insert",
            scheme: "apo",
            summary: "insert a value into a sorted list, splicing the tail",
            run: run_insert,
        },
        GalleryEntry {
            name: "wc",
            scheme: "para",
            summary: "count words by looking one character ahead",
            run: run_wc,
        },
        GalleryEntry {
            name: "perfect",
            scheme: "zygo",
            summary: "is the BST of the arguments perfectly balanced?",
            run: run_perfect,
        },
        GalleryEntry {
            name: "sumpath",
            scheme: "accu",
            summary: "relabel the BST of the arguments with root-path sums",
            run: run_sumpath,
        },
        GalleryEntry {
            name: "godel-roundtrip",
            scheme: "comutu",
            summary: "encode random expressions as numbers and decode them back",
            run: run_godel_roundtrip,
        },
        GalleryEntry {
            name: "rantree",
            scheme: "ana",
            summary: "in-order labels of a random full binary tree",
            run: run_rantree,
        },
        GalleryEntry {
            name: "zeno",
            scheme: "hylo",
            summary: "sum a divergent geometric series until the fuel runs out",
            run: run_zeno,
        },
    ]
}

/// Look up a gallery entry by name.
pub fn find(name: &str) -> Option<GalleryEntry> {
    registry().into_iter().find(|e| e.name == name)
}
