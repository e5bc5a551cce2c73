//! The three fundamental schemes — catamorphism ([`cata`]), anamorphism
//! ([`ana`]), hylomorphism ([`hylo`]) — plus metamorphism ([`meta`]).
//!
//! `cata` is the unique fold satisfying `x ∘ construct = alg ∘ map(x)`;
//! `ana` is the unique unfold satisfying `observe ∘ x = map(x) ∘ coalg`
//! (observationally); `hylo` is the unfold-then-fold refold, total only when
//! the coalgebra eventually stops generating subproblems — an explicit
//! [`Fuel`] budget converts potential divergence into a reported error.

use std::cell::RefCell;
use std::rc::Rc;

use crate::fix::{
    construct, destructure, node_count, nu_from_layer, pack, Algebra, Fuel, FuelExhausted,
    FunctorSig, Mu, Nu,
};

/// Fold a finite structure bottom-up, replacing each constructor by `alg`.
pub fn cata<F: FunctorSig, A: 'static>(
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    cata_rc(Rc::new(alg), m)
}

/// [`cata`] with a shared algebra, for callers that reuse one algebra across
/// many runs.
pub fn cata_rc<F: FunctorSig, A: 'static>(alg: Algebra<F, A>, m: Mu<F>) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    let layer = destructure(m);
    let alg_in = Rc::clone(&alg);
    let mapped = F::map(layer, move |sub: Mu<F>| cata_rc(Rc::clone(&alg_in), sub));
    alg(mapped)
}

/// Unfold a seed into codata, one layer per observation.
pub fn ana<F: FunctorSig, S: Clone + 'static>(
    coalg: impl Fn(S) -> F::Layer<S> + 'static,
    seed: S,
) -> Nu<F> {
    pack(seed, coalg)
}

/// Unfold with `coalg`, then immediately fold with `alg`, never materializing
/// the intermediate structure.
///
/// Implemented as an explicit-stack worklist rather than host-language
/// recursion, so deep inputs do not overflow the call stack. One unit of fuel
/// is spent per coalgebra expansion. The worklist evaluates `map` eagerly, so
/// `hylo` requires a functor whose `map` visits every recursive position
/// strictly (all shipped signatures except `ProgSig`, whose `Get` defers).
pub fn hylo<F: FunctorSig, A: 'static, S: 'static>(
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    coalg: impl Fn(S) -> F::Layer<S> + 'static,
    seed: S,
    fuel: Fuel,
) -> Result<A, FuelExhausted> {
    hylo_costed::<F, A, S>(alg, move |s| (coalg(s), 1), seed, fuel)
}

/// Worklist frames: expand a seed into a layer, or collapse a layer whose
/// children have all been computed.
enum Frame<L, S> {
    Expand { seed: S, slot: usize },
    Collapse { layer: L, slot: usize },
}

/// [`hylo`] with per-expansion fuel costs supplied by the coalgebra. Used by
/// batching schemes where some expansions are free.
pub(crate) fn hylo_costed<F: FunctorSig, A: 'static, S: 'static>(
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    coalg: impl Fn(S) -> (F::Layer<S>, u64) + 'static,
    seed: S,
    fuel: Fuel,
) -> Result<A, FuelExhausted> {
    let results: Rc<RefCell<Vec<Option<A>>>> = Rc::new(RefCell::new(vec![None]));
    let mut stack: Vec<Frame<F::Layer<usize>, S>> = vec![Frame::Expand { seed, slot: 0 }];
    let mut remaining = fuel.0;

    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Expand { seed, slot } => {
                let (layer, cost) = coalg(seed);
                if cost > remaining {
                    return Err(FuelExhausted { steps: fuel.0 });
                }
                remaining -= cost;
                // Allocate a result slot per child and queue the child seeds.
                let pending: Rc<RefCell<Vec<(usize, S)>>> = Rc::new(RefCell::new(Vec::new()));
                let pending_in = Rc::clone(&pending);
                let results_in = Rc::clone(&results);
                let layer_slots: F::Layer<usize> = F::map(layer, move |s: S| {
                    let mut res = results_in.borrow_mut();
                    let idx = res.len();
                    res.push(None);
                    pending_in.borrow_mut().push((idx, s));
                    idx
                });
                stack.push(Frame::Collapse {
                    layer: layer_slots,
                    slot,
                });
                for (idx, s) in pending.take() {
                    stack.push(Frame::Expand { seed: s, slot: idx });
                }
            }
            Frame::Collapse { layer, slot } => {
                let results_in = Rc::clone(&results);
                let layer_vals: F::Layer<A> = F::map(layer, move |idx: usize| {
                    results_in.borrow_mut()[idx]
                        .take()
                        .expect("child result computed before collapse")
                });
                results.borrow_mut()[slot] = Some(alg(layer_vals));
            }
        }
    }

    let root = results.borrow_mut()[0]
        .take()
        .expect("root result computed by a finished worklist");
    Ok(root)
}

/// `cata` routed through [`hylo`] with `destructure` as the coalgebra; agrees
/// with [`cata`] on all inputs, with fuel equal to the node count.
pub fn cata_via_hylo<F: FunctorSig, A: 'static>(
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    let fuel = Fuel(node_count(m.clone()));
    hylo::<F, A, Mu<F>>(alg, |m: Mu<F>| destructure(m), m, fuel)
        .expect("node-count fuel always suffices to refold finite data")
}

/// `ana` routed through [`hylo`] with layer-splicing as the algebra. Only
/// finite unfolds can complete; compare with [`ana`] by bounded observation.
pub fn ana_via_hylo<F: FunctorSig, S: 'static>(
    coalg: impl Fn(S) -> F::Layer<S> + 'static,
    seed: S,
    fuel: Fuel,
) -> Result<Nu<F>, FuelExhausted>
where
    F::Layer<Nu<F>>: Clone,
{
    hylo::<F, Nu<F>, S>(
        |layer: F::Layer<Nu<F>>| nu_from_layer(layer),
        coalg,
        seed,
        fuel,
    )
}

/// Metamorphism: fold the input completely with `alg`, then unfold the result
/// with `coalg` — a change of data representation. The two phases are not
/// fused; the fold finishes before the first observation.
pub fn meta<F: FunctorSig, G: FunctorSig, A: Clone + 'static>(
    coalg: impl Fn(A) -> G::Layer<A> + 'static,
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    m: Mu<F>,
) -> Nu<G>
where
    F::Layer<Mu<F>>: Clone,
{
    ana(coalg, cata(alg, m))
}

/// Identity refold: `hylo(construct, destructure)` rebuilds the input
/// structurally (a reflection-law instance, since
/// `construct ∘ destructure = id`).
pub fn refold_identity<F: FunctorSig>(m: Mu<F>) -> Result<Mu<F>, FuelExhausted>
where
    F::Layer<Mu<F>>: Clone,
{
    let fuel = Fuel(node_count(m.clone()));
    hylo::<F, Mu<F>, Mu<F>>(
        |layer: F::Layer<Mu<F>>| construct(layer),
        |m: Mu<F>| destructure(m),
        m,
        fuel,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fix::observe;
    use crate::functors::{conv_list, conv_list_inv, take_colist, ListF, ListSig, NatF, NatSig};

    fn length_alg(l: ListF<i64, u64>) -> u64 {
        match l {
            ListF::Nil => 0,
            ListF::Cons(_, n) => n + 1,
        }
    }

    #[test]
    fn cata_length() {
        assert_eq!(cata(length_alg, conv_list(&[])), 0);
        assert_eq!(cata(length_alg, conv_list(&[5, 6, 7])), 3);
    }

    #[test]
    fn ana_from_heads() {
        // from(n): the infinite stream n, n+1, n+2, ...
        let from0: Nu<ListSig<i64>> = ana(|n: i64| ListF::Cons(n, n + 1), 0);
        assert_eq!(take_colist(&from0, 4), vec![0, 1, 2, 3]);
        match observe(&from0) {
            ListF::Cons(h, _) => assert_eq!(h, 0),
            ListF::Nil => panic!("from(0) must be non-empty"),
        }
    }

    #[test]
    fn hylo_identity_refold() {
        let m = conv_list(&[1i64, 2, 3, 4]);
        let back = refold_identity(m.clone()).unwrap();
        assert_eq!(conv_list_inv(&back), conv_list_inv(&m));
    }

    #[test]
    fn hylo_is_stack_safe_on_deep_input() {
        // 200_000 layers: direct recursion would overflow the call stack.
        let n = 200_000u64;
        let total = hylo::<ListSig<u64>, u64, u64>(
            |l: ListF<u64, u64>| match l {
                ListF::Nil => 0,
                ListF::Cons(a, acc) => a + acc,
            },
            |k: u64| if k == 0 { ListF::Nil } else { ListF::Cons(k, k - 1) },
            n,
            Fuel(n + 1),
        )
        .unwrap();
        assert_eq!(total, n * (n + 1) / 2);
    }

    #[test]
    fn hylo_fuel_exhaustion_reports_budget() {
        // A coalgebra that never stops.
        let r = hylo::<ListSig<u64>, u64, u64>(
            |l: ListF<u64, u64>| match l {
                ListF::Nil => 0,
                ListF::Cons(_, acc) => acc,
            },
            |k: u64| ListF::Cons(k, k + 1),
            0u64,
            Fuel(1000),
        );
        assert_eq!(r, Err(FuelExhausted { steps: 1000 }));
    }

    #[test]
    fn cata_via_hylo_agrees_with_cata() {
        for xs in [vec![], vec![9], vec![1, 2, 3]] {
            let m = conv_list(&xs);
            assert_eq!(
                cata_via_hylo(length_alg, m.clone()),
                cata(length_alg, m)
            );
        }
    }

    #[test]
    fn ana_via_hylo_agrees_with_ana_bounded() {
        let count_down = |k: i64| if k == 0 { ListF::Nil } else { ListF::Cons(k, k - 1) };
        let direct = ana::<ListSig<i64>, i64>(count_down, 5);
        let routed = ana_via_hylo::<ListSig<i64>, i64>(count_down, 5, Fuel(100)).unwrap();
        assert_eq!(take_colist(&direct, 10), take_colist(&routed, 10));
    }

    #[test]
    fn meta_list_to_unary_nat() {
        // Re-express a list's length as unary-nat codata.
        let m = conv_list(&[10i64, 20]);
        let n: Nu<NatSig> = meta(
            |k: u64| if k == 0 { NatF::Zero } else { NatF::Succ(k - 1) },
            length_alg,
            m,
        );
        match observe(&n) {
            NatF::Succ(rest) => match observe(&rest) {
                NatF::Succ(rest2) => assert!(matches!(observe(&rest2), NatF::Zero)),
                NatF::Zero => panic!("expected two successors"),
            },
            NatF::Zero => panic!("expected two successors"),
        }
    }

    #[test]
    fn meta_empty_input_is_immediate_zero() {
        let m = conv_list::<i64>(&[]);
        let n: Nu<NatSig> = meta(
            |k: u64| if k == 0 { NatF::Zero } else { NatF::Succ(k - 1) },
            length_alg,
            m,
        );
        assert!(matches!(observe(&n), NatF::Zero));
    }
}
