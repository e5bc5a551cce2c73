//! Effectful schemes: monad-style effect signatures ([`EffectSig`]),
//! layer sequencings ([`Sequencing`]), the monadic catamorphism [`mcata`],
//! the fueled monadic hylomorphism [`mhylo`] and anamorphism [`mana`],
//! comonadic unfolds ([`ComonadSig`], [`wana`]), and a store-program
//! interpreter ([`interp`]).
//!
//! A sequencing pulls effects out of one layer (`Layer<Eff<X>> →
//! Eff<Layer<X>>`). Two purity/compatibility properties matter:
//!
//! * sequencing a layer of pure values is pure
//!   (`seq ∘ map(unit) = unit`) — holds for every sequencing shipped here;
//! * sequencing commutes with joining nested effects
//!   (`seq ∘ map(join) = join ∘ map(seq) ∘ seq`) — this one *fails* for
//!   branching shapes whose sequencing interleaves sibling effects; see
//!   [`eq_join_compat`] and the logging counterexample in the tests.

use std::cell::Cell;
use std::collections::HashMap;
use std::marker::PhantomData;
use std::rc::Rc;

use crate::basic::{ana, cata};
use crate::fix::{construct, Fuel, FuelExhausted, FunctorSig, Mu, Nu};
use crate::functors::{ListF, ListSig, NatF, NatSig, ProgF, ProgSig, TreeF, TreeSig};

/// A monad-style effect: a carrier `Eff<X>` with `unit` and `bind`.
///
/// Laws (checked behaviorally in tests, not encoded in types):
/// left/right unit and associativity of `bind`.
pub trait EffectSig: 'static {
    type Eff<X: 'static>: 'static;

    fn unit<X: 'static>(x: X) -> Self::Eff<X>;

    fn bind<X: 'static, Y: 'static>(
        m: Self::Eff<X>,
        k: impl FnOnce(X) -> Self::Eff<Y> + 'static,
    ) -> Self::Eff<Y>;
}

/// Collapse one level of effect nesting.
pub fn join<M: EffectSig, X: 'static>(mm: M::Eff<M::Eff<X>>) -> M::Eff<X> {
    M::bind(mm, |m| m)
}

/// The trivial effect: `Eff<X> = X`.
pub struct IdentityEff;

impl EffectSig for IdentityEff {
    type Eff<X: 'static> = X;

    fn unit<X: 'static>(x: X) -> X {
        x
    }

    fn bind<X: 'static, Y: 'static>(m: X, k: impl FnOnce(X) -> Y + 'static) -> Y {
        k(m)
    }
}

/// Partiality: `Eff<X> = Option<X>`.
pub struct OptionEff;

impl EffectSig for OptionEff {
    type Eff<X: 'static> = Option<X>;

    fn unit<X: 'static>(x: X) -> Option<X> {
        Some(x)
    }

    fn bind<X: 'static, Y: 'static>(
        m: Option<X>,
        k: impl FnOnce(X) -> Option<Y> + 'static,
    ) -> Option<Y> {
        m.and_then(k)
    }
}

/// Short-circuiting errors: `Eff<X> = Result<X, E>`.
pub struct ResultEff<E: 'static>(PhantomData<E>);

impl<E: 'static> EffectSig for ResultEff<E> {
    type Eff<X: 'static> = Result<X, E>;

    fn unit<X: 'static>(x: X) -> Result<X, E> {
        Ok(x)
    }

    fn bind<X: 'static, Y: 'static>(
        m: Result<X, E>,
        k: impl FnOnce(X) -> Result<Y, E> + 'static,
    ) -> Result<Y, E> {
        m.and_then(k)
    }
}

/// A value together with an append-only log of messages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Logged<X> {
    pub log: Vec<String>,
    pub value: X,
}

/// Writer-style logging: `Eff<X> = Logged<X>`, `bind` concatenates logs in
/// evaluation order.
pub struct LogEff;

impl EffectSig for LogEff {
    type Eff<X: 'static> = Logged<X>;

    fn unit<X: 'static>(x: X) -> Logged<X> {
        Logged {
            log: Vec::new(),
            value: x,
        }
    }

    fn bind<X: 'static, Y: 'static>(
        m: Logged<X>,
        k: impl FnOnce(X) -> Logged<Y> + 'static,
    ) -> Logged<Y> {
        let Logged { mut log, value } = m;
        let Logged {
            log: log2,
            value: value2,
        } = k(value);
        log.extend(log2);
        Logged { log, value: value2 }
    }
}

/// Emit one log message.
pub fn tell(msg: impl Into<String>) -> Logged<()> {
    Logged {
        log: vec![msg.into()],
        value: (),
    }
}

/// State threading: `Eff<X>` is a one-shot state transformer `S -> (X, S)`.
pub struct StateEff<S: 'static>(PhantomData<S>);

impl<S: 'static> EffectSig for StateEff<S> {
    type Eff<X: 'static> = Box<dyn FnOnce(S) -> (X, S)>;

    fn unit<X: 'static>(x: X) -> Self::Eff<X> {
        Box::new(move |s| (x, s))
    }

    fn bind<X: 'static, Y: 'static>(
        m: Self::Eff<X>,
        k: impl FnOnce(X) -> Self::Eff<Y> + 'static,
    ) -> Self::Eff<Y> {
        Box::new(move |s| {
            let (x, s1) = m(s);
            (k(x))(s1)
        })
    }
}

/// Read the current state.
pub fn state_get<S: Clone + 'static>() -> <StateEff<S> as EffectSig>::Eff<S> {
    Box::new(|s: S| (s.clone(), s))
}

/// Replace the current state.
pub fn state_put<S: 'static>(s: S) -> <StateEff<S> as EffectSig>::Eff<()> {
    Box::new(move |_| ((), s))
}

/// Run a state computation from an initial state.
pub fn run_state<S: 'static, X: 'static>(
    m: <StateEff<S> as EffectSig>::Eff<X>,
    s: S,
) -> (X, S) {
    m(s)
}

/// Seeded pseudo-randomness: `Eff<X>` threads a 64-bit generator state.
/// Deterministic given the seed, so results are reproducible and comparable.
pub struct RandEff;

impl EffectSig for RandEff {
    type Eff<X: 'static> = Box<dyn FnOnce(u64) -> (X, u64)>;

    fn unit<X: 'static>(x: X) -> Self::Eff<X> {
        Box::new(move |s| (x, s))
    }

    fn bind<X: 'static, Y: 'static>(
        m: Self::Eff<X>,
        k: impl FnOnce(X) -> Self::Eff<Y> + 'static,
    ) -> Self::Eff<Y> {
        Box::new(move |s| {
            let (x, s1) = m(s);
            (k(x))(s1)
        })
    }
}

/// One splitmix64 step: advance the generator state and mix out a value.
pub(crate) fn splitmix64(state: u64) -> (u64, u64) {
    let next = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = next;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (z ^ (z >> 31), next)
}

/// Draw one pseudo-random 64-bit value.
pub fn rand_u64() -> <RandEff as EffectSig>::Eff<u64> {
    Box::new(|s| splitmix64(s))
}

/// Run a seeded-random computation from a seed.
pub fn run_rand<X: 'static>(m: <RandEff as EffectSig>::Eff<X>, seed: u64) -> (X, u64) {
    m(seed)
}

/// A strategy for pulling effects out of one layer:
/// `Layer<Eff<X>> → Eff<Layer<X>>`. The strategy fixes the order in which
/// sibling effects run.
pub trait Sequencing<F: FunctorSig, M: EffectSig> {
    fn seq<X: 'static>(layer: F::Layer<M::Eff<X>>) -> M::Eff<F::Layer<X>>;
}

/// Run sibling effects left-to-right.
pub struct LToR;

/// Run sibling effects right-to-left.
pub struct RToL;

impl<E: Clone + 'static, M: EffectSig> Sequencing<TreeSig<E>, M> for LToR {
    fn seq<X: 'static>(layer: TreeF<E, M::Eff<X>>) -> M::Eff<TreeF<E, X>> {
        match layer {
            TreeF::Empty => M::unit(TreeF::Empty),
            TreeF::Node(l, e, r) => M::bind(l, move |lv: X| {
                M::bind(r, move |rv: X| M::unit(TreeF::Node(lv, e, rv)))
            }),
        }
    }
}

impl<E: Clone + 'static, M: EffectSig> Sequencing<TreeSig<E>, M> for RToL {
    fn seq<X: 'static>(layer: TreeF<E, M::Eff<X>>) -> M::Eff<TreeF<E, X>> {
        match layer {
            TreeF::Empty => M::unit(TreeF::Empty),
            TreeF::Node(l, e, r) => M::bind(r, move |rv: X| {
                M::bind(l, move |lv: X| M::unit(TreeF::Node(lv, e, rv)))
            }),
        }
    }
}

impl<A: Clone + 'static, M: EffectSig> Sequencing<ListSig<A>, M> for LToR {
    fn seq<X: 'static>(layer: ListF<A, M::Eff<X>>) -> M::Eff<ListF<A, X>> {
        match layer {
            ListF::Nil => M::unit(ListF::Nil),
            ListF::Cons(a, m) => M::bind(m, move |x| M::unit(ListF::Cons(a, x))),
        }
    }
}

impl<A: Clone + 'static, M: EffectSig> Sequencing<ListSig<A>, M> for RToL {
    fn seq<X: 'static>(layer: ListF<A, M::Eff<X>>) -> M::Eff<ListF<A, X>> {
        // A list layer has at most one recursive position, so both orders
        // coincide.
        <LToR as Sequencing<ListSig<A>, M>>::seq(layer)
    }
}

impl<M: EffectSig> Sequencing<NatSig, M> for LToR {
    fn seq<X: 'static>(layer: NatF<M::Eff<X>>) -> M::Eff<NatF<X>> {
        match layer {
            NatF::Zero => M::unit(NatF::Zero),
            NatF::Succ(m) => M::bind(m, |x| M::unit(NatF::Succ(x))),
        }
    }
}

impl<M: EffectSig> Sequencing<NatSig, M> for RToL {
    fn seq<X: 'static>(layer: NatF<M::Eff<X>>) -> M::Eff<NatF<X>> {
        <LToR as Sequencing<NatSig, M>>::seq(layer)
    }
}

/// Monadic catamorphism: fold with an effectful algebra. At each node the
/// children's effects are sequenced by `Seq`, then the algebra's effect runs.
pub fn mcata<F, M, Seq, A>(
    alg: impl Fn(F::Layer<A>) -> M::Eff<A> + 'static,
    m: Mu<F>,
) -> M::Eff<A>
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M>,
    A: 'static,
    F::Layer<Mu<F>>: Clone,
{
    let alg = Rc::new(alg);
    cata::<F, M::Eff<A>>(
        move |layer: F::Layer<M::Eff<A>>| {
            let alg = Rc::clone(&alg);
            M::bind(Seq::seq(layer), move |l| alg(l))
        },
        m,
    )
}

/// Monadic hylomorphism: effectful unfold immediately consumed by an
/// effectful fold. One unit of fuel per coalgebra step; exhaustion surfaces
/// as an `Err` *inside* the effect, after whatever effects already ran.
///
/// `Seq` must also sequence over the error effect so child failures can be
/// pulled out of a layer.
pub fn mhylo<F, M, Seq, A, S>(
    alg: impl Fn(F::Layer<A>) -> M::Eff<A> + 'static,
    coalg: impl Fn(S) -> M::Eff<F::Layer<S>> + 'static,
    seed: S,
    fuel: Fuel,
) -> M::Eff<Result<A, FuelExhausted>>
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M> + Sequencing<F, ResultEff<FuelExhausted>>,
    A: 'static,
    S: 'static,
{
    mhylo_rc::<F, M, Seq, A, S>(
        Rc::new(alg),
        Rc::new(coalg),
        seed,
        Rc::new(Cell::new(fuel.0)),
        fuel.0,
    )
}

type AlgM<F, M, A> = Rc<dyn Fn(<F as FunctorSig>::Layer<A>) -> <M as EffectSig>::Eff<A>>;
type CoalgM<F, M, S> =
    Rc<dyn Fn(S) -> <M as EffectSig>::Eff<<F as FunctorSig>::Layer<S>>>;

fn mhylo_rc<F, M, Seq, A, S>(
    alg: AlgM<F, M, A>,
    coalg: CoalgM<F, M, S>,
    seed: S,
    remaining: Rc<Cell<u64>>,
    budget: u64,
) -> M::Eff<Result<A, FuelExhausted>>
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M> + Sequencing<F, ResultEff<FuelExhausted>>,
    A: 'static,
    S: 'static,
{
    if remaining.get() == 0 {
        return M::unit(Err(FuelExhausted { steps: budget }));
    }
    remaining.set(remaining.get() - 1);

    let alg_out = Rc::clone(&alg);
    M::bind(coalg(seed), move |layer: F::Layer<S>| {
        let alg_in = Rc::clone(&alg_out);
        let coalg_in = Rc::clone(&coalg);
        let remaining_in = Rc::clone(&remaining);
        let children: F::Layer<M::Eff<Result<A, FuelExhausted>>> =
            F::map(layer, move |s: S| {
                mhylo_rc::<F, M, Seq, A, S>(
                    Rc::clone(&alg_in),
                    Rc::clone(&coalg_in),
                    s,
                    Rc::clone(&remaining_in),
                    budget,
                )
            });
        let sequenced = <Seq as Sequencing<F, M>>::seq(children);
        M::bind(sequenced, move |lr: F::Layer<Result<A, FuelExhausted>>| {
            match <Seq as Sequencing<F, ResultEff<FuelExhausted>>>::seq(lr) {
                Err(e) => M::unit(Err(e)),
                Ok(l) => M::bind(alg_out(l), |a| M::unit(Ok(a))),
            }
        })
    })
}

/// Monadic anamorphism: effectful unfold into strict data. The structure is
/// fully materialized before being returned inside the effect, so only
/// fuel-bounded unfolds can complete.
pub fn mana<F, M, Seq, S>(
    coalg: impl Fn(S) -> M::Eff<F::Layer<S>> + 'static,
    seed: S,
    fuel: Fuel,
) -> M::Eff<Result<Mu<F>, FuelExhausted>>
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M> + Sequencing<F, ResultEff<FuelExhausted>>,
    S: 'static,
{
    mhylo::<F, M, Seq, Mu<F>, S>(
        |layer: F::Layer<Mu<F>>| M::unit(construct(layer)),
        coalg,
        seed,
        fuel,
    )
}

/// Does sequencing preserve purity on this layer?
/// Checks `seq(map(layer, unit)) = unit(layer)` with a caller-supplied
/// effect-equality (effects like state are compared by running them).
pub fn eq_purity<F, M, Seq, X>(
    layer: F::Layer<X>,
    eff_eq: &dyn Fn(&M::Eff<F::Layer<X>>, &M::Eff<F::Layer<X>>) -> bool,
) -> bool
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M>,
    X: 'static,
    F::Layer<X>: Clone,
{
    let lhs = Seq::seq(F::map(layer.clone(), |x: X| M::unit(x)));
    let rhs = M::unit(layer);
    eff_eq(&lhs, &rhs)
}

/// Does sequencing commute with joining nested effects on this layer?
/// Checks `seq(map(layer, join)) = bind(seq(layer), seq)`. Fails for
/// branching shapes where the two sides interleave sibling effects
/// differently.
pub fn eq_join_compat<F, M, Seq, X>(
    layer: F::Layer<M::Eff<M::Eff<X>>>,
    eff_eq: &dyn Fn(&M::Eff<F::Layer<X>>, &M::Eff<F::Layer<X>>) -> bool,
) -> bool
where
    F: FunctorSig,
    M: EffectSig,
    Seq: Sequencing<F, M>,
    X: 'static,
    F::Layer<M::Eff<M::Eff<X>>>: Clone,
{
    let lhs = Seq::seq(F::map(layer.clone(), |mm: M::Eff<M::Eff<X>>| {
        join::<M, X>(mm)
    }));
    let rhs = M::bind(Seq::seq(layer), |l: F::Layer<M::Eff<X>>| Seq::seq(l));
    eff_eq(&lhs, &rhs)
}

/// A comonad-style context: a carrier `W<X>` with `counit` (read the focus)
/// and `extend` (rebuild every focus from its context).
pub trait ComonadSig: 'static {
    type W<X: 'static>: 'static;

    fn counit<X: Clone + 'static>(w: &Self::W<X>) -> X;

    fn extend<X: 'static, Y: 'static>(
        w: Self::W<X>,
        k: impl Fn(&Self::W<X>) -> Y + 'static,
    ) -> Self::W<Y>;
}

/// The trivial comonad: `W<X> = X`.
pub struct IdentityCo;

impl ComonadSig for IdentityCo {
    type W<X: 'static> = X;

    fn counit<X: Clone + 'static>(w: &X) -> X {
        w.clone()
    }

    fn extend<X: 'static, Y: 'static>(w: X, k: impl Fn(&X) -> Y + 'static) -> Y {
        k(&w)
    }
}

/// The environment comonad: `W<X> = (E, X)` pairs every value with a shared
/// read-only environment.
pub struct EnvCo<E: Clone + 'static>(PhantomData<E>);

impl<E: Clone + 'static> ComonadSig for EnvCo<E> {
    type W<X: 'static> = (E, X);

    fn counit<X: Clone + 'static>(w: &(E, X)) -> X {
        w.1.clone()
    }

    fn extend<X: 'static, Y: 'static>(
        w: (E, X),
        k: impl Fn(&(E, X)) -> Y + 'static,
    ) -> (E, Y) {
        let y = k(&w);
        (w.0, y)
    }
}

/// Comonadic anamorphism: an unfold whose coalgebra reads the whole context
/// `W<S>`, with a caller-supplied distributive law pushing the context into
/// each child seed.
pub fn wana<F, Cm, S>(
    dist: impl Fn(Cm::W<F::Layer<S>>) -> F::Layer<Cm::W<S>> + 'static,
    coalg: impl Fn(&Cm::W<S>) -> F::Layer<S> + 'static,
    start: Cm::W<S>,
) -> Nu<F>
where
    F: FunctorSig,
    Cm: ComonadSig,
    S: 'static,
    Cm::W<S>: Clone,
{
    let coalg = Rc::new(coalg);
    ana::<F, Cm::W<S>>(
        move |w: Cm::W<S>| {
            let c = Rc::clone(&coalg);
            dist(Cm::extend(w, move |ww: &Cm::W<S>| c(ww)))
        },
        start,
    )
}

/// A mutable integer store addressed by integers.
pub type Store = HashMap<i64, i64>;

/// Reading an address that was never written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("read from unbound address {0}")]
pub struct UnboundAddress(pub i64);

/// A store program: data over the `Ret | Put | Get` shape with `i64` cells
/// and an `i64` result.
pub type Prog = Mu<ProgSig<i64, i64>>;

/// Interpret a store program by folding it into a store transformer and
/// running it. `Put` writes a cell, `Get` reads one (erroring on unbound
/// addresses), `Ret` discards the store and yields the result.
pub fn interp(p: Prog, store: Store) -> Result<i64, UnboundAddress> {
    type K = Rc<dyn Fn(Store) -> Result<i64, UnboundAddress>>;
    let run: K = cata::<ProgSig<i64, i64>, K>(
        |layer: ProgF<i64, i64, K>| -> K {
            match layer {
                ProgF::Ret(a) => Rc::new(move |_| Ok(a)),
                ProgF::Put(i, v, k) => Rc::new(move |mut m: Store| {
                    m.insert(i, v);
                    k(m)
                }),
                ProgF::Get(i, kf) => Rc::new(move |m: Store| {
                    let v = *m.get(&i).ok_or(UnboundAddress(i))?;
                    (kf(v))(m)
                }),
            }
        },
        p,
    );
    run(store)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fix::{construct, destructure};
    use crate::functors::{conv_list, take_colist};

    /// `Node(Node(Empty, 1, Empty), 2, Node(Empty, 3, Empty))`.
    fn small_tree() -> Mu<TreeSig<i64>> {
        let leaf = |e: i64| {
            construct::<TreeSig<i64>>(TreeF::Node(
                construct::<TreeSig<i64>>(TreeF::Empty),
                e,
                construct::<TreeSig<i64>>(TreeF::Empty),
            ))
        };
        construct::<TreeSig<i64>>(TreeF::Node(leaf(1), 2, leaf(3)))
    }

    fn print_alg(layer: TreeF<i64, ()>) -> Logged<()> {
        match layer {
            TreeF::Empty => LogEff::unit(()),
            TreeF::Node((), e, ()) => tell(e.to_string()),
        }
    }

    #[test]
    fn mcata_logs_follow_the_sequencing_order() {
        let l = mcata::<TreeSig<i64>, LogEff, LToR, ()>(print_alg, small_tree());
        assert_eq!(l.log, vec!["1", "3", "2"]);
        let r = mcata::<TreeSig<i64>, LogEff, RToL, ()>(print_alg, small_tree());
        assert_eq!(r.log, vec!["3", "1", "2"]);
    }

    #[test]
    fn mcata_option_short_circuits() {
        // Sum a list, failing on any negative element.
        let alg = |layer: ListF<i64, i64>| match layer {
            ListF::Nil => Some(0),
            ListF::Cons(a, acc) if a >= 0 => Some(a + acc),
            ListF::Cons(_, _) => None,
        };
        assert_eq!(
            mcata::<ListSig<i64>, OptionEff, LToR, i64>(alg, conv_list(&[1, 2, 3])),
            Some(6)
        );
        assert_eq!(
            mcata::<ListSig<i64>, OptionEff, LToR, i64>(alg, conv_list(&[1, -2, 3])),
            None
        );
    }

    #[test]
    fn mhylo_specializes_to_mcata_on_data() {
        let m = conv_list(&[4i64, 5, 6]);
        let alg = |layer: ListF<i64, i64>| match layer {
            ListF::Nil => LogEff::unit(0),
            ListF::Cons(a, acc) => LogEff::bind(tell(format!("+{a}")), move |()| {
                LogEff::unit(a + acc)
            }),
        };
        let direct = mcata::<ListSig<i64>, LogEff, LToR, i64>(alg, m.clone());
        let routed = mhylo::<ListSig<i64>, LogEff, LToR, i64, Mu<ListSig<i64>>>(
            alg,
            |m| LogEff::unit(destructure(m)),
            m,
            Fuel(100),
        );
        assert_eq!(routed.value, Ok(direct.value));
        assert_eq!(routed.log, direct.log);
    }

    #[test]
    fn mhylo_reports_fuel_exhaustion_inside_the_effect() {
        let out = mhylo::<ListSig<i64>, LogEff, LToR, i64, i64>(
            |layer| match layer {
                ListF::Nil => LogEff::unit(0),
                ListF::Cons(_, acc) => LogEff::unit(acc),
            },
            |k: i64| LogEff::bind(tell("step"), move |()| LogEff::unit(ListF::Cons(k, k + 1))),
            0,
            Fuel(5),
        );
        assert_eq!(out.value, Err(FuelExhausted { steps: 5 }));
        // The effects that ran before exhaustion are kept.
        assert_eq!(out.log.len(), 5);
    }

    #[test]
    fn mana_builds_data_with_effects() {
        // Count down from 3, logging each step.
        let out = mana::<ListSig<i64>, LogEff, LToR, i64>(
            |k: i64| {
                if k == 0 {
                    LogEff::unit(ListF::Nil)
                } else {
                    LogEff::bind(tell(k.to_string()), move |()| {
                        LogEff::unit(ListF::Cons(k, k - 1))
                    })
                }
            },
            3,
            Fuel(10),
        );
        let m = out.value.unwrap();
        assert_eq!(crate::functors::conv_list_inv(&m), vec![3, 2, 1]);
        assert_eq!(out.log, vec!["3", "2", "1"]);
    }

    #[test]
    fn purity_holds_for_all_shipped_sequencings() {
        let eq_log = |a: &Logged<TreeF<i64, u8>>, b: &Logged<TreeF<i64, u8>>| a == b;
        let layers: Vec<TreeF<i64, u8>> =
            vec![TreeF::Empty, TreeF::Node(10, 7, 20), TreeF::Node(0, -1, 0)];
        for layer in layers {
            assert!(eq_purity::<TreeSig<i64>, LogEff, LToR, u8>(
                layer.clone(),
                &eq_log
            ));
            assert!(eq_purity::<TreeSig<i64>, LogEff, RToL, u8>(layer, &eq_log));
        }
        let eq_opt = |a: &Option<ListF<i64, u8>>, b: &Option<ListF<i64, u8>>| a == b;
        for layer in [ListF::Nil, ListF::Cons(3i64, 9u8)] {
            assert!(eq_purity::<ListSig<i64>, OptionEff, LToR, u8>(
                layer.clone(),
                &eq_opt
            ));
            assert!(eq_purity::<ListSig<i64>, OptionEff, RToL, u8>(
                layer, &eq_opt
            ));
        }
    }

    #[test]
    fn join_compat_fails_on_interleaving_branches() {
        // Left child: log A, then an inner effect logging C.
        // Right child: log B, then an inner effect logging D.
        let left: Logged<Logged<()>> = LogEff::bind(tell("A"), |()| LogEff::unit(tell("C")));
        let right: Logged<Logged<()>> = LogEff::bind(tell("B"), |()| LogEff::unit(tell("D")));
        let layer: TreeF<i64, Logged<Logged<()>>> = TreeF::Node(left, 0, right);

        let lhs = <LToR as Sequencing<TreeSig<i64>, LogEff>>::seq(
            TreeSig::<i64>::map(layer.clone(), join::<LogEff, ()>),
        );
        let rhs = LogEff::bind(
            <LToR as Sequencing<TreeSig<i64>, LogEff>>::seq(layer.clone()),
            <LToR as Sequencing<TreeSig<i64>, LogEff>>::seq,
        );
        assert_eq!(lhs.log, vec!["A", "C", "B", "D"]);
        assert_eq!(rhs.log, vec!["A", "B", "C", "D"]);
        assert!(!eq_join_compat::<TreeSig<i64>, LogEff, LToR, ()>(
            layer,
            &|a, b| a == b
        ));
    }

    #[test]
    fn join_compat_holds_on_single_child_shapes() {
        let inner: Logged<Logged<u8>> = Logged {
            log: vec!["x".into()],
            value: Logged {
                log: vec!["y".into()],
                value: 5u8,
            },
        };
        let layer: ListF<i64, Logged<Logged<u8>>> = ListF::Cons(1, inner);
        assert!(eq_join_compat::<ListSig<i64>, LogEff, LToR, u8>(
            layer,
            &|a, b| a == b
        ));
    }

    #[test]
    fn wana_identity_comonad_is_ana() {
        let count_down = |k: &i64| {
            if *k == 0 {
                ListF::Nil
            } else {
                ListF::Cons(*k, *k - 1)
            }
        };
        let direct = ana::<ListSig<i64>, i64>(move |k| count_down(&k), 4);
        let routed = wana::<ListSig<i64>, IdentityCo, i64>(
            |layer: ListF<i64, i64>| layer,
            count_down,
            4,
        );
        assert_eq!(take_colist(&direct, 10), take_colist(&routed, 10));
    }

    #[test]
    fn wana_env_comonad_streams_with_shared_environment() {
        // Count up by an environment-supplied step.
        let n = wana::<ListSig<i64>, EnvCo<i64>, i64>(
            |(e, layer): (i64, ListF<i64, i64>)| match layer {
                ListF::Nil => ListF::Nil,
                ListF::Cons(a, s) => ListF::Cons(a, (e, s)),
            },
            |w: &(i64, i64)| ListF::Cons(w.1, w.1 + w.0),
            (3, 0),
        );
        assert_eq!(take_colist(&n, 5), vec![0, 3, 6, 9, 12]);
    }

    #[test]
    fn interp_runs_the_get_put_ret_program() {
        // get 0 as s; put 0 (s + 1); ret s
        let p: Prog = construct(ProgF::get(0, |s: i64| {
            construct(ProgF::put(0, s + 1, construct(ProgF::Ret(s))))
        }));
        let mut store = Store::new();
        store.insert(0, 100);
        assert_eq!(interp(p.clone(), store), Ok(100));
        assert_eq!(interp(p, Store::new()), Err(UnboundAddress(0)));
    }

    #[test]
    fn state_and_rand_effects_thread_their_state() {
        let m = StateEff::<i64>::bind(state_get::<i64>(), |s| {
            StateEff::<i64>::bind(state_put(s + 1), move |()| StateEff::<i64>::unit(s * 2))
        });
        assert_eq!(run_state(m, 21), (42, 22));

        let r = RandEff::bind(rand_u64(), |a| {
            RandEff::bind(rand_u64(), move |b| RandEff::unit((a, b)))
        });
        let ((a1, b1), _) = run_rand(r, 42);
        let r2 = RandEff::bind(rand_u64(), |a| {
            RandEff::bind(rand_u64(), move |b| RandEff::unit((a, b)))
        });
        let ((a2, b2), _) = run_rand(r2, 42);
        assert_eq!((a1, b1), (a2, b2));
        assert_ne!(a1, b1);
    }
}
