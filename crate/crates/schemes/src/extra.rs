//! Paramorphism, apomorphism, zygomorphism, mutumorphism, comutumorphism,
//! and accumulations.
//!
//! These schemes extend the basic fold/unfold with extra capabilities:
//! access to the original substructure ([`para`]), early splicing of finished
//! codata ([`apo`]), an auxiliary structural fold ([`zygo`]), mutual recursion
//! over one datatype ([`mutu`]) and its codata dual ([`comutu`]), and folds
//! whose carrier is a function of an accumulating parameter ([`accu`]).

use std::rc::Rc;

use crate::basic::{ana, cata, cata_rc};
use crate::fix::{construct, destructure, pack_rc, FunctorSig, Mu, Nu};
use crate::functors::BifunctorSig;

/// Either a finished value (`Done`) or a seed to keep unfolding (`More`);
/// the branching payload of an apomorphism coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApoStep<N, S> {
    /// Splice in this finished codata unchanged.
    Done(N),
    /// Continue unfolding from this seed.
    More(S),
}

/// Paramorphism: a fold in which the algebra sees each substructure paired
/// with its recursive image `(original, folded)`.
pub fn para<F: FunctorSig, A: 'static>(
    alg: impl Fn(F::Layer<(Mu<F>, A)>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    para_rc(Rc::new(alg), m)
}

fn para_rc<F: FunctorSig, A: 'static>(
    alg: Rc<dyn Fn(F::Layer<(Mu<F>, A)>) -> A>,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    let layer = destructure(m);
    let alg_in = Rc::clone(&alg);
    let mapped = F::map(layer, move |sub: Mu<F>| {
        let folded = para_rc(Rc::clone(&alg_in), sub.clone());
        (sub, folded)
    });
    alg(mapped)
}

/// `cata` expressed through [`para`]: the paired substructure is discarded.
pub fn cata_via_para<F: FunctorSig, A: 'static>(
    alg: impl Fn(F::Layer<A>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    para(
        move |layer: F::Layer<(Mu<F>, A)>| alg(F::map(layer, |(_, a): (Mu<F>, A)| a)),
        m,
    )
}

/// [`para`] expressed through [`cata`]: the carrier rebuilds the original
/// structure alongside the answer and projects the answer at the end.
pub fn para_via_cata<F: FunctorSig, A: 'static>(
    alg: impl Fn(F::Layer<(Mu<F>, A)>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
    F::Layer<(Mu<F>, A)>: Clone,
{
    cata(
        move |layer: F::Layer<(Mu<F>, A)>| {
            let rebuilt = construct(F::map(layer.clone(), |(m, _): (Mu<F>, A)| m));
            (rebuilt, alg(layer))
        },
        m,
    )
    .1
}

/// Apomorphism: an unfold whose coalgebra may, at each recursive position,
/// either continue from a new seed or splice in already-finished codata.
pub fn apo<F: FunctorSig, S: Clone + 'static>(
    coalg: impl Fn(S) -> F::Layer<ApoStep<Nu<F>, S>> + 'static,
    seed: S,
) -> Nu<F> {
    // Unfold over an ApoStep seed: a Done is replayed by observing the
    // spliced codata, a More consults the user coalgebra.
    let step = move |s: ApoStep<Nu<F>, S>| match s {
        ApoStep::Done(n) => F::map(crate::fix::observe(&n), ApoStep::Done),
        ApoStep::More(s) => coalg(s),
    };
    pack_rc(ApoStep::More(seed), Rc::new(step))
}

/// Zygomorphism: the main fold `alg1` runs yoked to an auxiliary structural
/// fold `alg2`, seeing both carriers at every recursive position.
pub fn zygo<F: FunctorSig, A: 'static, B: 'static>(
    alg1: impl Fn(F::Layer<(A, B)>) -> A + 'static,
    alg2: impl Fn(F::Layer<B>) -> B + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
    F::Layer<(A, B)>: Clone,
{
    mutu_both(
        alg1,
        move |layer: F::Layer<(A, B)>| alg2(F::map(layer, |(_, b): (A, B)| b)),
        m,
    )
    .0
}

/// Mutumorphism, single-pass form: both mutually recursive folds computed
/// jointly by one shared `cata` over the product carrier.
pub fn mutu_both<F: FunctorSig, A: 'static, B: 'static>(
    alg1: impl Fn(F::Layer<(A, B)>) -> A + 'static,
    alg2: impl Fn(F::Layer<(A, B)>) -> B + 'static,
    m: Mu<F>,
) -> (A, B)
where
    F::Layer<Mu<F>>: Clone,
    F::Layer<(A, B)>: Clone,
{
    cata(
        move |layer: F::Layer<(A, B)>| (alg1(layer.clone()), alg2(layer)),
        m,
    )
}

/// Mutumorphism: the pair of mutually recursive folds, as two functions that
/// each run the shared product fold and project one component.
#[allow(clippy::type_complexity)]
pub fn mutu<F: FunctorSig, A: 'static, B: 'static>(
    alg1: impl Fn(F::Layer<(A, B)>) -> A + 'static,
    alg2: impl Fn(F::Layer<(A, B)>) -> B + 'static,
) -> (
    impl Fn(Mu<F>) -> A + 'static,
    impl Fn(Mu<F>) -> B + 'static,
)
where
    F::Layer<Mu<F>>: Clone,
    F::Layer<(A, B)>: Clone,
{
    let alg1 = Rc::new(alg1);
    let alg2 = Rc::new(alg2);
    let shared: Rc<dyn Fn(F::Layer<(A, B)>) -> (A, B)> = Rc::new(move |layer| {
        (alg1(layer.clone()), alg2(layer))
    });
    let shared_fst = Rc::clone(&shared);
    let fst = move |m: Mu<F>| cata_rc(Rc::clone(&shared_fst), m).0;
    let snd = move |m: Mu<F>| cata_rc(Rc::clone(&shared), m).1;
    (fst, snd)
}

/// One of a pair of mutually referring codata values over bifunctor
/// signatures `F` and `G`: observing a [`Nu1`] yields an `F`-layer whose
/// first positions are again `Nu1` and whose second positions are [`Nu2`].
pub struct Nu1<F: BifunctorSig, G: BifunctorSig> {
    observe: Rc<dyn Fn() -> F::Layer<Nu1<F, G>, Nu2<F, G>>>,
}

/// The second of the mutually referring pair; see [`Nu1`].
pub struct Nu2<F: BifunctorSig, G: BifunctorSig> {
    observe: Rc<dyn Fn() -> G::Layer<Nu1<F, G>, Nu2<F, G>>>,
}

impl<F: BifunctorSig, G: BifunctorSig> Clone for Nu1<F, G> {
    fn clone(&self) -> Self {
        Nu1 {
            observe: Rc::clone(&self.observe),
        }
    }
}

impl<F: BifunctorSig, G: BifunctorSig> Clone for Nu2<F, G> {
    fn clone(&self) -> Self {
        Nu2 {
            observe: Rc::clone(&self.observe),
        }
    }
}

/// Observe one layer of the first codata sort.
pub fn observe1<F: BifunctorSig, G: BifunctorSig>(
    n: &Nu1<F, G>,
) -> F::Layer<Nu1<F, G>, Nu2<F, G>> {
    (n.observe)()
}

/// Observe one layer of the second codata sort.
pub fn observe2<F: BifunctorSig, G: BifunctorSig>(
    n: &Nu2<F, G>,
) -> G::Layer<Nu1<F, G>, Nu2<F, G>> {
    (n.observe)()
}

fn comutu1<F: BifunctorSig, G: BifunctorSig, S: Clone + 'static>(
    c1: Rc<dyn Fn(S) -> F::Layer<S, S>>,
    c2: Rc<dyn Fn(S) -> G::Layer<S, S>>,
    seed: S,
) -> Nu1<F, G> {
    Nu1 {
        observe: Rc::new(move || {
            let c1_in = Rc::clone(&c1);
            let c2_in = Rc::clone(&c2);
            let c1_for_second = Rc::clone(&c1);
            let c2_for_second = Rc::clone(&c2);
            F::bimap(
                c1(seed.clone()),
                move |s: S| comutu1(Rc::clone(&c1_in), Rc::clone(&c2_in), s),
                move |s: S| comutu2(Rc::clone(&c1_for_second), Rc::clone(&c2_for_second), s),
            )
        }),
    }
}

fn comutu2<F: BifunctorSig, G: BifunctorSig, S: Clone + 'static>(
    c1: Rc<dyn Fn(S) -> F::Layer<S, S>>,
    c2: Rc<dyn Fn(S) -> G::Layer<S, S>>,
    seed: S,
) -> Nu2<F, G> {
    Nu2 {
        observe: Rc::new(move || {
            let c1_in = Rc::clone(&c1);
            let c2_in = Rc::clone(&c2);
            let c1_for_second = Rc::clone(&c1);
            let c2_for_second = Rc::clone(&c2);
            G::bimap(
                c2(seed.clone()),
                move |s: S| comutu1(Rc::clone(&c1_in), Rc::clone(&c2_in), s),
                move |s: S| comutu2(Rc::clone(&c1_for_second), Rc::clone(&c2_for_second), s),
            )
        }),
    }
}

/// Comutumorphism: unfold one shared seed into a pair of mutually referring
/// codata values, one per bifunctor sort.
pub fn comutu<F: BifunctorSig, G: BifunctorSig, S: Clone + 'static>(
    c1: impl Fn(S) -> F::Layer<S, S> + 'static,
    c2: impl Fn(S) -> G::Layer<S, S> + 'static,
    seed: S,
) -> (Nu1<F, G>, Nu2<F, G>) {
    let c1: Rc<dyn Fn(S) -> F::Layer<S, S>> = Rc::new(c1);
    let c2: Rc<dyn Fn(S) -> G::Layer<S, S>> = Rc::new(c2);
    (
        comutu1(Rc::clone(&c1), Rc::clone(&c2), seed.clone()),
        comutu2(c1, c2, seed),
    )
}

/// The carrier of an accumulation: a function of the accumulating parameter.
pub type AccuFn<B, A> = Rc<dyn Fn(B) -> A>;

/// Accumulation: a fold whose carrier is a function `B -> A` of the
/// accumulating parameter; the uncurried form of `cata`, applied to `b`.
pub fn accu<F: FunctorSig, A: 'static, B: 'static>(
    alg: impl Fn(F::Layer<AccuFn<B, A>>) -> AccuFn<B, A> + 'static,
    m: Mu<F>,
    b: B,
) -> A
where
    F::Layer<Mu<F>>: Clone,
{
    cata(alg, m)(b)
}

/// Left fold expressed as a right fold whose carrier is an
/// accumulator-transforming function.
pub fn foldl_prime<A: Clone + 'static, B: 'static>(
    step: impl Fn(B, A) -> B + 'static,
    xs: Mu<crate::functors::ListSig<A>>,
    e: B,
) -> B {
    use crate::functors::{ListF, ListSig};
    let step = Rc::new(step);
    let identity: AccuFn<B, B> = Rc::new(|b: B| b);
    accu::<ListSig<A>, B, B>(
        move |layer: ListF<A, AccuFn<B, B>>| match layer {
            ListF::Nil => Rc::clone(&identity),
            ListF::Cons(a, g) => {
                let step = Rc::clone(&step);
                Rc::new(move |b: B| g(step(b, a.clone())))
            }
        },
        xs,
        e,
    )
}

/// Co-accumulation: an unfold whose seed carries a parameter — the curried
/// form of [`ana`] over the paired seed.
pub fn coaccu<F: FunctorSig, S: Clone + 'static, P: Clone + 'static>(
    coalg: impl Fn((S, P)) -> F::Layer<(S, P)> + 'static,
    seed: S,
    p: P,
) -> Nu<F> {
    ana(coalg, (seed, p))
}
