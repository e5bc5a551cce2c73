//! Fixed points of functor signatures.
//!
//! A *functor signature* ([`FunctorSig`]) describes one layer of a recursive
//! shape: a container `F<X>` together with a structure-preserving `map` over
//! its recursive positions `X`. Two fixed points are provided:
//!
//! * [`Mu<F>`] — the least fixed point: strictly finite inductive data, built
//!   layer by layer with [`construct`] and taken apart with [`destructure`].
//! * [`Nu<F>`] — the greatest fixed point: possibly infinite codata,
//!   represented as an existentially packaged `(seed, coalgebra)` pair that is
//!   observed one layer at a time with [`observe`].
//!
//! Because the host language is strict, `Nu` values are never materialized;
//! [`nu_to_mu`] converts the finite fragment of a `Nu` into a `Mu` under an
//! explicit [`Fuel`] budget, and [`mu_to_nu`] embeds finite data into codata
//! (always safe).

use std::cell::Cell;
use std::rc::Rc;

/// Default fuel budget: one million coalgebra expansions.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// An explicit expansion budget that converts potential divergence into a
/// reported error. One unit is spent per coalgebra expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fuel(pub u64);

impl Default for Fuel {
    fn default() -> Self {
        Fuel(DEFAULT_FUEL)
    }
}

/// Error raised when a fueled operation runs out of budget, signalling a
/// possibly non-terminating unfold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("fuel exhausted after {steps} steps")]
pub struct FuelExhausted {
    /// The budget that was exhausted.
    pub steps: u64,
}

/// A functor signature: one layer of shape with a `map` over recursive
/// positions.
///
/// Laws (checked by the test suite on every shipped instance):
///
/// * identity: `map(l, id)` structurally equals `l`;
/// * composition: `map(l, |x| g(f(x)))` structurally equals
///   `map(map(l, f), g)`.
///
/// `map` must touch only recursive positions, never payloads. All shipped
/// instances except [`crate::functors::ProgSig`] apply `f` eagerly to every
/// recursive position; `ProgSig` defers `f` inside a stored continuation
/// (see the worklist note on [`crate::basic::hylo`]).
pub trait FunctorSig: 'static {
    /// One layer of the shape, with recursive positions of type `X`.
    type Layer<X: 'static>: 'static;

    /// Apply `f` to every recursive position of `layer`.
    fn map<X: 'static, Y: 'static>(
        layer: Self::Layer<X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> Self::Layer<Y>;
}

/// An algebra: a consumption rule `F<A> -> A` with carrier `A`.
pub type Algebra<F, A> = Rc<dyn Fn(<F as FunctorSig>::Layer<A>) -> A>;

/// A coalgebra: a production rule `S -> F<S>` with seed type `S`.
pub type CoalgebraFn<F, S> = Rc<dyn Fn(S) -> <F as FunctorSig>::Layer<S>>;

/// The least fixed point of `F`: a strictly finite tree of `F`-layers.
///
/// Layers are reference-counted, so cloning a `Mu` is cheap and shares
/// structure; values are immutable after construction.
pub struct Mu<F: FunctorSig> {
    node: Rc<F::Layer<Mu<F>>>,
}

impl<F: FunctorSig> Clone for Mu<F> {
    fn clone(&self) -> Self {
        Mu {
            node: Rc::clone(&self.node),
        }
    }
}

impl<F: FunctorSig> Mu<F> {
    /// Borrow the top layer without consuming the value.
    pub fn layer(&self) -> &F::Layer<Mu<F>> {
        &self.node
    }
}

/// Structural equality of one layer, given an equality test for recursive
/// positions. Implemented per functor so that equality of [`Mu`] values does
/// not require a cyclic trait bound.
pub trait LayerEq: FunctorSig {
    /// Compare two layers; `eq` decides equality of recursive positions.
    fn layer_eq<X>(
        a: &Self::Layer<X>,
        b: &Self::Layer<X>,
        eq: &dyn Fn(&X, &X) -> bool,
    ) -> bool;
}

/// Debug formatting of one layer, given a formatter for recursive positions.
pub trait LayerDebug: FunctorSig {
    /// Format a layer; `child` formats recursive positions.
    fn layer_fmt<X>(
        layer: &Self::Layer<X>,
        child: &dyn Fn(&X, &mut std::fmt::Formatter<'_>) -> std::fmt::Result,
        f: &mut std::fmt::Formatter<'_>,
    ) -> std::fmt::Result;
}

impl<F: LayerEq> PartialEq for Mu<F> {
    fn eq(&self, other: &Self) -> bool {
        F::layer_eq(&self.node, &other.node, &|x: &Mu<F>, y: &Mu<F>| x == y)
    }
}

impl<F: LayerEq> Eq for Mu<F> {}

impl<F: LayerDebug> std::fmt::Debug for Mu<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        F::layer_fmt(
            &self.node,
            &|x: &Mu<F>, f: &mut std::fmt::Formatter<'_>| x.fmt(f),
            f,
        )
    }
}

/// Wrap one fully built layer into the least fixed point.
pub fn construct<F: FunctorSig>(layer: F::Layer<Mu<F>>) -> Mu<F> {
    Mu {
        node: Rc::new(layer),
    }
}

/// Unwrap the top layer; the exact inverse of [`construct`].
pub fn destructure<F: FunctorSig>(m: Mu<F>) -> F::Layer<Mu<F>>
where
    F::Layer<Mu<F>>: Clone,
{
    match Rc::try_unwrap(m.node) {
        Ok(layer) => layer,
        Err(shared) => (*shared).clone(),
    }
}

/// The greatest fixed point of `F`: codata observed one layer at a time.
///
/// Internally an existentially packaged `(seed, coalgebra)` pair: the seed
/// type is erased into the observation thunk. Observation is pure — the
/// coalgebra is re-applied to the captured seed on every call, so observing
/// the same `Nu` twice yields structurally equal layers.
pub struct Nu<F: FunctorSig> {
    observe: Rc<dyn Fn() -> F::Layer<Nu<F>>>,
}

impl<F: FunctorSig> Clone for Nu<F> {
    fn clone(&self) -> Self {
        Nu {
            observe: Rc::clone(&self.observe),
        }
    }
}

/// Package a seed and a coalgebra into codata.
pub fn pack<F: FunctorSig, S: Clone + 'static>(
    seed: S,
    step: impl Fn(S) -> F::Layer<S> + 'static,
) -> Nu<F> {
    pack_rc(seed, Rc::new(step))
}

pub(crate) fn pack_rc<F: FunctorSig, S: Clone + 'static>(
    seed: S,
    step: CoalgebraFn<F, S>,
) -> Nu<F> {
    Nu {
        observe: Rc::new(move || {
            let step_inner = Rc::clone(&step);
            F::map(step(seed.clone()), move |s: S| {
                pack_rc(s, Rc::clone(&step_inner))
            })
        }),
    }
}

/// Observe one layer of codata; recursive positions are again `Nu` values.
pub fn observe<F: FunctorSig>(n: &Nu<F>) -> F::Layer<Nu<F>> {
    (n.observe)()
}

/// Wrap an already-built layer of `Nu` values as a `Nu` (a one-layer splice).
pub fn nu_from_layer<F: FunctorSig>(layer: F::Layer<Nu<F>>) -> Nu<F>
where
    F::Layer<Nu<F>>: Clone,
{
    Nu {
        observe: Rc::new(move || layer.clone()),
    }
}

/// Materialize the finite fragment of codata as inductive data, spending one
/// unit of fuel per observed layer. Fails with [`FuelExhausted`] if the
/// structure is not fully reachable within the budget.
pub fn nu_to_mu<F: FunctorSig>(n: &Nu<F>, fuel: Fuel) -> Result<Mu<F>, FuelExhausted> {
    let budget = Rc::new(Cell::new(fuel.0));
    nu_to_mu_go(n, fuel.0, &budget)
}

fn nu_to_mu_go<F: FunctorSig>(
    n: &Nu<F>,
    total: u64,
    budget: &Rc<Cell<u64>>,
) -> Result<Mu<F>, FuelExhausted> {
    if budget.get() == 0 {
        return Err(FuelExhausted { steps: total });
    }
    budget.set(budget.get() - 1);
    let layer = observe(n);
    // Map children into Result slots, then check for a failure.
    let failed: Rc<Cell<Option<FuelExhausted>>> = Rc::new(Cell::new(None));
    let failed_in = Rc::clone(&failed);
    let budget_in = Rc::clone(budget);
    let mapped = F::map(layer, move |child: Nu<F>| {
        match nu_to_mu_go(&child, total, &budget_in) {
            Ok(m) => Some(m),
            Err(e) => {
                failed_in.set(Some(e));
                None
            }
        }
    });
    if let Some(e) = failed.get() {
        return Err(e);
    }
    let unwrapped = F::map(mapped, |m: Option<Mu<F>>| {
        m.expect("all children converted when no failure was recorded")
    });
    Ok(construct(unwrapped))
}

/// Embed finite data into codata: observe-walking the result reproduces the
/// input's layers exactly. Always safe — finite data is valid codata.
pub fn mu_to_nu<F: FunctorSig>(m: Mu<F>) -> Nu<F>
where
    F::Layer<Mu<F>>: Clone,
{
    pack(m, |m: Mu<F>| destructure(m))
}

/// Total number of layers in a finite structure.
pub fn node_count<F: FunctorSig>(m: Mu<F>) -> u64
where
    F::Layer<Mu<F>>: Clone,
{
    let layer = destructure(m);
    let total = Rc::new(Cell::new(1u64));
    let total_in = Rc::clone(&total);
    let _ = F::map(layer, move |child: Mu<F>| {
        total_in.set(total_in.get() + node_count(child));
    });
    total.get()
}
