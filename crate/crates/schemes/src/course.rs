//! Course-of-value schemes: [`Cofree`] memo-tables and [`Free`] batches,
//! histomorphism ([`histo`]), dynamorphism ([`dyna`]), futumorphism
//! ([`futu`]) and chronomorphism ([`chrono`]).
//!
//! A histomorphism's algebra sees, at every node, a `Cofree` table annotating
//! each substructure with its already-computed result — the entire course of
//! the computation so far. A dynamorphism generalizes it by replacing
//! `destructure` with a user-supplied coalgebra, which is how dynamic
//! programming problems are phrased. Futumorphisms dually let the coalgebra
//! emit a whole `Free` batch of layers per step.

use std::rc::Rc;

use crate::basic::{cata, hylo_costed};
use crate::fix::{pack_rc, Fuel, FuelExhausted, FunctorSig, Mu, Nu};

/// A result table: a head annotation plus one annotated layer per
/// substructure. Strict and finite — built only bottom-up by [`histo`] /
/// [`dyna`], never lazily.
pub struct Cofree<F: FunctorSig, A: 'static> {
    head: A,
    tail: Rc<F::Layer<Cofree<F, A>>>,
}

impl<F: FunctorSig, A: Clone + 'static> Clone for Cofree<F, A> {
    fn clone(&self) -> Self {
        Cofree {
            head: self.head.clone(),
            tail: Rc::clone(&self.tail),
        }
    }
}

impl<F: FunctorSig, A> Cofree<F, A> {
    /// Annotate a layer of tables with a head value.
    pub fn annotate(head: A, tail: F::Layer<Cofree<F, A>>) -> Self {
        Cofree {
            head,
            tail: Rc::new(tail),
        }
    }

    /// Borrow the layer of sub-tables.
    pub fn tail(&self) -> &F::Layer<Cofree<F, A>> {
        &self.tail
    }
}

/// The head annotation of a table.
pub fn extract<F: FunctorSig, A: Clone>(c: &Cofree<F, A>) -> A {
    c.head.clone()
}

/// Histomorphism: a fold whose algebra sees the full memo-table of all
/// substructure results.
pub fn histo<F: FunctorSig, A: Clone + 'static>(
    alg: impl Fn(F::Layer<Cofree<F, A>>) -> A + 'static,
    m: Mu<F>,
) -> A
where
    F::Layer<Mu<F>>: Clone,
    F::Layer<Cofree<F, A>>: Clone,
{
    extract(&cata::<F, Cofree<F, A>>(annotating(alg), m))
}

/// Lift an algebra over tables into a table-building algebra:
/// each node is annotated with its own result.
fn annotating<F: FunctorSig, A: Clone + 'static>(
    alg: impl Fn(F::Layer<Cofree<F, A>>) -> A + 'static,
) -> impl Fn(F::Layer<Cofree<F, A>>) -> Cofree<F, A> + 'static
where
    F::Layer<Cofree<F, A>>: Clone,
{
    move |layer: F::Layer<Cofree<F, A>>| Cofree::annotate(alg(layer.clone()), layer)
}

/// Dynamorphism: [`histo`] with a user-supplied coalgebra in place of
/// `destructure` — the dynamic-programming scheme. Fuel as in
/// [`crate::basic::hylo`].
pub fn dyna<F: FunctorSig, A: Clone + 'static, S: 'static>(
    alg: impl Fn(F::Layer<Cofree<F, A>>) -> A + 'static,
    coalg: impl Fn(S) -> F::Layer<S> + 'static,
    seed: S,
    fuel: Fuel,
) -> Result<A, FuelExhausted>
where
    F::Layer<Cofree<F, A>>: Clone,
{
    let table = hylo_costed::<F, Cofree<F, A>, S>(
        annotating(alg),
        move |s| (coalg(s), 1),
        seed,
        fuel,
    )?;
    Ok(extract(&table))
}

/// Reading past the end of a list-shaped memo-table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("table index out of range: {index} past a table of length {length}")]
pub struct IndexOutOfTable {
    pub index: usize,
    pub length: usize,
}

/// The `n`th annotation of a list-shaped memo-table; `index(t, 0)` is
/// `extract(t)`.
pub fn index<A: 'static, P: Clone + 'static>(
    t: &Cofree<crate::functors::ListSig<A>, P>,
    n: usize,
) -> Result<P, IndexOutOfTable> {
    use crate::functors::ListF;
    let mut cur = t.clone();
    let mut remaining = n;
    loop {
        if remaining == 0 {
            return Ok(extract(&cur));
        }
        let next = match cur.tail() {
            ListF::Nil => {
                return Err(IndexOutOfTable {
                    index: n,
                    length: n - remaining + 1,
                })
            }
            ListF::Cons(_, t2) => t2.clone(),
        };
        cur = next;
        remaining -= 1;
    }
}

/// Position of subproblem `(drop n of s1, drop m of s2)` in the enumeration
/// order of the two-sequence dynamic-programming coalgebra. Requires
/// `(n, m) != (0, 0)`.
pub fn offset(n: usize, m: usize, len2: usize) -> usize {
    debug_assert!(n + m > 0, "offset is relative to the current subproblem");
    n * (len2 + 1) + m - 1
}

/// Leaf-tagged batches of layers: either a final value `Ret` or one more
/// layer `Op`. Finite by construction.
pub enum Free<F: FunctorSig, A: 'static> {
    Ret(A),
    Op(Rc<F::Layer<Free<F, A>>>),
}

impl<F: FunctorSig, A: Clone + 'static> Clone for Free<F, A> {
    fn clone(&self) -> Self {
        match self {
            Free::Ret(a) => Free::Ret(a.clone()),
            Free::Op(l) => Free::Op(Rc::clone(l)),
        }
    }
}

impl<F: FunctorSig, A> Free<F, A> {
    /// Wrap one layer of sub-batches.
    pub fn op(layer: F::Layer<Free<F, A>>) -> Self {
        Free::Op(Rc::new(layer))
    }
}

/// Fold a batch: `g` interprets leaves, `alg` interprets layers.
pub fn eval<F: FunctorSig, A: 'static, B: 'static>(
    alg: impl Fn(F::Layer<B>) -> B + 'static,
    g: impl Fn(A) -> B + 'static,
    t: Free<F, A>,
) -> B
where
    F::Layer<Free<F, A>>: Clone,
{
    eval_rc(Rc::new(alg), Rc::new(g), t)
}

fn eval_rc<F: FunctorSig, A: 'static, B: 'static>(
    alg: Rc<dyn Fn(F::Layer<B>) -> B>,
    g: Rc<dyn Fn(A) -> B>,
    t: Free<F, A>,
) -> B
where
    F::Layer<Free<F, A>>: Clone,
{
    match t {
        Free::Ret(a) => g(a),
        Free::Op(layer) => {
            let layer = match Rc::try_unwrap(layer) {
                Ok(l) => l,
                Err(shared) => (*shared).clone(),
            };
            let alg_in = Rc::clone(&alg);
            let g_in = Rc::clone(&g);
            let mapped = F::map(layer, move |sub: Free<F, A>| {
                eval_rc(Rc::clone(&alg_in), Rc::clone(&g_in), sub)
            });
            alg(mapped)
        }
    }
}

fn unbatch<F: FunctorSig, A: 'static>(
    coalg: &Rc<dyn Fn(A) -> F::Layer<Free<F, A>>>,
    seed: Free<F, A>,
) -> (F::Layer<Free<F, A>>, u64)
where
    F::Layer<Free<F, A>>: Clone,
{
    match seed {
        // A leaf consults the user coalgebra: one fueled step.
        Free::Ret(a) => (coalg(a), 1),
        // Batched layers were already paid for by the step that emitted them.
        Free::Op(layer) => {
            let layer = match Rc::try_unwrap(layer) {
                Ok(l) => l,
                Err(shared) => (*shared).clone(),
            };
            (layer, 0)
        }
    }
}

/// Futumorphism: an unfold whose coalgebra emits at least one layer per step
/// and may batch several (the batch is structural: the coalgebra returns a
/// layer of [`Free`] continuations).
pub fn futu<F: FunctorSig, S: Clone + 'static>(
    coalg: impl Fn(S) -> F::Layer<Free<F, S>> + 'static,
    seed: S,
) -> Nu<F>
where
    F::Layer<Free<F, S>>: Clone,
{
    let coalg: Rc<dyn Fn(S) -> F::Layer<Free<F, S>>> = Rc::new(coalg);
    pack_rc(
        Free::Ret(seed),
        Rc::new(move |s: Free<F, S>| unbatch::<F, S>(&coalg, s).0),
    )
}

/// Chronomorphism: futu-style batched production combined with histo-style
/// table consumption. Fuel counts coalgebra steps; batched layers are free.
pub fn chrono<F: FunctorSig, A: 'static, B: Clone + 'static>(
    alg: impl Fn(F::Layer<Cofree<F, B>>) -> B + 'static,
    coalg: impl Fn(A) -> F::Layer<Free<F, A>> + 'static,
    seed: A,
    fuel: Fuel,
) -> Result<B, FuelExhausted>
where
    F::Layer<Cofree<F, B>>: Clone,
    F::Layer<Free<F, A>>: Clone,
{
    let coalg: Rc<dyn Fn(A) -> F::Layer<Free<F, A>>> = Rc::new(coalg);
    let table = hylo_costed::<F, Cofree<F, B>, Free<F, A>>(
        annotating(alg),
        move |s: Free<F, A>| unbatch::<F, A>(&coalg, s),
        Free::Ret(seed),
        fuel,
    )?;
    Ok(extract(&table))
}
