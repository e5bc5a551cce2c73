//! Indexed structures: fixed points of index-aware shapes, where every node
//! carries a natural-number witness (a vector's length, a term's scope, a
//! digit list's depth) maintained by validating smart constructors.
//!
//! Rust's type system cannot thread the index through the type itself the
//! way full dependent indexing would, so the index lives alongside the node
//! as a runtime witness: constructors check the indexing discipline once,
//! and every consumer ([`icata`], [`vmap`], [`safe_head`], …) may then rely
//! on it.

use std::marker::PhantomData;
use std::rc::Rc;

/// An index-aware shape: one layer of structure over recursive positions
/// `X`, mapped by `hmap`. The indexing discipline itself is enforced by each
/// family's smart constructors, not by this trait.
pub trait HFunctorSig: 'static {
    type Layer<X: 'static>: 'static;

    fn hmap<X: 'static, Y: 'static>(
        layer: Self::Layer<X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> Self::Layer<Y>;
}

/// The fixed point of an indexed shape: shared layers plus the node's index
/// witness.
pub struct IMu<F: HFunctorSig> {
    node: Rc<F::Layer<IMu<F>>>,
    ix: u64,
}

impl<F: HFunctorSig> Clone for IMu<F> {
    fn clone(&self) -> Self {
        IMu {
            node: Rc::clone(&self.node),
            ix: self.ix,
        }
    }
}

impl<F: HFunctorSig> IMu<F> {
    /// The node's index witness.
    pub fn index(&self) -> u64 {
        self.ix
    }

    /// Borrow the top layer.
    pub fn layer(&self) -> &F::Layer<IMu<F>> {
        &self.node
    }

    fn raw(layer: F::Layer<IMu<F>>, ix: u64) -> Self {
        IMu {
            node: Rc::new(layer),
            ix,
        }
    }
}

/// A violation of an indexing discipline, reported by smart constructors and
/// index-requiring eliminators.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IndexWitnessError {
    #[error("head of a vector with length witness 0")]
    EmptyVector,
    #[error("variable {var} out of scope {scope}")]
    VariableOutOfScope { var: u64, scope: u64 },
    #[error("application of terms with mismatched scopes {0} and {1}")]
    ScopeMismatch(u64, u64),
    #[error("pair tree is not of uniform depth")]
    NonUniformDepth,
    #[error("pair tree depth {found} does not match the slot depth {expected}")]
    DepthMismatch { expected: u64, found: u64 },
    #[error("digit list at depth 0 cannot be extended")]
    DepthUnderflow,
}

/// Indexed fold: like a catamorphism, but the algebra also receives each
/// node's index witness.
pub fn icata<F: HFunctorSig, C: 'static>(
    alg: impl Fn(F::Layer<C>, u64) -> C + 'static,
    t: IMu<F>,
) -> C
where
    F::Layer<IMu<F>>: Clone,
{
    icata_rc(Rc::new(alg), t)
}

fn icata_rc<F: HFunctorSig, C: 'static>(
    alg: Rc<dyn Fn(F::Layer<C>, u64) -> C>,
    t: IMu<F>,
) -> C
where
    F::Layer<IMu<F>>: Clone,
{
    let ix = t.ix;
    let layer = (*t.node).clone();
    let alg_in = Rc::clone(&alg);
    let mapped = F::hmap(layer, move |sub: IMu<F>| icata_rc(Rc::clone(&alg_in), sub));
    alg(mapped, ix)
}

/// A constant carrier family: the result ignores the index entirely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Konst<A>(pub A);

// ---------------------------------------------------------------------------
// Length-indexed vectors.
// ---------------------------------------------------------------------------

/// One layer of a length-indexed vector; the index counts elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VecF<E, X> {
    NilF,
    ConsF(E, X),
}

/// Signature marker for [`VecF`] with element type `E`.
pub struct VecSig<E: 'static>(PhantomData<E>);

impl<E: 'static> HFunctorSig for VecSig<E> {
    type Layer<X: 'static> = VecF<E, X>;

    fn hmap<X: 'static, Y: 'static>(
        layer: VecF<E, X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> VecF<E, Y> {
        match layer {
            VecF::NilF => VecF::NilF,
            VecF::ConsF(e, x) => VecF::ConsF(e, f(x)),
        }
    }
}

/// The empty vector, with length witness 0.
pub fn vec_nil<E: 'static>() -> IMu<VecSig<E>> {
    IMu::raw(VecF::NilF, 0)
}

/// Prepend an element; the length witness grows by one.
pub fn vec_cons<E: 'static>(e: E, rest: IMu<VecSig<E>>) -> IMu<VecSig<E>> {
    let ix = rest.ix + 1;
    IMu::raw(VecF::ConsF(e, rest), ix)
}

/// Build a vector from a slice; the witness equals the slice length.
pub fn vec_from_slice<E: Clone + 'static>(xs: &[E]) -> IMu<VecSig<E>> {
    xs.iter()
        .rev()
        .fold(vec_nil(), |acc, e| vec_cons(e.clone(), acc))
}

/// Flatten a vector back to a `Vec`.
pub fn vec_to_vec<E: Clone + 'static>(v: &IMu<VecSig<E>>) -> Vec<E> {
    let mut out = Vec::new();
    let mut cur = v.clone();
    loop {
        let next = match cur.layer() {
            VecF::NilF => break,
            VecF::ConsF(e, rest) => {
                out.push(e.clone());
                rest.clone()
            }
        };
        cur = next;
    }
    out
}

/// Index-preserving map over a vector's elements.
pub fn vmap<A: 'static, B: 'static>(
    f: impl Fn(A) -> B + 'static,
    v: IMu<VecSig<A>>,
) -> IMu<VecSig<B>>
where
    A: Clone,
{
    icata::<VecSig<A>, IMu<VecSig<B>>>(
        move |layer: VecF<A, IMu<VecSig<B>>>, _ix| match layer {
            VecF::NilF => vec_nil(),
            VecF::ConsF(e, rest) => vec_cons(f(e), rest),
        },
        v,
    )
}

/// Head of a vector, available only when the length witness is positive.
pub fn safe_head<E: Clone + 'static>(v: &IMu<VecSig<E>>) -> Result<E, IndexWitnessError> {
    if v.ix == 0 {
        return Err(IndexWitnessError::EmptyVector);
    }
    match v.layer() {
        VecF::ConsF(e, _) => Ok(e.clone()),
        VecF::NilF => unreachable!("a positive length witness implies a ConsF layer"),
    }
}

// ---------------------------------------------------------------------------
// Well-scoped lambda terms (de Bruijn indices; the index is the scope size).
// ---------------------------------------------------------------------------

/// One layer of a well-scoped lambda term. `Var` holds a de Bruijn index
/// strictly below the node's scope; `Abs` shrinks the scope by one going
/// outward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaF<X> {
    Var(u64),
    App(X, X),
    Abs(X),
}

/// Signature marker for [`LambdaF`].
pub struct LambdaSig;

impl HFunctorSig for LambdaSig {
    type Layer<X: 'static> = LambdaF<X>;

    fn hmap<X: 'static, Y: 'static>(
        layer: LambdaF<X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> LambdaF<Y> {
        match layer {
            LambdaF::Var(v) => LambdaF::Var(v),
            LambdaF::App(a, b) => {
                let fa = f(a);
                LambdaF::App(fa, f(b))
            }
            LambdaF::Abs(b) => LambdaF::Abs(f(b)),
        }
    }
}

/// A variable, valid only below the given scope.
pub fn lam_var(var: u64, scope: u64) -> Result<IMu<LambdaSig>, IndexWitnessError> {
    if var >= scope {
        return Err(IndexWitnessError::VariableOutOfScope { var, scope });
    }
    Ok(IMu::raw(LambdaF::Var(var), scope))
}

/// An application of two terms in the same scope.
pub fn lam_app(
    f: IMu<LambdaSig>,
    a: IMu<LambdaSig>,
) -> Result<IMu<LambdaSig>, IndexWitnessError> {
    if f.ix != a.ix {
        return Err(IndexWitnessError::ScopeMismatch(f.ix, a.ix));
    }
    let ix = f.ix;
    Ok(IMu::raw(LambdaF::App(f, a), ix))
}

/// An abstraction: binds one variable, so the body's scope shrinks by one
/// going outward. The body must have at least one variable in scope.
pub fn lam_abs(body: IMu<LambdaSig>) -> Result<IMu<LambdaSig>, IndexWitnessError> {
    if body.ix == 0 {
        return Err(IndexWitnessError::ScopeMismatch(0, 1));
    }
    let ix = body.ix - 1;
    Ok(IMu::raw(LambdaF::Abs(body), ix))
}

/// Term size: variables count 1, applications and abstractions add 1.
pub fn lam_size(t: IMu<LambdaSig>) -> u64 {
    icata::<LambdaSig, Konst<u64>>(
        |layer: LambdaF<Konst<u64>>, _ix| match layer {
            LambdaF::Var(_) => Konst(1),
            LambdaF::App(Konst(n), Konst(m)) => Konst(n + m + 1),
            LambdaF::Abs(Konst(n)) => Konst(n + 1),
        },
        t,
    )
    .0
}

// ---------------------------------------------------------------------------
// Random-access (binary digit) lists; the index is the digit depth, and the
// payload at depth d is a complete pair tree of depth d.
// ---------------------------------------------------------------------------

/// A complete binary tree of values; completeness (uniform depth) is part of
/// the digit-list indexing discipline and checked by [`pair_tree_depth`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairTree {
    Leaf(i64),
    Pair(Box<PairTree>, Box<PairTree>),
}

/// The depth of a pair tree if it is uniform, or an error if any two paths
/// to a leaf have different lengths.
pub fn pair_tree_depth(t: &PairTree) -> Result<u64, IndexWitnessError> {
    match t {
        PairTree::Leaf(_) => Ok(0),
        PairTree::Pair(a, b) => {
            let da = pair_tree_depth(a)?;
            let db = pair_tree_depth(b)?;
            if da == db {
                Ok(da + 1)
            } else {
                Err(IndexWitnessError::NonUniformDepth)
            }
        }
    }
}

/// Sum of all leaves of a pair tree.
pub fn pair_tree_sum(t: &PairTree) -> i64 {
    match t {
        PairTree::Leaf(n) => *n,
        PairTree::Pair(a, b) => pair_tree_sum(a) + pair_tree_sum(b),
    }
}

/// One layer of a digit list at depth `d`: no digits left, a zero digit, or
/// a one digit carrying a complete tree of depth `d`; the rest of the list
/// sits at depth `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RListF<X> {
    NullF,
    ZeroF(X),
    OneF(PairTree, X),
}

/// Signature marker for [`RListF`].
pub struct RListSig;

impl HFunctorSig for RListSig {
    type Layer<X: 'static> = RListF<X>;

    fn hmap<X: 'static, Y: 'static>(
        layer: RListF<X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> RListF<Y> {
        match layer {
            RListF::NullF => RListF::NullF,
            RListF::ZeroF(x) => RListF::ZeroF(f(x)),
            RListF::OneF(t, x) => RListF::OneF(t, f(x)),
        }
    }
}

/// The empty digit list, at an arbitrary depth.
pub fn rlist_null(depth: u64) -> IMu<RListSig> {
    IMu::raw(RListF::NullF, depth)
}

/// A zero digit in front of a digit list one level deeper.
pub fn rlist_zero(rest: IMu<RListSig>) -> Result<IMu<RListSig>, IndexWitnessError> {
    if rest.ix == 0 {
        return Err(IndexWitnessError::DepthUnderflow);
    }
    let ix = rest.ix - 1;
    Ok(IMu::raw(RListF::ZeroF(rest), ix))
}

/// A one digit carrying a complete tree whose depth matches this level.
pub fn rlist_one(
    tree: PairTree,
    rest: IMu<RListSig>,
) -> Result<IMu<RListSig>, IndexWitnessError> {
    if rest.ix == 0 {
        return Err(IndexWitnessError::DepthUnderflow);
    }
    let ix = rest.ix - 1;
    let found = pair_tree_depth(&tree)?;
    if found != ix {
        return Err(IndexWitnessError::DepthMismatch {
            expected: ix,
            found,
        });
    }
    Ok(IMu::raw(RListF::OneF(tree, rest), ix))
}

/// Build a depth-0 digit list holding the given values (binary counting:
/// pair up carries as depth grows).
pub fn rlist_from_values(xs: &[i64]) -> IMu<RListSig> {
    // Collect the digits bottom-up: at each level, odd counts leave a one
    // digit, and pairs carry to the next level.
    let mut level: Vec<PairTree> = xs.iter().map(|n| PairTree::Leaf(*n)).collect();
    let mut digits: Vec<Option<PairTree>> = Vec::new();
    while !level.is_empty() {
        let odd = level.len() % 2 == 1;
        digits.push(if odd { level.pop() } else { None });
        level = level
            .chunks_exact(2)
            .map(|p| PairTree::Pair(Box::new(p[0].clone()), Box::new(p[1].clone())))
            .collect();
    }
    let mut out = rlist_null(digits.len() as u64);
    for digit in digits.into_iter().rev() {
        out = match digit {
            None => rlist_zero(out).expect("depth grows with each digit"),
            Some(t) => rlist_one(t, out).expect("trees are built at the right depth"),
        };
    }
    out
}

/// Number of values stored: a one digit at depth `d` holds `2^d` values.
pub fn rlist_len(l: IMu<RListSig>) -> u64 {
    icata::<RListSig, Konst<u64>>(
        |layer: RListF<Konst<u64>>, ix| match layer {
            RListF::NullF => Konst(0),
            RListF::ZeroF(Konst(n)) => Konst(n),
            RListF::OneF(_, Konst(n)) => Konst(n + (1 << ix)),
        },
        l,
    )
    .0
}

/// A continuation expecting a leaf-summing function for the current depth.
/// The carrier of [`sum_rlist`]: at depth `d` it holds a computation that,
/// given how to sum a depth-`d` tree, produces the total.
pub struct Cont<R: 'static> {
    run: Rc<dyn Fn(&dyn Fn(&PairTree) -> R) -> R>,
}

impl<R: 'static> Clone for Cont<R> {
    fn clone(&self) -> Self {
        Cont {
            run: Rc::clone(&self.run),
        }
    }
}

impl<R: 'static> Cont<R> {
    pub fn new(run: impl Fn(&dyn Fn(&PairTree) -> R) -> R + 'static) -> Self {
        Cont { run: Rc::new(run) }
    }

    pub fn run(&self, k: &dyn Fn(&PairTree) -> R) -> R {
        (self.run)(k)
    }
}

/// Turn a depth-`d` summing function into a depth-`d+1` one: split the pair
/// and sum both halves.
fn fork<'a>(k: &'a dyn Fn(&PairTree) -> i64) -> impl Fn(&PairTree) -> i64 + 'a {
    move |t: &PairTree| match t {
        PairTree::Pair(a, b) => k(a) + k(b),
        // Unreachable under the depth witness; a lone leaf sums to itself.
        PairTree::Leaf(n) => *n,
    }
}

/// Sum every value in a digit list by folding into depth-polymorphic
/// continuations: each level widens the summing function with [`fork`].
pub fn sum_rlist(l: IMu<RListSig>) -> i64 {
    let cont = icata::<RListSig, Cont<i64>>(
        |layer: RListF<Cont<i64>>, _ix| match layer {
            RListF::NullF => Cont::new(|_k| 0),
            RListF::ZeroF(s) => Cont::new(move |k| s.run(&fork(k))),
            RListF::OneF(t, s) => Cont::new(move |k| k(&t) + s.run(&fork(k))),
        },
        l,
    );
    // At depth 0 every tree is a leaf; summing it is reading it.
    cont.run(&|t: &PairTree| pair_tree_sum(t))
}
