//! Shipped functor and bifunctor signatures, plus conversion helpers between
//! host-language values and their fixed-point representations.

use std::rc::Rc;

use crate::fix::{
    construct, destructure, observe, pack, FunctorSig, LayerDebug, LayerEq, Mu, Nu,
};

/// One layer of a cons-list: `Nil | Cons(head, tail)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ListF<A, X> {
    Nil,
    Cons(A, X),
}

/// Signature marker for [`ListF`] with payload type `A`.
pub struct ListSig<A>(std::marker::PhantomData<A>);

impl<A: 'static> FunctorSig for ListSig<A> {
    type Layer<X: 'static> = ListF<A, X>;

    fn map<X: 'static, Y: 'static>(
        layer: ListF<A, X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> ListF<A, Y> {
        match layer {
            ListF::Nil => ListF::Nil,
            ListF::Cons(a, x) => ListF::Cons(a, f(x)),
        }
    }
}

impl<A: PartialEq + 'static> LayerEq for ListSig<A> {
    fn layer_eq<X>(a: &ListF<A, X>, b: &ListF<A, X>, eq: &dyn Fn(&X, &X) -> bool) -> bool {
        match (a, b) {
            (ListF::Nil, ListF::Nil) => true,
            (ListF::Cons(x, xs), ListF::Cons(y, ys)) => x == y && eq(xs, ys),
            _ => false,
        }
    }
}

impl<A: std::fmt::Debug + 'static> LayerDebug for ListSig<A> {
    fn layer_fmt<X>(
        layer: &ListF<A, X>,
        child: &dyn Fn(&X, &mut std::fmt::Formatter<'_>) -> std::fmt::Result,
        f: &mut std::fmt::Formatter<'_>,
    ) -> std::fmt::Result {
        match layer {
            ListF::Nil => write!(f, "Nil"),
            ListF::Cons(a, x) => {
                write!(f, "Cons({a:?}, ")?;
                child(x, f)?;
                write!(f, ")")
            }
        }
    }
}

/// One layer of a binary tree with labelled nodes:
/// `Empty | Node(left, label, right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeF<E, X> {
    Empty,
    Node(X, E, X),
}

/// Signature marker for [`TreeF`] with label type `E`.
pub struct TreeSig<E>(std::marker::PhantomData<E>);

impl<E: 'static> FunctorSig for TreeSig<E> {
    type Layer<X: 'static> = TreeF<E, X>;

    fn map<X: 'static, Y: 'static>(
        layer: TreeF<E, X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> TreeF<E, Y> {
        match layer {
            TreeF::Empty => TreeF::Empty,
            TreeF::Node(l, e, r) => TreeF::Node(f(l), e, f(r)),
        }
    }
}

impl<E: PartialEq + 'static> LayerEq for TreeSig<E> {
    fn layer_eq<X>(a: &TreeF<E, X>, b: &TreeF<E, X>, eq: &dyn Fn(&X, &X) -> bool) -> bool {
        match (a, b) {
            (TreeF::Empty, TreeF::Empty) => true,
            (TreeF::Node(l1, e1, r1), TreeF::Node(l2, e2, r2)) => {
                e1 == e2 && eq(l1, l2) && eq(r1, r2)
            }
            _ => false,
        }
    }
}

impl<E: std::fmt::Debug + 'static> LayerDebug for TreeSig<E> {
    fn layer_fmt<X>(
        layer: &TreeF<E, X>,
        child: &dyn Fn(&X, &mut std::fmt::Formatter<'_>) -> std::fmt::Result,
        f: &mut std::fmt::Formatter<'_>,
    ) -> std::fmt::Result {
        match layer {
            TreeF::Empty => write!(f, "Empty"),
            TreeF::Node(l, e, r) => {
                write!(f, "Node(")?;
                child(l, f)?;
                write!(f, ", {e:?}, ")?;
                child(r, f)?;
                write!(f, ")")
            }
        }
    }
}

/// One layer of a unary natural number: `Zero | Succ(pred)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NatF<X> {
    Zero,
    Succ(X),
}

/// Signature marker for [`NatF`].
pub struct NatSig;

impl FunctorSig for NatSig {
    type Layer<X: 'static> = NatF<X>;

    fn map<X: 'static, Y: 'static>(layer: NatF<X>, f: impl Fn(X) -> Y + 'static) -> NatF<Y> {
        match layer {
            NatF::Zero => NatF::Zero,
            NatF::Succ(x) => NatF::Succ(f(x)),
        }
    }
}

impl LayerEq for NatSig {
    fn layer_eq<X>(a: &NatF<X>, b: &NatF<X>, eq: &dyn Fn(&X, &X) -> bool) -> bool {
        match (a, b) {
            (NatF::Zero, NatF::Zero) => true,
            (NatF::Succ(x), NatF::Succ(y)) => eq(x, y),
            _ => false,
        }
    }
}

impl LayerDebug for NatSig {
    fn layer_fmt<X>(
        layer: &NatF<X>,
        child: &dyn Fn(&X, &mut std::fmt::Formatter<'_>) -> std::fmt::Result,
        f: &mut std::fmt::Formatter<'_>,
    ) -> std::fmt::Result {
        match layer {
            NatF::Zero => write!(f, "Zero"),
            NatF::Succ(x) => {
                write!(f, "Succ(")?;
                child(x, f)?;
                write!(f, ")")
            }
        }
    }
}

/// One layer of a store-manipulating program:
/// `Ret(result) | Put(addr, val, next) | Get(addr, continuation)`.
///
/// `Get` carries a *function* payload — the continuation receives the value
/// read from the store. `map` composes under that continuation, so mapping is
/// deferred rather than eager for this constructor. Layers are therefore
/// compared only behaviorally (apply, then compare), never structurally.
pub enum ProgF<S, A, X> {
    Ret(A),
    Put(i64, S, X),
    Get(i64, Rc<dyn Fn(S) -> X>),
}

impl<S: Clone, A: Clone, X: Clone> Clone for ProgF<S, A, X> {
    fn clone(&self) -> Self {
        match self {
            ProgF::Ret(a) => ProgF::Ret(a.clone()),
            ProgF::Put(i, s, x) => ProgF::Put(*i, s.clone(), x.clone()),
            ProgF::Get(i, k) => ProgF::Get(*i, Rc::clone(k)),
        }
    }
}

impl<S, A: std::fmt::Debug, X: std::fmt::Debug> std::fmt::Debug for ProgF<S, A, X> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProgF::Ret(a) => f.debug_tuple("Ret").field(a).finish(),
            ProgF::Put(i, _, x) => f.debug_tuple("Put").field(i).field(&"<val>").field(x).finish(),
            ProgF::Get(i, _) => f.debug_tuple("Get").field(i).field(&"<fn>").finish(),
        }
    }
}

impl<S: Clone, A, X> ProgF<S, A, X> {
    /// The `Put` constructor wrapped to match the (addr, val) pairing used by
    /// program examples.
    pub fn put(addr: i64, val: S, next: X) -> Self {
        ProgF::Put(addr, val, next)
    }

    /// The `Get` constructor from a plain closure.
    pub fn get(addr: i64, k: impl Fn(S) -> X + 'static) -> Self {
        ProgF::Get(addr, Rc::new(k))
    }
}

/// Signature marker for [`ProgF`] with store-value type `S` and result type
/// `A`.
pub struct ProgSig<S, A>(std::marker::PhantomData<(S, A)>);

impl<S: 'static, A: 'static> FunctorSig for ProgSig<S, A> {
    type Layer<X: 'static> = ProgF<S, A, X>;

    fn map<X: 'static, Y: 'static>(
        layer: ProgF<S, A, X>,
        f: impl Fn(X) -> Y + 'static,
    ) -> ProgF<S, A, Y> {
        match layer {
            ProgF::Ret(a) => ProgF::Ret(a),
            ProgF::Put(i, s, x) => ProgF::Put(i, s, f(x)),
            ProgF::Get(i, k) => ProgF::Get(i, Rc::new(move |s| f(k(s)))),
        }
    }
}

/// A bifunctor signature: one layer of shape with two independent families of
/// recursive positions, mapped by `bimap`.
///
/// Laws mirror [`FunctorSig`]: `bimap(l, id, id) = l` and
/// `bimap` distributes over composition in each argument.
pub trait BifunctorSig: 'static {
    /// One layer with first positions `X` and second positions `Y`.
    type Layer<X: 'static, Y: 'static>: 'static;

    /// Apply `f` to every first position and `g` to every second position.
    fn bimap<X1: 'static, Y1: 'static, X2: 'static, Y2: 'static>(
        layer: Self::Layer<X1, Y1>,
        f: impl Fn(X1) -> X2 + 'static,
        g: impl Fn(Y1) -> Y2 + 'static,
    ) -> Self::Layer<X2, Y2>;
}

/// One layer of an arithmetic expression over two mutually recursive sorts:
/// `Add(expr, term) | Minus(expr, term) | FromT(term)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprF<E, T> {
    Add(E, T),
    Minus(E, T),
    FromT(T),
}

/// Signature marker for [`ExprF`].
pub struct ExprSig;

impl BifunctorSig for ExprSig {
    type Layer<X: 'static, Y: 'static> = ExprF<X, Y>;

    fn bimap<X1: 'static, Y1: 'static, X2: 'static, Y2: 'static>(
        layer: ExprF<X1, Y1>,
        f: impl Fn(X1) -> X2 + 'static,
        g: impl Fn(Y1) -> Y2 + 'static,
    ) -> ExprF<X2, Y2> {
        match layer {
            ExprF::Add(e, t) => ExprF::Add(f(e), g(t)),
            ExprF::Minus(e, t) => ExprF::Minus(f(e), g(t)),
            ExprF::FromT(t) => ExprF::FromT(g(t)),
        }
    }
}

/// One layer of a term in the two-sorted expression grammar:
/// `Lit(int) | Neg(term) | Paren(expr)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermF<E, T> {
    Lit(i64),
    Neg(T),
    Paren(E),
}

/// Signature marker for [`TermF`].
pub struct TermSig;

impl BifunctorSig for TermSig {
    type Layer<X: 'static, Y: 'static> = TermF<X, Y>;

    fn bimap<X1: 'static, Y1: 'static, X2: 'static, Y2: 'static>(
        layer: TermF<X1, Y1>,
        f: impl Fn(X1) -> X2 + 'static,
        g: impl Fn(Y1) -> Y2 + 'static,
    ) -> TermF<X2, Y2> {
        match layer {
            TermF::Lit(n) => TermF::Lit(n),
            TermF::Neg(t) => TermF::Neg(g(t)),
            TermF::Paren(e) => TermF::Paren(f(e)),
        }
    }
}

// ---------------------------------------------------------------------------
// Conversions between host values and fixed points.
// ---------------------------------------------------------------------------

/// Build an inductive list from a host vector.
pub fn conv_list<A: Clone + 'static>(xs: &[A]) -> Mu<ListSig<A>> {
    let mut m = construct::<ListSig<A>>(ListF::Nil);
    for a in xs.iter().rev() {
        m = construct(ListF::Cons(a.clone(), m));
    }
    m
}

/// Flatten an inductive list back into a host vector; the inverse of
/// [`conv_list`].
pub fn conv_list_inv<A: Clone + 'static>(m: &Mu<ListSig<A>>) -> Vec<A> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    loop {
        match destructure(cur) {
            ListF::Nil => return out,
            ListF::Cons(a, rest) => {
                out.push(a);
                cur = rest;
            }
        }
    }
}

/// Build codata from a host vector (a finite stream).
pub fn conv_colist<A: Clone + 'static>(xs: Vec<A>) -> Nu<ListSig<A>> {
    pack(
        (Rc::new(xs), 0usize),
        |(xs, i): (Rc<Vec<A>>, usize)| {
            if i < xs.len() {
                ListF::Cons(xs[i].clone(), (xs, i + 1))
            } else {
                ListF::Nil
            }
        },
    )
}

/// Observe up to `limit` heads of a codata list.
pub fn take_colist<A: 'static>(n: &Nu<ListSig<A>>, limit: usize) -> Vec<A> {
    let mut out = Vec::new();
    let mut cur = n.clone();
    while out.len() < limit {
        match observe(&cur) {
            ListF::Nil => break,
            ListF::Cons(a, rest) => {
                out.push(a);
                cur = rest;
            }
        }
    }
    out
}

/// Build a unary natural number from a host integer.
pub fn conv_nat(n: u64) -> Mu<NatSig> {
    let mut m = construct::<NatSig>(NatF::Zero);
    for _ in 0..n {
        m = construct(NatF::Succ(m));
    }
    m
}

/// Read a unary natural number back as a host integer.
pub fn nat_value(m: &Mu<NatSig>) -> u64 {
    let mut count = 0;
    let mut cur = m.clone();
    loop {
        match destructure(cur) {
            NatF::Zero => return count,
            NatF::Succ(p) => {
                count += 1;
                cur = p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_base_and_single_layer() {
        let nil = construct::<ListSig<i64>>(ListF::Nil);
        assert_eq!(conv_list_inv(&nil), Vec::<i64>::new());
        let one = construct(ListF::Cons(1i64, construct::<ListSig<i64>>(ListF::Nil)));
        assert_eq!(conv_list_inv(&one), vec![1]);
    }

    #[test]
    fn conv_list_walks_in_order() {
        let m = conv_list(&[1i64, 2, 3]);
        assert_eq!(conv_list_inv(&m), vec![1, 2, 3]);
    }

    #[test]
    fn destructure_is_inverse_of_construct() {
        assert_eq!(
            destructure(construct::<ListSig<i64>>(ListF::Nil)),
            ListF::Nil
        );
        let seven = conv_list(&[7i64]);
        match destructure(seven) {
            ListF::Cons(7, rest) => assert_eq!(conv_list_inv(&rest), Vec::<i64>::new()),
            other => panic!("expected Cons(7, _), got {other:?}"),
        }
    }

    #[test]
    fn observe_constant_nil_coalgebra() {
        let n: Nu<ListSig<i64>> = pack(0u8, |_| ListF::Nil);
        assert!(matches!(observe(&n), ListF::Nil));
    }

    #[test]
    fn nat_roundtrip() {
        for k in 0..10 {
            assert_eq!(nat_value(&conv_nat(k)), k);
        }
    }

    #[test]
    fn prog_map_composes_under_get() {
        // A Get layer whose continuation doubles the read value; mapping +1
        // over the recursive position composes after the stored continuation.
        let layer: ProgF<i64, i64, i64> = ProgF::get(0, |s: i64| s * 2);
        let mapped = ProgSig::<i64, i64>::map(layer, |x: i64| x + 1);
        match mapped {
            ProgF::Get(0, k) => assert_eq!(k(10), 21),
            other => panic!("expected Get, got {other:?}"),
        }
    }
}
