//! Monads on categories, presented by their action on categories, functors
//! and natural transformations, plus bounded law sweeps.

use crate::category::{functors_agree, validate_functor_on, Category, Functor, NatTransform, Sweep, SweepDomain};
use crate::fincat::{all_functors, FinCat};
use crate::lnl::LnlCat;
use crate::report::LawReport;
use crate::seq::{Flavor, FreeCat};

/// A strict 2-monad on categories.
///
/// `On<X>` is the category `T X`. Functoriality of `lift` and naturality of
/// `unit`/`mult` are what [`check_monad_laws`] sweeps.
pub trait Monad: Clone + Send + Sync + 'static {
    type On<X: Category>: Category;

    fn name(&self) -> String;
    fn on<X: Category>(&self, x: &X) -> Self::On<X>;
    fn unit<X: Category>(&self, x: &X) -> Functor<X, Self::On<X>>;
    fn mult<X: Category>(&self, x: &X) -> Functor<Self::On<Self::On<X>>, Self::On<X>>;
    fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<Self::On<A>, Self::On<B>>;
    fn lift_cell<A: Category, B: Category>(
        &self,
        t: &NatTransform<A, B>,
    ) -> NatTransform<Self::On<A>, Self::On<B>>;
}

/// `S` or `C`, depending on the flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Free(pub Flavor);

pub const SYMMETRIC: Free = Free(Flavor::Symmetric);
pub const CARTESIAN: Free = Free(Flavor::Cartesian);

impl Monad for Free {
    type On<X: Category> = FreeCat<X>;

    fn name(&self) -> String {
        self.0.letter().to_string()
    }

    fn on<X: Category>(&self, x: &X) -> FreeCat<X> {
        FreeCat::new(x.clone(), self.0)
    }

    fn unit<X: Category>(&self, x: &X) -> Functor<X, FreeCat<X>> {
        self.on(x).unit()
    }

    fn mult<X: Category>(&self, x: &X) -> Functor<FreeCat<FreeCat<X>>, FreeCat<X>> {
        FreeCat::new(self.on(x), self.0).mult()
    }

    fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<FreeCat<A>, FreeCat<B>> {
        self.on(&f.source).lift(f)
    }

    fn lift_cell<A: Category, B: Category>(&self, t: &NatTransform<A, B>) -> NatTransform<FreeCat<A>, FreeCat<B>> {
        self.on(&t.source.source).lift_cell(t)
    }
}

/// The linear-non-linear monad `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lnl;

impl Monad for Lnl {
    type On<X: Category> = LnlCat<X>;

    fn name(&self) -> String {
        "Q".into()
    }

    fn on<X: Category>(&self, x: &X) -> LnlCat<X> {
        LnlCat::new(x.clone())
    }

    fn unit<X: Category>(&self, x: &X) -> Functor<X, LnlCat<X>> {
        self.on(x).unit()
    }

    fn mult<X: Category>(&self, x: &X) -> Functor<LnlCat<LnlCat<X>>, LnlCat<X>> {
        LnlCat::new(self.on(x)).mult()
    }

    fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<LnlCat<A>, LnlCat<B>> {
        self.on(&f.source).lift(f)
    }

    fn lift_cell<A: Category, B: Category>(&self, t: &NatTransform<A, B>) -> NatTransform<LnlCat<A>, LnlCat<B>> {
        self.on(&t.source.source).lift_cell(t)
    }
}

/// The identity monad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityMonad;

impl Monad for IdentityMonad {
    type On<X: Category> = X;

    fn name(&self) -> String {
        "Id".into()
    }

    fn on<X: Category>(&self, x: &X) -> X {
        x.clone()
    }

    fn unit<X: Category>(&self, x: &X) -> Functor<X, X> {
        Functor::identity(x)
    }

    fn mult<X: Category>(&self, x: &X) -> Functor<X, X> {
        Functor::identity(x)
    }

    fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<A, B> {
        f.clone()
    }

    fn lift_cell<A: Category, B: Category>(&self, t: &NatTransform<A, B>) -> NatTransform<A, B> {
        t.clone()
    }
}

/// Unit, associativity and naturality laws of `t` at `base`, swept over
/// objects of weight at most `sweep.max_weight` in `T X`, `T² X` and `T³ X`.
/// Naturality is checked against each functor in `endos`.
pub fn check_monad_laws_with<T: Monad, X: Category>(
    t: &T,
    base: &X,
    sweep: Sweep,
    endos: &[Functor<X, X>],
) -> LawReport {
    let mut r = LawReport::new();
    let tx = t.on(base);
    let ttx = t.on(&tx);
    let tttx = t.on(&ttx);
    let d0 = SweepDomain::of(base, sweep);
    let d1 = SweepDomain::of(&tx, sweep);
    let d2 = SweepDomain::of(&ttx, sweep);
    let d3 = SweepDomain::of(&tttx, sweep);
    r.truncated = d0.truncated || d1.truncated || d2.truncated || d3.truncated;

    let eta = t.unit(base);
    let mu = t.mult(base);
    r.absorb("unit-functor", validate_functor_on(&eta, &d0));
    r.absorb("mult-functor", validate_functor_on(&mu, &d2));

    let id1 = Functor::identity(&tx);
    functors_agree("mu.eta_T=id", &t.unit(&tx).then(&mu), &id1, &d1, &mut r);
    functors_agree("mu.T(eta)=id", &t.lift(&eta).then(&mu), &id1, &d1, &mut r);
    functors_agree(
        "mu.mu_T=mu.T(mu)",
        &t.mult(&tx).then(&mu),
        &t.lift(&mu).then(&mu),
        &d3,
        &mut r,
    );

    for (i, f) in endos.iter().enumerate() {
        let tf = t.lift(f);
        functors_agree(&format!("eta-natural[{i}]"), &eta.then(&tf), &f.then(&eta), &d0, &mut r);
        functors_agree(
            &format!("mu-natural[{i}]"),
            &mu.then(&tf),
            &t.lift(&tf).then(&mu),
            &d2,
            &mut r,
        );
    }
    r
}

/// [`check_monad_laws_with`] over a finite base, with naturality checked
/// against every endofunctor of the base.
pub fn check_monad_laws<T: Monad>(t: &T, base: &FinCat, max_len: usize) -> LawReport {
    let endos: Vec<_> = all_functors(base, base)
        .into_iter()
        .map(|f| f.to_functor(base, base))
        .collect();
    check_monad_laws_with(t, base, Sweep::new(max_len), &endos)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laws_for_free_monads() {
        let one = FinCat::one();
        let r = check_monad_laws(&SYMMETRIC, &one, 3);
        assert!(r.passed(), "{r}");
        let r = check_monad_laws(&CARTESIAN, &FinCat::arrow(), 2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn empty_sweep_checks_only_empty_sequence() {
        let r = check_monad_laws(&SYMMETRIC, &FinCat::one(), 0);
        assert!(r.passed());
        assert_eq!(r.tallies["mu.eta_T=id"].checked, 2); // <> and id_<>
    }

    #[test]
    fn laws_for_lnl() {
        let r = check_monad_laws(&Lnl, &FinCat::one(), 2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn identity_monad_laws() {
        let r = check_monad_laws(&IdentityMonad, &FinCat::arrow(), 1);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn a_wrong_multiplication_is_caught() {
        // reversing concatenation order breaks μ∘Tη = id on <a,b>
        #[derive(Clone)]
        struct Reversed;
        impl Monad for Reversed {
            type On<X: Category> = FreeCat<X>;
            fn name(&self) -> String {
                "rev".into()
            }
            fn on<X: Category>(&self, x: &X) -> FreeCat<X> {
                SYMMETRIC.on(x)
            }
            fn unit<X: Category>(&self, x: &X) -> Functor<X, FreeCat<X>> {
                SYMMETRIC.unit(x)
            }
            fn mult<X: Category>(&self, x: &X) -> Functor<FreeCat<FreeCat<X>>, FreeCat<X>> {
                let m = SYMMETRIC.mult(x);
                let m2 = m.clone();
                Functor::new(
                    m.source.clone(),
                    m.target.clone(),
                    move |a| {
                        let mut a = a.clone();
                        a.reverse();
                        m2.obj(&a)
                    },
                    move |f| m.mor(f),
                )
            }
            fn lift<A: Category, B: Category>(&self, f: &Functor<A, B>) -> Functor<FreeCat<A>, FreeCat<B>> {
                SYMMETRIC.lift(f)
            }
            fn lift_cell<A: Category, B: Category>(&self, t: &NatTransform<A, B>) -> NatTransform<FreeCat<A>, FreeCat<B>> {
                SYMMETRIC.lift_cell(t)
            }
        }
        let r = check_monad_laws(&Reversed, &FinCat::discrete(&["a", "b"]), 2);
        assert!(!r.passed());
        assert!(r.failed_laws().contains(&"mu.T(eta)=id"));
    }
}
