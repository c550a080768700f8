//! Left-semi algebras, their maps and 2-cells, and left-semi monad maps.

use lnl_core::monad::{Free, SYMMETRIC};
use lnl_core::seq::Flavor;
use lnl_core::semialg::*;
use lnl_core::{Category, FinCat, Functor, NatTransform, Sweep};

fn main() -> lnl_core::Result<()> {
    let sweep = Sweep::new(2);
    let c = FinCat::chain(3);
    let strict = LeftSemiAlgebra::strict(Free(Flavor::Symmetric), c.clone(), thin_structure(Flavor::Symmetric, &c, |s| s.iter().copied().min().unwrap_or(2)));
    print!("(chain3, min) strict: {}", check_strict_algebra(&strict, sweep));

    // a comonad on the carrier turns the strict algebra into a left-semi one
    let f = Functor::into_thin(c.clone(), c.clone(), |o| [0, 0, 2][*o]);
    let c2 = c.clone();
    let a = lsa_from_comonad(&strict, &f, move |o| c2.hom(&[0, 0, 2][*o], o)[0], sweep)?;
    print!("deflated chain3: {}", check_left_semi_algebra(&a, sweep));
    println!("z<1,2> = {}, f = {:?}", a.z.obj(&vec![1, 2]), (0..3).map(|o| a.deflation().obj(&o)).collect::<Vec<_>>());
    print!("z as a strict map from the free algebra: {}", check_strict_lsa_map(&a.z, &free_algebra(SYMMETRIC, &c), &a, sweep));
    print!("eps as a 2-cell: {}", check_lsa_2cell(&a.eps, &a, &a, sweep));

    let bad = Functor::into_thin(c.clone(), c.clone(), |o| [0, 0, 1][*o]);
    let c3 = c.clone();
    match lsa_from_comonad(&strict, &bad, move |o| c3.hom(&[0, 0, 1][*o], o)[0], sweep) {
        Ok(_) => println!("deflation (0,0,1) accepted"),
        Err(e) => println!("deflation (0,0,1) rejected: {e}"),
    }

    let z2 = FinCat::monoid(&["e", "g"], |a, b| (a + b) % 2);
    let m = LeftSemiAlgebra::strict(SYMMETRIC, z2.clone(), monoid_structure(&z2));
    let id = Functor::identity(&z2);
    for gen in z2.hom(&0, &0) {
        let cell = NatTransform::new(id.clone(), id.clone(), move |_| gen);
        println!("2-cell {} on Z2: {}", z2.mor_name(gen), if check_lsa_2cell(&cell, &m, &m, sweep).passed() { "ok" } else { "breaks gamma.z=z.T(gamma)" });
    }

    for (name, r) in [
        ("S -> C", check_ls_monad_map(&SymmetricToCartesian, &FinCat::arrow(), sweep)),
        ("S -> Q", check_ls_monad_map(&SymmetricToLnl, &FinCat::arrow(), sweep)),
        ("C -> Q", check_ls_monad_map(&CartesianToLnl, &FinCat::arrow(), sweep)),
    ] {
        print!("monad map {name}: {r}");
    }
    Ok(())
}
