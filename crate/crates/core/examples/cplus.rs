//! C⁺, the colax colimit of the unit of C, and the algebras it induces.

use lnl_core::colimit::CPlus;
use lnl_core::monad::{check_monad_laws, Monad};
use lnl_core::seq::Flavor;
use lnl_core::semialg::{check_left_semi_algebra, cplus_algebra, lsa_agree, lsa_from_comonad, lsa_from_cplus, thin_structure, LeftSemiAlgebra};
use lnl_core::monad::Free;
use lnl_core::{Category, FinCat, Functor, Sweep};

fn main() -> lnl_core::Result<()> {
    let one = FinCat::one();
    let cp = CPlus.on(&one);
    let objs = cp.objects_up_to(2);
    println!("objects of C+(1) up to weight 2: {}", objs.iter().map(|o| cp.show_obj(o)).collect::<Vec<_>>().join(" "));
    print!("C+ laws over ONE: {}", check_monad_laws(&CPlus, &one, 2));

    let c = FinCat::chain(3);
    let x = LeftSemiAlgebra::strict(Free(Flavor::Cartesian), c.clone(), thin_structure(Flavor::Cartesian, &c, |s| s.iter().copied().min().unwrap_or(2)));
    let f = Functor::into_thin(c.clone(), c.clone(), |o| [0, 0, 2][*o]);
    let c2 = c.clone();
    let a = lsa_from_comonad(&x, &f, move |o| c2.hom(&[0, 0, 2][*o], o)[0], Sweep::new(2))?;
    let p = cplus_algebra(&a);
    print!("induced C+ algebra on chain3: {}", check_left_semi_algebra(&p, Sweep::new(2)));
    print!("and back: {}", lsa_agree(&lsa_from_cplus(&p), &a, Sweep::new(2)));
    Ok(())
}
