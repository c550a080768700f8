//! The linear-non-linear monad Q and its comparison maps.

use lnl_core::lnl::{check_colimit_equations, LnlCat, Tagged};
use lnl_core::monad::{check_monad_laws, Lnl};
use lnl_core::{Category, FinCat};

fn main() {
    let q = LnlCat::new(FinCat::one());
    let l = Tagged::lin(0);
    let n = Tagged::nonlin(0);
    for (src, tgt) in [
        (vec![l, n], vec![l]),
        (vec![n], vec![n, n]),
        (vec![n], vec![l]),
        (vec![l], vec![n]),
        (vec![l, n], vec![n, l, n]),
    ] {
        println!("|Q(1)({}, {})| = {}", q.show_obj(&src), q.show_obj(&tgt), q.hom(&src, &tgt).len());
    }

    let e = q.comonad();
    let x = vec![l, n, l];
    println!("e{} = {}", q.show_obj(&x), q.show_obj(&e.obj(&x)));
    println!("alpha at {}: {}", q.show_obj(&x), q.show_mor(&q.alpha().at(&x)));

    print!("comparison-map equations over ARROW: {}", check_colimit_equations(&FinCat::arrow(), 2));
    print!("monad laws over ONE: {}", check_monad_laws(&Lnl, &FinCat::one(), 2));
}
