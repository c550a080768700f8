//! The free symmetric strict monoidal (S) and strict finite-product (C) monads.

use lnl_core::monad::{check_monad_laws, Monad, CARTESIAN, SYMMETRIC};
use lnl_core::{Category, FinCat};

fn main() {
    let one = FinCat::one();
    let (s, c) = (SYMMETRIC.on(&one), CARTESIAN.on(&one));
    for n in 0..=4 {
        let x = vec![0; n];
        println!("|S(1)({n},{n})| = {}", s.hom(&x, &x).len());
    }
    for n in 0..=3 {
        let row: Vec<String> = (0..=3).map(|m| c.hom(&vec![0; n], &vec![0; m]).len().to_string()).collect();
        println!("|C(1)({n},m)| for m = 0..3: {}", row.join(" "));
    }

    let arrow = FinCat::arrow();
    let ca = CARTESIAN.on(&arrow);
    for m in ca.hom(&vec![0, 1], &vec![1, 1, 0]) {
        println!("C(arrow)(01, 110): {}", ca.show_mor(&m));
    }

    for (name, r) in [
        ("S over ONE", check_monad_laws(&SYMMETRIC, &one, 3)),
        ("C over ARROW", check_monad_laws(&CARTESIAN, &arrow, 2)),
    ] {
        print!("{name}: {r}");
    }
}
