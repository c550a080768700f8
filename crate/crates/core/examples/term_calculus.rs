//! Split-context terms and the two substitution rules.

use lnl_core::terms::*;

fn main() -> lnl_core::Result<()> {
    let sig = Signature::small();
    let (t, ct) = (Term::parse("(g x w)")?, Context::parse("x^L,w^L;y^N")?);
    let (s, cs) = (Term::parse("(k u)")?, Context::parse("u^L;v^N")?);
    let (u, cu) = subst_linear(&t, &ct, "w", &s, &cs, &sig)?;
    println!("{t} [{s}/w] = {u}   in {cu}");

    let (t, ct) = (Term::parse("(g z (g x z))")?, Context::parse("x^L;z^N")?);
    let (u, cu) = subst_nonlinear(&t, &ct, "z", &s, &cs, &sig)?;
    println!("{t} [{s}/z] = {u}   in {cu}");

    print!("(g x x) with x linear: {}", check_term(&Context::parse("x^L;")?, &Term::parse("(g x x)")?, &sig));
    match subst_linear(&Term::parse("w")?, &Context::parse("w^L;y^N")?, "w", &Term::parse("y")?, &Context::parse("y^L;")?, &sig) {
        Ok(_) => println!("name clash accepted"),
        Err(e) => println!("name clash: {e}"),
    }
    print!("500 random trials: {}", tag_arithmetic_check(500, 1));
    Ok(())
}
