//! Fibers of y^2 = x(x-1)(x-(t-2)/(t+2)) against the section [t-1; 1, t-2].
//!
//! $ cargo run --example legendre_surface

use rmtori::exact::Rational;
use rmtori::surface::{section_verify, CFSection, LegendreSurface};

fn main() -> rmtori::Result<()> {
    let surface = LegendreSurface::example();
    let section = CFSection::example();
    let ts: Vec<Rational> = (3..=8).map(Rational::from).collect();
    for t in &ts {
        let m = surface.surface_matrix(t)?;
        let [[p, q], [r, s]] = m.cleared();
        println!(
            "t={t}  b={}  matrix (({p},{q}),({r},{s}))  theta {}",
            surface.legendre_b(t)?,
            surface.surface_theta(t)?
        );
    }
    for row in section_verify(&section, &surface, &ts) {
        println!(
            "t={}  section {}  literal {}  tail {}  equivalent {}",
            row.t,
            row.section_theta.map(|x| x.to_string()).unwrap_or_default(),
            row.literal_equal,
            row.tail_equal,
            row.equivalent
        );
    }
    println!("picard number {}", section.picard());

    // alpha(2) = 0: the parabolic fiber has no irrational fixed point
    println!(
        "t=2: {}",
        surface.surface_theta(&Rational::from(2)).unwrap_err()
    );
    Ok(())
}
