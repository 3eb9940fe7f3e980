//! Principal values, indented contours and finite parts on the pole entries.

use malmsten::identities::Klass;
use malmsten::quad::{integrate_finite_part, integrate_indented, integrate_pv, IntegrandSpec, SingularKind};
use malmsten::specfun::cmath::{ln, real};
use malmsten::verify::{to_table, verify_all, VerifyOptions};

fn main() {
    // 1/((1-x)(1+x^2)): PV is π/4, the upper indentation adds iπ/2
    let f = IntegrandSpec::new(|x| 1.0 / ((1.0 - x) * (1.0 + x * x)), "1/((1-x)(1+x²))")
        .with_singular(1.0, SingularKind::SimplePole);
    println!("pv       {}", integrate_pv(&f, 1.0, 1e-10).value);
    println!("indented {}", integrate_indented(&f, 1e-10).value);

    let g = IntegrandSpec::new(
        |x| {
            let u = x - 1.0;
            if x.re < 2.0 { ln(real(u.re.abs())) / (u * u) } else { real(0.0) }
        },
        "ln|x-1|/(x-1)² on (0,2)",
    )
    .with_singular(2.0, SingularKind::Removable);
    println!("finite part {}", integrate_finite_part(&g, 1.0, 1e-6).value);

    let reports: Vec<_> = verify_all(&VerifyOptions::default())
        .into_iter()
        .filter(|r| matches!(r.klass, Klass::Pv | Klass::FinitePart))
        .collect();
    print!("{}", to_table(&reports));
}
