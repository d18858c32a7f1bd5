//! Generalized G-functions and the cancellation indicator that comes with them.

use fracflow::special::{g_function, GFunctionParams};

fn main() {
    // G_{1/2,-1/2,1}(-1, t) = exp(t) erfc(sqrt t)
    for t in [0.1, 1.0, 4.0, 16.0] {
        let v = g_function(&GFunctionParams::new(0.5, -0.5, 1.0, -1.0, t), 1e-14).unwrap();
        println!("G(0.5,-0.5,1; -1, {t:>4}) = {:.15}  terms {:>3}  cancellation {:.1e}", v.value, v.terms, v.cancellation);
    }

    // large |d t| with a != 0, 1 exhausts double precision
    match g_function(&GFunctionParams::new(0.5, -0.5, 1.0, -12.0, 9.0), 1e-12) {
        Ok(v) => println!("d = -12, t = 9: {} (indicator {:.1e})", v.value, v.cancellation),
        Err(e) => println!("d = -12, t = 9: {e}"),
    }
}
