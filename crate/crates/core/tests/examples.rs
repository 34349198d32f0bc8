// Every example runs to completion.

#[allow(dead_code)]
mod bessel_functions {
    include!("../examples/bessel_functions.rs");
}

#[allow(dead_code)]
mod coefficient_tables {
    include!("../examples/coefficient_tables.rs");
}

#[allow(dead_code)]
mod convergence_fit {
    include!("../examples/convergence_fit.rs");
}

#[allow(dead_code)]
mod double_double {
    include!("../examples/double_double.rs");
}

#[allow(dead_code)]
mod eikonal {
    include!("../examples/eikonal.rs");
}

#[allow(dead_code)]
mod error_map {
    include!("../examples/error_map.rs");
}

#[allow(dead_code)]
mod hypergeometric {
    include!("../examples/hypergeometric.rs");
}

#[allow(dead_code)]
mod jacobi_regimes {
    include!("../examples/jacobi_regimes.rs");
}

#[allow(dead_code)]
mod legendre_p_expansion {
    include!("../examples/legendre_p_expansion.rs");
}

#[allow(dead_code)]
mod legendre_q_expansion {
    include!("../examples/legendre_q_expansion.rs");
}

#[allow(dead_code)]
mod oracle_gate {
    include!("../examples/oracle_gate.rs");
}

#[allow(dead_code)]
mod principal_value {
    include!("../examples/principal_value.rs");
}

#[allow(dead_code)]
mod wigner_rotation {
    include!("../examples/wigner_rotation.rs");
}

#[test]
fn examples_run() {
    bessel_functions::run_example().unwrap();
    coefficient_tables::run_example().unwrap();
    convergence_fit::run_example().unwrap();
    double_double::run_example().unwrap();
    eikonal::run_example().unwrap();
    error_map::run_example().unwrap();
    hypergeometric::run_example().unwrap();
    jacobi_regimes::run_example().unwrap();
    legendre_p_expansion::run_example().unwrap();
    legendre_q_expansion::run_example().unwrap();
    oracle_gate::run_example().unwrap();
    principal_value::run_example().unwrap();
    wigner_rotation::run_example().unwrap();
}
