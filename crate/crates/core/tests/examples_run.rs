//! Runs every example so that they stay working.

mod axioms {
    include!("../examples/axioms.rs");
}

mod command_line {
    include!("../examples/command_line.rs");
}

mod costs {
    include!("../examples/costs.rs");
}

mod decompose {
    include!("../examples/decompose.rs");
}

mod ilp {
    include!("../examples/ilp.rs");
}

mod linearity {
    include!("../examples/linearity.rs");
}

mod metrics {
    include!("../examples/metrics.rs");
}

mod nonequivalence {
    include!("../examples/nonequivalence.rs");
}

mod profile_file {
    include!("../examples/profile_file.rs");
}

mod pruning {
    include!("../examples/pruning.rs");
}

mod rankings {
    include!("../examples/rankings.rs");
}

mod solve {
    include!("../examples/solve.rs");
}

mod synthetic {
    include!("../examples/synthetic.rs");
}

#[test]
fn axioms_runs() {
    axioms::main().unwrap();
}

#[test]
fn command_line_runs() {
    command_line::main().unwrap();
}

#[test]
fn costs_runs() {
    costs::main().unwrap();
}

#[test]
fn decompose_runs() {
    decompose::main().unwrap();
}

#[test]
fn ilp_runs() {
    ilp::main().unwrap();
}

#[test]
fn linearity_runs() {
    linearity::main().unwrap();
}

#[test]
fn metrics_runs() {
    metrics::main().unwrap();
}

#[test]
fn nonequivalence_runs() {
    nonequivalence::main().unwrap();
}

#[test]
fn profile_file_runs() {
    profile_file::main().unwrap();
}

#[test]
fn pruning_runs() {
    pruning::main().unwrap();
}

#[test]
fn rankings_runs() {
    rankings::main().unwrap();
}

#[test]
fn solve_runs() {
    solve::main().unwrap();
}

#[test]
fn synthetic_runs() {
    synthetic::main().unwrap();
}
