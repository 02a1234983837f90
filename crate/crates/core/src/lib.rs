//! Exact symbolic engine for the q- and h-deformed algebras around `SL(2)`:
//! quantum plane calculus, `Fun_q(SL(2))`, `U_q(sl(2))`, q-oscillators and the
//! Jordanian deformation.

mod error;
pub mod braid;
pub mod cli;
pub mod hopf;
pub mod jordanian;
pub mod ncalg;
pub mod oscillator;
pub mod qseries;
pub mod report;
pub mod reps;
pub mod scalars;
pub mod tensor;

pub use error::Error;
