//! Built-in rewrite systems.

use super::rewrite::{RewriteSystem, RewriteSystemBuilder};
use super::NcError;
use crate::scalars::{FieldElement, VarStyle};
use num_rational::BigRational;
use num_traits::One;

/// Stable preset names accepted by [`make_preset`].
pub const PRESET_NAMES: &[&str] = &[
    "quantum_plane",
    "fun_q_sl2",
    "fun_h_sl2",
    "q_oscillator",
    "parameter_algebra",
    "classical_plane",
];

fn one() -> FieldElement {
    FieldElement::one()
}

fn qp(k: i64) -> FieldElement {
    FieldElement::q_pow(k)
}

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn h() -> FieldElement {
    FieldElement::h()
}

/// Builds a preset by name. `funq`, `funh`, `qplane` and `oscillator` are accepted as aliases.
pub fn make_preset(name: &str) -> Result<RewriteSystem, NcError> {
    match name {
        "quantum_plane" | "qplane" => Ok(quantum_plane()),
        "fun_q_sl2" | "funq" => Ok(fun_q_sl2()),
        "fun_h_sl2" | "funh" => Ok(fun_h_sl2()),
        "q_oscillator" | "oscillator" => Ok(q_oscillator()),
        "parameter_algebra" | "parameters" => Ok(parameter_algebra()),
        "classical_plane" => Ok(classical_plane()),
        _ => Err(NcError::UnknownPreset(name.to_string())),
    }
}

/// `Fun_q(SL(2))` with `A < B < C < D`.
pub fn fun_q_sl2() -> RewriteSystem {
    let qq = qp(1) - qp(-1);
    RewriteSystemBuilder::new("fun_q_sl2", &["A", "B", "C", "D"])
        .rule("B", "A", &[(qp(-1), &["A", "B"])])
        .rule("C", "A", &[(qp(-1), &["A", "C"])])
        .rule("D", "B", &[(qp(-1), &["B", "D"])])
        .rule("D", "C", &[(qp(-1), &["C", "D"])])
        .rule("C", "B", &[(one(), &["B", "C"])])
        .rule("D", "A", &[(one(), &["A", "D"]), (-&qq, &["B", "C"])])
        .relation("AB = qBA", &[(one(), &["A", "B"])], &[(qp(1), &["B", "A"])])
        .relation("AC = qCA", &[(one(), &["A", "C"])], &[(qp(1), &["C", "A"])])
        .relation("BD = qDB", &[(one(), &["B", "D"])], &[(qp(1), &["D", "B"])])
        .relation("CD = qDC", &[(one(), &["C", "D"])], &[(qp(1), &["D", "C"])])
        .relation("BC = CB", &[(one(), &["B", "C"])], &[(one(), &["C", "B"])])
        .relation(
            "AD - DA = (q - q^-1)BC",
            &[(one(), &["A", "D"]), (int(-1), &["D", "A"])],
            &[(qq.clone(), &["B", "C"])],
        )
        .det_relation(
            "AD - qBC = 1",
            &[(one(), &["A", "D"]), (-qp(1), &["B", "C"])],
            &[(one(), &[])],
        )
        .det(&[(one(), &["A", "D"]), (-qp(1), &["B", "C"])])
        .build()
        .expect("fun_q_sl2 preset is valid")
}

/// `Fun_h(SL(2))` with `A < B < C < D`.
///
/// The relations hold in the quotient by `det = 1`. Plain degree-lex does not orient `D*B -> B*D - h + h*D^2`, so the order
/// weighs `A=2, B=3, C=1, D=2` before comparing lexicographically.
pub fn fun_h_sl2() -> RewriteSystem {
    RewriteSystemBuilder::new("fun_h_sl2", &["A", "B", "C", "D"])
        .style(VarStyle::H)
        .weights(&[2, 3, 1, 2])
        .rule("B", "A", &[(one(), &["A", "B"]), (-h(), &["A", "A"]), (h(), &[])])
        .rule("C", "A", &[(one(), &["A", "C"]), (h(), &["C", "C"])])
        .rule("D", "A", &[(one(), &["A", "D"]), (-h(), &["A", "C"]), (h(), &["D", "C"])])
        .rule("C", "B", &[(one(), &["B", "C"]), (h(), &["A", "C"]), (h(), &["C", "D"])])
        .rule("D", "B", &[(one(), &["B", "D"]), (-h(), &[]), (h(), &["D", "D"])])
        .rule("D", "C", &[(one(), &["C", "D"]), (-h(), &["C", "C"])])
        .det_relation(
            "AB - BA = hA^2 - h",
            &[(one(), &["A", "B"]), (int(-1), &["B", "A"])],
            &[(h(), &["A", "A"]), (-h(), &[])],
        )
        .det_relation(
            "AC - CA = -hC^2",
            &[(one(), &["A", "C"]), (int(-1), &["C", "A"])],
            &[(-h(), &["C", "C"])],
        )
        .det_relation(
            "AD - DA = hAC - hDC",
            &[(one(), &["A", "D"]), (int(-1), &["D", "A"])],
            &[(h(), &["A", "C"]), (-h(), &["D", "C"])],
        )
        .det_relation(
            "BC - CB = -hAC - hCD",
            &[(one(), &["B", "C"]), (int(-1), &["C", "B"])],
            &[(-h(), &["A", "C"]), (-h(), &["C", "D"])],
        )
        .det_relation(
            "BD - DB = h - hD^2",
            &[(one(), &["B", "D"]), (int(-1), &["D", "B"])],
            &[(h(), &[]), (-h(), &["D", "D"])],
        )
        .det_relation(
            "CD - DC = hC^2",
            &[(one(), &["C", "D"]), (int(-1), &["D", "C"])],
            &[(h(), &["C", "C"])],
        )
        .det_relation(
            "AD - BC = 1 + hAC",
            &[(one(), &["A", "D"]), (int(-1), &["B", "C"])],
            &[(one(), &[]), (h(), &["A", "C"])],
        )
        .det(&[(one(), &["A", "D"]), (int(-1), &["B", "C"]), (-h(), &["A", "C"])])
        .build()
        .expect("fun_h_sl2 preset is valid")
}

/// Quantum plane with its differential calculus, `X < Y < dX < dY`.
pub fn quantum_plane() -> RewriteSystem {
    let q2m1 = qp(2) - one();
    RewriteSystemBuilder::new("quantum_plane", &["X", "Y", "dX", "dY"])
        .rule("Y", "X", &[(qp(-1), &["X", "Y"])])
        .rule("dY", "dX", &[(qp(1), &["dX", "dY"])])
        .rule("dX", "Y", &[(qp(1), &["Y", "dX"])])
        .rule("dY", "X", &[(qp(1), &["X", "dY"])])
        .rule(
            "dX",
            "X",
            &[(one(), &[]), (qp(2), &["X", "dX"]), (q2m1.clone(), &["Y", "dY"])],
        )
        .rule("dY", "Y", &[(one(), &[]), (qp(2), &["Y", "dY"])])
        .relation("XY = qYX", &[(one(), &["X", "Y"])], &[(qp(1), &["Y", "X"])])
        .relation("dX dY = q^-1 dY dX", &[(one(), &["dX", "dY"])], &[(qp(-1), &["dY", "dX"])])
        .relation("dX Y = qY dX", &[(one(), &["dX", "Y"])], &[(qp(1), &["Y", "dX"])])
        .relation("dY X = qX dY", &[(one(), &["dY", "X"])], &[(qp(1), &["X", "dY"])])
        .relation(
            "dX X - q^2 X dX = 1 + (q^2 - 1)Y dY",
            &[(one(), &["dX", "X"]), (-qp(2), &["X", "dX"])],
            &[(one(), &[]), (q2m1, &["Y", "dY"])],
        )
        .relation(
            "dY Y - q^2 Y dY = 1",
            &[(one(), &["dY", "Y"]), (-qp(2), &["Y", "dY"])],
            &[(one(), &[])],
        )
        .build()
        .expect("quantum_plane preset is valid")
}

/// The quantum plane at `q = 1`.
pub fn classical_plane() -> RewriteSystem {
    quantum_plane()
        .specialize("classical_plane", &BigRational::one())
        .expect("quantum plane has no pole at q = 1")
}

/// q-oscillator with `k = q^N`, `adag < a < k < kinv`.
pub fn q_oscillator() -> RewriteSystem {
    RewriteSystemBuilder::new("q_oscillator", &["adag", "a", "k", "kinv"])
        .rule("a", "adag", &[(qp(1), &["adag", "a"]), (one(), &["kinv"])])
        .rule("k", "adag", &[(qp(1), &["adag", "k"])])
        .rule("k", "a", &[(qp(-1), &["a", "k"])])
        .rule("kinv", "adag", &[(qp(-1), &["adag", "kinv"])])
        .rule("kinv", "a", &[(qp(1), &["a", "kinv"])])
        .rule("kinv", "k", &[(one(), &[])])
        .rule("k", "kinv", &[(one(), &[])])
        .relation(
            "a adag - q adag a = kinv",
            &[(one(), &["a", "adag"]), (-qp(1), &["adag", "a"])],
            &[(one(), &["kinv"])],
        )
        .relation("k adag = q adag k", &[(one(), &["k", "adag"])], &[(qp(1), &["adag", "k"])])
        .relation("k a = q^-1 a k", &[(one(), &["k", "a"])], &[(qp(-1), &["a", "k"])])
        .relation("k kinv = 1", &[(one(), &["k", "kinv"])], &[(one(), &[])])
        .build()
        .expect("q_oscillator preset is valid")
}

/// Group parameters `E = e^alpha`, `Einv < E < beta < gamma`.
pub fn parameter_algebra() -> RewriteSystem {
    RewriteSystemBuilder::new("parameter_algebra", &["Einv", "E", "beta", "gamma"])
        .rule("E", "Einv", &[(one(), &[])])
        .rule("Einv", "E", &[(one(), &[])])
        .rule("beta", "E", &[(qp(-1), &["E", "beta"])])
        .rule("gamma", "E", &[(qp(-1), &["E", "gamma"])])
        .rule("beta", "Einv", &[(qp(1), &["Einv", "beta"])])
        .rule("gamma", "Einv", &[(qp(1), &["Einv", "gamma"])])
        .rule("gamma", "beta", &[(one(), &["beta", "gamma"])])
        .relation("E beta = q beta E", &[(one(), &["E", "beta"])], &[(qp(1), &["beta", "E"])])
        .relation("E gamma = q gamma E", &[(one(), &["E", "gamma"])], &[(qp(1), &["gamma", "E"])])
        .relation("beta gamma = gamma beta", &[(one(), &["beta", "gamma"])], &[(one(), &["gamma", "beta"])])
        .relation("E Einv = 1", &[(one(), &["E", "Einv"])], &[(one(), &[])])
        .build()
        .expect("parameter_algebra preset is valid")
}

/// Free algebra on `A, B, C, D`: no rules, only concatenation.
pub fn free_abcd() -> RewriteSystem {
    RewriteSystemBuilder::new("free", &["A", "B", "C", "D"])
        .allow_incomplete()
        .build()
        .expect("free algebra is valid")
}
