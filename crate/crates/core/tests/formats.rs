mod common;

use common::mat;
use uhsl2_core::matrix::format::latex;
use uhsl2_core::represent::IrrepJson;
use uhsl2_core::rmatrix::r_matrix;
use uhsl2_core::{build_irrep, Epsilon, HalfInt, PolyMatrix};

#[test]
fn irrep_json_round_trips() {
    for twice in 0..=5 {
        for eps in Epsilon::BOTH {
            let r = build_irrep(HalfInt::from_twice(twice), eps).unwrap();
            let text = serde_json::to_string_pretty(&r.to_json()).unwrap();
            let parsed: IrrepJson = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), text);
            assert_eq!(&parsed.generators.y, r.y());
        }
    }
}

#[test]
fn json_layout_is_stable() {
    let m = mat("1,-1/2h^2;0,h");
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(
        text,
        r#"{"rows":2,"cols":2,"entries":[[["1"],["0","0","-1/2"]],[[],["0","1"]]]}"#
    );
    let back: PolyMatrix = serde_json::from_str(&text).unwrap();
    assert_eq!(back, m);
}

#[test]
fn rejects_ragged_json() {
    let bad = r#"{"rows":2,"cols":2,"entries":[[["1"]],[[],["0","1"]]]}"#;
    assert!(serde_json::from_str::<PolyMatrix>(bad).is_err());
}

#[test]
fn latex_of_spin_one_y() {
    let r = build_irrep(HalfInt::from_twice(2), Epsilon::Plus).unwrap();
    let text = latex(r.y());
    assert!(text.starts_with("\\begin{pmatrix}"));
    assert!(text.contains("-\\frac{h^{2}}{2}"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn r_matrix_json_fields() {
    let r = r_matrix(
        HalfInt::from_twice(1),
        Epsilon::Plus,
        HalfInt::from_twice(1),
        Epsilon::Minus,
    )
    .unwrap();
    let v = serde_json::to_value(r.to_json()).unwrap();
    assert_eq!(v["j1"], "1/2");
    assert_eq!(v["eps2"], -1);
    assert_eq!(v["dimension"], 4);
}
