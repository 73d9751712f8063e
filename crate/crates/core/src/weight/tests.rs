use super::*;
use crate::arith::{half, int, rat, Rational};
use crate::lie::{AlgebraSpec, BasisElement, Element, Shift};

fn l(n: i64) -> BasisElement {
    BasisElement::l(int(n))
}

fn y(p: Rational) -> BasisElement {
    BasisElement::y(p)
}

fn aab(a: Rational, b: Rational) -> ModuleSpec {
    make_module(ModuleKind::Aab, ModuleParams::ab(a, b), AlgebraSpec::vir()).unwrap()
}

fn aabc(a: Rational, b: Rational, c: Rational, rho: i64) -> ModuleSpec {
    let host = AlgebraSpec::w(int(rho), Shift::Zero).unwrap();
    make_module(ModuleKind::Aabc, ModuleParams::abc(a, b, c), host).unwrap()
}

#[test]
fn action_examples() {
    let m = aab(half(), int(0));
    assert_eq!(
        m.act_basis(&l(1), &int(0)).unwrap(),
        WeightVector::term(half(), int(1))
    );

    let ba = make_module(ModuleKind::Ba, ModuleParams::a(int(3)), AlgebraSpec::vir()).unwrap();
    assert_eq!(
        ba.act_basis(&l(2), &int(-2)).unwrap(),
        WeightVector::term(int(-10), int(0))
    );

    let m = aabc(int(0), int(0), int(1), 0);
    assert_eq!(
        m.act_basis(&y(int(5)), &int(2)).unwrap(),
        WeightVector::basis(int(7))
    );

    let m = aab(int(0), int(1));
    assert_eq!(
        m.act_basis(&l(2), &int(1)).unwrap(),
        WeightVector::term(int(3), int(3))
    );

    let host = AlgebraSpec::w(int(0), Shift::Half).unwrap();
    let m = make_module(
        ModuleKind::Aabc1c2,
        ModuleParams::abc1c2(int(0), int(0), int(2), int(3)),
        host,
    )
    .unwrap();
    assert_eq!(
        m.act_basis(&y(half()), &int(0)).unwrap(),
        WeightVector::term(int(2), half())
    );
    assert_eq!(
        m.act_basis(&y(half()), &half()).unwrap(),
        WeightVector::term(int(3), int(1))
    );

    let m = aabc(int(0), int(0), int(0), 0);
    assert!(m.act_basis(&y(int(3)), &int(5)).unwrap().is_zero());
}

#[test]
fn bilinear_action() {
    let m = aab(rat(1, 3), int(2));
    let x = Element::term(int(2), l(1)).add(&Element::term(int(-1), l(-2)));
    let v = WeightVector::term(int(3), int(0)).add(&WeightVector::basis(int(4)));
    let expected = m
        .act_basis(&l(1), &int(0))
        .unwrap()
        .scale(&int(6))
        .add(&m.act_basis(&l(1), &int(4)).unwrap().scale(&int(2)))
        .add(&m.act_basis(&l(-2), &int(0)).unwrap().scale(&int(-3)))
        .add(&m.act_basis(&l(-2), &int(4)).unwrap().scale(&int(-1)));
    assert_eq!(m.act(&x, &v).unwrap(), expected);
}

#[test]
fn rejects_bad_inputs() {
    let w0 = AlgebraSpec::w(int(0), Shift::Zero).unwrap();
    assert!(matches!(
        make_module(
            ModuleKind::Aab,
            ModuleParams::ab(int(0), int(0)),
            w0.clone()
        ),
        Err(ModuleError::HostMismatch { .. })
    ));
    assert!(matches!(
        make_module(
            ModuleKind::Aabc1c2,
            ModuleParams::abc1c2(int(0), int(0), int(1), int(1)),
            w0
        ),
        Err(ModuleError::HostMismatch { .. })
    ));
    assert!(make_module(
        ModuleKind::Aa,
        ModuleParams::ab(int(0), int(1)),
        AlgebraSpec::vir()
    )
    .is_err());
    assert!(make_module(ModuleKind::Aab, ModuleParams::a(int(0)), AlgebraSpec::vir()).is_err());

    let m = aab(half(), int(0));
    assert!(matches!(
        m.act_basis(&l(1), &half()),
        Err(ModuleError::Lattice(_))
    ));
    assert!(matches!(
        m.act_basis(&y(int(1)), &int(0)),
        Err(ModuleError::Algebra(_))
    ));
}

#[test]
fn integer_weight_is_normalized() {
    assert_eq!(*aab(int(3), int(2)).a(), int(0));
    assert_eq!(*aab(rat(7, 2), int(2)).a(), rat(7, 2));
    let ba = make_module(ModuleKind::Ba, ModuleParams::a(int(3)), AlgebraSpec::vir()).unwrap();
    assert_eq!(*ba.a(), int(3));
}

#[test]
fn module_axiom_examples() {
    assert!(check_module_axiom(&aabc(rat(1, 3), int(2), int(5), 0), 5)
        .unwrap()
        .passed());
    assert!(check_module_axiom(&aab(rat(-2, 3), rat(5, 4)), 5)
        .unwrap()
        .passed());
    for kind in [ModuleKind::Aa, ModuleKind::Ba] {
        let m = make_module(kind, ModuleParams::a(rat(2, 7)), AlgebraSpec::vir()).unwrap();
        assert!(check_module_axiom(&m, 5).unwrap().passed(), "{kind}");
    }

    let m = aabc(rat(1, 3), int(2), int(5), 1);
    let violations = module_axiom_violations(&m, 3).unwrap();
    assert!(!violations.is_empty());
    for v in &violations {
        assert_eq!(v.x.family, crate::lie::Family::L);
        let target = &v.x.degree + &v.y.degree + &v.v;
        assert_eq!(
            v.residual,
            WeightVector::term(int(-5) * &v.x.degree, target)
        );
    }
}

#[test]
fn aabc1c2_is_a_module_only_for_matching_b() {
    let host = AlgebraSpec::w(int(0), Shift::Half).unwrap();
    let params = ModuleParams::abc1c2(rat(1, 5), rat(2, 3), int(2), int(-3));
    let m = make_module(ModuleKind::Aabc1c2, params.clone(), host.clone()).unwrap();
    assert!(check_module_axiom(&m, 3).unwrap().passed());
    let skew = make_module(ModuleKind::Aabc1c2, params.with_bp(int(1)), host).unwrap();
    assert!(!check_module_axiom(&skew, 3).unwrap().passed());
}

#[test]
fn cyclicity_examples() {
    let r = check_window_cyclic(&aab(half(), int(0)), 6).unwrap();
    assert!(r.all_full());
    assert_eq!(r.generators.len(), 7);

    let r = check_window_cyclic(&aab(int(0), int(0)), 6).unwrap();
    let g0 = r.generator(&int(0)).unwrap();
    assert!(!g0.full);
    assert_eq!(g0.reached, vec!["v_0".to_string()]);
    for i in [-3, -2, -1, 1, 2, 3] {
        assert!(r.generator(&int(i)).unwrap().full, "v_{i}");
    }
    assert_eq!(r.to_check_report().violations().len(), 1);

    let ba = make_module(ModuleKind::Ba, ModuleParams::a(int(1)), AlgebraSpec::vir()).unwrap();
    let r = check_window_cyclic(&ba, 6).unwrap();
    assert_eq!(
        r.generator(&int(0)).unwrap().reached,
        vec!["v_0".to_string()]
    );

    assert!(matches!(
        check_window_cyclic(&ba, 1),
        Err(ModuleError::WindowTooSmall { .. })
    ));
}

#[test]
fn simplicity_examples() {
    assert!(simplicity_criterion(&aab(half(), int(0))).unwrap());
    assert!(!simplicity_criterion(&aab(int(0), int(1))).unwrap());
    assert!(!simplicity_criterion(&aabc(int(0), int(1), int(0), 0)).unwrap());
    assert!(simplicity_criterion(&aabc(int(0), int(1), int(2), 0)).unwrap());
    let host = AlgebraSpec::w(int(0), Shift::Half).unwrap();
    let m = make_module(
        ModuleKind::Aabc1c2,
        ModuleParams::abc1c2(int(0), int(0), int(0), int(3)),
        host,
    )
    .unwrap();
    assert!(!simplicity_criterion(&m).unwrap());
    let ba = make_module(ModuleKind::Ba, ModuleParams::a(int(1)), AlgebraSpec::vir()).unwrap();
    assert!(matches!(
        simplicity_criterion(&ba),
        Err(ModuleError::NoCriterion(_))
    ));
}
