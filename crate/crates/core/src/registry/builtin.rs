use super::{
    ArgumentMapId, Expected, GammaRatio, Hyp2F1Term, Identity, IdentityCase, PrefactorAtom,
    PrefactorBase, Provenance, RationalParams, Symbol,
};
use crate::series::{int, rat, Rational};

use ArgumentMapId as Arg;
use PrefactorBase as Base;

fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn pre(base: Base, exponent: Rational) -> PrefactorAtom {
    PrefactorAtom::new(base, exponent).expect("builtin prefactor is valid")
}

fn x1() -> PrefactorAtom {
    pre(Base::X, int(1))
}

fn params(a: Rational, b: Rational, c: Rational) -> RationalParams {
    RationalParams::new(a, b, c)
}

fn term(
    symbol: Symbol,
    multiplier: i64,
    prefactors: Vec<PrefactorAtom>,
    params: RationalParams,
    arg: ArgumentMapId,
) -> Hyp2F1Term {
    Hyp2F1Term {
        symbol,
        multiplier: int(multiplier),
        gamma_factor: None,
        prefactors,
        params,
        arg,
    }
}

fn single(lhs: Vec<Hyp2F1Term>, rhs: Vec<Hyp2F1Term>) -> Vec<IdentityCase> {
    vec![IdentityCase {
        label: String::new(),
        lhs,
        rhs,
    }]
}

fn entry(
    id: &str,
    title: &str,
    provenance: Provenance,
    expected: Expected,
    cases: Vec<IdentityCase>,
    exact_route: Option<&str>,
) -> Identity {
    Identity {
        id: id.to_string(),
        title: title.to_string(),
        provenance,
        expected,
        cases,
        exact_route: exact_route.map(str::to_string),
    }
}

/// `2F1(1/2, 1/2; 1; 1/2 + x/(1+x^2))`
fn elliptic_centered() -> Hyp2F1Term {
    term(
        Symbol::One,
        1,
        vec![],
        params(r(1, 2), r(1, 2), int(1)),
        Arg::HalfCentered,
    )
}

fn sqrt_one_minus_x2() -> PrefactorAtom {
    pre(Base::OneMinusXSquared, r(1, 2))
}

fn sqrt_one_plus_x2() -> PrefactorAtom {
    pre(Base::OnePlusXSquared, r(1, 2))
}

fn rhs1() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![sqrt_one_plus_x2()],
            params(r(1, 4), r(1, 2), r(3, 4)),
            Arg::Fourth,
        ),
        term(
            Symbol::Eta,
            1,
            vec![x1(), sqrt_one_plus_x2()],
            params(r(3, 4), r(1, 2), r(5, 4)),
            Arg::Fourth,
        ),
    ]
}

fn rhs2() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![],
            params(r(1, 2), r(1, 2), r(3, 4)),
            Arg::FourthOverFourthMinusOne,
        ),
        term(
            Symbol::Eta,
            2,
            vec![x1()],
            params(r(1, 2), r(1, 2), r(5, 4)),
            Arg::FourthOverFourthMinusOne,
        ),
    ]
}

fn rhs3() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![sqrt_one_plus_x2()],
            params(r(1, 4), r(1, 2), r(3, 4)),
            Arg::Fourth,
        ),
        term(
            Symbol::Eta,
            1,
            vec![x1(), pre(Base::OnePlusXSquared, r(3, 2))],
            params(r(3, 4), r(1, 2), r(5, 4)),
            Arg::Fourth,
        ),
    ]
}

fn rhs4() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![],
            params(r(1, 2), r(1, 2), r(3, 4)),
            Arg::FourthOverFourthMinusOne,
        ),
        term(
            Symbol::Eta,
            1,
            vec![x1(), pre(Base::OnePlusXSquared, int(1))],
            params(r(1, 2), r(1, 2), r(5, 4)),
            Arg::FourthOverFourthMinusOne,
        ),
    ]
}

fn rhs5() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![sqrt_one_plus_x2()],
            params(r(1, 2), r(1, 4), r(3, 4)),
            Arg::Fourth,
        ),
        term(
            Symbol::Eta,
            2,
            vec![x1(), sqrt_one_plus_x2()],
            params(r(3, 4), r(1, 2), r(5, 4)),
            Arg::Fourth,
        ),
    ]
}

fn rhs12() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![],
            params(r(1, 4), r(1, 4), r(1, 2)),
            Arg::KummerQuadraticSquared,
        ),
        term(
            Symbol::Eta,
            2,
            vec![x1(), pre(Base::OnePlusXSquared, int(-1))],
            params(r(3, 4), r(3, 4), r(3, 2)),
            Arg::KummerQuadraticSquared,
        ),
    ]
}

fn rhs13() -> Vec<Hyp2F1Term> {
    vec![
        term(
            Symbol::Mu,
            1,
            vec![sqrt_one_plus_x2()],
            params(r(1, 4), r(1, 2), r(3, 4)),
            Arg::Fourth,
        ),
        term(
            Symbol::Eta,
            2,
            vec![x1(), sqrt_one_plus_x2()],
            params(r(3, 4), r(1, 2), r(5, 4)),
            Arg::Fourth,
        ),
    ]
}

fn kummer_case(a: Rational, b: Rational) -> IdentityCase {
    let one = int(1);
    let half = r(1, 2);
    let c = (&a + &b + &one) * &half;
    let a_half = &a * &half;
    let b_half = &b * &half;
    let a_up = (&a + &one) * &half;
    let b_up = (&b + &one) * &half;
    let label = format!("a={a},b={b}");
    IdentityCase {
        label,
        lhs: vec![term(
            Symbol::One,
            1,
            vec![],
            params(a.clone(), b.clone(), c.clone()),
            Arg::HalfShift,
        )],
        rhs: vec![
            Hyp2F1Term {
                gamma_factor: Some(GammaRatio {
                    numer: vec![half.clone(), c.clone()],
                    denom: vec![a_up.clone(), b_up.clone()],
                }),
                ..term(
                    Symbol::One,
                    1,
                    vec![],
                    params(a_half.clone(), b_half.clone(), half.clone()),
                    Arg::Square,
                )
            },
            Hyp2F1Term {
                gamma_factor: Some(GammaRatio {
                    numer: vec![half.clone(), c],
                    denom: vec![a_half, b_half],
                }),
                ..term(
                    Symbol::One,
                    2,
                    vec![x1()],
                    params(a_up, b_up, r(3, 2)),
                    Arg::Square,
                )
            },
        ],
    }
}

fn quadratic_case(rr: Rational, m: Rational) -> IdentityCase {
    let half = r(1, 2);
    let two = int(2);
    IdentityCase {
        label: format!("r={rr},m={m}"),
        lhs: vec![term(
            Symbol::One,
            1,
            vec![],
            params(rr.clone(), m.clone(), &m * &two),
            Arg::KummerQuadratic,
        )],
        rhs: vec![term(
            Symbol::One,
            1,
            vec![pre(Base::OnePlusX, &rr * &two)],
            params(rr.clone(), &rr - &m + &half, &m + &half),
            Arg::Square,
        )],
    }
}

fn pfaff_case(a: Rational, b: Rational, c: Rational) -> IdentityCase {
    IdentityCase {
        label: format!("a={a},b={b},c={c}"),
        lhs: vec![term(
            Symbol::One,
            1,
            vec![],
            params(a.clone(), b.clone(), c.clone()),
            Arg::Identity,
        )],
        rhs: vec![term(
            Symbol::One,
            1,
            vec![pre(Base::OneMinusX, -a.clone())],
            params(a, &c - &b, c),
            Arg::PfaffImage,
        )],
    }
}

fn with_prefactor(terms: Vec<Hyp2F1Term>, atom: PrefactorAtom) -> Vec<Hyp2F1Term> {
    terms
        .into_iter()
        .map(|mut t| {
            t.prefactors.insert(0, atom.clone());
            t
        })
        .collect()
}

pub(crate) fn builtin_identities() -> Vec<Identity> {
    use Expected::{Fails, Holds};
    use Provenance::*;

    vec![
        entry(
            "EQ1",
            "first claimed form with x^4 arguments",
            Ramanujan,
            Fails,
            single(vec![elliptic_centered()], rhs1()),
            Some("D1"),
        ),
        entry(
            "EQ2",
            "second claimed form with x^4/(x^4-1) arguments",
            Ramanujan,
            Holds,
            single(
                vec![Hyp2F1Term {
                    prefactors: vec![sqrt_one_minus_x2()],
                    ..elliptic_centered()
                }],
                rhs2(),
            ),
            Some("EQV_13_2"),
        ),
        entry(
            "EQ3",
            "Entry 34(ii) form with (1+x^2)^(3/2)",
            Berndt,
            Fails,
            single(vec![elliptic_centered()], rhs3()),
            Some("D3"),
        ),
        entry(
            "EQ4",
            "Example (ii) form with eta x (1+x^2)",
            Berndt,
            Fails,
            single(
                vec![Hyp2F1Term {
                    prefactors: vec![sqrt_one_minus_x2()],
                    ..elliptic_centered()
                }],
                rhs4(),
            ),
            Some("D4"),
        ),
        entry(
            "EQ5",
            "corrected form of the first identity",
            Corrected,
            Holds,
            single(vec![elliptic_centered()], rhs5()),
            Some("EQV_12_13"),
        ),
        entry(
            "EQ6",
            "Kummer's formula at argument (1+x)/2",
            Kummer,
            Holds,
            vec![
                kummer_case(r(1, 2), r(1, 2)),
                kummer_case(r(1, 3), r(1, 5)),
                kummer_case(r(3, 4), r(1, 4)),
            ],
            None,
        ),
        entry(
            "EQ7",
            "Kummer's formula at a = b = 1/2",
            Ramanujan,
            Holds,
            single(
                vec![term(
                    Symbol::One,
                    1,
                    vec![],
                    params(r(1, 2), r(1, 2), int(1)),
                    Arg::HalfShift,
                )],
                vec![
                    term(
                        Symbol::Mu,
                        1,
                        vec![],
                        params(r(1, 4), r(1, 4), r(1, 2)),
                        Arg::Square,
                    ),
                    term(
                        Symbol::Eta,
                        1,
                        vec![x1()],
                        params(r(3, 4), r(3, 4), r(3, 2)),
                        Arg::Square,
                    ),
                ],
            ),
            None,
        ),
        entry(
            "EQ8",
            "Kummer quadratic transformation at 4x/(1+x)^2",
            Kummer,
            Holds,
            vec![
                quadratic_case(r(1, 4), r(1, 4)),
                quadratic_case(r(3, 4), r(3, 4)),
                quadratic_case(r(1, 3), r(2, 5)),
            ],
            None,
        ),
        entry(
            "EQ9",
            "quadratic transformation at r = m = 1/4, x -> x^2",
            Kummer,
            Holds,
            single(
                vec![term(
                    Symbol::One,
                    1,
                    vec![],
                    params(r(1, 4), r(1, 4), r(1, 2)),
                    Arg::KummerQuadraticSquared,
                )],
                vec![term(
                    Symbol::One,
                    1,
                    vec![sqrt_one_plus_x2()],
                    params(r(1, 4), r(1, 2), r(3, 4)),
                    Arg::Fourth,
                )],
            ),
            None,
        ),
        entry(
            "EQ10",
            "quadratic transformation at r = m = 3/4, x -> x^2",
            Kummer,
            Holds,
            single(
                vec![term(
                    Symbol::One,
                    1,
                    vec![],
                    params(r(3, 4), r(3, 4), r(3, 2)),
                    Arg::KummerQuadraticSquared,
                )],
                vec![term(
                    Symbol::One,
                    1,
                    vec![pre(Base::OnePlusXSquared, r(3, 2))],
                    params(r(3, 4), r(1, 2), r(5, 4)),
                    Arg::Fourth,
                )],
            ),
            None,
        ),
        entry(
            "EQ11",
            "Euler's first (Pfaff) transformation",
            Euler,
            Holds,
            vec![
                pfaff_case(r(1, 2), r(1, 4), r(3, 4)),
                pfaff_case(r(1, 2), r(1, 2), r(5, 4)),
                pfaff_case(r(1, 3), r(2, 3), r(7, 5)),
            ],
            None,
        ),
        entry(
            "EQ12",
            "Kummer a = b = 1/2 after x -> 2x/(1+x^2)",
            Corrected,
            Holds,
            single(vec![elliptic_centered()], rhs12()),
            None,
        ),
        entry(
            "EQ13",
            "corrected identity as obtained from EQ12",
            Corrected,
            Holds,
            single(vec![elliptic_centered()], rhs13()),
            Some("EQV_12_13"),
        ),
        entry(
            "EQV_12_13",
            "RHS(12) = RHS(13)",
            Corrected,
            Holds,
            single(rhs12(), rhs13()),
            None,
        ),
        entry(
            "EQV_13_2",
            "sqrt(1-x^2) RHS(13) = RHS(2)",
            Corrected,
            Holds,
            single(with_prefactor(rhs13(), sqrt_one_minus_x2()), rhs2()),
            None,
        ),
        entry(
            "D1",
            "RHS(5) - RHS(1)",
            Corrected,
            Fails,
            single(rhs5(), rhs1()),
            None,
        ),
        entry(
            "D3",
            "RHS(3) - RHS(5)",
            Corrected,
            Fails,
            single(rhs3(), rhs5()),
            None,
        ),
        entry(
            "D4",
            "RHS(4) - RHS(2)",
            Corrected,
            Fails,
            single(rhs4(), rhs2()),
            None,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Registry;

    #[test]
    fn cardinality_and_ids() {
        let reg = Registry::builtin();
        let ids: Vec<_> = reg.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "EQ1", "EQ2", "EQ3", "EQ4", "EQ5", "EQ6", "EQ7", "EQ8", "EQ9", "EQ10", "EQ11",
                "EQ12", "EQ13", "EQV_12_13", "EQV_13_2", "D1", "D3", "D4"
            ]
        );
        reg.check_consistency().unwrap();
    }

    #[test]
    fn expected_outcomes() {
        let reg = Registry::builtin();
        for ident in reg.iter() {
            let fails = matches!(ident.id.as_str(), "EQ1" | "EQ3" | "EQ4" | "D1" | "D3" | "D4");
            let want = if fails { Expected::Fails } else { Expected::Holds };
            assert_eq!(ident.expected, want, "{}", ident.id);
        }
    }

    #[test]
    fn exact_capability_tracks_half_centered_maps() {
        let reg = Registry::builtin();
        for ident in reg.iter() {
            let centered = ident
                .cases
                .iter()
                .flat_map(|c| c.lhs.iter().chain(&c.rhs))
                .any(|t| t.arg.is_half_centered());
            assert_eq!(ident.exact_capable(), !centered, "{}", ident.id);
        }
    }

    #[test]
    fn eq2_rhs_terms() {
        let reg = Registry::builtin();
        let rhs = &reg.get("EQ2").unwrap().cases[0].rhs;
        assert_eq!(rhs.len(), 2);
        assert_eq!(rhs[0].symbol, Symbol::Mu);
        assert_eq!(rhs[0].multiplier, int(1));
        assert!(rhs[0].prefactors.is_empty());
        assert_eq!(rhs[0].params, params(r(1, 2), r(1, 2), r(3, 4)));
        assert_eq!(rhs[0].arg, Arg::FourthOverFourthMinusOne);
        assert_eq!(rhs[1].symbol, Symbol::Eta);
        assert_eq!(rhs[1].multiplier, int(2));
        assert_eq!(rhs[1].prefactors, vec![x1()]);
        assert_eq!(rhs[1].params, params(r(1, 2), r(1, 2), r(5, 4)));
    }

    #[test]
    fn eq3_and_eq5_eta_terms() {
        let reg = Registry::builtin();
        let eta3 = &reg.get("EQ3").unwrap().cases[0].rhs[1];
        assert_eq!(eta3.multiplier, int(1));
        assert_eq!(eta3.prefactors, vec![x1(), pre(Base::OnePlusXSquared, r(3, 2))]);
        let eta5 = &reg.get("EQ5").unwrap().cases[0].rhs[1];
        assert_eq!(eta5.multiplier, int(2));
        assert_eq!(eta5.prefactors, vec![x1(), sqrt_one_plus_x2()]);
    }

    #[test]
    fn eq5_and_eq13_match_only_up_to_parameter_order() {
        let reg = Registry::builtin();
        let eq5 = &reg.get("EQ5").unwrap().cases[0];
        let eq13 = &reg.get("EQ13").unwrap().cases[0];
        assert_ne!(eq5.rhs, eq13.rhs);
        let canon = |v: &[Hyp2F1Term]| v.iter().map(Hyp2F1Term::canonical).collect::<Vec<_>>();
        assert_eq!(canon(&eq5.rhs), canon(&eq13.rhs));
    }

    #[test]
    fn parameterized_entries_carry_pinned_sets() {
        let reg = Registry::builtin();
        assert_eq!(reg.get("EQ6").unwrap().cases.len(), 3);
        assert_eq!(reg.get("EQ8").unwrap().cases.len(), 3);
        let eq11: Vec<_> = reg.get("EQ11").unwrap().cases.iter().map(|c| c.label.clone()).collect();
        assert_eq!(eq11, ["a=1/2,b=1/4,c=3/4", "a=1/2,b=1/2,c=5/4", "a=1/3,b=2/3,c=7/5"]);
    }
}
