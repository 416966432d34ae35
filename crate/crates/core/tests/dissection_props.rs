use proptest::prelude::*;
use rug::Rational;

use outerplanar::dissections::{self, edge, CisArgs, Evaluator, Faces};
use outerplanar::series::{EdgeSeries, PowerSeries, Series, YPoly};

const N: usize = 10;
/// Extra orders handed to the closed forms, which cancel denominators.
const SLACK: usize = 10;

/// A polynomial `f` with `f(0) = 0` and `f'(0) != 0`, at the given order.
fn poly(order: usize, c: &[i64]) -> PowerSeries {
    let mut v = vec![0i64];
    v.extend_from_slice(c);
    PowerSeries::from_ints(order, &v)
}

fn argument() -> impl Strategy<Value = Vec<i64>> {
    (1i64..=3, prop::collection::vec(-2i64..=3, 3)).prop_map(|(a, rest)| {
        let mut v = vec![a];
        v.extend(rest);
        v
    })
}

fn free_form(f: &PowerSeries, which: usize) -> PowerSeries {
    let fam = |d: usize| (d <= f.order()).then(|| f.substitute_power(d));
    let ev = Evaluator::new(f.clone(), f.substitute_power(2), Rational::from(1), Faces::All, &fam).unwrap();
    match which {
        0 => ev.oed_oriented(),
        1 => ev.inner_edge().unwrap(),
        2 => ev.symmetry_edge().unwrap(),
        3 => ev.face().unwrap(),
        4 => ev.face_symmetry().unwrap(),
        5 => ev.dissection().unwrap(),
        _ => ev.vertex_rooted().unwrap(),
    }
}

fn closed_form(args: &CisArgs<'_, Rational>, which: usize) -> PowerSeries {
    match which {
        0 => dissections::oed_oriented(args),
        1 => dissections::inner_edge(args),
        2 => dissections::symmetry_edge(args),
        3 => dissections::face(args),
        4 => dissections::face_symmetry(args),
        5 => dissections::dissection_cis(args),
        _ => dissections::vertex_rooted_cis(args.s1(), args.s2()),
    }
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closed_and_division_free_forms_agree(c in argument(), which in 0usize..7) {
        let wide = poly(N + SLACK, &c);
        let args = CisArgs::powers_of(&wide);
        let closed = closed_form(&args, which);
        prop_assert!(closed.order() >= N);
        prop_assert_eq!(closed.truncate(N), free_form(&poly(N, &c), which));
    }

    #[test]
    fn assembly_agrees_with_closed_form(c in argument()) {
        let args = CisArgs::powers_of(&poly(N + SLACK, &c));
        let assembled = dissections::assemble_dissection_via_dissimilarity(&args).unwrap();
        let closed = dissections::dissection_cis(&args).unwrap();
        let n = assembled.order().min(closed.order());
        prop_assert!(n >= N);
        prop_assert_eq!(assembled.truncate(n), closed.truncate(n));
    }

    #[test]
    fn edge_marking_commutes_with_y_at_one(c in argument()) {
        let f = poly(N, &c);
        let eargs = CisArgs::<YPoly>::powers_of(&f.to_edge());
        let marked: EdgeSeries = edge::dissection_cis(&eargs).unwrap();
        let vmarked: EdgeSeries = edge::vertex_rooted_cis(&eargs).unwrap();
        prop_assert_eq!(marked.eval_y1(), free_form(&f, 5));
        prop_assert_eq!(vmarked.eval_y1(), free_form(&f, 6));
    }

    #[test]
    fn vertex_rooting_is_the_s1_derivative(c in argument()) {
        // Z(V) = s1 dZ(D)/ds1: mark s1 by (1 + t) and read the coefficient of t.
        let base = poly(N, &c);
        let one_plus_t = YPoly::new(vec![Rational::from(1), Rational::from(1)]);
        let s1 = base.to_edge().scale_by(&one_plus_t);
        let s2 = base.substitute_power(2).to_edge();
        let fam = |d: usize| (d <= N).then(|| base.substitute_power(d).to_edge());
        let ev = Evaluator::new(s1, s2, YPoly::constant(Rational::from(1)), Faces::All, &fam).unwrap();
        let d = ev.dissection().unwrap();
        let linear: PowerSeries = Series::from_coeffs(d.coeffs().iter().map(|p| p.coeff(1)).collect());
        prop_assert_eq!(linear, free_form(&base, 6));
    }
}

#[test]
fn counting_values() {
    let args = CisArgs::counting(9 + SLACK);
    let d = dissections::dissection_cis(&args).unwrap().truncate(9);
    assert_eq!(d, PowerSeries::from_ints(9, &[0, 0, 1, 1, 2, 3, 9, 20, 75, 262]));
    let v = dissections::vertex_rooted_cis(args.s1(), args.s2()).unwrap().truncate(4);
    assert_eq!(v, PowerSeries::from_ints(4, &[0, 0, 1, 1, 3]));
}

#[test]
fn zero_arguments_give_zero() {
    let args = CisArgs::<Rational>::zero(6);
    assert!(dissections::oed_oriented(&args).unwrap().is_zero());
}

#[test]
fn edge_counts_by_size() {
    // Triangle: 3 edges. Quadrilateral: 4 edges, or 5 with its chord.
    let d: EdgeSeries = edge::dissection_cis(&CisArgs::powers_of(&EdgeSeries::x(6))).unwrap();
    assert_eq!(d.coeff(2), YPoly::y());
    assert_eq!(d.coeff(3), YPoly::monomial(3, Rational::from(1)));
    let q = YPoly::new(vec![0, 0, 0, 0, 1, 1].into_iter().map(Rational::from).collect());
    assert_eq!(d.coeff(4), q);
}
