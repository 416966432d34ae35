use rug::Rational;

use super::*;
use crate::series::{EdgeSeries, YPoly};

fn ints(s: &PowerSeries) -> Vec<i64> {
    s.coeffs().iter().map(|c| c.to_f64() as i64).collect()
}

fn counting_eval<R>(order: usize, f: impl Fn(&Evaluator<'_, PowerSeries>) -> Result<R>) -> R {
    let args = CisArgs::<Rational>::counting(order);
    let fam = family_fn(&args);
    let ev = args.evaluator(Rational::from(1), Faces::All, &fam).unwrap();
    f(&ev).unwrap()
}

#[test]
fn oriented_outer_edge_counts() {
    let e = oed_oriented(&CisArgs::counting(6)).unwrap();
    assert_eq!(ints(&e), vec![0, 0, 1, 1, 3, 11, 45]);
    assert!(oed_oriented(&CisArgs::zero(6)).unwrap().is_zero());
}

#[test]
fn dissection_counts() {
    let d = dissection_cis(&CisArgs::counting(13)).unwrap();
    assert_eq!(ints(&d), vec![0, 0, 1, 1, 2, 3, 9, 20, 75, 262]);
    let v = vertex_rooted_cis(&PowerSeries::x(8), &PowerSeries::x(8).substitute_power(2)).unwrap();
    // quadrilateral: 1 orbit; chorded quadrilateral: 2 orbits.
    assert_eq!(&ints(&v)[..5], &[0, 0, 1, 1, 3]);
}

#[test]
fn assembly_matches_closed_form() {
    let a = assemble_dissection_via_dissimilarity(&CisArgs::counting(20)).unwrap();
    let d = dissection_cis(&CisArgs::counting(20)).unwrap();
    let n = a.order().min(d.order());
    assert_eq!(a.truncate(n), d.truncate(n));
}

#[test]
fn division_free_forms_match_closed_forms() {
    let n = 16;
    let args = CisArgs::counting(n + 10);
    let checks: Vec<(PowerSeries, PowerSeries)> = vec![
        (oed_oriented(&args).unwrap(), counting_eval(n, |e| Ok(e.oed_oriented()))),
        (oed_reflective(&args).unwrap().plus, counting_eval(n, |e| Ok(e.oed_reflective()?.0))),
        (oed_reflective(&args).unwrap().minus, counting_eval(n, |e| Ok(e.oed_reflective()?.1))),
        (inner_edge(&args).unwrap(), counting_eval(n, |e| e.inner_edge())),
        (symmetry_edge(&args).unwrap(), counting_eval(n, |e| e.symmetry_edge())),
        (face_oriented(&args).unwrap(), counting_eval(n, |e| e.face_oriented())),
        (face(&args).unwrap(), counting_eval(n, |e| e.face())),
        (face_symmetry(&args).unwrap(), counting_eval(n, |e| e.face_symmetry())),
        (dissection_cis(&args).unwrap(), counting_eval(n, |e| e.dissection())),
        (
            vertex_rooted_cis(args.s1(), args.s2()).unwrap(),
            counting_eval(n, |e| e.vertex_rooted()),
        ),
    ];
    for (i, (closed, free)) in checks.iter().enumerate() {
        assert_eq!(closed.truncate(n), free.truncate(n), "formula #{i}");
    }
}

#[test]
fn edge_marked_at_y1_matches_plain() {
    let n = 12;
    let eargs = CisArgs::<YPoly>::counting(n);
    let d: EdgeSeries = edge::dissection_cis(&eargs).unwrap();
    let plain = dissection_cis(&CisArgs::counting(n + 4)).unwrap().truncate(n);
    assert_eq!(d.eval_y1(), plain);
    assert!(d.within_y_cap());
    for k in 3..=n {
        let p = d.coeff(k);
        let lo = p.low_degree().unwrap();
        let hi = p.degree().unwrap();
        assert!(lo >= k - 1 && hi <= 2 * k - 3, "support at x^{k}: {lo}..{hi}");
    }
}

#[test]
fn rooting_identity_holds() {
    // With s1 -> s1 (1 + t) the coefficient of t in Z(D) is s1 dZ(D)/ds1 = Z(V).
    let n = 14;
    let x = PowerSeries::x(n);
    let base = x.checked_add(&x.substitute_power(3).scale_ratio(2, 1)).unwrap();
    let one_plus_t = YPoly::new(vec![Rational::from(1), Rational::from(1)]);
    let s1 = base.to_edge().scale_by(&one_plus_t);
    let s2 = base.substitute_power(2).to_edge();
    let fam = |d: usize| (d <= n).then(|| base.substitute_power(d).to_edge());
    let ev = Evaluator::new(s1, s2, YPoly::one(), Faces::All, &fam).unwrap();
    let d = ev.dissection().unwrap();
    let linear: PowerSeries =
        Series::from_coeffs(d.coeffs().iter().map(|p| p.coeff(1)).collect());
    // base is a polynomial, so it extends exactly to a higher order.
    let wide = PowerSeries::from_slice(n + 8, base.coeffs());
    let v = vertex_rooted_cis(&wide, &wide.substitute_power(2)).unwrap();
    assert_eq!(linear.truncate(n), v.truncate(n));
}
