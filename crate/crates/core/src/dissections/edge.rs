//! Edge-marked cycle index sums: coefficients are polynomials in `y`,
//! which marks edges. Substituting `y = 1` recovers the plain sums.

use super::{family_fn, CisArgs, Faces, Reflective};
use crate::error::Result;
use crate::series::{EdgeSeries, YPoly};

type Args<'a> = CisArgs<'a, YPoly>;

fn with_eval<T>(
    args: &Args,
    f: impl FnOnce(&super::Evaluator<'_, EdgeSeries>) -> Result<T>,
) -> Result<T> {
    let fam = family_fn(args);
    let ev = args.evaluator(YPoly::y(), Faces::All, &fam)?;
    f(&ev)
}

pub fn oed_oriented(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| Ok(e.oed_oriented()))
}

pub fn oed_reflective(args: &Args) -> Result<Reflective<EdgeSeries>> {
    with_eval(args, |e| {
        let (plus, minus, total) = e.oed_reflective()?;
        Ok(Reflective { plus, minus, total })
    })
}

pub fn inner_edge(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.inner_edge())
}

pub fn symmetry_edge(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.symmetry_edge())
}

pub fn face_oriented(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.face_oriented())
}

pub fn face(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.face())
}

pub fn face_symmetry(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.face_symmetry())
}

/// Unrooted dissections by vertices and edges.
pub fn dissection_cis(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.dissection())
}

pub fn vertex_rooted_cis(args: &Args) -> Result<EdgeSeries> {
    with_eval(args, |e| e.vertex_rooted())
}
