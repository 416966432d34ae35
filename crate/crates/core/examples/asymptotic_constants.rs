//! Singular expansions at `ρ` and the constants of
//! `a_n ~ const n^(-5/2) ρ^(-n)`, compared with the exact counts at n = 30.

use outerplanar::asymptotics::{asymptotic_constants, SingularData};
use outerplanar::composition::CensusTables;

fn main() -> outerplanar::Result<()> {
    let sd = SingularData::compute(25, 50)?;
    println!("Ĉ1 = {:.7}  Ĉ2 = {:.7}  Ĉ3 = {:.7}", sd.chat.chat1.to_f64(), sd.chat.chat2.to_f64(), sd.chat.chat3.to_f64());
    println!("C(ρ) = {:.7}  C1 = {:.1e}  C2 = {:.7}  C3 = {:.7}", sd.cg.c_at_rho.to_f64(), sd.cg.c1.to_f64(), sd.cg.c2.to_f64(), sd.cg.c3.to_f64());
    println!("G(ρ) = {:.7}  G2 = {:.7}  G3 = {:.7}", sd.cg.g_at_rho.to_f64(), sd.cg.g2.to_f64(), sd.cg.g3.to_f64());
    let ac = asymptotic_constants(&sd);
    println!("d = {:.8}  δ^-1 = {:.6}", ac.d.to_f64(), ac.delta_inv.to_f64());
    println!("c = {:.8}  g = {:.8}  ρ^-1 = {:.6}", ac.c.to_f64(), ac.g.to_f64(), ac.rho_inv.to_f64());

    let n = 30;
    let t = CensusTables::compute(n, false)?;
    let rho = sd.rho.to_f64();
    let scale = (n as f64).powf(-2.5) * rho.powi(-(n as i32));
    println!("c_30 / estimate = {:.4}", t.c.coeff(n).to_f64() / (ac.c.to_f64() * scale));
    println!("g_30 / estimate = {:.4}", t.g.coeff(n).to_f64() / (ac.g.to_f64() * scale));
    Ok(())
}
